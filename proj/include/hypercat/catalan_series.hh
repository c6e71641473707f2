#ifndef HYPERCAT_CATALAN_SERIES_HH
#define HYPERCAT_CATALAN_SERIES_HH

#include <stdexcept>
#include <utility>
#include <vector>

#include <hypercat/formal_series.hh>
#include <hypercat/numeric.hh>

namespace hypercat {

  // Partitions of a k-set into unordered blocks of size m:
  // k! / ((m!)^{k/m} (k/m)!), zero unless m divides k.
  inline Int block_partition_count(unsigned m, unsigned k)
  {
    if (m == 0)
      throw std::invalid_argument("m must be >= 1");
    if (k % m != 0)
      return 0;
    unsigned d = k / m;
    Int den = pow_ui(factorial(m), d) * factorial(d);
    Int q;
    mpz_divexact(q.get_mpz_t(), factorial(k).get_mpz_t(), den.get_mpz_t());
    return q;
  }

  // Monomials of total degree g in r commuting variables.
  inline Int homog_dim(unsigned r, unsigned g)
  {
    if (r == 0)
      throw std::invalid_argument("r must be >= 1");
    return binomial(r - 1 + g, r - 1);
  }

  namespace detail {

    // Builders parameterized on the block-count function; the verification
    // battery swaps in a perturbed count to prove the relation check can fail.
    template <typename WFn>
    FormalSeries ell_series_with(WFn&& W, unsigned m, unsigned order)
    {
      FormalSeries s(order);
      for (unsigned d = 0; d <= order; ++d)
        s.at(d) = Rat(W(m, d * m) * homog_dim(m, d * m));
      return s;
    }

    template <typename WFn>
    FormalSeries h_series_with(WFn&& W, unsigned m, unsigned order)
    {
      FormalSeries s(order);
      for (unsigned d = 0; d <= order; ++d)
        s.at(d) = Rat(W(m, d * m));
      return s;
    }

  } // namespace detail

  // ell_m(x) = sum_d W_m(dm)·dim_m(dm)·x^d — the branching weight series.
  inline FormalSeries ell_series(unsigned m, unsigned order)
  {
    return detail::ell_series_with(block_partition_count, m, order);
  }

  // h_m(x) = sum_d W_m(dm)·x^d.
  inline FormalSeries h_series(unsigned m, unsigned order)
  {
    return detail::h_series_with(block_partition_count, m, order);
  }

  // The tree series f_m: the unique solution of f = x·ell_m(f), f(0) = 0.
  inline FormalSeries solve_f(unsigned m, unsigned order)
  {
    return solve_functional(ell_series(m, order), order);
  }

  // F_m(x) = x·h_m(f_m(x)) = sum_{n>=0} C_n^(m)·x^{n+1}.
  inline FormalSeries catalan_gf(unsigned m, unsigned order)
  {
    if (m == 0)
      throw std::invalid_argument("m must be >= 1");
    if (order == 0)
      return FormalSeries(0);
    FormalSeries f = order >= 2 ? solve_f(m, order - 1) : FormalSeries(0);
    FormalSeries g = compose(h_series(m, order - 1), f);
    return shift_up(g, order);
  }

  // C_n^(m) out of the shifted series; integrality is asserted, not assumed.
  inline Int hypercat_coeff(const FormalSeries& F, unsigned n)
  {
    if (n + 1 > F.order())
      throw std::out_of_range("coefficient beyond truncation order");
    return to_integer(F[n + 1], "series coefficient must be integral");
  }

  inline std::vector<Int> hypercatalan_sequence_gf(unsigned m, unsigned n_max)
  {
    FormalSeries F = catalan_gf(m, n_max + 1);
    std::vector<Int> v;
    v.reserve(n_max + 1);
    for (unsigned n = 0; n <= n_max; ++n)
      v.push_back(hypercat_coeff(F, n));
    return v;
  }

  namespace detail {

    template <typename WFn>
    FormalSeries gf_relation_residual_with(WFn&& W, unsigned m, unsigned order)
    {
      FormalSeries ell = ell_series_with(W, m, order);
      FormalSeries f = solve_functional(ell, order);
      FormalSeries g = compose(h_series_with(W, m, order), f);
      FormalSeries F = shift_up(g, order); // x·h_m(f_m), one order's worth of slack is fine here
      return f * f - F + FormalSeries::x(order);
    }

  } // namespace detail

  // Residual of the quadratic relation between the tree and moment series:
  // f_m(x)^2 − x·(sum_n C_n x^n) + x, which must vanish identically.
  inline FormalSeries gf_relation_residual(unsigned m, unsigned order)
  {
    return detail::gf_relation_residual_with(block_partition_count, m, order);
  }

} // namespace hypercat

#endif // HYPERCAT_CATALAN_SERIES_HH
