#ifndef HYPERCAT_ACCELERATION_HH
#define HYPERCAT_ACCELERATION_HH

#include <climits>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include <hypercat/catalan_series.hh>
#include <hypercat/numeric.hh>
#include <hypercat/real.hh>

// Sequence acceleration for extracting the constant term of
//
//   a_n ~ c_0 + c_1/n + c_2/n^2 + ...
//
// The trick: multiply by n^k and apply the forward difference operator k
// times.  Delta^k annihilates every polynomial of degree < k and maps n^k to
// k!, so b_n = Delta^k(n^k a_n)/k! equals c_0 up to tails of degree -k-1 and
// beyond.  In particular the method is *exact* on expansions that terminate
// at 1/n^k.  This turns ~16 correct digits into ~30 at n around 100.
//
// estimate_growth applies this to the hypergraph Catalan numbers under the
// ansatz C_n ~ K A^n (n!)^{m-1} n^rho, one stage per constant.

namespace hypercat {

  // Tail of a real sequence: values[i] is the term of index start_index + i.
  // All entries carry the same precision.
  struct RealSeq {
    std::vector<Real> values;
    unsigned long start_index = 0;
  };

  struct RatSeq {
    std::vector<Rat> values;
    unsigned long start_index = 0;
  };

  namespace detail {

    inline void check_accel_args(std::size_t len, unsigned k)
    {
      if (k % 2 != 0)
        throw std::invalid_argument("accelerate: difference power must be even");
      if (len <= k)
        throw std::invalid_argument("accelerate: sequence too short for requested power");
    }

  } // namespace detail

  // b_n = Delta^k(n^k a_n)/k!, exactly.  The entry reported at index n is the
  // one whose difference window ends at n (hence start_index shifts by k):
  // the tail entry uses the newest data and is the one consumers read.
  inline RatSeq accelerate_exact(const RatSeq& seq, unsigned k)
  {
    detail::check_accel_args(seq.values.size(), k);

    const Rat kfac(factorial(k));
    std::vector<Rat> w(seq.values.size());
    for (std::size_t i = 0; i < w.size(); ++i)
      w[i] = seq.values[i] * Rat(pow_ui(seq.start_index + i, k)) / kfac;

    for (unsigned pass = 0; pass < k; ++pass) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i)
        w[i] = w[i + 1] - w[i];
      w.pop_back();
    }
    return {std::move(w), seq.start_index + k};
  }

  // Floating-point variant.  The differences cancel catastrophically — the
  // intermediates reach n^k a_n / k! while the result is O(c_0) — so we track
  // the peak binary exponent seen anywhere and demand the surviving tail
  // entry clear the roundoff floor 2^(peak - prec) by a comfortable margin.
  inline constexpr long cancellation_guard_bits = 48;

  inline RealSeq accelerate(const RealSeq& seq, unsigned k)
  {
    detail::check_accel_args(seq.values.size(), k);

    const mpfr_prec_t prec = seq.values.front().prec();
    for (const Real& v : seq.values) {
      if (v.prec() != prec)
        throw std::invalid_argument("accelerate: mixed precision in sequence");
      if (!v.finite())
        throw std::invalid_argument("accelerate: non-finite sequence entry");
    }

    const Real kfac = Real::of(factorial(k), prec);
    long peak = LONG_MIN;
    std::vector<Real> w;
    w.reserve(seq.values.size());
    for (std::size_t i = 0; i < seq.values.size(); ++i) {
      w.push_back(seq.values[i] * Real::of(pow_ui(seq.start_index + i, k), prec) / kfac);
      peak = std::max(peak, w.back().exponent());
    }

    for (unsigned pass = 0; pass < k; ++pass) {
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        w[i] = w[i + 1] - w[i];
        peak = std::max(peak, w[i].exponent());
      }
      w.pop_back();
    }

    const Real& tail = w.back();
    if (!tail.finite())
      throw precision_error("accelerate: differences produced a non-finite value");
    if (tail.sign() != 0 && peak - tail.exponent() > static_cast<long>(prec) - cancellation_guard_bits)
      throw precision_error("accelerate: cancellation exceeded working precision");

    return {std::move(w), seq.start_index + k};
  }

  struct GrowthEstimate {
    Real A;
    Real rho;
    Real K;
    unsigned terms_used = 0;
    unsigned accel_power = 0;
  };

  namespace detail {

    // Growth base of C_n^(m)/(n!)^(m-1); the classical m = 1 value is 4.
    inline Rat conjectured_A(unsigned m)
    {
      if (m == 1)
        return Rat(4);
      Rat a(pow_ui(static_cast<unsigned long>(m), m - 1), factorial(m - 1));
      a.canonicalize();
      return a;
    }

    inline Rat conjectured_rho(unsigned m)
    {
      if (m == 1)
        return Rat(-3, 2);
      Rat r(-static_cast<long>(m - 1), 2);
      r.canonicalize();
      return r;
    }

    // The three-case constant: e^{3/2} at m = 2, otherwise a product of
    // binomial(j, 2) over j < m of the opposite parity, divided by
    // m^{(2m-3)/2}, with a leading 2 (odd m) or sqrt(2) (even m).
    inline Real conjectured_K(unsigned m, mpfr_prec_t prec)
    {
      if (m == 1)
        return Real::of(1.0, prec) / Real::pi(prec).sqrt();
      if (m == 2)
        return Real::of(Rat(3, 2), prec).exp();

      Int prod = 1;
      for (unsigned j = (m % 2 == 1) ? 2 : 3; j + 1 <= m; j += 2)
        prod *= binomial(j, 2);
      Real num = Real::of(prod, prec);
      num *= (m % 2 == 1) ? Real::of(2.0, prec) : Real::of(2.0, prec).sqrt();
      const Real den = Real::of(pow_ui(static_cast<unsigned long>(m), 2 * m - 3), prec).sqrt();
      return num / den;
    }

  } // namespace detail

  // Closed forms behind the expected asymptotic
  //
  //   C_n^(m) ~ K_m * A^(n+1) (n!)^(m-1) / (pi n)^((m-1)/2),
  //
  // reported in ansatz coordinates: A, rho = -(m-1)/2, and K = K_m.
  // m = 1 is the classical C_n ~ 4^n / (n^{3/2} sqrt(pi)).
  inline GrowthEstimate conjectured_constants(unsigned m, mpfr_prec_t precision_bits = 512)
  {
    if (m == 0)
      throw std::invalid_argument("conjectured_constants: m must be positive");
    return {Real::of(detail::conjectured_A(m), precision_bits),
            Real::of(detail::conjectured_rho(m), precision_bits),
            detail::conjectured_K(m, precision_bits),
            0, 0};
  }

  // The constant K-hat in C_n^(m) ~ K-hat * A^n (n!)^{m-1} n^rho, i.e. the
  // value the acceleration of C_n^(m) n^{-rho} / (A^n (n!)^{m-1}) converges
  // to.  Differs from conjectured_constants(m).K by the normalization
  // K-hat = K_m * A / pi^{(m-1)/2}; the two agree at m = 1.
  inline Real ansatz_constant(unsigned m, mpfr_prec_t precision_bits = 512)
  {
    const Real K = conjectured_constants(m, precision_bits).K;
    if (m == 1)
      return K;
    Rat half_exp(m - 1, 2);
    half_exp.canonicalize();
    const Real pi_pow = Real::pi(precision_bits).pow(Real::of(half_exp, precision_bits));
    return K * Real::of(detail::conjectured_A(m), precision_bits) / pi_pow;
  }

  // Three-stage estimate of (A, rho, K-hat) from the coefficients
  // C_0 .. C_terms:
  //
  //   1. A    from the ratio sequence of a_n = C_n/(n!)^{m-1}, carried in
  //           exact rationals all the way through the difference operator;
  //   2. rho  from (Delta log a'_n) / (log(n+1) - log n) with
  //           a'_n = a_n / A_c^n, using the *conjectured* A_c;
  //   3. K    from C_n n^{-rho_c} / (A_c^n (n!)^{m-1}), using the
  //           conjectured A_c and rho_c.
  //
  // Each stage reads the tail entry of the accelerated sequence.  Stages 2
  // and 3 run at `precision_bits` and throw precision_error when the
  // cancellation guard trips.
  inline GrowthEstimate estimate_growth(unsigned m, unsigned terms, unsigned k = 16,
                                        mpfr_prec_t precision_bits = 512)
  {
    if (m == 0)
      throw std::invalid_argument("estimate_growth: m must be positive");
    if (k < 2 || k % 2 != 0)
      throw std::invalid_argument("estimate_growth: difference power must be even and positive");
    if (terms < k + 8)
      throw std::invalid_argument("estimate_growth: need at least k + 8 sequence terms");

    const mpfr_prec_t prec = precision_bits;
    const unsigned n_top = terms;
    const std::vector<Int> C = hypercatalan_sequence_gf(m, n_top);

    // Stage 1: ratios a_n/a_{n-1} = (C_n/C_{n-1})/n^{m-1}, exact.
    RatSeq ratios;
    ratios.start_index = 1;
    ratios.values.reserve(n_top);
    for (unsigned n = 1; n <= n_top; ++n) {
      const Int den = C[n - 1] * pow_ui(static_cast<unsigned long>(n), m - 1);
      Rat r(C[n], den);
      r.canonicalize();
      ratios.values.push_back(std::move(r));
    }
    Real A = Real::of(accelerate_exact(ratios, k).values.back(), prec);

    const Rat A_c = detail::conjectured_A(m);
    const Rat rho_c = detail::conjectured_rho(m);

    // Stage 2: log-ratio of a'_n = a_n/A_c^n against the log-ratio of n
    // itself; the limit is rho.  ratios.values[n] is a_{n+1}/a_n.
    RealSeq logratio;
    logratio.start_index = 1;
    logratio.values.reserve(n_top - 1);
    for (unsigned n = 1; n + 1 <= n_top; ++n) {
      const Rat step = ratios.values[n] / A_c;
      logratio.values.push_back(Real::of(step, prec).log() /
                                Real::of(Rat(n + 1, n), prec).log());
    }
    Real rho = std::move(accelerate(logratio, k).values.back());

    // Stage 3: peel off the conjectured A_c^n (n!)^{m-1} n^{rho_c}; what is
    // left converges to the ansatz constant.
    const Real exp_rho = Real::of(-rho_c, prec);
    RealSeq knorm;
    knorm.start_index = 1;
    knorm.values.reserve(n_top);
    Int nfac = 1;
    Rat Apow = 1;
    for (unsigned n = 1; n <= n_top; ++n) {
      nfac *= n;
      Apow *= A_c;
      Rat q(C[n], pow_ui(nfac, m - 1));
      q.canonicalize();
      q /= Apow;
      knorm.values.push_back(Real::of(q, prec) *
                             Real::of(static_cast<unsigned long>(n), prec).pow(exp_rho));
    }
    Real K = std::move(accelerate(knorm, k).values.back());

    return {std::move(A), std::move(rho), std::move(K), terms, k};
  }

} // namespace hypercat

#endif // HYPERCAT_ACCELERATION_HH
