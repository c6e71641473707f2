#ifndef HYPERCAT_FORMAL_SERIES_HH
#define HYPERCAT_FORMAL_SERIES_HH

#include <stdexcept>
#include <vector>

#include <hypercat/numeric.hh>

namespace hypercat {

  // Truncated formal power series over the rationals.  A series of order N
  // carries coefficients of x^0..x^N and represents its value mod x^{N+1}.
  // Binary operations insist on equal orders; use truncated()/extended() to
  // line operands up explicitly.
  class FormalSeries {
  public:
    explicit FormalSeries(unsigned order) : c_(static_cast<std::size_t>(order) + 1, Rat(0)) {}

    static FormalSeries x(unsigned order)
    {
      FormalSeries s(order);
      if (order >= 1)
        s.c_[1] = 1;
      return s;
    }

    static FormalSeries constant(const Rat& v, unsigned order)
    {
      FormalSeries s(order);
      s.c_[0] = v;
      return s;
    }

    unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }

    const Rat& operator[](unsigned k) const
    {
      if (k >= c_.size())
        throw std::out_of_range("coefficient index beyond truncation order");
      return c_[k];
    }

    Rat& at(unsigned k)
    {
      if (k >= c_.size())
        throw std::out_of_range("coefficient index beyond truncation order");
      return c_[k];
    }

    bool is_zero() const
    {
      for (const Rat& q : c_)
        if (q != 0)
          return false;
      return true;
    }

    FormalSeries truncated(unsigned order) const
    {
      if (order > this->order())
        throw std::invalid_argument("truncation would extend the series");
      FormalSeries s(order);
      for (unsigned k = 0; k <= order; ++k)
        s.c_[k] = c_[k];
      return s;
    }

    FormalSeries extended(unsigned order) const
    {
      if (order < this->order())
        throw std::invalid_argument("extension would truncate the series");
      FormalSeries s(order);
      for (unsigned k = 0; k < c_.size(); ++k)
        s.c_[k] = c_[k];
      return s;
    }

    friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b)
    {
      require_same_order(a, b);
      FormalSeries s(a.order());
      for (std::size_t k = 0; k < a.c_.size(); ++k)
        s.c_[k] = a.c_[k] + b.c_[k];
      return s;
    }

    friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b)
    {
      require_same_order(a, b);
      FormalSeries s(a.order());
      for (std::size_t k = 0; k < a.c_.size(); ++k)
        s.c_[k] = a.c_[k] - b.c_[k];
      return s;
    }

    friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b)
    {
      require_same_order(a, b);
      FormalSeries s(a.order());
      Rat term;
      for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0)
          continue;
        for (std::size_t j = 0; i + j < a.c_.size(); ++j) {
          if (sgn(b.c_[j]) == 0)
            continue;
          term = a.c_[i] * b.c_[j];
          s.c_[i + j] += term;
        }
      }
      return s;
    }

    friend bool operator==(const FormalSeries& a, const FormalSeries& b)
    {
      return a.c_ == b.c_;
    }

    // Substitution outer(inner); inner must have zero constant term so the
    // result is well defined under truncation.  Horner evaluation.
    friend FormalSeries compose(const FormalSeries& outer, const FormalSeries& inner)
    {
      require_same_order(outer, inner);
      if (inner.c_[0] != 0)
        throw std::invalid_argument("composition needs zero constant term");
      unsigned N = outer.order();
      FormalSeries r = constant(outer.c_[N], N);
      for (unsigned d = N; d-- > 0;) {
        r = r * inner;
        r.c_[0] += outer.c_[d];
      }
      return r;
    }

    FormalSeries derivative() const
    {
      if (order() == 0)
        return FormalSeries(0);
      FormalSeries s(order() - 1);
      for (unsigned k = 1; k < c_.size(); ++k)
        s.c_[k - 1] = Rat(k) * c_[k];
      return s;
    }

    // Multiplication by x at a chosen truncation order.
    friend FormalSeries shift_up(const FormalSeries& s, unsigned order)
    {
      FormalSeries r(order);
      for (unsigned k = 1; k <= order; ++k)
        if (k - 1 <= s.order())
          r.c_[k] = s.c_[k - 1];
      return r;
    }

    // 1/this via quadratic Newton lifting; needs an invertible constant term.
    FormalSeries reciprocal() const
    {
      if (c_[0] == 0)
        throw std::invalid_argument("reciprocal needs nonzero constant term");
      unsigned N = order();
      FormalSeries r = constant(Rat(1) / c_[0], 0);
      while (r.order() < N) {
        unsigned t = std::min(2 * r.order() + 1, N);
        FormalSeries rt = r.extended(t);
        FormalSeries two = constant(2, t);
        r = rt * (two - truncated(t) * rt);
      }
      return r;
    }

  private:
    static void require_same_order(const FormalSeries& a, const FormalSeries& b)
    {
      if (a.c_.size() != b.c_.size())
        throw std::invalid_argument("series order mismatch");
    }

    std::vector<Rat> c_;
  };

  namespace detail {

    // Plain fixed-point iteration for P = x·A(P): pass t computes coefficient
    // t from the previous ones, so each target order costs one composition.
    inline FormalSeries solve_fixed_point(const FormalSeries& A, unsigned order)
    {
      FormalSeries f = FormalSeries::x(1);
      for (unsigned t = 2; t <= order; ++t) {
        FormalSeries g = compose(A.truncated(t - 1), f.extended(t - 1));
        f = shift_up(g, t);
      }
      return f.extended(order); // covers order == 1
    }

    // Newton iteration on G(P) = P − x·A(P); doubles the correct order per
    // step, which is what makes a few hundred exact terms affordable.
    inline FormalSeries solve_newton(const FormalSeries& A, unsigned order)
    {
      FormalSeries f = FormalSeries::x(1);
      FormalSeries Ad = A.derivative();
      unsigned t = 1;
      while (t < order) {
        unsigned t2 = std::min(2 * t, order);
        FormalSeries fe = f.extended(t2);
        FormalSeries num = fe - shift_up(compose(A.truncated(t2), fe), t2);
        FormalSeries w = compose(Ad.truncated(t2 - 1), f.extended(t2 - 1));
        FormalSeries den = FormalSeries::constant(1, t2) - shift_up(w, t2);
        f = fe - num * den.reciprocal();
        t = t2;
      }
      return f;
    }

  } // namespace detail

  // The unique series P with P(0) = 0 and P = x·A(P) mod x^{order+1}.
  // A must carry coefficients at least to the requested order.
  inline FormalSeries solve_functional(const FormalSeries& A, unsigned order)
  {
    if (order == 0)
      throw std::invalid_argument("order must be >= 1");
    if (A.order() < order)
      throw std::invalid_argument("A is truncated too early");
    constexpr unsigned newton_threshold = 48;
    FormalSeries f = order <= newton_threshold ? detail::solve_fixed_point(A, order)
                                               : detail::solve_newton(A, order);
    FormalSeries residual = shift_up(compose(A.truncated(order), f), order) - f;
    internal_check(residual.is_zero(), "functional equation residual must vanish");
    return f;
  }

} // namespace hypercat

#endif // HYPERCAT_FORMAL_SERIES_HH
