#ifndef HYPERCAT_REAL_HH
#define HYPERCAT_REAL_HH

#include <mpfr.h>

#include <string>
#include <utility>

#include <hypercat/numeric.hh>

namespace hypercat {

  // Correctly rounded arbitrary-precision real with an explicit per-value
  // precision in bits.  Binary operations round to the wider operand.
  class Real {
  public:
    explicit Real(mpfr_prec_t prec = 512)
    {
      mpfr_init2(x_, prec);
      mpfr_set_zero(x_, 1);
    }

    Real(const Real& o)
    {
      mpfr_init2(x_, mpfr_get_prec(o.x_));
      mpfr_set(x_, o.x_, MPFR_RNDN);
    }

    Real(Real&& o) noexcept
    {
      mpfr_init2(x_, mpfr_get_prec(o.x_));
      mpfr_swap(x_, o.x_);
    }

    Real& operator=(Real o) noexcept
    {
      mpfr_swap(x_, o.x_);
      return *this;
    }

    ~Real() { mpfr_clear(x_); }

    static Real of(const Rat& q, mpfr_prec_t prec)
    {
      Real r(prec);
      mpfr_set_q(r.x_, q.get_mpq_t(), MPFR_RNDN);
      return r;
    }

    static Real of(const Int& z, mpfr_prec_t prec)
    {
      Real r(prec);
      mpfr_set_z(r.x_, z.get_mpz_t(), MPFR_RNDN);
      return r;
    }

    static Real of(unsigned long v, mpfr_prec_t prec)
    {
      Real r(prec);
      mpfr_set_ui(r.x_, v, MPFR_RNDN);
      return r;
    }

    static Real of(double v, mpfr_prec_t prec)
    {
      Real r(prec);
      mpfr_set_d(r.x_, v, MPFR_RNDN);
      return r;
    }

    // Decimal literal; the whole string must parse.
    static Real of(const std::string& s, mpfr_prec_t prec)
    {
      Real r(prec);
      if (mpfr_set_str(r.x_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("Real: malformed decimal literal: " + s);
      return r;
    }

    static Real pi(mpfr_prec_t prec)
    {
      Real r(prec);
      mpfr_const_pi(r.x_, MPFR_RNDN);
      return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }

    friend Real operator+(const Real& a, const Real& b) { return binop(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return binop(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return binop(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return binop(a, b, mpfr_div); }

    Real& operator+=(const Real& o) { *this = *this + o; return *this; }
    Real& operator-=(const Real& o) { *this = *this - o; return *this; }
    Real& operator*=(const Real& o) { *this = *this * o; return *this; }
    Real& operator/=(const Real& o) { *this = *this / o; return *this; }

    Real operator-() const { return unop(*this, mpfr_neg); }
    Real abs() const { return unop(*this, mpfr_abs); }
    Real log() const { return unop(*this, mpfr_log); }
    Real exp() const { return unop(*this, mpfr_exp); }
    Real sqrt() const { return unop(*this, mpfr_sqrt); }

    Real pow(const Real& e) const { return binop(*this, e, mpfr_pow); }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.x_, b.x_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

    int sign() const { return mpfr_sgn(x_); }
    bool finite() const { return mpfr_number_p(x_) != 0; }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    long exponent() const { return mpfr_zero_p(x_) ? 0 : static_cast<long>(mpfr_get_exp(x_)); }

    std::string str(int digits = 20) const
    {
      char* s = nullptr;
      mpfr_asprintf(&s, "%.*Rg", digits, x_);
      std::string out(s);
      mpfr_free_str(s);
      return out;
    }

    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

  private:
    using mpfr_binop = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    using mpfr_unop = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

    static Real binop(const Real& a, const Real& b, mpfr_binop op)
    {
      Real r(std::max(mpfr_get_prec(a.x_), mpfr_get_prec(b.x_)));
      op(r.x_, a.x_, b.x_, MPFR_RNDN);
      return r;
    }

    static Real unop(const Real& a, mpfr_unop op)
    {
      Real r(mpfr_get_prec(a.x_));
      op(r.x_, a.x_, MPFR_RNDN);
      return r;
    }

    mpfr_t x_;
  };

} // namespace hypercat

#endif // HYPERCAT_REAL_HH
