#ifndef HYPERCAT_NUMERIC_HH
#define HYPERCAT_NUMERIC_HH

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hypercat {

  using Int = mpz_class;
  using Rat = mpq_class;

  inline constexpr const char* version_string = "1.0.0";

  // Enumeration/search exceeded its configured budget.
  struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // Floating-point working precision was insufficient for the request.
  struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // Malformed external input (cache file, b-file).
  struct parse_error : std::runtime_error {
    parse_error(const std::string& what, std::size_t line_no)
        : std::runtime_error(what + " (line " + std::to_string(line_no) + ")"),
          line(line_no) {}
    std::size_t line;
  };

  // A violated internal invariant is a bug, never a data condition.
  inline void internal_check(bool ok, const char* what)
  {
    if (!ok)
      throw std::logic_error(std::string("internal consistency: ") + what);
  }

  inline Int factorial(unsigned long n)
  {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
  }

  inline Int binomial(unsigned long n, unsigned long k)
  {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
  }

  inline Int pow_ui(const Int& base, unsigned long e)
  {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
  }

  inline Int pow_ui(unsigned long base, unsigned long e)
  {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
  }

  inline bool is_integer(const Rat& q)
  {
    return mpz_cmp_ui(q.get_den().get_mpz_t(), 1) == 0;
  }

  // Exact extraction; rejects non-integral rationals loudly.
  inline Int to_integer(const Rat& q, const char* context)
  {
    internal_check(is_integer(q), context);
    return q.get_num();
  }

} // namespace hypercat

#endif // HYPERCAT_NUMERIC_HH
