#ifndef HYPERCAT_MOMENTS_HH
#define HYPERCAT_MOMENTS_HH

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include <hypercat/numeric.hh>

namespace hypercat {

  // Polynomial with rational coefficients in the weight variables g_1, g_2,
  // ...  A term's key lists the exponent of each g_i (trailing zeros
  // trimmed), so the key for g_1*g_3^2 is {1, 0, 2}.
  struct GWeightPolynomial {
    std::map<std::vector<unsigned>, Rat> terms;

    static GWeightPolynomial constant(const Rat& c)
    {
      GWeightPolynomial p;
      if (c != 0)
        p.terms[{}] = c;
      return p;
    }

    static GWeightPolynomial g(unsigned i)
    {
      if (i == 0)
        throw std::invalid_argument("weight variables are numbered from 1");
      GWeightPolynomial p;
      std::vector<unsigned> key(i, 0);
      key.back() = 1;
      p.terms[key] = 1;
      return p;
    }

    bool is_zero() const { return terms.empty(); }

    Rat coefficient(std::vector<unsigned> key) const
    {
      while (!key.empty() && key.back() == 0)
        key.pop_back();
      auto it = terms.find(key);
      return it == terms.end() ? Rat(0) : it->second;
    }

    GWeightPolynomial& operator+=(const GWeightPolynomial& o)
    {
      for (const auto& [key, c] : o.terms) {
        Rat& slot = terms[key];
        slot += c;
        if (slot == 0)
          terms.erase(key);
      }
      return *this;
    }

    friend GWeightPolynomial operator+(GWeightPolynomial a, const GWeightPolynomial& b)
    {
      return a += b;
    }

    friend GWeightPolynomial operator*(const GWeightPolynomial& a, const GWeightPolynomial& b)
    {
      GWeightPolynomial out;
      for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
          std::vector<unsigned> key(std::max(ka.size(), kb.size()), 0);
          for (std::size_t i = 0; i < ka.size(); ++i)
            key[i] += ka[i];
          for (std::size_t i = 0; i < kb.size(); ++i)
            key[i] += kb[i];
          Rat& slot = out.terms[key];
          slot += ca * cb;
          if (slot == 0)
            out.terms.erase(key);
        }
      return out;
    }

    friend GWeightPolynomial operator*(GWeightPolynomial a, const Rat& c)
    {
      if (c == 0)
        return {};
      for (auto& [key, coeff] : a.terms)
        coeff *= c;
      return a;
    }

    // Evaluate with g_{i+1} = values[i]; every variable that occurs must be
    // covered.
    Rat eval(const std::vector<Rat>& values) const
    {
      Rat total = 0;
      for (const auto& [key, c] : terms) {
        if (key.size() > values.size())
          throw std::invalid_argument("not enough weight values supplied");
        Rat term = c;
        for (std::size_t i = 0; i < key.size(); ++i)
          for (unsigned p = 0; p < key[i]; ++p)
            term *= values[i];
        total += term;
      }
      return total;
    }

    friend bool operator==(const GWeightPolynomial&, const GWeightPolynomial&) = default;
  };

  // Complete exponential Bell polynomials Y_0..Y_n, via
  // Y_{n+1} = sum_k binom(n, k) g_{k+1} Y_{n-k}.  Evaluating Y_n at
  // g_i = 1 gives the Bell numbers.
  inline std::vector<GWeightPolynomial> bell_polynomials(unsigned n)
  {
    std::vector<GWeightPolynomial> y{GWeightPolynomial::constant(1)};
    for (unsigned next = 1; next <= n; ++next) {
      GWeightPolynomial sum;
      for (unsigned k = 0; k < next; ++k)
        sum += GWeightPolynomial::g(k + 1) * y[next - 1 - k] * Rat(binomial(next - 1, k));
      y.push_back(sum);
    }
    return y;
  }

  inline GWeightPolynomial bell_polynomial(unsigned n)
  {
    return bell_polynomials(n).back();
  }

  // Coefficients of the moment expansion: the t^n entry is
  // Y_n / ((2m)!^d d!) when n = 2m*d, and zero otherwise.
  inline std::vector<GWeightPolynomial> moment_series(unsigned m, unsigned order)
  {
    if (m == 0)
      throw std::invalid_argument("m must be >= 1");
    auto y = bell_polynomials(order);
    std::vector<GWeightPolynomial> out(order + 1);
    for (unsigned n = 0; n <= order; ++n) {
      if (n % (2 * m) != 0)
        continue;
      unsigned d = n / (2 * m);
      Int den = pow_ui(factorial(2 * m), d) * factorial(d);
      out[n] = y[n] * (Rat(1) / Rat(den));
    }
    return out;
  }

} // namespace hypercat

#endif // HYPERCAT_MOMENTS_HH
