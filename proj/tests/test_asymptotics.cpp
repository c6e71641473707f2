#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include <hypercat/acceleration.hh>

using namespace hypercat;

namespace {

  constexpr mpfr_prec_t test_prec = 512;

  Real lit(const char* s) { return Real::of(std::string(s), test_prec); }

  bool near(const Real& x, const char* target, double tol)
  {
    return ((x - lit(target)).abs() < Real::of(tol, test_prec));
  }

  // 2^-bits, as an exactness-grade tolerance.
  Real ulp_scale(long bits)
  {
    return Real::of(0.5, test_prec).pow(Real::of(static_cast<double>(bits), test_prec));
  }

  RatSeq rat_seq(unsigned long start, unsigned long stop, Rat (*f)(unsigned long))
  {
    RatSeq s;
    s.start_index = start;
    for (unsigned long n = start; n <= stop; ++n)
      s.values.push_back(f(n));
    return s;
  }

} // namespace

TEST_CASE("exact acceleration annihilates truncated expansions", "[asymp]")
{
  // Constant sequences are fixed points, for any even power.
  for (unsigned k : {2u, 4u, 8u}) {
    const RatSeq b = accelerate_exact(
        rat_seq(3, 24, [](unsigned long) { return Rat(5, 7); }), k);
    CHECK(b.start_index == 3 + k);
    REQUIRE(b.values.size() == 22 - k);
    for (const Rat& v : b.values)
      CHECK(v == Rat(5, 7));
  }

  // a_n = c + p(n)/n^k with deg p < k:  n^k a_n is a polynomial with leading
  // coefficient c, so Delta^k/k! recovers c exactly at every entry.
  {
    const RatSeq b = accelerate_exact(rat_seq(1, 25, [](unsigned long n) -> Rat {
      const Int num = 2 * Int(n) * n * n - 5 * Int(n) + 1;
      Rat tail(num, pow_ui(n, 4));
      tail.canonicalize();
      return Rat(7, 3) + tail;
    }), 4);
    for (const Rat& v : b.values)
      CHECK(v == Rat(7, 3));
  }

  // In particular 1 + 1/n is sent to exactly 1.
  {
    const RatSeq b = accelerate_exact(rat_seq(1, 30, [](unsigned long n) {
      Rat a(n + 1, n);
      return a;
    }), 8);
    for (const Rat& v : b.values)
      CHECK(v == 1);
  }
}

TEST_CASE("exact acceleration tail error is a falling-factorial reciprocal", "[asymp]")
{
  // The first surviving term: a_n = 1 + 1/n^9 under k = 8 leaves
  // b_n - 1 = 1/((n-8)(n-7)...n), a rational function of degree -9.
  const unsigned k = 8;
  const RatSeq b = accelerate_exact(rat_seq(1, 40, [](unsigned long n) -> Rat {
    Rat tail(Int(1), pow_ui(n, 9));
    return Rat(1) + tail;
  }), k);
  REQUIRE(b.start_index == 9);
  for (std::size_t i = 0; i < b.values.size(); ++i) {
    const unsigned long n = b.start_index + i;
    Int prod = 1;
    for (unsigned long j = n - k; j <= n; ++j)
      prod *= j;
    Rat expect(Int(1), prod);
    expect.canonicalize();
    CHECK(b.values[i] - 1 == expect);
  }
}

TEST_CASE("exact acceleration is linear", "[asymp]")
{
  const RatSeq a = rat_seq(2, 30, [](unsigned long n) {
    Rat q(Int(n) * n + 1, pow_ui(n, 3));
    q.canonicalize();
    return q;
  });
  const RatSeq b = rat_seq(2, 30, [](unsigned long n) {
    Rat q(1, n + 2);
    q.canonicalize();
    return q;
  });
  RatSeq combo;
  combo.start_index = 2;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    combo.values.push_back(Rat(3) * a.values[i] - Rat(2) * b.values[i]);

  const RatSeq aa = accelerate_exact(a, 4);
  const RatSeq bb = accelerate_exact(b, 4);
  const RatSeq cc = accelerate_exact(combo, 4);
  REQUIRE(cc.values.size() == aa.values.size());
  for (std::size_t i = 0; i < cc.values.size(); ++i) {
    const Rat expect = Rat(3) * aa.values[i] - Rat(2) * bb.values[i];
    CHECK(cc.values[i] == expect);
  }
}

TEST_CASE("float acceleration agrees with the exact path", "[asymp]")
{
  const RatSeq exact_in = rat_seq(1, 40, [](unsigned long n) -> Rat {
    Rat tail(Int(1), pow_ui(n, 9));
    return Rat(1) + tail;
  });
  RealSeq float_in;
  float_in.start_index = exact_in.start_index;
  for (const Rat& q : exact_in.values)
    float_in.values.push_back(Real::of(q, test_prec));

  const RatSeq be = accelerate_exact(exact_in, 8);
  const RealSeq bf = accelerate(float_in, 8);
  REQUIRE(bf.values.size() == be.values.size());
  CHECK(bf.start_index == be.start_index);
  for (std::size_t i = 0; i < bf.values.size(); ++i)
    CHECK((bf.values[i] - Real::of(be.values[i], test_prec)).abs() < ulp_scale(450));

  // Constants pass through untouched up to roundoff.
  RealSeq c;
  c.start_index = 5;
  for (unsigned n = 0; n < 30; ++n)
    c.values.push_back(Real::of(1.25, 256));
  for (const Real& v : accelerate(c, 8).values)
    CHECK((v - Real::of(1.25, 256)).abs() < ulp_scale(200));
}

TEST_CASE("acceleration input validation", "[asymp]")
{
  RatSeq s = rat_seq(1, 20, [](unsigned long n) { return Rat(n); });
  CHECK_THROWS_AS(accelerate_exact(s, 3), std::invalid_argument);   // odd power
  CHECK_THROWS_AS(accelerate_exact(s, 20), std::invalid_argument);  // too short
  CHECK_THROWS_AS(accelerate_exact(s, 22), std::invalid_argument);

  RealSeq r;
  r.start_index = 1;
  for (unsigned n = 1; n <= 20; ++n)
    r.values.push_back(Real::of(static_cast<unsigned long>(n), test_prec));
  CHECK_THROWS_AS(accelerate(r, 5), std::invalid_argument);
  CHECK_THROWS_AS(accelerate(r, 20), std::invalid_argument);

  RealSeq mixed = r;
  mixed.values[3] = Real::of(3ul, 256);
  CHECK_THROWS_AS(accelerate(mixed, 4), std::invalid_argument);

  RealSeq inf = r;
  inf.values[2] = Real::of(1.0, test_prec) / Real::of(0.0, test_prec);
  CHECK_THROWS_AS(accelerate(inf, 4), std::invalid_argument);
}

TEST_CASE("cancellation guard", "[asymp]")
{
  // A smooth slowly varying sequence: k = 16 needs roughly 16 + 48 bits of
  // headroom beyond the size of n^16 a_n / 16!, far more than 64 bits.
  auto sequence = [](mpfr_prec_t prec) {
    RealSeq s;
    s.start_index = 20;
    for (unsigned n = 20; n <= 120; ++n)
      s.values.push_back(Real::of(Rat(1, 2), prec) +
                         Real::of(1.0, prec) / Real::of(static_cast<unsigned long>(n), prec));
    return s;
  };
  CHECK_THROWS_AS(accelerate(sequence(64), 16), precision_error);

  // The same data clears the guard at 512 bits, and 1/2 + 1/n is resolved
  // exactly up to roundoff.
  const RealSeq ok = accelerate(sequence(512), 16);
  CHECK((ok.values.back() - Real::of(0.5, 512)).abs() < ulp_scale(400));
}

TEST_CASE("conjectured growth constants", "[asymp]")
{
  const GrowthEstimate m1 = conjectured_constants(1, test_prec);
  CHECK(m1.A == Real::of(4ul, test_prec));
  CHECK(m1.rho == Real::of(Rat(-3, 2), test_prec));
  CHECK(near(m1.K, "0.56418958354775628695", 1e-18));  // 1/sqrt(pi)

  const GrowthEstimate m2 = conjectured_constants(2, test_prec);
  CHECK(m2.A == Real::of(2ul, test_prec));
  CHECK(m2.rho == Real::of(Rat(-1, 2), test_prec));
  CHECK(near(m2.K, "4.48168907033806482260", 1e-18));  // e^{3/2}

  const GrowthEstimate m3 = conjectured_constants(3, test_prec);
  CHECK(m3.A == Real::of(Rat(9, 2), test_prec));
  CHECK(m3.rho == Real::of(-1.0, test_prec));
  // 2 * binom(2,2) / 3^{3/2}
  CHECK((m3.K - Real::of(2.0, test_prec) / Real::of(Int(27), test_prec).sqrt()).abs() <
        ulp_scale(500));

  const GrowthEstimate m4 = conjectured_constants(4, test_prec);
  CHECK(m4.A == Real::of(Rat(32, 3), test_prec));
  CHECK(m4.rho == Real::of(Rat(-3, 2), test_prec));
  // sqrt(2) * binom(3,2) / 4^{5/2}
  CHECK(near(m4.K, "0.13258252147247766083", 1e-18));

  CHECK(conjectured_constants(5, test_prec).A == Real::of(Rat(625, 24), test_prec));

  CHECK_THROWS_AS(conjectured_constants(0), std::invalid_argument);
}

TEST_CASE("ansatz constant normalization", "[asymp]")
{
  // K-hat = K_m A / pi^{(m-1)/2} simplifies pleasantly for small m.
  const Real pi = Real::pi(test_prec);

  CHECK(ansatz_constant(1, test_prec) == conjectured_constants(1, test_prec).K);
  CHECK(near(ansatz_constant(2, test_prec), "5.05704458036912765143", 1e-17));
  CHECK((ansatz_constant(3, test_prec) - Real::of(Int(3), test_prec).sqrt() / pi).abs() <
        ulp_scale(500));  // sqrt(3)/pi
  CHECK((ansatz_constant(4, test_prec) -
         Real::of(Int(2), test_prec).sqrt() / pi.pow(Real::of(1.5, test_prec))).abs() <
        ulp_scale(500));  // sqrt(2)/pi^{3/2}
  CHECK((ansatz_constant(5, test_prec) -
         Real::of(Int(5), test_prec).sqrt() / (Real::of(2.0, test_prec) * pi * pi)).abs() <
        ulp_scale(500));  // sqrt(5)/(2 pi^2)
}

TEST_CASE("growth estimate, classical case", "[asymp]")
{
  const GrowthEstimate est = estimate_growth(1, 100, 16);
  CHECK(est.terms_used == 100);
  CHECK(est.accel_power == 16);
  CHECK((est.A - Real::of(4ul, test_prec)).abs() < Real::of(1e-20, test_prec));
  CHECK((est.rho + Real::of(1.5, test_prec)).abs() < Real::of(1e-20, test_prec));
  CHECK((est.K - conjectured_constants(1, test_prec).K).abs() < Real::of(1e-20, test_prec));
}

TEST_CASE("growth estimate, pair blocks", "[asymp][slow]")
{
  // 100 coefficients: A to ten digits, rho to the full fifteen decimals the
  // acceleration yields at this depth.
  const GrowthEstimate e100 = estimate_growth(2, 100, 16);
  CHECK((e100.A - Real::of(2ul, test_prec)).abs() < Real::of(1e-10, test_prec));
  CHECK(near(-e100.rho, "0.499999997726715", 1e-15));

  // 200 coefficients: K to eighteen digits; it sits 1.3e-17 from the
  // conjectured closed form 2 e^{3/2} / sqrt(pi).
  const GrowthEstimate e200 = estimate_growth(2, 200, 16);
  CHECK((e200.A - Real::of(2ul, test_prec)).abs() < Real::of(1e-16, test_prec));
  CHECK((e200.rho + Real::of(0.5, test_prec)).abs() < Real::of(1e-15, test_prec));
  CHECK(near(e200.K, "5.05704458036912766", 1e-17));
  CHECK((e200.K - ansatz_constant(2, test_prec)).abs() < Real::of(5e-17, test_prec));
}

TEST_CASE("growth estimates approach the conjectured constants", "[asymp]")
{
  const GrowthEstimate e3 = estimate_growth(3, 40, 8);
  CHECK((e3.A - Real::of(Rat(9, 2), test_prec)).abs() < Real::of(1e-4, test_prec));
  CHECK((e3.rho + Real::of(1.0, test_prec)).abs() < Real::of(1e-4, test_prec));
  CHECK((e3.K - ansatz_constant(3, test_prec)).abs() < Real::of(1e-5, test_prec));

  const GrowthEstimate e4 = estimate_growth(4, 36, 8);
  CHECK((e4.A - Real::of(Rat(32, 3), test_prec)).abs() < Real::of(1e-5, test_prec));
  CHECK((e4.rho + Real::of(1.5, test_prec)).abs() < Real::of(1e-5, test_prec));
  CHECK((e4.K - ansatz_constant(4, test_prec)).abs() < Real::of(1e-7, test_prec));

  const GrowthEstimate e5 = estimate_growth(5, 36, 8);
  CHECK((e5.A - Real::of(Rat(625, 24), test_prec)).abs() < Real::of(1e-5, test_prec));
  CHECK((e5.rho + Real::of(2.0, test_prec)).abs() < Real::of(1e-6, test_prec));
  CHECK((e5.K - ansatz_constant(5, test_prec)).abs() < Real::of(1e-8, test_prec));
}

TEST_CASE("growth estimate validation and precision failure", "[asymp]")
{
  CHECK_THROWS_AS(estimate_growth(0, 50), std::invalid_argument);
  CHECK_THROWS_AS(estimate_growth(2, 20, 16), std::invalid_argument);   // terms < k + 8
  CHECK_THROWS_AS(estimate_growth(2, 100, 15), std::invalid_argument);  // odd power
  CHECK_THROWS_AS(estimate_growth(2, 100, 16, 64), precision_error);
}
