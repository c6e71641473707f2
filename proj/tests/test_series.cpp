#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <hypercat/catalan_series.hh>
#include <hypercat/tours.hh>

using namespace hypercat;

namespace {

  Int catalan_binomial(unsigned n)
  {
    Rat c(binomial(2 * n, n), n + 1);
    c.canonicalize();
    return to_integer(c, "catalan");
  }

  FormalSeries random_series(unsigned order, std::mt19937& rng)
  {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    FormalSeries s(order);
    for (unsigned k = 0; k <= order; ++k) {
      Rat q(num(rng), den(rng));
      q.canonicalize();
      s.at(k) = q;
    }
    return s;
  }

} // namespace

TEST_CASE("block partition counts", "[series]")
{
  CHECK(block_partition_count(1, 5) == 1);
  CHECK(block_partition_count(2, 2) == 1);
  CHECK(block_partition_count(2, 4) == 3);
  CHECK(block_partition_count(2, 6) == 15);
  CHECK(block_partition_count(2, 8) == 105);
  CHECK(block_partition_count(2, 3) == 0);
  CHECK(block_partition_count(3, 6) == 10);
  CHECK(block_partition_count(4, 8) == 35);
  CHECK(block_partition_count(5, 0) == 1);
  CHECK_THROWS_AS(block_partition_count(0, 4), std::invalid_argument);
}

TEST_CASE("homogeneous monomial dimensions", "[series]")
{
  CHECK(homog_dim(2, 2) == 3);
  CHECK(homog_dim(2, 4) == 5);
  CHECK(homog_dim(2, 6) == 7);
  CHECK(homog_dim(3, 3) == 10);
  CHECK(homog_dim(1, 9) == 1);
  CHECK(homog_dim(4, 0) == 1);
}

TEST_CASE("weight series have the documented leading coefficients", "[series]")
{
  FormalSeries ell = ell_series(2, 3);
  CHECK(ell[0] == 1);
  CHECK(ell[1] == 3);
  CHECK(ell[2] == 15);
  CHECK(ell[3] == 105);

  FormalSeries h = h_series(2, 4);
  CHECK(h[0] == 1);
  CHECK(h[1] == 1);
  CHECK(h[2] == 3);
  CHECK(h[3] == 15);
  CHECK(h[4] == 105);
}

TEST_CASE("x·ell_m equals h_m − 1", "[series]")
{
  for (unsigned m = 1; m <= 5; ++m) {
    unsigned order = 12;
    FormalSeries lhs = shift_up(ell_series(m, order), order);
    FormalSeries rhs = h_series(m, order) - FormalSeries::constant(1, order);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("tree series for m = 2", "[series]")
{
  FormalSeries f = solve_f(2, 4);
  CHECK(f[0] == 0);
  CHECK(f[1] == 1);
  CHECK(f[2] == 3);
  CHECK(f[3] == 24);
  CHECK(f[4] == 267);
}

TEST_CASE("generating function coefficients", "[series]")
{
  FormalSeries F2 = catalan_gf(2, 6);
  CHECK(F2[0] == 0);
  const Int c2[] = {1, 1, 6, 57, 678};
  for (unsigned n = 0; n <= 4; ++n)
    CHECK(hypercat_coeff(F2, n) == c2[n]);

  FormalSeries F1 = catalan_gf(1, 8);
  for (unsigned n = 0; n <= 7; ++n)
    CHECK(hypercat_coeff(F1, n) == catalan_binomial(n));

  FormalSeries F4 = catalan_gf(4, 4);
  CHECK(hypercat_coeff(F4, 2) == 70);
}

TEST_CASE("generating function agrees with the tree sum", "[series]")
{
  for (unsigned m = 1; m <= 3; ++m) {
    FormalSeries F = catalan_gf(m, 9);
    for (unsigned n = 0; n <= 8; ++n)
      CHECK(hypercat_coeff(F, n) == hypercatalan(n, m));
  }
}

TEST_CASE("quadratic relation between f and the moment series", "[series]")
{
  for (unsigned m = 1; m <= 6; ++m)
    CHECK(gf_relation_residual(m, 32).is_zero());
}

TEST_CASE("a perturbed block count breaks the quadratic relation", "[series]")
{
  auto faulty = [](unsigned m, unsigned k) {
    Int w = block_partition_count(m, k);
    return k == 2 * m ? Int(w + 1) : w;
  };
  CHECK_FALSE(detail::gf_relation_residual_with(faulty, 2, 16).is_zero());
}

TEST_CASE("both solver paths agree", "[series]")
{
  for (unsigned m = 1; m <= 3; ++m)
    for (unsigned order : {8u, 20u, 40u}) {
      FormalSeries A = ell_series(m, order);
      CHECK(detail::solve_fixed_point(A, order) == detail::solve_newton(A, order));
    }
}

TEST_CASE("all-ones branching weights give the Catalan tree series", "[series]")
{
  unsigned order = 10;
  FormalSeries ones = FormalSeries(order);
  for (unsigned k = 0; k <= order; ++k)
    ones.at(k) = 1; // 1/(1-x) truncated
  FormalSeries p = solve_functional(ones, order);
  CHECK(p[0] == 0);
  for (unsigned n = 1; n <= order; ++n)
    CHECK(p[n] == Rat(catalan_binomial(n - 1)));
}

TEST_CASE("series arithmetic properties", "[series]")
{
  std::mt19937 rng(77);
  for (int trial = 0; trial < 10; ++trial) {
    FormalSeries a = random_series(9, rng);
    FormalSeries b = random_series(9, rng);
    CHECK((a + b) - b == a);
    CHECK(a * b == b * a);
  }

  FormalSeries s = random_series(7, rng);
  s.at(0) = Rat(3, 2);
  CHECK(s * s.reciprocal() == FormalSeries::constant(1, 7));

  FormalSeries id = FormalSeries::x(7);
  CHECK(compose(s, id) == s);
}

TEST_CASE("series validation", "[series]")
{
  FormalSeries a(3), b(4);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a * b, std::invalid_argument);

  FormalSeries inner = FormalSeries::constant(1, 3);
  CHECK_THROWS_AS(compose(a, inner), std::invalid_argument);
  CHECK_THROWS_AS(FormalSeries(5).reciprocal(), std::invalid_argument);
  CHECK_THROWS_AS(a[9], std::out_of_range);
  CHECK_THROWS_AS(solve_functional(ell_series(2, 3), 9), std::invalid_argument);
}

TEST_CASE("non-integral extraction is a loud failure", "[series]")
{
  FormalSeries F(3);
  F.at(2) = Rat(1, 2);
  CHECK_THROWS_AS(hypercat_coeff(F, 1), std::logic_error);
  CHECK_THROWS_AS(hypercat_coeff(F, 5), std::out_of_range);
}
