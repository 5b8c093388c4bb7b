#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "faclab/factorials.hpp"
#include "faclab/gaussian_rational.hpp"
#include "faclab/multi_poly.hpp"
#include "faclab/nullspace.hpp"
#include "faclab/parallel.hpp"
#include "faclab/uni_poly.hpp"
#include "oracles.hpp"

using namespace faclab;

namespace {

MultiPoly random_poly(oracle::ScalarSource& src, std::size_t vars, unsigned terms, unsigned max_deg) {
  MultiPoly f(vars);
  for (unsigned t = 0; t < terms; ++t) {
    ExponentVector e(vars);
    for (auto& x : e) x = src.uniform(0, max_deg);
    f += MultiPoly::monomial(e, src.any());
  }
  return f;
}

UniPoly random_uni(oracle::ScalarSource& src, unsigned max_deg) {
  std::vector<GaussianRational> c(src.uniform(1, max_deg + 1));
  for (auto& x : c) x = src.any();
  return UniPoly(c);
}

}  // namespace

TEST_CASE("gaussian rationals are canonical and print exactly") {
  const GaussianRational half = GaussianRational::fraction(2, 4);
  CHECK(half.to_string() == "1/2");
  CHECK(GaussianRational(mpq_class(3), mpq_class(-1, 2)).to_string() == "3-1/2i");
  CHECK(GaussianRational(mpq_class(0), mpq_class(2)).to_string() == "2i");
  CHECK(GaussianRational().to_string() == "0");
  const GaussianRational i = GaussianRational::imaginary_unit();
  CHECK(i * i == GaussianRational(-1));
  CHECK((GaussianRational(1) + i).norm() == 2);
  CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(), std::domain_error);
}

TEST_CASE("gaussian rational field axioms on random samples") {
  oracle::ScalarSource src(11);
  for (int s = 0; s < 300; ++s) {
    const auto a = src.any(), b = src.any(), c = src.any();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == GaussianRational());
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a * b).norm() == a.norm() * b.norm());
  }
  CHECK(pow(GaussianRational(1, 1), 4) == GaussianRational(-4));
  CHECK(pow(GaussianRational(7), 0) == GaussianRational(1));
}

TEST_CASE("factorials, binomials and rising factorials") {
  for (unsigned n = 0; n <= 60; ++n) CHECK(factorial(n) == oracle::fact(n));
  CHECK(factorial(25).get_str() == "15511210043330985984000000");
  for (unsigned n = 0; n <= 20; ++n)
    for (unsigned k = 0; k <= n; ++k) CHECK(binomial(n, k) * factorial(k) * factorial(n - k) == factorial(n));
  CHECK(binomial(3, 5) == 0);
  CHECK(pochhammer(mpq_class(1), 5) == 120);
  CHECK(pochhammer(mpq_class(-3), 4) == 0);
  CHECK(pochhammer(mpq_class(1, 2), 2) == mpq_class(3, 4));
  CHECK(pochhammer(mpq_class(7), 0) == 1);
}

TEST_CASE("factorial table is safe to fill from many threads") {
  const auto values = parallel_map(200, 8, [](std::size_t i) { return factorial(300 - i % 300); });
  for (std::size_t i = 0; i < values.size(); ++i) CHECK(values[i] == oracle::fact(300 - i % 300));
}

TEST_CASE("multivariate polynomial ring axioms") {
  oracle::ScalarSource src(12);
  for (int s = 0; s < 60; ++s) {
    const auto f = random_poly(src, 3, 4, 3), g = random_poly(src, 3, 4, 3), h = random_poly(src, 3, 3, 2);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f - f).is_zero());
    CHECK(pow(f, 3) == f * f * f);
    CHECK(pow(f, 0) == MultiPoly::constant(3, 1));
    std::vector<GaussianRational> point{src.any(), src.any(), src.any()};
    CHECK(evaluate(f * g + h, point) == evaluate(f, point) * evaluate(g, point) + evaluate(h, point));
  }
}

TEST_CASE("multivariate polynomial structure") {
  MultiPoly f(2);
  f.add_term({2, 1}, 3);
  f.add_term({2, 1}, -3);
  CHECK(f.is_zero());
  f.add_term({1, 4}, 2);
  f.add_term({0, 0}, 1);
  CHECK(f.term_count() == 2);
  CHECK(f.total_degree() == 5);
  CHECK(f.degree_in(1) == 4);
  CHECK(f.coefficient({1, 4}) == GaussianRational(2));
  CHECK(f.coefficient({3, 3}).is_zero());
  CHECK_THROWS_AS(f.add_term({1}, 1), std::invalid_argument);
  CHECK_THROWS_AS(f + MultiPoly(3), std::invalid_argument);
}

TEST_CASE("permuting variables is a ring automorphism") {
  oracle::ScalarSource src(13);
  const std::vector<std::size_t> sigma{2, 0, 1}, inverse{1, 2, 0};
  for (int s = 0; s < 30; ++s) {
    const auto f = random_poly(src, 3, 4, 3), g = random_poly(src, 3, 4, 3);
    CHECK(permute(f * g, sigma) == permute(f, sigma) * permute(g, sigma));
    CHECK(permute(permute(f, sigma), inverse) == f);
  }
  const MultiPoly x1 = MultiPoly::variable(3, 0);
  CHECK(permute(x1, sigma) == MultiPoly::variable(3, 2));
  const std::vector<std::size_t> bad{0, 0, 1};
  CHECK_THROWS_AS(permute(x1, bad), std::invalid_argument);
}

TEST_CASE("restriction to one variable") {
  MultiPoly f(2);
  f.add_term({1, 2}, 3);
  f.add_term({0, 1}, 1);
  const std::vector<GaussianRational> values{2, 0};
  const UniPoly r = restrict_to_variable(f, 1, values);
  CHECK(r == UniPoly({0, 1, 6}));
}

TEST_CASE("power cache matches repeated multiplication") {
  oracle::ScalarSource src(14);
  const auto f = random_poly(src, 2, 3, 2);
  PowerCache cache(f);
  MultiPoly expect = MultiPoly::constant(2, 1);
  for (unsigned k = 0; k <= 6; ++k) {
    CHECK(cache.power(k) == expect);
    expect = expect * f;
  }
}

TEST_CASE("univariate polynomial division and gcd") {
  oracle::ScalarSource src(15);
  for (int s = 0; s < 100; ++s) {
    const auto a = random_uni(src, 6), b = random_uni(src, 4);
    if (b.is_zero()) continue;
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
  for (int s = 0; s < 60; ++s) {
    const auto common = random_uni(src, 2), a = random_uni(src, 3), b = random_uni(src, 3);
    if (common.is_zero() || a.is_zero() || b.is_zero()) continue;
    const UniPoly g = gcd(a * common, b * common);
    CHECK(g.leading().is_one());
    CHECK(divmod(a * common, g).second.is_zero());
    CHECK(divmod(b * common, g).second.is_zero());
    CHECK(divmod(g, monic(common)).second.is_zero());
  }
  const UniPoly x = UniPoly::x();
  CHECK(gcd(x * x - UniPoly::constant(1), x - UniPoly::constant(1)) == x - UniPoly::constant(1));
  CHECK(gcd(x + UniPoly::constant(1), x - UniPoly::constant(1)) == UniPoly::constant(1));
  CHECK(gcd(UniPoly(), UniPoly()).is_zero());
  CHECK_THROWS_AS(divmod(x, UniPoly()), std::domain_error);
  CHECK((x * x + UniPoly::constant(1))(GaussianRational::imaginary_unit()).is_zero());
}

TEST_CASE("exact nullspace") {
  RationalMatrix rows{{1, 2, 3}, {2, 4, 6}, {1, 0, -1}};
  const auto basis = nullspace(rows, 3);
  REQUIRE(basis.size() == 1);
  for (const auto& row : rows) {
    mpq_class dot = 0;
    for (std::size_t j = 0; j < 3; ++j) dot += row[j] * basis[0][j];
    CHECK(dot == 0);
  }
  CHECK(nullspace({{1, 0}, {0, 1}}, 2).empty());
  CHECK(nullspace({}, 4).size() == 4);
}
