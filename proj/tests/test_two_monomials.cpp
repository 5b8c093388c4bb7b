#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>

#include "faclab/factorial_functional.hpp"
#include "faclab/two_monomials.hpp"
#include "oracles.hpp"

using namespace faclab;

namespace {

UniPoly oracle_family(const ExponentPair& p, unsigned n) {
  std::vector<GaussianRational> c;
  for (const auto& q : oracle::two_monomial_family(p.a1(), p.a2(), p.b1(), p.b2(), n)) c.emplace_back(q);
  return UniPoly(c);
}

std::vector<mpq_class> rational_coeffs(const UniPoly& p) {
  std::vector<mpq_class> out;
  for (const auto& c : p.coeffs()) out.push_back(c.re());
  return out;
}

MultiPoly nx(long c, unsigned dn, unsigned dx) { return MultiPoly::monomial({dn, dx}, GaussianRational(c)); }

}  // namespace

TEST_CASE("exponent pairs") {
  const ExponentPair p(3, 0, 1, 2);
  CHECK(p.c1() == 2);
  CHECK(p.c2() == -2);
  CHECK(p.swapped() == ExponentPair(0, 3, 2, 1));
  CHECK(p.canonical() == p.swapped().canonical());
  CHECK(p.to_string() == "a=(3,0) b=(1,2)");
  CHECK_THROWS_AS(ExponentPair(1, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("P_{a,b,n} matches the defining sum") {
  for (unsigned a1 = 0; a1 <= 2; ++a1)
    for (unsigned a2 = 0; a2 <= 2; ++a2)
      for (unsigned b1 = 0; b1 <= 2; ++b1)
        for (unsigned b2 = 0; b2 <= 2; ++b2) {
          if (a1 == b1 && a2 == b2) continue;
          const ExponentPair p(a1, a2, b1, b2);
          for (unsigned n = 0; n <= 6; ++n) CHECK(pab_poly(p, n) == oracle_family(p, n));
        }
  // Constant term (b1 n)! (b2 n)! / n!.
  CHECK(pab_poly(ExponentPair(1, 1, 0, 0), 4).coefficient(0) == GaussianRational::fraction(1, 24));
  CHECK(pab_poly(ExponentPair(1, 1, 0, 0), 0) == UniPoly::constant(1));
}

TEST_CASE("L of a two-term power reduces to P_{a,b,n}") {
  oracle::ScalarSource src(51);
  for (int s = 0; s < 80; ++s) {
    unsigned a1 = src.uniform(0, 3), a2 = src.uniform(0, 3), b1 = src.uniform(0, 3), b2 = src.uniform(0, 3);
    if (a1 == b1 && a2 == b2) ++a1;
    const ExponentPair p(a1, a2, b1, b2);
    const auto mu1 = src.nonzero(), mu2 = src.nonzero();
    const unsigned n = src.uniform(1, 5);
    CHECK(check_two_monomial_reduction(p, mu1, mu2, n));
    const std::vector<oracle::Term> terms{{{a1, a2}, mu1}, {{b1, b2}, mu2}};
    CHECK(factorial_map_power(two_monomial_poly(p, mu1, mu2), n) == oracle::factorial_map_power(terms, n));
  }
  CHECK_THROWS_AS(check_two_monomial_reduction(ExponentPair(1, 0, 0, 1), 0, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(check_two_monomial_reduction(ExponentPair(1, 0, 0, 1), 1, 1, 0), std::invalid_argument);
}

TEST_CASE("consecutive gcd agrees with the resultant oracle") {
  for (const auto& p : rpc_pairs(2)) {
    for (unsigned n = 0; n <= 6; ++n) {
      const auto pn = rational_coeffs(pab_poly(p, n)), pn1 = rational_coeffs(pab_poly(p, n + 1));
      const bool coprime = oracle::resultant(pn, pn1) != 0;
      CHECK_MESSAGE((common_zero_degree(p, n) == 0) == coprime, p.to_string() << " n=" << n);
    }
  }
  const UniPoly x = UniPoly::x();
  CHECK(linear_root(UniPoly({2, 4})) == GaussianRational::fraction(-1, 2));
  CHECK_FALSE(linear_root(x * x).has_value());
}

TEST_CASE("RPC pairs are one per swap class") {
  const auto pairs = rpc_pairs(3);
  std::set<ExponentPair> classes;
  unsigned brute = 0;
  for (unsigned a1 = 0; a1 <= 3; ++a1)
    for (unsigned a2 = 0; a2 <= 3; ++a2)
      for (unsigned b1 = 0; b1 <= 3; ++b1)
        for (unsigned b2 = 0; b2 <= 3; ++b2)
          if (a1 != b1 || a2 != b2) {
            ++brute;
            classes.insert(ExponentPair(a1, a2, b1, b2).canonical());
          }
  CHECK(brute == 240);
  CHECK(pairs.size() == classes.size());
  CHECK(std::is_sorted(pairs.begin(), pairs.end()));
  for (const auto& p : pairs) CHECK(p == p.canonical());
}

TEST_CASE("RPC desk-scale scan has no findings") {
  const RpcReport report = rpc_scan(2, 8, 4);
  CHECK(report.pairs_scanned == rpc_pairs(2).size());
  CHECK(report.findings.empty());
  CHECK(report.max_degree == 0);
  const auto single = rpc_scan_pair(ExponentPair(1, 0, 0, 1), 5);
  CHECK(single.degrees.size() == 6);
}

TEST_CASE("two-monomial difference identities") {
  for (int which : {1, 2})
    for (unsigned a = 0; a <= 4; ++a) CHECK(verify_difference_identity(a, 10, which));
  // Case 1 at a = 2, n = 1 spelled out with the oracle family.
  const ExponentPair p(2, 0, 0, 1);
  const UniPoly diff = oracle_family(p, 2) - oracle_family(p, 1);
  CHECK(diff == UniPoly::monomial(GaussianRational(12), 2));
  CHECK_THROWS(difference_identity_residual(1, 1, 3));
}

TEST_CASE("recurrence normalization and proportionality") {
  const Recurrence r{{nx(2, 0, 1), nx(-4, 1, 1) + nx(6, 0, 1), nx(2, 0, 0)}};
  const Recurrence n = normalize(r);
  CHECK(n.coeffs[0] == nx(1, 0, 1));
  CHECK(n.coeffs[2] == nx(1, 0, 0));
  CHECK(proportional(r, n));
  const Recurrence neg{{nx(-3, 0, 1), nx(6, 1, 1) - nx(9, 0, 1), nx(-3, 0, 0)}};
  CHECK(normalize(neg).coeffs == n.coeffs);
  CHECK_FALSE(proportional(r, printed_recurrence_unit_pair()));
}

TEST_CASE("printed recurrences leave a nonzero constant residual") {
  // At X = 0 every X-multiple vanishes, so the residual's constant term is
  // the constant term of the last shifted family member.
  const ExponentPair unit(1, 1, 0, 0), cubic(3, 0, 0, 0);
  const PolyFamily unit_family = [&](unsigned n) { return pab_poly(unit, n); };
  const PolyFamily cubic_family = [&](unsigned n) { return pab_poly(cubic, n); };
  for (unsigned n = 0; n <= 10; ++n) {
    const UniPoly r1 = apply_recurrence(printed_recurrence_unit_pair(), unit_family, n);
    CHECK(r1 == UniPoly::constant(GaussianRational(mpq_class(1, oracle::fact(n + 2)))));
    const UniPoly r2 = apply_recurrence(printed_recurrence_cubic_pair(), cubic_family, n);
    CHECK(r2 == UniPoly::constant(GaussianRational(mpq_class(-1, oracle::fact(n + 3)))));
  }
}

TEST_CASE("recurrence discovery") {
  DiscoveryOptions o2;
  o2.order = 2;
  o2.deg_n = 1;
  o2.deg_x = 1;
  CHECK_FALSE(discover_recurrence(ExponentPair(1, 1, 0, 0), o2).has_value());

  DiscoveryOptions o3;
  o3.order = 3;
  o3.deg_n = 2;
  o3.deg_x = 1;
  const auto found = discover_recurrence(ExponentPair(1, 1, 0, 0), o3);
  REQUIRE(found.has_value());
  const Recurrence expected{{nx(-1, 0, 1), nx(2, 1, 1) + nx(5, 0, 1),
                             nx(-1, 2, 1) - nx(6, 1, 1) - nx(9, 0, 1) - nx(1, 0, 0), nx(1, 1, 0) + nx(3, 0, 0)}};
  CHECK(proportional(found->recurrence, expected));
  CHECK(found->nullspace_dim == 1);
  const PolyFamily family = [](unsigned n) { return pab_poly(ExponentPair(1, 1, 0, 0), n); };
  for (unsigned n = 0; n <= 30; ++n) CHECK(apply_recurrence(found->recurrence, family, n).is_zero());

  // The three-term P_n recurrence is recovered from its family.
  DiscoveryOptions p;
  p.order = 2;
  p.deg_n = 2;
  p.deg_x = 2;
  const auto p31 = discover_recurrence(PolyFamily([](unsigned n) {
                                         std::vector<GaussianRational> c;
                                         for (unsigned k = 0; 2 * k <= n; ++k)
                                           c.emplace_back(mpz_class(oracle::fact(2 * n - k) /
                                                          (oracle::fact(n - 2 * k) * oracle::fact(k))));
                                         return UniPoly(c);
                                       }),
                                       p);
  REQUIRE(p31.has_value());
  CHECK(p31->recurrence.order() == 2);

  DiscoveryOptions tight = o2;
  tight.fit_samples = 1;
  CHECK_THROWS_AS(discover_recurrence(ExponentPair(1, 1, 0, 0), tight), UnderdeterminedSystem);
}
