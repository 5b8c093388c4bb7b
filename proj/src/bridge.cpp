#include "faclab/bridge.hpp"

#include <stdexcept>

#include "faclab/factorial_functional.hpp"
#include "faclab/factorials.hpp"
#include "faclab/inversion.hpp"
#include "faclab/parallel.hpp"

namespace faclab {

namespace {

GaussianRational integer(long v) { return GaussianRational(v); }

bool all_zero(std::span<const GaussianRational> values) {
  for (const auto& v : values) {
    if (!v.is_zero()) return false;
  }
  return true;
}

}  // namespace

bool EFamilyElement::is_full() const {
  for (const auto& v : mu) {
    if (v.is_zero()) return false;
  }
  return true;
}

MultiPoly expand_e(const EFamilyElement& el) {
  const std::size_t m = el.m();
  if (m == 0) throw std::invalid_argument("expand_e: m must be >= 1");
  MultiPoly f(m);
  for (std::size_t i = 0; i < m; ++i) {
    ExponentVector e(m, 1);
    e[i] = 2;
    f.add_term(e, el.mu[i]);
  }
  return f;
}

bool check_bridge_identity(const EFamilyElement& el, unsigned n) {
  if (n == 0) throw std::invalid_argument("check_bridge_identity: n must be >= 1");
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), factorial(n).get_mpz_t(), el.m() + 1);
  const GaussianRational lhs = GaussianRational(scale) * mif_u(el.mu, n);
  return lhs == factorial_map_power(expand_e(el), n);
}

ReducedElement reduce_hat(const EFamilyElement& el) {
  ReducedElement r;
  for (std::size_t i = 0; i < el.m(); ++i) {
    if (el.mu[i].is_zero()) continue;
    r.mu_hat.push_back(el.mu[i]);
    r.sigma.push_back(i);
  }
  if (r.mu_hat.empty()) throw std::invalid_argument("reduce_hat: all mu are zero");
  r.m_prime = r.mu_hat.size();
  return r;
}

MultiPoly expand_hat(const ReducedElement& reduced) { return expand_e(EFamilyElement{reduced.mu_hat}); }

UniPoly p31_poly(unsigned n) {
  std::vector<GaussianRational> coeffs(n / 2 + 1);
  for (unsigned k = 0; 2 * k <= n; ++k) {
    mpz_class c = factorial(2 * n - k);
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), factorial(n - 2 * k).get_mpz_t());
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), factorial(k).get_mpz_t());
    coeffs[k] = GaussianRational(c);
  }
  return UniPoly(std::move(coeffs));
}

UniPoly p31_recurrence_residual(const std::function<UniPoly(unsigned)>& family, unsigned n) {
  const long ln = n;
  UniPoly c0 = UniPoly::monomial(integer(-3 * (3 * ln + 4) * (3 * ln + 2)), 2);
  UniPoly c1 = UniPoly(std::vector<GaussianRational>{integer(2), integer(9)}) * integer(-(2 * ln + 3));
  UniPoly c2 = UniPoly(std::vector<GaussianRational>{integer(1), integer(4)});
  return c0 * family(n) + c1 * family(n + 1) + c2 * family(n + 2);
}

bool verify_p31_recurrence(unsigned n_max) {
  for (unsigned n = 0; n <= n_max; ++n) {
    if (!p31_recurrence_residual(p31_poly, n).is_zero()) return false;
  }
  return true;
}

MultiPoly certificate_expression() {
  // Variables: n = X1, k = X2.
  auto lin = [](long cn, long ck, long c) {
    MultiPoly p = MultiPoly::variable(2, 0) * integer(cn) + MultiPoly::variable(2, 1) * integer(ck);
    return p + MultiPoly::constant(2, integer(c));
  };
  auto scalar = [](long c) { return MultiPoly::constant(2, integer(c)); };
  const MultiPoly k = lin(0, 1, 0);

  MultiPoly t1 = scalar(-3) * lin(3, 0, 1) * lin(3, 0, -1) * k * lin(0, 1, -1);
  MultiPoly t2 = scalar(-9) * lin(2, 0, 1) * lin(2, -1, 1) * lin(1, -2, 3) * k;
  MultiPoly t3 = scalar(-2) * lin(2, 0, 1) * lin(1, -2, 3) * lin(1, -2, 2) * lin(1, -2, 1);
  MultiPoly t4 = scalar(4) * lin(2, -1, 3) * lin(2, -1, 2) * lin(2, -1, 1) * k;
  MultiPoly t5 = lin(2, -1, 1) * lin(1, -2, 3) * lin(1, -2, 2) * lin(2, -1, 2);
  return t1 + t2 + t3 + t4 + t5;
}

bool verify_certificate_identity() { return certificate_expression().is_zero(); }

GaussianRational furter_residual(const GaussianRational& mu1, const GaussianRational& mu2, unsigned n) {
  if (n < 2) throw std::invalid_argument("furter_residual: n must be >= 2");
  const std::vector<GaussianRational> mu{mu1, mu2};
  const long ln = n;
  const GaussianRational d = mu1 - mu2;
  const GaussianRational two(2);
  GaussianRational t0 = integer(ln * (ln - 1)) * d * d * mif_u(mu, n);
  GaussianRational t1 = integer((ln - 1) * (2 * ln - 1)) * (mu1 + mu2) * (mu1 - two * mu2) * (mu2 - two * mu1) *
                        mif_u(mu, n - 1);
  GaussianRational t2 = integer(3 * (3 * ln - 4) * (3 * ln - 2)) * mu1 * mu1 * mu2 * mu2 * mif_u(mu, n - 2);
  return t0 + t1 - t2;
}

bool verify_furter_recurrence(const GaussianRational& mu1, const GaussianRational& mu2, unsigned n_max) {
  for (unsigned n = 2; n <= n_max; ++n) {
    if (!furter_residual(mu1, mu2, n).is_zero()) return false;
  }
  return true;
}

UniPoly hypergeometric_2f1(unsigned n) {
  const mpq_class a = mpq_class(1 - static_cast<long>(n)) / 2;
  const mpq_class b = mpq_class(-static_cast<long>(n)) / 2;
  const mpq_class c(-2 * static_cast<long>(n));
  std::vector<GaussianRational> coeffs;
  mpq_class z_pow(1);
  for (unsigned k = 0; 2 * k <= n; ++k) {
    mpq_class term = pochhammer(a, k) * pochhammer(b, k) / (pochhammer(c, k) * mpq_class(factorial(k)));
    coeffs.emplace_back(mpq_class(term * z_pow));
    z_pow *= -4;
  }
  return UniPoly(std::move(coeffs));
}

bool verify_hypergeometric_form(unsigned n_max) {
  for (unsigned n = 1; n <= n_max; ++n) {
    const UniPoly p = p31_poly(n);
    if (p != p.coefficient(0) * hypergeometric_2f1(n)) return false;
  }
  return true;
}

BridgePoint bridge_probe_point(const EFamilyElement& el, unsigned n) {
  if (n == 0) throw std::invalid_argument("bridge_probe_point: n must be >= 1");
  BridgePoint p;
  p.mu = el.mu;
  PowerCache cache(expand_e(el));
  for (unsigned k = n; k < n + el.m(); ++k) {
    p.u_window.push_back(mif_u(el.mu, k));
    p.l_window.push_back(factorial_map(cache.power(k)));
  }
  p.u_vanishes = all_zero(p.u_window);
  p.l_vanishes = all_zero(p.l_window);
  const bool mu_zero = all_zero(el.mu);
  if (p.u_vanishes != p.l_vanishes) {
    p.violation = "u window and L window disagree on vanishing";
  } else if (!mu_zero && p.u_vanishes) {
    p.violation = "both windows vanish for nonzero mu";
  }
  return p;
}

BridgeProbeReport bridge_equivalence_probe(unsigned m, std::span<const GaussianRational> grid, unsigned n,
                                           unsigned threads) {
  const auto tuples = grid_tuples(m, grid, true);
  auto points = parallel_map(tuples.size(), threads,
                             [&](std::size_t i) { return bridge_probe_point(EFamilyElement{tuples[i]}, n); });
  BridgeProbeReport report;
  report.points = points.size();
  for (auto& p : points) {
    if (p.violation) report.violations.push_back(std::move(p));
  }
  return report;
}

}  // namespace faclab
