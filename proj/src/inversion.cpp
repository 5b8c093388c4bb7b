#include "faclab/inversion.hpp"

#include <functional>
#include <string>

#include "faclab/factorials.hpp"
#include "faclab/parallel.hpp"

namespace faclab {

namespace {

void require_order(const UniSeries& s, std::size_t order, const char* what) {
  if (s.order() < order) {
    throw InsufficientOrder(std::string(what) + ": series known to order " + std::to_string(s.order()) +
                            ", need " + std::to_string(order));
  }
}

void require_normalized(const UniSeries& a, const char* what) {
  if (!a.is_normalized()) throw NotNormalized(std::string(what) + ": series is not X mod X^2");
}

GaussianRational power_product(std::span<const GaussianRational> base, std::span<const unsigned> exps) {
  GaussianRational p(1);
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (exps[i] != 0) p *= pow(base[i], exps[i]);
  }
  return p;
}

}  // namespace

UniSeries::UniSeries(std::size_t order) : coeffs_(order + 1) {}

UniSeries::UniSeries(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("UniSeries: empty coefficient list");
}

UniSeries UniSeries::from_poly(const UniPoly& p, std::size_t order) {
  UniSeries s(order);
  for (std::size_t i = 0; i <= order; ++i) s.coeffs_[i] = p.coefficient(i);
  return s;
}

UniSeries UniSeries::identity(std::size_t order) {
  UniSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

bool UniSeries::is_normalized() const { return order() >= 1 && coeffs_[0].is_zero() && coeffs_[1].is_one(); }

UniSeries UniSeries::truncated(std::size_t order) const {
  require_order(*this, order, "truncated");
  return UniSeries(std::vector<GaussianRational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

UniSeries series_mul(const UniSeries& a, const UniSeries& b, std::size_t order) {
  require_order(a, order, "series_mul");
  require_order(b, order, "series_mul");
  UniSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

UniSeries series_reciprocal(const UniSeries& a, std::size_t order) {
  require_order(a, order, "series_reciprocal");
  if (a[0].is_zero()) throw std::domain_error("series_reciprocal: constant term is zero");
  const GaussianRational inv0 = GaussianRational(1) / a[0];
  UniSeries r(order);
  r[0] = inv0;
  for (std::size_t k = 1; k <= order; ++k) {
    GaussianRational acc;
    for (std::size_t j = 1; j <= k; ++j) {
      if (!a[j].is_zero()) acc += a[j] * r[k - j];
    }
    r[k] = -acc * inv0;
  }
  return r;
}

UniSeries series_pow(const UniSeries& a, unsigned k, std::size_t order) {
  UniSeries result = UniSeries::from_poly(UniPoly::constant(GaussianRational(1)), order);
  UniSeries square = a.truncated(order);
  while (k != 0) {
    if (k & 1U) result = series_mul(result, square, order);
    k >>= 1U;
    if (k != 0) square = series_mul(square, square, order);
  }
  return result;
}

UniSeries series_compose(const UniSeries& a, const UniSeries& b, std::size_t order) {
  if (!b[0].is_zero()) throw std::invalid_argument("series_compose: inner series has nonzero constant term");
  require_order(a, order, "series_compose");
  require_order(b, order, "series_compose");
  UniSeries acc(order);
  for (std::size_t i = order + 1; i-- > 0;) {
    acc = series_mul(acc, b, order);
    acc[0] += a[i];
  }
  return acc;
}

UniSeries series_inverse(const UniSeries& a, std::size_t order) {
  require_normalized(a, "series_inverse");
  require_order(a, order, "series_inverse");
  UniSeries b(order);
  if (order == 0) return b;
  b[1] = 1;
  // powers[i][k] = [X^k] b^i, filled one degree k at a time; [X^k] b^i only
  // involves b_1..b_{k-i+1}.
  std::vector<std::vector<GaussianRational>> powers(order + 1, std::vector<GaussianRational>(order + 1));
  powers[1][1] = 1;
  for (std::size_t k = 2; k <= order; ++k) {
    GaussianRational acc;
    for (std::size_t i = 2; i <= k; ++i) {
      GaussianRational p;
      for (std::size_t j = 1; j + i - 1 <= k; ++j) {
        if (!b[j].is_zero() && !powers[i - 1][k - j].is_zero()) p += b[j] * powers[i - 1][k - j];
      }
      powers[i][k] = p;
      if (!a[i].is_zero()) acc += a[i] * p;
    }
    b[k] = -acc;
    powers[1][k] = b[k];
  }
  return b;
}

GaussianRational lagrange_u(const UniSeries& a, std::size_t n) {
  require_normalized(a, "lagrange_u");
  require_order(a, n + 1, "lagrange_u");
  UniSeries h(n);
  for (std::size_t i = 0; i <= n; ++i) h[i] = a[i + 1];
  const UniSeries p = series_pow(series_reciprocal(h, n), static_cast<unsigned>(n + 1), n);
  return p[n];
}

GaussianRational aif_u(std::span<const GaussianRational> alpha, std::size_t n) {
  const std::size_t m = alpha.size();
  if (n == 0) return GaussianRational(1);
  if (m == 0) return GaussianRational();
  std::vector<unsigned> j(m, 0);
  GaussianRational sum;
  // j_m is chosen first; j_1 absorbs the remaining weight.
  std::function<void(std::size_t, std::size_t, std::size_t)> visit = [&](std::size_t idx, std::size_t remaining,
                                                                          std::size_t parts) {
    const std::size_t weight = idx + 1;
    if (idx == 0) {
      if (remaining != 0 && alpha[0].is_zero()) return;
      j[0] = static_cast<unsigned>(remaining);
      const std::size_t total = parts + remaining;
      mpz_class coeff = factorial(n + total);
      for (unsigned ji : j) mpz_divexact(coeff.get_mpz_t(), coeff.get_mpz_t(), factorial(ji).get_mpz_t());
      sum += GaussianRational(coeff) * power_product(alpha, j);
      return;
    }
    const std::size_t max_j = alpha[idx].is_zero() ? 0 : remaining / weight;
    for (std::size_t v = 0; v <= max_j; ++v) {
      j[idx] = static_cast<unsigned>(v);
      visit(idx - 1, remaining - v * weight, parts + v);
    }
    j[idx] = 0;
  };
  visit(m - 1, n, 0);
  return sum / GaussianRational(factorial(n));
}

GaussianRational mif_u(std::span<const GaussianRational> mu, std::size_t n) {
  const std::size_t m = mu.size();
  if (n == 0) return GaussianRational(1);
  if (m == 0) return GaussianRational();
  std::vector<unsigned> j(m, 0);
  GaussianRational sum;
  std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t idx, std::size_t remaining) {
    if (idx == 0) {
      if (remaining != 0 && mu[0].is_zero()) return;
      j[0] = static_cast<unsigned>(remaining);
      mpz_class coeff(1);
      for (unsigned ji : j) {
        mpz_class ratio;
        mpz_divexact(ratio.get_mpz_t(), factorial(n + ji).get_mpz_t(), factorial(ji).get_mpz_t());
        coeff *= ratio;
      }
      sum += GaussianRational(coeff) * power_product(mu, j);
      return;
    }
    const std::size_t max_j = mu[idx].is_zero() ? 0 : remaining;
    for (std::size_t v = 0; v <= max_j; ++v) {
      j[idx] = static_cast<unsigned>(v);
      visit(idx - 1, remaining - v);
    }
    j[idx] = 0;
  };
  visit(m - 1, n);
  mpz_class denom;
  mpz_pow_ui(denom.get_mpz_t(), factorial(n).get_mpz_t(), m);
  return sum / GaussianRational(denom);
}

UniSeries additive_series(std::span<const GaussianRational> alpha, std::size_t order) {
  UniSeries a = UniSeries::identity(order);
  for (std::size_t k = 0; k < alpha.size() && k + 2 <= order; ++k) a[k + 2] = -alpha[k];
  return a;
}

UniSeries multiplicative_series(std::span<const GaussianRational> mu, std::size_t order) {
  UniPoly p = UniPoly::x();
  for (const auto& m : mu) p *= UniPoly(std::vector<GaussianRational>{GaussianRational(1), -m});
  return UniSeries::from_poly(p, order);
}

std::vector<GaussianRational> u_from_inverse(const UniSeries& inverse) {
  std::vector<GaussianRational> u;
  for (std::size_t n = 1; n + 1 <= inverse.order(); ++n) {
    u.push_back(inverse[n + 1] * GaussianRational(static_cast<long>(n + 1)));
  }
  return u;
}

bool congruence_preserved(const UniSeries& a, const UniSeries& b, std::size_t n) {
  if (n < 2) throw std::invalid_argument("congruence_preserved: n must be >= 2");
  const UniSeries ia = series_inverse(a, n - 1);
  const UniSeries ib = series_inverse(b, n - 1);
  return ia == ib;
}

std::vector<std::vector<GaussianRational>> grid_tuples(unsigned m, std::span<const GaussianRational> grid,
                                                       bool include_zero) {
  std::vector<std::vector<GaussianRational>> out;
  if (m == 0 || grid.empty()) return out;
  std::vector<std::size_t> idx(m, 0);
  while (true) {
    std::vector<GaussianRational> tuple;
    bool all_zero = true;
    for (std::size_t i : idx) {
      tuple.push_back(grid[i]);
      all_zero = all_zero && grid[i].is_zero();
    }
    if (include_zero || !all_zero) out.push_back(std::move(tuple));
    std::size_t pos = m;
    while (pos > 0 && ++idx[pos - 1] == grid.size()) idx[--pos] = 0;
    if (pos == 0) break;
  }
  return out;
}

RigidityPoint rigidity_scan_point(std::span<const GaussianRational> alpha, unsigned n_max) {
  bool all_zero = true;
  for (const auto& a : alpha) all_zero = all_zero && a.is_zero();
  if (alpha.empty() || all_zero) throw std::invalid_argument("rigidity_scan_point: alpha must be nonzero");
  const std::size_t m = alpha.size();
  const std::size_t order = n_max + m;
  const UniSeries inverse = series_inverse(additive_series(alpha, order), order);

  RigidityPoint point;
  point.alpha.assign(alpha.begin(), alpha.end());
  point.inverse_coeffs.assign(inverse.coeffs().begin() + 1, inverse.coeffs().end());
  for (unsigned n = 1; n <= n_max; ++n) {
    bool vanishes = true;
    for (std::size_t d = n + 1; d <= n + m && vanishes; ++d) vanishes = inverse[d].is_zero();
    if (vanishes) point.zero_windows.push_back(n);
  }
  return point;
}

std::vector<RigidityFinding> rigidity_window_scan(unsigned m, std::span<const GaussianRational> grid,
                                                  unsigned n_max, unsigned threads) {
  const auto tuples = grid_tuples(m, grid, false);
  const auto points =
      parallel_map(tuples.size(), threads, [&](std::size_t i) { return rigidity_scan_point(tuples[i], n_max); });
  std::vector<RigidityFinding> findings;
  for (const auto& p : points) {
    for (unsigned n : p.zero_windows) findings.push_back({p.alpha, n});
  }
  return findings;
}

}  // namespace faclab
