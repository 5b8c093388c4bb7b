#include "faclab/two_monomials.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "faclab/factorial_functional.hpp"
#include "faclab/factorials.hpp"
#include "faclab/nullspace.hpp"
#include "faclab/parallel.hpp"

namespace faclab {

namespace {

// (n, X) variable indices inside recurrence coefficients.
constexpr std::size_t kVarN = 0;
constexpr std::size_t kVarX = 1;

MultiPoly nx_monomial(unsigned pn, unsigned px, long c) { return MultiPoly::monomial({pn, px}, GaussianRational(c)); }

MultiPoly nx_linear(long cn, long c) { return nx_monomial(1, 0, cn) + nx_monomial(0, 0, c); }

}  // namespace

ExponentPair::ExponentPair(unsigned a1, unsigned a2, unsigned b1, unsigned b2) : a1_(a1), a2_(a2), b1_(b1), b2_(b2) {
  if (a1 == b1 && a2 == b2) throw std::invalid_argument("ExponentPair: a and b must be distinct");
}

ExponentPair ExponentPair::canonical() const { return std::min(*this, swapped()); }

std::string ExponentPair::to_string() const {
  std::ostringstream os;
  os << "a=(" << a1_ << "," << a2_ << ") b=(" << b1_ << "," << b2_ << ")";
  return os.str();
}

UniPoly pab_poly(const ExponentPair& pair, unsigned n) {
  std::vector<GaussianRational> coeffs(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    // b_i n + c_i k = a_i k + b_i (n - k) >= 0.
    const unsigned e1 = pair.a1() * k + pair.b1() * (n - k);
    const unsigned e2 = pair.a2() * k + pair.b2() * (n - k);
    mpq_class c(mpz_class(factorial(e1) * factorial(e2)), mpz_class(factorial(k) * factorial(n - k)));
    c.canonicalize();
    coeffs[k] = GaussianRational(c);
  }
  return UniPoly(std::move(coeffs));
}

MultiPoly two_monomial_poly(const ExponentPair& pair, const GaussianRational& mu1, const GaussianRational& mu2) {
  MultiPoly f(2);
  f.add_term({pair.a1(), pair.a2()}, mu1);
  f.add_term({pair.b1(), pair.b2()}, mu2);
  return f;
}

bool check_two_monomial_reduction(const ExponentPair& pair, const GaussianRational& mu1, const GaussianRational& mu2, unsigned n) {
  if (mu1.is_zero() || mu2.is_zero()) throw std::invalid_argument("check_two_monomial_reduction: mu1 and mu2 must be nonzero");
  if (n == 0) throw std::invalid_argument("check_two_monomial_reduction: n must be >= 1");
  const GaussianRational lhs = factorial_map_power(two_monomial_poly(pair, mu1, mu2), n);
  const GaussianRational rhs = GaussianRational(factorial(n)) * pow(mu2, n) * pab_poly(pair, n)(mu1 / mu2);
  return lhs == rhs;
}

UniPoly consecutive_gcd(const ExponentPair& pair, unsigned n) { return gcd(pab_poly(pair, n), pab_poly(pair, n + 1)); }

int common_zero_degree(const ExponentPair& pair, unsigned n) { return consecutive_gcd(pair, n).degree(); }

std::optional<GaussianRational> linear_root(const UniPoly& g) {
  if (g.degree() != 1) return std::nullopt;
  return -g.coefficient(0) / g.coefficient(1);
}

std::vector<ExponentPair> rpc_pairs(unsigned max_exp) {
  std::set<ExponentPair> seen;
  for (unsigned a1 = 0; a1 <= max_exp; ++a1)
    for (unsigned a2 = 0; a2 <= max_exp; ++a2)
      for (unsigned b1 = 0; b1 <= max_exp; ++b1)
        for (unsigned b2 = 0; b2 <= max_exp; ++b2) {
          if (a1 == b1 && a2 == b2) continue;
          seen.insert(ExponentPair(a1, a2, b1, b2).canonical());
        }
  return {seen.begin(), seen.end()};
}

RpcPairResult rpc_scan_pair(const ExponentPair& pair, unsigned n_max) {
  RpcPairResult result{pair, {}, {}};
  UniPoly current = pab_poly(pair, 0);
  for (unsigned n = 0; n <= n_max; ++n) {
    UniPoly next = pab_poly(pair, n + 1);
    UniPoly g = gcd(current, next);
    result.degrees.push_back(g.degree());
    if (g.degree() > 0) result.findings.push_back({pair, n, g});
    current = std::move(next);
  }
  return result;
}

RpcReport rpc_scan(unsigned max_exp, unsigned n_max, unsigned threads) {
  const auto pairs = rpc_pairs(max_exp);
  const auto results =
      parallel_map(pairs.size(), threads, [&](std::size_t i) { return rpc_scan_pair(pairs[i], n_max); });
  RpcReport report;
  report.pairs_scanned = results.size();
  for (const auto& r : results) {
    for (int d : r.degrees) report.max_degree = std::max(report.max_degree, d);
    report.findings.insert(report.findings.end(), r.findings.begin(), r.findings.end());
  }
  return report;
}

UniPoly difference_identity_residual(unsigned a_param, unsigned n, int which_case) {
  const mpz_class step = factorial(a_param * (n + 1));
  if (which_case == 1) {
    const ExponentPair pair(a_param, 0, 0, 1);
    mpq_class c(step, factorial(n + 1));
    c.canonicalize();
    return pab_poly(pair, n + 1) - pab_poly(pair, n) - UniPoly::monomial(GaussianRational(c), n + 1);
  }
  if (which_case == 2) {
    const ExponentPair pair(a_param, 0, a_param, 1);
    const mpz_class base = factorial(a_param * n);
    mpq_class c(mpz_class(base * step), factorial(n + 1));
    c.canonicalize();
    return GaussianRational(base) * pab_poly(pair, n + 1) - GaussianRational(step) * pab_poly(pair, n) -
           UniPoly::monomial(GaussianRational(c), n + 1);
  }
  throw std::invalid_argument("difference_identity_residual: case must be 1 or 2");
}

bool verify_difference_identity(unsigned a_param, unsigned n_max, int which_case) {
  for (unsigned n = 0; n <= n_max; ++n) {
    if (!difference_identity_residual(a_param, n, which_case).is_zero()) return false;
  }
  return true;
}

UniPoly apply_recurrence(const Recurrence& rec, const PolyFamily& family, unsigned n) {
  UniPoly total;
  const std::vector<GaussianRational> point{GaussianRational(static_cast<long>(n)), GaussianRational()};
  for (std::size_t t = 0; t < rec.coeffs.size(); ++t) {
    if (rec.coeffs[t].is_zero()) continue;
    total += restrict_to_variable(rec.coeffs[t], kVarX, point) * family(n + static_cast<unsigned>(t));
  }
  return total;
}

Recurrence normalize(const Recurrence& rec) {
  const MultiPoly* first = nullptr;
  bool real = true;
  for (const auto& c : rec.coeffs) {
    if (!first && !c.is_zero()) first = &c;
    for (const auto& [e, v] : c.terms()) real = real && v.is_real();
  }
  if (!first) throw std::invalid_argument("normalize: all recurrence coefficients are zero");

  GaussianRational scale;
  if (real) {
    mpz_class den_lcm(1);
    mpz_class num_gcd(0);
    for (const auto& c : rec.coeffs) {
      for (const auto& [e, v] : c.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.re().get_den_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.re().get_num_mpz_t());
      }
    }
    // v * lcm / gcd is an integer; the gcd of the scaled numerators is 1.
    scale = GaussianRational(mpq_class(den_lcm, num_gcd));
    if (sgn(first->terms().rbegin()->second.re()) < 0) scale = -scale;
  } else {
    scale = GaussianRational(1) / first->terms().rbegin()->second;
  }
  Recurrence out;
  for (const auto& c : rec.coeffs) out.coeffs.push_back(c * scale);
  return out;
}

bool proportional(const Recurrence& rec1, const Recurrence& rec2) {
  if (rec1.coeffs.size() != rec2.coeffs.size()) return false;
  for (std::size_t t = 0; t < rec1.coeffs.size(); ++t) {
    if (rec1.coeffs[t].is_zero() != rec2.coeffs[t].is_zero()) return false;
    if (rec1.coeffs[t].is_zero()) continue;
    const auto& [e1, v1] = *rec1.coeffs[t].terms().rbegin();
    const GaussianRational ratio = rec2.coeffs[t].coefficient(e1) / v1;
    if (ratio.is_zero()) return false;
    for (std::size_t s = 0; s < rec1.coeffs.size(); ++s) {
      if (rec1.coeffs[s] * ratio != rec2.coeffs[s]) return false;
    }
    return true;
  }
  return true;
}

Recurrence printed_recurrence_unit_pair() {
  return Recurrence{{nx_monomial(0, 1, 1), nx_linear(-1, -2) * nx_monomial(0, 1, 1), nx_monomial(0, 0, 1)}};
}

Recurrence printed_recurrence_cubic_pair() {
  const MultiPoly x = nx_monomial(0, 1, 1);
  return Recurrence{{nx_monomial(0, 1, 27), nx_linear(-54, -108) * x,
                     nx_linear(3, 8) * nx_linear(3, 7) * nx_monomial(0, 1, 3), nx_monomial(0, 0, -1)}};
}

namespace {

struct Ansatz {
  unsigned order, deg_n, deg_x;

  std::size_t unknowns() const { return static_cast<std::size_t>(order + 1) * (deg_n + 1) * (deg_x + 1); }
  std::size_t index(unsigned t, unsigned i, unsigned j) const {
    return (static_cast<std::size_t>(t) * (deg_n + 1) + i) * (deg_x + 1) + j;
  }
};

// Scalar equations contributed by one sample n: one per power of X.
void append_equations(const Ansatz& ansatz, const PolyFamily& family, unsigned n, RationalMatrix& rows) {
  std::vector<UniPoly> polys;
  int max_deg = -1;
  for (unsigned t = 0; t <= ansatz.order; ++t) {
    polys.push_back(family(n + t));
    max_deg = std::max(max_deg, polys.back().degree());
  }
  const std::size_t first_row = rows.size();
  const std::size_t row_count = static_cast<std::size_t>(max_deg + 1) + ansatz.deg_x;
  rows.resize(first_row + row_count, std::vector<mpq_class>(ansatz.unknowns(), mpq_class(0)));
  std::vector<mpq_class> n_pow(ansatz.deg_n + 1, mpq_class(1));
  for (unsigned i = 1; i <= ansatz.deg_n; ++i) n_pow[i] = n_pow[i - 1] * n;
  for (unsigned t = 0; t <= ansatz.order; ++t) {
    const auto& coeffs = polys[t].coeffs();
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
      if (!coeffs[d].is_real()) throw std::invalid_argument("discover_recurrence: family has non-real coefficients");
      for (unsigned i = 0; i <= ansatz.deg_n; ++i)
        for (unsigned j = 0; j <= ansatz.deg_x; ++j) rows[first_row + d + j][ansatz.index(t, i, j)] += n_pow[i] * coeffs[d].re();
    }
  }
}

Recurrence to_recurrence(const Ansatz& ansatz, const std::vector<mpq_class>& v) {
  Recurrence rec;
  for (unsigned t = 0; t <= ansatz.order; ++t) {
    MultiPoly c(2);
    for (unsigned i = 0; i <= ansatz.deg_n; ++i)
      for (unsigned j = 0; j <= ansatz.deg_x; ++j) c.add_term({i, j}, GaussianRational(v[ansatz.index(t, i, j)]));
    rec.coeffs.push_back(std::move(c));
  }
  return rec;
}

}  // namespace

std::optional<DiscoveredRecurrence> discover_recurrence(const PolyFamily& family, const DiscoveryOptions& options) {
  if (options.order == 0) throw std::invalid_argument("discover_recurrence: order must be >= 1");
  const Ansatz ansatz{options.order, options.deg_n, options.deg_x};
  const std::size_t required = ansatz.unknowns() + 5;
  const unsigned n0 = std::max(2U, options.deg_n + 1);

  RationalMatrix rows;
  unsigned next_n = n0;
  if (options.fit_samples) {
    for (unsigned s = 0; s < *options.fit_samples; ++s) append_equations(ansatz, family, next_n++, rows);
    if (rows.size() < required) {
      throw UnderdeterminedSystem("discover_recurrence: " + std::to_string(rows.size()) + " equations from " +
                                  std::to_string(*options.fit_samples) + " samples, need at least " +
                                  std::to_string(required));
    }
  } else {
    while (rows.size() < required || next_n - n0 < options.deg_n + 2) append_equations(ansatz, family, next_n++, rows);
  }

  constexpr int kMaxRefits = 3;
  for (int attempt = 0; attempt <= kMaxRefits; ++attempt) {
    const auto basis = nullspace(rows, ansatz.unknowns());
    if (basis.empty()) return std::nullopt;

    DiscoveredRecurrence found;
    found.recurrence = normalize(to_recurrence(ansatz, basis.front()));
    found.nullspace_dim = basis.size();
    found.fit_first = n0;
    found.fit_last = next_n - 1;
    found.verified_first = next_n;
    found.verified_last = next_n + options.verify_count - 1;

    bool ok = true;
    for (unsigned n = found.verified_first; n <= found.verified_last && ok; ++n) {
      ok = apply_recurrence(found.recurrence, family, n).is_zero();
    }
    if (ok) return found;
    // The fit was fooled by too few samples: absorb the verification range.
    for (unsigned n = found.verified_first; n <= found.verified_last; ++n) append_equations(ansatz, family, next_n++, rows);
  }
  return std::nullopt;
}

std::optional<DiscoveredRecurrence> discover_recurrence(const ExponentPair& pair, const DiscoveryOptions& options) {
  return discover_recurrence([&pair](unsigned n) { return pab_poly(pair, n); }, options);
}

}  // namespace faclab
