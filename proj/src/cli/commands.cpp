#include "faclab/cli/commands.hpp"

#include <cstdlib>
#include <functional>
#include <memory>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "faclab/bridge.hpp"
#include "faclab/cli/expr.hpp"
#include "faclab/cli/scan_store.hpp"
#include "faclab/factorial_functional.hpp"
#include "faclab/factorials.hpp"
#include "faclab/inversion.hpp"
#include "faclab/parallel.hpp"
#include "faclab/two_monomials.hpp"

namespace faclab::cli {

using nlohmann::json;

namespace {

json to_json(std::span<const GaussianRational> values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.to_string());
  return arr;
}

std::string tuple_text(std::span<const GaussianRational> values) { return "(" + format_list(values) + ")"; }

std::unique_ptr<ScanStore> open_store(const std::string& path) {
  if (path.empty()) return nullptr;
  return std::make_unique<ScanStore>(path);
}

// ---------------------------------------------------------------- verify

SuiteCheck check_p31_recurrence() {
  SuiteCheck c{"three-term P_n recurrence, n=0..40", true, {}};
  for (unsigned n = 0; n <= 40 && c.passed; ++n) {
    const UniPoly r = p31_recurrence_residual(p31_poly, n);
    if (!r.is_zero()) c = {c.name, false, "n=" + std::to_string(n) + " residual " + format_unipoly(r)};
  }
  return c;
}

SuiteCheck check_certificate() {
  const MultiPoly e = certificate_expression();
  const std::vector<std::string> names{"n", "k"};
  return {"five-term certificate expands to zero in (n,k)", e.is_zero(), e.is_zero() ? "" : format_poly(e, names)};
}

std::vector<SuiteCheck> check_furter() {
  const std::vector<std::pair<GaussianRational, GaussianRational>> samples{
      {1, 1},
      {2, -3},
      {0, 0},
      {GaussianRational::fraction(1, 2), 3},
      {GaussianRational::fraction(-5, 7), GaussianRational::fraction(2, 3)},
      {GaussianRational(1, 1), 2},
  };
  std::vector<SuiteCheck> out;
  for (const auto& [mu1, mu2] : samples) {
    SuiteCheck c{"Furter recurrence mu=(" + mu1.to_string() + ", " + mu2.to_string() + "), n=2..20", true, {}};
    for (unsigned n = 2; n <= 20 && c.passed; ++n) {
      const GaussianRational r = furter_residual(mu1, mu2, n);
      if (!r.is_zero()) c = {c.name, false, "n=" + std::to_string(n) + " residual " + r.to_string()};
    }
    out.push_back(std::move(c));
  }
  return out;
}

SuiteCheck check_printed_recurrence(const std::string& label, const ExponentPair& pair, const Recurrence& rec) {
  SuiteCheck c{"printed recurrence for " + label + ", n=0..20", true, {}};
  const PolyFamily family = [&pair](unsigned n) { return pab_poly(pair, n); };
  for (unsigned n = 0; n <= 20 && c.passed; ++n) {
    const UniPoly r = apply_recurrence(rec, family, n);
    if (!r.is_zero()) c = {c.name, false, "n=" + std::to_string(n) + " residual " + format_unipoly(r)};
  }
  return c;
}

SuiteCheck check_hypergeometric() {
  SuiteCheck c{"P_n = P_n(0) * 2F1((1-n)/2, -n/2; -2n; -4X), n=1..20", true, {}};
  for (unsigned n = 1; n <= 20 && c.passed; ++n) {
    const UniPoly p = p31_poly(n);
    const UniPoly h = p.coefficient(0) * hypergeometric_2f1(n);
    if (p != h) c = {c.name, false, "n=" + std::to_string(n) + ": " + format_unipoly(p) + " vs " + format_unipoly(h)};
  }
  return c;
}

std::vector<SuiteCheck> check_difference_identities() {
  std::vector<SuiteCheck> out;
  for (int which : {1, 2}) {
    SuiteCheck c{"two-monomial difference identity, case " + std::to_string(which) + ", a<=4, n<=10", true, {}};
    for (unsigned a = 0; a <= 4 && c.passed; ++a) {
      for (unsigned n = 0; n <= 10 && c.passed; ++n) {
        const UniPoly r = difference_identity_residual(a, n, which);
        if (!r.is_zero()) {
          c = {c.name, false, "a=" + std::to_string(a) + " n=" + std::to_string(n) + " residual " + format_unipoly(r)};
        }
      }
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<SuiteCheck> check_bridge() {
  std::mt19937_64 rng(20260417);
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  auto scalar = [&] { return GaussianRational(mpq_class(num(rng)) / den(rng), mpq_class(num(rng)) / den(rng)); };

  SuiteCheck identity{"(n!)^(m+1) u_n = L(f^n) on 80 samples, m<=4, n<=6", true, {}};
  for (int s = 0; s < 80 && identity.passed; ++s) {
    EFamilyElement el;
    for (int i = 0; i < 1 + s % 4; ++i) el.mu.push_back(scalar());
    const unsigned n = 1 + static_cast<unsigned>(s % 6);
    if (!check_bridge_identity(el, n)) {
      identity = {identity.name, false, "mu=" + tuple_text(el.mu) + " n=" + std::to_string(n)};
    }
  }

  SuiteCheck reduction{"L(f^k) = (k!)^(m-m') L(fhat^k) on 40 samples, k<=5", true, {}};
  for (int s = 0; s < 40 && reduction.passed; ++s) {
    EFamilyElement el;
    for (int i = 0; i < 2 + s % 3; ++i) el.mu.push_back(i % 2 == 0 ? scalar() : GaussianRational());
    if (el.mu.front().is_zero()) el.mu.front() = 1;
    const ReducedElement r = reduce_hat(el);
    for (unsigned k = 1; k <= 5 && reduction.passed; ++k) {
      mpz_class scale;
      mpz_pow_ui(scale.get_mpz_t(), factorial(k).get_mpz_t(), el.m() - r.m_prime);
      if (factorial_map_power(expand_e(el), k) != GaussianRational(scale) * factorial_map_power(expand_hat(r), k)) {
        reduction = {reduction.name, false, "mu=" + tuple_text(el.mu) + " k=" + std::to_string(k)};
      }
    }
  }
  return {identity, reduction};
}

// ---------------------------------------------------------------- commands

int cmd_eval_l(const std::string& poly, unsigned k, std::ostream& out, std::ostream& err) {
  if (k == 0) {
    err << "eval-l: --k must be >= 1\n";
    return kExitUsage;
  }
  out << factorial_map_power(parse_poly(poly), k) << '\n';
  return kExitOk;
}

json verdict_json(const MembershipVerdict& v) {
  json j{{"n", v.window_start}, {"member", v.member}, {"values", to_json(v.values)}};
  j["witness_k"] = v.witness_k ? json(*v.witness_k) : json(nullptr);
  return j;
}

void print_verdict(std::ostream& out, const MembershipVerdict& v, bool zero) {
  out << "n=" << v.window_start << ": ";
  if (zero) {
    out << "member (zero polynomial)";
  } else if (v.member) {
    out << "member, witness k=" << *v.witness_k;
  } else {
    out << "NOT a member";
  }
  out << ", values [" << format_list(v.values) << "]\n";
}

int cmd_membership(const std::string& poly, unsigned n, std::optional<unsigned> n_max, const std::string& out_path,
                   std::ostream& out, std::ostream& err) {
  if (n == 0) {
    err << "membership: --n must be >= 1\n";
    return kExitUsage;
  }
  const MultiPoly f = parse_poly(poly);
  auto store = open_store(out_path);
  std::vector<MembershipVerdict> verdicts;
  if (n_max) {
    if (*n_max < n) {
      err << "membership: --n-max must be >= --n\n";
      return kExitUsage;
    }
    auto all = strong_scan(f, *n_max);
    verdicts.assign(all.begin() + (n - 1), all.end());
  } else {
    verdicts.push_back(check_membership(f, n));
  }
  bool all_members = true;
  json result_list = json::array();
  for (const auto& v : verdicts) {
    print_verdict(out, v, f.is_zero());
    all_members = all_members && v.member;
    result_list.push_back(verdict_json(v));
  }
  if (store) {
    json params{{"poly", format_poly(f)}, {"n", n}};
    if (n_max) params["n_max"] = *n_max;
    store->append("membership", params, json{{"verdicts", result_list}});
  }
  return all_members ? kExitOk : kExitFindings;
}

struct InverseRequest {
  std::string alpha, mu, poly, mode = "direct";
  unsigned order = 0;
  bool check = false;
};

int cmd_inverse(const InverseRequest& req, std::ostream& out, std::ostream& err) {
  const int sources = !req.alpha.empty() + !req.mu.empty() + !req.poly.empty();
  if (sources != 1) {
    err << "inverse: give exactly one of --alpha, --mu, --poly\n";
    return kExitUsage;
  }
  if (req.order == 0) {
    err << "inverse: --order must be >= 1\n";
    return kExitUsage;
  }
  const std::size_t order = req.order;
  std::vector<GaussianRational> alpha, mu;
  std::optional<UniSeries> series;
  if (!req.alpha.empty()) {
    alpha = parse_scalar_list(req.alpha);
    series = additive_series(alpha, order + 1);
  } else if (!req.mu.empty()) {
    mu = parse_scalar_list(req.mu);
    series = multiplicative_series(mu, order + 1);
  } else {
    const MultiPoly f = parse_poly(req.poly);
    if (f.num_vars() != 1) {
      err << "inverse: --poly must be univariate (X or X1)\n";
      return kExitUsage;
    }
    std::vector<GaussianRational> coeffs(f.is_zero() ? 1 : f.degree_in(0) + 1);
    for (const auto& [e, c] : f.terms()) coeffs[e[0]] = c;
    series = UniSeries::from_poly(UniPoly(std::move(coeffs)), order + 1);
  }
  if (!series->is_normalized()) {
    err << "inverse: series is not normalized (need a(X) = X mod X^2)\n";
    return kExitUsage;
  }

  using Method = std::function<std::vector<GaussianRational>()>;
  std::map<std::string, Method> methods;
  methods["direct"] = [&] { return u_from_inverse(series_inverse(*series, order + 1)); };
  methods["lagrange"] = [&] {
    std::vector<GaussianRational> u;
    for (std::size_t n = 1; n <= order; ++n) u.push_back(lagrange_u(*series, n));
    return u;
  };
  if (!req.alpha.empty()) {
    methods["aif"] = [&] {
      std::vector<GaussianRational> u;
      for (std::size_t n = 1; n <= order; ++n) u.push_back(aif_u(alpha, n));
      return u;
    };
  }
  if (!req.mu.empty()) {
    methods["mif"] = [&] {
      std::vector<GaussianRational> u;
      for (std::size_t n = 1; n <= order; ++n) u.push_back(mif_u(mu, n));
      return u;
    };
  }
  auto chosen = methods.find(req.mode);
  if (chosen == methods.end()) {
    err << "inverse: mode '" << req.mode << "' does not apply to this input\n";
    return kExitUsage;
  }
  const std::vector<GaussianRational> u = chosen->second();

  std::vector<GaussianRational> coeffs{GaussianRational(1)};
  for (std::size_t n = 1; n <= order; ++n) coeffs.push_back(u[n - 1] / GaussianRational(static_cast<long>(n + 1)));
  // Ascending order reads naturally for a truncated series.
  const std::vector<std::string> x_name{"X"};
  std::string inverse;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d].is_zero()) continue;
    const std::string term = format_poly(MultiPoly::monomial({static_cast<unsigned>(d + 1)}, coeffs[d]), x_name);
    if (inverse.empty()) {
      inverse = term;
    } else if (term.front() == '-') {
      inverse += " - " + term.substr(1);
    } else {
      inverse += " + " + term;
    }
  }

  out << "u: " << format_list(u) << '\n';
  out << "inverse coefficients: " << format_list(coeffs) << '\n';
  out << "inverse: " << inverse << " + O(X^" << order + 2 << ")\n";

  if (req.check) {
    std::string names;
    for (const auto& [name, method] : methods) {
      if (method() != u) {
        out << "check: mode " << name << " disagrees with " << req.mode << '\n';
        return kExitFindings;
      }
      names += (names.empty() ? "" : ", ") + name;
    }
    out << "check: " << names << " agree\n";
  }
  return kExitOk;
}

int cmd_rigidity_scan(unsigned m, const std::string& grid_text, unsigned n_max, const std::string& out_path,
                      unsigned threads, std::ostream& out, std::ostream& err) {
  if (m < 1 || m > 3) {
    err << "rigidity-scan: --m must be in 1..3\n";
    return kExitUsage;
  }
  const auto grid = parse_grid(grid_text);
  const auto tuples = grid_tuples(m, grid, false);
  auto store = open_store(out_path);

  auto params_for = [&](const std::vector<GaussianRational>& alpha) {
    return json{{"m", m}, {"alpha", to_json(alpha)}, {"n_max", n_max}};
  };
  std::vector<std::size_t> todo;
  std::size_t findings = 0;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const json* prior = store ? store->find("rigidity", params_for(tuples[i])) : nullptr;
    if (prior) {
      for (const auto& n : (*prior)["zero_windows"]) {
        out << "finding: alpha=" << tuple_text(tuples[i]) << " window starting at n=" << n.get<unsigned>()
            << " (recorded)\n";
        ++findings;
      }
    } else {
      todo.push_back(i);
    }
  }
  const auto points = parallel_map(todo.size(), threads,
                                   [&](std::size_t i) { return rigidity_scan_point(tuples[todo[i]], n_max); });
  for (const auto& p : points) {
    for (unsigned n : p.zero_windows) {
      out << "finding: alpha=" << tuple_text(p.alpha) << " window starting at n=" << n << '\n';
      ++findings;
    }
    if (store) {
      store->append("rigidity", params_for(p.alpha),
                    json{{"inverse_coeffs", to_json(p.inverse_coeffs)}, {"zero_windows", p.zero_windows}});
    }
  }
  out << "rigidity-scan: m=" << m << " n_max=" << n_max << " points=" << tuples.size() << " (computed "
      << todo.size() << ", resumed " << tuples.size() - todo.size() << ") findings=" << findings << '\n';
  return findings == 0 ? kExitOk : kExitFindings;
}

int cmd_rpc_scan(unsigned max_exp, unsigned n_max, const std::string& out_path, unsigned threads, std::ostream& out,
                 std::ostream& err) {
  if (max_exp < 1 || n_max < 1) {
    err << "rpc-scan: --max-exp and --n-max must be >= 1\n";
    return kExitUsage;
  }
  const auto pairs = rpc_pairs(max_exp);
  auto store = open_store(out_path);
  auto params_for = [&](const ExponentPair& p) {
    return json{{"a", {p.a1(), p.a2()}}, {"b", {p.b1(), p.b2()}}, {"n_max", n_max}};
  };

  std::vector<std::size_t> todo;
  std::size_t findings = 0;
  int max_degree = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const json* prior = store ? store->find("rpc", params_for(pairs[i])) : nullptr;
    if (!prior) {
      todo.push_back(i);
      continue;
    }
    for (const auto& d : (*prior)["degrees"]) max_degree = std::max(max_degree, d.get<int>());
    for (const auto& f : (*prior)["findings"]) {
      out << "finding: " << pairs[i].to_string() << " n=" << f["n"].get<unsigned>()
          << " gcd=" << f["gcd"].get<std::string>() << " (recorded)\n";
      ++findings;
    }
  }
  const auto results =
      parallel_map(todo.size(), threads, [&](std::size_t i) { return rpc_scan_pair(pairs[todo[i]], n_max); });
  for (const auto& r : results) {
    for (int d : r.degrees) max_degree = std::max(max_degree, d);
    json found = json::array();
    for (const auto& f : r.findings) {
      json entry{{"n", f.n}, {"gcd", format_unipoly(f.gcd)}};
      if (auto root = linear_root(f.gcd)) {
        entry["root"] = root->to_string();
        entry["witness"] = format_poly(two_monomial_poly(f.pair, *root, GaussianRational(1)));
      }
      out << "finding: " << f.pair.to_string() << " n=" << f.n << " gcd=" << format_unipoly(f.gcd) << '\n';
      found.push_back(std::move(entry));
      ++findings;
    }
    if (store) store->append("rpc", params_for(r.pair), json{{"degrees", r.degrees}, {"findings", found}});
  }
  out << "rpc-scan: max_exp=" << max_exp << " n_max=" << n_max << " pairs=" << pairs.size() << " (computed "
      << todo.size() << ", resumed " << pairs.size() - todo.size() << ") max_gcd_degree=" << max_degree
      << " findings=" << findings << '\n';
  return findings == 0 ? kExitOk : kExitFindings;
}

int cmd_bridge_probe(unsigned m, const std::string& grid_text, unsigned n, const std::string& out_path,
                     unsigned threads, std::ostream& out, std::ostream& err) {
  if (m < 1 || m > 4 || n < 1) {
    err << "bridge-probe: need 1 <= --m <= 4 and --n >= 1\n";
    return kExitUsage;
  }
  const auto grid = parse_grid(grid_text);
  const auto tuples = grid_tuples(m, grid, true);
  auto store = open_store(out_path);
  auto params_for = [&](const std::vector<GaussianRational>& mu) {
    return json{{"m", m}, {"mu", to_json(mu)}, {"n", n}};
  };

  std::vector<std::size_t> todo;
  std::size_t violations = 0;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const json* prior = store ? store->find("bridge", params_for(tuples[i])) : nullptr;
    if (!prior) {
      todo.push_back(i);
    } else if (!(*prior)["violation"].is_null()) {
      out << "violation: mu=" << tuple_text(tuples[i]) << ": " << (*prior)["violation"].get<std::string>()
          << " (recorded)\n";
      ++violations;
    }
  }
  const auto points = parallel_map(
      todo.size(), threads, [&](std::size_t i) { return bridge_probe_point(EFamilyElement{tuples[todo[i]]}, n); });
  for (const auto& p : points) {
    if (p.violation) {
      out << "violation: mu=" << tuple_text(p.mu) << ": " << *p.violation << '\n';
      ++violations;
    }
    if (store) {
      store->append("bridge", params_for(p.mu),
                    json{{"u_window", to_json(p.u_window)},
                         {"l_window", to_json(p.l_window)},
                         {"violation", p.violation ? json(*p.violation) : json(nullptr)}});
    }
  }
  out << "bridge-probe: m=" << m << " n=" << n << " points=" << tuples.size() << " (computed " << todo.size()
      << ", resumed " << tuples.size() - todo.size() << ") violations=" << violations << '\n';
  return violations == 0 ? kExitOk : kExitFindings;
}

int cmd_verify(const std::string& suite, std::ostream& out) {
  const auto checks = run_verify_suite(suite);
  bool ok = true;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) out << ": " << c.detail;
    out << '\n';
    ok = ok && c.passed;
  }
  out << (ok ? "all checks passed" : "some checks FAILED") << " (" << checks.size() << " checks)\n";
  return ok ? kExitOk : kExitFindings;
}

std::pair<unsigned, unsigned> parse_exponent_vector(const std::string& text) {
  const auto values = parse_scalar_list(text);
  if (values.size() != 2) throw ParseError("expected two comma-separated naturals", 0);
  std::array<unsigned, 2> out{};
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& v = values[i];
    if (!v.is_real() || v.re().get_den() != 1 || sgn(v.re()) < 0 || !v.re().get_num().fits_uint_p()) {
      throw ParseError("exponents must be natural numbers", 0);
    }
    out[i] = static_cast<unsigned>(v.re().get_num().get_ui());
  }
  return {out[0], out[1]};
}

int cmd_recurrence(const std::string& a_text, const std::string& b_text, const DiscoveryOptions& options,
                   std::ostream& out) {
  const auto [a1, a2] = parse_exponent_vector(a_text);
  const auto [b1, b2] = parse_exponent_vector(b_text);
  const ExponentPair pair(a1, a2, b1, b2);
  const auto found = discover_recurrence(pair, options);
  if (!found) {
    out << "none found for " << pair.to_string() << " (order " << options.order << ", deg_n " << options.deg_n
        << ", deg_x " << options.deg_x << ")\n";
    return kExitOk;
  }
  const std::vector<std::string> names{"n", "X"};
  out << "recurrence of order " << found->recurrence.order() << " for " << pair.to_string()
      << ": sum_t c_t(n,X) P_{n+t}(X) = 0\n";
  for (std::size_t t = 0; t < found->recurrence.coeffs.size(); ++t) {
    out << "  c" << t << " = " << format_poly(found->recurrence.coeffs[t], names) << '\n';
  }
  out << "fitted on n=" << found->fit_first << ".." << found->fit_last << ", verified for tested range n="
      << found->verified_first << ".." << found->verified_last << " (not a proof)";
  if (found->nullspace_dim > 1) out << "; solution space dimension " << found->nullspace_dim;
  out << '\n';
  return kExitOk;
}

}  // namespace

unsigned resolve_threads(std::optional<unsigned> flag, const char* env_value) {
  if (flag && *flag > 0) return *flag;
  if (env_value != nullptr) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env_value, &end, 10);
    if (end != env_value && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

std::vector<SuiteCheck> run_verify_suite(const std::string& suite) {
  std::vector<SuiteCheck> checks;
  auto add = [&](std::vector<SuiteCheck> more) { checks.insert(checks.end(), more.begin(), more.end()); };
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "certificate") {
    known = true;
    checks.push_back(check_certificate());
  }
  if (all || suite == "recurrences") {
    known = true;
    checks.push_back(check_p31_recurrence());
    add(check_furter());
    checks.push_back(
        check_printed_recurrence("a=(1,1) b=(0,0)", ExponentPair(1, 1, 0, 0), printed_recurrence_unit_pair()));
    checks.push_back(
        check_printed_recurrence("a=(3,0) b=(0,0)", ExponentPair(3, 0, 0, 0), printed_recurrence_cubic_pair()));
  }
  if (all || suite == "hypergeometric") {
    known = true;
    checks.push_back(check_hypergeometric());
  }
  if (all || suite == "prop35") {
    known = true;
    add(check_difference_identities());
  }
  if (all || suite == "bridge") {
    known = true;
    add(check_bridge());
  }
  if (!known) throw std::invalid_argument("unknown suite: " + suite);
  return checks;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toolkit for the factorial map, compositional inversion and related polynomial families"};
  app.name("faclab");
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<unsigned> threads_flag;
  app.add_option("--threads", threads_flag, "Worker threads (overrides FACLAB_THREADS)");

  std::string poly, out_path;
  unsigned k = 1;
  auto* eval_l = app.add_subcommand("eval-l", "Print L(f^k)");
  eval_l->add_option("--poly", poly, "Polynomial, e.g. \"X1 - X2\"")->required();
  eval_l->add_option("--k", k, "Power k >= 1");

  unsigned n = 1;
  std::optional<unsigned> n_max_opt;
  auto* membership = app.add_subcommand("membership", "Window test L(f^n), ..., L(f^{n+N(f)-1})");
  membership->add_option("--poly", poly, "Polynomial")->required();
  membership->add_option("--n", n, "Window start n >= 1");
  membership->add_option("--n-max", n_max_opt, "Scan every window start n..n_max");
  membership->add_option("--out", out_path, "Append a JSONL record");

  InverseRequest inv;
  auto* inverse = app.add_subcommand("inverse", "Compositional inverse coefficients u_1..u_order");
  inverse->add_option("--alpha", inv.alpha, "a(X) = X(1 - alpha_1 X - ... - alpha_m X^m)");
  inverse->add_option("--mu", inv.mu, "a(X) = X(1 - mu_1 X)...(1 - mu_m X)");
  inverse->add_option("--poly", inv.poly, "a(X) as a polynomial in X");
  inverse->add_option("--order", inv.order, "Number of u_n to print")->required();
  inverse->add_option("--mode", inv.mode, "direct | lagrange | aif | mif")
      ->check(CLI::IsMember({"direct", "lagrange", "aif", "mif"}));
  inverse->add_flag("--check", inv.check, "Cross-check every applicable mode");

  unsigned m = 1, scan_n_max = 1;
  std::string grid;
  auto* rigidity = app.add_subcommand("rigidity-scan", "Search for m consecutive vanishing inverse coefficients");
  rigidity->add_option("--m", m, "Degree parameter m (1..3)")->required();
  rigidity->add_option("--grid", grid, "Coefficient grid: lo..hi or a comma list")->required();
  rigidity->add_option("--n-max", scan_n_max, "Largest window start")->required();
  rigidity->add_option("--out", out_path, "JSONL output (resumable)");

  unsigned max_exp = 1;
  auto* rpc = app.add_subcommand("rpc-scan", "gcd(P_{a,b,n}, P_{a,b,n+1}) over all small exponent pairs");
  rpc->add_option("--max-exp", max_exp, "Largest exponent entry")->required();
  rpc->add_option("--n-max", scan_n_max, "Largest n")->required();
  rpc->add_option("--out", out_path, "JSONL output (resumable)");

  auto* bridge = app.add_subcommand("bridge-probe", "Compare inverse-coefficient and L windows on a mu grid");
  bridge->add_option("--m", m, "Number of variables (1..4)")->required();
  bridge->add_option("--grid", grid, "Grid for each mu_i")->required();
  bridge->add_option("--n", n, "Window start")->required();
  bridge->add_option("--out", out_path, "JSONL output (resumable)");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run exact identity suites");
  verify->add_option("--suite", suite, "all | bridge | recurrences | hypergeometric | certificate | prop35")
      ->check(CLI::IsMember({"all", "bridge", "recurrences", "hypergeometric", "certificate", "prop35"}));

  std::string a_text, b_text;
  DiscoveryOptions discovery;
  std::optional<unsigned> fit_samples;
  auto* recurrence = app.add_subcommand("recurrence", "Search for a recurrence of P_{a,b,n} by exact ansatz");
  recurrence->add_option("--a", a_text, "a1,a2")->required();
  recurrence->add_option("--b", b_text, "b1,b2")->required();
  recurrence->add_option("--order", discovery.order, "Recurrence order r >= 1")->required();
  recurrence->add_option("--deg-n", discovery.deg_n, "Coefficient degree in n")->required();
  recurrence->add_option("--deg-x", discovery.deg_x, "Coefficient degree in X")->required();
  recurrence->add_option("--verify", discovery.verify_count, "Fresh n values to re-verify on");
  recurrence->add_option("--fit-samples", fit_samples, "Number of consecutive n to fit on");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  const unsigned threads = resolve_threads(threads_flag, std::getenv("FACLAB_THREADS"));
  try {
    if (*eval_l) return cmd_eval_l(poly, k, out, err);
    if (*membership) return cmd_membership(poly, n, n_max_opt, out_path, out, err);
    if (*inverse) return cmd_inverse(inv, out, err);
    if (*rigidity) return cmd_rigidity_scan(m, grid, scan_n_max, out_path, threads, out, err);
    if (*rpc) return cmd_rpc_scan(max_exp, scan_n_max, out_path, threads, out, err);
    if (*bridge) return cmd_bridge_probe(m, grid, n, out_path, threads, out, err);
    if (*verify) return cmd_verify(suite, out);
    if (*recurrence) {
      discovery.fit_samples = fit_samples;
      return cmd_recurrence(a_text, b_text, discovery, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnderdeterminedSystem& e) {
    err << "underdetermined configuration: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"faclab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace faclab::cli
