#include "faclab/factorial_functional.hpp"

#include <stdexcept>

#include "faclab/factorials.hpp"

namespace faclab {

namespace {

MembershipVerdict verdict_for_window(PowerCache& cache, bool is_zero, unsigned length, unsigned n) {
  MembershipVerdict v;
  v.window_start = n;
  v.window_length = length;
  v.member = is_zero;
  for (unsigned k = n; k < n + length; ++k) {
    v.values.push_back(factorial_map(cache.power(k)));
    if (!v.witness_k && !v.values.back().is_zero()) {
      v.witness_k = k;
      v.member = true;
    }
  }
  return v;
}

}  // namespace

GaussianRational factorial_map(const MultiPoly& f) {
  GaussianRational sum;
  for (const auto& [exps, c] : f.terms()) {
    mpz_class weight(1);
    for (unsigned e : exps) {
      if (e > 1) weight *= factorial(e);
    }
    sum += c * GaussianRational(weight);
  }
  return sum;
}

GaussianRational factorial_map_power(const MultiPoly& f, unsigned k) {
  if (k == 0) throw std::invalid_argument("factorial_map_power: k must be >= 1");
  return factorial_map(pow(f, k));
}

MembershipVerdict check_membership(const MultiPoly& f, unsigned n) {
  if (n == 0) throw std::invalid_argument("check_membership: n must be >= 1");
  PowerCache cache(f);
  return verdict_for_window(cache, f.is_zero(), static_cast<unsigned>(f.term_count()), n);
}

std::vector<MembershipVerdict> strong_scan(const MultiPoly& f, unsigned n_max) {
  if (n_max == 0) throw std::invalid_argument("strong_scan: n_max must be >= 1");
  PowerCache cache(f);
  std::vector<MembershipVerdict> out;
  out.reserve(n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    out.push_back(verdict_for_window(cache, f.is_zero(), static_cast<unsigned>(f.term_count()), n));
  }
  return out;
}

}  // namespace faclab
