#include "faclab/multi_poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "faclab/uni_poly.hpp"

namespace faclab {

MultiPoly::MultiPoly(std::size_t num_vars) : num_vars_(num_vars) {}

MultiPoly MultiPoly::constant(std::size_t num_vars, const GaussianRational& c) {
  MultiPoly p(num_vars);
  p.add_term(ExponentVector(num_vars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw std::invalid_argument("MultiPoly::variable: index out of range");
  ExponentVector e(num_vars, 0);
  e[index] = 1;
  return monomial(std::move(e), GaussianRational(1));
}

MultiPoly MultiPoly::monomial(ExponentVector exps, const GaussianRational& c) {
  MultiPoly p(exps.size());
  p.add_term(exps, c);
  return p;
}

GaussianRational MultiPoly::coefficient(const ExponentVector& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? GaussianRational() : it->second;
}

void MultiPoly::add_term(const ExponentVector& exps, const GaussianRational& c) {
  if (exps.size() != num_vars_) {
    throw std::invalid_argument("MultiPoly: exponent vector has length " + std::to_string(exps.size()) +
                                ", expected " + std::to_string(num_vars_));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

unsigned MultiPoly::total_degree() const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, std::accumulate(e.begin(), e.end(), 0U));
  return best;
}

unsigned MultiPoly::degree_in(std::size_t index) const {
  unsigned best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e.at(index));
  return best;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

void MultiPoly::check_compatible(const MultiPoly& rhs) const {
  if (num_vars_ != rhs.num_vars_) {
    throw std::invalid_argument("MultiPoly: variable count mismatch (" + std::to_string(num_vars_) + " vs " +
                                std::to_string(rhs.num_vars_) + ")");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_) coeff *= c;
  return *this;
}

MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
MultiPoly operator*(MultiPoly lhs, const GaussianRational& c) { return lhs *= c; }
MultiPoly operator*(const GaussianRational& c, MultiPoly rhs) { return rhs *= c; }

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  if (lhs.num_vars() != rhs.num_vars()) {
    throw std::invalid_argument("MultiPoly: variable count mismatch (" + std::to_string(lhs.num_vars()) + " vs " +
                                std::to_string(rhs.num_vars()) + ")");
  }
  std::map<ExponentVector, GaussianRational> acc;
  ExponentVector e(lhs.num_vars());
  for (const auto& [el, cl] : lhs.terms()) {
    for (const auto& [er, cr] : rhs.terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = el[i] + er[i];
      acc[e] += cl * cr;
    }
  }
  MultiPoly result(lhs.num_vars());
  for (const auto& [exps, c] : acc) result.add_term(exps, c);
  return result;
}

MultiPoly pow(const MultiPoly& f, unsigned k) {
  MultiPoly result = MultiPoly::constant(f.num_vars(), GaussianRational(1));
  for (unsigned i = 0; i < k; ++i) result = result * f;
  return result;
}

MultiPoly permute(const MultiPoly& f, std::span<const std::size_t> sigma) {
  const std::size_t m = f.num_vars();
  if (sigma.size() != m) throw std::invalid_argument("permute: permutation length differs from variable count");
  std::vector<bool> seen(m, false);
  for (std::size_t image : sigma) {
    if (image >= m || seen[image]) throw std::invalid_argument("permute: map is not a bijection");
    seen[image] = true;
  }
  MultiPoly result(m);
  ExponentVector e(m);
  for (const auto& [exps, c] : f.terms()) {
    for (std::size_t i = 0; i < m; ++i) e[sigma[i]] = exps[i];
    result.add_term(e, c);
  }
  return result;
}

GaussianRational evaluate(const MultiPoly& f, std::span<const GaussianRational> point) {
  if (point.size() != f.num_vars()) throw std::invalid_argument("evaluate: point has wrong dimension");
  GaussianRational sum;
  for (const auto& [exps, c] : f.terms()) {
    GaussianRational term = c;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] != 0) term *= pow(point[i], exps[i]);
    }
    sum += term;
  }
  return sum;
}

UniPoly restrict_to_variable(const MultiPoly& f, std::size_t keep, std::span<const GaussianRational> values) {
  if (values.size() != f.num_vars() || keep >= f.num_vars()) {
    throw std::invalid_argument("restrict_to_variable: bad variable index or value count");
  }
  std::vector<GaussianRational> coeffs(f.is_zero() ? 0 : f.degree_in(keep) + 1);
  for (const auto& [exps, c] : f.terms()) {
    GaussianRational term = c;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (i != keep && exps[i] != 0) term *= pow(values[i], exps[i]);
    }
    coeffs[exps[keep]] += term;
  }
  return UniPoly(std::move(coeffs));
}

PowerCache::PowerCache(MultiPoly base) {
  const std::size_t m = base.num_vars();
  powers_.push_back(MultiPoly::constant(m, GaussianRational(1)));
  powers_.push_back(std::move(base));
}

const MultiPoly& PowerCache::power(unsigned k) {
  while (powers_.size() <= k) powers_.push_back(powers_.back() * powers_[1]);
  return powers_[k];
}

}  // namespace faclab
