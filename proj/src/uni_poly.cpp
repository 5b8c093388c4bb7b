#include "faclab/uni_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace faclab {

UniPoly::UniPoly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const GaussianRational& c) { return UniPoly(std::vector<GaussianRational>{c}); }

UniPoly UniPoly::monomial(const GaussianRational& c, std::size_t degree) {
  std::vector<GaussianRational> coeffs(degree + 1);
  coeffs[degree] = c;
  return UniPoly(std::move(coeffs));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

GaussianRational UniPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : GaussianRational();
}

GaussianRational UniPoly::operator()(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<GaussianRational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const GaussianRational& c) {
  for (auto& coeff : coeffs_) coeff *= c;
  trim();
  return *this;
}

UniPoly monic(const UniPoly& p) {
  if (p.is_zero() || p.leading().is_one()) return p;
  const GaussianRational inv = GaussianRational(1) / p.leading();
  return p * inv;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& dividend, const UniPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
  std::vector<GaussianRational> rem = dividend.coeffs();
  const int dd = divisor.degree();
  if (dividend.degree() < dd) return {UniPoly(), dividend};
  std::vector<GaussianRational> quot(rem.size() - static_cast<std::size_t>(dd));
  const GaussianRational lead_inv = GaussianRational(1) / divisor.leading();
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (rem[i].is_zero()) continue;
    const GaussianRational q = rem[i] * lead_inv;
    quot[i - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= q * divisor.coeffs()[j];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& p, const UniPoly& q) {
  UniPoly a = monic(p);
  UniPoly b = monic(q);
  while (!b.is_zero()) {
    UniPoly r = monic(divmod(a, b).second);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace faclab
