#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "faclab/gaussian_rational.hpp"

namespace faclab {

/// Dense univariate polynomial over Q(i); coeffs()[i] is the coefficient of
/// X^i. The highest stored coefficient is nonzero (empty list for zero).
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<GaussianRational> coeffs);

  static UniPoly constant(const GaussianRational& c);
  static UniPoly monomial(const GaussianRational& c, std::size_t degree);
  static UniPoly x() { return monomial(GaussianRational(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  /// Coefficient of X^i; zero past the degree.
  GaussianRational coefficient(std::size_t i) const;
  const GaussianRational& leading() const { return coeffs_.back(); }

  GaussianRational operator()(const GaussianRational& x) const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  UniPoly& operator*=(const GaussianRational& c);

  friend bool operator==(const UniPoly& lhs, const UniPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

 private:
  void trim();

  std::vector<GaussianRational> coeffs_;
};

inline UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
inline UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
inline UniPoly operator*(UniPoly lhs, const UniPoly& rhs) { return lhs *= rhs; }
inline UniPoly operator*(UniPoly lhs, const GaussianRational& c) { return lhs *= c; }
inline UniPoly operator*(const GaussianRational& c, UniPoly rhs) { return rhs *= c; }

/// p scaled so its leading coefficient is 1; zero stays zero.
UniPoly monic(const UniPoly& p);

/// (quotient, remainder) with deg(remainder) < deg(divisor). Throws
/// std::domain_error on a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& dividend, const UniPoly& divisor);

/// Monic gcd by Euclidean remainder sequence; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& p, const UniPoly& q);

}  // namespace faclab
