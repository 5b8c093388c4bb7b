#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "faclab/gaussian_rational.hpp"
#include "faclab/uni_poly.hpp"

namespace faclab {

struct InsufficientOrder : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotNormalized : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Truncated power series: coefficients of X^0..X^order are known.
class UniSeries {
 public:
  explicit UniSeries(std::size_t order);
  explicit UniSeries(std::vector<GaussianRational> coeffs);

  static UniSeries from_poly(const UniPoly& p, std::size_t order);
  static UniSeries identity(std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<GaussianRational>& coeffs() const { return coeffs_; }
  const GaussianRational& operator[](std::size_t i) const { return coeffs_.at(i); }
  GaussianRational& operator[](std::size_t i) { return coeffs_.at(i); }

  /// a(X) = X mod X^2.
  bool is_normalized() const;
  UniSeries truncated(std::size_t order) const;

  friend bool operator==(const UniSeries&, const UniSeries&) = default;

 private:
  std::vector<GaussianRational> coeffs_;
};

UniSeries series_mul(const UniSeries& a, const UniSeries& b, std::size_t order);
/// Multiplicative inverse 1/a; a[0] must be nonzero.
UniSeries series_reciprocal(const UniSeries& a, std::size_t order);
UniSeries series_pow(const UniSeries& a, unsigned k, std::size_t order);

/// a(b(X)) mod X^{order+1}. b[0] must be zero; both inputs must be known to
/// `order`.
UniSeries series_compose(const UniSeries& a, const UniSeries& b, std::size_t order);

/// The compositional inverse of a normalized series, solved degree by degree.
UniSeries series_inverse(const UniSeries& a, std::size_t order);

/// u_n = [X^n] (a(X)/X)^{-(n+1)}; needs a known to order n+1.
GaussianRational lagrange_u(const UniSeries& a, std::size_t n);

/// u_n for a(X) = X(1 - (alpha_1 X + ... + alpha_m X^m)) by the additive
/// closed form; u_0 = 1.
GaussianRational aif_u(std::span<const GaussianRational> alpha, std::size_t n);

/// u_n for a(X) = X (1 - mu_1 X) ... (1 - mu_m X) by the multiplicative
/// closed form; u_0 = 1.
GaussianRational mif_u(std::span<const GaussianRational> mu, std::size_t n);

UniSeries additive_series(std::span<const GaussianRational> alpha, std::size_t order);
UniSeries multiplicative_series(std::span<const GaussianRational> mu, std::size_t order);

/// u_1..u_{order-1} read off an inverse series: u_n = (n+1) [X^{n+1}] inverse.
std::vector<GaussianRational> u_from_inverse(const UniSeries& inverse);

/// Whether a^{-1} = b^{-1} mod X^n. n >= 2.
bool congruence_preserved(const UniSeries& a, const UniSeries& b, std::size_t n);

/// All tuples of grid^m in lexicographic order (first coordinate slowest).
std::vector<std::vector<GaussianRational>> grid_tuples(unsigned m, std::span<const GaussianRational> grid,
                                                       bool include_zero);

struct RigidityPoint {
  std::vector<GaussianRational> alpha;
  /// Inverse coefficients of X^1..X^{n_max+m}.
  std::vector<GaussianRational> inverse_coeffs;
  /// Every n in 1..n_max whose coefficients of X^{n+1}..X^{n+m} all vanish.
  std::vector<unsigned> zero_windows;
};

struct RigidityFinding {
  std::vector<GaussianRational> alpha;
  unsigned n = 0;
};

/// Scans a(X) = X(1 - alpha_1 X - ... - alpha_m X^m). alpha must be nonzero.
RigidityPoint rigidity_scan_point(std::span<const GaussianRational> alpha, unsigned n_max);

std::vector<RigidityFinding> rigidity_window_scan(unsigned m, std::span<const GaussianRational> grid,
                                                  unsigned n_max, unsigned threads = 1);

}  // namespace faclab
