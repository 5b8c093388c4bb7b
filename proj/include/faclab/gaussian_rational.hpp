#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace faclab {

/// Exact element a + bi of Q(i). Both parts are kept canonical (lowest terms,
/// positive denominator), so equality is structural.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(const mpz_class& value) : re_(value) {}  // NOLINT
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational fraction(long num, long den);
  static GaussianRational imaginary_unit() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_positive_real() const { return sgn(im_) == 0 && sgn(re_) > 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2 = re^2 + im^2.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& rhs);
  GaussianRational& operator-=(const GaussianRational& rhs);
  GaussianRational& operator*=(const GaussianRational& rhs);
  GaussianRational& operator/=(const GaussianRational& rhs);

  /// Exact text form: "p/q", "r/si" or "p/q+r/si" (integers print without a denominator).
  std::string to_string() const;

  friend bool operator==(const GaussianRational& lhs, const GaussianRational& rhs) {
    return lhs.re_ == rhs.re_ && lhs.im_ == rhs.im_;
  }

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

inline GaussianRational operator+(GaussianRational lhs, const GaussianRational& rhs) { return lhs += rhs; }
inline GaussianRational operator-(GaussianRational lhs, const GaussianRational& rhs) { return lhs -= rhs; }
inline GaussianRational operator*(GaussianRational lhs, const GaussianRational& rhs) { return lhs *= rhs; }
inline GaussianRational operator/(GaussianRational lhs, const GaussianRational& rhs) { return lhs /= rhs; }

GaussianRational pow(const GaussianRational& base, unsigned exponent);

std::ostream& operator<<(std::ostream& os, const GaussianRational& value);

}  // namespace faclab
