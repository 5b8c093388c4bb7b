#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "faclab/gaussian_rational.hpp"

namespace faclab {

class UniPoly;

/// Exponents l_1..l_m of a monomial X1^l1 ... Xm^lm.
using ExponentVector = std::vector<unsigned>;

/// Sparse polynomial in a fixed number of variables over Q(i).
///
/// Terms live in a map ordered lexicographically on exponent vectors, so
/// iteration (and therefore printing) is deterministic. No stored
/// coefficient is zero.
class MultiPoly {
 public:
  using TermMap = std::map<ExponentVector, GaussianRational>;

  explicit MultiPoly(std::size_t num_vars = 1);

  static MultiPoly constant(std::size_t num_vars, const GaussianRational& c);
  /// The variable X_{index+1}; index is zero-based.
  static MultiPoly variable(std::size_t num_vars, std::size_t index);
  static MultiPoly monomial(ExponentVector exps, const GaussianRational& c);

  std::size_t num_vars() const { return num_vars_; }
  /// N(f): the number of nonzero monomials.
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  GaussianRational coefficient(const ExponentVector& exps) const;
  /// Accumulates c into the coefficient of exps, dropping it if it cancels.
  void add_term(const ExponentVector& exps, const GaussianRational& c);

  unsigned total_degree() const;
  /// Highest exponent of variable `index` over all terms.
  unsigned degree_in(std::size_t index) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const GaussianRational& c);

  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
    return lhs.num_vars_ == rhs.num_vars_ && lhs.terms_ == rhs.terms_;
  }

 private:
  void check_compatible(const MultiPoly& rhs) const;

  std::size_t num_vars_;
  TermMap terms_;
};

MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs);
MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs);
MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
MultiPoly operator*(MultiPoly lhs, const GaussianRational& c);
MultiPoly operator*(const GaussianRational& c, MultiPoly rhs);

MultiPoly pow(const MultiPoly& f, unsigned k);

/// Relabels variables: X_{i+1} becomes X_{sigma[i]+1}. sigma must be a
/// bijection of {0..m-1}.
MultiPoly permute(const MultiPoly& f, std::span<const std::size_t> sigma);

GaussianRational evaluate(const MultiPoly& f, std::span<const GaussianRational> point);

/// Substitutes `values[j]` for every variable j != keep and returns the
/// result as a polynomial in the remaining variable. values.size() must be
/// num_vars (the entry at `keep` is ignored).
UniPoly restrict_to_variable(const MultiPoly& f, std::size_t keep, std::span<const GaussianRational> values);

/// Successive powers f, f^2, ... computed incrementally and cached.
class PowerCache {
 public:
  explicit PowerCache(MultiPoly base);

  const MultiPoly& base() const { return powers_.at(1); }
  /// f^k; extends the cache by repeated multiplication by f.
  const MultiPoly& power(unsigned k);

 private:
  std::vector<MultiPoly> powers_;
};

}  // namespace faclab
