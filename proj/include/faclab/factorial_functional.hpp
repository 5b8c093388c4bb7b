#pragma once

#include <optional>
#include <vector>

#include "faclab/gaussian_rational.hpp"
#include "faclab/multi_poly.hpp"

namespace faclab {

/// L(X1^l1 ... Xm^lm) = l1! ... lm!, extended linearly.
GaussianRational factorial_map(const MultiPoly& f);

/// L(f^k) by full expansion of f^k. k >= 1.
GaussianRational factorial_map_power(const MultiPoly& f, unsigned k);

/// Outcome of testing f against the window {n, ..., n + N(f) - 1}.
struct MembershipVerdict {
  bool member = false;
  /// Smallest k in the window with L(f^k) != 0. Absent for f = 0.
  std::optional<unsigned> witness_k;
  unsigned window_start = 0;
  unsigned window_length = 0;
  /// L(f^k) for every k in the window, in order.
  std::vector<GaussianRational> values;
};

MembershipVerdict check_membership(const MultiPoly& f, unsigned n);

/// check_membership(f, n) for n = 1..n_max, sharing one power cache.
std::vector<MembershipVerdict> strong_scan(const MultiPoly& f, unsigned n_max);

}  // namespace faclab
