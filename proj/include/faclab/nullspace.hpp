#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace faclab {

using RationalMatrix = std::vector<std::vector<mpq_class>>;

/// Basis of {v : A v = 0} over Q, one vector per free column of the reduced
/// row echelon form (free variable set to 1, the other free variables 0).
/// Every row of `rows` must have `cols` entries.
std::vector<std::vector<mpq_class>> nullspace(RationalMatrix rows, std::size_t cols);

}  // namespace faclab
