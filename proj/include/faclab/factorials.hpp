#pragma once

#include <gmpxx.h>

#include <cstddef>

namespace faclab {

/// n! from a process-wide append-only table. Reads may run concurrently;
/// growth is serialized. The returned reference stays valid for the process
/// lifetime.
const mpz_class& factorial(std::size_t n);

mpz_class binomial(std::size_t n, std::size_t k);

/// Rising factorial (x)_k = x (x+1) ... (x+k-1) over the rationals.
mpq_class pochhammer(const mpq_class& x, std::size_t k);

}  // namespace faclab
