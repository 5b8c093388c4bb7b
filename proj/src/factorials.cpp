#include "faclab/factorials.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>

namespace faclab {

namespace {

struct FactorialTable {
  std::shared_mutex mutex;
  std::deque<mpz_class> values{mpz_class(1)};
};

FactorialTable& table() {
  static FactorialTable instance;
  return instance;
}

}  // namespace

const mpz_class& factorial(std::size_t n) {
  FactorialTable& t = table();
  {
    std::shared_lock lock(t.mutex);
    if (n < t.values.size()) return t.values[n];
  }
  std::unique_lock lock(t.mutex);
  while (t.values.size() <= n) {
    mpz_class next = t.values.back() * static_cast<unsigned long>(t.values.size());
    t.values.push_back(std::move(next));
  }
  return t.values[n];
}

mpz_class binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  mpz_class result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

mpq_class pochhammer(const mpq_class& x, std::size_t k) {
  mpq_class result(1);
  for (std::size_t i = 0; i < k; ++i) result *= x + static_cast<unsigned long>(i);
  return result;
}

}  // namespace faclab
