#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "faclab/gaussian_rational.hpp"
#include "faclab/multi_poly.hpp"
#include "faclab/uni_poly.hpp"

namespace faclab {

/// Two distinct exponent vectors a, b in N^2 indexing the family
/// mu1 X1^a1 X2^a2 + mu2 X1^b1 X2^b2.
class ExponentPair {
 public:
  ExponentPair(unsigned a1, unsigned a2, unsigned b1, unsigned b2);

  unsigned a1() const { return a1_; }
  unsigned a2() const { return a2_; }
  unsigned b1() const { return b1_; }
  unsigned b2() const { return b2_; }
  long c1() const { return static_cast<long>(a1_) - static_cast<long>(b1_); }
  long c2() const { return static_cast<long>(a2_) - static_cast<long>(b2_); }

  /// (a2, a1), (b2, b1): the same P_n family with the variables exchanged.
  ExponentPair swapped() const { return {a2_, a1_, b2_, b1_}; }
  /// The lexicographically smaller of *this and swapped().
  ExponentPair canonical() const;

  std::string to_string() const;

  friend auto operator<=>(const ExponentPair&, const ExponentPair&) = default;

 private:
  unsigned a1_, a2_, b1_, b2_;
};

/// P_{a,b,n}(X) = sum_{k=0}^n (b1 n + c1 k)! (b2 n + c2 k)! / (k! (n-k)!) X^k.
UniPoly pab_poly(const ExponentPair& pair, unsigned n);

/// mu1 X1^a1 X2^a2 + mu2 X1^b1 X2^b2.
MultiPoly two_monomial_poly(const ExponentPair& pair, const GaussianRational& mu1, const GaussianRational& mu2);

/// L(f^n) == n! mu2^n P_{a,b,n}(mu1/mu2). mu1, mu2 nonzero, n >= 1.
bool check_two_monomial_reduction(const ExponentPair& pair, const GaussianRational& mu1, const GaussianRational& mu2, unsigned n);

/// Monic gcd(P_{a,b,n}, P_{a,b,n+1}).
UniPoly consecutive_gcd(const ExponentPair& pair, unsigned n);
/// Degree of consecutive_gcd; 0 means no common complex zero.
int common_zero_degree(const ExponentPair& pair, unsigned n);

/// The root of a degree-one polynomial, if g has degree one.
std::optional<GaussianRational> linear_root(const UniPoly& g);

/// Distinct pairs with entries <= max_exp, one representative per swap class,
/// in increasing order.
std::vector<ExponentPair> rpc_pairs(unsigned max_exp);

struct RpcFinding {
  ExponentPair pair;
  unsigned n;
  UniPoly gcd;
};

struct RpcPairResult {
  ExponentPair pair;
  /// common_zero_degree for n = 0..n_max.
  std::vector<int> degrees;
  std::vector<RpcFinding> findings;
};

struct RpcReport {
  std::size_t pairs_scanned = 0;
  int max_degree = 0;
  std::vector<RpcFinding> findings;
};

RpcPairResult rpc_scan_pair(const ExponentPair& pair, unsigned n_max);
RpcReport rpc_scan(unsigned max_exp, unsigned n_max, unsigned threads = 1);

/// Residual of the closed-form difference identity for the two families with
/// no common consecutive zeros: case 1 is a = (a,0), b = (0,1); case 2 is
/// a = (a,0), b = (a,1). Zero when the identity holds at n.
UniPoly difference_identity_residual(unsigned a_param, unsigned n, int which_case);
bool verify_difference_identity(unsigned a_param, unsigned n_max, int which_case);

/// sum_t coeffs[t](n, X) P_{n+t}(X) = 0. Coefficients are polynomials in the
/// two variables (n, X), in that order.
struct Recurrence {
  std::vector<MultiPoly> coeffs;

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

using PolyFamily = std::function<UniPoly(unsigned)>;

UniPoly apply_recurrence(const Recurrence& rec, const PolyFamily& family, unsigned n);

/// Scales to coprime integer coefficients with a positive leading term
/// (lexicographically largest (n, X) exponent) in the first nonzero
/// coefficient polynomial.
Recurrence normalize(const Recurrence& rec);

/// rec1 == c * rec2 for some nonzero scalar c.
bool proportional(const Recurrence& rec1, const Recurrence& rec2);

/// X P_n - (n+2) X P_{n+1} + P_{n+2}, as printed for a = (1,1), b = (0,0).
Recurrence printed_recurrence_unit_pair();
/// 27 X P_n - 54 (n+2) X P_{n+1} + 3 (3n+8)(3n+7) X P_{n+2} - P_{n+3}, as
/// printed for a = (3,0), b = (0,0).
Recurrence printed_recurrence_cubic_pair();

struct UnderdeterminedSystem : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DiscoveryOptions {
  unsigned order = 2;
  unsigned deg_n = 1;
  unsigned deg_x = 1;
  /// Fresh values of n a candidate must also satisfy.
  unsigned verify_count = 20;
  /// Number of consecutive n used to fit; chosen automatically when absent.
  std::optional<unsigned> fit_samples;
};

struct DiscoveredRecurrence {
  Recurrence recurrence;
  unsigned fit_first = 0;
  unsigned fit_last = 0;
  unsigned verified_first = 0;
  unsigned verified_last = 0;
  std::size_t nullspace_dim = 0;
};

/// Ansatz search for a recurrence with coefficient degrees <= deg_n in n and
/// <= deg_x in X, by exact nullspace computation over sampled n. Returns
/// nothing when only the trivial solution exists. Throws
/// UnderdeterminedSystem if fit_samples gives too few equations.
std::optional<DiscoveredRecurrence> discover_recurrence(const PolyFamily& family, const DiscoveryOptions& options);
std::optional<DiscoveredRecurrence> discover_recurrence(const ExponentPair& pair, const DiscoveryOptions& options);

}  // namespace faclab
