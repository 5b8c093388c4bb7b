#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "faclab/gaussian_rational.hpp"
#include "faclab/multi_poly.hpp"
#include "faclab/uni_poly.hpp"

namespace faclab {

/// X1 ... Xm (mu_1 X1 + ... + mu_m Xm), with m = mu.size().
struct EFamilyElement {
  std::vector<GaussianRational> mu;

  std::size_t m() const { return mu.size(); }
  /// Every mu_i nonzero, i.e. N(f) = m.
  bool is_full() const;
};

MultiPoly expand_e(const EFamilyElement& el);

/// (n!)^{m+1} u_n == L(f^n), with u_n from the multiplicative formula.
bool check_bridge_identity(const EFamilyElement& el, unsigned n);

/// An E-family element with the zero mu_i removed.
struct ReducedElement {
  std::size_t m_prime = 0;
  std::vector<GaussianRational> mu_hat;
  /// Increasing map {0..m'-1} -> original zero-based variable indices.
  std::vector<std::size_t> sigma;
};

ReducedElement reduce_hat(const EFamilyElement& el);
MultiPoly expand_hat(const ReducedElement& reduced);

/// sum_{k <= n/2} (2n-k)! / ((n-2k)! k!) X^k.
UniPoly p31_poly(unsigned n);

/// -3(3n+4)(3n+2) X^2 P_n - (2n+3)(9X+2) P_{n+1} + (4X+1) P_{n+2} for an
/// arbitrary family P; zero when the three-term recurrence holds at n.
UniPoly p31_recurrence_residual(const std::function<UniPoly(unsigned)>& family, unsigned n);
bool verify_p31_recurrence(unsigned n_max);

/// The five-term certificate expression as a polynomial in (n, k).
MultiPoly certificate_expression();
bool verify_certificate_identity();

/// n(n-1)(mu1-mu2)^2 u_n + (n-1)(2n-1)(mu1+mu2)(mu1-2mu2)(mu2-2mu1) u_{n-1}
///   - 3(3n-4)(3n-2) mu1^2 mu2^2 u_{n-2}, with u from the multiplicative formula.
GaussianRational furter_residual(const GaussianRational& mu1, const GaussianRational& mu2, unsigned n);
bool verify_furter_recurrence(const GaussianRational& mu1, const GaussianRational& mu2, unsigned n_max);

/// 2F1((1-n)/2, -n/2; -2n; -4X), which terminates at degree floor(n/2).
UniPoly hypergeometric_2f1(unsigned n);
bool verify_hypergeometric_form(unsigned n_max);

struct BridgePoint {
  std::vector<GaussianRational> mu;
  std::vector<GaussianRational> u_window;
  std::vector<GaussianRational> l_window;
  bool u_vanishes = false;
  bool l_vanishes = false;
  std::optional<std::string> violation;
};

struct BridgeProbeReport {
  std::size_t points = 0;
  std::vector<BridgePoint> violations;
};

/// Windows u_n..u_{n+m-1} and L(f^n)..L(f^{n+m-1}) for one mu. A violation
/// is recorded when exactly one window vanishes, or when either vanishes for
/// nonzero mu.
BridgePoint bridge_probe_point(const EFamilyElement& el, unsigned n);

/// bridge_probe_point over every mu in grid^m (including mu = 0).
BridgeProbeReport bridge_equivalence_probe(unsigned m, std::span<const GaussianRational> grid, unsigned n,
                                           unsigned threads = 1);

}  // namespace faclab
