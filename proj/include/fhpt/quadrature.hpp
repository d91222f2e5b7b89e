#pragma once

#include <functional>
#include <vector>

namespace fhpt::quadrature {

/// Gauss-Legendre rule on [-1, 1]; nodes ascending.
struct QuadratureRule {
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

inline constexpr int kMaxOrder = 4096;
inline constexpr int kDefaultOrder = 200;

/// Nodes and weights by Newton iteration on P_order. 1 <= order <= 4096.
QuadratureRule gauss_legendre(int order);

using Integrand = std::function<double(double)>;

/// Affine-mapped rule on [a, b]. Throws IntegrandError naming the node when
/// f returns a non-finite value.
double integrate_finite(const Integrand& f, double a, double b,
                        const QuadratureRule& rule);

struct SemiInfiniteOptions {
  double r_min = 1e-6;
  /// <= 0 selects default_r_max(polynomial_degree).
  double r_max = 0.0;
  double polynomial_degree = 0.0;
  int panels = 32;
  /// Relative size of the truncation tail that raises the warning flag.
  double tail_warn_ratio = 1e-12;
};

struct SemiInfiniteResult {
  double value = 0.0;
  /// Contribution of [0, r_min], integrated from small-argument asymptotics.
  double head = 0.0;
  /// Estimate of the discarded integral beyond r_max.
  double tail_estimate = 0.0;
  bool tail_warning = false;
};

/// max(30, 5 + 10 * degree).
double default_r_max(double polynomial_degree);

/// Integral over (0, inf) of g(r) K_nu(scale * r).
///
/// Panel-wise Gauss-Legendre on geometrically graded panels over
/// [r_min, r_max]. On [0, r_min] g is fitted as a power law from
/// g(r_min) and g(r_min / 2), and K_nu is replaced by its leading
/// small-argument terms; that piece is integrated in closed form. Exact
/// structure for g(r) = r^mu; throws DomainError when the fitted power
/// makes the integral diverge at 0.
SemiInfiniteResult integrate_semi_infinite_k_weight(
    const Integrand& g, double nu, const QuadratureRule& rule,
    const SemiInfiniteOptions& options = {}, double scale = 2.0);

/// Closed form of the integral of x^mu K_nu(a x) over (0, inf):
///   2^{mu-1} / a^{mu+1} Gamma((mu+nu+1)/2) Gamma((mu-nu+1)/2),
/// valid for mu + 1 > |nu| and a > 0 (DomainError otherwise).
double k_moment_closed_form(double mu, double nu, double a);

}  // namespace fhpt::quadrature
