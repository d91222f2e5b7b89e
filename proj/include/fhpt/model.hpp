#pragma once

// Reduced Feinberg-Horodecki equation with the trigonometric Poschl-Teller
// potential V(t) = A(A-1)/cos^2(c1 t): parameters, the quantized momentum
// spectrum and the normalized eigenfunctions
//   psi_n(tau) = norm * cos^lambda(tau) * C_n^lambda(sin tau),
// with tau = c1 t, lambda = A'/2 and representation index L = lambda - 1/2.

#include <vector>

#include "fhpt/quadrature.hpp"
#include "fhpt/specfun.hpp"

namespace fhpt::model {

/// Physical inputs. Defaults are natural units with M = hbar^2/(2 m0 c^2) = 1.
struct PotentialParams {
  double A = 2.0;
  double c1 = 1.0;
  double m0 = 0.5;
  double c = 1.0;
  double hbar = 1.0;
  /// k in A' = 1 + sqrt(1 + k A(A-1)/(c1^2 M)). k = 4 makes the envelope
  /// cos^{A'/2} an exact solution; k = 16 is kept as an option for
  /// comparison with the larger constant.
  double radicand_factor = 4.0;
};

/// M(c) = hbar^2 / (2 m0 c^2).
double mass_scale(const PotentialParams& p);

/// 1 + k A(A-1)/(c1^2 M).
double a_prime_radicand(const PotentialParams& p);

/// Throws DomainError naming the first violated invariant.
void validate(const PotentialParams& p);

double derive_a_prime(const PotentialParams& p);

/// L = (A' - 1)/2.
double representation_index(const PotentialParams& p);

/// P_n = (c1^2 M / c) (n + A'/2)^2.
double momentum_level(int n, const PotentialParams& p);

/// A(A-1)/cos^2(c1 t). Throws SingularityError at the poles.
double potential_value(double t, const PotentialParams& p);

/// Interval on which states are normalized.
///   kFull: tau in (-pi/2, pi/2); all pairs orthogonal.
///   kHalf: tau in (0, pi/2); diagonal normalized, opposite-parity pairs
///          overlap.
enum class IntervalMode { kFull, kHalf };

class BasisState {
 public:
  BasisState(int n, double rep_index, IntervalMode mode);

  int n() const { return n_; }
  /// Representation index L.
  double rep_index() const { return rep_index_; }
  /// Power of cos(tau), A'/2 = L + 1/2.
  double envelope_exponent() const { return lambda_; }
  double norm() const { return norm_; }
  IntervalMode mode() const { return mode_; }
  const specfun::GegenbauerPoly& poly() const { return poly_; }

  /// psi_n(tau); DomainError unless |tau| < pi/2.
  double operator()(double tau) const;
  /// psi_n as a function of y = sin(tau), |y| <= 1.
  double at_y(double y) const;
  /// d^2 psi / d tau^2, from exact polynomial derivatives.
  double second_derivative(double tau) const;

 private:
  int n_;
  double rep_index_;
  double lambda_;
  IntervalMode mode_;
  specfun::GegenbauerPoly poly_;
  double norm_;
};

/// Squared norm of cos^lambda(tau) C_n^lambda(sin tau) over the full
/// interval, in log form.
double log_full_interval_norm2(int n, double lambda);

/// sqrt((2n+2L+1) Gamma(n+1) / Gamma(n+2L+1)): the constant multiplying
/// (1-y^2)^{1/4} P_{n+L}^L(y) for unit norm on the half interval.
double legendre_normalization(int n, double rep_index);

BasisState build_basis_state(int n, const PotentialParams& p,
                             IntervalMode mode = IntervalMode::kFull);

double eval_state(const BasisState& state, double tau);

/// sqrt(c1) psi_n(c1 t): the state normalized in t rather than tau.
double eval_state_time(const BasisState& state, const PotentialParams& p,
                       double t);

/// Unnormalized hypergeometric form
///   2^{-A'/2} cos^{A'/2}(tau) 2F1(-n, n+A'; 1/2 + A'/2; (1 - sin tau)/2).
double eval_hypergeometric_form(int n, const PotentialParams& p, double tau);

/// <psi_m | psi_n> on the interval of `mode` by Gauss-Legendre in tau.
double overlap(int m, int n, const PotentialParams& p,
               const quadrature::QuadratureRule& rule,
               IntervalMode mode = IntervalMode::kFull);

/// Row-major (nmax+1)^2 Gram matrix, states sampled once per node.
std::vector<double> gram_matrix(int nmax, const PotentialParams& p,
                                const quadrature::QuadratureRule& rule,
                                IntervalMode mode = IntervalMode::kFull);

/// Uniform interior grid on (-pi/2 + margin, pi/2 - margin).
std::vector<double> interior_grid(int points, double margin = 1e-3);

/// max |c1^2 psi'' + (c/M) P psi - (1/M) A(A-1) psi / cos^2 tau| / max |psi|
/// over the grid.
double residual_ode(const BasisState& state, double momentum,
                    const PotentialParams& p, const std::vector<double>& grid);

/// Number of sign changes of psi on the grid.
int count_sign_changes(const BasisState& state,
                       const std::vector<double>& grid);

}  // namespace fhpt::model
