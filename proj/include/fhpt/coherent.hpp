#pragma once

// Barut-Girardello coherent states |z, L> = sum_n c_n |n, L>, the
// normalized eigenstates of the lowering operator, with
//   c_n = sqrt(|z|^{2L} / I_{2L}(2|z|)) z^n / sqrt(n! Gamma(n+2L+1)).

#include <complex>
#include <functional>
#include <vector>

#include "fhpt/model.hpp"
#include "fhpt/quadrature.hpp"

namespace fhpt::coherent {

using Complex = std::complex<double>;

/// Truncation tolerance on both the discarded norm and the boundary
/// component z c_N.
inline constexpr double kDefaultTruncationTol = 1e-24;
inline constexpr double kMaxModulus = 1e3;

struct CoherentState {
  Complex z;
  double rep_index = 0.0;
  /// Highest retained n; coeffs has truncation + 1 entries.
  int truncation = 0;
  std::vector<Complex> coeffs;
  /// Upper bound on the discarded sum of |c_n|^2, n > truncation.
  double tail_bound = 0.0;
};

CoherentState build_coherent_state(Complex z, double rep_index,
                                   double tol = kDefaultTruncationTol);
CoherentState build_coherent_state(Complex z, const model::PotentialParams& p,
                                   double tol = kDefaultTruncationTol);

/// c_n straight from the Gamma-function formula, no recurrence.
Complex direct_coefficient(int n, Complex z, double rep_index);

double norm_squared(const CoherentState& cs);

/// Running sums of |c_n|^2.
std::vector<double> partial_norms(const CoherentState& cs);

/// ||(Gamma- - z)|z, L>|| in coefficient space, with c_{N+1} = 0.
double lowering_eigenstate_residual(const CoherentState& cs);

/// sum_n |c_n|^2 f(n) for observables diagonal in |n, L>.
double expectation_diagonal(const CoherentState& cs,
                            const std::function<double(int)>& f);

/// sum_{n, n'} conj(c_{n'}) c_n <n'|O|n>; `element(n_prime, n)`.
Complex general_expectation(
    const CoherentState& cs,
    const std::function<Complex(int, int)>& element);

/// <n> = |z| I_{2L+1}(2|z|) / I_{2L}(2|z|).
double mean_number_closed_form(Complex z, double rep_index);

struct MeasureSample {
  double r;
  double theta;
  double density;  // (2/pi) I_{2L}(2r) K_{2L}(2r) r
};

MeasureSample measure_density(double r, double theta, double rep_index);

struct ResolutionElement {
  double value = 0.0;
  /// int_0^inf r^{2n+2L+1} K_{2L}(2r) dr by quadrature (diagonal only).
  double radial_integral = 0.0;
  /// n! Gamma(n+2L+1) / 4.
  double radial_closed_form = 0.0;
  bool tail_warning = false;
};

/// Matrix element <n| int dsigma |z><z| |n'>. The angular integral is
/// 2 pi delta_{n n'} exactly; the I_{2L} factors of measure and
/// coefficients cancel, leaving
///   4 / (n! Gamma(n+2L+1)) int_0^inf r^{2n+2L+1} K_{2L}(2r) dr.
ResolutionElement resolution_of_identity_check(
    int n, int n_prime, double rep_index,
    const quadrature::QuadratureRule& rule,
    const quadrature::SemiInfiniteOptions& options = {});

}  // namespace fhpt::coherent
