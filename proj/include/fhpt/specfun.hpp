#pragma once

// Special-function kernel: Gamma, terminating 2F1, Gegenbauer polynomials,
// associated Legendre functions of shifted degree, and modified Bessel
// functions I_nu, K_nu of real order. All functions are pure.

#include <vector>

namespace fhpt::specfun {

inline constexpr double kDefaultSeriesTol = 1e-14;

/// Gamma(x) for x > 0. Throws DomainError for x <= 0 or non-finite x.
double gamma_fn(double x);

/// log Gamma(x) for x > 0; use this for ratios of Gammas with large arguments.
double log_gamma(double x);

/// Terminating Gauss series 2F1(-n, b; c; x), summed by term recurrence.
/// Throws DomainError when c + k == 0 for some k < n.
double hyp2f1_terminating(int n, double b, double c, double x);

/// Gegenbauer polynomial C_n^lambda held as monomial coefficients in y.
///
/// The coefficients are exact in structure (alternating parity) but lose
/// accuracy under Horner evaluation for large n; `operator()` evaluates by
/// the three-term recurrence instead and is the accurate path.
class GegenbauerPoly {
 public:
  GegenbauerPoly(int degree, double index);

  int degree() const { return degree_; }
  double index() const { return index_; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  /// C_n^lambda(y) by the three-term recurrence.
  double operator()(double y) const;
  /// d/dy C_n^lambda(y) = 2 lambda C_{n-1}^{lambda+1}(y).
  double derivative(double y) const;
  /// d^2/dy^2 C_n^lambda(y) = 4 lambda (lambda+1) C_{n-2}^{lambda+2}(y).
  double second_derivative(double y) const;
  /// Horner evaluation of the stored coefficients.
  double eval_monomial(double y) const;

 private:
  int degree_;
  double index_;
  std::vector<double> coeffs_;
};

GegenbauerPoly gegenbauer(int n, double lambda);

/// C_n^lambda(y) by recurrence, without building coefficients.
double gegenbauer_value(int n, double lambda, double y);

/// Sign attached to P_{n+L}^L: (-1)^floor(L), the Condon-Shortley phase
/// for integer L.
double legendre_phase(double order);

/// P_{n+L}^{L}(y), the associated Legendre function of degree n+L and order L
/// continued to real L through its terminating hypergeometric form:
///   P = phase * Gamma(2L+1) / (2^L Gamma(L+1)) (1-y^2)^{L/2} C_n^{L+1/2}(y).
/// Throws DomainError for |y| > 1.
double assoc_legendre_half_shift(int n, double order, double y);

/// Modified Bessel function of the first kind I_nu(x), nu >= 0, x >= 0.
/// Throws OverflowError when the value exceeds double range.
double bessel_i(double nu, double x);

/// log I_nu(x) for x > 0 (or x == 0 with nu == 0); finite far beyond the
/// range where bessel_i overflows.
double log_bessel_i(double nu, double x);

/// Modified Bessel function of the second kind K_nu(x), nu >= 0, x > 0.
double bessel_k(double nu, double x);

/// K_nu(x) and K_{nu+1}(x) from one evaluation.
struct BesselKPair {
  double k_nu;
  double k_nu1;
};
BesselKPair bessel_k_pair(double nu, double x);

/// Partial sums of sum_k x^{2k} / (k! Gamma(k+m+1)), truncated once the
/// geometric tail bound drops below `tail_tol` times the running sum.
/// Equals x^{-m} I_m(2x) in the limit.
struct SeriesResult {
  double value;
  int terms;
  double tail_bound;
};
SeriesResult bessel_moment_series(double x, double m, int power = 0,
                                  double tail_tol = kDefaultSeriesTol);

}  // namespace fhpt::specfun
