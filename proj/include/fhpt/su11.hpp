#pragma once

// Ladder operators of the Poschl-Teller eigenfunction family, written in
// y = sin(tau). Each operator carries the index m of the state it is meant
// to act on:
//   raise_m = sqrt((2m+2L+3)/(2m+2L+1)) [-(1-y^2) d/dy + y(m+L+1/2)]
//   lower_m = sqrt((2m+2L-1)/(2m+2L+1)) [ (1-y^2) d/dy + y(m+L+1/2)]
// On psi_m they give sqrt((m+1)(m+2L+1)) psi_{m+1} and
// sqrt(m(m+2L)) psi_{m-1}. Functions they act on are kept in the exact form
// (1-y^2)^{lambda/2} Q(y) with Q expanded in Gegenbauer polynomials C_k^lambda.

#include <vector>

#include "fhpt/model.hpp"
#include "fhpt/quadrature.hpp"

namespace fhpt::su11 {

struct LadderCoefficients {
  int n;
  double rep_index;
  double raise_eig;  // sqrt((n+1)(n+2L+1))
  double lower_eig;  // sqrt(n(n+2L))
  double gamma0;     // n + L + 1/2
};

LadderCoefficients ladder_coefficients(int n, double rep_index);

/// (1-y^2)^{envelope_exponent/2} * sum_k coeffs[k] C_k^{envelope_exponent}(y).
struct EnvelopedPoly {
  double envelope_exponent = 0.0;
  std::vector<double> coeffs;

  double operator()(double y) const;
  double at_tau(double tau) const;
  bool is_zero() const;
};

EnvelopedPoly to_enveloped(const model::BasisState& state);

/// Raising member with index m applied to f.
EnvelopedPoly raise(const EnvelopedPoly& f, int m, double rep_index);
/// Lowering member with index m applied to f.
EnvelopedPoly lower(const EnvelopedPoly& f, int m, double rep_index);

/// Gamma+ psi_n, exact.
EnvelopedPoly apply_raising(const model::BasisState& state);
/// Gamma- psi_n, exact; identically zero for n = 0.
EnvelopedPoly apply_lowering(const model::BasisState& state);

/// max over tau in `grid` of |Gamma+ psi_n - raise_eig psi_{n+1}|.
double raising_residual(int n, const model::PotentialParams& p,
                        const std::vector<double>& grid);
/// max over tau in `grid` of |Gamma- psi_n - lower_eig psi_{n-1}|
/// (|Gamma- psi_0| for n = 0).
double lowering_residual(int n, const model::PotentialParams& p,
                         const std::vector<double>& grid);

/// max over the grid of |(Gamma- Gamma+ - Gamma+ Gamma-) psi_n
/// - 2 (n+L+1/2) psi_n|, each product composed from single applications
/// with the neighbour's index.
double commutator_check(int n, const model::PotentialParams& p,
                        const std::vector<double>& grid);

/// gamma0^2 - (lower_eig(n+1)^2 + lower_eig(n)^2)/2. Equals L^2 - 1/4.
double casimir_eigenvalue(int n, double rep_index);

/// max over the grid of |C psi_n - (L^2 - 1/4) psi_n| with
/// C = Gamma^2 - (Gamma+ Gamma- + Gamma- Gamma+)/2 applied through the
/// differential operators.
double casimir_residual(int n, const model::PotentialParams& p,
                        const std::vector<double>& grid);

struct AdjointPair {
  double raise_element;  // <psi_{n+1} | Gamma+ psi_n>
  double lower_element;  // <Gamma- psi_{n+1} | psi_n>
};

/// Both matrix elements over the full tau interval by quadrature.
AdjointPair adjoint_elements(int n, const model::PotentialParams& p,
                             const quadrature::QuadratureRule& rule);

}  // namespace fhpt::su11
