#include "fhpt/su11.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fhpt/errors.hpp"

namespace fhpt::su11 {

namespace {

using Poly = std::vector<double>;

// Polynomials are held in the Gegenbauer basis C_k^lambda of the envelope
// exponent; both building blocks of the ladders are three-term maps there.
//   y C_k              = [(k+1) C_{k+1} + (k+2lambda-1) C_{k-1}] / (2(k+lambda))
//   (1-y^2) C_k'       = [(k+2lambda-1)(k+2lambda) C_{k-1} - k(k+1) C_{k+1}]
//                        / (2(k+lambda))
Poly times_y(const Poly& q, double lambda) {
  Poly out(q.size() + 1, 0.0);
  for (std::size_t k = 0; k < q.size(); ++k) {
    const double d = 2.0 * (k + lambda);
    out[k + 1] += q[k] * (k + 1.0) / d;
    if (k > 0) out[k - 1] += q[k] * (k + 2.0 * lambda - 1.0) / d;
  }
  return out;
}

Poly weighted_derivative(const Poly& q, double lambda) {
  Poly out(q.size() + 1, 0.0);
  for (std::size_t k = 0; k < q.size(); ++k) {
    const double d = 2.0 * (k + lambda);
    out[k + 1] -= q[k] * k * (k + 1.0) / d;
    if (k > 0) {
      out[k - 1] += q[k] * (k + 2.0 * lambda - 1.0) * (k + 2.0 * lambda) / d;
    }
  }
  return out;
}

// a * p + b * q
Poly combine(double a, const Poly& p, double b, const Poly& q) {
  Poly out(std::max(p.size(), q.size()), 0.0);
  for (std::size_t k = 0; k < p.size(); ++k) out[k] += a * p[k];
  for (std::size_t k = 0; k < q.size(); ++k) out[k] += b * q[k];
  return out;
}

void scale(Poly& q, double s) {
  for (double& v : q) v *= s;
}

// Drops trailing entries that are zero or pure cancellation noise.
void trim(Poly& q) {
  double peak = 0.0;
  for (double v : q) peak = std::max(peak, std::abs(v));
  while (q.size() > 1 && std::abs(q.back()) <= 1e-15 * peak) q.pop_back();
  if (peak == 0.0) q.assign(1, 0.0);
}

double sum_series(const Poly& q, double lambda, double y) {
  double prev = 1.0;
  double acc = q[0];
  if (q.size() == 1) return acc;
  double cur = 2.0 * lambda * y;
  acc += q[1] * cur;
  for (std::size_t k = 1; k + 1 < q.size(); ++k) {
    const double next =
        (2.0 * (k + lambda) * y * cur - (k + 2.0 * lambda - 1.0) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
    acc += q[k + 1] * cur;
  }
  return acc;
}

template <typename F>
double max_over_grid(const std::vector<double>& grid, F&& f) {
  double worst = 0.0;
  for (const double tau : grid) worst = std::max(worst, std::abs(f(tau)));
  return worst;
}

}  // namespace

LadderCoefficients ladder_coefficients(int n, double rep_index) {
  if (n < 0) throw DomainError("ladder_coefficients: n must be >= 0");
  const double two_l = 2.0 * rep_index;
  return {n, rep_index, std::sqrt((n + 1.0) * (n + two_l + 1.0)),
          std::sqrt(n * (n + two_l)), n + rep_index + 0.5};
}

double EnvelopedPoly::operator()(double y) const {
  const double acc = sum_series(coeffs, envelope_exponent, y);
  if (acc == 0.0) return 0.0;
  return std::pow(1.0 - y * y, 0.5 * envelope_exponent) * acc;
}

double EnvelopedPoly::at_tau(double tau) const {
  const double acc = sum_series(coeffs, envelope_exponent, std::sin(tau));
  return std::pow(std::cos(tau), envelope_exponent) * acc;
}

bool EnvelopedPoly::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](double v) { return v == 0.0; });
}

EnvelopedPoly to_enveloped(const model::BasisState& state) {
  EnvelopedPoly f{state.envelope_exponent(), Poly(state.n() + 1, 0.0)};
  f.coeffs.back() = state.norm();
  return f;
}

EnvelopedPoly raise(const EnvelopedPoly& f, int m, double rep_index) {
  EnvelopedPoly out{f.envelope_exponent, {0.0}};
  if (f.is_zero()) return out;
  const double lambda = f.envelope_exponent;
  // -(1-y^2) h' + y (m + L + 1/2) h  with h = (1-y^2)^{lambda/2} Q
  //   = (1-y^2)^{lambda/2} [(m + L + 1/2 + lambda) y Q - (1-y^2) Q'].
  out.coeffs = combine(-1.0, weighted_derivative(f.coeffs, lambda),
                       m + rep_index + 0.5 + lambda, times_y(f.coeffs, lambda));
  const double two = 2.0 * m + 2.0 * rep_index;
  scale(out.coeffs, std::sqrt((two + 3.0) / (two + 1.0)));
  trim(out.coeffs);
  return out;
}

EnvelopedPoly lower(const EnvelopedPoly& f, int m, double rep_index) {
  EnvelopedPoly out{f.envelope_exponent, {0.0}};
  if (f.is_zero()) return out;
  const double lambda = f.envelope_exponent;
  // (1-y^2) h' + y (m + L + 1/2) h
  //   = (1-y^2)^{lambda/2} [(1-y^2) Q' + (m + L + 1/2 - lambda) y Q].
  out.coeffs = combine(1.0, weighted_derivative(f.coeffs, lambda),
                       m + rep_index + 0.5 - lambda, times_y(f.coeffs, lambda));
  const double two = 2.0 * m + 2.0 * rep_index;
  // The n = 0 member only ever meets psi_0, which its bracket annihilates;
  // the magnitude keeps the factor real when 2L < 1.
  scale(out.coeffs, std::sqrt(std::abs(two - 1.0) / (two + 1.0)));
  trim(out.coeffs);
  return out;
}

EnvelopedPoly apply_raising(const model::BasisState& state) {
  return raise(to_enveloped(state), state.n(), state.rep_index());
}

EnvelopedPoly apply_lowering(const model::BasisState& state) {
  return lower(to_enveloped(state), state.n(), state.rep_index());
}

double raising_residual(int n, const model::PotentialParams& p,
                        const std::vector<double>& grid) {
  const auto psi = model::build_basis_state(n, p);
  const auto next = model::build_basis_state(n + 1, p);
  const auto image = apply_raising(psi);
  const double eig = ladder_coefficients(n, psi.rep_index()).raise_eig;
  return max_over_grid(grid, [&](double tau) {
    return image.at_tau(tau) - eig * next(tau);
  });
}

double lowering_residual(int n, const model::PotentialParams& p,
                         const std::vector<double>& grid) {
  const auto psi = model::build_basis_state(n, p);
  const auto image = apply_lowering(psi);
  if (n == 0) {
    return max_over_grid(grid, [&](double tau) { return image.at_tau(tau); });
  }
  const auto prev = model::build_basis_state(n - 1, p);
  const double eig = ladder_coefficients(n, psi.rep_index()).lower_eig;
  return max_over_grid(grid, [&](double tau) {
    return image.at_tau(tau) - eig * prev(tau);
  });
}

double commutator_check(int n, const model::PotentialParams& p,
                        const std::vector<double>& grid) {
  const auto psi = model::build_basis_state(n, p);
  const double rep = psi.rep_index();
  const auto f = to_enveloped(psi);
  const auto lower_raise = lower(raise(f, n, rep), n + 1, rep);
  const auto raise_lower = raise(lower(f, n, rep), n - 1, rep);
  const double two_gamma0 = 2.0 * ladder_coefficients(n, rep).gamma0;
  return max_over_grid(grid, [&](double tau) {
    return lower_raise.at_tau(tau) - raise_lower.at_tau(tau) -
           two_gamma0 * psi(tau);
  });
}

double casimir_eigenvalue(int n, double rep_index) {
  const auto here = ladder_coefficients(n, rep_index);
  const auto next = ladder_coefficients(n + 1, rep_index);
  return here.gamma0 * here.gamma0 -
         0.5 * (next.lower_eig * next.lower_eig +
                here.lower_eig * here.lower_eig);
}

double casimir_residual(int n, const model::PotentialParams& p,
                        const std::vector<double>& grid) {
  const auto psi = model::build_basis_state(n, p);
  const double rep = psi.rep_index();
  const auto f = to_enveloped(psi);
  const auto lower_raise = lower(raise(f, n, rep), n + 1, rep);
  const auto raise_lower = raise(lower(f, n, rep), n - 1, rep);
  const double g0 = ladder_coefficients(n, rep).gamma0;
  const double expected = rep * rep - 0.25;
  return max_over_grid(grid, [&](double tau) {
    const double v = psi(tau);
    return g0 * g0 * v -
           0.5 * (raise_lower.at_tau(tau) + lower_raise.at_tau(tau)) -
           expected * v;
  });
}

AdjointPair adjoint_elements(int n, const model::PotentialParams& p,
                             const quadrature::QuadratureRule& rule) {
  const auto psi = model::build_basis_state(n, p);
  const auto next = model::build_basis_state(n + 1, p);
  const auto raised = apply_raising(psi);
  const auto lowered = apply_lowering(next);
  constexpr double kHalfPi = 0.5 * std::numbers::pi;
  const double up = quadrature::integrate_finite(
      [&](double tau) { return next(tau) * raised.at_tau(tau); }, -kHalfPi,
      kHalfPi, rule);
  const double down = quadrature::integrate_finite(
      [&](double tau) { return lowered.at_tau(tau) * psi(tau); }, -kHalfPi,
      kHalfPi, rule);
  return {up, down};
}

}  // namespace fhpt::su11
