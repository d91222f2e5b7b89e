#include "fhpt/model.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "fhpt/errors.hpp"

namespace fhpt::model {

namespace {

constexpr double kHalfPi = 0.5 * std::numbers::pi;

void require_finite_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(name) + " must be finite and > 0");
  }
}

void require_open_interval(double tau) {
  if (!(std::abs(tau) < kHalfPi)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "tau = " << tau << " outside (-pi/2, pi/2)";
    throw DomainError(msg.str());
  }
}

}  // namespace

double mass_scale(const PotentialParams& p) {
  return p.hbar * p.hbar / (2.0 * p.m0 * p.c * p.c);
}

double a_prime_radicand(const PotentialParams& p) {
  return 1.0 +
         p.radicand_factor * p.A * (p.A - 1.0) / (p.c1 * p.c1 * mass_scale(p));
}

void validate(const PotentialParams& p) {
  if (!std::isfinite(p.A)) throw DomainError("A must be finite");
  require_finite_positive(p.c1, "c1");
  require_finite_positive(p.m0, "m0");
  require_finite_positive(p.c, "c");
  require_finite_positive(p.hbar, "hbar");
  require_finite_positive(p.radicand_factor, "radicand factor");
  const double radicand = a_prime_radicand(p);
  if (!(radicand >= 0.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "A' radicand 1 + k A(A-1)/(c1^2 M) = " << radicand
        << " is negative; A(A-1) must be >= "
        << -p.c1 * p.c1 * mass_scale(p) / p.radicand_factor << " (got "
        << p.A * (p.A - 1.0) << ")";
    throw DomainError(msg.str());
  }
}

double derive_a_prime(const PotentialParams& p) {
  validate(p);
  return 1.0 + std::sqrt(a_prime_radicand(p));
}

double representation_index(const PotentialParams& p) {
  return 0.5 * (derive_a_prime(p) - 1.0);
}

double momentum_level(int n, const PotentialParams& p) {
  if (n < 0) throw DomainError("momentum_level: n must be >= 0");
  const double shifted = n + 0.5 * derive_a_prime(p);
  return p.c1 * p.c1 * mass_scale(p) / p.c * shifted * shifted;
}

double potential_value(double t, const PotentialParams& p) {
  validate(p);
  const double cs = std::cos(p.c1 * t);
  if (std::abs(cs) < 1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "potential is singular at c1 t = " << p.c1 * t;
    throw SingularityError(msg.str());
  }
  return p.A * (p.A - 1.0) / (cs * cs);
}

double log_full_interval_norm2(int n, double lambda) {
  // pi 2^{1-2 lambda} Gamma(n + 2 lambda) / (n! (n + lambda) Gamma(lambda)^2)
  return std::log(std::numbers::pi) + (1.0 - 2.0 * lambda) * std::numbers::ln2 +
         specfun::log_gamma(n + 2.0 * lambda) - specfun::log_gamma(n + 1.0) -
         std::log(n + lambda) - 2.0 * specfun::log_gamma(lambda);
}

double legendre_normalization(int n, double rep_index) {
  return std::sqrt((2.0 * n + 2.0 * rep_index + 1.0) *
                   std::exp(specfun::log_gamma(n + 1.0) -
                            specfun::log_gamma(n + 2.0 * rep_index + 1.0)));
}

BasisState::BasisState(int n, double rep_index, IntervalMode mode)
    : n_(n),
      rep_index_(rep_index),
      lambda_(rep_index + 0.5),
      mode_(mode),
      poly_(n, rep_index + 0.5) {
  const double half_log = -0.5 * log_full_interval_norm2(n, lambda_);
  norm_ = std::exp(mode == IntervalMode::kHalf
                       ? half_log + 0.5 * std::numbers::ln2
                       : half_log);
}

double BasisState::operator()(double tau) const {
  require_open_interval(tau);
  return norm_ * std::pow(std::cos(tau), lambda_) * poly_(std::sin(tau));
}

double BasisState::at_y(double y) const {
  if (!(std::abs(y) <= 1.0)) throw DomainError("at_y: |y| > 1");
  return norm_ * std::pow(1.0 - y * y, 0.5 * lambda_) * poly_(y);
}

double BasisState::second_derivative(double tau) const {
  require_open_interval(tau);
  const double u = std::cos(tau);
  const double s = std::sin(tau);
  const double c = poly_(s);
  const double dc = poly_.derivative(s);
  const double d2c = poly_.second_derivative(s);
  const double ul = std::pow(u, lambda_);
  // d^2/dtau^2 [u^lambda C(s)] with u = cos tau, s = sin tau.
  const double singular =
      lambda_ * (lambda_ - 1.0) * std::pow(u, lambda_ - 2.0) * s * s * c;
  return norm_ * (singular - lambda_ * ul * c -
                  (2.0 * lambda_ + 1.0) * ul * s * dc + ul * u * u * d2c);
}

BasisState build_basis_state(int n, const PotentialParams& p,
                             IntervalMode mode) {
  if (n < 0) throw DomainError("build_basis_state: n must be >= 0");
  return BasisState(n, representation_index(p), mode);
}

double eval_state(const BasisState& state, double tau) { return state(tau); }

double eval_state_time(const BasisState& state, const PotentialParams& p,
                       double t) {
  return std::sqrt(p.c1) * state(p.c1 * t);
}

double eval_hypergeometric_form(int n, const PotentialParams& p, double tau) {
  require_open_interval(tau);
  const double a_prime = derive_a_prime(p);
  const double envelope =
      std::pow(2.0, -0.5 * a_prime) * std::pow(std::cos(tau), 0.5 * a_prime);
  return envelope * specfun::hyp2f1_terminating(n, n + a_prime,
                                                0.5 + 0.5 * a_prime,
                                                0.5 * (1.0 - std::sin(tau)));
}

double overlap(int m, int n, const PotentialParams& p,
               const quadrature::QuadratureRule& rule, IntervalMode mode) {
  const BasisState a = build_basis_state(m, p, mode);
  const BasisState b = build_basis_state(n, p, mode);
  const double lo = mode == IntervalMode::kFull ? -kHalfPi : 0.0;
  return quadrature::integrate_finite(
      [&](double tau) { return a(tau) * b(tau); }, lo, kHalfPi, rule);
}

std::vector<double> gram_matrix(int nmax, const PotentialParams& p,
                                const quadrature::QuadratureRule& rule,
                                IntervalMode mode) {
  const int size = nmax + 1;
  const double lo = mode == IntervalMode::kFull ? -kHalfPi : 0.0;
  const double mid = 0.5 * (lo + kHalfPi);
  const double half = 0.5 * (kHalfPi - lo);
  std::vector<double> samples(static_cast<std::size_t>(size) * rule.order);
  for (int k = 0; k < size; ++k) {
    const BasisState s = build_basis_state(k, p, mode);
    for (int i = 0; i < rule.order; ++i) {
      samples[static_cast<std::size_t>(k) * rule.order + i] =
          s(mid + half * rule.nodes[i]);
    }
  }
  std::vector<double> gram(static_cast<std::size_t>(size) * size, 0.0);
  for (int a = 0; a < size; ++a) {
    for (int b = a; b < size; ++b) {
      double sum = 0.0;
      for (int i = 0; i < rule.order; ++i) {
        sum += rule.weights[i] *
               samples[static_cast<std::size_t>(a) * rule.order + i] *
               samples[static_cast<std::size_t>(b) * rule.order + i];
      }
      gram[static_cast<std::size_t>(a) * size + b] = half * sum;
      gram[static_cast<std::size_t>(b) * size + a] = half * sum;
    }
  }
  return gram;
}

std::vector<double> interior_grid(int points, double margin) {
  if (points < 2) throw DomainError("interior_grid: need >= 2 points");
  const double lo = -kHalfPi + margin;
  const double hi = kHalfPi - margin;
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i) {
    grid[i] = lo + (hi - lo) * i / (points - 1);
  }
  return grid;
}

double residual_ode(const BasisState& state, double momentum,
                    const PotentialParams& p, const std::vector<double>& grid) {
  const double m = mass_scale(p);
  const double strength = p.A * (p.A - 1.0);
  double worst = 0.0;
  double peak = 0.0;
  for (const double tau : grid) {
    const double psi = state(tau);
    const double cs = std::cos(tau);
    const double res = p.c1 * p.c1 * state.second_derivative(tau) +
                       p.c / m * momentum * psi -
                       strength / m * psi / (cs * cs);
    worst = std::max(worst, std::abs(res));
    peak = std::max(peak, std::abs(psi));
  }
  return worst / peak;
}

int count_sign_changes(const BasisState& state,
                       const std::vector<double>& grid) {
  int changes = 0;
  double prev = 0.0;
  for (const double tau : grid) {
    const double v = state(tau);
    if (v == 0.0) continue;
    if (prev != 0.0 && (v > 0.0) != (prev > 0.0)) ++changes;
    prev = v;
  }
  return changes;
}

}  // namespace fhpt::model
