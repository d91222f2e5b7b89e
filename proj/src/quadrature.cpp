#include "fhpt/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "fhpt/errors.hpp"
#include "fhpt/specfun.hpp"

namespace fhpt::quadrature {

namespace {

constexpr double kEulerGamma = 0.57721566490153286061;

// P_m(x) and P_m'(x).
std::pair<double, double> legendre_with_derivative(int m, double x) {
  double p0 = 1.0;
  double p1 = x;
  for (int k = 2; k <= m; ++k) {
    const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  if (m == 0) return {1.0, 0.0};
  const double dp = m * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

// Integral over [0, r0] of r^p K_nu(a r) using the leading small-argument
// terms of K_nu.
double k_weight_head(double p, double nu, double a, double r0) {
  const double nearest = std::round(nu);
  const bool integer_like = std::abs(nu - nearest) < 1e-4;
  if (integer_like && nearest == 0.0) {
    // K_0(ar) ~ -ln(ar/2) - gamma
    if (!(p + 1.0 > 0.0)) {
      throw DomainError("integrate_semi_infinite_k_weight: integrand not "
                        "integrable at 0");
    }
    const double e = p + 1.0;
    return std::pow(r0, e) / e *
           (-std::log(0.5 * a * r0) - kEulerGamma + 1.0 / e);
  }
  const double e_lead = p - nu + 1.0;
  if (!(e_lead > 0.0)) {
    throw DomainError("integrate_semi_infinite_k_weight: integrand not "
                      "integrable at 0 (fitted power " + std::to_string(p) +
                      ", order " + std::to_string(nu) + ")");
  }
  // K_nu(ar) ~ Gamma(nu)/2 (ar/2)^{-nu} + Gamma(-nu)/2 (ar/2)^{nu}
  double head = 0.5 * std::tgamma(nu) * std::pow(0.5 * a, -nu) *
                std::pow(r0, e_lead) / e_lead;
  if (!integer_like) {
    const double e_sub = p + nu + 1.0;
    head += 0.5 * std::tgamma(-nu) * std::pow(0.5 * a, nu) *
            std::pow(r0, e_sub) / e_sub;
  }
  return head;
}

}  // namespace

QuadratureRule gauss_legendre(int order) {
  if (order < 1 || order > kMaxOrder) {
    throw DomainError("gauss_legendre: order must be in [1, " +
                      std::to_string(kMaxOrder) + "]");
  }
  QuadratureRule rule;
  rule.order = order;
  rule.nodes.assign(order, 0.0);
  rule.weights.assign(order, 0.0);
  const int half = (order + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Largest root first.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      const auto [p, d] = legendre_with_derivative(order, x);
      dp = d;
      const double dx = p / d;
      x -= dx;
      if (std::abs(dx) <= 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    dp = legendre_with_derivative(order, x).second;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[order - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[order - 1 - i] = w;
    rule.weights[i] = w;
  }
  if (order % 2 == 1) rule.nodes[order / 2] = 0.0;
  return rule;
}

double integrate_finite(const Integrand& f, double a, double b,
                        const QuadratureRule& rule) {
  if (!(a < b)) throw DomainError("integrate_finite: requires a < b");
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < rule.order; ++i) {
    const double x = mid + half * rule.nodes[i];
    const double v = f(x);
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "integrate_finite: non-finite integrand value " << v
          << " at node " << x;
      throw IntegrandError(msg.str());
    }
    sum += rule.weights[i] * v;
  }
  return half * sum;
}

double default_r_max(double polynomial_degree) {
  return std::max(30.0, 5.0 + 10.0 * polynomial_degree);
}

SemiInfiniteResult integrate_semi_infinite_k_weight(
    const Integrand& g, double nu, const QuadratureRule& rule,
    const SemiInfiniteOptions& options, double scale) {
  if (!(scale > 0.0)) {
    throw DomainError("integrate_semi_infinite_k_weight: scale must be > 0");
  }
  if (!(nu >= 0.0)) {
    throw DomainError("integrate_semi_infinite_k_weight: order must be >= 0");
  }
  const double r_min = options.r_min;
  const double r_max = options.r_max > 0.0
                           ? options.r_max
                           : default_r_max(options.polynomial_degree);
  if (!(r_min > 0.0 && r_min < r_max) || options.panels < 1) {
    throw DomainError("integrate_semi_infinite_k_weight: bad panel layout");
  }

  const auto integrand = [&](double r) {
    return g(r) * specfun::bessel_k(nu, scale * r);
  };

  SemiInfiniteResult out;
  const double ratio = std::pow(r_max / r_min, 1.0 / options.panels);
  double lo = r_min;
  for (int p = 0; p < options.panels; ++p) {
    const double hi = p + 1 == options.panels ? r_max : lo * ratio;
    out.value += integrate_finite(integrand, lo, hi, rule);
    lo = hi;
  }

  const double g0 = g(r_min);
  const double g_half = g(0.5 * r_min);
  if (g0 != 0.0 && g_half != 0.0 && (g0 > 0.0) == (g_half > 0.0)) {
    const double power = std::log2(g0 / g_half);
    out.head = g0 * std::pow(r_min, -power) *
               k_weight_head(power, nu, scale, r_min);
    out.value += out.head;
  }

  // K decays like e^{-scale r}; the tail behaves like f(r_max)/scale once
  // the polynomial growth of g is dominated.
  const double f_end = integrand(r_max);
  out.tail_estimate = std::abs(f_end) / scale;
  out.tail_warning =
      out.tail_estimate > options.tail_warn_ratio * std::abs(out.value);
  return out;
}

double k_moment_closed_form(double mu, double nu, double a) {
  if (!(a > 0.0) || !(mu + 1.0 - nu > 0.0) || !(mu + 1.0 + nu > 0.0)) {
    throw DomainError("k_moment_closed_form: requires a > 0 and mu + 1 > |nu|");
  }
  const double log_value = (mu - 1.0) * std::numbers::ln2 -
                           (mu + 1.0) * std::log(a) +
                           specfun::log_gamma(0.5 * (mu + nu + 1.0)) +
                           specfun::log_gamma(0.5 * (mu - nu + 1.0));
  return std::exp(log_value);
}

}  // namespace fhpt::quadrature
