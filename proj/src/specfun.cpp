#include "fhpt/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "fhpt/errors.hpp"

namespace fhpt::specfun {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIter = 100000;

// Taylor coefficients of 1/Gamma(1+x) about x = 0.
constexpr std::array<double, 30> kRecipGammaTaylor = {
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.042002635034095235529,
    0.1665386113822914895,
    -0.042197734555544336748,
    -0.0096219715278769735621,
    0.0072189432466630995424,
    -0.0011651675918590651121,
    -0.00021524167411495097282,
    0.00012805028238811618615,
    -0.000020134854780788238656,
    -1.2504934821426706573e-6,
    1.1330272319816958824e-6,
    -2.0563384169776071035e-7,
    6.1160951044814158179e-9,
    5.0020076444692229301e-9,
    -1.1812745704870201446e-9,
    1.0434267116911005105e-10,
    7.782263439905071254e-12,
    -3.6968056186422057082e-12,
    5.100370287454475979e-13,
    -2.0583260535665067832e-14,
    -5.3481225394230179824e-15,
    1.2267786282382607902e-15,
    -1.1812593016974587695e-16,
    1.1866922547516003326e-18,
    1.4123806553180317816e-18,
    -2.2987456844353702066e-19,
    1.7144063219273374334e-20,
};

// Temme's auxiliary Gamma combinations for |mu| <= 1/2:
//   gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)
//   gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
struct TemmeGammas {
  double gam1;
  double gam2;
  double gampl;  // 1/Gamma(1+mu)
  double gammi;  // 1/Gamma(1-mu)
};

TemmeGammas temme_gammas(double mu) {
  const double mu2 = mu * mu;
  double even = 0.0;
  double odd = 0.0;
  for (std::size_t j = kRecipGammaTaylor.size(); j-- > 0;) {
    if (j % 2 == 0) {
      even = even * mu2 + kRecipGammaTaylor[j];
    } else {
      odd = odd * mu2 + kRecipGammaTaylor[j];
    }
  }
  // f(mu) = even + mu*odd, f(-mu) = even - mu*odd.
  return {-odd, even, even + mu * odd, even - mu * odd};
}

// K_mu(x), K_{mu+1}(x) for |mu| <= 1/2 by Temme's series (x < 2).
BesselKPair temme_k(double mu, double x) {
  const double x2 = 0.5 * x;
  const double pimu = std::numbers::pi * mu;
  const double fact = std::abs(pimu) < kEps ? 1.0 : pimu / std::sin(pimu);
  double d = -std::log(x2);
  double e = mu * d;
  const double fact2 = std::abs(e) < kEps ? 1.0 : std::sinh(e) / e;
  const TemmeGammas g = temme_gammas(mu);
  double ff = fact * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
  double sum = ff;
  e = std::exp(e);
  double p = 0.5 * e / g.gampl;
  double q = 0.5 / (e * g.gammi);
  double c = 1.0;
  d = x2 * x2;
  double sum1 = p;
  const double mu2 = mu * mu;
  for (int i = 1; i <= kMaxIter; ++i) {
    const double di = i;
    ff = (di * ff + p + q) / (di * di - mu2);
    c *= d / di;
    p /= (di - mu);
    q /= (di + mu);
    const double del = c * ff;
    sum += del;
    const double del1 = c * (p - di * ff);
    sum1 += del1;
    if (std::abs(del) < std::abs(sum) * kEps &&
        std::abs(del1) < std::abs(sum1) * kEps) {
      break;
    }
  }
  return {sum, sum1 * 2.0 / x};
}

// K_mu(x), K_{mu+1}(x) for |mu| <= 1/2 by Steed's continued fraction
// (x >= 2).
BesselKPair steed_k(double mu, double x) {
  double b = 2.0 * (1.0 + x);
  double d = 1.0 / b;
  double h = d;
  double delh = d;
  double q1 = 0.0;
  double q2 = 1.0;
  const double a1 = 0.25 - mu * mu;
  double q = a1;
  double c = a1;
  double a = -a1;
  double s = 1.0 + q * delh;
  for (int i = 2; i <= kMaxIter; ++i) {
    a -= 2.0 * (i - 1);
    c = -a * c / i;
    const double qnew = (q1 - b * q2) / a;
    q1 = q2;
    q2 = qnew;
    q += c * qnew;
    b += 2.0;
    d = 1.0 / (b + a * d);
    delh = (b * d - 1.0) * delh;
    h += delh;
    const double dels = q * delh;
    s += dels;
    if (std::abs(dels / s) < kEps) break;
  }
  h *= a1;
  const double kmu =
      std::sqrt(std::numbers::pi / (2.0 * x)) * std::exp(-x) / s;
  const double kmu1 = kmu * (mu + x + 0.5 - h) / x;
  return {kmu, kmu1};
}

// Sum of r_k = prod_{j<=k} q / (j (j+nu)), r_0 = 1, kept in range by
// rescaling. Returns log of the sum.
double log_i_series_sum(double nu, double q) {
  double sum = 1.0;
  double term = 1.0;
  double log_scale = 0.0;
  constexpr double kBig = 1e250;
  for (int k = 1; k <= kMaxIter; ++k) {
    term *= q / (static_cast<double>(k) * (k + nu));
    sum += term;
    if (sum > kBig) {
      sum /= kBig;
      term /= kBig;
      log_scale += std::log(kBig);
    }
    if (term < sum * kEps * 0.5 && static_cast<double>(k) * (k + nu) > q) {
      break;
    }
  }
  return std::log(sum) + log_scale;
}

void require_order(double nu, const char* who) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) {
    throw DomainError(std::string(who) + ": order must be finite and >= 0");
  }
}

}  // namespace

double gamma_fn(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("gamma_fn: argument must be positive and finite, got " +
                      std::to_string(x));
  }
  return std::tgamma(x);
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("log_gamma: argument must be positive and finite, got " +
                      std::to_string(x));
  }
  int sign = 0;
  // Reentrant variant: std::lgamma writes the global signgam.
  return ::lgamma_r(x, &sign);
}

double hyp2f1_terminating(int n, double b, double c, double x) {
  if (n < 0) throw DomainError("hyp2f1_terminating: n must be >= 0");
  for (int k = 0; k < n; ++k) {
    if (c + k == 0.0) {
      throw DomainError("hyp2f1_terminating: c = " + std::to_string(c) +
                        " makes (c)_k vanish for k = " + std::to_string(k));
    }
  }
  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < n; ++k) {
    term *= (k - n) * (b + k) / ((c + k) * (k + 1)) * x;
    sum += term;
  }
  return sum;
}

GegenbauerPoly::GegenbauerPoly(int degree, double index)
    : degree_(degree), index_(index) {
  if (degree < 0) throw DomainError("gegenbauer: degree must be >= 0");
  if (!(index > 0.0)) throw DomainError("gegenbauer: index must be > 0");
  std::vector<double> prev2;
  std::vector<double> prev{1.0};
  if (degree == 0) {
    coeffs_ = prev;
    return;
  }
  std::vector<double> cur{0.0, 2.0 * index};
  for (int k = 2; k <= degree; ++k) {
    prev2 = std::move(prev);
    prev = std::move(cur);
    cur.assign(k + 1, 0.0);
    const double a = 2.0 * (k + index - 1.0) / k;
    const double b = (k + 2.0 * index - 2.0) / k;
    for (int j = 0; j < k; ++j) cur[j + 1] += a * prev[j];
    for (int j = 0; j < k - 1; ++j) cur[j] -= b * prev2[j];
  }
  coeffs_ = std::move(cur);
}

double GegenbauerPoly::operator()(double y) const {
  return gegenbauer_value(degree_, index_, y);
}

double GegenbauerPoly::derivative(double y) const {
  if (degree_ == 0) return 0.0;
  return 2.0 * index_ * gegenbauer_value(degree_ - 1, index_ + 1.0, y);
}

double GegenbauerPoly::second_derivative(double y) const {
  if (degree_ < 2) return 0.0;
  return 4.0 * index_ * (index_ + 1.0) *
         gegenbauer_value(degree_ - 2, index_ + 2.0, y);
}

double GegenbauerPoly::eval_monomial(double y) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * y + *it;
  }
  return acc;
}

GegenbauerPoly gegenbauer(int n, double lambda) {
  return GegenbauerPoly(n, lambda);
}

double gegenbauer_value(int n, double lambda, double y) {
  if (n < 0) return 0.0;
  if (n == 0) return 1.0;
  double c0 = 1.0;
  double c1 = 2.0 * lambda * y;
  for (int k = 2; k <= n; ++k) {
    const double c2 =
        (2.0 * (k + lambda - 1.0) * y * c1 - (k + 2.0 * lambda - 2.0) * c0) / k;
    c0 = c1;
    c1 = c2;
  }
  return c1;
}

double legendre_phase(double order) {
  const auto whole = static_cast<long long>(std::floor(order));
  return (whole % 2 == 0) ? 1.0 : -1.0;
}

double assoc_legendre_half_shift(int n, double order, double y) {
  if (n < 0) throw DomainError("assoc_legendre_half_shift: n must be >= 0");
  if (!(order >= 0.0)) {
    throw DomainError("assoc_legendre_half_shift: order must be >= 0");
  }
  if (!(std::abs(y) <= 1.0)) {
    throw DomainError("assoc_legendre_half_shift: |y| > 1");
  }
  const double log_prefactor = log_gamma(2.0 * order + 1.0) -
                               order * std::numbers::ln2 -
                               log_gamma(order + 1.0);
  const double envelope =
      order == 0.0 ? 1.0 : std::pow(1.0 - y * y, 0.5 * order);
  return legendre_phase(order) * std::exp(log_prefactor) * envelope *
         gegenbauer_value(n, order + 0.5, y);
}

double log_bessel_i(double nu, double x) {
  require_order(nu, "log_bessel_i");
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError("log_bessel_i: x must be finite and >= 0");
  }
  if (x == 0.0) {
    return nu == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
  }
  const double half = 0.5 * x;
  return nu * std::log(half) - log_gamma(nu + 1.0) +
         log_i_series_sum(nu, half * half);
}

double bessel_i(double nu, double x) {
  require_order(nu, "bessel_i");
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError("bessel_i: x must be finite and >= 0");
  }
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  const double half = 0.5 * x;
  const double q = half * half;
  const double log_sum = log_i_series_sum(nu, q);
  const double lead = nu <= 170.0 ? std::pow(half, nu) / std::tgamma(nu + 1.0)
                                  : 0.0;
  if (log_sum < 700.0 && std::isnormal(lead)) {
    // Same summation order as log_i_series_sum, without the log round trip.
    double sum = 1.0;
    double term = 1.0;
    for (int k = 1; k <= kMaxIter; ++k) {
      term *= q / (static_cast<double>(k) * (k + nu));
      sum += term;
      if (term < sum * kEps * 0.5 && static_cast<double>(k) * (k + nu) > q) {
        break;
      }
    }
    return lead * sum;
  }
  const double log_value = nu * std::log(half) - log_gamma(nu + 1.0) + log_sum;
  if (log_value > std::log(std::numeric_limits<double>::max())) {
    throw OverflowError("bessel_i: I_" + std::to_string(nu) + "(" +
                        std::to_string(x) + ") exceeds double range");
  }
  return std::exp(log_value);
}

BesselKPair bessel_k_pair(double nu, double x) {
  require_order(nu, "bessel_k");
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError("bessel_k: x must be finite and > 0");
  }
  const int steps = static_cast<int>(nu + 0.5);
  const double mu = nu - steps;
  BesselKPair k = x < 2.0 ? temme_k(mu, x) : steed_k(mu, x);
  const double two_over_x = 2.0 / x;
  for (int i = 1; i <= steps; ++i) {
    const double next = (mu + i) * two_over_x * k.k_nu1 + k.k_nu;
    k.k_nu = k.k_nu1;
    k.k_nu1 = next;
  }
  if (!std::isfinite(k.k_nu)) {
    throw OverflowError("bessel_k: K_" + std::to_string(nu) + "(" +
                        std::to_string(x) + ") exceeds double range");
  }
  return k;
}

double bessel_k(double nu, double x) { return bessel_k_pair(nu, x).k_nu; }

SeriesResult bessel_moment_series(double x, double m, int power,
                                  double tail_tol) {
  if (!(x >= 0.0)) throw DomainError("bessel_moment_series: x must be >= 0");
  if (!(m >= 0.0)) throw DomainError("bessel_moment_series: m must be >= 0");
  if (power < 0) throw DomainError("bessel_moment_series: power must be >= 0");
  const double x2 = x * x;
  // t_l = x^{2l} / (l! Gamma(l+m+1)); the moment weight l^power is applied
  // separately.
  double t = 1.0 / gamma_fn(m + 1.0);
  double sum = power == 0 ? t : 0.0;
  if (x == 0.0) return {sum, 1, 0.0};
  for (int l = 1; l <= kMaxIter; ++l) {
    t *= x2 / (static_cast<double>(l) * (l + m));
    const double weighted = t * std::pow(static_cast<double>(l), power);
    sum += weighted;
    // Ratio of consecutive weighted terms; decreasing once l is past the
    // peak, so it bounds the remaining tail geometrically.
    const double ratio = x2 / ((l + 1.0) * (l + 1.0 + m)) *
                         std::pow((l + 1.0) / l, power);
    if (ratio < 0.5) {
      const double tail = weighted * ratio / (1.0 - ratio);
      if (tail <= tail_tol * sum) {
        return {sum, l + 1, tail};
      }
    }
  }
  throw DomainError("bessel_moment_series: no convergence");
}

}  // namespace fhpt::specfun
