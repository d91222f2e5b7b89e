#include "fhpt/coherent.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fhpt/errors.hpp"
#include "fhpt/specfun.hpp"
#include "fhpt/su11.hpp"

namespace fhpt::coherent {

namespace {

// log |c_0| = (2L log r - log I_{2L}(2r) - log Gamma(2L+1)) / 2
double log_ground_amplitude(double r, double rep_index) {
  const double log_i = specfun::log_bessel_i(2.0 * rep_index, 2.0 * r);
  if (!std::isfinite(log_i)) {
    throw OverflowError("coherent state: I_{2L}(2|z|) not representable");
  }
  return 0.5 * (2.0 * rep_index * std::log(r) - log_i -
                specfun::log_gamma(2.0 * rep_index + 1.0));
}

void require_rep_index(double rep_index) {
  if (!(rep_index >= 0.0) || !std::isfinite(rep_index)) {
    throw DomainError("coherent state: L must be finite and >= 0");
  }
}

}  // namespace

CoherentState build_coherent_state(Complex z, double rep_index, double tol) {
  require_rep_index(rep_index);
  if (!(tol > 0.0)) throw DomainError("coherent state: tol must be > 0");
  const double r = std::abs(z);
  if (!(r < kMaxModulus)) {
    throw DomainError("coherent state: |z| must be < 1000");
  }
  CoherentState cs;
  cs.z = z;
  cs.rep_index = rep_index;
  if (r == 0.0) {
    cs.coeffs = {Complex(1.0, 0.0)};
    return cs;
  }
  const double theta = std::arg(z);
  const double log_r = std::log(r);
  double log_mag = log_ground_amplitude(r, rep_index);
  cs.coeffs.push_back(Complex(std::exp(log_mag), 0.0));
  for (int n = 0;; ++n) {
    // rho = |c_{n+1} / c_n|, decreasing in n.
    const double rho = r / std::sqrt((n + 1.0) * (n + 1.0 + 2.0 * rep_index));
    const double mag2 = std::exp(2.0 * log_mag);
    if (rho < 0.5) {
      const double tail = mag2 * rho * rho / (1.0 - rho * rho);
      if (tail < tol && r * r * mag2 < tol) {
        cs.truncation = n;
        cs.tail_bound = tail;
        return cs;
      }
    }
    log_mag += log_r - 0.5 * std::log((n + 1.0) * (n + 1.0 + 2.0 * rep_index));
    cs.coeffs.push_back(std::polar(std::exp(log_mag), (n + 1) * theta));
  }
}

CoherentState build_coherent_state(Complex z, const model::PotentialParams& p,
                                   double tol) {
  return build_coherent_state(z, model::representation_index(p), tol);
}

Complex direct_coefficient(int n, Complex z, double rep_index) {
  require_rep_index(rep_index);
  if (n < 0) throw DomainError("direct_coefficient: n must be >= 0");
  const double r = std::abs(z);
  if (r == 0.0) return n == 0 ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
  const double log_i = specfun::log_bessel_i(2.0 * rep_index, 2.0 * r);
  const double log_mag =
      0.5 * (2.0 * rep_index * std::log(r) - log_i) + n * std::log(r) -
      0.5 * (specfun::log_gamma(n + 1.0) +
             specfun::log_gamma(n + 2.0 * rep_index + 1.0));
  return std::polar(std::exp(log_mag), n * std::arg(z));
}

double norm_squared(const CoherentState& cs) {
  double sum = 0.0;
  for (const Complex& c : cs.coeffs) sum += std::norm(c);
  return sum;
}

std::vector<double> partial_norms(const CoherentState& cs) {
  std::vector<double> out;
  out.reserve(cs.coeffs.size());
  double sum = 0.0;
  for (const Complex& c : cs.coeffs) {
    sum += std::norm(c);
    out.push_back(sum);
  }
  return out;
}

double lowering_eigenstate_residual(const CoherentState& cs) {
  const int top = static_cast<int>(cs.coeffs.size()) - 1;
  double sum = 0.0;
  for (int n = 0; n <= top; ++n) {
    const Complex next =
        n < top ? cs.coeffs[n + 1] *
                      su11::ladder_coefficients(n + 1, cs.rep_index).lower_eig
                : Complex(0.0, 0.0);
    sum += std::norm(next - cs.z * cs.coeffs[n]);
  }
  return std::sqrt(sum);
}

double expectation_diagonal(const CoherentState& cs,
                            const std::function<double(int)>& f) {
  double sum = 0.0;
  for (std::size_t n = 0; n < cs.coeffs.size(); ++n) {
    sum += std::norm(cs.coeffs[n]) * f(static_cast<int>(n));
  }
  return sum;
}

Complex general_expectation(
    const CoherentState& cs,
    const std::function<Complex(int, int)>& element) {
  Complex sum(0.0, 0.0);
  const int size = static_cast<int>(cs.coeffs.size());
  for (int np = 0; np < size; ++np) {
    for (int n = 0; n < size; ++n) {
      const Complex o = element(np, n);
      if (o == Complex(0.0, 0.0)) continue;
      sum += std::conj(cs.coeffs[np]) * cs.coeffs[n] * o;
    }
  }
  return sum;
}

double mean_number_closed_form(Complex z, double rep_index) {
  require_rep_index(rep_index);
  const double r = std::abs(z);
  if (r == 0.0) return 0.0;
  return r * std::exp(specfun::log_bessel_i(2.0 * rep_index + 1.0, 2.0 * r) -
                      specfun::log_bessel_i(2.0 * rep_index, 2.0 * r));
}

MeasureSample measure_density(double r, double theta, double rep_index) {
  require_rep_index(rep_index);
  if (!(r > 0.0)) throw DomainError("measure_density: r must be > 0");
  const double nu = 2.0 * rep_index;
  const double density = 2.0 / std::numbers::pi *
                         std::exp(specfun::log_bessel_i(nu, 2.0 * r)) *
                         specfun::bessel_k(nu, 2.0 * r) * r;
  return {r, theta, density};
}

ResolutionElement resolution_of_identity_check(
    int n, int n_prime, double rep_index,
    const quadrature::QuadratureRule& rule,
    const quadrature::SemiInfiniteOptions& options) {
  require_rep_index(rep_index);
  if (n < 0 || n_prime < 0) {
    throw DomainError("resolution_of_identity_check: indices must be >= 0");
  }
  ResolutionElement out;
  if (n != n_prime) return out;

  const double mu = 2.0 * n + 2.0 * rep_index + 1.0;
  quadrature::SemiInfiniteOptions opts = options;
  if (opts.polynomial_degree <= 0.0) opts.polynomial_degree = mu;
  const auto radial = quadrature::integrate_semi_infinite_k_weight(
      [mu](double r) { return std::pow(r, mu); }, 2.0 * rep_index, rule, opts);
  const double log_norm = specfun::log_gamma(n + 1.0) +
                          specfun::log_gamma(n + 2.0 * rep_index + 1.0);
  out.radial_integral = radial.value;
  out.radial_closed_form = 0.25 * std::exp(log_norm);
  out.value = 4.0 * radial.value * std::exp(-log_norm);
  out.tail_warning = radial.tail_warning;
  return out;
}

}  // namespace fhpt::coherent
