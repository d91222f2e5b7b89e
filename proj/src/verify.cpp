#include "fhpt/verify.hpp"

#include <algorithm>
#include <cmath>

#include "fhpt/coherent.hpp"
#include "fhpt/errors.hpp"
#include "fhpt/quadrature.hpp"
#include "fhpt/specfun.hpp"
#include "fhpt/su11.hpp"

namespace fhpt::verify {

namespace {

Check make_check(std::string name, std::string identity, double residual,
                 double default_tol, const std::optional<double>& override) {
  const double tol = override.value_or(default_tol);
  const bool pass = std::isfinite(residual) && residual <= tol;
  return {std::move(name), std::move(identity), residual, tol, pass};
}

}  // namespace

std::vector<Check> run_suite(const SuiteOptions& o) {
  model::validate(o.params);
  if (o.nmax < 0) throw DomainError("nmax must be >= 0");
  const auto& p = o.params;
  const double rep = model::representation_index(p);
  const double a_prime = model::derive_a_prime(p);
  const auto rule = quadrature::gauss_legendre(o.quad_order);
  const auto ode_grid = model::interior_grid(401);
  const auto ladder_grid = model::interior_grid(100, 1e-2);

  std::vector<Check> checks;

  double ode = 0.0;
  for (int n = 0; n <= o.nmax; ++n) {
    ode = std::max(ode, model::residual_ode(model::build_basis_state(n, p),
                                            model::momentum_level(n, p), p,
                                            ode_grid));
  }
  checks.push_back(make_check(
      "ode_residual",
      "c1^2 psi_n'' + (c/M) P_n psi_n - A(A-1)/(M cos^2 tau) psi_n = 0", ode,
      1e-9, o.tol));

  const double unit = p.c1 * p.c1 * model::mass_scale(p) / p.c;
  double spacing = 0.0;
  for (int n = 0; n <= o.nmax; ++n) {
    const double gap =
        model::momentum_level(n + 1, p) - model::momentum_level(n, p);
    const double expected = unit * (2.0 * n + 1.0 + a_prime);
    spacing = std::max(spacing, std::abs(gap - expected) / expected);
  }
  checks.push_back(make_check(
      "spectrum_spacing", "P_{n+1} - P_n = (c1^2 M / c)(2n + 1 + A')",
      spacing, 1e-12, o.tol));

  const auto gram = model::gram_matrix(o.nmax, p, rule, o.interval);
  const int size = o.nmax + 1;
  double ortho = 0.0;
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      // On the half interval only same-parity pairs are orthogonal.
      if (o.interval == model::IntervalMode::kHalf && (a + b) % 2 == 1) {
        continue;
      }
      const double target = a == b ? 1.0 : 0.0;
      ortho = std::max(
          ortho, std::abs(gram[static_cast<std::size_t>(a) * size + b] - target));
    }
  }
  checks.push_back(make_check(
      o.interval == model::IntervalMode::kFull ? "orthonormality"
                                               : "orthonormality_half_interval",
      "<psi_m|psi_n> = delta_mn", ortho, 1e-10, o.tol));

  double up = 0.0;
  double down = 0.0;
  double comm = 0.0;
  double casimir_op = 0.0;
  double casimir_const = 0.0;
  double adjoint = 0.0;
  for (int n = 0; n <= o.nmax; ++n) {
    up = std::max(up, su11::raising_residual(n, p, ladder_grid));
    down = std::max(down, su11::lowering_residual(n, p, ladder_grid));
    comm = std::max(comm, su11::commutator_check(n, p, ladder_grid));
    casimir_op = std::max(casimir_op, su11::casimir_residual(n, p, ladder_grid));
    casimir_const = std::max(
        casimir_const,
        std::abs(su11::casimir_eigenvalue(n, rep) - (rep * rep - 0.25)));
    const auto pair = su11::adjoint_elements(n, p, rule);
    adjoint = std::max(adjoint, std::abs(pair.raise_element - pair.lower_element));
  }
  checks.push_back(make_check("raising",
                              "G+ psi_n = sqrt((n+1)(n+2L+1)) psi_{n+1}", up,
                              1e-9, o.tol));
  checks.push_back(make_check("lowering", "G- psi_n = sqrt(n(n+2L)) psi_{n-1}",
                              down, 1e-9, o.tol));
  checks.push_back(make_check("commutator",
                              "[G-, G+] psi_n = 2 (n + L + 1/2) psi_n", comm,
                              1e-9, o.tol));
  checks.push_back(make_check(
      "casimir_constant", "G0^2 - (G+G- + G-G+)/2 = L^2 - 1/4 for every n",
      casimir_const, 1e-12, o.tol));
  checks.push_back(make_check("casimir_operator",
                              "C psi_n = (L^2 - 1/4) psi_n", casimir_op, 1e-8,
                              o.tol));
  checks.push_back(make_check("adjointness",
                              "<psi_{n+1}|G+ psi_n> = <G- psi_{n+1}|psi_n>",
                              adjoint, 1e-9, o.tol));

  std::vector<coherent::Complex> zs{{0.1, 0.0}, {1.0, 0.0}, {0.0, 2.5},
                                    {3.0, 4.0}};
  if (std::abs(o.z) > 0.0) zs.push_back(o.z);
  double norm_err = 0.0;
  double eigen = 0.0;
  for (const auto& z : zs) {
    const auto cs = coherent::build_coherent_state(z, rep);
    norm_err = std::max(norm_err, std::abs(coherent::norm_squared(cs) - 1.0));
    eigen = std::max(eigen, coherent::lowering_eigenstate_residual(cs));
  }
  checks.push_back(make_check("coherent_normalization", "<z,L|z,L> = 1",
                              norm_err, 1e-12, o.tol));
  checks.push_back(make_check("coherent_eigenstate",
                              "G- |z,L> = z |z,L>", eigen, 1e-10, o.tol));

  double series = 0.0;
  for (const double m : {0.0, 2.0 * rep, 2.0 * rep + 1.0, 5.0}) {
    for (const double x : {0.5, 1.0, 2.5, 5.0, 10.0}) {
      const auto s = specfun::bessel_moment_series(x, m);
      const double closed = std::pow(x, -m) * specfun::bessel_i(m, 2.0 * x);
      series = std::max(series, std::abs(s.value - closed) / closed);
    }
  }
  checks.push_back(make_check(
      "bessel_series", "sum_k x^{2k} / (k! Gamma(k+m+1)) = x^{-m} I_m(2x)",
      series, 1e-12, o.tol));

  double resolution = 0.0;
  for (int n = 0; n <= std::min(o.nmax, 10); ++n) {
    const auto e = coherent::resolution_of_identity_check(n, n, rep, rule);
    resolution = std::max(resolution, std::abs(e.value - 1.0));
  }
  checks.push_back(make_check(
      "resolution_of_identity",
      "int dsigma(z,L) |z,L><z,L| = 1, dsigma = (2/pi) I_2L K_2L r dr dtheta",
      resolution, 1e-7, o.tol));

  return checks;
}

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

}  // namespace fhpt::verify
