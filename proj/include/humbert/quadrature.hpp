#ifndef HUMBERT_QUADRATURE_HPP_
#define HUMBERT_QUADRATURE_HPP_

#include <functional>

#include "humbert/types.hpp"

namespace humbert {

/// Complex-valued adaptive quadrature built on 64-point Gauss-Legendre
/// panels with bisection refinement. Integrands must be finite on the open
/// interval; integrable endpoint singularities are expected to be removed
/// by substitution before calling (see map_power_endpoint below).

struct QuadResult {
  cplx value{0.0, 0.0};
  double abs_error_estimate = 0.0;
  std::size_t panels = 0;
  bool converged = false;
};

using Integrand = std::function<cplx(double)>;

/// Integrate f over [a, b]. A panel is accepted when the two-half refinement
/// delta is below max(tol_abs, tol_rel * running-scale).
QuadResult gl_adaptive(const Integrand& f, double a, double b,
                       double tol_rel = 1e-12, double tol_abs = 1e-300,
                       int max_depth = 48);

/// Integrate f over [t0, inf). Panel lengths double geometrically; the tail
/// stops once two consecutive panels contribute less than cutoff times the
/// accumulated modulus.
QuadResult gl_adaptive_semi_infinite(const Integrand& f, double t0,
                                     double tol_rel = 1e-12,
                                     double cutoff = 1e-16,
                                     std::size_t max_panels = 120);

/// Wrap f so that a power singularity t^(mu-1) at the left endpoint of
/// [0, len] is flattened: returns g(u) on [0,1] with
///   g(u) = f(len * u^p) * len * p * u^(p-1),
/// p chosen so the transformed integrand vanishes at u=0 like u^(p*mu - 1).
/// mu_re is Re(mu) for the singularity t^(mu-1); pass 1 for a regular end.
Integrand map_power_endpoint(Integrand f, double len, double mu_re);

}  // namespace humbert

#endif  // HUMBERT_QUADRATURE_HPP_
