#ifndef HUMBERT_APPLICATIONS_HPP_
#define HUMBERT_APPLICATIONS_HPP_

#include <functional>
#include <utility>
#include <vector>

#include "humbert/phi1_reference.hpp"
#include "humbert/types.hpp"

namespace humbert {

/// 1D Glauber-Ising two-time correlation.
///
/// The scaling form is
///   C0(s+tau, s) = (2/pi) sqrt(2s/tau) e^{-mu^2 tau/2}
///                  Phi1[1/2,1;3/2; -2s/tau, -mu^2 s],
/// with waiting time s, time difference tau and inverse correlation length
/// mu; the equilibrium relaxation time is tau_eq = 2/mu^2.
struct GlauberPoint {
  double s;    // waiting time, > 0
  double tau;  // time difference, > 0
  double mu;   // inverse correlation length, >= 0
  GlauberPoint(double s_, double tau_, double mu_);

  double x_scaling() const { return 2.0 * s / tau; }
  double y_scaling() const { return mu * mu * s; }
  double tau_eq() const { return 2.0 / (mu * mu); }
};

/// The full correlation value through the Phi1 evaluator.
double glauber_c0(const GlauberPoint& pt);

/// Zero-temperature closed form (2/pi) arctan sqrt(2s/tau).
double glauber_zero_temperature(double s, double tau);

/// Equilibrium limit erfc(sqrt(tau/tau_eq)).
double glauber_equilibrium_limit(double tau_over_taueq);

/// Prabhakar-type fractional integral operators on [0, b]:
///   (A+ f)(x) = int_0^x (x-t)^(g-1)/Gamma(g) Phi1[a,b;g; 1-x/t, l(x-t)] f(t) dt
///   (A- f)(x) = int_0^x (x-t)^(g-1)/Gamma(g) Phi1[a,b;g; 1-t/x, l(x-t)] f(t) dt
struct PrabhakarParams {
  cplx alpha, beta, gamma_, lambda_;
  double b_end;  // right end of the interval, > 0
  PrabhakarParams(cplx alpha_, cplx beta_, cplx gamma__, cplx lambda__,
                  double b_end_);
};

enum class PrabhakarSide { plus, minus };

/// Closed-form action on t^rho:
///   (A+ t^rho)(x) = Gamma(rho+alpha+1)Gamma(rho+beta+1) /
///                   (Gamma(rho+gamma+1)Gamma(rho+alpha+beta+1)) x^(rho+gamma)
///                   * 2F2[alpha, rho+alpha+1; rho+gamma+1, rho+alpha+beta+1; lambda x].
cplx prabhakar_plus_power(const PrabhakarParams& pp, cplx rho, double x);

/// (A- t^rho)(x) with the 1F1[alpha; rho+gamma-beta+1; lambda x] form.
cplx prabhakar_minus_power(const PrabhakarParams& pp, cplx rho, double x);

/// Direct kernel quadrature of A+/A- applied to f. f must be integrable on
/// (0, x); an algebraic origin singularity f ~ t^sigma must be declared via
/// f_origin_exponent = Re(sigma) (used to flatten the substitution; the
/// kernel envelope from phi1_kernel_bound budgets the t -> 0 side).
SeriesResult prabhakar_apply(const PrabhakarParams& pp,
                             const std::function<cplx(double)>& f, double x,
                             PrabhakarSide side,
                             double f_origin_exponent = 0.0,
                             double tol = 1e-10);

/// Small-x expansion of (A+ f)(x) for f ~ sum_k a_k t^(rho+k):
/// returns pairs (exponent rho+gamma+n, coefficient) with the gamma
/// prefactor folded into the coefficients; sigma_0 = a_0.
std::vector<std::pair<cplx, cplx>> prabhakar_plus_asym(
    const PrabhakarParams& pp, cplx rho, const std::vector<cplx>& a_coeffs,
    std::size_t order);

/// Same for (A- f)(x).
std::vector<std::pair<cplx, cplx>> prabhakar_minus_asym(
    const PrabhakarParams& pp, cplx rho, const std::vector<cplx>& a_coeffs,
    std::size_t order);

enum class KernelBoundSide { near_one, large_negative };

/// Envelope bounds for the Phi1 kernel (unit constant):
///   |Phi1[a,b;c;x,y]|  <~ (1-x)^max{0, Re(c-a-b)}       on [0,1)
///   |Phi1[a,b;c;-x,y]| <~ x^-min{Re(a),Re(b)}           for x > 1+eps
/// near_one requires a+b-c off Z; large_negative requires a-b off Z.
double phi1_kernel_bound(const Phi1Params& p, double x_arg,
                         KernelBoundSide side);

}  // namespace humbert

#endif  // HUMBERT_APPLICATIONS_HPP_
