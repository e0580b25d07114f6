#include "humbert/applications.hpp"

#include <algorithm>
#include <cmath>

#include "humbert/evaluator.hpp"
#include "humbert/quadrature.hpp"
#include "humbert/scalar_kernel.hpp"

namespace humbert {

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

GlauberPoint::GlauberPoint(double s_, double tau_, double mu_)
    : s(s_), tau(tau_), mu(mu_) {
  if (!(s > 0.0) || !(tau > 0.0))
    throw domain_error("GlauberPoint: s and tau must be positive");
  if (mu < 0.0) throw domain_error("GlauberPoint: mu must be >= 0");
}

double glauber_c0(const GlauberPoint& pt) {
  static const Phi1Params kParams{cplx{0.5, 0}, cplx{1, 0}, cplx{1.5, 0}};
  const double x = pt.x_scaling();
  const double y = pt.y_scaling();
  EvalReport rep = evaluate(kParams, cplx{-x, 0}, cplx{-y, 0}, 1e-12);
  const double pref =
      2.0 / kPi * std::sqrt(x) * std::exp(-0.5 * pt.mu * pt.mu * pt.tau);
  return pref * rep.value.real();
}

double glauber_zero_temperature(double s, double tau) {
  if (!(s > 0.0) || !(tau > 0.0))
    throw domain_error("glauber_zero_temperature: s, tau must be positive");
  return 2.0 / kPi * std::atan(std::sqrt(2.0 * s / tau));
}

double glauber_equilibrium_limit(double tau_over_taueq) {
  if (!(tau_over_taueq > 0.0))
    throw domain_error("glauber_equilibrium_limit: argument must be > 0");
  return std::erfc(std::sqrt(tau_over_taueq));
}

PrabhakarParams::PrabhakarParams(cplx alpha_, cplx beta_, cplx gamma__,
                                 cplx lambda__, double b_end_)
    : alpha(alpha_), beta(beta_), gamma_(gamma__), lambda_(lambda__),
      b_end(b_end_) {
  if (!is_finite(alpha) || !is_finite(beta) || !is_finite(gamma_) ||
      !is_finite(lambda_))
    throw domain_error("PrabhakarParams: parameters must be finite");
  if (!(gamma_.real() > 0.0))
    throw domain_error("PrabhakarParams: requires Re(gamma) > 0");
  if (!(b_end > 0.0))
    throw domain_error("PrabhakarParams: requires b_end > 0");
}

namespace {

void check_x_in_interval(const PrabhakarParams& pp, double x,
                         const char* who) {
  if (!(x > 0.0) || x > pp.b_end)
    throw domain_error(std::string(who) + ": x outside (0, b_end]");
}

}  // namespace

cplx prabhakar_plus_power(const PrabhakarParams& pp, cplx rho, double x) {
  check_x_in_interval(pp, x, "prabhakar_plus_power");
  const double eta = std::min(pp.alpha.real(), pp.beta.real());
  if (!(rho.real() > -eta - 1.0))
    throw domain_error(
        "prabhakar_plus_power: requires Re(rho) > -min{Re(alpha),Re(beta)}-1");
  const cplx pref = gamma_ratio(
      {rho + pp.alpha + 1.0, rho + pp.beta + 1.0},
      {rho + pp.gamma_ + 1.0, rho + pp.alpha + pp.beta + 1.0});
  SeriesResult f =
      pfq({pp.alpha, rho + pp.alpha + 1.0},
          {rho + pp.gamma_ + 1.0, rho + pp.alpha + pp.beta + 1.0},
          pp.lambda_ * x, 1e-14, 100000);
  return pref * std::pow(cplx{x, 0}, rho + pp.gamma_) * f.value;
}

cplx prabhakar_minus_power(const PrabhakarParams& pp, cplx rho, double x) {
  check_x_in_interval(pp, x, "prabhakar_minus_power");
  const double floor =
      std::max((pp.alpha + pp.beta - pp.gamma_).real(), 0.0) - 1.0;
  if (!(rho.real() > floor))
    throw domain_error(
        "prabhakar_minus_power: requires Re(rho) > "
        "max{Re(alpha+beta-gamma),0}-1");
  const cplx pref = gamma_ratio(
      {rho + 1.0, rho + pp.gamma_ - pp.alpha - pp.beta + 1.0},
      {rho + pp.gamma_ - pp.alpha + 1.0, rho + pp.gamma_ - pp.beta + 1.0});
  SeriesResult f = pfq({pp.alpha}, {rho + pp.gamma_ - pp.beta + 1.0},
                       pp.lambda_ * x, 1e-14, 100000);
  return pref * std::pow(cplx{x, 0}, rho + pp.gamma_) * f.value;
}

SeriesResult prabhakar_apply(const PrabhakarParams& pp,
                             const std::function<cplx(double)>& f, double x,
                             PrabhakarSide side, double f_origin_exponent,
                             double tol) {
  check_x_in_interval(pp, x, "prabhakar_apply");
  Phi1Params kernel(pp.alpha, pp.beta, pp.gamma_);
  const bool plus = side == PrabhakarSide::plus;

  // t = x u:  (A f)(x) = x^g/Gamma(g) int_0^1 (1-u)^(g-1)
  //           Phi1[a,b;g; w(u), lambda x (1-u)] f(xu) du,
  // w = 1-1/u (plus) or 1-u (minus).
  auto integrand = [&](double u) -> cplx {
    const cplx w = plus ? cplx{1.0 - 1.0 / u, 0.0} : cplx{1.0 - u, 0.0};
    const cplx second = pp.lambda_ * x * (1.0 - u);
    const cplx phi = evaluate(kernel, w, second, 1e-11).value;
    return phi * f(x * u);
  };

  // u -> 1: the (1-u)^(g-1) endpoint, in the variable s = 1-u
  auto upper = [&](double s) -> cplx {
    const double u = 1.0 - s;
    const cplx w = plus ? cplx{1.0 - 1.0 / u, 0.0} : cplx{s, 0.0};
    const cplx phi = evaluate(kernel, w, pp.lambda_ * x * s, 1e-11).value;
    return std::pow(cplx{s, 0}, pp.gamma_ - 1.0) * phi * f(x * u);
  };

  // u -> 0: f carries u^sigma and the kernel envelope supplies u^eta on the
  // plus side (|Phi1(w,.)| <~ |w|^-eta as w -> -infinity)
  double eta = 0.0;
  if (plus && !is_int(pp.alpha - pp.beta))
    eta = std::max(0.0, std::min(pp.alpha.real(), pp.beta.real()));
  const double mu_left = f_origin_exponent + eta + 1.0;

  auto lower = [&](double u) -> cplx {
    return integrand(u) * std::pow(cplx{1.0 - u, 0}, pp.gamma_ - 1.0);
  };

  QuadResult ql = gl_adaptive(map_power_endpoint(lower, 0.5, mu_left), 0.0,
                              1.0, tol * 0.1);
  QuadResult qr = gl_adaptive(
      map_power_endpoint(upper, 0.5, pp.gamma_.real()), 0.0, 1.0, tol * 0.1);
  const cplx pref = std::pow(cplx{x, 0}, pp.gamma_) * rgamma(pp.gamma_);
  SeriesResult out;
  out.value = pref * (ql.value + qr.value);
  out.abs_error_estimate =
      std::abs(pref) * (ql.abs_error_estimate + qr.abs_error_estimate);
  out.terms_used = ql.panels + qr.panels;
  out.converged = ql.converged && qr.converged;
  return out;
}

std::vector<std::pair<cplx, cplx>> prabhakar_plus_asym(
    const PrabhakarParams& pp, cplx rho, const std::vector<cplx>& a_coeffs,
    std::size_t order) {
  if (is_int(pp.alpha - pp.beta))
    throw pole_error("prabhakar_plus_asym: requires alpha-beta off Z");
  const double eta = std::min(pp.alpha.real(), pp.beta.real());
  if (!(rho.real() > -eta - 1.0))
    throw domain_error("prabhakar_plus_asym: requires Re(rho) > -eta-1");
  if (a_coeffs.empty())
    throw domain_error("prabhakar_plus_asym: empty coefficient list");
  const cplx pref = gamma_ratio(
      {rho + pp.alpha + 1.0, rho + pp.beta + 1.0},
      {rho + pp.gamma_ + 1.0, rho + pp.alpha + pp.beta + 1.0});
  std::vector<std::pair<cplx, cplx>> out;
  out.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    // sigma_n = (rho+alpha+1)_n / ((rho+gamma+1)_n (rho+alpha+beta+1)_n)
    //           * sum_k a_k (rho+beta+1)_k (alpha)_{n-k} lambda^{n-k}/(n-k)!
    cplx inner{0, 0};
    cplx lam_pow{1, 0};
    for (std::size_t kk = 0; kk <= n; ++kk) {
      const std::size_t k = n - kk;  // lambda power kk
      if (k < a_coeffs.size()) {
        double f = 1.0;
        for (std::size_t i = 2; i <= kk; ++i) f *= static_cast<double>(i);
        inner += a_coeffs[k] * pochhammer(rho + pp.beta + 1.0, k) *
                 pochhammer(pp.alpha, kk) * lam_pow / f;
      }
      lam_pow *= pp.lambda_;
    }
    const cplx sigma_n =
        pochhammer(rho + pp.alpha + 1.0, n) /
        (pochhammer(rho + pp.gamma_ + 1.0, n) *
         pochhammer(rho + pp.alpha + pp.beta + 1.0, n)) *
        inner;
    out.emplace_back(rho + pp.gamma_ + static_cast<double>(n),
                     pref * sigma_n);
  }
  return out;
}

std::vector<std::pair<cplx, cplx>> prabhakar_minus_asym(
    const PrabhakarParams& pp, cplx rho, const std::vector<cplx>& a_coeffs,
    std::size_t order) {
  if (is_int(pp.alpha + pp.beta - pp.gamma_))
    throw pole_error("prabhakar_minus_asym: requires alpha+beta-gamma off Z");
  const double floor =
      std::max((pp.alpha + pp.beta - pp.gamma_).real(), 0.0) - 1.0;
  if (!(rho.real() > floor))
    throw domain_error(
        "prabhakar_minus_asym: requires Re(rho) > max{...}-1");
  if (a_coeffs.empty())
    throw domain_error("prabhakar_minus_asym: empty coefficient list");
  const cplx pref = gamma_ratio(
      {rho + 1.0, rho + pp.gamma_ - pp.alpha - pp.beta + 1.0},
      {rho + pp.gamma_ - pp.alpha + 1.0, rho + pp.gamma_ - pp.beta + 1.0});
  std::vector<std::pair<cplx, cplx>> out;
  out.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    // tau_n = 1/(rho+gamma-beta+1)_n * sum_k a_k (rho+1)_k
    //         (rho+gamma-alpha-beta+1)_k / (rho+gamma-alpha+1)_k
    //         * (alpha)_{n-k} lambda^{n-k}/(n-k)!
    cplx inner{0, 0};
    cplx lam_pow{1, 0};
    for (std::size_t kk = 0; kk <= n; ++kk) {
      const std::size_t k = n - kk;
      if (k < a_coeffs.size()) {
        double f = 1.0;
        for (std::size_t i = 2; i <= kk; ++i) f *= static_cast<double>(i);
        inner += a_coeffs[k] * pochhammer(rho + 1.0, k) *
                 pochhammer(rho + pp.gamma_ - pp.alpha - pp.beta + 1.0, k) /
                 pochhammer(rho + pp.gamma_ - pp.alpha + 1.0, k) *
                 pochhammer(pp.alpha, kk) * lam_pow / f;
      }
      lam_pow *= pp.lambda_;
    }
    const cplx tau_n =
        inner / pochhammer(rho + pp.gamma_ - pp.beta + 1.0, n);
    out.emplace_back(rho + pp.gamma_ + static_cast<double>(n), pref * tau_n);
  }
  return out;
}

double phi1_kernel_bound(const Phi1Params& p, double x_arg,
                         KernelBoundSide side) {
  if (side == KernelBoundSide::near_one) {
    if (is_int(p.a + p.b - p.c))
      throw domain_error("phi1_kernel_bound: near-one needs a+b-c off Z");
    if (!(x_arg >= 0.0 && x_arg < 1.0))
      throw domain_error("phi1_kernel_bound: near-one needs x in [0,1)");
    const double expo = std::max(0.0, (p.c - p.a - p.b).real());
    return std::pow(1.0 - x_arg, expo);
  }
  if (is_int(p.a - p.b))
    throw domain_error("phi1_kernel_bound: large-negative needs a-b off Z");
  if (x_arg < 0.0)
    throw domain_error("phi1_kernel_bound: large-negative needs x >= 0");
  const double eps = 1e-6;
  if (x_arg <= 1.0 + eps) return 1.0;
  return std::pow(x_arg, -std::min(p.a.real(), p.b.real()));
}

}  // namespace humbert
