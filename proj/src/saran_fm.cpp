#include "humbert/saran_fm.hpp"

#include <algorithm>
#include <cmath>

#include "humbert/evaluator.hpp"
#include "humbert/phi1_reference.hpp"
#include "humbert/quadrature.hpp"
#include "humbert/scalar_kernel.hpp"

namespace humbert {

FmParams::FmParams(cplx a1, cplx a2, cplx b1, cplx b2, cplx g1, cplx g2)
    : alpha1(a1), alpha2(a2), beta1(b1), beta2(b2), gamma1(g1), gamma2(g2) {
  if (!is_finite(a1) || !is_finite(a2) || !is_finite(b1) || !is_finite(b2) ||
      !is_finite(g1) || !is_finite(g2))
    throw domain_error("FmParams: parameters must be finite");
  if (is_nonpos_int(g1)) throw pole_error("FmParams: gamma1 in Z_{<=0}");
  if (is_nonpos_int(g2)) throw pole_error("FmParams: gamma2 in Z_{<=0}");
}

SeriesResult fm_series(const FmParams& q, cplx x, cplx y, cplx z, double tol,
                       std::size_t max_terms) {
  if (std::abs(z) >= 1.0)
    throw domain_error("fm_series: requires |z| < 1");
  if (std::abs(z) >= std::abs(1.0 - x))
    throw domain_error("fm_series: requires |z| < |1-x|");
  SeriesResult out;
  cplx sum{0.0, 0.0};
  cplx coef{1.0, 0.0};  // (alpha2)_n (beta1)_n / (gamma2)_n * z^n / n!
  double inner_err = 0.0;
  double scale = 1.0;
  int small_run = 0;
  for (std::size_t n = 0;; ++n) {
    const double dn = static_cast<double>(n);
    SeriesResult fx =
        hyp2f1(q.alpha1, q.beta1 + dn, q.gamma1, x, 1e-15, 200000);
    SeriesResult fy =
        hyp2f1(q.alpha2 + dn, q.beta2, q.gamma2 + dn, y, 1e-15, 200000);
    const cplx term = coef * fx.value * fy.value;
    inner_err += std::abs(coef) * (fx.abs_error_estimate * std::abs(fy.value) +
                                   fy.abs_error_estimate * std::abs(fx.value));
    out.terms_used = n + 1;
    scale = std::max(scale, std::abs(sum));
    if (std::abs(term) <= tol * scale) {
      if (++small_run >= 3) {
        out.value = sum;
        out.abs_error_estimate = std::abs(term) + inner_err;
        out.converged = true;
        return out;
      }
    } else {
      small_run = 0;
    }
    sum += term;
    if (n + 1 >= max_terms) {
      out.value = sum;
      out.abs_error_estimate = std::abs(term) + inner_err;
      out.converged = false;
      return out;
    }
    coef *= (q.alpha2 + dn) * (q.beta1 + dn) / (q.gamma2 + dn) * z / (dn + 1.0);
  }
}

SeriesResult fm_laplace(const FmParams& q, cplx x, cplx y, cplx z) {
  if (!(q.beta1.real() > 0.0))
    throw domain_error("fm_laplace: requires Re(beta1) > 0");
  if ((x + z).real() >= 1.0)
    throw domain_error("fm_laplace: divergent, requires Re(x+z) < 1");
  if (on_cut_from_one(y))
    throw domain_error("fm_laplace: y on the cut [1, inf)");
  Phi1Params phi(q.alpha2, q.beta2, q.gamma2);
  auto integrand = [&](double t) -> cplx {
    const cplx f1 = pfq({q.alpha1}, {q.gamma1}, x * t, 1e-14, 100000).value;
    const cplx f2 = evaluate(phi, y, z * t, 1e-12).value;
    return std::exp(cplx{-t, 0.0}) * std::pow(cplx{t, 0.0}, q.beta1 - 1.0) *
           f1 * f2;
  };
  QuadResult head = gl_adaptive(map_power_endpoint(integrand, 1.0,
                                                   q.beta1.real()),
                                0.0, 1.0, 1e-11);
  QuadResult tail = gl_adaptive_semi_infinite(integrand, 1.0, 1e-11);
  const cplx pref = rgamma(q.beta1);
  SeriesResult out;
  out.value = pref * (head.value + tail.value);
  out.abs_error_estimate = std::abs(pref) * (head.abs_error_estimate +
                                             tail.abs_error_estimate);
  out.terms_used = head.panels + tail.panels;
  out.converged = head.converged && tail.converged;
  return out;
}

}  // namespace humbert
