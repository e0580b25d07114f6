#ifndef HUMBERT_SCALAR_KERNEL_HPP_
#define HUMBERT_SCALAR_KERNEL_HPP_

#include <initializer_list>
#include <vector>

#include "humbert/types.hpp"

namespace humbert {

/// Principal branch of log Gamma(z), Lanczos approximation with reflection
/// for Re(z) < 0.5. Throws pole_error for z in Z_{<=0}.
cplx log_gamma(cplx z);

/// Gamma(z) = exp(log_gamma(z)).
cplx gamma_fn(cplx z);

/// 1/Gamma(z); returns 0 at the poles z in Z_{<=0} (entire function).
cplx rgamma(cplx z);

/// prod Gamma(num_i) / prod Gamma(den_j). Denominator poles zero the ratio;
/// numerator poles throw pole_error.
cplx gamma_ratio(std::initializer_list<cplx> num,
                 std::initializer_list<cplx> den);

/// Psi function psi(z) = Gamma'(z)/Gamma(z); asymptotic series after an
/// upward recurrence shift, reflection for Re(z) < 0.5.
cplx digamma(cplx z);

/// Rising factorial (z)_n = z (z+1) ... (z+n-1); (z)_0 = 1.
cplx pochhammer(cplx z, std::size_t n);

/// Negative-index Pochhammer (z)_{-j} = 1/(z-j)_j, and (z)_n for n >= 0.
/// Throws pole_error when the defining denominator vanishes.
cplx pochhammer_int(cplx z, long n);

/// Generalized hypergeometric series pFq(numer; denom; z), truncated when the
/// first omitted term has modulus <= tol. A numerator parameter in Z_{<=0}
/// terminates the series. Denominator parameters in Z_{<=0} are a domain
/// error unless a numerator terminates first; a nonterminating series with
/// p = q+1 requires |z| < 1. Nonconvergence within max_terms is reported via
/// converged=false, never an exception.
SeriesResult pfq(const std::vector<cplx>& numer, const std::vector<cplx>& denom,
                 cplx z, double tol = 1e-12, std::size_t max_terms = 10000);

/// Kummer U-function via the Laplace-type integral
///   U(a,b,z) = (1/Gamma(a)) int_0^inf t^(a-1) (1+t)^(b-a-1) e^(-zt) dt,
/// Re(a) > 0. The integration ray is rotated inside the sector of
/// analyticity, which extends validity to the closed sector |arg z| <= pi/2
/// (z != 0). Throws domain_error outside.
cplx kummer_u(cplx a, cplx b, cplx z);

/// Complementary error function. Full double accuracy on the real axis;
/// off-axis via the entire-function identity
///   erfc(z) = (2/sqrt(pi)) e^(-z^2) int_0^inf e^(-t^2 - 2tz) dt  (Re z >= 0)
/// with reflection erfc(z) = 2 - erfc(-z). Supported for |z| <= 20.
cplx erfc_fn(cplx z);

}  // namespace humbert

#endif  // HUMBERT_SCALAR_KERNEL_HPP_
