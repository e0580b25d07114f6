#ifndef HUMBERT_SARAN_FM_HPP_
#define HUMBERT_SARAN_FM_HPP_

#include "humbert/types.hpp"

namespace humbert {

/// Saran's triple hypergeometric F_M, evaluated through its single-series
/// continuation
///   F_M = sum_n (alpha2)_n (beta1)_n / (gamma2)_n
///         * 2F1[alpha1, beta1+n; gamma1; x] * 2F1[alpha2+n, beta2; gamma2+n; y]
///         * z^n / n!
/// and the Laplace integral
///   (1/Gamma(beta1)) int_0^inf e^{-t} t^{beta1-1} 1F1[alpha1;gamma1;xt]
///                                Phi1[alpha2,beta2;gamma2;y,zt] dt.

struct FmParams {
  cplx alpha1, alpha2, beta1, beta2, gamma1, gamma2;
  FmParams(cplx a1, cplx a2, cplx b1, cplx b2, cplx g1, cplx g2);
};

/// Single-series continuation; requires |z| < 1, |z| < |1-x|, with x and y
/// reachable by the inner 2F1 strategy (|.| < 1 or real part < 1/2).
SeriesResult fm_series(const FmParams& q, cplx x, cplx y, cplx z,
                       double tol = 1e-12, std::size_t max_terms = 10000);

/// Laplace integral; requires Re(beta1) > 0 and Re(x+z) < 1 (the growth of
/// the Phi1 factor is e^{Re(z) t} t^{...}), y off the cut [1, inf).
SeriesResult fm_laplace(const FmParams& q, cplx x, cplx y, cplx z);

}  // namespace humbert

#endif  // HUMBERT_SARAN_FM_HPP_
