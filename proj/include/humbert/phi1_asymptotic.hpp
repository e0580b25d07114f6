#ifndef HUMBERT_PHI1_ASYMPTOTIC_HPP_
#define HUMBERT_PHI1_ASYMPTOTIC_HPP_

#include <vector>

#include "humbert/phi1_reference.hpp"
#include "humbert/types.hpp"

namespace humbert {

/// Asymptotic expansions of Phi1 in the five limiting regimes, as explicit
/// per-order term generators plus partial-sum evaluators. The evaluators
/// return the partial sum and the last retained term's modulus; no remainder
/// bound is claimed. Each expand_* has a *_terms sibling returning the
/// order-graded term values (prefactors included, value = sum of terms) for
/// optimal-truncation control.

/// Default half-width delta of the argument sectors |arg(.)| <= pi/2 - delta.
inline constexpr double kSectorDelta = 0.05;

/// Large-x series: two families in x^{-k} with prefactors (-x)^{-a}, (-x)^{-b}
/// and terminating/shifted confluent coefficients in y. Convergent for
/// |x| > 1, |arg(-x)| < pi; requires a-b off Z.
std::vector<cplx> expand_large_x_terms(const Phi1Params& p, cplx x, cplx y,
                                       std::size_t order);
TruncatedValue expand_large_x(const Phi1Params& p, cplx x, cplx y,
                              std::size_t order);

/// y -> infinity in the sector |arg(-y)| <= pi/2 - delta: algebraic family
/// (-y)^{-a-n} with terminating 2F1 coefficients; requires c-a off Z_{<=0}.
std::vector<cplx> expand_large_y_left_terms(const Phi1Params& p, cplx x,
                                            cplx y, std::size_t order);
TruncatedValue expand_large_y_left(const Phi1Params& p, cplx x, cplx y,
                                   std::size_t order);

/// y -> +infinity (sector |arg y| <= pi/2 - delta): exponential family
/// e^y y^{a-c-n}; requires a off Z_{<=0}.
std::vector<cplx> expand_large_y_right_terms(const Phi1Params& p, cplx x,
                                             cplx y, std::size_t order);
TruncatedValue expand_large_y_right(const Phi1Params& p, cplx x, cplx y,
                                    std::size_t order);

/// y = i*lambda on the imaginary axis, lambda real, |lambda| -> infinity:
/// both families; requires Re(c) > Re(a) > 0.
std::vector<cplx> expand_imaginary_y_terms(const Phi1Params& p, cplx x,
                                           double lambda, std::size_t order);
TruncatedValue expand_imaginary_y(const Phi1Params& p, cplx x, double lambda,
                                  std::size_t order);

/// Family-selected variant (bit 1: algebraic (-i lambda)^{-a-n} family,
/// bit 2: exponential e^{i lambda} family). Used to verify that both
/// families are required.
std::vector<cplx> expand_imaginary_y_family_terms(const Phi1Params& p, cplx x,
                                                  double lambda,
                                                  std::size_t order,
                                                  int families);

/// y = y0 + i*lambda, lambda real large: both families with finite
/// Kampe de Feriet coefficients (see kdf_11_1); Re(c) > Re(a) > 0.
std::vector<cplx> expand_shifted_imaginary_y_terms(const Phi1Params& p, cplx x,
                                                   cplx y0, double lambda,
                                                   std::size_t order);
TruncatedValue expand_shifted_imaginary_y(const Phi1Params& p, cplx x, cplx y0,
                                          double lambda, std::size_t order);

/// F^{1:1;1}_{0:0;0}[-n: alpha; beta; u, v]
///   = sum_{r+s<=n} (-n)_{r+s} (alpha)_r (beta)_s u^r v^s / (r! s!).
cplx kdf_11_1(std::size_t n, cplx alpha, cplx beta, cplx u, cplx v);

/// Coefficients a_k(x,y) of the joint-growth expansion with beta = -y/x:
///   a_k = sum_j (c-a)_j (c-a)_{k-j} (j+b-a+1)_{k-j} / (j!(k-j)!)
///         * 3F2[-j, j-k, c-1; c-a, a-b-k; 1] * beta^{j-k},  a_0 = 1.
cplx coeff_a_k(std::size_t k, const Phi1Params& p, cplx beta);

struct JointBetaOptions {
  double beta_min = 1e-3;
  double beta_max = 1e3;
  double exclusion_radius = 0.1;
};

/// x -> infinity, y -> infinity with beta = -y/x in a compact annulus.
/// When (x-1)y/x -> +infinity along the real direction, the single
/// e^y-scaled family applies; otherwise the three-family form with the
/// 2F2 blocks A1, A2 (k <= M, M fixed by w) plus the a_k family. Pass
/// w <= 0 to request the default rule for w.
TruncatedValue expand_joint_beta(const Phi1Params& p, cplx x, cplx y,
                                 std::size_t order, double w = -1.0,
                                 const JointBetaOptions& opts = {});

/// Coefficients of the lambda = y/x regime:
///   a^(1)_k = sum_n (b)_n (c-a)_{k-n} (b-a+1+n)_{k-n} / (n!(k-n)!) (-l)^n
///   a^(2)_k = (a)_k (a-c+1)_k / k! * U(a+k, a-b+k+1, lambda).
cplx joint_lambda_coeff_a1(std::size_t k, const Phi1Params& p, cplx lambda);
cplx joint_lambda_coeff_a2(std::size_t k, const Phi1Params& p, cplx lambda);

/// Phi1[a,b;c;-x, sign*y] for x -> +infinity with lambda = y/x fixed in
/// |arg(lambda)| <= pi/2 - delta; requires Re(c) > Re(a) > 0.
/// sign=+1: Gamma(c)/Gamma(a) x^{-b} e^y sum a^(1)_k y^{a-c-k};
/// sign=-1: Gamma(c)/Gamma(c-a) sum a^(2)_k x^{-a-k}.
std::vector<cplx> expand_joint_lambda_terms(const Phi1Params& p, double x,
                                            cplx lambda, int sign_y,
                                            std::size_t order);
TruncatedValue expand_joint_lambda(const Phi1Params& p, double x, cplx lambda,
                                   int sign_y, std::size_t order);

/// Phi1[a,b;c;-x, i*lambda*x] for x -> +infinity, lambda real nonzero:
/// sum of the a^(1)(i lambda) and a^(2)(-i lambda) families.
std::vector<cplx> expand_joint_imaginary_terms(const Phi1Params& p, double x,
                                               double lambda,
                                               std::size_t order);
TruncatedValue expand_joint_imaginary(const Phi1Params& p, double x,
                                      double lambda, std::size_t order);

/// Coefficients of the eta = x*y regimes (negative Pochhammer indices via
/// (z)_{-j} = 1/(z-j)_j; vanishing denominators raise pole_error).
cplx eta_x_coeff_b1(std::size_t k, const Phi1Params& p, cplx eta);
cplx eta_x_coeff_b2(std::size_t k, const Phi1Params& p, cplx eta);
cplx eta_y_coeff_c1(std::size_t k, const Phi1Params& p, cplx eta);
cplx eta_y_coeff_c2(std::size_t k, const Phi1Params& p, cplx eta);

/// x -> infinity with eta = x*y fixed (y = eta/x): two families in x^{-k}.
/// Requires a-b off Z, |arg(-x)| < pi, order >= max(1,|a|,|b|).
std::vector<cplx> expand_eta_large_x_terms(const Phi1Params& p, cplx x,
                                           cplx eta, std::size_t order);
TruncatedValue expand_eta_large_x(const Phi1Params& p, cplx x, cplx eta,
                                  std::size_t order);

enum class EtaYDirection { left, right };

/// y -> infinity with eta = x*y fixed (x = eta/y). direction left: both
/// algebraic and e^y families, |arg(-y)| < pi, y bounded away from a+l
/// (l in Z_{>=0}); direction right: y -> +infinity, e^y family only.
/// Requires a, c-a off Z_{<=0} and order >= max(1,|a|,|a-c|).
std::vector<cplx> expand_eta_large_y_terms(const Phi1Params& p, cplx y,
                                           cplx eta, std::size_t order,
                                           EtaYDirection direction,
                                           double exclusion_radius = 0.1);
TruncatedValue expand_eta_large_y(const Phi1Params& p, cplx y, cplx eta,
                                  std::size_t order, EtaYDirection direction,
                                  double exclusion_radius = 0.1);

/// rho -> 0 model of the logarithmic case c = a+b:
///   Phi1[a,b;a+b;1-rho,y] = -Gamma(a+b)/(Gamma(a)Gamma(b)) *
///     { e^y (2*gamma + psi(a) + psi(b) + log rho)
///       + (y/a) F^{0:1;2}_{1:0;1}[-: 1; a,1; 2: -; a+1; y,y] } + o(1).
/// Returns the displayed terms only (no o(1) correction).
cplx phi1_x_to_1_log(cplx a, cplx b, cplx y, cplx rho);

/// The Kampe de Feriet double series of the logarithmic model,
///   sum_{m,n} (1)_m (a)_n (1)_n / ((2)_{m+n} (a+1)_n) u^m v^n / (m! n!),
/// summed by diagonals; entire in (u,v).
SeriesResult kdf_01_21(cplx a, cplx u, cplx v, double tol = 1e-12,
                       std::size_t max_terms = 10000);

/// Superasymptotic truncation point: index of the smallest modulus before
/// the first strict increase; last index for a monotone stream.
std::size_t optimal_truncation(const std::vector<double>& term_moduli);

}  // namespace humbert

#endif  // HUMBERT_PHI1_ASYMPTOTIC_HPP_
