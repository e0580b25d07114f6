#ifndef HUMBERT_PHI1_REFERENCE_HPP_
#define HUMBERT_PHI1_REFERENCE_HPP_

#include "humbert/scalar_kernel.hpp"
#include "humbert/types.hpp"

namespace humbert {

/// Convergent evaluations of the Humbert function
///   Phi1[a,b;c;x,y] = sum_{m,n} (a)_{m+n} (b)_m / (c)_{m+n} x^m/m! y^n/n!
/// and of its companion Psi1, together with the exact transformation and
/// reduction formulas. These routines are the ground truth the asymptotic
/// expansions are tested against.

struct Phi1Params {
  cplx a, b, c;
  Phi1Params(cplx a_, cplx b_, cplx c_);
};

struct Psi1Params {
  cplx a, b, c, c_prime;
  Psi1Params(cplx a_, cplx b_, cplx c_, cplx c_prime_);
};

/// Gauss 2F1 with the evaluation strategy shared by the Phi1 series:
/// terminating series summed directly for any x; otherwise the smaller of
/// the direct argument x and the Pfaff argument x/(x-1) is used, which
/// covers Re(x) < 1/2 and |x| < 1. Throws domain_error when neither
/// converges (|x| and |x/(x-1)| both >= 0.97).
SeriesResult hyp2f1(cplx a, cplx b, cplx c, cplx x, double tol = 1e-15,
                    std::size_t max_terms = 200000);

/// Defining double series summed by diagonals m+n = k; requires |x| < 1.
/// terms_used counts diagonals.
SeriesResult phi1_taylor(const Phi1Params& p, cplx x, cplx y,
                         double tol = 1e-12, std::size_t max_terms = 10000);

/// Single series of 2F1 values,
///   sum_n (a)_n/(c)_n 2F1[a+n,b;c+n;x] y^n/n!,
/// the analytic continuation to x off the cut [1, inf). Evaluation domain is
/// limited by the inner 2F1 strategy (see hyp2f1).
SeriesResult phi1_series_2f1(const Phi1Params& p, cplx x, cplx y,
                             double tol = 1e-12,
                             std::size_t max_terms = 10000);

/// Euler integral
///   Gamma(c)/(Gamma(a)Gamma(c-a)) int_0^1 t^(a-1)(1-t)^(c-a-1)(1-xt)^(-b)e^(yt) dt
/// for Re(c) > Re(a) > 0, x off [1, inf). Adaptive Gauss-Legendre with
/// power substitutions absorbing both endpoint singularities.
SeriesResult phi1_euler_integral(const Phi1Params& p, cplx x, cplx y,
                                 double tol = 1e-13);

struct Phi1Transformed {
  Phi1Params params;
  cplx x, y, prefactor;
};

struct Psi1Transformed {
  Psi1Params params;
  cplx x, y, prefactor;
};

/// Kummer-type transformation
///   Phi1[a,b;c;x,y] = e^y (1-x)^(-b) Phi1[c-a,b;c;x/(x-1),-y].
Phi1Transformed kummer_transform(const Phi1Params& p, cplx x, cplx y);

/// Psi1 double series summed by diagonals; |x| < 1.
SeriesResult psi1_series(const Psi1Params& q, cplx x, cplx y,
                         double tol = 1e-12, std::size_t max_terms = 10000);

/// Phi1 -> Psi1 transformation
///   Phi1[a,b;c;x,y] = (1-x)^(c-a-b) e^(y/x) Psi1[c-b,c-a;c,c-b;x,(x-1)y/x].
Psi1Transformed phi1_to_psi1(const Phi1Params& p, cplx x, cplx y);

/// Connection formula at x = 1: two Psi1 series in 1-x with gamma
/// prefactors; requires a+b-c not an integer, |1-x| < 1 and c-b off Z_{<=0}.
SeriesResult phi1_near_x1_connection(const Phi1Params& p, cplx x, cplx y,
                                     double tol = 1e-12,
                                     std::size_t max_terms = 10000);

/// Gauss-summation value on the line x = 1:
///   Phi1[a,b;c;1,y] = Gamma(c)Gamma(c-a-b)/(Gamma(c-a)Gamma(c-b)) 1F1[a;c-b;y],
/// Re(c-a-b) > 0.
SeriesResult phi1_at_one(const Phi1Params& p, cplx y, double tol = 1e-12,
                         std::size_t max_terms = 10000);

/// Summation formula at x = -1 (Kummer's theorem lifted to Phi1):
///   Phi1[a,b;a-b+1;-1,y] as a gamma-weighted pair of 1F2 series in y^2/4.
/// Requires Re(b) < 1 and a-b+1 off Z_{<=0}.
SeriesResult phi1_kummer_value(cplx a, cplx b, cplx y, double tol = 1e-12,
                               std::size_t max_terms = 10000);

/// Finite reduction for a = c+m:
///   Phi1[c+m,b;c;x,y] = e^y sum_{n=0}^m 2F1[c+m,b;c+n;x] binom(m,n) y^n/(c)_n.
SeriesResult phi1_reduction_cm(std::size_t m, cplx b, cplx c, cplx x, cplx y,
                               double tol = 1e-12,
                               std::size_t max_terms = 10000);

/// Finite reduction for a = -m:
///   Phi1[-m,b;c;x,y] = sum_{n=0}^m 2F1[n-m,b;c+n;x] binom(m,n) (-y)^n/(c)_n.
SeriesResult phi1_reduction_negm(std::size_t m, cplx b, cplx c, cplx x, cplx y,
                                 double tol = 1e-12,
                                 std::size_t max_terms = 10000);

/// Membership in the cut domain D = { x != 1, |arg(1-x)| < pi }.
inline bool in_region_d(cplx x) { return !on_cut_from_one(x); }

}  // namespace humbert

#endif  // HUMBERT_PHI1_REFERENCE_HPP_
