#ifndef HUMBERT_EVALUATOR_HPP_
#define HUMBERT_EVALUATOR_HPP_

#include <string>
#include <vector>

#include "humbert/phi1_asymptotic.hpp"
#include "humbert/phi1_reference.hpp"
#include "humbert/types.hpp"

namespace humbert {

/// Unified front door: picks a representation for Phi1[a,b;c;x,y] from the
/// convergent and asymptotic families, evaluates it, and reports the value,
/// the chosen regime and an error estimate.

enum class Regime {
  taylor,
  series_2f1,
  euler_integral,
  connection_x1,
  large_x,
  large_y_left,
  large_y_right,
  imaginary_y,
  joint_beta,
  joint_lambda,
  eta_x,
  eta_y,
  x_to_1_log,
  reduction,
};

const char* regime_name(Regime r);

/// Dispatch thresholds. The crossover points are engineering choices (the
/// validity sectors do not pin them); all are overridable, also through the
/// CLI and the HUMBERT_THRESHOLDS environment file.
struct Thresholds {
  double x_small = 0.8;      // |x| below which the 2F1 series is primary
  double y_moderate = 20.0;  // |y| cap for the convergent series
  double x_large = 5.0;      // |x| beyond which large-x expansions engage
  double y_large = 25.0;     // |y| beyond which large-y expansions engage
  double near_one = 0.25;    // |1-x| below which connection/log engage
  double eta_max = 8.0;      // |x*y| cap for the eta regimes
  std::size_t max_order = 40;  // asymptotic order cap (optimal truncation
                               // picks the actual cut)
};

struct AgreementEntry {
  Regime first;
  Regime second;
  double delta;
};

struct EvalReport {
  cplx value{0.0, 0.0};
  Regime regime = Regime::taylor;
  double abs_error_estimate = 0.0;
  std::vector<AgreementEntry> agreement;  // filled by cross_check

  double max_delta() const;
};

/// Evaluate at (x, y) with the dispatch policy: reductions first, the 2F1
/// series on the convergent core, connection/logarithmic forms near x = 1,
/// then the asymptotic regimes, with the Euler integral as the fallback.
/// Throws unsupported_domain (naming the nearest regime) when nothing
/// applies.
EvalReport evaluate(const Phi1Params& p, cplx x, cplx y, double tol = 1e-12,
                    const Thresholds& cfg = {});

/// Evaluate with every applicable regime, fill the pairwise agreement
/// matrix, and return the best convergent value. Throws unsupported_domain
/// if fewer than two regimes apply.
EvalReport cross_check(const Phi1Params& p, cplx x, cplx y,
                       double tol = 1e-12, const Thresholds& cfg = {});

}  // namespace humbert

#endif  // HUMBERT_EVALUATOR_HPP_
