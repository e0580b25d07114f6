#include "humbert/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>

namespace humbert {

namespace {

constexpr double kPi = 3.14159265358979323846;

EvalReport from_series(const SeriesResult& s, Regime r) {
  EvalReport out;
  out.value = s.value;
  out.regime = r;
  out.abs_error_estimate = s.abs_error_estimate;
  return out;
}

// sum the term stream up to its optimal truncation point
EvalReport from_terms(const std::vector<cplx>& terms, Regime r) {
  std::vector<double> mods(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) mods[i] = std::abs(terms[i]);
  const std::size_t idx =
      terms.size() < 2 ? 0 : optimal_truncation(mods);
  EvalReport out;
  out.regime = r;
  for (std::size_t i = 0; i <= idx; ++i) out.value += terms[i];
  out.abs_error_estimate = mods[idx];
  return out;
}

bool real_directed_negative(cplx x) {
  return x.real() < 0.0 && std::abs(x.imag()) <= 1e-9 * std::abs(x.real());
}

bool int_within(cplx z, double d) { return is_int(z, d); }

}  // namespace

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::taylor: return "taylor";
    case Regime::series_2f1: return "series-2f1";
    case Regime::euler_integral: return "euler-integral";
    case Regime::connection_x1: return "connection-x1";
    case Regime::large_x: return "large-x";
    case Regime::large_y_left: return "large-y-left";
    case Regime::large_y_right: return "large-y-right";
    case Regime::imaginary_y: return "imaginary-y";
    case Regime::joint_beta: return "joint-beta";
    case Regime::joint_lambda: return "joint-lambda";
    case Regime::eta_x: return "eta-x";
    case Regime::eta_y: return "eta-y";
    case Regime::x_to_1_log: return "x-to-1-log";
    case Regime::reduction: return "reduction";
  }
  return "?";
}

double EvalReport::max_delta() const {
  double m = 0.0;
  for (const auto& e : agreement) m = std::max(m, e.delta);
  return m;
}

namespace {

std::optional<EvalReport> try_reduction(const Phi1Params& p, cplx x, cplx y,
                                        double tol) {
  if (is_nonpos_int(p.a)) {
    const std::size_t m =
        static_cast<std::size_t>(std::llround(-p.a.real()));
    return from_series(phi1_reduction_negm(m, p.b, p.c, x, y, tol),
                       Regime::reduction);
  }
  const cplx ac = p.a - p.c;
  if (is_int(ac) && ac.real() > -0.5) {
    const std::size_t m = static_cast<std::size_t>(std::llround(ac.real()));
    return from_series(phi1_reduction_cm(m, p.b, p.c, x, y, tol),
                       Regime::reduction);
  }
  return std::nullopt;
}

EvalReport eval_near_one(const Phi1Params& p, cplx x, cplx y, double tol) {
  const cplx abc = p.a + p.b - p.c;
  if (!int_within(abc, 0.1) && std::abs(1.0 - x) < 1.0 &&
      !is_nonpos_int(p.c - p.b))
    return from_series(phi1_near_x1_connection(p, x, y, tol),
                       Regime::connection_x1);
  // the logarithmic model is an o(1) limit form; prefer the exact integral
  if (p.c.real() > p.a.real() && p.a.real() > 0.0)
    return from_series(phi1_euler_integral(p, x, y), Regime::euler_integral);
  if (std::abs(abc) < 1e-9) {
    const cplx rho = 1.0 - x;
    EvalReport out;
    out.value = phi1_x_to_1_log(p.a, p.b, y, rho);
    out.regime = Regime::x_to_1_log;
    // o(1) model: no better estimate than the scale of the dropped terms
    out.abs_error_estimate =
        std::abs(rho) * (1.0 + std::abs(std::log(rho))) *
        std::max(1.0, std::abs(out.value));
    return out;
  }
  throw unsupported_domain(
      "x near 1 with a+b-c in Z\\{0}: no evaluation path (nearest regimes: "
      "connection-x1 needs a+b-c off Z, euler-integral needs Re(c)>Re(a)>0)");
}

EvalReport eval_joint(const Phi1Params& p, cplx x, cplx y,
                      const Thresholds& cfg) {
  // lambda-regimes want x real negative and Re(c) > Re(a) > 0
  if (real_directed_negative(x) && p.c.real() > p.a.real() &&
      p.a.real() > 0.0) {
    const double X = -x.real();
    const cplx lam_plus = y / X;
    const cplx lam_minus = -y / X;
    if (std::abs(y.real()) <= 1e-9 * std::abs(y)) {
      return from_terms(
          expand_joint_imaginary_terms(p, X, y.imag() / X, cfg.max_order),
          Regime::joint_lambda);
    }
    if (std::abs(std::arg(lam_plus)) <= kPi / 2.0 - kSectorDelta)
      return from_terms(
          expand_joint_lambda_terms(p, X, lam_plus, +1, cfg.max_order),
          Regime::joint_lambda);
    if (std::abs(std::arg(lam_minus)) <= kPi / 2.0 - kSectorDelta)
      return from_terms(
          expand_joint_lambda_terms(p, X, lam_minus, -1, cfg.max_order),
          Regime::joint_lambda);
  }
  // beta-regime: pick the order from the e^y-family term stream
  const cplx beta = -y / x;
  std::vector<double> mods;
  mods.reserve(cfg.max_order + 1);
  double xm = 1.0;
  for (std::size_t k = 0; k <= cfg.max_order; ++k) {
    mods.push_back(std::abs(coeff_a_k(k, p, beta)) * xm);
    xm /= std::abs(1.0 - x);
  }
  const std::size_t order = std::max<std::size_t>(1, optimal_truncation(mods));
  TruncatedValue tv = expand_joint_beta(p, x, y, order);
  EvalReport out;
  out.value = tv.value;
  out.regime = Regime::joint_beta;
  out.abs_error_estimate = tv.last_term_modulus;
  return out;
}

EvalReport eval_large_y(const Phi1Params& p, cplx x, cplx y,
                        const Thresholds& cfg) {
  // the eta expansion needs |y| well above |eta| before optimal truncation
  // reaches useful accuracy
  const bool eta_ok = std::abs(x * y) <= cfg.eta_max && std::abs(x) < 1.0 &&
                      std::abs(y) >= std::max(30.0, 4.0 * std::abs(x * y)) &&
                      !is_nonpos_int(p.a) && !is_nonpos_int(p.c - p.a);
  const double min_eta_order =
      std::max({1.0, std::abs(p.a), std::abs(p.a - p.c)});
  if (eta_ok && cfg.max_order >= min_eta_order) {
    if (y.real() > 0.0 && std::abs(y.imag()) <= y.real())
      return from_terms(expand_eta_large_y_terms(p, y, x * y, cfg.max_order,
                                                 EtaYDirection::right),
                        Regime::eta_y);
    bool excluded = false;
    for (long l = 0; l <= static_cast<long>(std::abs(y)) + 3; ++l)
      if (std::abs(y - (p.a + static_cast<double>(l))) < 0.1) excluded = true;
    if (!excluded && !(y.imag() == 0.0 && y.real() >= 0.0))
      return from_terms(expand_eta_large_y_terms(p, y, x * y, cfg.max_order,
                                                 EtaYDirection::left),
                        Regime::eta_y);
  }
  const bool u_shape = p.c.real() > p.a.real() && p.a.real() > 0.0;
  if (std::abs(y.real()) <= 0.02 * std::abs(y) && u_shape &&
      !on_cut_from_one(x)) {
    return from_terms(expand_shifted_imaginary_y_terms(
                          p, x, cplx{y.real(), 0.0}, y.imag(), cfg.max_order),
                      Regime::imaginary_y);
  }
  if (y.real() > 0.0 && std::abs(std::arg(y)) <= kPi / 2.0 - kSectorDelta &&
      y.real() <= 700.0)
    return from_terms(expand_large_y_right_terms(p, x, y, cfg.max_order),
                      Regime::large_y_right);
  if (std::abs(std::arg(-y)) <= kPi / 2.0 - kSectorDelta &&
      !is_nonpos_int(p.c - p.a))
    return from_terms(expand_large_y_left_terms(p, x, y, cfg.max_order),
                      Regime::large_y_left);
  if (u_shape && !on_cut_from_one(x))
    return from_terms(expand_shifted_imaginary_y_terms(
                          p, x, cplx{y.real(), 0.0}, y.imag(), cfg.max_order),
                      Regime::imaginary_y);
  throw unsupported_domain(
      "large |y| outside the right/left sectors without Re(c)>Re(a)>0 "
      "(nearest regimes: large-y-left/right, imaginary-y)");
}

}  // namespace

EvalReport evaluate(const Phi1Params& p, cplx x, cplx y, double tol,
                    const Thresholds& cfg) {
  if (auto red = try_reduction(p, x, y, tol)) return *red;

  const double ax = std::abs(x);
  const double ay = std::abs(y);

  if (ax <= cfg.x_small && ay <= cfg.y_moderate)
    return from_series(phi1_series_2f1(p, x, y, tol), Regime::series_2f1);

  if (std::abs(1.0 - x) < cfg.near_one && !on_cut_from_one(x))
    return eval_near_one(p, x, y, tol);

  if (ax > cfg.x_large && ay > cfg.y_large) return eval_joint(p, x, y, cfg);

  if (ax > cfg.x_large) {
    const bool ab_ok = !int_within(p.a - p.b, 0.05);
    const cplx eta = x * y;
    const double min_eta_order = std::max({1.0, std::abs(p.a), std::abs(p.b)});
    if (ab_ok && std::abs(eta) <= cfg.eta_max && ay < 1.0 &&
        ax >= std::max(20.0, 3.0 * std::abs(eta)) &&
        cfg.max_order >= min_eta_order && !(x.imag() == 0 && x.real() >= 0))
      return from_terms(expand_eta_large_x_terms(p, x, eta, cfg.max_order),
                        Regime::eta_x);
    if (ab_ok && !(x.imag() == 0 && x.real() >= 0))
      return from_terms(expand_large_x_terms(p, x, y, cfg.max_order),
                        Regime::large_x);
    if (p.c.real() > p.a.real() && p.a.real() > 0.0 && !on_cut_from_one(x))
      return from_series(phi1_euler_integral(p, x, y), Regime::euler_integral);
    throw unsupported_domain(
        "large |x| with a-b in Z and no Euler fallback (nearest regimes: "
        "large-x needs a-b off Z, euler-integral needs Re(c)>Re(a)>0)");
  }

  if (ay > cfg.y_large) return eval_large_y(p, x, y, cfg);

  // gap region: the series when it converges quickly, else euler, else the
  // slow-series stretch
  const double r_pfaff = (x == cplx{0.0, 0.0}) ? 0.0 : std::abs(x / (x - 1.0));
  const double r_gap = std::min(ax, r_pfaff);
  if (r_gap <= 0.85 && ay <= 2.0 * cfg.y_moderate)
    return from_series(phi1_series_2f1(p, x, y, tol, 200000),
                       Regime::series_2f1);
  if (p.c.real() > p.a.real() && p.a.real() > 0.0 && !on_cut_from_one(x))
    return from_series(phi1_euler_integral(p, x, y), Regime::euler_integral);
  if (r_gap < 0.995 && ay <= 2.0 * cfg.y_moderate)
    return from_series(phi1_series_2f1(p, x, y, tol, 200000),
                       Regime::series_2f1);
  throw unsupported_domain(
      "point not covered by any regime (nearest: series-2f1 needs |x| < 1 or "
      "Re(x) < 1/2 with moderate |y|; euler-integral needs Re(c)>Re(a)>0)");
}

EvalReport cross_check(const Phi1Params& p, cplx x, cplx y, double tol,
                       const Thresholds& cfg) {
  std::vector<EvalReport> results;
  auto attempt = [&](const std::function<EvalReport()>& fn) {
    try {
      EvalReport rep = fn();
      if (is_finite(rep.value)) results.push_back(rep);
    } catch (const domain_error&) {
    }
  };

  const double ax = std::abs(x);
  const double ay = std::abs(y);
  // cancellation amplification of the y-series in doubles
  const double cancel = std::max(0.0, -y.real()) + std::abs(y.imag());

  try {
    if (auto red = try_reduction(p, x, y, tol)) results.push_back(*red);
  } catch (const domain_error&) {
  }

  if (ax < 1.0 && ay <= 30.0 && cancel <= 14.0)
    attempt([&] {
      return from_series(phi1_taylor(p, x, y, tol), Regime::taylor);
    });
  const double r_pfaff = (x == cplx{0.0, 0.0}) ? 0.0 : std::abs(x / (x - 1.0));
  if (std::min(ax, r_pfaff) < 0.995 && ay <= 60.0 && cancel <= 14.0)
    attempt([&] {
      return from_series(phi1_series_2f1(p, x, y, tol, 400000),
                         Regime::series_2f1);
    });
  if (p.c.real() > p.a.real() + 0.1 && p.a.real() > 0.1 &&
      !on_cut_from_one(x) && y.real() <= 700.0)
    attempt([&] {
      return from_series(phi1_euler_integral(p, x, y),
                         Regime::euler_integral);
    });
  if (std::abs(1.0 - x) < 0.9 && !int_within(p.a + p.b - p.c, 0.1))
    attempt([&] {
      return from_series(phi1_near_x1_connection(p, x, y, tol),
                         Regime::connection_x1);
    });
  if (ax > 3.0 && !int_within(p.a - p.b, 0.05))
    attempt([&] {
      return from_terms(expand_large_x_terms(p, x, y, cfg.max_order),
                        Regime::large_x);
    });
  if (ay > 15.0) {
    attempt([&] {
      return from_terms(expand_large_y_right_terms(p, x, y, cfg.max_order),
                        Regime::large_y_right);
    });
    attempt([&] {
      return from_terms(expand_large_y_left_terms(p, x, y, cfg.max_order),
                        Regime::large_y_left);
    });
  }
  if (ax > 3.0 && std::abs(x * y) <= cfg.eta_max)
    attempt([&] {
      return from_terms(expand_eta_large_x_terms(p, x, x * y, cfg.max_order),
                        Regime::eta_x);
    });

  if (results.size() < 2)
    throw unsupported_domain(
        "cross_check: fewer than two regimes apply at this point");

  EvalReport out;
  out.agreement.reserve(results.size() * (results.size() - 1) / 2);
  for (std::size_t i = 0; i < results.size(); ++i)
    for (std::size_t j = i + 1; j < results.size(); ++j)
      out.agreement.push_back(
          {results[i].regime, results[j].regime,
           std::abs(results[i].value - results[j].value)});

  // prefer the convergent methods, in fixed order
  const Regime pref[] = {Regime::reduction,      Regime::taylor,
                         Regime::series_2f1,     Regime::euler_integral,
                         Regime::connection_x1};
  for (Regime r : pref)
    for (const auto& res : results)
      if (res.regime == r) {
        out.value = res.value;
        out.regime = res.regime;
        out.abs_error_estimate = res.abs_error_estimate;
        return out;
      }
  // otherwise the asymptotic result with the smallest estimate
  const EvalReport* best = &results.front();
  for (const auto& res : results)
    if (res.abs_error_estimate < best->abs_error_estimate) best = &res;
  out.value = best->value;
  out.regime = best->regime;
  out.abs_error_estimate = best->abs_error_estimate;
  return out;
}

}  // namespace humbert
