#include "humbert/phi1_reference.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "humbert/quadrature.hpp"

namespace humbert {

namespace {

double binom(std::size_t m, std::size_t n) {
  double r = 1.0;
  for (std::size_t k = 0; k < n; ++k)
    r *= static_cast<double>(m - k) / static_cast<double>(k + 1);
  return r;
}

// Scale-aware stop rule for the outer series: three consecutive terms below
// tol * max(1, largest partial sum seen). Convergence checks start only once
// the term envelope |y|^n/n! has peaked (n >= |y|).
struct OuterStop {
  double tol;
  double scale = 1.0;
  std::size_t min_n;
  int small_run = 0;

  OuterStop(double tol_, double y_mod)
      : tol(tol_), min_n(static_cast<std::size_t>(std::ceil(y_mod)) + 2) {}

  bool done(cplx partial, cplx term, std::size_t n) {
    scale = std::max(scale, std::abs(partial));
    if (n < min_n) return false;
    if (std::abs(term) <= tol * scale) return ++small_run >= 3;
    small_run = 0;
    return false;
  }
};

void check_params_finite(cplx a, cplx b, cplx c) {
  if (!is_finite(a) || !is_finite(b) || !is_finite(c))
    throw domain_error("Phi1 parameters must be finite");
}

}  // namespace

Phi1Params::Phi1Params(cplx a_, cplx b_, cplx c_) : a(a_), b(b_), c(c_) {
  check_params_finite(a, b, c);
  if (is_nonpos_int(c)) throw pole_error("Phi1Params: c in Z_{<=0}");
}

Psi1Params::Psi1Params(cplx a_, cplx b_, cplx c_, cplx c_prime_)
    : a(a_), b(b_), c(c_), c_prime(c_prime_) {
  check_params_finite(a, b, c);
  if (!is_finite(c_prime)) throw domain_error("Psi1 parameters must be finite");
  if (is_nonpos_int(c)) throw pole_error("Psi1Params: c in Z_{<=0}");
  if (is_nonpos_int(c_prime)) throw pole_error("Psi1Params: c' in Z_{<=0}");
}

SeriesResult hyp2f1(cplx a, cplx b, cplx c, cplx x, double tol,
                    std::size_t max_terms) {
  if (is_nonpos_int(a) || is_nonpos_int(b) || x == cplx{0.0, 0.0})
    return pfq({a, b}, {c}, x, tol, max_terms);
  if (on_cut_from_one(x)) throw domain_error("hyp2f1: x on the cut [1, inf)");
  const double r_direct = std::abs(x);
  const double r_pfaff = std::abs(x / (x - 1.0));
  if (std::min(r_direct, r_pfaff) >= 0.995)
    throw domain_error(
        "hyp2f1: x outside supported domain (need |x| < 1 or Re(x) < 1/2)");
  if (r_pfaff < r_direct) {
    // Pfaff: 2F1[a,b;c;x] = (1-x)^(-b) 2F1[c-a,b;c;x/(x-1)]
    SeriesResult s = pfq({c - a, b}, {c}, x / (x - 1.0), tol, max_terms);
    const cplx f = std::pow(1.0 - x, -b);
    s.value *= f;
    s.abs_error_estimate *= std::abs(f);
    return s;
  }
  return pfq({a, b}, {c}, x, tol, max_terms);
}

SeriesResult phi1_taylor(const Phi1Params& p, cplx x, cplx y, double tol,
                         std::size_t max_terms) {
  if (std::abs(x) >= 1.0) throw domain_error("phi1_taylor: requires |x| < 1");
  SeriesResult out;
  OuterStop stop(tol, std::abs(y));
  cplx sum{0.0, 0.0};
  cplx poch_ac{1.0, 0.0};                  // (a)_k / (c)_k
  std::vector<cplx> ypow{cplx{1.0, 0.0}};  // y^j / j!
  for (std::size_t k = 0;; ++k) {
    if (k > 0) ypow.push_back(ypow.back() * y / static_cast<double>(k));
    // diagonal k: (a)_k/(c)_k sum_m (b)_m x^m/m! * y^(k-m)/(k-m)!
    cplx inner{0.0, 0.0};
    cplx bx{1.0, 0.0};  // (b)_m x^m / m!
    for (std::size_t m = 0; m <= k; ++m) {
      inner += bx * ypow[k - m];
      bx *= (p.b + static_cast<double>(m)) * x / static_cast<double>(m + 1);
    }
    const cplx diag = poch_ac * inner;
    out.terms_used = k + 1;
    if (stop.done(sum, diag, k)) {
      out.value = sum;
      out.abs_error_estimate = std::abs(diag);
      out.converged = true;
      return out;
    }
    sum += diag;
    if (k + 1 >= max_terms) {
      out.value = sum;
      out.abs_error_estimate = std::abs(diag);
      out.converged = false;
      return out;
    }
    poch_ac *= (p.a + static_cast<double>(k)) / (p.c + static_cast<double>(k));
  }
}

SeriesResult phi1_series_2f1(const Phi1Params& p, cplx x, cplx y, double tol,
                             std::size_t max_terms) {
  if (on_cut_from_one(x))
    throw domain_error("phi1_series_2f1: x on the cut [1, inf)");
  // the inner 2F1 argument does not depend on n; pick the route once
  const bool b_terminates = is_nonpos_int(p.b);
  const double r_direct = std::abs(x);
  const double r_pfaff =
      (x == cplx{0.0, 0.0}) ? 0.0 : std::abs(x / (x - 1.0));
  bool use_pfaff = false;
  if (x != cplx{0.0, 0.0} && !b_terminates) {
    if (std::min(r_direct, r_pfaff) >= 0.995)
      throw domain_error(
          "phi1_series_2f1: x outside the inner-2F1 domain "
          "(need |x| < 1 or Re(x) < 1/2)");
    use_pfaff = r_pfaff < r_direct;
  }
  const cplx xp = use_pfaff ? x / (x - 1.0) : cplx{0.0, 0.0};
  const cplx pfaff_factor =
      use_pfaff ? std::pow(1.0 - x, -p.b) : cplx{1.0, 0.0};

  SeriesResult out;
  OuterStop stop(tol, std::abs(y));
  cplx sum{0.0, 0.0};
  cplx coef{1.0, 0.0};  // (a)_n/(c)_n * y^n/n!
  double inner_err = 0.0;
  for (std::size_t n = 0;; ++n) {
    const double dn = static_cast<double>(n);
    SeriesResult g =
        use_pfaff ? pfq({p.c - p.a, p.b}, {p.c + dn}, xp, 1e-15, 200000)
                  : pfq({p.a + dn, p.b}, {p.c + dn}, x, 1e-15, 200000);
    const cplx term = coef * pfaff_factor * g.value;
    inner_err += std::abs(coef * pfaff_factor) * g.abs_error_estimate;
    out.terms_used = n + 1;
    if (stop.done(sum, term, n)) {
      out.value = sum;
      out.abs_error_estimate = std::abs(term) + inner_err;
      out.converged = true;
      return out;
    }
    sum += term;
    if (n + 1 >= max_terms) {
      out.value = sum;
      out.abs_error_estimate = std::abs(term) + inner_err;
      out.converged = false;
      return out;
    }
    coef *= (p.a + dn) / (p.c + dn) * y / (dn + 1.0);
  }
}

SeriesResult phi1_euler_integral(const Phi1Params& p, cplx x, cplx y,
                                 double tol) {
  if (!(p.c.real() > p.a.real() && p.a.real() > 0.0))
    throw domain_error("phi1_euler_integral: requires Re(c) > Re(a) > 0");
  if (on_cut_from_one(x))
    throw domain_error("phi1_euler_integral: x on the cut [1, inf)");
  const cplx am1 = p.a - 1.0;
  const cplx cam1 = p.c - p.a - 1.0;
  auto f = [&](double t) -> cplx {
    return std::pow(cplx{t, 0.0}, am1) * std::pow(cplx{1.0 - t, 0.0}, cam1) *
           std::pow(1.0 - x * t, -p.b) * std::exp(y * t);
  };
  // the t -> 1 half in the variable s = 1-t; forming 1-t from t would round
  // away the distance to the endpoint for s below machine epsilon
  auto g = [&](double s) -> cplx {
    return std::pow(cplx{1.0 - s, 0.0}, am1) * std::pow(cplx{s, 0.0}, cam1) *
           std::pow(1.0 - x + x * s, -p.b) * std::exp(y * (1.0 - s));
  };
  // both halves mapped so the endpoint powers t^(a-1), (1-t)^(c-a-1) vanish
  auto left = map_power_endpoint(f, 0.5, p.a.real());
  auto right = map_power_endpoint(g, 0.5, p.c.real() - p.a.real());
  QuadResult ql = gl_adaptive(left, 0.0, 1.0, tol);
  QuadResult qr = gl_adaptive(right, 0.0, 1.0, tol);
  const cplx pref = gamma_ratio({p.c}, {p.a, p.c - p.a});
  SeriesResult out;
  out.value = pref * (ql.value + qr.value);
  out.abs_error_estimate =
      std::abs(pref) * (ql.abs_error_estimate + qr.abs_error_estimate);
  out.terms_used = ql.panels + qr.panels;
  out.converged = ql.converged && qr.converged;
  return out;
}

Phi1Transformed kummer_transform(const Phi1Params& p, cplx x, cplx y) {
  if (x == cplx{1.0, 0.0} || on_cut_from_one(x))
    throw domain_error("kummer_transform: x on the cut [1, inf)");
  return Phi1Transformed{Phi1Params(p.c - p.a, p.b, p.c), x / (x - 1.0), -y,
                         std::exp(y) * std::pow(1.0 - x, -p.b)};
}

SeriesResult psi1_series(const Psi1Params& q, cplx x, cplx y, double tol,
                         std::size_t max_terms) {
  if (std::abs(x) >= 1.0) throw domain_error("psi1_series: requires |x| < 1");
  // Diagonal summation with the full term
  //   T(m,n) = (a)_{m+n}(b)_m/((c)_m(c')_n) x^m/m! y^n/n!
  // carried per slot: (a)_k alone overflows past k ~ 170, while the fused
  // terms stay on the scale of the diagonal itself.
  SeriesResult out;
  OuterStop stop(tol, std::abs(y));
  cplx sum{0.0, 0.0};
  std::vector<cplx> w{cplx{1.0, 0.0}};  // w[m] = T(m, k-m) on diagonal k
  for (std::size_t k = 0;; ++k) {
    cplx diag{0.0, 0.0};
    for (const cplx& t : w) diag += t;
    out.terms_used = k + 1;
    if (stop.done(sum, diag, k)) {
      out.value = sum;
      out.abs_error_estimate = std::abs(diag);
      out.converged = true;
      return out;
    }
    sum += diag;
    if (k + 1 >= max_terms) {
      out.value = sum;
      out.abs_error_estimate = std::abs(diag);
      out.converged = false;
      return out;
    }
    // advance to diagonal k+1
    const double dk = static_cast<double>(k);
    w.push_back(w[k] * (q.a + dk) * (q.b + dk) * x /
                ((q.c + dk) * (dk + 1.0)));
    for (std::size_t m = 0; m <= k; ++m) {
      const double nn = dk - static_cast<double>(m);  // old n index
      w[m] *= (q.a + dk) * y / ((q.c_prime + nn) * (nn + 1.0));
    }
  }
}

Psi1Transformed phi1_to_psi1(const Phi1Params& p, cplx x, cplx y) {
  if (x == cplx{0.0, 0.0}) throw domain_error("phi1_to_psi1: x = 0 excluded");
  if (on_cut_from_one(x))
    throw domain_error("phi1_to_psi1: x on the cut [1, inf)");
  return Psi1Transformed{Psi1Params(p.c - p.b, p.c - p.a, p.c, p.c - p.b), x,
                         (x - 1.0) * y / x,
                         std::pow(1.0 - x, p.c - p.a - p.b) * std::exp(y / x)};
}

SeriesResult phi1_near_x1_connection(const Phi1Params& p, cplx x, cplx y,
                                     double tol, std::size_t max_terms) {
  const cplx abc = p.a + p.b - p.c;
  if (is_int(abc))
    throw domain_error(
        "phi1_near_x1_connection: a+b-c in Z (use the logarithmic x->1 "
        "expansion when a+b = c)");
  if (std::abs(1.0 - x) >= 1.0)
    throw domain_error("phi1_near_x1_connection: requires |1-x| < 1");
  if (on_cut_from_one(x))
    throw domain_error("phi1_near_x1_connection: x on the cut [1, inf)");
  if (is_nonpos_int(p.c - p.b))
    throw pole_error("phi1_near_x1_connection: c-b in Z_{<=0}");

  const cplx pref1 =
      gamma_ratio({p.c, p.c - p.a - p.b}, {p.c - p.a, p.c - p.b});
  const cplx pref2 =
      gamma_ratio({p.c, abc}, {p.a, p.b}) * std::pow(1.0 - x, p.c - p.a - p.b);
  SeriesResult out;
  out.converged = true;
  if (pref1 != cplx{0.0, 0.0}) {
    Psi1Params q1(p.a, p.b, abc + 1.0, p.c - p.b);
    SeriesResult s1 = psi1_series(q1, 1.0 - x, y, tol, max_terms);
    out.value += pref1 * s1.value;
    out.abs_error_estimate += std::abs(pref1) * s1.abs_error_estimate;
    out.terms_used = std::max(out.terms_used, s1.terms_used);
    out.converged = out.converged && s1.converged;
  }
  if (pref2 != cplx{0.0, 0.0}) {
    Psi1Params q2(p.c - p.b, p.c - p.a, 1.0 - abc, p.c - p.b);
    SeriesResult s2 = psi1_series(q2, 1.0 - x, y, tol, max_terms);
    out.value += pref2 * s2.value;
    out.abs_error_estimate += std::abs(pref2) * s2.abs_error_estimate;
    out.terms_used = std::max(out.terms_used, s2.terms_used);
    out.converged = out.converged && s2.converged;
  }
  return out;
}

SeriesResult phi1_at_one(const Phi1Params& p, cplx y, double tol,
                         std::size_t max_terms) {
  if (!((p.c - p.a - p.b).real() > 0.0))
    throw domain_error("phi1_at_one: requires Re(c-a-b) > 0");
  if (is_nonpos_int(p.c - p.b))
    throw pole_error("phi1_at_one: c-b in Z_{<=0}");
  const cplx pref = gamma_ratio({p.c, p.c - p.a - p.b}, {p.c - p.a, p.c - p.b});
  SeriesResult s = pfq({p.a}, {p.c - p.b}, y, tol, max_terms);
  s.value *= pref;
  s.abs_error_estimate *= std::abs(pref);
  return s;
}

SeriesResult phi1_kummer_value(cplx a, cplx b, cplx y, double tol,
                               std::size_t max_terms) {
  if (!(b.real() < 1.0))
    throw domain_error("phi1_kummer_value: requires Re(b) < 1");
  if (is_nonpos_int(a - b + 1.0))
    throw domain_error("phi1_kummer_value: a-b+1 in Z_{<=0}");
  const cplx y24 = y * y / 4.0;
  const cplx pref_even =
      gamma_ratio({a - b + 1.0, a / 2.0}, {a, a / 2.0 - b + 1.0}) / 2.0;
  const cplx pref_odd =
      gamma_ratio({a - b + 1.0, a / 2.0 + 0.5}, {a, a / 2.0 - b + 1.5}) / 2.0;
  SeriesResult even =
      pfq({a / 2.0}, {cplx{0.5, 0.0}, a / 2.0 - b + 1.0}, y24, tol, max_terms);
  SeriesResult odd = pfq({a / 2.0 + 0.5}, {cplx{1.5, 0.0}, a / 2.0 - b + 1.5},
                         y24, tol, max_terms);
  SeriesResult out;
  out.value = pref_even * even.value + pref_odd * y * odd.value;
  out.abs_error_estimate = std::abs(pref_even) * even.abs_error_estimate +
                           std::abs(pref_odd * y) * odd.abs_error_estimate;
  out.terms_used = even.terms_used + odd.terms_used;
  out.converged = even.converged && odd.converged;
  return out;
}

SeriesResult phi1_reduction_cm(std::size_t m, cplx b, cplx c, cplx x, cplx y,
                               double tol, std::size_t max_terms) {
  if (is_nonpos_int(c)) throw pole_error("phi1_reduction_cm: c in Z_{<=0}");
  if (on_cut_from_one(x))
    throw domain_error("phi1_reduction_cm: x on the cut [1, inf)");
  SeriesResult out;
  out.converged = true;
  const cplx cm = c + static_cast<double>(m);
  cplx ypow{1.0, 0.0};
  cplx pc{1.0, 0.0};  // (c)_n
  for (std::size_t n = 0; n <= m; ++n) {
    SeriesResult g =
        hyp2f1(cm, b, c + static_cast<double>(n), x, tol * 1e-3, max_terms);
    const cplx coef = binom(m, n) * ypow / pc;
    out.value += coef * g.value;
    out.abs_error_estimate += std::abs(coef) * g.abs_error_estimate;
    out.terms_used += g.terms_used;
    out.converged = out.converged && g.converged;
    ypow *= y;
    pc *= c + static_cast<double>(n);
  }
  const cplx ey = std::exp(y);
  out.value *= ey;
  out.abs_error_estimate *= std::abs(ey);
  return out;
}

SeriesResult phi1_reduction_negm(std::size_t m, cplx b, cplx c, cplx x, cplx y,
                                 double tol, std::size_t max_terms) {
  if (is_nonpos_int(c)) throw pole_error("phi1_reduction_negm: c in Z_{<=0}");
  SeriesResult out;
  out.converged = true;
  cplx ypow{1.0, 0.0};
  cplx pc{1.0, 0.0};
  for (std::size_t n = 0; n <= m; ++n) {
    const double nm = static_cast<double>(n) - static_cast<double>(m);
    SeriesResult g =
        pfq({cplx{nm, 0.0}, b}, {c + static_cast<double>(n)}, x, tol,
            max_terms);
    const cplx coef = binom(m, n) * ypow / pc;
    out.value += coef * g.value;
    out.terms_used += g.terms_used;
    ypow *= -y;
    pc *= c + static_cast<double>(n);
  }
  return out;
}

}  // namespace humbert
