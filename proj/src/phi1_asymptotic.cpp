#include "humbert/phi1_asymptotic.hpp"

#include <algorithm>
#include <cmath>

namespace humbert {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kEulerGamma = 0.57721566490153286061;

TruncatedValue make_truncated(const std::vector<cplx>& terms) {
  TruncatedValue out;
  for (const cplx& t : terms) out.value += t;
  out.terms_used = terms.size();
  out.last_term_modulus = terms.empty() ? 0.0 : std::abs(terms.back());
  return out;
}

// The limit-safe combination
//   (1-beta)_n * F[num..., beta-n; z] = sum_j prod_i (num_i)_j z^j/j! * s_j,
// s_j = (-1)^n (beta-n+j)_{n-j} for j <= n, (-1)^n / (beta)_{j-n} for j > n.
// Finite even when beta-n sits in Z_{<=0}, where the plain ratio form is
// 0 * infinity; the tail past j = n requires beta off Z_{<=0}.
cplx shifted_series(const std::vector<cplx>& numer, cplx beta, std::size_t n,
                    cplx z) {
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  long terminate_at = -1;
  for (cplx a : numer) {
    if (is_nonpos_int(a)) {
      long m = static_cast<long>(std::llround(-a.real()));
      if (terminate_at < 0 || m < terminate_at) terminate_at = m;
    }
  }
  cplx sum{0.0, 0.0};
  cplx pnum{1.0, 0.0};      // prod (num_i)_j * z^j / j!
  cplx den_tail{1.0, 0.0};  // (beta)_{j-n} for j > n
  double scale = 0.0;
  int small_run = 0;
  for (std::size_t j = 0;; ++j) {
    cplx s_j;
    if (j <= n) {
      s_j = sign * pochhammer(beta - static_cast<double>(n - j), n - j);
    } else {
      den_tail *= beta + static_cast<double>(j - 1 - n);
      if (std::abs(den_tail) == 0.0)
        throw pole_error("shifted_series: beta in Z_{<=0}");
      s_j = sign / den_tail;
    }
    const cplx term = pnum * s_j;
    sum += term;
    scale = std::max({scale, std::abs(sum), 1e-300});
    if (terminate_at >= 0 && static_cast<long>(j) == terminate_at) return sum;
    if (j > n) {
      if (std::abs(term) <= 1e-17 * scale) {
        if (++small_run >= 2) return sum;
      } else {
        small_run = 0;
      }
    }
    if (j > 200000) return sum;
    const double dj = static_cast<double>(j);
    for (cplx a : numer) pnum *= a + dj;
    pnum *= z / (dj + 1.0);
  }
}

void require_off_positive_real(cplx x, const char* who) {
  if (x.imag() == 0.0 && x.real() >= 0.0)
    throw domain_error(std::string(who) + ": needs |arg(-x)| < pi");
}

bool in_sector(cplx w, double delta) {
  return w != cplx{0.0, 0.0} && std::abs(std::arg(w)) <= kPi / 2.0 - delta;
}

void require_exp_safe(cplx y) {
  if (y.real() > 700.0)
    throw domain_error("expansion prefactor e^y overflows double range");
}

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

}  // namespace

std::vector<cplx> expand_large_x_terms(const Phi1Params& p, cplx x, cplx y,
                                       std::size_t order) {
  if (is_int(p.a - p.b))
    throw domain_error("expand_large_x: requires a-b off Z");
  if (std::abs(x) <= 1.0)
    throw domain_error("expand_large_x: requires |x| > 1");
  require_off_positive_real(x, "expand_large_x");
  const cplx pref1 =
      gamma_ratio({p.c, p.b - p.a}, {p.b, p.c - p.a}) * std::pow(-x, -p.a);
  const cplx pref2 =
      gamma_ratio({p.c, p.a - p.b}, {p.a, p.c - p.b}) * std::pow(-x, -p.b);
  std::vector<cplx> terms(order + 1);
  cplx pa{1, 0}, pab{1, 0}, pb{1, 0}, pba{1, 0};
  cplx xk{1, 0};
  double kfact = 1.0;
  for (std::size_t k = 0; k <= order; ++k) {
    const cplx s1 =
        shifted_series({cplx{-static_cast<double>(k), 0}}, p.c - p.a, k, y);
    const cplx s2 =
        shifted_series({p.a - p.b - static_cast<double>(k)}, p.c - p.b, k, y);
    terms[k] = pref1 * s1 * pa / (pab * kfact) * xk +
               pref2 * s2 * pb / (pba * kfact) * xk;
    const double dk = static_cast<double>(k);
    pa *= p.a + dk;
    pab *= p.a - p.b + 1.0 + dk;
    pb *= p.b + dk;
    pba *= p.b - p.a + 1.0 + dk;
    kfact *= dk + 1.0;
    xk /= x;
  }
  return terms;
}

TruncatedValue expand_large_x(const Phi1Params& p, cplx x, cplx y,
                              std::size_t order) {
  return make_truncated(expand_large_x_terms(p, x, y, order));
}

std::vector<cplx> expand_large_y_left_terms(const Phi1Params& p, cplx x,
                                            cplx y, std::size_t order) {
  if (is_nonpos_int(p.c - p.a))
    throw pole_error("expand_large_y_left: c-a in Z_{<=0}");
  if (!in_sector(-y, kSectorDelta))
    throw domain_error(
        "expand_large_y_left: y outside the sector |arg(-y)| <= pi/2 - delta");
  if (on_cut_from_one(x))
    throw domain_error("expand_large_y_left: x on the cut [1, inf)");
  const cplx pref = gamma_ratio({p.c}, {p.c - p.a});
  std::vector<cplx> terms(order + 1);
  cplx pa{1, 0};
  double nfact = 1.0;
  cplx ypow = std::pow(-y, -p.a);
  for (std::size_t n = 0; n <= order; ++n) {
    const cplx s = shifted_series({cplx{-static_cast<double>(n), 0}, p.b},
                                  p.c - p.a, n, x);
    terms[n] = pref * s * pa / nfact * ypow;
    const double dn = static_cast<double>(n);
    pa *= p.a + dn;
    nfact *= dn + 1.0;
    ypow /= -y;
  }
  return terms;
}

TruncatedValue expand_large_y_left(const Phi1Params& p, cplx x, cplx y,
                                   std::size_t order) {
  return make_truncated(expand_large_y_left_terms(p, x, y, order));
}

std::vector<cplx> expand_large_y_right_terms(const Phi1Params& p, cplx x,
                                             cplx y, std::size_t order) {
  if (is_nonpos_int(p.a))
    throw pole_error("expand_large_y_right: a in Z_{<=0}");
  if (!in_sector(y, kSectorDelta))
    throw domain_error(
        "expand_large_y_right: y outside the sector |arg y| <= pi/2 - delta");
  if (on_cut_from_one(x))
    throw domain_error("expand_large_y_right: x on the cut [1, inf)");
  require_exp_safe(y);
  const cplx xp = x / (x - 1.0);
  const cplx pref =
      gamma_ratio({p.c}, {p.a}) * std::exp(y) * std::pow(1.0 - x, -p.b);
  std::vector<cplx> terms(order + 1);
  cplx pca{1, 0};
  double nfact = 1.0;
  cplx ypow = std::pow(y, p.a - p.c);
  for (std::size_t n = 0; n <= order; ++n) {
    const cplx s =
        shifted_series({cplx{-static_cast<double>(n), 0}, p.b}, p.a, n, xp);
    terms[n] = pref * s * pca / nfact * ypow;
    const double dn = static_cast<double>(n);
    pca *= p.c - p.a + dn;
    nfact *= dn + 1.0;
    ypow /= y;
  }
  return terms;
}

TruncatedValue expand_large_y_right(const Phi1Params& p, cplx x, cplx y,
                                    std::size_t order) {
  return make_truncated(expand_large_y_right_terms(p, x, y, order));
}

namespace {

// family mask: bit 1 = algebraic family, bit 2 = exponential family
std::vector<cplx> imaginary_y_terms_mask(const Phi1Params& p, cplx x,
                                         double lambda, std::size_t order,
                                         int families) {
  if (!(p.c.real() > p.a.real() && p.a.real() > 0.0))
    throw domain_error("expand_imaginary_y: requires Re(c) > Re(a) > 0");
  if (lambda == 0.0) throw domain_error("expand_imaginary_y: lambda = 0");
  if (on_cut_from_one(x))
    throw domain_error("expand_imaginary_y: x on the cut [1, inf)");
  const cplx il{0.0, lambda};
  const cplx pref1 = gamma_ratio({p.c}, {p.c - p.a});
  const cplx pref2 =
      gamma_ratio({p.c}, {p.a}) * std::exp(il) * std::pow(1.0 - x, -p.b);
  const cplx xp = x / (x - 1.0);
  std::vector<cplx> terms(order + 1);
  cplx pa{1, 0}, pca{1, 0};
  double nfact = 1.0;
  cplx y1 = std::pow(-il, -p.a);
  cplx y2 = std::pow(il, p.a - p.c);
  for (std::size_t n = 0; n <= order; ++n) {
    const cplx mn{-static_cast<double>(n), 0};
    cplx t{0, 0};
    if (families & 1)
      t += pref1 * shifted_series({mn, p.b}, p.c - p.a, n, x) * pa / nfact * y1;
    if (families & 2)
      t += pref2 * shifted_series({mn, p.b}, p.a, n, xp) * pca / nfact * y2;
    terms[n] = t;
    const double dn = static_cast<double>(n);
    pa *= p.a + dn;
    pca *= p.c - p.a + dn;
    nfact *= dn + 1.0;
    y1 /= -il;
    y2 /= il;
  }
  return terms;
}

}  // namespace

std::vector<cplx> expand_imaginary_y_terms(const Phi1Params& p, cplx x,
                                           double lambda, std::size_t order) {
  return imaginary_y_terms_mask(p, x, lambda, order, 3);
}

std::vector<cplx> expand_imaginary_y_family_terms(const Phi1Params& p, cplx x,
                                                  double lambda,
                                                  std::size_t order,
                                                  int families) {
  return imaginary_y_terms_mask(p, x, lambda, order, families);
}

TruncatedValue expand_imaginary_y(const Phi1Params& p, cplx x, double lambda,
                                  std::size_t order) {
  return make_truncated(expand_imaginary_y_terms(p, x, lambda, order));
}

std::vector<cplx> expand_shifted_imaginary_y_terms(const Phi1Params& p, cplx x,
                                                   cplx y0, double lambda,
                                                   std::size_t order) {
  if (!(p.c.real() > p.a.real() && p.a.real() > 0.0))
    throw domain_error(
        "expand_shifted_imaginary_y: requires Re(c) > Re(a) > 0");
  if (lambda == 0.0)
    throw domain_error("expand_shifted_imaginary_y: lambda = 0");
  if (on_cut_from_one(x))
    throw domain_error("expand_shifted_imaginary_y: x on the cut [1, inf)");
  const cplx il{0.0, lambda};
  const cplx xp = x / (x - 1.0);
  const cplx pref1 = gamma_ratio({p.c}, {p.c - p.a});
  const cplx pref2 =
      gamma_ratio({p.c}, {p.a}) * std::exp(y0 + il) * std::pow(1.0 - x, -p.b);
  // The scaled coefficients y0^n/n! F^{1:1;1}[...] written as triple
  // convolutions: stable for every y0 including 0, where they collapse to
  // the pure imaginary-axis coefficients.
  std::vector<cplx> pr(order + 1), qs(order + 1), rq(order + 1);
  std::vector<cplx> prB(order + 1), qsB(order + 1), rqB(order + 1);
  pr[0] = qs[0] = rq[0] = prB[0] = qsB[0] = rqB[0] = cplx{1, 0};
  for (std::size_t k = 1; k <= order; ++k) {
    const double dk = static_cast<double>(k - 1);
    pr[k] = pr[k - 1] * (p.a - p.c + 1.0 + dk) / (dk + 1.0);
    qs[k] = qs[k - 1] * (p.b + dk) * x / (dk + 1.0);
    rq[k] = rq[k - 1] * y0 / (dk + 1.0);
    prB[k] = prB[k - 1] * (1.0 - p.a + dk) / (dk + 1.0);
    qsB[k] = qsB[k - 1] * (p.b + dk) * xp / (dk + 1.0);
    rqB[k] = rqB[k - 1] * (-y0) / (dk + 1.0);
  }
  std::vector<cplx> terms(order + 1);
  cplx pa{1, 0}, pca{1, 0};
  cplx y1 = std::pow(-il, -p.a);
  cplx y2 = std::pow(il, p.a - p.c);
  for (std::size_t n = 0; n <= order; ++n) {
    cplx ca{0, 0}, cb{0, 0};
    for (std::size_t r = 0; r <= n; ++r)
      for (std::size_t s = 0; s + r <= n; ++s) {
        ca += pr[r] * qs[s] * rq[n - r - s];
        cb += prB[r] * qsB[s] * rqB[n - r - s];
      }
    terms[n] = pref1 * pa * ca * y1 + pref2 * pca * cb * y2;
    const double dn = static_cast<double>(n);
    pa *= p.a + dn;
    pca *= p.c - p.a + dn;
    y1 /= -il;
    y2 /= il;
  }
  return terms;
}

TruncatedValue expand_shifted_imaginary_y(const Phi1Params& p, cplx x, cplx y0,
                                          double lambda, std::size_t order) {
  return make_truncated(
      expand_shifted_imaginary_y_terms(p, x, y0, lambda, order));
}

cplx kdf_11_1(std::size_t n, cplx alpha, cplx beta, cplx u, cplx v) {
  cplx sum{0, 0};
  cplx pu{1, 0};  // (alpha)_r u^r / r!
  for (std::size_t r = 0; r <= n; ++r) {
    cplx pv{1, 0};  // (beta)_s v^s / s!
    for (std::size_t s = 0; r + s <= n; ++s) {
      sum += pochhammer(cplx{-static_cast<double>(n), 0}, r + s) * pu * pv;
      pv *= (beta + static_cast<double>(s)) * v / static_cast<double>(s + 1);
    }
    pu *= (alpha + static_cast<double>(r)) * u / static_cast<double>(r + 1);
  }
  return sum;
}

cplx coeff_a_k(std::size_t k, const Phi1Params& p, cplx beta) {
  if (std::abs(beta) == 0.0) throw domain_error("coeff_a_k: beta = 0");
  const cplx ca = p.c - p.a;
  cplx sum{0, 0};
  cplx bpow = std::pow(beta, -static_cast<double>(k));  // beta^{j-k}
  cplx pj{1, 0};                                        // (c-a)_j / j!
  for (std::size_t j = 0; j <= k; ++j) {
    // terminating 3F2[-j, j-k, c-1; c-a, a-b-k; 1]
    cplx f3{1, 0};
    cplx t{1, 0};
    const std::size_t imax = std::min(j, k - j);
    for (std::size_t i = 0; i < imax; ++i) {
      const double di = static_cast<double>(i);
      const cplx d1 = ca + di;
      const cplx d2 = p.a - p.b - static_cast<double>(k) + di;
      if (std::abs(d1) < 1e-12 || std::abs(d2) < 1e-12)
        throw pole_error("coeff_a_k: 3F2 denominator parameter pole");
      t *= (cplx{-static_cast<double>(j), 0} + di) *
           (cplx{static_cast<double>(j) - static_cast<double>(k), 0} + di) *
           (p.c - 1.0 + di) / (d1 * d2 * (di + 1.0));
      f3 += t;
    }
    const std::size_t kj = k - j;
    sum += pj * pochhammer(ca, kj) *
           pochhammer(p.b - p.a + 1.0 + static_cast<double>(j), kj) /
           factorial(kj) * f3 * bpow;
    const double dj = static_cast<double>(j);
    pj *= (ca + dj) / (dj + 1.0);
    bpow *= beta;
  }
  return sum;
}

TruncatedValue expand_joint_beta(const Phi1Params& p, cplx x, cplx y,
                                 std::size_t order, double w,
                                 const JointBetaOptions& opts) {
  if (is_int(p.a - p.b))
    throw domain_error("expand_joint_beta: requires a-b off Z");
  if (is_int(p.b)) throw domain_error("expand_joint_beta: requires b off Z");
  if (is_nonpos_int(p.c - p.b))
    throw pole_error("expand_joint_beta: c-b in Z_{<=0}");
  if (on_cut_from_one(x))
    throw domain_error("expand_joint_beta: x on the cut [1, inf)");
  const cplx beta = -y / x;
  const double bmod = std::abs(beta);
  if (bmod < opts.beta_min || bmod > opts.beta_max)
    throw domain_error("expand_joint_beta: beta = -y/x outside the annulus");
  require_exp_safe(y);

  const cplx zeta = y + beta;  // (x-1) y / x
  const bool single_family =
      std::abs(zeta.imag()) <= 1e-9 * std::max(1.0, std::abs(zeta.real())) &&
      zeta.real() > 0.0;

  // e^y-scaled family, graded in (1-x)^{-k}
  const cplx pref3 = gamma_ratio({p.c}, {p.a}) * std::pow(beta, p.a - p.c) *
                     std::pow(1.0 - x, p.a - p.b - p.c) * std::exp(y);
  std::vector<cplx> terms3(order + 1);
  cplx xm{1, 0};
  for (std::size_t k = 0; k <= order; ++k) {
    terms3[k] = pref3 * coeff_a_k(k, p, beta) * xm;
    xm /= 1.0 - x;
  }
  TruncatedValue out = make_truncated(terms3);
  if (single_family) return out;

  // three-family form
  if (is_int(p.a))
    throw domain_error(
        "expand_joint_beta: three-family form requires a off Z");
  {
    const cplx d = zeta - (p.b - p.a);
    if (std::abs(d.imag()) < opts.exclusion_radius &&
        std::abs(d.real() - std::round(d.real())) < opts.exclusion_radius)
      throw domain_error(
          "expand_joint_beta: (x-1)y/x inside the exclusion zone b-a+Z");
  }
  double weff = w;
  if (weff <= 0.0)
    weff = 1.5 + std::max((p.a - p.b).real(), (1.0 - p.b).real());
  weff =
      std::max(weff, 1.05 + std::max((p.a - p.b).real(), (1.0 - p.b).real()));
  for (int tries = 0; tries < 4; ++tries) {
    const double f1 = weff - (p.a - p.b).real();
    const double f2 = weff + p.b.real() - 1.0;
    auto frac_ok = [](double v) {
      double f = v - std::floor(v);
      return f > 0.05 && f < 1.0;
    };
    if (frac_ok(f1) && frac_ok(f2)) break;
    weff += 0.25;
  }
  const long M = std::max<long>(
      1, static_cast<long>(std::floor(weff + (p.b - p.a).real())));

  const cplx pref1 = gamma_ratio({p.c, p.b - p.a}, {p.b, p.c - p.a}) *
                     std::exp(-beta) * std::pow(1.0 - x, -p.a);
  const cplx pref2 = gamma_ratio({p.c, p.a - p.b}, {p.a, p.c - p.a}) *
                     std::pow(-beta, p.b - p.a) * std::exp(-beta) *
                     std::pow(1.0 - x, -p.a);
  cplx a1{0, 0}, a2{0, 0};
  cplx c1{1, 0}, c2{1, 0}, xm1{1, 0}, bneg{1, 0};
  double kfact = 1.0;
  for (long k = 0; k <= M; ++k) {
    const double dk = static_cast<double>(k);
    SeriesResult f1 =
        pfq({1.0 - p.b, p.c - p.b + dk}, {p.c - p.b, p.a - p.b + 1.0 + dk},
            beta, 1e-15, 100000);
    SeriesResult f2 =
        pfq({p.c - p.a, 1.0 - p.a - dk}, {p.c - p.a - dk, p.b - p.a + 1.0 - dk},
            beta, 1e-15, 100000);
    a1 += c1 / kfact * f1.value * xm1;
    a2 += c2 / kfact * f2.value * bneg * xm1;
    c1 *= (p.a + dk) * (p.c - p.b + dk) / (p.a - p.b + 1.0 + dk);
    c2 *= (p.a - p.b + dk) * (p.a - p.c + 1.0 + dk);
    kfact *= dk + 1.0;
    xm1 /= 1.0 - x;
    bneg /= -beta;
  }
  out.value += pref1 * a1 + pref2 * a2;
  return out;
}

cplx joint_lambda_coeff_a1(std::size_t k, const Phi1Params& p, cplx lambda) {
  cplx sum{0, 0};
  cplx pn{1, 0};  // (b)_n (-lambda)^n / n!
  for (std::size_t n = 0; n <= k; ++n) {
    const std::size_t kn = k - n;
    sum += pn * pochhammer(p.c - p.a, kn) *
           pochhammer(p.b - p.a + 1.0 + static_cast<double>(n), kn) /
           factorial(kn);
    pn *=
        (p.b + static_cast<double>(n)) * (-lambda) / static_cast<double>(n + 1);
  }
  return sum;
}

cplx joint_lambda_coeff_a2(std::size_t k, const Phi1Params& p, cplx lambda) {
  return pochhammer(p.a, k) * pochhammer(p.a - p.c + 1.0, k) / factorial(k) *
         kummer_u(p.a + static_cast<double>(k),
                  p.a - p.b + static_cast<double>(k) + 1.0, lambda);
}

std::vector<cplx> expand_joint_lambda_terms(const Phi1Params& p, double x,
                                            cplx lambda, int sign_y,
                                            std::size_t order) {
  if (!(p.c.real() > p.a.real() && p.a.real() > 0.0))
    throw domain_error("expand_joint_lambda: requires Re(c) > Re(a) > 0");
  if (!(x > 0.0)) throw domain_error("expand_joint_lambda: requires x > 0");
  if (!in_sector(lambda, kSectorDelta))
    throw domain_error(
        "expand_joint_lambda: lambda outside |arg| <= pi/2 - delta");
  std::vector<cplx> terms(order + 1);
  if (sign_y > 0) {
    const cplx y = lambda * x;
    require_exp_safe(y);
    const cplx pref =
        gamma_ratio({p.c}, {p.a}) * std::pow(cplx{x, 0}, -p.b) * std::exp(y);
    cplx ypow = std::pow(y, p.a - p.c);
    for (std::size_t k = 0; k <= order; ++k) {
      terms[k] = pref * joint_lambda_coeff_a1(k, p, lambda) * ypow;
      ypow /= y;
    }
  } else {
    const cplx pref = gamma_ratio({p.c}, {p.c - p.a});
    cplx xpow = std::pow(cplx{x, 0}, -p.a);
    for (std::size_t k = 0; k <= order; ++k) {
      terms[k] = pref * joint_lambda_coeff_a2(k, p, lambda) * xpow;
      xpow /= x;
    }
  }
  return terms;
}

TruncatedValue expand_joint_lambda(const Phi1Params& p, double x, cplx lambda,
                                   int sign_y, std::size_t order) {
  return make_truncated(
      expand_joint_lambda_terms(p, x, lambda, sign_y, order));
}

std::vector<cplx> expand_joint_imaginary_terms(const Phi1Params& p, double x,
                                               double lambda,
                                               std::size_t order) {
  if (!(p.c.real() > p.a.real() && p.a.real() > 0.0))
    throw domain_error("expand_joint_imaginary: requires Re(c) > Re(a) > 0");
  if (!(x > 0.0)) throw domain_error("expand_joint_imaginary: requires x > 0");
  if (lambda == 0.0) throw domain_error("expand_joint_imaginary: lambda = 0");
  const cplx il{0.0, lambda};
  const cplx y = il * x;
  const cplx pref1 =
      gamma_ratio({p.c}, {p.a}) * std::pow(cplx{x, 0}, -p.b) * std::exp(y);
  const cplx pref2 = gamma_ratio({p.c}, {p.c - p.a});
  std::vector<cplx> terms(order + 1);
  cplx ypow = std::pow(y, p.a - p.c);
  cplx xpow = std::pow(cplx{x, 0}, -p.a);
  for (std::size_t k = 0; k <= order; ++k) {
    terms[k] = pref1 * joint_lambda_coeff_a1(k, p, il) * ypow +
               pref2 * joint_lambda_coeff_a2(k, p, -il) * xpow;
    ypow /= y;
    xpow /= x;
  }
  return terms;
}

TruncatedValue expand_joint_imaginary(const Phi1Params& p, double x,
                                      double lambda, std::size_t order) {
  return make_truncated(expand_joint_imaginary_terms(p, x, lambda, order));
}

cplx eta_x_coeff_b1(std::size_t k, const Phi1Params& p, cplx eta) {
  cplx sum{0, 0};
  cplx epow{1, 0};
  for (std::size_t n = 0; 2 * n <= k; ++n) {
    const std::size_t m = k - 2 * n;
    sum += pochhammer(p.a, m + n) * pochhammer(p.a - p.c + 1.0, m) /
           pochhammer(p.a - p.b + 1.0, m + n) / (factorial(m) * factorial(n)) *
           epow;
    epow *= eta;
  }
  return sum;
}

cplx eta_x_coeff_b2(std::size_t k, const Phi1Params& p, cplx eta) {
  cplx sum{0, 0};
  cplx epow{1, 0};
  for (std::size_t n = 0; n <= k; ++n) {
    const std::size_t m = k - n;
    const long mn = static_cast<long>(m) - static_cast<long>(n);
    sum += pochhammer(p.b, m) * pochhammer_int(p.b - p.c + 1.0, mn) /
           pochhammer_int(p.b - p.a + 1.0, mn) / (factorial(m) * factorial(n)) *
           epow;
    epow *= eta;
  }
  return sum;
}

cplx eta_y_coeff_c1(std::size_t k, const Phi1Params& p, cplx eta) {
  cplx sum{0, 0};
  cplx epow{1, 0};
  for (std::size_t n = 0; 2 * n <= k; ++n) {
    const std::size_t m = k - 2 * n;
    sum += pochhammer(p.a, m + n) * pochhammer(p.a - p.c + 1.0, m) *
           pochhammer(p.b, n) / (factorial(m) * factorial(n)) * epow;
    epow *= -eta;
  }
  return (k % 2 == 0 ? 1.0 : -1.0) * sum;
}

cplx eta_y_coeff_c2(std::size_t k, const Phi1Params& p, cplx eta) {
  cplx sum{0, 0};
  cplx epow{1, 0};
  for (std::size_t n = 0; n <= k; ++n) {
    const std::size_t m = k - n;
    const long mn = static_cast<long>(m) - static_cast<long>(n);
    sum += pochhammer(p.c - p.a, m) * pochhammer(p.a, n) * pochhammer(p.b, n) *
           pochhammer_int(1.0 - p.a, mn) / (factorial(m) * factorial(n)) *
           epow;
    epow *= -eta;
  }
  return sum;
}

std::vector<cplx> expand_eta_large_x_terms(const Phi1Params& p, cplx x,
                                           cplx eta, std::size_t order) {
  if (is_int(p.a - p.b))
    throw domain_error("expand_eta_large_x: requires a-b off Z");
  if (std::abs(x) <= 1.0)
    throw domain_error("expand_eta_large_x: requires |x| > 1");
  require_off_positive_real(x, "expand_eta_large_x");
  if (static_cast<double>(order) <
      std::max({1.0, std::abs(p.a), std::abs(p.b)}))
    throw domain_error("expand_eta_large_x: order below max{1,|a|,|b|}");
  const cplx pref1 =
      gamma_ratio({p.c, p.b - p.a}, {p.b, p.c - p.a}) * std::pow(-x, -p.a);
  const cplx pref2 =
      gamma_ratio({p.c, p.a - p.b}, {p.a, p.c - p.b}) * std::pow(-x, -p.b);
  std::vector<cplx> terms(order + 1);
  cplx xk{1, 0};
  for (std::size_t k = 0; k <= order; ++k) {
    terms[k] =
        (pref1 * eta_x_coeff_b1(k, p, eta) + pref2 * eta_x_coeff_b2(k, p, eta)) *
        xk;
    xk /= x;
  }
  return terms;
}

TruncatedValue expand_eta_large_x(const Phi1Params& p, cplx x, cplx eta,
                                  std::size_t order) {
  return make_truncated(expand_eta_large_x_terms(p, x, eta, order));
}

std::vector<cplx> expand_eta_large_y_terms(const Phi1Params& p, cplx y,
                                           cplx eta, std::size_t order,
                                           EtaYDirection direction,
                                           double exclusion_radius) {
  if (is_nonpos_int(p.a)) throw pole_error("expand_eta_large_y: a in Z_{<=0}");
  if (is_nonpos_int(p.c - p.a))
    throw pole_error("expand_eta_large_y: c-a in Z_{<=0}");
  if (static_cast<double>(order) <
      std::max({1.0, std::abs(p.a), std::abs(p.a - p.c)}))
    throw domain_error("expand_eta_large_y: order below max{1,|a|,|a-c|}");
  const bool left = direction == EtaYDirection::left;
  if (left) {
    if (y.imag() == 0.0 && y.real() >= 0.0)
      throw domain_error(
          "expand_eta_large_y: left direction needs y off [0, inf)");
    for (long l = 0; l <= static_cast<long>(std::abs(y)) + 3; ++l) {
      if (std::abs(y - (p.a + static_cast<double>(l))) < exclusion_radius)
        throw domain_error(
            "expand_eta_large_y: y inside the exclusion zone around a+l");
    }
  } else {
    if (!(y.real() > 0.0) || std::abs(y.imag()) > y.real())
      throw domain_error(
          "expand_eta_large_y: right direction needs y -> +infinity");
    require_exp_safe(y);
  }
  const cplx g1 = gamma_ratio({p.c}, {p.c - p.a});
  const cplx g2 = gamma_ratio({p.c}, {p.a});
  std::vector<cplx> terms(order + 1);
  const cplx alg = left ? g1 * std::pow(-y, -p.a) : cplx{0, 0};
  const cplx expf = g2 * std::pow(y, p.a - p.c) * std::exp(y);
  cplx yk{1, 0};
  for (std::size_t k = 0; k <= order; ++k) {
    cplx t = expf * eta_y_coeff_c2(k, p, eta) * yk;
    if (left) t += alg * eta_y_coeff_c1(k, p, eta) * yk;
    terms[k] = t;
    yk /= y;
  }
  return terms;
}

TruncatedValue expand_eta_large_y(const Phi1Params& p, cplx y, cplx eta,
                                  std::size_t order, EtaYDirection direction,
                                  double exclusion_radius) {
  return make_truncated(
      expand_eta_large_y_terms(p, y, eta, order, direction, exclusion_radius));
}

cplx phi1_x_to_1_log(cplx a, cplx b, cplx y, cplx rho) {
  if (is_nonpos_int(a) || is_nonpos_int(b))
    throw pole_error("phi1_x_to_1_log: a or b in Z_{<=0}");
  if (is_nonpos_int(a + b))
    throw pole_error("phi1_x_to_1_log: a+b in Z_{<=0}");
  if (rho.imag() == 0.0 && rho.real() <= 0.0)
    throw domain_error("phi1_x_to_1_log: requires |arg rho| < pi");
  const cplx pref = -gamma_ratio({a + b}, {a, b});
  const cplx bracket =
      std::exp(y) *
          (2.0 * kEulerGamma + digamma(a) + digamma(b) + std::log(rho)) +
      y / a * kdf_01_21(a, y, y, 1e-14).value;
  return pref * bracket;
}

SeriesResult kdf_01_21(cplx a, cplx u, cplx v, double tol,
                       std::size_t max_terms) {
  if (is_nonpos_int(a)) throw pole_error("kdf_01_21: a in Z_{<=0}");
  // diagonal K: sum_{n<=K} [a/(a+n)] u^{K-n} v^n / (K+1)!
  SeriesResult out;
  cplx sum{0, 0};
  const std::size_t min_k =
      static_cast<std::size_t>(std::ceil(std::abs(u) + std::abs(v))) + 2;
  std::vector<cplx> upow{cplx{1, 0}}, vpow{cplx{1, 0}};
  double fact = 1.0;  // (K+1)!
  for (std::size_t K = 0;; ++K) {
    if (K > 0) {
      upow.push_back(upow.back() * u);
      vpow.push_back(vpow.back() * v);
    }
    fact *= static_cast<double>(K + 1);
    cplx diag{0, 0};
    for (std::size_t n = 0; n <= K; ++n)
      diag += a / (a + static_cast<double>(n)) * upow[K - n] * vpow[n];
    diag /= fact;
    out.terms_used = K + 1;
    if (K >= min_k && std::abs(diag) <= tol) {
      out.value = sum;
      out.abs_error_estimate = std::abs(diag);
      out.converged = true;
      return out;
    }
    sum += diag;
    if (K + 1 >= max_terms) {
      out.value = sum;
      out.abs_error_estimate = std::abs(diag);
      out.converged = false;
      return out;
    }
  }
}

std::size_t optimal_truncation(const std::vector<double>& term_moduli) {
  if (term_moduli.size() < 2)
    throw domain_error("optimal_truncation: needs at least 2 terms");
  std::size_t best = 0;
  for (std::size_t i = 1; i < term_moduli.size(); ++i) {
    if (term_moduli[i] > term_moduli[i - 1]) break;
    best = i;
  }
  return best;
}

}  // namespace humbert
