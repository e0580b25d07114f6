#include "humbert/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>
#include <vector>

namespace humbert {

namespace {

constexpr int kGlOrder = 64;

struct GlTable {
  std::array<double, kGlOrder> node{};
  std::array<double, kGlOrder> weight{};
};

// Nodes and weights of n-point Gauss-Legendre on [-1,1] by Newton iteration
// on the Legendre recurrence.
GlTable make_gl_table() {
  GlTable t;
  const int n = kGlOrder;
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    t.node[i] = -x;
    t.node[n - 1 - i] = x;
    t.weight[i] = 2.0 / ((1.0 - x * x) * pp * pp);
    t.weight[n - 1 - i] = t.weight[i];
  }
  return t;
}

const GlTable& gl_table() {
  static const GlTable t = make_gl_table();  // immutable after init
  return t;
}

cplx gl_panel(const Integrand& f, double a, double b) {
  const GlTable& t = gl_table();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  cplx s{0.0, 0.0};
  for (int i = 0; i < kGlOrder; ++i)
    s += t.weight[i] * f(mid + half * t.node[i]);
  return half * s;
}

}  // namespace

QuadResult gl_adaptive(const Integrand& f, double a, double b, double tol_rel,
                       double tol_abs, int max_depth) {
  struct Panel {
    double a, b;
    cplx coarse;
    int depth;
  };
  constexpr std::size_t kPanelBudget = 40000;
  QuadResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  std::vector<Panel> stack;
  stack.push_back({a, b, gl_panel(f, a, b), 0});
  out.converged = true;
  double scale = std::abs(stack.back().coarse);
  while (!stack.empty()) {
    Panel p = stack.back();
    stack.pop_back();
    const double mid = 0.5 * (p.a + p.b);
    const cplx left = gl_panel(f, p.a, mid);
    const cplx right = gl_panel(f, mid, p.b);
    const cplx fine = left + right;
    const double delta = std::abs(fine - p.coarse);
    scale = std::max(scale, std::abs(out.value + fine));
    const bool accept = delta <= std::max(tol_abs, tol_rel * scale) ||
                        p.depth >= max_depth ||
                        out.panels + 2 * stack.size() > kPanelBudget;
    if (accept) {
      if (delta > std::max(tol_abs, tol_rel * scale)) out.converged = false;
      out.value += fine;
      out.abs_error_estimate += delta;
      out.panels += 2;
    } else {
      stack.push_back({p.a, mid, left, p.depth + 1});
      stack.push_back({mid, p.b, right, p.depth + 1});
    }
  }
  return out;
}

QuadResult gl_adaptive_semi_infinite(const Integrand& f, double t0,
                                     double tol_rel, double cutoff,
                                     std::size_t max_panels) {
  QuadResult out;
  double left = t0;
  double len = 1.0;
  int small_in_a_row = 0;
  for (std::size_t k = 0; k < max_panels; ++k) {
    QuadResult part = gl_adaptive(f, left, left + len, tol_rel);
    out.value += part.value;
    out.abs_error_estimate += part.abs_error_estimate;
    out.panels += part.panels;
    const double acc = std::abs(out.value);
    if (std::abs(part.value) <= cutoff * std::max(acc, 1e-300)) {
      if (++small_in_a_row >= 2) {
        out.converged = true;
        return out;
      }
    } else {
      small_in_a_row = 0;
    }
    left += len;
    if (len < 1e9) len *= 2.0;
  }
  out.converged = false;
  return out;
}

Integrand map_power_endpoint(Integrand f, double len, double mu_re) {
  double p = 1.0;
  if (mu_re < 1.0) p = std::min(1e6, 2.0 / std::max(mu_re, 1e-6));
  return [f = std::move(f), len, p](double u) -> cplx {
    if (u <= 0.0) return {0.0, 0.0};
    const double up = std::pow(u, p);
    // u^p can underflow for large p; the transformed integrand tends to 0
    if (up == 0.0) return {0.0, 0.0};
    return f(len * up) * (len * p * up / u);
  };
}

}  // namespace humbert
