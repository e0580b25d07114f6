#include "doctest.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "humbert/evaluator.hpp"

using humbert::cplx;
using humbert::Phi1Params;
using humbert::Regime;

namespace {

const Phi1Params kHalf13{cplx{0.5, 0}, cplx{1, 0}, cplx{1.5, 0}};
const Phi1Params kHalf54{cplx{0.5, 0}, cplx{1, 0}, cplx{1.25, 0}};

double rel_err(cplx got, cplx want) {
  return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

}  // namespace

TEST_CASE("evaluate: convergent core dispatch and value") {
  auto r = humbert::evaluate(kHalf13, cplx{0.3, 0}, cplx{0.2, 0});
  CHECK(r.regime == Regime::series_2f1);
  auto t = humbert::phi1_taylor(kHalf13, cplx{0.3, 0}, cplx{0.2, 0}, 1e-14);
  CHECK(rel_err(r.value, t.value) < 1e-11);
}

TEST_CASE("evaluate: large-x dispatch") {
  auto r = humbert::evaluate(kHalf13, cplx{-40, 0}, cplx{1, 0});
  CHECK(r.regime == Regime::large_x);
  auto s =
      humbert::phi1_series_2f1(kHalf13, cplx{-40, 0}, cplx{1, 0}, 1e-13,
                               200000);
  CHECK(rel_err(r.value, s.value) < 1e-9);
}

TEST_CASE("evaluate: connection dispatch near x = 1") {
  auto r = humbert::evaluate(kHalf54, cplx{0.999, 0}, cplx{0.5, 0});
  CHECK(r.regime == Regime::connection_x1);
  // the logarithmic parameter set falls back to the exact integral
  auto r2 = humbert::evaluate(kHalf13, cplx{0.999, 0}, cplx{0.5, 0});
  CHECK(r2.regime == Regime::euler_integral);
  CHECK(rel_err(r.value, humbert::evaluate(kHalf54, cplx{0.999, 0},
                                           cplx{0.5, 0})
                             .value) == 0.0);
}

TEST_CASE("evaluate: reductions first") {
  Phi1Params neg(cplx{-2, 0}, cplx{1, 0}, cplx{1.5, 0});
  auto r = humbert::evaluate(neg, cplx{0.3, 0}, cplx{0.7, 0});
  CHECK(r.regime == Regime::reduction);
  auto t = humbert::phi1_taylor(neg, cplx{0.3, 0}, cplx{0.7, 0}, 1e-14);
  CHECK(rel_err(r.value, t.value) < 1e-12);

  Phi1Params cm(cplx{2.5, 0}, cplx{1, 0}, cplx{1.5, 0});  // a = c+1
  auto r2 = humbert::evaluate(cm, cplx{0.3, 0}, cplx{0.7, 0});
  CHECK(r2.regime == Regime::reduction);
  auto t2 = humbert::phi1_taylor(cm, cplx{0.3, 0}, cplx{0.7, 0}, 1e-14);
  CHECK(rel_err(r2.value, t2.value) < 1e-12);
}

TEST_CASE("evaluate: large-y and eta dispatch") {
  CHECK(humbert::evaluate(kHalf13, cplx{0.3, 0}, cplx{40, 0}).regime ==
        Regime::large_y_right);
  CHECK(humbert::evaluate(kHalf13, cplx{0.3, 0}, cplx{-40, 0}).regime ==
        Regime::large_y_left);
  CHECK(humbert::evaluate(kHalf13, cplx{0.4, 0}, cplx{0, 60}).regime ==
        Regime::imaginary_y);
  CHECK(humbert::evaluate(kHalf13, cplx{0.03, 0}, cplx{50, 0}).regime ==
        Regime::eta_y);
  Phi1Params q(cplx{0.5, 0}, cplx{0.25, 0}, cplx{1.25, 0});
  CHECK(humbert::evaluate(q, cplx{-60, 0}, cplx{-1.0 / 30, 0}).regime ==
        Regime::eta_x);
}

TEST_CASE("evaluate: joint dispatch") {
  auto r = humbert::evaluate(kHalf13, cplx{-1e4, 0}, cplx{-1e4, 0});
  CHECK(r.regime == Regime::joint_lambda);
  CHECK(humbert::is_finite(r.value));

  Phi1Params q(cplx{0.5, 0}, cplx{0.25, 0}, cplx{1.25, 0});
  auto rb = humbert::evaluate(q, cplx{-30, 10}, cplx{12, 24});
  CHECK(rb.regime == Regime::joint_beta);
  CHECK(humbert::is_finite(rb.value));
}

TEST_CASE("evaluate: gap region falls back to the Euler integral") {
  auto r = humbert::evaluate(kHalf13, cplx{3, 2}, cplx{1, 0});
  CHECK(r.regime == Regime::euler_integral);
  CHECK(humbert::is_finite(r.value));
}

TEST_CASE("evaluate: unsupported domain names the nearest regime") {
  Phi1Params p(cplx{2.6, 0}, cplx{0.51, 0}, cplx{1.5, 0});  // no Euler route
  try {
    humbert::evaluate(p, cplx{3, 0.5}, cplx{1, 0});
    CHECK(false);
  } catch (const humbert::unsupported_domain& e) {
    CHECK(std::string(e.what()).find("nearest") != std::string::npos);
  }
}

TEST_CASE("evaluate: dispatch determinism") {
  for (cplx x : {cplx{0.3, 0}, cplx{-40, 0}, cplx{0.03, 0}}) {
    auto r1 = humbert::evaluate(kHalf13, x, cplx{5, 0});
    auto r2 = humbert::evaluate(kHalf13, x, cplx{5, 0});
    CHECK(r1.regime == r2.regime);
    CHECK(r1.value == r2.value);
  }
}

TEST_CASE("cross_check: overlap deltas and preferred value") {
  auto r = humbert::cross_check(kHalf13, cplx{-20, 0}, cplx{0.5, 0});
  CHECK(r.agreement.size() >= 1);
  bool found = false;
  for (const auto& e : r.agreement) {
    if ((e.first == Regime::series_2f1 && e.second == Regime::large_x) ||
        (e.first == Regime::large_x && e.second == Regime::series_2f1)) {
      CHECK(e.delta <= 1e-7);
      found = true;
    }
  }
  CHECK(found);
  CHECK(r.regime == Regime::series_2f1);  // convergent method preferred

  auto r2 = humbert::cross_check(kHalf13, cplx{0.3, 0}, cplx{0, 0});
  CHECK(r2.max_delta() <= 1e-12);

  auto r3 = humbert::cross_check(kHalf13, cplx{0, 0}, cplx{1.2, 0});
  auto f = humbert::pfq({kHalf13.a}, {kHalf13.c}, cplx{1.2, 0});
  CHECK(rel_err(r3.value, f.value) < 1e-12);
}

TEST_CASE("cross_check: single-method error") {
  // only the large-x expansion applies at this point: the Pfaff radius
  // 200/201 shuts off the series and there is no Euler route
  Phi1Params p(cplx{2.6, 0}, cplx{0.51, 0}, cplx{1.5, 0});
  CHECK_THROWS_AS(humbert::cross_check(p, cplx{-200, 0}, cplx{1, 0}),
                  humbert::unsupported_domain);
}

TEST_CASE("shipped overlap grid: pairwise deltas within 1e-6") {
  std::ifstream f(HUMBERT_SOURCE_DIR "/data/golden_vectors.csv");
  REQUIRE(f.good());
  std::string line;
  std::getline(f, line);  // header
  std::size_t rows = 0;
  double worst_pairwise = 0.0, worst_stored = 0.0;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::vector<double> v;
    std::string tag;
    std::stringstream ss(line);
    std::string field;
    int idx = 0;
    double err_est = 0.0;
    while (std::getline(ss, field, ',')) {
      if (idx == 12)
        tag = field;
      else if (idx == 13)
        err_est = std::stod(field);
      else
        v.push_back(std::stod(field));
      ++idx;
    }
    REQUIRE(v.size() == 12);
    Phi1Params p(cplx{v[0], v[1]}, cplx{v[2], v[3]}, cplx{v[4], v[5]});
    auto rep = humbert::cross_check(p, cplx{v[6], v[7]}, cplx{v[8], v[9]});
    worst_pairwise = std::max(worst_pairwise, rep.max_delta());
    worst_stored =
        std::max(worst_stored,
                 std::abs(rep.value - cplx{v[10], v[11]}) / (2.0 * err_est));
    ++rows;
  }
  CHECK(rows == 50);
  CHECK(worst_pairwise <= 1e-6);
  CHECK(worst_stored <= 1.0);
}

TEST_CASE("thresholds are honored") {
  humbert::Thresholds cfg;
  cfg.x_large = 100.0;  // push the large-x switch out of reach
  auto r = humbert::evaluate(kHalf13, cplx{-40, 0}, cplx{1, 0}, 1e-12, cfg);
  CHECK(r.regime != Regime::large_x);
}
