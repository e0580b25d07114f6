#include "cli_engine.hpp"

#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "humbert/applications.hpp"
#include "humbert/evaluator.hpp"
#include "humbert/saran_fm.hpp"

namespace humbert_cli {

using humbert::cplx;
using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

cplx parse_complex(const std::string& text) {
  std::size_t pos = 0;
  const std::string s = text;
  double re = 0.0, im = 0.0;
  re = std::stod(s, &pos);
  if (pos < s.size()) {
    if (s[pos] != ',')
      throw std::invalid_argument("malformed complex value: " + text);
    std::size_t pos2 = 0;
    im = std::stod(s.substr(pos + 1), &pos2);
    if (pos + 1 + pos2 != s.size())
      throw std::invalid_argument("malformed complex value: " + text);
  }
  return {re, im};
}

namespace {

humbert::Thresholds load_thresholds_from_env(std::ostream& err) {
  humbert::Thresholds cfg;
  const char* path = std::getenv("HUMBERT_THRESHOLDS");
  if (!path) return cfg;
  std::ifstream in(path);
  if (!in) {
    err << "warning: HUMBERT_THRESHOLDS file not readable: " << path << "\n";
    return cfg;
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = line.substr(0, eq);
    const double val = std::atof(line.c_str() + eq + 1);
    if (key == "x_small") cfg.x_small = val;
    else if (key == "y_moderate") cfg.y_moderate = val;
    else if (key == "x_large") cfg.x_large = val;
    else if (key == "y_large") cfg.y_large = val;
    else if (key == "near_one") cfg.near_one = val;
    else if (key == "eta_max") cfg.eta_max = val;
    else if (key == "max_order") cfg.max_order = static_cast<std::size_t>(val);
    else err << "warning: unknown threshold key: " << key << "\n";
  }
  return cfg;
}

void add_threshold_flags(CLI::App* cmd, humbert::Thresholds* cfg) {
  cmd->add_option("--thr-x-small", cfg->x_small, "series |x| threshold");
  cmd->add_option("--thr-y-moderate", cfg->y_moderate,
                  "series |y| threshold");
  cmd->add_option("--thr-x-large", cfg->x_large, "large-x threshold");
  cmd->add_option("--thr-y-large", cfg->y_large, "large-y threshold");
  cmd->add_option("--thr-near-one", cfg->near_one, "|1-x| threshold");
  cmd->add_option("--thr-eta-max", cfg->eta_max, "|x*y| cap for eta regimes");
  cmd->add_option("--thr-max-order", cfg->max_order,
                  "asymptotic order cap");
}

// evaluation with a caller-forced regime
humbert::EvalReport eval_forced(const humbert::Phi1Params& p, cplx x, cplx y,
                                const std::string& regime, std::size_t order,
                                double tol) {
  using humbert::Regime;
  auto from_series = [](const humbert::SeriesResult& s, Regime r) {
    humbert::EvalReport rep;
    rep.value = s.value;
    rep.regime = r;
    rep.abs_error_estimate = s.abs_error_estimate;
    return rep;
  };
  auto from_trunc = [](const humbert::TruncatedValue& t, Regime r) {
    humbert::EvalReport rep;
    rep.value = t.value;
    rep.regime = r;
    rep.abs_error_estimate = t.last_term_modulus;
    return rep;
  };
  if (regime == "taylor")
    return from_series(humbert::phi1_taylor(p, x, y, tol), Regime::taylor);
  if (regime == "series-2f1")
    return from_series(humbert::phi1_series_2f1(p, x, y, tol),
                       Regime::series_2f1);
  if (regime == "euler-integral")
    return from_series(humbert::phi1_euler_integral(p, x, y),
                       Regime::euler_integral);
  if (regime == "connection-x1")
    return from_series(humbert::phi1_near_x1_connection(p, x, y, tol),
                       Regime::connection_x1);
  if (regime == "large-x")
    return from_trunc(humbert::expand_large_x(p, x, y, order),
                      Regime::large_x);
  if (regime == "large-y-left")
    return from_trunc(humbert::expand_large_y_left(p, x, y, order),
                      Regime::large_y_left);
  if (regime == "large-y-right")
    return from_trunc(humbert::expand_large_y_right(p, x, y, order),
                      Regime::large_y_right);
  if (regime == "imaginary-y")
    return from_trunc(humbert::expand_shifted_imaginary_y(
                          p, x, cplx{y.real(), 0}, y.imag(), order),
                      Regime::imaginary_y);
  if (regime == "joint-beta")
    return from_trunc(humbert::expand_joint_beta(p, x, y, order),
                      Regime::joint_beta);
  if (regime == "joint-lambda") {
    if (!(x.imag() == 0.0 && x.real() < 0.0))
      throw humbert::domain_error("joint-lambda: needs x real negative");
    const double X = -x.real();
    const int sign = y.real() >= 0.0 ? +1 : -1;
    const cplx lambda = (sign > 0 ? y : -y) / X;
    return from_trunc(
        humbert::expand_joint_lambda(p, X, lambda, sign, order),
        Regime::joint_lambda);
  }
  if (regime == "eta-x")
    return from_trunc(humbert::expand_eta_large_x(p, x, x * y, order),
                      Regime::eta_x);
  if (regime == "eta-y")
    return from_trunc(
        humbert::expand_eta_large_y(p, y, x * y, order,
                                    y.real() > 0.0
                                        ? humbert::EtaYDirection::right
                                        : humbert::EtaYDirection::left),
        Regime::eta_y);
  if (regime == "x-to-1-log") {
    humbert::EvalReport rep;
    rep.value = humbert::phi1_x_to_1_log(p.a, p.b, y, 1.0 - x);
    rep.regime = Regime::x_to_1_log;
    rep.abs_error_estimate = std::abs(1.0 - x);
    return rep;
  }
  if (regime == "reduction") {
    if (humbert::is_nonpos_int(p.a)) {
      const auto m = static_cast<std::size_t>(std::llround(-p.a.real()));
      return from_series(humbert::phi1_reduction_negm(m, p.b, p.c, x, y, tol),
                         Regime::reduction);
    }
    const cplx ac = p.a - p.c;
    if (humbert::is_int(ac) && ac.real() > -0.5) {
      const auto m = static_cast<std::size_t>(std::llround(ac.real()));
      return from_series(humbert::phi1_reduction_cm(m, p.b, p.c, x, y, tol),
                         Regime::reduction);
    }
    throw humbert::domain_error("reduction: a not in Z_{<=0}, a-c not in Z_{>=0}");
  }
  throw CLI::ValidationError("--regime", "unknown regime: " + regime);
}

struct Sink {
  std::ostream* stream;
  std::ofstream file;
  explicit Sink(std::ostream& fallback, const std::string& path)
      : stream(&fallback) {
    if (!path.empty()) {
      file.open(path);
      if (!file)
        throw humbert::domain_error("cannot open output path: " + path);
      stream = &file;
    }
  }
  std::ostream& get() { return *stream; }
};

void print_report(std::ostream& os, const humbert::EvalReport& rep,
                  const std::string& format) {
  if (format == "json") {
    json j;
    j["value_re"] = rep.value.real();
    j["value_im"] = rep.value.imag();
    j["regime"] = humbert::regime_name(rep.regime);
    j["err_est"] = rep.abs_error_estimate;
    if (!rep.agreement.empty()) {
      j["max_delta"] = rep.max_delta();
      json arr = json::array();
      for (const auto& e : rep.agreement)
        arr.push_back({{"first", humbert::regime_name(e.first)},
                       {"second", humbert::regime_name(e.second)},
                       {"delta", e.delta}});
      j["agreement"] = arr;
    }
    os << j.dump() << "\n";
  } else if (format == "csv") {
    os << "value_re,value_im,regime,err_est\n"
       << format_double(rep.value.real()) << ','
       << format_double(rep.value.imag()) << ','
       << humbert::regime_name(rep.regime) << ','
       << format_double(rep.abs_error_estimate) << "\n";
  } else {
    os << "value  = " << format_double(rep.value.real()) << " + "
       << format_double(rep.value.imag()) << "i\n"
       << "regime = " << humbert::regime_name(rep.regime) << "\n"
       << "err    = " << format_double(rep.abs_error_estimate) << "\n";
    if (!rep.agreement.empty()) {
      os << "max_delta = " << format_double(rep.max_delta()) << "\n";
      for (const auto& e : rep.agreement)
        os << "  " << humbert::regime_name(e.first) << " vs "
           << humbert::regime_name(e.second) << ": "
           << format_double(e.delta) << "\n";
    }
  }
}

constexpr const char* kVectorHeader =
    "a_re,a_im,b_re,b_im,c_re,c_im,x_re,x_im,y_re,y_im,value_re,value_im,"
    "method,err_est";

struct VectorRow {
  cplx a, b, c, x, y, value;
  std::string method;
  double err_est;
};

std::vector<VectorRow> default_vector_grid(const humbert::Thresholds& cfg) {
  const cplx params[2][3] = {
      {cplx{0.5, 0}, cplx{1, 0}, cplx{1.5, 0}},
      {cplx{0.5, 0}, cplx{0.25, 0}, cplx{1.25, 0}},
  };
  const double xs[5] = {-0.6, -0.3, 0.0, 0.25, 0.5};
  const double ys[5] = {-2.0, -0.5, 0.3, 1.5, 3.0};
  std::vector<VectorRow> rows;
  rows.reserve(50);
  for (const auto& prm : params) {
    humbert::Phi1Params p(prm[0], prm[1], prm[2]);
    for (double xv : xs)
      for (double yv : ys) {
        humbert::EvalReport rep =
            humbert::cross_check(p, cplx{xv, 0}, cplx{yv, 0}, 1e-12, cfg);
        VectorRow row;
        row.a = prm[0];
        row.b = prm[1];
        row.c = prm[2];
        row.x = cplx{xv, 0};
        row.y = cplx{yv, 0};
        row.value = rep.value;
        row.method = humbert::regime_name(rep.regime);
        row.err_est = std::max(rep.abs_error_estimate,
                               1e-14 * (1.0 + std::abs(rep.value)));
        rows.push_back(row);
      }
  }
  return rows;
}

void write_vector_rows(std::ostream& os, const std::vector<VectorRow>& rows) {
  os << kVectorHeader << "\n";
  for (const auto& r : rows) {
    os << format_double(r.a.real()) << ',' << format_double(r.a.imag()) << ','
       << format_double(r.b.real()) << ',' << format_double(r.b.imag()) << ','
       << format_double(r.c.real()) << ',' << format_double(r.c.imag()) << ','
       << format_double(r.x.real()) << ',' << format_double(r.x.imag()) << ','
       << format_double(r.y.real()) << ',' << format_double(r.y.imag()) << ','
       << format_double(r.value.real()) << ','
       << format_double(r.value.imag()) << ',' << r.method << ','
       << format_double(r.err_est) << "\n";
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Evaluator for the Humbert function Phi1 and its applications"};
  app.require_subcommand(1);

  humbert::Thresholds cfg = load_thresholds_from_env(err);

  // shared option storage
  std::string a_s = "0.5", b_s = "1", c_s = "1.5", x_s = "0", y_s = "0";
  double tol = 1e-12;
  std::size_t order = 8;
  std::string regime, format = "json", out_path, from_file;

  auto* eval = app.add_subcommand("eval", "evaluate Phi1[a,b;c;x,y]");
  eval->add_option("--a", a_s, "parameter a (re[,im])");
  eval->add_option("--b", b_s, "parameter b (re[,im])");
  eval->add_option("--c", c_s, "parameter c (re[,im])");
  eval->add_option("--x", x_s, "first argument (re[,im])")->required();
  eval->add_option("--y", y_s, "second argument (re[,im])")->required();
  eval->add_option("--tol", tol, "tolerance");
  eval->add_option("--order", order, "asymptotic order for forced regimes");
  eval->add_option("--regime", regime, "force a specific regime");
  eval->add_option("--format", format, "json|csv|text");
  eval->add_option("--out", out_path, "output path (default stdout)");
  add_threshold_flags(eval, &cfg);
  eval->callback([&] {
    humbert::Phi1Params p(parse_complex(a_s), parse_complex(b_s),
                          parse_complex(c_s));
    const cplx x = parse_complex(x_s), y = parse_complex(y_s);
    humbert::EvalReport rep = regime.empty()
                                  ? humbert::evaluate(p, x, y, tol, cfg)
                                  : eval_forced(p, x, y, regime, order, tol);
    Sink sink(out, out_path);
    print_report(sink.get(), rep, format);
  });

  auto* check = app.add_subcommand("check", "cross-check applicable regimes");
  check->add_option("--a", a_s, "parameter a (re[,im])");
  check->add_option("--b", b_s, "parameter b (re[,im])");
  check->add_option("--c", c_s, "parameter c (re[,im])");
  check->add_option("--x", x_s, "first argument");
  check->add_option("--y", y_s, "second argument");
  check->add_option("--tol", tol, "tolerance");
  check->add_option("--format", format, "json|csv|text");
  check->add_option("--out", out_path, "output path");
  check->add_option("--from-file", from_file,
                    "re-verify a golden vector file");
  add_threshold_flags(check, &cfg);
  check->callback([&] {
    Sink sink(out, out_path);
    if (!from_file.empty()) {
      std::ifstream in(from_file);
      if (!in)
        throw humbert::domain_error("cannot read vector file: " + from_file);
      std::string line;
      std::getline(in, line);
      if (line != kVectorHeader)
        throw humbert::domain_error("unexpected vector file header");
      std::size_t rows = 0, failures = 0;
      double max_delta = 0.0;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != 14)
          throw humbert::domain_error("malformed vector row");
        humbert::Phi1Params p({std::stod(f[0]), std::stod(f[1])},
                              {std::stod(f[2]), std::stod(f[3])},
                              {std::stod(f[4]), std::stod(f[5])});
        const cplx x{std::stod(f[6]), std::stod(f[7])};
        const cplx y{std::stod(f[8]), std::stod(f[9])};
        const cplx stored{std::stod(f[10]), std::stod(f[11])};
        const double stored_err = std::stod(f[13]);
        auto rep = humbert::cross_check(p, x, y, tol, cfg);
        const double delta = std::abs(rep.value - stored);
        max_delta = std::max(max_delta, delta);
        ++rows;
        if (delta > 2.0 * stored_err) ++failures;
      }
      json j;
      j["rows"] = rows;
      j["max_delta"] = max_delta;
      j["within_tolerance"] = failures == 0;
      sink.get() << j.dump() << "\n";
      if (failures > 0)
        throw humbert::domain_error("vector verification failed");
      return;
    }
    humbert::Phi1Params p(parse_complex(a_s), parse_complex(b_s),
                          parse_complex(c_s));
    auto rep = humbert::cross_check(p, parse_complex(x_s), parse_complex(y_s),
                                    tol, cfg);
    print_report(sink.get(), rep, format);
  });

  // table over a real rectangle in (x, y)
  double x0 = -0.5, x1 = 0.5, y0 = -1.0, y1 = 1.0;
  std::size_t nx = 5, ny = 5;
  auto* table = app.add_subcommand("table", "tabulate over a real grid");
  table->add_option("--a", a_s, "parameter a");
  table->add_option("--b", b_s, "parameter b");
  table->add_option("--c", c_s, "parameter c");
  table->add_option("--x0", x0, "x start");
  table->add_option("--x1", x1, "x end");
  table->add_option("--nx", nx, "x steps");
  table->add_option("--y0", y0, "y start");
  table->add_option("--y1", y1, "y end");
  table->add_option("--ny", ny, "y steps");
  table->add_option("--tol", tol, "tolerance");
  table->add_option("--format", format, "json|csv|text");
  table->add_option("--out", out_path, "output path");
  add_threshold_flags(table, &cfg);
  table->callback([&] {
    humbert::Phi1Params p(parse_complex(a_s), parse_complex(b_s),
                          parse_complex(c_s));
    if (nx < 1 || ny < 1) throw CLI::ValidationError("--nx/--ny", "need >= 1");
    struct Cell {
      double x, y;
      humbert::EvalReport rep;
    };
    std::vector<Cell> cells(nx * ny);
    // data-parallel map over pure evaluator calls; assembly stays ordered
    const std::size_t workers = std::min<std::size_t>(4, nx * ny);
    std::vector<std::future<void>> futs;
    for (std::size_t w = 0; w < workers; ++w) {
      futs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < cells.size(); i += workers) {
          const std::size_t ix = i / ny, iy = i % ny;
          const double xv =
              nx == 1 ? x0 : x0 + (x1 - x0) * ix / double(nx - 1);
          const double yv =
              ny == 1 ? y0 : y0 + (y1 - y0) * iy / double(ny - 1);
          cells[i] = {xv, yv,
                      humbert::evaluate(p, cplx{xv, 0}, cplx{yv, 0}, tol,
                                        cfg)};
        }
      }));
    }
    for (auto& f : futs) f.get();
    Sink sink(out, out_path);
    if (format == "json") {
      json rows = json::array();
      for (const auto& cl : cells)
        rows.push_back({{"x", cl.x},
                        {"y", cl.y},
                        {"value_re", cl.rep.value.real()},
                        {"value_im", cl.rep.value.imag()},
                        {"regime", humbert::regime_name(cl.rep.regime)},
                        {"err_est", cl.rep.abs_error_estimate}});
      sink.get() << rows.dump() << "\n";
    } else {
      sink.get() << "x,y,value_re,value_im,regime,err_est\n";
      for (const auto& cl : cells)
        sink.get() << format_double(cl.x) << ',' << format_double(cl.y) << ','
                   << format_double(cl.rep.value.real()) << ','
                   << format_double(cl.rep.value.imag()) << ','
                   << humbert::regime_name(cl.rep.regime) << ','
                   << format_double(cl.rep.abs_error_estimate) << "\n";
    }
  });

  double s = 1.0, tau = 1.0, mu = 0.0;
  std::string glauber_format = "text";
  auto* glauber = app.add_subcommand("glauber",
                                     "two-time correlation C0(s+tau, s)");
  glauber->add_option("--s", s, "waiting time")->required();
  glauber->add_option("--tau", tau, "time difference")->required();
  glauber->add_option("--mu", mu, "inverse correlation length");
  glauber->add_option("--format", glauber_format, "json|text");
  glauber->add_option("--out", out_path, "output path");
  glauber->callback([&] {
    const double v = humbert::glauber_c0(humbert::GlauberPoint(s, tau, mu));
    Sink sink(out, out_path);
    if (glauber_format == "json") {
      json j;
      j["value"] = v;
      sink.get() << j.dump() << "\n";
    } else {
      sink.get() << format_double(v) << "\n";
    }
  });

  std::string al_s = "0.5", be_s = "0.5", ga_s = "1", la_s = "0",
              rho_s = "1", side = "plus";
  double px = 0.5, b_end = 1.0;
  auto* prab = app.add_subcommand("prabhakar",
                                  "fractional-operator power action");
  prab->add_option("--alpha", al_s, "alpha (re[,im])");
  prab->add_option("--beta", be_s, "beta (re[,im])");
  prab->add_option("--gamma", ga_s, "gamma (re[,im])");
  prab->add_option("--lambda", la_s, "lambda (re[,im])");
  prab->add_option("--rho", rho_s, "power exponent rho (re[,im])");
  prab->add_option("--x", px, "evaluation point")->required();
  prab->add_option("--side", side, "plus|minus");
  prab->add_option("--b-end", b_end, "interval end");
  prab->add_option("--format", format, "json|text");
  prab->add_option("--out", out_path, "output path");
  prab->callback([&] {
    humbert::PrabhakarParams pp(parse_complex(al_s), parse_complex(be_s),
                                parse_complex(ga_s), parse_complex(la_s),
                                std::max(b_end, px));
    const cplx rho = parse_complex(rho_s);
    const cplx v = side == "minus"
                       ? humbert::prabhakar_minus_power(pp, rho, px)
                       : humbert::prabhakar_plus_power(pp, rho, px);
    Sink sink(out, out_path);
    if (format == "json") {
      json j;
      j["value_re"] = v.real();
      j["value_im"] = v.imag();
      sink.get() << j.dump() << "\n";
    } else {
      sink.get() << format_double(v.real()) << " + "
                 << format_double(v.imag()) << "i\n";
    }
  });

  std::string a1_s = "0.5", a2_s = "0.5", b1_s = "0.25", b2_s = "0.75",
              g1_s = "1.5", g2_s = "1.25", fx_s = "0", fy_s = "0", fz_s = "0";
  bool laplace = false;
  auto* fm = app.add_subcommand("fm", "Saran F_M evaluation");
  fm->add_option("--a1", a1_s, "alpha1");
  fm->add_option("--a2", a2_s, "alpha2");
  fm->add_option("--b1", b1_s, "beta1");
  fm->add_option("--b2", b2_s, "beta2");
  fm->add_option("--g1", g1_s, "gamma1");
  fm->add_option("--g2", g2_s, "gamma2");
  fm->add_option("--x", fx_s, "x")->required();
  fm->add_option("--y", fy_s, "y")->required();
  fm->add_option("--z", fz_s, "z")->required();
  fm->add_flag("--laplace", laplace, "use the Laplace integral");
  fm->add_option("--format", format, "json|text");
  fm->add_option("--out", out_path, "output path");
  fm->callback([&] {
    humbert::FmParams q(parse_complex(a1_s), parse_complex(a2_s),
                        parse_complex(b1_s), parse_complex(b2_s),
                        parse_complex(g1_s), parse_complex(g2_s));
    const cplx x = parse_complex(fx_s), y = parse_complex(fy_s),
               z = parse_complex(fz_s);
    const humbert::SeriesResult r =
        laplace ? humbert::fm_laplace(q, x, y, z)
                : humbert::fm_series(q, x, y, z);
    Sink sink(out, out_path);
    if (format == "json") {
      json j;
      j["value_re"] = r.value.real();
      j["value_im"] = r.value.imag();
      j["err_est"] = r.abs_error_estimate;
      j["converged"] = r.converged;
      sink.get() << j.dump() << "\n";
    } else {
      sink.get() << format_double(r.value.real()) << " + "
                 << format_double(r.value.imag()) << "i\n";
    }
  });

  bool empty_grid = false;
  auto* vectors = app.add_subcommand("vectors", "write golden test vectors");
  vectors->add_option("--out", out_path, "output CSV path")->required();
  vectors->add_flag("--empty", empty_grid, "write a header-only file");
  add_threshold_flags(vectors, &cfg);
  vectors->callback([&] {
    std::ofstream f(out_path);
    if (!f)
      throw humbert::domain_error("cannot open output path: " + out_path);
    if (empty_grid) {
      f << kVectorHeader << "\n";
      out << "wrote 0 rows to " << out_path << "\n";
      return;
    }
    const auto rows = default_vector_grid(cfg);
    write_vector_rows(f, rows);
    out << "wrote " << rows.size() << " rows to " << out_path << "\n";
  });

  // CLI11 wants a mutable argv-style array
  std::vector<const char*> argv;
  argv.push_back("humbert-cli");
  for (const auto& s_arg : args) argv.push_back(s_arg.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const humbert::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace humbert_cli
