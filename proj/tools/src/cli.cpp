// Copyright 2026 The wt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "wt_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <functional>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wt/branch_points.hpp"
#include "wt/calculus.hpp"
#include "wt/chebyshev.hpp"
#include "wt/complex.hpp"
#include "wt/core.hpp"
#include "wt/quantum.hpp"
#include "wt/series.hpp"
#include "wt_cli/output.hpp"

namespace wt::cli {

namespace {

// Bad flag combinations detected after parsing; reported like parse errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(const std::string& text) {
  double v = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (begin != end && *begin == '+') ++begin;
  const auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end) throw UsageError("not a number: '" + text + "'");
  return v;
}

cplx parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return cplx(parse_real(text), 0.0);
  return cplx(parse_real(text.substr(0, comma)), parse_real(text.substr(comma + 1)));
}

std::vector<cplx> parse_path(const std::string& text) {
  std::vector<cplx> pts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto semi = text.find(';', start);
    const std::string piece =
        text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    if (!piece.empty()) pts.push_back(parse_complex(piece));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return pts;
}

std::string scheme_name(CutScheme s) { return std::string(to_string(s)); }

plane::SheetAtlas atlas_for(int branch) {
  return plane::SheetAtlas::finite_cuts(std::max(plane::SheetAtlas::kDefaultSheets,
                                                 std::abs(branch)));
}

Table value_table(bool with_derivative) {
  Table t;
  t.columns = {"x_re", "x_im", "y_re", "y_im", "branch", "scheme", "residual"};
  if (with_derivative) {
    t.columns.push_back("dy_re");
    t.columns.push_back("dy_im");
  }
  return t;
}

std::vector<Cell> value_row(const BranchedValue& v, bool with_derivative) {
  std::vector<Cell> row = {v.x.real(), v.x.imag(), v.y.real(), v.y.imag(),
                           static_cast<long long>(v.branch.value()), scheme_name(v.scheme),
                           v.residual};
  if (with_derivative) {
    const cplx d = derivative(v.x, v.y);
    row.emplace_back(d.real());
    row.emplace_back(d.imag());
  }
  return row;
}

struct Options {
  std::string format = "csv";
  int precision = kDefaultPrecision;
  std::string output;
  bool precision_set = false;
};

// Evaluation shared by eval and grid.
BranchedValue evaluate(cplx z, int branch, const std::string& scheme, ZeroSide side,
                       const plane::SheetAtlas* atlas) {
  const BranchIndex n(branch);
  if (scheme == "real") {
    if (z.imag() != 0.0) {
      throw Error(ErrorCode::kInvalidArgument, "the real-axis scheme needs a real argument");
    }
    return evaluate_real(z.real(), n, {}, side);
  }
  if (scheme == "finite-cuts") {
    if (atlas != nullptr && atlas->max_sheet() >= n.magnitude()) {
      return plane::eval_complex(z, n, *atlas);
    }
    return plane::eval_complex(z, n, atlas_for(branch));
  }
  throw Error(ErrorCode::kInvalidArgument,
              "scheme '" + scheme + "' is not evaluable; use real or finite-cuts");
}

ZeroSide parse_side(const std::string& side) {
  if (side.empty()) return ZeroSide::kUnspecified;
  if (side == "plus" || side == "+") return ZeroSide::kPlus;
  if (side == "minus" || side == "-") return ZeroSide::kMinus;
  throw UsageError("--side must be plus or minus");
}

// Parses rendered eval output back and checks the defining equation at the
// printed precision.
bool check_round_trip(const std::string& text, const OutputSpec& spec, std::ostream& err) {
  double x_re, x_im, y_re, y_im;
  if (spec.format == Format::kJson) {
    const auto j = nlohmann::json::parse(text);
    const auto& r = j.at(0);
    x_re = r.at("x_re").get<double>();
    x_im = r.at("x_im").get<double>();
    y_re = r.at("y_re").get<double>();
    y_im = r.at("y_im").get<double>();
  } else {
    std::istringstream is(text);
    std::string header, line;
    std::getline(is, header);
    std::getline(is, line);
    std::vector<std::string> fields;
    std::stringstream ls(line);
    for (std::string f; std::getline(ls, f, ',');) fields.push_back(f);
    if (fields.size() < 4) {
      err << "check: malformed output\n";
      return false;
    }
    x_re = parse_real(fields[0]);
    x_im = parse_real(fields[1]);
    y_re = parse_real(fields[2]);
    y_im = parse_real(fields[3]);
  }
  const cplx x(x_re, x_im);
  const cplx y(y_re, y_im);
  const cplx t = std::tan(y);
  const double slope = std::abs(t + y * (1.0 + t * t));
  // Beyond ~16 digits the residual is set by double rounding, not printing.
  const double printed =
      std::max(std::pow(10.0, 1 - spec.precision),
               16.0 * std::numeric_limits<double>::epsilon());
  const double tol = printed * (1.0 + std::abs(x)) + printed * std::abs(y) * slope;
  const double residual = defining_residual(x, y);
  if (!(residual <= tol)) {
    err << "check failed: residual " << residual << " exceeds " << tol << "\n";
    return false;
  }
  return true;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluate the W_t function, y tan y = x, on any branch."};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  auto* precision_opt = app.add_option("--precision", opt.precision,
                                       "Significant digits of printed floats (1-30)")
                            ->check(CLI::Range(kMinPrecision, kMaxPrecision));
  app.add_option("--output", opt.output, "Write to this file instead of standard output");

  std::function<Table()> action;
  bool check_eval = false;

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate one branch value");
  std::string x_text, z_text, scheme = "auto", side_text;
  int branch = 1;
  bool with_derivative = false;
  auto* x_opt = eval->add_option("--x", x_text, "Real argument");
  auto* z_opt = eval->add_option("--z", z_text, "Complex argument re,im");
  x_opt->excludes(z_opt);
  eval->add_option("--branch", branch, "Branch index n != 0");
  eval->add_option("--scheme", scheme, "real or finite-cuts");
  eval->add_option("--side", side_text, "Limit at x = 0: plus or minus");
  eval->add_flag("--derivative", with_derivative, "Append dW/dx");
  eval->add_flag("--check", check_eval, "Re-parse the output and verify y tan y = x");
  eval->callback([&] {
    action = [&] {
      if (x_text.empty() && z_text.empty()) throw UsageError("eval needs --x or --z");
      const cplx z = x_text.empty() ? parse_complex(z_text) : cplx(parse_real(x_text), 0.0);
      std::string s = scheme;
      if (s == "auto") s = x_text.empty() ? "finite-cuts" : "real";
      if (s == "real-axis") s = "real";
      const BranchedValue v = evaluate(z, branch, s, parse_side(side_text), nullptr);
      Table t = value_table(with_derivative);
      t.rows.push_back(value_row(v, with_derivative));
      return t;
    };
  });

  // series
  auto* series_cmd = app.add_subcommand("series", "Series coefficients and radius estimates");
  std::string kind = "small";
  int order = 10;
  int digits = series::kAutoPrecision;
  series_cmd->add_option("--kind", kind, "small or large")
      ->check(CLI::IsMember({"small", "large"}));
  series_cmd->add_option("--order", order, "Highest coefficient index");
  series_cmd->add_option("--digits", digits, "Working precision in decimal digits (0: auto)");
  series_cmd->callback([&] {
    action = [&] {
      const auto table = kind == "small" ? series::small_x_coeffs(order, digits)
                                         : series::large_x_coeffs(order, digits);
      const auto radii = series::radius_estimates(table);
      Table t;
      t.columns = {"k", "coefficient", "auxiliary", "radius_estimate"};
      for (int k = 0; k <= order; ++k) {
        Cell rho;
        for (const auto& r : radii) {
          if (r.k == k) rho = r.rho;
        }
        t.rows.push_back({static_cast<long long>(k), table.coefficient(k),
                          static_cast<double>(table.auxiliary[k]), rho});
      }
      return t;
    };
  });

  // cheb
  auto* cheb_cmd = app.add_subcommand("cheb", "Three-region Chebyshev coefficients");
  double split = 3.5;
  int cheb_order = 15;
  cheb_cmd->add_option("--split", split, "Split point a");
  cheb_cmd->add_option("--order", cheb_order, "Coefficients per region");
  cheb_cmd->callback([&] {
    action = [&] {
      const auto m = cheb::fit(split, cheb_order);
      Table t;
      t.columns = {"k", "alpha", "beta", "gamma"};
      for (int k = 0; k < cheb_order; ++k) {
        t.rows.push_back({static_cast<long long>(k), m.alpha[k], m.beta[k], m.gamma[k]});
      }
      return t;
    };
  });

  // branch-points
  auto* bp_cmd = app.add_subcommand("branch-points", "Branch points x_n and values y_n");
  int count = 6;
  bp_cmd->add_option("--count", count, "Number of branch points");
  bp_cmd->callback([&] {
    action = [&] {
      if (count < 1) throw UsageError("--count must be >= 1");
      Table t;
      t.columns = {"n", "x_re", "x_im", "abs_x", "y_re", "y_im", "u", "v"};
      for (const auto& p : branch::find_branch_points(count)) {
        t.rows.push_back({static_cast<long long>(p.n), p.x.real(), p.x.imag(), std::abs(p.x),
                          p.y.real(), p.y.imag(), p.u, p.v});
      }
      return t;
    };
  });

  // qm
  auto* qm_cmd = app.add_subcommand("qm", "Square well with an energy-dependent delta");
  double width = 1.0;
  double lambda = 1.0;
  int levels = 5;
  int samples = 0;
  qm_cmd->add_option("--width", width, "Well width a");
  qm_cmd->add_option("--lambda", lambda, "Delta strength");
  qm_cmd->add_option("--levels", levels, "Number of states");
  qm_cmd->add_option("--points", samples, "Sample each wavefunction at this many points");
  qm_cmd->callback([&] {
    action = [&] {
      const quantum::WellModel model{width, lambda, 1.0};
      const auto states = quantum::spectrum(model, levels);
      Table t;
      if (samples <= 0) {
        t.columns = {"level", "parity", "k", "energy", "branch", "jump_residual"};
        for (const auto& s : states) {
          const auto psi = quantum::wavefunction(model, s);
          Cell b;
          if (s.branch) b = static_cast<long long>(s.branch->value());
          t.rows.push_back({static_cast<long long>(s.level),
                            std::string(s.parity == quantum::Parity::kEven ? "even" : "odd"),
                            s.k, s.energy, b, quantum::jump_residual(model, psi)});
        }
        return t;
      }
      if (samples < 2) throw UsageError("--points must be >= 2");
      t.columns = {"level", "xi", "psi"};
      for (const auto& s : states) {
        const auto psi = quantum::wavefunction(model, s);
        for (int j = 0; j < samples; ++j) {
          const double xi = width * j / (samples - 1);
          t.rows.push_back({static_cast<long long>(s.level), xi, psi(xi)});
        }
      }
      return t;
    };
  });

  // integrals
  auto* int_cmd = app.add_subcommand("integrals", "Integral identities of the principal branch");
  double cutoff = 100.0;
  int_cmd->add_option("--cutoff", cutoff, "Split point X of the ln sin W integral");
  int_cmd->callback([&] {
    action = [&] {
      calculus::QuadratureConfig cfg;
      cfg.tail_cutoff = cutoff;
      Table t;
      t.columns = {"identity", "value", "reference", "residual"};
      const double lnsin = calculus::definite_lnsin(cfg);
      const double lnsin_ref = -kPi * kPi / 8.0;
      const double cat = calculus::definite_catalan(cfg);
      const double cat_ref = calculus::catalan_closed_form();
      t.rows.push_back({std::string("lnsin_0_inf"), lnsin, lnsin_ref, std::abs(lnsin - lnsin_ref)});
      t.rows.push_back({std::string("w_0_pi4"), cat, cat_ref, std::abs(cat - cat_ref)});
      t.rows.push_back({std::string("indefinite_log_0.5_2"), Cell{}, Cell{},
                        calculus::check_indefinite_log(0.5, 2.0, cfg)});
      t.rows.push_back({std::string("indefinite_logsin_0.5_2"), Cell{}, Cell{},
                        calculus::check_indefinite_logsin(0.5, 2.0, cfg)});
      return t;
    };
  });

  // dispersion
  auto* disp_cmd = app.add_subcommand("dispersion", "Principal sheet from its cut discontinuities");
  std::vector<std::string> at;
  int panels = 4;
  disp_cmd->add_option("--at", at, "Evaluation point re,im (repeatable)")->required();
  disp_cmd->add_option("--panels", panels, "Gauss-Kronrod panels per cut");
  disp_cmd->callback([&] {
    action = [&] {
      const auto atlas = plane::SheetAtlas::finite_cuts();
      plane::QuadratureConfig qc;
      qc.panels = panels;
      const plane::Dispersion disp(atlas, qc);
      Table t;
      t.columns = {"z_re", "z_im", "dispersion_re", "dispersion_im", "direct_re", "direct_im",
                   "difference"};
      for (const auto& s : at) {
        const cplx z = parse_complex(s);
        const cplx d = disp(z);
        const cplx w = plane::eval_complex(z, BranchIndex(1), atlas).y;
        t.rows.push_back({z.real(), z.imag(), d.real(), d.imag(), w.real(), w.imag(),
                          std::abs(d - w)});
      }
      return t;
    };
  });

  // grid
  auto* grid_cmd = app.add_subcommand("grid", "Sample branches on a line for plotting");
  std::string range = "-10,10";
  int points = 101;
  std::vector<int> branches = {1};
  double im_part = 0.0;
  std::string grid_scheme = "auto";
  int jobs = 1;
  grid_cmd->add_option("--range", range, "lo,hi of the real part");
  grid_cmd->add_option("--points", points, "Number of samples");
  grid_cmd->add_option("--branch", branches, "Branch indices (repeatable)");
  grid_cmd->add_option("--im", im_part, "Fixed imaginary part (finite-cuts scheme)");
  grid_cmd->add_option("--scheme", grid_scheme, "real or finite-cuts");
  grid_cmd->add_option("--jobs", jobs, "Worker threads");
  grid_cmd->callback([&] {
    action = [&] {
      const cplx r = parse_complex(range);
      if (points < 2) throw UsageError("--points must be >= 2");
      if (jobs < 1) throw UsageError("--jobs must be >= 1");
      std::string s = grid_scheme;
      if (s == "auto") s = im_part == 0.0 ? "real" : "finite-cuts";
      int widest = 1;
      for (int b : branches) widest = std::max(widest, std::abs(b));
      const auto atlas = atlas_for(widest);

      struct Task {
        cplx z;
        int branch;
      };
      std::vector<Task> tasks;
      for (int b : branches) {
        for (int j = 0; j < points; ++j) {
          const double x = r.real() + (r.imag() - r.real()) * j / (points - 1);
          tasks.push_back({cplx(x, im_part), b});
        }
      }
      // Sharded by index; results are stored in input order.
      std::vector<std::optional<BranchedValue>> values(tasks.size());
      std::vector<std::string> failures(tasks.size());
      auto work = [&](int worker) {
        for (std::size_t i = worker; i < tasks.size(); i += jobs) {
          try {
            values[i] = evaluate(tasks[i].z, tasks[i].branch, s, ZeroSide::kPlus, &atlas);
          } catch (const Error& e) {
            failures[i] = e.what();
          }
        }
      };
      std::vector<std::thread> pool;
      for (int w = 1; w < jobs; ++w) pool.emplace_back(work, w);
      work(0);
      for (auto& th : pool) th.join();

      Table t = value_table(false);
      t.columns.push_back("status");
      for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (values[i]) {
          auto row = value_row(*values[i], false);
          row.emplace_back(std::string("ok"));
          t.rows.push_back(std::move(row));
        } else {
          const std::string& msg = failures[i];
          t.rows.push_back({tasks[i].z.real(), tasks[i].z.imag(), Cell{}, Cell{},
                            static_cast<long long>(tasks[i].branch), s, Cell{},
                            msg.substr(0, msg.find(':'))});
        }
      }
      return t;
    };
  });

  // trace
  auto* trace_cmd = app.add_subcommand("trace", "Continue a value along a polygonal path");
  std::string path_text;
  int sheet = 1;
  trace_cmd->add_option("--path", path_text, "Waypoints re,im;re,im;...")->required();
  trace_cmd->add_option("--sheet", sheet, "Sheet of the first waypoint");
  trace_cmd->callback([&] {
    action = [&] {
      plane::ContinuationPath path;
      path.waypoints = parse_path(path_text);
      if (path.waypoints.size() < 2) throw UsageError("--path needs at least two points");
      const auto atlas = atlas_for(sheet);
      const auto trace = plane::trace_path(path, BranchIndex(sheet), atlas);
      Table t;
      t.columns = {"x_re", "x_im", "y_re", "y_im", "sheet", "residual"};
      for (const auto& p : trace) {
        t.rows.push_back({p.x.real(), p.x.imag(), p.y.real(), p.y.imag(),
                          static_cast<long long>(p.sheet.value()), defining_residual(p.x, p.y)});
      }
      return t;
    };
  });

  try {
    opt.precision = default_precision();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitDomain;
  }
  (void)precision_opt;

  const OutputSpec spec{opt.format == "json" ? Format::kJson : Format::kCsv, opt.precision,
                        opt.output};
  try {
    const Table table = action();
    const std::string text = render(table, spec);
    if (check_eval && !check_round_trip(text, spec, err)) return kExitInternal;
    if (spec.destination.empty()) {
      out << text;
    } else {
      std::ofstream file(spec.destination, std::ios::binary);
      file << text;
      if (!file) {
        err << "error: cannot write " << spec.destination << "\n";
        return kExitInternal;
      }
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_domain_error(e.code()) ? kExitDomain : kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace wt::cli
