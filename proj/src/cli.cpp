#include "pz/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <numbers>
#include <sstream>

#include "pz/acceptance.hpp"
#include "pz/error.hpp"
#include "pz/io.hpp"
#include "pz/kernels.hpp"
#include "pz/parallel.hpp"

namespace pz {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;

struct Common {
  int threads = 0;
  std::string kernel = "auto";
  std::string out_dir = ".";
};

struct DimArgs {
  double b = 0.0;
  double tol = 1e-10;
  int min_n = 7, max_n = 13, order = 20;
  std::string output;
};

struct ZerosArgs {
  double b = 0.0;
  std::string rect;
  int N = 0;
  std::string grading = "reflection";
  double tol = 1e-8;
  double strip_height = 0.0;
  std::string journal;
  bool no_journal = false;
  std::string format = "csv";
  int defect = -1;
  double o2_radius = 0.0;
  std::string output;
};

struct CurvesArgs {
  double window = kPi;
  double step = 1e-3;
  double sigma_min = -1.0;
  std::string output = "curves";
};

struct ApproxArgs {
  double b = 0.0;
  std::string param = "theorem";
  std::string sign = "corrected";
  double window = kPi;
  int grid = 10;
  int N = 20;
  bool zeros = false;
  std::string output;
};

struct CountArgs {
  double b = 0.0;
  std::vector<double> t;
  std::size_t max_words = 10'000'000;
  std::string output;
};

struct TracesArgs {
  double b = 0.0;
  int max_n = 6;
  int N = 0;
  std::string grading = "reflection";
  std::vector<std::string> points;
  std::string output;
};

struct ValidateArgs {
  bool quick = false;
  std::vector<int> only;
  std::string journal_dir = ".";
  std::string json_path;
  std::string inject;
};

std::string default_name(const std::string& command, double b) {
  return command + "-b" + format_double(b);
}

std::string path_in(const Common& c, const std::string& name) {
  return (std::filesystem::path(c.out_dir) / name).string();
}

void check_b(double b) {
  if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("cli::run", "--b must be a positive number");
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

double parse_number(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double x = std::stod(text, &used);
    if (used == text.size()) return x;
  } catch (const std::exception&) {
  }
  throw DomainError("cli::run", "cannot read " + what + " from '" + text + "'");
}

// "s0,s1,t0,t1"; the words delta and δ stand for the dimension.
Rect parse_rect(const std::string& text, const std::function<double()>& delta) {
  const auto parts = split_commas(text);
  if (parts.size() != 4) throw DomainError("cli::run", "--rect needs four comma-separated numbers");
  double v[4];
  for (int i = 0; i < 4; ++i) {
    const std::string& p = parts[i];
    v[i] = p == "delta" || p == "δ" ? delta() : parse_number(p, "--rect");
  }
  const Rect r{v[0], v[1], v[2], v[3]};
  if (!(r.width() > 0.0) || !(r.height() > 0.0)) throw DomainError("cli::run", "--rect must have s0 < s1 and t0 < t1");
  return r;
}

Complex parse_point(const std::string& text) {
  const auto parts = split_commas(text);
  if (parts.size() == 1) return {parse_number(parts[0], "--s"), 0.0};
  if (parts.size() != 2) throw DomainError("cli::run", "--s takes re or re,im");
  return {parse_number(parts[0], "--s"), parse_number(parts[1], "--s")};
}

json rect_config(const Rect& r) { return json::array({r.sigma_min, r.sigma_max, r.t_min, r.t_max}); }

int cmd_dim(const Common& c, const DimArgs& a, std::ostream& out) {
  check_b(a.b);
  DimensionOptions opt;
  opt.min_n = a.min_n;
  opt.max_n = a.max_n;
  opt.order = a.order;
  opt.threads = c.threads;
  const DimensionResult r = hausdorff_dimension(build_pants(a.b), a.tol, opt);
  const json config = {{"b", a.b}, {"tol", a.tol}, {"min_n", a.min_n}, {"max_n", a.max_n}, {"order", a.order}};
  json doc = {{"header", header_json("dim", config)},
              {"delta", r.delta},
              {"method_a", r.method_a},
              {"method_b", r.method_b},
              {"agreement", r.agreement},
              {"n_used", r.n_used}};
  out << doc.dump() << '\n';
  if (!a.output.empty()) write_file(path_in(c, a.output), doc.dump(2) + "\n");
  return kExitOk;
}

int cmd_zeros(const Common& c, const ZerosArgs& a, std::ostream& out) {
  check_b(a.b);
  const Grading grading = parse_grading(a.grading);
  const int order = a.N > 0 ? a.N : default_order(grading);
  if (a.format != "csv" && a.format != "json" && a.format != "both")
    throw DomainError("cli::run", "--format must be csv, json or both");
  const PantsSurface s = build_pants(a.b);
  const ZetaFunction z(s, grading, order, c.threads);
  double delta = std::numeric_limits<double>::quiet_NaN();
  auto get_delta = [&] {
    if (std::isnan(delta)) delta = largest_real_zero(z, 1e-12);
    return delta;
  };
  const Rect rect = a.rect.empty() ? Rect{-0.02, std::log(2.0) / a.b + 0.02, 0.0, kPi * std::exp(a.b)}
                                   : parse_rect(a.rect, get_delta);
  const std::string name = a.output.empty() ? default_name("zeros", a.b) : a.output;
  ZeroSearchOptions opt;
  opt.tol = a.tol;
  opt.strip_height = a.strip_height;
  opt.threads = c.threads;
  if (!a.no_journal) opt.journal = a.journal.empty() ? path_in(c, name + ".journal") : a.journal;
  if (!opt.journal.empty()) {
    const auto parent = std::filesystem::path(opt.journal).parent_path();
    if (!parent.empty()) std::filesystem::create_directories(parent);
  }
  const ZeroSet zs = find_zeros(z, rect, opt);

  const json config = {{"b", a.b},     {"rect", rect_config(rect)}, {"N", order},
                       {"grading", to_string(grading)}, {"tol", a.tol}, {"strip_height", a.strip_height}};
  const std::string header = header_block("zeros", config);
  if (a.format != "json") {
    write_file(path_in(c, name + ".csv"), zeros_csv(zs, a.b, header));
    std::string dat = header + "# columns: rescaled_re rescaled_im (sigma b, t e^-b)\n";
    for (const Complex& x : rescale_zeros(zs, a.b)) dat += format_double(x.real()) + " " + format_double(x.imag()) + "\n";
    write_file(path_in(c, name + "-rescaled.dat"), dat);
  }
  if (a.format != "csv") {
    json doc = zeros_json(zs, a.b);
    doc["header"] = header_json("zeros", config);
    write_file(path_in(c, name + ".json"), doc.dump() + "\n");
  }
  if (a.defect >= 0) {
    CsvTable t({"k", "epsilon", "distance", "matched"});
    for (int k = 0; k <= a.defect; ++k) {
      const PeriodDefect d = almost_period_defect(zs, a.b, k);
      t.add({std::to_string(k), format_double(d.epsilon), format_double(d.distance), std::to_string(d.matched)});
    }
    json dc = config;
    dc["defect"] = a.defect;
    write_file(path_in(c, name + "-defects.csv"), t.render(header_block("zeros", dc)));
  }
  json summary = {{"zeros", zs.zeros.size()},
                  {"total_winding", zs.total_winding()},
                  {"evaluations", zs.evaluations},
                  {"resumed_strips", zs.resumed_strips}};
  if (a.o2_radius > 0.0) {
    const DensityProbe p = o2_probe(zs, get_delta(), a.b, a.o2_radius);
    summary["o2_probe"] = {{"center_re", p.center.real()}, {"center_im", p.center.imag()}, {"radius", p.radius},
                           {"count", p.count},             {"density", p.density},         {"mean_density", p.mean_density}};
  }
  out << summary.dump() << '\n';
  return kExitOk;
}

int cmd_curves(const Common& c, const CurvesArgs& a, std::ostream& out) {
  if (!(a.window > 0.0) || !(a.step > 0.0) || a.step > 0.1)
    throw DomainError("cli::run", "--window must be positive and --step in (0, 0.1]");
  const double ln2 = std::log(2.0);
  const json config = {{"window", a.window}, {"step", a.step}, {"sigma_min", a.sigma_min}};
  const std::string header = header_block("curves", config);
  CsvTable all({"curve", "t", "sigma"});
  std::string dat = header + "# columns: sigma t; one index block per curve C1..C4\n";
  std::size_t total = 0;
  for (int j = 1; j <= 4; ++j) {
    const auto samples = sample_curve(j, -a.window, a.window, a.step, a.sigma_min, ln2);
    CsvTable t({"t", "sigma"});
    dat += "# C" + std::to_string(j) + "\n";
    double prev_t = std::numeric_limits<double>::quiet_NaN();
    for (const auto& p : samples) {
      t.add_numbers({p.t, p.sigma});
      all.add({std::to_string(j), format_double(p.t), format_double(p.sigma)});
      // A jump in t marks a clipped gap: break the polyline there.
      if (!std::isnan(prev_t) && p.t - prev_t > 2.0 * a.step) dat += "\n";
      dat += format_double(p.sigma) + " " + format_double(p.t) + "\n";
      prev_t = p.t;
    }
    dat += "\n\n";
    total += samples.size();
    write_file(path_in(c, a.output + "-C" + std::to_string(j) + ".csv"), t.render(header));
  }
  write_file(path_in(c, a.output + "-union.csv"), all.render(header));
  write_file(path_in(c, a.output + ".dat"), dat);
  out << json{{"samples", total}, {"files", 6}}.dump() << '\n';
  return kExitOk;
}

int cmd_approx(const Common& c, const ApproxArgs& a, std::ostream& out) {
  check_b(a.b);
  if (a.grid < 1) throw DomainError("cli::run", "--grid must be positive");
  const PhaseSign sign = parse_phase_sign(a.sign);
  const Parameterization param = parse_parameterization(a.param);
  const ZetaFunction z(build_pants(a.b), Grading::reflection, a.N, c.threads);
  const double ln2 = std::log(2.0);
  const std::size_t n = static_cast<std::size_t>(a.grid) * static_cast<std::size_t>(a.grid);
  struct Cell {
    double sigma, t;
    Complex zeta, det;
  };
  std::vector<Cell> cells(n);
  parallel_for(n, c.threads, [&](std::size_t k) {
    double sigma = ln2 * (static_cast<double>(k / a.grid) + 0.5) / a.grid;
    double t = a.window * (static_cast<double>(k % a.grid) + 0.5) / a.grid;
    Complex zeta, det;
    if (param == Parameterization::theorem) {
      zeta = z.value({sigma / a.b, t * std::exp(a.b)});
      det = approx_det(sigma, t, a.b, sign);
    } else {
      sigma /= a.b;
      t *= std::exp(a.b);
      zeta = z.value({sigma, t});
      det = approx_det_figure(sigma, t, a.b, sign);
    }
    cells[k] = {sigma, t, zeta, det};
  });
  const json config = {{"b", a.b},       {"param", to_string(param)}, {"sign", to_string(sign)},
                       {"window", a.window}, {"grid", a.grid},        {"N", a.N}};
  const std::string header = header_block("approx", config);
  const std::string name = a.output.empty() ? default_name("approx", a.b) : a.output;
  CsvTable t({"sigma", "t", "zeta_re", "zeta_im", "det_re", "det_im", "residual"});
  std::vector<double> res;
  for (const auto& cell : cells) {
    res.push_back(std::abs(cell.zeta - cell.det));
    t.add_numbers({cell.sigma, cell.t, cell.zeta.real(), cell.zeta.imag(), cell.det.real(), cell.det.imag(), res.back()});
  }
  write_file(path_in(c, name + "-residuals.csv"), t.render(header));
  std::sort(res.begin(), res.end());
  const double median = res.size() % 2 ? res[res.size() / 2] : 0.5 * (res[res.size() / 2 - 1] + res[res.size() / 2]);
  json summary = {{"median_residual", median}, {"max_residual", res.back()}};
  if (a.zeros) {
    CsvTable zt({"sigma", "t"});
    const auto zeros = approx_det_zeros(a.b, a.window, sign);
    for (const Complex& x : zeros) {
      if (param == Parameterization::theorem)
        zt.add_numbers({x.real(), x.imag()});
      else
        zt.add_numbers({x.real() / a.b, x.imag() * std::exp(a.b)});
    }
    write_file(path_in(c, name + "-zeros.csv"), zt.render(header));
    summary["approx_zeros"] = zeros.size();
  }
  out << summary.dump() << '\n';
  return kExitOk;
}

int cmd_count(const Common& c, const CountArgs& a, std::ostream& out) {
  check_b(a.b);
  if (a.t.empty()) throw DomainError("cli::run", "--t needs at least one value");
  const PantsSurface s = build_pants(a.b);
  CsvTable t({"t", "N", "words", "log_N_over_t"});
  json rows = json::array();
  for (double x : a.t) {
    const GeodesicCount g = count_geodesics(s, x, a.max_words);
    const double est = g.count > 0 ? std::log(static_cast<double>(g.count)) / x : 0.0;
    t.add({format_double(x), std::to_string(g.count), std::to_string(g.words_enumerated), format_double(est)});
    rows.push_back({{"t", x}, {"N", g.count}, {"words", g.words_enumerated}, {"log_N_over_t", est}});
  }
  const json config = {{"b", a.b}, {"t", a.t}, {"max_words", a.max_words}};
  if (!a.output.empty()) write_file(path_in(c, a.output), t.render(header_block("count", config)));
  out << json{{"header", header_json("count", config)}, {"counts", rows}}.dump() << '\n';
  return kExitOk;
}

int cmd_traces(const Common& c, const TracesArgs& a, std::ostream& out) {
  check_b(a.b);
  if (a.max_n < 1 || a.max_n > 14) throw DomainError("cli::run", "--max-n must be in [1, 14]");
  const Grading grading = parse_grading(a.grading);
  const int order = a.N > 0 ? a.N : default_order(grading);
  const PantsSurface s = build_pants(a.b);
  std::vector<Complex> points;
  for (const auto& p : a.points) points.push_back(parse_point(p));
  const json config = {{"b", a.b}, {"max_n", a.max_n}, {"N", order}, {"grading", to_string(grading)}, {"s", a.points}};
  const std::string header = header_block("traces", config);
  const std::string name = a.output.empty() ? default_name("traces", a.b) : a.output;

  std::vector<PeriodicOrbit> orbits;
  for (int n = 1; n <= a.max_n; ++n) {
    auto level = enumerate_orbits(s, n, false);
    orbits.insert(orbits.end(), level.begin(), level.end());
  }
  write_file(path_in(c, name + "-orbits.csv"), orbits_csv(orbits, header));
  json surface = surface_json(s);
  surface["header"] = header_json("traces", config);
  write_file(path_in(c, name + "-surface.json"), surface.dump(2) + "\n");

  if (!points.empty()) {
    const ZetaFunction z(s, grading, order, c.threads);
    std::string lines = json{{"header", header_json("traces", config)}}.dump() + "\n";
    CsvTable t({"s_re", "s_im", "k", "trace_re", "trace_im"});
    for (const Complex& p : points) {
      const ZetaEvaluation e = z.eval(p);
      lines += evaluation_json(e).dump() + "\n";
      out << evaluation_json(e).dump() << '\n';
      for (int k = 1; k <= order; ++k) {
        const Complex tr = z.trace(p, k);
        t.add({format_double(p.real()), format_double(p.imag()), std::to_string(k), format_double(tr.real()),
               format_double(tr.imag())});
      }
    }
    write_file(path_in(c, name + "-eval.jsonl"), lines);
    write_file(path_in(c, name + "-traces.csv"), t.render(header));
  }
  return kExitOk;
}

int cmd_validate(const Common& c, const ValidateArgs& a, std::ostream& out) {
  AcceptanceOptions opt;
  opt.threads = c.threads;
  opt.only = a.only;
  opt.include_slow = !a.quick;
  opt.journal_dir = a.journal_dir;
  if (!a.inject.empty()) {
    if (a.inject != "length") throw DomainError("cli::run", "--inject-fault accepts only 'length'");
    opt.length_formula = [](const Word& w, const PantsSurface& s) { return orbit_data(w, s).length * (1.0 + 1e-6); };
  }
  if (a.quick)
    opt.only.erase(std::remove_if(opt.only.begin(), opt.only.end(), criterion_is_slow), opt.only.end());
  for (int id : opt.only)
    if (id < 1 || id > kCriterionCount) throw DomainError("cli::run", "--only takes criterion numbers 1.." + std::to_string(kCriterionCount));
  std::filesystem::create_directories(a.journal_dir);
  opt.on_result = [&](const CriterionResult& r) { out << format_result(r) << std::endl; };
  const auto results = run_acceptance(opt);
  const bool ok = std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed; });
  if (!a.json_path.empty()) {
    json rows = json::array();
    for (const auto& r : results) rows.push_back(result_json(r));
    const json config = {{"quick", a.quick}, {"only", a.only}, {"inject", a.inject}};
    write_file(a.json_path, json{{"header", header_json("validate", config)}, {"passed", ok}, {"criteria", rows}}.dump(2) + "\n");
  }
  out << (ok ? "all criteria passed" : "some criteria failed") << " (" << results.size() << " run)" << std::endl;
  return ok ? kExitOk : kExitNumeric;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Selberg zeta functions of symmetric pairs of pants", "pzeta"};
  app.set_version_flag("--version", std::string("pzeta ") + version());
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--threads", common.threads, "worker threads (0: PZ_THREADS or all cores)")->check(CLI::NonNegativeNumber);
  app.add_option("--kernel", common.kernel, "exponential-sum kernel: auto, scalar, avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));
  app.add_option("--out-dir", common.out_dir, "directory for output files");

  DimArgs dim;
  auto* dim_cmd = app.add_subcommand("dim", "Hausdorff dimension by pressure root and by the real zeta zero");
  dim_cmd->add_option("--b", dim.b, "half funnel length")->required();
  dim_cmd->add_option("--tol", dim.tol, "target agreement (>= 1e-10)");
  dim_cmd->add_option("--min-n", dim.min_n, "first pressure word length");
  dim_cmd->add_option("--max-n", dim.max_n, "last pressure word length");
  dim_cmd->add_option("--order", dim.order, "zeta truncation (reflection grading)");
  dim_cmd->add_option("-o,--output", dim.output, "also write the JSON to this file");

  ZerosArgs zeros;
  auto* zeros_cmd = app.add_subcommand("zeros", "zeros of the zeta function in a rectangle");
  zeros_cmd->add_option("--b", zeros.b, "half funnel length")->required();
  zeros_cmd->add_option("--rect", zeros.rect, "s0,s1,t0,t1 ('delta' allowed); default [-0.02, ln2/b+0.02] x [0, pi e^b]");
  zeros_cmd->add_option("--N", zeros.N, "truncation order (0: 20 reflection, 12 word)");
  zeros_cmd->add_option("--grading", zeros.grading, "reflection or word")->check(CLI::IsMember({"reflection", "word"}));
  zeros_cmd->add_option("--tol", zeros.tol, "Newton tolerance");
  zeros_cmd->add_option("--strip-height", zeros.strip_height, "strip height (0: twice the width)");
  zeros_cmd->add_option("--journal", zeros.journal, "journal path (default <output>.journal)");
  zeros_cmd->add_flag("--no-journal", zeros.no_journal, "do not keep a journal");
  zeros_cmd->add_option("--format", zeros.format, "csv, json or both");
  zeros_cmd->add_option("--defect", zeros.defect, "almost-period defects for k = 0..K");
  zeros_cmd->add_option("--o2-probe", zeros.o2_radius, "zero density in this radius around delta/2 + i(pi/2)e^b");
  zeros_cmd->add_option("-o,--output", zeros.output, "output name prefix");

  CurvesArgs curves;
  auto* curves_cmd = app.add_subcommand("curves", "samples of the limiting curves C1..C4");
  curves_cmd->add_option("--window", curves.window, "|t| range");
  curves_cmd->add_option("--step", curves.step, "maximal spacing of consecutive samples");
  curves_cmd->add_option("--sigma-min", curves.sigma_min, "lower clip for sigma");
  curves_cmd->add_option("-o,--output", curves.output, "output name prefix");

  ApproxArgs approx;
  auto* approx_cmd = app.add_subcommand("approx", "zeta against the 6x6 approximating determinant");
  approx_cmd->add_option("--b", approx.b, "half funnel length")->required();
  approx_cmd->add_option("--param", approx.param, "theorem (rescaled) or figure (zeta coordinates)")
      ->check(CLI::IsMember({"theorem", "figure"}));
  approx_cmd->add_option("--sign", approx.sign, "corrected or printed boundary phase")
      ->check(CLI::IsMember({"corrected", "printed"}));
  approx_cmd->add_option("--window", approx.window, "rescaled t range of the grid");
  approx_cmd->add_option("--grid", approx.grid, "grid points per axis");
  approx_cmd->add_option("--N", approx.N, "zeta truncation (reflection grading)");
  approx_cmd->add_flag("--zeros", approx.zeros, "also write the zeros of the determinant");
  approx_cmd->add_option("-o,--output", approx.output, "output name prefix");

  CountArgs count;
  auto* count_cmd = app.add_subcommand("count", "number of primitive closed geodesics of length <= t");
  count_cmd->add_option("--b", count.b, "half funnel length")->required();
  count_cmd->add_option("--t", count.t, "length bounds")->required()->delimiter(',');
  count_cmd->add_option("--max-words", count.max_words, "enumeration bound");
  count_cmd->add_option("-o,--output", count.output, "CSV file");

  TracesArgs traces;
  auto* traces_cmd = app.add_subcommand("traces", "orbit table, surface data and zeta traces");
  traces_cmd->add_option("--b", traces.b, "half funnel length")->required();
  traces_cmd->add_option("--max-n", traces.max_n, "longest word in the orbit table");
  traces_cmd->add_option("--N", traces.N, "truncation order (0: default for the grading)");
  traces_cmd->add_option("--grading", traces.grading, "reflection or word")->check(CLI::IsMember({"reflection", "word"}));
  traces_cmd->add_option("--s", traces.points, "evaluation point re,im (repeatable)");
  traces_cmd->add_option("-o,--output", traces.output, "output name prefix");

  ValidateArgs validate;
  auto* validate_cmd = app.add_subcommand("validate", "run the acceptance criteria");
  validate_cmd->add_flag("--quick", validate.quick, "skip the slow zero scans");
  validate_cmd->add_option("--only", validate.only, "criterion numbers")->delimiter(',');
  validate_cmd->add_option("--journal-dir", validate.journal_dir, "journals for the slow scans");
  validate_cmd->add_option("--json", validate.json_path, "write the report as JSON");
  validate_cmd->add_option("--inject-fault", validate.inject, "fault injection for harness checks: length");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << "pzeta " << version() << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "pzeta: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (common.kernel != "auto") {
      const auto isa = kernels::parse_isa(common.kernel);
      if (!kernels::isa_available(isa)) throw DomainError("cli::run", "kernel " + common.kernel + " not available here");
      kernels::set_isa(isa);
    }
    if (*dim_cmd) return cmd_dim(common, dim, out);
    if (*zeros_cmd) return cmd_zeros(common, zeros, out);
    if (*curves_cmd) return cmd_curves(common, curves, out);
    if (*approx_cmd) return cmd_approx(common, approx, out);
    if (*count_cmd) return cmd_count(common, count, out);
    if (*traces_cmd) return cmd_traces(common, traces, out);
    if (*validate_cmd) return cmd_validate(common, validate, out);
  } catch (const DomainError& e) {
    err << "pzeta: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "pzeta: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace pz
