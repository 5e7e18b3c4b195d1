#include "pz/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <numbers>
#include <random>
#include <sstream>

#include "pz/asymptotics.hpp"
#include "pz/error.hpp"
#include "pz/parallel.hpp"

namespace pz {

using nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;
const double kLn2 = std::log(2.0);

struct Spec {
  const char* name;
  double time_limit;
  bool slow;
};

constexpr Spec kSpecs[kCriterionCount] = {
    {"funnel-length", 1.0, false},         {"dual-length", 10.0, false},
    {"determinant-product", 60.0, false},  {"dimension-asymptotics", 120.0, false},
    {"zero-free-half-plane", 300.0, false}, {"curve-eigenvalue", 1.0, false},
    {"approximation-trend", 1800.0, false}, {"curve-shadowing", 0.0, true},
    {"counting-trend", 300.0, false},      {"properties", 120.0, false},
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

// Point of a geodesic at parameter u in (0, 1) between its endpoints.
Complex geodesic_point(const Geodesic& g, double u) {
  const auto [p, q] = g.endpoints();
  if (g.kind() == Geodesic::Kind::diameter) return p + (q - p) * u;
  const Complex c = g.center();
  const double a0 = std::arg(p - c);
  double span = std::arg(q - c) - a0;
  if (span > kPi) span -= 2 * kPi;
  if (span < -kPi) span += 2 * kPi;
  return c + g.radius() * std::polar(1.0, a0 + span * u);
}

template <class F>
double golden_min(F f, double lo, double hi, int iters) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = f(x2);
    }
  }
  return std::min(f1, f2);
}

// Distance between two geodesics by nested golden-section search.
double distance_by_search(const Geodesic& g1, const Geodesic& g2) {
  const double eps = 1e-9;
  return golden_min(
      [&](double u) {
        const Complex z = geodesic_point(g1, u);
        return golden_min([&](double v) { return hyperbolic_distance(z, geodesic_point(g2, v)); }, eps, 1 - eps, 70);
      },
      eps, 1 - eps, 70);
}

CriterionResult funnel_length(const AcceptanceOptions&) {
  CriterionResult r;
  double worst = 0.0, worst_search = 0.0;
  for (double b : {1.0, 2.0, 3.0, 4.0, 6.0}) {
    const PantsSurface s = build_pants(b);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const double len = translation_length(reflection_product(s.mirrors[i], s.mirrors[j]));
        worst = std::max(worst, std::abs(len - 2 * b));
        worst_search = std::max(worst_search, std::abs(2 * distance_by_search(s.mirrors[i], s.mirrors[j]) - 2 * b));
      }
    for (Letter g : kLetters) worst = std::max(worst, std::abs(translation_length(s.gen(g)) - 2 * b));
  }
  r.passed = worst <= 1e-8 && worst_search <= 1e-8;
  r.values = {{"max_error", worst}, {"max_error_search_oracle", worst_search}, {"tolerance", 1e-8}};
  r.summary = "max |l - 2b| = " + fmt(worst) + ", search oracle " + fmt(worst_search) + " (tol 1e-8)";
  return r;
}

CriterionResult dual_length(const AcceptanceOptions& opt) {
  CriterionResult r;
  const PantsSurface s = build_pants(3.0);
  const LengthFormula length =
      opt.length_formula ? opt.length_formula : [](const Word& w, const PantsSurface& p) { return orbit_data(w, p).length; };
  double worst = 0.0;
  std::size_t words = 0;
  for (int n = 1; n <= 6; ++n)
    for_each_word(n, [&](const Word& w) {
      if (!is_cyclically_reduced(w)) return;
      ++words;
      worst = std::max(worst, std::abs(expansion_length(w, s) - length(w, s)));
    });
  r.passed = worst <= 1e-9;
  r.values = {{"words", words}, {"max_error", worst}, {"tolerance", 1e-9}};
  r.summary = std::to_string(words) + " words, max |log|(T^n)'| - l| = " + fmt(worst) + " (tol 1e-9)";
  return r;
}

CriterionResult determinant_product(const AcceptanceOptions& opt) {
  CriterionResult r;
  const PantsSurface s = build_pants(3.0);
  const ZetaFunction z(s, Grading::reflection, 20, opt.threads);
  const double delta = largest_real_zero(z, 1e-12);
  const EulerProduct e(s, 70.0, opt.threads);
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> sig(delta + 0.2, 3.0), tim(-20.0, 20.0);
  double worst = 0.0, worst_ratio = 0.0;
  bool ok = true;
  for (int i = 0; i < 20; ++i) {
    const Complex p(sig(rng), tim(rng));
    const ZetaEvaluation a = z.eval(p);
    const EulerProductValue v = e.eval(p, delta);
    const double diff = std::abs(a.value - v.value);
    const double tails = a.tail_estimate + v.tail_estimate;
    worst = std::max(worst, diff);
    worst_ratio = std::max(worst_ratio, diff / tails);
    ok = ok && diff <= tails && diff <= 1e-6;
  }
  r.passed = ok;
  r.values = {{"delta", delta},
              {"primitive_count", e.primitive_count()},
              {"max_difference", worst},
              {"max_difference_over_tails", worst_ratio}};
  r.summary = "max |Z - P| = " + fmt(worst) + ", max ratio to tails " + fmt(worst_ratio) + " (" +
              std::to_string(e.primitive_count()) + " primitives)";
  return r;
}

CriterionResult dimension_asymptotics(const AcceptanceOptions& opt) {
  CriterionResult r;
  std::vector<double> gaps;
  double worst = 0.0;
  json rows = json::array();
  for (double b : {4.0, 6.0, 8.0}) {
    DimensionOptions d;
    d.threads = opt.threads;
    const DimensionResult res = hausdorff_dimension(build_pants(b), 1e-10, d);
    gaps.push_back(std::abs(b * res.delta - kLn2));
    worst = std::max(worst, res.agreement);
    rows.push_back({{"b", b}, {"delta", res.delta}, {"method_a", res.method_a}, {"agreement", res.agreement}});
  }
  r.passed = strictly_decreasing(gaps) && worst <= 1e-6;
  r.values = {{"rows", rows}, {"gaps", gaps}};
  r.summary = "|b delta - ln 2| = " + fmt(gaps[0]) + ", " + fmt(gaps[1]) + ", " + fmt(gaps[2]) +
              "; max method gap " + fmt(worst) + " (tol 1e-6)";
  return r;
}

CriterionResult zero_free(const AcceptanceOptions& opt) {
  CriterionResult r;
  const PantsSurface s = build_pants(4.0);
  const ZetaFunction z(s, Grading::reflection, 20, opt.threads);
  const double delta = largest_real_zero(z, 1e-12);
  ZeroSearchOptions o;
  o.threads = opt.threads;
  const ZeroSet zs = find_zeros(z, Rect{delta + 0.05, 1.0, 0.0, 20.0}, o);
  r.passed = zs.zeros.empty() && zs.total_winding() == 0;
  r.values = {{"delta", delta}, {"zeros", zs.zeros.size()}, {"winding", zs.total_winding()},
              {"evaluations", zs.evaluations}};
  r.summary = std::to_string(zs.zeros.size()) + " zeros, total winding " + std::to_string(zs.total_winding()) +
              ", " + std::to_string(zs.evaluations) + " evaluations";
  return r;
}

CriterionResult curve_eigenvalue(const AcceptanceOptions& opt) {
  CriterionResult r;
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> tim(0.01, 2 * kPi - 0.01);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    double t = tim(rng);
    if (std::abs(t - kPi) < 0.01) t += 0.02;
    worst = std::max(worst, curve_eigen_mismatch(t));
  }
  r.passed = worst <= 1e-9;
  r.values = {{"max_mismatch", worst}, {"tolerance", 1e-9}};
  r.summary = "max multiset mismatch " + fmt(worst) + " (tol 1e-9)";
  return r;
}

CriterionResult approximation_trend(const AcceptanceOptions& opt) {
  CriterionResult r;
  std::vector<double> medians;
  for (double b : {4.0, 6.0}) {
    const ZetaFunction z(build_pants(b), Grading::reflection, 20, opt.threads);
    std::vector<double> res(100);
    parallel_for(100, opt.threads, [&](std::size_t k) {
      const double sigma = kLn2 * (static_cast<double>(k / 10) + 0.5) / 10.0;
      const double t = kPi * (static_cast<double>(k % 10) + 0.5) / 10.0;
      res[k] = approx_theorem_residual(z, sigma, t);
    });
    std::nth_element(res.begin(), res.begin() + 50, res.end());
    const double hi = res[50];
    const double lo = *std::max_element(res.begin(), res.begin() + 50);
    medians.push_back(0.5 * (lo + hi));
  }
  r.passed = strictly_decreasing(medians);
  r.values = {{"median_b4", medians[0]}, {"median_b6", medians[1]}, {"order", 20}};
  r.summary = "median residual b=4 " + fmt(medians[0]) + ", b=6 " + fmt(medians[1]);
  return r;
}

CriterionResult curve_shadowing(const AcceptanceOptions& opt) {
  CriterionResult r;
  std::vector<double> dist;
  json rows = json::array();
  for (double b : {4.0, 6.0}) {
    const ZetaFunction z(build_pants(b), Grading::reflection, 20, opt.threads);
    ZeroSearchOptions o;
    o.threads = opt.threads;
    std::ostringstream name;
    name << "zeros-b" << b << ".jsonl";
    o.journal = (std::filesystem::path(opt.journal_dir) / name.str()).string();
    const Rect rect{-0.02, kLn2 / b + 0.02, -0.05, kPi * std::exp(b)};
    const ZeroSet zs = find_zeros(z, rect, o);
    const std::vector<Complex> all = conjugate_closure(zs);
    std::vector<Complex> rescaled;
    for (const Complex& x : all) rescaled.emplace_back(x.real() * b, x.imag() * std::exp(-b));
    const double d = zero_curve_hausdorff(rescaled, kPi);
    dist.push_back(d);
    rows.push_back({{"b", b}, {"zeros", zs.zeros.size()}, {"resumed_strips", zs.resumed_strips},
                    {"hausdorff", d}, {"journal", o.journal}});
  }
  r.passed = strictly_decreasing(dist);
  r.values = {{"rows", rows}};
  r.summary = "Hausdorff distance b=4 " + fmt(dist[0]) + ", b=6 " + fmt(dist[1]) + " (window pi)";
  return r;
}

CriterionResult counting_trend(const AcceptanceOptions& opt) {
  CriterionResult r;
  const double b = 2.0;
  const PantsSurface s = build_pants(b);
  DimensionOptions d;
  d.threads = opt.threads;
  const double delta = hausdorff_dimension(s, 1e-10, d).delta;
  const std::size_t budget = 1'000'000;
  auto fits = [&](double t) {
    try {
      count_geodesics(s, t, budget);
      return true;
    } catch (const ResourceError&) {
      return false;
    }
  };
  double lo = 2 * b, hi = 2 * lo;
  while (fits(hi)) {
    lo = hi;
    hi *= 2;
  }
  while (hi - lo > 1e-3) {
    const double mid = 0.5 * (lo + hi);
    (fits(mid) ? lo : hi) = mid;
  }
  // Lengths cluster near multiples of 2b, so N(t) is compared at equal phase.
  std::vector<double> ts{lo - 4 * b, lo - 2 * b, lo}, errs;
  json rows = json::array();
  for (double t : ts) {
    const GeodesicCount c = count_geodesics(s, t, budget);
    const double est = std::log(static_cast<double>(c.count)) / t;
    errs.push_back(std::abs(est - delta));
    rows.push_back({{"t", t}, {"N", c.count}, {"words", c.words_enumerated}, {"error", errs.back()}});
  }
  r.passed = strictly_decreasing(errs) && errs.back() <= 0.1;
  r.values = {{"delta", delta}, {"rows", rows}};
  r.summary = "t = " + fmt(ts[0]) + ", " + fmt(ts[1]) + ", " + fmt(ts[2]) + ": |log N / t - delta| = " +
              fmt(errs[0]) + ", " + fmt(errs[1]) + ", " + fmt(errs[2]) + " (tol 0.1)";
  return r;
}

CriterionResult properties(const AcceptanceOptions& opt) {
  CriterionResult r;
  std::vector<std::string> failed;
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) failed.push_back(what);
  };
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto point = [&] {
    Complex z(unit(rng), unit(rng));
    return std::abs(z) < 0.9 ? z : 0.9 * z / std::abs(z);
  };
  const PantsSurface s = build_pants(3.0);
  auto random_map = [&] {
    MoebiusMap m;
    for (int i = 0; i < 2; ++i) m = compose(s.gen(kLetters[rng() % 4]), m);
    return compose(MoebiusMap::recentering(0.5 * point()), m);
  };

  double group = 0.0, metric = 0.0;
  for (int i = 0; i < 50; ++i) {
    const MoebiusMap f = random_map(), g = random_map(), h = random_map();
    const Complex z = point(), w = point();
    const Complex lhs = pz::apply(compose(f, compose(g, h)), z);
    const Complex rhs = pz::apply(compose(compose(f, g), h), z);
    group = std::max(group, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    group = std::max(group, std::abs(pz::apply(compose(g, g.inverse()), z) - z));
    group = std::max(group, std::abs(pz::apply(compose(MoebiusMap::identity(), g), z) - pz::apply(g, z)));
    const MoebiusMap m = MoebiusMap::recentering(0.8 * point());
    const double d0 = hyperbolic_distance(z, w);
    metric = std::max(metric, std::abs(hyperbolic_distance(pz::apply(m, z), pz::apply(m, w)) - d0) / std::max(1.0, d0));
  }
  check(group <= 1e-9, "group axioms");
  check(metric <= 1e-9, "metric invariance");

  bool markov = true;
  for (double b : {1.0, 2.0, 3.0, 4.0, 6.0}) {
    const PantsSurface p = build_pants(b);
    markov = markov && verify_markov(p, markov_partition(p));
  }
  check(markov, "Markov partition");

  const PantsSurface s4 = build_pants(4.0);
  const ZetaFunction z(s4, Grading::reflection, 20, opt.threads);
  double conj = 0.0;
  for (int i = 0; i < 20; ++i) {
    const Complex p(0.3 * unit(rng), 60.0 * unit(rng));
    const Complex v = z.value(p), c = z.value(std::conj(p));
    conj = std::max(conj, std::abs(c - std::conj(v)) / std::max(1.0, std::abs(v)));
  }
  check(conj <= 1e-12, "conjugation symmetry");

  // Argument principle on a known polynomial and around the real zero.
  const std::vector<Complex> roots{{0.3, 0.4}, {-0.2, 0.7}, {0.1, 1.5}};
  const AnalyticFunction poly = [&](Complex x) {
    Complex v = 1.0;
    for (const Complex& q : roots) v *= x - q;
    return v;
  };
  ZeroSearchOptions o;
  o.threads = opt.threads;
  const ZeroSet pz = find_zeros(poly, Rect{-1.0, 1.0, 0.0, 2.0}, o);
  bool poly_ok = pz.zeros.size() == roots.size() && pz.total_winding() == roots.size();
  for (const Complex& q : roots) {
    double best = 1e300;
    for (const auto& x : pz.zeros) best = std::min(best, std::abs(x.s - q));
    poly_ok = poly_ok && best <= 1e-8;
  }
  const double delta = largest_real_zero(z, 1e-12);
  const ZeroSet dz = find_zeros(z, Rect{delta - 0.02, delta + 0.02, -0.5, 0.5}, o);
  const bool delta_ok = dz.zeros.size() == 1 && dz.total_winding() == 1 && std::abs(dz.zeros[0].s - delta) <= 1e-8;
  check(poly_ok && delta_ok, "argument principle");

  const Matrix6 b0 = matrix_B(0.0), b1 = matrix_B(1.0);
  check((b0 - Matrix6::Identity()).norm() == 0.0, "B(0) = I");
  bool rows4 = true;
  for (int i = 0; i < 6; ++i) rows4 = rows4 && b1.row(i).sum() == Complex(4.0);
  const Eigen::ComplexEigenSolver<Matrix6> es(b1);
  double radius = 0.0;
  for (int i = 0; i < 6; ++i) radius = std::max(radius, std::abs(es.eigenvalues()[i]));
  check(rows4 && std::abs(radius - 4.0) <= 1e-12, "B(1) spectral radius 4");

  double det_conj = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double sigma = unit(rng), t = 3.0 * unit(rng);
    det_conj = std::max(det_conj, std::abs(approx_det(sigma, -t, 4.0) - std::conj(approx_det(sigma, t, 4.0))));
  }
  check(det_conj <= 1e-12, "approximant conjugation");

  r.passed = failed.empty();
  r.values = {{"group", group},        {"metric", metric},         {"conjugation", conj},
              {"spectral_radius", radius}, {"approx_conjugation", det_conj}, {"failed", failed}};
  if (failed.empty()) {
    r.summary = "group " + fmt(group) + ", metric " + fmt(metric) + ", conjugation " + fmt(conj) +
                ", argument principle ok, B(1) radius " + fmt(radius);
  } else {
    r.summary = "failed:";
    for (const auto& f : failed) r.summary += " [" + f + "]";
  }
  return r;
}

}  // namespace

const char* criterion_name(int id) {
  if (id < 1 || id > kCriterionCount) throw DomainError("acceptance::criterion_name", "no such criterion");
  return kSpecs[id - 1].name;
}

bool criterion_is_slow(int id) { return id >= 1 && id <= kCriterionCount && kSpecs[id - 1].slow; }

CriterionResult run_criterion(int id, const AcceptanceOptions& opt) {
  if (id < 1 || id > kCriterionCount) throw DomainError("acceptance::run_criterion", "no such criterion");
  using Fn = CriterionResult (*)(const AcceptanceOptions&);
  constexpr Fn fns[kCriterionCount] = {funnel_length, dual_length,      determinant_product, dimension_asymptotics,
                                       zero_free,     curve_eigenvalue, approximation_trend, curve_shadowing,
                                       counting_trend, properties};
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = fns[id - 1](opt);
  } catch (const std::exception& e) {
    r.passed = false;
    r.summary = std::string("error: ") + e.what();
  }
  r.id = id;
  r.name = kSpecs[id - 1].name;
  r.slow = kSpecs[id - 1].slow;
  r.time_limit = kSpecs[id - 1].time_limit;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.time_limit > 0.0 && r.seconds >= r.time_limit) {
    r.passed = false;
    r.summary += "; over the time limit of " + fmt(r.time_limit) + " s";
  }
  return r;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    const bool selected = opt.only.empty() ? (opt.include_slow || !criterion_is_slow(id))
                                           : std::find(opt.only.begin(), opt.only.end(), id) != opt.only.end();
    if (!selected) continue;
    out.push_back(run_criterion(id, opt));
    if (opt.on_result) opt.on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << "  " << r.id << " " << r.name;
  os.precision(3);
  os << std::fixed << "  " << r.seconds << "s  " << r.summary;
  return os.str();
}

json result_json(const CriterionResult& r) {
  return {{"id", r.id},       {"name", r.name},           {"passed", r.passed}, {"slow", r.slow},
          {"seconds", r.seconds}, {"time_limit", r.time_limit}, {"summary", r.summary}, {"values", r.values}};
}

}  // namespace pz
