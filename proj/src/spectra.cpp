#include "pz/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "pz/error.hpp"
#include "pz/parallel.hpp"

namespace pz {

using nlohmann::json;

double pressure_root(const PressureFunction& p, int n, double tol) {
  double lo = 0.0, hi = 1.0;
  if (!(p.eval(lo, n).value > 0.0) || !(p.eval(hi, n).value < 0.0))
    throw NumericError("spectra::hausdorff_dimension", "pressure has no sign change in (0, 1); raise n");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (p.eval(mid, n).value > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double largest_real_zero(const ZetaFunction& z, double tol, double lo, double hi) {
  const double step = 0.005;
  double upper = hi;
  double f_upper = z.value(upper).real();
  if (!(f_upper > 0.0)) throw NumericError("spectra::hausdorff_dimension", "zeta not positive at the upper end");
  for (double x = hi - step; x >= lo; x -= step) {
    const double fx = z.value(x).real();
    if (fx <= 0.0) {
      double a = x, b = upper;
      while (b - a > tol) {
        const double mid = 0.5 * (a + b);
        (z.value(mid).real() > 0.0 ? b : a) = mid;
      }
      return 0.5 * (a + b);
    }
    upper = x;
  }
  throw NumericError("spectra::hausdorff_dimension", "no real zero of zeta in (0, 1); truncation too low");
}

DimensionResult hausdorff_dimension(const PantsSurface& s, double tol, const DimensionOptions& opt) {
  if (!(tol >= 1e-10)) throw DomainError("spectra::hausdorff_dimension", "tol must be at least 1e-10");
  const double inner = std::min(tol, 1e-12);
  int first = opt.min_n | 1, last = opt.max_n;
  if (last < first) throw DomainError("spectra::hausdorff_dimension", "empty pressure escalation range");
  const PressureFunction p(s, last, opt.threads);
  DimensionResult out;
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (int n = first; n <= last; n += 2) {
    const double r = pressure_root(p, n, inner);
    out.method_a = r;
    out.n_used = n;
    if (std::abs(r - prev) < tol) break;
    prev = r;
  }
  const ZetaFunction z(s, Grading::reflection, opt.order, opt.threads);
  out.method_b = largest_real_zero(z, inner);
  out.delta = out.method_b;
  out.agreement = std::abs(out.method_a - out.method_b);
  return out;
}

std::size_t ZeroSet::total_winding() const {
  std::size_t w = 0;
  for (const auto& b : boxes) w += static_cast<std::size_t>(b.winding);
  return w;
}

std::size_t ZeroSet::total_multiplicity() const {
  std::size_t m = 0;
  for (const auto& z : zeros) m += static_cast<std::size_t>(z.multiplicity);
  return m;
}

namespace {

constexpr double kGolden = 0.6180339887498949;
constexpr double kPi = std::numbers::pi;

double dither(int k) {
  const double x = k * kGolden;
  return x - std::floor(x) - 0.5;
}

struct ContourFailure {};

struct StripOutput {
  std::vector<LocatedZero> zeros;
  std::vector<BoxRecord> boxes;
  std::size_t evaluations = 0;
};

class StripSolver {
 public:
  StripSolver(const AnalyticFunction& f, const ZeroSearchOptions& opt, double max_segment)
      : f_(f), opt_(opt), max_segment_(max_segment), near_(std::max(100.0 * opt.tol, 1e-12)) {}

  Complex eval(Complex z) {
    const auto key = std::make_pair(z.real(), z.imag());
    const auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const Complex v = raw(z);
    cache_.emplace(key, v);
    return v;
  }

  Complex raw(Complex z) {
    ++evaluations_;
    const Complex v = f_(z);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw NumericError("spectra::find_zeros", "non-finite function value on the contour");
    return v;
  }

  // Change of arg f along the segment; nullopt when the segment passes too
  // close to a zero to resolve.
  std::optional<double> segment_arg(Complex z0, Complex z1) {
    double sign = 1.0;
    if (std::make_pair(z1.real(), z1.imag()) < std::make_pair(z0.real(), z0.imag())) {
      std::swap(z0, z1);
      sign = -1.0;
    }
    const double len = std::abs(z1 - z0);
    const int pieces = std::max(1, static_cast<int>(std::ceil(len / max_segment_)));
    double total = 0.0;
    Complex za = z0, fa = eval(z0);
    for (int j = 1; j <= pieces; ++j) {
      const Complex zb = j == pieces ? z1 : z0 + (z1 - z0) * (static_cast<double>(j) / pieces);
      const Complex fb = eval(zb);
      const auto d = refine(za, fa, zb, fb, 0);
      if (!d) return std::nullopt;
      total += *d;
      za = zb;
      fa = fb;
    }
    return sign * total;
  }

  std::optional<int> winding(const Rect& r) {
    const Complex c00(r.sigma_min, r.t_min), c10(r.sigma_max, r.t_min), c11(r.sigma_max, r.t_max),
        c01(r.sigma_min, r.t_max);
    double total = 0.0;
    for (const auto& [a, b] : {std::pair{c00, c10}, std::pair{c10, c11}, std::pair{c11, c01}, std::pair{c01, c00}}) {
      const auto d = segment_arg(a, b);
      if (!d) return std::nullopt;
      total += *d;
    }
    const double w = total / (2.0 * kPi);
    const double rounded = std::round(w);
    if (std::abs(w - rounded) > 0.2) return std::nullopt;
    return static_cast<int>(rounded);
  }

  StripOutput solve(const Rect& strip, int strip_winding) {
    StripOutput out;
    struct Item {
      Rect r;
      int w;
      int depth;
    };
    std::vector<Item> stack{{strip, strip_winding, 0}};
    std::int64_t next_box = 0;
    while (!stack.empty()) {
      const Item item = stack.back();
      stack.pop_back();
      if (item.w == 0) continue;
      if (item.w < 0) throw NumericError("spectra::find_zeros", "negative winding number in " + describe(item.r));
      if (item.w <= 2) {
        auto roots = isolate(item.r, item.w);
        if (static_cast<int>(roots.size()) == item.w) {
          record(out, item.r, item.w, roots, next_box++);
          continue;
        }
      }
      const bool tiny = std::max(item.r.width(), item.r.height()) < 1e3 * opt_.tol;
      // Below the rounding floor of f no cut line may separate a close pair.
      auto children = tiny || item.depth >= opt_.max_depth ? std::nullopt : split(item.r, item.depth > 0);
      if (!children) {
        auto roots = isolate(item.r, 1);
        // f is rounding noise at this scale: keep the box center, its residual shows it.
        if (roots.empty()) {
          const Complex c(0.5 * (item.r.sigma_min + item.r.sigma_max), 0.5 * (item.r.t_min + item.r.t_max));
          roots.push_back({c, std::abs(raw(c)), 1, 0});
        }
        roots.resize(1);
        roots[0].multiplicity = item.w;
        record(out, item.r, item.w, roots, next_box++);
        continue;
      }
      const auto w1 = winding(children->first), w2 = winding(children->second);
      if (!w1 || !w2 || *w1 + *w2 != item.w)
        throw NumericError("spectra::find_zeros", "inconsistent winding after splitting " + describe(item.r) + " (" +
                                                      std::to_string(item.w) + " vs " + show(w1) + " + " + show(w2) + ")");
      // Second child first on the stack so the first is processed first.
      stack.push_back({children->second, *w2, item.depth + 1});
      stack.push_back({children->first, *w1, item.depth + 1});
    }
    out.evaluations = evaluations_;
    return out;
  }

  std::size_t evaluations() const { return evaluations_; }

 private:
  std::optional<double> refine(Complex za, Complex fa, Complex zb, Complex fb, int depth) {
    if (fa == Complex{} || fb == Complex{}) return std::nullopt;
    // Accept only when f is close to linear on the segment: a zero pair near
    // the middle leaves fa and fb alike but pulls fm away from the chord.
    const Complex zm = 0.5 * (za + zb);
    const Complex fm = eval(zm);
    const double scale = std::min(std::abs(fa), std::abs(fb));
    if (fm != Complex{} && std::abs(fb - fa) < 0.5 * scale && std::abs(fm - 0.5 * (fa + fb)) < 0.125 * scale)
      return std::arg(fm / fa) + std::arg(fb / fm);
    if (depth > 60 || std::abs(zb - za) < near_) return std::nullopt;
    const auto left = refine(za, fa, zm, fm, depth + 1);
    if (!left) return std::nullopt;
    const auto right = refine(zm, fm, zb, fb, depth + 1);
    if (!right) return std::nullopt;
    return *left + *right;
  }

  static std::string show(const std::optional<int>& w) { return w ? std::to_string(*w) : std::string("?"); }

  static std::string describe(const Rect& r) {
    std::ostringstream os;
    os.precision(12);
    os << "[" << r.sigma_min << ", " << r.sigma_max << "] x [" << r.t_min << ", " << r.t_max << "]";
    return os.str();
  }

  std::optional<std::pair<Rect, Rect>> split(const Rect& r, bool may_fail) {
    const bool along_t = r.height() >= r.width();
    for (int k = 0; k <= opt_.max_dither; ++k) {
      const double frac = 0.5 + (k == 0 ? 0.0 : 0.6 * dither(k));
      Rect a = r, b = r;
      Complex p0, p1;
      if (along_t) {
        const double t = r.t_min + frac * r.height();
        a.t_max = b.t_min = t;
        p0 = {r.sigma_min, t};
        p1 = {r.sigma_max, t};
      } else {
        const double x = r.sigma_min + frac * r.width();
        a.sigma_max = b.sigma_min = x;
        p0 = {x, r.t_min};
        p1 = {x, r.t_max};
      }
      if (segment_arg(p0, p1)) return std::pair{a, b};
    }
    if (may_fail) return std::nullopt;
    throw NumericError("spectra::find_zeros", "contour dither failed " + std::to_string(opt_.max_dither) +
                                                  " times while splitting " + describe(r));
  }

  std::optional<Complex> newton(Complex s, const Rect& r) {
    const double slack = 0.25 * std::max(r.width(), r.height());
    Complex fs = raw(s);
    for (int it = 0; it < 60; ++it) {
      const double h = std::max(std::min(1e-7 * std::max(1.0, std::abs(s)), 1e-2 * std::max(r.width(), r.height())),
                                1e-11 * std::max(1.0, std::abs(s)));
      const Complex d = (raw(s + h) - raw(s - h)) / (2.0 * h);
      if (d == Complex{} || !std::isfinite(std::abs(d))) return std::nullopt;
      const Complex step = fs / d;
      double lambda = 1.0;
      Complex next = s, fnext = fs;
      bool moved = false;
      for (int k = 0; k < 12; ++k, lambda *= 0.5) {
        next = s - lambda * step;
        if (!r.contains(next, slack)) continue;
        fnext = raw(next);
        if (std::abs(fnext) < std::abs(fs) || k == 11) {
          moved = true;
          break;
        }
      }
      if (!moved) return std::nullopt;
      const double change = std::abs(next - s);
      s = next;
      fs = fnext;
      if (change < opt_.tol) return s;
    }
    return std::nullopt;
  }

  std::vector<LocatedZero> isolate(const Rect& r, int w) {
    const Complex center(0.5 * (r.sigma_min + r.sigma_max), 0.5 * (r.t_min + r.t_max));
    double reference = std::abs(raw(center));
    for (const Complex c : {Complex(r.sigma_min, r.t_min), Complex(r.sigma_max, r.t_min), Complex(r.sigma_max, r.t_max),
                            Complex(r.sigma_min, r.t_max)})
      reference = std::max(reference, std::abs(eval(c)));
    const double qx = 0.25 * r.width(), qy = 0.25 * r.height();
    const Complex starts[] = {center,
                              center + Complex(-qx, -qy),
                              center + Complex(qx, qy),
                              center + Complex(qx, -qy),
                              center + Complex(-qx, qy)};
    std::vector<LocatedZero> roots;
    for (const Complex& start : starts) {
      if (static_cast<int>(roots.size()) >= w) break;
      const auto z = newton(start, r);
      if (!z || !r.contains(*z)) continue;
      const double res = std::abs(raw(*z));
      if (res > 1e-6 * reference) continue;
      const double sep = std::max(10.0 * opt_.tol, 1e-12 * std::abs(*z));
      bool fresh = true;
      for (const auto& q : roots) fresh = fresh && std::abs(q.s - *z) > sep;
      if (fresh) roots.push_back({*z, res, 1, 0});
    }
    return roots;
  }

  void record(StripOutput& out, const Rect& r, int w, std::vector<LocatedZero>& roots, std::int64_t id) {
    out.boxes.push_back({id, r, w});
    for (auto& z : roots) {
      z.box = id;
      out.zeros.push_back(z);
    }
  }

  const AnalyticFunction& f_;
  const ZeroSearchOptions& opt_;
  double max_segment_;
  double near_;
  std::map<std::pair<double, double>, Complex> cache_;
  std::size_t evaluations_ = 0;
};

json rect_json(const Rect& r) { return json::array({r.sigma_min, r.sigma_max, r.t_min, r.t_max}); }

json strip_to_json(std::size_t index, const StripOutput& s) {
  json zeros = json::array(), boxes = json::array();
  for (const auto& z : s.zeros) zeros.push_back({z.s.real(), z.s.imag(), z.residual, z.multiplicity, z.box});
  for (const auto& b : s.boxes) boxes.push_back({b.id, b.winding, b.rect.sigma_min, b.rect.sigma_max, b.rect.t_min, b.rect.t_max});
  return {{"strip", index}, {"evaluations", s.evaluations}, {"zeros", zeros}, {"boxes", boxes}};
}

StripOutput strip_from_json(const json& j) {
  StripOutput s;
  s.evaluations = j.at("evaluations").get<std::size_t>();
  for (const auto& z : j.at("zeros"))
    s.zeros.push_back({Complex(z[0].get<double>(), z[1].get<double>()), z[2].get<double>(), z[3].get<int>(),
                       z[4].get<std::int64_t>()});
  for (const auto& b : j.at("boxes"))
    s.boxes.push_back({b[0].get<std::int64_t>(),
                       Rect{b[2].get<double>(), b[3].get<double>(), b[4].get<double>(), b[5].get<double>()},
                       b[1].get<int>()});
  return s;
}

}  // namespace

ZeroSet find_zeros(const AnalyticFunction& f, const Rect& rect_in, const ZeroSearchOptions& opt) {
  if (!(rect_in.width() > 0.0) || !(rect_in.height() > 0.0) || !std::isfinite(rect_in.width()) ||
      !std::isfinite(rect_in.height()))
    throw DomainError("spectra::find_zeros", "rectangle must have positive finite size");
  if (!(opt.tol > 0.0)) throw DomainError("spectra::find_zeros", "tol must be positive");
  Rect rect = rect_in;
  const double strip_h = opt.strip_height > 0.0 ? opt.strip_height : 2.0 * rect.width();
  const double max_segment =
      opt.max_segment > 0.0 ? opt.max_segment : 0.125 * std::min(rect.width(), std::min(rect.height(), strip_h));
  const std::size_t n_strips = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(rect.height() / strip_h)));

  // Strip edges, dithered where a horizontal cut passes near a zero.
  std::vector<double> edges(n_strips + 1);
  const double h = rect.height() / static_cast<double>(n_strips);
  for (int attempt = 0;; ++attempt) {
    if (attempt > opt.max_dither)
      throw NumericError("spectra::find_zeros", "contour dither failed on the rectangle boundary");
    for (std::size_t k = 0; k <= n_strips; ++k) edges[k] = rect.t_min + h * static_cast<double>(k);
    edges.back() = rect.t_max;
    std::vector<char> ok(n_strips + 1, 0);
    parallel_for(n_strips + 1, opt.threads, [&](std::size_t k) {
      StripSolver probe(f, opt, max_segment);
      const bool outer = k == 0 || k == n_strips;
      for (int d = 0; d <= opt.max_dither; ++d) {
        const double shift = d == 0 ? 0.0 : dither(d) * (outer ? 1e-3 : 0.3) * h;
        const double t = edges[k] + shift;
        if (probe.segment_arg({rect.sigma_min, t}, {rect.sigma_max, t})) {
          edges[k] = t;
          ok[k] = 1;
          return;
        }
      }
    });
    if (std::find(ok.begin(), ok.end(), 0) != ok.end())
      throw NumericError("spectra::find_zeros", "contour dither failed on a strip boundary");
    rect.t_min = edges.front();
    rect.t_max = edges.back();
    std::vector<char> vert(n_strips, 0);
    parallel_for(n_strips, opt.threads, [&](std::size_t k) {
      StripSolver probe(f, opt, max_segment);
      vert[k] = probe.segment_arg({rect.sigma_min, edges[k]}, {rect.sigma_min, edges[k + 1]}) &&
                probe.segment_arg({rect.sigma_max, edges[k]}, {rect.sigma_max, edges[k + 1]});
    });
    if (std::find(vert.begin(), vert.end(), 0) == vert.end()) break;
    const double shift = dither(attempt + 1) * 1e-3 * rect.width();
    rect.sigma_min = rect_in.sigma_min + shift;
    rect.sigma_max = rect_in.sigma_max - shift;
  }

  // Journal: header line identifying the search, then one line per strip.
  const json header = {{"journal", "pz-zeros"},
                       {"tag", opt.journal_tag},
                       {"rect", rect_json(rect)},
                       {"strips", n_strips},
                       {"tol", opt.tol},
                       {"max_segment", max_segment}};
  std::vector<std::optional<StripOutput>> results(n_strips);
  std::size_t resumed = 0;
  std::ofstream journal;
  std::mutex journal_mutex;
  if (!opt.journal.empty()) {
    std::ifstream in(opt.journal);
    bool have_header = false;
    if (in) {
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j;
        try {
          j = json::parse(line);
        } catch (const json::exception&) {
          break;  // torn final line from an interrupted run
        }
        if (!have_header) {
          if (j != header) throw DomainError("spectra::find_zeros", "journal " + opt.journal + " belongs to a different search");
          have_header = true;
          continue;
        }
        const std::size_t k = j.at("strip").get<std::size_t>();
        if (k < n_strips && !results[k]) {
          results[k] = strip_from_json(j);
          ++resumed;
        }
      }
    }
    journal.open(opt.journal, have_header ? std::ios::app : std::ios::trunc);
    if (!journal) throw DomainError("spectra::find_zeros", "cannot write journal " + opt.journal);
    if (!have_header) journal << header.dump() << '\n' << std::flush;
  }

  std::size_t done = resumed;
  parallel_for(n_strips, opt.threads, [&](std::size_t k) {
    if (results[k]) return;
    StripSolver solver(f, opt, max_segment);
    const Rect strip{rect.sigma_min, rect.sigma_max, edges[k], edges[k + 1]};
    const auto w = solver.winding(strip);
    if (!w) throw NumericError("spectra::find_zeros", "strip contour unresolved after boundary checks");
    StripOutput out = solver.solve(strip, *w);
    std::lock_guard lock(journal_mutex);
    if (journal.is_open()) journal << strip_to_json(k, out).dump() << '\n' << std::flush;
    results[k] = std::move(out);
    ++done;
    if (opt.progress) opt.progress(done, n_strips);
  });

  ZeroSet zs;
  zs.rect = rect;
  zs.tol = opt.tol;
  zs.strip_edges = edges;
  zs.resumed_strips = resumed;
  for (std::size_t k = 0; k < n_strips; ++k) {
    const StripOutput& s = *results[k];
    const std::int64_t base = static_cast<std::int64_t>(zs.boxes.size());
    zs.evaluations += s.evaluations;
    std::map<std::int64_t, std::int64_t> renumber;
    for (const auto& b : s.boxes) {
      renumber[b.id] = base + static_cast<std::int64_t>(renumber.size());
      zs.boxes.push_back({renumber[b.id], b.rect, b.winding});
    }
    for (auto z : s.zeros) {
      z.box = renumber.at(z.box);
      zs.zeros.push_back(z);
    }
  }
  return zs;
}

ZeroSet find_zeros(const ZetaFunction& z, const Rect& rect, const ZeroSearchOptions& opt_in) {
  if (rect.sigma_min < -1.0 || rect.sigma_max > 1.5)
    throw DomainError("spectra::find_zeros", "rectangle must lie within -1 <= Re(s) <= 1.5");
  ZeroSearchOptions opt = opt_in;
  if (opt.max_segment <= 0.0) opt.max_segment = 1.0 / (16.0 * z.b());
  if (opt.journal_tag.empty()) {
    std::ostringstream os;
    os.precision(17);
    os << "zeta b=" << z.b() << " grading=" << to_string(z.grading()) << " order=" << z.order();
    opt.journal_tag = os.str();
  }
  ZeroSet zs = find_zeros([&z](Complex s) { return z.value(s); }, rect, opt);
  zs.order = z.order();
  return zs;
}

std::vector<Complex> rescale_zeros(const ZeroSet& zs, double b) {
  std::vector<Complex> out;
  out.reserve(zs.zeros.size());
  const double shrink = std::exp(-b);
  for (const auto& z : zs.zeros)
    for (int m = 0; m < z.multiplicity; ++m) out.emplace_back(z.s.real() * b, z.s.imag() * shrink);
  return out;
}

std::vector<Complex> conjugate_closure(const ZeroSet& zs, double eps) {
  std::vector<Complex> out;
  for (const auto& z : zs.zeros) {
    if (z.s.imag() < -eps) continue;
    for (int m = 0; m < z.multiplicity; ++m) {
      out.push_back(z.s);
      if (z.s.imag() > eps) out.push_back(std::conj(z.s));
    }
  }
  return out;
}

}  // namespace pz
