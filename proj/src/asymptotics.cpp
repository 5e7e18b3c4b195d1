#include "pz/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include <Eigen/Eigenvalues>

#include "pz/error.hpp"

namespace pz {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

Complex boundary_value(double t, PhaseSign sign) {
  return std::polar(1.0, sign == PhaseSign::corrected ? -t : t);
}

// Distance from t to the nearest point of offset + 2 pi Z.
double periodic_gap(double t, double offset) { return std::abs(std::remainder(t - offset, 2.0 * kPi)); }

// Unchecked sigma_j; -inf at the singular points.
double sigma_raw(int j, double t) {
  switch (j) {
    case 1: return std::log(std::abs(2.0 * std::sin(0.5 * t)));  // 2 - 2cos t = 4 sin^2(t/2)
    case 2: return std::log(std::abs(2.0 * std::cos(0.5 * t)));
    case 3:
    case 4: {
      const Complex e = std::polar(1.0, t), e2 = e * e;
      const Complex radicand = 4.0 - 3.0 * e2;
      const Complex root = std::sqrt(radicand);
      const Complex minus = 1.0 - 0.5 * e2 - 0.5 * e * root;
      const Complex plus = 1.0 - 0.5 * e2 + 0.5 * e * root;
      // minus * plus = (1 - e^{2it})^2; take the larger factor directly.
      const Complex sq = (1.0 - e2) * (1.0 - e2);
      Complex value;
      if (j == 3)
        value = std::abs(minus) >= std::abs(plus) ? minus : sq / plus;
      else
        value = std::abs(plus) >= std::abs(minus) ? plus : sq / minus;
      return 0.5 * std::log(std::abs(value));
    }
    default: throw DomainError("asymptotics::curve_point", "curve index must be 1..4");
  }
}

class PointGrid {
 public:
  explicit PointGrid(const std::vector<Complex>& pts) : pts_(pts) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& p : pts) {
      xmin = std::min(xmin, p.real());
      xmax = std::max(xmax, p.real());
      ymin = std::min(ymin, p.imag());
      ymax = std::max(ymax, p.imag());
    }
    const double area = std::max((xmax - xmin) * (ymax - ymin), 1e-18);
    cell_ = std::max(std::sqrt(area / static_cast<double>(pts.size())) * 2.0, 1e-9);
    cell_ = std::max(cell_, std::max(xmax - xmin, ymax - ymin) / 4096.0);
    x0_ = xmin;
    y0_ = ymin;
    nx_ = static_cast<long>((xmax - xmin) / cell_) + 1;
    ny_ = static_cast<long>((ymax - ymin) / cell_) + 1;
    for (std::size_t i = 0; i < pts.size(); ++i) cells_[key(ix(pts[i].real()), iy(pts[i].imag()))].push_back(i);
  }

  double nearest(Complex q) const {
    const long cx = ix(q.real()), cy = iy(q.imag());
    double best = std::numeric_limits<double>::infinity();
    const long reach = std::max(nx_, ny_) + std::max(std::abs(cx), std::abs(cy)) + 2;
    std::size_t probes = 0;
    for (long r = 0; r <= reach; ++r) {
      // Far from every occupied cell a linear scan is cheaper.
      probes += r == 0 ? 1 : 8 * static_cast<std::size_t>(r);
      if (probes > 4 * pts_.size() + 64) {
        for (const auto& p : pts_) best = std::min(best, std::abs(p - q));
        return best;
      }
      for (long dx = -r; dx <= r; ++dx)
        for (long dy = -r; dy <= r; ++dy) {
          if (std::max(std::abs(dx), std::abs(dy)) != r) continue;
          const auto it = cells_.find(key(cx + dx, cy + dy));
          if (it == cells_.end()) continue;
          for (std::size_t i : it->second) best = std::min(best, std::abs(pts_[i] - q));
        }
      if (best <= static_cast<double>(r) * cell_) break;
    }
    return best;
  }

 private:
  long ix(double x) const { return static_cast<long>(std::floor((x - x0_) / cell_)); }
  long iy(double y) const { return static_cast<long>(std::floor((y - y0_) / cell_)); }
  static long long key(long x, long y) { return (static_cast<long long>(x) << 32) ^ static_cast<long long>(y & 0xffffffffL); }

  const std::vector<Complex>& pts_;
  double cell_ = 1.0, x0_ = 0.0, y0_ = 0.0;
  long nx_ = 1, ny_ = 1;
  std::unordered_map<long long, std::vector<std::size_t>> cells_;
};

}  // namespace

Matrix6 matrix_B(Complex z) {
  const Complex o(1.0, 0.0), n(0.0, 0.0), z2 = z * z;
  Matrix6 m;
  m << o, z, n, n, z2, z,
       z, o, z2, z, n, n,
       n, n, o, z, z, z2,
       z2, z, z, o, n, n,
       n, n, z, z2, o, z,
       z, z2, n, n, z, o;
  return m;
}

const char* to_string(PhaseSign s) { return s == PhaseSign::corrected ? "corrected" : "printed"; }
const char* to_string(Parameterization p) { return p == Parameterization::theorem ? "theorem" : "figure"; }

PhaseSign parse_phase_sign(std::string_view text) {
  if (text == "corrected") return PhaseSign::corrected;
  if (text == "printed") return PhaseSign::printed;
  throw DomainError("asymptotics::approx_det", "sign must be 'corrected' or 'printed'");
}

Parameterization parse_parameterization(std::string_view text) {
  if (text == "theorem") return Parameterization::theorem;
  if (text == "figure") return Parameterization::figure;
  throw DomainError("asymptotics::approx_det", "parameterization must be 'theorem' or 'figure'");
}

Complex approx_det(double sigma, double t, double b, PhaseSign sign) {
  if (sigma < -300.0) throw NumericError("asymptotics::approx_det", "sigma too negative; the scalar factor overflows");
  const Complex factor = std::exp(Complex(-2.0 * sigma, -2.0 * t * b * std::exp(b)));
  const Matrix6 m = Matrix6::Identity() - factor * matrix_B(boundary_value(t, sign));
  return m.partialPivLu().determinant();
}

Complex approx_det_figure(double sigma, double t, double b, PhaseSign sign) {
  return approx_det(b * sigma, std::exp(-b) * t, b, sign);
}

double curve_sigma(int j, double t) {
  if (j < 1 || j > 4) throw DomainError("asymptotics::curve_point", "curve index must be 1..4");
  const bool singular = (j == 1 && periodic_gap(t, 0.0) < 1e-12) || (j == 2 && periodic_gap(t, kPi) < 1e-12) ||
                        (j == 3 && periodic_gap(t, 0.0) < 1e-12);
  if (singular) throw DomainError("asymptotics::curve_point", "curve diverges to -inf here");
  return sigma_raw(j, t);
}

Complex curve_point(int j, double t) { return {curve_sigma(j, t), t}; }

std::array<double, 6> eigen_sigmas(double t) {
  Eigen::ComplexEigenSolver<Matrix6> es(matrix_B(std::polar(1.0, t)), false);
  if (es.info() != Eigen::Success) throw NumericError("asymptotics::curve_det_consistency", "eigensolver failed");
  std::array<double, 6> out;
  for (int i = 0; i < 6; ++i) out[i] = 0.5 * std::log(std::abs(es.eigenvalues()[i]));
  std::sort(out.begin(), out.end());
  return out;
}

std::array<double, 6> curve_sigmas(double t) {
  std::array<double, 6> out{sigma_raw(1, t), sigma_raw(2, t), sigma_raw(3, t),
                            sigma_raw(3, t), sigma_raw(4, t), sigma_raw(4, t)};
  std::sort(out.begin(), out.end());
  return out;
}

double curve_eigen_mismatch(double t) {
  const auto e = eigen_sigmas(t), c = curve_sigmas(t);
  double worst = 0.0;
  for (int i = 0; i < 6; ++i) worst = std::max(worst, std::abs(e[i] - c[i]));
  return worst;
}

std::vector<double> curve_det_consistency(double t, double tol) {
  for (int j = 1; j <= 3; ++j) (void)curve_sigma(j, t);
  const double mismatch = curve_eigen_mismatch(t);
  if (!(mismatch <= tol))
    throw NumericError("asymptotics::curve_det_consistency",
                       "eigenvalue moduli differ from the curve formulas by " + std::to_string(mismatch));
  const auto e = eigen_sigmas(t);
  return {e.begin(), e.end()};
}

std::vector<CurveSample> sample_curve(int j, double t0, double t1, double step, double sigma_min, double sigma_max) {
  if (j < 1 || j > 4) throw DomainError("asymptotics::curve_point", "curve index must be 1..4");
  if (!(step > 0.0) || !(t1 >= t0)) throw DomainError("asymptotics::sample_curve", "invalid range or step");
  auto inside = [&](double s) { return std::isfinite(s) && s >= sigma_min && s <= sigma_max; };
  std::vector<CurveSample> out;
  auto keep = [&](double t, double s) {
    if (inside(s)) out.push_back({j, t, s});
  };
  // Points at most `step` apart: bisect each coarse step while the chord is longer.
  auto refine = [&](auto&& self, double ta, double sa, double tb, double sb, int depth) -> void {
    const bool a_in = inside(sa), b_in = inside(sb);
    const double chord = std::isfinite(sa) && std::isfinite(sb) ? std::hypot(tb - ta, sb - sa) : 1e300;
    if ((!a_in && !b_in && depth > 0) || chord <= step || depth >= 40) {
      keep(tb, sb);
      return;
    }
    const double tm = 0.5 * (ta + tb), sm = sigma_raw(j, tm);
    self(self, ta, sa, tm, sm, depth + 1);
    self(self, tm, sm, tb, sb, depth + 1);
  };
  const long n = std::max(1L, static_cast<long>(std::ceil((t1 - t0) / step)));
  double ta = t0, sa = sigma_raw(j, t0);
  keep(ta, sa);
  for (long i = 1; i <= n; ++i) {
    const double tb = i == n ? t1 : t0 + (t1 - t0) * static_cast<double>(i) / static_cast<double>(n);
    const double sb = sigma_raw(j, tb);
    refine(refine, ta, sa, tb, sb, 0);
    ta = tb;
    sa = sb;
  }
  return out;
}

std::vector<Complex> clipped_curve_points(double window, double step) {
  std::vector<Complex> out;
  for (int j = 1; j <= 4; ++j)
    for (const auto& p : sample_curve(j, -window, window, step, 0.0, kLn2)) out.emplace_back(p.sigma, p.t);
  return out;
}

double directed_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  if (a.empty()) return 0.0;
  if (b.empty()) return std::numeric_limits<double>::infinity();
  const PointGrid grid(b);
  double worst = 0.0;
  for (const auto& p : a) worst = std::max(worst, grid.nearest(p));
  return worst;
}

double hausdorff_distance(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  return std::max(directed_distance(a, b), directed_distance(b, a));
}

double zero_curve_hausdorff(const std::vector<Complex>& rescaled, double window, double step) {
  std::vector<Complex> clipped;
  for (const auto& z : rescaled)
    if (z.real() >= 0.0 && z.real() <= kLn2 && std::abs(z.imag()) <= window) clipped.push_back(z);
  if (clipped.empty()) throw DomainError("asymptotics::zero_curve_hausdorff", "no zeros inside the clipped window");
  return hausdorff_distance(clipped, clipped_curve_points(window, step));
}

PeriodDefect almost_period_defect(const std::vector<Complex>& zeros, double b, int k, double t_lo, double t_hi) {
  if (k < 0) throw DomainError("asymptotics::almost_period_defect", "k must be nonnegative");
  if (k == 0) return {0.0, 0.0, zeros.size()};
  const double period = kPi * std::exp(b);
  const double shift = period * k;
  if (t_hi - t_lo < (k + 1) * period)
    throw DomainError("asymptotics::almost_period_defect",
                      "zero set must cover a t-range of at least (k+1) pi e^b");
  const double reach = kPi / (2.0 * b);
  std::vector<Complex> base;
  for (const auto& z : zeros)
    if (z.imag() >= t_lo + reach && z.imag() + shift + reach <= t_hi - reach) base.push_back(z);
  if (base.empty() || zeros.empty()) throw DomainError("asymptotics::almost_period_defect", "no zeros to translate");
  const PointGrid grid(zeros);
  auto defect = [&](double eps) {
    double worst = 0.0;
    const Complex move(0.0, shift + eps);
    for (const auto& z : base) worst = std::max(worst, grid.nearest(z + move));
    return worst;
  };
  const int scan = 400;
  double best_eps = 0.0, best = defect(0.0);
  for (int i = 0; i <= scan; ++i) {
    const double eps = -reach + 2.0 * reach * i / scan;
    const double d = defect(eps);
    if (d < best) {
      best = d;
      best_eps = eps;
    }
  }
  double lo = best_eps - 2.0 * reach / scan, hi = best_eps + 2.0 * reach / scan;
  const double g = 0.6180339887498949;
  double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
  double f1 = defect(x1), f2 = defect(x2);
  for (int it = 0; it < 60; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - g * (hi - lo);
      f1 = defect(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + g * (hi - lo);
      f2 = defect(x2);
    }
  }
  const double mid = 0.5 * (lo + hi), fm = defect(mid);
  if (fm < best) {
    best = fm;
    best_eps = mid;
  }
  return {best_eps, best, base.size()};
}

PeriodDefect almost_period_defect(const ZeroSet& zs, double b, int k) {
  std::vector<Complex> pts;
  for (const auto& z : zs.zeros) pts.push_back(z.s);
  return almost_period_defect(pts, b, k, zs.rect.t_min, zs.rect.t_max);
}

double approx_theorem_residual(const ZetaFunction& z, double sigma, double t, PhaseSign sign) {
  const double b = z.b();
  const Complex s(sigma / b, t * std::exp(b));
  return std::abs(z.value(s) - approx_det(sigma, t, b, sign));
}

std::vector<Complex> approx_det_zeros(double b, double window, PhaseSign sign) {
  const double rate = 2.0 * b * std::exp(b);
  const double dt = std::min(1e-3, 0.1 / rate);
  const long steps = static_cast<long>(std::ceil(2.0 * window / dt));
  std::vector<Complex> out;
  auto eig = [&](double t) {
    Eigen::ComplexEigenSolver<Matrix6> es(matrix_B(boundary_value(t, sign)), false);
    std::array<Complex, 6> v;
    for (int i = 0; i < 6; ++i) v[i] = es.eigenvalues()[i];
    return v;
  };
  double t_prev = -window;
  auto lam = eig(t_prev);
  std::array<double, 6> theta;
  for (int i = 0; i < 6; ++i) theta[i] = std::arg(lam[i]) - rate * t_prev;
  for (long k = 1; k <= steps; ++k) {
    const double t = -window + 2.0 * window * static_cast<double>(k) / static_cast<double>(steps);
    auto next = eig(t);
    // Greedy continuation of the eigenvalue branches.
    std::array<Complex, 6> matched;
    std::array<bool, 6> used{};
    for (int i = 0; i < 6; ++i) {
      int best = -1;
      double best_d = 1e300;
      for (int j = 0; j < 6; ++j)
        if (!used[j] && std::abs(next[j] - lam[i]) < best_d) {
          best_d = std::abs(next[j] - lam[i]);
          best = j;
        }
      used[best] = true;
      matched[i] = next[best];
    }
    for (int i = 0; i < 6; ++i) {
      if (std::abs(lam[i]) < 1e-12 || std::abs(matched[i]) < 1e-12) {
        theta[i] = std::arg(matched[i]) - rate * t;
        continue;
      }
      const double th = theta[i] + std::arg(matched[i] / lam[i]) - rate * (t - t_prev);
      const double lo = std::min(theta[i], th), hi = std::max(theta[i], th);
      for (double m = std::ceil(lo / (2.0 * kPi)); m * 2.0 * kPi <= hi; m += 1.0) {
        const double w = (m * 2.0 * kPi - theta[i]) / (th - theta[i]);
        const double tz = t_prev + w * (t - t_prev);
        const double sz = 0.5 * ((1.0 - w) * std::log(std::abs(lam[i])) + w * std::log(std::abs(matched[i])));
        out.emplace_back(sz, tz);
      }
      theta[i] = th;
    }
    lam = matched;
    t_prev = t;
  }
  return out;
}

DensityProbe o2_probe(const ZeroSet& zs, double delta, double b, double radius) {
  if (!(radius > 0.0)) throw DomainError("asymptotics::o2_probe", "radius must be positive");
  DensityProbe p;
  p.center = Complex(0.5 * delta, 0.5 * kPi * std::exp(b));
  p.radius = radius;
  std::size_t total = 0;
  for (const auto& z : zs.zeros) {
    total += z.multiplicity;
    if (std::abs(z.s - p.center) <= radius) p.count += z.multiplicity;
  }
  p.density = p.count / (kPi * radius * radius);
  const double area = zs.rect.width() * zs.rect.height();
  p.mean_density = area > 0.0 ? total / area : 0.0;
  return p;
}

}  // namespace pz
