#include "pz/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pz/error.hpp"
#include "pz/kernels.hpp"
#include "pz/parallel.hpp"

namespace pz {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// log(1 + x) without cancellation for small x.
Complex log1p_complex(Complex x) {
  const double re = x.real(), im = x.imag();
  return {0.5 * std::log1p(2.0 * re + re * re + im * im), std::atan2(im, 1.0 + re)};
}

struct ComplexAccumulator {
  double re = 0.0, re_c = 0.0, im = 0.0, im_c = 0.0;
  static void add(double& sum, double& comp, double x) {
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  void add(Complex z) {
    add(re, re_c, z.real());
    add(im, im_c, z.imag());
  }
  Complex value() const { return {re + re_c, im + im_c}; }
};

}  // namespace

int default_order(Grading g) { return g == Grading::reflection ? 20 : 12; }

ZetaFunction::ZetaFunction(const PantsSurface& s, Grading grading, int order, int threads)
    : grading_(grading), order_(order), b_(s.b) {
  if (order < 1) throw DomainError("zeta::zeta_eval", "truncation order must be at least 1");
  SpectrumOptions opt;
  opt.grading = grading;
  opt.max_degree = order;
  opt.threads = threads;
  spectrum_ = length_spectrum(s, opt);
  orbit_count_ = spectrum_.word_count;
  coef_.resize(order + 1);
  for (int k = 1; k <= order; ++k) {
    const SpectrumLevel& level = spectrum_.levels[k];
    coef_[k].resize(level.length.size());
    for (std::size_t i = 0; i < level.length.size(); ++i)
      coef_[k][i] = level.weight[i] / -std::expm1(-level.length[i]);
  }
}

Complex ZetaFunction::trace(Complex s, int k) const {
  if (k < 1 || k > order_) throw DomainError("zeta::trace_term", "degree outside the orbit table");
  const auto& len = spectrum_.levels[k].length;
  return kernels::exp_sum(len.data(), coef_[k].data(), len.size(), s);
}

std::vector<Complex> ZetaFunction::coefficients(Complex s) const {
  std::vector<Complex> t(order_ + 1), a(order_ + 1);
  for (int k = 1; k <= order_; ++k) t[k] = spectrum_.levels[k].length.empty() ? Complex{} : trace(s, k);
  a[0] = 1.0;
  for (int k = 1; k <= order_; ++k) {
    ComplexAccumulator acc;
    for (int j = 1; j <= k; ++j)
      if (t[j] != Complex{}) acc.add(t[j] * a[k - j]);
    a[k] = -acc.value() / static_cast<double>(k);
  }
  return a;
}

double coefficient_tail(const std::vector<Complex>& a) {
  std::vector<int> idx;
  for (int k = static_cast<int>(a.size()) - 1; k >= 1 && idx.size() < 3; --k)
    if (std::abs(a[k]) > 0.0) idx.push_back(k);
  if (idx.empty()) return 0.0;
  const double last = std::abs(a[idx[0]]);
  if (idx.size() < 3) return last;
  std::reverse(idx.begin(), idx.end());
  const double x0 = idx[0], x1 = idx[1], x2 = idx[2];
  const double y0 = std::log(std::abs(a[idx[0]])), y1 = std::log(std::abs(a[idx[1]])),
               y2 = std::log(last);
  const int stride = idx[2] - idx[1];

  // Geometric continuation of the last ratio.
  double geometric;
  const double ratio = std::exp(y2 - y1);
  geometric = ratio < 0.9 ? last * ratio / (1.0 - ratio) : last * 10.0;

  // Quadratic through the three points, summed while it decreases.
  const double d01 = (y1 - y0) / (x1 - x0), d12 = (y2 - y1) / (x2 - x1);
  const double c2 = (d12 - d01) / (x2 - x0);
  double quadratic = 0.0;
  double prev = y2;
  for (int j = 1; j <= 64; ++j) {
    const double x = x2 + j * stride;
    const double y = y2 + d12 * (x - x2) + c2 * (x - x2) * (x - x1);
    if (y >= prev) {
      quadratic = geometric;
      break;
    }
    quadratic += std::exp(y);
    prev = y;
    if (y < std::log(last) - 40.0) break;
  }
  return std::max(geometric, quadratic);
}

ZetaEvaluation ZetaFunction::eval(Complex s) const {
  const std::vector<Complex> a = coefficients(s);
  ComplexAccumulator acc;
  for (const Complex& x : a) acc.add(x);
  ZetaEvaluation out;
  out.s = s;
  out.value = acc.value();
  out.order = order_;
  out.grading = grading_;
  out.orbit_count = orbit_count_;
  // Truncation tails can fall below what the summation itself resolves.
  double magnitude = 0.0;
  for (const Complex& x : a) magnitude += std::abs(x);
  const double rounding = 4.0 * std::numeric_limits<double>::epsilon() * order_ * magnitude;
  out.tail_estimate = std::max(coefficient_tail(a), rounding);
  if (!finite(out.value) || !std::isfinite(out.tail_estimate))
    throw NumericError("zeta::zeta_eval",
                       "non-finite value at s = (" + std::to_string(s.real()) + ", " + std::to_string(s.imag()) +
                           "); reduce -Re(s) or the truncation order");
  return out;
}

std::vector<ZetaEvaluation> ZetaFunction::eval_many(const std::vector<Complex>& points, int threads) const {
  std::vector<ZetaEvaluation> out(points.size());
  parallel_for(points.size(), threads, [&](std::size_t i) { out[i] = eval(points[i]); });
  return out;
}

Complex trace_term(Complex s, int n, const PantsSurface& surface) {
  if (n < 1) throw DomainError("zeta::trace_term", "n must be at least 1");
  return ZetaFunction(surface, Grading::word, n).trace(s, n);
}

ZetaEvaluation zeta_eval(Complex s, int N, const PantsSurface& surface, Grading grading) {
  return ZetaFunction(surface, grading, N).eval(s);
}

EulerProduct::EulerProduct(const PantsSurface& s, double cutoff, int threads) : cutoff_(cutoff) {
  lengths_ = primitive_lengths(s, cutoff, 200'000'000, threads).length;
  // Growth rate from N(t) ~ e^{gt} / (g t) between cutoff/2 and cutoff.
  const double half = 0.5 * cutoff;
  const auto n_half = std::upper_bound(lengths_.begin(), lengths_.end(), half) - lengths_.begin();
  if (n_half >= 8 && lengths_.size() > static_cast<std::size_t>(n_half)) {
    const double g = (std::log(static_cast<double>(lengths_.size()) / n_half) + std::log(2.0)) / half;
    growth_ = g;
  }
}

EulerProductValue EulerProduct::eval(Complex s, double delta) const {
  if (!std::isfinite(delta)) delta = growth_;
  ComplexAccumulator acc;
  double magnitude = 0.0;
  for (double len : lengths_) {
    for (int k = 0;; ++k) {
      const Complex x = -std::exp(-(s + static_cast<double>(k)) * len);
      if (std::abs(x) < 1e-18) break;
      const Complex term = log1p_complex(x);
      acc.add(term);
      magnitude += std::abs(term);
    }
  }
  EulerProductValue out;
  out.value = std::exp(acc.value());
  out.primitive_count = lengths_.size();
  out.convergent = s.real() > delta;
  const double gap = s.real() - delta;
  if (gap > 0.0) {
    const double log_tail = std::exp(-gap * cutoff_) / (cutoff_ * gap);
    const double rounding = 4.0 * std::numeric_limits<double>::epsilon() * (magnitude + std::abs(acc.value()) + 1.0);
    out.tail_estimate = std::abs(out.value) * (std::expm1(log_tail) + rounding);
  } else {
    out.tail_estimate = std::numeric_limits<double>::infinity();
  }
  return out;
}

EulerProductValue euler_product_eval(Complex s, double cutoff, const PantsSurface& surface, double delta) {
  return EulerProduct(surface, cutoff).eval(s, delta);
}

PressureFunction::PressureFunction(const PantsSurface& s, int max_n, int threads) : max_n_(max_n) {
  if (max_n < 2) throw DomainError("zeta::pressure", "n must be at least 2");
  SpectrumOptions opt;
  opt.grading = Grading::word;
  opt.max_degree = max_n;
  opt.threads = threads;
  spectrum_ = length_spectrum(s, opt);
}

PressureQuery PressureFunction::eval(double t, int n) const {
  if (n < 2 || n > max_n_) throw DomainError("zeta::pressure", "n outside the orbit table");
  const SpectrumLevel& level = spectrum_.levels[n];
  const double sum = kernels::exp_sum_real(level.length.data(), level.count.data(), level.length.size(), t);
  if (!(sum > 0.0) || !std::isfinite(sum)) throw NumericError("zeta::pressure", "orbit sum over- or underflowed");
  return {t, std::log(sum) / n, n};
}

PressureQuery pressure(double t, int n, const PantsSurface& surface) { return PressureFunction(surface, n).eval(t, n); }

}  // namespace pz
