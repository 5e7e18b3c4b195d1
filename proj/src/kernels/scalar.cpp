#include <cmath>

#include "pz/kernels.hpp"

namespace pz::kernels::scalar {

namespace {

// Neumaier-compensated accumulator.
struct Accumulator {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return std::isfinite(sum) ? sum + comp : sum; }
};

}  // namespace

Complex exp_sum(const double* len, const double* coef, std::size_t n, Complex s) {
  Accumulator re, im;
  const double sigma = s.real(), tau = s.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double mag = coef[i] * std::exp(-sigma * len[i]);
    const double phase = tau * len[i];
    re.add(mag * std::cos(phase));
    im.add(-mag * std::sin(phase));
  }
  return {re.value(), im.value()};
}

double exp_sum_real(const double* len, const double* coef, std::size_t n, double t) {
  Accumulator acc;
  for (std::size_t i = 0; i < n; ++i) acc.add(coef[i] * std::exp(-t * len[i]));
  return acc.value();
}

}  // namespace pz::kernels::scalar
