#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "pz/coding.hpp"

namespace pz {

struct ZetaEvaluation {
  Complex s;
  Complex value;
  int order = 0;               // truncation degree N
  double tail_estimate = 0.0;  // heuristic bound on the omitted coefficients
  std::size_t orbit_count = 0;
  Grading grading = Grading::reflection;
};

int default_order(Grading g);  // reflection: 20, word: 12

// Z(s) = det(I - L_s) through its power series det(I - z L_s) = sum a_k z^k
// at z = 1. The traces
//   T_k(s) = sum_{deg w = k} (k / |w|) e^{-s l(w)} / (1 - e^{-l(w)})
// over cyclically reduced words give a_k by the Newton identities
// k a_k = -sum_{j=1..k} T_j a_{k-j}; Z_N = a_0 + ... + a_N.
// The orbit table is built once; evaluations are const and thread-safe.
class ZetaFunction {
 public:
  ZetaFunction(const PantsSurface& s, Grading grading, int order, int threads = 0);
  explicit ZetaFunction(const PantsSurface& s) : ZetaFunction(s, Grading::reflection, 20) {}

  ZetaEvaluation eval(Complex s) const;
  Complex value(Complex s) const { return eval(s).value; }
  std::vector<Complex> coefficients(Complex s) const;  // a_0 .. a_N
  Complex trace(Complex s, int k) const;               // T_k(s)

  std::vector<ZetaEvaluation> eval_many(const std::vector<Complex>& points, int threads = 0) const;

  int order() const { return order_; }
  Grading grading() const { return grading_; }
  double b() const { return b_; }
  std::size_t orbit_count() const { return orbit_count_; }
  const LengthSpectrum& spectrum() const { return spectrum_; }

 private:
  Grading grading_;
  int order_;
  double b_;
  std::size_t orbit_count_ = 0;
  LengthSpectrum spectrum_;
  std::vector<std::vector<double>> coef_;  // weight / (1 - e^{-l}) per degree
};

// Heuristic tail from the last three nonzero coefficients: the larger of a
// quadratic fit of log|a_k| and a geometric continuation of the last ratio.
double coefficient_tail(const std::vector<Complex>& a);

// sum over cyclically reduced words of length n of e^{-s l} / (1 - e^{-l}).
Complex trace_term(Complex s, int n, const PantsSurface& surface);

ZetaEvaluation zeta_eval(Complex s, int N, const PantsSurface& surface, Grading grading = Grading::reflection);

struct EulerProductValue {
  Complex value;
  double tail_estimate = 0.0;
  bool convergent = true;  // Re(s) > delta
  std::size_t primitive_count = 0;
};

// prod_{k >= 0} prod_{l(gamma) <= cutoff} (1 - e^{-(s + k) l(gamma)}).
class EulerProduct {
 public:
  EulerProduct(const PantsSurface& s, double cutoff, int threads = 0);

  // delta drives the tail estimate and the convergence flag; NaN estimates
  // it from the growth of the length table.
  EulerProductValue eval(Complex s, double delta = std::numeric_limits<double>::quiet_NaN()) const;

  double cutoff() const { return cutoff_; }
  std::size_t primitive_count() const { return lengths_.size(); }
  double growth_rate() const { return growth_; }

 private:
  double cutoff_;
  double growth_ = 0.0;
  std::vector<double> lengths_;
};

EulerProductValue euler_product_eval(Complex s, double cutoff, const PantsSurface& surface,
                                     double delta = std::numeric_limits<double>::quiet_NaN());

struct PressureQuery {
  double t = 0.0;
  double value = 0.0;
  int n_used = 0;
};

// P_n(t) = (1/n) log sum_{|w| = n, cyclically reduced} e^{-t l(w)}.
class PressureFunction {
 public:
  PressureFunction(const PantsSurface& s, int max_n, int threads = 0);
  PressureQuery eval(double t, int n) const;
  int max_n() const { return max_n_; }

 private:
  int max_n_;
  LengthSpectrum spectrum_;
};

PressureQuery pressure(double t, int n, const PantsSurface& surface);

}  // namespace pz
