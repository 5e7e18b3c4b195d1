#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pz/zeta.hpp"

namespace pz {

struct DimensionOptions {
  int min_n = 7;   // pressure escalation over odd n in [min_n, max_n]
  int max_n = 13;
  int order = 20;  // reflection order of the zeta root
  int threads = 0;
};

struct DimensionResult {
  double delta = 0.0;     // = method_b
  double method_a = 0.0;  // root of the pressure P_n(-t tau)
  double method_b = 0.0;  // largest real zero of Z
  double agreement = 0.0;
  int n_used = 0;
};

DimensionResult hausdorff_dimension(const PantsSurface& s, double tol = 1e-10, const DimensionOptions& opt = {});

// Root of t -> P_n(t) in (0, 1) by bisection.
double pressure_root(const PressureFunction& p, int n, double tol);
// Largest zero of Z on (lo, hi), scanning down from hi.
double largest_real_zero(const ZetaFunction& z, double tol, double lo = 1e-3, double hi = 1.0);

struct Rect {
  double sigma_min = 0.0, sigma_max = 0.0, t_min = 0.0, t_max = 0.0;

  double width() const { return sigma_max - sigma_min; }
  double height() const { return t_max - t_min; }
  bool contains(Complex s, double slack = 0.0) const {
    return s.real() >= sigma_min - slack && s.real() <= sigma_max + slack && s.imag() >= t_min - slack &&
           s.imag() <= t_max + slack;
  }
};

struct LocatedZero {
  Complex s;
  double residual = 0.0;  // |f(s)|
  int multiplicity = 1;   // > 1 only when a cluster could not be separated
  std::int64_t box = 0;
};

struct BoxRecord {
  std::int64_t id = 0;
  Rect rect;
  int winding = 0;
};

struct ZeroSet {
  std::vector<LocatedZero> zeros;
  Rect rect;                    // as searched, after any boundary dither
  int order = 0;
  double tol = 0.0;
  std::vector<BoxRecord> boxes; // isolating boxes, winding > 0
  std::vector<double> strip_edges;
  std::size_t evaluations = 0;
  std::size_t resumed_strips = 0;

  std::size_t total_winding() const;
  std::size_t total_multiplicity() const;
};

using AnalyticFunction = std::function<Complex(Complex)>;

struct ZeroSearchOptions {
  double tol = 1e-8;             // Newton step tolerance
  double strip_height = 0.0;     // 0: twice the rectangle width
  double max_segment = 0.0;      // longest contour step; 0: an eighth of the shorter side
  int max_depth = 48;            // box subdivisions
  int max_dither = 5;
  int threads = 0;
  std::string journal;           // resumable strip journal (JSON lines); empty = none
  std::string journal_tag;       // identifies the function in the journal header
  std::function<void(std::size_t done, std::size_t total)> progress;
};

// Argument-principle search: the rectangle is cut into strips along t, each
// strip is subdivided until every box has winding number <= 2, and Newton
// (central-difference derivative) from several starts isolates the zeros.
ZeroSet find_zeros(const AnalyticFunction& f, const Rect& rect, const ZeroSearchOptions& opt);
ZeroSet find_zeros(const ZetaFunction& z, const Rect& rect, const ZeroSearchOptions& opt);

// sigma + i t -> sigma b + i e^{-b} t.
std::vector<Complex> rescale_zeros(const ZeroSet& zs, double b);

// Zeros with Im >= 0 plus the conjugates of those with Im > eps.
std::vector<Complex> conjugate_closure(const ZeroSet& zs, double eps = 1e-9);

}  // namespace pz
