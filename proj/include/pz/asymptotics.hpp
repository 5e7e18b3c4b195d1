#pragma once

#include <Eigen/Dense>
#include <array>
#include <string_view>
#include <vector>

#include "pz/spectra.hpp"

namespace pz {

using Matrix6 = Eigen::Matrix<Complex, 6, 6>;

// The 6x6 transition pattern with entries in {0, 1, z, z^2}.
Matrix6 matrix_B(Complex z);

// Which boundary value enters the determinant: corrected uses B(e^{-it}),
// printed uses B(e^{it}). Both give the same eigenvalue moduli.
enum class PhaseSign { corrected, printed };
// Coordinates of approx_det arguments: theorem = rescaled (sigma/b + i t e^b
// is the zeta argument), figure = the zeta argument sigma + i t itself.
enum class Parameterization { theorem, figure };

const char* to_string(PhaseSign s);
const char* to_string(Parameterization p);
PhaseSign parse_phase_sign(std::string_view text);
Parameterization parse_parameterization(std::string_view text);

// det(I - exp(-2 sigma - 2 i t b e^b) B(e^{-+it})) in rescaled coordinates.
Complex approx_det(double sigma, double t, double b, PhaseSign sign = PhaseSign::corrected);
// Same determinant at the zeta argument s = sigma + i t:
// det(I - e^{-2 b s} B(exp(-+i e^{-b} t))).
Complex approx_det_figure(double sigma, double t, double b, PhaseSign sign = PhaseSign::corrected);

// sigma_j(t) of the curve C_j, j = 1..4 (principal square root).
double curve_sigma(int j, double t);
Complex curve_point(int j, double t);

// {1/2 ln |lambda_i(B(e^{it}))|}, sorted ascending.
std::array<double, 6> eigen_sigmas(double t);
// {sigma_1, sigma_2, sigma_3, sigma_3, sigma_4, sigma_4}, sorted ascending.
std::array<double, 6> curve_sigmas(double t);
// Returns eigen_sigmas(t); throws if the two multisets differ by more than tol.
std::vector<double> curve_det_consistency(double t, double tol = 1e-9);
double curve_eigen_mismatch(double t);

struct CurveSample {
  int curve = 0;
  double t = 0.0;
  double sigma = 0.0;
};

// Samples of C_j over [t0, t1] with sigma in [sigma_min, sigma_max] and
// consecutive kept points at most `step` apart.
std::vector<CurveSample> sample_curve(int j, double t0, double t1, double step, double sigma_min = -1e300,
                                      double sigma_max = 1e300);
// C intersected with {0 <= Re <= ln 2, |Im| <= window}.
std::vector<Complex> clipped_curve_points(double window, double step);

// Symmetric Hausdorff distance of finite planar sets (grid bucketing).
double hausdorff_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);
// sup over a of the distance to b.
double directed_distance(const std::vector<Complex>& a, const std::vector<Complex>& b);

// Rescaled zeros clipped to {0 <= Re <= ln 2, |Im| <= window} against the
// clipped curve union.
double zero_curve_hausdorff(const std::vector<Complex>& rescaled, double window, double step = 1e-3);

struct PeriodDefect {
  double epsilon = 0.0;
  double distance = 0.0;
  std::size_t matched = 0;
};

// Minimises over eps the one-sided matching distance between the zeros and
// their translates by i (pi k e^b + eps). t_lo, t_hi bound the searched range.
PeriodDefect almost_period_defect(const std::vector<Complex>& zeros, double b, int k, double t_lo, double t_hi);
PeriodDefect almost_period_defect(const ZeroSet& zs, double b, int k);

// |Z(sigma/b + i t e^b) - approx_det(sigma, t, b)|.
double approx_theorem_residual(const ZetaFunction& z, double sigma, double t, PhaseSign sign = PhaseSign::corrected);

// Discrete zeros of approx_det in rescaled coordinates with |t| <= window:
// sigma = 1/2 ln|lambda_i| where the phase of e^{-2itbe^b} lambda_i(t) is 0.
std::vector<Complex> approx_det_zeros(double b, double window, PhaseSign sign = PhaseSign::corrected);

struct DensityProbe {
  Complex center;
  double radius = 0.0;
  std::size_t count = 0;
  double density = 0.0;       // zeros per unit area in the disc
  double mean_density = 0.0;  // over the searched rectangle
};

// Zero density near delta/2 + i (pi/2) e^b.
DensityProbe o2_probe(const ZeroSet& zs, double delta, double b, double radius);

}  // namespace pz
