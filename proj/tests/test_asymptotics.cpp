#include "common.hpp"
#include "pz/error.hpp"

using namespace pz;
using pzt::uniform;

namespace {

constexpr double kPi = std::numbers::pi;
const double kLn2 = std::log(2.0);

}  // namespace

TEST_SUITE("asymptotics") {
  TEST_CASE("transition matrix") {
    CHECK((matrix_B(0.0) - Matrix6::Identity()).norm() < 1e-15);
    const Matrix6 one = matrix_B(1.0);
    for (int i = 0; i < 6; ++i) CHECK(std::abs(one.row(i).sum() - 4.0) < 1e-15);
    const Eigen::ComplexEigenSolver<Matrix6> es(one);
    double rho = 0.0;
    for (int i = 0; i < 6; ++i) rho = std::max(rho, std::abs(es.eigenvalues()[i]));
    CHECK(std::abs(rho - 4.0) < 1e-12);
    const Complex z(0.3, 0.4);
    const Matrix6 m = matrix_B(z);
    CHECK(std::abs(m(0, 4) - z * z) < 1e-15);
    CHECK(m(0, 2) == Complex{});
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        const Complex e = m(i, j);
        const bool ok = e == Complex{} || e == Complex(1.0) || e == z || std::abs(e - z * z) < 1e-15;
        CHECK(ok);
      }
  }

  TEST_CASE("approximate determinant") {
    for (double b : {2.0, 4.0}) {
      CHECK(std::abs(approx_det(30.0, 0.7, b) - 1.0) < 1e-12);
      // At t = 0 the largest eigenvalue 4 vanishes the determinant at ln 2.
      CHECK(std::abs(approx_det(kLn2, 0.0, b)) < 1e-12);
      for (int i = 0; i < 10; ++i) {
        const double s = uniform(0.0, 1.0), t = uniform(-3.0, 3.0);
        CHECK(std::abs(approx_det(s, -t, b) - std::conj(approx_det(s, t, b))) < 1e-12);
        CHECK(std::abs(approx_det_figure(s, -t, b) - std::conj(approx_det_figure(s, t, b))) < 1e-12);
      }
    }
    CHECK(parse_phase_sign("printed") == PhaseSign::printed);
    CHECK(parse_parameterization("figure") == Parameterization::figure);
    CHECK(std::string(to_string(PhaseSign::corrected)) == "corrected");
    CHECK_THROWS_AS(parse_phase_sign("x"), DomainError);
  }

  TEST_CASE("curve examples") {
    CHECK(std::abs(curve_sigma(1, kPi) - kLn2) < 1e-12);
    CHECK(std::abs(curve_sigma(2, 0.0) - kLn2) < 1e-12);
    CHECK(std::abs(curve_sigma(4, 0.0)) < 1e-12);
    for (int j = 1; j <= 4; ++j)
      for (double t = -3.0; t <= 3.0; t += 0.37) {
        const double s = curve_sigma(j, t);
        if (std::isfinite(s)) CHECK(s <= kLn2 + 1e-12);
        CHECK(std::abs(curve_point(j, t) - Complex(s, t)) < 1e-15);
      }
    CHECK_THROWS_AS(curve_sigma(0, 1.0), DomainError);
    CHECK_THROWS_AS(curve_sigma(5, 1.0), DomainError);
    CHECK_THROWS_AS(curve_sigma(1, 0.0), DomainError);
    CHECK_THROWS_AS(curve_sigma(2, kPi), DomainError);
  }

  TEST_CASE("curves match the eigenvalues") {
    for (int i = 0; i < 40; ++i) {
      const double t = uniform(-kPi, kPi);
      CHECK(curve_eigen_mismatch(t) < 1e-9);
      const auto e = curve_det_consistency(t);
      CHECK(std::is_sorted(e.begin(), e.end()));
    }
  }

  TEST_CASE("Hausdorff distance") {
    const auto c = clipped_curve_points(kPi, 1e-3);
    REQUIRE(!c.empty());
    CHECK(hausdorff_distance(c, c) == 0.0);
    const std::vector<Complex> one = {Complex(kLn2, kPi)};
    CHECK(directed_distance(one, c) < 1e-3);
    const std::vector<Complex> a = {0.0, 1.0}, b = {Complex(0.0, 0.5)};
    CHECK(std::abs(directed_distance(a, b) - std::sqrt(1.25)) < 1e-15);
    CHECK(std::abs(directed_distance(b, a) - 0.5) < 1e-15);
    CHECK(std::abs(hausdorff_distance(a, b) - std::sqrt(1.25)) < 1e-15);
    for (const auto& p : c) {
      CHECK(p.real() >= -1e-12);
      CHECK(p.real() <= kLn2 + 1e-12);
    }
  }

  TEST_CASE("curve sampling") {
    const auto s = sample_curve(1, 2.0, kPi, 1e-2, 0.0, kLn2);
    REQUIRE(s.size() > 10);
    for (const auto& p : s) {
      CHECK(p.curve == 1);
      CHECK(p.sigma >= 0.0);
      CHECK(std::abs(p.sigma - curve_sigma(1, p.t)) < 1e-12);
    }
  }

  TEST_CASE("almost period defect") {
    std::vector<Complex> zs;
    const double b = 3.0, period = kPi * std::exp(b);
    for (int k = 0; k < 8; ++k) zs.push_back(Complex(0.1, 0.3 + k * period));
    const PeriodDefect d0 = almost_period_defect(zs, b, 0, 0.0, 8 * period);
    CHECK(d0.distance == 0.0);
    const PeriodDefect d1 = almost_period_defect(zs, b, 1, 0.0, 8 * period);
    CHECK(d1.distance < 1e-9);
    CHECK(d1.matched > 0);
  }

  TEST_CASE("approximation improves with b") {
    std::vector<double> med;
    for (double b : {2.0, 4.0}) {
      const ZetaFunction& z = pzt::zeta(b);
      std::vector<double> r;
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) r.push_back(approx_theorem_residual(z, kLn2 * (i + 0.5) / 5, kPi * (j + 0.5) / 5));
      std::nth_element(r.begin(), r.begin() + r.size() / 2, r.end());
      med.push_back(r[r.size() / 2]);
    }
    CHECK(med[1] < med[0]);
  }

  TEST_CASE("approximate zeros lie on the curves") {
    const auto zs = approx_det_zeros(4.0, kPi);
    REQUIRE(!zs.empty());
    for (const auto& z : zs) {
      // One factor 1 - mu of the determinant vanishes; the others may be huge.
      const double b = 4.0;
      const Complex factor = std::exp(Complex(-2.0 * z.real(), -2.0 * z.imag() * b * std::exp(b)));
      const Eigen::ComplexEigenSolver<Matrix6> es(matrix_B(std::polar(1.0, -z.imag())), false);
      double best = 1e300;
      for (int i = 0; i < 6; ++i) best = std::min(best, std::abs(1.0 - factor * es.eigenvalues()[i]));
      CHECK(best < 1e-3);  // linear interpolation between eigenvalue samples
      CHECK(z.real() <= kLn2 + 1e-9);
    }
  }
}
