#include <cstdio>
#include <filesystem>

#include "common.hpp"
#include "pz/error.hpp"

using namespace pz;
using pzt::uniform;

namespace {

constexpr double kDelta4 = 0.1728876161;

std::vector<Complex> sorted(std::vector<Complex> v) {
  std::sort(v.begin(), v.end(), [](Complex x, Complex y) {
    return x.imag() != y.imag() ? x.imag() < y.imag() : x.real() < y.real();
  });
  return v;
}

std::vector<Complex> points(const ZeroSet& zs) {
  std::vector<Complex> v;
  for (const auto& z : zs.zeros) v.push_back(z.s);
  return sorted(v);
}

// How far truncation and rounding can move a zero: tail / |Z'|.
double uncertainty(const ZetaFunction& z, Complex s) {
  const double h = 1e-6;
  const Complex d = (z.value(s + h) - z.value(s - h)) / (2.0 * h);
  return z.eval(s).tail_estimate / std::abs(d);
}

}  // namespace

TEST_SUITE("spectra") {
  TEST_CASE("argument principle on a polynomial") {
    const std::vector<Complex> roots = {{0.3, 0.2}, {0.7, 1.5}, {0.5, 1.5001}, {2.0, 0.5}};
    const AnalyticFunction f = [&](Complex s) {
      Complex p = 1.0;
      for (Complex r : roots) p *= s - r;
      return p;
    };
    ZeroSearchOptions opt;
    opt.tol = 1e-12;
    const ZeroSet zs = find_zeros(f, Rect{0.0, 1.0, 0.0, 2.0}, opt);
    CHECK(zs.total_winding() == 3);
    REQUIRE(zs.zeros.size() == 3);
    const auto got = points(zs);
    const auto want = sorted({roots[0], roots[1], roots[2]});
    for (std::size_t i = 0; i < 3; ++i) CHECK(std::abs(got[i] - want[i]) < 1e-9);
    CHECK_THROWS_AS(find_zeros(f, Rect{1.0, 0.0, 0.0, 1.0}, opt), DomainError);
  }

  TEST_CASE("the real zero at delta") {
    const ZetaFunction& z = pzt::zeta(4.0);
    const ZeroSet zs = find_zeros(z, Rect{0.1, 0.25, -0.5, 0.5}, {});
    REQUIRE(zs.zeros.size() == 1);
    CHECK(std::abs(zs.zeros[0].s - kDelta4) < 1e-8);
    CHECK(zs.zeros[0].residual < 1e-6);
    const DimensionResult d = hausdorff_dimension(pzt::surface(4.0));
    CHECK(std::abs(d.delta - zs.zeros[0].s.real()) < 1e-8);
    CHECK(std::abs(largest_real_zero(z, 1e-12) - d.delta) < 1e-10);
  }

  TEST_CASE("dimension decreases with b") {
    double prev = 1.0;
    for (double b : {2.0, 3.0, 4.0}) {
      const DimensionResult d = hausdorff_dimension(pzt::surface(b));
      CHECK(d.delta < prev);
      CHECK(d.delta > 0.0);
      CHECK(d.agreement < 1e-4);
      prev = d.delta;
      // Rescaling sends delta near ln 2.
      ZeroSet zs;
      zs.zeros.push_back({Complex(d.delta, 0.0)});
      const auto r = rescale_zeros(zs, b);
      CHECK(std::abs(r[0].real() - std::log(2.0)) < 0.1);
    }
  }

  TEST_CASE("no zeros right of delta") {
    const ZetaFunction& z = pzt::zeta(4.0);
    const ZeroSet zs = find_zeros(z, Rect{kDelta4 + 0.05, 1.0, 0.0, 10.0}, {});
    CHECK(zs.zeros.empty());
    CHECK(zs.total_winding() == 0);
  }

  TEST_CASE("conjugate rectangles give conjugate zeros") {
    const ZetaFunction& z = pzt::zeta(4.0);
    ZeroSearchOptions opt;
    opt.tol = 1e-10;
    const ZeroSet up = find_zeros(z, Rect{-0.02, 0.2, 20.0, 40.0}, opt);
    const ZeroSet down = find_zeros(z, Rect{-0.02, 0.2, -40.0, -20.0}, opt);
    REQUIRE(up.zeros.size() == down.zeros.size());
    REQUIRE(!up.zeros.empty());
    const auto u = points(up);
    std::vector<Complex> d;
    for (const auto& x : down.zeros) d.push_back(std::conj(x.s));
    d = sorted(d);
    for (std::size_t i = 0; i < u.size(); ++i) CHECK(std::abs(u[i] - d[i]) <= 10.0 * uncertainty(z, u[i]) + 1e-8);

    const auto closure = conjugate_closure(up);
    CHECK(closure.size() == 2 * up.zeros.size());
  }

  TEST_CASE("zeros are stable in the truncation order") {
    const Rect r{-0.02, 0.2, 20.0, 40.0};
    const ZeroSet a = find_zeros(pzt::zeta(4.0, 18), r, {});
    const ZeroSet b = find_zeros(pzt::zeta(4.0, 20), r, {});
    REQUIRE(a.zeros.size() == b.zeros.size());
    REQUIRE(!a.zeros.empty());
    const auto pa = points(a), pb = points(b);
        // Zeros come as simple zeros and near-double pairs along the doubled
    // curves. A pair splits like the square root of the perturbation, its
    // centroid moves linearly.
    auto groups = [](const std::vector<Complex>& v) {
      std::vector<std::pair<Complex, int>> g;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i + 1 < v.size() && std::abs(v[i + 1] - v[i]) < 1e-3) {
          g.push_back({0.5 * (v[i] + v[i + 1]), 2});
          ++i;
        } else {
          g.push_back({v[i], 1});
        }
      }
      return g;
    };
    const auto ga = groups(pa), gb = groups(pb);
    REQUIRE(ga.size() == gb.size());
    int pairs = 0;
    for (std::size_t i = 0; i < ga.size(); ++i) {
      CHECK(ga[i].second == gb[i].second);
      if (ga[i].first.real() < 0.0) continue;  // coefficients stop decaying near Re s = 0
      CHECK(std::abs(ga[i].first - gb[i].first) < (ga[i].second == 1 ? 1e-9 : 1e-6));
      pairs += ga[i].second == 2;
    }
    CHECK(pairs > 0);
  }

  TEST_CASE("random points are well separated from zero") {
    const ZetaFunction& z = pzt::zeta(4.0);
    int above = 0;
    for (int i = 0; i < 30; ++i) {
      const ZetaEvaluation e = z.eval(Complex(uniform(-0.02, 0.2), uniform(0.0, 100.0)));
      if (std::abs(e.value) > e.tail_estimate) ++above;
    }
    CHECK(above == 30);
  }

  TEST_CASE("journal resume") {
    const auto dir = std::filesystem::temp_directory_path() / "pz-spectra-journal";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "z.jsonl").string();
    std::filesystem::remove(path);
    ZeroSearchOptions opt;
    opt.journal = path;
    opt.journal_tag = "b4-test";
    opt.strip_height = 5.0;
    const Rect r{-0.02, 0.2, 0.0, 30.0};
    const ZeroSet first = find_zeros(pzt::zeta(4.0), r, opt);
    CHECK(first.resumed_strips == 0);
    CHECK(std::filesystem::exists(path));
    const ZeroSet second = find_zeros(pzt::zeta(4.0), r, opt);
    CHECK(second.resumed_strips > 0);
    CHECK(second.resumed_strips == first.strip_edges.size() - 1);
    CHECK(second.evaluations == first.evaluations);  // counts are journaled per strip
    const auto p1 = points(first), p2 = points(second);
    REQUIRE(p1.size() == p2.size());
    for (std::size_t i = 0; i < p1.size(); ++i) CHECK(p1[i] == p2[i]);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("rescaling") {
    ZeroSet zs;
    zs.zeros.push_back({Complex(0.1, 2.0)});
    const auto r = rescale_zeros(zs, 3.0);
    CHECK(std::abs(r[0] - Complex(0.3, 2.0 * std::exp(-3.0))) < 1e-15);
  }
}
