#include "common.hpp"
#include "pz/error.hpp"

using namespace pz;
using pzt::surface;
using pzt::uniform;

namespace {

constexpr double kPi = std::numbers::pi;

// Nested golden-section search for the distance between two geodesics given
// as circles or diameters, along their Euclidean parameterization.
Complex point_on(const Geodesic& g, double u) {
  const auto [p, q] = g.endpoints();
  if (g.kind() == Geodesic::Kind::diameter) return p + (q - p) * u;
  const double a0 = std::arg(p - g.center());
  const double span = std::remainder(std::arg(q - g.center()) - a0, 2 * kPi);
  return g.center() + g.radius() * std::polar(1.0, a0 + span * u);
}

template <class F>
double golden(F f) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  double lo = 1e-9, hi = 1 - 1e-9;
  double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo), f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < 80; ++i) {
    if (f1 < f2) {
      hi = x2, x2 = x1, f2 = f1, x1 = hi - r * (hi - lo), f1 = f(x1);
    } else {
      lo = x1, x1 = x2, f1 = f2, x2 = lo + r * (hi - lo), f2 = f(x2);
    }
  }
  return std::min(f1, f2);
}

double search_distance(const Geodesic& g1, const Geodesic& g2) {
  return golden([&](double u) {
    const Complex z = point_on(g1, u);
    return golden([&](double v) { return hyperbolic_distance(z, point_on(g2, v)); });
  });
}

}  // namespace

TEST_SUITE("surface") {
  TEST_CASE("letters") {
    for (Letter g : kLetters) {
      CHECK(inverse(inverse(g)) == g);
      CHECK(inverse(g) != g);
      CHECK(letter_from_char(to_char(g)) == g);
    }
    CHECK_FALSE(letter_from_char('x').has_value());
  }

  TEST_CASE("mirror distances and funnel lengths") {
    for (double b : {1.0, 2.0, 3.0, 4.0, 6.0}) {
      const PantsSurface& s = surface(b);
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          const double d = geodesic_distance(s.mirrors[i], s.mirrors[j]);
          CHECK(std::abs(d - b) < 1e-9);
          CHECK(std::abs(geodesic_distance(s.mirrors[j], s.mirrors[i]) - d) < 1e-15);
          CHECK(std::abs(search_distance(s.mirrors[i], s.mirrors[j]) - b) < 1e-8);
          CHECK(std::abs(translation_length(reflection_product(s.mirrors[i], s.mirrors[j])) - 2 * b) < 1e-8);
          CHECK(std::abs(geodesic_distance(s.coding_mirrors[i], s.coding_mirrors[j]) - b) < 1e-9);
        }
      for (Letter g : kLetters) CHECK(std::abs(translation_length(s.gen(g)) - 2 * b) < 1e-8);
      // The third funnel is R2 R3 = A b.
      CHECK(std::abs(translation_length(compose(s.gen(Letter::A), s.gen(Letter::b))) - 2 * b) < 1e-8);
    }
  }

  TEST_CASE("symmetric frame") {
    const PantsSurface& s = surface(3.0);
    CHECK(std::abs(translation_length(s.gen(Letter::a)) - 6.0) < 1e-8);
    for (int k = 0; k < 3; ++k) {
      CHECK(s.mirrors[k].is_orthogonal());
      const double want = 2 * kPi * k / 3;
      CHECK(std::abs(std::remainder(std::arg(s.mirrors[k].center()) - want, 2 * kPi)) < 1e-12);
      // Rotating mirror k by 2 pi / 3 gives mirror k + 1.
      const Geodesic r = image(MoebiusMap::rotation(2 * kPi / 3), s.mirrors[k]);
      CHECK(std::abs(r.center() - s.mirrors[(k + 1) % 3].center()) < 1e-12);
      CHECK(std::abs(r.radius() - s.mirror_radius) < 1e-12);
    }
    CHECK(std::abs(s.alpha - std::atan(s.mirror_radius)) < 1e-12);
  }

  TEST_CASE("geodesic distance errors") {
    CHECK_THROWS_AS(geodesic_distance(Geodesic::diameter(0.0), Geodesic::diameter(1.0)), DomainError);
    const Geodesic c = Geodesic::through(std::polar(1.0, -0.5), std::polar(1.0, 0.5));
    const Geodesic d = Geodesic::through(std::polar(1.0, 0.0), std::polar(1.0, 1.0));
    CHECK_THROWS_AS(geodesic_distance(c, d), DomainError);
    CHECK_THROWS_AS(build_pants(0.0), DomainError);
    CHECK_THROWS_AS(build_pants(-1.0), DomainError);
  }

  TEST_CASE("Markov partition") {
    for (double b : {1.0, 2.0, 3.0, 4.0, 6.0}) {
      const PantsSurface& s = surface(b);
      const MarkovPartition p = markov_partition(s);
      CHECK(verify_markov(s, p));
      for (Letter g : kLetters) {
        // Arc endpoints are where the isometric circle meets the boundary.
        const auto [u, v] = p.arc(g).endpoints();
        const Geodesic c = isometric_circle(s.gen(g));
        CHECK(std::abs(std::abs(u - c.center()) - c.radius()) < 1e-12);
        CHECK(std::abs(std::abs(v - c.center()) - c.radius()) < 1e-12);
        CHECK(p.arc(g).contains(fixed_points(s.gen(g)).repelling));
        CHECK(p.arc(inverse(g)).contains(fixed_points(s.gen(g)).attracting));
        // Endpoints land on partition endpoints.
        const Complex tu = s.gen(g)(u);
        bool on_end = false;
        for (Letter h : kLetters) {
          const auto [x, y] = p.arc(h).endpoints();
          on_end = on_end || std::abs(tu - x) < 1e-9 || std::abs(tu - y) < 1e-9;
        }
        CHECK(on_end);
      }
      // Arcs of g and g^-1 mirror each other under conjugation in the real axis.
      CHECK(std::abs(p.arc(Letter::a).half_width - p.arc(Letter::A).half_width) < 1e-12);
      CHECK(std::abs(p.arc(Letter::b).half_width - p.arc(Letter::B).half_width) < 1e-12);
    }
  }

  TEST_CASE("Bowen-Series steps") {
    const PantsSurface& s = surface(3.0);
    const MarkovPartition p = markov_partition(s);
    const Complex x = fixed_points(s.gen(Letter::A)).attracting;
    const BowenSeriesStep st = bowen_series_step(s, p, x);
    CHECK(st.symbol == Letter::a);
    CHECK(std::abs(st.image - fixed_points(s.gen(Letter::a)).repelling) < 1e-10);
    CHECK(std::abs(st.image - x) < 1e-10);

    double min_expansion = 1e300;
    for (Letter g : kLetters) {
      const Arc& arc = p.arc(g);
      for (int k = 0; k < 256; ++k) {
        const double phi = arc.center + arc.half_width * (2.0 * k / 255.0 - 1.0) * (1 - 1e-12);
        const BowenSeriesStep a = bowen_series_step(s, p, std::polar(1.0, phi));
        CHECK(a.symbol == g);
        min_expansion = std::min(min_expansion, a.expansion);
        // The image never returns into the arc of the inverse.
        CHECK_FALSE(p.arc(inverse(g)).contains(a.image, -1e-9));
        if (k == 0 || k == 255) continue;  // endpoints map onto arc endpoints
        if (const auto next = p.locate(a.image)) CHECK(*next != inverse(g));
      }
    }
    CHECK(min_expansion > 1.0);
    CHECK_THROWS_AS(bowen_series_step(s, p, 0.5), DomainError);
    // The midpoint between two arcs lies in a gap.
    const double gap_mid = 0.5 * (p.arc(Letter::a).center + p.arc(Letter::b).center);
    if (!p.locate(std::polar(1.0, gap_mid))) CHECK_THROWS_AS(bowen_series_step(s, p, std::polar(1.0, gap_mid)), DomainError);
  }

  TEST_CASE("expansion grows with b") {
    double prev = 0.0;
    for (double b : {1.0, 2.0, 4.0}) {
      const PantsSurface& s = surface(b);
      const MarkovPartition p = markov_partition(s);
      double m = 1e300;
      for (Letter g : kLetters)
        for (int k = 0; k < 64; ++k) {
          const double phi = p.arc(g).center + p.arc(g).half_width * (2.0 * k / 63.0 - 1.0) * (1 - 1e-12);
          m = std::min(m, bowen_series_step(s, p, std::polar(1.0, phi)).expansion);
        }
      CHECK(m > prev);
      prev = m;
    }
  }
}
