#include "pz/surface.hpp"

#include <cmath>
#include <numbers>

#include "pz/error.hpp"

namespace pz {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double angular_offset(double phi, double center) { return std::remainder(phi - center, kTwoPi); }

}  // namespace

char to_char(Letter g) {
  static constexpr char names[] = {'a', 'A', 'b', 'B'};
  return names[index(g)];
}

std::optional<Letter> letter_from_char(char c) {
  switch (c) {
    case 'a': return Letter::a;
    case 'A': return Letter::A;
    case 'b': return Letter::b;
    case 'B': return Letter::B;
    default: return std::nullopt;
  }
}

PantsSurface build_pants(double b) {
  if (!(b > 0.0) || !std::isfinite(b)) throw DomainError("surface::build_pants", "b must be positive and finite");
  PantsSurface s;
  s.b = b;
  // Mirrors of radius r centred at distance d = sqrt(1 + r^2); the inversive
  // distance of adjacent mirrors is (3 + r^2) / (2 r^2) = cosh b.
  const double r2 = 3.0 / (2.0 * std::cosh(b) - 1.0);
  const double r = std::sqrt(r2);
  const double d = std::sqrt(1.0 + r2);
  s.mirror_radius = r;
  s.alpha = std::acos(1.0 / d);
  for (int k = 0; k < 3; ++k)
    s.mirrors[k] = Geodesic::circle(std::polar(d, kTwoPi * k / 3.0), r);

  s.to_coding = MoebiusMap::recentering(Complex(d - r, 0.0));
  s.coding_mirrors[0] = Geodesic::diameter(0.5 * std::numbers::pi);
  for (int k = 1; k < 3; ++k) s.coding_mirrors[k] = image(s.to_coding, s.mirrors[k]);

  const auto& m = s.coding_mirrors;
  s.gens[index(Letter::a)] = reflection_product(m[0], m[1]);
  s.gens[index(Letter::A)] = reflection_product(m[1], m[0]);
  s.gens[index(Letter::b)] = reflection_product(m[0], m[2]);
  s.gens[index(Letter::B)] = reflection_product(m[2], m[0]);
  for (const auto& g : s.gens)
    if (!g.is_valid()) throw NumericError("surface::build_pants", "generator determinant drifted");
  return s;
}

double geodesic_distance(const Geodesic& g1, const Geodesic& g2) {
  using K = Geodesic::Kind;
  double inv = 0.0;
  if (g1.kind() == K::diameter && g2.kind() == K::diameter) {
    throw DomainError("surface::geodesic_distance", "diameters intersect at the origin");
  } else if (g1.kind() == K::circle && g2.kind() == K::circle) {
    inv = (std::norm(g1.center() - g2.center()) - g1.radius() * g1.radius() - g2.radius() * g2.radius()) /
          (2.0 * g1.radius() * g2.radius());
  } else {
    const Geodesic& c = g1.kind() == K::circle ? g1 : g2;
    const Geodesic& l = g1.kind() == K::circle ? g2 : g1;
    inv = (c.center() * std::polar(1.0, -l.angle())).imag() / c.radius();
  }
  inv = std::abs(inv);
  if (inv <= 1.0 + 1e-14) throw DomainError("surface::geodesic_distance", "geodesics intersect or are tangent");
  return std::acosh(inv);
}

bool Arc::contains(Complex x, double tol) const {
  return std::abs(angular_offset(std::arg(x), center)) <= half_width + tol;
}

std::pair<Complex, Complex> Arc::endpoints() const {
  return {std::polar(1.0, center - half_width), std::polar(1.0, center + half_width)};
}

std::optional<Letter> MarkovPartition::locate(Complex x, double tol) const {
  for (Letter g : kLetters)
    if (arc(g).contains(x, tol)) return g;
  return std::nullopt;
}

MarkovPartition markov_partition(const PantsSurface& s) {
  MarkovPartition p;
  for (Letter g : kLetters) {
    const Geodesic c = isometric_circle(s.gen(g));
    p.arcs[index(g)] = Arc{g, std::arg(c.center()), std::atan(c.radius())};
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const double gap = std::abs(angular_offset(p.arcs[i].center, p.arcs[j].center));
      if (gap <= p.arcs[i].half_width + p.arcs[j].half_width)
        throw NumericError("surface::markov_partition", "partition arcs overlap");
    }
  return p;
}

bool verify_markov(const PantsSurface& s, const MarkovPartition& p, double tol) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (std::abs(angular_offset(p.arcs[i].center, p.arcs[j].center)) <=
          p.arcs[i].half_width + p.arcs[j].half_width)
        return false;
  for (Letter g : kLetters) {
    const MoebiusMap& h = s.gen(g);
    const Arc& target = p.arc(inverse(g));
    const auto [u, v] = p.arc(g).endpoints();
    const auto [tu, tv] = target.endpoints();
    const Complex hu = h(u), hv = h(v);
    // Endpoints of arc(g) land on the endpoints of arc(g^-1).
    const bool ends = (std::abs(hu - tu) < tol && std::abs(hv - tv) < tol) ||
                      (std::abs(hu - tv) < tol && std::abs(hv - tu) < tol);
    if (!ends) return false;
    // The interior of arc(g) goes to the outside of arc(g^-1).
    if (target.contains(h(std::polar(1.0, p.arc(g).center)), -tol)) return false;
    if (std::abs(derivative(h, std::polar(1.0, p.arc(g).center))) <= 1.0) return false;
  }
  return true;
}

BowenSeriesStep bowen_series_step(const PantsSurface& s, const MarkovPartition& p, Complex x) {
  if (std::abs(std::abs(x) - 1.0) > 1e-10) throw DomainError("surface::bowen_series_step", "point not on the boundary");
  const auto g = p.locate(x);
  if (!g) throw DomainError("surface::bowen_series_step", "not in partition");
  const MoebiusMap& h = s.gen(*g);
  Complex y = h(x);
  y /= std::abs(y);
  return {y, *g, std::abs(derivative(h, x))};
}

}  // namespace pz
