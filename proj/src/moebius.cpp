#include "pz/moebius.hpp"

#include <cmath>
#include <numbers>

#include "pz/error.hpp"

namespace pz {

namespace {

constexpr double kPoleGuard = 1e-300;

void canonicalize(Complex& a, Complex& b) {
  if (a.real() < 0.0 || (a.real() == 0.0 && a.imag() < 0.0)) {
    a = -a;
    b = -b;
  }
}

}  // namespace

MoebiusMap::MoebiusMap(Complex a, Complex b) : a_(a), b_(b) { canonicalize(a_, b_); }

MoebiusMap MoebiusMap::real_translation(double d) {
  return MoebiusMap(Complex(std::cosh(0.5 * d), 0.0), Complex(std::sinh(0.5 * d), 0.0));
}

MoebiusMap MoebiusMap::recentering(Complex p) {
  const double n = std::norm(p);
  if (n >= 1.0) throw DomainError("moebius::recentering", "point not inside the disk");
  const double s = 1.0 / std::sqrt(1.0 - n);
  return MoebiusMap(Complex(s, 0.0), -p * s);
}

MoebiusMap MoebiusMap::rotation(double angle) {
  return MoebiusMap(std::polar(1.0, 0.5 * angle), Complex(0.0, 0.0));
}

Complex MoebiusMap::operator()(Complex z) const { return apply(*this, z); }

bool MoebiusMap::is_valid(const GeometryTolerances& tol) const {
  const double scale = std::max(1.0, std::norm(a_) + std::norm(b_));
  return std::isfinite(a_.real()) && std::isfinite(a_.imag()) && std::isfinite(b_.real()) &&
         std::isfinite(b_.imag()) && std::abs(determinant() - 1.0) <= tol.determinant * scale;
}

MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g) {
  const Complex a = f.a() * g.a() + f.b() * std::conj(g.b());
  const Complex b = f.a() * g.b() + f.b() * std::conj(g.a());
  return MoebiusMap(a, b);
}

Complex apply(const MoebiusMap& g, Complex z) {
  const Complex den = std::conj(g.b()) * z + std::conj(g.a());
  if (std::abs(den) < kPoleGuard) throw NumericError("moebius::apply", "pole of the map reached");
  return (g.a() * z + g.b()) / den;
}

Complex derivative(const MoebiusMap& g, Complex z) {
  const Complex den = std::conj(g.b()) * z + std::conj(g.a());
  if (std::abs(den) < kPoleGuard) throw NumericError("moebius::derivative", "pole of the map reached");
  return 1.0 / (den * den);
}

double hyperbolic_distance(Complex z1, Complex z2) {
  const double n1 = 1.0 - std::norm(z1);
  const double n2 = 1.0 - std::norm(z2);
  if (!(n1 > 0.0) || !(n2 > 0.0))
    throw DomainError("moebius::hyperbolic_distance", "points must lie strictly inside the disk");
  // 2 artanh|(z1-z2)/(1-z1 conj z2)| rewritten to stay accurate near the boundary.
  return 2.0 * std::asinh(std::abs(z1 - z2) / std::sqrt(n1 * n2));
}

bool is_hyperbolic(const MoebiusMap& g, const GeometryTolerances& tol) {
  return 2.0 * std::abs(g.a().real()) - 2.0 > tol.hyperbolic_threshold;
}

FixedPoints fixed_points(const MoebiusMap& g, const GeometryTolerances& tol) {
  if (!is_hyperbolic(g, tol)) throw DomainError("moebius::fixed_points", "not hyperbolic");
  // Roots of conj(b) z^2 + (conj(a) - a) z - b = 0:  z = (i Im a +- sqrt(Re(a)^2 - 1)) / conj(b).
  const double re = std::abs(g.a().real());
  const double root = std::sqrt((re - 1.0) * (re + 1.0));
  const Complex ia(0.0, g.a().imag());
  const Complex bc = std::conj(g.b());
  // Re(a) > 0 after canonicalisation: the "+" root has |conj(b) z + conj(a)| > 1.
  Complex plus = (ia + root) / bc;
  Complex minus = (ia - root) / bc;
  plus /= std::abs(plus);
  minus /= std::abs(minus);
  return {plus, minus};
}

double translation_length(const MoebiusMap& g, const GeometryTolerances& tol) {
  if (!is_hyperbolic(g, tol)) throw DomainError("moebius::translation_length", "not hyperbolic");
  return 2.0 * std::acosh(std::abs(g.a().real()));
}

Geodesic Geodesic::circle(Complex center, double radius) {
  if (!(radius > 0.0)) throw DomainError("moebius::Geodesic", "radius must be positive");
  Geodesic m;
  m.kind_ = Kind::circle;
  m.center_ = center;
  m.radius_ = radius;
  return m;
}

Geodesic Geodesic::diameter(double angle) {
  Geodesic m;
  m.kind_ = Kind::diameter;
  m.angle_ = std::remainder(angle, std::numbers::pi);
  return m;
}

Geodesic Geodesic::through(Complex p, Complex q) {
  p /= std::abs(p);
  q /= std::abs(q);
  const Complex sum = p + q;
  const double n = std::norm(sum);
  if (n < 1e-24) return diameter(std::arg(p));
  const Complex c = 2.0 * sum / n;
  return circle(c, std::sqrt(std::max(0.0, std::norm(c) - 1.0)));
}

std::pair<Complex, Complex> Geodesic::endpoints() const {
  if (kind_ == Kind::diameter) {
    const Complex u = std::polar(1.0, angle_);
    return {-u, u};
  }
  const double half = std::atan(radius_);  // cos(half) = 1/|c|
  const double phi = std::arg(center_);
  return {std::polar(1.0, phi - half), std::polar(1.0, phi + half)};
}

double Geodesic::side(Complex z) const {
  if (kind_ == Kind::diameter) return (z * std::polar(1.0, -angle_)).imag();
  return std::norm(z - center_) - radius_ * radius_;
}

bool Geodesic::contains(Complex z, double tol) const {
  if (kind_ == Kind::diameter) return std::abs(side(z)) <= tol;
  return std::abs(std::abs(z - center_) - radius_) <= tol;
}

bool Geodesic::is_orthogonal(const GeometryTolerances& tol) const {
  if (kind_ == Kind::diameter) return true;
  return std::abs(std::norm(center_) - radius_ * radius_ - 1.0) <= tol.orthogonality * std::max(1.0, std::norm(center_));
}

Complex Geodesic::anti_p() const {
  if (kind_ == Kind::diameter) return Complex(0.0, 1.0) * std::polar(1.0, angle_);
  return center_;
}

Complex Geodesic::anti_q() const {
  if (kind_ == Kind::diameter) return Complex(0.0, 0.0);
  return Complex(-1.0, 0.0);
}

double Geodesic::anti_scale() const { return kind_ == Kind::diameter ? 1.0 : radius_; }

Complex reflect(const Geodesic& m, Complex z) {
  if (m.kind() == Geodesic::Kind::diameter) return std::polar(1.0, 2.0 * m.angle()) * std::conj(z);
  const Complex d = z - m.center();
  if (std::abs(d) < kPoleGuard) throw DomainError("moebius::reflect", "reflection of the circle center");
  return m.center() + m.radius() * m.radius() / std::conj(d);
}

MoebiusMap reflection_product(const Geodesic& first, const Geodesic& second) {
  const Complex pi = first.anti_p(), qi = first.anti_q();
  const Complex pj = second.anti_p(), qj = second.anti_q();
  const double s = first.anti_scale() * second.anti_scale();
  const Complex a = (pi * std::conj(pj) - qi * qj) / s;
  const Complex b = (pi * std::conj(qj) - qi * pj) / s;
  return MoebiusMap(a, b);
}

Geodesic image(const MoebiusMap& g, const Geodesic& m) {
  const auto [p, q] = m.endpoints();
  return Geodesic::through(apply(g, p), apply(g, q));
}

Geodesic isometric_circle(const MoebiusMap& g) {
  if (std::abs(g.b()) == 0.0)
    throw DomainError("moebius::isometric_circle", "isometric circle undefined for rotations");
  // |conj(b) z + conj(a)| = 1  <=>  |z + conj(a)/conj(b)| = 1/|b|.
  return Geodesic::circle(-std::conj(g.a()) / std::conj(g.b()), 1.0 / std::abs(g.b()));
}

}  // namespace pz
