#pragma once

#include <array>
#include <complex>
#include <utility>

namespace pz {

using Complex = std::complex<double>;

// Default tolerances of the geometry layer. Callers may pass their own.
struct GeometryTolerances {
  double boundary = 1e-12;              // | |z| - 1 | for boundary points
  double determinant = 1e-12;           // relative to |a|^2 + |b|^2
  double hyperbolic_threshold = 1e-10;  // |a + conj(a)| - 2 must exceed this
  double orthogonality = 1e-12;         // |center|^2 - radius^2 - 1
};

inline constexpr GeometryTolerances kDefaultGeometry{};

// Orientation-preserving isometry z -> (a z + b) / (conj(b) z + conj(a)),
// |a|^2 - |b|^2 = 1. The pair (a, b) is identified with (-a, -b); the stored
// representative has Re(a) > 0, or Re(a) == 0 and Im(a) > 0.
class MoebiusMap {
 public:
  MoebiusMap() = default;
  MoebiusMap(Complex a, Complex b);

  static MoebiusMap identity() { return {}; }
  // Hyperbolic translation by distance d along the real diameter.
  static MoebiusMap real_translation(double d);
  // The map sending p to 0 along the geodesic through 0 and p.
  static MoebiusMap recentering(Complex p);
  static MoebiusMap rotation(double angle);

  Complex a() const { return a_; }
  Complex b() const { return b_; }

  Complex operator()(Complex z) const;
  MoebiusMap inverse() const { return MoebiusMap(std::conj(a_), -b_); }

  // |a|^2 - |b|^2 evaluated without rescaling.
  double determinant() const { return std::norm(a_) - std::norm(b_); }
  bool is_valid(const GeometryTolerances& tol = kDefaultGeometry) const;

 private:
  Complex a_{1.0, 0.0};
  Complex b_{0.0, 0.0};
};

// Group law: compose(f, g)(z) = f(g(z)).
MoebiusMap compose(const MoebiusMap& f, const MoebiusMap& g);

Complex apply(const MoebiusMap& g, Complex z);
Complex derivative(const MoebiusMap& g, Complex z);

// Poincare-disk distance; both points strictly inside the disk.
double hyperbolic_distance(Complex z1, Complex z2);

bool is_hyperbolic(const MoebiusMap& g, const GeometryTolerances& tol = kDefaultGeometry);

struct FixedPoints {
  Complex attracting;
  Complex repelling;
};

FixedPoints fixed_points(const MoebiusMap& g, const GeometryTolerances& tol = kDefaultGeometry);

// 2 arccosh(|Re a|).
double translation_length(const MoebiusMap& g, const GeometryTolerances& tol = kDefaultGeometry);

// A hyperbolic geodesic: either a circle orthogonal to the unit circle or a
// diameter. Reflections in it are anti-holomorphic and are kept out of
// MoebiusMap; products of two reflections are converted by reflection_product.
class Geodesic {
 public:
  enum class Kind { circle, diameter };

  static Geodesic circle(Complex center, double radius);
  static Geodesic diameter(double angle);
  // Geodesic with ideal endpoints p, q on the unit circle.
  static Geodesic through(Complex p, Complex q);

  Kind kind() const { return kind_; }
  Complex center() const { return center_; }
  double radius() const { return radius_; }
  double angle() const { return angle_; }

  // Ideal endpoints, ordered counter-clockwise for circles.
  std::pair<Complex, Complex> endpoints() const;
  // Signed side test: negative on the side not containing the origin
  // (circles) or to the right of the direction (diameters); zero on it.
  double side(Complex z) const;
  bool contains(Complex z, double tol = 1e-10) const;
  bool is_orthogonal(const GeometryTolerances& tol = kDefaultGeometry) const;

  // z -> R(conj z) coefficient form used for reflection products:
  // R(z) = (p conj(z) + q) / (-conj(q) conj(z) - conj(p)), det R = -scale^2.
  Complex anti_p() const;
  Complex anti_q() const;
  double anti_scale() const;

 private:
  Kind kind_ = Kind::diameter;
  Complex center_{0.0, 0.0};
  double radius_ = 0.0;
  double angle_ = 0.0;
};

Complex reflect(const Geodesic& m, Complex z);

// The holomorphic map z -> R_first(R_second(z)).
MoebiusMap reflection_product(const Geodesic& first, const Geodesic& second);

Geodesic image(const MoebiusMap& g, const Geodesic& m);

// { z : |g'(z)| = 1 }; requires b != 0.
Geodesic isometric_circle(const MoebiusMap& g);

}  // namespace pz
