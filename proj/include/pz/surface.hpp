#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "pz/moebius.hpp"

namespace pz {

// Generator labels; A = a^-1, B = b^-1. The numeric order is the letter order
// used for lexicographic enumeration.
enum class Letter : std::uint8_t { a = 0, A = 1, b = 2, B = 3 };

inline constexpr std::array<Letter, 4> kLetters{Letter::a, Letter::A, Letter::b, Letter::B};

constexpr Letter inverse(Letter g) { return static_cast<Letter>(static_cast<int>(g) ^ 1); }
constexpr int index(Letter g) { return static_cast<int>(g); }
char to_char(Letter g);
std::optional<Letter> letter_from_char(char c);

// Symmetric pair of pants X_b: three mirrors at mutual distance b, so each
// funnel geodesic has length 2b.
//
// Two frames are kept. In the symmetric frame the mirrors are centred at
// angles 0, 2pi/3, 4pi/3. The coding frame is the conjugate by the real
// translation taking the foot point of the first mirror to 0; there the first
// mirror is the imaginary axis and the isometric circles of the generators
// are the mirrors 2, 3 and their reflections in mirror 1, which makes the four
// boundary arcs under them a Markov partition.
struct PantsSurface {
  double b = 0.0;
  double alpha = 0.0;                    // angular half-width of a mirror seen from 0
  double mirror_radius = 0.0;            // Euclidean radius, symmetric frame
  std::array<Geodesic, 3> mirrors;       // symmetric frame
  std::array<Geodesic, 3> coding_mirrors;
  MoebiusMap to_coding;                  // symmetric frame -> coding frame
  std::array<MoebiusMap, 4> gens;        // coding frame, indexed by Letter:
                                         // a = R1R2, A = R2R1, b = R1R3, B = R3R1

  const MoebiusMap& gen(Letter g) const { return gens[index(g)]; }
};

PantsSurface build_pants(double b);

// Hyperbolic distance between two disjoint, non-asymptotic geodesics.
double geodesic_distance(const Geodesic& g1, const Geodesic& g2);

// Closed boundary arc {e^{i phi} : |phi - center| <= half_width}.
struct Arc {
  Letter label = Letter::a;
  double center = 0.0;
  double half_width = 0.0;

  bool contains(Complex x, double tol = 1e-12) const;
  std::pair<Complex, Complex> endpoints() const;
};

struct MarkovPartition {
  std::array<Arc, 4> arcs;  // indexed by Letter

  const Arc& arc(Letter g) const { return arcs[index(g)]; }
  // Arc containing x; shared endpoints go to the smaller label.
  std::optional<Letter> locate(Complex x, double tol = 1e-12) const;
};

MarkovPartition markov_partition(const PantsSurface& s);

// Endpoint checks: the arcs are pairwise disjoint and g maps arc(g) onto the
// complement of the interior of arc(g^-1), which contains the other three arcs.
bool verify_markov(const PantsSurface& s, const MarkovPartition& p, double tol = 1e-9);

struct BowenSeriesStep {
  Complex image;
  Letter symbol = Letter::a;
  double expansion = 0.0;  // |T'(x)|
};

// T(x) = g x for x in arc(g).
BowenSeriesStep bowen_series_step(const PantsSurface& s, const MarkovPartition& p, Complex x);

}  // namespace pz
