#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "pz/surface.hpp"

namespace pz {

// A word is a symbol itinerary: x in arc(w[0]), T x in arc(w[1]), ...
// Its group element is gen(w[n-1]) * ... * gen(w[0]), so T^n = word_map(w)
// on the cylinder of w.
using Word = std::vector<Letter>;

std::string to_string(const Word& w);
Word parse_word(std::string_view text);

bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);
Word inverse_word(const Word& w);
// Lexicographically smallest cyclic rotation.
Word canonical_rotation(const Word& w);
// Smallest p with w invariant under rotation by p (p divides |w|).
std::size_t cyclic_period(const Word& w);
bool is_primitive(const Word& w);

// Length of the cyclically reduced word in the mirror reflections R1, R2, R3.
// Every closed geodesic crosses a strip of width b between consecutive
// reflections, so length >= b * reflection_length >= b * |w|.
int reflection_length(const Word& w);

// Freely reduced words of length n in lexicographic order (4 * 3^(n-1)).
std::vector<Word> enumerate_words(int n);
void for_each_word(int n, const std::function<void(const Word&)>& visit);
std::size_t cyclic_word_count(int n);  // 3^n + 2 + (-1)^n

struct PeriodicOrbit {
  Word word;
  bool primitive = true;
  Complex fixed_point;      // repelling fixed point of word_map(word)
  double multiplier = 0.0;  // e^{-length}
  double length = 0.0;
  int reflection_length = 0;
};

MoebiusMap word_map(const PantsSurface& s, const Word& w);

PeriodicOrbit orbit_data(const Word& w, const PantsSurface& s);

// log |(T^n)'(x)| summed along the periodic orbit of x = fixed point of w.
// Each orbit point is the fixed point of the corresponding rotation of w.
double expansion_length(const Word& w, const PantsSurface& s);

// One orbit per cyclic class of cyclically reduced words of length n, keyed
// by the canonical rotation, in lexicographic order.
std::vector<PeriodicOrbit> enumerate_orbits(const PantsSurface& s, int n, bool primitive_only);

enum class Grading { word, reflection };

const char* to_string(Grading g);
Grading parse_grading(std::string_view text);

struct SpectrumOptions {
  Grading grading = Grading::reflection;
  int max_degree = 20;
  double max_length = std::numeric_limits<double>::infinity();
  std::size_t max_words = 50'000'000;
  double merge_tolerance = 2e-14;  // relative; 0 disables merging
  int threads = 0;
};

// Closed words of one degree, merged by length. For each length:
// count = number of cyclically reduced words, weight = sum of degree / |w|.
struct SpectrumLevel {
  std::vector<double> length;
  std::vector<double> count;
  std::vector<double> weight;
};

struct LengthSpectrum {
  Grading grading = Grading::reflection;
  int max_degree = 0;
  double b = 0.0;
  std::vector<SpectrumLevel> levels;  // index = degree, levels[0] empty
  std::size_t word_count = 0;         // cyclically reduced words kept
  std::size_t node_count = 0;         // words visited, including open prefixes
};

LengthSpectrum length_spectrum(const PantsSurface& s, const SpectrumOptions& opt);

// Lengths of primitive closed geodesics up to max_length, one per cyclic class,
// sorted ascending.
struct PrimitiveLengths {
  std::vector<double> length;
  std::size_t words_enumerated = 0;
};

PrimitiveLengths primitive_lengths(const PantsSurface& s, double max_length,
                                   std::size_t max_words = 50'000'000, int threads = 0);

// N(t): primitive oriented closed geodesics with length <= t.
struct GeodesicCount {
  std::int64_t count = 0;
  std::size_t words_enumerated = 0;
  int max_word_length = 0;
};

GeodesicCount count_geodesics(const PantsSurface& s, double t, std::size_t max_words = 10'000'000);

// min over cyclically reduced words of length <= 3 of length / |w|.
double empirical_length_per_letter(const PantsSurface& s);

}  // namespace pz
