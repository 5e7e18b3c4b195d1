#pragma once

#include <doctest.h>

#include <map>
#include <random>

#include "pz/asymptotics.hpp"

namespace pzt {

using pz::Complex;

inline const pz::PantsSurface& surface(double b) {
  static std::map<double, pz::PantsSurface> cache;
  auto it = cache.find(b);
  if (it == cache.end()) it = cache.emplace(b, pz::build_pants(b)).first;
  return it->second;
}

inline const pz::ZetaFunction& zeta(double b, int order = 20) {
  static std::map<std::pair<double, int>, pz::ZetaFunction> cache;
  const auto key = std::make_pair(b, order);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, pz::ZetaFunction(surface(b), pz::Grading::reflection, order)).first;
  return it->second;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 r(12345);
  return r;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

inline Complex disk_point(double radius = 0.9) {
  return std::polar(radius * std::sqrt(uniform(0.0, 1.0)), uniform(-3.14159, 3.14159));
}

inline pz::MoebiusMap random_map() {
  const double d = uniform(0.1, 2.0);
  return pz::compose(pz::MoebiusMap::rotation(uniform(-3.0, 3.0)),
                     pz::compose(pz::MoebiusMap::real_translation(d), pz::MoebiusMap::rotation(uniform(-3.0, 3.0))));
}

// Conjugate of a real translation: always hyperbolic.
inline pz::MoebiusMap random_hyperbolic() {
  const pz::MoebiusMap h = random_map();
  return pz::compose(h, pz::compose(pz::MoebiusMap::real_translation(uniform(0.1, 2.0)), h.inverse()));
}

}  // namespace pzt
