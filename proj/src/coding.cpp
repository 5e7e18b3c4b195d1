#include "pz/coding.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <tuple>

#include "pz/error.hpp"
#include "pz/parallel.hpp"

namespace pz {

namespace {

// a = R1R2, b = R1R3 begin with R1; A = R2R1, B = R3R1 end with it. In the
// product gen(w[i+1]) * gen(w[i]) the two R1 cancel when w[i] is a or b and
// w[i+1] is A or B.
bool starts_with_r1(Letter g) { return g == Letter::a || g == Letter::b; }
bool ends_with_r1(Letter g) { return g == Letter::A || g == Letter::B; }

int junction_gain(Letter right, Letter left) { return starts_with_r1(right) && ends_with_r1(left) ? 0 : 2; }

int cyclic_degree(const Word& w, int mlin) {
  return mlin - (2 - junction_gain(w.back(), w.front()));
}

// Depth-first walk over reduced words. visit(w, map, mlin) decides whether
// to extend; map = word_map(w), mlin = reflection length of w read linearly.
template <class Visit>
void walk(const PantsSurface& s, Word& w, const MoebiusMap& map, int mlin, Visit& visit) {
  if (!visit(w, map, mlin)) return;
  const Letter last = w.back();
  for (Letter g : kLetters) {
    if (g == inverse(last)) continue;
    w.push_back(g);
    walk(s, w, compose(s.gen(g), map), mlin + junction_gain(last, g), visit);
    w.pop_back();
  }
}

double trace_length(const MoebiusMap& m) { return 2.0 * std::acosh(std::abs(m.a().real())); }

bool is_canonical(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const Letter x = w[(i + r) % n], y = w[i];
      if (x < y) return false;
      if (x > y) break;
    }
  }
  return true;
}

}  // namespace

std::string to_string(const Word& w) {
  std::string out;
  out.reserve(w.size());
  for (Letter g : w) out.push_back(to_char(g));
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    const auto g = letter_from_char(c);
    if (!g) throw DomainError("coding::parse_word", std::string("unknown letter '") + c + "'");
    w.push_back(*g);
  }
  return w;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == inverse(w[i - 1])) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  return !w.empty() && is_reduced(w) && (w.size() == 1 || w.front() != inverse(w.back()));
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& g : out) g = inverse(g);
  return out;
}

Word canonical_rotation(const Word& w) {
  Word best = w;
  Word rot = w;
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
    if (rot < best) best = rot;
  }
  return best;
}

std::size_t cyclic_period(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p) continue;
    bool same = true;
    for (std::size_t i = 0; i < n && same; ++i) same = w[i] == w[(i + p) % n];
    if (same) return p;
  }
  return n;
}

bool is_primitive(const Word& w) { return !w.empty() && cyclic_period(w) == w.size(); }

int reflection_length(const Word& w) {
  if (!is_cyclically_reduced(w)) throw DomainError("coding::reflection_length", "word not cyclically reduced");
  int m = 2;
  for (std::size_t i = 1; i < w.size(); ++i) m += junction_gain(w[i - 1], w[i]);
  return cyclic_degree(w, m);
}

void for_each_word(int n, const std::function<void(const Word&)>& visit) {
  if (n < 1) throw DomainError("coding::enumerate_words", "length must be at least 1");
  Word w;
  w.reserve(n);
  std::function<void()> rec = [&] {
    if (static_cast<int>(w.size()) == n) {
      visit(w);
      return;
    }
    for (Letter g : kLetters) {
      if (!w.empty() && g == inverse(w.back())) continue;
      w.push_back(g);
      rec();
      w.pop_back();
    }
  };
  rec();
}

std::vector<Word> enumerate_words(int n) {
  std::vector<Word> out;
  for_each_word(n, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::size_t cyclic_word_count(int n) {
  if (n < 1) throw DomainError("coding::cyclic_word_count", "length must be at least 1");
  std::size_t p = 1;
  for (int i = 0; i < n; ++i) p *= 3;
  return n % 2 == 0 ? p + 3 : p + 1;
}

MoebiusMap word_map(const PantsSurface& s, const Word& w) {
  MoebiusMap m;
  for (Letter g : w) m = compose(s.gen(g), m);
  return m;
}

PeriodicOrbit orbit_data(const Word& w, const PantsSurface& s) {
  if (!is_cyclically_reduced(w)) throw DomainError("coding::orbit_data", "word not cyclically reduced");
  const MoebiusMap m = word_map(s, w);
  PeriodicOrbit o;
  o.word = w;
  o.primitive = is_primitive(w);
  o.fixed_point = fixed_points(m).repelling;
  o.length = trace_length(m);
  o.multiplier = std::exp(-o.length);
  o.reflection_length = reflection_length(w);
  return o;
}

double expansion_length(const Word& w, const PantsSurface& s) {
  if (!is_cyclically_reduced(w)) throw DomainError("coding::expansion_length", "word not cyclically reduced");
  double sum = 0.0;
  Word rot = w;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Complex x = fixed_points(word_map(s, rot)).repelling;
    sum += std::log(std::abs(derivative(s.gen(rot.front()), x)));
    std::rotate(rot.begin(), rot.begin() + 1, rot.end());
  }
  return sum;
}

std::vector<PeriodicOrbit> enumerate_orbits(const PantsSurface& s, int n, bool primitive_only) {
  if (n < 1) throw DomainError("coding::enumerate_orbits", "length must be at least 1");
  std::vector<PeriodicOrbit> out;
  for_each_word(n, [&](const Word& w) {
    if (!is_cyclically_reduced(w) || !is_canonical(w)) return;
    if (primitive_only && !is_primitive(w)) return;
    out.push_back(orbit_data(w, s));
  });
  return out;
}

const char* to_string(Grading g) { return g == Grading::word ? "word" : "reflection"; }

Grading parse_grading(std::string_view text) {
  if (text == "word") return Grading::word;
  if (text == "reflection") return Grading::reflection;
  throw DomainError("coding::parse_grading", "expected 'word' or 'reflection'");
}

LengthSpectrum length_spectrum(const PantsSurface& s, const SpectrumOptions& opt) {
  if (opt.max_degree < 1) throw DomainError("coding::length_spectrum", "degree must be at least 1");
  struct Closed {
    int degree;
    double length;
    int n;
  };
  std::array<std::vector<Closed>, 4> found;
  std::array<std::size_t, 4> nodes{};
  const bool by_word = opt.grading == Grading::word;
  const double b = s.b;

  parallel_for(4, opt.threads, [&](std::size_t root) {
    auto& out = found[root];
    std::size_t& visited = nodes[root];
    auto visit = [&](const Word& w, const MoebiusMap& m, int mlin) {
      if (++visited > opt.max_words)
        throw ResourceError("coding::length_spectrum",
                            "enumeration bound exceeded; lower the degree or raise max_words");
      const int n = static_cast<int>(w.size());
      if (w.front() != inverse(w.back()) || n == 1) {
        const int degree = by_word ? n : cyclic_degree(w, mlin);
        const double len = trace_length(m);
        if (degree <= opt.max_degree && len <= opt.max_length) out.push_back({degree, len, n});
      }
      // Every extension has degree >= floor_degree and length >= b * max(n + 1, mlin - 2).
      const int floor_degree = by_word ? n + 1 : mlin - 2;
      return floor_degree <= opt.max_degree && b * std::max(n + 1, mlin - 2) <= opt.max_length;
    };
    Word w{kLetters[root]};
    walk(s, w, s.gen(kLetters[root]), 2, visit);
  });

  LengthSpectrum spec;
  spec.grading = opt.grading;
  spec.max_degree = opt.max_degree;
  spec.b = b;
  spec.levels.resize(opt.max_degree + 1);
  std::vector<std::vector<Closed>> by_degree(opt.max_degree + 1);
  for (int r = 0; r < 4; ++r) {
    spec.node_count += nodes[r];
    spec.word_count += found[r].size();
    for (const Closed& c : found[r]) by_degree[c.degree].push_back(c);
  }
  for (int d = 1; d <= opt.max_degree; ++d) {
    auto& v = by_degree[d];
    std::sort(v.begin(), v.end(), [](const Closed& x, const Closed& y) {
      return std::tie(x.length, x.n) < std::tie(y.length, y.n);
    });
    SpectrumLevel& level = spec.levels[d];
    for (const Closed& c : v) {
      const double w = static_cast<double>(d) / c.n;
      if (!level.length.empty() && c.length - level.length.back() <= opt.merge_tolerance * c.length) {
        level.count.back() += 1.0;
        level.weight.back() += w;
      } else {
        level.length.push_back(c.length);
        level.count.push_back(1.0);
        level.weight.push_back(w);
      }
    }
  }
  return spec;
}

PrimitiveLengths primitive_lengths(const PantsSurface& s, double max_length, std::size_t max_words, int threads) {
  std::array<std::vector<double>, 4> found;
  std::array<std::size_t, 4> nodes{};
  std::atomic<std::size_t> total{0};
  const double b = s.b;
  parallel_for(4, threads, [&](std::size_t root) {
    auto visit = [&](const Word& w, const MoebiusMap& m, int mlin) {
      if (b * std::max<int>(static_cast<int>(w.size()), mlin - 2) > max_length) return false;
      ++nodes[root];
      if (total.fetch_add(1, std::memory_order_relaxed) >= max_words)
        throw ResourceError("coding::primitive_lengths",
                            "enumeration bound exceeded; words up to length " +
                                std::to_string(static_cast<int>(std::floor(max_length / b))) + " are required");
      if ((w.size() == 1 || w.front() != inverse(w.back())) && is_canonical(w) && is_primitive(w)) {
        const double len = trace_length(m);
        if (len <= max_length) found[root].push_back(len);
      }
      return true;
    };
    Word w{kLetters[root]};
    walk(s, w, s.gen(kLetters[root]), 2, visit);
  });
  PrimitiveLengths out;
  for (int r = 0; r < 4; ++r) {
    out.words_enumerated += nodes[r];
    out.length.insert(out.length.end(), found[r].begin(), found[r].end());
  }
  std::sort(out.length.begin(), out.length.end());
  return out;
}

GeodesicCount count_geodesics(const PantsSurface& s, double t, std::size_t max_words) {
  if (!(t > 0.0)) throw DomainError("coding::count_geodesics", "t must be positive");
  const PrimitiveLengths p = primitive_lengths(s, t, max_words, 1);
  GeodesicCount c;
  c.count = static_cast<std::int64_t>(p.length.size());
  c.words_enumerated = p.words_enumerated;
  c.max_word_length = static_cast<int>(std::floor(t / s.b));
  return c;
}

double empirical_length_per_letter(const PantsSurface& s) {
  double best = std::numeric_limits<double>::infinity();
  for (int n = 1; n <= 3; ++n)
    for_each_word(n, [&](const Word& w) {
      if (is_cyclically_reduced(w)) best = std::min(best, orbit_data(w, s).length / n);
    });
  return best;
}

}  // namespace pz
