#include "pz/parallel.hpp"

#include <cstdlib>
#include <string>

namespace pz {

int default_threads() {
  if (const char* env = std::getenv("PZ_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (...) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

int resolve_threads(int requested) { return requested > 0 ? requested : default_threads(); }

}  // namespace pz
