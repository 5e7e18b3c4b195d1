#include <atomic>
#include <cstdlib>
#include <string>

#include "pz/error.hpp"
#include "pz/kernels.hpp"

namespace pz::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(PZ_WITH_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa initial_isa() {
  const char* env = std::getenv("PZ_KERNEL");
  if (env && std::string_view(env) != "auto" && *env) {
    const Isa requested = parse_isa(env);
    if (!isa_available(requested)) throw DomainError("kernels::active_isa", std::string("PZ_KERNEL=") + env + " is not available on this CPU");
    return requested;
  }
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

std::atomic<int>& slot() {
  static std::atomic<int> isa{static_cast<int>(initial_isa())};
  return isa;
}

}  // namespace

const char* to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

Isa parse_isa(std::string_view text) {
  if (text == "scalar") return Isa::scalar;
  if (text == "avx2") return Isa::avx2;
  throw DomainError("kernels::parse_isa", "expected 'scalar' or 'avx2'");
}

bool isa_available(Isa isa) { return isa == Isa::scalar || cpu_has_avx2(); }

Isa active_isa() { return static_cast<Isa>(slot().load(std::memory_order_relaxed)); }

void set_isa(Isa isa) {
  if (!isa_available(isa)) throw DomainError("kernels::set_isa", std::string(to_string(isa)) + " is not available");
  slot().store(static_cast<int>(isa), std::memory_order_relaxed);
}

Complex exp_sum(const double* len, const double* coef, std::size_t n, Complex s) {
#if defined(PZ_WITH_AVX2)
  if (active_isa() == Isa::avx2) return avx2::exp_sum(len, coef, n, s);
#endif
  return scalar::exp_sum(len, coef, n, s);
}

double exp_sum_real(const double* len, const double* coef, std::size_t n, double t) {
#if defined(PZ_WITH_AVX2)
  if (active_isa() == Isa::avx2) return avx2::exp_sum_real(len, coef, n, t);
#endif
  return scalar::exp_sum_real(len, coef, n, t);
}

}  // namespace pz::kernels
