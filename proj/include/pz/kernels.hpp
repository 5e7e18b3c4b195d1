#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

// Exponential sums over orbit lengths, the inner loop of every trace and
// pressure evaluation:  sum_i c_i exp(-s l_i).
namespace pz::kernels {

using Complex = std::complex<double>;

enum class Isa { scalar, avx2 };

const char* to_string(Isa isa);
Isa parse_isa(std::string_view text);  // "scalar", "avx2"
bool isa_available(Isa isa);

// Active implementation. Chosen on first use from PZ_KERNEL (scalar, avx2,
// auto) and the CPU; set_isa overrides it process-wide.
Isa active_isa();
void set_isa(Isa isa);

Complex exp_sum(const double* len, const double* coef, std::size_t n, Complex s);
double exp_sum_real(const double* len, const double* coef, std::size_t n, double t);

namespace scalar {
Complex exp_sum(const double* len, const double* coef, std::size_t n, Complex s);
double exp_sum_real(const double* len, const double* coef, std::size_t n, double t);
}  // namespace scalar

namespace avx2 {
// Phases |Im(s) l| above this go through the scalar sin/cos.
inline constexpr double kMaxReducedPhase = 8.0e5;
Complex exp_sum(const double* len, const double* coef, std::size_t n, Complex s);
double exp_sum_real(const double* len, const double* coef, std::size_t n, double t);
}  // namespace avx2

}  // namespace pz::kernels
