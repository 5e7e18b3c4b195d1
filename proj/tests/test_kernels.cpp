#include "common.hpp"
#include "pz/kernels.hpp"

using namespace pz;
using pzt::uniform;

namespace {

// Long double reference for sum c_i exp(-s l_i).
std::complex<long double> reference(const std::vector<double>& len, const std::vector<double>& coef, Complex s) {
  std::complex<long double> acc = 0.0L;
  for (std::size_t i = 0; i < len.size(); ++i) {
    const long double mag = std::exp(-static_cast<long double>(s.real()) * len[i]);
    const long double ph = -static_cast<long double>(s.imag()) * len[i];
    acc += std::complex<long double>(coef[i] * mag * std::cos(ph), coef[i] * mag * std::sin(ph));
  }
  return acc;
}

struct IsaGuard {
  kernels::Isa saved = kernels::active_isa();
  ~IsaGuard() { kernels::set_isa(saved); }
};

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("parse and availability") {
    CHECK(kernels::parse_isa("scalar") == kernels::Isa::scalar);
    CHECK(kernels::parse_isa("avx2") == kernels::Isa::avx2);
    CHECK_THROWS(kernels::parse_isa("neon"));
    CHECK(kernels::isa_available(kernels::Isa::scalar));
    CHECK(std::string(kernels::to_string(kernels::Isa::avx2)) == "avx2");
  }

  TEST_CASE("scalar kernel against long double") {
    for (std::size_t n : {0u, 1u, 3u, 17u, 1000u}) {
      std::vector<double> len(n), coef(n);
      for (std::size_t i = 0; i < n; ++i) {
        len[i] = uniform(2.0, 60.0);
        coef[i] = uniform(0.1, 3.0);
      }
      const Complex s(uniform(-0.2, 1.0), uniform(-500.0, 500.0));
      const auto ref = reference(len, coef, s);
      double scale = 0.0;
      for (std::size_t i = 0; i < n; ++i) scale += coef[i] * std::exp(-s.real() * len[i]);
      const Complex got = kernels::scalar::exp_sum(len.data(), coef.data(), n, s);
      CHECK(std::abs(got - Complex(static_cast<double>(ref.real()), static_cast<double>(ref.imag()))) <=
            1e-12 * std::max(1.0, scale));
    }
  }

  TEST_CASE("AVX2 kernel matches the scalar kernel") {
    if (!kernels::isa_available(kernels::Isa::avx2)) {
      MESSAGE("AVX2 not available; skipped");
      return;
    }
#if defined(PZ_WITH_AVX2)
    for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 63u, 1001u}) {
      for (double tmax : {1.0, 1e3, 2e4, 1e6}) {
        std::vector<double> len(n), coef(n);
        for (std::size_t i = 0; i < n; ++i) {
          len[i] = uniform(2.0, 80.0);
          coef[i] = uniform(-2.0, 3.0);
        }
        const Complex s(uniform(-0.3, 2.0), uniform(-tmax, tmax));
        const Complex a = kernels::scalar::exp_sum(len.data(), coef.data(), n, s);
        const Complex b = kernels::avx2::exp_sum(len.data(), coef.data(), n, s);
        double scale = 0.0;
        for (std::size_t i = 0; i < n; ++i) scale += std::abs(coef[i]) * std::exp(-s.real() * len[i]);
        // Phase reduction error grows with |Im(s) l|.
        const double tol = 1e-13 * std::max(1.0, std::abs(s.imag()) * 80.0 * 1e-3) * std::max(1.0, scale);
        CHECK(std::abs(a - b) <= tol);
        const double ra = kernels::scalar::exp_sum_real(len.data(), coef.data(), n, s.real());
        const double rb = kernels::avx2::exp_sum_real(len.data(), coef.data(), n, s.real());
        CHECK(std::abs(ra - rb) <= 1e-13 * std::max(1.0, scale));
      }
    }
    // Extreme exponents: overflow to inf and underflow to 0 agree.
    const double len[4] = {1.0, 2.0, 800.0, 3.0}, coef[4] = {1.0, 1.0, 1.0, 1.0};
    CHECK(kernels::scalar::exp_sum_real(len, coef, 4, 1.0) == doctest::Approx(kernels::avx2::exp_sum_real(len, coef, 4, 1.0)));
    CHECK(std::isinf(kernels::avx2::exp_sum_real(len, coef, 4, -1.0)));
    CHECK(std::isinf(kernels::scalar::exp_sum_real(len, coef, 4, -1.0)));
#endif
  }

  TEST_CASE("dispatch switches the zeta evaluation") {
    if (!kernels::isa_available(kernels::Isa::avx2)) return;
    IsaGuard guard;
    const ZetaFunction& z = pzt::zeta(4.0);
    for (Complex s : {Complex(0.1, 30.0), Complex(0.0, 150.0), Complex(0.5, 0.0)}) {
      kernels::set_isa(kernels::Isa::scalar);
      const Complex a = z.value(s);
      kernels::set_isa(kernels::Isa::avx2);
      const Complex b = z.value(s);
      CHECK(std::abs(a - b) <= 1e-11 * std::max(1.0, std::abs(a)));
    }
  }
}
