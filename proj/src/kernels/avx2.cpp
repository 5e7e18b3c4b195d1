#include <immintrin.h>

#include <cmath>

#include "pz/kernels.hpp"

namespace pz::kernels::avx2 {

namespace {

// exp(x): x = k ln2 + r with a two-part ln2, Taylor polynomial of degree 13 on
// |r| <= ln2/2, then 2^k through the exponent field. Zero below -708.
inline __m256d exp_pd(__m256d x) {
  const __m256d log2e = _mm256_set1_pd(1.4426950408889634074);
  const __m256d ln2_hi = _mm256_set1_pd(6.93145751953125e-1);
  const __m256d ln2_lo = _mm256_set1_pd(1.42860682030941723212e-6);
  const __m256d lo_limit = _mm256_set1_pd(-708.0);
  const __m256d hi_limit = _mm256_set1_pd(709.0);

  const __m256d underflow = _mm256_cmp_pd(x, lo_limit, _CMP_LT_OQ);
  const __m256d overflow = _mm256_cmp_pd(x, hi_limit, _CMP_GT_OQ);
  x = _mm256_max_pd(_mm256_min_pd(x, hi_limit), lo_limit);

  const __m256d k = _mm256_round_pd(_mm256_mul_pd(x, log2e), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(k, ln2_hi, x);
  r = _mm256_fnmadd_pd(k, ln2_lo, r);

  static constexpr double inv_fact[14] = {1.0,
                                          1.0,
                                          1.0 / 2,
                                          1.0 / 6,
                                          1.0 / 24,
                                          1.0 / 120,
                                          1.0 / 720,
                                          1.0 / 5040,
                                          1.0 / 40320,
                                          1.0 / 362880,
                                          1.0 / 3628800,
                                          1.0 / 39916800,
                                          1.0 / 479001600,
                                          1.0 / 6227020800.0};
  __m256d p = _mm256_set1_pd(inv_fact[13]);
  for (int i = 12; i >= 0; --i) p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(inv_fact[i]));

  const __m128i k32 = _mm256_cvtpd_epi32(k);
  __m256i bits = _mm256_cvtepi32_epi64(k32);
  bits = _mm256_add_epi64(bits, _mm256_set1_epi64x(1023));
  bits = _mm256_slli_epi64(bits, 52);
  __m256d result = _mm256_mul_pd(p, _mm256_castsi256_pd(bits));
  result = _mm256_andnot_pd(underflow, result);
  return _mm256_blendv_pd(result, _mm256_set1_pd(HUGE_VAL), overflow);
}

// sin and cos of y for |y| <= 2^19 pi/2: three-part pi/2 reduction and the
// minimax kernels on [-pi/4, pi/4].
inline void sincos_pd(__m256d y, __m256d& s, __m256d& c) {
  const __m256d two_over_pi = _mm256_set1_pd(6.36619772367581382433e-01);
  const __m256d pio2_1 = _mm256_set1_pd(1.57079632673412561417e+00);
  const __m256d pio2_2 = _mm256_set1_pd(6.07710050630396597660e-11);
  const __m256d pio2_3 = _mm256_set1_pd(2.02226624871116645580e-21);

  const __m256d q = _mm256_round_pd(_mm256_mul_pd(y, two_over_pi), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  __m256d r = _mm256_fnmadd_pd(q, pio2_1, y);
  r = _mm256_fnmadd_pd(q, pio2_2, r);
  r = _mm256_fnmadd_pd(q, pio2_3, r);

  const __m256d z = _mm256_mul_pd(r, r);
  const __m256d v = _mm256_mul_pd(z, r);

  __m256d ps = _mm256_set1_pd(1.58969099521155010221e-10);
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(-2.50507602534068634195e-08));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(2.75573137070700676789e-06));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(-1.98412698298579493134e-04));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(8.33333333332248946124e-03));
  ps = _mm256_fmadd_pd(ps, z, _mm256_set1_pd(-1.66666666666666324348e-01));
  const __m256d sin_r = _mm256_fmadd_pd(v, ps, r);

  __m256d pc = _mm256_set1_pd(-1.13596475577881948265e-11);
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(2.08757232129817482790e-09));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(-2.75573143513906633035e-07));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(2.48015872894767294178e-05));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(-1.38888888888741095749e-03));
  pc = _mm256_fmadd_pd(pc, z, _mm256_set1_pd(4.16666666666666019037e-02));
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d hz = _mm256_mul_pd(_mm256_set1_pd(0.5), z);
  const __m256d w = _mm256_sub_pd(one, hz);
  const __m256d tail = _mm256_fmadd_pd(_mm256_mul_pd(z, z), pc, _mm256_sub_pd(_mm256_sub_pd(one, w), hz));
  const __m256d cos_r = _mm256_add_pd(w, tail);

  const __m256i iq = _mm256_cvtepi32_epi64(_mm256_cvtpd_epi32(q));
  const __m256i one_i = _mm256_set1_epi64x(1);
  const __m256i two_i = _mm256_set1_epi64x(2);
  const __m256d swap = _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(iq, one_i), one_i));
  const __m256d neg_s = _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(iq, two_i), two_i));
  const __m256d neg_c =
      _mm256_castsi256_pd(_mm256_cmpeq_epi64(_mm256_and_si256(_mm256_add_epi64(iq, one_i), two_i), two_i));
  const __m256d sign = _mm256_set1_pd(-0.0);
  s = _mm256_blendv_pd(sin_r, cos_r, swap);
  c = _mm256_blendv_pd(cos_r, sin_r, swap);
  s = _mm256_xor_pd(s, _mm256_and_pd(neg_s, sign));
  c = _mm256_xor_pd(c, _mm256_and_pd(neg_c, sign));
}

inline __m256d abs_pd(__m256d x) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x); }

// Per-lane Neumaier accumulation.
inline void neumaier(__m256d& sum, __m256d& comp, __m256d x) {
  const __m256d t = _mm256_add_pd(sum, x);
  const __m256d big = _mm256_cmp_pd(abs_pd(sum), abs_pd(x), _CMP_GE_OQ);
  const __m256d a = _mm256_blendv_pd(x, sum, big);
  const __m256d b = _mm256_blendv_pd(sum, x, big);
  comp = _mm256_add_pd(comp, _mm256_add_pd(_mm256_sub_pd(a, t), b));
  sum = t;
}

// Lanes combined in index order.
inline double reduce(__m256d sum, __m256d comp) {
  alignas(32) double s[4], c[4];
  _mm256_store_pd(s, sum);
  _mm256_store_pd(c, comp);
  double total = s[0], err = c[0];
  for (int i = 1; i < 4; ++i) {
    const double t = total + s[i];
    if (std::abs(total) >= std::abs(s[i]))
      err += (total - t) + s[i];
    else
      err += (s[i] - t) + total;
    total = t;
    err += c[i];
  }
  return std::isfinite(total) ? total + err : total;  // an overflowed sum poisons err
}

inline __m256i tail_mask(std::size_t remaining) {
  const __m256i lane = _mm256_setr_epi64x(0, 1, 2, 3);
  return _mm256_cmpgt_epi64(_mm256_set1_epi64x(static_cast<long long>(remaining)), lane);
}

}  // namespace

Complex exp_sum(const double* len, const double* coef, std::size_t n, Complex s) {
  const __m256d neg_sigma = _mm256_set1_pd(-s.real());
  const __m256d tau = _mm256_set1_pd(s.imag());
  const __m256d limit = _mm256_set1_pd(kMaxReducedPhase);
  __m256d re = _mm256_setzero_pd(), re_c = _mm256_setzero_pd();
  __m256d im = _mm256_setzero_pd(), im_c = _mm256_setzero_pd();

  for (std::size_t i = 0; i < n; i += 4) {
    __m256d l, w;
    if (i + 4 <= n) {
      l = _mm256_loadu_pd(len + i);
      w = _mm256_loadu_pd(coef + i);
    } else {
      const __m256i mask = tail_mask(n - i);
      l = _mm256_maskload_pd(len + i, mask);
      w = _mm256_maskload_pd(coef + i, mask);
    }
    const __m256d mag = _mm256_mul_pd(w, exp_pd(_mm256_mul_pd(neg_sigma, l)));
    const __m256d phase = _mm256_mul_pd(tau, l);
    __m256d sn, cs;
    if (_mm256_movemask_pd(_mm256_cmp_pd(abs_pd(phase), limit, _CMP_GT_OQ))) {
      alignas(32) double ph[4], vs[4], vc[4];
      _mm256_store_pd(ph, phase);
      for (int k = 0; k < 4; ++k) {
        vs[k] = std::sin(ph[k]);
        vc[k] = std::cos(ph[k]);
      }
      sn = _mm256_load_pd(vs);
      cs = _mm256_load_pd(vc);
    } else {
      sincos_pd(phase, sn, cs);
    }
    neumaier(re, re_c, _mm256_mul_pd(mag, cs));
    neumaier(im, im_c, _mm256_xor_pd(_mm256_mul_pd(mag, sn), _mm256_set1_pd(-0.0)));
  }
  return {reduce(re, re_c), reduce(im, im_c)};
}

double exp_sum_real(const double* len, const double* coef, std::size_t n, double t) {
  const __m256d neg_t = _mm256_set1_pd(-t);
  __m256d acc = _mm256_setzero_pd(), comp = _mm256_setzero_pd();
  for (std::size_t i = 0; i < n; i += 4) {
    __m256d l, w;
    if (i + 4 <= n) {
      l = _mm256_loadu_pd(len + i);
      w = _mm256_loadu_pd(coef + i);
    } else {
      const __m256i mask = tail_mask(n - i);
      l = _mm256_maskload_pd(len + i, mask);
      w = _mm256_maskload_pd(coef + i, mask);
    }
    neumaier(acc, comp, _mm256_mul_pd(w, exp_pd(_mm256_mul_pd(neg_t, l))));
  }
  return reduce(acc, comp);
}

}  // namespace pz::kernels::avx2
