#include "h2df/kernels.hpp"

// AVX2 variants. This translation unit is compiled with -mavx2 -mfma on
// x86-64; elsewhere it provides only the null table accessor.

#if defined(__AVX2__) && defined(__x86_64__)

#include <immintrin.h>

namespace h2df::kernels {
namespace {

void bit_or_avx2(uint64_t* dst, const uint64_t* a, const uint64_t* b,
                 size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_or_si256(va, vb));
  }
  for (; i < n; ++i) dst[i] = a[i] | b[i];
}

bool covers_avx2(const uint64_t* x, const uint64_t* y, size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    const __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
    // testc: true iff (vy & ~vx) == 0
    if (!_mm256_testc_si256(vx, vy)) return false;
  }
  for (; i < n; ++i) {
    if (y[i] & ~x[i]) return false;
  }
  return true;
}

void covers_scan_avx2(const uint64_t* x, const uint64_t* cols, size_t ncols,
                      size_t stride, uint8_t* out) {
  for (size_t j = 0; j < ncols; ++j) {
    out[j] = covers_avx2(x, cols + j * stride, stride) ? 1 : 0;
  }
}

void add_u16_avx2(uint16_t* dst, const uint16_t* a, const uint16_t* b,
                  size_t n) {
  size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_add_epi16(va, vb));
  }
  for (; i < n; ++i) dst[i] = static_cast<uint16_t>(a[i] + b[i]);
}

bool sub_u16_checked_avx2(uint16_t* dst, const uint16_t* a, const uint16_t* b,
                          size_t n) {
  size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    // b[i] > a[i] in some lane iff saturating b - a is nonzero somewhere.
    const __m256i over = _mm256_subs_epu16(vb, va);
    if (!_mm256_testz_si256(over, over)) return false;
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_sub_epi16(va, vb));
  }
  for (; i < n; ++i) {
    if (b[i] > a[i]) return false;
    dst[i] = static_cast<uint16_t>(a[i] - b[i]);
  }
  return true;
}

std::complex<double> cdot_avx2(const std::complex<double>* a,
                               const std::complex<double>* b, size_t n) {
  const double* pa = reinterpret_cast<const double*>(a);
  const double* pb = reinterpret_cast<const double*>(b);
  __m256d acc_direct = _mm256_setzero_pd();   // lanes: ar*br, ai*bi, ...
  __m256d acc_swapped = _mm256_setzero_pd();  // lanes: ar*bi, ai*br, ...
  size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d va = _mm256_loadu_pd(pa + 2 * i);
    const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    const __m256d vbs = _mm256_permute_pd(vb, 0x5);  // swap re/im per complex
    acc_direct = _mm256_fmadd_pd(va, vb, acc_direct);
    acc_swapped = _mm256_fmadd_pd(va, vbs, acc_swapped);
  }
  alignas(32) double d[4], s[4];
  _mm256_store_pd(d, acc_direct);
  _mm256_store_pd(s, acc_swapped);
  double re = d[0] + d[1] + d[2] + d[3];
  double im = (s[1] + s[3]) - (s[0] + s[2]);
  for (; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br + ai * bi;
    im += ai * br - ar * bi;
  }
  return {re, im};
}

const Ops avx2_table_impl = {
    bit_or_avx2,  covers_avx2, covers_scan_avx2,
    add_u16_avx2, sub_u16_checked_avx2, cdot_avx2,
};

}  // namespace

namespace detail {
const Ops* avx2_table() {
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return &avx2_table_impl;
  }
  return nullptr;
}
}  // namespace detail

}  // namespace h2df::kernels

#else

namespace h2df::kernels::detail {
const Ops* avx2_table() { return nullptr; }
}  // namespace h2df::kernels::detail

#endif
