#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

// Low-level kernels behind the codeword algebra and the antenna-domain inner
// products. Every kernel has a scalar reference implementation and, on x86
// with AVX2, a vectorized variant; the active backend is chosen once at
// startup (overridable with H2DF_KERNELS=scalar|avx2 or set_backend()).
// Variants are equivalence-tested against the scalar reference.

namespace h2df::kernels {

struct Ops {
  // dst = a | b over n words.
  void (*bit_or)(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n);
  // true iff y is bitwise covered by x, i.e. (y & ~x) == 0.
  bool (*covers)(const uint64_t* x, const uint64_t* y, size_t n);
  // out[j] = 1 iff x covers column j of a column-major bit matrix
  // (ncols columns, each `stride` words).
  void (*covers_scan)(const uint64_t* x, const uint64_t* cols, size_t ncols,
                      size_t stride, uint8_t* out);
  // dst = a + b over n u16 counters.
  void (*add_u16)(uint16_t* dst, const uint16_t* a, const uint16_t* b, size_t n);
  // dst = a - b; returns false (dst unspecified) if any lane would underflow.
  bool (*sub_u16_checked)(uint16_t* dst, const uint16_t* a, const uint16_t* b,
                          size_t n);
  // sum_i a[i] * conj(b[i]).
  std::complex<double> (*cdot)(const std::complex<double>* a,
                               const std::complex<double>* b, size_t n);
};

enum class Backend { scalar, avx2 };

const Ops& ops();
const Ops& scalar_ops();
Backend active_backend();
bool backend_available(Backend b);
void set_backend(Backend b);  // throws h2df::Error if unavailable

// Shared helpers (no vector variant; not on any hot path).
uint64_t popcount_words(const uint64_t* a, size_t n);
bool equal_words(const uint64_t* a, const uint64_t* b, size_t n);

namespace detail {
extern const Ops scalar_table;
const Ops* avx2_table();  // nullptr when unsupported by compiler or CPU
}  // namespace detail

}  // namespace h2df::kernels
