#include "h2df/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "h2df/errors.hpp"

namespace h2df::kernels {

namespace {

void bit_or_scalar(uint64_t* dst, const uint64_t* a, const uint64_t* b,
                   size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] = a[i] | b[i];
}

bool covers_scalar(const uint64_t* x, const uint64_t* y, size_t n) {
  for (size_t i = 0; i < n; ++i) {
    if (y[i] & ~x[i]) return false;
  }
  return true;
}

void covers_scan_scalar(const uint64_t* x, const uint64_t* cols, size_t ncols,
                        size_t stride, uint8_t* out) {
  for (size_t j = 0; j < ncols; ++j) {
    out[j] = covers_scalar(x, cols + j * stride, stride) ? 1 : 0;
  }
}

void add_u16_scalar(uint16_t* dst, const uint16_t* a, const uint16_t* b,
                    size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] = static_cast<uint16_t>(a[i] + b[i]);
}

bool sub_u16_checked_scalar(uint16_t* dst, const uint16_t* a, const uint16_t* b,
                            size_t n) {
  for (size_t i = 0; i < n; ++i) {
    if (b[i] > a[i]) return false;
    dst[i] = static_cast<uint16_t>(a[i] - b[i]);
  }
  return true;
}

std::complex<double> cdot_scalar(const std::complex<double>* a,
                                 const std::complex<double>* b, size_t n) {
  double re = 0.0, im = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double ar = a[i].real(), ai = a[i].imag();
    const double br = b[i].real(), bi = b[i].imag();
    re += ar * br + ai * bi;
    im += ai * br - ar * bi;
  }
  return {re, im};
}

std::atomic<const Ops*> g_active{nullptr};
std::atomic<Backend> g_backend{Backend::scalar};

const Ops* init_backend() {
  const Ops* table = &detail::scalar_table;
  Backend backend = Backend::scalar;
  if (const Ops* avx2 = detail::avx2_table()) {
    table = avx2;
    backend = Backend::avx2;
  }
  if (const char* env = std::getenv("H2DF_KERNELS")) {
    if (std::strcmp(env, "scalar") == 0) {
      table = &detail::scalar_table;
      backend = Backend::scalar;
    } else if (std::strcmp(env, "avx2") == 0 && detail::avx2_table()) {
      table = detail::avx2_table();
      backend = Backend::avx2;
    }
  }
  g_backend.store(backend, std::memory_order_relaxed);
  return table;
}

}  // namespace

namespace detail {
const Ops scalar_table = {
    bit_or_scalar,  covers_scalar, covers_scan_scalar,
    add_u16_scalar, sub_u16_checked_scalar, cdot_scalar,
};
}  // namespace detail

const Ops& scalar_ops() { return detail::scalar_table; }

const Ops& ops() {
  const Ops* t = g_active.load(std::memory_order_acquire);
  if (!t) {
    t = init_backend();
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

Backend active_backend() {
  ops();
  return g_backend.load(std::memory_order_relaxed);
}

bool backend_available(Backend b) {
  return b == Backend::scalar || detail::avx2_table() != nullptr;
}

void set_backend(Backend b) {
  if (b == Backend::scalar) {
    g_active.store(&detail::scalar_table, std::memory_order_release);
  } else {
    const Ops* avx2 = detail::avx2_table();
    if (!avx2) throw Error("avx2 kernels unavailable on this machine");
    g_active.store(avx2, std::memory_order_release);
  }
  g_backend.store(b, std::memory_order_relaxed);
}

uint64_t popcount_words(const uint64_t* a, size_t n) {
  uint64_t c = 0;
  for (size_t i = 0; i < n; ++i) c += static_cast<uint64_t>(__builtin_popcountll(a[i]));
  return c;
}

bool equal_words(const uint64_t* a, const uint64_t* b, size_t n) {
  return std::memcmp(a, b, n * sizeof(uint64_t)) == 0;
}

}  // namespace h2df::kernels
