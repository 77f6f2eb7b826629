#include "h2df/codebook.hpp"

#include <cmath>

#include "h2df/gf.hpp"
#include "h2df/kernels.hpp"

namespace h2df {

namespace {
constexpr uint64_t kMaxColumns = uint64_t{1} << 22;

uint64_t checked_pow(uint64_t base, uint32_t exp, uint64_t cap) {
  uint64_t v = 1;
  for (uint32_t i = 0; i < exp; ++i) {
    if (v > cap / base) throw TooLargeError("codebook column count overflows cap");
    v *= base;
  }
  return v;
}
}  // namespace

uint32_t optimal_segments(uint64_t C, uint32_t K) {
  const double n = std::sqrt(static_cast<double>(C) / (2.0 * K));
  const auto f = static_cast<uint32_t>(std::floor(n));
  return f < 1 ? 1 : f;
}

CodeParams CodeParams::create(uint32_t K, uint32_t k, uint32_t q, uint32_t N) {
  if (K < 2) throw InvalidParamsError("need at least two users (K >= 2)");
  if (k < 1) throw InvalidParamsError("polynomial degree bound k must be >= 1");
  const uint64_t kk1 = uint64_t{K} * (k - 1);
  if (kk1 < 3) throw InvalidParamsError("K(k-1) must be at least 3");
  Gf field(q);  // NotPrimePowerError / TooLargeError
  if (q < kk1) throw InvalidParamsError("field order must satisfy q >= K(k-1)");

  CodeParams p;
  p.K = K;
  p.k = k;
  p.q = q;
  p.n0 = static_cast<uint32_t>(1 + kk1);
  p.B = q * p.n0;
  p.C = checked_pow(q, k, uint64_t{1} << 62);
  const uint32_t nmax = optimal_segments(p.C, K);
  if (N < 1 || N > nmax) {
    throw InvalidParamsError("segment count N must lie in [1, " +
                             std::to_string(nmax) + "]");
  }
  p.N = N;
  return p;
}

void H2dfCodebook::init_layout() {
  stride_ = (p_.B + 63) / 64;
}

H2dfCodebook H2dfCodebook::construct(uint32_t K, uint32_t k, uint32_t q,
                                     uint32_t N) {
  CodeParams p = CodeParams::create(K, k, q, N);
  if (p.n0 > q) {
    throw InvalidParamsError(
        "construction needs n0 = 1 + K(k-1) distinct evaluation points, "
        "but the field only has q = " + std::to_string(q) + " elements");
  }
  if (p.C > kMaxColumns) throw TooLargeError("codebook too large to materialize");

  H2dfCodebook cb;
  cb.p_ = p;
  cb.init_layout();
  cb.colwords_.assign(cb.stride_ * p.C, 0);

  Gf field(q);
  std::vector<uint32_t> coeffs(k);
  for (uint64_t j = 0; j < p.C; ++j) {
    uint64_t rest = j;
    for (uint32_t d = 0; d < k; ++d) {
      coeffs[d] = static_cast<uint32_t>(rest % q);
      rest /= q;
    }
    uint64_t* col = cb.colwords_.data() + j * cb.stride_;
    for (uint32_t t = 0; t < p.n0; ++t) {
      const uint32_t s = field.poly_eval(coeffs, t);
      const uint32_t bit = t * q + s;
      col[bit >> 6] |= uint64_t{1} << (bit & 63);
    }
  }
  return cb;
}

H2dfCodebook H2dfCodebook::from_columns(uint32_t K, uint32_t N,
                                        std::vector<BinaryCodeword> columns,
                                        uint32_t k, uint32_t q, uint32_t n0) {
  if (columns.empty()) throw InvalidParamsError("empty column list");
  if (K < 2) throw InvalidParamsError("need at least two users (K >= 2)");
  if (N < 1) throw InvalidParamsError("segment count N must be >= 1");
  const uint32_t B = columns[0].size();
  for (const auto& c : columns) {
    if (c.size() != B) throw LengthMismatchError("columns differ in length");
  }
  if (columns.size() < K) {
    throw InvalidParamsError("need at least K columns");
  }

  H2dfCodebook cb;
  cb.p_.K = K;
  cb.p_.k = k;
  cb.p_.q = q;
  cb.p_.N = N;
  cb.p_.n0 = n0;
  cb.p_.B = B;
  cb.p_.C = columns.size();
  cb.init_layout();
  cb.colwords_.assign(cb.stride_ * cb.p_.C, 0);
  for (uint64_t j = 0; j < cb.p_.C; ++j) {
    auto words = columns[j].words();
    std::copy(words.begin(), words.end(), cb.colwords_.begin() + j * cb.stride_);
  }
  if (cb.columns_per_segment() == 0) {
    throw InvalidParamsError("segment count too large for column count");
  }
  return cb;
}

BinaryCodeword H2dfCodebook::column(uint32_t j) const {
  if (j >= p_.C) throw OutOfRangeError("column index out of range");
  BinaryCodeword w(p_.B);
  const uint64_t* col = colwords_.data() + uint64_t{j} * stride_;
  for (uint32_t pos = 0; pos < p_.B; ++pos) {
    if ((col[pos >> 6] >> (pos & 63)) & 1) w.set(pos, true);
  }
  return w;
}

bool H2dfCodebook::column_bit(uint32_t j, uint32_t pos) const {
  if (j >= p_.C || pos >= p_.B) throw OutOfRangeError("column/bit out of range");
  const uint64_t* col = colwords_.data() + uint64_t{j} * stride_;
  return (col[pos >> 6] >> (pos & 63)) & 1;
}

int H2dfCodebook::lu_of(uint32_t j) const {
  const uint64_t per = columns_per_lu();
  if (j >= per * p_.K) return -1;
  return static_cast<int>(j / per);
}

int H2dfCodebook::segment_of(uint32_t j) const {
  const int lu = lu_of(j);
  if (lu < 0) return -1;
  const uint64_t per_seg = columns_per_segment();
  const uint64_t off = j - static_cast<uint64_t>(lu) * columns_per_lu();
  if (off >= per_seg * p_.N) return -1;
  return static_cast<int>(off / per_seg);
}

uint32_t H2dfCodebook::phase_to_column(uint32_t lu, uint32_t segment,
                                       uint64_t phase) const {
  if (lu >= p_.K || segment >= p_.N || phase >= columns_per_segment()) {
    throw OutOfRangeError("phase reference outside assigned region");
  }
  return static_cast<uint32_t>(lu * columns_per_lu() +
                               segment * columns_per_segment() + phase);
}

H2dfCodebook::PhaseRef H2dfCodebook::column_to_phase(uint32_t j) const {
  const int lu = lu_of(j);
  const int seg = segment_of(j);
  if (lu < 0 || seg < 0) {
    throw OutOfRangeError("column " + std::to_string(j) + " is unassigned");
  }
  const uint64_t off = j - static_cast<uint64_t>(lu) * columns_per_lu();
  return {static_cast<uint32_t>(lu), static_cast<uint32_t>(seg),
          off - static_cast<uint64_t>(seg) * columns_per_segment()};
}

Decomposition H2dfCodebook::decompose(const BinaryCodeword& w) const {
  if (w.size() != p_.B) throw LengthMismatchError("word length != codebook rows");
  Decomposition dec;
  std::vector<uint8_t> hit(p_.C);
  kernels::ops().covers_scan(w.words().data(), colwords_.data(), p_.C, stride_,
                             hit.data());
  std::vector<uint64_t> acc(stride_, 0);
  for (uint32_t j = 0; j < p_.C; ++j) {
    if (hit[j]) {
      dec.members.push_back(j);
      kernels::ops().bit_or(acc.data(), acc.data(),
                            colwords_.data() + uint64_t{j} * stride_, stride_);
    }
  }
  dec.complete = kernels::equal_words(acc.data(), w.words().data(), stride_);
  return dec;
}

AspVector H2dfCodebook::column_sum(const std::vector<uint32_t>& cols) const {
  AspVector acc(p_.B);
  for (uint32_t j : cols) acc.add_codeword(column(j));
  return acc;
}

std::optional<std::vector<uint32_t>> H2dfCodebook::mucd_by_lu(
    const Decomposition& dec) const {
  if (!dec.complete || dec.members.size() != p_.K) return std::nullopt;
  std::vector<uint32_t> by_lu(p_.K, 0);
  std::vector<bool> seen(p_.K, false);
  for (uint32_t j : dec.members) {
    const int lu = lu_of(j);
    if (lu < 0 || seen[lu]) return std::nullopt;
    seen[lu] = true;
    by_lu[lu] = j;
  }
  return by_lu;
}

bool H2dfCodebook::verify_cover_free(uint64_t max_checks) const {
  const uint64_t C = p_.C;
  const uint32_t K = p_.K;
  // C(C,K) * (C-K) cover tests.
  double est = static_cast<double>(C - K);
  for (uint32_t i = 0; i < K; ++i) {
    est *= static_cast<double>(C - i) / static_cast<double>(i + 1);
  }
  if (est > static_cast<double>(max_checks)) {
    throw TooLargeError("cover-free verification needs ~" +
                        std::to_string(static_cast<uint64_t>(est)) +
                        " checks, above the budget of " +
                        std::to_string(max_checks));
  }

  std::vector<uint32_t> idx(K);
  for (uint32_t i = 0; i < K; ++i) idx[i] = i;
  std::vector<uint64_t> uni(stride_);
  std::vector<uint8_t> hit(C);
  while (true) {
    std::fill(uni.begin(), uni.end(), 0);
    for (uint32_t i : idx) {
      kernels::ops().bit_or(uni.data(), uni.data(),
                            colwords_.data() + uint64_t{i} * stride_, stride_);
    }
    kernels::ops().covers_scan(uni.data(), colwords_.data(), C, stride_,
                               hit.data());
    uint64_t inside = 0;
    for (uint32_t j = 0; j < C; ++j) inside += hit[j];
    // Exactly the K chosen columns may be covered (each covers itself).
    if (inside != K) return false;
    for (uint32_t i : idx) {
      if (!hit[i]) return false;
    }

    // Next K-combination.
    int pos = static_cast<int>(K) - 1;
    while (pos >= 0 && idx[pos] == C - K + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (uint32_t i = pos + 1; i < K; ++i) idx[i] = idx[i - 1] + 1;
  }
  return true;
}

bool H2dfCodebook::verify_constant_weight() const {
  for (uint32_t j = 0; j < p_.C; ++j) {
    if (column(j).weight() != p_.n0) return false;
  }
  return true;
}

}  // namespace h2df
