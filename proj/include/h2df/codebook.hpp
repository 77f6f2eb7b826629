#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "h2df/codeword.hpp"

// Superimposed pilot codebook: a B x C binary matrix whose columns are the
// codewords. Columns are constant-weight indicator patterns of Reed-Solomon
// style evaluations: column j encodes the degree-<k polynomial over GF(q)
// whose coefficients are the base-q digits of j, evaluated at the first
// n0 = 1 + K(k-1) field elements; the q-ary symbol s of block t sets bit
// t*q + s. Hence B = q*n0, C = q^k, every column has weight n0, two distinct
// columns agree on at most k-1 blocks, and no column is covered by the union
// of any K others (cover-free of order K).
//
// The column range is carved into K contiguous submatrices of floor(C/K)
// columns (one per user), each subdivided into N contiguous segments of
// floor(C/(K*N)) columns; leftover columns are unassigned and never used.

namespace h2df {

struct CodeParams {
  uint32_t K = 0;  // cover-free order / number of users
  uint32_t k = 0;  // polynomial degree bound (code dimension)
  uint32_t q = 0;  // field order
  uint32_t N = 1;  // segments per submatrix
  uint32_t n0 = 0;
  uint32_t B = 0;
  uint64_t C = 0;

  // Validates K >= 2, K(k-1) >= 3, q a prime power >= K(k-1), and
  // 1 <= N <= floor(sqrt(C / 2K)). Throws InvalidParamsError or
  // NotPrimePowerError. Note this admits q = K(k-1) for which the matrix
  // itself cannot be constructed (see H2dfCodebook::construct).
  static CodeParams create(uint32_t K, uint32_t k, uint32_t q, uint32_t N = 1);
};

struct Decomposition {
  // Columns covered by the queried word, ascending index.
  std::vector<uint32_t> members;
  // true iff the superposition of the members reproduces the queried word.
  bool complete = false;
};

// Largest admissible segment count: floor(sqrt(C / 2K)), at least 1. The
// bound ceiling 1/(2KN) and floor N/C meet exactly when N^2 = C/(2K).
uint32_t optimal_segments(uint64_t C, uint32_t K);

class H2dfCodebook {
 public:
  // Builds the evaluation codebook. On top of CodeParams validation this
  // needs n0 <= q distinct evaluation points, so q = K(k-1) exactly is
  // rejected. C is capped at 2^22 columns (TooLargeError).
  static H2dfCodebook construct(uint32_t K, uint32_t k, uint32_t q,
                                uint32_t N = 1);

  // Wraps an explicit column list (deserialization and tests). Only shape
  // checks are applied here; run verify_cover_free for the real property.
  static H2dfCodebook from_columns(uint32_t K, uint32_t N,
                                   std::vector<BinaryCodeword> columns,
                                   uint32_t k = 0, uint32_t q = 0,
                                   uint32_t n0 = 0);

  const CodeParams& params() const { return p_; }
  uint32_t length() const { return p_.B; }
  uint64_t columns() const { return p_.C; }

  BinaryCodeword column(uint32_t j) const;
  bool column_bit(uint32_t j, uint32_t pos) const;

  // Submatrix / segment layout.
  uint64_t columns_per_lu() const { return p_.C / p_.K; }
  uint64_t columns_per_segment() const { return p_.C / (uint64_t{p_.K} * p_.N); }
  int lu_of(uint32_t j) const;       // -1 when unassigned
  int segment_of(uint32_t j) const;  // -1 when unassigned

  // (lu, segment, phase) <-> column index. Throws OutOfRangeError for
  // arguments outside the assigned region.
  uint32_t phase_to_column(uint32_t lu, uint32_t segment, uint64_t phase) const;
  struct PhaseRef {
    uint32_t lu, segment;
    uint64_t phase;
  };
  PhaseRef column_to_phase(uint32_t j) const;

  // All columns covered by w. For any superposition of at most K codewords
  // the members are exactly the constituent columns (cover-freeness).
  Decomposition decompose(const BinaryCodeword& w) const;

  // Occupancy counters of a set of columns.
  AspVector column_sum(const std::vector<uint32_t>& cols) const;

  // If members form a complete set of exactly K columns, one per submatrix,
  // returns them ordered by submatrix index.
  std::optional<std::vector<uint32_t>> mucd_by_lu(
      const Decomposition& dec) const;

  // Exhaustive cover-free check of order K: for every K-subset P of columns
  // and every column j outside P, the union of P must not cover j. Work is
  // C(C,K) * (C-K) cover tests; throws TooLargeError if that exceeds
  // max_checks. Returns false on the first violation.
  bool verify_cover_free(uint64_t max_checks = 50'000'000) const;

  // Constant column weight n0 (construction invariant).
  bool verify_constant_weight() const;

  std::span<const uint64_t> raw_words() const { return colwords_; }
  size_t stride() const { return stride_; }

 private:
  H2dfCodebook() = default;
  void init_layout();

  CodeParams p_;
  size_t stride_ = 0;                // words per column
  std::vector<uint64_t> colwords_;   // column-major, C * stride
};

}  // namespace h2df
