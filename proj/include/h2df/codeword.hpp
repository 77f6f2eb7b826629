#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "h2df/errors.hpp"

// Binary codewords of a fixed length B and their two aggregate views: the
// Boolean superposition (bitwise OR) and the arithmetic superposition
// (per-position occupancy counters). Binary sums discard multiplicity;
// counter sums keep it.

namespace h2df {

class AspVector;

class BinaryCodeword {
 public:
  BinaryCodeword() = default;
  explicit BinaryCodeword(uint32_t length)
      : len_(length), w_((length + 63) / 64, 0) {}

  // Builds from a string of '0'/'1', most significant position first is NOT
  // implied: bits[i] is position i.
  static BinaryCodeword from_bits(std::string_view bits);

  uint32_t size() const { return len_; }
  bool get(uint32_t i) const;
  void set(uint32_t i, bool v);

  uint32_t weight() const;
  bool any() const;
  bool all() const;

  // this | other.
  BinaryCodeword or_with(const BinaryCodeword& other) const;
  void or_in_place(const BinaryCodeword& other);

  // true iff other is inside this codeword's support: (other | *this) == *this.
  bool covers(const BinaryCodeword& other) const;

  bool operator==(const BinaryCodeword& other) const;

  std::span<const uint64_t> words() const { return w_; }
  std::string to_string() const;

  std::vector<uint32_t> support() const;

 private:
  friend class AspVector;
  void check_same_length(const BinaryCodeword& other) const;
  uint32_t len_ = 0;
  std::vector<uint64_t> w_;
};

// Boolean superposition of codewords.
BinaryCodeword sp_sum(const BinaryCodeword& a, const BinaryCodeword& b);
BinaryCodeword sp_sum(std::span<const BinaryCodeword> words);

// Per-position occupancy counters.
class AspVector {
 public:
  AspVector() = default;
  explicit AspVector(uint32_t length) : c_(length, 0) {}
  static AspVector from_codeword(const BinaryCodeword& w);
  static AspVector from_counts(std::vector<uint16_t> counts);

  uint32_t size() const { return static_cast<uint32_t>(c_.size()); }
  uint16_t operator[](uint32_t i) const { return c_[i]; }
  void set(uint32_t i, uint16_t v) { c_[i] = v; }

  void add_in_place(const AspVector& other);
  void add_codeword(const BinaryCodeword& w);
  // *this - other; false (and *this unchanged) if any counter would go
  // negative.
  bool sub_in_place_checked(const AspVector& other);
  bool sub_codeword_checked(const BinaryCodeword& w);

  // Positions with nonzero count.
  BinaryCodeword support() const;

  bool operator==(const AspVector& other) const = default;

  std::span<const uint16_t> counts() const { return c_; }

 private:
  void check_same_length(const AspVector& other) const;
  std::vector<uint16_t> c_;
};

AspVector asp_sum(const AspVector& a, const AspVector& b);
AspVector asp_sum(std::span<const BinaryCodeword> words);

}  // namespace h2df
