#include "h2df/codeword.hpp"

#include "h2df/kernels.hpp"

namespace h2df {

BinaryCodeword BinaryCodeword::from_bits(std::string_view bits) {
  BinaryCodeword w(static_cast<uint32_t>(bits.size()));
  for (uint32_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      w.set(i, true);
    } else if (bits[i] != '0') {
      throw InvalidParamsError("bit string may contain only '0' and '1'");
    }
  }
  return w;
}

bool BinaryCodeword::get(uint32_t i) const {
  if (i >= len_) throw OutOfRangeError("bit index out of range");
  return (w_[i >> 6] >> (i & 63)) & 1;
}

void BinaryCodeword::set(uint32_t i, bool v) {
  if (i >= len_) throw OutOfRangeError("bit index out of range");
  const uint64_t mask = 1ull << (i & 63);
  if (v) {
    w_[i >> 6] |= mask;
  } else {
    w_[i >> 6] &= ~mask;
  }
}

uint32_t BinaryCodeword::weight() const {
  return static_cast<uint32_t>(kernels::popcount_words(w_.data(), w_.size()));
}

bool BinaryCodeword::any() const { return weight() > 0; }

bool BinaryCodeword::all() const { return weight() == len_; }

void BinaryCodeword::check_same_length(const BinaryCodeword& other) const {
  if (len_ != other.len_) {
    throw LengthMismatchError("codeword lengths differ: " +
                              std::to_string(len_) + " vs " +
                              std::to_string(other.len_));
  }
}

BinaryCodeword BinaryCodeword::or_with(const BinaryCodeword& other) const {
  check_same_length(other);
  BinaryCodeword out(len_);
  kernels::ops().bit_or(out.w_.data(), w_.data(), other.w_.data(), w_.size());
  return out;
}

void BinaryCodeword::or_in_place(const BinaryCodeword& other) {
  check_same_length(other);
  kernels::ops().bit_or(w_.data(), w_.data(), other.w_.data(), w_.size());
}

bool BinaryCodeword::covers(const BinaryCodeword& other) const {
  check_same_length(other);
  return kernels::ops().covers(w_.data(), other.w_.data(), w_.size());
}

bool BinaryCodeword::operator==(const BinaryCodeword& other) const {
  return len_ == other.len_ &&
         kernels::equal_words(w_.data(), other.w_.data(), w_.size());
}

std::string BinaryCodeword::to_string() const {
  std::string s(len_, '0');
  for (uint32_t i = 0; i < len_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

std::vector<uint32_t> BinaryCodeword::support() const {
  std::vector<uint32_t> out;
  for (uint32_t wi = 0; wi < w_.size(); ++wi) {
    uint64_t word = w_[wi];
    while (word) {
      const int bit = __builtin_ctzll(word);
      out.push_back(wi * 64 + static_cast<uint32_t>(bit));
      word &= word - 1;
    }
  }
  return out;
}

BinaryCodeword sp_sum(const BinaryCodeword& a, const BinaryCodeword& b) {
  return a.or_with(b);
}

BinaryCodeword sp_sum(std::span<const BinaryCodeword> words) {
  if (words.empty()) throw InvalidParamsError("superposition of zero codewords");
  BinaryCodeword acc = words[0];
  for (size_t i = 1; i < words.size(); ++i) acc.or_in_place(words[i]);
  return acc;
}

AspVector AspVector::from_codeword(const BinaryCodeword& w) {
  AspVector v(w.size());
  for (uint32_t i = 0; i < w.size(); ++i) v.c_[i] = w.get(i) ? 1 : 0;
  return v;
}

AspVector AspVector::from_counts(std::vector<uint16_t> counts) {
  AspVector v;
  v.c_ = std::move(counts);
  return v;
}

void AspVector::check_same_length(const AspVector& other) const {
  if (c_.size() != other.c_.size()) {
    throw LengthMismatchError("counter vector lengths differ");
  }
}

void AspVector::add_in_place(const AspVector& other) {
  check_same_length(other);
  kernels::ops().add_u16(c_.data(), c_.data(), other.c_.data(), c_.size());
}

void AspVector::add_codeword(const BinaryCodeword& w) {
  if (c_.size() != w.size()) throw LengthMismatchError("counter vector lengths differ");
  for (uint32_t i = 0; i < w.size(); ++i) {
    if (w.get(i)) ++c_[i];
  }
}

bool AspVector::sub_in_place_checked(const AspVector& other) {
  check_same_length(other);
  std::vector<uint16_t> out(c_.size());
  if (!kernels::ops().sub_u16_checked(out.data(), c_.data(), other.c_.data(),
                                      c_.size())) {
    return false;
  }
  c_ = std::move(out);
  return true;
}

bool AspVector::sub_codeword_checked(const BinaryCodeword& w) {
  return sub_in_place_checked(from_codeword(w));
}

BinaryCodeword AspVector::support() const {
  BinaryCodeword w(static_cast<uint32_t>(c_.size()));
  for (uint32_t i = 0; i < c_.size(); ++i) {
    if (c_[i] > 0) w.set(i, true);
  }
  return w;
}

AspVector asp_sum(const AspVector& a, const AspVector& b) {
  AspVector out = a;
  out.add_in_place(b);
  return out;
}

AspVector asp_sum(std::span<const BinaryCodeword> words) {
  if (words.empty()) throw InvalidParamsError("superposition of zero codewords");
  AspVector acc(words[0].size());
  for (const auto& w : words) acc.add_codeword(w);
  return acc;
}

}  // namespace h2df
