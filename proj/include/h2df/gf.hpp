#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "h2df/errors.hpp"

// Arithmetic over GF(q), q = p^m a prime power, q <= 2^16. Elements are
// encoded as integers in [0, q): for extension fields the base-p digits of the
// encoding are the polynomial coefficients (digit i = coefficient of x^i). The
// reduction polynomial is the lexicographically smallest monic irreducible of
// degree m over GF(p) (smallest encoded value), so a field is reproducible
// from q alone. Multiplication and inversion go through log/antilog tables
// built on the smallest generator of the multiplicative group.

namespace h2df {

struct FieldSpec {
  uint32_t q = 0;
  uint32_t p = 0;
  uint32_t m = 0;
  // Reduction polynomial coefficients, ascending degree, length m + 1, monic.
  // Empty for prime fields.
  std::vector<uint32_t> reduction;
  uint32_t generator = 0;
};

class Gf {
 public:
  // Throws NotPrimePowerError if q is not a prime power (q >= 2), and
  // TooLargeError when q > 2^16 (table-based representation only).
  explicit Gf(uint32_t q);

  const FieldSpec& spec() const { return spec_; }
  uint32_t q() const { return spec_.q; }
  uint32_t characteristic() const { return spec_.p; }
  uint32_t degree() const { return spec_.m; }

  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;  // DivisionByZeroError for a == 0
  uint32_t pow(uint32_t a, uint64_t e) const;

  // Evaluates sum_i coeffs[i] * x^i by Horner's rule.
  // Requires 1 <= coeffs.size() <= q (InvalidParamsError otherwise).
  uint32_t poly_eval(std::span<const uint32_t> coeffs, uint32_t x) const;

 private:
  void check_elem(uint32_t a) const;
  FieldSpec spec_;
  std::vector<uint32_t> log_;   // log_[a] for a in [1, q)
  std::vector<uint32_t> alog_;  // alog_[i] = g^i, i in [0, q-1)
};

// Value-typed element bound to a field; arithmetic between elements of
// different Gf instances throws FieldMismatchError.
class FieldElement {
 public:
  FieldElement(const Gf& field, uint32_t value) : f_(&field), v_(value) {}

  uint32_t value() const { return v_; }
  const Gf& field() const { return *f_; }

  friend FieldElement operator+(FieldElement a, FieldElement b) {
    a.check(b);
    return {*a.f_, a.f_->add(a.v_, b.v_)};
  }
  friend FieldElement operator-(FieldElement a, FieldElement b) {
    a.check(b);
    return {*a.f_, a.f_->sub(a.v_, b.v_)};
  }
  friend FieldElement operator*(FieldElement a, FieldElement b) {
    a.check(b);
    return {*a.f_, a.f_->mul(a.v_, b.v_)};
  }
  FieldElement inverse() const { return {*f_, f_->inv(v_)}; }
  friend bool operator==(FieldElement a, FieldElement b) {
    a.check(b);
    return a.v_ == b.v_;
  }

 private:
  void check(const FieldElement& other) const {
    if (f_ != other.f_ && f_->q() != other.f_->q()) {
      throw FieldMismatchError("elements belong to different fields");
    }
  }
  const Gf* f_;
  uint32_t v_;
};

}  // namespace h2df
