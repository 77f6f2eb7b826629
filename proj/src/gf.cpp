#include "h2df/gf.hpp"

#include <algorithm>

namespace h2df {

namespace {

// Dense polynomial helpers over GF(p), coefficients ascending degree.
using Poly = std::vector<uint32_t>;

Poly decode_poly(uint32_t enc, uint32_t p, uint32_t len) {
  Poly c(len, 0);
  for (uint32_t i = 0; i < len && enc; ++i) {
    c[i] = enc % p;
    enc /= p;
  }
  return c;
}

uint32_t encode_poly(const Poly& c, uint32_t p) {
  uint32_t enc = 0;
  for (size_t i = c.size(); i-- > 0;) enc = enc * p + c[i];
  return enc;
}

// Remainder of a mod b, b monic. Degrees are implicit in vector lengths.
Poly poly_mod(Poly a, const Poly& b, uint32_t p) {
  const size_t db = b.size() - 1;
  while (a.size() > db) {
    const uint32_t lead = a.back();
    if (lead != 0) {
      const size_t shift = a.size() - 1 - db;
      for (size_t j = 0; j <= db; ++j) {
        const uint64_t sub = (static_cast<uint64_t>(lead) * b[j]) % p;
        a[shift + j] = static_cast<uint32_t>((a[shift + j] + p - sub) % p);
      }
    }
    a.pop_back();
  }
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

bool is_zero(const Poly& a) {
  return std::all_of(a.begin(), a.end(), [](uint32_t c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool is_irreducible(const Poly& f, uint32_t p) {
  const uint32_t deg = static_cast<uint32_t>(f.size() - 1);
  for (uint32_t d = 1; 2 * d <= deg; ++d) {
    uint64_t count = 1;
    for (uint32_t i = 0; i < d; ++i) count *= p;
    for (uint64_t t = 0; t < count; ++t) {
      Poly divisor = decode_poly(static_cast<uint32_t>(t), p, d + 1);
      divisor[d] = 1;
      if (is_zero(poly_mod(f, divisor, p))) return false;
    }
  }
  return true;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& red, uint32_t p) {
  Poly prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<uint32_t>(
          (prod[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), red, p);
}

}  // namespace

Gf::Gf(uint32_t q) {
  if (q < 2) throw NotPrimePowerError("field order must be at least 2");
  if (q > 65536) throw TooLargeError("field order above 2^16 unsupported");

  uint32_t p = 0;
  for (uint32_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;  // q itself prime
  uint32_t m = 0;
  uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) {
    throw NotPrimePowerError("order " + std::to_string(q) +
                             " is not a prime power");
  }

  spec_.q = q;
  spec_.p = p;
  spec_.m = m;

  if (m > 1) {
    // Smallest (by encoded value) monic irreducible of degree m over GF(p).
    uint64_t count = 1;
    for (uint32_t i = 0; i < m; ++i) count *= p;
    for (uint64_t t = 0; t < count; ++t) {
      Poly f = decode_poly(static_cast<uint32_t>(t), p, m + 1);
      f[m] = 1;
      if (is_irreducible(f, p)) {
        spec_.reduction = f;
        break;
      }
    }
  }

  // Multiplication used while bootstrapping the tables.
  auto raw_mul = [&](uint32_t a, uint32_t b) -> uint32_t {
    if (m == 1) {
      return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
    }
    const Poly pa = decode_poly(a, p, m);
    const Poly pb = decode_poly(b, p, m);
    Poly r = poly_mul_mod(pa, pb, spec_.reduction, p);
    r.resize(m, 0);
    return encode_poly(r, p);
  };

  // Smallest generator of the multiplicative group.
  const uint32_t group = q - 1;
  for (uint32_t g = (q == 2) ? 1 : 2; g < q; ++g) {
    uint32_t x = g;
    uint32_t order = 1;
    while (x != 1) {
      x = raw_mul(x, g);
      ++order;
    }
    if (order == group) {
      spec_.generator = g;
      break;
    }
  }

  alog_.resize(group);
  log_.assign(q, 0);
  uint32_t x = 1;
  for (uint32_t i = 0; i < group; ++i) {
    alog_[i] = x;
    log_[x] = i;
    x = raw_mul(x, spec_.generator);
  }
}

void Gf::check_elem(uint32_t a) const {
  if (a >= spec_.q) {
    throw OutOfRangeError("element " + std::to_string(a) +
                          " outside field of order " + std::to_string(spec_.q));
  }
}

uint32_t Gf::add(uint32_t a, uint32_t b) const {
  check_elem(a);
  check_elem(b);
  if (spec_.m == 1) return (a + b) % spec_.p;
  if (spec_.p == 2) return a ^ b;
  uint32_t out = 0, mult = 1;
  while (a || b) {
    const uint32_t da = a % spec_.p, db = b % spec_.p;
    out += ((da + db) % spec_.p) * mult;
    a /= spec_.p;
    b /= spec_.p;
    mult *= spec_.p;
  }
  return out;
}

uint32_t Gf::neg(uint32_t a) const {
  check_elem(a);
  if (spec_.m == 1) return (spec_.p - a) % spec_.p;
  if (spec_.p == 2) return a;
  uint32_t out = 0, mult = 1;
  while (a) {
    const uint32_t d = a % spec_.p;
    out += ((spec_.p - d) % spec_.p) * mult;
    a /= spec_.p;
    mult *= spec_.p;
  }
  return out;
}

uint32_t Gf::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t Gf::mul(uint32_t a, uint32_t b) const {
  check_elem(a);
  check_elem(b);
  if (a == 0 || b == 0) return 0;
  const uint32_t group = spec_.q - 1;
  const uint32_t e = (log_[a] + log_[b]) % group;
  return alog_[e];
}

uint32_t Gf::inv(uint32_t a) const {
  check_elem(a);
  if (a == 0) throw DivisionByZeroError("zero has no multiplicative inverse");
  const uint32_t group = spec_.q - 1;
  return alog_[(group - log_[a]) % group];
}

uint32_t Gf::pow(uint32_t a, uint64_t e) const {
  check_elem(a);
  if (a == 0) return e == 0 ? 1 : 0;
  const uint32_t group = spec_.q - 1;
  const uint64_t le = (static_cast<uint64_t>(log_[a]) * (e % group)) % group;
  return alog_[le];
}

uint32_t Gf::poly_eval(std::span<const uint32_t> coeffs, uint32_t x) const {
  if (coeffs.empty() || coeffs.size() > spec_.q) {
    throw InvalidParamsError("polynomial must have between 1 and q coefficients");
  }
  check_elem(x);
  uint32_t acc = coeffs.back();
  check_elem(acc);
  for (size_t i = coeffs.size() - 1; i-- > 0;) {
    acc = add(mul(acc, x), coeffs[i]);
  }
  return acc;
}

}  // namespace h2df
