#pragma once

// Exact arithmetic in GF(2^n), 1 <= n <= 24, polynomial basis.
//
// An element is stored as its coefficient vector over the basis
// {1, g, g^2, ..., g^(n-1)} where g is the class of x modulo the field's
// irreducible modulus: bit i of the integer encoding is the coefficient of g^i.

#include <bit>
#include <cstdint>
#include <optional>
#include <string>

#include "bentlab/error.hpp"

namespace bentlab {

using Word = std::uint32_t;

inline constexpr int kMaxDegree = 24;

class Field;

class Element {
 public:
  // An unbound zero. Any arithmetic on it through a Field throws FieldMismatch.
  constexpr Element() = default;

  constexpr Word value() const { return value_; }
  constexpr Word modulus() const { return modulus_; }
  constexpr bool is_zero() const { return value_ == 0; }

  friend constexpr bool operator==(Element, Element) = default;

 private:
  friend class Field;
  constexpr Element(Word value, Word modulus) : value_(value), modulus_(modulus) {}

  Word value_ = 0;
  Word modulus_ = 0;
};

namespace detail {

constexpr int degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

// Remainder of a modulo b over GF(2)[x].
constexpr std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
  const int db = degree(b);
  for (int da = degree(a); da >= db; da = degree(a)) a ^= b << (da - db);
  return a;
}

constexpr std::uint64_t clmul(Word a, Word b) {
  std::uint64_t acc = 0;
  std::uint64_t shifted = a;
  while (b != 0) {
    if (b & 1u) acc ^= shifted;
    shifted <<= 1;
    b >>= 1;
  }
  return acc;
}

}  // namespace detail

// Trial division by every polynomial of degree 1..deg(p)/2.
constexpr bool is_irreducible(std::uint64_t p) {
  const int d = detail::degree(p);
  if (d < 1) return false;
  for (std::uint64_t q = 2; detail::degree(q) <= d / 2; ++q) {
    if (detail::poly_mod(p, q) == 0) return false;
  }
  return true;
}

// Smallest (as an integer) irreducible polynomial of degree n with nonzero
// constant term.
constexpr Word default_modulus(int n) {
  for (std::uint64_t p = (std::uint64_t{1} << n) | 1u; p < (std::uint64_t{1} << (n + 1)); p += 2) {
    if (is_irreducible(p)) return static_cast<Word>(p);
  }
  return 0;  // unreachable: irreducibles exist in every degree
}

class Field {
 public:
  explicit Field(int n) : Field(n, std::nullopt) {}

  Field(int n, std::optional<Word> modulus) : n_(n) {
    if (n < 1 || n > kMaxDegree) {
      throw InvalidArgument("field degree must be in [1, 24], got " + std::to_string(n));
    }
    if (modulus) {
      if (detail::degree(*modulus) != n) {
        throw InvalidArgument("modulus degree does not match field degree " + std::to_string(n));
      }
      if ((*modulus & 1u) == 0 || !is_irreducible(*modulus)) {
        throw InvalidArgument("modulus is reducible over GF(2)");
      }
      modulus_ = *modulus;
    } else {
      modulus_ = default_modulus(n);
    }
    trace_mask_ = compute_trace_mask();
  }

  int degree() const { return n_; }
  Word modulus() const { return modulus_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }
  Word mask() const { return static_cast<Word>(size() - 1); }

  friend bool operator==(const Field& a, const Field& b) { return a.modulus_ == b.modulus_; }

  Element element(std::uint64_t v) const {
    if (v >= size()) throw InvalidArgument("element encoding out of range for GF(2^" + std::to_string(n_) + ")");
    return Element(static_cast<Word>(v), modulus_);
  }
  Element zero() const { return Element(0, modulus_); }
  Element one() const { return Element(1, modulus_); }
  // The class of x; equals 1 when n = 1.
  Element generator() const { return Element(reduce(2), modulus_); }
  bool contains(Element a) const { return a.modulus() == modulus_; }

  Element add(Element a, Element b) const {
    check(a);
    check(b);
    return Element(a.value() ^ b.value(), modulus_);
  }

  Element mul(Element a, Element b) const {
    check(a);
    check(b);
    return Element(mul_raw(a.value(), b.value()), modulus_);
  }

  Element square(Element a) const { return mul(a, a); }

  // 0^0 = 1.
  Element pow(Element a, std::uint64_t e) const {
    check(a);
    Word result = 1;
    Word base = a.value();
    while (e != 0) {
      if (e & 1u) result = mul_raw(result, base);
      base = mul_raw(base, base);
      e >>= 1;
    }
    return Element(result, modulus_);
  }

  // a^(2^n - 2).
  Element inv(Element a) const {
    check(a);
    if (a.is_zero()) throw InvalidArgument("inverse of zero");
    return pow(a, size() - 2);
  }

  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  // a^(2^k), 0 <= k < n.
  Element frob(Element a, int k) const {
    check(a);
    if (k < 0 || k >= n_) throw InvalidArgument("Frobenius power out of range");
    return Element(frob_raw(a.value(), k), modulus_);
  }

  // Tr(a) = a + a^2 + ... + a^(2^(n-1)).
  int trace(Element a) const {
    check(a);
    Word t = a.value();
    Word sum = t;
    for (int k = 1; k < n_; ++k) {
      t = mul_raw(t, t);
      sum ^= t;
    }
    return static_cast<int>(sum & 1u);
  }

  // a lies in the subfield GF(2^d); d must divide n.
  bool in_subfield(Element a, int d) const {
    check(a);
    if (d < 1 || n_ % d != 0) throw InvalidArgument("subfield degree must divide the field degree");
    return frob_raw(a.value(), d % n_) == a.value();
  }

  // Unchecked kernels on raw encodings, for inner loops.
  Word mul_raw(Word a, Word b) const { return reduce(detail::clmul(a, b)); }

  Word frob_raw(Word a, int k) const {
    for (int i = 0; i < k; ++i) a = mul_raw(a, a);
    return a;
  }

  // Bit t is Tr(g^t); Tr(a) is the parity of (a & trace_mask()).
  Word trace_mask() const { return trace_mask_; }
  int trace_raw(Word a) const { return std::popcount(a & trace_mask_) & 1; }

  void check(Element a) const {
    if (a.modulus() != modulus_) throw FieldMismatch();
  }

 private:
  Word reduce(std::uint64_t v) const {
    for (int d = detail::degree(v); d >= n_; d = detail::degree(v)) {
      v ^= std::uint64_t{modulus_} << (d - n_);
    }
    return static_cast<Word>(v);
  }

  Word compute_trace_mask() const {
    Word m = 0;
    for (int t = 0; t < n_; ++t) {
      Word x = reduce(std::uint64_t{1} << t);
      Word sum = x;
      for (int k = 1; k < n_; ++k) {
        x = mul_raw(x, x);
        sum ^= x;
      }
      m |= (sum & 1u) << t;
    }
    return m;
  }

  int n_;
  Word modulus_ = 0;
  Word trace_mask_ = 0;
};

}  // namespace bentlab
