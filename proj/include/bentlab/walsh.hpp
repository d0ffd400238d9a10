#pragma once

// Boolean functions on GF(2^n) x GF(2^n), their synthesis from permutation
// triples, and Walsh-Hadamard spectra
//
//   W(a, b) = sum_{x,y} (-1)^(f(x,y) + Tr(ax + by)).
//
// Truth tables and spectra share one index layout: (int(x) << n) | int(y),
// and (int(a) << n) | int(b) respectively.

#include <algorithm>
#include <bit>
#include <concepts>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <string>
#include <vector>

#include "bentlab/error.hpp"
#include "bentlab/field.hpp"
#include "bentlab/linpoly.hpp"
#include "bentlab/triples.hpp"

namespace bentlab {

// In-memory truth tables and spectra stop at 2n = 24 variables.
inline constexpr int kMaxTableDegree = 12;

// Unnormalized in-place Walsh-Hadamard butterfly; data.size() must be a power of two.
template <std::integral T>
void fwht(std::span<T> data) {
  const std::size_t size = data.size();
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      T* lo = data.data() + block;
      T* hi = lo + half;
      for (std::size_t k = 0; k < half; ++k) {
        const T u = lo[k];
        const T v = hi[k];
        lo[k] = u + v;
        hi[k] = u - v;
      }
    }
  }
}

class BooleanFunction {
 public:
  explicit BooleanFunction(const Field& field) : field_(field) {
    if (field.degree() > kMaxTableDegree) {
      throw ResourceLimit("truth tables are limited to GF(2^n) x GF(2^n) with n <= 12");
    }
    words_.assign((size() + 63) / 64, 0);
  }

  const Field& field() const { return field_; }
  // Number of variables, 2n.
  int num_vars() const { return 2 * field_.degree(); }
  std::uint64_t size() const { return std::uint64_t{1} << num_vars(); }

  std::uint64_t index(Word x, Word y) const { return (std::uint64_t{x} << field_.degree()) | y; }

  bool get(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  bool operator()(Word x, Word y) const { return get(index(x, y)); }

  void set(std::uint64_t i, bool bit) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    words_[i >> 6] = bit ? (words_[i >> 6] | m) : (words_[i >> 6] & ~m);
  }

  std::uint64_t weight() const {
    std::uint64_t w = 0;
    for (std::uint64_t word : words_) w += std::popcount(word);
    return w;
  }

  // Packed bits, 64 per word, bit i of the table at bit (i % 64) of word i / 64.
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  friend bool operator==(const BooleanFunction& a, const BooleanFunction& b) {
    return a.field_ == b.field_ && a.words_ == b.words_;
  }

 private:
  Field field_;
  std::vector<std::uint64_t> words_;
};

struct WalshSpectrum {
  int num_vars = 0;
  std::vector<std::int32_t> values;
  std::int32_t max_abs = 0;
  std::int32_t min_abs = 0;

  std::int64_t sum_of_squares() const {
    std::int64_t s = 0;
    for (std::int32_t v : values) s += std::int64_t{v} * v;
    return s;
  }
};

inline WalshSpectrum make_spectrum(int num_vars, std::vector<std::int32_t> values) {
  WalshSpectrum s;
  s.num_vars = num_vars;
  s.values = std::move(values);
  s.min_abs = s.values.empty() ? 0 : std::abs(s.values.front());
  for (std::int32_t v : s.values) {
    s.max_abs = std::max(s.max_abs, std::abs(v));
    s.min_abs = std::min(s.min_abs, std::abs(v));
  }
  return s;
}

// dual[a] has bit t equal to Tr(a g^t), so Tr(a x) = parity(dual[a] & x).
// This is the Gram matrix of the trace form applied to every a.
inline std::vector<Word> trace_dual_table(const Field& f) {
  const int n = f.degree();
  std::vector<Word> rows(n, 0);
  Element gs = f.one();
  for (int s = 0; s < n; ++s) {
    Element gst = gs;
    for (int t = 0; t < n; ++t) {
      rows[s] |= static_cast<Word>(f.trace_raw(gst.value())) << t;
      gst = f.mul(gst, f.generator());
    }
    gs = f.mul(gs, f.generator());
  }
  std::vector<Word> dual(f.size(), 0);
  for (std::uint64_t a = 1; a < dual.size(); ++a) dual[a] = dual[a & (a - 1)] ^ rows[std::countr_zero(a)];
  return dual;
}

// g(x, y) = t1 t2 + t2 t3 + t1 t3 with t_i = Tr(x phi_i(y)), i.e. the
// majority of the three trace bits.
inline BooleanFunction synthesize(const PermutationTriple& t) {
  const Field& f = t.field;
  BooleanFunction g(f);
  const auto dual = trace_dual_table(f);
  const auto v1 = eval_table(t.phi[0]);
  const auto v2 = eval_table(t.phi[1]);
  const auto v3 = eval_table(t.phi[2]);
  const std::uint64_t q = f.size();
  for (std::uint64_t x = 0; x < q; ++x) {
    const Word mask = dual[x];
    for (std::uint64_t y = 0; y < q; ++y) {
      const int t1 = std::popcount(v1[y] & mask) & 1;
      const int t2 = std::popcount(v2[y] & mask) & 1;
      const int t3 = std::popcount(v3[y] & mask) & 1;
      g.set((x << f.degree()) | y, (t1 & t2) ^ (t2 & t3) ^ (t1 & t3));
    }
  }
  return g;
}

// Maiorana-McFarland function Tr(x phi(y)) + h(y); h has 2^n entries.
inline BooleanFunction mm_synthesize(const LinearizedPoly& phi, const std::vector<bool>& h) {
  const Field& f = phi.field();
  if (!is_permutation(phi)) throw ConditionViolation("Maiorana-McFarland construction needs a permutation");
  if (h.size() != f.size()) throw InvalidArgument("h must have one entry per field element");
  BooleanFunction g(f);
  const auto dual = trace_dual_table(f);
  const auto v = eval_table(phi);
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    for (std::uint64_t y = 0; y < f.size(); ++y) {
      g.set((x << f.degree()) | y, ((std::popcount(v[y] & dual[x]) & 1) != 0) != h[y]);
    }
  }
  return g;
}

// Sign vector, plain fast transform, then a gather through the trace-dual
// map on each index half: W(a, b) = H((dual[a] << n) | dual[b]).
inline WalshSpectrum walsh_spectrum(const BooleanFunction& fn) {
  const Field& f = fn.field();
  const int n = f.degree();
  const std::uint64_t size = fn.size();
  std::vector<std::int32_t> h(size);
  for (std::uint64_t i = 0; i < size; ++i) h[i] = fn.get(i) ? -1 : 1;
  fwht(std::span<std::int32_t>(h));
  const auto dual = trace_dual_table(f);
  std::vector<std::int32_t> w(size);
  for (std::uint64_t a = 0; a < f.size(); ++a) {
    const std::uint64_t hi = std::uint64_t{dual[a]} << n;
    const std::uint64_t out = a << n;
    for (std::uint64_t b = 0; b < f.size(); ++b) w[out | b] = h[hi | dual[b]];
  }
  return make_spectrum(fn.num_vars(), std::move(w));
}

inline bool is_bent(const WalshSpectrum& s) {
  const std::int32_t target = std::int32_t{1} << (s.num_vars / 2);
  return s.num_vars % 2 == 0 && s.max_abs == target && s.min_abs == target;
}

inline bool is_bent(const BooleanFunction& fn) { return is_bent(walsh_spectrum(fn)); }

// 2^(v-1) - max|W| / 2 for v variables.
inline std::int64_t nonlinearity(const WalshSpectrum& s) {
  return (std::int64_t{1} << (s.num_vars - 1)) - s.max_abs / 2;
}

inline std::int64_t nonlinearity(const BooleanFunction& fn) { return nonlinearity(walsh_spectrum(fn)); }

}  // namespace bentlab
