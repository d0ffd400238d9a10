#pragma once

// Test-only helpers: brute-force reference arithmetic and the exhaustive
// property checks shared by the unit suites and the acceptance binary.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bentlab/bentlab.hpp"

namespace bentlab::testing {

// Reducible polynomials of degree n, as the set of all products of two
// factors of degree >= 1.
inline std::set<std::uint64_t> reducible_of_degree(int n) {
  std::set<std::uint64_t> out;
  for (int da = 1; da < n; ++da) {
    const int db = n - da;
    for (std::uint64_t a = std::uint64_t{1} << da; a < (std::uint64_t{2} << da); ++a) {
      for (std::uint64_t b = std::uint64_t{1} << db; b < (std::uint64_t{2} << db); ++b) {
        std::uint64_t prod = 0;
        for (int i = 0; i <= db; ++i) {
          if ((b >> i) & 1u) prod ^= a << i;
        }
        out.insert(prod);
      }
    }
  }
  return out;
}

// Multiplication through the table of powers of x, x^k reduced by repeated
// shift-and-subtract.
class ShiftMul {
 public:
  explicit ShiftMul(const Field& f) : n_(f.degree()) {
    Word v = 1;
    for (int k = 0; k < 2 * n_; ++k) {
      xpow_.push_back(v);
      v <<= 1;
      if ((v >> n_) & 1u) v ^= f.modulus();
    }
  }

  Word operator()(Word a, Word b) const {
    Word r = 0;
    for (int i = 0; i < n_; ++i) {
      if (!((a >> i) & 1u)) continue;
      for (int j = 0; j < n_; ++j) {
        if ((b >> j) & 1u) r ^= xpow_[i + j];
      }
    }
    return r;
  }

 private:
  int n_;
  std::vector<Word> xpow_;
};

inline LinearizedPoly random_poly(const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<Word> dist(0, f.mask());
  std::vector<Element> coeffs;
  for (int i = 0; i < f.degree(); ++i) coeffs.push_back(f.element(dist(rng)));
  return LinearizedPoly(f, coeffs);
}

inline LinearizedPoly random_permutation(const Field& f, std::mt19937_64& rng) {
  while (true) {
    LinearizedPoly p = random_poly(f, rng);
    if (oracle::is_bijective(p)) return p;
  }
}

inline BooleanFunction random_function(const Field& f, std::mt19937_64& rng) {
  BooleanFunction fn(f);
  for (auto& w : fn.words()) w = rng();
  if (fn.size() < 64) fn.words()[0] &= (std::uint64_t{1} << fn.size()) - 1;
  return fn;
}

// Each check returns an empty string on success, or a description of the
// first counterexample.

inline std::string check_field_axioms(const Field& f) {
  const Word q = static_cast<Word>(f.size());
  auto e = [&](Word v) { return f.element(v); };
  for (Word a = 0; a < q; ++a) {
    if (f.add(e(a), f.zero()) != e(a) || f.mul(e(a), f.one()) != e(a)) return "identity fails at " + std::to_string(a);
    if (a != 0 && f.mul(e(a), f.inv(e(a))) != f.one()) return "inverse fails at " + std::to_string(a);
    for (Word b = 0; b < q; ++b) {
      if (f.mul(e(a), e(b)) != f.mul(e(b), e(a))) return "commutativity";
      const Word ab = f.mul_raw(a, b);
      for (Word c = 0; c < q; ++c) {
        if (f.mul_raw(ab, c) != f.mul_raw(a, f.mul_raw(b, c))) return "associativity";
        if (f.mul_raw(a, b ^ c) != (ab ^ f.mul_raw(a, c))) return "distributivity";
      }
    }
  }
  return {};
}

inline std::string check_frobenius(const Field& f) {
  const Word q = static_cast<Word>(f.size());
  const int n = f.degree();
  for (Word a = 0; a < q; ++a) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (f.frob(f.frob(f.element(a), i), j) != f.frob(f.element(a), (i + j) % n)) return "frobenius composition";
      }
    }
    for (Word b = 0; b < q; ++b) {
      for (int k = 0; k < n; ++k) {
        const Element x = f.element(a), y = f.element(b);
        if (f.frob(f.add(x, y), k) != f.add(f.frob(x, k), f.frob(y, k))) return "frobenius additivity";
        if (f.frob(f.mul(x, y), k) != f.mul(f.frob(x, k), f.frob(y, k))) return "frobenius multiplicativity";
      }
    }
  }
  return {};
}

inline std::string check_trace(const Field& f) {
  const Word q = static_cast<Word>(f.size());
  std::uint64_t zeros = 0;
  for (Word a = 0; a < q; ++a) {
    const int ta = f.trace(f.element(a));
    if (ta != oracle::trace(f, f.element(a))) return "trace disagrees with oracle";
    if (ta != f.trace_raw(a)) return "trace mask disagrees";
    if (f.trace(f.square(f.element(a))) != ta) return "trace not invariant under squaring";
    zeros += ta == 0;
    for (Word b = 0; b < q; ++b) {
      if (f.trace(f.element(a ^ b)) != (ta ^ f.trace(f.element(b)))) return "trace not linear";
    }
  }
  if (f.degree() >= 1 && zeros != q / 2) return "trace not balanced";
  return {};
}

inline std::string check_subfield_counts(const Field& f) {
  for (int d = 1; d <= f.degree(); ++d) {
    if (f.degree() % d != 0) continue;
    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a < f.size(); ++a) count += f.in_subfield(f.element(a), d);
    if (count != (std::uint64_t{1} << d)) return "subfield GF(2^" + std::to_string(d) + ") has the wrong size";
  }
  return {};
}

// Evaluation additivity, composition against nested evaluation, associativity,
// and the rank permutation test against the occupancy bitmap, on `samples`
// random polynomials, each exhaustively over all inputs.
inline std::string check_linpoly(const Field& f, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Word q = static_cast<Word>(f.size());
  for (int s = 0; s < samples; ++s) {
    const LinearizedPoly l = random_poly(f, rng);
    const LinearizedPoly m = random_poly(f, rng);
    const LinearizedPoly k = random_poly(f, rng);
    const LinearizedPoly lm = compose(l, m);
    const auto table = eval_table(l);
    for (Word x = 0; x < q; ++x) {
      const Element ex = f.element(x);
      if (eval(lm, ex) != oracle::evaluate(l, oracle::evaluate(m, ex))) return "compose disagrees with nested evaluation";
      if (table[x] != oracle::evaluate(l, ex).value()) return "eval_table disagrees with oracle";
      if (eval(l + m, ex) != f.add(eval(l, ex), eval(m, ex))) return "sum disagrees with pointwise sum";
    }
    for (Word x = 0; x < q; x += 1 + q / 64) {
      for (Word y = 0; y < q; y += 1 + q / 64) {
        if (eval(l, f.element(x ^ y)) != f.add(eval(l, f.element(x)), eval(l, f.element(y)))) return "eval not additive";
      }
    }
    if (!(compose(compose(l, m), k) == compose(l, compose(m, k)))) return "compose not associative";
    if (is_permutation(l) != oracle::is_bijective(l)) return "rank permutation test disagrees with bitmap";
  }
  return {};
}

// Every x -> x + y additivity pair, for small fields.
inline std::string check_eval_additive_exhaustive(const Field& f, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Word q = static_cast<Word>(f.size());
  for (int s = 0; s < samples; ++s) {
    const LinearizedPoly l = random_poly(f, rng);
    const auto t = oracle::value_table(l);
    for (Word x = 0; x < q; ++x) {
      for (Word y = 0; y < q; ++y) {
        if (t[x ^ y] != (t[x] ^ t[y])) return "eval not additive";
      }
    }
  }
  return {};
}

inline std::string check_inverse(const Field& f, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const LinearizedPoly id = LinearizedPoly::identity(f);
  for (int s = 0; s < samples; ++s) {
    const LinearizedPoly p = random_permutation(f, rng);
    const LinearizedPoly inv = inverse(p);
    if (!(compose(inv, p) == id) || !(compose(p, inv) == id)) return "inverse does not compose to identity";
    const auto table = oracle::exhaustive_inverse(p);
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      if (eval(inv, f.element(x)).value() != table[x]) return "inverse disagrees with exhaustive inverse";
    }
  }
  return {};
}

}  // namespace bentlab::testing
