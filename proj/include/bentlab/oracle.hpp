#pragma once

// Brute-force reference implementations. Nothing here calls into the
// linpoly/triples/walsh code paths; only Field arithmetic is shared.

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "bentlab/error.hpp"
#include "bentlab/field.hpp"
#include "bentlab/linpoly.hpp"
#include "bentlab/triples.hpp"
#include "bentlab/walsh.hpp"

namespace bentlab::oracle {

inline constexpr int kMaxOracleDegree = 12;
inline constexpr int kMaxNaiveWalshVars = 16;

inline void require_small(const Field& f, int limit = kMaxOracleDegree) {
  if (f.degree() > limit) throw ResourceLimit("oracle paths are limited to small fields");
}

// x + x^2 + ... + x^(2^(n-1)) by repeated multiplication.
inline int trace(const Field& f, Element x) {
  Element sum = f.zero();
  Element power = x;
  for (int k = 0; k < f.degree(); ++k) {
    sum = f.add(sum, power);
    power = f.mul(power, power);
  }
  if (sum.value() > 1) throw Error("oracle: trace left the prime field");
  return static_cast<int>(sum.value());
}

// sum_i c_i x^(2^i), term by term.
inline Element evaluate(const LinearizedPoly& p, Element x) {
  const Field& f = p.field();
  Element acc = f.zero();
  Element power = x;
  for (Element c : p.coeffs()) {
    acc = f.add(acc, f.mul(c, power));
    power = f.mul(power, power);
  }
  return acc;
}

inline std::vector<Word> value_table(const LinearizedPoly& p) {
  const Field& f = p.field();
  std::vector<Word> table(f.size());
  for (std::uint64_t x = 0; x < f.size(); ++x) table[x] = evaluate(p, f.element(x)).value();
  return table;
}

// Occupancy bitmap over the image.
inline bool is_bijective(const std::vector<Word>& table) {
  std::vector<bool> hit(table.size(), false);
  for (Word v : table) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

inline bool is_bijective(const LinearizedPoly& p) {
  require_small(p.field());
  return is_bijective(value_table(p));
}

// Inverse lookup table of a permutation: result[p(x)] = x.
inline std::vector<Word> exhaustive_inverse(const LinearizedPoly& p) {
  require_small(p.field());
  const auto table = value_table(p);
  if (!is_bijective(table)) throw ConditionViolation("oracle: map is not a permutation");
  std::vector<Word> inv(table.size());
  for (std::size_t x = 0; x < table.size(); ++x) inv[table[x]] = static_cast<Word>(x);
  return inv;
}

// p(p(x)) = x for every x.
inline bool involution_scan(const LinearizedPoly& p) {
  const Field& f = p.field();
  require_small(f);
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    const Element e = f.element(x);
    if (evaluate(p, evaluate(p, e)) != e) return false;
  }
  return true;
}

// Both conditions of (A_n) checked point by point.
inline AnReport pointwise_an_check(const PermutationTriple& t) {
  const Field& f = t.field;
  require_small(f);
  std::array<std::vector<Word>, 3> tables;
  AnReport r;
  for (int i = 0; i < 3; ++i) {
    tables[i] = value_table(t.phi[i]);
    r.each_permutation[i] = is_bijective(tables[i]);
  }
  std::vector<Word> psi(f.size());
  for (std::size_t x = 0; x < psi.size(); ++x) psi[x] = tables[0][x] ^ tables[1][x] ^ tables[2][x];
  r.sum_is_permutation = is_bijective(psi);
  const bool all_perm = r.each_permutation[0] && r.each_permutation[1] && r.each_permutation[2];
  if (all_perm && r.sum_is_permutation) {
    std::array<std::vector<Word>, 3> inverses;
    for (int i = 0; i < 3; ++i) {
      inverses[i].resize(f.size());
      for (std::size_t x = 0; x < psi.size(); ++x) inverses[i][tables[i][x]] = static_cast<Word>(x);
    }
    std::vector<Word> psi_inv(f.size());
    for (std::size_t x = 0; x < psi.size(); ++x) psi_inv[psi[x]] = static_cast<Word>(x);
    r.inverse_sum_identity = true;
    for (std::size_t x = 0; x < psi.size(); ++x) {
      if (psi_inv[x] != (inverses[0][x] ^ inverses[1][x] ^ inverses[2][x])) {
        r.inverse_sum_identity = false;
        break;
      }
    }
  }
  r.satisfied = all_perm && r.sum_is_permutation && r.inverse_sum_identity;
  return r;
}

// Agreement-set sizes by direct comparison of values.
inline EUnionReport naive_e_union(const PermutationTriple& t) {
  const Field& f = t.field;
  require_small(f, 16);
  EUnionReport r;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    const Element e = f.element(x);
    const Element a = evaluate(t.phi[0], e);
    const Element b = evaluate(t.phi[1], e);
    const Element c = evaluate(t.phi[2], e);
    r.e12 += a == b;
    r.e13 += a == c;
    r.e23 += b == c;
    r.e_union += (a == b || a == c || b == c);
  }
  r.covers_field = r.e_union == f.size();
  r.mm_sufficient = r.covers_field;
  return r;
}

// The triple's Boolean function point by point from the three trace products.
inline BooleanFunction naive_synthesize(const PermutationTriple& t) {
  const Field& f = t.field;
  require_small(f, 8);
  BooleanFunction g(f);
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    for (std::uint64_t y = 0; y < f.size(); ++y) {
      const Element ex = f.element(x);
      const Element ey = f.element(y);
      const int t1 = trace(f, f.mul(ex, evaluate(t.phi[0], ey)));
      const int t2 = trace(f, f.mul(ex, evaluate(t.phi[1], ey)));
      const int t3 = trace(f, f.mul(ex, evaluate(t.phi[2], ey)));
      g.set(g.index(static_cast<Word>(x), static_cast<Word>(y)), ((t1 * t2 + t2 * t3 + t1 * t3) & 1) != 0);
    }
  }
  return g;
}

// W(a, b) = sum_{x,y} (-1)^(f(x,y) + Tr(ax + by)) as a literal double loop.
// Trace and product tables are filled once so the loop itself is cheap.
inline WalshSpectrum naive_walsh(const BooleanFunction& fn) {
  const Field& f = fn.field();
  if (fn.num_vars() > kMaxNaiveWalshVars) throw ResourceLimit("naive Walsh transform is limited to 16 variables");
  const std::uint64_t q = f.size();
  std::vector<std::uint8_t> tr(q);
  for (std::uint64_t z = 0; z < q; ++z) tr[z] = static_cast<std::uint8_t>(trace(f, f.element(z)));
  std::vector<Word> prod(q * q);
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t x = 0; x < q; ++x) prod[a * q + x] = f.mul(f.element(a), f.element(x)).value();
  }
  std::vector<std::int32_t> values(q * q);
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      std::int32_t sum = 0;
      for (std::uint64_t x = 0; x < q; ++x) {
        const Word ax = prod[a * q + x];
        for (std::uint64_t y = 0; y < q; ++y) {
          const int bit = fn(static_cast<Word>(x), static_cast<Word>(y)) ^ tr[ax ^ prod[b * q + y]];
          sum += bit ? -1 : 1;
        }
      }
      values[(a << f.degree()) | b] = sum;
    }
  }
  return make_spectrum(fn.num_vars(), std::move(values));
}

// Minimum distance to all affine functions Tr(ax + by) + c, by counting.
inline std::int64_t naive_nonlinearity(const BooleanFunction& fn) {
  const Field& f = fn.field();
  require_small(f, 4);
  const std::uint64_t q = f.size();
  std::int64_t best = static_cast<std::int64_t>(fn.size());
  for (std::uint64_t a = 0; a < q; ++a) {
    for (std::uint64_t b = 0; b < q; ++b) {
      std::int64_t dist = 0;
      for (std::uint64_t x = 0; x < q; ++x) {
        for (std::uint64_t y = 0; y < q; ++y) {
          const Element lin = f.add(f.mul(f.element(a), f.element(x)), f.mul(f.element(b), f.element(y)));
          dist += fn(static_cast<Word>(x), static_cast<Word>(y)) != (trace(f, lin) == 1);
        }
      }
      best = std::min({best, dist, static_cast<std::int64_t>(fn.size()) - dist});
    }
  }
  return best;
}

}  // namespace bentlab::oracle
