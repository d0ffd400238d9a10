#pragma once

// Linearized (2-)polynomials sum_i c_i x^(2^i) over GF(2^n), kept reduced
// modulo x^(2^n) - x so that there are exactly n coefficient slots.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bentlab/error.hpp"
#include "bentlab/field.hpp"

namespace bentlab {

class LinearizedPoly {
 public:
  explicit LinearizedPoly(const Field& field) : field_(field), coeffs_(field.degree(), field.zero()) {}

  LinearizedPoly(const Field& field, std::vector<Element> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != field_.degree()) {
      throw InvalidArgument("a linearized polynomial over GF(2^n) has exactly n coefficients");
    }
    for (Element c : coeffs_) field_.check(c);
  }

  static LinearizedPoly zero(const Field& field) { return LinearizedPoly(field); }

  static LinearizedPoly identity(const Field& field) { return monomial(field, field.one(), 0); }

  // c * x^(2^k); k is taken modulo n.
  static LinearizedPoly monomial(const Field& field, Element c, int k) {
    LinearizedPoly p(field);
    p.set(k, c);
    return p;
  }

  const Field& field() const { return field_; }
  int degree() const { return field_.degree(); }
  const std::vector<Element>& coeffs() const { return coeffs_; }

  // Coefficient of x^(2^k), k taken modulo n.
  Element coeff(int k) const { return coeffs_[wrap(k)]; }
  void set(int k, Element c) {
    field_.check(c);
    coeffs_[wrap(k)] = c;
  }
  // Adds c to the coefficient of x^(2^k), k taken modulo n.
  void accumulate(int k, Element c) { coeffs_[wrap(k)] = field_.add(coeffs_[wrap(k)], c); }

  std::size_t term_count() const {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](Element c) { return !c.is_zero(); }));
  }

  friend bool operator==(const LinearizedPoly& a, const LinearizedPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  // Lexicographic on the raw coefficient encodings, lowest exponent first.
  friend bool operator<(const LinearizedPoly& a, const LinearizedPoly& b) {
    return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end(),
                                        [](Element x, Element y) { return x.value() < y.value(); });
  }

 private:
  int wrap(int k) const {
    const int n = field_.degree();
    return ((k % n) + n) % n;
  }

  Field field_;
  std::vector<Element> coeffs_;
};

inline Element eval(const LinearizedPoly& p, Element x) {
  const Field& f = p.field();
  f.check(x);
  Word acc = 0;
  Word power = x.value();
  for (int i = 0; i < f.degree(); ++i) {
    acc ^= f.mul_raw(p.coeffs()[i].value(), power);
    power = f.mul_raw(power, power);
  }
  return f.element(acc);
}

// Images of the basis g^0, ..., g^(n-1): column t of the GF(2)-matrix of p.
inline std::vector<Word> basis_images(const LinearizedPoly& p) {
  const Field& f = p.field();
  std::vector<Word> cols(f.degree());
  Element basis = f.one();
  for (int t = 0; t < f.degree(); ++t) {
    cols[t] = eval(p, basis).value();
    basis = f.mul(basis, f.generator());
  }
  return cols;
}

// p(x) for every x, indexed by the integer encoding of x. Built from the
// basis images by linearity.
inline std::vector<Word> eval_table(const LinearizedPoly& p) {
  const std::vector<Word> cols = basis_images(p);
  std::vector<Word> table(p.field().size());
  for (std::uint64_t x = 1; x < table.size(); ++x) {
    const int low = std::countr_zero(x);
    table[x] = table[x & (x - 1)] ^ cols[low];
  }
  return table;
}

inline LinearizedPoly operator+(const LinearizedPoly& a, const LinearizedPoly& b) {
  if (!(a.field() == b.field())) throw FieldMismatch();
  LinearizedPoly sum = a;
  for (int i = 0; i < a.degree(); ++i) sum.accumulate(i, b.coeffs()[i]);
  return sum;
}

// outer(inner(x)), reduced mod x^(2^n) - x.
inline LinearizedPoly compose(const LinearizedPoly& outer, const LinearizedPoly& inner) {
  if (!(outer.field() == inner.field())) throw FieldMismatch();
  const Field& f = outer.field();
  const int n = f.degree();
  LinearizedPoly result(f);
  for (int i = 0; i < n; ++i) {
    const Element a = outer.coeffs()[i];
    if (a.is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      result.accumulate(i + j, f.mul(a, f.frob(inner.coeffs()[j], i)));
    }
  }
  return result;
}

namespace gf2 {

// Rank of a set of n-bit vectors over GF(2).
inline int rank(std::vector<Word> vectors) {
  int r = 0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    auto pivot = std::max_element(vectors.begin() + r, vectors.end());
    if (pivot == vectors.end() || *pivot == 0) break;
    std::iter_swap(vectors.begin() + r, pivot);
    const Word lead = std::bit_floor(vectors[r]);
    for (std::size_t k = r + 1; k < vectors.size(); ++k) {
      if (vectors[k] & lead) vectors[k] ^= vectors[r];
    }
    ++r;
  }
  return r;
}

// Inverse of the n x n matrix whose column t is cols[t]; returns the columns
// of the inverse, or nothing if singular.
inline std::optional<std::vector<Word>> invert_columns(const std::vector<Word>& cols) {
  const int n = static_cast<int>(cols.size());
  // Row r: low n bits are row r of the matrix, high n bits row r of the identity.
  std::vector<std::uint64_t> rows(n, 0);
  for (int r = 0; r < n; ++r) {
    for (int t = 0; t < n; ++t) rows[r] |= std::uint64_t{(cols[t] >> r) & 1u} << t;
    rows[r] |= std::uint64_t{1} << (n + r);
  }
  for (int c = 0; c < n; ++c) {
    int pivot = c;
    while (pivot < n && ((rows[pivot] >> c) & 1u) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(rows[c], rows[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r != c && ((rows[r] >> c) & 1u)) rows[r] ^= rows[c];
    }
  }
  std::vector<Word> inv_cols(n, 0);
  for (int r = 0; r < n; ++r) {
    for (int t = 0; t < n; ++t) inv_cols[t] |= static_cast<Word>((rows[r] >> (n + t)) & 1u) << r;
  }
  return inv_cols;
}

}  // namespace gf2

// Dense Gaussian elimination over GF(2^n) with first-nonzero pivoting.
struct LinearSolveResult {
  std::vector<Element> solution;  // empty when singular
  Element determinant;
};

inline LinearSolveResult solve_linear(const Field& f, std::vector<std::vector<Element>> a, std::vector<Element> rhs) {
  const std::size_t n = a.size();
  Element det = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c].is_zero()) ++pivot;
    if (pivot == n) return {{}, f.zero()};
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      std::swap(rhs[pivot], rhs[c]);
    }
    det = f.mul(det, a[c][c]);
    const Element scale = f.inv(a[c][c]);
    for (std::size_t k = c; k < n; ++k) a[c][k] = f.mul(a[c][k], scale);
    rhs[c] = f.mul(rhs[c], scale);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Element factor = a[r][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] = f.add(a[r][k], f.mul(factor, a[c][k]));
      rhs[r] = f.add(rhs[r], f.mul(factor, rhs[c]));
    }
  }
  return {std::move(rhs), det};
}

// True iff x -> p(x) has trivial kernel (its GF(2)-matrix has full rank).
inline bool is_permutation(const LinearizedPoly& p) { return gf2::rank(basis_images(p)) == p.degree(); }

// Compositional inverse. The GF(2)-matrix is inverted, then the coefficients
// are recovered from the inverse's values on the basis through the Moore
// system sum_i c_i (g^t)^(2^i) = p^-1(g^t).
inline LinearizedPoly inverse(const LinearizedPoly& p) {
  const Field& f = p.field();
  const int n = f.degree();
  const auto inv_cols = gf2::invert_columns(basis_images(p));
  if (!inv_cols) throw ConditionViolation("linearized polynomial is not a permutation");

  std::vector<std::vector<Element>> moore(n, std::vector<Element>(n));
  std::vector<Element> rhs(n);
  Element basis = f.one();
  for (int t = 0; t < n; ++t) {
    Element power = basis;
    for (int i = 0; i < n; ++i) {
      moore[t][i] = power;
      power = f.square(power);
    }
    rhs[t] = f.element((*inv_cols)[t]);
    basis = f.mul(basis, f.generator());
  }
  auto solved = solve_linear(f, std::move(moore), std::move(rhs));
  if (solved.solution.empty()) throw Error("internal: Moore matrix of the polynomial basis is singular");
  return LinearizedPoly(f, std::move(solved.solution));
}

// Inverse of alpha x^(2^i) + beta x^(2^(m+i)) over GF(2^(2m)) in closed form:
//   gamma x^(2^(m-i)) + delta x^(2^(2m-i)),
//   gamma = (beta^(2^m) / N)^(2^(m-i)), delta = (alpha / N)^(2^(m-i)),
//   N = alpha^(2^m+1) + beta^(2^m+1), which must be nonzero.
inline LinearizedPoly binomial_inverse(const Field& f, Element alpha, Element beta, int i, int m) {
  f.check(alpha);
  f.check(beta);
  if (m < 1 || f.degree() != 2 * m) throw InvalidArgument("binomial inverse needs a field of degree 2m");
  if (i < 0 || i >= m) throw InvalidArgument("binomial inverse needs 0 <= i < m");
  const std::uint64_t norm_exp = (std::uint64_t{1} << m) + 1;
  const Element norm = f.add(f.pow(alpha, norm_exp), f.pow(beta, norm_exp));
  if (norm.is_zero()) {
    throw ConditionViolation("not invertible as binomial: alpha^(2^m+1) = beta^(2^m+1)");
  }
  const Element inv_norm = f.inv(norm);
  const int shift = (m - i) % f.degree();
  const Element gamma = f.frob(f.mul(f.frob(beta, m), inv_norm), shift);
  const Element delta = f.frob(f.mul(alpha, inv_norm), shift);
  LinearizedPoly result(f);
  result.accumulate(m - i, gamma);
  result.accumulate(2 * m - i, delta);
  return result;
}

struct TrinomialInverseSolution {
  Element abar;
  Element bbar;
  Element gbar;
  Element determinant;
};

// Solves for (abar, bbar, gbar) such that
//   abar x^(2^m) + bbar x^(2^(3m)) + gbar x^(2^(5m))
// inverts alpha x^(2^m) + beta x^(2^(3m)) + gamma x^(2^(5m)) over GF(2^(6m)):
//   [ gamma^(2^m)  beta^(2^3m)   alpha^(2^5m) ]   [abar]   [1]
//   [ alpha^(2^m)  gamma^(2^3m)  beta^(2^5m)  ] * [bbar] = [0]
//   [ beta^(2^m)   alpha^(2^3m)  gamma^(2^5m) ]   [gbar]   [0]
inline TrinomialInverseSolution trinomial_inverse(const Field& f, Element alpha, Element beta, Element gamma, int m) {
  f.check(alpha);
  f.check(beta);
  f.check(gamma);
  if (m < 1 || f.degree() != 6 * m) throw InvalidArgument("trinomial inverse needs a field of degree 6m");
  auto fr = [&](Element a, int k) { return f.frob(a, k % f.degree()); };
  std::vector<std::vector<Element>> a = {
      {fr(gamma, m), fr(beta, 3 * m), fr(alpha, 5 * m)},
      {fr(alpha, m), fr(gamma, 3 * m), fr(beta, 5 * m)},
      {fr(beta, m), fr(alpha, 3 * m), fr(gamma, 5 * m)},
  };
  auto solved = solve_linear(f, std::move(a), {f.one(), f.zero(), f.zero()});
  if (solved.solution.empty()) {
    throw ConditionViolation("trinomial not invertible as trinomial of this shape (zero determinant)");
  }
  return {solved.solution[0], solved.solution[1], solved.solution[2], solved.determinant};
}

inline LinearizedPoly trinomial(const Field& f, Element a, Element b, Element c, int m) {
  LinearizedPoly p(f);
  p.accumulate(m, a);
  p.accumulate(3 * m, b);
  p.accumulate(5 * m, c);
  return p;
}

// C x + D x^q + (C+1) x^(q^2) + D x^(q^3) with q = 2^m over GF(2^(4m));
// an involution whenever C is in GF(2^m) and D in GF(2^(2m)).
inline LinearizedPoly involution_quadrinomial(const Field& f, Element c, Element d, int m) {
  f.check(c);
  f.check(d);
  if (m < 1 || f.degree() != 4 * m) throw InvalidArgument("quadrinomial needs a field of degree 4m");
  if (!f.in_subfield(c, m)) throw ConditionViolation("C must lie in GF(2^m)");
  if (!f.in_subfield(d, 2 * m)) throw ConditionViolation("D must lie in GF(2^(2m))");
  LinearizedPoly p(f);
  p.accumulate(0, c);
  p.accumulate(m, d);
  p.accumulate(2 * m, f.add(c, f.one()));
  p.accumulate(3 * m, d);
  return p;
}

}  // namespace bentlab
