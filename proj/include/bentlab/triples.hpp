#pragma once

// Permutation triples (phi1, phi2, phi3) of linearized polynomials, the five
// parametric families, the (A_n) test and the agreement-set analysis.
//
// A triple satisfies (A_n) when phi1 + phi2 + phi3 is a permutation whose
// inverse equals phi1^-1 + phi2^-1 + phi3^-1.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bentlab/error.hpp"
#include "bentlab/field.hpp"
#include "bentlab/linpoly.hpp"

namespace bentlab {

enum class Family { fam1, fam2, fam3i, fam3ii, fam4, fam5, custom };

inline std::string_view to_string(Family family) {
  switch (family) {
    case Family::fam1: return "fam1";
    case Family::fam2: return "fam2";
    case Family::fam3i: return "fam3i";
    case Family::fam3ii: return "fam3ii";
    case Family::fam4: return "fam4";
    case Family::fam5: return "fam5";
    case Family::custom: return "custom";
  }
  return "custom";
}

inline Family parse_family(std::string_view name) {
  for (Family f : {Family::fam1, Family::fam2, Family::fam3i, Family::fam3ii, Family::fam4, Family::fam5, Family::custom}) {
    if (to_string(f) == name) return f;
  }
  throw InvalidArgument("unknown family '" + std::string(name) + "'");
}

// Field degree the family lives on, as a multiple of m.
inline int degree_multiplier(Family family) {
  return (family == Family::fam3i || family == Family::fam3ii) ? 6 : 4;
}

// Named scalars of a family: "lambda", "alpha", "beta", "C", "D".
using ParamSet = std::map<std::string, Element>;

struct PermutationTriple {
  Field field;
  std::array<LinearizedPoly, 3> phi;
  Family family = Family::custom;
  int m = 0;  // 0 for custom triples
  ParamSet params;

  LinearizedPoly sum() const { return phi[0] + phi[1] + phi[2]; }
};

inline PermutationTriple make_custom_triple(const LinearizedPoly& a, const LinearizedPoly& b, const LinearizedPoly& c) {
  if (!(a.field() == b.field()) || !(a.field() == c.field())) throw FieldMismatch();
  return PermutationTriple{a.field(), {a, b, c}, Family::custom, 0, {}};
}

namespace detail {

inline void require_degree(const Field& f, int m, int multiplier) {
  if (m < 1 || f.degree() != multiplier * m) {
    throw InvalidArgument("family needs a field of degree " + std::to_string(multiplier) + "m, got degree " +
                          std::to_string(f.degree()) + " with m = " + std::to_string(m));
  }
}

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ConditionViolation(message);
}

inline std::uint64_t two_pow(int k) { return std::uint64_t{1} << k; }

// lambda^(2^m + 1) = 1
inline bool is_unit_norm(const Field& f, Element lambda, int m) { return f.pow(lambda, two_pow(m) + 1) == f.one(); }

}  // namespace detail

// (x^(2^2m), lambda x^(2^m), lambda x^(2^3m)) over GF(2^(4m)), lambda^(2^m+1) = 1.
inline PermutationTriple family1(const Field& f, int m, Element lambda) {
  detail::require_degree(f, m, 4);
  f.check(lambda);
  detail::require(detail::is_unit_norm(f, lambda, m), "Family 1 requires lambda^(2^m+1) = 1");
  return PermutationTriple{f,
                           {LinearizedPoly::monomial(f, f.one(), 2 * m), LinearizedPoly::monomial(f, lambda, m),
                            LinearizedPoly::monomial(f, lambda, 3 * m)},
                           Family::fam1,
                           m,
                           {{"lambda", lambda}}};
}

// (x^(2^2m), a x^(2^m) + (a+1) x^(2^3m), (a+1) x^(2^m) + a x^(2^3m)), a in GF(2^m).
inline PermutationTriple family2(const Field& f, int m, Element alpha) {
  detail::require_degree(f, m, 4);
  f.check(alpha);
  detail::require(f.in_subfield(alpha, m), "Family 2 requires alpha in GF(2^m)");
  const Element alpha1 = f.add(alpha, f.one());
  LinearizedPoly phi2(f);
  phi2.accumulate(m, alpha);
  phi2.accumulate(3 * m, alpha1);
  LinearizedPoly phi3(f);
  phi3.accumulate(m, alpha1);
  phi3.accumulate(3 * m, alpha);
  return PermutationTriple{
      f, {LinearizedPoly::monomial(f, f.one(), 2 * m), phi2, phi3}, Family::fam2, m, {{"alpha", alpha}}};
}

// Over GF(2^(6m)) with alpha in GF(2^(2m)):
//   (x^(2^m), a x^(2^m) + b x^(2^3m) + (a+1) x^(2^5m), (a+1) x^(2^m) + b x^(2^3m) + a x^(2^5m))
// variant (i):  b = a, a^(2^m) + a^(2^m - 1) + 1 = 0 (a != 0);
// variant (ii): b = a + 1, a^(2^m+1) = 1, a != 1.
inline PermutationTriple family3(const Field& f, int m, Family variant, Element alpha) {
  detail::require_degree(f, m, 6);
  f.check(alpha);
  if (variant != Family::fam3i && variant != Family::fam3ii) throw InvalidArgument("Family 3 variant must be fam3i or fam3ii");
  detail::require(f.in_subfield(alpha, 2 * m), "Family 3 requires alpha in GF(2^(2m))");
  Element beta;
  if (variant == Family::fam3i) {
    detail::require(!alpha.is_zero(), "Family 3 (i) requires alpha != 0");
    const Element lhs = f.add(f.add(f.pow(alpha, detail::two_pow(m)), f.pow(alpha, detail::two_pow(m) - 1)), f.one());
    detail::require(lhs.is_zero(), "Family 3 (i) requires alpha^(2^m) + alpha^(2^m-1) + 1 = 0");
    beta = alpha;
  } else {
    detail::require(detail::is_unit_norm(f, alpha, m), "Family 3 (ii) requires alpha^(2^m+1) = 1");
    detail::require(alpha != f.one(), "Family 3 (ii) requires alpha != 1");
    beta = f.add(alpha, f.one());
  }
  const Element alpha1 = f.add(alpha, f.one());
  return PermutationTriple{f,
                           {LinearizedPoly::monomial(f, f.one(), m), trinomial(f, alpha, beta, alpha1, m),
                            trinomial(f, alpha1, beta, alpha, m)},
                           variant,
                           m,
                           {{"alpha", alpha}, {"beta", beta}}};
}

// Over GF(2^(4m)) with a in GF(2^m), b in GF(2^(2m)), b^(2^m+1) = a^2 + 1:
//   phi1 = a x + b x^(2^m)
//   phi2 = a^2 x + b^(2^m+1) x^(2^2m)
//   phi3 = a^3 x + a^2 b x^(2^m) + a b^(2^m+1) x^(2^2m) + b^(2^m+2) x^(2^3m)
// The pair (1, 0) makes all three maps the identity and is rejected.
inline PermutationTriple family4(const Field& f, int m, Element alpha, Element beta) {
  detail::require_degree(f, m, 4);
  f.check(alpha);
  f.check(beta);
  detail::require(f.in_subfield(alpha, m), "Family 4 requires alpha in GF(2^m)");
  detail::require(f.in_subfield(beta, 2 * m), "Family 4 requires beta in GF(2^(2m))");
  const Element a2 = f.square(alpha);
  const Element norm = f.pow(beta, detail::two_pow(m) + 1);
  detail::require(norm == f.add(a2, f.one()), "Family 4 requires beta^(2^m+1) = alpha^2 + 1");
  detail::require(!(alpha == f.one() && beta.is_zero()),
                  "Family 4 degenerate pair (alpha, beta) = (1, 0): all three maps collapse to x");
  LinearizedPoly phi1(f);
  phi1.accumulate(0, alpha);
  phi1.accumulate(m, beta);
  LinearizedPoly phi2(f);
  phi2.accumulate(0, a2);
  phi2.accumulate(2 * m, norm);
  LinearizedPoly phi3(f);
  phi3.accumulate(0, f.mul(a2, alpha));
  phi3.accumulate(m, f.mul(a2, beta));
  phi3.accumulate(2 * m, f.mul(alpha, norm));
  phi3.accumulate(3 * m, f.pow(beta, detail::two_pow(m) + 2));
  return PermutationTriple{f, {phi1, phi2, phi3}, Family::fam4, m, {{"alpha", alpha}, {"beta", beta}}};
}

// (lambda x^(2^m), lambda x^(2^3m), C x + D x^(2^m) + (C+1) x^(2^2m) + D x^(2^3m))
// over GF(2^(4m)) with C in GF(2^m), D in GF(2^(2m)), lambda^(2^m+1) = 1.
inline PermutationTriple family5(const Field& f, int m, Element c, Element d, Element lambda) {
  detail::require_degree(f, m, 4);
  f.check(lambda);
  detail::require(detail::is_unit_norm(f, lambda, m), "Family 5 requires lambda^(2^m+1) = 1");
  return PermutationTriple{f,
                           {LinearizedPoly::monomial(f, lambda, m), LinearizedPoly::monomial(f, lambda, 3 * m),
                            involution_quadrinomial(f, c, d, m)},
                           Family::fam5,
                           m,
                           {{"C", c}, {"D", d}, {"lambda", lambda}}};
}

inline Element param(const ParamSet& params, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end()) throw InvalidArgument("missing parameter '" + name + "'");
  return it->second;
}

// Dispatches to the family constructor with the named parameters.
inline PermutationTriple make_family(const Field& f, Family family, int m, const ParamSet& params) {
  switch (family) {
    case Family::fam1: return family1(f, m, param(params, "lambda"));
    case Family::fam2: return family2(f, m, param(params, "alpha"));
    case Family::fam3i:
    case Family::fam3ii: return family3(f, m, family, param(params, "alpha"));
    case Family::fam4: return family4(f, m, param(params, "alpha"), param(params, "beta"));
    case Family::fam5: return family5(f, m, param(params, "C"), param(params, "D"), param(params, "lambda"));
    case Family::custom: break;
  }
  throw InvalidArgument("custom triples have no parametric constructor");
}

struct AnReport {
  std::array<bool, 3> each_permutation{};
  bool sum_is_permutation = false;
  bool inverse_sum_identity = false;
  bool satisfied = false;

  friend bool operator==(const AnReport&, const AnReport&) = default;
};

// The inverse condition is checked as the polynomial identity
// psi o (phi1^-1 + phi2^-1 + phi3^-1) = x.
inline AnReport verify_an(const PermutationTriple& t) {
  AnReport r;
  for (int i = 0; i < 3; ++i) r.each_permutation[i] = is_permutation(t.phi[i]);
  const LinearizedPoly psi = t.sum();
  r.sum_is_permutation = is_permutation(psi);
  const bool all_perm = r.each_permutation[0] && r.each_permutation[1] && r.each_permutation[2];
  if (all_perm && r.sum_is_permutation) {
    const LinearizedPoly inv_sum = inverse(t.phi[0]) + inverse(t.phi[1]) + inverse(t.phi[2]);
    r.inverse_sum_identity = compose(psi, inv_sum) == LinearizedPoly::identity(t.field);
  }
  r.satisfied = all_perm && r.sum_is_permutation && r.inverse_sum_identity;
  return r;
}

struct EUnionReport {
  std::uint64_t e12 = 0;
  std::uint64_t e13 = 0;
  std::uint64_t e23 = 0;
  std::uint64_t e_union = 0;
  bool covers_field = false;
  // E^u = F_q is sufficient for the synthesized function to be Maiorana-McFarland.
  bool mm_sufficient = false;

  friend bool operator==(const EUnionReport&, const EUnionReport&) = default;
};

inline EUnionReport finish_report(EUnionReport r, std::uint64_t field_size) {
  r.covers_field = r.e_union == field_size;
  r.mm_sufficient = r.covers_field;
  return r;
}

// Agreement sets by evaluating all three maps on the whole field.
inline EUnionReport e_union_exhaustive(const PermutationTriple& t) {
  const auto v1 = eval_table(t.phi[0]);
  const auto v2 = eval_table(t.phi[1]);
  const auto v3 = eval_table(t.phi[2]);
  EUnionReport r;
  for (std::size_t x = 0; x < v1.size(); ++x) {
    const bool a = v1[x] == v2[x];
    const bool b = v1[x] == v3[x];
    const bool c = v2[x] == v3[x];
    r.e12 += a;
    r.e13 += b;
    r.e23 += c;
    r.e_union += (a || b || c);
  }
  return finish_report(r, t.field.size());
}

// Agreement sets as kernels: E_ij = ker(phi_i + phi_j), and any two of the
// three sets intersect in E_12 & E_13, so |E^u| = sum |E_ij| - 2 |E_12 & E_13|.
inline EUnionReport e_union_rank(const PermutationTriple& t) {
  const int n = t.field.degree();
  auto kernel_size = [n](int rank) { return std::uint64_t{1} << (n - rank); };
  const auto d12 = basis_images(t.phi[0] + t.phi[1]);
  const auto d13 = basis_images(t.phi[0] + t.phi[2]);
  const auto d23 = basis_images(t.phi[1] + t.phi[2]);
  std::vector<std::uint64_t> wide(n);
  for (int k = 0; k < n; ++k) wide[k] = (std::uint64_t{d12[k]} << n) | d13[k];
  // Rank of the 2n x n matrix [d12; d13], column by column.
  int joint_rank = 0;
  for (int i = 0; i < n; ++i) {
    auto pivot = std::max_element(wide.begin() + joint_rank, wide.end());
    if (pivot == wide.end() || *pivot == 0) break;
    std::iter_swap(wide.begin() + joint_rank, pivot);
    const std::uint64_t lead = std::bit_floor(wide[joint_rank]);
    for (std::size_t k = joint_rank + 1; k < wide.size(); ++k) {
      if (wide[k] & lead) wide[k] ^= wide[joint_rank];
    }
    ++joint_rank;
  }
  EUnionReport r;
  r.e12 = kernel_size(gf2::rank(d12));
  r.e13 = kernel_size(gf2::rank(d13));
  r.e23 = kernel_size(gf2::rank(d23));
  r.e_union = r.e12 + r.e13 + r.e23 - 2 * kernel_size(joint_rank);
  return finish_report(r, t.field.size());
}

// Exhaustive up to degree 16, kernel ranks above.
inline EUnionReport e_union(const PermutationTriple& t) {
  return t.field.degree() <= 16 ? e_union_exhaustive(t) : e_union_rank(t);
}

// All elements of the subfield GF(2^d), ascending by encoding.
inline std::vector<Element> subfield_elements(const Field& f, int d) {
  std::vector<Element> out;
  for (std::uint64_t v = 0; v < f.size(); ++v) {
    const Element a = f.element(v);
    if (f.in_subfield(a, d)) out.push_back(a);
  }
  return out;
}

inline constexpr int kMaxEnumerationDegree = 16;

// Every parameter tuple for which the family constructor succeeds, in
// ascending order of encodings. An empty list is a valid answer.
inline std::vector<ParamSet> enumerate_params(const Field& f, Family family, int m) {
  if (family == Family::custom) throw InvalidArgument("custom triples have no parameter space");
  detail::require_degree(f, m, degree_multiplier(family));
  if (f.degree() > kMaxEnumerationDegree) {
    throw ResourceLimit("parameter enumeration is limited to field degree <= 16");
  }
  std::vector<ParamSet> out;
  auto unit_norm = [&] {
    std::vector<Element> lambdas;
    for (Element l : subfield_elements(f, 2 * m)) {
      if (detail::is_unit_norm(f, l, m)) lambdas.push_back(l);
    }
    return lambdas;
  };
  auto accept = [&](const ParamSet& p) {
    try {
      make_family(f, family, m, p);
      out.push_back(p);
    } catch (const ConditionViolation&) {
    }
  };
  switch (family) {
    case Family::fam1:
      for (Element l : unit_norm()) accept({{"lambda", l}});
      break;
    case Family::fam2:
      for (Element a : subfield_elements(f, m)) accept({{"alpha", a}});
      break;
    case Family::fam3i:
    case Family::fam3ii:
      for (Element a : subfield_elements(f, 2 * m)) {
        if (family == Family::fam3i && a.is_zero()) continue;
        accept({{"alpha", a}});
      }
      break;
    case Family::fam4: {
      const auto betas = subfield_elements(f, 2 * m);
      for (Element a : subfield_elements(f, m)) {
        for (Element b : betas) accept({{"alpha", a}, {"beta", b}});
      }
      break;
    }
    case Family::fam5: {
      const auto lambdas = unit_norm();
      const auto ds = subfield_elements(f, 2 * m);
      for (Element c : subfield_elements(f, m)) {
        for (Element d : ds) {
          for (Element l : lambdas) out.push_back({{"C", c}, {"D", d}, {"lambda", l}});
        }
      }
      break;
    }
    case Family::custom: break;
  }
  return out;
}

// Sorts the three maps into a fixed order; (A_n) and the synthesized
// function are symmetric in them.
inline PermutationTriple canonicalize(PermutationTriple t) {
  std::sort(t.phi.begin(), t.phi.end());
  return t;
}

enum class SearchShape { monomials, fam1, linear };

inline std::string_view to_string(SearchShape s) {
  switch (s) {
    case SearchShape::monomials: return "monomials";
    case SearchShape::fam1: return "fam1";
    case SearchShape::linear: return "linear";
  }
  return "linear";
}

inline SearchShape parse_shape(std::string_view name) {
  for (SearchShape s : {SearchShape::monomials, SearchShape::fam1, SearchShape::linear}) {
    if (to_string(s) == name) return s;
  }
  throw InvalidArgument("unknown search shape '" + std::string(name) + "'");
}

enum class SearchStatus { complete, budget_exhausted };

inline std::string_view to_string(SearchStatus s) {
  return s == SearchStatus::complete ? "complete" : "budget exhausted";
}

struct SearchHit {
  PermutationTriple triple;
  EUnionReport e_report;
};

struct SearchResult {
  std::vector<SearchHit> hits;
  SearchStatus status = SearchStatus::complete;
  std::uint64_t examined = 0;
};

inline constexpr int kMaxSearchDegree = 8;

namespace detail {

// Walks unordered triples (with repetition) drawn from `pool`, stopping after
// `budget` candidates.
inline SearchResult search_multisets(const std::vector<LinearizedPoly>& pool, std::uint64_t budget) {
  SearchResult result;
  std::vector<LinearizedPoly> sorted = pool;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t p = sorted.size();
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i; j < p; ++j) {
      for (std::size_t k = j; k < p; ++k) {
        if (result.examined == budget) {
          result.status = SearchStatus::budget_exhausted;
          return result;
        }
        ++result.examined;
        auto t = make_custom_triple(sorted[i], sorted[j], sorted[k]);
        if (verify_an(t).satisfied) result.hits.push_back({t, e_union(t)});
      }
    }
  }
  return result;
}

}  // namespace detail

// Looks for triples of linearized permutations satisfying (A_n).
//   monomials: every c x^(2^k), c != 0, all unordered triples;
//   fam1:      (x^(2^2m), l x^(2^m), l x^(2^3m)) for every l != 0, n = 4m;
//   linear:    all unordered triples of linearized permutations when they fit
//              in the budget, otherwise `budget` seeded random draws.
// The budget caps the number of candidate triples examined.
inline SearchResult search_custom_triples(const Field& f, SearchShape shape, std::uint64_t budget, std::uint64_t seed = 0) {
  if (f.degree() > kMaxSearchDegree) throw ResourceLimit("triple search is limited to field degree <= 8");
  const int n = f.degree();
  switch (shape) {
    case SearchShape::monomials: {
      std::vector<LinearizedPoly> pool;
      for (int k = 0; k < n; ++k) {
        for (std::uint64_t c = 1; c < f.size(); ++c) pool.push_back(LinearizedPoly::monomial(f, f.element(c), k));
      }
      return detail::search_multisets(pool, budget);
    }
    case SearchShape::fam1: {
      if (n % 4 != 0) throw InvalidArgument("fam1 search shape needs a field degree divisible by 4");
      const int m = n / 4;
      SearchResult result;
      for (std::uint64_t l = 1; l < f.size(); ++l) {
        if (result.examined == budget) {
          result.status = SearchStatus::budget_exhausted;
          return result;
        }
        ++result.examined;
        const Element lambda = f.element(l);
        auto t = canonicalize(make_custom_triple(LinearizedPoly::monomial(f, f.one(), 2 * m),
                                                 LinearizedPoly::monomial(f, lambda, m),
                                                 LinearizedPoly::monomial(f, lambda, 3 * m)));
        if (verify_an(t).satisfied) result.hits.push_back({t, e_union(t)});
      }
      return result;
    }
    case SearchShape::linear: {
      // A linearized permutation is a choice of invertible GF(2)-matrix;
      // listing them is only feasible for tiny n.
      if (n <= 3) {
        std::vector<LinearizedPoly> pool;
        const std::uint64_t total = std::uint64_t{1} << (n * n);
        for (std::uint64_t code = 0; code < total; ++code) {
          std::vector<Element> coeffs;
          for (int i = 0; i < n; ++i) coeffs.push_back(f.element((code >> (i * n)) & f.mask()));
          LinearizedPoly p(f, coeffs);
          if (is_permutation(p)) pool.push_back(p);
        }
        return detail::search_multisets(pool, budget);
      }
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<Word> coeff(0, f.mask());
      auto random_permutation = [&] {
        while (true) {
          std::vector<Element> coeffs;
          for (int i = 0; i < n; ++i) coeffs.push_back(f.element(coeff(rng)));
          LinearizedPoly p(f, coeffs);
          if (is_permutation(p)) return p;
        }
      };
      SearchResult result;
      result.status = SearchStatus::budget_exhausted;
      std::vector<PermutationTriple> seen;
      for (; result.examined < budget; ++result.examined) {
        auto t = canonicalize(make_custom_triple(random_permutation(), random_permutation(), random_permutation()));
        if (!verify_an(t).satisfied) continue;
        const bool duplicate = std::any_of(seen.begin(), seen.end(), [&](const PermutationTriple& s) { return s.phi == t.phi; });
        if (duplicate) continue;
        seen.push_back(t);
        result.hits.push_back({t, e_union(t)});
      }
      return result;
    }
  }
  return {};
}

}  // namespace bentlab
