#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace bentlab {
namespace {

std::string check_spectrum_identities(const BooleanFunction& fn, const WalshSpectrum& s) {
  const int v = fn.num_vars();
  if (s.sum_of_squares() != (std::int64_t{1} << (2 * v))) return "Parseval fails";
  if (s.values[0] != (std::int64_t{1} << v) - 2 * static_cast<std::int64_t>(fn.weight())) return "W[0] fails";
  return {};
}

TEST(FwhtTest, SmallVectors) {
  std::vector<int> a{1, 1, 1, 1};
  fwht(std::span<int>(a));
  EXPECT_EQ(a, (std::vector<int>{4, 0, 0, 0}));
  std::vector<int> b{1, -1, 1, -1};
  fwht(std::span<int>(b));
  EXPECT_EQ(b, (std::vector<int>{0, 4, 0, 0}));
  std::vector<int> c{3};
  fwht(std::span<int>(c));
  EXPECT_EQ(c, (std::vector<int>{3}));
}

TEST(FwhtTest, IsInvolutionUpToScale) {
  std::mt19937_64 rng(1);
  std::vector<std::int64_t> v(1 << 10);
  for (auto& x : v) x = static_cast<std::int64_t>(rng() % 100) - 50;
  auto w = v;
  fwht(std::span<std::int64_t>(w));
  fwht(std::span<std::int64_t>(w));
  for (std::size_t i = 0; i < v.size(); ++i) ASSERT_EQ(w[i], v[i] * 1024);
}

TEST(BooleanFunctionTest, Indexing) {
  const Field f(3);
  BooleanFunction fn(f);
  EXPECT_EQ(fn.num_vars(), 6);
  EXPECT_EQ(fn.size(), 64u);
  EXPECT_EQ(fn.index(5, 2), 42u);
  fn.set(fn.index(5, 2), true);
  EXPECT_TRUE(fn(5, 2));
  EXPECT_FALSE(fn(2, 5));
  EXPECT_EQ(fn.weight(), 1u);
  fn.set(42, false);
  EXPECT_EQ(fn.weight(), 0u);
  EXPECT_THROW(BooleanFunction(Field(13)), ResourceLimit);
}

TEST(WalshTest, ConstantZeroIsDelta) {
  const Field f(2);
  const auto s = walsh_spectrum(BooleanFunction(f));
  EXPECT_EQ(s.values[0], 16);
  for (std::size_t i = 1; i < s.values.size(); ++i) EXPECT_EQ(s.values[i], 0);
  EXPECT_FALSE(is_bent(s));
  EXPECT_EQ(nonlinearity(s), 0);
  EXPECT_EQ(s.values, oracle::naive_walsh(BooleanFunction(f)).values);
}

TEST(WalshTest, TraceOfProductIsBent) {
  for (int n = 1; n <= 6; ++n) {
    const Field f(n);
    const auto fn = mm_synthesize(LinearizedPoly::identity(f), std::vector<bool>(f.size(), false));
    const auto s = walsh_spectrum(fn);
    EXPECT_TRUE(is_bent(s)) << "n = " << n;
    EXPECT_EQ(s.max_abs, 1 << n);
    if (n == 2) {
      EXPECT_EQ(s.values, oracle::naive_walsh(fn).values);
      for (auto w : s.values) EXPECT_EQ(std::abs(w), 4);
    }
  }
}

TEST(WalshTest, MatchesNaiveOnRandomFunctions) {
  std::mt19937_64 rng(7);
  for (int n : {1, 2, 3, 4}) {
    const Field f(n);
    for (int s = 0; s < 25; ++s) {
      const auto fn = testing::random_function(f, rng);
      const auto fast = walsh_spectrum(fn);
      ASSERT_EQ(fast.values, oracle::naive_walsh(fn).values) << "n = " << n;
      EXPECT_EQ(check_spectrum_identities(fn, fast), "");
    }
  }
}

TEST(WalshTest, MatchesNaiveUnderNonPrimitiveModulus) {
  std::mt19937_64 rng(8);
  const Field f(4, 0b11111);
  for (int s = 0; s < 5; ++s) {
    const auto fn = testing::random_function(f, rng);
    ASSERT_EQ(walsh_spectrum(fn).values, oracle::naive_walsh(fn).values);
  }
}

TEST(WalshTest, SpectrumIndexPacksAHigh) {
  // f(x, y) = Tr(x): W(a, b) is 2^(2n) at (1, 0) only.
  const Field f(3);
  BooleanFunction fn(f);
  for (Word x = 0; x < 8; ++x) {
    for (Word y = 0; y < 8; ++y) fn.set(fn.index(x, y), f.trace(f.element(x)) == 1);
  }
  const auto s = walsh_spectrum(fn);
  EXPECT_EQ(s.values[fn.index(1, 0)], 64);
  EXPECT_EQ(s.max_abs, 64);
  EXPECT_EQ(s.min_abs, 0);
}

TEST(SynthesizeTest, MatchesNaive) {
  const Field f(4);
  for (const auto& p : enumerate_params(f, Family::fam5, 1)) {
    const auto t = make_family(f, Family::fam5, 1, p);
    ASSERT_EQ(synthesize(t), oracle::naive_synthesize(t));
  }
  std::mt19937_64 rng(3);
  for (int n : {1, 3, 5}) {
    const Field fn(n);
    const auto t = make_custom_triple(testing::random_poly(fn, rng), testing::random_poly(fn, rng), testing::random_poly(fn, rng));
    ASSERT_EQ(synthesize(t), oracle::naive_synthesize(t));
  }
}

TEST(SynthesizeTest, SymmetricInTriple) {
  const Field f(4);
  std::mt19937_64 rng(11);
  auto t = make_custom_triple(testing::random_poly(f, rng), testing::random_poly(f, rng), testing::random_poly(f, rng));
  const auto g = synthesize(t);
  std::array<int, 3> order{0, 1, 2};
  while (std::next_permutation(order.begin(), order.end())) {
    const auto u = make_custom_triple(t.phi[order[0]], t.phi[order[1]], t.phi[order[2]]);
    EXPECT_EQ(synthesize(u), g);
  }
}

TEST(SynthesizeTest, FamiliesAreBentAtMOne) {
  for (Family fam : {Family::fam1, Family::fam2, Family::fam4, Family::fam5}) {
    const Field f(4);
    for (const auto& p : enumerate_params(f, fam, 1)) {
      const auto s = walsh_spectrum(synthesize(make_family(f, fam, 1, p)));
      EXPECT_TRUE(is_bent(s)) << to_string(fam);
      EXPECT_EQ(nonlinearity(s), 120);
    }
  }
  const Field f6(6);
  for (Family fam : {Family::fam3i, Family::fam3ii}) {
    for (const auto& p : enumerate_params(f6, fam, 1)) {
      const auto s = walsh_spectrum(synthesize(make_family(f6, fam, 1, p)));
      EXPECT_TRUE(is_bent(s));
      EXPECT_EQ(s.max_abs, 64);
      EXPECT_EQ(nonlinearity(s), 2016);
    }
  }
}

TEST(SynthesizeTest, FamilyOneAtMTwo) {
  const Field f(8);
  const auto g = synthesize(family1(f, 2, f.one()));
  const auto s = walsh_spectrum(g);
  EXPECT_TRUE(is_bent(s));
  EXPECT_EQ(nonlinearity(s), 32640);
  EXPECT_EQ(check_spectrum_identities(g, s), "");
}

TEST(SynthesizeTest, NaiveNonlinearityAgrees) {
  const Field f(4);
  const auto g = synthesize(family1(f, 1, f.one()));
  EXPECT_EQ(oracle::naive_nonlinearity(g), 120);
  std::mt19937_64 rng(2);
  const Field f2(2);
  for (int s = 0; s < 10; ++s) {
    const auto fn = testing::random_function(f2, rng);
    EXPECT_EQ(nonlinearity(fn), oracle::naive_nonlinearity(fn));
  }
}

TEST(MaioranaMcFarlandTest, AlwaysBent) {
  std::mt19937_64 rng(4);
  for (int n = 1; n <= 6; ++n) {
    const Field f(n);
    for (int s = 0; s < 5; ++s) {
      std::vector<bool> h(f.size());
      for (std::size_t i = 0; i < h.size(); ++i) h[i] = rng() & 1u;
      EXPECT_TRUE(is_bent(mm_synthesize(testing::random_permutation(f, rng), h))) << "n = " << n;
    }
  }
  const Field f(3);
  EXPECT_THROW(mm_synthesize(LinearizedPoly::zero(f), std::vector<bool>(8)), ConditionViolation);
  EXPECT_THROW(mm_synthesize(LinearizedPoly::identity(f), std::vector<bool>(7)), InvalidArgument);
}

TEST(OnlyIfTest, PerturbedPermutationTriplesAreNotBent) {
  const Field f(4);
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<Word> dist(1, f.mask());
  int checked = 0;
  for (int attempt = 0; attempt < 5000 && checked < 25; ++attempt) {
    const auto params = enumerate_params(f, Family::fam5, 1);
    auto t = make_family(f, Family::fam5, 1, params[rng() % params.size()]);
    const int which = static_cast<int>(rng() % 3);
    const int slot = static_cast<int>(rng() % 4);
    t.phi[which].set(slot, f.add(t.phi[which].coeff(slot), f.element(dist(rng))));
    const AnReport r = verify_an(t);
    if (r.satisfied || !(r.each_permutation[0] && r.each_permutation[1] && r.each_permutation[2])) continue;
    EXPECT_FALSE(is_bent(synthesize(t)));
    ++checked;
  }
  EXPECT_GE(checked, 20);
}

}  // namespace
}  // namespace bentlab
