#include <random>

#include <gtest/gtest.h>

#include "fca/bitvec.hpp"
#include "support/oracles.hpp"

namespace fca {
namespace {

using testing::Bools;

Bools random_bools(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution bit(p);
  Bools out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = bit(rng);
  return out;
}

TEST(BitVec, EightLeadingOnesPackTo255) {
  const BitVec v = BitVec::from_indices(32, {0, 1, 2, 3, 4, 5, 6, 7});
  ASSERT_EQ(v.words().size(), word_count(32));
  EXPECT_EQ(v.words()[0], Word{255});
  for (std::size_t k = 1; k < v.words().size(); ++k)
    EXPECT_EQ(v.words()[k], Word{0});
}

TEST(BitVec, FullKeepsPaddingZero) {
  for (std::size_t n : {0u, 1u, 31u, 32u, 33u, 63u, 64u, 65u, 130u}) {
    const BitVec v = BitVec::full(n);
    EXPECT_EQ(v.count(), n);
    EXPECT_TRUE(v.all());
    EXPECT_EQ(v.complement().count(), 0u);
    EXPECT_EQ(v.complement(), BitVec(n));
  }
}

TEST(BitVec, FromIndicesRejectsOutOfRange) {
  EXPECT_THROW(BitVec::from_indices(4, {4}), std::invalid_argument);
}

TEST(BitVec, LengthMismatchThrows) {
  BitVec a(10), b(11);
  EXPECT_THROW((void)a.is_subset_of(b), std::invalid_argument);
  EXPECT_THROW(a &= b, std::invalid_argument);
}

TEST(BitVec, EmptySetIsSubsetOfEverything) {
  const BitVec empty(70);
  EXPECT_TRUE(empty.is_subset_of(BitVec(70)));
  EXPECT_TRUE(empty.is_subset_of(BitVec::from_indices(70, {69})));
}

TEST(BitVec, EqualBelow) {
  const BitVec a = BitVec::from_indices(70, {1, 40, 66});
  const BitVec b = BitVec::from_indices(70, {1, 40, 67});
  EXPECT_TRUE(a.equal_below(b, 66));
  EXPECT_FALSE(a.equal_below(b, 67));
  EXPECT_TRUE(a.equal_below(b, 0));
}

TEST(BitVec, CompareAsIntegerMatchesUnsignedValue) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t x = rng(), y = rng() & rng();
    BitVec a(64), b(64);
    for (std::size_t i = 0; i < 64; ++i) {
      a.assign(i, (x >> i) & 1);
      b.assign(i, (y >> i) & 1);
    }
    EXPECT_EQ(compare_as_integer(a, b), x <=> y);
  }
}

// Word-packed set algebra agrees with per-element loops.
TEST(BitVecProperty, AgreesWithNaiveSets) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<std::size_t> len(0, 200);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = len(rng);
    const Bools a = random_bools(n, 0.5, rng);
    // Bias b toward supersets of a so containment is exercised both ways.
    Bools b = random_bools(n, 0.7, rng);
    if (trial % 2 == 0)
      for (std::size_t i = 0; i < n; ++i)
        b[i] = b[i] || a[i];
    const BitVec va = testing::to_bitvec(a), vb = testing::to_bitvec(b);

    EXPECT_EQ(va.is_subset_of(vb), testing::naive_subset(a, b));
    EXPECT_EQ(testing::to_bools(va & vb), testing::naive_and(a, b));
    Bools uni(n), diff(n);
    std::size_t pop = 0;
    for (std::size_t i = 0; i < n; ++i) {
      uni[i] = a[i] || b[i];
      diff[i] = a[i] && !b[i];
      pop += a[i];
    }
    EXPECT_EQ(testing::to_bools(va | vb), uni);
    EXPECT_EQ(testing::to_bools(va - vb), diff);
    EXPECT_EQ(va.count(), pop);
    EXPECT_EQ(va.indices().size(), pop);
    EXPECT_EQ(va.complement().complement(), va);
  }
}

}  // namespace
}  // namespace fca
