#include "qoseval/tfn.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

namespace qoseval {
namespace {

using T = Tfn<double>;

void expect_tfn_near(const T& actual, const T& expected, double tol) {
  EXPECT_NEAR(actual.lower(), expected.lower(), tol);
  EXPECT_NEAR(actual.modal(), expected.modal(), tol);
  EXPECT_NEAR(actual.upper(), expected.upper(), tol);
}

bool ordered(const T& t) { return t.lower() > 0 && t.lower() <= t.modal() && t.modal() <= t.upper(); }

T to_tfn(const oracle::Triple& t) { return {t[0], t[1], t[2]}; }

TEST(Tfn, RejectsInvalidComponents) {
  EXPECT_THROW(T(0.0, 1.0, 2.0), std::invalid_argument);
  EXPECT_THROW(T(-1.0, 1.0, 2.0), std::invalid_argument);
  EXPECT_THROW(T(2.0, 1.0, 3.0), std::invalid_argument);
  EXPECT_THROW(T(1.0, 3.0, 2.0), std::invalid_argument);
  EXPECT_NO_THROW(T(2.0, 2.0, 2.0));
}

TEST(Tfn, ImportanceScaleMatchesTable) {
  const std::vector<T> expected{{1, 1, 1},       {0.5, 0.75, 1},   {2.0 / 3, 1, 1.5}, {1, 1.5, 2}, {1.5, 2, 2.5},
                                {2, 2.5, 3},     {2.5, 3, 3.5},    {3, 3.5, 4},       {3.5, 4, 4.5}};
  for (int k = 1; k <= 9; ++k) EXPECT_EQ(scale(k), expected[static_cast<std::size_t>(k - 1)]) << "k" << k;
  for (int k = 3; k <= 9; ++k) EXPECT_GT(scale(k).modal(), scale(k - 1).modal());
  EXPECT_THROW(scale(0), std::out_of_range);
  EXPECT_THROW(scale(10), std::out_of_range);
}

TEST(Tfn, ParseScaleTokens) {
  EXPECT_EQ(parse_scale("equal"), 1);
  EXPECT_EQ(parse_scale("k4"), 4);
  EXPECT_EQ(parse_scale("strong"), 5);
  EXPECT_EQ(parse_scale("very-strong"), 7);
  EXPECT_EQ(parse_scale("extreme-over"), 9);
  EXPECT_EQ(parse_scale("moderate-over"), 3);
  EXPECT_FALSE(parse_scale("huge").has_value());
  EXPECT_FALSE(parse_scale("k0").has_value());
}

TEST(Tfn, AddExamples) {
  expect_tfn_near(T(1, 1, 1) + T(1.09, 1.5, 2), T(2.09, 2.5, 3), 1e-12);
  EXPECT_EQ(T(1, 1, 1) + T(1, 1, 1), T(2, 2, 2));
  expect_tfn_near(T(2.0 / 3, 1, 1.5) + T(2.5, 3, 3.5), T(3.1667, 4, 5), 1e-4);
}

TEST(Tfn, ReciprocalExamples) {
  expect_tfn_near(reciprocal(T(1.5, 2, 2.5)), T(0.4, 0.5, 2.0 / 3), 1e-12);
  EXPECT_EQ(reciprocal(T(1, 1, 1)), T(1, 1, 1));
  expect_tfn_near(reciprocal(T(2.5, 3, 3.5)), T(2.0 / 7, 1.0 / 3, 0.4), 1e-12);
}

TEST(Tfn, MeanExamples) {
  expect_tfn_near(mean({T(1.5, 2, 2.5), T(2.0 / 3, 1, 1.5)}), T(1.0833, 1.5, 2), 1e-4);
  expect_tfn_near(mean({T(0.4, 0.5, 2.0 / 3), T(2.0 / 3, 1, 1.5)}), T(0.5333, 0.75, 1.0833), 1e-4);
  EXPECT_EQ(mean({T(1, 1, 1)}), T(1, 1, 1));
  EXPECT_THROW(mean(std::span<const T>{}), std::invalid_argument);
}

TEST(Tfn, ScaleByPositiveFactor) {
  EXPECT_EQ(T(1, 2, 3) * 2.0, T(2, 4, 6));
  EXPECT_THROW(T(1, 2, 3) * 0.0, std::invalid_argument);
}

TEST(DegreeOfPossibility, Examples) {
  EXPECT_EQ(degree_of_possibility(T(1, 2, 3), T(1, 2, 3)), 1.0);
  EXPECT_EQ(degree_of_possibility(T(3, 4, 5), T(1, 1.5, 2)), 1.0);
  EXPECT_EQ(degree_of_possibility(T(1, 1.5, 2), T(3, 4, 5)), 0.0);
  // Frozen from the sampled sup-min oracle.
  EXPECT_NEAR(oracle::possibility({1, 2, 3}, {2, 3, 4}), 0.5, 1e-9);
  EXPECT_NEAR(degree_of_possibility(T(1, 2, 3), T(2, 3, 4)), 0.5, 1e-12);
}

TEST(DegreeOfPossibility, MinimumOverOthers) {
  const std::vector<T> self{T(1, 2, 3)};
  EXPECT_EQ(min_degree_of_possibility(T(1, 2, 3), std::span<const T>(self)), 1.0);
  const std::vector<T> two{T(2, 3, 4), T(0.5, 1, 1.5)};
  EXPECT_NEAR(min_degree_of_possibility(T(1, 2, 3), std::span<const T>(two)), 0.5, 1e-12);
  const std::vector<T> far{T(3, 4, 5)};
  EXPECT_EQ(min_degree_of_possibility(T(1, 1.5, 2), std::span<const T>(far)), 0.0);
  EXPECT_THROW(min_degree_of_possibility(T(1, 2, 3), std::span<const T>{}), std::invalid_argument);
}

TEST(DegreeOfPossibility, CrispNumbers) {
  EXPECT_EQ(degree_of_possibility(T::crisp(2), T::crisp(3)), 0.0);
  EXPECT_EQ(degree_of_possibility(T::crisp(3), T::crisp(2)), 1.0);
  EXPECT_NEAR(degree_of_possibility(T::crisp(2), T(1, 3, 4)), 0.5, 1e-12);
}

// --- randomized properties ---------------------------------------------------

TEST(TfnProperties, ClosureInvolutionAndAlgebra) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const T a = to_tfn(oracle::random_tfn(rng));
    const T b = to_tfn(oracle::random_tfn(rng));
    const T c = to_tfn(oracle::random_tfn(rng));
    EXPECT_TRUE(ordered(a + b));
    EXPECT_TRUE(ordered(reciprocal(a)));
    EXPECT_TRUE(ordered(mean({a, b, c})));
    expect_tfn_near(reciprocal(reciprocal(a)), a, 1e-12);
    expect_tfn_near(a + b, b + a, 1e-12);
    expect_tfn_near((a + b) + c, a + (b + c), 1e-12);
  }
}

TEST(TfnProperties, PossibilityBoundsAndCompleteness) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const T a = to_tfn(oracle::random_tfn(rng));
    const T b = to_tfn(oracle::random_tfn(rng));
    const double ab = degree_of_possibility(a, b);
    const double ba = degree_of_possibility(b, a);
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0);
    EXPECT_EQ(std::max(ab, ba), 1.0);
  }
}

TEST(TfnProperties, ClosedFormMatchesSupMinOracle) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = oracle::random_tfn(rng);
    const auto b = oracle::random_tfn(rng);
    EXPECT_NEAR(degree_of_possibility(to_tfn(b), to_tfn(a)), oracle::possibility(b, a), 1e-3)
        << "b=" << to_tfn(b) << " a=" << to_tfn(a);
  }
}

}  // namespace
}  // namespace qoseval
