#include "swm/waves.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "oracle/sign_oracle.hpp"
#include "swm/error.hpp"

namespace swm {
namespace {

TEST(GridSpec, DerivesMissingQuantity) {
  const GridSpec a = GridSpec::from_delta_t(8, 2.0);
  EXPECT_DOUBLE_EQ(a.f_s(), 4.0);
  const GridSpec b = GridSpec::from_sampling_rate(10000, 2000.0);
  EXPECT_DOUBLE_EQ(b.delta_t(), 5.0);
}

TEST(GridSpec, RejectsInconsistentOrNonPositiveMetadata) {
  EXPECT_THROW(GridSpec(8, 2.0, 4.1), InvalidGrid);
  EXPECT_THROW(GridSpec(0, 1.0, 0.0), InvalidGrid);
  EXPECT_THROW(GridSpec::from_delta_t(8, 0.0), InvalidGrid);
  EXPECT_THROW(GridSpec::from_delta_t(8, -2.0), InvalidGrid);
  EXPECT_THROW(GridSpec::from_sampling_rate(8, -4.0), InvalidGrid);
  EXPECT_THROW(GridSpec::from_delta_t(8, NAN), InvalidGrid);
  // Within the 1e-9 relative tolerance.
  EXPECT_NO_THROW(GridSpec(8, 2.0, 4.0 * (1 + 1e-11)));
}

TEST(HalfWaveLength, Examples) {
  EXPECT_EQ(half_wave_length(8, 5), 4u);
  EXPECT_EQ(half_wave_length(10, 10), 1u);
  EXPECT_EQ(half_wave_length(10, 1), 10u);
  EXPECT_EQ(half_wave_length(1, 1), 1u);
}

TEST(HalfWaveLength, RejectsOutOfRange) {
  EXPECT_THROW(half_wave_length(8, 0), IndexOutOfRange);
  EXPECT_THROW(half_wave_length(8, 9), IndexOutOfRange);
}

TEST(SignAt, Examples) {
  EXPECT_EQ(sign_at(8, 1, 8), Sign::positive);
  EXPECT_EQ(sign_at(8, 4, 6), Sign::negative);
  EXPECT_EQ(sign_at(8, 8, 2), Sign::negative);
  EXPECT_EQ(sign_at(5, 3, 1), Sign::positive);
}

TEST(SignAt, RejectsOutOfRange) {
  EXPECT_THROW(sign_at(8, 0, 1), IndexOutOfRange);
  EXPECT_THROW(sign_at(8, 9, 1), IndexOutOfRange);
  EXPECT_THROW(sign_at(8, 1, 0), IndexOutOfRange);
  EXPECT_THROW(sign_at(8, 1, 9), IndexOutOfRange);
}

TEST(SignAt, MatchesEightPointSystem) {
  // Rows of the 8 x 8 system, one string per subinterval.
  const char* rows[] = {"++++++++", "+++++++-", "++++++-+", "+++++---",
                        "++++--++", "+++---+-", "++---+-+", "+----+--"};
  for (std::size_t i = 1; i <= 8; ++i) {
    for (std::size_t j = 1; j <= 8; ++j) {
      const Sign expected = rows[i - 1][j - 1] == '+' ? Sign::positive : Sign::negative;
      EXPECT_EQ(sign_at(8, i, j), expected) << "i=" << i << " j=" << j;
    }
  }
}

TEST(SignAt, ExhaustiveAgainstClosedFormUpTo256) {
  std::size_t mismatches = 0;
  for (std::size_t n = 1; n <= 256; ++n)
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = 1; j <= n; ++j)
        if (static_cast<int>(sign_at(n, i, j)) != testing::closed_form_sign(n, i, j)) ++mismatches;
  EXPECT_EQ(mismatches, 0u);
}

TEST(SignPattern, ColumnsAreAlternatingRunsStartingPositive) {
  for (std::size_t n : {1u, 2u, 7u, 8u, 33u, 100u}) {
    const SignPattern p(n);
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t l = p.half_wave_length(j);
      Sign expected = Sign::positive;
      for (std::size_t i = 1; i <= n; ++i) {
        EXPECT_EQ(p(i, j), expected);
        if (i % l == 0) expected = flip(expected);
      }
    }
    for (std::size_t i = 1; i <= n; ++i) {
      EXPECT_EQ(p(i, 1), Sign::positive);
      EXPECT_EQ(p(i, n) == Sign::positive, i % 2 == 1 || n == 1);
    }
  }
}

TEST(TrainFrequency, EightPointExample) {
  const GridSpec g = GridSpec::from_delta_t(8, 2.0);
  EXPECT_DOUBLE_EQ(train_frequency(g, 8), 2.0);
  EXPECT_DOUBLE_EQ(train_frequency(g, 5), 0.5);
  EXPECT_DOUBLE_EQ(train_frequency(g, 1), 0.25);
}

TEST(TrainFrequency, TenThousandPointGrid) {
  const GridSpec g = GridSpec::from_delta_t(10000, 5.0);
  EXPECT_NEAR(train_frequency(g, 1), 0.100000, 5e-7);
  EXPECT_NEAR(train_frequency(g, 2), 0.100010, 5e-7);
  EXPECT_NEAR(train_frequency(g, 100), 0.101000, 5e-7);
  EXPECT_THROW(train_frequency(g, 10001), IndexOutOfRange);
}

TEST(TrainFrequency, StrictlyIncreasingFromLowestToNyquist) {
  for (std::size_t n : {1u, 2u, 9u, 64u, 1000u}) {
    const GridSpec g = GridSpec::from_sampling_rate(n, 44100.0);
    EXPECT_DOUBLE_EQ(train_frequency(g, 1), 1.0 / (2.0 * g.delta_t()));
    EXPECT_NEAR(train_frequency(g, n), g.f_s() / 2.0, 1e-12 * g.f_s());
    for (std::size_t i = 2; i <= n; ++i) {
      EXPECT_LT(train_frequency(g, i - 1), train_frequency(g, i));
    }
  }
}

TEST(DescribeTrain, CombinesLengthAndFrequency) {
  const TrainDescriptor t = describe_train(GridSpec::from_delta_t(8, 2.0), 6);
  EXPECT_EQ(t.index, 6u);
  EXPECT_EQ(t.half_wave_length, 3u);
  EXPECT_DOUBLE_EQ(t.frequency, 2.0 / 3.0);
}

TEST(SampleTrain, Examples) {
  const GridSpec g = GridSpec::from_delta_t(8, 2.0);
  EXPECT_EQ(sample_train(g, 8, 118.0, 2), -118.0);
  EXPECT_EQ(sample_train(g, 1, 170.5, 6), 170.5);
  EXPECT_EQ(sample_train(g, 4, 0.0, 3), 0.0);
  EXPECT_THROW(sample_train(g, 9, 1.0, 1), IndexOutOfRange);
  EXPECT_THROW(sample_train(g, 1, 1.0, 0), IndexOutOfRange);
}

}  // namespace
}  // namespace swm
