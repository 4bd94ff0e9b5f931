#pragma once

// Synthetic series built from a stream of uniform decimal digits. Each value
// consumes eight digits: a sign digit (0-4 negative, 5-9 positive), two
// integer digits and five fractional digits, giving values in
// [-99.99999, 99.99999] with exactly five decimals.

#include <array>
#include <concepts>
#include <cstdint>
#include <span>
#include <string>

#include "swm/transform.hpp"

namespace swm {

inline constexpr std::size_t kDigitsPerValue = 8;

template <class T>
concept DigitSource = requires(T& source) {
  { source.next_digit() } -> std::convertible_to<int>;
};

/// Counter-based uniform digit stream. Word k of the stream is a SplitMix64
/// finalizer applied to seed + k * golden_gamma; words are reduced to a digit
/// by rejecting the biased tail above the largest multiple of ten.
class DigitStream {
 public:
  explicit DigitStream(std::uint64_t seed) noexcept : seed_(seed) {}

  int next_digit() noexcept;

  std::uint64_t seed() const noexcept { return seed_; }
  /// Raw 64-bit words drawn so far, including rejected ones.
  std::uint64_t words_drawn() const noexcept { return counter_; }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// Maps eight digits to a value. A zero magnitude is returned as +0.0.
double value_from_digits(std::span<const int, kDigitsPerValue> digits);

template <DigitSource Source>
double next_value(Source& source) {
  std::array<int, kDigitsPerValue> digits{};
  for (int& d : digits) d = static_cast<int>(source.next_digit());
  return value_from_digits(digits);
}

struct GeneratedSeries {
  TimeSeries series;
  std::uint64_t seed;
};

/// n consecutive next_value draws from DigitStream(seed). grid.n() must
/// equal n.
GeneratedSeries generate(std::uint64_t seed, std::size_t n, const GridSpec& grid,
                         std::string unit = {});

}  // namespace swm
