#include "swm/series_gen.hpp"

#include <limits>
#include <vector>

#include "swm/error.hpp"

namespace swm {
namespace {

constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

// Largest multiple of 10 not exceeding 2^64; words at or above it are
// rejected so every digit has probability exactly 1/10.
constexpr std::uint64_t kDigitLimit =
    std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % 10;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

int DigitStream::next_digit() noexcept {
  for (;;) {
    const std::uint64_t word = mix64(seed_ + (++counter_) * kGoldenGamma);
    if (word < kDigitLimit) {
      return static_cast<int>(word % 10);
    }
  }
}

double value_from_digits(std::span<const int, kDigitsPerValue> digits) {
  for (int d : digits) {
    if (d < 0 || d > 9) {
      throw InvalidArgument("digit " + std::to_string(d) + " outside 0..9");
    }
  }
  // Seven magnitude digits as an integer count of 1e-5 units.
  std::int64_t scaled = 0;
  for (std::size_t k = 1; k < kDigitsPerValue; ++k) scaled = scaled * 10 + digits[k];
  if (scaled == 0) {
    return 0.0;
  }
  const double magnitude = static_cast<double>(scaled) / 100000.0;
  return digits[0] <= 4 ? -magnitude : magnitude;
}

GeneratedSeries generate(std::uint64_t seed, std::size_t n, const GridSpec& grid,
                         std::string unit) {
  if (n < 1) {
    throw InvalidArgument("generate needs n >= 1");
  }
  if (grid.n() != n) {
    throw DimensionMismatch("generate (grid.n)", n, grid.n());
  }
  DigitStream stream(seed);
  std::vector<double> values;
  values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) values.push_back(next_value(stream));
  return GeneratedSeries{TimeSeries(std::move(values), grid, std::move(unit)), seed};
}

}  // namespace swm
