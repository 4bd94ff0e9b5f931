#pragma once

// Square-wave train geometry over the analysis interval.
//
// All indices on this surface are 1-based: subinterval (row) i and train
// (column) j both run over [1..n].

#include <cstddef>
#include <cstdint>

namespace swm {

class GridSpec {
 public:
  /// Relative tolerance used when checking n = f_s * delta_t.
  static constexpr double kConsistencyTolerance = 1e-9;

  /// Validates n >= 1, delta_t > 0, f_s > 0 and n = f_s * delta_t.
  GridSpec(std::size_t n, double delta_t, double f_s);

  static GridSpec from_delta_t(std::size_t n, double delta_t);
  static GridSpec from_sampling_rate(std::size_t n, double f_s);

  std::size_t n() const noexcept { return n_; }
  /// Length of the whole analysis interval, in seconds.
  double delta_t() const noexcept { return delta_t_; }
  /// Samples per second.
  double f_s() const noexcept { return f_s_; }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;

 private:
  std::size_t n_;
  double delta_t_;
  double f_s_;
};

enum class Sign : std::int8_t { negative = -1, positive = 1 };

constexpr double as_real(Sign s) noexcept { return s == Sign::positive ? 1.0 : -1.0; }
constexpr Sign flip(Sign s) noexcept {
  return s == Sign::positive ? Sign::negative : Sign::positive;
}

/// Number of consecutive equal-sign subintervals in train j: n - j + 1.
std::size_t half_wave_length(std::size_t n, std::size_t j);

/// Sign of train j at subinterval i, from the quotient/remainder rules on
/// i / l_j. Q even with R = 0 gives -, Q even with R != 0 gives +, and the
/// odd-Q cases are the mirror image.
Sign sign_at(std::size_t n, std::size_t i, std::size_t j);

/// The n x n sign pattern, computed on demand. Holds no O(n^2) storage.
class SignPattern {
 public:
  explicit SignPattern(std::size_t n);

  std::size_t n() const noexcept { return n_; }
  std::size_t half_wave_length(std::size_t j) const { return swm::half_wave_length(n_, j); }
  Sign operator()(std::size_t i, std::size_t j) const { return sign_at(n_, i, j); }

 private:
  std::size_t n_;
};

struct TrainDescriptor {
  std::size_t index;
  std::size_t half_wave_length;
  double frequency;
};

/// f_i = (1 / (2 delta_t)) * n / (n - i + 1), in hertz.
double train_frequency(const GridSpec& grid, std::size_t i);

TrainDescriptor describe_train(const GridSpec& grid, std::size_t i);

/// Value of train i, scaled by `coefficient`, at the midpoint of
/// subinterval k.
double sample_train(const GridSpec& grid, std::size_t i, double coefficient, std::size_t k);

}  // namespace swm
