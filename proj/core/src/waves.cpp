#include "swm/waves.hpp"

#include <cmath>
#include <string>

#include "swm/error.hpp"

namespace swm {
namespace {

void check_index(const char* what, std::size_t index, std::size_t n) {
  if (index < 1 || index > n) {
    throw IndexOutOfRange(what, index, n);
  }
}

std::string describe(std::size_t n, double delta_t, double f_s) {
  return "n = " + std::to_string(n) + ", delta_t = " + std::to_string(delta_t) +
         " s, f_s = " + std::to_string(f_s) + " Hz";
}

}  // namespace

GridSpec::GridSpec(std::size_t n, double delta_t, double f_s)
    : n_(n), delta_t_(delta_t), f_s_(f_s) {
  if (n < 1) {
    throw InvalidGrid("grid needs at least one subinterval");
  }
  if (!(std::isfinite(delta_t) && delta_t > 0.0)) {
    throw InvalidGrid("delta_t must be finite and positive: " + describe(n, delta_t, f_s));
  }
  if (!(std::isfinite(f_s) && f_s > 0.0)) {
    throw InvalidGrid("f_s must be finite and positive: " + describe(n, delta_t, f_s));
  }
  const double expected = static_cast<double>(n);
  if (std::abs(f_s * delta_t - expected) > kConsistencyTolerance * expected) {
    throw InvalidGrid("n != f_s * delta_t: " + describe(n, delta_t, f_s));
  }
}

GridSpec GridSpec::from_delta_t(std::size_t n, double delta_t) {
  return GridSpec(n, delta_t, static_cast<double>(n) / delta_t);
}

GridSpec GridSpec::from_sampling_rate(std::size_t n, double f_s) {
  return GridSpec(n, static_cast<double>(n) / f_s, f_s);
}

std::size_t half_wave_length(std::size_t n, std::size_t j) {
  check_index("train index", j, n);
  return n - j + 1;
}

Sign sign_at(std::size_t n, std::size_t i, std::size_t j) {
  check_index("subinterval index", i, n);
  const std::size_t l = half_wave_length(n, j);
  const std::size_t q = i / l;
  const std::size_t r = i % l;
  const bool q_even = q % 2 == 0;
  if (r == 0) {
    return q_even ? Sign::negative : Sign::positive;
  }
  return q_even ? Sign::positive : Sign::negative;
}

SignPattern::SignPattern(std::size_t n) : n_(n) {
  if (n < 1) {
    throw InvalidArgument("sign pattern needs n >= 1");
  }
}

double train_frequency(const GridSpec& grid, std::size_t i) {
  const std::size_t n = grid.n();
  check_index("train index", i, n);
  return (1.0 / (2.0 * grid.delta_t())) *
         (static_cast<double>(n) / static_cast<double>(n - i + 1));
}

TrainDescriptor describe_train(const GridSpec& grid, std::size_t i) {
  return TrainDescriptor{i, half_wave_length(grid.n(), i), train_frequency(grid, i)};
}

double sample_train(const GridSpec& grid, std::size_t i, double coefficient, std::size_t k) {
  return as_real(sign_at(grid.n(), k, i)) * coefficient;
}

}  // namespace swm
