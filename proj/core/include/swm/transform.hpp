#pragma once

// Forward and inverse square wave transform.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "swm/linsolve.hpp"
#include "swm/waves.hpp"

namespace swm {

/// Uniformly sampled values V_1..V_n. The unit is an opaque label.
class TimeSeries {
 public:
  /// Throws DimensionMismatch when values.size() != grid.n() and
  /// InvalidArgument on non-finite values.
  TimeSeries(std::vector<double> values, GridSpec grid, std::string unit = {});

  const std::vector<double>& values() const noexcept { return values_; }
  const GridSpec& grid() const noexcept { return grid_; }
  const std::string& unit() const noexcept { return unit_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// 1-based access.
  double at(std::size_t i) const;

 private:
  std::vector<double> values_;
  GridSpec grid_;
  std::string unit_;
};

struct Dyad {
  std::size_t index;
  double frequency;
  double coefficient;

  friend bool operator==(const Dyad&, const Dyad&) = default;
};

class Spectrum {
 public:
  /// Requires exactly n dyads with indices 1..n ascending and frequencies
  /// matching train_frequency to 1e-9 relative.
  Spectrum(GridSpec grid, std::vector<Dyad> dyads, std::string unit = {});

  /// Builds dyads with frequencies from train_frequency.
  static Spectrum from_coefficients(const GridSpec& grid, std::span<const double> coefficients,
                                    std::string unit = {});

  const GridSpec& grid() const noexcept { return grid_; }
  const std::vector<Dyad>& dyads() const noexcept { return dyads_; }
  const std::string& unit() const noexcept { return unit_; }
  std::size_t size() const noexcept { return dyads_.size(); }

  std::vector<double> coefficients() const;
  std::vector<double> frequencies() const;

 private:
  GridSpec grid_;
  std::vector<Dyad> dyads_;
  std::string unit_;
};

struct ReconstructionReport {
  double max_abs_error = 0.0;
  /// 1-based; the smallest index attaining max_abs_error.
  std::size_t index_of_max = 1;
  double rms_error = 0.0;
};

struct ForwardResult {
  Spectrum spectrum;
  SolveReport report;
};

ForwardResult forward(const TimeSeries& series, const SolverOptions& options = {});

/// V_i = sum_j sign(i, j) C_j, summed sequentially in ascending j with an
/// extended-precision accumulator.
TimeSeries inverse(const Spectrum& spectrum);

ReconstructionReport reconstruction_report(const TimeSeries& original,
                                           const TimeSeries& reconstructed);

}  // namespace swm
