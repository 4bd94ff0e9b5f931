#include "swm/transform.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "swm/error.hpp"

namespace swm {

TimeSeries::TimeSeries(std::vector<double> values, GridSpec grid, std::string unit)
    : values_(std::move(values)), grid_(grid), unit_(std::move(unit)) {
  if (values_.size() != grid_.n()) {
    throw DimensionMismatch("TimeSeries", grid_.n(), values_.size());
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw InvalidArgument("series value " + std::to_string(i + 1) + " is not finite");
    }
  }
}

double TimeSeries::at(std::size_t i) const {
  if (i < 1 || i > values_.size()) {
    throw IndexOutOfRange("series index", i, values_.size());
  }
  return values_[i - 1];
}

Spectrum::Spectrum(GridSpec grid, std::vector<Dyad> dyads, std::string unit)
    : grid_(grid), dyads_(std::move(dyads)), unit_(std::move(unit)) {
  if (dyads_.size() != grid_.n()) {
    throw DimensionMismatch("Spectrum", grid_.n(), dyads_.size());
  }
  for (std::size_t k = 0; k < dyads_.size(); ++k) {
    const Dyad& d = dyads_[k];
    if (d.index != k + 1) {
      throw InvalidArgument("dyad at position " + std::to_string(k + 1) + " has index " +
                            std::to_string(d.index));
    }
    const double expected = train_frequency(grid_, d.index);
    if (!(std::abs(d.frequency - expected) <= 1e-9 * expected)) {
      throw InvalidArgument("dyad " + std::to_string(d.index) + " frequency " +
                            std::to_string(d.frequency) + " Hz does not match grid (" +
                            std::to_string(expected) + " Hz)");
    }
    if (!std::isfinite(d.coefficient)) {
      throw InvalidArgument("dyad " + std::to_string(d.index) + " coefficient is not finite");
    }
  }
}

Spectrum Spectrum::from_coefficients(const GridSpec& grid, std::span<const double> coefficients,
                                     std::string unit) {
  if (coefficients.size() != grid.n()) {
    throw DimensionMismatch("Spectrum::from_coefficients", grid.n(), coefficients.size());
  }
  std::vector<Dyad> dyads;
  dyads.reserve(coefficients.size());
  for (std::size_t i = 1; i <= coefficients.size(); ++i) {
    dyads.push_back(Dyad{i, train_frequency(grid, i), coefficients[i - 1]});
  }
  return Spectrum(grid, std::move(dyads), std::move(unit));
}

std::vector<double> Spectrum::coefficients() const {
  std::vector<double> out;
  out.reserve(dyads_.size());
  for (const Dyad& d : dyads_) out.push_back(d.coefficient);
  return out;
}

std::vector<double> Spectrum::frequencies() const {
  std::vector<double> out;
  out.reserve(dyads_.size());
  for (const Dyad& d : dyads_) out.push_back(d.frequency);
  return out;
}

ForwardResult forward(const TimeSeries& series, const SolverOptions& options) {
  const SignPattern pattern(series.grid().n());
  SolveResult solved = solve(pattern, series.values(), options);
  return ForwardResult{Spectrum::from_coefficients(series.grid(), solved.solution, series.unit()),
                       solved.report};
}

TimeSeries inverse(const Spectrum& spectrum) {
  const SignPattern pattern(spectrum.grid().n());
  return TimeSeries(apply_sign_matrix_extended(pattern, spectrum.coefficients(), 1), spectrum.grid(),
                    spectrum.unit());
}

ReconstructionReport reconstruction_report(const TimeSeries& original,
                                           const TimeSeries& reconstructed) {
  if (original.size() != reconstructed.size()) {
    throw DimensionMismatch("reconstruction_report", original.size(), reconstructed.size());
  }
  if (!(original.grid() == reconstructed.grid())) {
    throw InvalidArgument("reconstruction_report: series are on different grids");
  }
  ReconstructionReport report;
  double sum_sq = 0.0;
  const auto& a = original.values();
  const auto& b = reconstructed.values();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double e = std::abs(a[i] - b[i]);
    if (e > report.max_abs_error) {
      report.max_abs_error = e;
      report.index_of_max = i + 1;
    }
    sum_sq += e * e;
  }
  report.rms_error = std::sqrt(sum_sq / static_cast<double>(a.size()));
  // Guard against rounding in the mean pushing rms past the max.
  report.rms_error = std::min(report.rms_error, report.max_abs_error);
  return report;
}

}  // namespace swm
