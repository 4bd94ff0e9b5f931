#include "swm/linsolve.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <utility>

#include "parallel.hpp"
#include "swm/error.hpp"

namespace swm {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Panel width and column tile of the trailing update. Fixed constants: the
// per-element operation order depends on the panel width, so it must not
// vary with the thread count.
constexpr std::size_t kPanel = 48;
constexpr std::size_t kColumnTile = 512;
constexpr std::size_t kMinRowsPerThread = 32;

// Walks train j over rows [row_begin, row_end) (0-based) in runs of l_j and
// adds or subtracts x_j. Each output row receives its terms in ascending j.
template <class Acc>
void accumulate_sign_products(std::size_t n, std::span<const double> x, std::size_t row_begin,
                              std::size_t row_end, Acc* out) {
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t run = n - j;
    const Acc xj = static_cast<Acc>(x[j]);
    std::size_t row = row_begin;
    bool positive = (row / run) % 2 == 0;
    std::size_t run_end = std::min(row_end, (row / run + 1) * run);
    while (row < row_end) {
      if (positive) {
        for (; row < run_end; ++row) out[row - row_begin] += xj;
      } else {
        for (; row < run_end; ++row) out[row - row_begin] -= xj;
      }
      positive = !positive;
      run_end = std::min(row_end, run_end + run);
    }
  }
}

void check_length(const char* context, std::size_t expected, std::size_t actual) {
  if (expected != actual) {
    throw DimensionMismatch(context, expected, actual);
  }
}

void check_finite(std::span<const double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw InvalidArgument("right-hand side entry " + std::to_string(i + 1) +
                            " is not finite");
    }
  }
}

double inf_norm(std::span<const double> v) {
  double m = 0.0;
  for (double e : v) m = std::max(m, std::abs(e));
  return m;
}

}  // namespace

double SolverOptions::effective_pivot_tolerance(std::size_t n) const {
  if (pivot_tolerance) {
    return *pivot_tolerance;
  }
  // max |a_ij| is exactly 1 for a sign matrix.
  return 1e-12 * static_cast<double>(n);
}

void SolverOptions::validate() const {
  if (pivot_tolerance && !(*pivot_tolerance > 0.0)) {
    throw InvalidArgument("pivot_tolerance must be positive");
  }
}

std::size_t dense_memory_estimate(std::size_t n) noexcept {
  // Matrix, pivot record, and five length-n work vectors.
  return n * n * sizeof(double) + n * sizeof(std::size_t) + 5 * n * sizeof(double);
}

DenseMatrix assemble_dense(const SignPattern& pattern, std::size_t max_n_dense) {
  const std::size_t n = pattern.n();
  if (n > max_n_dense) {
    throw CapExceeded(n, max_n_dense);
  }
  DenseMatrix a(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t run = n - j;
    for (std::size_t i = 0; i < n; ++i) {
      a(i, j) = (i / run) % 2 == 0 ? 1.0 : -1.0;
    }
  }
  return a;
}

std::vector<double> apply_sign_matrix(const SignPattern& pattern, std::span<const double> x,
                                      std::size_t threads) {
  const std::size_t n = pattern.n();
  check_length("apply_sign_matrix", n, x.size());
  std::vector<double> y(n, 0.0);
  detail::parallel_for(0, n, detail::resolve_threads(threads), kMinRowsPerThread * 8,
                       [&](std::size_t lo, std::size_t hi) {
                         accumulate_sign_products<double>(n, x, lo, hi, y.data() + lo);
                       });
  return y;
}

std::vector<double> apply_sign_matrix_extended(const SignPattern& pattern,
                                               std::span<const double> x,
                                               std::size_t threads) {
  const std::size_t n = pattern.n();
  check_length("apply_sign_matrix_extended", n, x.size());
  std::vector<double> y(n);
  detail::parallel_for(0, n, detail::resolve_threads(threads), kMinRowsPerThread * 8,
                       [&](std::size_t lo, std::size_t hi) {
                         std::vector<long double> acc(hi - lo, 0.0L);
                         accumulate_sign_products<long double>(n, x, lo, hi, acc.data());
                         for (std::size_t i = lo; i < hi; ++i) {
                           y[i] = static_cast<double>(acc[i - lo]);
                         }
                       });
  return y;
}

std::vector<double> sign_residual(const SignPattern& pattern, std::span<const double> x,
                                  std::span<const double> rhs, std::size_t threads) {
  const std::size_t n = pattern.n();
  check_length("sign_residual (x)", n, x.size());
  check_length("sign_residual (rhs)", n, rhs.size());
  std::vector<double> r(n);
  detail::parallel_for(0, n, detail::resolve_threads(threads), kMinRowsPerThread * 8,
                       [&](std::size_t lo, std::size_t hi) {
                         std::vector<long double> acc(hi - lo, 0.0L);
                         accumulate_sign_products<long double>(n, x, lo, hi, acc.data());
                         for (std::size_t i = lo; i < hi; ++i) {
                           r[i] = static_cast<double>(static_cast<long double>(rhs[i]) -
                                                      acc[i - lo]);
                         }
                       });
  return r;
}

LuFactorization LuFactorization::factorize(DenseMatrix a, double pivot_tolerance,
                                           std::size_t threads) {
  const std::size_t n = a.n();
  threads = detail::resolve_threads(threads);
  std::vector<std::size_t> swaps(n);
  double min_pivot = n > 0 ? INFINITY : 0.0;

  for (std::size_t k0 = 0; k0 < n; k0 += kPanel) {
    const std::size_t k1 = std::min(n, k0 + kPanel);

    // Unblocked factorization of the panel columns [k0, k1).
    for (std::size_t k = k0; k < k1; ++k) {
      std::size_t p = k;
      double best = std::abs(a(k, k));
      for (std::size_t r = k + 1; r < n; ++r) {
        const double m = std::abs(a(r, k));
        if (m > best) {
          best = m;
          p = r;
        }
      }
      if (!(best >= pivot_tolerance)) {
        throw SingularSystem(k + 1, best, pivot_tolerance);
      }
      min_pivot = std::min(min_pivot, best);
      swaps[k] = p;
      if (p != k) {
        std::swap_ranges(a.row(k).begin(), a.row(k).end(), a.row(p).begin());
      }
      const double pivot = a(k, k);
      const double* urow = a.row(k).data();
      for (std::size_t r = k + 1; r < n; ++r) {
        double* row = a.row(r).data();
        const double l = row[k] / pivot;
        row[k] = l;
        for (std::size_t c = k + 1; c < k1; ++c) row[c] -= l * urow[c];
      }
    }
    if (k1 == n) {
      break;
    }

    // U12 = L11^{-1} A12.
    for (std::size_t k = k0; k < k1; ++k) {
      const double* urow = a.row(k).data();
      for (std::size_t r = k + 1; r < k1; ++r) {
        double* row = a.row(r).data();
        const double l = row[k];
        for (std::size_t c = k1; c < n; ++c) row[c] -= l * urow[c];
      }
    }

    // A22 -= L21 U12, rows split across threads; each element is updated in
    // ascending k within the panel.
    detail::parallel_for(k1, n, threads, kMinRowsPerThread, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t c0 = k1; c0 < n; c0 += kColumnTile) {
        const std::size_t c1 = std::min(n, c0 + kColumnTile);
        for (std::size_t r = lo; r < hi; ++r) {
          double* __restrict row = a.row(r).data();
          for (std::size_t k = k0; k < k1; ++k) {
            const double l = row[k];
            const double* __restrict urow = a.row(k).data();
            for (std::size_t c = c0; c < c1; ++c) row[c] -= l * urow[c];
          }
        }
      }
    });
  }
  return LuFactorization(std::move(a), std::move(swaps), min_pivot);
}

void LuFactorization::solve_in_place(std::span<double> b) const {
  const std::size_t n = lu_.n();
  check_length("LuFactorization::solve_in_place", n, b.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (swaps_[k] != k) std::swap(b[k], b[swaps_[k]]);
  }
  for (std::size_t r = 1; r < n; ++r) {
    const double* row = lu_.row(r).data();
    double s = b[r];
    for (std::size_t c = 0; c < r; ++c) s -= row[c] * b[c];
    b[r] = s;
  }
  for (std::size_t r = n; r-- > 0;) {
    const double* row = lu_.row(r).data();
    double s = b[r];
    for (std::size_t c = r + 1; c < n; ++c) s -= row[c] * b[c];
    b[r] = s / row[r];
  }
}

SolveResult solve(const SignPattern& pattern, std::span<const double> rhs,
                  const SolverOptions& options) {
  options.validate();
  const std::size_t n = pattern.n();
  check_length("solve", n, rhs.size());
  check_finite(rhs);

  const auto start = Clock::now();
  SolveResult result;
  SolveReport& report = result.report;

  auto t = Clock::now();
  DenseMatrix a = assemble_dense(pattern, options.max_n_dense);
  report.assemble_seconds = seconds_since(t);

  t = Clock::now();
  const LuFactorization lu = LuFactorization::factorize(
      std::move(a), options.effective_pivot_tolerance(n), options.threads);
  report.min_pivot = lu.min_pivot();
  std::vector<double>& x = result.solution;
  x.assign(rhs.begin(), rhs.end());
  lu.solve_in_place(x);
  report.factorize_seconds = seconds_since(t);

  t = Clock::now();
  for (std::size_t step = 0; step < options.refinement_steps; ++step) {
    std::vector<double> correction = sign_residual(pattern, x, rhs, options.threads);
    if (inf_norm(correction) == 0.0) {
      break;
    }
    lu.solve_in_place(correction);
    for (std::size_t i = 0; i < n; ++i) x[i] += correction[i];
    ++report.refinement_steps_used;
  }

  const std::vector<double> ax = apply_sign_matrix_extended(pattern, x, options.threads);
  double residual = 0.0;
  for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(ax[i] - rhs[i]));
  report.residual_inf_norm = residual;
  report.refine_seconds = seconds_since(t);
  report.elapsed_seconds = seconds_since(start);
  return result;
}

}  // namespace swm
