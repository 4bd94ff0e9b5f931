#pragma once

// Dense solver for the signed system  sum_j sign(i, j) * C_j = V_i.
//
// The factorization is a blocked LU with partial (row) pivoting. The sign
// structure is only exploited by apply_sign_matrix, which never materializes
// the matrix and is used for residuals and iterative refinement.
//
// Results are bit-identical for a given input regardless of `threads`: work
// is split across rows only, and every element sees the same sequence of
// floating-point operations.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "swm/waves.hpp"

namespace swm {

inline constexpr std::size_t kDefaultMaxNDense = 12'000;

struct SolverOptions {
  /// Pivots with magnitude below this abort the solve. When unset the
  /// tolerance is 1e-12 * n * max|a_ij|, i.e. 1e-12 * n for a sign matrix.
  std::optional<double> pivot_tolerance;
  std::size_t refinement_steps = 2;
  std::size_t max_n_dense = kDefaultMaxNDense;
  /// Worker threads for factorization and matrix-free products; 0 means
  /// std::thread::hardware_concurrency().
  std::size_t threads = 1;

  double effective_pivot_tolerance(std::size_t n) const;
  void validate() const;
};

struct SolveReport {
  double min_pivot = 0.0;
  /// ||A C - V||_inf recomputed with apply_sign_matrix_extended.
  double residual_inf_norm = 0.0;
  std::size_t refinement_steps_used = 0;
  double elapsed_seconds = 0.0;
  double assemble_seconds = 0.0;
  double factorize_seconds = 0.0;
  double refine_seconds = 0.0;
};

/// Row-major dense n x n matrix. Indices are 0-based; this type is internal
/// plumbing for the factorization.
class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t n() const noexcept { return n_; }

  double& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
  double operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }

  std::span<double> row(std::size_t r) { return {data_.data() + r * n_, n_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * n_, n_}; }

  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

 private:
  std::size_t n_;
  std::vector<double> data_;
};

/// Bytes needed to hold the dense matrix plus solve workspace for size n.
std::size_t dense_memory_estimate(std::size_t n) noexcept;

/// Materializes the sign pattern as +/-1.0. Throws CapExceeded when
/// n > max_n_dense.
DenseMatrix assemble_dense(const SignPattern& pattern,
                           std::size_t max_n_dense = kDefaultMaxNDense);

/// y_i = sum_j sign(i, j) * x_j, accumulated in ascending j. Additions and
/// subtractions only.
std::vector<double> apply_sign_matrix(const SignPattern& pattern, std::span<const double> x,
                                      std::size_t threads = 1);

/// Same sum and order as apply_sign_matrix, accumulated in extended
/// precision and rounded once per entry.
std::vector<double> apply_sign_matrix_extended(const SignPattern& pattern,
                                               std::span<const double> x,
                                               std::size_t threads = 1);

/// rhs - A x, accumulated in extended precision and rounded once.
std::vector<double> sign_residual(const SignPattern& pattern, std::span<const double> x,
                                  std::span<const double> rhs, std::size_t threads = 1);

class LuFactorization {
 public:
  /// Factors `a` in place. Pivot choice: largest magnitude in the column,
  /// ties resolved toward the smallest row index.
  static LuFactorization factorize(DenseMatrix a, double pivot_tolerance,
                                   std::size_t threads = 1);

  std::size_t n() const noexcept { return lu_.n(); }
  double min_pivot() const noexcept { return min_pivot_; }

  /// Overwrites b with the solution of A x = b.
  void solve_in_place(std::span<double> b) const;

 private:
  LuFactorization(DenseMatrix lu, std::vector<std::size_t> swaps, double min_pivot)
      : lu_(std::move(lu)), swaps_(std::move(swaps)), min_pivot_(min_pivot) {}

  DenseMatrix lu_;
  std::vector<std::size_t> swaps_;
  double min_pivot_;
};

struct SolveResult {
  std::vector<double> solution;
  SolveReport report;
};

/// Solves the sign system for `rhs`, then runs up to
/// options.refinement_steps rounds of iterative refinement.
SolveResult solve(const SignPattern& pattern, std::span<const double> rhs,
                  const SolverOptions& options = {});

}  // namespace swm
