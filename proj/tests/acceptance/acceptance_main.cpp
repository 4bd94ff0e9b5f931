// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.
//
//   swm_acceptance               criteria 1-8
//   swm_acceptance --full-scale  also the n = 10000 reconstruction job

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "oracle/rational_gauss.hpp"
#include "oracle/sign_oracle.hpp"
#include "swm/error.hpp"
#include "swm/io.hpp"
#include "swm/linsolve.hpp"
#include "swm/series_gen.hpp"
#include "swm/transform.hpp"

namespace {

using Clock = std::chrono::steady_clock;

const std::vector<double> kSeries = {84, -152, 63, 98, -35, 0, 145, -14};
const std::vector<double> kCoefficients = {170.5, -38.5, -100.5, -135.5, 195.0, -135.5, 10.5, 118.0};

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

Outcome golden_example() {
  const swm::TimeSeries series(kSeries, swm::GridSpec::from_delta_t(8, 2.0), "mV");
  std::vector<double> times;
  swm::ForwardResult result = swm::forward(series);
  for (int rep = 0; rep < 11; ++rep) {
    const auto t = Clock::now();
    result = swm::forward(series);
    times.push_back(seconds_since(t));
  }
  std::nth_element(times.begin(), times.begin() + 5, times.end());
  const double runtime = times[5];

  const double expected_f[] = {0.25, 2.0 / 7.0, 1.0 / 3.0, 0.4, 0.5, 2.0 / 3.0, 1.0, 2.0};
  const auto c = result.spectrum.coefficients();
  const auto f = result.spectrum.frequencies();
  double c_err = max_abs_diff(c, kCoefficients);
  double f_err = 0.0;
  for (std::size_t j = 0; j < 8; ++j) f_err = std::max(f_err, std::abs(f[j] - expected_f[j]));
  const bool pass = c_err <= 1e-9 && f_err <= 1e-6 && runtime < 1e-3;
  return {pass, "coef err " + fmt(c_err) + " (<=1e-9), freq err " + fmt(f_err) +
                    " (<=1e-6), median runtime " + fmt(runtime * 1e3) + " ms (<1 ms)"};
}

Outcome eq2_verification() {
  const auto y = swm::apply_sign_matrix(swm::SignPattern(8), kCoefficients);
  const double err = max_abs_diff(y, kSeries);
  return {err <= 1e-12, "max |A C - V| = " + fmt(err) + " (<=1e-12)"};
}

Outcome frequency_law_at_scale() {
  const auto grid = swm::GridSpec::from_delta_t(10000, 5.0);
  const double f1 = swm::train_frequency(grid, 1);
  const double f2 = swm::train_frequency(grid, 2);
  const double f100 = swm::train_frequency(grid, 100);
  const double err = std::max({std::abs(f1 - 0.100000), std::abs(f2 - 0.100010),
                               std::abs(f100 - 0.101000)});
  char buf[160];
  std::snprintf(buf, sizeof buf, "f1=%.6f f2=%.6f f100=%.6f, max err %.3g (<=5e-7)", f1, f2,
                f100, err);
  return {err <= 5e-7, buf};
}

Outcome scaled_experiment(std::size_t n, std::uint64_t seed, double time_limit) {
  const auto t = Clock::now();
  const auto grid = swm::GridSpec::from_sampling_rate(n, 2000.0);
  const swm::GeneratedSeries generated = swm::generate(seed, n, grid, "mV");
  const swm::ForwardResult result = swm::forward(generated.series);
  const swm::TimeSeries rebuilt = swm::inverse(result.spectrum);
  const auto report = swm::reconstruction_report(generated.series, rebuilt);
  const double runtime = seconds_since(t);
  const bool pass = report.max_abs_error <= 1e-9 && runtime < time_limit;
  return {pass, "n=" + std::to_string(n) + " max|V-Vcomp| = " + fmt(report.max_abs_error) +
                    " at i=" + std::to_string(report.index_of_max) + " (<=1e-9), runtime " +
                    fmt(runtime) + " s (<" + fmt(time_limit) + " s)"};
}

Outcome sign_algorithm_oracle() {
  std::size_t mismatches = 0;
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 256; ++n) {
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = 1; j <= n; ++j) {
        ++checked;
        if (static_cast<int>(swm::sign_at(n, i, j)) != swm::testing::closed_form_sign(n, i, j)) {
          ++mismatches;
        }
      }
    }
  }
  return {mismatches == 0,
          std::to_string(mismatches) + " mismatches over " + std::to_string(checked) + " entries"};
}

Outcome small_n_rational_oracle() {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> dist(-100.0, 100.0);
  double worst = 0.0;
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto matrix = swm::testing::closed_form_matrix(n);
    const swm::SignPattern pattern(n);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> rhs(n);
      for (double& e : rhs) e = dist(rng);
      const auto exact = swm::testing::solve_exact(matrix, rhs);
      const auto x = swm::solve(pattern, rhs).solution;
      for (std::size_t j = 0; j < n; ++j) {
        worst = std::max(worst, std::abs(x[j] - swm::testing::to_double(exact[j])));
      }
    }
  }
  return {worst <= 1e-12, "1000 systems, max |C - C_exact| = " + fmt(worst) + " (<=1e-12)"};
}

Outcome nonsingularity_sweep() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-100.0, 100.0);
  std::size_t failures = 0;
  std::string first_failure;
  double smallest_pivot = INFINITY;
  for (std::size_t n = 1; n <= 512; ++n) {
    std::vector<double> rhs(n);
    for (double& e : rhs) e = dist(rng);
    try {
      smallest_pivot = std::min(smallest_pivot, swm::solve(swm::SignPattern(n), rhs).report.min_pivot);
    } catch (const swm::SingularSystem& e) {
      if (failures++ == 0) first_failure = " first at n=" + std::to_string(n);
    }
  }
  return {failures == 0, std::to_string(failures) + " singular of 512" + first_failure +
                             ", smallest pivot " + fmt(smallest_pivot)};
}

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "swm");
  std::ostringstream out;
  std::ostringstream err;
  const int code = swm::cli::run(args, out, err);
  if (code != 0) std::cerr << err.str();
  return code;
}

Outcome determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "swm_acceptance_determinism";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto p = [&](const std::string& name) { return (dir / name).string(); };

  bool ok = true;
  std::string detail;
  const std::vector<std::string> thread_counts = {"1", "2", "4", "0"};
  for (std::size_t k = 0; k < thread_counts.size(); ++k) {
    const std::string tag = std::to_string(k);
    ok &= run_cli({"generate", "--seed", "2024", "--n", "900", "--fs", "2000", "--out",
                   p("gen" + tag + ".csv"), "--threads", thread_counts[k]}) == 0;
    ok &= run_cli({"analyze", p("gen0.csv"), "--fs", "2000", "--out", p("spec" + tag + ".json"),
                   "--report", p("rep" + tag + ".json"), "--threads", thread_counts[k]}) == 0;
  }
  if (!ok) {
    return {false, "a CLI invocation failed"};
  }
  std::size_t differing = 0;
  for (const char* stem : {"gen", "spec", "rep"}) {
    const std::string ext = std::string(stem) == "gen" ? ".csv" : ".json";
    const std::string reference = swm::io::read_text_file(p(std::string(stem) + "0" + ext));
    for (std::size_t k = 1; k < thread_counts.size(); ++k) {
      if (swm::io::read_text_file(p(stem + std::to_string(k) + ext)) != reference) ++differing;
    }
  }
  fs::remove_all(dir);
  detail = "generate/analyze x4 runs (--threads 1,2,4,0): " + std::to_string(differing) +
           " differing files";
  return {differing == 0, detail};
}

}  // namespace

int main(int argc, char** argv) {
  bool full_scale = false;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--full-scale") full_scale = true;
  }

  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
  };
  std::vector<Criterion> criteria = {
      {"1 golden 8-point example", golden_example},
      {"2 matrix-free verification of the 8 equations", eq2_verification},
      {"3 frequency law at n=10000", frequency_law_at_scale},
      {"4 scaled digit experiment n=2000", [] { return scaled_experiment(2000, 42, 30.0); }},
      {"5 sign rules vs run-length oracle, n<=256", sign_algorithm_oracle},
      {"6 small-n exact rational oracle", small_n_rational_oracle},
      {"7 nonsingularity sweep n=1..512", nonsingularity_sweep},
      {"8 determinism across runs and --threads", determinism},
  };
  if (full_scale) {
    criteria.push_back({"4b full-scale digit experiment n=10000",
                        [] { return scaled_experiment(10000, 42, 3600.0); }});
  }

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  [" << c.name << "]  " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed"
            << std::endl;
  return failed == 0 ? 0 : 1;
}
