#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "swm/error.hpp"
#include "swm/io.hpp"
#include "swm/linsolve.hpp"
#include "swm/series_gen.hpp"
#include "swm/transform.hpp"

namespace swm::cli {
namespace {

struct CommonOptions {
  std::size_t threads = 0;
};

struct AnalyzeOptions {
  std::string input;
  std::optional<double> delta_t;
  std::optional<double> f_s;
  std::string out;
  std::string report;
  std::string unit;
  std::size_t refinement_steps = 2;
  std::optional<double> pivot_tolerance;
};

struct ReconstructOptions {
  std::string input;
  std::string out;
};

struct GenerateOptions {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  double f_s = 0.0;
  std::string out;
  std::string unit;
};

struct BenchOptions {
  std::vector<std::size_t> sizes;
  std::size_t repeats = 1;
  std::uint64_t seed = 1;
};

struct PlotdataOptions {
  std::string input;
  std::string out;
};

std::size_t max_n_dense_from_env() {
  const char* raw = std::getenv(kMaxNDenseEnv);
  if (raw == nullptr || *raw == '\0') {
    return kDefaultMaxNDense;
  }
  const std::string_view text(raw);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
    throw InvalidArgument(std::string(kMaxNDenseEnv) + " must be a positive integer, got \"" +
                          std::string(text) + "\"");
  }
  return value;
}

SolverOptions solver_options(const CommonOptions& common, std::size_t refinement_steps) {
  SolverOptions options;
  options.threads = common.threads;
  options.refinement_steps = refinement_steps;
  options.max_n_dense = max_n_dense_from_env();
  return options;
}

std::string series_text(std::span<const double> values) {
  std::ostringstream os;
  io::write_series(os, values);
  return os.str();
}

int cmd_analyze(const AnalyzeOptions& opt, const CommonOptions& common, std::ostream& out) {
  std::vector<double> values = io::read_series_file(opt.input);
  const std::size_t n = values.size();
  const GridSpec grid = opt.delta_t ? GridSpec::from_delta_t(n, *opt.delta_t)
                                    : GridSpec::from_sampling_rate(n, *opt.f_s);
  const TimeSeries series(std::move(values), grid, opt.unit);

  SolverOptions options = solver_options(common, opt.refinement_steps);
  options.pivot_tolerance = opt.pivot_tolerance;
  const ForwardResult result = forward(series, options);
  const TimeSeries rebuilt = inverse(result.spectrum);
  const ReconstructionReport recon = reconstruction_report(series, rebuilt);

  io::write_text_file(opt.out, io::spectrum_to_text(result.spectrum));
  const std::string report = io::report_to_text(recon, result.report);
  if (!opt.report.empty()) {
    io::write_text_file(opt.report, report);
  }

  out << "n = " << n << ", delta_t = " << io::format_number(grid.delta_t())
      << " s, f_s = " << io::format_number(grid.f_s()) << " Hz\n"
      << "max |V - V_comp| = " << io::format_number(recon.max_abs_error) << " at i = "
      << recon.index_of_max << ", rms = " << io::format_number(recon.rms_error) << '\n'
      << "residual_inf_norm = " << io::format_number(result.report.residual_inf_norm)
      << ", min_pivot = " << io::format_number(result.report.min_pivot)
      << ", refinement steps = " << result.report.refinement_steps_used << '\n'
      << "solve time = " << result.report.elapsed_seconds << " s\n";
  if (opt.report.empty()) {
    out << report;
  }
  return kOk;
}

int cmd_reconstruct(const ReconstructOptions& opt, std::ostream& out) {
  const Spectrum spectrum = io::read_spectrum_file(opt.input);
  const TimeSeries rebuilt = inverse(spectrum);
  io::write_text_file(opt.out, series_text(rebuilt.values()));
  out << "wrote " << rebuilt.size() << " values to " << opt.out << '\n';
  return kOk;
}

int cmd_generate(const GenerateOptions& opt, std::ostream& out) {
  if (opt.n < 1) {
    throw InvalidArgument("--n must be >= 1");
  }
  const GridSpec grid = GridSpec::from_sampling_rate(opt.n, opt.f_s);
  const GeneratedSeries generated = generate(opt.seed, opt.n, grid, opt.unit);
  io::write_text_file(opt.out, series_text(generated.series.values()));
  out << "delta_t = " << io::format_number(grid.delta_t()) << " s\n";
  return kOk;
}

int cmd_bench(const BenchOptions& opt, const CommonOptions& common, std::ostream& out) {
  SolverOptions options = solver_options(common, 2);
  for (std::size_t n : opt.sizes) {
    if (n < 1) {
      throw InvalidArgument("--sizes entries must be >= 1");
    }
    if (n > options.max_n_dense) {
      throw CapExceeded(n, options.max_n_dense);
    }
  }
  const std::size_t repeats = std::max<std::size_t>(1, opt.repeats);

  out << std::left << std::setw(8) << "n" << std::setw(14) << "assemble_s" << std::setw(14)
      << "factorize_s" << std::setw(14) << "refine_s" << std::setw(16) << "residual_inf"
      << "peak_mem_mib\n";
  for (std::size_t n : opt.sizes) {
    const GridSpec grid = GridSpec::from_delta_t(n, 1.0);
    const GeneratedSeries rhs = generate(opt.seed, n, grid);
    const SignPattern pattern(n);
    double assemble = std::numeric_limits<double>::infinity();
    double factorize = assemble;
    double refine = assemble;
    double residual = 0.0;
    for (std::size_t r = 0; r < repeats; ++r) {
      const SolveResult result = solve(pattern, rhs.series.values(), options);
      assemble = std::min(assemble, result.report.assemble_seconds);
      factorize = std::min(factorize, result.report.factorize_seconds);
      refine = std::min(refine, result.report.refine_seconds);
      residual = result.report.residual_inf_norm;
    }
    const double mib = static_cast<double>(dense_memory_estimate(n)) / (1024.0 * 1024.0);
    out << std::setw(8) << n << std::setw(14) << assemble << std::setw(14) << factorize
        << std::setw(14) << refine << std::setw(16) << residual << std::fixed
        << std::setprecision(2) << mib << std::defaultfloat << std::setprecision(6) << '\n';
  }
  return kOk;
}

int cmd_plotdata(const PlotdataOptions& opt, std::ostream& out) {
  const Spectrum spectrum = io::read_spectrum_file(opt.input);
  std::ostringstream os;
  io::write_plotdata(os, spectrum);
  io::write_text_file(opt.out, os.str());
  out << "wrote " << spectrum.size() << " rows to " << opt.out << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Square wave transform toolkit", args.empty() ? "swm" : args.front()};
  app.require_subcommand(1);

  CommonOptions common;
  app.add_option("--threads", common.threads,
                 "Worker threads for the solver (0 = all hardware threads)");

  AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Series file -> spectrum file");
  analyze_cmd->fallthrough();
  analyze_cmd->add_option("input", analyze.input, "Series CSV")->required();
  auto* dt_opt = analyze_cmd->add_option("--delta-t", analyze.delta_t,
                                         "Length of the sampled interval in seconds");
  auto* fs_opt = analyze_cmd->add_option("--fs", analyze.f_s, "Sampling frequency in hertz");
  dt_opt->excludes(fs_opt);
  fs_opt->excludes(dt_opt);
  analyze_cmd->add_option("--out", analyze.out, "Spectrum output path")->required();
  analyze_cmd->add_option("--report", analyze.report, "Reconstruction report output path");
  analyze_cmd->add_option("--unit", analyze.unit, "Unit label carried into the spectrum");
  analyze_cmd->add_option("--refine", analyze.refinement_steps,
                          "Iterative refinement steps")->capture_default_str();
  analyze_cmd->add_option("--pivot-tolerance", analyze.pivot_tolerance,
                          "Abort when a pivot magnitude falls below this (default 1e-12 * n)")
      ->check(CLI::PositiveNumber);

  ReconstructOptions reconstruct;
  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Spectrum file -> series file");
  reconstruct_cmd->fallthrough();
  reconstruct_cmd->add_option("input", reconstruct.input, "Spectrum file")->required();
  reconstruct_cmd->add_option("--out", reconstruct.out, "Series output path")->required();

  GenerateOptions gen;
  auto* generate_cmd = app.add_subcommand("generate", "Synthetic digit-mapped series");
  generate_cmd->fallthrough();
  generate_cmd->add_option("--seed", gen.seed, "Digit stream seed")->required();
  generate_cmd->add_option("--n", gen.n, "Number of values")->required();
  generate_cmd->add_option("--fs", gen.f_s, "Sampling frequency in hertz")->required();
  generate_cmd->add_option("--out", gen.out, "Series output path")->required();
  generate_cmd->add_option("--unit", gen.unit, "Unit label (informational)");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time assemble/factorize/refine per size");
  bench_cmd->fallthrough();
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated sizes")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--repeats", bench.repeats, "Runs per size (min time reported)")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench.seed, "Seed for the right-hand sides")
      ->capture_default_str();

  PlotdataOptions plot;
  auto* plot_cmd = app.add_subcommand("plotdata", "Spectrum file -> two-column f_hz,c CSV");
  plot_cmd->fallthrough();
  plot_cmd->add_option("input", plot.input, "Spectrum file")->required();
  plot_cmd->add_option("--out", plot.out, "CSV output path")->required();

  try {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    if (args.empty()) argv.push_back("swm");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (analyze_cmd->parsed() && !analyze.delta_t && !analyze.f_s) {
      throw CLI::ValidationError("analyze", "exactly one of --delta-t or --fs is required");
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kParseError;
  }

  try {
    if (analyze_cmd->parsed()) return cmd_analyze(analyze, common, out);
    if (reconstruct_cmd->parsed()) return cmd_reconstruct(reconstruct, out);
    if (generate_cmd->parsed()) return cmd_generate(gen, out);
    if (bench_cmd->parsed()) return cmd_bench(bench, common, out);
    if (plot_cmd->parsed()) return cmd_plotdata(plot, out);
  } catch (const SingularSystem& e) {
    err << "error: " << e.what() << '\n';
    return kSingularSystem;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (override with " << kMaxNDenseEnv << ")\n";
    return kCapExceeded;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const InvalidGrid& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  }
  return kParseError;
}

}  // namespace swm::cli
