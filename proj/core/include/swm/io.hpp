#pragma once

// File formats.
//
// Series file: CSV, one value per line, optional first line `value`. Blank
// lines are ignored.
//
// Spectrum file: a JSON document
//   {
//     "format": "swt-spectrum", "version": 1,
//     "n": 8, "delta_t_s": 2, "f_s_hz": 4, "unit": "mV",
//     "dyads": [ {"i": 1, "f_hz": 0.25, "c": 170.5,
//                 "display": "(0.250000; 170.500000)"}, ... ]
//   }
// Numbers are written in the shortest form that parses back to the same
// double; "display" is the six-decimal rendering and is ignored on input.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swm/linsolve.hpp"
#include "swm/transform.hpp"

namespace swm::io {

/// Shortest decimal string that round-trips to `value`.
std::string format_number(double value);

/// "(f; c)" with six decimals, e.g. "(0.250000; 170.500000)".
std::string display_dyad(const Dyad& dyad);

/// Throws ParseError naming `source` and the offending line.
std::vector<double> parse_series(std::string_view text, const std::string& source);
std::vector<double> read_series_file(const std::filesystem::path& path);
void write_series(std::ostream& out, std::span<const double> values);

std::string spectrum_to_text(const Spectrum& spectrum);
Spectrum parse_spectrum(std::string_view text, const std::string& source);
Spectrum read_spectrum_file(const std::filesystem::path& path);

/// Two-column CSV `f_hz,c` with a header line.
void write_plotdata(std::ostream& out, const Spectrum& spectrum);

/// Reconstruction error plus the deterministic part of the solve report
/// (timings are left out so the document is reproducible).
std::string report_to_text(const ReconstructionReport& reconstruction, const SolveReport& solve);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);
/// Writes a whole file; throws Error on I/O failure.
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace swm::io
