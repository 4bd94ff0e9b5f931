#include "swm/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "swm/error.hpp"

namespace swm::io {
namespace {

using nlohmann::json;

constexpr std::string_view kFormatTag = "swt-spectrum";
constexpr int kFormatVersion = 1;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <class T>
T require(const json& doc, const char* key, const std::string& source) {
  const auto it = doc.find(key);
  if (it == doc.end()) {
    throw ParseError(source, 0, std::string("missing field \"") + key + "\"");
  }
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw ParseError(source, 0, std::string("field \"") + key + "\" has the wrong type");
  }
}

double require_number(const json& doc, const char* key, const std::string& source) {
  const auto it = doc.find(key);
  if (it == doc.end() || !it->is_number()) {
    throw ParseError(source, 0, std::string("missing numeric field \"") + key + "\"");
  }
  return it->get<double>();
}

}  // namespace

std::string format_number(double value) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) {
    throw Error("cannot format number");
  }
  return std::string(buf.data(), end);
}

std::string display_dyad(const Dyad& dyad) {
  std::array<char, 96> buf{};
  std::snprintf(buf.data(), buf.size(), "(%.6f; %.6f)", dyad.frequency, dyad.coefficient);
  return buf.data();
}

std::vector<double> parse_series(std::string_view text, const std::string& source) {
  std::vector<double> values;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    std::string_view token = trim(raw);
    if (token.empty()) {
      continue;
    }
    if (!seen_content) {
      seen_content = true;
      if (token == "value") {
        continue;
      }
    }
    if (token.front() == '+') {
      token.remove_prefix(1);
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec == std::errc::result_out_of_range) {
      throw ParseError(source, line_no, "value out of range: \"" + std::string(trim(raw)) + "\"");
    }
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError(source, line_no, "not a decimal number: \"" + std::string(trim(raw)) + "\"");
    }
    if (!std::isfinite(v)) {
      throw ParseError(source, line_no, "non-finite value: \"" + std::string(trim(raw)) + "\"");
    }
    values.push_back(v);
  }
  if (values.empty()) {
    throw ParseError(source, 0, "no values");
  }
  return values;
}

std::vector<double> read_series_file(const std::filesystem::path& path) {
  return parse_series(read_text_file(path), path.string());
}

void write_series(std::ostream& out, std::span<const double> values) {
  for (double v : values) out << format_number(v == 0.0 ? 0.0 : v) << '\n';
}

std::string spectrum_to_text(const Spectrum& spectrum) {
  json dyads = json::array();
  for (const Dyad& d : spectrum.dyads()) {
    json rec = json::object();
    rec["i"] = d.index;
    rec["f_hz"] = d.frequency;
    rec["c"] = d.coefficient;
    rec["display"] = display_dyad(d);
    dyads.push_back(std::move(rec));
  }
  json doc = json::object();
  doc["format"] = kFormatTag;
  doc["version"] = kFormatVersion;
  doc["n"] = spectrum.grid().n();
  doc["delta_t_s"] = spectrum.grid().delta_t();
  doc["f_s_hz"] = spectrum.grid().f_s();
  doc["unit"] = spectrum.unit();
  doc["dyads"] = std::move(dyads);
  return doc.dump(2) + "\n";
}

Spectrum parse_spectrum(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(source, 0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError(source, 0, "spectrum document must be a JSON object");
  }
  if (const auto it = doc.find("format"); it != doc.end() && *it != kFormatTag) {
    throw ParseError(source, 0, "unexpected format tag");
  }
  if (const auto it = doc.find("version"); it != doc.end() && *it != kFormatVersion) {
    throw ParseError(source, 0, "unsupported spectrum version");
  }
  const auto n = require<std::int64_t>(doc, "n", source);
  if (n < 1) {
    throw ParseError(source, 0, "n must be >= 1");
  }
  const double delta_t = require_number(doc, "delta_t_s", source);
  const double f_s = require_number(doc, "f_s_hz", source);
  std::string unit;
  if (const auto it = doc.find("unit"); it != doc.end()) {
    if (!it->is_string()) throw ParseError(source, 0, "field \"unit\" must be a string");
    unit = it->get<std::string>();
  }
  const auto it = doc.find("dyads");
  if (it == doc.end() || !it->is_array()) {
    throw ParseError(source, 0, "missing array \"dyads\"");
  }
  std::vector<Dyad> dyads;
  dyads.reserve(it->size());
  for (const json& rec : *it) {
    if (!rec.is_object()) {
      throw ParseError(source, 0, "dyad records must be objects");
    }
    const auto i = require<std::int64_t>(rec, "i", source);
    if (i < 1) {
      throw ParseError(source, 0, "dyad index must be >= 1");
    }
    dyads.push_back(Dyad{static_cast<std::size_t>(i), require_number(rec, "f_hz", source),
                         require_number(rec, "c", source)});
  }
  try {
    return Spectrum(GridSpec(static_cast<std::size_t>(n), delta_t, f_s), std::move(dyads),
                    std::move(unit));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(source, 0, e.what());
  }
}

Spectrum read_spectrum_file(const std::filesystem::path& path) {
  return parse_spectrum(read_text_file(path), path.string());
}

void write_plotdata(std::ostream& out, const Spectrum& spectrum) {
  out << "f_hz,c\n";
  for (const Dyad& d : spectrum.dyads()) {
    out << format_number(d.frequency) << ',' << format_number(d.coefficient) << '\n';
  }
}

std::string report_to_text(const ReconstructionReport& reconstruction, const SolveReport& solve) {
  json doc = json::object();
  doc["max_abs_error"] = reconstruction.max_abs_error;
  doc["index_of_max"] = reconstruction.index_of_max;
  doc["rms_error"] = reconstruction.rms_error;
  doc["min_pivot"] = solve.min_pivot;
  doc["residual_inf_norm"] = solve.residual_inf_norm;
  doc["refinement_steps_used"] = solve.refinement_steps_used;
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError(path.string(), 0, "cannot open file");
  }
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error("cannot open " + path.string() + " for writing");
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw Error("failed writing " + path.string());
  }
}

}  // namespace swm::io
