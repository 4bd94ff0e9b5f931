#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(std::string what_index, std::size_t index, std::size_t n)
      : Error(what_index + " " + std::to_string(index) + " outside [1.." +
              std::to_string(n) + "]"),
        index_(index),
        n_(n) {}

  std::size_t index() const noexcept { return index_; }
  std::size_t n() const noexcept { return n_; }

 private:
  std::size_t index_;
  std::size_t n_;
};

/// Sampling metadata that does not satisfy n = f_s * delta_t, or is not
/// strictly positive.
class InvalidGrid : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::string context, std::size_t expected, std::size_t actual)
      : Error(context + ": expected length " + std::to_string(expected) +
              ", got " + std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

/// A pivot fell below the solver's tolerance. The pivot index is 1-based.
class SingularSystem : public Error {
 public:
  SingularSystem(std::size_t pivot_index, double pivot_magnitude, double tolerance)
      : Error("singular system: pivot " + std::to_string(pivot_index) +
              " has magnitude " + std::to_string(pivot_magnitude) +
              " below tolerance " + std::to_string(tolerance)),
        pivot_index_(pivot_index),
        pivot_magnitude_(pivot_magnitude) {}

  std::size_t pivot_index() const noexcept { return pivot_index_; }
  double pivot_magnitude() const noexcept { return pivot_magnitude_; }

 private:
  std::size_t pivot_index_;
  double pivot_magnitude_;
};

/// The dense factorization would exceed the configured size cap.
class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t n, std::size_t cap)
      : Error("n = " + std::to_string(n) + " exceeds dense cap " +
              std::to_string(cap)),
        n_(n),
        cap_(cap) {}

  std::size_t n() const noexcept { return n_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t n_;
  std::size_t cap_;
};

/// Malformed input file. line() is 1-based, 0 when the error is not tied to
/// a particular line.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& message)
      : Error(source + (line > 0 ? ":" + std::to_string(line) : std::string()) +
              ": " + message),
        source_(source),
        line_(line) {}

  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

}  // namespace swm
