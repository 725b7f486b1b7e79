#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace motivekit {

// Stable error codes; the CLI maps each to a machine-readable name.
enum class errc {
  not_divisible,
  cap_exceeded,
  psi_not_stable,
  illegal_twist,
  not_a_torsion_prime,
  unknown_row,
  inadmissible,
  negative_multiplicity,
  illegal_algebra,
  not_excellent_tower,
  parse_error,
  mixed_prime_unsupported,
  invalid_argument,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : Error(errc::parse_error, message), offset_(offset) {}

  // Byte offset into the input string at which parsing failed.
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace motivekit
