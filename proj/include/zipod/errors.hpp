#pragma once

#include <stdexcept>
#include <string>

namespace zipod {

// Every recoverable failure carries one of these codes. The CLI maps
// parse codes to exit status 2 and everything else to 1.
enum class errc {
  bad_base,            // base j outside [2, ...)
  bad_table_length,    // transition table size != j
  not_surjective,      // transition map misses a letter
  digit_out_of_range,  // symbol value outside its alphabet
  empty_tail,          // a point tail with no letters
  base_mismatch,       // operands built over different bases
  equal_points,        // operation requires two distinct points
  overflow,            // enumeration would exceed the configured cap
  bad_window,          // cover index outside the valid range
  bad_argument,        // generic precondition violation (n < 1, ...)
  not_bijective,       // finite map expected to be a bijection is not
  not_minimal,         // finite system expected to be a single cycle is not
  not_minimal_input,   // input set is not an orbit of the required power
  period_mismatch,     // decomposition period t differs from requested n
  malformed_family,    // partition family fails shape validation
  verification_failed, // a verified construction found an inconsistency
  parse,               // malformed textual input
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

// Malformed textual input: point literals, tau text, system files, CLI args.
class parse_failure : public error {
public:
  explicit parse_failure(const std::string& what)
      : error(errc::parse, what) {}
};

[[noreturn]] void fail(errc code, const std::string& what);

}  // namespace zipod
