#pragma once

// Instance text format and JSON serialization of reports.
//
//   # comment lines start with '#'
//   4          <- point count
//   0 0        <- "x y", each an integer or p/q with q > 0
//   4 0
//   2 3
//   1 1

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "kset/instance.hpp"
#include "kset/verifier.hpp"

namespace kset {

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, BadRational, CountMismatch, GeneralPositionViolation };

  ParseError(Kind kind, int line, const std::string& message);

  Kind kind() const { return kind_; }
  int line() const { return line_; }  // 1-based, 0 when not tied to a line

 private:
  Kind kind_;
  int line_;
};

const char* to_string(ParseError::Kind kind);

/// Integer or "p/q" (q > 0), canonicalized. Throws ParseError with line 0.
Rat parse_rational(std::string_view token);

Instance parse_instance(std::string_view text);

/// Canonical form: count line, then one "x y" line per point, no comments.
std::string write_instance(const Instance& inst);

nlohmann::ordered_json to_json(const Verdict& v);
nlohmann::ordered_json to_json(const Report& r);
nlohmann::ordered_json to_json(const SweepSummary& s);

}  // namespace kset
