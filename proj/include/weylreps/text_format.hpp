#pragma once

// Record-list text formats shared by the C API and the CLI.
//
// A file is a sequence of records, one per line by convention:
//
//   {a: "1/2", b: "-3", re: 0.5403023058681398, im: 0.8414709848078965}
//
// Keys are bare identifiers; values are double-quoted strings or bare
// tokens. Records may be separated by whitespace or commas and the whole
// list may be wrapped in [ ]. '#' starts a comment running to end of line.
// Rationals are written exactly, doubles as shortest round-trip decimals.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "weylreps/almost_periodic.hpp"
#include "weylreps/gns.hpp"
#include "weylreps/position_rep.hpp"
#include "weylreps/states.hpp"
#include "weylreps/weyl_algebra.hpp"

namespace weylreps {

struct RecordField {
  std::string key;
  std::string value;
  bool quoted = false;
  std::size_t line = 0;
  std::size_t column = 0;  // where the value starts
};

struct Record {
  std::vector<RecordField> fields;
  std::size_t line = 0;
  std::size_t column = 0;
};

/// Throws ParseError with 1-based line and column.
std::vector<Record> parse_records(std::string_view text);

/// Shortest round-trip decimal; negative zero prints as "0".
std::string format_double(double value);

WeylElement parse_element(std::string_view text);
std::string serialize_element(const WeylElement& x);

/// Accepts a record ({kind: "position", lambda: "3/2"}) or the short forms
/// "position:3/2", "momentum:1/2", "vacuum".
StateFunctional parse_state(std::string_view text);
std::string serialize_state(const StateFunctional& state);

/// Records {point: "p/q", re, im, flavor: "position"|"momentum"}; all
/// records must agree on flavor. An empty list is a zero position vector.
FiniteSupportVector parse_support_vector(std::string_view text);
std::string serialize_support_vector(const FiniteSupportVector& v);

TrigPolynomial parse_polynomial(std::string_view text);
std::string serialize_polynomial(const TrigPolynomial& f);

/// Records {shift: "p/q", re, im}, one per translation key.
std::string serialize_reduced(const ReducedVector& r);

/// Comma-separated rationals, e.g. "0,1/8,-1/64". Throws InvalidArgument.
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace weylreps
