#pragma once

// Instance files, delimited result rows and the command-line front end.

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "linevote/line_model.hpp"

namespace linevote {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads {"alternatives": [...], "districts": [[...], ...]}. Any other key,
/// a non-numeric entry or malformed text raises ParseError; invariant
/// violations raise InvalidInstance.
Instance parse_instance(std::string_view text);

/// Inverse of parse_instance on canonical instances; shortest round-trip
/// decimal for every coordinate.
std::string serialize_instance(const Instance& inst);

/// At least 12 significant digits and at least 12 decimals; "inf" / "-inf"
/// for infinities.
std::string format_real(double x);

/// Runs one CLI invocation; args excludes the program name. Exit codes:
/// 0 ok, 1 usage or input error, 2 certificate failure, 3 bound violated.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linevote
