#pragma once

#include <stdexcept>
#include <string>

#include "qstar/gfun.hpp"

namespace qstar {

struct SpecParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses the JSON spec document:
///   {"matrix":  {"preamble": [[q0,q1,q2], ...], "period": [[q0,q1,q2], ...]},
///    "epsilon": {"preamble": [e, ...],          "period": [e, ...]}}
/// where every scalar is either an integer literal or a string "p/q".
/// Re-validates all invariants and reports the offending field on failure.
FunctionSpec parse_spec_file(const std::string& text);

/// Inverse of parse_spec_file; round-trips exactly.
std::string serialize_spec(const FunctionSpec& f);

}  // namespace qstar
