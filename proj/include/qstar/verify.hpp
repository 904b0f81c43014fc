#pragma once

#include <cstdint>
#include <iosfwd>

#include "qstar/gfun.hpp"

namespace qstar {

struct VerifyOptions {
  std::size_t rank = 6;        // word length budget for exhaustive sweeps
  std::uint64_t seed = 0x51a3; // randomized probes stay reproducible
};

/// Runs every module invariant against the given spec, one report line per
/// check; returns false iff anything failed.
bool run_verification(const FunctionSpec& f, const VerifyOptions& opt, std::ostream& os);

}  // namespace qstar
