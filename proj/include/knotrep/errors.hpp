#pragma once

#include <stdexcept>
#include <string>

namespace knotrep {

/// Malformed or out-of-range input: bad parameters, unknown generator names,
/// alphabet mismatches, unparsable files.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical check failed: a relator did not die, a word left a
/// subgroup, a residual exceeded its tolerance.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace knotrep
