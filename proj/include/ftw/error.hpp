#pragma once

#include <stdexcept>
#include <string>

namespace ftw {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text (syntax level), carries a line/column anchor in the message.
struct ParseError : Error {
  using Error::Error;
};

// Well-formed input that references undeclared names or breaks document rules.
struct SemanticError : Error {
  using Error::Error;
};

// A carrier or enumeration exceeds the configured limits. Mapped to its own
// exit code by the CLI: refusing is intentional, not a bug.
struct SizeCapError : Error {
  using Error::Error;
};

// A stated operation precondition does not hold (mismatched spaces,
// not-a-cover, subset outside the base, ...).
struct PreconditionError : Error {
  using Error::Error;
};

}  // namespace ftw
