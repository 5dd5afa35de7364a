#pragma once

namespace ftw {

// Every downstream check is exponential in the carrier size, so carriers are
// capped at construction and frame enumeration is bounded. Both knobs are
// configurable per call site; exceeding one is a refused-input error, never
// silent truncation.
struct Limits {
  unsigned max_base = 16;
  unsigned max_frame = 4096;
};

}  // namespace ftw
