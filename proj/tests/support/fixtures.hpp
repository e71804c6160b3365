#pragma once

// Counterexample trace pairs showing that reuse histograms do not determine
// each other or the trace.

#include "locality/locality.hpp"

namespace locality::fixtures {

struct TracePair {
  Trace a;
  Trace b;
};

// Equal RT and RD histograms, whole-trace and per datum; different traces.
inline TracePair same_histograms() {
  return {Trace{1, 2, 1, 2, 2, 1}, Trace{1, 2, 2, 1, 2, 1}};
}

// Equal RT histograms, different RD histograms.
inline TracePair same_rt_different_rd() {
  return {Trace{1, 2, 3, 4, 3, 4, 1, 2, 3, 4, 3, 2, 3, 2, 3, 4, 3, 2, 1},
          Trace{1, 2, 3, 4, 3, 2, 1, 2, 3, 4, 3, 2, 3, 4, 3, 4, 3, 2, 1}};
}

// Equal RD histograms, different RT histograms.
inline TracePair same_rd_different_rt() {
  return {Trace{1, 2, 3, 4, 3, 4, 1, 2, 3, 4, 3, 2, 1},
          Trace{1, 2, 3, 4, 3, 4, 2, 1, 3, 4, 3, 2, 1}};
}

}  // namespace locality::fixtures
