#pragma once

#include "locality/reuse.hpp"

namespace locality {

// Trace reconstruction from reuse metrics. Every function throws
// ValidationError carrying the earliest inconsistent access time.

/// Rebuilds the AI trace from a reuse-time sequence: a finite value v at
/// position i repeats the datum at i - v.
Trace ai_from_rt(const ReuseSequence& seq);

/// Drives an LRU stack with the reuse distances; the trace is the sequence
/// of data that reach the top of the stack.
Trace ai_from_rd(const ReuseSequence& seq);

/// Fills each position from first-access times and per-datum reuse times.
Trace ai_from_pd_rt(const PerDatumProfiles& profiles);

/// Rebuilds the AI trace from per-datum reuse distances plus first-access
/// times. At each time, among data whose estimated next access is due, the
/// one with the most recent last access wins.
Trace ai_from_pd_rd(const PerDatumProfiles& profiles);

namespace detail {

enum class CandidateOrder { MostRecent, LeastRecent };

/// ai_from_pd_rd with a selectable tie-break. LeastRecent exists only to
/// show that the recency rule is load-bearing.
Trace ai_from_pd_rd(const PerDatumProfiles& profiles, CandidateOrder order);

}  // namespace detail

}  // namespace locality
