#pragma once

#include <map>
#include <string>
#include <vector>

#include "locality/reuse.hpp"

namespace locality {

/// Exact reuse histogram. Infinite reuses (first accesses) live in their own
/// bucket and never merge with finite values. `n` and `m` describe the
/// originating trace so probabilities need no side channel.
struct ReuseHistogram {
  ReuseKind kind = ReuseKind::Time;
  std::map<Time, Time> counts;
  Time infinite_count = 0;
  Time n = 0;
  Time m = 0;

  Time count(Time value) const;
  Time finite_total() const;
  /// Sum of value * count over finite entries.
  Time weighted_sum() const;
  Time max_value() const;

  friend bool operator==(const ReuseHistogram&, const ReuseHistogram&) = default;
};

ReuseHistogram build_histogram(const ReuseSequence& seq);

/// Convenience: histogram of every per-datum profile, keyed by datum - 1.
/// Each per-datum histogram has n = n_e and m = 1.
std::vector<ReuseHistogram> per_datum_histograms(const PerDatumProfiles& pd);

/// P(x <= y) = sum_{i <= y} h(i) / n.
Rational probability_at_most(const ReuseHistogram& h, Time y);

/// P(x > y). With Include, infinite reuses are in the tail, so this is
/// 1 - P(x <= y); with Exclude only finite values above y count.
Rational probability_above(const ReuseHistogram& h, Time y, ColdPolicy cold);

struct Bin {
  Time lo = 0;
  Time hi = 0;
  Time count = 0;
  friend bool operator==(const Bin&, const Bin&) = default;
};

/// Log-linear histogram: power-of-two ranges [1], [2], [3,4], [5,8], ...
/// each split evenly into at most `subbins` sub-ranges.
struct BinnedHistogram {
  ReuseKind kind = ReuseKind::Time;
  Time subbins = 256;
  std::vector<Bin> bins;
  Time infinite_count = 0;

  Time total() const;
  /// Index of the bin holding `value`, or bins.size() when out of range.
  std::size_t find(Time value) const;
};

BinnedHistogram bin_log_linear(const ReuseHistogram& h, Time subbins = 256);

// -- reuse-time histogram invariants ---------------------------------------

enum class CheckStatus { Pass, Fail, NotApplicable };

struct InvariantCheck {
  std::string name;
  Time lhs = 0;
  Time rhs = 0;
  CheckStatus status = CheckStatus::Pass;
};

struct InvariantReport {
  std::vector<InvariantCheck> checks;
  bool ok() const;  // no Fail entries
};

/// True iff every datum is first accessed within the first m accesses and
/// last accessed within the last m.
bool is_sealed(const Trace& t);

/// Checks, with both sides reported:
///   finite reuse count:   sum rt(i)     == n - m
///   total reuse time:     sum i * rt(i) == sum_e (l_e - f_e)
///   sealed average:       sum i * rt(i) == m (n - m)   (sealed traces only)
InvariantReport check_rt_invariants(const Trace& t);

/// Composes reuse-time histograms of k traces under k-way uniform
/// round-robin interleaving: each finite value r maps to scale * r.
/// Throws std::invalid_argument on any distance-kind input.
ReuseHistogram sum_histograms(std::span<const ReuseHistogram> hs, Time scale);

}  // namespace locality
