#pragma once

#include <vector>

#include "locality/trace.hpp"

namespace locality {

/// A per-access reuse value: a positive integer or infinity (first access).
class ReuseValue {
 public:
  static constexpr ReuseValue infinite() { return ReuseValue{0}; }
  static ReuseValue finite(Time v);

  constexpr bool is_infinite() const { return raw_ == 0; }
  constexpr bool is_finite() const { return raw_ != 0; }
  /// Precondition: is_finite().
  constexpr Time value() const { return raw_; }

  friend constexpr bool operator==(ReuseValue, ReuseValue) = default;

 private:
  explicit constexpr ReuseValue(Time raw) : raw_(raw) {}
  Time raw_;  // 0 encodes infinity
};

std::ostream& operator<<(std::ostream& os, ReuseValue v);

/// One reuse value per access, tagged with its kind.
struct ReuseSequence {
  ReuseKind kind = ReuseKind::Time;
  std::vector<ReuseValue> values;

  Time size() const { return static_cast<Time>(values.size()); }
  std::size_t infinite_count() const;

  friend bool operator==(const ReuseSequence&, const ReuseSequence&) = default;
};

/// Reuse time at access i: i minus the previous access time of the same
/// datum. Single pass, O(m) memory.
ReuseSequence reuse_time_sequence(const Trace& t);

/// Reuse (LRU stack) distance: distinct data accessed since the previous
/// access, counting the reused datum itself. O(n log m) via an order
/// statistics tree over last-access times.
ReuseSequence reuse_distance_sequence(const Trace& t);

/// First access time and the ordered finite reuses (accesses 2..n_e) of one
/// datum.
struct PerDatumProfile {
  DataId datum = 0;
  Time first = 0;
  std::vector<Time> reuses;

  friend bool operator==(const PerDatumProfile&, const PerDatumProfile&) = default;
};

struct PerDatumProfiles {
  ReuseKind kind = ReuseKind::Time;
  /// Indexed by datum - 1.
  std::vector<PerDatumProfile> profiles;

  friend bool operator==(const PerDatumProfiles&, const PerDatumProfiles&) = default;
};

/// Splits a sequence measured from `t` into per-datum sub-sequences.
PerDatumProfiles per_datum(const ReuseSequence& seq, const Trace& t);

}  // namespace locality
