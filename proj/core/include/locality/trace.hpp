#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "locality/types.hpp"

namespace locality {

/// An address-independent (AI) access trace.
///
/// Construction always renames data to 1..m in first-appearance order, so
/// two traces compare equal iff they have the same AI form. Per-datum stats
/// are computed once; every access time reported here is 1-based.
class Trace {
 public:
  Trace() = default;

  /// Normalizes arbitrary identifiers. Already-normalized input is unchanged.
  explicit Trace(std::span<const std::uint64_t> raw_ids);
  explicit Trace(std::vector<DataId> ids);
  Trace(std::initializer_list<DataId> ids);

  Time size() const { return static_cast<Time>(accesses_.size()); }
  std::size_t distinct() const { return first_.size(); }
  bool empty() const { return accesses_.empty(); }

  std::span<const DataId> accesses() const { return accesses_; }
  /// Datum at access time `t` in [1, n].
  DataId at(Time t) const { return accesses_[static_cast<std::size_t>(t - 1)]; }

  /// First access time f_e of datum e (1-based datum id).
  Time first_access(DataId e) const { return first_[e - 1]; }
  /// Forward last access time l_e.
  Time last_access(DataId e) const { return last_[e - 1]; }
  /// Reverse last access time n + 1 - l_e: the first access time in the
  /// reversed trace.
  Time reverse_last_access(DataId e) const { return size() + 1 - last_[e - 1]; }
  Time access_count(DataId e) const { return count_[e - 1]; }

  /// f_e for e = 1..m, indexed by datum - 1.
  std::span<const Time> first_accesses() const { return first_; }
  std::span<const Time> last_accesses() const { return last_; }
  std::vector<Time> reverse_last_accesses() const;

  /// Average accesses per datum, n/m. Zero for the empty trace.
  Rational hotness() const;

  friend bool operator==(const Trace& a, const Trace& b) {
    return a.accesses_ == b.accesses_;
  }

 private:
  void normalize_and_index(std::vector<DataId> ids);

  std::vector<DataId> accesses_;
  std::vector<Time> first_;
  std::vector<Time> last_;
  std::vector<Time> count_;
};

std::ostream& operator<<(std::ostream& os, const Trace& t);

/// Parses the text trace format: one token per line, blank lines and lines
/// starting with '#' ignored. Tokens are interned in first-appearance order.
/// A line holding more than one token raises ParseError.
Trace parse_trace(std::string_view text);

/// Writes one datum id per line.
std::string format_trace(const Trace& t);

/// Uniform round-robin interleaving. Data namespaces are kept disjoint;
/// exhausted inputs drop out of the rotation.
Trace interleave(std::span<const Trace> traces);

enum class Pattern { Cyclic, Sawtooth, Fused };

/// Frequency-locality trace families over m data:
///   cyclic   1..m repeated `reps` times
///   sawtooth 1..m, m..1, 1..m, ... for `reps` sweeps pairs
///   fused    each datum `reps` consecutive times
Trace generate(Pattern pattern, std::size_t m, std::size_t reps);

Pattern parse_pattern(std::string_view name);

}  // namespace locality
