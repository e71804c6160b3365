#pragma once

#include <vector>

#include "locality/footprint.hpp"
#include "locality/steady_state.hpp"

namespace locality {

enum class Provenance { FpDiff, RtConversion, Simulator };
const char* to_string(Provenance p);

struct MrcPoint {
  Rational cache_size;
  Rational miss_ratio;
  /// Bounds on the miss ratio of sizes between this knot and the next.
  /// For footprint differentiation these are the neighbouring derivatives
  /// [s'(x+1), s'(x)]; other constructions report [miss_ratio, miss_ratio].
  Rational bracket_low;
  Rational bracket_high;
};

/// Miss ratio of a fully associative LRU cache as a function of size.
/// Construction enforces strictly increasing sizes and miss ratios that are
/// non-increasing and within [0, 1]; violations throw ValidationError.
class MissRatioCurve {
 public:
  MissRatioCurve() = default;
  MissRatioCurve(Provenance provenance, std::vector<MrcPoint> points);

  Provenance provenance() const { return provenance_; }
  const std::vector<MrcPoint>& points() const { return points_; }
  bool empty() const { return points_.empty(); }

  /// Miss ratio of the knot whose cache size is closest to `size`; ties go
  /// to the smaller knot. Throws std::out_of_range on an empty curve.
  Rational at(Rational size) const;
  const MrcPoint& nearest(Rational size) const;

 private:
  Provenance provenance_ = Provenance::Simulator;
  std::vector<MrcPoint> points_;
};

/// Footprint differentiation: knots (s(x), s(x+1) - s(x)) up to the first
/// zero increment. Throws ValidationError naming x if `ss` is not concave.
MissRatioCurve mrc_fp_diff(const SteadyStateCurve& ss);

/// Inverse of the footprint: smallest window length whose footprint reaches
/// `size`, linearly interpolated between integer lengths. Throws
/// std::domain_error when size >= m or size < 0.
Rational fill_time(const FootprintCurve& fp, Rational size);
Rational fill_time(const SteadyStateCurve& ss, Rational size);

/// mr(c) = P(rt > ft(c)) with cold misses counted, for integer c in [0, m].
/// Sizes at or above m have no finite fill time; only cold misses remain.
MissRatioCurve mrc_reuse_time_conversion(const ReuseHistogram& rt, const FootprintCurve& fp);
MissRatioCurve mrc_reuse_time_conversion(const ReuseHistogram& rt, const SteadyStateCurve& ss);

/// 1 / mr(size); infinite when the miss ratio is zero.
ExtendedTime inter_miss(const MissRatioCurve& mrc, Rational size);

/// size / mr(size) (Little's law); 0 at size 0, infinite when mr = 0.
ExtendedTime residence_time(const MissRatioCurve& mrc, Rational size);

/// Fill time estimated as sum_{i < size} 1 / mr(i).
ExtendedTime easton_fagin_fill_time(const MissRatioCurve& mrc, Time size);

/// Time-window miss ratio m(x) = P(rt > x).
Rational time_window_miss_ratio(const ReuseHistogram& rt, Time x, ColdPolicy cold);

/// Probability a given datum appears in a window of length w, expressed
/// through the footprint: s(w) / (m - 1). Requires m >= 2.
Rational shen_probability(const SteadyStateCurve& ss, Time m, Time w);

/// Estimated average reuse distance ES(r) = sum_{j=1}^{r} P(rt > j).
Rational statcache_es(const ReuseHistogram& rt, Time r, ColdPolicy cold);

/// Result of one pass of Mattson's LRU stack algorithm.
struct LruSimulation {
  Time n = 0;
  Time m = 0;
  /// misses[c] for c in [0, m]; a reference misses at size c iff its stack
  /// distance exceeds c.
  std::vector<Time> misses;
  /// Time of the c-th miss in an empty infinite cache, c in [1, m]
  /// (index 0 holds 0).
  std::vector<Time> cold_fill_times;

  MissRatioCurve total_curve() const;
  /// Capacity misses only (cold misses removed from the numerator).
  MissRatioCurve capacity_curve() const;
};

LruSimulation lru_simulate_detailed(const Trace& t);
MissRatioCurve lru_simulate(const Trace& t);

}  // namespace locality
