#pragma once

#include <map>
#include <vector>

#include "locality/histogram.hpp"

namespace locality {

/// Reuse-time probability mass: P(rt = i) for finite i plus the infinite
/// mass. Built from a finite histogram (denominator n) or given directly to
/// describe an infinitely long trace, e.g. `abc abc ...` with P(rt = 3) = 1.
struct ReuseDistribution {
  Time m = 0;
  std::map<Time, Rational> finite;
  Rational infinite{0};

  static ReuseDistribution from_histogram(const ReuseHistogram& h);
  /// Limit distribution of cyclic(m, k) as k grows.
  static ReuseDistribution periodic(Time period);
  /// Distribution of `t` repeated forever: every access has a finite reuse,
  /// last accesses wrap around to the next copy with n - l_e + f_e.
  static ReuseDistribution repeated(const Trace& t);

  Rational tail(Time x, ColdPolicy cold) const;  // P(rt > x)
  Time max_finite() const;
};

/// Steady-state footprint values s(x), x in [0, horizon].
struct SteadyStateCurve {
  Time m = 0;
  ColdPolicy cold = ColdPolicy::Exclude;
  std::vector<Rational> values;

  Time horizon() const { return static_cast<Time>(values.size()) - 1; }
  const Rational& at(Time x) const { return values.at(static_cast<std::size_t>(x)); }
  /// s(x+1) - s(x) for x in [0, horizon).
  Rational increment(Time x) const { return at(x + 1) - at(x); }
};

/// Default horizon: n for histograms of finite traces, one past the largest
/// finite reuse for distributions (the curve is flat or linear beyond).
Time default_horizon(const ReuseDistribution& d);

/// Denning-Schwartz recurrence s(0) = 0, s(x+1) = s(x) + P(rt > x).
SteadyStateCurve ss_fp_ds(const ReuseDistribution& d, ColdPolicy cold, Time horizon);
SteadyStateCurve ss_fp_ds(const ReuseHistogram& h, ColdPolicy cold);

/// Subtractive steady-state footprint m - sum_{i>x} (i - x) P(rt = i).
/// Evaluated literally; at x = 0 on a finite trace this is
/// m - sum i P(rt = i), which is 0 only in the infinite limit.
SteadyStateCurve ss_fp_subtractive(const ReuseDistribution& d, Time horizon);
SteadyStateCurve ss_fp_subtractive(const ReuseHistogram& h);

struct ShapeCheck {
  bool bounded = true;          // s(x) <= m
  bool concave = true;          // second differences <= 0
  bool rises_then_flat = true;  // increments > 0 while s < m, 0 once s == m
  Time first_violation = -1;
};

ShapeCheck check_shape(const SteadyStateCurve& c);

}  // namespace locality
