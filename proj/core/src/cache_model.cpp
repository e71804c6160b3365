#include "locality/cache_model.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace locality {

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::FpDiff: return "fp_diff";
    case Provenance::RtConversion: return "rt_conversion";
    case Provenance::Simulator: return "simulator";
  }
  return "unknown";
}

MissRatioCurve::MissRatioCurve(Provenance provenance, std::vector<MrcPoint> points)
    : provenance_(provenance), points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& p = points_[i];
    if (p.miss_ratio < Rational{0} || p.miss_ratio > Rational{1})
      throw ValidationError(0, "miss ratio " + to_string(p.miss_ratio) + " at cache size " +
                                   to_string(p.cache_size) + " is outside [0, 1]");
    if (i == 0) continue;
    const auto& q = points_[i - 1];
    if (p.cache_size <= q.cache_size)
      throw ValidationError(0, "cache sizes must be strictly increasing at " +
                                   to_string(p.cache_size));
    if (p.miss_ratio > q.miss_ratio)
      throw ValidationError(0, "miss ratio rises from " + to_string(q.miss_ratio) + " to " +
                                   to_string(p.miss_ratio) + " at cache size " +
                                   to_string(p.cache_size));
  }
}

const MrcPoint& MissRatioCurve::nearest(Rational size) const {
  if (points_.empty()) throw std::out_of_range("MissRatioCurve: empty curve");
  auto it = std::lower_bound(points_.begin(), points_.end(), size,
                             [](const MrcPoint& p, const Rational& s) { return p.cache_size < s; });
  if (it == points_.end()) return points_.back();
  if (it == points_.begin() || it->cache_size == size) return *it;
  auto below = std::prev(it);
  return (it->cache_size - size) < (size - below->cache_size) ? *it : *below;
}

Rational MissRatioCurve::at(Rational size) const { return nearest(size).miss_ratio; }

MissRatioCurve mrc_fp_diff(const SteadyStateCurve& ss) {
  const Time h = ss.horizon();
  for (Time x = 0; x + 1 < h; ++x)
    if (ss.increment(x + 1) > ss.increment(x))
      throw ValidationError(x + 1, "steady-state footprint is not concave at x = " +
                                       std::to_string(x + 1));
  std::vector<MrcPoint> points;
  for (Time x = 0; x < h; ++x) {
    const Rational slope = ss.increment(x);
    const Rational next = x + 1 < h ? ss.increment(x + 1) : slope;
    points.push_back({ss.at(x), slope, next, slope});
    if (slope == Rational{0}) break;
  }
  return MissRatioCurve(Provenance::FpDiff, std::move(points));
}

namespace {

Rational invert(std::span<const Rational> values, Time m, Rational size) {
  if (size < Rational{0} || size >= Rational{m})
    throw std::domain_error("fill_time: size " + to_string(size) + " has no finite fill time");
  auto it = std::lower_bound(values.begin(), values.end(), size);
  if (it == values.end())
    throw std::domain_error("fill_time: curve ends before reaching " + to_string(size));
  const auto x = static_cast<Time>(it - values.begin());
  if (x == 0) return Rational{0};
  const Rational lo = values[static_cast<std::size_t>(x - 1)];
  return Rational{x - 1} + (size - lo) / (*it - lo);
}

template <typename Curve>
MissRatioCurve rt_conversion(const ReuseHistogram& rt, const Curve& curve,
                             std::span<const Rational> values) {
  if (rt.kind != ReuseKind::Time)
    throw std::invalid_argument("mrc_reuse_time_conversion: needs a reuse-time histogram");
  std::vector<MrcPoint> points;
  if (rt.n == 0) return MissRatioCurve(Provenance::RtConversion, {});
  const Time m = rt.m;
  bool complete = true;
  for (Time c = 0; c < m; ++c) {
    if (values.empty() || values.back() < Rational{c}) {
      complete = false;
      break;
    }
    const Rational ft = fill_time(curve, Rational{c});
    // rt > ft for an integer rt iff rt > floor(ft).
    const Time floor_ft = ft.numerator() / ft.denominator();
    const Rational mr = probability_above(rt, floor_ft, ColdPolicy::Include);
    points.push_back({Rational{c}, mr, mr, mr});
  }
  if (complete) {
    const Rational cold{rt.infinite_count, rt.n};
    points.push_back({Rational{m}, cold, cold, cold});
  }
  return MissRatioCurve(Provenance::RtConversion, std::move(points));
}

}  // namespace

Rational fill_time(const FootprintCurve& fp, Rational size) {
  const auto values = fp.values();
  return invert(values, fp.m, size);
}

Rational fill_time(const SteadyStateCurve& ss, Rational size) {
  return invert(ss.values, ss.m, size);
}

MissRatioCurve mrc_reuse_time_conversion(const ReuseHistogram& rt, const FootprintCurve& fp) {
  const auto values = fp.values();
  return rt_conversion(rt, fp, values);
}

MissRatioCurve mrc_reuse_time_conversion(const ReuseHistogram& rt, const SteadyStateCurve& ss) {
  return rt_conversion(rt, ss, ss.values);
}

ExtendedTime inter_miss(const MissRatioCurve& mrc, Rational size) {
  const Rational mr = mrc.at(size);
  if (mr == Rational{0}) return ExtendedTime::infinite();
  return ExtendedTime::finite(1 / mr);
}

ExtendedTime residence_time(const MissRatioCurve& mrc, Rational size) {
  if (size == Rational{0}) return ExtendedTime::finite(Rational{0});
  const Rational mr = mrc.at(size);
  if (mr == Rational{0}) return ExtendedTime::infinite();
  return ExtendedTime::finite(size / mr);
}

ExtendedTime easton_fagin_fill_time(const MissRatioCurve& mrc, Time size) {
  Rational total{0};
  for (Time i = 0; i < size; ++i) {
    const Rational mr = mrc.at(Rational{i});
    if (mr == Rational{0}) return ExtendedTime::infinite();
    total += 1 / mr;
  }
  return ExtendedTime::finite(total);
}

Rational time_window_miss_ratio(const ReuseHistogram& rt, Time x, ColdPolicy cold) {
  return probability_above(rt, x, cold);
}

Rational shen_probability(const SteadyStateCurve& ss, Time m, Time w) {
  if (m < 2) throw std::invalid_argument("shen_probability: needs m >= 2");
  const Rational fp = ss.at(w);
  if (fp < Rational{0} || fp > Rational{m})
    throw std::domain_error("shen_probability: footprint " + to_string(fp) +
                            " outside [0, m]");
  return fp / Rational{m - 1};
}

Rational statcache_es(const ReuseHistogram& rt, Time r, ColdPolicy cold) {
  if (r < 0) throw std::invalid_argument("statcache_es: r must be >= 0");
  if (rt.n == 0 || r == 0) return Rational{0};
  // F_j = P(rt > j); sweep j upward, dropping counts as they fall below.
  Time tail = (cold == ColdPolicy::Include ? rt.infinite_count : 0) + rt.finite_total();
  Time sum = 0;
  auto it = rt.counts.begin();
  for (Time j = 1; j <= r; ++j) {
    while (it != rt.counts.end() && it->first <= j) tail -= (it++)->second;
    sum += tail;
  }
  return Rational{sum, rt.n};
}

}  // namespace locality
