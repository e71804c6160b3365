#include "locality/steady_state.hpp"

#include <stdexcept>

namespace locality {

ReuseDistribution ReuseDistribution::from_histogram(const ReuseHistogram& h) {
  if (h.kind != ReuseKind::Time)
    throw std::invalid_argument("ReuseDistribution: needs a reuse-time histogram");
  ReuseDistribution d;
  d.m = h.m;
  if (h.n == 0) return d;
  for (const auto& [v, c] : h.counts) d.finite.emplace(v, Rational{c, h.n});
  d.infinite = Rational{h.infinite_count, h.n};
  return d;
}

ReuseDistribution ReuseDistribution::periodic(Time period) {
  if (period < 1) throw std::invalid_argument("ReuseDistribution: period must be >= 1");
  ReuseDistribution d;
  d.m = period;
  d.finite.emplace(period, Rational{1});
  return d;
}

ReuseDistribution ReuseDistribution::repeated(const Trace& t) {
  ReuseDistribution d;
  d.m = static_cast<Time>(t.distinct());
  if (t.empty()) return d;
  std::map<Time, Time> counts = build_histogram(reuse_time_sequence(t)).counts;
  for (DataId e = 1; e <= t.distinct(); ++e)
    ++counts[t.size() - t.last_access(e) + t.first_access(e)];
  for (const auto& [v, c] : counts) d.finite.emplace(v, Rational{c, t.size()});
  return d;
}

Rational ReuseDistribution::tail(Time x, ColdPolicy cold) const {
  Rational p = cold == ColdPolicy::Include ? infinite : Rational{0};
  for (auto it = finite.upper_bound(x); it != finite.end(); ++it) p += it->second;
  return p;
}

Time ReuseDistribution::max_finite() const { return finite.empty() ? 0 : finite.rbegin()->first; }

Time default_horizon(const ReuseDistribution& d) { return d.max_finite() + 1; }

SteadyStateCurve ss_fp_ds(const ReuseDistribution& d, ColdPolicy cold, Time horizon) {
  if (horizon < 0) throw std::invalid_argument("ss_fp_ds: negative horizon");
  SteadyStateCurve c{d.m, cold, {}};
  c.values.reserve(static_cast<std::size_t>(horizon) + 1);
  // Tail probabilities swept from the top: tail(x) = tail(x+1) + P(rt = x+1).
  std::vector<Rational> tail(static_cast<std::size_t>(horizon) + 1, Rational{0});
  Rational running = cold == ColdPolicy::Include ? d.infinite : Rational{0};
  for (auto it = d.finite.upper_bound(horizon); it != d.finite.end(); ++it) running += it->second;
  for (Time x = horizon; x >= 0; --x) {
    tail[static_cast<std::size_t>(x)] = running;
    auto it = d.finite.find(x);
    if (it != d.finite.end()) running += it->second;
  }
  Rational s{0};
  c.values.push_back(s);
  for (Time x = 0; x < horizon; ++x) {
    s += tail[static_cast<std::size_t>(x)];
    c.values.push_back(s);
  }
  return c;
}

SteadyStateCurve ss_fp_ds(const ReuseHistogram& h, ColdPolicy cold) {
  return ss_fp_ds(ReuseDistribution::from_histogram(h), cold, h.n);
}

SteadyStateCurve ss_fp_subtractive(const ReuseDistribution& d, Time horizon) {
  if (horizon < 0) throw std::invalid_argument("ss_fp_subtractive: negative horizon");
  SteadyStateCurve c{d.m, ColdPolicy::Exclude, {}};
  c.values.reserve(static_cast<std::size_t>(horizon) + 1);
  // sum_{i>x} (i - x) P(i) = sum_{i>x} i P(i) - x sum_{i>x} P(i), with both
  // suffix sums maintained while x walks up through the sorted keys.
  Rational mass{0}, moment{0};
  for (const auto& [i, p] : d.finite) {
    mass += p;
    moment += Rational{i} * p;
  }
  auto next = d.finite.begin();
  for (Time x = 0; x <= horizon; ++x) {
    while (next != d.finite.end() && next->first <= x) {
      mass -= next->second;
      moment -= Rational{next->first} * next->second;
      ++next;
    }
    c.values.push_back(Rational{d.m} - (moment - Rational{x} * mass));
  }
  return c;
}

SteadyStateCurve ss_fp_subtractive(const ReuseHistogram& h) {
  return ss_fp_subtractive(ReuseDistribution::from_histogram(h), h.n);
}

ShapeCheck check_shape(const SteadyStateCurve& c) {
  ShapeCheck r;
  auto flag = [&](bool& field, Time x) {
    field = false;
    if (r.first_violation < 0 || x < r.first_violation) r.first_violation = x;
  };
  const Rational top{c.m};
  for (Time x = 0; x <= c.horizon(); ++x) {
    if (c.at(x) > top) flag(r.bounded, x);
    if (x < c.horizon()) {
      const Rational inc = c.increment(x);
      if (c.at(x) < top ? inc <= Rational{0} : inc != Rational{0}) flag(r.rises_then_flat, x);
      if (x + 1 < c.horizon() && c.increment(x + 1) > inc) flag(r.concave, x + 1);
    }
  }
  return r;
}

}  // namespace locality
