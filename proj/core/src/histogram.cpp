#include "locality/histogram.hpp"

#include <algorithm>
#include <numeric>

namespace locality {

Time ReuseHistogram::count(Time value) const {
  auto it = counts.find(value);
  return it == counts.end() ? 0 : it->second;
}

Time ReuseHistogram::finite_total() const {
  Time s = 0;
  for (const auto& [v, c] : counts) s += c;
  return s;
}

Time ReuseHistogram::weighted_sum() const {
  Time s = 0;
  for (const auto& [v, c] : counts) s += v * c;
  return s;
}

Time ReuseHistogram::max_value() const { return counts.empty() ? 0 : counts.rbegin()->first; }

ReuseHistogram build_histogram(const ReuseSequence& seq) {
  ReuseHistogram h;
  h.kind = seq.kind;
  h.n = seq.size();
  for (auto v : seq.values) {
    if (v.is_infinite()) ++h.infinite_count;
    else ++h.counts[v.value()];
  }
  h.m = h.infinite_count;
  return h;
}

std::vector<ReuseHistogram> per_datum_histograms(const PerDatumProfiles& pd) {
  std::vector<ReuseHistogram> out;
  out.reserve(pd.profiles.size());
  for (const auto& p : pd.profiles) {
    ReuseSequence seq{pd.kind, {ReuseValue::infinite()}};
    for (auto r : p.reuses) seq.values.push_back(ReuseValue::finite(r));
    out.push_back(build_histogram(seq));
  }
  return out;
}

Rational probability_at_most(const ReuseHistogram& h, Time y) {
  if (h.n == 0) return Rational{0};
  Time s = 0;
  for (auto it = h.counts.begin(); it != h.counts.end() && it->first <= y; ++it) s += it->second;
  return Rational{s, h.n};
}

Rational probability_above(const ReuseHistogram& h, Time y, ColdPolicy cold) {
  if (h.n == 0) return Rational{0};
  Time s = cold == ColdPolicy::Include ? h.infinite_count : 0;
  for (auto it = h.counts.upper_bound(y); it != h.counts.end(); ++it) s += it->second;
  return Rational{s, h.n};
}

Time BinnedHistogram::total() const {
  return std::accumulate(bins.begin(), bins.end(), infinite_count,
                         [](Time acc, const Bin& b) { return acc + b.count; });
}

std::size_t BinnedHistogram::find(Time value) const {
  auto it = std::upper_bound(bins.begin(), bins.end(), value,
                             [](Time v, const Bin& b) { return v < b.lo; });
  if (it == bins.begin()) return bins.size();
  --it;
  return value <= it->hi ? static_cast<std::size_t>(it - bins.begin()) : bins.size();
}

BinnedHistogram bin_log_linear(const ReuseHistogram& h, Time subbins) {
  if (subbins < 1) throw std::invalid_argument("bin_log_linear: subbins must be >= 1");
  BinnedHistogram b;
  b.kind = h.kind;
  b.subbins = subbins;
  b.infinite_count = h.infinite_count;
  const Time top = h.max_value();
  if (top == 0) return b;

  // Group 0 is [1, 1]; group k >= 1 is [2^(k-1) + 1, 2^k].
  Time lo = 1, hi = 1;
  while (true) {
    const Time width = hi - lo + 1;
    const Time parts = std::min(subbins, width);
    for (Time j = 0; j < parts; ++j) {
      const Time a = lo + j * width / parts;
      const Time z = lo + (j + 1) * width / parts - 1;
      b.bins.push_back({a, z, 0});
    }
    if (hi >= top) break;
    lo = hi + 1;
    hi *= 2;
  }
  for (const auto& [v, c] : h.counts) b.bins[b.find(v)].count += c;
  return b;
}

bool InvariantReport::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const InvariantCheck& c) { return c.status == CheckStatus::Fail; });
}

bool is_sealed(const Trace& t) {
  const Time n = t.size();
  const auto m = static_cast<Time>(t.distinct());
  for (DataId e = 1; e <= t.distinct(); ++e)
    if (t.first_access(e) > m || t.last_access(e) < n - m + 1) return false;
  return true;
}

InvariantReport check_rt_invariants(const Trace& t) {
  const ReuseHistogram h = build_histogram(reuse_time_sequence(t));
  const Time n = t.size();
  const auto m = static_cast<Time>(t.distinct());
  auto status = [](bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; };

  InvariantReport r;
  const Time reuses = h.finite_total();
  r.checks.push_back({"finite reuse count = n - m", reuses, n - m, status(reuses == n - m)});

  Time span = 0;
  for (DataId e = 1; e <= t.distinct(); ++e) span += t.last_access(e) - t.first_access(e);
  const Time total = h.weighted_sum();
  r.checks.push_back({"total reuse time = sum(l_e - f_e)", total, span, status(total == span)});

  const bool sealed = is_sealed(t);
  r.checks.push_back({"sealed total reuse time = m(n - m)", total, m * (n - m),
                      sealed ? status(total == m * (n - m)) : CheckStatus::NotApplicable});
  return r;
}

ReuseHistogram sum_histograms(std::span<const ReuseHistogram> hs, Time scale) {
  if (scale < 1) throw std::invalid_argument("sum_histograms: scale must be >= 1");
  ReuseHistogram out;
  out.kind = ReuseKind::Time;
  for (const auto& h : hs) {
    if (h.kind != ReuseKind::Time)
      throw std::invalid_argument("sum_histograms: reuse distance histograms do not compose");
    for (const auto& [v, c] : h.counts) out.counts[v * scale] += c;
    out.infinite_count += h.infinite_count;
    out.n += h.n;
    out.m += h.m;
  }
  return out;
}

}  // namespace locality
