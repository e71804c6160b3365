#include "locality/footprint.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace locality {

namespace {

Time positive_part(Time v) { return v > 0 ? v : 0; }

void require_time_kind(const ReuseHistogram& h, const char* fn) {
  if (h.kind != ReuseKind::Time)
    throw std::invalid_argument(std::string(fn) + ": needs a reuse-time histogram");
}

void require_sizes(const ReuseHistogram& h, std::span<const Time> firsts,
                   std::span<const Time> lasts, const char* fn) {
  if (static_cast<Time>(firsts.size()) != h.m || static_cast<Time>(lasts.size()) != h.m)
    throw std::invalid_argument(std::string(fn) + ": need one first and last time per datum");
}

}  // namespace

Rational FootprintCurve::fp(Time x) const { return Rational{total(x), window_count(x)}; }

std::vector<Rational> FootprintCurve::values() const {
  std::vector<Rational> out;
  out.reserve(totals.size());
  for (Time x = 0; x <= max_window(); ++x) out.push_back(fp(x));
  return out;
}

Time wss(const Trace& t, Time end, Time len) {
  if (len < 0 || end < len || end > t.size())
    throw std::out_of_range("wss: window (end=" + std::to_string(end) +
                            ", len=" + std::to_string(len) + ") outside trace");
  std::vector<bool> seen(t.distinct(), false);
  Time distinct = 0;
  for (Time i = end - len + 1; i <= end; ++i) {
    auto&& s = seen[t.at(i) - 1];
    if (!s) {
      s = true;
      ++distinct;
    }
  }
  return distinct;
}

FootprintCurve fp_bruteforce(const Trace& t) {
  const Time n = t.size();
  FootprintCurve c{n, static_cast<Time>(t.distinct()), std::vector<Time>(n + 1, 0)};
  std::vector<Time> in_window(t.distinct(), 0);
  for (Time x = 1; x <= n; ++x) {
    std::fill(in_window.begin(), in_window.end(), 0);
    Time distinct = 0;
    Time total = 0;
    for (Time i = 1; i <= n; ++i) {
      if (in_window[t.at(i) - 1]++ == 0) ++distinct;
      if (i > x && --in_window[t.at(i - x) - 1] == 0) --distinct;
      if (i >= x) total += distinct;
    }
    c.totals[static_cast<std::size_t>(x)] = total;
  }
  return c;
}

FootprintCurve fp_xiang(const ReuseHistogram& rt, std::span<const Time> firsts,
                        std::span<const Time> rev_lasts) {
  require_time_kind(rt, "fp_xiang");
  require_sizes(rt, firsts, rev_lasts, "fp_xiang");
  const Time n = rt.n, m = rt.m;
  FootprintCurve c{n, m, std::vector<Time>(n + 1, 0)};
  for (Time x = 0; x <= n; ++x) {
    Time absent = 0;
    for (auto it = rt.counts.upper_bound(x); it != rt.counts.end(); ++it)
      absent += (it->first - x) * it->second;
    for (Time f : firsts) absent += positive_part(f - x);
    for (Time l : rev_lasts) absent += positive_part(l - x);
    c.totals[static_cast<std::size_t>(x)] = m * (n - x + 1) - absent;
  }
  return c;
}

FootprintCurve fp_additive(const ReuseHistogram& rt, std::span<const Time> firsts,
                           std::span<const Time> fwd_lasts) {
  require_time_kind(rt, "fp_additive");
  require_sizes(rt, firsts, fwd_lasts, "fp_additive");
  const Time n = rt.n, m = rt.m;
  FootprintCurve c{n, m, std::vector<Time>(n + 1, 0)};
  for (Time w = 0; w <= n; ++w) {
    Time total = w * m;
    for (const auto& [i, count] : rt.counts) total += std::min(i, w) * count;
    for (Time f : firsts) total -= positive_part(w - f);
    for (Time l : fwd_lasts) total -= positive_part(l - (n - w + 1));
    c.totals[static_cast<std::size_t>(w)] = total;
  }
  return c;
}

FootprintCurve fp_incremental(const ReuseHistogram& rt, std::span<const Time> firsts,
                              std::span<const Time> fwd_lasts, Time w_max) {
  require_time_kind(rt, "fp_incremental");
  require_sizes(rt, firsts, fwd_lasts, "fp_incremental");
  const Time n = rt.n, m = rt.m;
  w_max = std::clamp<Time>(w_max, 0, n);
  FootprintCurve c{n, m, std::vector<Time>(static_cast<std::size_t>(w_max) + 1, 0)};
  if (w_max == 0) return c;

  const auto slots = static_cast<std::size_t>(w_max) + 1;
  std::vector<Time> rt_below(slots, 0);  // rt(i) for i < w_max
  for (auto it = rt.counts.begin(); it != rt.counts.end() && it->first < w_max; ++it)
    rt_below[static_cast<std::size_t>(it->first)] = it->second;
  std::vector<Time> first_at(slots, 0);  // #e with f_e = v, v <= w_max
  for (Time f : firsts)
    if (f <= w_max) ++first_at[static_cast<std::size_t>(f)];
  std::vector<Time> last_from_end(slots, 0);  // #e with n - l_e = d, d < w_max
  for (Time l : fwd_lasts)
    if (n - l < w_max) ++last_from_end[static_cast<std::size_t>(n - l)];

  // Running sums for window length w:
  //   rt_count = sum_{i<w} rt(i),  rt_weight = sum_{i<w} i rt(i)
  //   f_count/f_sum over f_e <= w
  //   l_count/l_sum over l_e >= n - w + 1
  Time rt_count = 0, rt_weight = 0;
  Time f_count = 0, f_sum = 0;
  Time l_count = 0, l_sum = 0;
  for (Time w = 1; w <= w_max; ++w) {
    const auto prev = static_cast<std::size_t>(w - 1);
    rt_count += rt_below[prev];
    rt_weight += static_cast<Time>(prev) * rt_below[prev];
    f_count += first_at[static_cast<std::size_t>(w)];
    f_sum += w * first_at[static_cast<std::size_t>(w)];
    l_count += last_from_end[prev];
    l_sum += (n - static_cast<Time>(prev)) * last_from_end[prev];

    const Time boundary = n - w + 1;
    const Time dup = w * rt_count - rt_weight;
    const Time sum_min_f = f_sum + w * (m - f_count);
    const Time sum_max_l = l_sum + boundary * (m - l_count);
    c.totals[static_cast<std::size_t>(w)] =
        (n + 1) * m + (n - 2 * m) * w - dup + sum_min_f - sum_max_l;
  }
  return c;
}

FootprintCurve fp_xiang(const Trace& t) {
  return fp_xiang(build_histogram(reuse_time_sequence(t)), t.first_accesses(),
                  t.reverse_last_accesses());
}

FootprintCurve fp_additive(const Trace& t) {
  return fp_additive(build_histogram(reuse_time_sequence(t)), t.first_accesses(),
                     t.last_accesses());
}

FootprintCurve fp_incremental(const Trace& t, Time w_max) {
  return fp_incremental(build_histogram(reuse_time_sequence(t)), t.first_accesses(),
                        t.last_accesses(), w_max);
}

HeadTail head_tail_adjust(const Trace& t, Time w) {
  const Time n = t.size();
  if (w < 1 || w > n) throw std::out_of_range("head_tail_adjust: need 1 <= w <= n");
  const Time last_start = n - w + 1;  // last window starts here
  HeadTail r;

  // A reuse at t with previous access p is double counted by the body
  // estimate in d(w - (t - p)) windows. Near the boundaries fewer windows
  // hold both accesses; the difference is added back here.
  std::vector<Time> la(t.distinct(), 0);
  for (Time i = 1; i <= w - 1; ++i) {
    Time& p = la[t.at(i) - 1];
    if (p != 0) {
      // Windows starting in [1, min(p, last_start)] hold both accesses.
      r.lhead += (w - i + p) - std::min(p, last_start);
    }
    p = i;
  }

  std::fill(la.begin(), la.end(), 0);
  for (Time i = last_start + 1; i <= n; ++i) {
    Time& p = la[t.at(i) - 1];
    if (p != 0 && i >= w) {
      // Windows starting in [i - w + 1, last_start] hold both accesses.
      r.ltail += (w - i + p) - (n - i + 1);
    }
    p = i;
  }
  return r;
}

ReuseHistogram recover_rt_from_fp(const FootprintCurve& c, std::span<const Time> firsts,
                                  std::span<const Time> fwd_lasts) {
  const Time n = c.n;
  if (c.max_window() != n)
    throw ValidationError(0, "recover_rt_from_fp: needs the footprint at every window length");
  if (static_cast<Time>(firsts.size()) != c.m || static_cast<Time>(fwd_lasts.size()) != c.m)
    throw std::invalid_argument("recover_rt_from_fp: need one first and last time per datum");

  std::vector<Time> first_at(static_cast<std::size_t>(n) + 2, 0);
  std::vector<Time> last_at(static_cast<std::size_t>(n) + 2, 0);
  for (Time f : firsts) ++first_at.at(static_cast<std::size_t>(f));
  for (Time l : fwd_lasts) ++last_at.at(static_cast<std::size_t>(l));

  ReuseHistogram h;
  h.kind = ReuseKind::Time;
  h.n = n;
  h.m = c.m;
  h.infinite_count = c.m;
  for (Time x = 1; x <= n - 1; ++x) {
    const Time second_diff = c.total(x + 1) - 2 * c.total(x) + c.total(x - 1);
    const Time count = -second_diff - first_at[static_cast<std::size_t>(x)] -
                       last_at[static_cast<std::size_t>(n - x + 1)];
    if (count < 0)
      throw ValidationError(x, "recovered reuse-time count is negative (" +
                                   std::to_string(count) + ")");
    if (count > 0) h.counts[x] = count;
  }
  return h;
}

}  // namespace locality
