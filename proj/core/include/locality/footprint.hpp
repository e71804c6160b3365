#pragma once

#include <span>
#include <vector>

#include "locality/histogram.hpp"

namespace locality {

/// Exact footprint of a finite trace.
///
/// totals[x] is the total working-set size W(x) summed over all n - x + 1
/// windows of length x, so fp(x) = W(x) / (n - x + 1) is an exact rational.
/// x = 0 uses n + 1 empty windows and W(0) = 0. A curve may be a prefix
/// (x in [0, max_window()]) when produced by the incremental formula.
struct FootprintCurve {
  Time n = 0;
  Time m = 0;
  std::vector<Time> totals;

  Time max_window() const { return static_cast<Time>(totals.size()) - 1; }
  Time window_count(Time x) const { return n - x + 1; }
  Time total(Time x) const { return totals.at(static_cast<std::size_t>(x)); }
  Rational fp(Time x) const;
  std::vector<Rational> values() const;

  friend bool operator==(const FootprintCurve&, const FootprintCurve&) = default;
};

/// Working-set size: distinct data in accesses end-len+1 .. end.
/// Throws std::out_of_range unless 0 <= len <= end <= n (len = 0 is allowed
/// for any 0 <= end <= n).
Time wss(const Trace& t, Time end, Time len);

/// Ground truth by window enumeration; O(n^2).
FootprintCurve fp_bruteforce(const Trace& t);

/// Absence counting (subtractive formula). `rev_lasts` use the reverse
/// convention n + 1 - l_e.
FootprintCurve fp_xiang(const ReuseHistogram& rt, std::span<const Time> firsts,
                        std::span<const Time> rev_lasts);

/// First-appearance counting (additive formula) with forward last times.
FootprintCurve fp_additive(const ReuseHistogram& rt, std::span<const Time> firsts,
                           std::span<const Time> fwd_lasts);

/// Incremental formula for x in [0, w_max]. Reads only reuse times below
/// w_max; runs in O(w_max + m) after an O(m) bucketing of first/last times.
FootprintCurve fp_incremental(const ReuseHistogram& rt, std::span<const Time> firsts,
                              std::span<const Time> fwd_lasts, Time w_max);

/// Convenience wrappers that measure the inputs from `t`.
FootprintCurve fp_xiang(const Trace& t);
FootprintCurve fp_additive(const Trace& t);
FootprintCurve fp_incremental(const Trace& t, Time w_max);

struct HeadTail {
  Time lhead = 0;
  Time ltail = 0;
  friend bool operator==(const HeadTail&, const HeadTail&) = default;
};

/// Boundary corrections for the incremental identity
///   (n-w+1) fp(w) = (n-w+1) w - sum_{i<w} (w-i) rt(i) + lhead + ltail.
/// lhead walks the head ai(1..w-1), ltail the tail ai(n-w+2..n), each with
/// its own last-access table.
HeadTail head_tail_adjust(const Trace& t, Time w);

/// Recovers the reuse-time histogram from the footprint and first/last
/// access times via second differences of W. Throws ValidationError if a
/// recovered count is negative or the curve is not a full curve.
ReuseHistogram recover_rt_from_fp(const FootprintCurve& c, std::span<const Time> firsts,
                                  std::span<const Time> fwd_lasts);

}  // namespace locality
