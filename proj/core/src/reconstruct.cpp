#include "locality/reconstruct.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace locality {

namespace {

constexpr Time kNever = std::numeric_limits<Time>::max();

Time total_accesses(const PerDatumProfiles& pd) {
  Time n = 0;
  for (const auto& p : pd.profiles) n += 1 + static_cast<Time>(p.reuses.size());
  return n;
}

void require_kind(const ReuseSequence& seq, ReuseKind kind, const char* fn) {
  if (seq.kind != kind)
    throw std::invalid_argument(std::string(fn) + ": expected a " + to_string(kind) + " sequence");
}

void require_kind(const PerDatumProfiles& pd, ReuseKind kind, const char* fn) {
  if (pd.kind != kind)
    throw std::invalid_argument(std::string(fn) + ": expected " + to_string(kind) + " profiles");
}

}  // namespace

Trace ai_from_rt(const ReuseSequence& seq) {
  require_kind(seq, ReuseKind::Time, "ai_from_rt");
  std::vector<DataId> ai(seq.values.size());
  std::vector<bool> claimed(seq.values.size(), false);
  DataId fresh = 0;
  for (Time i = 1; i <= seq.size(); ++i) {
    const ReuseValue v = seq.values[static_cast<std::size_t>(i - 1)];
    if (v.is_infinite()) {
      ai[static_cast<std::size_t>(i - 1)] = ++fresh;
      continue;
    }
    const Time prev = i - v.value();
    if (prev < 1) throw ValidationError(i, "reuse time " + std::to_string(v.value()) +
                                               " reaches before the start of the trace");
    auto idx = static_cast<std::size_t>(prev - 1);
    if (claimed[idx])
      throw ValidationError(i, "access " + std::to_string(prev) + " is already reused earlier");
    claimed[idx] = true;
    ai[static_cast<std::size_t>(i - 1)] = ai[idx];
  }
  return Trace(std::move(ai));
}

Trace ai_from_rd(const ReuseSequence& seq) {
  require_kind(seq, ReuseKind::Distance, "ai_from_rd");
  // Top of stack at the back.
  std::vector<DataId> stack;
  std::vector<DataId> ai;
  ai.reserve(seq.values.size());
  DataId fresh = 0;
  for (Time i = 1; i <= seq.size(); ++i) {
    const ReuseValue v = seq.values[static_cast<std::size_t>(i - 1)];
    if (v.is_infinite()) {
      stack.push_back(++fresh);
    } else {
      const auto depth = static_cast<Time>(stack.size());
      if (v.value() > depth)
        throw ValidationError(i, "reuse distance " + std::to_string(v.value()) +
                                     " exceeds stack depth " + std::to_string(depth));
      auto pos = stack.end() - v.value();
      std::rotate(pos, pos + 1, stack.end());
    }
    ai.push_back(stack.back());
  }
  return Trace(std::move(ai));
}

Trace ai_from_pd_rt(const PerDatumProfiles& pd) {
  require_kind(pd, ReuseKind::Time, "ai_from_pd_rt");
  const Time n = total_accesses(pd);
  std::vector<DataId> slot(static_cast<std::size_t>(n), 0);
  Time bad = kNever;
  std::string reason;
  auto fail = [&](Time pos, std::string why) {
    if (pos < bad) {
      bad = pos;
      reason = std::move(why);
    }
  };
  for (std::size_t k = 0; k < pd.profiles.size(); ++k) {
    const auto& p = pd.profiles[k];
    const auto datum = static_cast<DataId>(k + 1);
    Time t = p.first;
    for (std::size_t j = 0;; ++j) {
      if (t < 1 || t > n) {
        fail(std::clamp<Time>(t, 1, n), "datum " + std::to_string(p.datum) + " lands at time " +
                                            std::to_string(t) + " outside [1, " +
                                            std::to_string(n) + "]");
        break;
      }
      auto& s = slot[static_cast<std::size_t>(t - 1)];
      if (s != 0) fail(t, "data " + std::to_string(s) + " and " + std::to_string(datum) +
                             " collide");
      else s = datum;
      if (j == p.reuses.size()) break;
      if (p.reuses[j] < 1) {
        fail(t, "non-positive reuse time");
        break;
      }
      t += p.reuses[j];
    }
  }
  for (Time i = 1; i <= n && i < bad; ++i)
    if (slot[static_cast<std::size_t>(i - 1)] == 0) fail(i, "no datum fills this time");
  if (bad != kNever) throw ValidationError(bad, reason);
  return Trace(std::move(slot));
}

namespace detail {

Trace ai_from_pd_rd(const PerDatumProfiles& pd, CandidateOrder order) {
  require_kind(pd, ReuseKind::Distance, "ai_from_pd_rd");
  const Time n = total_accesses(pd);
  const std::size_t m = pd.profiles.size();

  // pd[e][1] is f_e; pd[e][k] for k >= 2 is the (k-1)-th reuse distance.
  auto entry = [&](std::size_t e, Time k) -> Time {
    if (k == 1) return pd.profiles[e].first;
    return pd.profiles[e].reuses[static_cast<std::size_t>(k - 2)];
  };
  auto entries = [&](std::size_t e) { return 1 + static_cast<Time>(pd.profiles[e].reuses.size()); };

  std::vector<Time> lastpos(m), nextpos(m), cnt(m, 1);
  for (std::size_t e = 0; e < m; ++e) lastpos[e] = nextpos[e] = entry(e, 1);

  std::vector<DataId> ai;
  ai.reserve(static_cast<std::size_t>(n));
  for (Time i = 1; i <= n; ++i) {
    // Selection: among data due at i, take the most recent last access.
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::size_t e = kNone;
    for (std::size_t c = 0; c < m; ++c) {
      if (nextpos[c] != i) continue;
      if (e == kNone) {
        e = c;
        continue;
      }
      const bool better = order == CandidateOrder::MostRecent ? lastpos[e] < lastpos[c]
                                                             : lastpos[c] < lastpos[e];
      if (better) e = c;
    }
    if (e == kNone) throw ValidationError(i, "no datum is due at this time");

    // Update: a reuse of e repeats a datum already inside the reuse window of
    // every datum last accessed before e's previous access. A first access
    // (lastpos[e] == i) brings in a new datum and delays nobody.
    if (lastpos[e] < i) {
      for (std::size_t c = 0; c < m; ++c)
        if (lastpos[c] < lastpos[e]) ++nextpos[c];
    }

    ai.push_back(static_cast<DataId>(e + 1));
    ++cnt[e];
    lastpos[e] = i;
    nextpos[e] = cnt[e] <= entries(e) ? i + entry(e, cnt[e]) : kNever;
  }
  for (std::size_t e = 0; e < m; ++e)
    if (cnt[e] <= entries(e))
      throw ValidationError(n, "datum " + std::to_string(pd.profiles[e].datum) +
                                   " has reuses left at the end of the trace");
  return Trace(std::move(ai));
}

}  // namespace detail

Trace ai_from_pd_rd(const PerDatumProfiles& pd) {
  return detail::ai_from_pd_rd(pd, detail::CandidateOrder::MostRecent);
}

}  // namespace locality
