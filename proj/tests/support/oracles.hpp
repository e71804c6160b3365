#pragma once

// Test-only reference implementations. Each one is deliberately naive and
// shares no code path with the library routine it checks.

#include <algorithm>
#include <list>
#include <random>
#include <set>
#include <vector>

#include "locality/locality.hpp"

namespace locality::testing {

/// Random trace: length in [1, max_n], ids drawn from [1, max_m] with a mix
/// of uniform and skewed draws so both short and long reuses appear.
inline Trace random_trace(std::mt19937_64& rng, Time max_n, Time max_m) {
  std::uniform_int_distribution<Time> len(1, max_n);
  std::uniform_int_distribution<Time> width(1, max_m);
  const Time n = len(rng);
  const Time m = width(rng);
  std::vector<DataId> ids;
  ids.reserve(static_cast<std::size_t>(n));
  std::uniform_int_distribution<int> mode(0, 2);
  std::uniform_int_distribution<Time> uniform(1, m);
  std::geometric_distribution<Time> skew(0.3);
  const int style = mode(rng);
  for (Time i = 0; i < n; ++i) {
    Time id = 0;
    if (style == 0) id = uniform(rng);
    else if (style == 1) id = 1 + std::min<Time>(skew(rng), m - 1);
    else id = (i % 5 == 0) ? uniform(rng) : 1 + (i % m);
    ids.push_back(static_cast<DataId>(id));
  }
  return Trace(std::move(ids));
}

/// Distinct data strictly between the previous access and i, plus one.
inline std::vector<Time> naive_reuse_distances(const Trace& t) {
  std::vector<Time> out;  // 0 encodes infinity
  for (Time i = 1; i <= t.size(); ++i) {
    Time j = i - 1;
    while (j >= 1 && t.at(j) != t.at(i)) --j;
    if (j == 0) {
      out.push_back(0);
      continue;
    }
    std::set<DataId> between;
    for (Time k = j + 1; k < i; ++k) between.insert(t.at(k));
    out.push_back(static_cast<Time>(between.size()) + 1);
  }
  return out;
}

inline std::vector<Time> naive_reuse_times(const Trace& t) {
  std::vector<Time> out;
  for (Time i = 1; i <= t.size(); ++i) {
    Time j = i - 1;
    while (j >= 1 && t.at(j) != t.at(i)) --j;
    out.push_back(j == 0 ? 0 : i - j);
  }
  return out;
}

inline std::vector<Time> as_raw(const ReuseSequence& seq) {
  std::vector<Time> out;
  for (auto v : seq.values) out.push_back(v.is_infinite() ? 0 : v.value());
  return out;
}

/// Misses of a size-c fully associative LRU cache, simulated separately for
/// every c with an explicit recency list.
inline std::vector<Time> naive_lru_misses(const Trace& t) {
  const auto m = static_cast<Time>(t.distinct());
  std::vector<Time> misses(static_cast<std::size_t>(m) + 1, 0);
  for (Time c = 0; c <= m; ++c) {
    std::list<DataId> cache;  // front = most recent
    for (auto e : t.accesses()) {
      auto it = std::find(cache.begin(), cache.end(), e);
      if (it != cache.end()) {
        cache.erase(it);
      } else {
        ++misses[static_cast<std::size_t>(c)];
      }
      if (c > 0) {
        cache.push_front(e);
        if (static_cast<Time>(cache.size()) > c) cache.pop_back();
      }
    }
  }
  return misses;
}

inline ReuseSequence sequence_of(ReuseKind kind, std::initializer_list<Time> raw) {
  ReuseSequence seq{kind, {}};
  for (Time v : raw) seq.values.push_back(v == 0 ? ReuseValue::infinite() : ReuseValue::finite(v));
  return seq;
}

constexpr Time kInf = 0;

}  // namespace locality::testing
