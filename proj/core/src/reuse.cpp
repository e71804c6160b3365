#include "locality/reuse.hpp"

#include <algorithm>
#include <functional>

#include <ext/pb_ds/assoc_container.hpp>
#include <ext/pb_ds/tree_policy.hpp>

namespace locality {

namespace {

using OrderedTimes =
    __gnu_pbds::tree<Time, __gnu_pbds::null_type, std::less<Time>, __gnu_pbds::rb_tree_tag,
                     __gnu_pbds::tree_order_statistics_node_update>;

}  // namespace

ReuseValue ReuseValue::finite(Time v) {
  if (v < 1) throw std::invalid_argument("ReuseValue: finite reuse must be >= 1");
  return ReuseValue{v};
}

std::ostream& operator<<(std::ostream& os, ReuseValue v) {
  if (v.is_infinite()) return os << "inf";
  return os << v.value();
}

std::size_t ReuseSequence::infinite_count() const {
  return static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(), [](ReuseValue v) { return v.is_infinite(); }));
}

ReuseSequence reuse_time_sequence(const Trace& t) {
  ReuseSequence seq{ReuseKind::Time, {}};
  seq.values.reserve(t.accesses().size());
  std::vector<Time> last(t.distinct(), 0);
  for (Time i = 1; i <= t.size(); ++i) {
    Time& prev = last[t.at(i) - 1];
    seq.values.push_back(prev == 0 ? ReuseValue::infinite() : ReuseValue::finite(i - prev));
    prev = i;
  }
  return seq;
}

ReuseSequence reuse_distance_sequence(const Trace& t) {
  // The tree holds the last access time of every datum seen so far (at most
  // m keys). The distance of a reuse is the number of last-access times at
  // or after the datum's own previous access.
  ReuseSequence seq{ReuseKind::Distance, {}};
  seq.values.reserve(t.accesses().size());
  std::vector<Time> last(t.distinct(), 0);
  OrderedTimes live;
  for (Time i = 1; i <= t.size(); ++i) {
    Time& prev = last[t.at(i) - 1];
    if (prev == 0) {
      seq.values.push_back(ReuseValue::infinite());
    } else {
      const auto before = static_cast<Time>(live.order_of_key(prev));
      seq.values.push_back(ReuseValue::finite(static_cast<Time>(live.size()) - before));
      live.erase(prev);
    }
    live.insert(i);
    prev = i;
  }
  return seq;
}

PerDatumProfiles per_datum(const ReuseSequence& seq, const Trace& t) {
  if (seq.size() != t.size())
    throw std::invalid_argument("per_datum: sequence length differs from trace length");
  PerDatumProfiles out{seq.kind, {}};
  out.profiles.resize(t.distinct());
  for (DataId e = 1; e <= t.distinct(); ++e) {
    auto& p = out.profiles[e - 1];
    p.datum = e;
    p.first = t.first_access(e);
    p.reuses.reserve(static_cast<std::size_t>(t.access_count(e) - 1));
  }
  for (Time i = 1; i <= t.size(); ++i) {
    const ReuseValue v = seq.values[static_cast<std::size_t>(i - 1)];
    if (v.is_finite()) out.profiles[t.at(i) - 1].reuses.push_back(v.value());
  }
  return out;
}

}  // namespace locality
