#include <vector>

#include "locality/cache_model.hpp"

namespace locality {

namespace {

// Fenwick tree over access times; a set bit marks the current last access
// of some datum.
class Fenwick {
 public:
  explicit Fenwick(std::size_t n) : tree_(n + 1, 0) {}

  void add(std::size_t i, Time delta) {
    for (; i < tree_.size(); i += i & (~i + 1)) tree_[i] += delta;
  }
  Time prefix(std::size_t i) const {
    Time s = 0;
    for (; i > 0; i -= i & (~i + 1)) s += tree_[i];
    return s;
  }

 private:
  std::vector<Time> tree_;
};

}  // namespace

LruSimulation lru_simulate_detailed(const Trace& t) {
  LruSimulation sim;
  sim.n = t.size();
  sim.m = static_cast<Time>(t.distinct());
  if (sim.n == 0) return sim;

  const auto n = static_cast<std::size_t>(sim.n);
  const auto m = static_cast<std::size_t>(sim.m);
  std::vector<Time> by_distance(m + 1, 0);
  std::vector<std::size_t> last(m, 0);
  Fenwick marks(n);
  for (std::size_t i = 1; i <= n; ++i) {
    std::size_t& prev = last[t.at(static_cast<Time>(i)) - 1];
    if (prev != 0) {
      // Stack depth = data whose last access is at or after prev.
      const Time depth = marks.prefix(i - 1) - marks.prefix(prev - 1);
      ++by_distance[static_cast<std::size_t>(depth)];
      marks.add(prev, -1);
    }
    marks.add(i, 1);
    prev = i;
  }

  sim.misses.assign(m + 1, 0);
  Time deeper = 0;
  for (std::size_t c = m + 1; c-- > 0;) {
    sim.misses[c] = sim.m + deeper;
    deeper += by_distance[c];
  }
  sim.cold_fill_times.assign(m + 1, 0);
  for (DataId e = 1; e <= t.distinct(); ++e) sim.cold_fill_times[e] = t.first_access(e);
  return sim;
}

MissRatioCurve LruSimulation::total_curve() const {
  std::vector<MrcPoint> points;
  for (std::size_t c = 0; c < misses.size(); ++c) {
    const Rational mr{misses[c], n};
    points.push_back({Rational{static_cast<Time>(c)}, mr, mr, mr});
  }
  return MissRatioCurve(Provenance::Simulator, std::move(points));
}

MissRatioCurve LruSimulation::capacity_curve() const {
  std::vector<MrcPoint> points;
  for (std::size_t c = 0; c < misses.size(); ++c) {
    const Rational mr{misses[c] - m, n};
    points.push_back({Rational{static_cast<Time>(c)}, mr, mr, mr});
  }
  return MissRatioCurve(Provenance::Simulator, std::move(points));
}

MissRatioCurve lru_simulate(const Trace& t) { return lru_simulate_detailed(t).total_curve(); }

}  // namespace locality
