#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace locality;

namespace {

ReuseHistogram rt_hist(const Trace& t) { return build_histogram(reuse_time_sequence(t)); }

MissRatioCurve curve(std::vector<std::pair<Rational, Rational>> pts) {
  std::vector<MrcPoint> out;
  for (auto [c, mr] : pts) out.push_back({c, mr, mr, mr});
  return MissRatioCurve(Provenance::Simulator, std::move(out));
}

}  // namespace

TEST(FpDiff, PeriodicTable) {
  const auto ss = ss_fp_subtractive(ReuseDistribution::periodic(3), 4);
  const auto mrc = mrc_fp_diff(ss);
  ASSERT_EQ(mrc.points().size(), 4u);
  const std::vector<Rational> expected{1, 1, 1, 0};
  for (Time c = 0; c <= 3; ++c) {
    EXPECT_EQ(mrc.points()[static_cast<std::size_t>(c)].cache_size, Rational(c));
    EXPECT_EQ(mrc.at(Rational(c)), expected[static_cast<std::size_t>(c)]);
  }
  EXPECT_EQ(mrc.at(Rational(7)), Rational(0));
  EXPECT_EQ(mrc.provenance(), Provenance::FpDiff);
}

TEST(FpDiff, RejectsNonConcave) {
  SteadyStateCurve bad{3, ColdPolicy::Exclude, {0, 1, 1, 2}};
  try {
    mrc_fp_diff(bad);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.position(), 2);
  }
}

TEST(FpDiff, RandomTracesGiveValidCurves) {
  std::mt19937_64 rng(21);
  for (int k = 0; k < 300; ++k) {
    const auto h = rt_hist(locality::testing::random_trace(rng, 400, 40));
    const auto mrc = mrc_fp_diff(ss_fp_ds(h, ColdPolicy::Exclude));
    for (const auto& p : mrc.points()) {
      ASSERT_LE(p.bracket_low, p.miss_ratio);
      ASSERT_LE(p.miss_ratio, p.bracket_high);
    }
  }
}

TEST(MissRatioCurve, Validation) {
  EXPECT_THROW(curve({{0, 1}, {0, Rational(1, 2)}}), ValidationError);
  EXPECT_THROW(curve({{0, Rational(1, 2)}, {1, 1}}), ValidationError);
  EXPECT_THROW(curve({{0, Rational(3, 2)}}), ValidationError);
  EXPECT_THROW(curve({{0, -1}}), ValidationError);
  EXPECT_THROW(MissRatioCurve().at(0), std::out_of_range);
}

TEST(MissRatioCurve, NearestTiesGoLow) {
  const auto c = curve({{0, 1}, {2, Rational(1, 2)}, {4, 0}});
  EXPECT_EQ(c.at(1), Rational(1));
  EXPECT_EQ(c.at(Rational(3, 2)), Rational(1, 2));
  EXPECT_EQ(c.at(3), Rational(1, 2));
  EXPECT_EQ(c.at(9), Rational(0));
  EXPECT_EQ(c.at(-1), Rational(1));
}

TEST(Simulator, Examples) {
  const auto mrc = lru_simulate(Trace{1, 2, 3, 1, 2, 3});
  EXPECT_EQ(mrc.at(0), Rational(1));
  EXPECT_EQ(mrc.at(1), Rational(1));
  EXPECT_EQ(mrc.at(2), Rational(1));
  EXPECT_EQ(mrc.at(3), Rational(1, 2));
  EXPECT_EQ(mrc.at(10), Rational(1, 2));

  const auto fused = lru_simulate(generate(Pattern::Fused, 3, 2));
  for (Time c = 1; c <= 3; ++c) EXPECT_EQ(fused.at(c), Rational(1, 2));

  EXPECT_TRUE(lru_simulate(Trace{}).empty());
}

TEST(Simulator, MatchesNaiveLru) {
  std::mt19937_64 rng(22);
  for (int k = 0; k < 300; ++k) {
    const Trace t = locality::testing::random_trace(rng, 400, 30);
    ASSERT_EQ(lru_simulate_detailed(t).misses, locality::testing::naive_lru_misses(t));
  }
}

TEST(Simulator, CapacityCurveAndColdFill) {
  const auto sim = lru_simulate_detailed(Trace{1, 2, 1, 3});
  EXPECT_EQ(sim.capacity_curve().at(0), Rational(1, 4));
  EXPECT_EQ(sim.capacity_curve().at(2), Rational(0));
  EXPECT_EQ(sim.cold_fill_times, (std::vector<Time>{0, 1, 2, 4}));
}

TEST(RtConversion, CyclicMatchesSimulator) {
  const Trace t{1, 2, 3, 1, 2, 3};
  const auto conv = mrc_reuse_time_conversion(rt_hist(t), fp_bruteforce(t));
  EXPECT_EQ(conv.at(0), Rational(1));
  EXPECT_EQ(conv.at(2), Rational(1));
  EXPECT_EQ(conv.at(3), Rational(1, 2));
  const auto sim = lru_simulate(t);
  for (Time c = 0; c <= 3; ++c) EXPECT_EQ(conv.at(c), sim.at(c));
}

TEST(RtConversion, PeriodicFamilyAgreesWithSimulator) {
  for (std::size_t m = 1; m <= 8; ++m)
    for (std::size_t k = 1; k <= 5; ++k) {
      const Trace t = generate(Pattern::Cyclic, m, k);
      const auto conv = mrc_reuse_time_conversion(rt_hist(t), fp_bruteforce(t));
      const auto sim = lru_simulate(t);
      for (Time c = 0; c <= static_cast<Time>(m); ++c) ASSERT_EQ(conv.at(c), sim.at(c));
    }
}

TEST(RtConversion, RandomTracesAreMonotone) {
  std::mt19937_64 rng(23);
  for (int k = 0; k < 200; ++k) {
    const Trace t = locality::testing::random_trace(rng, 300, 30);
    const auto h = rt_hist(t);
    EXPECT_NO_THROW(mrc_reuse_time_conversion(h, fp_bruteforce(t)));
    EXPECT_NO_THROW(mrc_reuse_time_conversion(h, ss_fp_ds(h, ColdPolicy::Include)));
  }
}

TEST(FillTime, Examples) {
  const auto cyc = fp_bruteforce(generate(Pattern::Cyclic, 3, 2));
  EXPECT_EQ(fill_time(cyc, 2), Rational(2));
  EXPECT_EQ(fill_time(cyc, 0), Rational(0));
  EXPECT_EQ(fill_time(cyc, Rational(5, 2)), Rational(5, 2));
  EXPECT_THROW(fill_time(cyc, 3), std::domain_error);
  EXPECT_THROW(fill_time(cyc, -1), std::domain_error);

  const auto fused = fp_bruteforce(generate(Pattern::Fused, 2, 2));
  EXPECT_EQ(fill_time(fused, Rational(4, 3)), Rational(2));
}

TEST(FillTime, InvertsFootprintAtKnots) {
  std::mt19937_64 rng(24);
  for (int k = 0; k < 200; ++k) {
    const Trace t = locality::testing::random_trace(rng, 200, 20);
    const auto fp = fp_bruteforce(t);
    for (Time x = 1; x <= t.size(); ++x) {
      const Rational v = fp.fp(x);
      if (v >= Rational(fp.m) || v == fp.fp(x - 1)) continue;
      ASSERT_EQ(fill_time(fp, v), Rational(x));
    }
  }
}

TEST(CacheTimes, InterMissAndResidence) {
  const auto c = curve({{0, 1}, {2, 1}, {3, Rational(1, 2)}, {4, 0}});
  EXPECT_EQ(inter_miss(c, 2).value(), Rational(1));
  EXPECT_EQ(inter_miss(c, 3).value(), Rational(2));
  EXPECT_TRUE(inter_miss(c, 4).is_infinite());
  EXPECT_EQ(residence_time(c, 2).value(), Rational(2));
  EXPECT_EQ(residence_time(c, 3).value(), Rational(6));
  EXPECT_EQ(residence_time(c, 0).value(), Rational(0));
  EXPECT_TRUE(residence_time(c, 4).is_infinite());
}

TEST(CacheTimes, LittlesLaw) {
  std::mt19937_64 rng(25);
  for (int k = 0; k < 100; ++k) {
    const auto mrc = lru_simulate(locality::testing::random_trace(rng, 300, 30));
    for (const auto& p : mrc.points()) {
      const auto res = residence_time(mrc, p.cache_size);
      if (res.is_infinite()) continue;
      ASSERT_EQ(res.value() * p.miss_ratio, p.cache_size);
    }
  }
}

TEST(EastonFagin, ExactOnCyclic) {
  for (std::size_t m = 1; m <= 8; ++m) {
    const Trace t = generate(Pattern::Cyclic, m, 4);
    const auto fp = fp_bruteforce(t);
    const auto mrc = lru_simulate(t);
    for (Time c = 0; c < static_cast<Time>(m); ++c)
      ASSERT_EQ(easton_fagin_fill_time(mrc, c).value(), fill_time(fp, c));
  }
  EXPECT_EQ(easton_fagin_fill_time(lru_simulate(Trace{1, 2}), 0).value(), Rational(0));
}

TEST(EastonFagin, InfiniteWhenMissRatioVanishes) {
  const auto c = curve({{0, 1}, {1, 0}});
  EXPECT_TRUE(easton_fagin_fill_time(c, 2).is_infinite());
}

TEST(Estimators, TimeWindowMissRatio) {
  const auto h = rt_hist(Trace{1, 2, 3, 1, 2, 3});
  EXPECT_EQ(time_window_miss_ratio(h, 2, ColdPolicy::Exclude), Rational(1, 2));
  EXPECT_EQ(time_window_miss_ratio(h, 0, ColdPolicy::Include), Rational(1));
  EXPECT_EQ(time_window_miss_ratio(h, 5, ColdPolicy::Exclude), Rational(0));
}

TEST(Estimators, Shen) {
  const auto ss = ss_fp_subtractive(ReuseDistribution::periodic(3), 4);
  EXPECT_EQ(shen_probability(ss, 3, 2), Rational(1));
  EXPECT_EQ(shen_probability(ss, 3, 0), Rational(0));
  for (Time w = 1; w <= 4; ++w)
    EXPECT_GE(shen_probability(ss, 3, w), shen_probability(ss, 3, w - 1));
  EXPECT_THROW(shen_probability(ss, 1, 2), std::invalid_argument);
}

TEST(Estimators, Statcache) {
  const auto h = rt_hist(Trace{1, 2, 3, 1, 2, 3});
  EXPECT_EQ(statcache_es(h, 3, ColdPolicy::Include), Rational(5, 2));
  EXPECT_EQ(statcache_es(h, 0, ColdPolicy::Include), Rational(0));
  Rational prev = 0;
  for (Time r = 1; r <= 8; ++r) {
    const auto es = statcache_es(h, r, ColdPolicy::Exclude);
    EXPECT_GE(es, prev);
    prev = es;
  }
}

TEST(FpDiff, BracketsCapacityMissesOnCyclicTraces) {
  for (std::size_t m = 1; m <= 8; ++m)
    for (std::size_t k = 1; k <= 6; ++k) {
      const Trace t = generate(Pattern::Cyclic, m, k);
      const auto ss = ss_fp_ds(rt_hist(t), ColdPolicy::Exclude);
      const auto sim = lru_simulate_detailed(t);
      for (Time c = 0; c <= sim.m; ++c)
        for (Time x = 0; x + 1 < ss.horizon(); ++x) {
          if (!(ss.at(x) <= Rational(c) && Rational(c) < ss.at(x + 1))) continue;
          const Rational capacity(sim.misses[static_cast<std::size_t>(c)] - sim.m, sim.n);
          ASSERT_LE(ss.increment(x + 1), capacity);
          ASSERT_LE(capacity, ss.increment(x));
        }
    }
}
