#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace locality;

TEST(Formats, HistogramRoundTrip) {
  const auto h = build_histogram(reuse_time_sequence(Trace{1, 2, 1, 2, 2, 1}));
  const std::string text = format_histogram(h);
  EXPECT_EQ(text, "#kind=rt\n#n=6\n#m=2\n1 1\n2 2\n3 1\ninf 2\n");
  EXPECT_EQ(parse_histogram(text), h);
  EXPECT_EQ(sniff_input_kind(text), InputKind::Histogram);
}

TEST(Formats, HistogramErrors) {
  try {
    parse_histogram("#kind=rt\n#n=3\n#m=1\n1 x\ninf 1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
  EXPECT_THROW(parse_histogram("#kind=rt\n#n=3\n#m=1\n1 1\ninf 1\n"), ParseError);
  EXPECT_THROW(parse_histogram("#kind=zz\n#n=1\n#m=1\ninf 1\n"), ParseError);
  EXPECT_THROW(parse_histogram("#n=1\n#m=1\ninf 1\n"), ParseError);
  EXPECT_THROW(parse_histogram("#kind=rt\n#n=2\n#m=1\ninf 1\n1 1\n"), ParseError);
}

TEST(Formats, ProfilesRoundTrip) {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 100; ++k) {
    const Trace t = locality::testing::random_trace(rng, 100, 10);
    for (const auto& seq : {reuse_time_sequence(t), reuse_distance_sequence(t)}) {
      const auto pd = per_datum(seq, t);
      const std::string text = format_profiles(pd);
      const auto back = parse_profiles(text);
      ASSERT_EQ(back.kind, pd.kind);
      ASSERT_EQ(format_profiles(back), text);
      if (t.size() > 1 && t.distinct() < static_cast<std::size_t>(t.size()))
        ASSERT_EQ(sniff_input_kind(text), InputKind::Profiles);
    }
  }
  EXPECT_THROW(parse_profiles("#kind=rd\n1 0\n"), ParseError);
  EXPECT_THROW(parse_profiles("#kind=rd\n1 1 inf\n"), ParseError);
}

TEST(Formats, SequenceRoundTrip) {
  const auto seq = reuse_distance_sequence(generate(Pattern::Cyclic, 3, 2));
  const std::string text = format_sequence(seq);
  EXPECT_EQ(text, "#kind=rd\ninf\ninf\ninf\n3\n3\n3\n");
  const auto back = parse_sequence(text);
  EXPECT_EQ(back.kind, ReuseKind::Distance);
  EXPECT_EQ(format_sequence(back), text);
  EXPECT_EQ(sniff_input_kind(text), InputKind::Sequence);
  EXPECT_EQ(ai_from_rd(back), generate(Pattern::Cyclic, 3, 2));
  EXPECT_THROW(parse_sequence("#kind=rt\n0\n"), ParseError);
  EXPECT_THROW(parse_sequence("#kind=rt\n1 2\n"), ParseError);
}

TEST(Formats, Csv) {
  const Trace t = generate(Pattern::Cyclic, 3, 2);
  const auto fp = fp_bruteforce(t);
  const std::string csv = footprint_csv(fp);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "x,window_count,total_wss,fp,fp_float");
  EXPECT_NE(csv.find("\n2,5,10,2,2\n"), std::string::npos);

  const auto mrc = lru_simulate(t);
  EXPECT_EQ(mrc_csv(mrc),
            "cache_size,miss_ratio,provenance\n0,1,simulator\n1,1,simulator\n2,1,simulator\n"
            "3,1/2,simulator\n");
  EXPECT_EQ(histogram_csv(build_histogram(reuse_time_sequence(t))), "value,count\n3,3\ninf,3\n");

  ReuseHistogram h;
  h.counts = {{1, 2}, {3, 1}};
  h.infinite_count = 1;
  EXPECT_EQ(binned_csv(bin_log_linear(h, 1)), "lo,hi,count\n1,1,2\n2,2,0\n3,4,1\ninf,inf,1\n");
}
