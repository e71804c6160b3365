#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "locality/locality.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace locality;

namespace {

enum Exit { kOk = 0, kUsage = 1, kValidation = 2, kOracle = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "csv";
  std::string cold = "include";
  std::string out;
};

ColdPolicy cold_policy(const Options& o) {
  return o.cold == "exclude" ? ColdPolicy::Exclude : ColdPolicy::Include;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Trace load_trace(const std::string& path) { return parse_trace(read_file(path)); }

// Writes each named artifact to --out DIR, or to stdout. Several artifacts on
// stdout are separated by `# name` lines.
class Sink {
 public:
  explicit Sink(const Options& o) : dir_(o.out) {
    if (!dir_.empty()) fs::create_directories(dir_);
  }

  void emit(const std::string& name, const std::string& body) {
    names_.push_back(name);
    if (!dir_.empty()) {
      std::ofstream f(fs::path(dir_) / name, std::ios::binary);
      if (!f) throw UsageError("cannot write '" + (fs::path(dir_) / name).string() + "'");
      f << body;
      return;
    }
    pending_.emplace_back(name, body);
  }

  const std::vector<std::string>& names() const { return names_; }

  void flush() {
    if (pending_.size() == 1) {
      std::cout << pending_.front().second;
    } else {
      for (const auto& [name, body] : pending_) std::cout << "# " << name << '\n' << body;
    }
    pending_.clear();
  }

 private:
  std::string dir_;
  std::vector<std::string> names_;
  std::vector<std::pair<std::string, std::string>> pending_;
};

std::string str(const Rational& r) { return to_string(r); }

std::string str(const ExtendedTime& t) { return t.is_infinite() ? "inf" : to_string(t.value()); }

// -- JSON renderers; rationals travel as strings -----------------------------

json to_json(const ReuseHistogram& h) {
  json counts = json::array();
  for (const auto& [v, c] : h.counts) counts.push_back({v, c});
  return {{"kind", to_string(h.kind)}, {"n", h.n},           {"m", h.m},
          {"counts", counts},          {"inf", h.infinite_count}};
}

json to_json(const BinnedHistogram& b) {
  json bins = json::array();
  for (const auto& bin : b.bins) bins.push_back({bin.lo, bin.hi, bin.count});
  return {{"kind", to_string(b.kind)}, {"subbins", b.subbins}, {"bins", bins},
          {"inf", b.infinite_count}};
}

json to_json(const FootprintCurve& c) {
  json rows = json::array();
  for (Time x = 0; x <= c.max_window(); ++x)
    rows.push_back({{"x", x}, {"window_count", c.window_count(x)}, {"total_wss", c.total(x)},
                    {"fp", str(c.fp(x))}});
  return rows;
}

json to_json(const SteadyStateCurve& c) {
  json rows = json::array();
  for (Time x = 0; x <= c.horizon(); ++x) rows.push_back({{"x", x}, {"ss_fp", str(c.at(x))}});
  return rows;
}

json to_json(const MissRatioCurve& c) {
  json rows = json::array();
  for (const auto& p : c.points())
    rows.push_back({{"cache_size", str(p.cache_size)},
                    {"miss_ratio", str(p.miss_ratio)},
                    {"bracket", {str(p.bracket_low), str(p.bracket_high)}}});
  return {{"provenance", to_string(c.provenance())}, {"points", rows}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// -- shared pieces -------------------------------------------------------------

FootprintCurve footprint_by(const Trace& t, const std::string& method, Time w_max) {
  if (method == "brute") return fp_bruteforce(t);
  if (method == "xiang") return fp_xiang(t);
  if (method == "additive") return fp_additive(t);
  return fp_incremental(t, w_max);
}

std::optional<Time> parse_bins(const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  const std::string prefix = "loglinear";
  if (spec.rfind(prefix, 0) != 0) throw UsageError("--bins expects loglinear[:S]");
  if (spec.size() == prefix.size()) return 256;
  if (spec[prefix.size()] != ':') throw UsageError("--bins expects loglinear[:S]");
  try {
    const Time s = std::stoll(spec.substr(prefix.size() + 1));
    if (s < 1) throw UsageError("--bins sub-bin count must be >= 1");
    return s;
  } catch (const std::logic_error&) {
    throw UsageError("--bins expects loglinear[:S]");
  }
}

struct FillRow {
  Time size;
  Rational fill;
  ExtendedTime easton_fagin;
  ExtendedTime inter_miss;
  ExtendedTime residence;
};

std::vector<FillRow> fill_table(const FootprintCurve& fp, const MissRatioCurve& mrc) {
  std::vector<FillRow> rows;
  if (mrc.empty()) return rows;
  for (Time c = 0; c < fp.m; ++c) {
    if (fp.values().back() < Rational(c)) break;
    rows.push_back({c, fill_time(fp, Rational(c)), easton_fagin_fill_time(mrc, c),
                    inter_miss(mrc, Rational(c)), residence_time(mrc, Rational(c))});
  }
  return rows;
}

std::string fill_csv(const std::vector<FillRow>& rows) {
  std::ostringstream os;
  os << "cache_size,fill_time,easton_fagin,inter_miss,residence_time\n";
  for (const auto& r : rows)
    os << r.size << ',' << str(r.fill) << ',' << str(r.easton_fagin) << ',' << str(r.inter_miss)
       << ',' << str(r.residence) << '\n';
  return os.str();
}

json fill_json(const std::vector<FillRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"cache_size", r.size},
                   {"fill_time", str(r.fill)},
                   {"easton_fagin", str(r.easton_fagin)},
                   {"inter_miss", str(r.inter_miss)},
                   {"residence_time", str(r.residence)}});
  return out;
}

// -- subcommands ---------------------------------------------------------------

struct AnalyzeArgs {
  std::string path;
  std::string method = "incremental";
  std::string bins;
  bool oracle = false;
};

int cmd_analyze(const Options& o, const AnalyzeArgs& a) {
  const Trace t = load_trace(a.path);
  const auto bins = parse_bins(a.bins);
  const auto rt = build_histogram(reuse_time_sequence(t));
  const auto rd = build_histogram(reuse_distance_sequence(t));
  const auto fp = footprint_by(t, a.method, t.size());
  const auto ss = ss_fp_subtractive(rt);
  const auto mrc_diff = mrc_fp_diff(ss_fp_ds(rt, ColdPolicy::Exclude));
  const auto mrc_conv = mrc_reuse_time_conversion(rt, fp);
  const auto repeated = ReuseDistribution::repeated(t);
  const auto mrc_steady = mrc_fp_diff(ss_fp_subtractive(repeated, default_horizon(repeated)));
  const auto fills = fill_table(fp, mrc_conv);

  json report{{"stats",
               {{"n", t.size()}, {"m", t.distinct()}, {"hotness", str(t.hotness())}}},
              {"footprint_method", a.method}};

  bool mismatch = false;
  json oracle;
  std::string oracle_csv;
  if (a.oracle) {
    const auto brute = fp_bruteforce(t);
    const auto sim = lru_simulate_detailed(t);
    // Simulator misses against the counts implied by the RD histogram.
    std::vector<Time> from_rd(sim.misses.size(), 0);
    for (std::size_t c = 0; c < from_rd.size(); ++c) {
      Time deeper = 0;
      for (const auto& [v, cnt] : rd.counts)
        if (v > static_cast<Time>(c)) deeper += cnt;
      from_rd[c] = rd.infinite_count + deeper;
    }
    const std::vector<std::pair<std::string, bool>> verdicts{
        {"fp_xiang_vs_bruteforce", fp_xiang(t) == brute},
        {"fp_additive_vs_bruteforce", fp_additive(t) == brute},
        {"fp_incremental_vs_bruteforce", fp_incremental(t, t.size()) == brute},
        {"rd_histogram_vs_lru_simulate", from_rd == sim.misses},
    };
    std::ostringstream os;
    os << "x,fp," << "fp_bruteforce\n";
    for (Time x = 0; x <= fp.max_window(); ++x)
      os << x << ',' << str(fp.fp(x)) << ',' << str(brute.fp(x)) << '\n';
    os << "cache_size,misses_from_rd,lru_simulate\n";
    for (std::size_t c = 0; c < sim.misses.size(); ++c)
      os << c << ',' << from_rd[c] << ',' << sim.misses[c] << '\n';
    os << "check,verdict\n";
    for (const auto& [name, ok] : verdicts) {
      os << name << ',' << (ok ? "EQUAL" : "MISMATCH") << '\n';
      oracle[name] = ok ? "EQUAL" : "MISMATCH";
      mismatch = mismatch || !ok;
    }
    oracle_csv = os.str();
  }

  Sink sink(o);
  if (o.format == "json") {
    report["rt_histogram"] = to_json(rt);
    report["rd_histogram"] = to_json(rd);
    if (bins) {
      report["rt_binned"] = to_json(bin_log_linear(rt, *bins));
      report["rd_binned"] = to_json(bin_log_linear(rd, *bins));
    }
    report["footprint"] = to_json(fp);
    report["ss_fp"] = to_json(ss);
    report["mrc_fp_diff"] = to_json(mrc_diff);
    report["mrc_rt_conversion"] = to_json(mrc_conv);
    report["mrc_steady_state"] = to_json(mrc_steady);
    report["fill"] = fill_json(fills);
    if (a.oracle) report["oracle"] = oracle;
    sink.emit("report.json", dump(report));
  } else {
    std::ostringstream stats;
    stats << "n,m,hotness\n" << t.size() << ',' << t.distinct() << ',' << str(t.hotness()) << '\n';
    sink.emit("stats.csv", stats.str());
    sink.emit("rt_histogram.csv", histogram_csv(rt));
    sink.emit("rd_histogram.csv", histogram_csv(rd));
    if (bins) {
      sink.emit("rt_binned.csv", binned_csv(bin_log_linear(rt, *bins)));
      sink.emit("rd_binned.csv", binned_csv(bin_log_linear(rd, *bins)));
    }
    sink.emit("footprint.csv", footprint_csv(fp));
    sink.emit("ss_fp.csv", steady_state_csv(ss));
    sink.emit("mrc_fp_diff.csv", mrc_csv(mrc_diff));
    sink.emit("mrc_rt_conversion.csv", mrc_csv(mrc_conv));
    sink.emit("mrc_steady_state.csv", mrc_csv(mrc_steady));
    sink.emit("fill.csv", fill_csv(fills));
    if (a.oracle) sink.emit("oracle.csv", oracle_csv);
    // The combined report always accompanies the CSVs in a directory.
    if (!o.out.empty()) {
      report["files"] = sink.names();
      if (a.oracle) report["oracle"] = oracle;
      sink.emit("report.json", dump(report));
    }
  }
  sink.flush();
  if (mismatch) {
    std::cerr << "locality: oracle mismatch\n";
    return kOracle;
  }
  return kOk;
}

struct HistArgs {
  std::string path;
  std::string kind = "rt";
  std::string bins;
  std::string emit = "histogram";
};

int cmd_hist(const Options& o, const HistArgs& a) {
  const Trace t = load_trace(a.path);
  const auto seq = a.kind == "rd" ? reuse_distance_sequence(t) : reuse_time_sequence(t);
  Sink sink(o);
  if (a.emit == "sequence") {
    sink.emit(a.kind + "_sequence.txt", format_sequence(seq));
  } else if (a.emit == "profiles") {
    sink.emit(a.kind + "_profiles.txt", format_profiles(per_datum(seq, t)));
  } else {
    const auto h = build_histogram(seq);
    const auto bins = parse_bins(a.bins);
    if (o.format == "json") {
      json j = to_json(h);
      if (bins) j["binned"] = to_json(bin_log_linear(h, *bins));
      sink.emit(a.kind + "_histogram.json", dump(j));
    } else if (bins) {
      sink.emit(a.kind + "_binned.csv", binned_csv(bin_log_linear(h, *bins)));
    } else {
      sink.emit(a.kind + "_histogram.txt", format_histogram(h));
    }
  }
  sink.flush();
  return kOk;
}

struct FootprintArgs {
  std::string path;
  std::string method = "incremental";
  Time w_max = -1;
  bool steady = false;
};

int cmd_footprint(const Options& o, const FootprintArgs& a) {
  const Trace t = load_trace(a.path);
  Sink sink(o);
  if (a.steady) {
    const auto rt = build_histogram(reuse_time_sequence(t));
    const auto ss = ss_fp_ds(rt, cold_policy(o));
    if (o.format == "json") sink.emit("ss_fp.json", dump(to_json(ss)));
    else sink.emit("ss_fp.csv", steady_state_csv(ss));
  } else {
    const Time w = a.w_max < 0 ? t.size() : a.w_max;
    if (a.w_max >= 0 && a.method != "incremental")
      throw UsageError("--wmax applies to the incremental method only");
    const auto fp = footprint_by(t, a.method, w);
    if (o.format == "json") sink.emit("footprint.json", dump(to_json(fp)));
    else sink.emit("footprint.csv", footprint_csv(fp));
  }
  sink.flush();
  return kOk;
}

struct MrcArgs {
  std::string path;
  std::string method = "rt-conversion";
};

int cmd_mrc(const Options& o, const MrcArgs& a) {
  const Trace t = load_trace(a.path);
  const auto rt = build_histogram(reuse_time_sequence(t));
  MissRatioCurve mrc;
  if (a.method == "fp-diff") mrc = mrc_fp_diff(ss_fp_ds(rt, cold_policy(o)));
  else if (a.method == "simulator") mrc = lru_simulate(t);
  else mrc = mrc_reuse_time_conversion(rt, fp_incremental(t, t.size()));
  Sink sink(o);
  if (o.format == "json") sink.emit("mrc.json", dump(to_json(mrc)));
  else sink.emit("mrc.csv", mrc_csv(mrc));
  sink.flush();
  return kOk;
}

struct FillArgs {
  std::string path;
  std::vector<std::string> sizes;
};

Rational parse_rational(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw UsageError("expected a rational size, got '" + s + "'");
  }
}

int cmd_fill(const Options& o, const FillArgs& a) {
  const Trace t = load_trace(a.path);
  const auto fp = fp_incremental(t, t.size());
  Sink sink(o);
  if (a.sizes.empty()) {
    const auto mrc = lru_simulate(t);
    const auto rows = fill_table(fp, mrc);
    if (o.format == "json") sink.emit("fill.json", dump(fill_json(rows)));
    else sink.emit("fill.csv", fill_csv(rows));
  } else {
    std::ostringstream os;
    json rows = json::array();
    os << "cache_size,fill_time\n";
    for (const auto& s : a.sizes) {
      const Rational size = parse_rational(s);
      const Rational ft = fill_time(fp, size);
      os << str(size) << ',' << str(ft) << '\n';
      rows.push_back({{"cache_size", str(size)}, {"fill_time", str(ft)}});
    }
    if (o.format == "json") sink.emit("fill.json", dump(rows));
    else sink.emit("fill.csv", os.str());
  }
  sink.flush();
  return kOk;
}

struct ReconstructArgs {
  std::string path;
  bool verify = false;
};

int cmd_reconstruct(const Options& o, const ReconstructArgs& a) {
  const std::string text = read_file(a.path);
  Trace t;
  std::function<bool(const Trace&)> check;
  switch (sniff_input_kind(text)) {
    case InputKind::Histogram:
      throw ValidationError(0,
                            "histograms are not invertible: distinct traces share the same "
                            "reuse-time and reuse-distance histograms");
    case InputKind::Profiles: {
      const auto pd = parse_profiles(text);
      t = pd.kind == ReuseKind::Time ? ai_from_pd_rt(pd) : ai_from_pd_rd(pd);
      check = [pd](const Trace& r) {
        const auto seq =
            pd.kind == ReuseKind::Time ? reuse_time_sequence(r) : reuse_distance_sequence(r);
        return format_profiles(per_datum(seq, r)) == format_profiles(pd);
      };
      break;
    }
    case InputKind::Sequence: {
      const auto seq = parse_sequence(text);
      t = seq.kind == ReuseKind::Time ? ai_from_rt(seq) : ai_from_rd(seq);
      check = [seq](const Trace& r) {
        const auto again =
            seq.kind == ReuseKind::Time ? reuse_time_sequence(r) : reuse_distance_sequence(r);
        return again.values == seq.values;
      };
      break;
    }
  }
  if (a.verify && !check(t)) {
    std::cerr << "locality: reconstructed trace does not reproduce its input\n";
    return kOracle;
  }
  Sink sink(o);
  sink.emit("trace.txt", format_trace(t));
  sink.flush();
  return kOk;
}

struct GenArgs {
  std::string kind;
  std::size_t m = 0;
  std::size_t reps = 0;
};

int cmd_gen(const Options& o, const GenArgs& a) {
  Sink sink(o);
  sink.emit(a.kind + ".txt", format_trace(generate(parse_pattern(a.kind), a.m, a.reps)));
  sink.flush();
  return kOk;
}

int cmd_simulate(const Options& o, const std::string& path) {
  const auto sim = lru_simulate_detailed(load_trace(path));
  Sink sink(o);
  if (o.format == "json") {
    json rows = json::array();
    for (std::size_t c = 0; c < sim.misses.size(); ++c)
      rows.push_back({{"cache_size", c},
                      {"misses", sim.misses[c]},
                      {"miss_ratio", str(Rational(sim.misses[c], sim.n))},
                      {"capacity_miss_ratio", str(Rational(sim.misses[c] - sim.m, sim.n))},
                      {"cold_fill_time", sim.cold_fill_times[c]}});
    sink.emit("simulate.json", dump({{"n", sim.n}, {"m", sim.m}, {"sizes", rows}}));
  } else {
    std::ostringstream os;
    os << "cache_size,misses,miss_ratio,capacity_miss_ratio,cold_fill_time\n";
    for (std::size_t c = 0; c < sim.misses.size(); ++c)
      os << c << ',' << sim.misses[c] << ',' << str(Rational(sim.misses[c], sim.n)) << ','
         << str(Rational(sim.misses[c] - sim.m, sim.n)) << ',' << sim.cold_fill_times[c] << '\n';
    sink.emit("simulate.csv", os.str());
  }
  sink.flush();
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locality metrics: reuse, footprint and miss ratio analysis of access traces"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--cold", opts.cold, "Count first accesses in tail probabilities")
      ->check(CLI::IsMember({"include", "exclude"}))
      ->capture_default_str();
  app.add_option("--out", opts.out, "Write outputs to this directory instead of stdout");

  const std::vector<std::string> methods{"xiang", "additive", "incremental", "brute"};
  std::function<int()> run;

  AnalyzeArgs analyze;
  auto* a = app.add_subcommand("analyze", "All metrics for one trace");
  a->add_option("trace", analyze.path)->required();
  a->add_option("--method", analyze.method, "Footprint formula")
      ->check(CLI::IsMember(methods))
      ->capture_default_str();
  a->add_option("--bins", analyze.bins, "Log-linear binning, e.g. loglinear:256");
  a->add_flag("--oracle", analyze.oracle, "Cross-check against brute force and the simulator");
  a->callback([&] { run = [&] { return cmd_analyze(opts, analyze); }; });

  HistArgs hist;
  auto* h = app.add_subcommand("hist", "Reuse histogram, sequence or per-datum profiles");
  h->add_option("trace", hist.path)->required();
  h->add_option("--kind", hist.kind)->check(CLI::IsMember({"rt", "rd"}))->capture_default_str();
  h->add_option("--bins", hist.bins, "Log-linear binning, e.g. loglinear:256");
  h->add_option("--emit", hist.emit)
      ->check(CLI::IsMember({"histogram", "sequence", "profiles"}))
      ->capture_default_str();
  h->callback([&] { run = [&] { return cmd_hist(opts, hist); }; });

  FootprintArgs footprint;
  auto* f = app.add_subcommand("footprint", "Footprint curve");
  f->add_option("trace", footprint.path)->required();
  f->add_option("--method", footprint.method)->check(CLI::IsMember(methods))->capture_default_str();
  f->add_option("--wmax", footprint.w_max, "Largest window length (incremental only)");
  f->add_flag("--steady", footprint.steady, "Steady-state footprint from the reuse-time histogram");
  f->callback([&] { run = [&] { return cmd_footprint(opts, footprint); }; });

  MrcArgs mrc;
  auto* m = app.add_subcommand("mrc", "Miss ratio curve");
  m->add_option("trace", mrc.path)->required();
  m->add_option("--method", mrc.method)
      ->check(CLI::IsMember({"rt-conversion", "fp-diff", "simulator"}))
      ->capture_default_str();
  m->callback([&] { run = [&] { return cmd_mrc(opts, mrc); }; });

  FillArgs fill;
  auto* fl = app.add_subcommand("fill", "Fill, inter-miss and residence times");
  fl->add_option("trace", fill.path)->required();
  fl->add_option("--size", fill.sizes, "Cache sizes (integers or p/q)");
  fl->callback([&] { run = [&] { return cmd_fill(opts, fill); }; });

  ReconstructArgs recon;
  auto* r = app.add_subcommand("reconstruct", "Rebuild a trace from a reuse sequence or profiles");
  r->add_option("input", recon.path)->required();
  r->add_flag("--verify", recon.verify, "Re-measure the result and compare with the input");
  r->callback([&] { run = [&] { return cmd_reconstruct(opts, recon); }; });

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a cyclic, sawtooth or fused trace");
  g->add_option("kind", gen.kind)->required()->check(CLI::IsMember({"cyclic", "sawtooth", "fused"}));
  g->add_option("m", gen.m)->required()->check(CLI::PositiveNumber);
  g->add_option("reps", gen.reps)->required()->check(CLI::PositiveNumber);
  g->callback([&] { run = [&] { return cmd_gen(opts, gen); }; });

  std::string sim_path;
  auto* s = app.add_subcommand("simulate", "Exact LRU miss counts for every cache size");
  s->add_option("trace", sim_path)->required();
  s->callback([&] { run = [&] { return cmd_simulate(opts, sim_path); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "locality: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "locality: " << e.what() << '\n';
    return kValidation;
  } catch (const ValidationError& e) {
    std::cerr << "locality: " << e.what() << '\n';
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "locality: " << e.what() << '\n';
    return kValidation;
  }
}
