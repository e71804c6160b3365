#include "locality/formats.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace locality {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

struct Document {
  std::vector<std::pair<std::size_t, std::string_view>> headers;  // `#key=value` bodies
  std::vector<Line> lines;
};

Document split(std::string_view text) {
  Document doc;
  std::size_t pos = 0, number = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.tokens.empty()) continue;
    if (line.tokens.front().front() == '#') {
      std::string_view body = line.tokens.front().substr(1);
      if (body.find('=') != std::string_view::npos) doc.headers.emplace_back(number, body);
      continue;
    }
    doc.lines.push_back(std::move(line));
  }
  return doc;
}

std::optional<std::string_view> header(const Document& doc, std::string_view key) {
  for (const auto& [line, body] : doc.headers) {
    auto eq = body.find('=');
    if (body.substr(0, eq) == key) return body.substr(eq + 1);
  }
  return std::nullopt;
}

std::size_t header_line(const Document& doc, std::string_view key) {
  for (const auto& [line, body] : doc.headers)
    if (body.substr(0, body.find('=')) == key) return line;
  return 1;
}

Time parse_int(std::string_view token, std::size_t line) {
  Time v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  return v;
}

ReuseKind parse_kind(const Document& doc) {
  auto kind = header(doc, "kind");
  if (!kind) throw ParseError(1, "missing '#kind=rt|rd' header");
  if (*kind == "rt") return ReuseKind::Time;
  if (*kind == "rd") return ReuseKind::Distance;
  throw ParseError(header_line(doc, "kind"), "unknown kind '" + std::string(*kind) + "'");
}

ReuseValue parse_reuse(std::string_view token, std::size_t line) {
  if (token == "inf" || token == "∞") return ReuseValue::infinite();
  const Time v = parse_int(token, line);
  if (v < 1) throw ParseError(line, "reuse values must be >= 1 or 'inf'");
  return ReuseValue::finite(v);
}

}  // namespace

std::string format_histogram(const ReuseHistogram& h) {
  std::ostringstream os;
  os << "#kind=" << to_string(h.kind) << "\n#n=" << h.n << "\n#m=" << h.m << '\n';
  for (const auto& [v, c] : h.counts) os << v << ' ' << c << '\n';
  os << "inf " << h.infinite_count << '\n';
  return os.str();
}

ReuseHistogram parse_histogram(std::string_view text) {
  const Document doc = split(text);
  ReuseHistogram h;
  h.kind = parse_kind(doc);
  auto n = header(doc, "n");
  auto m = header(doc, "m");
  if (!n || !m) throw ParseError(1, "histogram needs '#n=' and '#m=' headers");
  h.n = parse_int(*n, header_line(doc, "n"));
  h.m = parse_int(*m, header_line(doc, "m"));
  bool seen_inf = false;
  for (const auto& line : doc.lines) {
    if (line.tokens.size() != 2) throw ParseError(line.number, "expected 'value count'");
    if (seen_inf) throw ParseError(line.number, "'inf' must be the last entry");
    const Time count = parse_int(line.tokens[1], line.number);
    if (count < 0) throw ParseError(line.number, "negative count");
    const ReuseValue v = parse_reuse(line.tokens[0], line.number);
    if (v.is_infinite()) {
      h.infinite_count = count;
      seen_inf = true;
    } else if (count > 0) {
      if (!h.counts.emplace(v.value(), count).second)
        throw ParseError(line.number, "duplicate value " + std::to_string(v.value()));
    }
  }
  if (h.finite_total() + h.infinite_count != h.n)
    throw ParseError(1, "counts do not add up to n = " + std::to_string(h.n));
  return h;
}

std::string format_profiles(const PerDatumProfiles& pd) {
  std::ostringstream os;
  os << "#kind=" << to_string(pd.kind) << '\n';
  for (const auto& p : pd.profiles) {
    os << p.datum << ' ' << p.first;
    for (auto r : p.reuses) os << ' ' << r;
    os << '\n';
  }
  return os.str();
}

PerDatumProfiles parse_profiles(std::string_view text) {
  const Document doc = split(text);
  PerDatumProfiles pd;
  pd.kind = parse_kind(doc);
  for (const auto& line : doc.lines) {
    if (line.tokens.size() < 2) throw ParseError(line.number, "expected 'id f_e r_2 ...'");
    PerDatumProfile p;
    p.datum = static_cast<DataId>(parse_int(line.tokens[0], line.number));
    p.first = parse_int(line.tokens[1], line.number);
    if (p.first < 1) throw ParseError(line.number, "first access time must be >= 1");
    for (std::size_t k = 2; k < line.tokens.size(); ++k) {
      const ReuseValue v = parse_reuse(line.tokens[k], line.number);
      if (v.is_infinite()) throw ParseError(line.number, "per-datum reuses must be finite");
      p.reuses.push_back(v.value());
    }
    pd.profiles.push_back(std::move(p));
  }
  return pd;
}

std::string format_sequence(const ReuseSequence& seq) {
  std::ostringstream os;
  os << "#kind=" << to_string(seq.kind) << '\n';
  for (auto v : seq.values) os << v << '\n';
  return os.str();
}

ReuseSequence parse_sequence(std::string_view text) {
  const Document doc = split(text);
  ReuseSequence seq;
  seq.kind = parse_kind(doc);
  for (const auto& line : doc.lines) {
    if (line.tokens.size() != 1) throw ParseError(line.number, "expected one reuse value");
    seq.values.push_back(parse_reuse(line.tokens[0], line.number));
  }
  return seq;
}

InputKind sniff_input_kind(std::string_view text) {
  const Document doc = split(text);
  if (header(doc, "n") || header(doc, "m")) return InputKind::Histogram;
  for (const auto& line : doc.lines)
    if (line.tokens.size() > 1) return InputKind::Profiles;
  return InputKind::Sequence;
}

std::string footprint_csv(const FootprintCurve& c) {
  std::ostringstream os;
  os << "x,window_count,total_wss,fp,fp_float\n";
  for (Time x = 0; x <= c.max_window(); ++x) {
    const Rational fp = c.fp(x);
    os << x << ',' << c.window_count(x) << ',' << c.total(x) << ',' << to_string(fp) << ','
       << to_double(fp) << '\n';
  }
  return os.str();
}

std::string steady_state_csv(const SteadyStateCurve& c) {
  std::ostringstream os;
  os << "x,ss_fp,ss_fp_float\n";
  for (Time x = 0; x <= c.horizon(); ++x)
    os << x << ',' << to_string(c.at(x)) << ',' << to_double(c.at(x)) << '\n';
  return os.str();
}

std::string mrc_csv(const MissRatioCurve& c) {
  std::ostringstream os;
  os << "cache_size,miss_ratio,provenance\n";
  for (const auto& p : c.points())
    os << to_string(p.cache_size) << ',' << to_string(p.miss_ratio) << ','
       << to_string(c.provenance()) << '\n';
  return os.str();
}

std::string histogram_csv(const ReuseHistogram& h) {
  std::ostringstream os;
  os << "value,count\n";
  for (const auto& [v, c] : h.counts) os << v << ',' << c << '\n';
  os << "inf," << h.infinite_count << '\n';
  return os.str();
}

std::string binned_csv(const BinnedHistogram& b) {
  std::ostringstream os;
  os << "lo,hi,count\n";
  for (const auto& bin : b.bins) os << bin.lo << ',' << bin.hi << ',' << bin.count << '\n';
  os << "inf,inf," << b.infinite_count << '\n';
  return os.str();
}

}  // namespace locality
