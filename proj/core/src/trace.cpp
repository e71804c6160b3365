#include "locality/trace.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <unordered_map>

namespace locality {

const char* to_string(ReuseKind kind) { return kind == ReuseKind::Time ? "rt" : "rd"; }

const char* to_string(ColdPolicy policy) {
  return policy == ColdPolicy::Include ? "include" : "exclude";
}

std::string to_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

const Rational& ExtendedTime::value() const {
  if (!value_) throw std::logic_error("ExtendedTime: value() on infinity");
  return *value_;
}

std::ostream& operator<<(std::ostream& os, const ExtendedTime& t) {
  if (t.is_infinite()) return os << "inf";
  return os << to_string(t.value());
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

ValidationError::ValidationError(Time position, const std::string& what)
    : std::runtime_error(position > 0 ? "position " + std::to_string(position) + ": " + what
                                      : what),
      position_(position) {}

Trace::Trace(std::span<const std::uint64_t> raw_ids) {
  std::unordered_map<std::uint64_t, DataId> names;
  std::vector<DataId> ids;
  ids.reserve(raw_ids.size());
  for (auto raw : raw_ids) {
    auto [it, fresh] = names.try_emplace(raw, static_cast<DataId>(names.size() + 1));
    ids.push_back(it->second);
  }
  normalize_and_index(std::move(ids));
}

Trace::Trace(std::vector<DataId> ids) { normalize_and_index(std::move(ids)); }

Trace::Trace(std::initializer_list<DataId> ids) : Trace(std::vector<DataId>(ids)) {}

void Trace::normalize_and_index(std::vector<DataId> ids) {
  // Rename in first-appearance order; identity on AI-normalized input.
  std::unordered_map<DataId, DataId> names;
  DataId next = 1;
  bool already_ai = true;
  for (auto id : ids) {
    if (id == next) {
      ++next;
    } else if (id == 0 || id > next) {
      already_ai = false;
      break;
    }
  }
  if (!already_ai) {
    for (auto& id : ids) {
      auto [it, fresh] = names.try_emplace(id, static_cast<DataId>(names.size() + 1));
      id = it->second;
    }
  }

  accesses_ = std::move(ids);
  for (std::size_t i = 0; i < accesses_.size(); ++i) {
    const DataId e = accesses_[i];
    const Time t = static_cast<Time>(i) + 1;
    if (e > first_.size()) {
      first_.push_back(t);
      last_.push_back(t);
      count_.push_back(0);
    }
    last_[e - 1] = t;
    ++count_[e - 1];
  }
}

std::vector<Time> Trace::reverse_last_accesses() const {
  std::vector<Time> out(last_.size());
  std::transform(last_.begin(), last_.end(), out.begin(),
                 [n = size()](Time l) { return n + 1 - l; });
  return out;
}

Rational Trace::hotness() const {
  if (empty()) return Rational{0};
  return Rational{size(), static_cast<Time>(distinct())};
}

std::ostream& operator<<(std::ostream& os, const Trace& t) {
  os << '[';
  for (std::size_t i = 0; i < t.accesses().size(); ++i) {
    if (i) os << ',';
    os << t.accesses()[i];
  }
  return os << ']';
}

Trace parse_trace(std::string_view text) {
  std::unordered_map<std::string, DataId> names;
  std::vector<DataId> ids;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; };
    std::size_t b = 0, e = line.size();
    while (b < e && ws(line[b])) ++b;
    while (e > b && ws(line[e - 1])) --e;
    line = line.substr(b, e - b);
    if (line.empty() || line.front() == '#') continue;
    if (std::any_of(line.begin(), line.end(), ws)) {
      throw ParseError(line_no, "expected one access token, got '" + std::string(line) + "'");
    }
    auto [it, fresh] = names.try_emplace(std::string(line), static_cast<DataId>(names.size() + 1));
    ids.push_back(it->second);
  }
  return Trace(std::move(ids));
}

std::string format_trace(const Trace& t) {
  std::string out;
  out.reserve(static_cast<std::size_t>(t.size()) * 4);
  for (auto e : t.accesses()) {
    out += std::to_string(e);
    out += '\n';
  }
  return out;
}

Trace interleave(std::span<const Trace> traces) {
  std::vector<DataId> out;
  std::vector<DataId> offset(traces.size(), 0);
  std::size_t longest = 0;
  DataId base = 0;
  for (std::size_t k = 0; k < traces.size(); ++k) {
    offset[k] = base;
    base += static_cast<DataId>(traces[k].distinct());
    longest = std::max(longest, traces[k].accesses().size());
  }
  for (std::size_t i = 0; i < longest; ++i) {
    for (std::size_t k = 0; k < traces.size(); ++k) {
      auto acc = traces[k].accesses();
      if (i < acc.size()) out.push_back(acc[i] + offset[k]);
    }
  }
  return Trace(std::move(out));
}

Pattern parse_pattern(std::string_view name) {
  if (name == "cyclic") return Pattern::Cyclic;
  if (name == "sawtooth") return Pattern::Sawtooth;
  if (name == "fused") return Pattern::Fused;
  throw std::invalid_argument("unknown pattern '" + std::string(name) + "'");
}

}  // namespace locality
