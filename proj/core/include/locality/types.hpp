#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/rational.hpp>

namespace locality {

/// Dense data identifier. AI-normalized traces use 1..m.
using DataId = std::uint32_t;

/// Logical time. Access times are 1-based; window lengths and reuse values
/// share the same integer domain.
using Time = std::int64_t;

using Rational = boost::rational<std::int64_t>;

enum class ReuseKind { Time, Distance };

/// Whether first accesses (infinite reuse) count toward tail probabilities.
enum class ColdPolicy { Include, Exclude };

const char* to_string(ReuseKind kind);
const char* to_string(ColdPolicy policy);

/// Renders `p/q`, or `p` when the denominator is 1.
std::string to_string(const Rational& r);
double to_double(const Rational& r);

/// A rational time or an explicit infinity (e.g. inter-miss time at mr = 0).
class ExtendedTime {
 public:
  static ExtendedTime infinite() { return ExtendedTime{}; }
  static ExtendedTime finite(Rational v) { return ExtendedTime{v}; }

  bool is_infinite() const { return !value_.has_value(); }
  const Rational& value() const;

  friend bool operator==(const ExtendedTime&, const ExtendedTime&) = default;

 private:
  ExtendedTime() = default;
  explicit ExtendedTime(Rational v) : value_(v) {}

  std::optional<Rational> value_;
};

std::ostream& operator<<(std::ostream& os, const ExtendedTime& t);

/// Malformed text input. `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Inconsistent measurement input. `position` is the earliest offending
/// access time (1-based), or 0 when the error is not tied to a position.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(Time position, const std::string& what);
  Time position() const { return position_; }

 private:
  Time position_;
};

}  // namespace locality
