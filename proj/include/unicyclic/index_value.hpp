#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <optional>
#include <string>
#include <variant>

namespace unicyclic {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline constexpr double kDefaultTolerance = 1e-9;

/// Result of an index or bound evaluation.
///
/// Integer and rational values are exact; anything involving a non-integer
/// exponent or a transcendental base is a float64. Mixing promotes
/// integer -> rational -> float64.
class IndexValue {
 public:
  enum class Mode { exact_integer, exact_rational, float64 };

  IndexValue() : value_(BigInt(0)) {}
  IndexValue(BigInt v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  IndexValue(BigRational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  IndexValue(double v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  IndexValue(long long v) : value_(BigInt(v)) {}  // NOLINT(google-explicit-constructor)
  IndexValue(int v) : value_(BigInt(v)) {}  // NOLINT(google-explicit-constructor)

  Mode mode() const noexcept { return static_cast<Mode>(value_.index()); }
  bool is_exact() const noexcept { return mode() != Mode::float64; }

  double to_double() const;

  /// Exact value as a rational; empty for float64.
  std::optional<BigRational> exact() const;

  /// Integer value when the value is an integer-tagged exact, else empty.
  const BigInt* integer() const { return std::get_if<BigInt>(&value_); }

  /// 12 significant digits for floats; integers verbatim; rationals as p/q.
  std::string to_string() const;

  /// Integers verbatim, everything else at 12 significant digits.
  std::string to_decimal() const;

  IndexValue& operator+=(const IndexValue& rhs);
  IndexValue& operator-=(const IndexValue& rhs);
  IndexValue& operator*=(const IndexValue& rhs);

  friend IndexValue operator+(IndexValue a, const IndexValue& b) { return a += b; }
  friend IndexValue operator-(IndexValue a, const IndexValue& b) { return a -= b; }
  friend IndexValue operator*(IndexValue a, const IndexValue& b) { return a *= b; }

  /// Exact division when both sides are exact.
  friend IndexValue operator/(const IndexValue& a, const IndexValue& b);

  /// Non-negative integer power, exact for exact bases.
  IndexValue pow(unsigned exponent) const;

  /// Structural equality: same mode, same stored value.
  friend bool operator==(const IndexValue& a, const IndexValue& b) { return a.value_ == b.value_; }

 private:
  std::variant<BigInt, BigRational, double> value_;
};

std::string to_string(IndexValue::Mode mode);

/// Exact comparison when both operands are exact; otherwise float comparison
/// where |a-b| <= tolerance * max(1, |b|) counts as equal.
std::weak_ordering compare(const IndexValue& a, const IndexValue& b, double tolerance = kDefaultTolerance);

inline bool approx_equal(const IndexValue& a, const IndexValue& b, double tolerance = kDefaultTolerance) {
  return compare(a, b, tolerance) == 0;
}

/// |a-b| / max(1,|b|) in floating point; 0 for exactly equal exact values.
double relative_difference(const IndexValue& a, const IndexValue& b);

/// base^exponent: exact integer for integral exponent >= 0, exact rational for
/// integral exponent < 0, float64 otherwise. base must be positive for
/// negative or fractional exponents.
IndexValue power_value(long long base, double exponent);

/// base^exponent for a real base: exact when the base is integral and the
/// exponent a non-negative integer, float64 otherwise.
IndexValue real_power_value(double base, long long exponent);

bool is_integral(double x) noexcept;

}  // namespace unicyclic
