#include "unicyclic/index_value.hpp"

#include <cmath>
#include <cstdio>

#include "unicyclic/errors.hpp"

namespace unicyclic {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

constexpr double kMaxExactExponent = 4096;

}  // namespace

bool is_integral(double x) noexcept { return std::isfinite(x) && std::floor(x) == x; }

std::string to_string(IndexValue::Mode mode) {
  switch (mode) {
    case IndexValue::Mode::exact_integer: return "exact_integer";
    case IndexValue::Mode::exact_rational: return "exact_rational";
    case IndexValue::Mode::float64: return "float64";
  }
  return "?";
}

double IndexValue::to_double() const {
  switch (mode()) {
    case Mode::exact_integer: return std::get<BigInt>(value_).convert_to<double>();
    case Mode::exact_rational: return std::get<BigRational>(value_).convert_to<double>();
    case Mode::float64: return std::get<double>(value_);
  }
  return 0.0;
}

std::optional<BigRational> IndexValue::exact() const {
  if (const auto* i = std::get_if<BigInt>(&value_)) return BigRational(*i);
  if (const auto* r = std::get_if<BigRational>(&value_)) return *r;
  return std::nullopt;
}

std::string IndexValue::to_string() const {
  switch (mode()) {
    case Mode::exact_integer: return std::get<BigInt>(value_).str();
    case Mode::exact_rational: {
      const auto& r = std::get<BigRational>(value_);
      if (denominator(r) == 1) return numerator(r).str();
      return numerator(r).str() + "/" + denominator(r).str();
    }
    case Mode::float64: return format_double(std::get<double>(value_));
  }
  return {};
}

std::string IndexValue::to_decimal() const {
  if (mode() == Mode::exact_integer) return to_string();
  if (mode() == Mode::exact_rational && denominator(std::get<BigRational>(value_)) == 1) return to_string();
  return format_double(to_double());
}

IndexValue& IndexValue::operator+=(const IndexValue& rhs) {
  if (!is_exact() || !rhs.is_exact()) {
    value_ = to_double() + rhs.to_double();
  } else if (mode() == Mode::exact_integer && rhs.mode() == Mode::exact_integer) {
    std::get<BigInt>(value_) += std::get<BigInt>(rhs.value_);
  } else {
    value_ = BigRational(*exact() + *rhs.exact());
  }
  return *this;
}

IndexValue& IndexValue::operator-=(const IndexValue& rhs) {
  if (!is_exact() || !rhs.is_exact()) {
    value_ = to_double() - rhs.to_double();
  } else if (mode() == Mode::exact_integer && rhs.mode() == Mode::exact_integer) {
    std::get<BigInt>(value_) -= std::get<BigInt>(rhs.value_);
  } else {
    value_ = BigRational(*exact() - *rhs.exact());
  }
  return *this;
}

IndexValue& IndexValue::operator*=(const IndexValue& rhs) {
  if (!is_exact() || !rhs.is_exact()) {
    value_ = to_double() * rhs.to_double();
  } else if (mode() == Mode::exact_integer && rhs.mode() == Mode::exact_integer) {
    std::get<BigInt>(value_) *= std::get<BigInt>(rhs.value_);
  } else {
    value_ = BigRational(*exact() * *rhs.exact());
  }
  return *this;
}

IndexValue operator/(const IndexValue& a, const IndexValue& b) {
  if (a.is_exact() && b.is_exact()) {
    const auto denom = *b.exact();
    if (denom == 0) throw DomainError("division by zero");
    return IndexValue(BigRational(*a.exact() / denom));
  }
  return IndexValue(a.to_double() / b.to_double());
}

IndexValue IndexValue::pow(unsigned exponent) const {
  switch (mode()) {
    case Mode::exact_integer: return IndexValue(BigInt(boost::multiprecision::pow(std::get<BigInt>(value_), exponent)));
    case Mode::exact_rational: {
      const auto& r = std::get<BigRational>(value_);
      return IndexValue(BigRational(BigInt(boost::multiprecision::pow(numerator(r), exponent)),
                                    BigInt(boost::multiprecision::pow(denominator(r), exponent))));
    }
    case Mode::float64: return IndexValue(std::pow(std::get<double>(value_), static_cast<double>(exponent)));
  }
  return {};
}

std::weak_ordering compare(const IndexValue& a, const IndexValue& b, double tolerance) {
  if (a.is_exact() && b.is_exact()) {
    if (a.integer() && b.integer()) {
      const auto& x = *a.integer();
      const auto& y = *b.integer();
      return x < y ? std::weak_ordering::less : (y < x ? std::weak_ordering::greater : std::weak_ordering::equivalent);
    }
    const auto x = *a.exact();
    const auto y = *b.exact();
    return x < y ? std::weak_ordering::less : (y < x ? std::weak_ordering::greater : std::weak_ordering::equivalent);
  }
  const double x = a.to_double();
  const double y = b.to_double();
  if (std::isnan(x) || std::isnan(y)) throw DomainError("comparison with NaN");
  if (std::fabs(x - y) <= tolerance * std::max(1.0, std::fabs(y))) return std::weak_ordering::equivalent;
  return x < y ? std::weak_ordering::less : std::weak_ordering::greater;
}

double relative_difference(const IndexValue& a, const IndexValue& b) {
  if (a.is_exact() && b.is_exact()) {
    const BigRational d = *a.exact() - *b.exact();
    if (d == 0) return 0.0;
    const double mag = std::max(1.0, std::fabs(b.to_double()));
    return std::fabs(d.convert_to<double>()) / mag;
  }
  const double y = b.to_double();
  return std::fabs(a.to_double() - y) / std::max(1.0, std::fabs(y));
}

IndexValue power_value(long long base, double exponent) {
  if (is_integral(exponent) && std::fabs(exponent) <= kMaxExactExponent) {
    const auto k = static_cast<long long>(exponent);
    if (k >= 0) return IndexValue(BigInt(boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(k))));
    if (base == 0) throw DomainError("zero raised to a negative power");
    return IndexValue(BigRational(BigInt(1), BigInt(boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(-k)))));
  }
  if (base <= 0) throw DomainError("non-positive base with a non-integer exponent");
  return IndexValue(std::pow(static_cast<double>(base), exponent));
}

IndexValue real_power_value(double base, long long exponent) {
  if (exponent >= 0 && is_integral(base) && std::fabs(base) <= 9007199254740992.0) {
    return IndexValue(BigInt(boost::multiprecision::pow(BigInt(static_cast<long long>(base)), static_cast<unsigned>(exponent))));
  }
  return IndexValue(std::pow(base, static_cast<double>(exponent)));
}

}  // namespace unicyclic
