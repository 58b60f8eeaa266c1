#include "unicyclic/majorization.hpp"

#include <cmath>
#include <cstdio>

#include "unicyclic/errors.hpp"

namespace unicyclic {

std::string to_string(Mode mode) { return mode == Mode::additive ? "additive" : "multiplicative"; }

std::string to_string(Convexity c) {
  switch (c) {
    case Convexity::strictly_convex: return "strictly_convex";
    case Convexity::strictly_concave: return "strictly_concave";
    case Convexity::neither: return "neither";
  }
  return "?";
}

FunctionSpec FunctionSpec::power(double alpha) {
  if (!std::isfinite(alpha)) throw ParameterError("power exponent must be finite");
  return {Family::power, alpha};
}

FunctionSpec FunctionSpec::exdeg(double a) {
  if (!(a > 0.0) || a == 1.0 || !std::isfinite(a)) {
    throw ParameterError("exdeg base must be positive and different from 1");
  }
  return {Family::exdeg, a};
}

FunctionSpec FunctionSpec::identity() { return {Family::identity, 0.0}; }
FunctionSpec FunctionSpec::self_power() { return {Family::self_power, 0.0}; }

FunctionSpec FunctionSpec::with_floor(int floor) const {
  if (floor != 1 && floor != 2) throw ParameterError("domain floor must be 1 or 2");
  FunctionSpec copy = *this;
  copy.floor_ = floor;
  return copy;
}

IndexValue FunctionSpec::apply(int t, Mode mode) const {
  if (t < floor_) {
    throw DomainError("argument " + std::to_string(t) + " below domain floor " + std::to_string(floor_));
  }
  switch (family_) {
    case Family::power: return power_value(t, parameter_);
    case Family::exdeg: return IndexValue(t) * real_power_value(parameter_, t);
    case Family::identity: return IndexValue(t);
    case Family::self_power:
      if (mode == Mode::multiplicative) return power_value(t, t);
      return IndexValue(t * std::log(static_cast<double>(t)));
  }
  return {};
}

double FunctionSpec::log_apply(int t) const {
  const double x = t;
  switch (family_) {
    case Family::power: return parameter_ * std::log(x);
    case Family::exdeg: return std::log(x) + x * std::log(parameter_);
    case Family::identity: return std::log(x);
    case Family::self_power: return x * std::log(x);
  }
  return 0.0;
}

std::string FunctionSpec::to_string() const {
  char buf[64];
  switch (family_) {
    case Family::power: std::snprintf(buf, sizeof buf, "power(%.12g)", parameter_); return buf;
    case Family::exdeg: std::snprintf(buf, sizeof buf, "exdeg(%.12g)", parameter_); return buf;
    case Family::identity: return "identity";
    case Family::self_power: return "self_power";
  }
  return "?";
}

Convexity convexity_class(const FunctionSpec& f) {
  switch (f.family()) {
    case FunctionSpec::Family::power: {
      // t^alpha has the same sign of f'' on [1,inf) and [2,inf).
      const double alpha = f.parameter();
      if (alpha < 0.0 || alpha > 1.0) return Convexity::strictly_convex;
      if (alpha > 0.0 && alpha < 1.0) return Convexity::strictly_concave;
      return Convexity::neither;
    }
    case FunctionSpec::Family::exdeg: {
      // f''(t) = a^t log a (2 + t log a): for a < 1 it is >= 0 on [floor, inf)
      // iff log a <= -2/floor.
      const double a = f.parameter();
      if (a > 1.0) return Convexity::strictly_convex;
      const double threshold = std::exp(-2.0 / f.domain_floor());
      return a <= threshold ? Convexity::strictly_convex : Convexity::neither;
    }
    case FunctionSpec::Family::identity: return Convexity::neither;
    case FunctionSpec::Family::self_power: return Convexity::strictly_convex;
  }
  return Convexity::neither;
}

Convexity log_convexity_class(const FunctionSpec& f) {
  switch (f.family()) {
    case FunctionSpec::Family::power: {
      // log t^alpha = alpha log t
      const double alpha = f.parameter();
      if (alpha < 0.0) return Convexity::strictly_convex;
      if (alpha > 0.0) return Convexity::strictly_concave;
      return Convexity::neither;
    }
    case FunctionSpec::Family::exdeg: return Convexity::strictly_concave;  // log t + t log a
    case FunctionSpec::Family::identity: return Convexity::strictly_concave;
    case FunctionSpec::Family::self_power: return Convexity::strictly_convex;  // t log t
  }
  return Convexity::neither;
}

Convexity schur_class(const FunctionSpec& f, Mode mode) {
  return mode == Mode::additive ? convexity_class(f) : log_convexity_class(f);
}

bool majorizes(const DegreeSequence& x, const DegreeSequence& y) {
  if (x.length() != y.length()) {
    throw ParameterError("majorization requires equal lengths (" + std::to_string(x.length()) + " vs " +
                         std::to_string(y.length()) + ")");
  }
  long long px = 0;
  long long py = 0;
  for (std::size_t k = 0; k < x.length(); ++k) {
    px += x[k];
    py += y[k];
    if (k + 1 < x.length() && px < py) return false;
  }
  return px == py;
}

IndexValue schur_value(const FunctionSpec& f, const DegreeSequence& x, Mode mode) {
  IndexValue acc = mode == Mode::additive ? IndexValue(0) : IndexValue(1);
  // Group equal entries: the sequence is sorted, so runs are contiguous.
  std::size_t i = 0;
  while (i < x.length()) {
    std::size_t j = i;
    while (j < x.length() && x[j] == x[i]) ++j;
    const auto run = static_cast<unsigned>(j - i);
    const IndexValue term = f.apply(x[i], mode);
    if (mode == Mode::additive) {
      acc += IndexValue(static_cast<long long>(run)) * term;
    } else {
      acc *= term.pow(run);
    }
    i = j;
  }
  return acc;
}

bool in_class(const DegreeSequence& x, const SequenceClass& c) {
  return std::visit(
      [&](const auto& cls) {
        using T = std::decay_t<decltype(cls)>;
        const auto n = static_cast<std::size_t>(cls.n);
        if (cls.n < 1 || x.length() != n || x.sum() != 2LL * cls.n) return false;
        if constexpr (std::is_same_v<T, S2nDelta>) {
          return x[0] == cls.max_degree;
        } else if constexpr (std::is_same_v<T, S2nP>) {
          if (cls.pendants < 0 || cls.pendants > cls.n) return false;
          for (std::size_t j = 0; j < n; ++j) {
            const bool tail = j >= n - static_cast<std::size_t>(cls.pendants);
            if ((x[j] == 1) != tail) return false;
          }
          return true;
        } else {
          return true;
        }
      },
      c);
}

OrderingReport verify_schur_monotonicity(const FunctionSpec& f, const DegreeSequence& x,
                                         const DegreeSequence& y, Mode mode, double tolerance) {
  if (!majorizes(x, y)) throw ParameterError("first sequence does not majorize the second");
  OrderingReport report;
  report.predicted = schur_class(f, mode);
  report.value_major = schur_value(f, x, mode);
  report.value_minor = schur_value(f, y, mode);
  report.equal_sequences = x == y;
  report.strict_expected = !report.equal_sequences && report.predicted != Convexity::neither;
  const auto order = compare(report.value_major, report.value_minor, tolerance);
  switch (report.predicted) {
    case Convexity::strictly_convex:
      report.ordering_holds = order >= 0;
      report.strict_holds = order > 0;
      break;
    case Convexity::strictly_concave:
      report.ordering_holds = order <= 0;
      report.strict_holds = order < 0;
      break;
    case Convexity::neither:
      report.ordering_holds = true;
      report.strict_holds = order != 0;
      break;
  }
  return report;
}

}  // namespace unicyclic
