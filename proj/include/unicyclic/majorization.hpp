#pragma once

#include <string>
#include <variant>

#include "unicyclic/graph.hpp"
#include "unicyclic/index_value.hpp"

namespace unicyclic {

/// Additive evaluates sum f(x_i); multiplicative evaluates prod f(x_i).
enum class Mode { additive, multiplicative };

enum class Convexity { strictly_convex, strictly_concave, neither };

std::string to_string(Mode mode);
std::string to_string(Convexity c);

/// Symbolic description of f in I_f / II_f.
///
///   power(alpha)  f(t) = t^alpha
///   exdeg(a)      f(t) = t a^t, a > 0, a != 1
///   identity      f(t) = t
///   self_power    f(t) = t log t (additive) / t^t (multiplicative)
///
/// domain_floor marks the interval [floor, inf) on which convexity claims are
/// made; evaluation below the floor is a domain error.
class FunctionSpec {
 public:
  enum class Family { power, exdeg, identity, self_power };

  static FunctionSpec power(double alpha);
  /// Throws ParameterError unless a > 0 and a != 1.
  static FunctionSpec exdeg(double a);
  static FunctionSpec identity();
  static FunctionSpec self_power();

  Family family() const noexcept { return family_; }
  double parameter() const noexcept { return parameter_; }
  int domain_floor() const noexcept { return floor_; }

  /// Same function with a different convexity floor (1 or 2).
  FunctionSpec with_floor(int floor) const;

  /// f(t), exact where the family allows it:
  ///  - power with integer alpha (rational for alpha < 0)
  ///  - exdeg with integral a
  ///  - identity, and self_power in multiplicative mode
  IndexValue apply(int t, Mode mode) const;

  /// log f(t) in floating point (multiplicative mode function).
  double log_apply(int t) const;

  std::string to_string() const;

  friend bool operator==(const FunctionSpec&, const FunctionSpec&) = default;

 private:
  FunctionSpec(Family family, double parameter) : family_(family), parameter_(parameter) {}

  Family family_ = Family::identity;
  double parameter_ = 0.0;
  int floor_ = 1;
};

/// Convexity of f on [f.domain_floor(), inf). Only the proven ranges are
/// reported; everything else is `neither`.
Convexity convexity_class(const FunctionSpec& f);

/// Convexity of log f on [f.domain_floor(), inf), for the multiplicative
/// reading of f.
Convexity log_convexity_class(const FunctionSpec& f);

/// convexity_class for additive mode, log_convexity_class for multiplicative.
Convexity schur_class(const FunctionSpec& f, Mode mode);

/// x majorizes y: equal totals and every proper prefix sum of x is >= y's.
/// Throws ParameterError on a length mismatch.
bool majorizes(const DegreeSequence& x, const DegreeSequence& y);

/// sum f(x_i) or prod f(x_i). Throws DomainError when an entry is below
/// f.domain_floor().
IndexValue schur_value(const FunctionSpec& f, const DegreeSequence& x, Mode mode);

struct S2n {
  int n;
};
struct S2nDelta {
  int n;
  int max_degree;
};
struct S2nP {
  int n;
  int pendants;
};

/// S_{2n}: length n, sum 2n. S_{2n}^Delta adds x_1 = Delta. S_{2n,p} adds
/// x_j = 1 exactly for the last p positions.
using SequenceClass = std::variant<S2n, S2nDelta, S2nP>;

bool in_class(const DegreeSequence& x, const SequenceClass& c);

struct OrderingReport {
  Convexity predicted = Convexity::neither;
  IndexValue value_major;  // Phi(x), x the majorizing sequence
  IndexValue value_minor;  // Phi(y)
  bool equal_sequences = false;
  bool strict_expected = false;  // x != y and strictness is claimed
  bool ordering_holds = false;   // Phi(x) >= Phi(y) (convex) or <= (concave)
  bool strict_holds = false;     // strict inequality observed

  bool consistent() const noexcept { return ordering_holds && (!strict_expected || strict_holds); }
};

/// Checks that Phi respects majorization as predicted by schur_class(f, mode).
/// Throws ParameterError unless x majorizes y.
OrderingReport verify_schur_monotonicity(const FunctionSpec& f, const DegreeSequence& x,
                                         const DegreeSequence& y, Mode mode,
                                         double tolerance = kDefaultTolerance);

}  // namespace unicyclic
