#pragma once

#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "unicyclic/extremal.hpp"
#include "unicyclic/graph.hpp"
#include "unicyclic/index_value.hpp"
#include "unicyclic/indices.hpp"
#include "unicyclic/majorization.hpp"

namespace unicyclic {

enum class Side { lower, upper };
enum class Restriction { none, max_degree, pendants };
enum class Sharpness { iff, attained };
enum class SharpFamily { cycle, un_three, H, K, seq_a, seq_b };
enum class BoundIndex { I_f, II_f, M1_alpha, M1, F, ID, SEI, NK, NK_star };
enum class ParamKind { none, alpha, base, function };

std::string to_string(Side side);
std::string to_string(Restriction restriction);
std::string to_string(BoundIndex index);

struct Alpha {
  double value;
  friend bool operator==(const Alpha&, const Alpha&) = default;
};

/// The base a of SEI_a.
struct ExpBase {
  double value;
  friend bool operator==(const ExpBase&, const ExpBase&) = default;
};

using BoundParam = std::variant<std::monostate, Alpha, ExpBase, FunctionSpec>;

std::string to_string(const BoundParam& param);

/// The (n, Delta, p) a bound is evaluated at. Restricted bounds require the
/// matching field.
struct Cell {
  int n = 0;
  std::optional<int> max_degree;
  std::optional<int> pendants;
};

/// One bound: which index, which side, under which
/// restriction and parameter range, its closed form, and where it is sharp.
struct BoundSpec {
  std::string id;
  BoundIndex index;
  /// Convexity of f (additive) or log f (multiplicative) the bound relies on.
  Convexity regime;
  Side side;
  Restriction restriction;
  Sharpness sharpness;
  SharpFamily sharp_at;
  /// Convexity is required on [floor, inf): 1 for unrestricted and
  /// Delta-restricted bounds, 2 for pendant-restricted ones.
  int convexity_floor;
  std::string source;

  /// Empty when the parameter is admissible, else the violated clause.
  std::function<std::optional<std::string>(const BoundParam&)> param_violation;
  std::function<IndexValue(const Cell&, const BoundParam&)> formula;

  ParamKind param_kind() const;
  Mode mode() const;
  Objective objective(const BoundParam& param) const;
  ExtremalFamily sharp_family(const Cell& cell) const;

  /// Empty when the bound applies at (cell, param), else the violated clause.
  std::optional<std::string> violation(const Cell& cell, const BoundParam& param) const;
};

/// Every bound, in a fixed order. Ids are stable.
const std::vector<BoundSpec>& catalog();

/// Throws ParameterError for an unknown id.
const BoundSpec& find_bound(std::string_view id);

/// Closed-form value. Throws ParameterError naming the violated clause when
/// the bound does not apply.
IndexValue eval_bound(const BoundSpec& bound, const Cell& cell, const BoundParam& param = {});

/// Parameter values an audit sweeps over.
struct ParameterGrid {
  std::vector<double> alphas{-2.0, -1.0, -0.5, 0.5, 2.0, 3.0};
  std::vector<double> bases{0.1, std::exp(-2.0), std::exp(-1.0), 2.0};

  static ParameterGrid defaults();

  /// power(alpha) for every alpha, exdeg(a) for every base, identity, self_power.
  std::vector<FunctionSpec> functions() const;

  /// Grid values of the bound's parameter kind that satisfy its parameter range.
  std::vector<BoundParam> params_for(const BoundSpec& bound) const;
};

struct AuditOptions {
  ParameterGrid grid = ParameterGrid::defaults();
  double tolerance = kDefaultTolerance;
};

struct AuditRow {
  std::string bound_id;
  BoundParam param;
  bool applicable = false;
  IndexValue value;
  IndexValue bound_value;
  bool satisfied = false;
  bool tight = false;
  bool member = false;
  bool iff = false;
  /// The parameter sits on the endpoint of a closed convexity range.
  bool boundary = false;

  bool sharpness_ok() const noexcept { return !applicable || !iff || tight == member; }
  bool ok() const noexcept { return !applicable || (satisfied && sharpness_ok()); }
};

struct AuditReport {
  int n = 0;
  int max_degree = 0;
  int pendants = 0;
  CanonicalCode code;
  std::vector<AuditRow> rows;

  std::size_t violations() const;
  std::size_t sharpness_failures() const;
  bool clean() const { return violations() == 0 && sharpness_failures() == 0; }
};

/// Audits a unicyclic graph against every catalog bound over the grid.
/// Rows are emitted for every (bound, admissible grid parameter); rows whose
/// restriction does not hold for this graph have applicable == false.
/// n == 3 yields no rows (only C_3 exists). Throws DomainError for
/// non-unicyclic input.
AuditReport audit(const Graph& g, const AuditOptions& options = {});

/// Human-readable report; inapplicable rows are omitted.
std::string render_text(const AuditReport& report, std::string_view graph_id);

inline constexpr std::string_view kAuditTabularHeader =
    "graph_id,bound_id,param,value,bound_value,satisfied,tight,member";

/// One CSV line per applicable row, without the header.
std::string render_tabular(const AuditReport& report, std::string_view graph_id);

}  // namespace unicyclic
