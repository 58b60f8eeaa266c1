#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "unicyclic/graph.hpp"
#include "unicyclic/index_value.hpp"
#include "unicyclic/majorization.hpp"

namespace unicyclic {

enum class IndexKind { M1_alpha, M2_alpha, SEI, NK, NK_star, M1, F, ID, wiener };

/// A named topological index. M1, F and ID are the alpha = 2, 3, -1 cases
/// of the variable first Zagreb index M1_alpha.
struct IndexSpec {
  IndexKind kind = IndexKind::M1;
  double parameter = 0.0;  // alpha for M1_alpha/M2_alpha, a for SEI

  static IndexSpec m1_alpha(double alpha) { return {IndexKind::M1_alpha, alpha}; }
  static IndexSpec m2_alpha(double alpha) { return {IndexKind::M2_alpha, alpha}; }
  /// Throws ParameterError unless a > 0 and a != 1.
  static IndexSpec sei(double a);
  static IndexSpec nk() { return {IndexKind::NK, 0.0}; }
  static IndexSpec nk_star() { return {IndexKind::NK_star, 0.0}; }
  static IndexSpec m1() { return {IndexKind::M1, 0.0}; }
  static IndexSpec f() { return {IndexKind::F, 0.0}; }
  static IndexSpec id() { return {IndexKind::ID, 0.0}; }
  static IndexSpec wiener() { return {IndexKind::wiener, 0.0}; }

  std::string name() const;

  friend bool operator==(const IndexSpec&, const IndexSpec&) = default;
};

/// I_f (additive) or II_f (multiplicative) for an arbitrary FunctionSpec.
struct GenericIndex {
  FunctionSpec function;
  Mode mode = Mode::additive;

  std::string name() const;

  friend bool operator==(const GenericIndex&, const GenericIndex&) = default;
};

using Objective = std::variant<IndexSpec, GenericIndex>;

std::string name(const Objective& objective);

/// Parses "M1", "F", "ID", "NK", "NK*", "W", "R" (Randic, M2^-1/2),
/// "M1a:<alpha>", "M2a:<alpha>", "SEI:<a>".
IndexSpec parse_index_spec(std::string_view text);

/// Also accepts generic forms "I:<fn>" / "II:<fn>" with
/// <fn> = power:<alpha> | exdeg:<a> | identity | self_power.
Objective parse_objective(std::string_view text);

/// The vertex-sum form of a named index as a generic one: M1_alpha -> I(power),
/// SEI -> I(exdeg), NK -> II(identity), NK* -> II(self_power). Empty for
/// M2_alpha and wiener, which have no vertex form.
std::optional<GenericIndex> vertex_form(const IndexSpec& spec);

/// Evaluates the index. Degree-based indices reject isolated vertices with a
/// DomainError; the Wiener index rejects disconnected graphs.
IndexValue eval(const IndexSpec& spec, const Graph& g);

/// Edge-sum / edge-product form, defined for SEI, NK_star and M2_alpha.
IndexValue eval_edge_form(const IndexSpec& spec, const Graph& g);

IndexValue generic_I(const FunctionSpec& f, const Graph& g);
IndexValue generic_II(const FunctionSpec& f, const Graph& g);

IndexValue eval(const Objective& objective, const Graph& g);

/// Objective evaluated on a degree sequence (vertex-based objectives only).
IndexValue eval_on_sequence(const Objective& objective, const DegreeSequence& x);

}  // namespace unicyclic
