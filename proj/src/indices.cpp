#include "unicyclic/indices.hpp"

#include <cmath>
#include <queue>

#include "unicyclic/errors.hpp"
#include "unicyclic/text.hpp"

namespace unicyclic {

namespace {

void require_no_isolated(const Graph& g) {
  const auto deg = g.degrees();
  for (int v = 0; v < g.order(); ++v) {
    if (deg[v] == 0) throw DomainError("degree-based index on a graph with isolated vertex " + std::to_string(v));
  }
}

IndexValue wiener_index(const Graph& g) {
  if (!is_connected(g)) throw DomainError("Wiener index requires a connected graph");
  const auto adj = g.adjacency();
  BigInt total = 0;
  std::vector<int> dist(g.order());
  for (int s = 0; s < g.order(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> frontier;
    frontier.push(s);
    dist[s] = 0;
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int w : adj[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          frontier.push(w);
        }
      }
    }
    for (int t = s + 1; t < g.order(); ++t) total += dist[t];
  }
  return IndexValue(total);
}

}  // namespace

IndexSpec IndexSpec::sei(double a) {
  if (!(a > 0.0) || a == 1.0 || !std::isfinite(a)) {
    throw ParameterError("SEI base must be positive and different from 1");
  }
  return {IndexKind::SEI, a};
}

std::string IndexSpec::name() const {
  switch (kind) {
    case IndexKind::M1_alpha: return "M1a:" + format_real(parameter);
    case IndexKind::M2_alpha: return "M2a:" + format_real(parameter);
    case IndexKind::SEI: return "SEI:" + format_real(parameter);
    case IndexKind::NK: return "NK";
    case IndexKind::NK_star: return "NK*";
    case IndexKind::M1: return "M1";
    case IndexKind::F: return "F";
    case IndexKind::ID: return "ID";
    case IndexKind::wiener: return "W";
  }
  return "?";
}

std::string GenericIndex::name() const {
  std::string fn;
  switch (function.family()) {
    case FunctionSpec::Family::power: fn = "power:" + format_real(function.parameter()); break;
    case FunctionSpec::Family::exdeg: fn = "exdeg:" + format_real(function.parameter()); break;
    case FunctionSpec::Family::identity: fn = "identity"; break;
    case FunctionSpec::Family::self_power: fn = "self_power"; break;
  }
  return (mode == Mode::additive ? "I:" : "II:") + fn;
}

std::string name(const Objective& objective) {
  return std::visit([](const auto& o) { return o.name(); }, objective);
}

IndexSpec parse_index_spec(std::string_view text) {
  const auto colon = text.find(':');
  const std::string head(text.substr(0, colon));
  const std::string_view tail = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto needs_param = [&](const char* what) {
    if (tail.empty()) throw ParameterError(std::string(what) + " requires a parameter, e.g. " + what + ":2");
    return parse_real(tail);
  };
  auto no_param = [&] {
    if (colon != std::string_view::npos) throw ParameterError("index " + head + " takes no parameter");
  };
  if (head == "M1a") return IndexSpec::m1_alpha(needs_param("M1a"));
  if (head == "M2a") return IndexSpec::m2_alpha(needs_param("M2a"));
  if (head == "SEI") return IndexSpec::sei(needs_param("SEI"));
  no_param();
  if (head == "M1") return IndexSpec::m1();
  if (head == "F") return IndexSpec::f();
  if (head == "ID") return IndexSpec::id();
  if (head == "NK") return IndexSpec::nk();
  if (head == "NK*" || head == "NKstar") return IndexSpec::nk_star();
  if (head == "W") return IndexSpec::wiener();
  if (head == "R") return IndexSpec::m2_alpha(-0.5);
  throw ParameterError("unknown index '" + std::string(text) + "'");
}

Objective parse_objective(std::string_view text) {
  Mode mode;
  std::string_view rest;
  if (text.starts_with("II:")) {
    mode = Mode::multiplicative;
    rest = text.substr(3);
  } else if (text.starts_with("I:")) {
    mode = Mode::additive;
    rest = text.substr(2);
  } else {
    return parse_index_spec(text);
  }
  if (rest == "identity") return GenericIndex{FunctionSpec::identity(), mode};
  if (rest == "self_power") return GenericIndex{FunctionSpec::self_power(), mode};
  if (rest.starts_with("power:")) return GenericIndex{FunctionSpec::power(parse_real(rest.substr(6))), mode};
  if (rest.starts_with("exdeg:")) return GenericIndex{FunctionSpec::exdeg(parse_real(rest.substr(6))), mode};
  throw ParameterError("unknown function '" + std::string(rest) + "'");
}

std::optional<GenericIndex> vertex_form(const IndexSpec& spec) {
  switch (spec.kind) {
    case IndexKind::M1_alpha: return GenericIndex{FunctionSpec::power(spec.parameter), Mode::additive};
    case IndexKind::M1: return GenericIndex{FunctionSpec::power(2), Mode::additive};
    case IndexKind::F: return GenericIndex{FunctionSpec::power(3), Mode::additive};
    case IndexKind::ID: return GenericIndex{FunctionSpec::power(-1), Mode::additive};
    case IndexKind::SEI: return GenericIndex{FunctionSpec::exdeg(spec.parameter), Mode::additive};
    case IndexKind::NK: return GenericIndex{FunctionSpec::identity(), Mode::multiplicative};
    case IndexKind::NK_star: return GenericIndex{FunctionSpec::self_power(), Mode::multiplicative};
    case IndexKind::M2_alpha:
    case IndexKind::wiener: return std::nullopt;
  }
  return std::nullopt;
}

IndexValue generic_I(const FunctionSpec& f, const Graph& g) {
  return schur_value(f, degree_sequence(g), Mode::additive);
}

IndexValue generic_II(const FunctionSpec& f, const Graph& g) {
  return schur_value(f, degree_sequence(g), Mode::multiplicative);
}

IndexValue eval(const IndexSpec& spec, const Graph& g) {
  if (spec.kind == IndexKind::wiener) return wiener_index(g);
  if (spec.kind == IndexKind::M2_alpha) return eval_edge_form(spec, g);
  const auto form = vertex_form(spec);
  return form->mode == Mode::additive ? generic_I(form->function, g) : generic_II(form->function, g);
}

IndexValue eval_edge_form(const IndexSpec& spec, const Graph& g) {
  require_no_isolated(g);
  const auto deg = g.degrees();
  switch (spec.kind) {
    case IndexKind::SEI: {
      IndexValue sum(0);
      for (const auto& e : g.edges()) {
        sum += real_power_value(spec.parameter, deg[e.u]) + real_power_value(spec.parameter, deg[e.v]);
      }
      return sum;
    }
    case IndexKind::NK_star: {
      BigInt product = 1;
      for (const auto& e : g.edges()) product *= BigInt(deg[e.u]) * deg[e.v];
      return IndexValue(product);
    }
    case IndexKind::M2_alpha: {
      IndexValue sum(0);
      for (const auto& e : g.edges()) {
        sum += power_value(static_cast<long long>(deg[e.u]) * deg[e.v], spec.parameter);
      }
      return sum;
    }
    default: throw ParameterError("index " + spec.name() + " has no edge form");
  }
}

IndexValue eval(const Objective& objective, const Graph& g) {
  if (const auto* spec = std::get_if<IndexSpec>(&objective)) return eval(*spec, g);
  const auto& generic = std::get<GenericIndex>(objective);
  return schur_value(generic.function, degree_sequence(g), generic.mode);
}

IndexValue eval_on_sequence(const Objective& objective, const DegreeSequence& x) {
  if (const auto* spec = std::get_if<IndexSpec>(&objective)) {
    const auto form = vertex_form(*spec);
    if (!form) throw ParameterError("index " + spec->name() + " is not a function of the degree sequence");
    return schur_value(form->function, x, form->mode);
  }
  const auto& generic = std::get<GenericIndex>(objective);
  return schur_value(generic.function, x, generic.mode);
}

}  // namespace unicyclic
