#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unicyclic {

struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Edges are stored as (min,max) pairs, sorted and deduplicated. Connectivity
/// is not an invariant of the type; see is_connected().
class Graph {
 public:
  Graph() = default;

  /// Throws ParameterError on n < 1, self-loops, or endpoints outside 0..n-1.
  Graph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Degree of each vertex, indexed by vertex.
  std::vector<int> degrees() const;
  std::vector<std::vector<int>> adjacency() const;

  /// Relabels vertex v as perm[v].
  Graph relabeled(std::span<const int> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

/// Non-increasing tuple of positive integers.
class DegreeSequence {
 public:
  DegreeSequence() = default;

  /// Throws ParameterError unless values are non-increasing and all >= 1.
  explicit DegreeSequence(std::vector<int> values);

  /// Sorts into non-increasing order first.
  static DegreeSequence from_unsorted(std::vector<int> values);

  std::size_t length() const noexcept { return values_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }
  const std::vector<int>& values() const noexcept { return values_; }
  auto begin() const noexcept { return values_.begin(); }
  auto end() const noexcept { return values_.end(); }

  long long sum() const;
  std::string to_string() const;

  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> values_;
};

/// Parses a single graph in the edge-list format:
///   first non-comment line: n
///   following lines:        "u v"
/// '#' starts a comment line; blank lines are ignored; duplicate edges collapse.
Graph parse_edge_list(std::string_view text);

/// Parses a stream of graphs. Each line holding a single integer starts a new
/// record, so the output of `unicyclic enumerate` can be read back.
std::vector<Graph> parse_edge_list_stream(std::string_view text);

/// Emits n followed by the edges in (min,max) lexicographic order.
std::string serialize_edge_list(const Graph& g);

bool is_connected(const Graph& g);

/// Connected with exactly n edges.
bool is_unicyclic(const Graph& g);

/// Throws DomainError on an isolated vertex.
DegreeSequence degree_sequence(const Graph& g);

int max_degree(const Graph& g);
int pendant_count(const Graph& g);

/// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Induced subgraph on `vertices`, relabeled 0..k-1 in the given order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Opaque byte string identifying a graph up to isomorphism.
struct CanonicalCode {
  std::string bytes;

  std::string hex() const;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

inline constexpr int kMaxCanonicalOrder = 12;

/// canonical_permutation(g)[v] is the canonical position of vertex v.
/// Throws ParameterError when n > kMaxCanonicalOrder.
std::vector<int> canonical_permutation(const Graph& g);

CanonicalCode canonical_code(const Graph& g);

/// g relabeled by canonical_permutation; isomorphic graphs map to equal graphs.
Graph canonical_form(const Graph& g);

}  // namespace unicyclic
