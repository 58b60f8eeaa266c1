#pragma once

#include <optional>
#include <span>
#include <vector>

#include "unicyclic/graph.hpp"
#include "unicyclic/index_value.hpp"
#include "unicyclic/indices.hpp"

namespace unicyclic {

inline constexpr int kMinEnumerationOrder = 3;
inline constexpr int kMaxEnumerationOrder = 9;
inline constexpr int kMaxEdgeSubsetOrder = 7;

/// Conjunctive filter on maximum degree and pendant count.
struct EnumerationFilter {
  std::optional<int> max_degree;
  std::optional<int> pendants;

  /// Throws ParameterError when Delta < 2 or p < 0.
  void validate() const;
  bool accepts(const Graph& g) const;
};

/// Rooted tree with the root at vertex 0; parent[0] == -1, vertices in preorder.
struct RootedTree {
  std::vector<int> parent;

  int size() const noexcept { return static_cast<int>(parent.size()); }
};

/// All rooted trees on `size` vertices, one per isomorphism class.
std::vector<RootedTree> rooted_trees(int size);

/// One representative (in canonical form) per isomorphism class of connected
/// unicyclic graphs on n vertices, sorted by canonical code. Built from every
/// cycle length k and every assignment of rooted trees to the cycle vertices,
/// deduplicated by canonical code. Throws ParameterError unless 3 <= n <= 9.
std::vector<Graph> enumerate_unicyclic(int n, const EnumerationFilter& filter = {});

/// Independent generator: every n-edge subset of K_n that is connected,
/// canonicalized and deduplicated. Same output contract as
/// enumerate_unicyclic. Throws ParameterError unless 3 <= n <= 7.
std::vector<Graph> enumerate_unicyclic_by_edge_subsets(int n);

std::size_t count_classes(int n);

struct ExtremalEntry {
  CanonicalCode code;
  Graph graph;
  IndexValue value;
};

struct ExtremalSearchResult {
  Objective objective;
  std::size_t class_size = 0;
  std::vector<ExtremalEntry> minimizers;
  std::vector<ExtremalEntry> maximizers;

  bool empty() const noexcept { return class_size == 0; }
};

/// Exact minimum and maximum of `objective` over the filtered class, with every
/// attaining graph listed. Float ties use the relative tolerance. An empty
/// class yields an empty result, not an error.
ExtremalSearchResult extremal_search(const Objective& objective, int n, const EnumerationFilter& filter = {},
                                     double tolerance = kDefaultTolerance);

ExtremalSearchResult extremal_search(const Objective& objective, std::span<const Graph> graphs,
                                     double tolerance = kDefaultTolerance);

}  // namespace unicyclic
