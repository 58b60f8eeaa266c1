#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "unicyclic/graph.hpp"

namespace unicyclic::testing {

inline Graph graph_of(int n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.push_back({u, v});
  return Graph(n, list);
}

inline std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Random spanning tree plus `extra` random chords; connected by construction.
inline Graph random_connected(int n, int extra, std::mt19937& rng) {
  std::set<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.insert({u, v});
  }
  const int max_edges = n * (n - 1) / 2;
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (extra > 0 && static_cast<int>(edges.size()) < max_edges) {
    int u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (edges.insert({u, v}).second) --extra;
  }
  std::vector<Edge> list;
  for (auto [u, v] : edges) list.push_back({u, v});
  return Graph(n, list);
}

inline Graph random_unicyclic(int n, std::mt19937& rng) { return random_connected(n, 1, rng); }

/// Isomorphism by trying every permutation; n <= 8.
inline bool brute_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  auto da = a.degrees(), db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (a.relabeled(perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace unicyclic::testing
