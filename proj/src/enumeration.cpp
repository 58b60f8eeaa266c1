#include "unicyclic/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "unicyclic/errors.hpp"

namespace unicyclic {

namespace {

void require_order(int n, int hi) {
  if (n < kMinEnumerationOrder || n > hi) {
    throw ParameterError("enumeration order must satisfy " + std::to_string(kMinEnumerationOrder) +
                         " <= n <= " + std::to_string(hi) + " (n = " + std::to_string(n) + ")");
  }
}

// Trees of size 1..max_size, grouped by size. A tree of size s is a multiset
// of child trees with sizes summing to s - 1; listing the children as a
// non-increasing sequence of global ids gives each class exactly once.
std::vector<std::vector<RootedTree>> rooted_tree_table(int max_size) {
  std::vector<std::vector<RootedTree>> table(static_cast<std::size_t>(max_size) + 1);
  std::vector<const RootedTree*> ids;
  if (max_size >= 1) table[1].push_back({{-1}});
  for (int size = 2; size <= max_size; ++size) {
    ids.clear();
    for (int s = 1; s < size; ++s) {
      for (const auto& t : table[s]) ids.push_back(&t);
    }
    std::vector<int> chosen;
    std::function<void(int, int)> extend = [&](int remaining, int max_id) {
      if (remaining == 0) {
        RootedTree tree{{-1}};
        for (int id : chosen) {
          const int offset = tree.size();
          for (int p : ids[id]->parent) tree.parent.push_back(p < 0 ? 0 : p + offset);
        }
        table[size].push_back(std::move(tree));
        return;
      }
      for (int id = max_id; id >= 0; --id) {
        if (ids[id]->size() > remaining) continue;
        chosen.push_back(id);
        extend(remaining - ids[id]->size(), id);
        chosen.pop_back();
      }
    };
    extend(size - 1, static_cast<int>(ids.size()) - 1);
  }
  return table;
}

}  // namespace

void EnumerationFilter::validate() const {
  if (max_degree && *max_degree < 2) throw ParameterError("maximum degree filter must be >= 2");
  if (pendants && *pendants < 0) throw ParameterError("pendant filter must be >= 0");
}

bool EnumerationFilter::accepts(const Graph& g) const {
  if (max_degree && unicyclic::max_degree(g) != *max_degree) return false;
  if (pendants && pendant_count(g) != *pendants) return false;
  return true;
}

std::vector<RootedTree> rooted_trees(int size) {
  if (size < 1) throw ParameterError("rooted tree size must be >= 1");
  return rooted_tree_table(size)[static_cast<std::size_t>(size)];
}

std::vector<Graph> enumerate_unicyclic(int n, const EnumerationFilter& filter) {
  require_order(n, kMaxEnumerationOrder);
  filter.validate();
  const auto trees = rooted_tree_table(n - 2);
  std::map<CanonicalCode, Graph> classes;

  for (int k = 3; k <= n; ++k) {
    std::vector<int> extra(static_cast<std::size_t>(k), 0);  // non-root vertices hung on each cycle vertex
    std::vector<const RootedTree*> pick(static_cast<std::size_t>(k), nullptr);

    auto emit = [&] {
      std::vector<Edge> edges;
      for (int i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
      int next = k;
      for (int i = 0; i < k; ++i) {
        const auto& parent = pick[i]->parent;
        const int base = next - 1;  // tree vertex j > 0 maps to base + j
        for (int j = 1; j < static_cast<int>(parent.size()); ++j) {
          const int p = parent[j] == 0 ? i : base + parent[j];
          edges.push_back({p, base + j});
        }
        next += static_cast<int>(parent.size()) - 1;
      }
      Graph g(n, std::move(edges));
      if (!filter.accepts(g)) return;
      auto code = canonical_code(g);
      if (!classes.contains(code)) classes.emplace(std::move(code), canonical_form(g));
    };

    std::function<void(int)> choose_trees = [&](int i) {
      if (i == k) {
        emit();
        return;
      }
      for (const auto& t : trees[extra[i] + 1]) {
        pick[i] = &t;
        choose_trees(i + 1);
      }
    };

    std::function<void(int, int)> compose = [&](int i, int remaining) {
      if (i == k - 1) {
        extra[i] = remaining;
        choose_trees(0);
        return;
      }
      for (int c = 0; c <= remaining; ++c) {
        extra[i] = c;
        compose(i + 1, remaining - c);
      }
    };
    compose(0, n - k);
  }

  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [code, g] : classes) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> enumerate_unicyclic_by_edge_subsets(int n) {
  require_order(n, kMaxEdgeSubsetOrder);
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  const int total = static_cast<int>(pairs.size());
  std::map<CanonicalCode, Graph> classes;
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[i] = i;
  for (;;) {
    std::vector<Edge> edges;
    for (int i : idx) edges.push_back(pairs[i]);
    Graph g(n, std::move(edges));
    if (is_connected(g)) {
      auto code = canonical_code(g);
      if (!classes.contains(code)) classes.emplace(std::move(code), canonical_form(g));
    }
    int i = n - 1;
    while (i >= 0 && idx[i] == total - n + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::vector<Graph> out;
  for (auto& [code, g] : classes) out.push_back(std::move(g));
  return out;
}

std::size_t count_classes(int n) { return enumerate_unicyclic(n).size(); }

ExtremalSearchResult extremal_search(const Objective& objective, std::span<const Graph> graphs, double tolerance) {
  ExtremalSearchResult result{objective, graphs.size(), {}, {}};
  if (graphs.empty()) return result;
  std::vector<IndexValue> values;
  values.reserve(graphs.size());
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    values.push_back(eval(objective, graphs[i]));
    if (compare(values[i], values[lo], 0.0) < 0) lo = i;
    if (compare(values[i], values[hi], 0.0) > 0) hi = i;
  }
  // Second pass: everything within tolerance of the exact optimum.
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const bool is_min = compare(values[i], values[lo], tolerance) == 0;
    const bool is_max = compare(values[i], values[hi], tolerance) == 0;
    if (!is_min && !is_max) continue;
    ExtremalEntry entry{canonical_code(graphs[i]), graphs[i], values[i]};
    if (is_min) result.minimizers.push_back(entry);
    if (is_max) result.maximizers.push_back(std::move(entry));
  }
  auto by_code = [](const ExtremalEntry& a, const ExtremalEntry& b) { return a.code < b.code; };
  std::stable_sort(result.minimizers.begin(), result.minimizers.end(), by_code);
  std::stable_sort(result.maximizers.begin(), result.maximizers.end(), by_code);
  return result;
}

ExtremalSearchResult extremal_search(const Objective& objective, int n, const EnumerationFilter& filter,
                                     double tolerance) {
  const auto graphs = enumerate_unicyclic(n, filter);
  return extremal_search(objective, graphs, tolerance);
}

}  // namespace unicyclic
