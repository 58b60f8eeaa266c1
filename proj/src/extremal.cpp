#include "unicyclic/extremal.hpp"

#include <numeric>

#include "unicyclic/errors.hpp"

namespace unicyclic {

namespace {

void require(bool ok, const std::string& clause) {
  if (!ok) throw ParameterError("parameter violation: " + clause);
}

void require_delta(int n, int max_degree) {
  require(n >= 4, "n >= 4 (n = " + std::to_string(n) + ")");
  require(max_degree >= 3 && max_degree <= n - 1,
          "3 <= Delta <= n - 1 (n = " + std::to_string(n) + ", Delta = " + std::to_string(max_degree) + ")");
}

void require_pendants(int n, int pendants) {
  require(n >= 4, "n >= 4 (n = " + std::to_string(n) + ")");
  require(pendants >= 1 && pendants <= n - 3,
          "1 <= p <= n - 3 (n = " + std::to_string(n) + ", p = " + std::to_string(pendants) + ")");
}

class Builder {
 public:
  explicit Builder(int cycle_length) : next_(cycle_length) {
    for (int i = 0; i < cycle_length; ++i) edges_.push_back({i, (i + 1) % cycle_length});
  }

  void attach_path(int root, int length) {
    int prev = root;
    for (int i = 0; i < length; ++i) {
      edges_.push_back({prev, next_});
      prev = next_++;
    }
  }

  void attach_pendants(int root, int count) {
    for (int i = 0; i < count; ++i) attach_path(root, 1);
  }

  Graph build() && { return Graph(next_, std::move(edges_)); }

 private:
  int next_;
  std::vector<Edge> edges_;
};

std::vector<int> repeat(std::vector<int> head, int value, int count) {
  head.insert(head.end(), static_cast<std::size_t>(count), value);
  return head;
}

}  // namespace

DeltaQuantities delta_quantities(int n, int max_degree) {
  require_delta(n, max_degree);
  const int q = n / (max_degree - 1);
  return {q, n - q * (max_degree - 1) + 1, n - max_degree + 1, q == 1 || n == 2 * max_degree - 2};
}

PendantQuantities pendant_quantities(int n, int pendants) {
  require_pendants(n, pendants);
  const int m = (2 * n - pendants) / (n - pendants);
  return {m, 2 * n - pendants - m * (n - pendants)};
}

std::string to_string(const ExtremalFamily& fam) {
  return std::visit(
      [](const auto& f) -> std::string {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::Cycle>) return "C_" + std::to_string(f.n);
        if constexpr (std::is_same_v<T, family::UnThree>) return "U_" + std::to_string(f.n) + "^3";
        if constexpr (std::is_same_v<T, family::H>)
          return "H(" + std::to_string(f.n) + "," + std::to_string(f.max_degree) + ")";
        if constexpr (std::is_same_v<T, family::K>)
          return "K(" + std::to_string(f.n) + "," + std::to_string(f.max_degree) + ")";
        if constexpr (std::is_same_v<T, family::SeqA>)
          return "a(" + std::to_string(f.n) + "," + std::to_string(f.pendants) + ")";
        if constexpr (std::is_same_v<T, family::SeqB>)
          return "b(" + std::to_string(f.n) + "," + std::to_string(f.pendants) + ")";
      },
      fam);
}

void validate(const ExtremalFamily& fam) {
  std::visit(
      [](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::Cycle>) require(f.n >= 3, "n >= 3 for a cycle");
        if constexpr (std::is_same_v<T, family::UnThree>) require(f.n >= 4, "n >= 4 for U_n^3");
        if constexpr (std::is_same_v<T, family::H> || std::is_same_v<T, family::K>) require_delta(f.n, f.max_degree);
        if constexpr (std::is_same_v<T, family::SeqA> || std::is_same_v<T, family::SeqB>)
          require_pendants(f.n, f.pendants);
      },
      fam);
}

DegreeSequence defining_sequence(const ExtremalFamily& fam) {
  validate(fam);
  return std::visit(
      [](const auto& f) -> DegreeSequence {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, family::Cycle>) return DegreeSequence(std::vector<int>(f.n, 2));
        if constexpr (std::is_same_v<T, family::UnThree>) return DegreeSequence(repeat({f.n - 1, 2, 2}, 1, f.n - 3));
        if constexpr (std::is_same_v<T, family::H>) return y_sequence(f.n, f.max_degree);
        if constexpr (std::is_same_v<T, family::K>) return z_sequence(f.n, f.max_degree);
        if constexpr (std::is_same_v<T, family::SeqA>) return a_sequence(f.n, f.pendants);
        if constexpr (std::is_same_v<T, family::SeqB>) return b_sequence(f.n, f.pendants);
      },
      fam);
}

bool is_member(const Graph& g, const ExtremalFamily& fam) {
  if (!is_unicyclic(g)) return false;
  const auto target = defining_sequence(fam);
  if (static_cast<std::size_t>(g.order()) != target.length()) return false;
  return degree_sequence(g) == target;
}

Graph build_cycle(int n) {
  require(n >= 3, "n >= 3 for a cycle");
  return Builder(n).build();
}

Graph build_un3(int n) {
  require(n >= 4, "n >= 4 for U_n^3");
  Builder b(3);
  b.attach_pendants(0, n - 3);
  return std::move(b).build();
}

DegreeSequence y_sequence(int n, int max_degree) {
  require_delta(n, max_degree);
  auto values = repeat({max_degree}, 2, n - max_degree + 1);
  return DegreeSequence(repeat(std::move(values), 1, max_degree - 2));
}

DegreeSequence z_sequence(int n, int max_degree) {
  const auto dq = delta_quantities(n, max_degree);
  std::vector<int> values;
  if (dq.two_hub_case) {
    values = repeat({max_degree, dq.s, 2}, 1, n - 3);
  } else {
    values = repeat(repeat({}, max_degree, dq.q), dq.r, 1);
    values = repeat(std::move(values), 1, n - dq.q - 1);
  }
  return DegreeSequence::from_unsorted(std::move(values));
}

DegreeSequence a_sequence(int n, int pendants) {
  const auto pq = pendant_quantities(n, pendants);
  auto values = repeat({}, pq.m + 1, pq.t);
  values = repeat(std::move(values), pq.m, n - pendants - pq.t);
  return DegreeSequence(repeat(std::move(values), 1, pendants));
}

DegreeSequence b_sequence(int n, int pendants) {
  require_pendants(n, pendants);
  auto values = repeat({pendants + 2}, 2, n - pendants - 1);
  return DegreeSequence(repeat(std::move(values), 1, pendants));
}

Graph build_H_member(int n, int max_degree, int cycle_length, std::span<const int> path_lengths) {
  require_delta(n, max_degree);
  require(cycle_length >= 3 && cycle_length <= n - max_degree + 2, "3 <= k <= n - Delta + 2");
  require(path_lengths.size() == static_cast<std::size_t>(max_degree - 2), "exactly Delta - 2 path lengths");
  for (int len : path_lengths) require(len >= 1, "every path length >= 1");
  require(cycle_length + std::accumulate(path_lengths.begin(), path_lengths.end(), 0) == n,
          "k + sum of path lengths == n");
  Builder b(cycle_length);
  for (int len : path_lengths) b.attach_path(0, len);
  return std::move(b).build();
}

Graph build_H_member(int n, int max_degree) {
  require_delta(n, max_degree);
  std::vector<int> lengths(static_cast<std::size_t>(max_degree - 2), 1);
  lengths.front() = n - max_degree;
  return build_H_member(n, max_degree, 3, lengths);
}

Graph build_K_member(int n, int max_degree) {
  const auto dq = delta_quantities(n, max_degree);
  if (dq.two_hub_case) {
    Builder b(3);
    b.attach_pendants(0, max_degree - 2);
    b.attach_pendants(1, n - 1 - max_degree);
    return std::move(b).build();
  }
  if (dq.r == 1) {
    Builder b(dq.q);
    for (int v = 0; v < dq.q; ++v) b.attach_pendants(v, max_degree - 2);
    return std::move(b).build();
  }
  Builder b(dq.q + 1);
  for (int v = 0; v < dq.q; ++v) b.attach_pendants(v, max_degree - 2);
  b.attach_pendants(dq.q, dq.r - 2);
  return std::move(b).build();
}

Graph build_b_member(int n, int pendants) {
  require_pendants(n, pendants);
  Builder b(3);
  b.attach_path(0, n - 2 - pendants);
  for (int i = 1; i < pendants; ++i) b.attach_path(0, 1);
  return std::move(b).build();
}

}  // namespace unicyclic
