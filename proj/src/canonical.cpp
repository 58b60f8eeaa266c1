#include <algorithm>
#include <array>
#include <cstdint>
#include <map>

#include "unicyclic/errors.hpp"
#include "unicyclic/graph.hpp"

namespace unicyclic {

namespace {

using Row = std::uint16_t;
static_assert(sizeof(Row) * 8 >= kMaxCanonicalOrder);

// Colour refinement starting from degrees. Colours are numbered by sorting
// the (colour, neighbour colours) signatures, so the ordered partition is an
// isomorphism invariant.
std::vector<int> refined_colors(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = static_cast<int>(adj[v].size());
  {
    auto sorted = color;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (auto& c : color) c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
  }
  int classes = *std::max_element(color.begin(), color.end()) + 1;
  for (;;) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (int w : adj[v]) sig[v].second.push_back(color[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::map<std::pair<int, std::vector<int>>, int> ids;
    for (const auto& s : sig) ids.emplace(s, 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) color[v] = ids.at(sig[v]);
    if (next == classes) break;
    classes = next;
  }
  return color;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : n_(g.order()) {
    const auto adj = g.adjacency();
    for (int v = 0; v < n_; ++v) {
      for (int w : adj[v]) adj_[v] |= Row(1u << w);
    }
    color_ = refined_colors(adj);
    pos_color_ = color_;
    std::sort(pos_color_.begin(), pos_color_.end());
  }

  std::vector<int> run() {
    extend(0, 0);
    std::vector<int> perm(n_);
    for (int i = 0; i < n_; ++i) perm[best_order_[i]] = i;
    return perm;
  }

 private:
  bool twins(int u, int w) const {
    return (adj_[u] & Row(~(1u << w))) == (adj_[w] & Row(~(1u << u)));
  }

  // Row i lists, for j < i, whether order[i] is NOT adjacent to order[j];
  // earlier j is more significant. Minimizing favours adjacency.
  Row row_for(int pos, int v) const {
    Row row = 0;
    for (int j = 0; j < pos; ++j) {
      const bool adjacent = adj_[v] & (1u << order_[j]);
      row = Row((row << 1) | (adjacent ? 0u : 1u));
    }
    return row;
  }

  // Lexicographic comparison of the current rows 0..pos against the best.
  int compare_prefix(int pos) const {
    if (!have_best_) return -1;
    for (int i = 0; i <= pos; ++i) {
      if (rows_[i] != best_rows_[i]) return rows_[i] < best_rows_[i] ? -1 : 1;
    }
    return 0;
  }

  void extend(int pos, std::uint32_t used) {
    if (pos == n_) {
      if (compare_prefix(n_ - 1) < 0) {
        best_rows_ = rows_;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    std::array<int, kMaxCanonicalOrder> tried{};
    int tried_count = 0;
    for (int v = 0; v < n_; ++v) {
      if ((used & (1u << v)) || color_[v] != pos_color_[pos]) continue;
      bool redundant = false;
      for (int t = 0; t < tried_count && !redundant; ++t) redundant = twins(tried[t], v);
      if (redundant) continue;
      tried[tried_count++] = v;

      order_[pos] = v;
      rows_[pos] = row_for(pos, v);
      if (compare_prefix(pos) > 0) continue;
      extend(pos + 1, used | (1u << v));
    }
  }

  int n_;
  std::array<Row, kMaxCanonicalOrder> adj_{};
  std::vector<int> color_;
  std::vector<int> pos_color_;
  std::array<int, kMaxCanonicalOrder> order_{};
  std::array<Row, kMaxCanonicalOrder> rows_{};
  std::array<int, kMaxCanonicalOrder> best_order_{};
  std::array<Row, kMaxCanonicalOrder> best_rows_{};
  bool have_best_ = false;
};

}  // namespace

std::vector<int> canonical_permutation(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw ParameterError("canonical labeling supports at most " + std::to_string(kMaxCanonicalOrder) +
                         " vertices, got " + std::to_string(g.order()));
  }
  return CanonicalSearch(g).run();
}

Graph canonical_form(const Graph& g) {
  const auto perm = canonical_permutation(g);
  return g.relabeled(perm);
}

CanonicalCode canonical_code(const Graph& g) {
  const Graph c = canonical_form(g);
  std::vector<Row> adj(c.order(), 0);
  for (const auto& e : c.edges()) {
    adj[e.u] |= Row(1u << e.v);
    adj[e.v] |= Row(1u << e.u);
  }
  CanonicalCode code;
  code.bytes.push_back(static_cast<char>(c.order()));
  for (int i = 0; i < c.order(); ++i) {
    Row row = 0;
    for (int j = 0; j < i; ++j) row = Row((row << 1) | ((adj[i] & (1u << j)) ? 0u : 1u));
    code.bytes.push_back(static_cast<char>(row >> 8));
    code.bytes.push_back(static_cast<char>(row & 0xff));
  }
  return code;
}

std::string CanonicalCode::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

}  // namespace unicyclic
