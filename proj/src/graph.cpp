#include "unicyclic/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "unicyclic/errors.hpp"

namespace unicyclic {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 1) throw ParameterError("graph must have at least one vertex");
  for (auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw ParameterError("vertex index out of range in edge (" + std::to_string(e.u) + "," +
                           std::to_string(e.v) + ")");
    }
    if (e.u == e.v) throw ParameterError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n_);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw ParameterError("permutation length mismatch");
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back({perm[e.u], perm[e.v]});
  return Graph(n_, std::move(out));
}

DegreeSequence::DegreeSequence(std::vector<int> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 1) throw ParameterError("degree sequence entries must be positive");
    if (i > 0 && values_[i] > values_[i - 1]) {
      throw ParameterError("degree sequence must be non-increasing");
    }
  }
}

DegreeSequence DegreeSequence::from_unsorted(std::vector<int> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  return DegreeSequence(std::move(values));
}

long long DegreeSequence::sum() const {
  return std::accumulate(values_.begin(), values_.end(), 0LL);
}

std::string DegreeSequence::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out + ")";
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

bool parse_int(std::string_view token, long long& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

struct PendingGraph {
  long long n = 0;
  std::vector<Edge> edges;
};

}  // namespace

std::vector<Graph> parse_edge_list_stream(std::string_view text) {
  std::vector<Graph> graphs;
  std::vector<PendingGraph> pending;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().front() == '#') {
      if (end == text.size()) break;
      continue;
    }

    if (tokens.size() == 1) {
      long long n = 0;
      if (!parse_int(tokens[0], n)) throw ParseError(line_no, "malformed vertex count");
      if (n < 1) throw ParseError(line_no, "vertex count must be positive");
      if (n > 1'000'000) throw ParseError(line_no, "vertex count too large");
      pending.push_back({n, {}});
    } else if (tokens.size() == 2) {
      if (pending.empty()) throw ParseError(line_no, "edge before vertex count");
      long long u = 0;
      long long v = 0;
      if (!parse_int(tokens[0], u) || !parse_int(tokens[1], v)) {
        throw ParseError(line_no, "malformed edge line");
      }
      const long long n = pending.back().n;
      if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(line_no, "vertex index out of range");
      if (u == v) throw ParseError(line_no, "self-loop");
      pending.back().edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    } else {
      throw ParseError(line_no, "malformed line");
    }
    if (end == text.size()) break;
  }
  graphs.reserve(pending.size());
  for (auto& p : pending) graphs.emplace_back(static_cast<int>(p.n), std::move(p.edges));
  return graphs;
}

Graph parse_edge_list(std::string_view text) {
  auto graphs = parse_edge_list_stream(text);
  if (graphs.empty()) throw ParseError(1, "missing vertex count");
  if (graphs.size() > 1) throw ParseError(1, "expected a single graph, found " + std::to_string(graphs.size()));
  return std::move(graphs.front());
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const auto adj = g.adjacency();
  std::vector<int> comp(g.order(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (int w : adj[members[head]]) {
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

bool is_unicyclic(const Graph& g) { return g.size() == g.order() && is_connected(g); }

DegreeSequence degree_sequence(const Graph& g) {
  auto deg = g.degrees();
  for (int v = 0; v < g.order(); ++v) {
    if (deg[v] == 0) throw DomainError("isolated vertex " + std::to_string(v));
  }
  return DegreeSequence::from_unsorted(std::move(deg));
}

int max_degree(const Graph& g) {
  auto deg = g.degrees();
  return *std::max_element(deg.begin(), deg.end());
}

int pendant_count(const Graph& g) {
  auto deg = g.degrees();
  return static_cast<int>(std::count(deg.begin(), deg.end(), 1));
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.push_back({index[e.u], index[e.v]});
  }
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const auto& e : b.edges()) edges.push_back({e.u + a.order(), e.v + a.order()});
  return Graph(a.order() + b.order(), std::move(edges));
}

}  // namespace unicyclic
