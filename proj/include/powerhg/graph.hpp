#pragma once

// Simple and signed graphs: construction, edge-list parsing, classification,
// balance/switching, and the small structural helpers used throughout.

#include "powerhg/errors.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

namespace powerhg {

/// Unordered vertex pair stored with u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  bool touches(std::size_t w) const noexcept { return u == w || v == w; }
  std::size_t other(std::size_t w) const noexcept { return w == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(std::size_t a, std::size_t b) noexcept { return a < b ? Edge{a, b} : Edge{b, a}; }

/// One entry of a vertex's incidence list.
struct Incidence {
  std::size_t neighbor;
  std::size_t edge;
};

/// Simple undirected graph on vertices 0..n-1. Edge order is preserved as given.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), adj_(n) {
    edges_.reserve(edges.size());
    std::set<Edge> seen;
    for (const Edge& raw : edges) {
      if (raw.u == raw.v) throw InvalidGraph("self-loop at vertex " + std::to_string(raw.u));
      const Edge e = make_edge(raw.u, raw.v);
      if (e.v >= n) {
        throw InvalidGraph("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                           "} has an endpoint >= vertex count " + std::to_string(n));
      }
      if (!seen.insert(e).second) {
        throw InvalidGraph("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
      }
      adj_[e.u].push_back({e.v, edges_.size()});
      adj_[e.v].push_back({e.u, edges_.size()});
      edges_.push_back(e);
    }
  }

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  std::span<const Incidence> incident(std::size_t v) const { return adj_.at(v); }
  std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }

  std::optional<std::size_t> edge_index(std::size_t a, std::size_t b) const {
    if (a >= n_ || b >= n_) return std::nullopt;
    for (const Incidence& inc : adj_[a]) {
      if (inc.neighbor == b) return inc.edge;
    }
    return std::nullopt;
  }

  bool adjacent(std::size_t a, std::size_t b) const { return edge_index(a, b).has_value(); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
};

enum class GraphClass { Tree, OddUnicyclic, BipartiteNonTree, General };

inline std::string_view to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Tree: return "tree";
    case GraphClass::OddUnicyclic: return "odd-unicyclic";
    case GraphClass::BipartiteNonTree: return "bipartite-non-tree";
    case GraphClass::General: return "general";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Small named families.

namespace family {

inline Graph path(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  return Graph(n, std::move(es));
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw InvalidGraph("cycle needs at least 3 vertices");
  std::vector<Edge> es;
  for (std::size_t i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
  es.push_back({0, n - 1});
  return Graph(n, std::move(es));
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> es;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) es.push_back({i, j});
  return Graph(n, std::move(es));
}

inline Graph star(std::size_t leaves) {
  std::vector<Edge> es;
  for (std::size_t i = 1; i <= leaves; ++i) es.push_back({0, i});
  return Graph(leaves + 1, std::move(es));
}

}  // namespace family

// ---------------------------------------------------------------------------
// Edge-list text format.
//
//   # comment
//   n m          optional header
//   u v          one edge per line
//
// "n m" and "u v" look alike, so the first data line is read as a header iff
// the number of remaining data lines equals its second value and its first
// value exceeds every label that follows. Without a header n = 1 + max label.
// Consequently a graph with no edges cannot be written in this format.

namespace detail {

inline std::optional<std::size_t> parse_index(std::string_view tok) {
  if (tok.empty()) return std::nullopt;
  std::size_t value = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') return std::nullopt;
    const std::size_t next = value * 10 + static_cast<std::size_t>(c - '0');
    if (next / 10 != value) return std::nullopt;
    value = next;
  }
  return value;
}

}  // namespace detail

inline Graph parse_edge_list(std::istream& in) {
  struct Row {
    std::size_t line, a, b;
  };
  std::vector<Row> rows;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    std::istringstream ls(text);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.size() != 2) {
      throw ParseError(line_no, "expected two vertex labels, found " + std::to_string(toks.size()) + " tokens");
    }
    const auto a = detail::parse_index(toks[0]);
    const auto b = detail::parse_index(toks[1]);
    if (!a || !b) throw ParseError(line_no, "malformed token in '" + text + "'");
    rows.push_back({line_no, *a, *b});
  }

  std::optional<std::size_t> header_n;
  // a lone line is always an edge ("0 0" must be a self-loop, not an empty header)
  if (rows.size() >= 2 && rows.size() - 1 == rows.front().b) {
    std::size_t max_label = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) max_label = std::max({max_label, rows[i].a, rows[i].b});
    if (rows.front().a > max_label) header_n = rows.front().a;
  }
  if (header_n) rows.erase(rows.begin());

  std::size_t n = header_n.value_or(0);
  std::set<Edge> seen;
  std::vector<Edge> edges;
  for (const Row& r : rows) {
    if (r.a == r.b) throw ParseError(r.line, "self-loop at vertex " + std::to_string(r.a));
    const Edge e = make_edge(r.a, r.b);
    if (header_n && e.v >= *header_n) {
      throw ParseError(r.line, "label " + std::to_string(e.v) + " exceeds header vertex count " +
                                   std::to_string(*header_n));
    }
    if (!seen.insert(e).second) {
      throw ParseError(r.line, "duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    }
    if (!header_n) n = std::max(n, e.v + 1);
    edges.push_back(e);
  }
  return Graph(n, std::move(edges));
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

inline std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Connectivity and structure.

/// Component id per vertex, ids assigned in order of lowest vertex.
inline std::vector<std::size_t> component_ids(const Graph& g) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> id(g.order(), unset);
  std::size_t next = 0;
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (id[s] != unset) continue;
    std::queue<std::size_t> q;
    q.push(s);
    id[s] = next;
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (const Incidence& inc : g.incident(v)) {
        if (id[inc.neighbor] == unset) {
          id[inc.neighbor] = next;
          q.push(inc.neighbor);
        }
      }
    }
    ++next;
  }
  return id;
}

inline std::vector<std::vector<std::size_t>> components(const Graph& g) {
  const auto id = component_ids(g);
  std::vector<std::vector<std::size_t>> parts;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (id[v] >= parts.size()) parts.resize(id[v] + 1);
    parts[id[v]].push_back(v);
  }
  return parts;
}

inline bool is_connected(const Graph& g) { return g.order() > 0 && components(g).size() == 1; }

inline void require_connected(const Graph& g, std::string_view what) {
  if (!is_connected(g)) throw PreconditionError(std::string(what) + ": graph must be connected");
}

/// Proper 2-colouring if one exists.
inline std::optional<std::vector<int>> two_colouring(const Graph& g) {
  std::vector<int> colour(g.order(), -1);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (const Incidence& inc : g.incident(v)) {
        if (colour[inc.neighbor] == -1) {
          colour[inc.neighbor] = 1 - colour[v];
          q.push(inc.neighbor);
        } else if (colour[inc.neighbor] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

inline bool is_bipartite(const Graph& g) { return two_colouring(g).has_value(); }

inline GraphClass classify(const Graph& g) {
  require_connected(g, "classify");
  if (g.size() + 1 == g.order()) return GraphClass::Tree;
  const bool bipartite = is_bipartite(g);
  // A connected graph with |E| = |V| has exactly one cycle; it is odd iff the graph is not bipartite.
  if (g.size() == g.order() && !bipartite) return GraphClass::OddUnicyclic;
  return bipartite ? GraphClass::BipartiteNonTree : GraphClass::General;
}

inline bool is_pendant_edge(const Graph& g, std::size_t e) {
  const Edge& ed = g.edge(e);
  return g.degree(ed.u) == 1 || g.degree(ed.v) == 1;
}

inline Graph delete_edge(const Graph& g, std::size_t e) {
  if (e >= g.size()) throw std::out_of_range("delete_edge: edge index " + std::to_string(e) + " out of range");
  std::vector<Edge> es;
  es.reserve(g.size() - 1);
  for (std::size_t i = 0; i < g.size(); ++i)
    if (i != e) es.push_back(g.edge(i));
  return Graph(g.order(), std::move(es));
}

/// Result of removing vertices: the compact graph plus old-to-new labels.
struct Relabeled {
  Graph graph;
  std::vector<std::optional<std::size_t>> new_label;  // indexed by old vertex
  std::vector<std::size_t> old_label;                 // indexed by new vertex
};

inline Relabeled induced_subgraph(const Graph& g, std::span<const std::size_t> keep) {
  Relabeled r;
  r.new_label.assign(g.order(), std::nullopt);
  std::vector<std::size_t> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t v : sorted) {
    if (v >= g.order()) throw std::out_of_range("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    r.new_label[v] = r.old_label.size();
    r.old_label.push_back(v);
  }
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    if (r.new_label[e.u] && r.new_label[e.v]) es.push_back(make_edge(*r.new_label[e.u], *r.new_label[e.v]));
  }
  r.graph = Graph(r.old_label.size(), std::move(es));
  return r;
}

inline Relabeled delete_vertex(const Graph& g, std::size_t v) {
  if (v >= g.order()) throw std::out_of_range("delete_vertex: vertex " + std::to_string(v) + " out of range");
  std::vector<std::size_t> keep;
  for (std::size_t w = 0; w < g.order(); ++w)
    if (w != v) keep.push_back(w);
  return induced_subgraph(g, keep);
}

/// Subgraph spanned by the given edges; vertices not covered by them are dropped.
/// Edge order follows the order of `edge_indices`.
inline Relabeled edge_subgraph(const Graph& g, std::span<const std::size_t> edge_indices) {
  Relabeled r;
  r.new_label.assign(g.order(), std::nullopt);
  std::vector<bool> used(g.order(), false);
  for (std::size_t e : edge_indices) {
    used[g.edge(e).u] = true;
    used[g.edge(e).v] = true;
  }
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (used[v]) {
      r.new_label[v] = r.old_label.size();
      r.old_label.push_back(v);
    }
  }
  std::vector<Edge> es;
  for (std::size_t e : edge_indices) es.push_back(make_edge(*r.new_label[g.edge(e).u], *r.new_label[g.edge(e).v]));
  r.graph = Graph(r.old_label.size(), std::move(es));
  return r;
}

inline bool is_cut_edge(const Graph& g, std::size_t e) {
  if (e >= g.size()) throw std::out_of_range("is_cut_edge: edge index " + std::to_string(e) + " out of range");
  const auto before = component_ids(g);
  const auto after = component_ids(delete_edge(g, e));
  return after[g.edge(e).u] != after[g.edge(e).v] && before[g.edge(e).u] == before[g.edge(e).v];
}

/// Every nonempty edge subset of size <= max_edges whose spanned subgraph is
/// connected, each exactly once, as sorted edge-index lists. Output is ordered
/// by size, then lexicographically.
inline std::vector<std::vector<std::size_t>> connected_edge_subsets(const Graph& g, std::size_t max_edges) {
  if (g.size() > 64) throw PreconditionError("connected_edge_subsets: at most 64 edges supported");
  using Mask = std::uint64_t;
  std::vector<Mask> edge_neighbours(g.size(), 0);
  for (std::size_t e = 0; e < g.size(); ++e) {
    for (std::size_t end : {g.edge(e).u, g.edge(e).v})
      for (const Incidence& inc : g.incident(end))
        if (inc.edge != e) edge_neighbours[e] |= Mask{1} << inc.edge;
  }

  std::vector<std::vector<std::size_t>> out;
  std::vector<Mask> layer;
  for (std::size_t e = 0; e < g.size() && max_edges > 0; ++e) layer.push_back(Mask{1} << e);
  for (std::size_t size = 1; size <= max_edges && !layer.empty(); ++size) {
    std::sort(layer.begin(), layer.end(), [](Mask a, Mask b) {
      // lexicographic order of the sorted index lists == reversed bit order of lowest set bits
      while (a != 0 && b != 0) {
        const int la = std::countr_zero(a), lb = std::countr_zero(b);
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
      }
      return a == 0 && b != 0;
    });
    std::unordered_set<Mask> next;
    for (Mask m : layer) {
      std::vector<std::size_t> idx;
      Mask boundary = 0;
      for (Mask rest = m; rest != 0; rest &= rest - 1) {
        const auto e = static_cast<std::size_t>(std::countr_zero(rest));
        idx.push_back(e);
        boundary |= edge_neighbours[e];
      }
      out.push_back(std::move(idx));
      if (size < max_edges) {
        for (Mask ext = boundary & ~m; ext != 0; ext &= ext - 1) next.insert(m | (ext & -ext));
      }
    }
    layer.assign(next.begin(), next.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Signed graphs.

/// Graph with a +1/-1 sign per edge; signs follow the graph's edge order.
class SignedGraph {
 public:
  SignedGraph() = default;

  explicit SignedGraph(Graph g) : graph_(std::move(g)), signs_(graph_.size(), 1) {}

  SignedGraph(Graph g, std::vector<int> signs) : graph_(std::move(g)), signs_(std::move(signs)) {
    if (signs_.size() != graph_.size()) {
      throw InvalidGraph("sign count " + std::to_string(signs_.size()) + " != edge count " +
                         std::to_string(graph_.size()));
    }
    for (int s : signs_)
      if (s != 1 && s != -1) throw InvalidGraph("edge signs must be +1 or -1");
  }

  /// Signs from a bitmask: bit i set means edge i is negative.
  static SignedGraph from_mask(Graph g, std::uint64_t negative_mask) {
    std::vector<int> s(g.size(), 1);
    for (std::size_t i = 0; i < s.size(); ++i)
      if ((negative_mask >> i) & 1U) s[i] = -1;
    return SignedGraph(std::move(g), std::move(s));
  }

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<int>& signs() const noexcept { return signs_; }
  int sign(std::size_t e) const { return signs_.at(e); }

  SignedGraph negated() const {
    std::vector<int> s = signs_;
    for (int& x : s) x = -x;
    return SignedGraph(graph_, std::move(s));
  }

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  Graph graph_;
  std::vector<int> signs_;
};

struct BalanceResult {
  bool balanced = false;
  /// Per-vertex +1/-1 with d_u * sign(u,v) * d_v = +1 on every edge; empty when unbalanced.
  std::vector<int> potentials;
};

/// Potentials are propagated along a BFS spanning forest, the lowest vertex of
/// each component fixed to +1; every non-tree edge is then checked.
inline BalanceResult is_balanced(const SignedGraph& sg) {
  const Graph& g = sg.graph();
  std::vector<int> d(g.order(), 0);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (d[s] != 0) continue;
    d[s] = 1;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (const Incidence& inc : g.incident(v)) {
        const int want = d[v] * sg.sign(inc.edge);
        if (d[inc.neighbor] == 0) {
          d[inc.neighbor] = want;
          q.push(inc.neighbor);
        } else if (d[inc.neighbor] != want) {
          return {};
        }
      }
    }
  }
  return {true, std::move(d)};
}

inline BalanceResult is_antibalanced(const SignedGraph& sg) { return is_balanced(sg.negated()); }

/// Flip the sign of every edge with exactly one endpoint in `subset`.
inline SignedGraph switching(const SignedGraph& sg, std::span<const std::size_t> subset) {
  std::vector<bool> in(sg.graph().order(), false);
  for (std::size_t v : subset) {
    if (v >= in.size()) throw std::out_of_range("switching: vertex " + std::to_string(v) + " out of range");
    in[v] = true;
  }
  std::vector<int> s = sg.signs();
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Edge& e = sg.graph().edge(i);
    if (in[e.u] != in[e.v]) s[i] = -s[i];
  }
  return SignedGraph(sg.graph(), std::move(s));
}

/// Edge indices of a BFS spanning forest rooted at the lowest vertex of each component.
inline std::vector<bool> bfs_tree_edges(const Graph& g) {
  std::vector<bool> tree(g.size(), false);
  std::vector<bool> seen(g.order(), false);
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      const std::size_t v = q.front();
      q.pop();
      for (const Incidence& inc : g.incident(v)) {
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = true;
          tree[inc.edge] = true;
          q.push(inc.neighbor);
        }
      }
    }
  }
  return tree;
}

/// One representative per switching class of a connected graph: tree edges
/// positive, non-tree edges ranging over all sign patterns (pattern order is
/// binary counting over non-tree edges in edge order, so index 0 is G_+).
inline std::vector<SignedGraph> switching_class_representatives(const Graph& g) {
  require_connected(g, "switching_class_representatives");
  const auto tree = bfs_tree_edges(g);
  std::vector<std::size_t> free_edges;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!tree[i]) free_edges.push_back(i);
  if (free_edges.size() > 24) throw PreconditionError("switching classes: cyclomatic number above 24");
  std::vector<SignedGraph> reps;
  reps.reserve(std::size_t{1} << free_edges.size());
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << free_edges.size()); ++pattern) {
    std::vector<int> s(g.size(), 1);
    for (std::size_t j = 0; j < free_edges.size(); ++j)
      if ((pattern >> j) & 1U) s[free_edges[j]] = -1;
    reps.emplace_back(g, std::move(s));
  }
  return reps;
}

}  // namespace powerhg
