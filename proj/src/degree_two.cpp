#include "polarix/degree_two.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace polarix {

DirectedLabeledTree::DirectedLabeledTree(int vertex_count,
                                         std::vector<TreeEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  const int m = vertex_count_ - 1;
  if (vertex_count_ < 2 || static_cast<int>(edges_.size()) != m)
    throw std::invalid_argument("DirectedLabeledTree: need k vertices, k-1 edges");
  std::vector<char> label_seen(static_cast<std::size_t>(m), 0);
  adj_.assign(static_cast<std::size_t>(vertex_count_), {});
  for (int e = 0; e < m; ++e) {
    const TreeEdge& edge = edges_[static_cast<std::size_t>(e)];
    if (edge.tail < 0 || edge.tail >= vertex_count_ || edge.head < 0 ||
        edge.head >= vertex_count_ || edge.tail == edge.head)
      throw std::invalid_argument("DirectedLabeledTree: bad edge endpoints");
    if (edge.label < 0 || edge.label >= m || label_seen[static_cast<std::size_t>(edge.label)])
      throw std::invalid_argument("DirectedLabeledTree: labels must be 1..m once each");
    label_seen[static_cast<std::size_t>(edge.label)] = 1;
    adj_[static_cast<std::size_t>(edge.tail)].push_back({edge.head, e});
    adj_[static_cast<std::size_t>(edge.head)].push_back({edge.tail, e});
  }
  // Connectivity (with k-1 edges this also rules out cycles).
  std::vector<char> seen(static_cast<std::size_t>(vertex_count_), 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (auto [w, e] : adj_[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        queue.push_back(w);
      }
  }
  if (reached != vertex_count_)
    throw std::invalid_argument("DirectedLabeledTree: not connected");

  head_side_.assign(edges_.size(),
                    std::vector<char>(static_cast<std::size_t>(vertex_count_), 0));
  for (int e = 0; e < m; ++e) {
    std::deque<int> q{edges_[static_cast<std::size_t>(e)].head};
    head_side_[static_cast<std::size_t>(e)]
              [static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].head)] = 1;
    while (!q.empty()) {
      const int v = q.front();
      q.pop_front();
      for (auto [w, f] : adj_[static_cast<std::size_t>(v)]) {
        if (f == e || head_side_[static_cast<std::size_t>(e)][static_cast<std::size_t>(w)])
          continue;
        head_side_[static_cast<std::size_t>(e)][static_cast<std::size_t>(w)] = 1;
        q.push_back(w);
      }
    }
  }
}

bool DirectedLabeledTree::points_toward(int edge_index, int v) const {
  return head_side_[static_cast<std::size_t>(edge_index)][static_cast<std::size_t>(v)] != 0;
}

std::vector<int> DirectedLabeledTree::path(int v, int w) const {
  std::vector<int> parent(static_cast<std::size_t>(vertex_count_), -2);
  std::deque<int> queue{v};
  parent[static_cast<std::size_t>(v)] = -1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (u == w) break;
    for (auto [x, e] : adj_[static_cast<std::size_t>(u)])
      if (parent[static_cast<std::size_t>(x)] == -2) {
        parent[static_cast<std::size_t>(x)] = u;
        queue.push_back(x);
      }
  }
  std::vector<int> out;
  for (int u = w; u != -1; u = parent[static_cast<std::size_t>(u)]) out.push_back(u);
  std::reverse(out.begin(), out.end());
  return out;
}

int DirectedLabeledTree::incident_path_edge(int v, int w) const {
  const std::vector<int> p = path(v, w);
  if (p.size() < 2)
    throw std::invalid_argument("incident_path_edge: vertices coincide");
  for (auto [x, e] : adj_[static_cast<std::size_t>(v)])
    if (x == p[1]) return e;
  throw std::logic_error("incident_path_edge: adjacency inconsistent");
}

std::string DirectedLabeledTree::dot() const {
  std::ostringstream out;
  out << "digraph tree {\n";
  for (const TreeEdge& e : edges_)
    out << "  " << e.tail << " -> " << e.head << " [label=\"" << e.label + 1
        << "\"];\n";
  out << "}\n";
  return out.str();
}

namespace {

// Edges pointing toward the vertex pick the first index of their class,
// edges pointing away the second.
int engine_index(bool toward) { return toward ? 0 : 1; }

}  // namespace

MonomialIdeal tree_vertex_ideal(const DirectedLabeledTree& t) {
  const int m = t.color_count();
  Ring ring = Ring::colored(m, 2);
  std::vector<Monomial> gens;
  for (int v = 0; v < t.vertex_count(); ++v) {
    Monomial g(ring.var_count());
    for (int e = 0; e < m; ++e)
      g.mul_var(ring.var(t.edges()[static_cast<std::size_t>(e)].label,
                         engine_index(t.points_toward(e, v))));
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(std::move(ring), std::move(gens));
}

MonomialIdeal tree_pair_ideal(const DirectedLabeledTree& t) {
  const int m = t.color_count();
  Ring ring = Ring::colored(m, 2);
  std::vector<Monomial> gens;
  for (int v = 0; v < t.vertex_count(); ++v)
    for (int w = v + 1; w < t.vertex_count(); ++w) {
      const int e = t.incident_path_edge(v, w);
      const int f = t.incident_path_edge(w, v);
      Monomial g(ring.var_count());
      g.mul_var(ring.var(t.edges()[static_cast<std::size_t>(e)].label,
                         engine_index(t.points_toward(e, w))));
      g.mul_var(ring.var(t.edges()[static_cast<std::size_t>(f)].label,
                         engine_index(t.points_toward(f, v))));
      gens.push_back(std::move(g));
    }
  return MonomialIdeal(std::move(ring), std::move(gens));
}

std::vector<std::vector<std::pair<int, int>>> labeled_trees(int vertex_count) {
  if (vertex_count < 2)
    throw std::invalid_argument("labeled_trees: need at least two vertices");
  std::vector<std::vector<std::pair<int, int>>> out;
  const int k = vertex_count;
  std::vector<int> seq(static_cast<std::size_t>(std::max(0, k - 2)), 0);
  while (true) {
    // Prufer decode.
    std::vector<int> degree(static_cast<std::size_t>(k), 1);
    for (int s : seq) ++degree[static_cast<std::size_t>(s)];
    std::vector<std::pair<int, int>> edges;
    std::vector<char> used(static_cast<std::size_t>(k), 0);
    std::vector<int> deg = degree;
    for (int s : seq) {
      int leaf = -1;
      for (int v = 0; v < k; ++v)
        if (deg[static_cast<std::size_t>(v)] == 1 && !used[static_cast<std::size_t>(v)]) {
          leaf = v;
          break;
        }
      edges.push_back({std::min(leaf, s), std::max(leaf, s)});
      used[static_cast<std::size_t>(leaf)] = 1;
      --deg[static_cast<std::size_t>(s)];
    }
    std::vector<int> rest;
    for (int v = 0; v < k; ++v)
      if (!used[static_cast<std::size_t>(v)] && deg[static_cast<std::size_t>(v)] == 1)
        rest.push_back(v);
    edges.push_back({rest[0], rest[1]});
    std::sort(edges.begin(), edges.end());
    out.push_back(std::move(edges));

    int pos = k - 3;
    while (pos >= 0 && ++seq[static_cast<std::size_t>(pos)] == k)
      seq[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0 || k == 2) break;
  }
  return out;
}

namespace {

std::string encode_rooted(int v, int parent,
                          const std::vector<std::vector<int>>& adj) {
  std::vector<std::string> child;
  for (int w : adj[static_cast<std::size_t>(v)])
    if (w != parent) child.push_back(encode_rooted(w, v, adj));
  std::sort(child.begin(), child.end());
  std::string out = "(";
  for (const std::string& c : child) out += c;
  out += ")";
  return out;
}

}  // namespace

std::string tree_certificate(const std::vector<std::pair<int, int>>& edges,
                             int vertex_count) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(vertex_count));
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  std::string best;
  for (int v = 0; v < vertex_count; ++v) {
    std::string enc = encode_rooted(v, -1, adj);
    if (best.empty() || enc < best) best = enc;
  }
  return best;
}

std::vector<DirectedLabeledTree> trees_up_to_iso(int m) {
  std::map<std::string, std::vector<std::pair<int, int>>> classes;
  for (const auto& edges : labeled_trees(m + 1)) {
    std::string cert = tree_certificate(edges, m + 1);
    classes.emplace(std::move(cert), edges);
  }
  std::vector<DirectedLabeledTree> out;
  for (const auto& [cert, edges] : classes) {
    std::vector<TreeEdge> decorated;
    for (int e = 0; e < m; ++e)
      decorated.push_back(
          {edges[static_cast<std::size_t>(e)].first,
           edges[static_cast<std::size_t>(e)].second, e});
    out.emplace_back(m + 1, std::move(decorated));
  }
  return out;
}

std::vector<DirectedLabeledTree> decorations(
    const std::vector<std::pair<int, int>>& edges, int vertex_count) {
  const int m = static_cast<int>(edges.size());
  std::vector<int> labels(static_cast<std::size_t>(m));
  std::iota(labels.begin(), labels.end(), 0);
  std::vector<DirectedLabeledTree> out;
  do {
    for (std::uint32_t orient = 0; orient < (1u << m); ++orient) {
      std::vector<TreeEdge> decorated;
      for (int e = 0; e < m; ++e) {
        auto [u, v] = edges[static_cast<std::size_t>(e)];
        if ((orient >> e) & 1u) std::swap(u, v);
        decorated.push_back({u, v, labels[static_cast<std::size_t>(e)]});
      }
      out.emplace_back(vertex_count, std::move(decorated));
    }
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

std::vector<Monomial> tree_linear_quotients_order(const DirectedLabeledTree& t,
                                                  int root) {
  if (root < 0 || root >= t.vertex_count())
    throw std::invalid_argument("tree_linear_quotients_order: bad root");
  // BFS from the root is a linear extension of the away-from-root order.
  std::vector<int> order;
  std::vector<char> seen(static_cast<std::size_t>(t.vertex_count()), 0);
  std::deque<int> queue{root};
  seen[static_cast<std::size_t>(root)] = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (const TreeEdge& e : t.edges()) {
      const int other = e.tail == v ? e.head : (e.head == v ? e.tail : -1);
      if (other >= 0 && !seen[static_cast<std::size_t>(other)]) {
        seen[static_cast<std::size_t>(other)] = 1;
        queue.push_back(other);
      }
    }
  }
  const Ring ring = Ring::colored(t.color_count(), 2);
  std::vector<Monomial> out;
  for (int v : order) {
    Monomial g(ring.var_count());
    for (int e = 0; e < t.color_count(); ++e)
      g.mul_var(ring.var(t.edges()[static_cast<std::size_t>(e)].label,
                         engine_index(t.points_toward(e, v))));
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace polarix
