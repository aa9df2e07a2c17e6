#ifndef POLARIX_DEGREE_TWO_HPP
#define POLARIX_DEGREE_TWO_HPP

#include <string>
#include <utility>
#include <vector>

#include "polarix/polarization.hpp"

namespace polarix {

struct TreeEdge {
  int tail = 0;
  int head = 0;
  int label = 0;  // 0-based color
};

/// Directed tree on m+1 vertices with edges labelled by the m colors, each
/// label used once.  Vertices are 0..m.
class DirectedLabeledTree {
 public:
  DirectedLabeledTree(int vertex_count, std::vector<TreeEdge> edges);

  int vertex_count() const { return vertex_count_; }
  int color_count() const { return vertex_count_ - 1; }
  const std::vector<TreeEdge>& edges() const { return edges_; }

  /// e_to: whether edge e points in the direction of vertex v, i.e. v lies
  /// on the head side once e is removed.
  bool points_toward(int edge_index, int v) const;

  /// Path between two vertices as a vertex list.
  std::vector<int> path(int v, int w) const;
  /// Edge of the path incident to its first vertex.
  int incident_path_edge(int v, int w) const;

  std::string dot() const;

 private:
  int vertex_count_;
  std::vector<TreeEdge> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;  // (neighbor, edge index)
  std::vector<std::vector<char>> head_side_;           // [edge][vertex]
};

/// One rainbow generator per vertex: the product over all edges of
/// x_{label(e), 1} when e points toward the vertex and x_{label(e), 2}
/// otherwise.
MonomialIdeal tree_vertex_ideal(const DirectedLabeledTree& t);

/// One quadric per vertex pair, from the path-end edges.
MonomialIdeal tree_pair_ideal(const DirectedLabeledTree& t);

/// All labeled trees on the given vertices, decoded from Prufer sequences.
std::vector<std::vector<std::pair<int, int>>> labeled_trees(int vertex_count);

/// Canonical certificate of the unlabeled tree (iterated leaf stripping).
std::string tree_certificate(const std::vector<std::pair<int, int>>& edges,
                             int vertex_count);

/// One representative DirectedLabeledTree per unlabeled tree on m+1
/// vertices, with a fixed default decoration.
std::vector<DirectedLabeledTree> trees_up_to_iso(int m);

/// Every labeling x orientation decoration of an undirected edge list.
std::vector<DirectedLabeledTree> decorations(
    const std::vector<std::pair<int, int>>& edges, int vertex_count);

/// Generators of tree_vertex_ideal ordered root-first along a linear
/// extension of the away-from-root orientation; linear quotients order.
std::vector<Monomial> tree_linear_quotients_order(const DirectedLabeledTree& t,
                                                  int root);

}  // namespace polarix

#endif
