#ifndef POLARIX_ISOTONE_HPP
#define POLARIX_ISOTONE_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polarix/budgets.hpp"
#include "polarix/lattice.hpp"

namespace polarix {

/// Subset of {0,..,n-1} second indices of one variable class, as a bitmask.
using IndexSet = std::uint32_t;

namespace index_set {
constexpr IndexSet kUnset = ~IndexSet{0};
inline IndexSet full(int n) { return (IndexSet{1} << n) - 1; }
inline bool contains(IndexSet s, int j) { return (s >> j) & 1u; }
inline bool subset(IndexSet a, IndexSet b) { return (a & ~b) == 0; }
inline int count(IndexSet s) { return __builtin_popcount(s); }
std::vector<int> elements(IndexSet s);
IndexSet from_elements(const std::vector<int>& elems);
/// Image of s under the index permutation perm (perm[j] = image of j).
IndexSet permute(IndexSet s, const std::vector<int>& perm);
}  // namespace index_set

/// One variable class assignment: the b_i-element subset attached to a point.
struct VarSet {
  int color = 0;
  IndexSet members = 0;
};

/// The m maps X_i : Delta_m(n) -> B(n) of a candidate polarization.
/// Entries default to unset so partially parsed families can be diagnosed.
class IsotoneFamily {
 public:
  IsotoneFamily(int m, int n);
  explicit IsotoneFamily(std::shared_ptr<const Simplex> simplex);

  int m() const { return simplex_->m(); }
  int n() const { return simplex_->n(); }
  const Simplex& simplex() const { return *simplex_; }
  std::shared_ptr<const Simplex> simplex_ptr() const { return simplex_; }

  IndexSet set(int color, int point_idx) const {
    return sets_[static_cast<std::size_t>(color)][static_cast<std::size_t>(point_idx)];
  }
  IndexSet set(int color, const Multidegree& b) const {
    return set(color, simplex_->index_of(b));
  }
  /// The m variable sets attached to one lattice point.
  std::vector<VarSet> var_sets(const Multidegree& b) const {
    std::vector<VarSet> out;
    const int idx = simplex_->index_of(b);
    for (int c = 0; c < m(); ++c) out.push_back({c, set(c, idx)});
    return out;
  }
  void assign(int color, const Multidegree& b, IndexSet s) {
    assign(color, simplex_->index_of(b), s);
  }
  void assign(int color, int point_idx, IndexSet s) {
    sets_[static_cast<std::size_t>(color)][static_cast<std::size_t>(point_idx)] = s;
  }

  /// Flat [color][point] serialization used for canonical-form comparison.
  std::vector<IndexSet> flat() const;

  bool operator==(const IsotoneFamily& o) const {
    return m() == o.m() && n() == o.n() && sets_ == o.sets_;
  }

 private:
  std::shared_ptr<const Simplex> simplex_;
  std::vector<std::vector<IndexSet>> sets_;
};

enum class FamilyStatus { ok, incomplete, rank_violation, isotonicity_violation };

struct ValidationReport {
  FamilyStatus status = FamilyStatus::ok;
  int color = -1;
  Multidegree point;  // first offending point
  Multidegree other;  // comparison partner for isotonicity violations
  std::string message() const;
  explicit operator bool() const { return status == FamilyStatus::ok; }
};

/// Checks rank preservation |X_i(b)| = b_i and isotonicity along the
/// covering relations of each >=_i.
ValidationReport validate_family(const IsotoneFamily& f);

/// Whether the monomials at the two endpoints admit a linear syzygy:
/// X_p(apex-e_i) = X_p(apex-e_j) for every p != i,j.
bool is_ls_edge(const IsotoneFamily& f, const SimplexEdge& e);

/// The subset of down-graph edges at this apex that are LS-edges.
std::vector<SimplexEdge> ls_edges(const IsotoneFamily& f, const Multidegree& apex);

struct PolarizationCheck {
  bool valid = false;
  std::optional<Multidegree> witness;  // first apex whose LS-edges do not span
  explicit operator bool() const { return valid; }
};

/// The spanning-tree criterion: the family defines a polarization iff in
/// every down-graph the LS-edges connect all vertices.  Throws
/// std::invalid_argument when the family itself is not rank-preserving
/// isotone (that is an error, not a negative verdict).
PolarizationCheck is_valid_polarization(const IsotoneFamily& f);

/// Shortest LS-path from a to b through {u : u <= a v b, m(u) | lcm}, or
/// absence.  Under a valid family a path always exists.
std::optional<std::vector<Multidegree>> ls_path(const IsotoneFamily& f,
                                                const Multidegree& a,
                                                const Multidegree& b);

/// Single-coordinate map X : Delta_m(n) -> B(n), isotone for >=_color.
struct CoordinateMap {
  int m = 3;
  int n = 1;
  int color = 0;
  std::vector<IndexSet> sets;  // indexed like Simplex(m,n).points()
};

/// Subset of the interior points Delta_3^+(n+1) prescribing which
/// (c;2,3)-edges are quadratic syzygy edges.
struct QsPattern {
  int n = 1;
  std::vector<Multidegree> points;
};

/// The unique isotone map with the normalized boundary chain
/// emptyset <= {1} <= {1,2} <= ... whose QS-edges in direction (2,3) are
/// exactly the pattern.  Three colors only.
CoordinateMap map_from_qs_pattern(const QsPattern& q);

/// QS-edges of a single map in direction (2,3): the interior apexes c with
/// X(c-e_2) != X(c-e_3).
std::vector<Multidegree> qs_points_of_map(const CoordinateMap& x);

/// All rank-preserving maps isotone for >=_color, in a deterministic order.
std::vector<CoordinateMap> enumerate_coordinate_maps(int m, int n, int color);

/// Lexicographically least serialization over the S_n index relabelings.
CoordinateMap canonical_coordinate_map(const CoordinateMap& x);

/// Least family over the full S_m x (S_n)^m orbit; families are isomorphic
/// iff their canonical forms coincide.
IsotoneFamily canonical_form(const IsotoneFamily& f, const Budgets& budgets = {});

/// Runs fn on every rank-preserving isotone family at (m,n), i.e. the
/// product of the per-color map pools.
void for_each_candidate_family(int m, int n,
                               const std::function<void(const IsotoneFamily&)>& fn);

/// The families passing is_valid_polarization, exhaustively.
std::vector<IsotoneFamily> enumerate_valid_families(int m, int n);

/// All permutations of {0..k-1} in lexicographic order.
std::vector<std::vector<int>> permutations(int k);

/// Relabel a family by a color permutation and per-color index permutations:
/// color c goes to sigma[c], index j of class c goes to tau[c][j].
IsotoneFamily relabel(const IsotoneFamily& f, const std::vector<int>& sigma,
                      const std::vector<std::vector<int>>& tau);

}  // namespace polarix

#endif
