#ifndef POLARIX_TEST_HELPERS_HPP
#define POLARIX_TEST_HELPERS_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "polarix/degree_two.hpp"
#include "polarix/isotone.hpp"
#include "polarix/polarization.hpp"

namespace polarix::testing {

struct SetEntry {
  int color;                 // 1-based
  std::vector<int> point;
  std::vector<int> members;  // 1-based
};

/// Family from 1-based entries; anything not listed stays the empty set.
inline IsotoneFamily make_family(int m, int n, const std::vector<SetEntry>& entries) {
  IsotoneFamily f(m, n);
  for (int c = 0; c < m; ++c)
    for (int p = 0; p < static_cast<int>(f.simplex().size()); ++p) f.assign(c, p, 0);
  for (const SetEntry& e : entries) {
    std::vector<int> zero_based;
    for (int j : e.members) zero_based.push_back(j - 1);
    f.assign(e.color - 1, Multidegree(e.point), index_set::from_elements(zero_based));
  }
  return f;
}

/// The ten-generator polarization of (x,y,z)^3 used throughout: one
/// quadratic syzygy edge in each down-triangle.
inline IsotoneFamily worked_example_family() {
  return make_family(
      3, 3,
      {
          {1, {3, 0, 0}, {1, 2, 3}},
          {1, {2, 1, 0}, {1, 2}},
          {2, {2, 1, 0}, {2}},
          {1, {2, 0, 1}, {1, 2}},
          {3, {2, 0, 1}, {2}},
          {1, {1, 2, 0}, {2}},
          {2, {1, 2, 0}, {1, 2}},
          {1, {1, 1, 1}, {1}},
          {2, {1, 1, 1}, {1}},
          {3, {1, 1, 1}, {2}},
          {1, {1, 0, 2}, {1}},
          {3, {1, 0, 2}, {1, 2}},
          {2, {0, 3, 0}, {1, 2, 3}},
          {2, {0, 2, 1}, {1, 2}},
          {3, {0, 2, 1}, {2}},
          {2, {0, 1, 2}, {1}},
          {3, {0, 1, 2}, {2, 3}},
          {3, {0, 0, 3}, {1, 2, 3}},
      });
}

/// Rank-preserving isotone family at (3,2) whose down-triangle has two
/// quadratic syzygy edges; not a polarization.
inline IsotoneFamily two_qs_family() {
  return make_family(3, 2,
                     {
                         {1, {2, 0, 0}, {1, 2}},
                         {1, {1, 1, 0}, {1}},
                         {1, {1, 0, 1}, {2}},
                         {2, {0, 2, 0}, {1, 2}},
                         {2, {1, 1, 0}, {1}},
                         {2, {0, 1, 1}, {1}},
                         {3, {0, 0, 2}, {1, 2}},
                         {3, {1, 0, 1}, {1}},
                         {3, {0, 1, 1}, {2}},
                     });
}

/// Monomial from 1-based (color, index) pairs, squarefree.
inline Monomial mono(const Ring& ring,
                     std::initializer_list<std::pair<int, int>> vars) {
  Monomial g(ring.var_count());
  for (auto [c, j] : vars) g.mul_var(ring.var(c - 1, j - 1));
  return g;
}

/// Example star and path trees on four vertices (vertex 0 is the center
/// resp. the chain head), decorated to give the standard and letterplace
/// polarizations.
inline DirectedLabeledTree star_tree_m3() {
  return DirectedLabeledTree(4, {{1, 0, 0}, {2, 0, 1}, {3, 0, 2}});
}

inline DirectedLabeledTree path_tree_m3() {
  return DirectedLabeledTree(4, {{0, 1, 0}, {1, 2, 1}, {2, 3, 2}});
}

/// Natural polarization of the complete intersection (x_1^n,..,x_m^n):
/// one generator per color, the product of its class.
inline MonomialIdeal natural_ci_polarization(int m, int n) {
  Ring ring = Ring::colored(m, n);
  std::vector<Monomial> gens;
  for (int c = 0; c < m; ++c) {
    Monomial g(ring.var_count());
    for (int j = 0; j < n; ++j) g.mul_var(ring.var(c, j));
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(std::move(ring), std::move(gens));
}

}  // namespace polarix::testing

#endif
