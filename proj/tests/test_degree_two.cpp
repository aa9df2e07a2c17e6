#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "polarix/alexander.hpp"
#include "polarix/degree_two.hpp"
#include "polarix/simplicial.hpp"
#include "test_helpers.hpp"

using namespace polarix;
using namespace polarix::testing;

namespace {

std::set<std::vector<int>> exponent_set(const MonomialIdeal& ideal) {
  std::set<std::vector<int>> out;
  for (const Monomial& g : ideal.generators()) out.insert(g.exps());
  return out;
}

}  // namespace

TEST_CASE("tree construction validates its input") {
  CHECK_THROWS_AS(DirectedLabeledTree(3, {{0, 1, 0}, {0, 1, 1}}),
                  std::invalid_argument);  // disconnected / parallel
  CHECK_THROWS_AS(DirectedLabeledTree(4, {{0, 1, 0}, {1, 2, 0}, {2, 3, 2}}),
                  std::invalid_argument);  // repeated label
  CHECK_THROWS_AS(DirectedLabeledTree(4, {{0, 1, 0}, {1, 2, 1}, {2, 2, 2}}),
                  std::invalid_argument);  // loop
}

TEST_CASE("edge direction semantics") {
  const DirectedLabeledTree path = path_tree_m3();  // 0 -> 1 -> 2 -> 3
  CHECK(path.points_toward(0, 1));
  CHECK(path.points_toward(0, 3));
  CHECK_FALSE(path.points_toward(0, 0));
  CHECK_FALSE(path.points_toward(2, 0));
  CHECK(path.path(0, 3) == std::vector<int>{0, 1, 2, 3});
  CHECK(path.incident_path_edge(0, 3) == 0);
  CHECK(path.incident_path_edge(3, 0) == 2);
}

TEST_CASE("the star tree gives the standard polarization") {
  const MonomialIdeal ideal = tree_pair_ideal(star_tree_m3());
  CHECK(ideal == generators_from_family(standard_family(3, 2)));

  const Ring& r = ideal.ring();
  std::set<std::vector<int>> expected;
  for (const Monomial& g :
       {mono(r, {{1, 1}, {1, 2}}), mono(r, {{1, 1}, {2, 1}}),
        mono(r, {{2, 1}, {2, 2}}), mono(r, {{1, 1}, {3, 1}}),
        mono(r, {{2, 1}, {3, 1}}), mono(r, {{3, 1}, {3, 2}})})
    expected.insert(g.exps());
  CHECK(exponent_set(ideal) == expected);
}

TEST_CASE("the path tree gives the letterplace ideal") {
  CHECK(tree_pair_ideal(path_tree_m3()) == generators_from_family(b_family(3, 2)));
}

TEST_CASE("a five-vertex caterpillar tree") {
  const DirectedLabeledTree t(5, {{0, 2, 0}, {1, 2, 1}, {2, 3, 2}, {3, 4, 3}});
  const MonomialIdeal ideal = tree_pair_ideal(t);
  const Ring& r = ideal.ring();
  std::set<std::vector<int>> expected;
  for (const Monomial& g :
       {mono(r, {{1, 1}, {1, 2}}), mono(r, {{2, 1}, {2, 2}}),
        mono(r, {{3, 1}, {3, 2}}), mono(r, {{4, 1}, {4, 2}}),
        mono(r, {{1, 1}, {2, 1}}), mono(r, {{1, 1}, {3, 2}}),
        mono(r, {{1, 1}, {4, 2}}), mono(r, {{2, 1}, {3, 2}}),
        mono(r, {{2, 1}, {4, 2}}), mono(r, {{3, 1}, {4, 2}})})
    expected.insert(g.exps());
  CHECK(exponent_set(ideal) == expected);
  CHECK(ideal.generator_count() == 10);  // C(5,2)
}

TEST_CASE("vertex ideals are rainbow with one generator per vertex") {
  for (const DirectedLabeledTree& t : {star_tree_m3(), path_tree_m3()}) {
    const MonomialIdeal ideal = tree_vertex_ideal(t);
    CHECK(ideal.generator_count() == t.vertex_count());
    for (const Monomial& g : ideal.generators())
      CHECK(is_rainbow(g, ideal.ring()));
  }
}

TEST_CASE("labeled tree counts follow Cayley") {
  CHECK(labeled_trees(2).size() == 1);
  CHECK(labeled_trees(4).size() == 16);
  CHECK(labeled_trees(5).size() == 125);
}

TEST_CASE("unlabeled tree counts") {
  CHECK(trees_up_to_iso(3).size() == 2);
  CHECK(trees_up_to_iso(4).size() == 3);
  CHECK(trees_up_to_iso(5).size() == 6);
}

TEST_CASE("certificates separate exactly the isomorphism classes") {
  // On 5 vertices: star, path and the spider are pairwise distinct.
  std::vector<std::vector<std::pair<int, int>>> trees = {
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}},
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}},
      {{0, 2}, {1, 2}, {2, 3}, {3, 4}}};
  std::set<std::string> certs;
  for (const auto& t : trees) certs.insert(tree_certificate(t, 5));
  CHECK(certs.size() == 3);
  // Relabeling vertices keeps the certificate.
  CHECK(tree_certificate({{4, 3}, {4, 2}, {4, 1}, {4, 0}}, 5) ==
        tree_certificate({{0, 1}, {0, 2}, {0, 3}, {0, 4}}, 5));
}

TEST_CASE("pair and vertex ideals of a tree are Alexander dual") {
  for (int m = 2; m <= 3; ++m)
    for (const auto& edges : labeled_trees(m + 1))
      for (const DirectedLabeledTree& t : decorations(edges, m + 1)) {
        CHECK(alexander_dual_oracle(tree_pair_ideal(t)) == tree_vertex_ideal(t));
        CHECK(is_polarization_oracle(tree_pair_ideal(t), m, 2));
      }
  // Five colors: the ideals do not see vertex names, so decorating the
  // class representatives reaches every pair/vertex ideal.
  for (const DirectedLabeledTree& rep : trees_up_to_iso(5)) {
    std::vector<std::pair<int, int>> edges;
    for (const TreeEdge& e : rep.edges()) edges.push_back({e.tail, e.head});
    for (const DirectedLabeledTree& t : decorations(edges, 6))
      CHECK(alexander_dual_oracle(tree_pair_ideal(t)) == tree_vertex_ideal(t));
  }
}

TEST_CASE("every valid two-degree family comes from a tree") {
  // Exhaustive at three colors: the 32 valid families are exactly the
  // tree-pair ideals, and they fall into two isomorphism classes.
  std::set<std::vector<IndexSet>> from_trees;
  for (const auto& edges : labeled_trees(4))
    for (const DirectedLabeledTree& t : decorations(edges, 4))
      from_trees.insert(family_from_ideal(tree_pair_ideal(t), 3, 2).flat());

  std::set<std::vector<IndexSet>> valid;
  std::set<std::vector<IndexSet>> canonical;
  for (const IsotoneFamily& f : enumerate_valid_families(3, 2)) {
    valid.insert(f.flat());
    canonical.insert(canonical_form(f).flat());
  }
  CHECK(valid == from_trees);
  CHECK(canonical.size() == 2);
}

TEST_CASE("isomorphism of pair ideals tracks the unlabeled tree") {
  for (int m = 3; m <= 4; ++m) {
    const auto classes = trees_up_to_iso(m);
    std::set<std::vector<IndexSet>> all_canon;
    for (const DirectedLabeledTree& rep : classes) {
      std::vector<std::pair<int, int>> edges;
      for (const TreeEdge& e : rep.edges()) edges.push_back({e.tail, e.head});
      std::set<std::vector<IndexSet>> canon;
      for (const DirectedLabeledTree& t : decorations(edges, m + 1))
        canon.insert(
            canonical_form(family_from_ideal(tree_pair_ideal(t), m, 2)).flat());
      CHECK(canon.size() == 1);  // one class per unlabeled tree
      all_canon.insert(canon.begin(), canon.end());
    }
    CHECK(all_canon.size() == classes.size());  // distinct trees stay distinct
  }
}

TEST_CASE("valid four-color families match the tree classification") {
  std::set<std::vector<IndexSet>> valid_canon;
  for (const IsotoneFamily& f : enumerate_valid_families(4, 2))
    valid_canon.insert(canonical_form(f).flat());
  std::set<std::vector<IndexSet>> tree_canon;
  for (const DirectedLabeledTree& rep : trees_up_to_iso(4))
    tree_canon.insert(
        canonical_form(family_from_ideal(tree_pair_ideal(rep), 4, 2)).flat());
  CHECK(valid_canon == tree_canon);
  CHECK(valid_canon.size() == 3);
}

TEST_CASE("away-from-root orders give linear quotients, decorated") {
  for (int m = 2; m <= 3; ++m)
    for (const auto& edges : labeled_trees(m + 1))
      for (const DirectedLabeledTree& t : decorations(edges, m + 1)) {
        const MonomialIdeal ideal = tree_vertex_ideal(t);
        for (int root = 0; root < t.vertex_count(); ++root)
          CHECK(linear_quotients_check(ideal,
                                       tree_linear_quotients_order(t, root)));
      }
}

TEST_CASE("away-from-root orders give linear quotients") {
  for (int m = 2; m <= 5; ++m)
    for (const DirectedLabeledTree& t : trees_up_to_iso(m)) {
      const MonomialIdeal ideal = tree_vertex_ideal(t);
      for (int root = 0; root < t.vertex_count(); ++root) {
        const auto order = tree_linear_quotients_order(t, root);
        // The root's monomial leads.
        Monomial first(ideal.ring().var_count());
        for (int e = 0; e < m; ++e)
          first.mul_var(ideal.ring().var(t.edges()[static_cast<std::size_t>(e)].label,
                                         t.points_toward(e, root) ? 0 : 1));
        CHECK(order.front() == first);
        CHECK(linear_quotients_check(ideal, order));
      }
    }
}

TEST_CASE("an arbitrary order can fail linear quotients") {
  // Two antipodal generators of the path tree share nothing linear.
  const DirectedLabeledTree t = path_tree_m3();
  const MonomialIdeal ideal = tree_vertex_ideal(t);
  auto gens = ideal.generators();
  std::sort(gens.begin(), gens.end());
  // Find an ordering that breaks: start with the two ends of the path.
  bool found_bad = false;
  std::vector<std::size_t> idx(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i) idx[i] = i;
  do {
    std::vector<Monomial> order;
    for (std::size_t i : idx) order.push_back(gens[i]);
    if (!linear_quotients_check(ideal, order)) {
      found_bad = true;
      break;
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  CHECK(found_bad);
}
