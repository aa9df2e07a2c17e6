#include <doctest.h>

#include <algorithm>
#include <set>

#include "polarix/polarization.hpp"
#include "test_helpers.hpp"

using namespace polarix;
using namespace polarix::testing;

namespace {

std::set<std::vector<int>> exponent_set(const MonomialIdeal& ideal) {
  std::set<std::vector<int>> out;
  for (const Monomial& g : ideal.generators()) out.insert(g.exps());
  return out;
}

// Test-side Hilbert function oracle: count monomials of each degree outside
// the ideal by direct enumeration.
long long count_standard_monomials(const MonomialIdeal& ideal, int degree) {
  const int vars = ideal.ring().var_count();
  long long count = 0;
  std::vector<int> exps(static_cast<std::size_t>(vars), 0);
  const std::function<void(int, int)> sweep = [&](int v, int left) {
    if (v == vars - 1) {
      exps[static_cast<std::size_t>(v)] = left;
      if (!ideal.contains(Monomial(exps))) ++count;
      return;
    }
    for (int e = 0; e <= left; ++e) {
      exps[static_cast<std::size_t>(v)] = e;
      sweep(v + 1, left - e);
    }
  };
  sweep(0, degree);
  return count;
}

}  // namespace

TEST_CASE("ring naming and layout") {
  Ring r = Ring::colored(2, 2);
  CHECK(r.var_count() == 4);
  CHECK(r.var_name(r.var(0, 1)) == "x_(1,2)");
  Ring c = Ring::collapsed(3);
  CHECK(c.var_name(1) == "x_2");
  Ring mixed = Ring::with_sizes({3, 2});
  CHECK(mixed.var_count() == 5);
  CHECK(mixed.color_of(3) == 1);
  CHECK(mixed.index_of(3) == 0);
}

TEST_CASE("minimal generating sets") {
  Ring r = Ring::collapsed(2);
  Monomial x2({2, 0}), xy({1, 1}), x2y({2, 1});
  MonomialIdeal ideal(r, {x2, xy, x2y, xy});
  CHECK(ideal.generator_count() == 2);
  CHECK(ideal.contains(x2y));
  CHECK_FALSE(ideal.contains(Monomial({0, 3})));
}

TEST_CASE("the worked example generators, monomial by monomial") {
  const MonomialIdeal ideal = generators_from_family(worked_example_family());
  const Ring& r = ideal.ring();
  std::set<std::vector<int>> expected;
  // x1x2x3, x1x2y2, x1x2z2, x2y1y2, x1y1z2, x1z1z2, y1y2y3, y1y2z2,
  // y1z2z3, z1z2z3.
  for (const Monomial& g : {
           mono(r, {{1, 1}, {1, 2}, {1, 3}}),
           mono(r, {{1, 1}, {1, 2}, {2, 2}}),
           mono(r, {{1, 1}, {1, 2}, {3, 2}}),
           mono(r, {{1, 2}, {2, 1}, {2, 2}}),
           mono(r, {{1, 1}, {2, 1}, {3, 2}}),
           mono(r, {{1, 1}, {3, 1}, {3, 2}}),
           mono(r, {{2, 1}, {2, 2}, {2, 3}}),
           mono(r, {{2, 1}, {2, 2}, {3, 2}}),
           mono(r, {{2, 1}, {3, 2}, {3, 3}}),
           mono(r, {{3, 1}, {3, 2}, {3, 3}}),
       })
    expected.insert(g.exps());
  CHECK(exponent_set(ideal) == expected);
  for (const Monomial& g : ideal.generators()) {
    CHECK(g.squarefree());
    CHECK(g.degree() == 3);
  }
}

TEST_CASE("standard and b polarizations at two colors") {
  const MonomialIdeal std22 = generators_from_family(standard_family(2, 2));
  const Ring& r = std22.ring();
  CHECK(exponent_set(std22) ==
        exponent_set(MonomialIdeal(r, {mono(r, {{1, 1}, {1, 2}}),
                                       mono(r, {{1, 1}, {2, 1}}),
                                       mono(r, {{2, 1}, {2, 2}})})));
  const MonomialIdeal b22 = generators_from_family(b_family(2, 2));
  CHECK(exponent_set(b22) ==
        exponent_set(MonomialIdeal(r, {mono(r, {{1, 1}, {1, 2}}),
                                       mono(r, {{1, 1}, {2, 2}}),
                                       mono(r, {{2, 1}, {2, 2}})})));
}

TEST_CASE("the b-polarization at (3,2) is the letterplace ideal") {
  const MonomialIdeal b32 = generators_from_family(b_family(3, 2));
  const Ring& r = b32.ring();
  std::set<std::vector<int>> expected;
  for (const Monomial& g : {
           mono(r, {{1, 1}, {1, 2}}), mono(r, {{1, 1}, {2, 2}}),
           mono(r, {{2, 1}, {2, 2}}), mono(r, {{1, 1}, {3, 2}}),
           mono(r, {{2, 1}, {3, 2}}), mono(r, {{3, 1}, {3, 2}})})
    expected.insert(g.exps());
  CHECK(exponent_set(b32) == expected);
}

TEST_CASE("generator counts and degrees across families") {
  for (int m = 2; m <= 4; ++m)
    for (int n = 1; n <= 3; ++n) {
      const MonomialIdeal ideal = generators_from_family(standard_family(m, n));
      CHECK(ideal.generator_count() == simplex_point_count(m, n));
      for (const Monomial& g : ideal.generators()) {
        CHECK(g.degree() == n);
        CHECK(g.squarefree());
      }
    }
}

TEST_CASE("collapse recovers the maximal ideal power") {
  const MonomialIdeal std22 = generators_from_family(standard_family(2, 2));
  const MonomialIdeal collapsed = collapse(std22);
  CHECK(collapsed == maximal_power_ideal(2, 2));
  CHECK(collapsed.generator_count() == 3);

  CHECK(collapse(generators_from_family(worked_example_family())) ==
        maximal_power_ideal(3, 3));

  // Collapse alone does not certify: the invalid family also collapses to
  // the maximal power.
  CHECK(collapse(generators_from_family(two_qs_family())) ==
        maximal_power_ideal(3, 2));
}

TEST_CASE("hilbert numerator basics") {
  CHECK(hilbert_numerator(MonomialIdeal(Ring::collapsed(2), {})).coeffs ==
        std::vector<long long>{1});

  const HilbertNumerator power = hilbert_numerator(maximal_power_ideal(2, 2));
  CHECK(power.coeffs == std::vector<long long>{1, 0, -3, 2});
  CHECK(power.str() == "1 - 3*t^2 + 2*t^3");

  const MonomialIdeal std22 = generators_from_family(standard_family(2, 2));
  CHECK(hilbert_numerator(std22) == power);
}

TEST_CASE("hilbert numerator against the counting oracle") {
  for (const MonomialIdeal& ideal :
       {maximal_power_ideal(2, 2), generators_from_family(standard_family(2, 2)),
        generators_from_family(two_qs_family())}) {
    const HilbertNumerator num = hilbert_numerator(ideal);
    const auto h = hilbert_function(num, ideal.ring().var_count(), 6);
    for (int d = 0; d <= 6; ++d) CHECK(h[static_cast<std::size_t>(d)] ==
                                       count_standard_monomials(ideal, d));
  }
}

TEST_CASE("hilbert numerator budget") {
  Budgets tiny;
  tiny.hilbert_subsets = 4;
  CHECK_THROWS_AS(hilbert_numerator(maximal_power_ideal(2, 2), tiny),
                  BudgetExceeded);
}

TEST_CASE("the polarization oracle certifies and refutes") {
  CHECK(is_polarization_oracle(generators_from_family(worked_example_family()), 3, 3));
  CHECK(is_polarization_oracle(generators_from_family(standard_family(2, 2)), 2, 2));
  CHECK_FALSE(is_polarization_oracle(generators_from_family(two_qs_family()), 3, 2));
}

TEST_CASE("complete intersections certify through the numerator only") {
  const MonomialIdeal ci = natural_ci_polarization(2, 2);
  // Not a polarization of (x,y)^2: the collapse is (x^2, y^2).
  CHECK_FALSE(is_polarization_oracle(ci, 2, 2));
  CHECK(collapse(ci) != maximal_power_ideal(2, 2));
  // The regular-sequence certificate itself holds.
  CHECK(hilbert_numerator(ci) == hilbert_numerator(collapse(ci)));
}

TEST_CASE("non-squarefree ideals never certify") {
  Ring r = Ring::colored(2, 2);
  Monomial sq(r.var_count());
  sq.mul_var(r.var(0, 0), 2);
  CHECK_FALSE(is_polarization_oracle(MonomialIdeal(r, {sq}), 2, 2));
}

TEST_CASE("simple separations, twice, from the squared ideal example") {
  // I = (x^2 y^2, x^2 z^2, y^2 z^2) separates to its standard polarization
  // and once more in the x-class.
  Ring r222 = Ring::with_sizes({2, 2, 2});
  const MonomialIdeal base(
      r222, {mono(r222, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}),
             mono(r222, {{1, 1}, {1, 2}, {3, 1}, {3, 2}}),
             mono(r222, {{2, 1}, {2, 2}, {3, 1}, {3, 2}})});

  Ring r322 = Ring::with_sizes({3, 2, 2});
  const MonomialIdeal mid(
      r322, {mono(r322, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}),
             mono(r322, {{1, 3}, {1, 2}, {3, 1}, {3, 2}}),
             mono(r322, {{2, 1}, {2, 2}, {3, 1}, {3, 2}})});

  Ring r422 = Ring::with_sizes({4, 2, 2});
  const MonomialIdeal top(
      r422, {mono(r422, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}),
             mono(r422, {{1, 3}, {1, 4}, {3, 1}, {3, 2}}),
             mono(r422, {{2, 1}, {2, 2}, {3, 1}, {3, 2}})});

  // Merge x_(1,3) into x_(1,1): mid -> base.
  CHECK(is_simple_separation(mid, base, 0, 2, 0));
  // Merge x_(1,4) into x_(1,2): top -> mid.
  CHECK(is_simple_separation(top, mid, 0, 3, 1));

  // Identity maps and cross-color merges are contract violations.
  CHECK_THROWS_AS(is_simple_separation(base, base, 0, 0, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_simple_separation(mid, base, 1, 2, 0),
                  std::invalid_argument);
}

TEST_CASE("a failed separation is false, not an error") {
  // Merging the two x-variables of the b-polarization of (x,y)^2 where the
  // image is a different ideal.
  Ring big = Ring::with_sizes({2, 1});
  Ring small = Ring::with_sizes({1, 1});
  const MonomialIdeal two(big, {mono(big, {{1, 1}, {1, 2}}),
                                mono(big, {{1, 1}, {2, 1}})});
  const MonomialIdeal wrong(small, {mono(small, {{1, 1}})});
  CHECK_FALSE(is_simple_separation(two, wrong, 0, 1, 0));
}

TEST_CASE("nested parts across comparable points") {
  CHECK(parts_divisibility_holds(worked_example_family()));
  for (int m = 2; m <= 4; ++m)
    for (int n = 1; n <= 3; ++n) CHECK(parts_divisibility_holds(standard_family(m, n)));

  IsotoneFamily corrupted = standard_family(3, 3);
  corrupted.assign(0, Multidegree({1, 1, 1}), index_set::from_elements({2}));
  CHECK_FALSE(parts_divisibility_holds(corrupted));
}

TEST_CASE("down-graph vertices share the predicted common factor") {
  // The product of the i-th parts at the off-vertices divides every vertex
  // monomial of the down-graph.
  for (const IsotoneFamily& f : {worked_example_family(), b_family(4, 2)}) {
    Simplex above(f.m(), f.n() + 1);
    for (const Multidegree& apex : above.points()) {
      const auto supp = apex.support();
      for (int v : supp) {
        const int idx = f.simplex().index_of(apex.minus(v));
        for (int i : supp)
          CHECK(index_set::subset(f.set(i, apex.minus(i)), f.set(i, idx)));
      }
    }
  }
}

TEST_CASE("family round trip through its ideal") {
  for (const IsotoneFamily& f :
       {standard_family(3, 2), b_family(3, 3), worked_example_family()}) {
    const MonomialIdeal ideal = generators_from_family(f);
    CHECK(family_from_ideal(ideal, f.m(), f.n()) == f);
  }
}
