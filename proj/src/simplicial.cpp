#include "polarix/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "polarix/alexander.hpp"

namespace polarix {

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertex_names,
                                     std::vector<std::uint64_t> facets)
    : names_(std::move(vertex_names)) {
  if (names_.size() > 63)
    throw std::invalid_argument("SimplicialComplex: too many vertices");
  const std::uint64_t universe =
      names_.empty() ? 0 : (~0ull >> (64 - names_.size()));
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  for (std::uint64_t f : facets) {
    if (f & ~universe)
      throw std::invalid_argument("SimplicialComplex: facet outside vertex set");
    bool maximal = true;
    for (std::uint64_t g : facets)
      if (g != f && (f & ~g) == 0) {
        maximal = false;
        break;
      }
    if (maximal) facets_.push_back(f);
  }
}

int SimplicialComplex::dimension() const {
  int best = -2;
  for (std::uint64_t f : facets_)
    best = std::max(best, __builtin_popcountll(f) - 1);
  return best;
}

bool SimplicialComplex::pure() const {
  for (std::uint64_t f : facets_)
    if (__builtin_popcountll(f) != __builtin_popcountll(facets_.front()))
      return false;
  return true;
}

bool SimplicialComplex::is_face(std::uint64_t face) const {
  for (std::uint64_t f : facets_)
    if ((face & ~f) == 0) return true;
  return false;
}

std::vector<std::vector<std::uint64_t>> SimplicialComplex::faces_by_dimension(
    const Budgets& budgets) const {
  std::set<std::uint64_t> all;
  for (std::uint64_t f : facets_) {
    for (std::uint64_t sub = f;; sub = (sub - 1) & f) {
      all.insert(sub);
      if (sub == 0) break;
    }
    if (static_cast<long long>(all.size()) > budgets.complex_faces)
      throw BudgetExceeded("faces_by_dimension: more than " +
                           std::to_string(budgets.complex_faces) + " faces");
  }
  std::vector<std::vector<std::uint64_t>> by_dim(
      static_cast<std::size_t>(dimension() + 2));
  for (std::uint64_t face : all)
    by_dim[static_cast<std::size_t>(__builtin_popcountll(face))].push_back(face);
  return by_dim;
}

std::vector<long long> SimplicialComplex::f_vector(const Budgets& budgets) const {
  std::vector<long long> out;
  for (const auto& level : faces_by_dimension(budgets))
    out.push_back(static_cast<long long>(level.size()));
  return out;
}

SimplicialComplex SimplicialComplex::link(std::uint64_t face) const {
  std::vector<std::uint64_t> link_facets;
  for (std::uint64_t f : facets_)
    if ((face & ~f) == 0) link_facets.push_back(f & ~face);
  return SimplicialComplex(names_, std::move(link_facets));
}

SimplicialComplex complex_from_ideal(const MonomialIdeal& ideal,
                                     const Budgets& budgets) {
  const Ring& ring = ideal.ring();
  std::vector<std::string> names;
  for (int v = 0; v < ring.var_count(); ++v) names.push_back(ring.var_name(v));
  for (const Monomial& g : ideal.generators()) {
    if (!g.squarefree())
      throw std::invalid_argument("complex_from_ideal: ideal not squarefree");
    if (g.is_one()) return SimplicialComplex(std::move(names), {});
  }
  if (ideal.generator_count() == 0) {
    const std::uint64_t full =
        names.empty() ? 0 : (~0ull >> (64 - names.size()));
    return SimplicialComplex(std::move(names), {full});
  }
  std::vector<std::uint64_t> supports;
  for (const Monomial& g : ideal.generators()) {
    std::uint64_t s = 0;
    for (int v : g.support_vars()) s |= 1ull << v;
    supports.push_back(s);
  }
  const std::uint64_t universe = ~0ull >> (64 - names.size());
  std::vector<std::uint64_t> facets;
  for (std::uint64_t t : minimal_transversals(supports, ring.var_count(), budgets))
    facets.push_back(universe & ~t);
  return SimplicialComplex(std::move(names), std::move(facets));
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex,
                                    const Ring& ring) {
  if (ring.var_count() != complex.vertex_count())
    throw std::invalid_argument("stanley_reisner_ideal: vertex count mismatch");
  if (complex.vertex_count() > 22)
    throw BudgetExceeded("stanley_reisner_ideal: vertex sweep too large");
  std::vector<std::uint64_t> minimal_nonfaces;
  const std::uint64_t universe =
      complex.vertex_count() == 0 ? 0 : (~0ull >> (64 - complex.vertex_count()));
  for (std::uint64_t s = 0; s <= universe; ++s) {
    if (complex.is_face(s)) continue;
    bool minimal = true;
    for (int v = 0; minimal && v < complex.vertex_count(); ++v)
      if ((s >> v) & 1ull) minimal = complex.is_face(s & ~(1ull << v));
    if (minimal) minimal_nonfaces.push_back(s);
  }
  std::vector<Monomial> gens;
  for (std::uint64_t s : minimal_nonfaces) {
    Monomial g(ring.var_count());
    for (int v = 0; v < ring.var_count(); ++v)
      if ((s >> v) & 1ull) g.mul_var(v);
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(ring, std::move(gens));
}

namespace {

// Rank over GF(2); rows are packed bit vectors.
int gf2_rank(std::vector<std::vector<std::uint64_t>> rows, int cols) {
  int rank = 0;
  int pivot_row = 0;
  for (int c = 0; c < cols && pivot_row < static_cast<int>(rows.size()); ++c) {
    const std::size_t word = static_cast<std::size_t>(c) / 64;
    const std::uint64_t bit = 1ull << (c % 64);
    int found = -1;
    for (int r = pivot_row; r < static_cast<int>(rows.size()); ++r)
      if (rows[static_cast<std::size_t>(r)][word] & bit) {
        found = r;
        break;
      }
    if (found < 0) continue;
    std::swap(rows[static_cast<std::size_t>(pivot_row)],
              rows[static_cast<std::size_t>(found)]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
      if (r != pivot_row && (rows[static_cast<std::size_t>(r)][word] & bit))
        for (std::size_t w = 0; w < rows[static_cast<std::size_t>(r)].size(); ++w)
          rows[static_cast<std::size_t>(r)][w] ^=
              rows[static_cast<std::size_t>(pivot_row)][w];
    ++pivot_row;
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<long long> reduced_homology_gf2(const SimplicialComplex& complex,
                                            const Budgets& budgets) {
  if (complex.is_void()) return {};
  const auto by_dim = complex.faces_by_dimension(budgets);
  const int top = static_cast<int>(by_dim.size()) - 2;  // top dimension

  // Index maps per dimension.
  std::vector<std::map<std::uint64_t, int>> index(by_dim.size());
  for (std::size_t level = 0; level < by_dim.size(); ++level)
    for (std::size_t i = 0; i < by_dim[level].size(); ++i)
      index[level][by_dim[level][i]] = static_cast<int>(i);

  // ranks[d+1] = rank of boundary C_d -> C_{d-1}.
  std::vector<int> ranks(by_dim.size() + 1, 0);
  for (int d = 0; d <= top; ++d) {
    const auto& sources = by_dim[static_cast<std::size_t>(d) + 1];
    const auto& targets = by_dim[static_cast<std::size_t>(d)];
    if (sources.empty() || targets.empty()) continue;
    const std::size_t words = (targets.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> rows(
        sources.size(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t r = 0; r < sources.size(); ++r) {
      std::uint64_t face = sources[r];
      for (std::uint64_t rest = face; rest;) {
        const int v = __builtin_ctzll(rest);
        rest &= rest - 1;
        const int col = index[static_cast<std::size_t>(d)].at(face & ~(1ull << v));
        rows[r][static_cast<std::size_t>(col) / 64] ^= 1ull
                                                       << (col % 64);
      }
    }
    ranks[static_cast<std::size_t>(d) + 1] =
        gf2_rank(std::move(rows), static_cast<int>(targets.size()));
  }

  std::vector<long long> betti(by_dim.size(), 0);
  for (int d = -1; d <= top; ++d) {
    const long long faces =
        static_cast<long long>(by_dim[static_cast<std::size_t>(d) + 1].size());
    betti[static_cast<std::size_t>(d) + 1] =
        faces - ranks[static_cast<std::size_t>(d) + 1] -
        ranks[static_cast<std::size_t>(d) + 2];
  }
  return betti;
}

std::map<std::uint64_t, int> codim_one_census(const SimplicialComplex& complex) {
  if (complex.is_void())
    throw std::invalid_argument("codim_one_census: void complex");
  if (!complex.pure())
    throw std::invalid_argument("codim_one_census: complex is not pure");
  std::map<std::uint64_t, int> counts;
  for (std::uint64_t f : complex.facets())
    for (std::uint64_t rest = f; rest;) {
      const int v = __builtin_ctzll(rest);
      rest &= rest - 1;
      ++counts[f & ~(1ull << v)];
    }
  return counts;
}

bool linear_quotients_check(const MonomialIdeal& ideal,
                            const std::vector<Monomial>& order) {
  std::vector<Monomial> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Monomial> gens = ideal.generators();
  std::sort(gens.begin(), gens.end());
  if (sorted != gens)
    throw std::invalid_argument(
        "linear_quotients_check: order is not a permutation of the generators");
  for (std::size_t j = 1; j < order.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial witness = order[i].colon(order[j]);
      if (witness.degree() == 1) continue;
      bool dominated = false;
      for (std::size_t k = 0; !dominated && k < j; ++k) {
        const Monomial other = order[k].colon(order[j]);
        dominated = other.degree() == 1 && other.divides(witness);
      }
      if (!dominated) return false;
    }
  }
  return true;
}

namespace {

// Variable ranks from an ascending chain of index sets: indices showing up
// earlier in the chain are greater; simultaneous arrivals are ordered
// descending by index.
std::vector<int> chain_ranks(const std::vector<IndexSet>& chain, int n) {
  std::vector<int> rank(static_cast<std::size_t>(n), -1);
  int next = n;
  IndexSet seen = 0;
  for (IndexSet level : chain) {
    const IndexSet fresh = level & ~seen;
    for (int j = n - 1; j >= 0; --j)
      if (index_set::contains(fresh, j)) rank[static_cast<std::size_t>(j)] = next--;
    seen |= level;
  }
  return rank;
}

}  // namespace

std::vector<Monomial> dual_linear_quotients_order(const IsotoneFamily& f) {
  if (f.m() != 3)
    throw std::invalid_argument("dual_linear_quotients_order: three colors only");
  PolarizationCheck check = is_valid_polarization(f);
  if (!check)
    throw std::invalid_argument(
        "dual_linear_quotients_order: family is not a polarization");

  const int n = f.n();
  const Ring ring = Ring::colored(3, n);
  Simplex below(3, n - 1);

  // Chain-induced orders depend only on the first coordinate of the base.
  std::vector<std::vector<int>> rank_y(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> rank_z(static_cast<std::size_t>(n));
  for (int a = 0; a <= n - 1; ++a) {
    std::vector<IndexSet> chain_y, chain_z;
    for (int k = 1; k <= n - a; ++k) {
      chain_y.push_back(f.set(1, Multidegree({a, k, n - a - k})));
      chain_z.push_back(f.set(2, Multidegree({a, n - a - k, k})));
    }
    rank_y[static_cast<std::size_t>(a)] = chain_ranks(chain_y, n);
    rank_z[static_cast<std::size_t>(a)] = chain_ranks(chain_z, n);
  }

  // Bases arrive lex-descending, which extends "greater first coordinate
  // wins".  Within a triangle sort descending by the product order ranks.
  std::set<std::vector<int>> emitted;
  std::vector<Monomial> order;
  for (const Multidegree& base : below.points()) {
    const int a = base[0];
    struct Entry {
      int rx, ry, rz;
      int x, y, z;
    };
    std::vector<Entry> entries;
    for (int x : index_set::elements(f.set(0, base.plus(0))))
      for (int y : index_set::elements(f.set(1, base.plus(1))))
        for (int z : index_set::elements(f.set(2, base.plus(2))))
          entries.push_back({x, rank_y[static_cast<std::size_t>(a)][static_cast<std::size_t>(y)],
                             rank_z[static_cast<std::size_t>(a)][static_cast<std::size_t>(z)],
                             x, y, z});
    std::sort(entries.begin(), entries.end(), [](const Entry& u, const Entry& v) {
      if (u.rx != v.rx) return u.rx > v.rx;
      if (u.ry != v.ry) return u.ry > v.ry;
      return u.rz > v.rz;
    });
    for (const Entry& e : entries) {
      Monomial g(ring.var_count());
      g.mul_var(ring.var(0, e.x));
      g.mul_var(ring.var(1, e.y));
      g.mul_var(ring.var(2, e.z));
      if (emitted.insert(g.exps()).second) order.push_back(std::move(g));
    }
  }
  return order;
}

namespace {

bool attaches(std::uint64_t facet, const std::vector<std::uint64_t>& earlier) {
  const int size = __builtin_popcountll(facet);
  for (std::uint64_t g : earlier) {
    const std::uint64_t meet = facet & g;
    bool covered = false;
    for (std::uint64_t h : earlier) {
      const std::uint64_t cap = facet & h;
      if (__builtin_popcountll(cap) == size - 1 && (meet & ~cap) == 0) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace

std::optional<std::vector<int>> find_shelling(const SimplicialComplex& complex,
                                              const Budgets& budgets,
                                              const std::vector<int>* hint) {
  const auto& facets = complex.facets();
  const int s = static_cast<int>(facets.size());
  if (s == 0) return std::nullopt;

  if (hint) {
    std::vector<int> check = *hint;
    std::sort(check.begin(), check.end());
    bool permutation = static_cast<int>(check.size()) == s;
    for (int i = 0; permutation && i < s; ++i)
      permutation = check[static_cast<std::size_t>(i)] == i;
    if (permutation) {
      std::vector<std::uint64_t> earlier;
      bool good = true;
      for (int idx : *hint) {
        if (!earlier.empty() &&
            !attaches(facets[static_cast<std::size_t>(idx)], earlier)) {
          good = false;
          break;
        }
        earlier.push_back(facets[static_cast<std::size_t>(idx)]);
      }
      if (good) return *hint;
    }
  }

  if (s > budgets.shelling_facets)
    throw BudgetExceeded("find_shelling: more than " +
                         std::to_string(budgets.shelling_facets) + " facets");
  if (s == 1) return std::vector<int>{0};

  // Memoized reverse search: peel off a facet that attaches to the rest.
  std::vector<signed char> memo(1ull << s, -1);
  const std::function<bool(std::uint64_t)> shellable = [&](std::uint64_t mask) {
    if (__builtin_popcountll(mask) == 1) return true;
    if (memo[mask] >= 0) return memo[mask] == 1;
    memo[mask] = 0;
    for (int last = 0; last < s; ++last) {
      if (!((mask >> last) & 1ull)) continue;
      const std::uint64_t rest = mask & ~(1ull << last);
      std::vector<std::uint64_t> earlier;
      for (int i = 0; i < s; ++i)
        if ((rest >> i) & 1ull) earlier.push_back(facets[static_cast<std::size_t>(i)]);
      if (attaches(facets[static_cast<std::size_t>(last)], earlier) &&
          shellable(rest)) {
        memo[mask] = 1;
        break;
      }
    }
    return memo[mask] == 1;
  };
  const std::uint64_t full = (s == 64) ? ~0ull : ((1ull << s) - 1);
  if (!shellable(full)) return std::nullopt;

  // Reconstruct an order by re-walking the memo.
  std::vector<int> reversed;
  std::uint64_t mask = full;
  while (__builtin_popcountll(mask) > 1) {
    for (int last = 0; last < s; ++last) {
      if (!((mask >> last) & 1ull)) continue;
      const std::uint64_t rest = mask & ~(1ull << last);
      std::vector<std::uint64_t> earlier;
      for (int i = 0; i < s; ++i)
        if ((rest >> i) & 1ull) earlier.push_back(facets[static_cast<std::size_t>(i)]);
      if (attaches(facets[static_cast<std::size_t>(last)], earlier) &&
          shellable(rest)) {
        reversed.push_back(last);
        mask = rest;
        break;
      }
    }
  }
  reversed.push_back(__builtin_ctzll(mask));
  std::reverse(reversed.begin(), reversed.end());
  return reversed;
}

TopologyVerdict ball_or_sphere_verdict(const SimplicialComplex& complex,
                                       const Budgets& budgets,
                                       const std::vector<int>* shelling_hint) {
  TopologyVerdict verdict;
  if (complex.is_void()) {
    verdict.detail = "void complex";
    return verdict;
  }
  const auto counts = codim_one_census(complex);
  verdict.pseudomanifold = true;
  verdict.closed = true;
  bool has_boundary = false;
  for (const auto& [face, count] : counts) {
    if (count != 1 && count != 2) verdict.pseudomanifold = false;
    if (count != 2) verdict.closed = false;
    if (count == 1) has_boundary = true;
  }
  verdict.homology = reduced_homology_gf2(complex, budgets);

  const int d = complex.dimension();
  const auto is_sphere_homology = [&]() {
    for (int i = -1; i <= d; ++i) {
      const long long expect = (i == d) ? 1 : 0;
      if (verdict.homology[static_cast<std::size_t>(i) + 1] != expect) return false;
    }
    return true;
  };
  const auto is_trivial_homology = [&]() {
    return std::all_of(verdict.homology.begin(), verdict.homology.end(),
                       [](long long b) { return b == 0; });
  };

  if (verdict.closed && verdict.pseudomanifold) {
    if (is_sphere_homology()) {
      verdict.kind = BallSphere::sphere;
      verdict.detail = "closed pseudomanifold with the GF(2) homology of S^" +
                       std::to_string(d);
    } else {
      verdict.detail = "closed pseudomanifold, homology not spherical";
    }
    return verdict;
  }
  if (verdict.pseudomanifold && has_boundary) {
    if (!is_trivial_homology()) {
      verdict.detail = "boundary present but homology nontrivial";
      return verdict;
    }
    auto shelling = find_shelling(complex, budgets, shelling_hint);
    verdict.shellable = shelling.has_value();
    if (verdict.shellable) {
      verdict.kind = BallSphere::ball;
      verdict.detail =
          "shellable pseudomanifold with boundary and trivial GF(2) homology";
    } else {
      verdict.detail = "no shelling found";
    }
    return verdict;
  }
  verdict.detail = "codimension-one incidence outside {1,2}";
  return verdict;
}

bool is_cohen_macaulay_gf2(const SimplicialComplex& complex,
                           const Budgets& budgets) {
  if (complex.is_void())
    throw std::invalid_argument("is_cohen_macaulay_gf2: void complex");
  for (const auto& level : complex.faces_by_dimension(budgets))
    for (std::uint64_t face : level) {
      const SimplicialComplex lk = complex.link(face);
      const auto betti = reduced_homology_gf2(lk, budgets);
      const int dim = lk.dimension();
      for (int i = -1; i < dim; ++i)
        if (betti[static_cast<std::size_t>(i) + 1] != 0) return false;
    }
  return true;
}

}  // namespace polarix
