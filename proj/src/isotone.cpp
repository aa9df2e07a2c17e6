#include "polarix/isotone.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace polarix {

namespace index_set {

std::vector<int> elements(IndexSet s) {
  std::vector<int> out;
  for (int j = 0; s; ++j, s >>= 1)
    if (s & 1u) out.push_back(j);
  return out;
}

IndexSet from_elements(const std::vector<int>& elems) {
  IndexSet s = 0;
  for (int j : elems) {
    if (j < 0 || j > 30) throw std::invalid_argument("index out of range");
    s |= IndexSet{1} << j;
  }
  return s;
}

IndexSet permute(IndexSet s, const std::vector<int>& perm) {
  IndexSet out = 0;
  for (int j = 0; j < static_cast<int>(perm.size()); ++j)
    if (contains(s, j)) out |= IndexSet{1} << perm[static_cast<std::size_t>(j)];
  return out;
}

}  // namespace index_set

IsotoneFamily::IsotoneFamily(int m, int n)
    : IsotoneFamily(Simplex::shared(m, n)) {}

IsotoneFamily::IsotoneFamily(std::shared_ptr<const Simplex> simplex)
    : simplex_(std::move(simplex)) {
  if (simplex_->n() < 1 || simplex_->n() > 30)
    throw std::invalid_argument("IsotoneFamily: n out of range");
  sets_.assign(static_cast<std::size_t>(simplex_->m()),
               std::vector<IndexSet>(simplex_->size(), index_set::kUnset));
}

std::vector<IndexSet> IsotoneFamily::flat() const {
  std::vector<IndexSet> out;
  out.reserve(sets_.size() * simplex_->size());
  for (const auto& per_color : sets_)
    out.insert(out.end(), per_color.begin(), per_color.end());
  return out;
}

std::string ValidationReport::message() const {
  std::ostringstream out;
  switch (status) {
    case FamilyStatus::ok:
      return "ok";
    case FamilyStatus::incomplete:
      out << "missing assignment for color " << color + 1 << " at " << point.str();
      break;
    case FamilyStatus::rank_violation:
      out << "rank violation for color " << color + 1 << " at " << point.str();
      break;
    case FamilyStatus::isotonicity_violation:
      out << "isotonicity violation for color " << color + 1 << ": set at "
          << point.str() << " not contained in set at " << other.str();
      break;
  }
  return out.str();
}

ValidationReport validate_family(const IsotoneFamily& f) {
  const Simplex& s = f.simplex();
  for (int c = 0; c < f.m(); ++c)
    for (int p = 0; p < static_cast<int>(s.size()); ++p) {
      if (f.set(c, p) == index_set::kUnset)
        return {FamilyStatus::incomplete, c, s.point(p), {}};
      if (index_set::count(f.set(c, p)) != s.point(p)[c])
        return {FamilyStatus::rank_violation, c, s.point(p), {}};
      if (!index_set::subset(f.set(c, p), index_set::full(f.n())))
        return {FamilyStatus::rank_violation, c, s.point(p), {}};
    }
  // Isotonicity along covering relations b = a + e_c - e_j implies the full
  // order since >=_c is graded.
  for (int c = 0; c < f.m(); ++c)
    for (const Multidegree& b : s.points()) {
      if (b[c] == 0) continue;
      for (int j = 0; j < f.m(); ++j) {
        if (j == c) continue;
        Multidegree a = b.minus(c).plus(j);
        if (!index_set::subset(f.set(c, a), f.set(c, b)))
          return {FamilyStatus::isotonicity_violation, c, a, b};
      }
    }
  return {};
}

bool is_ls_edge(const IsotoneFamily& f, const SimplexEdge& e) {
  const int lo = f.simplex().index_of(e.endpoint_low());
  const int hi = f.simplex().index_of(e.endpoint_high());
  for (int p = 0; p < f.m(); ++p) {
    if (p == e.i || p == e.j) continue;
    if (f.set(p, lo) != f.set(p, hi)) return false;
  }
  return true;
}

std::vector<SimplexEdge> ls_edges(const IsotoneFamily& f, const Multidegree& apex) {
  std::vector<SimplexEdge> out;
  std::vector<int> supp = apex.support();
  for (std::size_t p = 0; p < supp.size(); ++p)
    for (std::size_t q = p + 1; q < supp.size(); ++q) {
      SimplexEdge e{apex, supp[p], supp[q]};
      if (is_ls_edge(f, e)) out.push_back(e);
    }
  return out;
}

namespace {

bool ls_edges_span(const IsotoneFamily& f, const Multidegree& apex) {
  std::vector<int> supp = apex.support();
  const int k = static_cast<int>(supp.size());
  if (k <= 1) return true;
  std::vector<int> comp(static_cast<std::size_t>(k));
  std::iota(comp.begin(), comp.end(), 0);
  const auto root = [&](int v) {
    while (comp[static_cast<std::size_t>(v)] != v) v = comp[static_cast<std::size_t>(v)];
    return v;
  };
  for (int p = 0; p < k; ++p)
    for (int q = p + 1; q < k; ++q)
      if (is_ls_edge(f, SimplexEdge{apex, supp[static_cast<std::size_t>(p)],
                                    supp[static_cast<std::size_t>(q)]}))
        comp[static_cast<std::size_t>(root(p))] = root(q);
  for (int v = 1; v < k; ++v)
    if (root(v) != root(0)) return false;
  return true;
}

}  // namespace

PolarizationCheck is_valid_polarization(const IsotoneFamily& f) {
  ValidationReport report = validate_family(f);
  if (!report)
    throw std::invalid_argument("is_valid_polarization: " + report.message());
  Simplex above(f.m(), f.n() + 1);
  for (const Multidegree& apex : above.points())
    if (!ls_edges_span(f, apex)) return {false, apex};
  return {true, std::nullopt};
}

std::optional<std::vector<Multidegree>> ls_path(const IsotoneFamily& f,
                                                const Multidegree& a,
                                                const Multidegree& b) {
  const Simplex& s = f.simplex();
  const int ia = s.index_of(a);
  const int ib = s.index_of(b);
  const Multidegree top = join(a, b);

  // Admissible: u <= a v b and X_i(u) inside X_i(a) | X_i(b) for every i.
  std::vector<char> admissible(s.size(), 0);
  for (int p = 0; p < static_cast<int>(s.size()); ++p) {
    const Multidegree& u = s.point(p);
    bool ok = true;
    for (int i = 0; ok && i < f.m(); ++i)
      ok = u[i] <= top[i] &&
           index_set::subset(f.set(i, p), f.set(i, ia) | f.set(i, ib));
    admissible[static_cast<std::size_t>(p)] = ok ? 1 : 0;
  }
  if (!admissible[static_cast<std::size_t>(ia)] ||
      !admissible[static_cast<std::size_t>(ib)])
    return std::nullopt;

  std::vector<int> prev(s.size(), -2);
  std::deque<int> queue{ia};
  prev[static_cast<std::size_t>(ia)] = -1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (u == ib) break;
    for (int v = 0; v < static_cast<int>(s.size()); ++v) {
      if (!admissible[static_cast<std::size_t>(v)] ||
          prev[static_cast<std::size_t>(v)] != -2)
        continue;
      auto edge = Simplex::edge_between(s.point(u), s.point(v));
      if (!edge || !is_ls_edge(f, *edge)) continue;
      prev[static_cast<std::size_t>(v)] = u;
      queue.push_back(v);
    }
  }
  if (prev[static_cast<std::size_t>(ib)] == -2) return std::nullopt;
  std::vector<Multidegree> path;
  for (int v = ib; v != -1; v = prev[static_cast<std::size_t>(v)])
    path.push_back(s.point(v));
  std::reverse(path.begin(), path.end());
  return path;
}

CoordinateMap map_from_qs_pattern(const QsPattern& q) {
  const int n = q.n;
  if (n < 1 || n > 30) throw std::invalid_argument("map_from_qs_pattern: bad n");
  std::map<std::vector<int>, bool> in_q;
  for (const Multidegree& c : q.points) {
    if (c.size() != 3 || c.degree() != n + 1 || c.support().size() != 3)
      throw std::invalid_argument(
          "map_from_qs_pattern: pattern point " + c.str() +
          " is not interior to Delta_3(" + std::to_string(n + 1) + ")");
    in_q[c.coords()] = true;
  }

  CoordinateMap x{3, n, 0, {}};
  Simplex s(3, n);
  x.sets.assign(s.size(), 0);
  // Boundary chain X(p,0,n-p) = {1..p} and the zero level X(0,q,n-q) = {}.
  for (int p = 0; p <= n; ++p)
    x.sets[static_cast<std::size_t>(s.index_of(Multidegree({p, 0, n - p})))] =
        index_set::full(p);
  // Row by row: with A, C, D known, the unknown B is C on an LS-edge and
  // A | (D \ C) on a QS-edge.
  for (int row = 1; row <= n; ++row)
    for (int p = 1; p <= n - row; ++p) {
      IndexSet a = x.sets[static_cast<std::size_t>(
          s.index_of(Multidegree({p - 1, row, n - p - row + 1})))];
      IndexSet c = x.sets[static_cast<std::size_t>(
          s.index_of(Multidegree({p, row - 1, n - p - row + 1})))];
      IndexSet d = x.sets[static_cast<std::size_t>(
          s.index_of(Multidegree({p + 1, row - 1, n - p - row})))];
      const bool qs = in_q.count({p, row, n - p - row + 1}) > 0;
      x.sets[static_cast<std::size_t>(s.index_of(Multidegree({p, row, n - p - row})))] =
          qs ? (a | (d & ~c)) : c;
    }
  return x;
}

std::vector<Multidegree> qs_points_of_map(const CoordinateMap& x) {
  if (x.m != 3) throw std::invalid_argument("qs_points_of_map: three colors only");
  Simplex s(3, x.n);
  Simplex above(3, x.n + 1);
  std::vector<Multidegree> out;
  for (const Multidegree& c : above.points()) {
    if (c[0] < 1 || c[1] < 1 || c[2] < 1) continue;
    IndexSet left = x.sets[static_cast<std::size_t>(s.index_of(c.minus(1)))];
    IndexSet right = x.sets[static_cast<std::size_t>(s.index_of(c.minus(2)))];
    if (left != right) out.push_back(c);
  }
  return out;
}

std::vector<CoordinateMap> enumerate_coordinate_maps(int m, int n, int color) {
  Simplex s(m, n);
  // Points in increasing rank so lower covers are already assigned.
  std::vector<int> order(s.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int u, int v) {
    return s.point(u)[color] < s.point(v)[color];
  });

  std::vector<CoordinateMap> result;
  std::vector<IndexSet> sets(s.size(), 0);
  const IndexSet universe = index_set::full(n);

  const std::function<void(std::size_t)> rec = [&](std::size_t step) {
    if (step == order.size()) {
      result.push_back(CoordinateMap{m, n, color, sets});
      return;
    }
    const int idx = order[step];
    const Multidegree& b = s.point(idx);
    const int rank = b[color];
    IndexSet lower = 0;
    if (rank > 0)
      for (int j = 0; j < m; ++j) {
        if (j == color) continue;
        lower |= sets[static_cast<std::size_t>(s.index_of(b.minus(color).plus(j)))];
      }
    for (IndexSet cand = 0; cand <= universe; ++cand) {
      if (index_set::count(cand) != rank || !index_set::subset(lower, cand)) continue;
      sets[static_cast<std::size_t>(idx)] = cand;
      rec(step + 1);
    }
    sets[static_cast<std::size_t>(idx)] = 0;
  };
  rec(0);
  return result;
}

std::vector<std::vector<int>> permutations(int k) {
  std::vector<int> p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

CoordinateMap canonical_coordinate_map(const CoordinateMap& x) {
  CoordinateMap best = x;
  bool first = true;
  for (const auto& tau : permutations(x.n)) {
    std::vector<IndexSet> candidate(x.sets.size());
    for (std::size_t i = 0; i < x.sets.size(); ++i)
      candidate[i] = index_set::permute(x.sets[i], tau);
    if (first || candidate < best.sets) {
      best.sets = std::move(candidate);
      first = false;
    }
  }
  return best;
}

IsotoneFamily relabel(const IsotoneFamily& f, const std::vector<int>& sigma,
                      const std::vector<std::vector<int>>& tau) {
  const Simplex& s = f.simplex();
  IsotoneFamily g(f.simplex_ptr());
  for (int c = 0; c < f.m(); ++c)
    for (int p = 0; p < static_cast<int>(s.size()); ++p) {
      const Multidegree& pt = s.point(p);
      std::vector<int> moved(static_cast<std::size_t>(f.m()));
      for (int k = 0; k < f.m(); ++k)
        moved[static_cast<std::size_t>(sigma[static_cast<std::size_t>(k)])] = pt[k];
      g.assign(sigma[static_cast<std::size_t>(c)], Multidegree(moved),
               index_set::permute(f.set(c, p), tau[static_cast<std::size_t>(c)]));
    }
  return g;
}

IsotoneFamily canonical_form(const IsotoneFamily& f, const Budgets& budgets) {
  ValidationReport report = validate_family(f);
  if (!report)
    throw std::invalid_argument("canonical_form: " + report.message());
  if (f.m() > 8 || f.n() > 10)
    throw BudgetExceeded("canonical_form: group too large at m=" +
                         std::to_string(f.m()) + ", n=" + std::to_string(f.n()));
  long long group = 1;
  for (int i = 2; i <= f.m(); ++i) group *= i;
  long long fact_n = 1;
  for (int i = 2; i <= f.n(); ++i) fact_n *= i;
  for (int c = 0; c < f.m(); ++c) {
    group *= fact_n;
    if (group > budgets.group_orbit)
      throw BudgetExceeded("canonical_form: group of size > " +
                           std::to_string(budgets.group_orbit));
  }

  const auto sigmas = permutations(f.m());
  const auto taus = permutations(f.n());
  const Simplex& s = f.simplex();
  const std::size_t points = s.size();
  const std::size_t colors = static_cast<std::size_t>(f.m());

  std::vector<IndexSet> best_key = f.flat();
  std::vector<IndexSet> key(colors * points);
  std::vector<std::size_t> odometer(colors, 0);
  std::vector<int> moved(colors);
  for (const auto& sigma : sigmas) {
    // Destination point index under the coordinate permutation.
    std::vector<int> point_image(points);
    for (std::size_t p = 0; p < points; ++p) {
      const Multidegree& pt = s.point(static_cast<int>(p));
      for (std::size_t k = 0; k < colors; ++k)
        moved[static_cast<std::size_t>(sigma[k])] = pt[static_cast<int>(k)];
      point_image[p] = s.index_of(Multidegree(moved));
    }
    std::fill(odometer.begin(), odometer.end(), 0);
    while (true) {
      for (std::size_t c = 0; c < colors; ++c) {
        const auto& tau = taus[odometer[c]];
        const std::size_t dst = static_cast<std::size_t>(sigma[c]) * points;
        for (std::size_t p = 0; p < points; ++p)
          key[dst + static_cast<std::size_t>(point_image[p])] =
              index_set::permute(f.set(static_cast<int>(c), static_cast<int>(p)), tau);
      }
      if (key < best_key) best_key = key;
      int pos = static_cast<int>(colors) - 1;
      while (pos >= 0 && ++odometer[static_cast<std::size_t>(pos)] == taus.size())
        odometer[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
    }
  }

  IsotoneFamily best(f.simplex_ptr());
  for (std::size_t c = 0; c < colors; ++c)
    for (std::size_t p = 0; p < points; ++p)
      best.assign(static_cast<int>(c), static_cast<int>(p), best_key[c * points + p]);
  return best;
}

void for_each_candidate_family(int m, int n,
                               const std::function<void(const IsotoneFamily&)>& fn) {
  auto simplex = Simplex::shared(m, n);
  std::vector<std::vector<CoordinateMap>> pools;
  pools.reserve(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) pools.push_back(enumerate_coordinate_maps(m, n, c));

  std::vector<std::size_t> odometer(static_cast<std::size_t>(m), 0);
  while (true) {
    IsotoneFamily f(simplex);
    for (int c = 0; c < m; ++c) {
      const CoordinateMap& x = pools[static_cast<std::size_t>(c)]
                                    [odometer[static_cast<std::size_t>(c)]];
      for (int p = 0; p < static_cast<int>(simplex->size()); ++p)
        f.assign(c, p, x.sets[static_cast<std::size_t>(p)]);
    }
    fn(f);
    int pos = m - 1;
    while (pos >= 0 && ++odometer[static_cast<std::size_t>(pos)] ==
                           pools[static_cast<std::size_t>(pos)].size())
      odometer[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
}

std::vector<IsotoneFamily> enumerate_valid_families(int m, int n) {
  std::vector<IsotoneFamily> out;
  for_each_candidate_family(m, n, [&](const IsotoneFamily& f) {
    if (is_valid_polarization(f)) out.push_back(f);
  });
  return out;
}

}  // namespace polarix
