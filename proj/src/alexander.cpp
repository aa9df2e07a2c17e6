#include "polarix/alexander.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace polarix {

std::vector<std::uint64_t> minimal_transversals(const std::vector<std::uint64_t>& sets,
                                                int universe,
                                                const Budgets& budgets) {
  if (universe < 0 || universe > 63)
    throw std::invalid_argument("minimal_transversals: universe out of range");
  for (std::uint64_t s : sets)
    if (s == 0)
      throw std::invalid_argument("minimal_transversals: empty set has no transversal");

  std::vector<std::uint64_t> current{0};
  for (std::uint64_t s : sets) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t t : current) {
      if (t & s) {
        next.push_back(t);
        continue;
      }
      for (int v = 0; v < universe; ++v)
        if ((s >> v) & 1ull) next.push_back(t | (1ull << v));
    }
    // Prune non-minimal candidates.
    std::sort(next.begin(), next.end(), [](std::uint64_t a, std::uint64_t b) {
      const int ca = __builtin_popcountll(a), cb = __builtin_popcountll(b);
      return ca != cb ? ca < cb : a < b;
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<std::uint64_t> pruned;
    for (std::uint64_t t : next) {
      bool dominated = false;
      for (std::uint64_t kept : pruned)
        if ((kept & ~t) == 0) {
          dominated = true;
          break;
        }
      if (!dominated) pruned.push_back(t);
    }
    current = std::move(pruned);
    if (static_cast<long long>(current.size()) > budgets.transversals)
      throw BudgetExceeded("minimal_transversals: more than " +
                           std::to_string(budgets.transversals) +
                           " partial transversals");
  }
  std::sort(current.begin(), current.end());
  return current;
}

MonomialIdeal alexander_dual_oracle(const MonomialIdeal& ideal,
                                    const Budgets& budgets) {
  const Ring& ring = ideal.ring();
  if (ring.var_count() > 63)
    throw std::invalid_argument("alexander_dual_oracle: too many variables");
  std::vector<std::uint64_t> supports;
  for (const Monomial& g : ideal.generators()) {
    if (!g.squarefree())
      throw std::invalid_argument("alexander_dual_oracle: ideal not squarefree");
    std::uint64_t s = 0;
    for (int v : g.support_vars()) s |= 1ull << v;
    supports.push_back(s);
  }
  std::vector<Monomial> gens;
  for (std::uint64_t t : minimal_transversals(supports, ring.var_count(), budgets)) {
    Monomial g(ring.var_count());
    for (int v = 0; v < ring.var_count(); ++v)
      if ((t >> v) & 1ull) g.mul_var(v);
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal alexander_dual_from_family(const IsotoneFamily& f) {
  PolarizationCheck check = is_valid_polarization(f);
  if (!check)
    throw std::invalid_argument(
        "alexander_dual_from_family: family is not a polarization (down-graph at " +
        check.witness->str() + " not spanned)");
  Ring ring = Ring::colored(f.m(), f.n());
  Simplex below(f.m(), f.n() - 1);
  std::set<std::vector<int>> seen;
  std::vector<Monomial> gens;
  for (const Multidegree& base : below.points()) {
    std::vector<std::vector<int>> choices;
    for (int c = 0; c < f.m(); ++c)
      choices.push_back(index_set::elements(f.set(c, base.plus(c))));
    // Product of the m corner variable sets.
    std::vector<std::size_t> odometer(static_cast<std::size_t>(f.m()), 0);
    while (true) {
      Monomial g(ring.var_count());
      for (int c = 0; c < f.m(); ++c)
        g.mul_var(ring.var(c, choices[static_cast<std::size_t>(c)]
                                  [odometer[static_cast<std::size_t>(c)]]));
      if (seen.insert(g.exps()).second) gens.push_back(std::move(g));
      int pos = f.m() - 1;
      while (pos >= 0 && ++odometer[static_cast<std::size_t>(pos)] ==
                             choices[static_cast<std::size_t>(pos)].size())
        odometer[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
    }
  }
  return MonomialIdeal(std::move(ring), std::move(gens));
}

bool is_rainbow(const Monomial& mon, const Ring& ring) {
  if (mon.var_count() != ring.var_count())
    throw std::invalid_argument("is_rainbow: ring mismatch");
  std::vector<int> per_color(static_cast<std::size_t>(ring.classes()), 0);
  for (int v = 0; v < mon.var_count(); ++v) {
    if (mon.exp(v) > 1) return false;
    if (mon.exp(v) == 1) ++per_color[static_cast<std::size_t>(ring.color_of(v))];
  }
  return std::all_of(per_color.begin(), per_color.end(),
                     [](int k) { return k == 1; });
}

namespace {

// Index picks, one variable index per color.
std::vector<int> rainbow_picks(const Monomial& mon, const Ring& ring) {
  std::vector<int> picks(static_cast<std::size_t>(ring.classes()), -1);
  for (int v : mon.support_vars())
    picks[static_cast<std::size_t>(ring.color_of(v))] = ring.index_of(v);
  return picks;
}

bool third_rainbow_exists(const std::vector<int>& a, const std::vector<int>& b,
                          const std::set<std::vector<int>>& side) {
  // Rainbows dividing lcm(a,b) pick per color from {a_c, b_c}; walk all
  // combinations other than a and b themselves.
  std::vector<int> diff;
  for (std::size_t c = 0; c < a.size(); ++c)
    if (a[c] != b[c]) diff.push_back(static_cast<int>(c));
  const std::size_t k = diff.size();
  for (std::uint64_t bits = 1; bits + 1 < (1ull << k); ++bits) {
    std::vector<int> candidate = a;
    for (std::size_t t = 0; t < k; ++t)
      if ((bits >> t) & 1ull)
        candidate[static_cast<std::size_t>(diff[t])] =
            b[static_cast<std::size_t>(diff[t])];
    if (side.count(candidate)) return true;
  }
  return false;
}

bool side_is_convex(const std::vector<std::vector<int>>& picks,
                    const std::set<std::vector<int>>& side) {
  for (std::size_t i = 0; i < picks.size(); ++i)
    for (std::size_t j = i + 1; j < picks.size(); ++j) {
      int differing = 0;
      for (std::size_t c = 0; c < picks[i].size(); ++c)
        differing += picks[i][c] != picks[j][c];
      if (differing < 2) continue;  // lcm degree < m+2
      if (!third_rainbow_exists(picks[i], picks[j], side)) return false;
    }
  return true;
}

}  // namespace

bool rainbow_linear_resolution(const MonomialIdeal& ideal) {
  const Ring& ring = ideal.ring();
  std::vector<std::vector<int>> members;
  for (const Monomial& g : ideal.generators()) {
    if (!is_rainbow(g, ring))
      throw std::invalid_argument("rainbow_linear_resolution: generator " +
                                  g.str(ring) + " is not rainbow");
    members.push_back(rainbow_picks(g, ring));
  }
  std::set<std::vector<int>> member_set(members.begin(), members.end());

  // Materialize the complement inside the full product of color classes.
  std::vector<std::vector<int>> outside;
  std::vector<int> pick(static_cast<std::size_t>(ring.classes()), 0);
  const std::function<void(int)> sweep = [&](int c) {
    if (c == ring.classes()) {
      if (!member_set.count(pick)) outside.push_back(pick);
      return;
    }
    for (int j = 0; j < ring.class_size(c); ++j) {
      pick[static_cast<std::size_t>(c)] = j;
      sweep(c + 1);
    }
  };
  sweep(0);
  std::set<std::vector<int>> outside_set(outside.begin(), outside.end());

  return side_is_convex(members, member_set) &&
         side_is_convex(outside, outside_set);
}

std::vector<std::string> rainbow_binary_words(const MonomialIdeal& ideal) {
  const Ring& ring = ideal.ring();
  for (int c = 0; c < ring.classes(); ++c)
    if (ring.class_size(c) != 2)
      throw std::invalid_argument(
          "rainbow_binary_words: every color class must have two indices");
  std::vector<std::string> out;
  for (const Monomial& g : ideal.generators()) {
    if (!is_rainbow(g, ring))
      throw std::invalid_argument("rainbow_binary_words: generator " +
                                  g.str(ring) + " is not rainbow");
    std::string word(static_cast<std::size_t>(ring.classes()), '?');
    for (int v : g.support_vars())
      word[static_cast<std::size_t>(ring.color_of(v))] =
          ring.index_of(v) == 0 ? '1' : '0';
    out.push_back(std::move(word));
  }
  return out;
}

ChiFamily::ChiFamily(int m, int n) : simplex_(Simplex::shared(m, n)) {
  vals_.assign(static_cast<std::size_t>(m),
               std::vector<std::uint8_t>(simplex_->size(), 0));
}

bool ChiFamily::well_formed() const {
  const Simplex& s = *simplex_;
  for (int c = 0; c < m(); ++c)
    for (const Multidegree& b : s.points()) {
      if (b[c] == 0) {
        if (value(c, b)) return false;
        continue;
      }
      for (int j = 0; j < m(); ++j) {
        if (j == c) continue;
        if (value(c, b.minus(c).plus(j)) && !value(c, b)) return false;
      }
    }
  return true;
}

ChiFamily chi_from_monomial(const IsotoneFamily& f, const Monomial& mon) {
  Ring ring = Ring::colored(f.m(), f.n());
  if (mon.var_count() != ring.var_count())
    throw std::invalid_argument("chi_from_monomial: ring mismatch");
  ChiFamily chi(f.m(), f.n());
  for (int c = 0; c < f.m(); ++c)
    for (int p = 0; p < static_cast<int>(f.simplex().size()); ++p) {
      bool hit = false;
      for (int j : index_set::elements(f.set(c, p)))
        if (mon.exp(ring.var(c, j)) > 0) {
          hit = true;
          break;
        }
      chi.set_value(c, p, hit);
    }
  return chi;
}

std::optional<Multidegree> full_zero_point(const ChiFamily& chi) {
  const Simplex& s = chi.simplex();
  for (int p = 0; p < static_cast<int>(s.size()); ++p) {
    bool all_zero = true;
    for (int c = 0; all_zero && c < chi.m(); ++c) all_zero = !chi.value(c, p);
    if (all_zero) return s.point(p);
  }
  return std::nullopt;
}

bool every_upgraph_has_zero_corner(const ChiFamily& chi) {
  Simplex below(chi.m(), chi.n() - 1);
  for (const Multidegree& base : below.points()) {
    bool corner = false;
    for (int c = 0; !corner && c < chi.m(); ++c)
      corner = !chi.value(c, base.plus(c));
    if (!corner) return false;
  }
  return true;
}

}  // namespace polarix
