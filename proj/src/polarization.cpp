#include "polarix/polarization.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <sstream>

namespace polarix {

Ring Ring::colored(int m, int n) {
  return with_sizes(std::vector<int>(static_cast<std::size_t>(m), n));
}

Ring Ring::with_sizes(std::vector<int> sizes) {
  if (sizes.empty()) throw std::invalid_argument("Ring: no classes");
  for (int s : sizes)
    if (s < 1) throw std::invalid_argument("Ring: empty class");
  Ring r;
  r.sizes_ = std::move(sizes);
  r.offsets_.assign(1, 0);
  for (int s : r.sizes_) r.offsets_.push_back(r.offsets_.back() + s);
  return r;
}

Ring Ring::collapsed(int m) {
  Ring r = with_sizes(std::vector<int>(static_cast<std::size_t>(m), 1));
  r.collapsed_ = true;
  return r;
}

int Ring::var(int color, int index) const {
  if (color < 0 || color >= classes() || index < 0 || index >= class_size(color))
    throw std::invalid_argument("Ring: variable out of range");
  return offsets_[static_cast<std::size_t>(color)] + index;
}

int Ring::color_of(int v) const {
  for (int c = 0; c < classes(); ++c)
    if (v < offsets_[static_cast<std::size_t>(c) + 1]) return c;
  throw std::invalid_argument("Ring: variable out of range");
}

int Ring::index_of(int v) const {
  return v - offsets_[static_cast<std::size_t>(color_of(v))];
}

std::string Ring::var_name(int v) const {
  std::ostringstream out;
  if (collapsed_) {
    out << "x_" << color_of(v) + 1;
  } else {
    out << "x_(" << color_of(v) + 1 << "," << index_of(v) + 1 << ")";
  }
  return out.str();
}

int Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), 0);
}

bool Monomial::squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
}

std::vector<int> Monomial::support_vars() const {
  std::vector<int> out;
  for (int v = 0; v < var_count(); ++v)
    if (exps_[static_cast<std::size_t>(v)] > 0) out.push_back(v);
  return out;
}

bool Monomial::divides(const Monomial& o) const {
  if (var_count() != o.var_count())
    throw std::invalid_argument("Monomial: ring mismatch");
  for (int v = 0; v < var_count(); ++v)
    if (exp(v) > o.exp(v)) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  if (a.var_count() != b.var_count())
    throw std::invalid_argument("Monomial: ring mismatch");
  std::vector<int> e(a.exps_);
  for (int v = 0; v < b.var_count(); ++v)
    e[static_cast<std::size_t>(v)] = std::max(e[static_cast<std::size_t>(v)], b.exp(v));
  return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  if (a.var_count() != b.var_count())
    throw std::invalid_argument("Monomial: ring mismatch");
  std::vector<int> e(a.exps_);
  for (int v = 0; v < b.var_count(); ++v)
    e[static_cast<std::size_t>(v)] = std::min(e[static_cast<std::size_t>(v)], b.exp(v));
  return Monomial(std::move(e));
}

Monomial Monomial::colon(const Monomial& o) const {
  std::vector<int> e(exps_);
  for (int v = 0; v < var_count(); ++v)
    e[static_cast<std::size_t>(v)] = std::max(0, exp(v) - o.exp(v));
  return Monomial(std::move(e));
}

std::string Monomial::str(const Ring& ring) const {
  if (is_one()) return "1";
  std::ostringstream out;
  bool first = true;
  for (int v = 0; v < var_count(); ++v) {
    for (int k = 0; k < exp(v); ++k) {
      if (!first) out << "*";
      out << ring.var_name(v);
      first = false;
    }
  }
  return out.str();
}

MonomialIdeal::MonomialIdeal(Ring ring, std::vector<Monomial> generators)
    : ring_(std::move(ring)) {
  for (const Monomial& g : generators)
    if (g.var_count() != ring_.var_count())
      throw std::invalid_argument("MonomialIdeal: generator from another ring");
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; !redundant && j < generators.size(); ++j)
      redundant = i != j && generators[j].divides(generators[i]);
    if (!redundant) gens_.push_back(generators[i]);
  }
  // Descending exponent order reads naturally: x^2, xy, y^2.
  std::sort(gens_.begin(), gens_.end(),
            [](const Monomial& a, const Monomial& b) { return b < a; });
}

bool MonomialIdeal::contains(const Monomial& mon) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(mon); });
}

std::string MonomialIdeal::str() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out << ", ";
    out << gens_[i].str(ring_);
  }
  out << ")";
  return out.str();
}

MonomialIdeal generators_from_family(const IsotoneFamily& f) {
  ValidationReport report = validate_family(f);
  if (!report)
    throw std::invalid_argument("generators_from_family: " + report.message());
  Ring ring = Ring::colored(f.m(), f.n());
  std::vector<Monomial> gens;
  for (int p = 0; p < static_cast<int>(f.simplex().size()); ++p) {
    Monomial g(ring.var_count());
    for (int c = 0; c < f.m(); ++c)
      for (int j : index_set::elements(f.set(c, p))) g.mul_var(ring.var(c, j));
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(std::move(ring), std::move(gens));
}

IsotoneFamily standard_family(int m, int n) {
  IsotoneFamily f(m, n);
  for (int c = 0; c < m; ++c)
    for (int p = 0; p < static_cast<int>(f.simplex().size()); ++p)
      f.assign(c, p, index_set::full(f.simplex().point(p)[c]));
  return f;
}

IsotoneFamily b_family(int m, int n) {
  IsotoneFamily f(m, n);
  for (int p = 0; p < static_cast<int>(f.simplex().size()); ++p) {
    const Multidegree& b = f.simplex().point(p);
    int prefix = 0;
    for (int c = 0; c < m; ++c) {
      IndexSet s = 0;
      for (int j = prefix; j < prefix + b[c]; ++j) s |= IndexSet{1} << j;
      f.assign(c, p, s);
      prefix += b[c];
    }
  }
  return f;
}

IsotoneFamily family_from_ideal(const MonomialIdeal& ideal, int m, int n) {
  const Ring& ring = ideal.ring();
  if (ring.classes() != m)
    throw std::invalid_argument("family_from_ideal: color count mismatch");
  IsotoneFamily f(m, n);
  std::vector<char> seen(f.simplex().size(), 0);
  for (const Monomial& g : ideal.generators()) {
    if (!g.squarefree())
      throw std::invalid_argument("family_from_ideal: generator not squarefree");
    std::vector<int> coords(static_cast<std::size_t>(m), 0);
    std::vector<IndexSet> sets(static_cast<std::size_t>(m), 0);
    for (int v : g.support_vars()) {
      const int c = ring.color_of(v);
      const int j = ring.index_of(v);
      if (j >= n)
        throw std::invalid_argument("family_from_ideal: index beyond n");
      ++coords[static_cast<std::size_t>(c)];
      sets[static_cast<std::size_t>(c)] |= IndexSet{1} << j;
    }
    Multidegree b{coords};
    if (!f.simplex().contains(b))
      throw std::invalid_argument("family_from_ideal: degree " + b.str() +
                                  " outside the simplex");
    const int idx = f.simplex().index_of(b);
    if (seen[static_cast<std::size_t>(idx)])
      throw std::invalid_argument("family_from_ideal: repeated degree " + b.str());
    seen[static_cast<std::size_t>(idx)] = 1;
    for (int c = 0; c < m; ++c) f.assign(c, idx, sets[static_cast<std::size_t>(c)]);
  }
  if (ideal.generator_count() != static_cast<int>(f.simplex().size()))
    throw std::invalid_argument("family_from_ideal: generator count mismatch");
  return f;
}

MonomialIdeal collapse(const MonomialIdeal& ideal) {
  const Ring& src = ideal.ring();
  Ring dst = Ring::collapsed(src.classes());
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.generators()) {
    Monomial im(dst.var_count());
    for (int v = 0; v < g.var_count(); ++v)
      if (g.exp(v) > 0) im.mul_var(src.color_of(v), g.exp(v));
    gens.push_back(std::move(im));
  }
  return MonomialIdeal(std::move(dst), std::move(gens));
}

MonomialIdeal maximal_power_ideal(int m, int n) {
  Ring ring = Ring::collapsed(m);
  Simplex s(m, n);
  std::vector<Monomial> gens;
  for (const Multidegree& b : s.points()) {
    Monomial g(m);
    for (int c = 0; c < m; ++c) g.mul_var(c, b[c]);
    gens.push_back(std::move(g));
  }
  return MonomialIdeal(std::move(ring), std::move(gens));
}

void HilbertNumerator::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

std::string HilbertNumerator::str() const {
  if (coeffs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d] == 0) continue;
    long long c = coeffs[d];
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const long long a = std::abs(c);
    if (a != 1 || d == 0) out << a;
    if (d > 0) {
      if (a != 1) out << "*";
      out << "t";
      if (d > 1) out << "^" << d;
    }
    first = false;
  }
  return first ? "0" : out.str();
}

HilbertNumerator hilbert_numerator(const MonomialIdeal& ideal,
                                   const Budgets& budgets) {
  const auto& gens = ideal.generators();
  const int k = static_cast<int>(gens.size());
  if (k > 62 || (1LL << k) > budgets.hilbert_subsets)
    throw BudgetExceeded("hilbert_numerator: " + std::to_string(k) +
                         " generators exceed the subset budget");

  int max_deg = 0;
  if (k > 0) {
    Monomial top = gens[0];
    for (int i = 1; i < k; ++i) top = Monomial::lcm(top, gens[static_cast<std::size_t>(i)]);
    max_deg = top.degree();
  }
  HilbertNumerator num;
  num.coeffs.assign(static_cast<std::size_t>(max_deg) + 1, 0);
  num.coeffs[0] = 1;  // empty subset

  // Depth-first over subsets, carrying the running lcm.
  const std::function<void(int, const Monomial&, int)> rec =
      [&](int next, const Monomial& running, int sign) {
        for (int i = next; i < k; ++i) {
          const Monomial combined =
              Monomial::lcm(running, gens[static_cast<std::size_t>(i)]);
          num.coeffs[static_cast<std::size_t>(combined.degree())] += sign;
          rec(i + 1, combined, -sign);
        }
      };
  if (k > 0) rec(0, Monomial(ideal.ring().var_count()), -1);
  num.trim();
  return num;
}

std::vector<long long> hilbert_function(const HilbertNumerator& num, int vars,
                                        int up_to_degree) {
  // Expand N(t) * (1-t)^(-vars); the binomial series has non-negative terms.
  std::vector<long long> h(static_cast<std::size_t>(up_to_degree) + 1, 0);
  for (int d = 0; d <= up_to_degree; ++d) {
    long long total = 0;
    for (std::size_t j = 0; j < num.coeffs.size() && static_cast<int>(j) <= d; ++j)
      total += num.coeffs[j] * binomial(d - static_cast<int>(j) + vars - 1, vars - 1);
    h[static_cast<std::size_t>(d)] = total;
  }
  return h;
}

bool is_polarization_oracle(const MonomialIdeal& ideal, int m, int n,
                            const Budgets& budgets) {
  for (const Monomial& g : ideal.generators())
    if (!g.squarefree()) return false;
  if (collapse(ideal) != maximal_power_ideal(m, n)) return false;
  return hilbert_numerator(ideal, budgets) ==
         hilbert_numerator(collapse(ideal), budgets);
}

bool is_simple_separation(const MonomialIdeal& bigger, const MonomialIdeal& smaller,
                          int color, int idx_from, int idx_to,
                          const Budgets& budgets) {
  const Ring& big = bigger.ring();
  const Ring& small = smaller.ring();
  if (big.classes() != small.classes())
    throw std::invalid_argument("is_simple_separation: class count mismatch");
  if (big.var_count() != small.var_count() + 1)
    throw std::invalid_argument(
        "is_simple_separation: ambient ring must have exactly one extra variable");
  if (idx_from == idx_to)
    throw std::invalid_argument("is_simple_separation: merge must be non-trivial");
  for (int c = 0; c < big.classes(); ++c) {
    const int expect = big.class_size(c) - (c == color ? 1 : 0);
    if (small.class_size(c) != expect)
      throw std::invalid_argument(
          "is_simple_separation: merged indices must share one color class");
  }

  // Variable map: idx_from |-> idx_to within the color, remaining indices
  // renumbered order-isomorphically.
  const auto image = [&](int v) {
    const int c = big.color_of(v);
    int j = big.index_of(v);
    if (c == color) {
      if (j == idx_from) j = idx_to;
      if (j > idx_from) --j;
    }
    return small.var(c, j);
  };

  // i. image of the bigger ideal is the smaller one.
  std::vector<Monomial> mapped;
  for (const Monomial& g : bigger.generators()) {
    Monomial im(small.var_count());
    for (int v = 0; v < g.var_count(); ++v)
      if (g.exp(v) > 0) im.mul_var(image(v), g.exp(v));
    mapped.push_back(std::move(im));
  }
  if (MonomialIdeal(small, std::move(mapped)) != smaller) return false;

  // ii. both merged variables occur among minimal generators.
  const int v1 = big.var(color, idx_from);
  const int v2 = big.var(color, idx_to);
  bool occ1 = false, occ2 = false;
  for (const Monomial& g : bigger.generators()) {
    occ1 = occ1 || g.exp(v1) > 0;
    occ2 = occ2 || g.exp(v2) > 0;
  }
  if (!occ1 || !occ2) return false;

  // iii. the variable difference is a non-zero divisor, by numerators.
  return hilbert_numerator(bigger, budgets) == hilbert_numerator(smaller, budgets);
}

bool parts_divisibility_holds(const IsotoneFamily& f) {
  const Simplex& s = f.simplex();
  for (int i = 0; i < f.m(); ++i)
    for (const Multidegree& a : s.points())
      for (const Multidegree& b : s.points())
        if (geq_i(a, b, i) &&
            !index_set::subset(f.set(i, a), f.set(i, b)))
          return false;
  return true;
}

}  // namespace polarix
