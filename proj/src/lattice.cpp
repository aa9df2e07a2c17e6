#include "polarix/lattice.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace polarix {

std::string Multidegree::str() const {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < size(); ++i) {
    if (i) out << ',';
    out << coords_[static_cast<std::size_t>(i)];
  }
  out << ')';
  return out.str();
}

Multidegree join(const Multidegree& a, const Multidegree& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("join: mismatched lengths");
  std::vector<int> c(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i)
    c[static_cast<std::size_t>(i)] = std::max(a[i], b[i]);
  return Multidegree(std::move(c));
}

bool geq_i(const Multidegree& a, const Multidegree& b, int i) {
  if (a.size() != b.size() || a.degree() != b.degree())
    throw std::invalid_argument("geq_i: points from different simplices");
  if (i < 0 || i >= a.size()) throw std::invalid_argument("geq_i: bad color");
  if (b[i] < a[i]) return false;
  for (int j = 0; j < a.size(); ++j)
    if (j != i && b[j] > a[j]) return false;
  return true;
}

DistanceResult distance(const Multidegree& a, const Multidegree& b) {
  if (a.size() != b.size() || a.degree() != b.degree())
    throw std::invalid_argument("distance: points from different simplices");
  DistanceResult r;
  for (int i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) {
      r.higher.push_back(i);
      r.value += b[i] - a[i];
    } else {
      r.lower.push_back(i);
    }
  }
  return r;
}

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

long long simplex_point_count(int m, int n) {
  return binomial(n + m - 1, m - 1);
}

namespace {

void emit_points(int m, int n, std::vector<int>& prefix,
                 std::vector<Multidegree>& out) {
  if (static_cast<int>(prefix.size()) == m - 1) {
    prefix.push_back(n);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int c = n; c >= 0; --c) {
    prefix.push_back(c);
    emit_points(m, n - c, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Simplex::Simplex(int m, int n) : m_(m), n_(n) {
  if (m < 1 || n < 0) throw std::invalid_argument("Simplex: need m >= 1, n >= 0");
  std::vector<int> prefix;
  emit_points(m, n, prefix, points_);
  for (int i = 0; i < static_cast<int>(points_.size()); ++i)
    index_[points_[static_cast<std::size_t>(i)].coords()] = i;
}

bool Simplex::contains(const Multidegree& b) const {
  return b.size() == m_ && index_.count(b.coords()) > 0;
}

int Simplex::index_of(const Multidegree& b) const {
  auto it = index_.find(b.coords());
  if (it == index_.end())
    throw std::invalid_argument("Simplex: point " + b.str() + " not in Delta_" +
                                std::to_string(m_) + "(" + std::to_string(n_) + ")");
  return it->second;
}

std::vector<SimplexEdge> Simplex::edges() const {
  std::vector<SimplexEdge> result;
  Simplex above(m_, n_ + 1);
  for (const Multidegree& apex : above.points()) {
    std::vector<int> supp = apex.support();
    for (std::size_t p = 0; p < supp.size(); ++p)
      for (std::size_t q = p + 1; q < supp.size(); ++q)
        result.push_back(SimplexEdge{apex, supp[p], supp[q]});
  }
  return result;
}

std::optional<SimplexEdge> Simplex::edge_between(const Multidegree& a,
                                                 const Multidegree& b) {
  DistanceResult d = distance(a, b);
  if (d.value != 1) return std::nullopt;
  Multidegree apex = join(a, b);
  int i = -1, j = -1;
  for (int k = 0; k < a.size(); ++k) {
    if (apex[k] > a[k]) i = k;  // apex - e_i = a ... i is where a is lower
    if (apex[k] > b[k]) j = k;
  }
  // Normalize to i < j with endpoints apex-e_i, apex-e_j.
  if (i > j) std::swap(i, j);
  return SimplexEdge{apex, i, j};
}

std::shared_ptr<const Simplex> Simplex::shared(int m, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const Simplex>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{m, n}];
  if (!slot) slot = std::make_shared<Simplex>(m, n);
  return slot;
}

DownGraph down_graph(const Multidegree& apex) {
  DownGraph g;
  g.apex = apex;
  g.colors = apex.support();
  for (int i : g.colors) g.vertices.push_back(apex.minus(i));
  return g;
}

UpGraph up_graph(const Multidegree& base) {
  UpGraph g;
  g.base = base;
  for (int i = 0; i < base.size(); ++i) g.vertices.push_back(base.plus(i));
  return g;
}

std::vector<UpGraph> up_graphs(const SimplexParams& params) {
  if (params.n < 1) throw std::invalid_argument("up_graphs: need n >= 1");
  Simplex below(params.m, params.n - 1);
  std::vector<UpGraph> result;
  result.reserve(below.size());
  for (const Multidegree& base : below.points()) result.push_back(up_graph(base));
  return result;
}

}  // namespace polarix
