#ifndef POLARIX_LATTICE_HPP
#define POLARIX_LATTICE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polarix {

/// A point of the lattice simplex Delta_m(n): m non-negative coordinates
/// summing to the ambient degree.  Colors are 0-based throughout the C++
/// API; serialization shifts to 1-based.
class Multidegree {
 public:
  Multidegree() = default;
  explicit Multidegree(std::vector<int> coords) : coords_(std::move(coords)) {
    for (int c : coords_)
      if (c < 0) throw std::invalid_argument("Multidegree: negative coordinate");
  }

  int size() const { return static_cast<int>(coords_.size()); }
  int degree() const {
    int s = 0;
    for (int c : coords_) s += c;
    return s;
  }
  int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& coords() const { return coords_; }

  /// Colors i with coords[i] >= 1.
  std::vector<int> support() const {
    std::vector<int> s;
    for (int i = 0; i < size(); ++i)
      if (coords_[static_cast<std::size_t>(i)] > 0) s.push_back(i);
    return s;
  }

  Multidegree plus(int i) const {
    std::vector<int> c = coords_;
    ++c[static_cast<std::size_t>(i)];
    return Multidegree(std::move(c));
  }
  Multidegree minus(int i) const {
    std::vector<int> c = coords_;
    if (c[static_cast<std::size_t>(i)] == 0)
      throw std::invalid_argument("Multidegree: coordinate underflow");
    --c[static_cast<std::size_t>(i)];
    return Multidegree(std::move(c));
  }

  bool operator==(const Multidegree& o) const { return coords_ == o.coords_; }
  bool operator!=(const Multidegree& o) const { return coords_ != o.coords_; }
  /// Plain lexicographic comparison on coordinates.
  bool operator<(const Multidegree& o) const { return coords_ < o.coords_; }

  std::string str() const;

 private:
  std::vector<int> coords_;
};

struct SimplexParams {
  int m = 1;
  int n = 1;
};

/// Componentwise maximum a v b.
Multidegree join(const Multidegree& a, const Multidegree& b);

/// Whether b >=_i a, i.e. b_i >= a_i and b_j <= a_j for all j != i.
bool geq_i(const Multidegree& a, const Multidegree& b, int i);

struct DistanceResult {
  int value = 0;
  std::vector<int> lower;   // colors with a_i >= b_i
  std::vector<int> higher;  // colors with b_i > a_i
};

/// d(a,b) = sum over {i : b_i > a_i} of (b_i - a_i), with the color partition.
DistanceResult distance(const Multidegree& a, const Multidegree& b);

/// The edge of Delta_m(n) between apex-e_i and apex-e_j, with apex of degree
/// n+1 and i < j both in the support of the apex.
struct SimplexEdge {
  Multidegree apex;
  int i = 0;
  int j = 1;

  Multidegree endpoint_low() const { return apex.minus(i); }
  Multidegree endpoint_high() const { return apex.minus(j); }
  bool operator==(const SimplexEdge& o) const {
    return apex == o.apex && i == o.i && j == o.j;
  }
};

struct DownGraph {
  Multidegree apex;                   // degree n+1
  std::vector<Multidegree> vertices;  // apex - e_i for i in supp(apex)
  std::vector<int> colors;            // supp(apex), parallel to vertices
  int dimension() const { return static_cast<int>(vertices.size()) - 1; }
};

struct UpGraph {
  Multidegree base;                   // degree n-1
  std::vector<Multidegree> vertices;  // base + e_i for every color
};

/// The graph substrate of Delta_m(n).  Caches the point list in
/// lexicographic-descending order together with an index lookup.
class Simplex {
 public:
  Simplex(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<Multidegree>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Multidegree& point(int idx) const {
    return points_[static_cast<std::size_t>(idx)];
  }

  bool contains(const Multidegree& b) const;
  /// Position in the lex-descending enumeration; throws if absent.
  int index_of(const Multidegree& b) const;

  /// All edges, one per (apex; i<j) with apex in Delta_m(n+1).
  std::vector<SimplexEdge> edges() const;

  /// The unique edge between two points at distance one, if any.
  static std::optional<SimplexEdge> edge_between(const Multidegree& a,
                                                 const Multidegree& b);

  static std::shared_ptr<const Simplex> shared(int m, int n);

 private:
  int m_;
  int n_;
  std::vector<Multidegree> points_;
  std::map<std::vector<int>, int> index_;
};

DownGraph down_graph(const Multidegree& apex);
UpGraph up_graph(const Multidegree& base);
std::vector<UpGraph> up_graphs(const SimplexParams& params);

/// Number of points of Delta_m(n) = C(n+m-1, m-1).
long long simplex_point_count(int m, int n);
long long binomial(int n, int k);

}  // namespace polarix

#endif
