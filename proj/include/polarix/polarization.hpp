#ifndef POLARIX_POLARIZATION_HPP
#define POLARIX_POLARIZATION_HPP

#include <string>
#include <vector>

#include "polarix/budgets.hpp"
#include "polarix/isotone.hpp"
#include "polarix/lattice.hpp"

namespace polarix {

/// Ambient polynomial ring whose variables come in color classes.  A
/// collapsed ring has one variable x_i per color.
class Ring {
 public:
  Ring() = default;
  static Ring colored(int m, int n);
  static Ring with_sizes(std::vector<int> sizes);
  static Ring collapsed(int m);

  int classes() const { return static_cast<int>(sizes_.size()); }
  int class_size(int color) const { return sizes_[static_cast<std::size_t>(color)]; }
  const std::vector<int>& sizes() const { return sizes_; }
  int var_count() const { return offsets_.back(); }
  bool is_collapsed() const { return collapsed_; }

  int var(int color, int index) const;  // 0-based on both
  int color_of(int v) const;
  int index_of(int v) const;
  std::string var_name(int v) const;

  bool operator==(const Ring& o) const {
    return sizes_ == o.sizes_ && collapsed_ == o.collapsed_;
  }
  bool operator!=(const Ring& o) const { return !(*this == o); }

 private:
  std::vector<int> sizes_{1};
  std::vector<int> offsets_{0, 1};
  bool collapsed_ = false;
};

/// Monomial as an exponent vector over a ring's variables.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int var_count) : exps_(static_cast<std::size_t>(var_count), 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {}

  int var_count() const { return static_cast<int>(exps_.size()); }
  int exp(int v) const { return exps_[static_cast<std::size_t>(v)]; }
  void mul_var(int v, int times = 1) { exps_[static_cast<std::size_t>(v)] += times; }
  const std::vector<int>& exps() const { return exps_; }

  int degree() const;
  bool is_one() const { return degree() == 0; }
  bool squarefree() const;
  std::vector<int> support_vars() const;

  bool divides(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  /// this / gcd(this, o)
  Monomial colon(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }
  bool operator<(const Monomial& o) const { return exps_ < o.exps_; }

  std::string str(const Ring& ring) const;

 private:
  std::vector<int> exps_;
};

/// Monomial ideal kept as its minimal generating set, sorted.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(Ring ring, std::vector<Monomial> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  int generator_count() const { return static_cast<int>(gens_.size()); }
  bool contains(const Monomial& mon) const;

  bool operator==(const MonomialIdeal& o) const {
    return ring_ == o.ring_ && gens_ == o.gens_;
  }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Ring ring_;
  std::vector<Monomial> gens_;
};

/// One squarefree generator per lattice point: the product over colors of
/// the variables selected by the family.
MonomialIdeal generators_from_family(const IsotoneFamily& f);

/// X_i(b) = {1..b_i}.
IsotoneFamily standard_family(int m, int n);
/// X_i(b) = {b_1+..+b_{i-1}+1, .., b_1+..+b_i}.
IsotoneFamily b_family(int m, int n);

/// Rebuild the family from a squarefree ideal whose collapse enumerates the
/// generators of (x_1..x_m)^n.  Inverse of generators_from_family.
IsotoneFamily family_from_ideal(const MonomialIdeal& ideal, int m, int n);

/// Map every colored variable to its class variable and re-minimalize.
MonomialIdeal collapse(const MonomialIdeal& ideal);

/// (x_1,..,x_m)^n in the collapsed ring.
MonomialIdeal maximal_power_ideal(int m, int n);

/// Numerator of the Hilbert series over (1-t)^{#vars}, exact integers.
struct HilbertNumerator {
  std::vector<long long> coeffs;  // coeffs[d] multiplies t^d

  void trim();
  bool operator==(const HilbertNumerator& o) const { return coeffs == o.coeffs; }
  std::string str() const;
};

/// Inclusion-exclusion over generator subsets:
/// N(t) = sum_S (-1)^|S| t^(deg lcm S).
HilbertNumerator hilbert_numerator(const MonomialIdeal& ideal,
                                   const Budgets& budgets = {});

/// Hilbert function d -> dim_k (R/I)_d, obtained by expanding
/// N(t)/(1-t)^vars; used to cross-check the numerator at small degrees.
std::vector<long long> hilbert_function(const HilbertNumerator& num, int vars,
                                        int up_to_degree);

/// Certifies the variable differences form a regular sequence, via
/// (a) squarefree generators, (b) collapse equal to (x_1..x_m)^n and
/// (c) equality of the two Hilbert numerators.
bool is_polarization_oracle(const MonomialIdeal& ideal, int m, int n,
                            const Budgets& budgets = {});

/// Whether `bigger` is a simple separation of `smaller` under the merge of
/// index `idx_from` into `idx_to` within `color` (all 0-based).
bool is_simple_separation(const MonomialIdeal& bigger, const MonomialIdeal& smaller,
                          int color, int idx_from, int idx_to,
                          const Budgets& budgets = {});

/// All-pairs nested-parts check: a_i <= b_i with a_j >= b_j off i forces
/// X_i(a) inside X_i(b).
bool parts_divisibility_holds(const IsotoneFamily& f);

}  // namespace polarix

#endif
