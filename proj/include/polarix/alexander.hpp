#ifndef POLARIX_ALEXANDER_HPP
#define POLARIX_ALEXANDER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "polarix/budgets.hpp"
#include "polarix/polarization.hpp"

namespace polarix {

/// Inclusion-minimal subsets of {0..universe-1} meeting every input set.
/// Incremental: fold the sets in one by one, keeping partial transversals
/// minimal.
std::vector<std::uint64_t> minimal_transversals(const std::vector<std::uint64_t>& sets,
                                                int universe,
                                                const Budgets& budgets = {});

/// Alexander dual of a squarefree ideal as the ideal of minimal transversals
/// of the generator supports.  Involutive on minimal generating sets.
MonomialIdeal alexander_dual_oracle(const MonomialIdeal& ideal,
                                    const Budgets& budgets = {});

/// Dual through the up-graph construction: the products
/// X_1(a+e_1) x .. x X_m(a+e_m) over all a of degree n-1.
MonomialIdeal alexander_dual_from_family(const IsotoneFamily& f);

/// Exactly one variable of each color, degree m.
bool is_rainbow(const Monomial& mon, const Ring& ring);

/// Two-sided convexity criterion for an ideal generated by rainbow
/// monomials to have an m-linear resolution: every pair of members (and
/// every pair of non-members) whose lcm has degree >= m+2 is dominated by a
/// third distinct rainbow on the same side.
bool rainbow_linear_resolution(const MonomialIdeal& ideal);

/// Rainbow generators over two-index classes as binary words, one character
/// per color: index 1 -> '1', index 2 -> '0'.
std::vector<std::string> rainbow_binary_words(const MonomialIdeal& ideal);

/// The 0/1 shadows chi_i of a family against a fixed monomial:
/// chi_i(b) = 1 iff some variable of X_i(b) divides the monomial.
class ChiFamily {
 public:
  ChiFamily(int m, int n);
  int m() const { return simplex_->m(); }
  int n() const { return simplex_->n(); }
  const Simplex& simplex() const { return *simplex_; }
  bool value(int color, int point_idx) const {
    return vals_[static_cast<std::size_t>(color)][static_cast<std::size_t>(point_idx)] != 0;
  }
  bool value(int color, const Multidegree& b) const {
    return value(color, simplex_->index_of(b));
  }
  void set_value(int color, int point_idx, bool v) {
    vals_[static_cast<std::size_t>(color)][static_cast<std::size_t>(point_idx)] =
        v ? 1 : 0;
  }

  /// Isotone for each >=_i and zero whenever b_i = 0.
  bool well_formed() const;

 private:
  std::shared_ptr<const Simplex> simplex_;
  std::vector<std::vector<std::uint8_t>> vals_;
};

ChiFamily chi_from_monomial(const IsotoneFamily& f, const Monomial& mon);

/// First point (in enumeration order) where every chi_i vanishes.
std::optional<Multidegree> full_zero_point(const ChiFamily& chi);

/// Whether each up-graph U(a) has some corner i with chi_i(a+e_i) = 0.
bool every_upgraph_has_zero_corner(const ChiFamily& chi);

}  // namespace polarix

#endif
