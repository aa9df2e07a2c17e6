#ifndef POLARIX_SIMPLICIAL_HPP
#define POLARIX_SIMPLICIAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polarix/budgets.hpp"
#include "polarix/polarization.hpp"

namespace polarix {

/// Simplicial complex on at most 63 named vertices; facets as bitmasks
/// forming an antichain.  `facets = {0}` is the empty-face complex, an empty
/// facet list is the void complex.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(std::vector<std::string> vertex_names,
                    std::vector<std::uint64_t> facets);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::vector<std::uint64_t>& facets() const { return facets_; }

  bool is_void() const { return facets_.empty(); }
  /// Dimension of the largest facet; -1 for {empty face}.
  int dimension() const;
  bool pure() const;
  bool is_face(std::uint64_t face) const;

  /// Every face, the empty face included, grouped by dimension starting
  /// at -1.
  std::vector<std::vector<std::uint64_t>> faces_by_dimension(
      const Budgets& budgets = {}) const;

  /// f-vector (f_{-1}, f_0, .., f_dim).
  std::vector<long long> f_vector(const Budgets& budgets = {}) const;

  SimplicialComplex link(std::uint64_t face) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::uint64_t> facets_;
};

/// Stanley-Reisner complex of a squarefree ideal: faces are the vertex sets
/// containing no generator support.  Facets come from the complements of the
/// minimal transversals of the generator supports.
SimplicialComplex complex_from_ideal(const MonomialIdeal& ideal,
                                     const Budgets& budgets = {});

/// Stanley-Reisner ideal of a complex (minimal non-faces).
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex,
                                    const Ring& ring);

/// Exact GF(2) Betti numbers; entry d+1 is the rank of the d-th reduced
/// homology, d = -1 .. dim.
std::vector<long long> reduced_homology_gf2(const SimplicialComplex& complex,
                                            const Budgets& budgets = {});

/// Facet-incidence counts of every codimension-one face of a pure complex.
std::map<std::uint64_t, int> codim_one_census(const SimplicialComplex& complex);

/// Whether each successive colon ideal (u_1..u_{j-1}) : u_j is generated by
/// variables.  `order` must be a permutation of the minimal generators.
bool linear_quotients_check(const MonomialIdeal& ideal,
                            const std::vector<Monomial>& order);

/// Linear-quotients order on the dual generators of a three-color valid
/// family: up-triangles sorted by first coordinate then lexicographically,
/// in-triangle monomials by the chain-induced variable orders, monomials
/// ranked at their first occurrence.
std::vector<Monomial> dual_linear_quotients_order(const IsotoneFamily& f);

/// A shelling order of the facets (indices into facets()), or certified
/// absence; subset dynamic program, facet budget applies.  An optional hint
/// is verified first.
std::optional<std::vector<int>> find_shelling(
    const SimplicialComplex& complex, const Budgets& budgets = {},
    const std::vector<int>* hint = nullptr);

enum class BallSphere { ball, sphere, unknown };

struct TopologyVerdict {
  BallSphere kind = BallSphere::unknown;
  bool pseudomanifold = false;     // all codim-1 counts in {1,2}
  bool closed = false;             // all counts exactly 2
  std::vector<long long> homology; // reduced GF(2) Betti numbers from dim -1
  bool shellable = false;          // only probed on the ball route
  std::string detail;
};

/// Certify ball or sphere: sphere needs a closed pseudomanifold with the
/// GF(2) homology of S^d; ball needs boundary, trivial homology and a
/// shelling.  Anything else stays unknown.
TopologyVerdict ball_or_sphere_verdict(const SimplicialComplex& complex,
                                       const Budgets& budgets = {},
                                       const std::vector<int>* shelling_hint = nullptr);

/// Reisner criterion over GF(2): every link has vanishing reduced homology
/// below its dimension.
bool is_cohen_macaulay_gf2(const SimplicialComplex& complex,
                           const Budgets& budgets = {});

}  // namespace polarix

#endif
