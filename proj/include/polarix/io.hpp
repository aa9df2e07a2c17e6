#ifndef POLARIX_IO_HPP
#define POLARIX_IO_HPP

#include <string>

#include <json.hpp>

#include "polarix/alexander.hpp"
#include "polarix/degree_two.hpp"
#include "polarix/isotone.hpp"
#include "polarix/polarization.hpp"
#include "polarix/simplicial.hpp"

namespace polarix {

// JSON conventions: colors and variable indices are 1-based, tree vertices
// 0-based.  Multidegrees are plain integer arrays.

nlohmann::json to_json(const Multidegree& b);
Multidegree multidegree_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SimplexParams& p);
SimplexParams simplex_params_from_json(const nlohmann::json& j);

/// {"m":..,"n":..,"X":[{"color":i,"point":[..],"set":[..]},..]}
nlohmann::json to_json(const IsotoneFamily& f);
IsotoneFamily family_from_json(const nlohmann::json& j);

/// Pattern as a list of interior points.
nlohmann::json to_json(const QsPattern& q);
QsPattern qs_pattern_from_json(const nlohmann::json& j, int n);

nlohmann::json to_json(const Ring& ring);
Ring ring_from_json(const nlohmann::json& j);

/// Monomial as sorted [color, index, exponent] triples.
nlohmann::json monomial_to_json(const Monomial& mon, const Ring& ring);
Monomial monomial_from_json(const nlohmann::json& j, const Ring& ring);

nlohmann::json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

/// One generator per line, factors joined with '*'.
std::string to_m2(const MonomialIdeal& ideal);

/// {"vertices":[names],"facets":[[vertex indices],..]}
nlohmann::json to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const nlohmann::json& j);

/// {"vertices":k,"edges":[[tail,head,label],..]}
nlohmann::json to_json(const DirectedLabeledTree& t);
DirectedLabeledTree tree_from_json(const nlohmann::json& j);

nlohmann::json to_json(const TopologyVerdict& verdict);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace polarix

#endif
