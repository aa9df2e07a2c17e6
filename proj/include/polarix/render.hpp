#ifndef POLARIX_RENDER_HPP
#define POLARIX_RENDER_HPP

#include <string>

#include "polarix/isotone.hpp"

namespace polarix {

/// SVG picture of Delta_3(n) for a three-color family: equilateral lattice
/// with the first color's top point at the apex, solid LS-edges, dashed
/// QS-edges and the generator monomial at each lattice point.
std::string render_svg(const IsotoneFamily& f);

}  // namespace polarix

#endif
