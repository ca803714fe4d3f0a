#ifndef GASKET_SVG_HPP
#define GASKET_SVG_HPP

#include <string>
#include <vector>

#include "gasket/cell_structure.hpp"

namespace gasket {

/// Static SVG of the level-1 graph: edges drawn, vertices colored by
/// value (cold-to-warm; uniform fill when values is empty), boundary
/// vertices ringed. Requires lattice coordinates.
std::string render_svg(const CellStructure& s,
                       const std::vector<double>& values = {});

}  // namespace gasket

#endif  // GASKET_SVG_HPP
