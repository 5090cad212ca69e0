#pragma once

#include "pg/core.hpp"

// Small groups as full-domain partial groups; the working corpus for tests
// and the demo pipeline.

namespace pg {

// Builds a full-domain partial group from a binary table given as rows of
// names. The unit must be names[unit].
PGroup group_from_table(std::vector<std::string> names, ElementId unit,
                        const std::vector<std::vector<ElementId>>& mul);

PGroup cyclic_group(std::size_t n);          // Z/n, elements "0".."n-1"
PGroup klein_group();                        // {1, x, y, xy}
PGroup symmetric3();                         // S3, order 6
PGroup dihedral4();                          // D4, order 8
PGroup quaternion8();                        // Q8, order 8
PGroup trivial_group();

}  // namespace pg
