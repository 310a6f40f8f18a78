#pragma once

#include <optional>
#include <string>

#include "dtop/computad.hpp"

namespace dtop {

/// Searches for a dimension-preserving bijection x -> y carrying the borders
/// of every generator onto the borders of its image. Colour refinement on
/// border incidences prunes the search; candidates are individualized one
/// pair at a time and every leaf is checked in full.
std::optional<ComputadMap> find_isomorphism(const Computad& x, const Computad& y);

/// Why f is not an isomorphism x -> y, or nullopt if it is one.
std::optional<std::string> isomorphism_defect(const Computad& x, const Computad& y,
                                              const ComputadMap& f);

}  // namespace dtop
