#pragma once

#include <string>

#include "dtop/computad.hpp"

namespace dtop {

/// Graphviz digraph: one node per generator of dimension <= max_dim (all when
/// negative), and an edge from each generator in the chain border of a cell
/// to the cell, labelled by sign and multiplicity ("-2", "+1").
std::string export_dot(const Computad& x, int max_dim = -1);

}  // namespace dtop
