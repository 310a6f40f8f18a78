#pragma once

#include <string>
#include <vector>

#include "dtop/computad.hpp"

namespace dtop {

/// Generators of x (x) y, in the order of PairIndex(x.counts(), y.counts()).
/// The borders of s (x) t are the (n-1)-borders of the tensor of the atoms.
/// Pair names are "(s,t)" with nested tuples flattened.
Computad tensor_product(const Computad& x, const Computad& y);

PairIndex tensor_index(const Computad& x, const Computad& y);

/// Name of s (x) t given the factor names.
std::string pair_name(const std::string& left, const std::string& right);

/// Border of s (x) t of dimension m <= 3 evaluated from the explicit
/// low-dimensional composites, with "*k" read as composition along the
/// (k-1)-border. Throws Error "composition-undefined" naming the clause.
SteinerCell explicit_tensor_border(const Computad& x, const Computad& y, GenId s,
                                   GenId t, int m, Sign alpha);

struct TensorBorderMismatch {
  std::string pair;
  int border = 0;     // m of the m-border
  Sign sign = Sign::minus;
  int level = 0;      // first component level that differs, -1 for errors
  std::string expected;  // from the explicit composites
  std::string got;       // from the tensor of atoms
};

struct TensorBorderReport {
  std::size_t checked = 0;
  std::vector<TensorBorderMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Compares explicit_tensor_border with the truncated tensor of atoms for
/// every pair of total dimension <= max_total_dim, every m <= 3, both signs.
TensorBorderReport check_tensor_borders(const Computad& x, const Computad& y,
                                        int max_total_dim = 4);

}  // namespace dtop
