#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dtop/cell.hpp"
#include "dtop/chain.hpp"

namespace dtop {

struct Generator {
  GenId id;
  std::string name;

  int dim() const noexcept { return id.dim; }
};

/// Graded basis with, for each generator x of positive dimension, a pair of
/// non-negative chains (minus(x), plus(x)) one dimension down. The boundary
/// is d(x) = plus(x) - minus(x).
class DirectedComplex {
 public:
  /// Appends a generator and returns its id. Border chains must be of
  /// dimension dim - 1; they are ignored for dim == 0.
  GenId add(int dim, std::string name, Chain minus = {}, Chain plus = {});

  int top_dim() const noexcept { return static_cast<int>(basis_.size()) - 1; }
  std::size_t count(int dim) const noexcept;
  std::vector<std::size_t> counts() const;
  bool contains(GenId id) const noexcept;

  const Generator& generator(GenId id) const;
  const Chain& minus(GenId id) const;
  const Chain& plus(GenId id) const;
  const Chain& border(GenId id, Sign s) const {
    return s == Sign::minus ? minus(id) : plus(id);
  }

 private:
  struct Entry {
    Generator gen;
    Chain minus;
    Chain plus;
  };
  const Entry& entry(GenId id) const;

  std::vector<std::vector<Entry>> basis_;
};

/// Linear extension of d to chains. Throws on unknown generators and on
/// chains of dimension 0.
Chain chain_boundary(const DirectedComplex& dc, const Chain& c);

/// The atom <x>: top level x, level dim-1 taken from minus(x)/plus(x), lower
/// levels by the sign split of the boundary of the level above. Throws Error
/// of kind "non-unital" naming x when the result is not a well-formed cell.
SteinerCell atom(const DirectedComplex& dc, GenId x);

/// Describes the first violated cell axiom of x relative to dc (negative
/// coefficient, augmentation, boundary relation, unknown generator), or
/// nullopt for a well-formed cell.
std::optional<std::string> cell_defect(const DirectedComplex& dc,
                                       const SteinerCell& x);

/// The checks of cell_defect on a bare list of levels, without requiring the
/// top level to have equal components.
std::optional<std::string> levels_defect(const DirectedComplex& dc,
                                         const std::vector<Level>& levels);

}  // namespace dtop
