#pragma once

#include <cstddef>
#include <vector>

#include "dtop/chain.hpp"

namespace dtop {

/// One row (c^-_k, c^+_k) of a double chain.
struct Level {
  Chain minus;
  Chain plus;

  const Chain& operator[](Sign s) const { return s == Sign::minus ? minus : plus; }
  Chain& operator[](Sign s) { return s == Sign::minus ? minus : plus; }

  friend bool operator==(const Level&, const Level&) = default;
};

/// A cell of the free omega-category in double-chain form. Level k holds the
/// pair (c^-_k, c^+_k); components above dim() are zero and are not stored.
/// The representation is kept normalized: the top stored level is nonzero
/// (unless dim() == 0) and has c^- == c^+.
///
/// SteinerCell does not know which complex it lives over. Validity against a
/// complex is checked by cell_defect() in directed_complex.hpp.
class SteinerCell {
 public:
  SteinerCell() = default;

  /// The 0-cell given by a single 0-dimensional generator.
  static SteinerCell point(std::size_t generator);

  /// Builds a cell from raw levels, trimming zero levels at the top. Throws
  /// if the resulting top level does not have equal components.
  static SteinerCell from_levels(std::vector<Level> levels);

  int dim() const noexcept { return static_cast<int>(levels_.size()) - 1; }
  bool is_null() const noexcept { return levels_.empty(); }

  const std::vector<Level>& levels() const noexcept { return levels_; }
  /// c^s_k, or the zero chain of dimension k when k > dim().
  Chain component(int k, Sign s) const;
  const Chain& top() const { return levels_.back().minus; }

  friend bool operator==(const SteinerCell&, const SteinerCell&) = default;

 private:
  std::vector<Level> levels_;
};

/// Truncation to the m-dimensional border of sign alpha. Returns x unchanged
/// when m >= dim(x).
SteinerCell cell_border(const SteinerCell& x, int m, Sign alpha);

/// x composed with y along their m-dimensional border. Throws Error of kind
/// "composition-undefined" naming the first level where
/// cell_border(x, m, +) and cell_border(y, m, -) differ.
SteinerCell cell_compose(const SteinerCell& x, const SteinerCell& y, int m);

/// Indexing of pair generators of a tensor product. Generators of X (x) Y in
/// dimension n are ordered by the left factor's (dim, index), then by the
/// right factor's index.
class PairIndex {
 public:
  PairIndex(std::vector<std::size_t> left_counts,
            std::vector<std::size_t> right_counts);

  std::size_t operator()(GenId left, GenId right) const;
  std::pair<GenId, GenId> split(GenId pair) const;
  std::vector<std::size_t> counts() const;

 private:
  std::size_t left(int d) const;
  std::size_t right(int d) const;

  std::vector<std::size_t> left_;
  std::vector<std::size_t> right_;
  // offset_[n][k]: first index in dimension n of pairs with left dim k.
  std::vector<std::vector<std::size_t>> offset_;
};

/// Bilinear product of chains, landing on pair generators.
Chain chain_tensor(const Chain& a, const Chain& b, const PairIndex& index);

/// (x (x) y)^a_q = sum over m + p = q of x^a_m (x) y^{epsilon(m) a}_p.
SteinerCell cell_tensor(const SteinerCell& x, const SteinerCell& y,
                        const PairIndex& index);

}  // namespace dtop
