#include "dtop/cell.hpp"

#include <algorithm>
#include <string>

#include "dtop/error.hpp"

namespace dtop {

namespace {

void fix_dim(Chain& c, int k) {
  if (c.empty()) {
    c = Chain(k);
  } else if (c.dim() != k) {
    throw Error("malformed-cell", "chain of dimension " + std::to_string(c.dim()) +
                                      " stored at level " + std::to_string(k));
  }
}

}  // namespace

SteinerCell SteinerCell::point(std::size_t generator) {
  SteinerCell x;
  Chain c = Chain::single(0, generator);
  x.levels_.push_back(Level{c, c});
  return x;
}

SteinerCell SteinerCell::from_levels(std::vector<Level> levels) {
  while (levels.size() > 1 && levels.back().minus.empty() &&
         levels.back().plus.empty()) {
    levels.pop_back();
  }
  for (std::size_t k = 0; k < levels.size(); ++k) {
    fix_dim(levels[k].minus, static_cast<int>(k));
    fix_dim(levels[k].plus, static_cast<int>(k));
  }
  if (!levels.empty() && levels.back().minus != levels.back().plus) {
    throw Error("malformed-cell",
                "top level " + std::to_string(levels.size() - 1) +
                    " has different input and output chains");
  }
  SteinerCell x;
  x.levels_ = std::move(levels);
  return x;
}

Chain SteinerCell::component(int k, Sign s) const {
  if (k < 0 || k > dim()) return Chain(k);
  return levels_[static_cast<std::size_t>(k)][s];
}

SteinerCell cell_border(const SteinerCell& x, int m, Sign alpha) {
  if (m < 0) throw Error("invalid-argument", "negative border dimension");
  if (m >= x.dim()) return x;
  std::vector<Level> levels(x.levels().begin(), x.levels().begin() + m);
  const Chain& c = x.levels()[static_cast<std::size_t>(m)][alpha];
  levels.push_back(Level{c, c});
  return SteinerCell::from_levels(std::move(levels));
}

SteinerCell cell_compose(const SteinerCell& x, const SteinerCell& y, int m) {
  SteinerCell shared = cell_border(x, m, Sign::plus);
  SteinerCell other = cell_border(y, m, Sign::minus);
  if (shared != other) {
    int top = std::max(shared.dim(), other.dim());
    for (int k = 0; k <= top; ++k) {
      for (Sign s : {Sign::minus, Sign::plus}) {
        if (shared.component(k, s) != other.component(k, s)) {
          throw Error("composition-undefined",
                      "composite along dimension " + std::to_string(m) +
                          " undefined: borders differ at level " +
                          std::to_string(k) + " sign " + sign_char(s));
        }
      }
    }
  }
  int top = std::max(x.dim(), y.dim());
  std::vector<Level> levels;
  levels.reserve(static_cast<std::size_t>(top) + 1);
  for (int k = 0; k <= top; ++k) {
    Level l;
    for (Sign s : {Sign::minus, Sign::plus}) {
      l[s] = x.component(k, s) + y.component(k, s) - shared.component(k, s);
    }
    levels.push_back(std::move(l));
  }
  return SteinerCell::from_levels(std::move(levels));
}

PairIndex::PairIndex(std::vector<std::size_t> left_counts,
                     std::vector<std::size_t> right_counts)
    : left_(std::move(left_counts)), right_(std::move(right_counts)) {
  if (left_.empty() || right_.empty()) return;
  std::size_t top = (left_.size() - 1) + (right_.size() - 1);
  offset_.resize(top + 1);
  for (std::size_t n = 0; n <= top; ++n) {
    std::size_t acc = 0;
    offset_[n].resize(n + 2, 0);
    for (std::size_t k = 0; k <= n; ++k) {
      offset_[n][k] = acc;
      acc += left(static_cast<int>(k)) * right(static_cast<int>(n - k));
    }
    offset_[n][n + 1] = acc;
  }
}

std::size_t PairIndex::left(int d) const {
  return d >= 0 && static_cast<std::size_t>(d) < left_.size() ? left_[d] : 0;
}

std::size_t PairIndex::right(int d) const {
  return d >= 0 && static_cast<std::size_t>(d) < right_.size() ? right_[d] : 0;
}

std::size_t PairIndex::operator()(GenId l, GenId r) const {
  auto n = static_cast<std::size_t>(l.dim + r.dim);
  return offset_[n][static_cast<std::size_t>(l.dim)] + l.index * right(r.dim) +
         r.index;
}

std::pair<GenId, GenId> PairIndex::split(GenId pair) const {
  const auto& off = offset_.at(static_cast<std::size_t>(pair.dim));
  for (int k = 0; k <= pair.dim; ++k) {
    std::size_t lo = off[static_cast<std::size_t>(k)];
    std::size_t hi = off[static_cast<std::size_t>(k) + 1];
    if (pair.index >= lo && pair.index < hi) {
      std::size_t width = right(pair.dim - k);
      std::size_t rel = pair.index - lo;
      return {GenId{k, rel / width}, GenId{pair.dim - k, rel % width}};
    }
  }
  throw Error("unknown-generator", "pair index out of range");
}

std::vector<std::size_t> PairIndex::counts() const {
  std::vector<std::size_t> out;
  for (const auto& off : offset_) out.push_back(off.back());
  return out;
}

Chain chain_tensor(const Chain& a, const Chain& b, const PairIndex& index) {
  Chain out(a.dim() + b.dim());
  for (const auto& [i, ka] : a.terms()) {
    for (const auto& [j, kb] : b.terms()) {
      out.add(index(GenId{a.dim(), i}, GenId{b.dim(), j}), ka * kb);
    }
  }
  return out;
}

SteinerCell cell_tensor(const SteinerCell& x, const SteinerCell& y,
                        const PairIndex& index) {
  const int n = x.dim();
  const int p = y.dim();
  std::vector<Level> levels;
  levels.reserve(static_cast<std::size_t>(n + p) + 1);
  for (int q = 0; q <= n + p; ++q) {
    Level l{Chain(q), Chain(q)};
    for (Sign a : {Sign::minus, Sign::plus}) {
      for (int m = std::max(0, q - p); m <= std::min(n, q); ++m) {
        l[a] += chain_tensor(x.levels()[m][a],
                             y.levels()[q - m][epsilon(m) * a], index);
      }
    }
    levels.push_back(std::move(l));
  }
  return SteinerCell::from_levels(std::move(levels));
}

}  // namespace dtop
