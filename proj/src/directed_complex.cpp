#include "dtop/directed_complex.hpp"

#include "dtop/error.hpp"

namespace dtop {

GenId DirectedComplex::add(int dim, std::string name, Chain minus, Chain plus) {
  if (dim < 0) throw Error("invalid-argument", "negative generator dimension");
  if (static_cast<std::size_t>(dim) >= basis_.size()) basis_.resize(dim + 1);
  if (dim == 0) {
    minus = Chain(-1);
    plus = Chain(-1);
  } else {
    if (minus.empty()) minus = Chain(dim - 1);
    if (plus.empty()) plus = Chain(dim - 1);
    if (minus.dim() != dim - 1 || plus.dim() != dim - 1) {
      throw Error("dimension-mismatch",
                  "border chains of '" + name + "' have the wrong dimension");
    }
  }
  auto& row = basis_[static_cast<std::size_t>(dim)];
  GenId id{dim, row.size()};
  row.push_back(Entry{Generator{id, std::move(name)}, std::move(minus),
                      std::move(plus)});
  return id;
}

std::size_t DirectedComplex::count(int dim) const noexcept {
  if (dim < 0 || static_cast<std::size_t>(dim) >= basis_.size()) return 0;
  return basis_[static_cast<std::size_t>(dim)].size();
}

std::vector<std::size_t> DirectedComplex::counts() const {
  std::vector<std::size_t> out;
  for (const auto& row : basis_) out.push_back(row.size());
  return out;
}

bool DirectedComplex::contains(GenId id) const noexcept {
  return id.index < count(id.dim);
}

const DirectedComplex::Entry& DirectedComplex::entry(GenId id) const {
  if (!contains(id)) {
    throw Error("unknown-generator", "no generator " + std::to_string(id.index) +
                                         " in dimension " +
                                         std::to_string(id.dim));
  }
  return basis_[static_cast<std::size_t>(id.dim)][id.index];
}

const Generator& DirectedComplex::generator(GenId id) const {
  return entry(id).gen;
}

const Chain& DirectedComplex::minus(GenId id) const { return entry(id).minus; }

const Chain& DirectedComplex::plus(GenId id) const { return entry(id).plus; }

Chain chain_boundary(const DirectedComplex& dc, const Chain& c) {
  if (c.dim() < 1) {
    throw Error("invalid-argument", "boundary of a chain of dimension " +
                                        std::to_string(c.dim()));
  }
  Chain out(c.dim() - 1);
  for (const auto& [g, k] : c.terms()) {
    GenId id{c.dim(), g};
    Chain d = dc.plus(id) - dc.minus(id);
    out += k * d;
  }
  return out;
}

SteinerCell atom(const DirectedComplex& dc, GenId x) {
  const auto& name = dc.generator(x).name;
  const int n = x.dim;
  std::vector<Level> levels(static_cast<std::size_t>(n) + 1);
  Chain top = Chain::single(n, x.index);
  levels[static_cast<std::size_t>(n)] = Level{top, top};
  if (n > 0) {
    levels[static_cast<std::size_t>(n - 1)] = Level{dc.minus(x), dc.plus(x)};
    for (int k = n - 1; k >= 1; --k) {
      auto& cur = levels[static_cast<std::size_t>(k)];
      auto [pos_of_minus, neg_of_minus] = pos_neg_parts(chain_boundary(dc, cur.minus));
      auto [pos_of_plus, neg_of_plus] = pos_neg_parts(chain_boundary(dc, cur.plus));
      levels[static_cast<std::size_t>(k - 1)] =
          Level{std::move(neg_of_minus), std::move(pos_of_plus)};
    }
  }
  SteinerCell cell;
  try {
    cell = SteinerCell::from_levels(std::move(levels));
  } catch (const Error& e) {
    throw Error("non-unital", "non-unital basis at generator '" + name +
                                  "': " + e.what());
  }
  if (auto defect = cell_defect(dc, cell)) {
    throw Error("non-unital",
                "non-unital basis at generator '" + name + "': " + *defect);
  }
  return cell;
}

std::optional<std::string> cell_defect(const DirectedComplex& dc,
                                       const SteinerCell& x) {
  if (x.is_null()) return "empty cell";
  return levels_defect(dc, x.levels());
}

std::optional<std::string> levels_defect(const DirectedComplex& dc,
                                         const std::vector<Level>& levels) {
  if (levels.empty()) return "empty cell";
  const int top = static_cast<int>(levels.size()) - 1;
  for (int k = 0; k <= top; ++k) {
    for (Sign s : {Sign::minus, Sign::plus}) {
      const Chain& c = levels[static_cast<std::size_t>(k)][s];
      for (const auto& [g, coeff] : c.terms()) {
        if (!dc.contains(GenId{k, g})) {
          return "level " + std::to_string(k) + " refers to unknown generator " +
                 std::to_string(g);
        }
      }
      if (!c.non_negative()) {
        return "negative coefficient at level " + std::to_string(k) + " sign " +
               sign_char(s);
      }
    }
  }
  for (Sign s : {Sign::minus, Sign::plus}) {
    if (levels[0][s].augmentation() != 1) {
      return std::string("augmentation of level 0 sign ") + sign_char(s) +
             " is not 1";
    }
  }
  for (int k = 1; k <= top; ++k) {
    const auto& below = levels[static_cast<std::size_t>(k - 1)];
    Chain expected = below.plus - below.minus;
    for (Sign s : {Sign::minus, Sign::plus}) {
      const Chain& c = levels[static_cast<std::size_t>(k)][s];
      if (chain_boundary(dc, c) != expected) {
        return "boundary of level " + std::to_string(k) + " sign " + sign_char(s) +
               " does not match level " + std::to_string(k - 1);
      }
    }
  }
  return std::nullopt;
}

}  // namespace dtop
