#include "dtop/computad.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "dtop/error.hpp"

namespace dtop {

namespace {

// Levels 0..n-1 of the atom of an n-generator with the given borders.
std::vector<Level> atom_levels(const SteinerCell& minus, const SteinerCell& plus,
                               int n) {
  std::vector<Level> levels;
  levels.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k + 1 < n; ++k) {
    levels.push_back(
        Level{minus.component(k, Sign::minus), minus.component(k, Sign::plus)});
  }
  levels.push_back(
      Level{minus.component(n - 1, Sign::minus), plus.component(n - 1, Sign::plus)});
  return levels;
}

// Applies a generator substitution levelwise. `f` returns the image of a
// generator or nullopt to drop it; images of lower dimension also vanish.
template <typename F>
SteinerCell map_cell(const SteinerCell& x, F&& f) {
  if (x.is_null()) return x;
  std::vector<Level> levels;
  levels.reserve(x.levels().size());
  for (int k = 0; k <= x.dim(); ++k) {
    Level out{Chain(k), Chain(k)};
    for (Sign s : {Sign::minus, Sign::plus}) {
      for (const auto& [g, c] : x.levels()[static_cast<std::size_t>(k)][s].terms()) {
        std::optional<GenId> img = f(GenId{k, g});
        if (img && img->dim == k) out[s].add(img->index, c);
      }
    }
    levels.push_back(std::move(out));
  }
  return SteinerCell::from_levels(std::move(levels));
}

std::optional<std::pair<int, Sign>> first_difference(const SteinerCell& a,
                                                     const SteinerCell& b) {
  int top = std::max(a.dim(), b.dim());
  for (int k = 0; k <= top; ++k) {
    for (Sign s : {Sign::minus, Sign::plus}) {
      if (a.component(k, s) != b.component(k, s)) return std::make_pair(k, s);
    }
  }
  return std::nullopt;
}

std::string level_text(int level, Sign s) {
  return "level " + std::to_string(level) + " sign " + sign_char(s);
}

}  // namespace

// ---------------------------------------------------------------- Computad

GenId Computad::add_point(std::string name) {
  return append(std::move(name), 0, SteinerCell{}, SteinerCell{});
}

GenId Computad::add_generator(std::string name, int dim, SteinerCell minus,
                              SteinerCell plus) {
  if (dim == 0) return add_point(std::move(name));
  if (dim < 0) throw Error("invalid-argument", "negative generator dimension");
  for (const SteinerCell* cell : {&minus, &plus}) {
    if (cell->is_null() || cell->dim() > dim - 1) {
      throw Error("dimension-mismatch", "border of '" + name +
                                            "' must be a cell of dimension at most " +
                                            std::to_string(dim - 1));
    }
    for (int k = 0; k <= cell->dim(); ++k) {
      for (Sign s : {Sign::minus, Sign::plus}) {
        for (const auto& [g, c] : cell->levels()[static_cast<std::size_t>(k)][s].terms()) {
          if (!complex_.contains(GenId{k, g})) {
            throw Error("dangling-reference",
                        "border of '" + name + "' refers to missing generator " +
                            std::to_string(g) + " of dimension " + std::to_string(k));
          }
        }
      }
    }
    if (auto defect = cell_defect(complex_, *cell)) {
      throw Error("malformed-border", "border of '" + name + "': " + *defect);
    }
  }
  if (dim >= 2) {
    for (Sign a : {Sign::minus, Sign::plus}) {
      auto diff = first_difference(cell_border(minus, dim - 2, a),
                                   cell_border(plus, dim - 2, a));
      if (diff) {
        throw Error("globularity", "borders of '" + name + "' are not globular at " +
                                       level_text(diff->first, diff->second));
      }
    }
  }
  if (auto defect = levels_defect(complex_, atom_levels(minus, plus, dim))) {
    throw Error("non-unital", "atom of '" + name + "' is not a cell: " + *defect);
  }
  return append(std::move(name), dim, std::move(minus), std::move(plus));
}

GenId Computad::add_generator_unchecked(std::string name, int dim, SteinerCell minus,
                                        SteinerCell plus) {
  if (dim == 0) return add_point(std::move(name));
  return append(std::move(name), dim, std::move(minus), std::move(plus));
}

GenId Computad::append(std::string name, int dim, SteinerCell minus,
                       SteinerCell plus) {
  if (by_name_.count(name) > 0) {
    throw Error("duplicate-name", "generator name '" + name + "' already in use");
  }
  Chain minus_chain = dim > 0 ? minus.component(dim - 1, Sign::minus) : Chain{};
  Chain plus_chain = dim > 0 ? plus.component(dim - 1, Sign::plus) : Chain{};
  GenId id = complex_.add(dim, name, std::move(minus_chain), std::move(plus_chain));
  if (static_cast<std::size_t>(dim) >= cells_.size()) cells_.resize(dim + 1);
  cells_[static_cast<std::size_t>(dim)].push_back(
      Entry{name, std::move(minus), std::move(plus)});
  by_name_.emplace(std::move(name), id);
  return id;
}

std::size_t Computad::count(int d) const noexcept { return complex_.count(d); }

std::vector<std::size_t> Computad::counts() const { return complex_.counts(); }

std::size_t Computad::size() const noexcept {
  std::size_t total = 0;
  for (const auto& row : cells_) total += row.size();
  return total;
}

const Computad::Entry& Computad::entry(GenId id) const {
  if (!contains(id)) {
    throw Error("unknown-generator", "no generator " + std::to_string(id.index) +
                                         " in dimension " + std::to_string(id.dim));
  }
  return cells_[static_cast<std::size_t>(id.dim)][id.index];
}

const std::string& Computad::name(GenId id) const { return entry(id).name; }

std::optional<GenId> Computad::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

GenId Computad::at(std::string_view name) const {
  if (auto id = find(name)) return *id;
  throw Error("unknown-name", "no generator named '" + std::string(name) + "'");
}

const SteinerCell& Computad::border(GenId id, Sign s) const {
  const Entry& e = entry(id);
  if (id.dim == 0) {
    throw Error("invalid-argument", "0-cell '" + e.name + "' has no border");
  }
  return s == Sign::minus ? e.minus : e.plus;
}

SteinerCell Computad::atom(GenId id) const {
  const Entry& e = entry(id);
  if (id.dim == 0) return SteinerCell::point(id.index);
  auto levels = atom_levels(e.minus, e.plus, id.dim);
  Chain top = Chain::single(id.dim, id.index);
  levels.push_back(Level{top, top});
  return SteinerCell::from_levels(std::move(levels));
}

std::vector<GenId> Computad::generators() const {
  std::vector<GenId> out;
  out.reserve(size());
  for (int d = 0; d <= dim(); ++d) {
    for (std::size_t i = 0; i < count(d); ++i) out.push_back(GenId{d, i});
  }
  return out;
}

bool operator==(const Computad& a, const Computad& b) { return a.cells_ == b.cells_; }

std::string format_counts(const std::vector<std::size_t>& counts) {
  std::ostringstream out;
  for (std::size_t d = 0; d < counts.size(); ++d) {
    if (d > 0) out << ' ';
    out << d << ':' << counts[d];
  }
  return out.str();
}

std::string format_chain(const Computad& x, const Chain& c) {
  if (c.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, k] : c.terms()) {
    Integer mag = k < 0 ? Integer(-k) : k;
    if (first) {
      if (k < 0) out << "-";
    } else {
      out << (k < 0 ? " - " : " + ");
    }
    if (mag != 1) out << mag << "*";
    out << x.name(GenId{c.dim(), g});
    first = false;
  }
  return out.str();
}

// ---------------------------------------------------------------- maps

bool ComputadMap::is_dimension_preserving() const {
  for (std::size_t d = 0; d < image.size(); ++d) {
    for (const GenId& g : image[d]) {
      if (g.dim != static_cast<int>(d)) return false;
    }
  }
  return true;
}

bool ComputadMap::is_injective() const {
  std::set<GenId> seen;
  for (const auto& row : image) {
    for (const GenId& g : row) {
      if (!seen.insert(g).second) return false;
    }
  }
  return true;
}

ComputadMap identity_map(const Computad& x) {
  ComputadMap f;
  f.image.resize(static_cast<std::size_t>(x.dim() + 1));
  for (GenId g : x.generators()) f.image[static_cast<std::size_t>(g.dim)].push_back(g);
  return f;
}

ComputadMap compose(const ComputadMap& after, const ComputadMap& before) {
  ComputadMap f;
  f.image.resize(before.image.size());
  for (std::size_t d = 0; d < before.image.size(); ++d) {
    for (const GenId& g : before.image[d]) f.image[d].push_back(after(g));
  }
  return f;
}

SteinerCell transport(const ComputadMap& f, const SteinerCell& x) {
  return map_cell(x, [&](GenId g) -> std::optional<GenId> { return f(g); });
}

std::optional<std::string> map_defect(const Computad& source, const Computad& target,
                                      const ComputadMap& f) {
  for (GenId g : source.generators()) {
    if (static_cast<std::size_t>(g.dim) >= f.image.size() ||
        g.index >= f.image[static_cast<std::size_t>(g.dim)].size()) {
      return "generator '" + source.name(g) + "' has no image";
    }
    GenId h = f(g);
    if (!target.contains(h) || h.dim > g.dim) {
      return "generator '" + source.name(g) + "' has an invalid image";
    }
    SteinerCell moved = transport(f, source.atom(g));
    SteinerCell expected = target.atom(h);
    if (auto diff = first_difference(moved, expected)) {
      return "borders of '" + source.name(g) + "' are not carried onto those of '" +
             target.name(h) + "' at " + level_text(diff->first, diff->second);
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- relations

GeneratorRelation::GeneratorRelation(const Computad& x) : counts_(x.counts()) {
  std::size_t total = 0;
  for (std::size_t c : counts_) {
    offset_.push_back(total);
    total += c;
  }
  parent_.resize(total);
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t GeneratorRelation::flat(GenId id) const {
  if (id.dim < 0 || static_cast<std::size_t>(id.dim) >= counts_.size() ||
      id.index >= counts_[static_cast<std::size_t>(id.dim)]) {
    throw Error("unknown-generator", "relation refers to a missing generator");
  }
  return offset_[static_cast<std::size_t>(id.dim)] + id.index;
}

std::size_t GeneratorRelation::find(std::size_t i) const {
  while (parent_[i] != i) {
    parent_[i] = parent_[parent_[i]];
    i = parent_[i];
  }
  return i;
}

void GeneratorRelation::relate(GenId a, GenId b) {
  std::size_t ra = find(flat(a));
  std::size_t rb = find(flat(b));
  if (ra == rb) return;
  if (rb < ra) std::swap(ra, rb);
  parent_[rb] = ra;
}

bool GeneratorRelation::related(GenId a, GenId b) const {
  return find(flat(a)) == find(flat(b));
}

std::vector<std::vector<GenId>> GeneratorRelation::classes() const {
  std::map<std::size_t, std::vector<GenId>> by_root;
  for (std::size_t d = 0; d < counts_.size(); ++d) {
    for (std::size_t i = 0; i < counts_[d]; ++i) {
      by_root[find(offset_[d] + i)].push_back(GenId{static_cast<int>(d), i});
    }
  }
  std::vector<std::vector<GenId>> out;
  out.reserve(by_root.size());
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

bool GeneratorRelation::is_identity() const {
  for (std::size_t i = 0; i < parent_.size(); ++i) {
    if (find(i) != i) return false;
  }
  return true;
}

// ---------------------------------------------------------------- quotients

QuotientResult quotient_by_relation(const Computad& x, const GeneratorRelation& r0,
                                    QuotientOptions options) {
  GeneratorRelation r = r0;
  for (;;) {
    // Members are in generator order, so the first is of least dimension.
    auto classes = r.classes();
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    ComputadMap proj;
    proj.image.resize(static_cast<std::size_t>(x.dim() + 1));
    for (std::size_t d = 0; d < proj.image.size(); ++d) {
      proj.image[d].resize(x.count(static_cast<int>(d)));
    }
    std::vector<std::size_t> next(static_cast<std::size_t>(x.dim() + 1), 0);
    std::vector<GenId> class_target;
    class_target.reserve(classes.size());
    for (const auto& members : classes) {
      int d = members.front().dim;
      GenId target{d, next[static_cast<std::size_t>(d)]++};
      class_target.push_back(target);
      for (GenId m : members) proj.image[static_cast<std::size_t>(m.dim)][m.index] = target;
    }

    auto class_name = [&](const std::vector<GenId>& members) {
      std::vector<std::string> lowest;
      for (GenId m : members) {
        if (m.dim == members.front().dim) lowest.push_back(x.name(m));
      }
      if (lowest.size() == 1 || !options.joined_names) return lowest.front();
      std::string out = "[";
      for (std::size_t i = 0; i < lowest.size(); ++i) {
        if (i > 0) out += "|";
        out += lowest[i];
      }
      return out + "]";
    };

    Computad q;
    for (const auto& members : classes) {
      GenId rep = members.front();
      if (rep.dim == 0) {
        q.add_point(class_name(members));
      } else {
        q.add_generator_unchecked(class_name(members), rep.dim,
                                  transport(proj, x.border(rep, Sign::minus)),
                                  transport(proj, x.border(rep, Sign::plus)));
      }
    }

    bool merged = false;
    for (std::size_t c = 0; c < classes.size() && !merged; ++c) {
      const auto& members = classes[c];
      if (members.size() == 1) continue;
      SteinerCell expected = q.atom(class_target[c]);
      for (std::size_t i = 1; i < members.size(); ++i) {
        SteinerCell moved = transport(proj, x.atom(members[i]));
        auto diff = first_difference(moved, expected);
        if (!diff) continue;
        auto [level, sign] = *diff;
        if (options.congruence_closure) {
          Chain delta = moved.component(level, sign) - expected.component(level, sign);
          auto [pos, neg] = pos_neg_parts(delta);
          if (pos.support_size() == 1 && neg.support_size() == 1 &&
              pos.terms().begin()->second == neg.terms().begin()->second) {
            GenId a{level, pos.terms().begin()->first};
            GenId b{level, neg.terms().begin()->first};
            // Relate the representatives of the two quotient generators.
            std::optional<GenId> ra;
            std::optional<GenId> rb;
            for (std::size_t k = 0; k < classes.size(); ++k) {
              if (class_target[k] == a) ra = classes[k].front();
              if (class_target[k] == b) rb = classes[k].front();
            }
            r.relate(*ra, *rb);
            merged = true;
            break;
          }
        }
        throw Error("incompatible-relation",
                    "class '" + class_name(members) + "': member '" +
                        x.name(members[i]) + "' disagrees with '" +
                        x.name(members.front()) + "' at " + level_text(level, sign));
      }
    }
    if (!merged) return QuotientResult{std::move(q), std::move(proj)};
  }
}

std::vector<GenId> generator_closure(const Computad& x, std::vector<GenId> gens) {
  std::set<GenId> seen(gens.begin(), gens.end());
  std::vector<GenId> work(seen.begin(), seen.end());
  while (!work.empty()) {
    GenId g = work.back();
    work.pop_back();
    if (g.dim == 0) continue;
    for (Sign b : {Sign::minus, Sign::plus}) {
      const SteinerCell& cell = x.border(g, b);
      for (int k = 0; k <= cell.dim(); ++k) {
        for (Sign s : {Sign::minus, Sign::plus}) {
          for (const auto& [i, c] : cell.levels()[static_cast<std::size_t>(k)][s].terms()) {
            if (seen.insert(GenId{k, i}).second) work.push_back(GenId{k, i});
          }
        }
      }
    }
  }
  return {seen.begin(), seen.end()};
}

Subcomputad restrict_to(const Computad& x, const std::vector<GenId>& gens) {
  std::vector<GenId> sorted = gens;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::map<GenId, GenId> reindex;
  std::vector<std::size_t> next;
  for (GenId g : sorted) {
    if (static_cast<std::size_t>(g.dim) >= next.size()) next.resize(g.dim + 1, 0);
    reindex[g] = GenId{g.dim, next[static_cast<std::size_t>(g.dim)]++};
  }
  auto lookup = [&](GenId g) -> std::optional<GenId> {
    auto it = reindex.find(g);
    if (it == reindex.end()) {
      throw Error("not-subcomputad", "generator set is not closed under borders: '" +
                                         x.name(g) + "' is missing");
    }
    return it->second;
  };
  Subcomputad out;
  out.inclusion.image.resize(next.size());
  for (GenId g : sorted) {
    if (g.dim == 0) {
      out.computad.add_point(x.name(g));
    } else {
      out.computad.add_generator_unchecked(x.name(g), g.dim,
                                           map_cell(x.border(g, Sign::minus), lookup),
                                           map_cell(x.border(g, Sign::plus), lookup));
    }
    out.inclusion.image[static_cast<std::size_t>(g.dim)].push_back(g);
  }
  return out;
}

Subcomputad subcomputad_closure(const Computad& x, const std::vector<SteinerCell>& cells) {
  std::vector<GenId> gens;
  for (const SteinerCell& cell : cells) {
    for (int k = 0; k <= cell.dim(); ++k) {
      for (Sign s : {Sign::minus, Sign::plus}) {
        for (const auto& [i, c] : cell.levels()[static_cast<std::size_t>(k)][s].terms()) {
          GenId g{k, i};
          if (!x.contains(g)) {
            throw Error("unknown-generator", "cell refers to a missing generator");
          }
          gens.push_back(g);
        }
      }
    }
  }
  return restrict_to(x, generator_closure(x, std::move(gens)));
}

QuotientResult collapse(const Computad& x, const std::vector<GenId>& sub,
                        std::optional<std::string> basepoint_name) {
  if (sub.empty()) return QuotientResult{x, identity_map(x)};
  std::set<GenId> members(sub.begin(), sub.end());
  for (GenId g : members) {
    if (!x.contains(g)) throw Error("unknown-generator", "collapse of a missing generator");
  }
  if (generator_closure(x, sub).size() != members.size()) {
    throw Error("not-subcomputad",
                "collapsed generators are not closed under borders");
  }
  GeneratorRelation r(x);
  for (GenId g : members) r.relate(*members.begin(), g);
  QuotientResult result = quotient_by_relation(x, r);

  std::vector<GenId> points;
  for (GenId g : members) {
    if (g.dim == 0) points.push_back(g);
  }
  if (points.empty()) {
    throw Error("not-subcomputad", "collapsed generators contain no 0-cell");
  }
  auto taken = [&](const std::string& n) {
    auto id = x.find(n);
    return id && members.count(*id) == 0;
  };
  std::string wanted;
  if (basepoint_name) {
    wanted = *basepoint_name;
  } else if (points.size() == 1) {
    wanted = x.name(points.front());
  } else {
    wanted = "*";
  }
  while (taken(wanted)) wanted += "'";
  GenId base = result.projection(points.front());
  if (result.quotient.name(base) != wanted) {
    result.quotient = rename(result.quotient, {{result.quotient.name(base), wanted}});
  }
  return result;
}

// ---------------------------------------------------------------- unions

std::pair<ComputadMap, ComputadMap> coproduct_injections(const Computad& x,
                                                         const Computad& y) {
  ComputadMap left = identity_map(x);
  ComputadMap right;
  right.image.resize(static_cast<std::size_t>(y.dim() + 1));
  for (GenId g : y.generators()) {
    right.image[static_cast<std::size_t>(g.dim)].push_back(
        GenId{g.dim, x.count(g.dim) + g.index});
  }
  return {std::move(left), std::move(right)};
}

Computad disjoint_union(const Computad& x, const Computad& y) {
  auto clash = [&](const std::string& n) { return x.find(n) && y.find(n); };
  auto [left, right] = coproduct_injections(x, y);
  int top = std::max(x.dim(), y.dim());
  // Suffixed names may themselves be taken; prime them until free.
  std::set<std::string> taken;
  for (GenId g : x.generators()) taken.insert(x.name(g));
  for (GenId g : y.generators()) taken.insert(y.name(g));
  auto fresh = [&](std::string n, const char* suffix) {
    n += suffix;
    while (taken.count(n) > 0) n += "'";
    taken.insert(n);
    return n;
  };
  Computad out;
  for (int d = 0; d <= top; ++d) {
    for (std::size_t i = 0; i < x.count(d); ++i) {
      GenId g{d, i};
      std::string n = clash(x.name(g)) ? fresh(x.name(g), "/1") : x.name(g);
      if (d == 0) {
        out.add_point(std::move(n));
      } else {
        out.add_generator_unchecked(std::move(n), d, x.border(g, Sign::minus),
                                    x.border(g, Sign::plus));
      }
    }
    for (std::size_t i = 0; i < y.count(d); ++i) {
      GenId g{d, i};
      std::string n = clash(y.name(g)) ? fresh(y.name(g), "/2") : y.name(g);
      if (d == 0) {
        out.add_point(std::move(n));
      } else {
        out.add_generator_unchecked(std::move(n), d,
                                    transport(right, y.border(g, Sign::minus)),
                                    transport(right, y.border(g, Sign::plus)));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- reversal

SteinerCell op_cell(const SteinerCell& x, const DimSet& s) {
  if (x.is_null()) return x;
  std::vector<Level> levels = x.levels();
  for (int k = 0; k < x.dim(); ++k) {
    if (s.contains(k + 1)) std::swap(levels[k].minus, levels[k].plus);
  }
  return SteinerCell::from_levels(std::move(levels));
}

Computad op_reverse(const Computad& x, const DimSet& s) {
  Computad out;
  for (GenId g : x.generators()) {
    if (g.dim == 0) {
      out.add_point(x.name(g));
      continue;
    }
    bool flip = s.contains(g.dim);
    const SteinerCell& minus = x.border(g, flip ? Sign::plus : Sign::minus);
    const SteinerCell& plus = x.border(g, flip ? Sign::minus : Sign::plus);
    out.add_generator_unchecked(x.name(g), g.dim, op_cell(minus, s), op_cell(plus, s));
  }
  return out;
}

Computad rename(const Computad& x,
                const std::unordered_map<std::string, std::string>& names) {
  Computad out;
  for (GenId g : x.generators()) {
    auto it = names.find(x.name(g));
    std::string n = it == names.end() ? x.name(g) : it->second;
    if (g.dim == 0) {
      out.add_point(std::move(n));
    } else {
      out.add_generator_unchecked(std::move(n), g.dim, x.border(g, Sign::minus),
                                  x.border(g, Sign::plus));
    }
  }
  return out;
}

Computad skeleton(const Computad& x, int n) {
  std::vector<GenId> gens;
  for (GenId g : x.generators()) {
    if (g.dim <= n) gens.push_back(g);
  }
  return restrict_to(x, gens).computad;
}

// ---------------------------------------------------------------- validation

ValidationReport validate_computad(const Computad& x) {
  ValidationReport report;
  const DirectedComplex& dc = x.complex();
  for (GenId g : x.generators()) {
    if (g.dim == 0) continue;
    const std::string& n = x.name(g);
    auto add = [&](std::string kind, int level, std::optional<Sign> sign,
                   std::string detail) {
      report.violations.push_back(
          Violation{n, std::move(kind), level, sign, std::move(detail)});
    };
    bool borders_ok = true;
    for (Sign b : {Sign::minus, Sign::plus}) {
      const SteinerCell& cell = x.border(g, b);
      if (cell.is_null() || cell.dim() > g.dim - 1) {
        add("border-cell", g.dim - 1, b, "border cell has the wrong dimension");
        borders_ok = false;
      } else if (auto defect = cell_defect(dc, cell)) {
        add("border-cell", -1, b, *defect);
        borders_ok = false;
      }
    }
    if (!borders_ok) continue;
    const SteinerCell& minus = x.border(g, Sign::minus);
    const SteinerCell& plus = x.border(g, Sign::plus);
    if (g.dim >= 2) {
      for (Sign a : {Sign::minus, Sign::plus}) {
        if (auto diff = first_difference(cell_border(minus, g.dim - 2, a),
                                         cell_border(plus, g.dim - 2, a))) {
          add("globularity", diff->first, diff->second,
              "input and output borders differ below the top");
        }
      }
      Chain d = dc.plus(g) - dc.minus(g);
      if (!chain_boundary(dc, d).empty()) {
        add("boundary-squared", g.dim - 2, std::nullopt,
            "boundary of the boundary is " + to_string(chain_boundary(dc, d)));
      }
    } else if (dc.minus(g).augmentation() != dc.plus(g).augmentation()) {
      add("augmentation", 0, std::nullopt, "endpoint coefficient sums differ");
    }
    SteinerCell atom_cell;
    try {
      atom_cell = x.atom(g);
    } catch (const Error& e) {
      add("unitality", g.dim, std::nullopt, e.what());
      continue;
    }
    if (auto defect = cell_defect(dc, atom_cell)) {
      add("unitality", -1, std::nullopt, *defect);
      continue;
    }
    if (report.loop_free_unital) {
      try {
        if (atom(dc, g) != atom_cell) report.loop_free_unital = false;
      } catch (const Error&) {
        report.loop_free_unital = false;
      }
    }
  }
  return report;
}

}  // namespace dtop
