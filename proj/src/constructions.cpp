#include "dtop/constructions.hpp"

#include <algorithm>
#include <map>

#include "dtop/error.hpp"
#include "dtop/tensor.hpp"

namespace dtop {

PointedComputad pointed(Computad x, std::string_view basepoint) {
  GenId base = x.at(basepoint);
  if (base.dim != 0) {
    throw Error("invalid-argument",
                "basepoint '" + std::string(basepoint) + "' is not a 0-cell");
  }
  return PointedComputad{std::move(x), base};
}

Computad point(std::string name) {
  Computad x;
  x.add_point(std::move(name));
  return x;
}

Computad interval() {
  Computad x;
  GenId zero = x.add_point("0");
  GenId one = x.add_point("1");
  x.add_generator("a", 1, SteinerCell::point(zero.index), SteinerCell::point(one.index));
  return x;
}

Computad globe(int n) {
  if (n < 0) throw Error("invalid-argument", "negative globe dimension");
  Computad x;
  if (n == 0) {
    x.add_point("top");
    return x;
  }
  // The k-borders of the top cell, built upwards.
  SteinerCell minus;
  SteinerCell plus;
  for (int k = 0; k < n; ++k) {
    std::string lo = std::to_string(k) + "-";
    std::string hi = std::to_string(k) + "+";
    GenId m;
    GenId p;
    if (k == 0) {
      m = x.add_point(lo);
      p = x.add_point(hi);
    } else {
      m = x.add_generator(lo, k, minus, plus);
      p = x.add_generator(hi, k, minus, plus);
    }
    minus = x.atom(m);
    plus = x.atom(p);
  }
  x.add_generator("top", n, minus, plus);
  return x;
}

Computad cube(int n) {
  if (n < 0) throw Error("invalid-argument", "negative cube dimension");
  if (n == 0) return point();
  Computad x = interval();
  for (int i = 1; i < n; ++i) x = tensor_product(x, interval());
  return x;
}

Computad cylinder(const Computad& x) { return tensor_product(interval(), x); }

QuotientResult cone_with_projection(const Computad& x, Sign end) {
  Computad cyl = cylinder(x);
  PairIndex index = tensor_index(interval(), x);
  std::size_t corner = end == Sign::plus ? 1 : 0;
  std::vector<GenId> collapsed;
  for (GenId g : x.generators()) {
    collapsed.push_back(GenId{g.dim, index(GenId{0, corner}, g)});
  }
  return collapse(cyl, collapsed, end == Sign::plus ? "1" : "0");
}

Computad cone(const Computad& x, Sign end) {
  return cone_with_projection(x, end).quotient;
}

Computad oriental(int n) {
  if (n < 0) throw Error("invalid-argument", "negative oriental dimension");
  Computad x = point();
  for (int i = 0; i < n; ++i) x = cone(x, Sign::plus);
  return x;
}

Computad circle() {
  Computad x;
  GenId base = x.add_point("*");
  x.add_generator("a", 1, SteinerCell::point(base.index),
                  SteinerCell::point(base.index));
  return x;
}

PointedComputad two_points() {
  Computad x;
  x.add_point("*");
  x.add_point("p");
  return pointed(std::move(x), "*");
}

PointedComputad reduced_cylinder(const PointedComputad& x) {
  Computad i = interval();
  Computad cyl = tensor_product(i, x.computad);
  PairIndex index = tensor_index(i, x.computad);
  std::vector<GenId> collapsed;
  for (GenId g : i.generators()) {
    collapsed.push_back(GenId{g.dim, index(g, x.basepoint)});
  }
  QuotientResult q = collapse(cyl, collapsed, "*");
  GenId base = q.projection(collapsed.front());
  return PointedComputad{std::move(q.quotient), base};
}

PointedComputad wedge(const PointedComputad& x, const PointedComputad& y) {
  Computad sum = disjoint_union(x.computad, y.computad);
  auto [left, right] = coproduct_injections(x.computad, y.computad);
  GenId bx = left(x.basepoint);
  GenId by = right(y.basepoint);
  const std::string& nx = x.computad.name(x.basepoint);
  std::optional<std::string> name;
  if (nx == y.computad.name(y.basepoint)) name = nx;
  QuotientResult q = collapse(sum, {bx, by}, name);
  GenId base = q.projection(bx);
  return PointedComputad{std::move(q.quotient), base};
}

PointedComputad wedge(const std::vector<PointedComputad>& factors) {
  if (factors.empty()) return pointed(point(), "*");
  PointedComputad out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = wedge(out, factors[i]);
  return out;
}

PointedComputad smash(const PointedComputad& x, const PointedComputad& y) {
  Computad product = tensor_product(x.computad, y.computad);
  PairIndex index = tensor_index(x.computad, y.computad);
  std::vector<GenId> collapsed;
  for (GenId s : x.computad.generators()) {
    collapsed.push_back(GenId{s.dim, index(s, y.basepoint)});
  }
  for (GenId t : y.computad.generators()) {
    if (t != y.basepoint) collapsed.push_back(GenId{t.dim, index(x.basepoint, t)});
  }
  GenId corner{0, index(x.basepoint, y.basepoint)};
  QuotientResult q = collapse(product, collapsed, "*");
  GenId base = q.projection(corner);
  return PointedComputad{std::move(q.quotient), base};
}

PointedComputad smash(const std::vector<PointedComputad>& factors) {
  if (factors.empty()) return two_points();
  PointedComputad out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = smash(out, factors[i]);
  return out;
}

PointedComputad suspension(const PointedComputad& x, int k) {
  if (k < 0) throw Error("invalid-argument", "negative suspension count");
  PointedComputad s1 = pointed(circle(), "*");
  PointedComputad out = x;
  for (int i = 0; i < k; ++i) out = smash(out, s1);
  return out;
}

PushoutResult pushout(const Computad& a, const PointedComputad& x,
                      const PointedComputad& y, const ComputadMap& f,
                      const ComputadMap& g) {
  if (auto defect = map_defect(a, x.computad, f)) {
    throw Error("invalid-map", "left leg: " + *defect);
  }
  if (auto defect = map_defect(a, y.computad, g)) {
    throw Error("invalid-map", "right leg: " + *defect);
  }
  Computad sum = disjoint_union(x.computad, y.computad);
  auto [inl, inr] = coproduct_injections(x.computad, y.computad);
  GeneratorRelation r(sum);
  r.relate(inl(x.basepoint), inr(y.basepoint));
  for (GenId s : a.generators()) r.relate(inl(f(s)), inr(g(s)));
  QuotientOptions options;
  options.joined_names = false;
  QuotientResult q = quotient_by_relation(sum, r, options);

  // Glued generators drop the "/1" suffix when that frees a clean name.
  std::unordered_map<std::string, std::string> names;
  std::set<std::string> used;
  for (GenId h : q.quotient.generators()) used.insert(q.quotient.name(h));
  for (GenId s : x.computad.generators()) {
    GenId image = q.projection(inl(s));
    const std::string& current = q.quotient.name(image);
    const std::string& wanted = x.computad.name(s);
    if (current != wanted && sum.name(inl(s)) == current && used.count(wanted) == 0) {
      names[current] = wanted;
      used.insert(wanted);
    }
  }
  PushoutResult out;
  out.left = compose(q.projection, inl);
  out.right = compose(q.projection, inr);
  GenId base = out.left(x.basepoint);
  out.computad = PointedComputad{rename(q.quotient, names), base};
  return out;
}

GeneratorRelation fibrewise_relation(const Computad& ixy, const Computad& x,
                                     const Computad& y) {
  Computad i = interval();
  PairIndex inner(i.counts(), x.counts());
  PairIndex outer(inner.counts(), y.counts());
  if (outer.counts() != ixy.counts()) {
    throw Error("invalid-argument", "computad is not a tensor I (x) X (x) Y");
  }
  auto triple = [&](GenId e, GenId s, GenId t) {
    GenId ix{e.dim + s.dim, inner(e, s)};
    return GenId{ix.dim + t.dim, outer(ix, t)};
  };
  GeneratorRelation r(ixy);
  const GenId zero{0, 0};
  const GenId one{0, 1};
  for (GenId t : y.generators()) {
    std::optional<GenId> first;
    for (GenId s : x.generators()) {
      GenId g = triple(zero, s, t);
      if (first) r.relate(*first, g);
      else first = g;
    }
  }
  for (GenId s : x.generators()) {
    std::optional<GenId> first;
    for (GenId t : y.generators()) {
      GenId g = triple(one, s, t);
      if (first) r.relate(*first, g);
      else first = g;
    }
  }
  return r;
}

QuotientResult fibrewise_quotient(const Computad& x, const Computad& y) {
  Computad ixy = tensor_product(tensor_product(interval(), x), y);
  return quotient_by_relation(ixy, fibrewise_relation(ixy, x, y));
}

GeneratorRelation congruent_shape_proposal(const Computad& x) {
  std::vector<GenId> gens = x.generators();
  std::map<GenId, int> cls;
  for (GenId g : gens) cls[g] = g.dim;
  std::size_t classes = static_cast<std::size_t>(x.dim() + 1);
  using Key = std::tuple<int, int, int, int>;
  for (;;) {
    std::map<std::pair<int, std::map<Key, Integer>>, int> ids;
    std::vector<std::pair<int, std::map<Key, Integer>>> sig;
    for (GenId g : gens) {
      std::map<Key, Integer> fp;
      if (g.dim > 0) {
        for (Sign side : {Sign::minus, Sign::plus}) {
          const SteinerCell& cell = x.border(g, side);
          for (int k = 0; k <= cell.dim(); ++k) {
            for (Sign s : {Sign::minus, Sign::plus}) {
              for (const auto& [i, c] : cell.levels()[k][s].terms()) {
                Key key{k, s == Sign::plus, side == Sign::plus, cls.at(GenId{k, i})};
                fp[key] += c;
              }
            }
          }
        }
      }
      sig.emplace_back(cls.at(g), std::move(fp));
      ids.emplace(sig.back(), 0);
    }
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (std::size_t i = 0; i < gens.size(); ++i) cls[gens[i]] = ids.at(sig[i]);
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  GeneratorRelation r(x);
  std::map<int, GenId> first;
  for (GenId g : gens) {
    auto [it, fresh] = first.emplace(cls.at(g), g);
    if (!fresh) r.relate(it->second, g);
  }
  return r;
}

GeneratorRelation relation_from_names(
    const Computad& x, const std::vector<std::vector<std::string>>& groups) {
  GeneratorRelation r(x);
  for (const auto& group : groups) {
    for (const auto& name : group) r.relate(x.at(group.front()), x.at(name));
  }
  return r;
}

}  // namespace dtop
