#pragma once

#include <functional>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dtop/computad.hpp"
#include "dtop/constructions.hpp"
#include "dtop/tensor.hpp"

namespace fixtures {

using namespace dtop;

// {*, a: * -> *, eta: id => a}
inline Computad constants() {
  Computad x;
  GenId s = x.add_point("*");
  GenId a = x.add_generator("a", 1, SteinerCell::point(s.index), SteinerCell::point(s.index));
  x.add_generator("eta", 2, SteinerCell::point(s.index), x.atom(a));
  return x;
}

// Minimal monoid presentation {*, a, eta, mu: a a => a}, written out by hand.
inline Computad monoid() {
  Computad x = constants();
  GenId a = x.at("a");
  x.add_generator("mu", 2, cell_compose(x.atom(a), x.atom(a), 0), x.atom(a));
  return x;
}

inline Computad comonoid() { return op_reverse(monoid(), DimSet::everything()); }

// One object, one loop a and two 2-cells a => a. Many composable pairs.
inline Computad loops() {
  Computad x;
  GenId s = x.add_point("*");
  GenId a = x.add_generator("a", 1, SteinerCell::point(s.index), SteinerCell::point(s.index));
  x.add_generator("alpha", 2, x.atom(a), x.atom(a));
  x.add_generator("beta", 2, x.atom(a), x.atom(a));
  return x;
}

/// Chain from (name, coefficient) pairs; all names must share a dimension.
inline Chain chain(const Computad& x, std::vector<std::pair<std::string, int>> terms) {
  if (terms.empty()) return Chain{};
  GenId first = x.at(terms.front().first);
  Chain c(first.dim);
  for (const auto& [name, k] : terms) {
    GenId g = x.at(name);
    c.add(g.index, k);
  }
  return c;
}

/// Named rendering of a chain as a map, independent of index order.
inline std::map<std::string, long> named(const Computad& x, const Chain& c) {
  std::map<std::string, long> out;
  for (const auto& [i, k] : c.terms()) out[x.name(GenId{c.dim(), i})] = static_cast<long>(k);
  return out;
}

inline long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace fixtures

namespace fixtures {

/// First failure of the suspension laws for s = x smash circle, or "".
/// Each generator g other than the basepoint must reappear as (g,a), one
/// dimension up, with level q + 1 of its atom equal to level q of g's atom
/// under g -> (g,a) and the basepoint dropped.
inline std::string suspension_defect(const PointedComputad& x, const PointedComputad& s) {
  const Computad& xc = x.computad;
  const Computad& sc = s.computad;
  if (sc.count(0) != 1) return "more than one 0-cell";
  std::size_t expected = 0;
  for (GenId g : xc.generators()) {
    if (g == x.basepoint) continue;
    ++expected;
    auto lifted = sc.find(pair_name(xc.name(g), "a"));
    if (!lifted || lifted->dim != g.dim + 1) return "no lift of '" + xc.name(g) + "'";
    SteinerCell up = sc.atom(*lifted);
    SteinerCell down = xc.atom(g);
    for (int q = 0; q <= g.dim; ++q) {
      for (Sign a : {Sign::minus, Sign::plus}) {
        std::map<std::string, long> want;
        for (const auto& [n, k] : named(xc, down.component(q, a))) {
          if (q == 0 && n == xc.name(x.basepoint)) continue;
          want[pair_name(n, "a")] = k;
        }
        if (named(sc, up.component(q + 1, a)) != want) {
          return "border of '" + sc.name(*lifted) + "' at level " + std::to_string(q + 1);
        }
      }
    }
  }
  if (sc.size() != expected + 1) return "unexpected generators";
  return "";
}

}  // namespace fixtures
