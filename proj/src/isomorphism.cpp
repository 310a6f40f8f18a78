#include "dtop/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace dtop {

namespace {

// One labelled incidence: generator `other` occurs with coefficient class
// `coeff` in component (level, sign) of border `side` of the source node.
struct Edge {
  int label;
  std::size_t other;
  int coeff;
};

// Both computads as one graph: nodes [0, n) are x, [n, 2n) are y.
struct Graph {
  std::size_t n = 0;
  std::vector<int> dim;
  std::vector<std::vector<Edge>> out;
  std::vector<std::vector<Edge>> in;
  std::vector<GenId> id;
};

class Search {
 public:
  Search(const Computad& x, const Computad& y) : x_(x), y_(y) {
    std::map<Integer, int> coeff_ids;
    std::vector<GenId> xs = x.generators();
    std::vector<GenId> ys = y.generators();
    g_.n = xs.size();
    for (const auto* gens : {&xs, &ys}) {
      for (GenId g : *gens) {
        g_.id.push_back(g);
        g_.dim.push_back(g.dim);
      }
    }
    g_.out.resize(2 * g_.n);
    g_.in.resize(2 * g_.n);
    std::map<GenId, std::size_t> x_node;
    std::map<GenId, std::size_t> y_node;
    for (std::size_t i = 0; i < g_.n; ++i) {
      x_node[xs[i]] = i;
      y_node[ys[i]] = g_.n + i;
    }
    auto wire = [&](const Computad& c, const std::map<GenId, std::size_t>& nodes) {
      for (const auto& [g, node] : nodes) {
        if (g.dim == 0) continue;
        for (Sign side : {Sign::minus, Sign::plus}) {
          const SteinerCell& cell = c.border(g, side);
          for (int k = 0; k <= cell.dim(); ++k) {
            for (Sign s : {Sign::minus, Sign::plus}) {
              int label = (k * 2 + (s == Sign::plus)) * 2 + (side == Sign::plus);
              for (const auto& [i, coeff] : cell.levels()[k][s].terms()) {
                auto [it, fresh] =
                    coeff_ids.emplace(coeff, static_cast<int>(coeff_ids.size()));
                std::size_t other = nodes.at(GenId{k, i});
                g_.out[node].push_back(Edge{label, other, it->second});
                g_.in[other].push_back(Edge{label, node, it->second});
              }
            }
          }
        }
      }
    };
    wire(x, x_node);
    wire(y, y_node);
  }

  std::optional<ComputadMap> run() {
    std::vector<int> colour(g_.dim.begin(), g_.dim.end());
    return descend(refine(std::move(colour)));
  }

 private:
  // Iterated colour refinement, computed jointly so colours are comparable.
  std::vector<int> refine(std::vector<int> colour) const {
    std::size_t classes = std::set<int>(colour.begin(), colour.end()).size();
    for (;;) {
      using Sig = std::tuple<int, std::vector<std::tuple<int, int, int>>,
                             std::vector<std::tuple<int, int, int>>>;
      std::vector<Sig> sig(colour.size());
      for (std::size_t v = 0; v < colour.size(); ++v) {
        std::vector<std::tuple<int, int, int>> out;
        std::vector<std::tuple<int, int, int>> in;
        for (const Edge& e : g_.out[v]) out.emplace_back(e.label, colour[e.other], e.coeff);
        for (const Edge& e : g_.in[v]) in.emplace_back(e.label, colour[e.other], e.coeff);
        std::sort(out.begin(), out.end());
        std::sort(in.begin(), in.end());
        sig[v] = Sig{colour[v], std::move(out), std::move(in)};
      }
      std::map<Sig, int> ids;
      for (const Sig& s : sig) ids.emplace(s, 0);
      int next = 0;
      for (auto& [s, id] : ids) id = next++;
      for (std::size_t v = 0; v < colour.size(); ++v) colour[v] = ids.at(sig[v]);
      if (ids.size() == classes) return colour;
      classes = ids.size();
    }
  }

  std::optional<ComputadMap> descend(const std::vector<int>& colour) {
    std::map<int, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> cells;
    for (std::size_t v = 0; v < colour.size(); ++v) {
      auto& cell = cells[colour[v]];
      (v < g_.n ? cell.first : cell.second).push_back(v);
    }
    const std::pair<std::vector<std::size_t>, std::vector<std::size_t>>* branch = nullptr;
    for (const auto& [c, cell] : cells) {
      if (cell.first.size() != cell.second.size()) return std::nullopt;
      if (cell.first.size() > 1 &&
          (branch == nullptr || std::make_pair(g_.dim[cell.first[0]], cell.first.size()) <
                                    std::make_pair(g_.dim[branch->first[0]],
                                                   branch->first.size()))) {
        branch = &cell;
      }
    }
    if (branch == nullptr) {
      ComputadMap f;
      f.image.resize(static_cast<std::size_t>(x_.dim() + 1));
      for (GenId g : x_.generators()) f.image[g.dim].push_back(GenId{});
      for (const auto& [c, cell] : cells) {
        GenId from = g_.id[cell.first[0]];
        f.image[from.dim][from.index] = g_.id[cell.second[0]];
      }
      if (isomorphism_defect(x_, y_, f)) return std::nullopt;
      return f;
    }
    int fresh = static_cast<int>(colour.size()) + 1;
    std::size_t v = branch->first[0];
    std::vector<std::size_t> candidates = branch->second;
    for (std::size_t w : candidates) {
      std::vector<int> next = colour;
      next[v] = fresh;
      next[w] = fresh;
      if (auto found = descend(refine(std::move(next)))) return found;
    }
    return std::nullopt;
  }

  const Computad& x_;
  const Computad& y_;
  Graph g_;
};

}  // namespace

std::optional<ComputadMap> find_isomorphism(const Computad& x, const Computad& y) {
  if (x.counts() != y.counts()) return std::nullopt;
  return Search(x, y).run();
}

std::optional<std::string> isomorphism_defect(const Computad& x, const Computad& y,
                                              const ComputadMap& f) {
  if (x.counts() != y.counts()) return std::string("generator counts differ");
  if (!f.is_dimension_preserving()) return std::string("map changes dimensions");
  if (!f.is_injective()) return std::string("map is not injective");
  for (GenId g : x.generators()) {
    if (static_cast<std::size_t>(g.dim) >= f.image.size() ||
        g.index >= f.image[g.dim].size()) {
      return "generator '" + x.name(g) + "' has no image";
    }
    if (!y.contains(f(g))) return "generator '" + x.name(g) + "' has an invalid image";
  }
  for (GenId g : x.generators()) {
    if (g.dim == 0) continue;
    for (Sign s : {Sign::minus, Sign::plus}) {
      if (transport(f, x.border(g, s)) != y.border(f(g), s)) {
        return std::string(s == Sign::minus ? "input" : "output") + " border of '" +
               x.name(g) + "' is not carried onto that of '" + y.name(f(g)) + "'";
      }
    }
  }
  return std::nullopt;
}

}  // namespace dtop
