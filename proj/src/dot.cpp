#include "dtop/dot.hpp"

namespace dtop {

namespace {

std::string node_id(GenId g) {
  return "g" + std::to_string(g.dim) + "_" + std::to_string(g.index);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const Computad& x, int max_dim) {
  int top = max_dim < 0 ? x.dim() : std::min(max_dim, x.dim());
  std::string out = "digraph computad {\n  rankdir=BT;\n";
  for (int d = 0; d <= top; ++d) {
    for (std::size_t i = 0; i < x.count(d); ++i) {
      GenId g{d, i};
      out += "  " + node_id(g) + " [label=\"" + escape(x.name(g)) + "\", dim=" +
             std::to_string(d) + "];\n";
    }
  }
  for (int d = 1; d <= top; ++d) {
    for (std::size_t i = 0; i < x.count(d); ++i) {
      GenId g{d, i};
      for (Sign s : {Sign::minus, Sign::plus}) {
        for (const auto& [j, c] : x.complex().border(g, s).terms()) {
          out += "  " + node_id(GenId{d - 1, j}) + " -> " + node_id(g) + " [label=\"" +
                 sign_char(s) + c.str() + "\"];\n";
        }
      }
    }
  }
  return out + "}\n";
}

}  // namespace dtop
