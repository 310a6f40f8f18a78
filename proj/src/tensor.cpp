#include "dtop/tensor.hpp"

#include "dtop/error.hpp"

namespace dtop {

namespace {

// "(a,b)" -> "a,b" when the outer parentheses enclose the whole name.
std::string unwrap(const std::string& name) {
  if (name.size() < 2 || name.front() != '(' || name.back() != ')') return name;
  int depth = 0;
  for (std::size_t i = 0; i + 1 < name.size(); ++i) {
    if (name[i] == '(') ++depth;
    if (name[i] == ')') --depth;
    if (depth == 0) return name;
  }
  return name.substr(1, name.size() - 2);
}

struct Factor {
  int i;
  Sign a;
};

class Explicit {
 public:
  Explicit(const Computad& x, const Computad& y, GenId s, GenId t)
      : index_(tensor_index(x, y)), s_(x.atom(s)), t_(y.atom(t)) {}

  // d^a_i(s) (x) d^b_j(t)
  SteinerCell tensor(Factor l, Factor r) const {
    return cell_tensor(cell_border(s_, l.i, l.a), cell_border(t_, r.i, r.a), index_);
  }

  SteinerCell border(int m, Sign alpha) const {
    const Sign M = Sign::minus;
    const Sign P = Sign::plus;
    auto T = [&](int i, Sign a, int j, Sign b) { return tensor({i, a}, {j, b}); };
    switch (m * 2 + (alpha == P)) {
      case 0:
        return T(0, M, 0, M);
      case 1:
        return T(0, P, 0, P);
      case 2:
        return c(T(0, M, 1, M), T(1, M, 0, P), 1, "d-1");
      case 3:
        return c(T(1, P, 0, M), T(0, P, 1, P), 1, "d+1");
      case 4:
        return c(c(c(T(0, M, 2, M), T(1, M, 0, P), 1, "d-2 first factor"),
                   T(1, M, 1, P), 2, "d-2 first *2"),
                 c(T(2, M, 0, M), T(0, P, 1, P), 1, "d-2 last factor"), 2,
                 "d-2 second *2");
      case 5:
        return c(c(c(T(0, M, 1, M), T(2, P, 0, P), 1, "d+2 first factor"),
                   T(1, P, 1, M), 2, "d+2 first *2"),
                 c(T(1, P, 0, M), T(0, P, 2, P), 1, "d+2 last factor"), 2,
                 "d+2 second *2");
      case 6: {
        SteinerCell p1 =
            c(c(c(T(0, M, 3, M), T(1, M, 0, P), 1, "d-3 clause 1, first factor"),
                T(1, M, 1, P), 2, "d-3 clause 1, first *2"),
              c(T(2, M, 0, M), T(0, P, 1, P), 1, "d-3 clause 1, last factor"), 2,
              "d-3 clause 1, second *2");
        SteinerCell p2 =
            c(T(1, M, 2, P), c(T(2, M, 0, M), T(0, P, 1, P), 1, "d-3 clause 2, factor"),
              2, "d-3 clause 2, *2");
        SteinerCell p3 =
            c(T(2, M, 1, M), c(T(1, P, 0, M), T(0, P, 2, P), 1, "d-3 clause 3, factor"),
              2, "d-3 clause 3, *2");
        SteinerCell p4 =
            c(c(c(T(0, M, 1, M), T(3, M, 0, P), 1, "d-3 clause 4, first factor"),
                T(1, P, 1, M), 2, "d-3 clause 4, first *2"),
              c(T(1, P, 0, M), T(0, P, 2, P), 1, "d-3 clause 4, last factor"), 2,
              "d-3 clause 4, second *2");
        return c(c(c(p1, p2, 3, "d-3 clauses 1 *3 2"), p3, 3, "d-3 clauses 2 *3 3"), p4,
                 3, "d-3 clauses 3 *3 4");
      }
      case 7: {
        SteinerCell q1 =
            c(c(c(T(0, M, 2, M), T(1, M, 0, P), 1, "d+3 clause 1, first factor"),
                T(1, M, 1, P), 2, "d+3 clause 1, first *2"),
              c(T(3, P, 0, M), T(0, P, 1, P), 1, "d+3 clause 1, last factor"), 2,
              "d+3 clause 1, second *2");
        SteinerCell q2 =
            c(c(T(0, M, 2, M), T(1, M, 0, P), 1, "d+3 clause 2, factor"), T(2, P, 1, P),
              2, "d+3 clause 2, *2");
        SteinerCell q3 =
            c(c(T(0, M, 1, M), T(2, P, 0, P), 1, "d+3 clause 3, factor"), T(1, P, 2, M),
              2, "d+3 clause 3, *2");
        SteinerCell q4 =
            c(c(c(T(0, M, 1, M), T(2, P, 0, P), 1, "d+3 clause 4, first factor"),
                T(1, P, 1, M), 2, "d+3 clause 4, first *2"),
              c(T(1, P, 0, M), T(0, P, 3, P), 1, "d+3 clause 4, last factor"), 2,
              "d+3 clause 4, second *2");
        return c(c(c(q1, q2, 3, "d+3 clauses 1 *3 2"), q3, 3, "d+3 clauses 2 *3 3"), q4,
                 3, "d+3 clauses 3 *3 4");
      }
      default:
        throw Error("invalid-argument",
                    "explicit borders are only available up to dimension 3");
    }
  }

 private:
  // a *k b, composing along the (k-1)-border.
  static SteinerCell c(const SteinerCell& a, const SteinerCell& b, int k,
                       const char* clause) {
    try {
      return cell_compose(a, b, k - 1);
    } catch (const Error& e) {
      throw Error("composition-undefined", std::string("clause '") + clause + "': " +
                                               e.what());
    }
  }

  PairIndex index_;
  SteinerCell s_;
  SteinerCell t_;
};

}  // namespace

std::string pair_name(const std::string& left, const std::string& right) {
  return "(" + unwrap(left) + "," + unwrap(right) + ")";
}

PairIndex tensor_index(const Computad& x, const Computad& y) {
  return PairIndex(x.counts(), y.counts());
}

Computad tensor_product(const Computad& x, const Computad& y) {
  Computad out;
  if (x.empty() || y.empty()) return out;
  PairIndex index = tensor_index(x, y);
  const int top = x.dim() + y.dim();
  for (int n = 0; n <= top; ++n) {
    for (int k = std::max(0, n - y.dim()); k <= std::min(n, x.dim()); ++k) {
      for (std::size_t i = 0; i < x.count(k); ++i) {
        GenId s{k, i};
        SteinerCell atom_s = x.atom(s);
        for (std::size_t j = 0; j < y.count(n - k); ++j) {
          GenId t{n - k, j};
          std::string name = pair_name(x.name(s), y.name(t));
          if (n == 0) {
            out.add_point(std::move(name));
            continue;
          }
          SteinerCell cell = cell_tensor(atom_s, y.atom(t), index);
          out.add_generator(std::move(name), n, cell_border(cell, n - 1, Sign::minus),
                            cell_border(cell, n - 1, Sign::plus));
        }
      }
    }
  }
  return out;
}

SteinerCell explicit_tensor_border(const Computad& x, const Computad& y, GenId s,
                                   GenId t, int m, Sign alpha) {
  if (m < 0 || m > 3) {
    throw Error("invalid-argument",
                "explicit borders are only available up to dimension 3");
  }
  return Explicit(x, y, s, t).border(m, alpha);
}

TensorBorderReport check_tensor_borders(const Computad& x, const Computad& y,
                                        int max_total_dim) {
  TensorBorderReport report;
  if (x.empty() || y.empty()) return report;
  Computad product = tensor_product(x, y);
  PairIndex index = tensor_index(x, y);
  for (GenId s : x.generators()) {
    for (GenId t : y.generators()) {
      if (s.dim + t.dim > max_total_dim) continue;
      std::string pair = pair_name(x.name(s), y.name(t));
      Explicit oracle(x, y, s, t);
      SteinerCell whole = cell_tensor(x.atom(s), y.atom(t), index);
      for (int m = 0; m <= 3; ++m) {
        for (Sign a : {Sign::minus, Sign::plus}) {
          ++report.checked;
          SteinerCell got = cell_border(whole, m, a);
          SteinerCell expected;
          try {
            expected = oracle.border(m, a);
          } catch (const Error& e) {
            report.mismatches.push_back({pair, m, a, -1, e.what(), "-"});
            continue;
          }
          if (expected == got) continue;
          int top = std::max(expected.dim(), got.dim());
          for (int k = 0; k <= top; ++k) {
            bool found = false;
            for (Sign s2 : {Sign::minus, Sign::plus}) {
              Chain e = expected.component(k, s2);
              Chain g = got.component(k, s2);
              if (e != g) {
                report.mismatches.push_back({pair, m, a, k,
                                             sign_char(s2) + format_chain(product, e),
                                             sign_char(s2) + format_chain(product, g)});
                found = true;
                break;
              }
            }
            if (found) break;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace dtop
