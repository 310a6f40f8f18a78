#include <doctest.h>

#include "dtop/error.hpp"
#include "dtop/isomorphism.hpp"
#include "dtop/tensor.hpp"
#include "fixtures.hpp"

using namespace dtop;
using fixtures::named;

namespace {

using Named = std::map<std::string, long>;
using Counts = std::vector<std::size_t>;

// Counts of a tensor product computed independently as a convolution.
Counts convolution(const Counts& a, const Counts& b) {
  if (a.empty() || b.empty()) return {};
  Counts out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// The map sending each generator of x to the generator of y with its name.
ComputadMap by_name(const Computad& x, const Computad& y) {
  ComputadMap f;
  f.image.resize(x.counts().size());
  for (GenId g : x.generators()) f.image[g.dim].push_back(y.at(x.name(g)));
  return f;
}

}  // namespace

TEST_CASE("tensor counts") {
  Computad i = interval();
  CHECK(tensor_product(i, i).counts() == Counts{4, 4, 1});
  CHECK(tensor_product(tensor_product(i, i), i).counts() == Counts{8, 12, 6, 1});

  Computad m = fixtures::monoid();
  CHECK(tensor_product(m, m).counts() == Counts{1, 2, 5, 4, 4});
  std::vector<Computad> xs = {i, m, globe(3), oriental(3), circle(), fixtures::constants()};
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      Computad xy = tensor_product(x, y);
      CHECK(xy.counts() == convolution(x.counts(), y.counts()));
      CHECK(validate_computad(xy).ok());
    }
  }
  CHECK(tensor_product(i, Computad{}).empty());
}

TEST_CASE("pair names flatten nesting") {
  Computad i = interval();
  Computad lhs = tensor_product(tensor_product(i, i), i);
  CHECK(lhs.find("(0,a,1)"));
  CHECK(pair_name("(0,a)", "1") == "(0,a,1)");
  CHECK(pair_name("0", "(a,1)") == "(0,a,1)");
  CHECK(pair_name("mu", "*") == "(mu,*)");
}

TEST_CASE("the sign flips on odd levels") {
  Computad i = interval();
  Computad sq = tensor_product(i, i);
  SteinerCell aa = sq.atom(sq.at("(a,a)"));
  // Level 1, plus: 0-level of a with the plus side of a, then the 1-level of
  // a with the minus side of a.
  CHECK(named(sq, aa.component(1, Sign::plus)) == Named{{"(1,a)", 1}, {"(a,0)", 1}});
  CHECK(named(sq, aa.component(1, Sign::minus)) == Named{{"(0,a)", 1}, {"(a,1)", 1}});
}

TEST_CASE("explicit borders of low-dimensional pairs") {
  Computad i = interval();
  Computad sq = tensor_product(i, i);
  SteinerCell b = explicit_tensor_border(i, i, i.at("a"), i.at("a"), 1, Sign::minus);
  CHECK(named(sq, b.component(1, Sign::minus)) == Named{{"(0,a)", 1}, {"(a,1)", 1}});
  CHECK(b == cell_border(sq.atom(sq.at("(a,a)")), 1, Sign::minus));

  Computad m = fixtures::monoid();
  Computad mm = tensor_product(m, m);
  for (GenId s : m.generators()) {
    for (GenId t : m.generators()) {
      SteinerCell src = explicit_tensor_border(m, m, s, t, 0, Sign::minus);
      CHECK(src.dim() == 0);
      CHECK(named(mm, src.component(0, Sign::minus)) == Named{{"(*,*)", 1}});
    }
  }
  Computad sq2 = tensor_product(i, i);
  for (GenId s : i.generators()) {
    for (GenId t : i.generators()) {
      SteinerCell src = explicit_tensor_border(i, i, s, t, 0, Sign::minus);
      std::string s0 = s.dim == 0 ? i.name(s) : "0";
      std::string t0 = t.dim == 0 ? i.name(t) : "0";
      CHECK(named(sq2, src.component(0, Sign::minus)) == Named{{pair_name(s0, t0), 1}});
    }
  }

  SteinerCell mua = explicit_tensor_border(m, m, m.at("mu"), m.at("a"), 2, Sign::minus);
  CHECK(named(mm, mua.component(2, Sign::minus)) == Named{{"(a,a)", 2}, {"(mu,*)", 1}});

  CHECK_THROWS_AS(explicit_tensor_border(m, m, m.at("mu"), m.at("mu"), 4, Sign::minus), Error);
}

TEST_CASE("explicit borders agree with the tensor of atoms") {
  Computad i = interval();
  Computad m = fixtures::monoid();
  Computad g2 = globe(2);
  for (auto [x, y] : {std::pair{i, i}, std::pair{m, fixtures::comonoid()}, std::pair{g2, g2}}) {
    TensorBorderReport r = check_tensor_borders(x, y);
    CHECK(r.checked > 0);
    CHECK(r.ok());
    if (!r.ok()) MESSAGE(r.mismatches.front().pair);
  }
}

TEST_CASE("associativity with flattened names") {
  std::vector<Computad> xs = {interval(), fixtures::monoid(), fixtures::constants(), circle()};
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      for (const auto& z : xs) {
        Computad lhs = tensor_product(tensor_product(x, y), z);
        Computad rhs = tensor_product(x, tensor_product(y, z));
        if (lhs.size() > 30) continue;
        CHECK_FALSE(isomorphism_defect(lhs, rhs, by_name(lhs, rhs)));
        CHECK(find_isomorphism(lhs, rhs));
      }
    }
  }
}

TEST_CASE("the point is a unit") {
  for (const auto& x : {interval(), fixtures::monoid(), cube(2), oriental(3)}) {
    Computad right = tensor_product(x, point());
    Computad left = tensor_product(point(), x);
    auto w = find_isomorphism(x, right);
    REQUIRE(w);
    CHECK_FALSE(isomorphism_defect(x, right, *w));
    CHECK(find_isomorphism(x, left));
  }
}

TEST_CASE("total reversal commutes with the tensor") {
  DimSet all = DimSet::everything();
  std::vector<Computad> xs = {interval(), cube(2), fixtures::constants(), fixtures::monoid()};
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      Computad lhs = op_reverse(tensor_product(x, y), all);
      Computad rhs = tensor_product(op_reverse(x, all), op_reverse(y, all));
      auto w = find_isomorphism(lhs, rhs);
      REQUIRE(w);
      CHECK_FALSE(isomorphism_defect(lhs, rhs, *w));
      CHECK_FALSE(isomorphism_defect(lhs, rhs, by_name(lhs, rhs)));
    }
  }
}
