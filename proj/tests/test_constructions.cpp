#include <doctest.h>

#include "dtop/error.hpp"
#include "dtop/isomorphism.hpp"
#include "fixtures.hpp"

using namespace dtop;
using fixtures::named;

namespace {

using Named = std::map<std::string, long>;
using Counts = std::vector<std::size_t>;

PointedComputad at_point(Computad x, const char* base = "*") {
  return pointed(std::move(x), base);
}

bool iso(const Computad& x, const Computad& y) {
  auto w = find_isomorphism(x, y);
  return w && !isomorphism_defect(x, y, *w);
}

std::set<std::string> names_in(const Computad& x, int dim) {
  std::set<std::string> out;
  for (GenId g : x.generators()) {
    if (g.dim == dim) out.insert(x.name(g));
  }
  return out;
}

}  // namespace

TEST_CASE("globes") {
  CHECK(iso(globe(0), point()));
  CHECK(iso(globe(1), interval()));
  CHECK(globe(2).counts() == Counts{2, 2, 1});
  for (int n = 0; n <= 4; ++n) {
    Computad g = globe(n);
    CHECK(g.size() == static_cast<std::size_t>(2 * n + 1));
    if (n == 0) continue;
    SteinerCell top = g.atom(g.at("top"));
    for (int k = 0; k < n; ++k) {
      for (Sign s : {Sign::minus, Sign::plus}) {
        std::string name = std::to_string(k) + sign_char(s);
        CHECK(cell_border(top, k, s) == g.atom(g.at(name)));
      }
    }
  }
}

TEST_CASE("cubes and orientals follow the binomial formulas") {
  CHECK(cube(0) == point());
  CHECK(cube(2) == tensor_product(interval(), interval()));
  for (int n = 0; n <= 5; ++n) {
    Counts c = cube(n).counts();
    Counts o = oriental(n).counts();
    REQUIRE(c.size() == static_cast<std::size_t>(n + 1));
    REQUIRE(o.size() == static_cast<std::size_t>(n + 1));
    for (int k = 0; k <= n; ++k) {
      CHECK(c[k] == static_cast<std::size_t>(fixtures::binomial(n, k) << (n - k)));
      CHECK(o[k] == static_cast<std::size_t>(fixtures::binomial(n + 1, k + 1)));
    }
  }
  CHECK(oriental(4).counts() == Counts{5, 10, 10, 5, 1});
  CHECK(validate_computad(oriental(4)).ok());
}

TEST_CASE("cylinders") {
  CHECK(iso(cylinder(point()), interval()));
  Computad m = fixtures::monoid();
  Computad cm = cylinder(m);
  CHECK(cm.find("(a,mu)"));
  CHECK(cm.find("(a,eta)"));
  CHECK(cm.at("(a,mu)").dim == 3);
  for (const auto& x : {m, cube(2), globe(3)}) {
    Counts xc = x.counts();
    Counts cc = cylinder(x).counts();
    for (std::size_t k = 0; k < cc.size(); ++k) {
      std::size_t below = k > 0 ? xc[k - 1] : 0;
      std::size_t here = k < xc.size() ? xc[k] : 0;
      CHECK(cc[k] == 2 * here + below);
    }
  }
}

TEST_CASE("cones") {
  CHECK(iso(cone(point(), Sign::plus), interval()));
  Computad ci = cone(interval(), Sign::plus);
  CHECK(ci.counts() == Counts{3, 3, 1});
  CHECK(iso(ci, oriental(2)));
  CHECK(ci.find("1"));

  Computad ck = cone(fixtures::constants(), Sign::plus);
  CHECK(ck.counts() == Counts{2, 2, 2, 1});
  CHECK(validate_computad(op_reverse(ck, DimSet::of({1}))).ok());

  Computad past = cone(interval(), Sign::minus);
  CHECK(past.find("0"));
  CHECK(past.counts() == Counts{3, 3, 1});
}

TEST_CASE("the past cone is the total dual of the future cone of the dual") {
  DimSet all = DimSet::everything();
  for (const auto& x : {point(), interval(), fixtures::constants(), fixtures::monoid(), cube(2)}) {
    Computad lhs = cone(x, Sign::minus);
    Computad rhs = op_reverse(cone(op_reverse(x, all), Sign::plus), all);
    CHECK(iso(lhs, rhs));
  }
}

TEST_CASE("wedges") {
  PointedComputad i0 = at_point(interval(), "0");
  PointedComputad ii = wedge(i0, i0);
  CHECK(ii.computad.counts() == Counts{3, 2});
  CHECK(ii.computad.name(ii.basepoint) == "0");

  PointedComputad m = at_point(fixtures::monoid());
  CHECK(iso(wedge(m, at_point(point())).computad, m.computad));

  PointedComputad mm = wedge(m, at_point(fixtures::comonoid()));
  CHECK(mm.computad.counts() == Counts{1, 2, 4});
  CHECK(mm.computad.find("a/1"));
  CHECK(mm.computad.find("a/2"));
  CHECK(mm.computad.name(mm.basepoint) == "*");
  CHECK(validate_computad(mm.computad).ok());
}

TEST_CASE("smash products") {
  PointedComputad m = at_point(fixtures::monoid());
  PointedComputad mm = smash(m, m);
  CHECK(mm.computad.counts() == Counts{1, 0, 1, 4, 4});
  CHECK(names_in(mm.computad, 3) ==
        std::set<std::string>{"(mu,a)", "(eta,a)", "(a,mu)", "(a,eta)"});
  CHECK(validate_computad(mm.computad).ok());

  for (const auto& x : {m, at_point(interval(), "0"), at_point(cube(2), "(0,0)")}) {
    CHECK(iso(smash(x, two_points()).computad, x.computad));
    CHECK(iso(smash(two_points(), x).computad, x.computad));
  }
}

TEST_CASE("the reduced cylinder is a smash with the interval plus a point") {
  PointedComputad i1 = at_point(disjoint_union(interval(), point()));
  for (const auto& x : {at_point(fixtures::monoid()), at_point(interval(), "0"),
                        at_point(fixtures::constants())}) {
    PointedComputad r = reduced_cylinder(x);
    CHECK(validate_computad(r.computad).ok());
    CHECK(iso(r.computad, smash(i1, x).computad));
  }
  PointedComputad r = reduced_cylinder(at_point(interval(), "0"));
  CHECK(r.computad.counts() == Counts{3, 3, 1});
}

TEST_CASE("suspension") {
  PointedComputad loop = suspension(two_points());
  CHECK(loop.computad.counts() == Counts{1, 1});
  CHECK(iso(loop.computad, circle()));
  CHECK(fixtures::suspension_defect(two_points(), loop) == "");

  PointedComputad m = at_point(fixtures::monoid());
  PointedComputad sm = suspension(m);
  CHECK(sm.computad.at("(mu,a)").dim == 3);
  CHECK(named(sm.computad, sm.computad.complex().minus(sm.computad.at("(mu,a)"))) ==
        Named{{"(a,a)", 2}});
  CHECK(fixtures::suspension_defect(m, sm) == "");
  CHECK(suspension(m, 3).computad.counts() == Counts{1, 0, 0, 0, 1, 2});
  CHECK(suspension(m, 0).computad == m.computad);
  CHECK_THROWS_AS(suspension(m, -1), Error);

  for (const auto& x : {at_point(fixtures::comonoid()), at_point(cube(2), "(0,0)"),
                        at_point(oriental(3), "(0,0,0,*)")}) {
    CHECK(fixtures::suspension_defect(x, suspension(x)) == "");
  }
}

TEST_CASE("pushouts") {
  PointedComputad m = at_point(fixtures::monoid());
  PointedComputad k = at_point(fixtures::constants());

  // Over the point: the wedge.
  Computad pt = point();
  ComputadMap to_base{{{GenId{0, 0}}}};
  PushoutResult w = pushout(pt, m, k, to_base, to_base);
  CHECK(iso(w.computad.computad, wedge(m, k).computad));

  // Along identities: the same computad.
  ComputadMap id = identity_map(m.computad);
  PushoutResult same = pushout(m.computad, m, m, id, id);
  CHECK(iso(same.computad.computad, m.computad));
  CHECK_FALSE(map_defect(m.computad, same.computad.computad, same.left));

  // Gluing the constants into the monoid along a and eta.
  ComputadMap k_in_m{{{m.computad.at("*")}, {m.computad.at("a")}, {m.computad.at("eta")}}};
  PushoutResult glued = pushout(k.computad, m, k, k_in_m, identity_map(k.computad));
  CHECK(glued.computad.computad.counts() == Counts{1, 1, 2});
  CHECK_FALSE(map_defect(k.computad, glued.computad.computad, glued.right));

  ComputadMap bad{{{m.computad.at("*")}, {m.computad.at("a")}, {m.computad.at("mu")}}};
  try {
    pushout(k.computad, m, k, bad, identity_map(k.computad));
    FAIL("expected invalid-map");
  } catch (const Error& e) {
    CHECK(e.kind() == "invalid-map");
  }
}

TEST_CASE("pushout maps out correspond to compatible pairs") {
  // A = point, X = Y = I pointed at 0, both legs onto 0. Target T = I.
  Computad i = interval();
  PointedComputad i0 = at_point(i, "0");
  ComputadMap leg{{{i.at("0")}}};
  PushoutResult p = pushout(point(), i0, i0, leg, leg);
  const Computad& pc = p.computad.computad;
  REQUIRE(pc.counts() == Counts{3, 2});

  auto maps = [&](const Computad& src) {
    std::vector<ComputadMap> out;
    std::size_t n = src.count(0);
    for (std::size_t bits = 0; bits < (1u << n); ++bits) {
      ComputadMap f;
      f.image.resize(src.counts().size());
      for (std::size_t j = 0; j < n; ++j) f.image[0].push_back(GenId{0, (bits >> j) & 1});
      for (std::size_t j = 0; j < src.count(1); ++j) f.image[1].push_back(i.at("a"));
      if (!map_defect(src, i, f)) out.push_back(f);
    }
    return out;
  };
  std::size_t out_of_pushout = maps(pc).size();
  std::size_t pairs = 0;
  for (const auto& u : maps(i)) {
    for (const auto& v : maps(i)) pairs += compose(u, leg) == compose(v, leg);
  }
  CHECK(out_of_pushout == pairs);
  for (const auto& h : maps(pc)) {
    CHECK_FALSE(map_defect(i, i, compose(h, p.left)));
    CHECK_FALSE(map_defect(i, i, compose(h, p.right)));
  }
}

TEST_CASE("fibrewise quotients") {
  Computad i = interval();
  QuotientResult f = fibrewise_quotient(i, i);
  CHECK(f.quotient.counts() == Counts{4, 6, 4, 1});
  CHECK(validate_computad(f.quotient).ok());

  QuotientResult c = fibrewise_quotient(fixtures::comonoid(), fixtures::monoid());
  CHECK(c.quotient.counts() == Counts{2, 3, 6, 5, 4, 4});
  CHECK(validate_computad(c.quotient).ok());
  CHECK_THROWS_AS(fibrewise_relation(cube(2), i, i), Error);
}

TEST_CASE("the shape proposal") {
  Computad c3 = cube(3);
  GeneratorRelation r = congruent_shape_proposal(c3);
  CHECK(r.classes().size() == 4);
  QuotientResult q = quotient_by_relation(c3, r);
  CHECK(q.quotient.counts() == Counts{1, 1, 1, 1});

  CHECK(congruent_shape_proposal(fixtures::monoid()).is_identity());

  GeneratorRelation named_groups =
      relation_from_names(cube(2), {{"(0,a)", "(1,a)"}, {"(a,0)", "(a,1)"}});
  CHECK(named_groups.classes().size() == 7);
  CHECK_THROWS_AS(relation_from_names(cube(2), {{"nothing"}}), Error);
}
