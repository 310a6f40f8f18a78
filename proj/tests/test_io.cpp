#include <doctest.h>

#include <filesystem>

#include "dtop/catalog.hpp"
#include "dtop/document.hpp"
#include "dtop/dot.hpp"
#include "dtop/error.hpp"
#include "dtop/text_files.hpp"
#include "fixtures.hpp"

using namespace dtop;
using nlohmann::json;

namespace {

using Counts = std::vector<std::size_t>;

// Kind and message of the error thrown by f, or empty strings.
std::pair<std::string, std::string> failure(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return {e.kind(), e.what()};
  }
  return {};
}

bool mentions(const std::string& text, const std::string& part) {
  return text.find(part) != std::string::npos;
}

std::size_t count_lines(const std::string& text, const std::string& with,
                        const std::string& without = "") {
  std::size_t n = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (mentions(line, with) && (without.empty() || !mentions(line, without))) ++n;
  }
  return n;
}

json interval_json() { return serialize(ComputadDocument{interval(), {}, {}}); }

}  // namespace

TEST_CASE("documents round trip") {
  ComputadDocument i{interval(), {}, {}};
  CHECK(deserialize(serialize(i)) == i);
  CHECK(parse_document(dump_document(i)) == i);

  CatalogEntry b = build("bialgebra");
  ComputadDocument bd{b.computad, b.basepoint, b.recipe};
  CHECK(deserialize(serialize(bd)) == bd);
  CHECK(dump_document(parse_document(dump_document(bd))) == dump_document(bd));

  for (const auto& name : catalog_names()) {
    CAPTURE(name);
    CatalogEntry e = build(name);
    ComputadDocument doc{e.computad, e.basepoint, e.recipe};
    std::string text = dump_document(doc);
    CHECK(parse_document(text) == doc);
    CHECK(dump_document(ComputadDocument{build(name).computad, e.basepoint, e.recipe}) == text);
  }
}

TEST_CASE("the document layout") {
  json j = interval_json();
  CHECK(j["format_version"] == 1);
  CHECK(j["generators"][0][0]["name"] == "0");
  CHECK(j["generators"][1][0]["minus"][0]["minus"] == json{{"0", 1}});
  CHECK(j["generators"][1][0]["plus"][0]["plus"] == json{{"1", 1}});
  CHECK_FALSE(j.contains("basepoint"));

  ComputadDocument empty{};
  CHECK(deserialize(serialize(empty)) == empty);
}

TEST_CASE("files round trip") {
  auto path = std::filesystem::temp_directory_path() / "dtop_io_test.json";
  CatalogEntry m = build("monoid");
  ComputadDocument doc{m.computad, pointed(m.computad, "*").basepoint, m.recipe};
  write_document(path.string(), doc);
  CHECK(read_document(path.string()) == doc);
  std::filesystem::remove(path);
  auto [kind, message] = failure([&] { read_document(path.string()); });
  CHECK(kind == "io-error");
  CHECK(mentions(message, path.string()));
}

TEST_CASE("a document with a non-globular cell is rejected with its level") {
  // A 2-cell from the left side of the square to its bottom side: the
  // 0-level targets disagree and the boundary of its boundary is not zero.
  Computad sq = cube(2);
  Computad side = sq;
  side.add_generator_unchecked("broken", 2, sq.atom(sq.at("(0,a)")), sq.atom(sq.at("(a,0)")));
  json broken = serialize(ComputadDocument{side, {}, {}});
  auto [kind, message] = failure([&] { deserialize(broken); });
  CHECK(kind == "validation-failed");
  CHECK(mentions(message, "generator 'broken'"));
  CHECK(mentions(message, "level 0"));
  CHECK(mentions(message, "globularity"));
}

TEST_CASE("schema violations name the offending path") {
  auto expect = [](json j, const std::string& path) {
    auto [kind, message] = failure([&] { deserialize(j); });
    CHECK(kind == "schema-violation");
    CHECK_MESSAGE(mentions(message, path), message);
  };
  json j = interval_json();

  json no_version = j;
  no_version.erase("format_version");
  expect(no_version, "/format_version");

  json future = j;
  future["format_version"] = 2;
  expect(future, "/format_version");

  json extra = j;
  extra["colour"] = "blue";
  expect(extra, "/colour");

  json unknown = j;
  unknown["generators"][1][0]["minus"][0]["minus"] = {{"nowhere", 1}};
  expect(unknown, "/generators/1/0/minus/0/minus/nowhere");

  json zero = j;
  zero["generators"][1][0]["minus"][0]["minus"] = {{"0", 0}};
  expect(zero, "/generators/1/0/minus/0/minus/0");

  json duplicate = j;
  duplicate["generators"][0][1]["name"] = "0";
  expect(duplicate, "/generators/0/1/name");

  json wrong_dim = j;
  wrong_dim["generators"][1][0]["minus"][0]["minus"] = {{"a", 1}};
  expect(wrong_dim, "/generators/1/0/minus/0/minus/a");

  json text_coeff = j;
  text_coeff["generators"][1][0]["minus"][0]["minus"] = {{"0", "one"}};
  expect(text_coeff, "/generators/1/0/minus/0/minus/0");

  json base = j;
  base["basepoint"] = "a";
  expect(base, "/basepoint");

  json recipe = j;
  recipe["provenance"] = {{"args", json::array()}};
  expect(recipe, "/provenance");

  auto [kind, message] = failure([] { parse_document("{ not json"); });
  CHECK(kind == "schema-violation");
}

TEST_CASE("coefficients beyond 64 bits survive a round trip") {
  // A loop with a 2-cell from a huge multiple of a to itself.
  Integer huge = 1;
  for (int i = 0; i < 70; ++i) huge *= 2;
  Computad x;
  GenId s = x.add_point("*");
  GenId a = x.add_generator("a", 1, SteinerCell::point(s.index), SteinerCell::point(s.index));
  Level l0{Chain::single(0, s.index), Chain::single(0, s.index)};
  Level l1{Chain::single(1, a.index, huge), Chain::single(1, a.index, huge)};
  SteinerCell many = SteinerCell::from_levels({l0, l1});
  x.add_generator_unchecked("big", 2, many, many);
  REQUIRE(validate_computad(x).ok());
  ComputadDocument doc{x, {}, {}};
  json j = serialize(doc);
  CHECK(j["generators"][2][0]["minus"][1]["minus"]["a"] == huge.str());
  CHECK(deserialize(j) == doc);
}

TEST_CASE("dot export") {
  std::string i = export_dot(interval());
  CHECK(count_lines(i, "[label=", "->") == 3);
  CHECK(count_lines(i, "->") == 2);
  CHECK(mentions(i, "g0_0 -> g1_0 [label=\"-1\"]"));
  CHECK(mentions(i, "g0_1 -> g1_0 [label=\"+1\"]"));

  std::string o = export_dot(oriental(2));
  CHECK(count_lines(o, "[label=", "->") == 7);
  CHECK(count_lines(export_dot(oriental(2), 1), "[label=", "->") == 6);

  std::string m = export_dot(fixtures::monoid());
  CHECK(mentions(m, "[label=\"-2\"]"));

  std::string empty = export_dot(Computad{});
  CHECK(count_lines(empty, "[label=") == 0);
  CHECK(mentions(empty, "digraph"));
  CHECK(export_dot(cube(3)) == export_dot(cube(3)));
}

TEST_CASE("relation files") {
  auto groups = parse_relation(
      "# comment\npt = (0,0) ~ (0,1) ~ (1,0) ~ (1,1)\n(0,a) ~ (1,a)\n\nside = (a,0) ~ (a,1)\n");
  REQUIRE(groups.size() == 3);
  CHECK_FALSE(groups[1].name);
  CHECK(groups[2].name == "side");
  CHECK(groups[2].members == std::vector<std::string>{"(a,0)", "(a,1)"});
  CHECK(parse_relation(format_relation(groups)).size() == 3);

  QuotientResult q = quotient_by_groups(cube(2), groups);
  CHECK(q.quotient.counts() == Counts{1, 2, 1});
  CHECK(q.quotient.find("side"));
  CHECK(q.quotient.find("pt"));
  CHECK(failure([] { quotient_by_groups(cube(2), parse_relation("(0,a) ~ (1,a)")); }).first ==
        "incompatible-relation");

  auto [kind, message] = failure([] { parse_relation("a ~ b\n\nc ~\n"); });
  CHECK(kind == "parse-error");
  CHECK(mentions(message, "line 3"));
  CHECK(failure([] { parse_relation("lonely\n"); }).first == "parse-error");
}

TEST_CASE("map files") {
  Computad i = interval();
  Computad sq = cube(2);
  ComputadMap f = parse_map(i, sq, "0 -> (0,0)\n1 -> (1,0)\na -> (a,0)\n");
  CHECK_FALSE(map_defect(i, sq, f));
  CHECK(parse_map(i, sq, format_map(i, sq, f)) == f);

  auto [kind, message] = failure([&] { parse_map(i, sq, "0 -> (0,0)\n1 -> nowhere\n"); });
  CHECK(kind == "parse-error");
  CHECK(mentions(message, "line 2"));
  CHECK(mentions(failure([&] { parse_map(i, sq, "0 -> (0,0)\n\n0 -> (1,0)\n"); }).second,
                 "line 3"));
  CHECK(mentions(failure([&] { parse_map(i, sq, "0 -> (0,0)\n"); }).second, "'1'"));
  CHECK(mentions(failure([&] { parse_map(i, sq, "0 (0,0)\n"); }).second, "line 1"));
}

TEST_CASE("generator lists and dimension sets") {
  Computad sq = cube(2);
  auto gens = parse_generator_list(sq, "(1,0)\n(1,1)\n# end column\n(1,a)\n");
  CHECK(gens.size() == 3);
  CHECK(collapse(sq, gens).quotient.counts() == Counts{3, 3, 1});
  CHECK(mentions(failure([&] { parse_generator_list(sq, "(1,0)\nzz\n"); }).second, "line 2"));

  CHECK(parse_dims("all").all);
  CHECK(parse_dims("1, 3").dims == std::set<int>{1, 3});
  CHECK(failure([] { parse_dims("1,x"); }).first == "parse-error");
  CHECK(failure([] { parse_dims("-1"); }).first == "parse-error");
}
