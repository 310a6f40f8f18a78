#include "dtop/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "dtop/constructions.hpp"
#include "dtop/error.hpp"
#include "dtop/tensor.hpp"
#include "dtop/text_files.hpp"

namespace dtop {

namespace {

std::string quote(const std::string& s) {
  bool plain = !s.empty() && s.find_first_of(" \t\"()") == std::string::npos;
  if (plain) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string format_dims(const DimSet& s) {
  if (s.all) return "all";
  std::string out;
  for (int d : s.dims) {
    if (!out.empty()) out += ",";
    out += std::to_string(d);
  }
  return out;
}

int parse_int(const std::string& s, const std::string& op) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error("invalid-recipe", op + ": expected an integer, got '" + s + "'");
}

Sign parse_sign(const std::string& s) {
  if (s == "+") return Sign::plus;
  if (s == "-") return Sign::minus;
  throw Error("invalid-recipe", "cone: expected + or -, got '" + s + "'");
}

void expect_arity(const Recipe& r, std::size_t args, std::size_t inputs) {
  if (r.args.size() != args || r.inputs.size() != inputs) {
    throw Error("invalid-recipe", r.op + ": expected " + std::to_string(args) +
                                      " argument(s) and " + std::to_string(inputs) +
                                      " input(s)");
  }
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

PointedComputad as_pointed(const Evaluated& v, const std::string& op) {
  if (!v.basepoint) throw Error("invalid-recipe", op + ": input has no basepoint");
  return PointedComputad{v.computad, *v.basepoint};
}

Evaluated from_pointed(PointedComputad p) {
  return Evaluated{std::move(p.computad), p.basepoint};
}

// Carries a basepoint along a map.
std::optional<GenId> carry(const std::optional<GenId>& base, const ComputadMap& f) {
  if (!base) return std::nullopt;
  return f(*base);
}

std::optional<GenId> by_name(const std::optional<GenId>& base, const Computad& before,
                             const Computad& after,
                             const std::unordered_map<std::string, std::string>& names) {
  if (!base) return std::nullopt;
  const std::string& old = before.name(*base);
  auto it = names.find(old);
  return after.at(it == names.end() ? old : it->second);
}

Computad constants() {
  Computad x;
  GenId base = x.add_point("*");
  GenId a = x.add_generator("a", 1, SteinerCell::point(base.index),
                            SteinerCell::point(base.index));
  x.add_generator("eta", 2, SteinerCell::point(base.index), x.atom(a));
  return x;
}

}  // namespace

std::string Recipe::to_string() const {
  std::string out = "(" + op;
  for (const auto& a : args) out += " " + quote(a);
  for (const auto& r : inputs) out += " " + r.to_string();
  return out + ")";
}

Evaluated evaluate(const Recipe& r) {
  std::vector<Evaluated> in;
  in.reserve(r.inputs.size());
  for (const auto& sub : r.inputs) in.push_back(evaluate(sub));

  const std::string& op = r.op;
  if (op == "point") {
    if (r.args.size() > 1 || !in.empty()) expect_arity(r, 1, 0);
    return Evaluated{point(r.args.empty() ? "*" : r.args[0]), GenId{0, 0}};
  }
  if (op == "interval") {
    expect_arity(r, 0, 0);
    return Evaluated{interval(), std::nullopt};
  }
  if (op == "cube") {
    expect_arity(r, 1, 0);
    return Evaluated{cube(parse_int(r.args[0], op)), std::nullopt};
  }
  if (op == "constants") {
    expect_arity(r, 0, 0);
    return Evaluated{constants(), GenId{0, 0}};
  }
  if (op == "tensor") {
    expect_arity(r, 0, 2);
    return Evaluated{tensor_product(in[0].computad, in[1].computad), std::nullopt};
  }
  if (op == "fibrewise") {
    expect_arity(r, 0, 2);
    return Evaluated{fibrewise_quotient(in[0].computad, in[1].computad).quotient,
                     std::nullopt};
  }
  if (op == "cone") {
    expect_arity(r, 1, 1);
    QuotientResult q = cone_with_projection(in[0].computad, parse_sign(r.args[0]));
    return Evaluated{std::move(q.quotient), std::nullopt};
  }
  if (op == "op") {
    expect_arity(r, 1, 1);
    return Evaluated{op_reverse(in[0].computad, parse_dims(r.args[0])), in[0].basepoint};
  }
  if (op == "skeleton") {
    expect_arity(r, 1, 1);
    return Evaluated{skeleton(in[0].computad, parse_int(r.args[0], op)), in[0].basepoint};
  }
  if (op == "rename") {
    if (r.inputs.size() != 1) expect_arity(r, r.args.size(), 1);
    std::unordered_map<std::string, std::string> names;
    for (const auto& line : r.args) {
      std::size_t arrow = line.find(" -> ");
      if (arrow == std::string::npos) {
        throw Error("invalid-recipe", "rename: expected 'old -> new', got '" + line + "'");
      }
      in[0].computad.at(line.substr(0, arrow));
      names[line.substr(0, arrow)] = line.substr(arrow + 4);
    }
    Computad out = dtop::rename(in[0].computad, names);
    auto base = by_name(in[0].basepoint, in[0].computad, out, names);
    return Evaluated{std::move(out), base};
  }
  if (op == "quotient") {
    if (r.inputs.size() != 1) expect_arity(r, r.args.size(), 1);
    auto groups = parse_relation(join_lines(r.args));
    QuotientResult q = quotient_by_groups(in[0].computad, groups);
    return Evaluated{std::move(q.quotient), carry(in[0].basepoint, q.projection)};
  }
  if (op == "union") {
    expect_arity(r, 0, 2);
    return Evaluated{disjoint_union(in[0].computad, in[1].computad), std::nullopt};
  }
  if (op == "pointed") {
    expect_arity(r, 1, 1);
    return from_pointed(pointed(in[0].computad, r.args[0]));
  }
  if (op == "suspend") {
    expect_arity(r, 1, 1);
    return from_pointed(suspension(as_pointed(in[0], op), parse_int(r.args[0], op)));
  }
  if (op == "smash" || op == "wedge") {
    if (in.empty() || !r.args.empty()) {
      throw Error("invalid-recipe", op + ": expected inputs and no arguments");
    }
    std::vector<PointedComputad> factors;
    for (const auto& v : in) factors.push_back(as_pointed(v, op));
    return from_pointed(op == "smash" ? smash(factors) : wedge(factors));
  }
  if (op == "pushout") {
    if (r.inputs.size() != 3) expect_arity(r, r.args.size(), 3);
    std::string left;
    std::string right;
    for (const auto& line : r.args) {
      if (line.rfind("left: ", 0) == 0) left += line.substr(6) + "\n";
      else if (line.rfind("right: ", 0) == 0) right += line.substr(7) + "\n";
      else throw Error("invalid-recipe", "pushout: bad map line '" + line + "'");
    }
    const Computad& a = in[0].computad;
    PointedComputad x = as_pointed(in[1], op);
    PointedComputad y = as_pointed(in[2], op);
    ComputadMap f = parse_map(a, x.computad, left);
    ComputadMap g = parse_map(a, y.computad, right);
    return from_pointed(pushout(a, x, y, f, g).computad);
  }
  throw Error("invalid-recipe", "unknown operation '" + op + "'");
}

namespace {

Recipe leaf(std::string op, std::vector<std::string> args = {}) {
  return Recipe{std::move(op), std::move(args), {}};
}

Recipe node(std::string op, std::vector<std::string> args, std::vector<Recipe> inputs) {
  return Recipe{std::move(op), std::move(args), std::move(inputs)};
}

Recipe apply(std::string op, Recipe input) {
  return node(std::move(op), {}, {std::move(input)});
}

Recipe apply(std::string op, std::string arg, Recipe input) {
  return node(std::move(op), {std::move(arg)}, {std::move(input)});
}

Recipe right_unit() {
  return apply("op", "1", apply("cone", "+", leaf("constants")));
}

Recipe lax_monoid() {
  return node("quotient",
              {"* = (0,0,*) ~ (0,1) ~ 1",
               "a = (0,0,a) ~ (0,a,*) ~ (a,0,*) ~ (a,1)",
               "mu = (0,a,a) ~ (a,0,a) ~ (a,a,*)",
               "eta = (0,0,eta)",
               "right_unitor = (0,a,eta)",
               "left_unitor = (a,0,eta)",
               "associator = (a,a,a)",
               "triangle = (a,a,eta)"},
              {apply("cone", "+", right_unit())});
}

Recipe monoid() { return apply("skeleton", "2", lax_monoid()); }

Recipe dualize(Recipe input) {
  return node("rename", {"mu -> delta", "eta -> epsilon"},
              {apply("op", "all", std::move(input))});
}

Recipe comonoid() { return dualize(monoid()); }

Recipe r_matrix() {
  Computad c = cube(3);
  static const char* names[] = {"*", "x", "r", "yang_baxter"};
  std::vector<std::string> groups;
  for (int d = 0; d <= 3; ++d) {
    std::string line = std::string(names[d]) + " =";
    bool first = true;
    for (GenId g : c.generators()) {
      if (g.dim != d) continue;
      line += (first ? " " : " ~ ") + c.name(g);
      first = false;
    }
    groups.push_back(line);
  }
  return node("quotient", groups, {leaf("cube", {"3"})});
}

Recipe frobenius_compatible() {
  return node("fibrewise", {}, {comonoid(), monoid()});
}

// Action/coaction quotients: the monoid's multiplication is identified with
// its action on the comonoid side and the comultiplication with the coaction.
Recipe frobenius_acting() {
  return node("quotient",
              {"* = (0,*,*) ~ (1,*,*)",
               "a = (0,*,a) ~ (1,a,*) ~ (a,*,*)",
               "mu = (0,*,mu) ~ (a,*,a)",
               "delta = (1,delta,*) ~ (a,a,*)",
               "eta = (0,*,eta)",
               "epsilon = (1,epsilon,*)",
               "unit_law = (a,*,eta)",
               "associativity = (a,*,mu)",
               "frobenius = (a,a,a)",
               "counit_law = (a,epsilon,*)",
               "coassociativity = (a,delta,*)"},
              {frobenius_compatible()});
}

Recipe frobenius_coacting() {
  return node("quotient",
              {"* = (0,*,*) ~ (1,*,*)",
               "a = (0,*,a) ~ (1,a,*) ~ (a,*,*)",
               "delta = (0,*,delta) ~ (a,a,*)",
               "mu = (a,*,a) ~ (1,mu,*)",
               "epsilon = (0,*,epsilon)",
               "eta = (1,eta,*)",
               "counit_law' = (a,*,epsilon)",
               "coassociativity' = (a,*,delta)",
               "frobenius' = (a,a,a)",
               "unit_law' = (a,eta,*)",
               "associativity' = (a,mu,*)"},
              {node("fibrewise", {}, {monoid(), comonoid()})});
}

Recipe frobenius_special() {
  std::vector<std::string> groups;
  for (const char* n : {"*", "a", "mu", "eta", "delta", "epsilon"}) {
    groups.push_back(std::string(n) + " = " + n + "/1 ~ " + n + "/2");
  }
  return node("quotient", groups,
              {node("union", {}, {frobenius_acting(), frobenius_coacting()})});
}

Recipe based(Recipe input) { return apply("pointed", "*", std::move(input)); }

Recipe bialgebra() { return node("smash", {}, {based(monoid()), based(monoid())}); }

Recipe interacting_bialgebras() {
  // Colours b (black) and w (white); each factor gets its own object name.
  struct Factor {
    const char* object;
    const char* product;
    const char* unit;
    bool co;
    const char* colour;
  };
  const Factor factors[] = {{"a1", "mu_b", "eta_b", false, "b"},
                            {"a2", "delta_b", "epsilon_b", true, "b"},
                            {"a3", "mu_w", "eta_w", false, "w"},
                            {"a4", "delta_w", "epsilon_w", true, "w"}};
  std::vector<Recipe> wedge_inputs;
  for (const auto& f : factors) {
    std::string p = f.co ? "delta" : "mu";
    std::string u = f.co ? "epsilon" : "eta";
    wedge_inputs.push_back(node("rename",
                                {"a -> " + std::string(f.object), p + " -> " + f.product,
                                 u + " -> " + f.unit},
                                {based(f.co ? comonoid() : monoid())}));
  }
  Recipe a = apply("suspend", "3", node("wedge", {}, wedge_inputs));

  Recipe b = node("smash", {}, {based(monoid()), based(monoid()), based(monoid()), based(monoid())});
  Recipe bb = node("wedge", {}, {b, b});
  Recipe ff = apply("suspend", "3", node("wedge", {}, {based(frobenius_special()), based(frobenius_special())}));

  auto s3 = [](const std::string& n) { return "(" + n + ",a,a,a)"; };
  std::vector<std::string> maps = {"left: * -> *", "right: * -> *"};
  for (const auto& f : factors) {
    // Monoids sit at the first smash position, comonoids at the second; the
    // black monoid and the white comonoid share the first copy of B.
    bool first_copy = f.co == (std::string(f.colour) == "w");
    std::string copy = first_copy ? "/1" : "/2";
    std::string pos_p = f.co ? "(a,mu,a,a)" : "(mu,a,a,a)";
    std::string pos_u = f.co ? "(a,eta,a,a)" : "(eta,a,a,a)";
    maps.push_back("left: " + s3(f.object) + " -> (a,a,a,a)" + copy);
    maps.push_back("left: " + s3(f.product) + " -> " + pos_p + copy);
    maps.push_back("left: " + s3(f.unit) + " -> " + pos_u + copy);

    std::string side = std::string(f.colour) == "b" ? "/1" : "/2";
    std::string p = f.co ? "delta" : "mu";
    std::string u = f.co ? "epsilon" : "eta";
    maps.push_back("right: " + s3(f.object) + " -> " + s3("a" + side));
    maps.push_back("right: " + s3(f.product) + " -> " + s3(p + side));
    maps.push_back("right: " + s3(f.unit) + " -> " + s3(u + side));
  }
  return node("pushout", maps, {a, bb, ff});
}

struct Spec {
  std::function<Recipe()> recipe;
  std::optional<std::vector<std::size_t>> counts;
  bool interpretive = false;
  std::string note;
};

using V = std::vector<std::size_t>;

const std::map<std::string, Spec>& specs() {
  static const std::map<std::string, Spec> table = {
      {"interval", {[] { return leaf("interval"); }, V{2, 1}}},
      {"cube2", {[] { return leaf("cube", {"2"}); }, V{4, 4, 1}}},
      {"cube3", {[] { return leaf("cube", {"3"}); }, V{8, 12, 6, 1}}},
      {"r_matrix", {r_matrix, V{1, 1, 1, 1}}},
      {"frobenius_law",
       {[] { return node("fibrewise", {}, {leaf("interval"), leaf("interval")}); },
        V{4, 6, 4, 1}}},
      {"constants_K", {[] { return leaf("constants"); }, V{1, 1, 1}}},
      {"right_unit", {right_unit, V{2, 2, 2, 1}}},
      {"lax_monoid", {lax_monoid, V{1, 1, 2, 3, 1}, false, "hand-listed congruent-shape relation"}},
      {"monoid", {monoid, V{1, 1, 2}}},
      {"comonoid", {comonoid, V{1, 1, 2}}},
      {"lax_comonoid", {[] { return dualize(lax_monoid()); }, V{1, 1, 2, 3, 1}}},
      {"action_left", {[] { return apply("cone", "+", monoid()); }, V{2, 2, 3, 2}}},
      {"coaction_right", {[] { return apply("cone", "-", comonoid()); }, V{2, 2, 3, 2}}},
      {"frobenius_compatible",
       {frobenius_compatible, V{2, 3, 6, 5, 4, 4}, false,
        "I (x) comonoid (x) monoid: the monoid acts, the comonoid coacts"}},
      {"frobenius_special",
       {frobenius_special, V{1, 1, 4, 10, 8, 8}, true,
        "both action/coaction quotients glued along their shared operations; "
        "the glueing is a transcription of the loop-elimination step"}},
      {"bialgebra", {bialgebra, V{1, 0, 1, 4, 4}}},
      {"commutative_monoid",
       {[] { return node("smash", {}, {based(monoid()), based(comonoid())}); }, V{1, 0, 1, 4, 4}}},
      {"cocommutative_comonoid",
       {[] { return node("smash", {}, {based(comonoid()), based(monoid())}); }, V{1, 0, 1, 4, 4}}},
      {"interacting_bialgebras",
       {interacting_bialgebras, V{1, 0, 0, 0, 1, 16, 68, 80, 48}, true,
        "legs send the black monoid and white comonoid into the first copy of B"}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {
      "interval",       "cube2",          "cube3",
      "r_matrix",       "frobenius_law",  "constants_K",
      "right_unit",     "lax_monoid",     "monoid",
      "comonoid",       "lax_comonoid",   "action_left",
      "coaction_right", "frobenius_compatible", "frobenius_special",
      "bialgebra",      "commutative_monoid", "cocommutative_comonoid",
      "interacting_bialgebras"};
  return names;
}

CatalogEntry build(const std::string& name, const std::optional<DimSet>& reverse) {
  auto it = specs().find(name);
  if (it == specs().end()) throw Error("unknown-name", "no catalog entry '" + name + "'");
  const Spec& spec = it->second;
  CatalogEntry entry;
  entry.name = name;
  entry.recipe = spec.recipe();
  if (reverse) entry.recipe = apply("op", format_dims(*reverse), entry.recipe);
  entry.expected_counts = spec.counts;
  entry.interpretive = spec.interpretive;
  entry.note = spec.note;

  Evaluated v = evaluate(entry.recipe);
  entry.computad = std::move(v.computad);
  entry.basepoint = v.basepoint;

  ValidationReport report = validate_computad(entry.computad);
  if (!report.ok()) {
    const Violation& first = report.violations.front();
    throw Error("catalog-check", name + ": " + first.kind + " at " + first.generator +
                                    ": " + first.detail);
  }
  if (entry.expected_counts && *entry.expected_counts != entry.computad.counts()) {
    throw Error("catalog-check", name + ": counts " +
                                     format_counts(entry.computad.counts()) +
                                     ", expected " + format_counts(*entry.expected_counts));
  }
  return entry;
}

}  // namespace dtop
