// dtop: command-line front end. Computads travel between commands as JSON
// documents; an input argument is a file, "-" for stdin, a catalog name or
// one of the primitives I, point, circle, two_points, globe:N, cube:N,
// oriental:N.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "dtop/catalog.hpp"
#include "dtop/constructions.hpp"
#include "dtop/document.hpp"
#include "dtop/dot.hpp"
#include "dtop/error.hpp"
#include "dtop/isomorphism.hpp"
#include "dtop/tensor.hpp"
#include "dtop/text_files.hpp"

using namespace dtop;
using nlohmann::json;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kError = 2;

struct Options {
  bool quiet = false;
  bool as_json = false;
  std::string out;
};

std::string read_text(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("io-error", "cannot read '" + path + "'");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

std::optional<int> suffix_int(const std::string& s, const std::string& prefix) {
  if (s.rfind(prefix, 0) != 0) return std::nullopt;
  std::string rest = s.substr(prefix.size());
  if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos) {
    throw Error("invalid-argument", "expected a number after '" + prefix + "'");
  }
  return std::stoi(rest);
}

ComputadDocument primitive(const std::string& name) {
  auto doc = [](Computad x, Recipe r, std::optional<GenId> base = std::nullopt) {
    return ComputadDocument{std::move(x), base, std::move(r)};
  };
  if (name == "I") return doc(interval(), Recipe{"interval", {}, {}});
  if (name == "point") return doc(point(), Recipe{"point", {}, {}}, GenId{0, 0});
  if (name == "circle") return doc(circle(), Recipe{}, GenId{0, 0});
  if (name == "two_points") return doc(two_points().computad, Recipe{}, GenId{0, 0});
  if (auto n = suffix_int(name, "globe:")) return doc(globe(*n), Recipe{});
  if (auto n = suffix_int(name, "cube:")) {
    return doc(cube(*n), Recipe{"cube", {std::to_string(*n)}, {}});
  }
  if (auto n = suffix_int(name, "oriental:")) return doc(oriental(*n), Recipe{});
  throw Error("unknown-name", "'" + name + "' is neither a file, a catalog name nor a primitive");
}

ComputadDocument load(const std::string& arg) {
  if (arg == "-") return parse_document(read_text("-"));
  if (std::ifstream(arg).good()) return read_document(arg);
  const auto& names = catalog_names();
  if (std::find(names.begin(), names.end(), arg) != names.end()) {
    CatalogEntry e = build(arg);
    return ComputadDocument{std::move(e.computad), e.basepoint, std::move(e.recipe)};
  }
  ComputadDocument d = primitive(arg);
  if (d.provenance && d.provenance->op.empty()) d.provenance.reset();
  return d;
}

// Provenance of a derived document when every input has one.
std::optional<Recipe> derive(std::string op, std::vector<std::string> args,
                             const std::vector<const ComputadDocument*>& inputs) {
  Recipe r{std::move(op), std::move(args), {}};
  for (const auto* d : inputs) {
    if (!d->provenance) return std::nullopt;
    r.inputs.push_back(*d->provenance);
  }
  return r;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.out, std::ios::binary);
    if (!out) throw Error("io-error", "cannot write '" + o.out + "'");
    out << text;
  }
}

void emit(const Options& o, const ComputadDocument& d) { emit(o, dump_document(d)); }

PointedComputad as_pointed(const ComputadDocument& d, const std::string& base) {
  if (!base.empty()) return pointed(d.computad, base);
  if (d.basepoint) return PointedComputad{d.computad, *d.basepoint};
  return pointed(d.computad, "*");
}

// Report commands print a PASS/FAIL line, or the JSON report with --json.
int report(const Options& o, bool pass, const std::string& summary, json details) {
  if (o.as_json) {
    details["pass"] = pass;
    std::cout << details.dump(2) << "\n";
  } else if (!o.quiet) {
    std::cout << (pass ? "PASS" : "FAIL") << (summary.empty() ? "" : " " + summary) << "\n";
  }
  return pass ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Build and check computads presenting higher algebraic theories."};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--quiet", o.quiet, "Suppress report output; rely on the exit code");
  app.add_flag("--json", o.as_json, "Print reports as JSON");

  std::function<int()> run;
  std::string a, b, c, rel, sub, left_map, right_map, dims, name, reverse, sign;
  std::vector<std::string> bases;
  int k = 1;
  int max_dim = -1;
  int max_total = 4;
  bool closure = false;

  auto* cmd_build = app.add_subcommand("build", "Build a catalog entry");
  cmd_build->add_option("name", name, "Catalog name")->required();
  cmd_build->add_option("--out", o.out, "Output file");
  cmd_build->add_option("--reverse", reverse, "Reverse the result in these dimensions (e.g. 1,2 or all)");
  cmd_build->callback([&] {
    run = [&] {
      std::optional<DimSet> r;
      if (!reverse.empty()) r = parse_dims(reverse);
      CatalogEntry e = build(name, r);
      emit(o, ComputadDocument{std::move(e.computad), e.basepoint, std::move(e.recipe)});
      return kOk;
    };
  });

  auto* cmd_list = app.add_subcommand("list", "List catalog names");
  cmd_list->callback([&] {
    run = [&] {
      for (const auto& n : catalog_names()) std::cout << n << "\n";
      return kOk;
    };
  });

  auto* cmd_tensor = app.add_subcommand("tensor", "Tensor product A (x) B");
  cmd_tensor->add_option("A", a)->required();
  cmd_tensor->add_option("B", b)->required();
  cmd_tensor->add_option("--out", o.out, "Output file");
  cmd_tensor->callback([&] {
    run = [&] {
      auto x = load(a);
      auto y = load(b);
      emit(o, ComputadDocument{tensor_product(x.computad, y.computad), std::nullopt,
                               derive("tensor", {}, {&x, &y})});
      return kOk;
    };
  });

  auto* cmd_cone = app.add_subcommand("cone", "Future (+) or past (-) cone");
  cmd_cone->add_option("sign", sign)->required()->check(CLI::IsMember({"+", "-"}));
  cmd_cone->add_option("A", a)->required();
  cmd_cone->add_option("--out", o.out, "Output file");
  cmd_cone->callback([&] {
    run = [&] {
      auto x = load(a);
      Sign s = sign == "+" ? Sign::plus : Sign::minus;
      emit(o, ComputadDocument{cone(x.computad, s), std::nullopt, derive("cone", {sign}, {&x})});
      return kOk;
    };
  });

  auto* cmd_smash = app.add_subcommand("smash", "Smash product of pointed computads");
  cmd_smash->add_option("A", a)->required();
  cmd_smash->add_option("B", b)->required();
  cmd_smash->add_option("--base", bases, "Basepoint names for A and B (default: the document's, else *)")
      ->expected(0, 2);
  cmd_smash->add_option("--out", o.out, "Output file");
  cmd_smash->callback([&] {
    run = [&] {
      auto x = load(a);
      auto y = load(b);
      bases.resize(2);
      PointedComputad s = smash(as_pointed(x, bases[0]), as_pointed(y, bases[1]));
      std::optional<Recipe> r;
      if (x.provenance && y.provenance) {
        auto px = as_pointed(x, bases[0]);
        auto py = as_pointed(y, bases[1]);
        r = Recipe{"smash", {},
                   {Recipe{"pointed", {x.computad.name(px.basepoint)}, {*x.provenance}},
                    Recipe{"pointed", {y.computad.name(py.basepoint)}, {*y.provenance}}}};
      }
      emit(o, ComputadDocument{std::move(s.computad), s.basepoint, r});
      return kOk;
    };
  });

  auto* cmd_wedge = app.add_subcommand("wedge", "Wedge sum of pointed computads");
  cmd_wedge->add_option("A", a)->required();
  cmd_wedge->add_option("B", b)->required();
  cmd_wedge->add_option("--base", bases, "Basepoint names for A and B")->expected(0, 2);
  cmd_wedge->add_option("--out", o.out, "Output file");
  cmd_wedge->callback([&] {
    run = [&] {
      auto x = load(a);
      auto y = load(b);
      bases.resize(2);
      PointedComputad w = wedge(as_pointed(x, bases[0]), as_pointed(y, bases[1]));
      emit(o, ComputadDocument{std::move(w.computad), w.basepoint, std::nullopt});
      return kOk;
    };
  });

  auto* cmd_suspend = app.add_subcommand("suspend", "k-fold suspension (smash with the circle)");
  cmd_suspend->add_option("A", a)->required();
  cmd_suspend->add_option("-k", k, "Number of suspensions")->check(CLI::NonNegativeNumber);
  cmd_suspend->add_option("--base", bases, "Basepoint name")->expected(0, 1);
  cmd_suspend->add_option("--out", o.out, "Output file");
  cmd_suspend->callback([&] {
    run = [&] {
      auto x = load(a);
      bases.resize(1);
      PointedComputad s = suspension(as_pointed(x, bases[0]), k);
      std::optional<Recipe> r;
      if (x.provenance) {
        r = Recipe{"suspend", {std::to_string(k)},
                   {Recipe{"pointed", {x.computad.name(as_pointed(x, bases[0]).basepoint)},
                           {*x.provenance}}}};
      }
      emit(o, ComputadDocument{std::move(s.computad), s.basepoint, r});
      return kOk;
    };
  });

  auto* cmd_op = app.add_subcommand("op", "Reverse cells in the given dimensions");
  cmd_op->add_option("A", a)->required();
  cmd_op->add_option("--dims", dims, "Comma-separated dimensions, or all")->default_val("all");
  cmd_op->add_option("--out", o.out, "Output file");
  cmd_op->callback([&] {
    run = [&] {
      auto x = load(a);
      emit(o, ComputadDocument{op_reverse(x.computad, parse_dims(dims)), x.basepoint,
                               derive("op", {dims}, {&x})});
      return kOk;
    };
  });

  auto* cmd_quotient = app.add_subcommand("quotient", "Quotient by a relation file");
  cmd_quotient->add_option("A", a)->required();
  cmd_quotient->add_option("--rel", rel, "Relation file: lines 'a ~ b', optionally 'name = a ~ b'")
      ->required();
  cmd_quotient->add_flag("--closure", closure, "Merge classes forced by the relation");
  cmd_quotient->add_option("--out", o.out, "Output file");
  cmd_quotient->callback([&] {
    run = [&] {
      auto x = load(a);
      auto groups = parse_relation(read_text(rel));
      QuotientOptions opts;
      opts.congruence_closure = closure;
      QuotientResult q = quotient_by_groups(x.computad, groups, opts);
      std::optional<GenId> base;
      if (x.basepoint) base = q.projection(*x.basepoint);
      std::optional<Recipe> r;
      if (!closure) {
        std::vector<std::string> lines;
        std::stringstream in(format_relation(groups));
        for (std::string line; std::getline(in, line);) lines.push_back(line);
        r = derive("quotient", lines, {&x});
      }
      emit(o, ComputadDocument{std::move(q.quotient), base, r});
      return kOk;
    };
  });

  auto* cmd_collapse = app.add_subcommand("collapse", "Collapse a subcomputad to a point");
  cmd_collapse->add_option("A", a)->required();
  cmd_collapse->add_option("--sub", sub, "File listing the subcomputad's generators")->required();
  cmd_collapse->add_option("--name", name, "Name of the new 0-cell");
  cmd_collapse->add_option("--out", o.out, "Output file");
  cmd_collapse->callback([&] {
    run = [&] {
      auto x = load(a);
      auto gens = parse_generator_list(x.computad, read_text(sub));
      std::optional<std::string> n;
      if (!name.empty()) n = name;
      QuotientResult q = collapse(x.computad, gens, n);
      GenId base = gens.empty() ? GenId{0, 0} : q.projection(gens.front());
      std::optional<GenId> b0;
      if (!gens.empty()) b0 = base;
      emit(o, ComputadDocument{std::move(q.quotient), b0, std::nullopt});
      return kOk;
    };
  });

  auto* cmd_pushout = app.add_subcommand("pushout", "Pushout of pointed X <- A -> Y");
  cmd_pushout->add_option("A", a)->required();
  cmd_pushout->add_option("X", b)->required();
  cmd_pushout->add_option("Y", c)->required();
  cmd_pushout->add_option("--left", left_map, "Map file A -> X ('s -> t' lines)")->required();
  cmd_pushout->add_option("--right", right_map, "Map file A -> Y")->required();
  cmd_pushout->add_option("--out", o.out, "Output file");
  cmd_pushout->callback([&] {
    run = [&] {
      auto da = load(a);
      auto dx = load(b);
      auto dy = load(c);
      ComputadMap f = parse_map(da.computad, dx.computad, read_text(left_map));
      ComputadMap g = parse_map(da.computad, dy.computad, read_text(right_map));
      PushoutResult p = pushout(da.computad, as_pointed(dx, ""), as_pointed(dy, ""), f, g);
      emit(o, ComputadDocument{std::move(p.computad.computad), p.computad.basepoint,
                               std::nullopt});
      return kOk;
    };
  });

  auto* cmd_check = app.add_subcommand("check", "Run a verification");
  cmd_check->require_subcommand(1);
  auto* cmd_axioms = cmd_check->add_subcommand("axioms", "Validate the computad axioms");
  cmd_axioms->add_option("A", a)->default_val("-");
  cmd_axioms->callback([&] {
    run = [&] {
      // read_document already rejects invalid documents; re-validate
      // catalog builds and primitives explicitly.
      auto x = load(a);
      ValidationReport r = validate_computad(x.computad);
      json details = {{"violations", json::array()},
                      {"loop_free_unital", r.loop_free_unital}};
      for (const auto& v : r.violations) {
        details["violations"].push_back({{"generator", v.generator},
                                         {"kind", v.kind},
                                         {"level", v.level},
                                         {"detail", v.detail}});
      }
      return report(o, r.ok(), std::to_string(r.violations.size()) + " violation(s)", details);
    };
  });
  auto* cmd_borders = cmd_check->add_subcommand(
      "tensor-borders", "Compare tensor borders with the explicit low-dimensional formulas");
  cmd_borders->add_option("A", a)->required();
  cmd_borders->add_option("B", b)->required();
  cmd_borders->add_option("--max-dim", max_total, "Largest total dimension of a pair")
      ->default_val(4);
  cmd_borders->callback([&] {
    run = [&] {
      auto x = load(a);
      auto y = load(b);
      TensorBorderReport r = check_tensor_borders(x.computad, y.computad, max_total);
      json details = {{"checked", r.checked}, {"mismatches", json::array()}};
      for (const auto& m : r.mismatches) {
        details["mismatches"].push_back({{"pair", m.pair},
                                         {"border", m.border},
                                         {"sign", std::string(1, sign_char(m.sign))},
                                         {"level", m.level},
                                         {"expected", m.expected},
                                         {"got", m.got}});
      }
      if (!o.as_json && !o.quiet) {
        for (const auto& m : r.mismatches) {
          std::cout << m.pair << " border " << m.border << sign_char(m.sign) << " level "
                    << m.level << ": expected " << m.expected << ", got " << m.got << "\n";
        }
      }
      return report(o, r.ok(),
                    std::to_string(r.checked) + " borders, " +
                        std::to_string(r.mismatches.size()) + " mismatch(es)",
                    details);
    };
  });

  auto* cmd_stats = app.add_subcommand("stats", "Generator counts per dimension");
  cmd_stats->add_option("A", a)->default_val("-");
  cmd_stats->callback([&] {
    run = [&] {
      auto x = load(a);
      if (o.as_json) {
        std::cout << json{{"counts", x.computad.counts()}}.dump() << "\n";
      } else {
        std::cout << format_counts(x.computad.counts()) << "\n";
      }
      return kOk;
    };
  });

  auto* cmd_iso = app.add_subcommand("iso", "Search for an isomorphism A -> B");
  cmd_iso->add_option("A", a)->required();
  cmd_iso->add_option("B", b)->required();
  cmd_iso->callback([&] {
    run = [&] {
      auto x = load(a);
      auto y = load(b);
      auto f = find_isomorphism(x.computad, y.computad);
      if (f && isomorphism_defect(x.computad, y.computad, *f)) f.reset();
      json details = {{"witness", nullptr}};
      if (f) {
        details["witness"] = json::object();
        for (GenId g : x.computad.generators()) {
          details["witness"][x.computad.name(g)] = y.computad.name((*f)(g));
        }
      }
      if (f && !o.as_json && !o.quiet) {
        std::cout << format_map(x.computad, y.computad, *f);
      }
      return report(o, f.has_value(), f ? "isomorphic" : "not isomorphic", details);
    };
  });

  auto* cmd_propose = app.add_subcommand(
      "propose", "Print congruent-shape identifications as a relation file (not applied)");
  cmd_propose->add_option("A", a)->default_val("-");
  cmd_propose->callback([&] {
    run = [&] {
      auto x = load(a);
      GeneratorRelation r = congruent_shape_proposal(x.computad);
      std::vector<RelationGroup> groups;
      for (const auto& cls : r.classes()) {
        if (cls.size() < 2) continue;
        RelationGroup g;
        for (GenId id : cls) g.members.push_back(x.computad.name(id));
        groups.push_back(std::move(g));
      }
      std::cout << format_relation(groups);
      return kOk;
    };
  });

  auto* cmd_export = app.add_subcommand("export", "Export a computad");
  cmd_export->require_subcommand(1);
  auto* cmd_json = cmd_export->add_subcommand("json", "JSON document");
  cmd_json->add_option("A", a)->default_val("-");
  cmd_json->add_option("--out", o.out, "Output file");
  cmd_json->callback([&] {
    run = [&] {
      emit(o, load(a));
      return kOk;
    };
  });
  auto* cmd_dot = cmd_export->add_subcommand("dot", "Graphviz incidence graph");
  cmd_dot->add_option("A", a)->default_val("-");
  cmd_dot->add_option("--max-dim", max_dim, "Highest dimension drawn");
  cmd_dot->add_option("--out", o.out, "Output file");
  cmd_dot->callback([&] {
    run = [&] {
      emit(o, export_dot(load(a).computad, max_dim));
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
    return kError;
  }
  try {
    return run ? run() : kOk;
  } catch (const Error& e) {
    std::cerr << json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return kError;
  }
}
