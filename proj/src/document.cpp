#include "dtop/document.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "dtop/error.hpp"

namespace dtop {

using nlohmann::json;

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& what) {
  throw Error("schema-violation", path + ": " + what);
}

json coeff_to_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() &&
      c <= std::numeric_limits<std::int64_t>::max()) {
    return json(static_cast<std::int64_t>(c));
  }
  return json(c.str());
}

Integer coeff_from_json(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    bool digits = !s.empty();
    for (std::size_t i = 0; i < s.size(); ++i) {
      char c = s[i];
      if (!(std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && c == '-' && s.size() > 1))) {
        digits = false;
      }
    }
    if (digits) return Integer(s);
  }
  schema(path, "coefficient must be an integer");
}

json chain_to_json(const Computad& x, const Chain& c) {
  json out = json::object();
  for (const auto& [i, coeff] : c.terms()) {
    out[x.name(GenId{c.dim(), i})] = coeff_to_json(coeff);
  }
  return out;
}

json cell_to_json(const Computad& x, const SteinerCell& cell) {
  json out = json::array();
  for (const Level& level : cell.levels()) {
    out.push_back({{"minus", chain_to_json(x, level.minus)},
                   {"plus", chain_to_json(x, level.plus)}});
  }
  return out;
}

Chain chain_from_json(const Computad& x, const json& j, int k, const std::string& path) {
  if (!j.is_object()) schema(path, "expected an object of name: coefficient");
  Chain c(k);
  for (const auto& [name, value] : j.items()) {
    std::string at = path + "/" + name;
    auto id = x.find(name);
    if (!id) schema(at, "unknown generator '" + name + "'");
    if (id->dim != k) {
      schema(at, "generator '" + name + "' has dimension " + std::to_string(id->dim) +
                     ", expected " + std::to_string(k));
    }
    Integer coeff = coeff_from_json(value, at);
    if (coeff == 0) schema(at, "zero coefficients are not stored");
    c.add(id->index, coeff);
  }
  return c;
}

SteinerCell cell_from_json(const Computad& x, const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) schema(path, "expected a non-empty array of levels");
  std::vector<Level> levels;
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::string at = path + "/" + std::to_string(k);
    const json& level = j[k];
    if (!level.is_object() || !level.contains("minus") || !level.contains("plus")) {
      schema(at, "a level needs 'minus' and 'plus'");
    }
    int d = static_cast<int>(k);
    levels.push_back(Level{chain_from_json(x, level["minus"], d, at + "/minus"),
                           chain_from_json(x, level["plus"], d, at + "/plus")});
  }
  try {
    return SteinerCell::from_levels(std::move(levels));
  } catch (const Error& e) {
    schema(path, e.what());
  }
}

void check_keys(const json& j, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) schema(path + "/" + key, "unexpected key");
  }
}

}  // namespace

json recipe_to_json(const Recipe& r) {
  json out = {{"op", r.op}};
  if (!r.args.empty()) out["args"] = r.args;
  if (!r.inputs.empty()) {
    json inputs = json::array();
    for (const auto& i : r.inputs) inputs.push_back(recipe_to_json(i));
    out["inputs"] = std::move(inputs);
  }
  return out;
}

namespace {

Recipe recipe_from_json_at(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("op") || !j["op"].is_string()) {
    schema(path, "a recipe needs a string 'op'");
  }
  check_keys(j, path, {"op", "args", "inputs"});
  Recipe r;
  r.op = j["op"].get<std::string>();
  if (j.contains("args")) {
    if (!j["args"].is_array()) schema(path + "/args", "expected an array of strings");
    for (std::size_t i = 0; i < j["args"].size(); ++i) {
      if (!j["args"][i].is_string()) schema(path + "/args/" + std::to_string(i), "expected a string");
      r.args.push_back(j["args"][i].get<std::string>());
    }
  }
  if (j.contains("inputs")) {
    if (!j["inputs"].is_array()) schema(path + "/inputs", "expected an array");
    for (std::size_t i = 0; i < j["inputs"].size(); ++i) {
      r.inputs.push_back(recipe_from_json_at(j["inputs"][i], path + "/inputs/" + std::to_string(i)));
    }
  }
  return r;
}

}  // namespace

Recipe recipe_from_json(const json& j) { return recipe_from_json_at(j, ""); }

json serialize(const ComputadDocument& doc) {
  const Computad& x = doc.computad;
  json generators = json::array();
  for (int d = 0; d <= x.dim(); ++d) {
    json level = json::array();
    for (std::size_t i = 0; i < x.count(d); ++i) {
      GenId g{d, i};
      json entry = {{"name", x.name(g)}};
      if (d > 0) {
        entry["minus"] = cell_to_json(x, x.border(g, Sign::minus));
        entry["plus"] = cell_to_json(x, x.border(g, Sign::plus));
      }
      level.push_back(std::move(entry));
    }
    generators.push_back(std::move(level));
  }
  json out = {{"format_version", kFormatVersion}, {"generators", std::move(generators)}};
  if (doc.basepoint) out["basepoint"] = x.name(*doc.basepoint);
  if (doc.provenance) out["provenance"] = recipe_to_json(*doc.provenance);
  return out;
}

ComputadDocument deserialize(const json& j) {
  if (!j.is_object()) schema("", "document must be an object");
  check_keys(j, "", {"format_version", "generators", "basepoint", "provenance"});
  if (!j.contains("format_version")) schema("/format_version", "missing");
  if (!j["format_version"].is_number_integer()) schema("/format_version", "expected an integer");
  if (j["format_version"].get<std::int64_t>() != kFormatVersion) {
    schema("/format_version", "unsupported version " + j["format_version"].dump());
  }
  if (!j.contains("generators") || !j["generators"].is_array()) {
    schema("/generators", "expected an array of per-dimension lists");
  }

  ComputadDocument doc;
  Computad& x = doc.computad;
  const json& gens = j["generators"];
  for (std::size_t d = 0; d < gens.size(); ++d) {
    std::string dpath = "/generators/" + std::to_string(d);
    if (!gens[d].is_array()) schema(dpath, "expected an array of generators");
    for (std::size_t i = 0; i < gens[d].size(); ++i) {
      std::string path = dpath + "/" + std::to_string(i);
      const json& g = gens[d][i];
      if (!g.is_object() || !g.contains("name") || !g["name"].is_string()) {
        schema(path, "a generator needs a string 'name'");
      }
      std::string name = g["name"].get<std::string>();
      if (x.find(name)) schema(path + "/name", "duplicate name '" + name + "'");
      if (d == 0) {
        check_keys(g, path, {"name"});
        x.add_point(name);
        continue;
      }
      check_keys(g, path, {"name", "minus", "plus"});
      if (!g.contains("minus") || !g.contains("plus")) schema(path, "missing border cells");
      SteinerCell minus = cell_from_json(x, g["minus"], path + "/minus");
      SteinerCell plus = cell_from_json(x, g["plus"], path + "/plus");
      x.add_generator_unchecked(name, static_cast<int>(d), std::move(minus), std::move(plus));
    }
  }

  ValidationReport report = validate_computad(x);
  if (!report.ok()) {
    const Violation& v = report.violations.front();
    std::string where = "generator '" + v.generator + "'";
    if (v.level >= 0) where += ", level " + std::to_string(v.level);
    if (v.sign) where += std::string(", sign ") + sign_char(*v.sign);
    throw Error("validation-failed", where + ": " + v.kind + ": " + v.detail);
  }

  if (j.contains("basepoint")) {
    if (!j["basepoint"].is_string()) schema("/basepoint", "expected a name");
    auto id = x.find(j["basepoint"].get<std::string>());
    if (!id || id->dim != 0) schema("/basepoint", "not a 0-dimensional generator");
    doc.basepoint = *id;
  }
  if (j.contains("provenance")) {
    try {
      doc.provenance = recipe_from_json(j["provenance"]);
    } catch (const Error& e) {
      schema("/provenance", e.what());
    }
  }
  return doc;
}

std::string dump_document(const ComputadDocument& doc) {
  return serialize(doc).dump(2) + "\n";
}

ComputadDocument parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("schema-violation", std::string("not JSON: ") + e.what());
  }
  return deserialize(j);
}

ComputadDocument read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io-error", "cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_document(buffer.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

void write_document(const std::string& path, const ComputadDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("io-error", "cannot write '" + path + "'");
  out << dump_document(doc);
}

}  // namespace dtop
