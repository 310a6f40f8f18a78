#include "dtop/text_files.hpp"

#include <sstream>

#include "dtop/error.hpp"

namespace dtop {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Non-empty, non-comment lines with their 1-based line numbers.
std::vector<std::pair<int, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string line = trim(text.substr(pos, end - pos));
    if (!line.empty() && line[0] != '#') out.emplace_back(number, std::move(line));
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error("parse-error", "line " + std::to_string(line) + ": " + what);
}

GenId lookup(const Computad& x, const std::string& name, int line) {
  auto id = x.find(name);
  if (!id) parse_fail(line, "unknown generator '" + name + "'");
  return *id;
}

}  // namespace

std::vector<RelationGroup> parse_relation(std::string_view text) {
  std::vector<RelationGroup> groups;
  for (const auto& [number, line] : content_lines(text)) {
    RelationGroup group;
    std::string_view body = line;
    // A class name is only recognised when '=' precedes the first '~'.
    std::size_t eq = body.find(" = ");
    std::size_t tilde = body.find('~');
    if (eq != std::string_view::npos && (tilde == std::string_view::npos || eq < tilde)) {
      group.name = trim(body.substr(0, eq));
      body = body.substr(eq + 3);
      if (group.name->empty()) parse_fail(number, "empty class name");
    }
    std::size_t pos = 0;
    while (true) {
      std::size_t next = body.find('~', pos);
      std::string member =
          trim(body.substr(pos, next == std::string_view::npos ? next : next - pos));
      if (member.empty()) parse_fail(number, "empty generator name");
      group.members.push_back(std::move(member));
      if (next == std::string_view::npos) break;
      pos = next + 1;
    }
    if (group.members.size() < 2 && !group.name) {
      parse_fail(number, "a relation line needs at least two generators");
    }
    groups.push_back(std::move(group));
  }
  return groups;
}

std::string format_relation(const std::vector<RelationGroup>& groups) {
  std::string out;
  for (const auto& g : groups) {
    if (g.name) out += *g.name + " = ";
    for (std::size_t i = 0; i < g.members.size(); ++i) {
      if (i > 0) out += " ~ ";
      out += g.members[i];
    }
    out += "\n";
  }
  return out;
}

GeneratorRelation relation_from_groups(const Computad& x,
                                       const std::vector<RelationGroup>& groups) {
  GeneratorRelation r(x);
  for (const auto& g : groups) {
    GenId first = x.at(g.members.front());
    for (std::size_t i = 1; i < g.members.size(); ++i) r.relate(first, x.at(g.members[i]));
  }
  return r;
}

QuotientResult quotient_by_groups(const Computad& x,
                                  const std::vector<RelationGroup>& groups,
                                  QuotientOptions options) {
  QuotientResult q = quotient_by_relation(x, relation_from_groups(x, groups), options);
  std::unordered_map<std::string, std::string> names;
  for (const auto& g : groups) {
    if (!g.name) continue;
    GenId cls = q.projection(x.at(g.members.front()));
    names[q.quotient.name(cls)] = *g.name;
  }
  if (!names.empty()) q.quotient = rename(q.quotient, names);
  return q;
}

ComputadMap parse_map(const Computad& source, const Computad& target,
                      std::string_view text) {
  ComputadMap f;
  f.image.resize(static_cast<std::size_t>(source.dim() + 1));
  std::vector<std::vector<bool>> seen(f.image.size());
  for (int d = 0; d <= source.dim(); ++d) {
    f.image[d].resize(source.count(d));
    seen[d].resize(source.count(d), false);
  }
  for (const auto& [number, line] : content_lines(text)) {
    std::size_t arrow = line.find("->");
    if (arrow == std::string::npos) parse_fail(number, "expected 'source -> target'");
    std::string from = trim(std::string_view(line).substr(0, arrow));
    std::string to = trim(std::string_view(line).substr(arrow + 2));
    GenId s = lookup(source, from, number);
    GenId t = lookup(target, to, number);
    if (seen[s.dim][s.index]) parse_fail(number, "generator '" + from + "' mapped twice");
    seen[s.dim][s.index] = true;
    f.image[s.dim][s.index] = t;
  }
  for (GenId g : source.generators()) {
    if (!seen[g.dim][g.index]) {
      throw Error("parse-error", "map does not cover generator '" + source.name(g) + "'");
    }
  }
  return f;
}

std::string format_map(const Computad& source, const Computad& target,
                       const ComputadMap& f) {
  std::string out;
  for (GenId g : source.generators()) {
    out += source.name(g) + " -> " + target.name(f(g)) + "\n";
  }
  return out;
}

std::vector<GenId> parse_generator_list(const Computad& x, std::string_view text) {
  std::vector<GenId> out;
  for (const auto& [number, line] : content_lines(text)) out.push_back(lookup(x, line, number));
  return out;
}

DimSet parse_dims(std::string_view text) {
  std::string t = trim(text);
  if (t == "all") return DimSet::everything();
  DimSet s;
  std::stringstream in(t);
  std::string part;
  while (std::getline(in, part, ',')) {
    part = trim(part);
    if (part.empty()) continue;
    std::size_t used = 0;
    int d = -1;
    try {
      d = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || d < 0) {
      throw Error("parse-error", "bad dimension '" + part + "'");
    }
    s.dims.insert(d);
  }
  return s;
}

}  // namespace dtop
