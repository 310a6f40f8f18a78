#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "dtop/catalog.hpp"
#include "dtop/computad.hpp"

namespace dtop {

inline constexpr int kFormatVersion = 1;

/// A computad as stored on disk: the generators, an optional basepoint and
/// the recipe that produced it.
struct ComputadDocument {
  Computad computad;
  std::optional<GenId> basepoint;
  std::optional<Recipe> provenance;

  friend bool operator==(const ComputadDocument&, const ComputadDocument&) = default;
};

/// {"format_version": 1,
///  "generators": [[{"name": "*"}], [{"name": "a", "minus": cell, "plus": cell}]],
///  "basepoint": "*", "provenance": recipe}
/// A cell is an array of levels {"minus": {name: coeff}, "plus": {...}}.
/// Coefficients are JSON integers, or decimal strings when they do not fit
/// in 64 bits.
nlohmann::json serialize(const ComputadDocument& doc);

/// Throws Error "schema-violation" naming the JSON path of the offending
/// value, or "validation-failed" naming the generator, level and sign of the
/// first axiom violation.
ComputadDocument deserialize(const nlohmann::json& doc);

nlohmann::json recipe_to_json(const Recipe& r);
Recipe recipe_from_json(const nlohmann::json& j);

/// Pretty-printed with a trailing newline; byte-identical for equal input.
std::string dump_document(const ComputadDocument& doc);
ComputadDocument parse_document(std::string_view text);

ComputadDocument read_document(const std::string& path);
void write_document(const std::string& path, const ComputadDocument& doc);

}  // namespace dtop
