#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dtop/computad.hpp"

namespace dtop {

/// A construction expression: an operation name, string arguments and input
/// expressions. Evaluating it is deterministic.
///
/// Operations and their arguments:
///   point [name]               interval                cube n
///   constants                  the theory {*, a, eta: id => a}
///   tensor X Y                 fibrewise X Y           cone +|- X
///   op dims X                  skeleton n X            rename "old -> new"... X
///   quotient "[name =] a ~ b ~ ..."... X
///   union X Y                  pointed name X          suspend k X
///   smash X Y...               wedge X Y...
///   pushout "left: s -> t"... "right: s -> t"... A X Y
struct Recipe {
  std::string op;
  std::vector<std::string> args;
  std::vector<Recipe> inputs;

  /// Single-line s-expression, e.g. (cone + (constants)).
  std::string to_string() const;

  friend bool operator==(const Recipe&, const Recipe&) = default;
};

struct Evaluated {
  Computad computad;
  std::optional<GenId> basepoint;
};

/// Throws Error "invalid-recipe" for unknown operations or bad arity, and
/// whatever the underlying operation throws.
Evaluated evaluate(const Recipe& recipe);

struct CatalogEntry {
  std::string name;
  Recipe recipe;
  Computad computad;
  std::optional<GenId> basepoint;
  std::optional<std::vector<std::size_t>> expected_counts;
  /// Set when the relation is the implementer's reading of prose.
  bool interpretive = false;
  std::string note;
};

const std::vector<std::string>& catalog_names();

/// Builds a named theory. With `reverse`, the result is additionally
/// op-reversed in those dimensions (the recipe records the step). Throws
/// Error "unknown-name" for unknown names and "catalog-check" when the result
/// fails validation or its expected counts.
CatalogEntry build(const std::string& name, const std::optional<DimSet>& reverse = {});

}  // namespace dtop
