#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dtop/computad.hpp"

namespace dtop {

/// One line "a ~ b ~ c" of a relation file, optionally named as
/// "name = a ~ b ~ c". The name becomes the name of the quotient class.
struct RelationGroup {
  std::optional<std::string> name;
  std::vector<std::string> members;
};

/// Blank lines and lines starting with '#' are skipped. Names are trimmed;
/// they may contain any character except '~' and line breaks, and '=' only
/// when a class name is given. Throws Error "parse-error" with the line.
std::vector<RelationGroup> parse_relation(std::string_view text);
std::string format_relation(const std::vector<RelationGroup>& groups);

GeneratorRelation relation_from_groups(const Computad& x,
                                       const std::vector<RelationGroup>& groups);

/// Quotient by the groups, then renames each named class.
QuotientResult quotient_by_groups(const Computad& x,
                                  const std::vector<RelationGroup>& groups,
                                  QuotientOptions options = {});

/// Lines "source -> target" covering every generator of the source.
ComputadMap parse_map(const Computad& source, const Computad& target,
                      std::string_view text);
std::string format_map(const Computad& source, const Computad& target,
                       const ComputadMap& f);

/// One generator name per line.
std::vector<GenId> parse_generator_list(const Computad& x, std::string_view text);

/// Comma-separated dimensions such as "1,2", or "all".
DimSet parse_dims(std::string_view text);

}  // namespace dtop
