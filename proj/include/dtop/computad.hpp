#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dtop/cell.hpp"
#include "dtop/directed_complex.hpp"

namespace dtop {

/// A finite computad: generators graded by dimension, each generator of
/// dimension n > 0 attached along a pair of border cells of dimension at most
/// n - 1. Generator names are unique.
class Computad {
 public:
  GenId add_point(std::string name);

  /// Freely adjoins an n-cell with the given borders. Rejects dangling
  /// references, malformed border cells, globularity failures and
  /// non-unital atoms.
  GenId add_generator(std::string name, int dim, SteinerCell minus,
                      SteinerCell plus);

  /// Same as add_generator without the axiom checks. Loaders use it so that
  /// validate_computad can report located violations afterwards.
  GenId add_generator_unchecked(std::string name, int dim, SteinerCell minus,
                                SteinerCell plus);

  /// Highest dimension with a generator, -1 for the empty computad.
  int dim() const noexcept { return static_cast<int>(cells_.size()) - 1; }
  std::size_t count(int d) const noexcept;
  std::vector<std::size_t> counts() const;
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  const std::string& name(GenId id) const;
  std::optional<GenId> find(std::string_view name) const;
  /// Like find, throwing Error "unknown-name" when absent.
  GenId at(std::string_view name) const;
  bool contains(GenId id) const noexcept { return complex_.contains(id); }

  /// Border cell of a positive-dimensional generator.
  const SteinerCell& border(GenId id, Sign s) const;
  /// The cell represented by a generator, assembled from its borders.
  SteinerCell atom(GenId id) const;

  const DirectedComplex& complex() const noexcept { return complex_; }

  /// All generators, by dimension then index.
  std::vector<GenId> generators() const;

  friend bool operator==(const Computad& a, const Computad& b);

 private:
  struct Entry {
    std::string name;
    SteinerCell minus;
    SteinerCell plus;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  const Entry& entry(GenId id) const;
  GenId append(std::string name, int dim, SteinerCell minus, SteinerCell plus);

  std::vector<std::vector<Entry>> cells_;
  DirectedComplex complex_;
  std::unordered_map<std::string, GenId> by_name_;
};

/// "(1,0,1)"-style counts rendered as "0:1 1:0 2:1".
std::string format_counts(const std::vector<std::size_t>& counts);

/// "2*a + b" using generator names of x.
std::string format_chain(const Computad& x, const Chain& c);

/// Assignment of a generator of the source to a generator of the target of
/// equal or lower dimension. A generator sent to a lower-dimensional one
/// maps to the identity cell on it; this is how quotient projections
/// collapse cells.
struct ComputadMap {
  std::vector<std::vector<GenId>> image;

  GenId operator()(GenId id) const { return image.at(id.dim).at(id.index); }
  bool is_dimension_preserving() const;
  bool is_injective() const;

  friend bool operator==(const ComputadMap&, const ComputadMap&) = default;
};

ComputadMap identity_map(const Computad& x);
/// after o before.
ComputadMap compose(const ComputadMap& after, const ComputadMap& before);

/// Image of a cell under a map, levelwise; degenerate generators vanish.
SteinerCell transport(const ComputadMap& f, const SteinerCell& x);

/// First generator whose atom is not carried onto the atom of its image, or
/// nullopt when f is a valid map source -> target.
std::optional<std::string> map_defect(const Computad& source,
                                      const Computad& target,
                                      const ComputadMap& f);

/// A partition of the generators of a computad, held as a union-find.
class GeneratorRelation {
 public:
  explicit GeneratorRelation(const Computad& x);

  void relate(GenId a, GenId b);
  bool related(GenId a, GenId b) const;
  /// Classes ordered by their least member; members in generator order.
  std::vector<std::vector<GenId>> classes() const;
  bool is_identity() const;

 private:
  std::size_t flat(GenId id) const;
  std::size_t find(std::size_t i) const;

  std::vector<std::size_t> offset_;
  std::vector<std::size_t> counts_;
  mutable std::vector<std::size_t> parent_;
};

struct QuotientResult {
  Computad quotient;
  ComputadMap projection;
};

struct QuotientOptions {
  /// Merge classes forced by single-generator border disagreements instead
  /// of rejecting the relation.
  bool congruence_closure = false;
  /// Name a merged class "[a|b]" after its lowest-dimensional members;
  /// otherwise it takes the name of its first member.
  bool joined_names = true;
};

/// X/E. Each class becomes one generator of the least dimension among its
/// members; higher-dimensional members become identities on it. Throws Error
/// "incompatible-relation" naming the class, member, level and sign of the
/// first disagreement.
QuotientResult quotient_by_relation(const Computad& x, const GeneratorRelation& r,
                                    QuotientOptions options = {});

/// X/A for a subcomputad A (given by its generators). All of A becomes a
/// single 0-cell. It keeps the name of A's 0-cell when there is exactly one,
/// otherwise it is named `basepoint_name` (or "*", primed until unused).
QuotientResult collapse(const Computad& x, const std::vector<GenId>& sub,
                        std::optional<std::string> basepoint_name = std::nullopt);

struct Subcomputad {
  Computad computad;
  ComputadMap inclusion;
};

/// Smallest subcomputad containing every generator mentioned by the cells.
Subcomputad subcomputad_closure(const Computad& x,
                                const std::vector<SteinerCell>& cells);
/// Downward closure of a set of generators.
std::vector<GenId> generator_closure(const Computad& x, std::vector<GenId> gens);
/// The subcomputad on a downward-closed set of generators.
Subcomputad restrict_to(const Computad& x, const std::vector<GenId>& gens);

/// Coproduct. Names occurring on both sides are suffixed "/1" and "/2".
Computad disjoint_union(const Computad& x, const Computad& y);
std::pair<ComputadMap, ComputadMap> coproduct_injections(const Computad& x,
                                                         const Computad& y);

/// Set of dimensions for op_reverse; `all` stands for every dimension.
struct DimSet {
  bool all = false;
  std::set<int> dims;

  static DimSet everything() { return DimSet{true, {}}; }
  static DimSet of(std::initializer_list<int> ds) { return DimSet{false, ds}; }
  bool contains(int d) const { return all || dims.count(d) > 0; }
};

/// Reverses levels k of a cell with k + 1 in S.
SteinerCell op_cell(const SteinerCell& x, const DimSet& s);
/// X^op(S): n-cells and n-composition reversed for n in S. Names are kept.
Computad op_reverse(const Computad& x, const DimSet& s);

/// Renames generators; names absent from the table are kept.
Computad rename(const Computad& x,
                const std::unordered_map<std::string, std::string>& names);

/// n-skeleton: the subcomputad of generators of dimension <= n.
Computad skeleton(const Computad& x, int n);

struct Violation {
  std::string generator;
  std::string kind;  // border-cell, globularity, unitality, boundary-squared, augmentation
  int level = -1;
  std::optional<Sign> sign;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  /// Whether every atom is also recovered by the sign-split recursion of the
  /// underlying directed complex. Informational: looped presentations such
  /// as monoids are valid computads without this property.
  bool loop_free_unital = true;

  bool ok() const { return violations.empty(); }
};

ValidationReport validate_computad(const Computad& x);

}  // namespace dtop
