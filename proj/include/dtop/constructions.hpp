#pragma once

#include <string>
#include <vector>

#include "dtop/computad.hpp"

namespace dtop {

struct PointedComputad {
  Computad computad;
  GenId basepoint;
};

/// Points at the 0-cell with the given name; throws when it is missing or
/// not a 0-cell.
PointedComputad pointed(Computad x, std::string_view basepoint);

Computad point(std::string name = "*");
/// 0 --a--> 1.
Computad interval();
/// One n-cell "top" and cells "k-", "k+" for k < n with borders k-, k+.
Computad globe(int n);
/// n-fold tensor power of the interval; cube(0) is the point.
Computad cube(int n);
/// I (x) X.
Computad cylinder(const Computad& x);
/// Future (+) or past (-) cone: the cylinder with the 1-end (resp. 0-end)
/// collapsed to a 0-cell named "1" (resp. "0").
QuotientResult cone_with_projection(const Computad& x, Sign end);
Computad cone(const Computad& x, Sign end);
/// n-fold future cone of the point.
Computad oriental(int n);
/// The single loop a: * -> *.
Computad circle();
/// Two points, pointed at "*".
PointedComputad two_points();

/// (I (x) X)/(I (x) {*}).
PointedComputad reduced_cylinder(const PointedComputad& x);

/// (X + Y)/({*X} + {*Y}).
PointedComputad wedge(const PointedComputad& x, const PointedComputad& y);
PointedComputad wedge(const std::vector<PointedComputad>& factors);

/// (X (x) Y)/(X v Y) where X v Y sits in the tensor as X (x) {*Y} and
/// {*X} (x) Y. The basepoint is named "*".
PointedComputad smash(const PointedComputad& x, const PointedComputad& y);
PointedComputad smash(const std::vector<PointedComputad>& factors);

/// k-fold smash with the circle.
PointedComputad suspension(const PointedComputad& x, int k = 1);

struct PushoutResult {
  PointedComputad computad;
  ComputadMap left;
  ComputadMap right;
};

/// Quotient of X + Y by f(s) ~ g(s) for s in A, together with the identified
/// basepoints. Glued generators keep the name of their X-side member.
/// Throws Error "invalid-map" when f or g is not a map, and
/// "incompatible-relation" when the induced relation is not compatible.
PushoutResult pushout(const Computad& a, const PointedComputad& x,
                      const PointedComputad& y, const ComputadMap& f,
                      const ComputadMap& g);

/// On I (x) X (x) Y: (0,s,t) ~ (0,s',t) and (1,s,t) ~ (1,s,t') for all
/// generators s, s' of X and t, t' of Y.
GeneratorRelation fibrewise_relation(const Computad& ixy, const Computad& x,
                                     const Computad& y);
/// (I (x) X (x) Y) divided by the fibrewise relation.
QuotientResult fibrewise_quotient(const Computad& x, const Computad& y);

/// Coarsest partition of generators by dimension such that related
/// generators have equal borders after transport along the partition. Only
/// proposes identifications; nothing is applied.
GeneratorRelation congruent_shape_proposal(const Computad& x);

/// Relation relating the generators named in each group.
GeneratorRelation relation_from_names(const Computad& x,
                                      const std::vector<std::vector<std::string>>& groups);

}  // namespace dtop
