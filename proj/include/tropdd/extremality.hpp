#pragma once

// Extremality of a point of a cone { x | A x <= B x }.
//
// At a member g, each saturated row k (A_k g = B_k g, finite) yields the
// hyperedge argmax(B_k g) -> argmax(A_k g) over the coordinates in supp(g).
// g is extreme iff the components of that hypergraph have a least element;
// the members of that component are the types t for which g is minimal in
// { x in C | x_t = g_t }.

#include "tropdd/hypergraph.hpp"
#include "tropdd/semiring.hpp"

#include <vector>

namespace tropdd {

struct TangentData {
  IndexSet support;
  std::vector<std::size_t> saturated_rows;
  /// One hyperedge per saturated row, in coordinates of the original space.
  std::vector<Hyperedge> edges;
};

/// Throws std::invalid_argument if g is zero or not a member of sys.
TangentData tangent_data(const IneqSystem& sys, const TVector& g);

/// Hypergraph on supp(g), reindexed densely (node i is support[i]).
Hypergraph tangent_hypergraph(const IneqSystem& sys, const TVector& g);
Hypergraph tangent_hypergraph(const TangentData& data);

bool is_extreme(const IneqSystem& sys, const TVector& g);

/// Coordinates t (0-based) for which g is extreme of type t. Empty iff g is
/// not extreme.
IndexSet extreme_types(const IneqSystem& sys, const TVector& g);

}  // namespace tropdd
