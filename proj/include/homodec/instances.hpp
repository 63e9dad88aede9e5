#pragma once

#include "homodec/graph.hpp"
#include "homodec/relation.hpp"

namespace homodec {

// H(x|yz) holds when x sees y and z the same way: both neighbors or both
// non-neighbors. Homogeneous sets are exactly the modules of g.
Relation from_undirected(const Graph &g);

// Classes of H_x are determined by the arc pair (x->y present?, y->x
// present?): at most four classes per element.
Relation from_directed(const Graph &g);

// Classes of H_x are the color classes of the edges at x. Symmetric by
// default (every unordered pair carries one color); with ordered=true the
// class of y at x is the ordered color pair (xy, yx) and every ordered pair
// must be colored — the directed-2-structure variant.
Relation from_two_structure(const Graph &g, bool ordered = false);

// D_k: classes of H_s are {x : d(s,x) <= k} and {x : d(s,x) > k}, with
// unreachable vertices at infinite distance. k=1 coincides with
// from_undirected.
Relation distance_k_relation(const Graph &g, int k);

enum class AvoidMode { vertex, neighborhood };

// H(s|xy) when some path joins x and y avoiding s (vertex mode) or avoiding
// the closed neighborhood of s (neighborhood mode). Classes of H_s are the
// connected components of the punctured graph; in neighborhood mode the
// vertices of N(s) form singleton classes, since no avoiding path reaches
// them.
Relation path_avoiding_relation(const Graph &g, AvoidMode mode);

} // namespace homodec
