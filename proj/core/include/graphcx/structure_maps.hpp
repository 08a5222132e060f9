#pragma once

#include <vector>

#include "graphcx/algebra.hpp"
#include "graphcx/graph.hpp"

namespace graphcx {

// An ordered tuple of input graphs together with their product and the
// factor-of map on the product's edges.
struct AlphaInput {
    std::vector<OrientedGraph> factors;
    OrientedGraph prod;
    std::vector<int> factor_of_edge; // 1-based edge index -> 0-based factor

    explicit AlphaInput(std::vector<OrientedGraph> factor_list);
    int n() const { return static_cast<int>(factors.size()); }
    int factor_of(HalfEdgeRef h) const {
        return factor_of_edge[static_cast<size_t>(h.edge) - 1];
    }
};

// The structure map G^(x)n -> G^(x)m: zero for m > 2 or n > 2, otherwise the
// sum over ordered half-edge pairs hitting every factor of the surgery on
// the product, split across m slots with the merged vertex and the fresh
// edge's source vertex as marks.
TensorVector alpha(int m, const AlphaInput& input);

TensorVector differential(const OrientedGraph& x);                      // (1,1)
TensorVector bracket(const OrientedGraph& x, const OrientedGraph& y);   // (1,2)
TensorVector cobracket(const OrientedGraph& x);                         // (2,1)
TensorVector alpha22(const OrientedGraph& x, const OrientedGraph& y);   // (2,2)

} // namespace graphcx
