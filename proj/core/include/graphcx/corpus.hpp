#pragma once

#include <vector>

#include "graphcx/algebra.hpp"
#include "graphcx/canonical.hpp"

namespace graphcx {

struct Bidegree {
    int v = 0, e = 0;

    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

// Ordered list of the nonzero classes at a bidegree; keys sorted.
struct Basis {
    Bidegree bidegree;
    std::vector<CanonicalKey> keys;

    std::size_t size() const { return keys.size(); }
};

struct EnumerateFilters {
    bool connected = false;
    bool one_pi = false;
};

// All loop-free multigraphs on V labeled vertices with E edges and minimum
// valency 3, deduplicated and zero-filtered through the canonical form.
Basis enumerate_graphs(int v, int e, EnumerateFilters filters = {});

struct SparseIntMatrix {
    int rows = 0, cols = 0;
    std::vector<std::tuple<int, int, long long>> entries; // (row, col, value)
};

// Matrix of the differential from one bidegree to (V-1, E-1): column j holds
// the coordinates of differential(basis_j) in the target basis.  A term
// whose key is missing from the target basis is a hard failure.
SparseIntMatrix differential_matrix(const Basis& from, const Basis& to);

// Exact rank over the rationals (fraction-free elimination).
long long exact_rank(const SparseIntMatrix& matrix);

// dim ker(out-differential) - rank(in-differential) at the bidegree.
long long betti(int v, int e);

} // namespace graphcx
