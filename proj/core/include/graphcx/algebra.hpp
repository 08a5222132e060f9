#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "graphcx/canonical.hpp"
#include "graphcx/graph.hpp"

namespace graphcx {

using KeyTuple = std::vector<CanonicalKey>;

// Finitely supported integer combination of ordered tuples of canonical keys.
// No zero coefficients are stored; tuples are not reordered.
struct TensorVector {
    int arity = 1;
    std::map<KeyTuple, long long> terms;

    static TensorVector zero(int arity) { return {arity, {}}; }
    bool is_zero() const { return terms.empty(); }

    void add_term(const KeyTuple& tuple, long long coeff);
    TensorVector& operator+=(const TensorVector& other);
    friend bool operator==(const TensorVector&, const TensorVector&) = default;
};

TensorVector add(const TensorVector& a, const TensorVector& b);
TensorVector scale(long long c, const TensorVector& a);

// Arity-1 combinations keyed directly by canonical key.
struct GraphVector {
    std::map<CanonicalKey, long long> terms;

    bool is_zero() const { return terms.empty(); }
    void add_term(const CanonicalKey& key, long long coeff);
};

GraphVector to_graph_vector(const TensorVector& v); // requires arity 1

// Canonicalize each factor; any zero factor kills the term.  Coefficient is
// the product of the factor signs.
TensorVector tensor_term(std::span<const SignedGraph> factors);

// One way of writing Z as an ordered product of m factors: components of Z
// assigned to slots, with the sign of the block shuffle that sorts Z's
// labels into the slot blocks.
struct MarkedSplit {
    int sign = 1;
    std::vector<OrientedGraph> factors;
    std::vector<int> component_slot; // per component (0-based slot)
};

// Free mode: all assignments of components to slots such that every slot
// contains at least one marked vertex.  `marks` lists vertex labels of Z
// (repetitions allowed).
std::vector<MarkedSplit> split_free(const OrientedGraph& z, const std::vector<int>& marks,
                                    int slots);

// Prescribed mode: `slot_marks[i]` lists the indices into `marks` whose
// components slot i must contain, exactly.  Components without any mark are
// free.  If two marks in different groups share a component the result is
// empty.
std::vector<MarkedSplit> split_prescribed(const OrientedGraph& z, const std::vector<int>& marks,
                                          const std::vector<std::vector<int>>& slot_marks);

} // namespace graphcx
