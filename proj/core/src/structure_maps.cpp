#include "graphcx/structure_maps.hpp"

#include "graphcx/errors.hpp"

namespace graphcx {

AlphaInput::AlphaInput(std::vector<OrientedGraph> factor_list) : factors(std::move(factor_list)) {
    if (factors.empty()) throw input_error("need at least one input graph");
    prod = factors[0];
    factor_of_edge.assign(factors[0].edges.size(), 0);
    for (size_t i = 1; i < factors.size(); ++i) {
        prod = product(prod, factors[i]);
        factor_of_edge.insert(factor_of_edge.end(), factors[i].edges.size(),
                              static_cast<int>(i));
    }
}

TensorVector alpha(int m, const AlphaInput& input) {
    const int n = input.n();
    if (m < 1) throw input_error("m must be positive");
    TensorVector out = TensorVector::zero(m);
    if (m > 2 || n > 2) return out;

    const auto halves = input.prod.half_edges();
    for (const auto& h1 : halves) {
        for (const auto& h2 : halves) {
            if (h1.edge == h2.edge) continue;
            // every factor must contain h1 or h2
            if (n == 2 && input.factor_of(h1) == input.factor_of(h2)) continue;

            OpResult cut = surgery(input.prod, h1, h2);
            if (cut.value.is_zero()) continue;

            const int mark_merged = *cut.prov.merged_vertex;
            const int mark_fresh = cut.value.graph.vertex_of(cut.prov.fresh_halves[0]);
            const auto splits =
                split_free(cut.value.graph, {mark_merged, mark_fresh}, m);
            for (const auto& split : splits) {
                std::vector<SignedGraph> signed_factors;
                signed_factors.reserve(split.factors.size());
                for (const auto& f : split.factors) signed_factors.push_back({1, f});
                out += scale(cut.value.sign * split.sign, tensor_term(signed_factors));
            }
        }
    }
    return out;
}

TensorVector differential(const OrientedGraph& x) { return alpha(1, AlphaInput({x})); }

TensorVector bracket(const OrientedGraph& x, const OrientedGraph& y) {
    return alpha(1, AlphaInput({x, y}));
}

TensorVector cobracket(const OrientedGraph& x) { return alpha(2, AlphaInput({x})); }

TensorVector alpha22(const OrientedGraph& x, const OrientedGraph& y) {
    return alpha(2, AlphaInput({x, y}));
}

} // namespace graphcx
