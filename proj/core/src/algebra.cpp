#include "graphcx/algebra.hpp"

#include <algorithm>

#include "graphcx/errors.hpp"
#include "graphcx/testing.hpp"

namespace graphcx {

void TensorVector::add_term(const KeyTuple& tuple, long long coeff) {
    if (coeff == 0) return;
    auto it = terms.find(tuple);
    if (it == terms.end()) {
        terms.emplace(tuple, coeff);
    } else if ((it->second += coeff) == 0) {
        terms.erase(it);
    }
}

TensorVector& TensorVector::operator+=(const TensorVector& other) {
    if (arity != other.arity) throw input_error("tensor arity mismatch");
    for (const auto& [tuple, coeff] : other.terms) add_term(tuple, coeff);
    return *this;
}

TensorVector add(const TensorVector& a, const TensorVector& b) {
    TensorVector out = a;
    out += b;
    return out;
}

TensorVector scale(long long c, const TensorVector& a) {
    TensorVector out = TensorVector::zero(a.arity);
    if (c == 0) return out;
    for (const auto& [tuple, coeff] : a.terms) out.terms.emplace(tuple, c * coeff);
    return out;
}

void GraphVector::add_term(const CanonicalKey& key, long long coeff) {
    if (coeff == 0) return;
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, coeff);
    } else if ((it->second += coeff) == 0) {
        terms.erase(it);
    }
}

GraphVector to_graph_vector(const TensorVector& v) {
    if (v.arity != 1) throw input_error("expected an arity-1 vector");
    GraphVector out;
    for (const auto& [tuple, coeff] : v.terms) out.add_term(tuple[0], coeff);
    return out;
}

TensorVector tensor_term(std::span<const SignedGraph> factors) {
    TensorVector out = TensorVector::zero(static_cast<int>(factors.size()));
    KeyTuple tuple;
    tuple.reserve(factors.size());
    long long coeff = 1;
    for (const auto& f : factors) {
        if (f.is_zero()) return out;
        Canonical c = canonicalize(f.graph);
        if (c.is_zero()) return out;
        coeff *= f.sign * c.sign;
        tuple.push_back(std::move(c.key));
    }
    out.add_term(tuple, coeff);
    return out;
}

namespace {

// Sign of the shuffle sorting Z's labels into the slot blocks: parity of the
// number of label pairs (u, w) with u before w in the block order but u > w.
int shuffle_sign(const std::vector<std::vector<int>>& blocks) {
    std::vector<int> sequence;
    for (const auto& b : blocks) sequence.insert(sequence.end(), b.begin(), b.end());
    if (testing::mutations().drop_shuffle_sign) return 1;
    int sign = 1;
    for (size_t i = 0; i < sequence.size(); ++i)
        for (size_t j = i + 1; j < sequence.size(); ++j)
            if (sequence[i] > sequence[j]) sign = -sign;
    return sign;
}

MarkedSplit build_split(const OrientedGraph& z, const std::vector<std::vector<int>>& comps,
                        const std::vector<int>& assignment, int slots) {
    std::vector<std::vector<int>> blocks(static_cast<size_t>(slots));
    for (size_t c = 0; c < comps.size(); ++c) {
        auto& block = blocks[static_cast<size_t>(assignment[c])];
        block.insert(block.end(), comps[c].begin(), comps[c].end());
    }
    for (auto& block : blocks) std::sort(block.begin(), block.end());

    MarkedSplit split;
    split.sign = shuffle_sign(blocks);
    split.component_slot = assignment;
    std::vector<int> compress(static_cast<size_t>(z.vertex_count) + 1, 0);
    for (const auto& block : blocks) {
        OrientedGraph factor;
        factor.vertex_count = static_cast<int>(block.size());
        for (size_t i = 0; i < block.size(); ++i)
            compress[static_cast<size_t>(block[i])] = static_cast<int>(i) + 1;
        for (const auto& [s, t] : z.edges) {
            bool s_in = std::binary_search(block.begin(), block.end(), s);
            if (!s_in) continue;
            factor.edges.emplace_back(compress[static_cast<size_t>(s)],
                                      compress[static_cast<size_t>(t)]);
        }
        split.factors.push_back(std::move(factor));
    }
    return split;
}

} // namespace

std::vector<MarkedSplit> split_free(const OrientedGraph& z, const std::vector<int>& marks,
                                    int slots) {
    const auto comps = connected_components(z);
    std::vector<int> comp_of(static_cast<size_t>(z.vertex_count) + 1, -1);
    for (size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[static_cast<size_t>(v)] = static_cast<int>(c);

    std::vector<MarkedSplit> out;
    std::vector<int> assignment(comps.size(), 0);
    for (;;) {
        // every slot needs a marked vertex
        std::vector<bool> covered(static_cast<size_t>(slots), false);
        for (int mark : marks) covered[static_cast<size_t>(assignment[static_cast<size_t>(
            comp_of[static_cast<size_t>(mark)])])] = true;
        if (std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }))
            out.push_back(build_split(z, comps, assignment, slots));

        size_t i = 0;
        while (i < assignment.size() && ++assignment[i] == slots) assignment[i++] = 0;
        if (i == assignment.size()) break;
    }
    return out;
}

std::vector<MarkedSplit> split_prescribed(const OrientedGraph& z, const std::vector<int>& marks,
                                          const std::vector<std::vector<int>>& slot_marks) {
    const int slots = static_cast<int>(slot_marks.size());
    const auto comps = connected_components(z);
    std::vector<int> comp_of(static_cast<size_t>(z.vertex_count) + 1, -1);
    for (size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c]) comp_of[static_cast<size_t>(v)] = static_cast<int>(c);

    // marked components are forced to the slot of their marks
    std::vector<int> forced(comps.size(), -1);
    for (int slot = 0; slot < slots; ++slot) {
        for (int mark_index : slot_marks[static_cast<size_t>(slot)]) {
            int c = comp_of[static_cast<size_t>(marks[static_cast<size_t>(mark_index)])];
            if (forced[static_cast<size_t>(c)] != -1 && forced[static_cast<size_t>(c)] != slot)
                return {}; // marks of different slots share a component
            forced[static_cast<size_t>(c)] = slot;
        }
    }

    std::vector<size_t> free_comps;
    for (size_t c = 0; c < comps.size(); ++c)
        if (forced[c] < 0) free_comps.push_back(c);

    std::vector<MarkedSplit> out;
    std::vector<int> choice(free_comps.size(), 0);
    for (;;) {
        std::vector<int> assignment(forced);
        for (size_t i = 0; i < free_comps.size(); ++i) assignment[free_comps[i]] = choice[i];
        out.push_back(build_split(z, comps, assignment, slots));

        size_t i = 0;
        while (i < choice.size() && ++choice[i] == slots) choice[i++] = 0;
        if (i == choice.size()) break;
    }
    return out;
}

} // namespace graphcx
