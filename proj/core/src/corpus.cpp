#include "graphcx/corpus.hpp"

#include <algorithm>
#include <set>

#include "graphcx/errors.hpp"
#include "graphcx/structure_maps.hpp"

namespace graphcx {

namespace {

// Backtracks over edge multiplicities on the vertex pairs in lex order,
// pruning when a vertex can no longer reach valency 3.
void generate(int v, int e, const std::vector<std::pair<int, int>>& pairs, size_t pair_index,
              std::vector<int>& mult, std::vector<int>& degree, int placed,
              const EnumerateFilters& filters, std::set<CanonicalKey>& keys) {
    if (pair_index == pairs.size()) {
        if (placed != e) return;
        for (int u = 1; u <= v; ++u)
            if (degree[static_cast<size_t>(u)] < 3) return;
        OrientedGraph g;
        g.vertex_count = v;
        for (size_t i = 0; i < pairs.size(); ++i)
            for (int k = 0; k < mult[i]; ++k) g.edges.push_back(pairs[i]);
        if (filters.connected && !is_connected(g)) return;
        if (filters.one_pi && !is_one_pi(g)) return;
        Canonical c = canonicalize(g);
        if (!c.is_zero()) keys.insert(c.key);
        return;
    }
    // prune: a vertex whose remaining pairs are exhausted must be done
    const auto& [a, b] = pairs[pair_index];
    for (int u = 1; u <= v; ++u) {
        if (degree[static_cast<size_t>(u)] >= 3) continue;
        bool reachable = false;
        for (size_t i = pair_index; i < pairs.size() && !reachable; ++i)
            reachable = pairs[i].first == u || pairs[i].second == u;
        if (!reachable) return;
    }
    const int room = e - placed;
    for (int k = 0; k <= room; ++k) {
        mult[pair_index] = k;
        degree[static_cast<size_t>(a)] += k;
        degree[static_cast<size_t>(b)] += k;
        generate(v, e, pairs, pair_index + 1, mult, degree, placed + k, filters, keys);
        degree[static_cast<size_t>(a)] -= k;
        degree[static_cast<size_t>(b)] -= k;
        mult[pair_index] = 0;
    }
}

} // namespace

Basis enumerate_graphs(int v, int e, EnumerateFilters filters) {
    if (v < 1 || e < 1) throw input_error("bidegree must be positive");
    Basis basis{{v, e}, {}};
    if (2 * e < 3 * v) return basis; // below the minimum-valency bound
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= v; ++a)
        for (int b = a + 1; b <= v; ++b) pairs.emplace_back(a, b);
    std::vector<int> mult(pairs.size(), 0), degree(static_cast<size_t>(v) + 1, 0);
    std::set<CanonicalKey> keys;
    generate(v, e, pairs, 0, mult, degree, 0, filters, keys);
    basis.keys.assign(keys.begin(), keys.end());
    return basis;
}

SparseIntMatrix differential_matrix(const Basis& from, const Basis& to) {
    SparseIntMatrix matrix;
    matrix.rows = static_cast<int>(to.size());
    matrix.cols = static_cast<int>(from.size());
    for (size_t j = 0; j < from.keys.size(); ++j) {
        GraphVector d = to_graph_vector(differential(decode_key(from.keys[j])));
        for (const auto& [key, coeff] : d.terms) {
            auto it = std::lower_bound(to.keys.begin(), to.keys.end(), key);
            if (it == to.keys.end() || *it != key)
                throw internal_error("differential term " + key.text +
                                     " missing from target basis (" +
                                     std::to_string(to.bidegree.v) + "," +
                                     std::to_string(to.bidegree.e) + ")");
            matrix.entries.emplace_back(static_cast<int>(it - to.keys.begin()),
                                        static_cast<int>(j), coeff);
        }
    }
    return matrix;
}

long long betti(int v, int e) {
    Basis here = enumerate_graphs(v, e);
    Basis out_target = enumerate_graphs(std::max(v - 1, 1), std::max(e - 1, 1));
    Basis in_source = enumerate_graphs(v + 1, e + 1);
    const long long dim = static_cast<long long>(here.size());
    const long long rank_out =
        (v > 1 && e > 1) ? exact_rank(differential_matrix(here, out_target)) : 0;
    const long long rank_in = exact_rank(differential_matrix(in_source, here));
    return dim - rank_out - rank_in;
}

} // namespace graphcx
