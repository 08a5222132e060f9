#include "graphcx/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "graphcx/errors.hpp"
#include "graphcx/testing.hpp"

namespace graphcx {

int OrientedGraph::valency(int v) const {
    int count = 0;
    for (const auto& [s, t] : edges) {
        if (s == v) ++count;
        if (t == v) ++count;
    }
    return count;
}

bool OrientedGraph::has_loop() const {
    for (const auto& [s, t] : edges)
        if (s == t) return true;
    return false;
}

std::vector<HalfEdgeRef> OrientedGraph::half_edges() const {
    std::vector<HalfEdgeRef> out;
    out.reserve(edges.size() * 2);
    for (int e = 1; e <= edge_count(); ++e) {
        out.push_back({e, true});
        out.push_back({e, false});
    }
    return out;
}

int permutation_sign(const std::vector<int>& sigma) {
    int sign = 1;
    for (size_t i = 1; i < sigma.size(); ++i)
        for (size_t j = i + 1; j < sigma.size(); ++j)
            if (sigma[i] > sigma[j]) sign = -sign;
    return sign;
}

OrientedGraph make_graph(int vertex_count, std::vector<std::pair<int, int>> edges) {
    if (vertex_count < 1)
        throw input_error("graph must have at least one vertex");
    for (const auto& [s, t] : edges) {
        if (s < 1 || s > vertex_count || t < 1 || t > vertex_count)
            throw input_error("edge endpoint " + std::to_string(s < 1 || s > vertex_count ? s : t) +
                              " outside 1.." + std::to_string(vertex_count));
    }
    OrientedGraph g{vertex_count, std::move(edges)};
    for (int v = 1; v <= vertex_count; ++v) {
        if (g.valency(v) < 3)
            throw input_error("vertex " + std::to_string(v) + " has valency " +
                              std::to_string(g.valency(v)) + " < 3");
    }
    return g;
}

OrientedGraph product(const OrientedGraph& g1, const OrientedGraph& g2) {
    OrientedGraph out;
    out.vertex_count = g1.vertex_count + g2.vertex_count;
    out.edges = g1.edges;
    out.edges.reserve(g1.edges.size() + g2.edges.size());
    for (const auto& [s, t] : g2.edges)
        out.edges.emplace_back(s + g1.vertex_count, t + g1.vertex_count);
    return out;
}

SignedGraph relabel(const OrientedGraph& g, const std::vector<int>& sigma) {
    const size_t v = static_cast<size_t>(g.vertex_count);
    if (sigma.size() != v + 1)
        throw input_error("permutation has wrong size");
    std::vector<bool> seen(v + 1, false);
    for (size_t i = 1; i <= v; ++i) {
        if (sigma[i] < 1 || sigma[i] > g.vertex_count || seen[static_cast<size_t>(sigma[i])])
            throw input_error("not a permutation of 1..V");
        seen[static_cast<size_t>(sigma[i])] = true;
    }
    OrientedGraph out;
    out.vertex_count = g.vertex_count;
    out.edges.reserve(g.edges.size());
    for (const auto& [s, t] : g.edges)
        out.edges.emplace_back(sigma[static_cast<size_t>(s)], sigma[static_cast<size_t>(t)]);
    return {permutation_sign(sigma), std::move(out)};
}

SignedGraph reverse_edge(const OrientedGraph& g, int e) {
    if (e < 1 || e > g.edge_count())
        throw input_error("edge index out of range");
    OrientedGraph out = g;
    std::swap(out.edges[static_cast<size_t>(e) - 1].first,
              out.edges[static_cast<size_t>(e) - 1].second);
    return {-1, std::move(out)};
}

OpResult contract(const OrientedGraph& g, int e) {
    if (e < 1 || e > g.edge_count())
        throw input_error("edge index out of range");
    const int s = g.src(e), t = g.tgt(e);
    if (s == t)
        return {SignedGraph::zero(), {}};

    // sigma: s -> 1, t -> 2, remaining labels to 3..V keeping relative order.
    const size_t v = static_cast<size_t>(g.vertex_count);
    std::vector<int> sigma(v + 1, 0);
    sigma[static_cast<size_t>(s)] = 1;
    sigma[static_cast<size_t>(t)] = 2;
    int next = 3;
    for (int u = 1; u <= g.vertex_count; ++u)
        if (u != s && u != t) sigma[static_cast<size_t>(u)] = next++;
    int sign = permutation_sign(sigma);
    if (testing::mutations().drop_contract_sign) sign = 1;

    Provenance prov;
    prov.vertex_map.assign(v + 1, 0);
    for (int u = 1; u <= g.vertex_count; ++u) {
        const int nu = sigma[static_cast<size_t>(u)];
        prov.vertex_map[static_cast<size_t>(u)] = nu <= 2 ? 1 : nu - 1;
    }
    prov.merged_vertex = 1;
    prov.half_src.assign(g.edges.size(), std::nullopt);
    prov.half_tgt.assign(g.edges.size(), std::nullopt);

    OrientedGraph out;
    out.vertex_count = g.vertex_count - 1;
    out.edges.reserve(g.edges.size() - 1);
    int new_index = 0;
    for (int f = 1; f <= g.edge_count(); ++f) {
        if (f == e) continue;
        ++new_index;
        out.edges.emplace_back(prov.vertex_map[static_cast<size_t>(g.src(f))],
                               prov.vertex_map[static_cast<size_t>(g.tgt(f))]);
        prov.half_src[static_cast<size_t>(f) - 1] = HalfEdgeRef{new_index, true};
        prov.half_tgt[static_cast<size_t>(f) - 1] = HalfEdgeRef{new_index, false};
    }
    return {{sign, std::move(out)}, std::move(prov)};
}

OpResult splice(const OrientedGraph& g, HalfEdgeRef h1, HalfEdgeRef h2) {
    if (h1.edge == h2.edge)
        throw input_error("splice requires half-edges of distinct edges");
    if (g.is_loop(h1.edge) || g.is_loop(h2.edge))
        throw input_error("splice requires non-loop edges");

    int sign = 1;
    OrientedGraph work = g;
    auto normalize = [&](HalfEdgeRef h) {
        if (!h.at_src) {
            auto& ed = work.edges[static_cast<size_t>(h.edge) - 1];
            std::swap(ed.first, ed.second);
            sign = -sign;
        }
    };
    normalize(h1);
    normalize(h2);
    const int v1 = work.src(h1.edge), v1bar = work.tgt(h1.edge);
    const int v2 = work.src(h2.edge), v2bar = work.tgt(h2.edge);

    Provenance prov;
    prov.vertex_map.resize(static_cast<size_t>(g.vertex_count) + 1);
    std::iota(prov.vertex_map.begin(), prov.vertex_map.end(), 0);
    prov.half_src.assign(g.edges.size(), std::nullopt);
    prov.half_tgt.assign(g.edges.size(), std::nullopt);

    OrientedGraph out;
    out.vertex_count = g.vertex_count;
    out.edges.reserve(g.edges.size());
    int new_index = 0;
    for (int f = 1; f <= g.edge_count(); ++f) {
        if (f == h1.edge || f == h2.edge) continue;
        ++new_index;
        out.edges.push_back(work.edges[static_cast<size_t>(f) - 1]);
        prov.half_src[static_cast<size_t>(f) - 1] = HalfEdgeRef{new_index, true};
        prov.half_tgt[static_cast<size_t>(f) - 1] = HalfEdgeRef{new_index, false};
    }
    out.edges.emplace_back(v1, v2bar); // e1
    out.edges.emplace_back(v2, v1bar); // e2
    const int e1 = new_index + 1, e2 = new_index + 2;
    prov.fresh_halves = {{e1, true}, {e1, false}, {e2, true}, {e2, false}};
    return {{sign, std::move(out)}, std::move(prov)};
}

OpResult surgery(const OrientedGraph& g, HalfEdgeRef h1, HalfEdgeRef h2) {
    if (h1.edge == h2.edge)
        throw input_error("surgery requires half-edges of distinct edges");
    if (g.is_loop(h1.edge) || g.is_loop(h2.edge))
        return {SignedGraph::zero(), {}};
    if (g.vertex_of(h1) == g.vertex_of(bar(h2)))
        return {SignedGraph::zero(), {}}; // e1 would be a loop

    OpResult spliced = splice(g, h1, h2);
    const int e1 = spliced.value.graph.edge_count() - 1;
    OpResult contracted = contract(spliced.value.graph, e1);
    if (contracted.value.is_zero())
        return {SignedGraph::zero(), {}};

    Provenance prov = compose(spliced.prov, contracted.prov);
    // fresh halves of the surgery: the surviving images of e2's ends
    prov.fresh_halves.clear();
    for (size_t i = 2; i < 4; ++i) {
        auto img = contracted.prov.map_half(spliced.prov.fresh_halves[i]);
        prov.fresh_halves.push_back(*img);
    }
    prov.merged_vertex = contracted.prov.merged_vertex;
    return {{spliced.value.sign * contracted.value.sign, std::move(contracted.value.graph)},
            std::move(prov)};
}

Provenance compose(const Provenance& first, const Provenance& second) {
    Provenance out;
    out.vertex_map.assign(first.vertex_map.size(), 0);
    for (size_t v = 1; v < first.vertex_map.size(); ++v)
        out.vertex_map[v] = second.vertex_map[static_cast<size_t>(first.vertex_map[v])];
    out.half_src.assign(first.half_src.size(), std::nullopt);
    out.half_tgt.assign(first.half_tgt.size(), std::nullopt);
    auto chain = [&](const std::optional<HalfEdgeRef>& mid) -> std::optional<HalfEdgeRef> {
        if (!mid) return std::nullopt;
        return second.map_half(*mid);
    };
    for (size_t e = 0; e < first.half_src.size(); ++e) {
        out.half_src[e] = chain(first.half_src[e]);
        out.half_tgt[e] = chain(first.half_tgt[e]);
    }
    for (const auto& h : first.fresh_halves) {
        auto img = second.map_half(h);
        if (img) out.fresh_halves.push_back(*img);
    }
    if (first.merged_vertex)
        out.merged_vertex = second.vertex_map[static_cast<size_t>(*first.merged_vertex)];
    if (second.merged_vertex) out.merged_vertex = *second.merged_vertex;
    return out;
}

std::vector<std::vector<int>> connected_components(const OrientedGraph& g) {
    const size_t n = static_cast<size_t>(g.vertex_count);
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int> rep(n + 1);
    auto find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    };
    for (const auto& [s, t] : g.edges) {
        int a = find(s), b = find(t);
        if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }
    std::vector<std::vector<int>> comps;
    std::vector<int> comp_index(n + 1, -1);
    for (int v = 1; v <= g.vertex_count; ++v) {
        int r = find(v);
        if (comp_index[static_cast<size_t>(r)] < 0) {
            comp_index[static_cast<size_t>(r)] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[static_cast<size_t>(comp_index[static_cast<size_t>(r)])].push_back(v);
    }
    return comps;
}

bool is_connected(const OrientedGraph& g) {
    return connected_components(g).size() == 1;
}

bool is_one_pi(const OrientedGraph& g) {
    if (!is_connected(g)) return false;
    // an edge is a bridge iff removing that single edge instance disconnects;
    // loops and parallel copies never are
    for (int e = 1; e <= g.edge_count(); ++e) {
        if (g.is_loop(e)) continue;
        OrientedGraph cut = g;
        cut.edges.erase(cut.edges.begin() + (e - 1));
        if (!is_connected(cut)) return false;
    }
    return true;
}

} // namespace graphcx
