#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

namespace graphcx {

// One end of an edge.  Edges are 1-based positions in the edge sequence;
// `at_src` selects the source end of the stored direction.
struct HalfEdgeRef {
    int edge = 0;
    bool at_src = true;

    friend auto operator<=>(const HalfEdgeRef&, const HalfEdgeRef&) = default;
};

inline HalfEdgeRef bar(HalfEdgeRef h) { return {h.edge, !h.at_src}; }

// A loop-permitting multigraph with vertices labeled 1..V and a direction on
// every edge.  The labeling plus the directions are the orientation data;
// the order of the edge sequence carries no sign.
struct OrientedGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges; // (src, tgt), labels 1-based

    int edge_count() const { return static_cast<int>(edges.size()); }
    int src(int e) const { return edges[static_cast<size_t>(e) - 1].first; }
    int tgt(int e) const { return edges[static_cast<size_t>(e) - 1].second; }
    bool is_loop(int e) const { return src(e) == tgt(e); }

    // v(h): the vertex this half-edge is attached to.
    int vertex_of(HalfEdgeRef h) const { return h.at_src ? src(h.edge) : tgt(h.edge); }

    int valency(int v) const;
    bool has_loop() const;
    std::vector<HalfEdgeRef> half_edges() const;

    friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;
};

// An oriented graph with a sign, or the zero class.  sign == 0 encodes zero;
// otherwise sign is +1 or -1 and the value represents sign * [graph].
struct SignedGraph {
    int sign = 0;
    OrientedGraph graph;

    static SignedGraph zero() { return {}; }
    bool is_zero() const { return sign == 0; }
};

// Tracks how vertices and half-edges of an operand survive into the result
// of a splice/contraction/surgery, which half-edges are freshly created, and
// the label of the merged vertex when a contraction happened.
struct Provenance {
    std::vector<int> vertex_map;                       // [1..V_old] -> new label
    std::vector<std::optional<HalfEdgeRef>> half_src;  // per old edge, image of src end
    std::vector<std::optional<HalfEdgeRef>> half_tgt;  // per old edge, image of tgt end
    std::vector<HalfEdgeRef> fresh_halves;             // result-graph addresses
    std::optional<int> merged_vertex;

    std::optional<HalfEdgeRef> map_half(HalfEdgeRef h) const {
        const auto& side = h.at_src ? half_src : half_tgt;
        return side[static_cast<size_t>(h.edge) - 1];
    }
    int map_vertex(int v) const { return vertex_map[static_cast<size_t>(v)]; }
};

// first followed by second; both maps composed, fresh halves of `first`
// followed through `second`.
Provenance compose(const Provenance& first, const Provenance& second);

// Validating constructor: labels in range, every vertex of valency >= 3.
OrientedGraph make_graph(int vertex_count, std::vector<std::pair<int, int>> edges);

// Disjoint union; labels of g2 shifted up by g1's vertex count.
OrientedGraph product(const OrientedGraph& g1, const OrientedGraph& g2);

// sigma is 1-based: sigma[v] = new label of v (sigma[0] ignored).
SignedGraph relabel(const OrientedGraph& g, const std::vector<int>& sigma);

SignedGraph reverse_edge(const OrientedGraph& g, int e);

struct OpResult {
    SignedGraph value;
    Provenance prov; // meaningful only when value is nonzero
};

// Contract edge e.  The merged vertex gets the label the source would get
// after moving (src,tgt) to (1,2) order-preservingly; contracting a loop
// gives zero.
OpResult contract(const OrientedGraph& g, int e);

// Replace e(h1), e(h2) by the crossed pair e1: v(h1)->v(bar h2) and
// e2: v(h2)->v(bar h1), appended in that order.  Directions are first
// normalized so v(h1), v(h2) are sources, one sign flip per reversal.
OpResult splice(const OrientedGraph& g, HalfEdgeRef h1, HalfEdgeRef h2);

// Splice then contract e1.  Zero when either input edge is a loop or when
// e1 would be one (v(h1) = v(bar h2)).  The fresh halves of e2 survive.
OpResult surgery(const OrientedGraph& g, HalfEdgeRef h1, HalfEdgeRef h2);

bool is_connected(const OrientedGraph& g);

// Connected and bridgeless (loops never count as bridges).
bool is_one_pi(const OrientedGraph& g);

// Sign of a permutation given as 1-based images; sigma[0] ignored.
int permutation_sign(const std::vector<int>& sigma);

std::vector<std::vector<int>> connected_components(const OrientedGraph& g);

} // namespace graphcx
