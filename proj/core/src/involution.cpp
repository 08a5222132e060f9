#include "graphcx/involution.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "graphcx/errors.hpp"
#include "graphcx/testing.hpp"

namespace graphcx {

P1Half bar(const P1Half& h) {
    switch (h.origin) {
    case P1Half::Origin::old_half: return P1Half::old_of(bar(h.old_ref));
    case P1Half::Origin::fresh: return P1Half::fresh_bar();
    default: return P1Half::fresh();
    }
}

namespace {

using testing::mutations;

constexpr std::uint8_t kFirstPairBits = 0b0011;  // mark indices 1,2
constexpr std::uint8_t kSecondPairBits = 0b1100; // mark indices 3,4

// Ordered partitions of {1,2,3,4} into m nonempty parts, as bitmask vectors.
const std::vector<std::vector<std::uint8_t>>& u_partitions(int m) {
    static std::vector<std::vector<std::vector<std::uint8_t>>> tables = [] {
        std::vector<std::vector<std::vector<std::uint8_t>>> all(4);
        for (int parts = 1; parts <= 3; ++parts) {
            std::array<int, 4> slot{};
            for (;;) {
                std::vector<std::uint8_t> masks(static_cast<size_t>(parts), 0);
                for (int j = 0; j < 4; ++j)
                    masks[static_cast<size_t>(slot[static_cast<size_t>(j)])] |=
                        static_cast<std::uint8_t>(1u << j);
                if (std::all_of(masks.begin(), masks.end(),
                                [](std::uint8_t b) { return b != 0; }))
                    all[static_cast<size_t>(parts)].push_back(std::move(masks));
                int i = 3;
                while (i >= 0 && ++slot[static_cast<size_t>(i)] == parts)
                    slot[static_cast<size_t>(i--)] = 0;
                if (i < 0) break;
            }
        }
        return all;
    }();
    return tables[static_cast<size_t>(m)];
}

bool condition_ok(bool holds, unsigned bullet, unsigned skip) {
    return holds || (skip & bullet) != 0;
}

// Stage one of a composite surgery: the once-surgered product together with
// the tag classification of its half-edges.
struct FirstStage {
    SignedGraph p1;
    Provenance prov1;
    std::vector<P1Half> tag_of_half; // indexed by 2*(edge-1) + (at_src ? 0 : 1)

    const P1Half& tag(HalfEdgeRef h) const {
        return tag_of_half[static_cast<size_t>(2 * (h.edge - 1) + (h.at_src ? 0 : 1))];
    }
};

struct QuadFactory {
    const AlphaInput& input;
    int n;
    unsigned skip = 0;

    std::optional<FirstStage> first_stage(HalfEdgeRef h1, HalfEdgeRef h2) const {
        const OrientedGraph& p = input.prod;
        if (!condition_ok(h1.edge != h2.edge, testing::fc_distinct_first_pair, skip))
            return std::nullopt;
        if (h1.edge == h2.edge) return std::nullopt; // unbuildable even when admitted
        const bool e1_loop = p.vertex_of(h1) == p.vertex_of(bar(h2));
        const bool e2_loop = p.vertex_of(h2) == p.vertex_of(bar(h1));
        if (!condition_ok(!e1_loop && !e2_loop, testing::fc_crossed_nonloop, skip))
            return std::nullopt;
        OpResult r = surgery(p, h1, h2);
        if (r.value.is_zero()) return std::nullopt;

        FirstStage stage;
        stage.p1 = std::move(r.value);
        stage.prov1 = std::move(r.prov);
        stage.tag_of_half.assign(stage.p1.graph.edges.size() * 2, P1Half{});
        auto put = [&](HalfEdgeRef in_p1, P1Half tag) {
            stage.tag_of_half[static_cast<size_t>(2 * (in_p1.edge - 1) +
                                                  (in_p1.at_src ? 0 : 1))] = tag;
        };
        for (int e = 1; e <= p.edge_count(); ++e) {
            for (bool at_src : {true, false}) {
                HalfEdgeRef h{e, at_src};
                if (auto img = stage.prov1.map_half(h)) put(*img, P1Half::old_of(h));
            }
        }
        put(stage.prov1.fresh_halves[0], P1Half::fresh());
        put(stage.prov1.fresh_halves[1], P1Half::fresh_bar());
        return stage;
    }

    std::optional<HalfEdgeRef> resolve(const FirstStage& stage, const P1Half& tag) const {
        switch (tag.origin) {
        case P1Half::Origin::fresh: return stage.prov1.fresh_halves[0];
        case P1Half::Origin::fresh_bar: return stage.prov1.fresh_halves[1];
        default: return stage.prov1.map_half(tag.old_ref);
        }
    }

    int attribution(HalfEdgeRef h1, HalfEdgeRef h2, const P1Half& tag) const {
        switch (tag.origin) {
        case P1Half::Origin::fresh: return input.factor_of(h2);
        case P1Half::Origin::fresh_bar: return input.factor_of(h1);
        default: return input.factor_of(tag.old_ref);
        }
    }

    std::optional<FQuad> second_stage(HalfEdgeRef h1, HalfEdgeRef h2, const FirstStage& stage,
                                      HalfEdgeRef r3, HalfEdgeRef r4) const {
        const OrientedGraph& g1 = stage.p1.graph;
        const P1Half t3 = stage.tag(r3), t4 = stage.tag(r4);
        if (!condition_ok(r3.edge != r4.edge, testing::fc_distinct_second_pair, skip))
            return std::nullopt;
        const bool pair_loops = g1.is_loop(r3.edge) || g1.is_loop(r4.edge);
        if (!condition_ok(!pair_loops, testing::fc_second_pair_nonloop, skip))
            return std::nullopt;
        bool crossed_loop = false;
        if (r3.edge != r4.edge && !pair_loops) {
            crossed_loop = g1.vertex_of(r3) == g1.vertex_of(bar(r4)) ||
                           g1.vertex_of(r4) == g1.vertex_of(bar(r3));
        }
        if (!condition_ok(!crossed_loop, testing::fc_second_crossed_nonloop, skip))
            return std::nullopt;

        FQuad q;
        q.h1 = h1;
        q.h2 = h2;
        q.h3 = t3;
        q.h4 = t4;
        q.h3_in_p1 = r3;
        q.h4_in_p1 = r4;
        q.p1 = stage.p1;
        q.prov1 = stage.prov1;

        q.s_parts.assign(static_cast<size_t>(n), 0);
        const std::array<int, 4> attr = {input.factor_of(h1), input.factor_of(h2),
                                         attribution(h1, h2, t3), attribution(h1, h2, t4)};
        for (int j = 0; j < 4; ++j)
            q.s_parts[static_cast<size_t>(attr[static_cast<size_t>(j)])] |=
                static_cast<std::uint8_t>(1u << j);
        const bool s_nonempty =
            std::all_of(q.s_parts.begin(), q.s_parts.end(),
                        [](std::uint8_t b) { return b != 0; });
        if (!condition_ok(s_nonempty, testing::fc_s_nonempty, skip)) return std::nullopt;
        const bool s_mixed = std::any_of(q.s_parts.begin(), q.s_parts.end(),
                                         [](std::uint8_t b) {
                                             return (b & kFirstPairBits) &&
                                                    (b & kSecondPairBits);
                                         });
        if (!condition_ok(s_mixed, testing::fc_s_mixed, skip)) return std::nullopt;

        if (r3.edge == r4.edge || pair_loops) {
            q.p2 = SignedGraph::zero(); // admitted only under a skipped condition
            return q;
        }
        OpResult r = surgery(g1, r3, r4);
        if (r.value.is_zero()) {
            q.p2 = SignedGraph::zero();
            return q;
        }
        q.p2 = {stage.p1.sign * r.value.sign, std::move(r.value.graph)};
        q.prov2 = std::move(r.prov);
        q.marks[0] = q.prov2.vertex_map[static_cast<size_t>(*stage.prov1.merged_vertex)];
        q.marks[1] = q.prov2.vertex_map[static_cast<size_t>(
            g1.vertex_of(stage.prov1.fresh_halves[0]))];
        q.marks[2] = *q.prov2.merged_vertex;
        q.marks[3] = q.p2.graph.vertex_of(q.prov2.fresh_halves[0]);

        const auto comps = connected_components(q.p2.graph);
        std::vector<int> comp_of(static_cast<size_t>(q.p2.graph.vertex_count) + 1, 0);
        for (size_t c = 0; c < comps.size(); ++c)
            for (int v : comps[c]) comp_of[static_cast<size_t>(v)] = static_cast<int>(c);
        for (int j = 0; j < 4; ++j)
            q.mark_comp[static_cast<size_t>(j)] =
                comp_of[static_cast<size_t>(q.marks[static_cast<size_t>(j)])];
        return q;
    }

    std::optional<FQuad> build(HalfEdgeRef h1, HalfEdgeRef h2, const P1Half& t3,
                               const P1Half& t4) const {
        auto stage = first_stage(h1, h2);
        if (!stage) return std::nullopt;
        auto r3 = resolve(*stage, t3);
        auto r4 = resolve(*stage, t4);
        if (!r3 || !r4) return std::nullopt;
        return second_stage(h1, h2, *stage, *r3, *r4);
    }

    bool u_ok(const FQuad& q, const std::vector<std::uint8_t>& u_parts) const {
        std::uint8_t seen = 0;
        for (std::uint8_t part : u_parts) {
            if (part == 0 || (seen & part)) return false;
            seen |= part;
        }
        if (seen != 0b1111) return false;
        const bool mixed = std::any_of(u_parts.begin(), u_parts.end(), [](std::uint8_t b) {
            return (b & kSecondPairBits) && (b & kFirstPairBits);
        });
        if (!condition_ok(mixed, testing::fc_u_mixed, skip)) return false;
        bool closed = true;
        for (int j = 0; j < 4 && closed; ++j)
            for (int k = j + 1; k < 4 && closed; ++k) {
                if (q.mark_comp[static_cast<size_t>(j)] != q.mark_comp[static_cast<size_t>(k)])
                    continue;
                for (std::uint8_t part : u_parts)
                    if (bool(part & (1u << j)) != bool(part & (1u << k))) closed = false;
            }
        if (!condition_ok(closed, testing::fc_u_component_closed, skip)) return false;
        return true;
    }
};

// Walks all composite-surgery data (m-independent) in canonical order.
template <class Fn>
void enumerate_quads(int n, const AlphaInput& input, const QuadFactory& factory, Fn&& emit) {
    if (n < 1 || n > 3) throw input_error("family is defined for m, n <= 3");
    if (input.prod.has_loop()) throw input_error("inputs must be loop-free");
    const auto halves = input.prod.half_edges();
    for (const auto& h1 : halves) {
        for (const auto& h2 : halves) {
            auto stage = factory.first_stage(h1, h2);
            if (!stage) continue;
            const auto p1_halves = stage->p1.graph.half_edges();
            for (const auto& r3 : p1_halves) {
                for (const auto& r4 : p1_halves) {
                    auto quad = factory.second_stage(h1, h2, *stage, r3, r4);
                    if (quad) emit(*quad);
                }
            }
        }
    }
}

// Walks the whole family in canonical order.  emit(quad, u, first_u_of_quad).
template <class Fn>
void enumerate_family(int m, int n, const AlphaInput& input, unsigned skip, Fn&& emit) {
    if (m < 1 || m > 3) throw input_error("family is defined for m, n <= 3");
    QuadFactory factory{input, n, skip};
    const auto& partitions = u_partitions(m);
    enumerate_quads(n, input, factory, [&](const FQuad& quad) {
        bool first = true;
        for (const auto& u : partitions) {
            if (!factory.u_ok(quad, u)) continue;
            emit(quad, u, first);
            first = false;
        }
    });
}

TensorVector term_from(const FQuad& q, const std::vector<std::uint8_t>& u_parts, int m) {
    TensorVector out = TensorVector::zero(m);
    if (q.p2.is_zero()) return out;
    const std::vector<int> marks(q.marks.begin(), q.marks.end());
    std::vector<std::vector<int>> slot_marks(u_parts.size());
    for (size_t i = 0; i < u_parts.size(); ++i)
        for (int j = 0; j < 4; ++j)
            if (u_parts[i] & (1u << j)) slot_marks[i].push_back(j);
    for (const auto& split : split_prescribed(q.p2.graph, marks, slot_marks)) {
        std::vector<SignedGraph> factors;
        factors.reserve(split.factors.size());
        for (const auto& f : split.factors) factors.push_back({1, f});
        out += scale(q.p2.sign * split.sign, tensor_term(factors));
    }
    return out;
}

struct MuOut {
    HalfEdgeRef h1, h2;
    P1Half h3, h4;
    std::array<int, 4> xi;
};

constexpr std::array<int, 4> kXiId = {1, 2, 3, 4};

// The partner rewrite tables.  Vertex tests are evaluated in the product,
// with h3/h4 read through their preimages.  Within a case the rows are
// tried in order; the last row is the default.
MuOut mu_rewrite(const OrientedGraph& p, HalfEdgeRef h1, HalfEdgeRef h2, const P1Half& t3,
               const P1Half& t4) {
    const auto v = [&](HalfEdgeRef h) { return p.vertex_of(h); };
    const auto old3 = t3.old_ref, old4 = t4.old_ref;

    if (t3.origin == P1Half::Origin::fresh) { // second pair starts on the fresh edge
        const bool a = v(h1) == v(h2);
        const bool b = v(bar(h1)) == v(bar(old4));
        const bool c = v(bar(h2)) == v(old4);
        if (a && b) return {h1, old4, P1Half::old_of(bar(h2)), P1Half::fresh(), kXiId};
        if (c && a) return {bar(old4), h2, P1Half::old_of(h1), P1Half::fresh(), kXiId};
        if (c && b)
            return {bar(h1), bar(h2), P1Half::old_of(old4), P1Half::fresh(), kXiId};
        if (c) return {old4, bar(h1), P1Half::old_of(h2), P1Half::fresh(), {1, 1, 3, 4}};
        return {h2, old4, P1Half::old_of(h1), P1Half::fresh(), {2, 4, 1, 4}};
    }
    if (t4.origin == P1Half::Origin::fresh) { // second pair ends on the fresh edge
        const bool a = v(h2) == v(old3);
        const bool b = v(bar(h2)) == v(bar(h1));
        const bool c = v(bar(old3)) == v(h1);
        if (a && b) return {old3, h2, P1Half::fresh(), P1Half::old_of(bar(h1)), kXiId};
        if (c && b) return {h1, bar(old3), P1Half::fresh(), P1Half::old_of(h2), kXiId};
        if (c && a)
            return {bar(h1), bar(h2), P1Half::fresh(), P1Half::old_of(old3), kXiId};
        if (c) return {bar(h2), old3, P1Half::fresh(), P1Half::old_of(h1), {1, 3, 3, 4}};
        return {old3, h1, P1Half::fresh(), P1Half::old_of(h2), {3, 1, 1, 2}};
    }
    if (t3.origin == P1Half::Origin::fresh_bar) { // reduce by reversing the second pair
        MuOut inner = mu_rewrite(p, h1, h2, P1Half::old_of(bar(old4)), P1Half::fresh());
        return {inner.h1, inner.h2, bar(inner.h4), bar(inner.h3), inner.xi};
    }
    if (t4.origin == P1Half::Origin::fresh_bar) {
        MuOut inner = mu_rewrite(p, h1, h2, P1Half::fresh(), P1Half::old_of(bar(old3)));
        return {inner.h1, inner.h2, bar(inner.h4), bar(inner.h3), inner.xi};
    }

    // both halves of the second pair are original
    const auto endpoints_match = [&](HalfEdgeRef h) {
        const int x = v(old3), y = v(bar(old4));
        return (v(h) == x && v(bar(h)) == y) || (v(h) == y && v(bar(h)) == x);
    };
    if (endpoints_match(h1)) return {bar(h1), h2, t3, t4, kXiId};
    if (endpoints_match(h2)) return {h1, bar(h2), t3, t4, kXiId};
    return {old3, old4, P1Half::old_of(h1), P1Half::old_of(h2), {3, 4, 1, 2}};
}

std::vector<std::uint8_t> apply_xi(const std::array<int, 4>& xi,
                                   const std::vector<std::uint8_t>& u_parts) {
    std::vector<std::uint8_t> out(u_parts.size(), 0);
    for (size_t i = 0; i < u_parts.size(); ++i)
        for (int j = 0; j < 4; ++j)
            if (u_parts[i] & (1u << (xi[static_cast<size_t>(j)] - 1)))
                out[i] |= static_cast<std::uint8_t>(1u << j);
    return out;
}

std::string render_half(HalfEdgeRef h) {
    return "e" + std::to_string(h.edge) + (h.at_src ? ".s" : ".t");
}

std::string render_tag(const P1Half& t) {
    switch (t.origin) {
    case P1Half::Origin::fresh: return "fresh";
    case P1Half::Origin::fresh_bar: return "fresh_bar";
    default: return render_half(t.old_ref);
    }
}

} // namespace

FSet::FSet(int m, int n, AlphaInput input) : m_(m), n_(n), input_(std::move(input)) {
    if (n_ != input_.n()) throw input_error("input arity does not match n");
    enumerate_family(m_, n_, input_, mutations().skip_f_conditions,
                     [&](const FQuad& q, const std::vector<std::uint8_t>& u, bool first) {
                         if (first) {
                             quad_index_.emplace(q.key(), static_cast<int>(quads_.size()));
                             quads_.push_back(q);
                         }
                         FElement f{static_cast<int>(quads_.size()) - 1, u};
                         element_index_.emplace(std::make_pair(f.quad, f.u_parts),
                                                static_cast<int>(elements_.size()));
                         elements_.push_back(std::move(f));
                     });
}

TensorVector FSet::term(const FElement& f) const {
    return term_from(quad_of(f), f.u_parts, m_);
}

Flowchart FSet::flowchart_of(const FElement& f) const {
    const FQuad& q = quad_of(f);
    Flowchart t;
    t.n = n_;
    t.m = m_;
    for (int i = 0; i < n_; ++i)
        if (q.s_parts[static_cast<size_t>(i)] & kFirstPairBits)
            t.inputs_to_s |= 1u << i;
    for (int i = 0; i < m_; ++i)
        if (f.u_parts[static_cast<size_t>(i)] & kSecondPairBits)
            t.outputs_from_t |= 1u << i;
    return t;
}

std::optional<std::size_t> FSet::index_of(const FElement& f) const {
    auto it = element_index_.find(std::make_pair(f.quad, f.u_parts));
    if (it == element_index_.end()) return std::nullopt;
    return static_cast<std::size_t>(it->second);
}

std::optional<FElement> FSet::mu_raw(const FElement& f) const {
    const FQuad& q = quad_of(f);
    if (q.h3.origin != P1Half::Origin::old_half && q.h4.origin != P1Half::Origin::old_half)
        return std::nullopt; // both halves on the fresh edge: degenerate datum
    MuOut out = mu_rewrite(input_.prod, q.h1, q.h2, q.h3, q.h4);
    auto qit = quad_index_.find(std::make_tuple(out.h1, out.h2, out.h3, out.h4));
    if (qit == quad_index_.end()) return std::nullopt;
    auto eit = element_index_.find(std::make_pair(qit->second, apply_xi(out.xi, f.u_parts)));
    if (eit == element_index_.end()) return std::nullopt;
    return elements_[static_cast<size_t>(eit->second)];
}

FElement FSet::mu(const FElement& f) const {
    if (auto g = mu_raw(f)) {
        if (auto back = mu_raw(*g); back && *back == f) return *g;
    }
    return f;
}

std::string FSet::describe(const FElement& f) const {
    const FQuad& q = quad_of(f);
    std::string out = "h1=" + render_half(q.h1) + " h2=" + render_half(q.h2) +
                      " h3=" + render_tag(q.h3) + " h4=" + render_tag(q.h4) + " U=";
    for (size_t i = 0; i < f.u_parts.size(); ++i) {
        out += i == 0 ? "{" : "|{";
        bool comma = false;
        for (int j = 0; j < 4; ++j) {
            if (!(f.u_parts[i] & (1u << j))) continue;
            if (comma) out += ',';
            out += std::to_string(j + 1);
            comma = true;
        }
        out += '}';
    }
    return out;
}

bool FSet::audit_member(const FElement& f) const {
    const FQuad& q = quad_of(f);
    QuadFactory clean{input_, n_, 0};
    auto rebuilt = clean.build(q.h1, q.h2, q.h3, q.h4);
    if (!rebuilt) return false;
    return clean.u_ok(*rebuilt, f.u_parts);
}

TensorVector sum_of_terms(int m, int n, const AlphaInput& input) {
    TensorVector out = TensorVector::zero(m);
    enumerate_family(m, n, input, mutations().skip_f_conditions,
                     [&](const FQuad& q, const std::vector<std::uint8_t>& u, bool) {
                         out += term_from(q, u, m);
                     });
    return out;
}

std::array<TensorVector, 3> residuals_up_to_three(int n, const AlphaInput& input) {
    std::array<TensorVector, 3> out = {TensorVector::zero(1), TensorVector::zero(2),
                                       TensorVector::zero(3)};
    QuadFactory factory{input, n, mutations().skip_f_conditions};
    enumerate_quads(n, input, factory, [&](const FQuad& quad) {
        for (int m = 1; m <= 3; ++m) {
            for (const auto& u : u_partitions(m)) {
                if (!factory.u_ok(quad, u)) continue;
                out[static_cast<size_t>(m - 1)] += term_from(quad, u, m);
            }
        }
    });
    return out;
}

TensorVector compose_along(const Flowchart& t, const FSet& f) {
    TensorVector out = TensorVector::zero(f.m());
    if (!t.small_arities()) return out; // a corolla of arity > 2 carries the zero map
    for (const auto& el : f.elements())
        if (f.flowchart_of(el) == t) out += f.term(el);
    return out;
}

PairingCertificate verify_pairing(int m, int n, const AlphaInput& input) {
    FSet fs(m, n, input);
    PairingCertificate cert;
    cert.m = m;
    cert.n = n;
    cert.family_size = fs.elements().size();

    for (const auto& f : fs.elements())
        if (!fs.audit_member(f))
            throw check_failure("family member fails a membership condition: " +
                                fs.describe(f));

    std::vector<bool> visited(fs.elements().size(), false);
    for (size_t i = 0; i < fs.elements().size(); ++i) {
        if (visited[i]) continue;
        const FElement& f = fs.elements()[i];
        FElement g = fs.mu(f);
        TensorVector tf = fs.term(f);
        if (g == f) {
            if (!tf.is_zero())
                throw check_failure("fixed point with nonzero term: " + fs.describe(f));
            cert.fixed_points.push_back({fs.describe(f), std::move(tf)});
            visited[i] = true;
            continue;
        }
        if (!(fs.mu(g) == f))
            throw check_failure("pairing is not involutive at: " + fs.describe(f));
        TensorVector tg = fs.term(g);
        if (!add(tf, tg).is_zero())
            throw check_failure("pair terms do not cancel: " + fs.describe(f) + "  <->  " +
                                fs.describe(g));
        visited[i] = true;
        if (auto j = fs.index_of(g)) visited[*j] = true;
        cert.pairs.push_back({fs.describe(f), fs.describe(g), std::move(tf), std::move(tg)});
    }

    TensorVector total = TensorVector::zero(m);
    for (const auto& f : fs.elements()) total += fs.term(f);
    TensorVector grouped = TensorVector::zero(m);
    for (const auto& t : enumerate_flowcharts(m, n)) grouped += compose_along(t, fs);
    cert.residual_matches = total == grouped;
    if (!cert.residual_matches)
        throw check_failure("flowchart grouping does not reproduce the residual");
    return cert;
}

} // namespace graphcx
