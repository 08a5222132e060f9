#include "graphcx/canonical.hpp"

#include <algorithm>
#include <unordered_map>

#include "graphcx/errors.hpp"

namespace graphcx {

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

std::string render(int v, const EdgeList& edges) {
    std::string out = std::to_string(v);
    out += ':';
    out += std::to_string(edges.size());
    out += ':';
    for (const auto& [s, t] : edges) {
        out += '(';
        out += std::to_string(s);
        out += ',';
        out += std::to_string(t);
        out += ')';
    }
    return out;
}

// Lex-least normalized edge list over all relabelings, with the set of signs
// that attain it.  Shared result accumulator for both search strategies.
struct Best {
    EdgeList edges;
    bool have = false;
    bool plus = false, minus = false;

    void offer(EdgeList cand, int sign) {
        if (!have || cand < edges) {
            edges = std::move(cand);
            have = true;
            plus = sign > 0;
            minus = sign < 0;
        } else if (cand == edges) {
            (sign > 0 ? plus : minus) = true;
        }
    }

    Canonical finish(int v) const {
        if (plus && minus) return {};
        return {plus ? 1 : -1, CanonicalKey{render(v, edges)}};
    }
};

EdgeList apply_labels(const OrientedGraph& g, const std::vector<int>& label, int* reversals) {
    EdgeList out;
    out.reserve(g.edges.size());
    int rev = 0;
    for (const auto& [s, t] : g.edges) {
        int a = label[static_cast<size_t>(s)], b = label[static_cast<size_t>(t)];
        if (a > b) {
            std::swap(a, b);
            ++rev;
        }
        out.emplace_back(a, b);
    }
    std::sort(out.begin(), out.end());
    if (reversals) *reversals = rev;
    return out;
}

struct Search {
    const OrientedGraph& g;
    std::vector<int> label;      // old vertex -> new label, 0 = unassigned
    std::vector<int> chosen;     // chosen[k] = old vertex carrying label k
    Best best;

    explicit Search(const OrientedGraph& graph)
        : g(graph),
          label(static_cast<size_t>(graph.vertex_count) + 1, 0),
          chosen(static_cast<size_t>(graph.vertex_count) + 1, 0) {}

    // Sound lower bound for every completion of the current partial labeling:
    // undetermined endpoints are replaced by the smallest labels still free.
    bool dominated(int next_label) {
        if (!best.have) return false;
        EdgeList bound;
        bound.reserve(g.edges.size());
        for (const auto& [s, t] : g.edges) {
            int a = label[static_cast<size_t>(s)], b = label[static_cast<size_t>(t)];
            if (a && b) {
                bound.emplace_back(std::min(a, b), std::max(a, b));
            } else if (a || b) {
                bound.emplace_back(a ? a : b, next_label);
            } else {
                bound.emplace_back(next_label, next_label + 1);
            }
        }
        std::sort(bound.begin(), bound.end());
        return bound > best.edges;
    }

    void leaf() {
        int reversals = 0;
        EdgeList cand = apply_labels(g, label, &reversals);
        int sign = permutation_sign(label) * (reversals % 2 == 0 ? 1 : -1);
        best.offer(std::move(cand), sign);
    }

    void descend(int k) {
        if (k > g.vertex_count) {
            leaf();
            return;
        }
        // try vertices with more labeled neighbours first: determines edge
        // cells earlier and tightens the bound
        std::vector<std::pair<int, int>> order;
        for (int u = 1; u <= g.vertex_count; ++u) {
            if (label[static_cast<size_t>(u)]) continue;
            int det = 0;
            for (const auto& [s, t] : g.edges) {
                if (s == u && label[static_cast<size_t>(t)]) ++det;
                if (t == u && label[static_cast<size_t>(s)]) ++det;
            }
            order.emplace_back(-det, u);
        }
        std::sort(order.begin(), order.end());
        for (const auto& [unused, u] : order) {
            (void)unused;
            label[static_cast<size_t>(u)] = k;
            chosen[static_cast<size_t>(k)] = u;
            if (!dominated(k + 1)) descend(k + 1);
            label[static_cast<size_t>(u)] = 0;
        }
    }
};

struct CacheKey {
    std::string raw;
};

} // namespace

CanonicalKey encode_graph(const OrientedGraph& g) {
    return CanonicalKey{render(g.vertex_count, g.edges)};
}

Canonical canonicalize_exhaustive(const OrientedGraph& g) {
    if (g.has_loop()) return {};
    std::vector<int> perm(static_cast<size_t>(g.vertex_count) + 1);
    for (int i = 0; i <= g.vertex_count; ++i) perm[static_cast<size_t>(i)] = i;
    Best best;
    do {
        int reversals = 0;
        EdgeList cand = apply_labels(g, perm, &reversals);
        int sign = permutation_sign(perm) * (reversals % 2 == 0 ? 1 : -1);
        best.offer(std::move(cand), sign);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return best.finish(g.vertex_count);
}

Canonical canonicalize(const OrientedGraph& g) {
    if (g.has_loop()) return {};

    // pure memo; flushed when it grows past a desk-scale bound
    thread_local std::unordered_map<std::string, Canonical> cache;
    const std::string raw = render(g.vertex_count, g.edges);
    if (auto it = cache.find(raw); it != cache.end()) return it->second;

    Search search(g);
    search.descend(1);
    Canonical result = search.best.finish(g.vertex_count);

    if (cache.size() > 1'000'000) cache.clear();
    cache.emplace(raw, result);
    return result;
}

OrientedGraph decode_key(const CanonicalKey& key) {
    const std::string& s = key.text;
    size_t pos = 0;
    auto read_int = [&](char stop) {
        size_t end = s.find(stop, pos);
        if (end == std::string::npos) throw input_error("malformed key: " + s);
        int value = std::stoi(s.substr(pos, end - pos));
        pos = end + 1;
        return value;
    };
    OrientedGraph g;
    g.vertex_count = read_int(':');
    const int e = read_int(':');
    for (int i = 0; i < e; ++i) {
        if (pos >= s.size() || s[pos] != '(') throw input_error("malformed key: " + s);
        ++pos;
        int a = read_int(',');
        int b = read_int(')');
        g.edges.emplace_back(a, b);
    }
    if (pos != s.size()) throw input_error("malformed key: " + s);
    return g;
}

KeyParity parity(const CanonicalKey& key) {
    const int v = std::stoi(key.text.substr(0, key.text.find(':')));
    return {v % 2 == 0, (v + 1) % 2 == 0};
}

} // namespace graphcx
