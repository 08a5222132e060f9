// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
// Golden values in this file were produced by the independent naive oracle
// (exhaustive multiset enumeration, exhaustive canonicalization, rational
// Gaussian elimination) before the main implementation was trusted; the
// oracle is re-run here and must agree with both the goldens and the main
// code path.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "graphcx/corpus.hpp"
#include "graphcx/errors.hpp"
#include "graphcx/flowcharts.hpp"
#include "graphcx/involution.hpp"
#include "graphcx/io.hpp"
#include "graphcx/testing.hpp"

#include "fixtures.hpp"

using namespace graphcx;
using namespace fixtures;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    if (!ok) ++failures;
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    std::fflush(stdout);
}

std::vector<OrientedGraph> corpus(int max_v, int max_e) {
    std::vector<OrientedGraph> out;
    for (int v = 1; v <= max_v; ++v)
        for (int e = 1; e <= max_e; ++e)
            for (const auto& key : enumerate_graphs(v, e).keys)
                out.push_back(decode_key(key));
    return out;
}

OrientedGraph dumbbell() {
    return make_graph(8, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
                          {5, 7}, {5, 8}, {6, 7}, {6, 8}, {7, 8}, {1, 5}, {2, 6}});
}

OrientedGraph bridged() {
    return make_graph(4, {{1, 2}, {1, 2}, {1, 2}, {3, 4}, {3, 4}, {3, 4}, {2, 3}});
}

// ---------------------------------------------------------------- criterion 1

void criterion_1() {
    bool ok = true;
    auto t22 = enumerate_flowcharts(2, 2);
    ok = ok && t22.size() == 9;
    // the nine routings: each nonempty subset of inputs into the first
    // corolla against each nonempty subset of outputs out of the second
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const auto& t : t22) seen.insert({t.inputs_to_s, t.outputs_from_t});
    std::set<std::pair<std::uint32_t, std::uint32_t>> expected;
    for (std::uint32_t a : {1u, 2u, 3u})
        for (std::uint32_t b : {1u, 2u, 3u}) expected.insert({a, b});
    ok = ok && seen == expected;
    for (int m = 1; m <= 4 && ok; ++m)
        for (int n = 1; n <= 4 && ok; ++n)
            ok = enumerate_flowcharts(m, n).size() ==
                 static_cast<size_t>(((1 << n) - 1) * ((1 << m) - 1));
    report(1, ok, "flowchart counts: |T(2,2)| = 9 in bijection with the nine routings; "
                  "|T(m,n)| = (2^n-1)(2^m-1) for m,n <= 4");
}

// ------------------------------------------------------- criteria 2 and 3

struct GridResults {
    // residual zero-ness per (m-1) for every tuple, per n
    std::vector<std::array<bool, 3>> singles_58; // n = 1, V <= 5, E <= 8
    std::vector<std::array<bool, 3>> pairs_46;   // n = 2, pairs from V <= 4, E <= 6
    std::vector<std::array<bool, 3>> triples;    // n = 3, from theta and V <= 3 classes
    size_t singles_count = 0, pairs_count = 0, triples_count = 0;

    static std::array<bool, 3> zeroness(int n, const std::vector<OrientedGraph>& tuple) {
        auto residuals = residuals_up_to_three(n, AlphaInput(tuple));
        return {residuals[0].is_zero(), residuals[1].is_zero(), residuals[2].is_zero()};
    }
};

GridResults run_grid() {
    GridResults r;
    const auto singles58 = corpus(5, 8);
    for (const auto& g : singles58) r.singles_58.push_back(GridResults::zeroness(1, {g}));
    r.singles_count = singles58.size();

    const auto c46 = corpus(4, 6);
    for (const auto& x : c46)
        for (const auto& y : c46) r.pairs_46.push_back(GridResults::zeroness(2, {x, y}));
    r.pairs_count = r.pairs_46.size();

    std::vector<OrientedGraph> triple_corpus = {theta()};
    for (const auto& g : corpus(3, 6))
        if (g.vertex_count == 3) triple_corpus.push_back(g);
    for (const auto& x : triple_corpus)
        for (const auto& y : triple_corpus)
            for (const auto& z : triple_corpus)
                r.triples.push_back(GridResults::zeroness(3, {x, y, z}));
    r.triples_count = r.triples.size();
    return r;
}

void criterion_2(const GridResults& r) {
    auto all = [](const std::vector<std::array<bool, 3>>& rows, int m) {
        for (const auto& row : rows)
            if (!row[static_cast<size_t>(m - 1)]) return false;
        return true;
    };
    const bool d_squared = all(r.singles_58, 1);
    const bool leibniz = all(r.pairs_46, 1);
    const bool coderivation = all(r.singles_58, 2);
    const bool jacobi = all(r.triples, 1);
    const bool cojacobi = all(r.singles_58, 3);
    const bool ok = d_squared && leibniz && coderivation && jacobi && cojacobi;
    report(2, ok,
           "classical identities: d_squared on " + std::to_string(r.singles_count) +
               " classes (V<=5,E<=8), leibniz on " + std::to_string(r.pairs_count) +
               " pairs (V<=4,E<=6), coderivation on the singles, jacobi on " +
               std::to_string(r.triples_count) + " triples (theta and V<=3 classes), "
               "cojacobi on the singles; all residuals exactly zero");
}

void criterion_3(const GridResults& r) {
    bool ok = true;
    for (int m = 1; m <= 3; ++m) {
        for (const auto& row : r.singles_58) ok = ok && row[static_cast<size_t>(m - 1)];
        for (const auto& row : r.pairs_46) ok = ok && row[static_cast<size_t>(m - 1)];
        for (const auto& row : r.triples) ok = ok && row[static_cast<size_t>(m - 1)];
    }
    // m = 4 or n = 4: zero because every flowchart has a corolla of arity > 2
    for (int k = 1; k <= 4; ++k) {
        for (const auto& t : enumerate_flowcharts(4, k)) ok = ok && !t.small_arities();
        for (const auto& t : enumerate_flowcharts(k, 4)) ok = ok && !t.small_arities();
    }
    ok = ok && shlb_residual(4, 1, AlphaInput({k4()})).is_zero();
    ok = ok && shlb_residual(1, 4, AlphaInput({theta(), theta(), theta(), theta()})).is_zero();
    report(3, ok, "composition identity residuals vanish for all (m,n) in {1,2,3}^2 over "
                  "the criterion-2 corpora, and structurally for m = 4 or n = 4");
}

// ---------------------------------------------------------------- criterion 4

void criterion_4() {
    bool ok = true;
    std::string detail;
    size_t total_pairs = 0, total_fixed = 0;
    try {
        for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}}) {
            std::vector<std::vector<OrientedGraph>> inputs;
            if (n == 1) inputs = {{k4()}};
            else inputs = {{theta(), theta()}, {theta(), k4()}};
            for (const auto& tuple : inputs) {
                AlphaInput input(tuple);
                PairingCertificate cert = verify_pairing(m, n, input);
                ok = ok && cert.residual_matches;
                ok = ok && cert.family_size == 2 * cert.pairs.size() + cert.fixed_points.size();
                // family term sum equals the residual computed independently
                FSet fs(m, n, input);
                TensorVector total = TensorVector::zero(m);
                for (const auto& f : fs.elements()) total += fs.term(f);
                ok = ok && total == shlb_residual(m, n, input);
                total_pairs += cert.pairs.size();
                total_fixed += cert.fixed_points.size();
            }
        }
        detail = "pairing certificates on K4, (theta,theta), (theta,K4) at "
                 "(1,1),(2,1),(1,2),(2,2): mu maps the family to itself, mu^2 = id, "
                 "all " + std::to_string(total_pairs) + " pair sums zero, " +
                 std::to_string(total_fixed) +
                 " fixed points all with zero term, term sums match the residuals";
    } catch (const check_failure& e) {
        ok = false;
        detail = std::string("certificate violation: ") + e.what();
    }
    report(4, ok, detail);
}

// ---------------------------------------------------------------- criterion 5

void criterion_5() {
    const auto c46 = corpus(4, 6);
    size_t checked = 0;
    bool ok = true;
    for (const auto& x : c46)
        for (const auto& y : c46) {
            if (!is_one_pi(x) && !is_one_pi(y)) continue;
            ++checked;
            ok = ok && alpha22(x, y).is_zero();
        }
    report(5, ok, "two-slot two-input map vanishes on all " + std::to_string(checked) +
                      " pairs from V<=4,E<=6 with a bridgeless connected factor");
}

// ---------------------------------------------------------------- criterion 6

void criterion_6() {
    bool ok = true;
    std::mt19937_64 rng(test_seed());
    // 500 random relabelings / reversals
    for (int trial = 0; trial < 500; ++trial) {
        OrientedGraph g = random_graph(rng, 5);
        Canonical base = canonicalize(g);
        if (trial % 2 == 0) {
            auto sigma = random_permutation(g.vertex_count, rng);
            SignedGraph moved = relabel(g, sigma);
            Canonical after = canonicalize(moved.graph);
            ok = ok && after.is_zero() == base.is_zero();
            if (!base.is_zero())
                ok = ok && after.key == base.key && moved.sign * after.sign == base.sign;
        } else {
            std::uniform_int_distribution<int> pick(1, g.edge_count());
            SignedGraph rev = reverse_edge(g, pick(rng));
            Canonical after = canonicalize(rev.graph);
            ok = ok && after.is_zero() == base.is_zero();
            if (!base.is_zero()) ok = ok && after.key == base.key && after.sign == -base.sign;
        }
    }
    // surgery symmetry under reversed ordered pairs with bars, on the corpus
    size_t symmetric_pairs = 0;
    for (const auto& g : corpus(4, 6)) {
        for (const auto& h1 : g.half_edges())
            for (const auto& h2 : g.half_edges()) {
                if (h1.edge == h2.edge) continue;
                auto a = surgery(g, h1, h2);
                auto b = surgery(g, bar(h2), bar(h1));
                ok = ok && a.value.is_zero() == b.value.is_zero();
                if (a.value.is_zero()) continue;
                Canonical ca = canonicalize(a.value.graph);
                Canonical cb = canonicalize(b.value.graph);
                ok = ok && ca.is_zero() == cb.is_zero();
                if (!ca.is_zero())
                    ok = ok && ca.key == cb.key &&
                         ca.sign * a.value.sign == cb.sign * b.value.sign;
                ++symmetric_pairs;
            }
    }
    ok = ok && canonicalize(doubled_triangle()).is_zero();
    ok = ok && !canonicalize(theta()).is_zero();
    report(6, ok, "orientation algebra: 500 random equivariance checks, surgery symmetry "
                  "on " + std::to_string(symmetric_pairs) +
                  " ordered corpus pairs, doubled triangle vanishes, theta does not");
}

// ---------------------------------------------------------------- criterion 7

void criterion_7() {
    bool ok = true;
    const auto c46 = corpus(4, 6);
    for (const auto& x : c46)
        for (const auto& y : c46) {
            const int sign = (x.vertex_count * y.vertex_count) % 2 == 0 ? 1 : -1;
            for (int m = 1; m <= 2; ++m) {
                TensorVector xy = alpha(m, AlphaInput({x, y}));
                TensorVector yx = alpha(m, AlphaInput({y, x}));
                ok = ok && yx == scale(sign, xy);
            }
        }
    // slot swap on two-slot outputs, including a graph with nonzero cobracket
    std::vector<OrientedGraph> singles = corpus(4, 6);
    singles.push_back(dumbbell());
    singles.push_back(product(dumbbell(), theta()));
    bool saw_nonzero = false;
    for (const auto& g : singles) {
        TensorVector c = alpha(2, AlphaInput({g}));
        saw_nonzero = saw_nonzero || !c.is_zero();
        for (const auto& [tuple, coeff] : c.terms) {
            const int v1 = decode_key(tuple[0]).vertex_count;
            const int v2 = decode_key(tuple[1]).vertex_count;
            const long long expected = (v1 * v2) % 2 == 0 ? coeff : -coeff;
            auto it = c.terms.find({tuple[1], tuple[0]});
            ok = ok && it != c.terms.end() && it->second == expected;
        }
    }
    ok = ok && saw_nonzero;
    report(7, ok, "factor-swap and slot-swap sign laws with sign (-1)^{V V'} hold on all "
                  "corpus pairs and on nonzero two-slot outputs");
}

// ---------------------------------------------------------------- criterion 8

void criterion_8() {
    using namespace graphcx::testing;
    bool ok = true;
    std::string note;

    // control 1: dropping the block-shuffle sign must break a residual and a
    // pairing certificate
    {
        ScopedMutations guard({true, false, 0});
        bool residual_broke = !shlb_residual(2, 1, AlphaInput({dumbbell()})).is_zero();
        bool cert_broke = false;
        try {
            verify_pairing(2, 1, AlphaInput({dumbbell()}));
        } catch (const check_failure&) {
            cert_broke = true;
        }
        ok = ok && residual_broke && cert_broke;
        if (!(residual_broke && cert_broke)) note += " [shuffle control failed to bite]";
    }

    // control 2: dropping the contraction permutation sign.  This rescales
    // every composite surgery by a factor that is equal on paired data, so
    // residuals and certificates provably cannot see it; it is caught by the
    // equivariance law (criterion 6) and by the homology ranks (criterion 9),
    // both of which cross canonical representatives.
    {
        ScopedMutations guard({false, true, 0});
        bool residual_still_zero = shlb_residual(1, 1, AlphaInput({bridged()})).is_zero() &&
                                   shlb_residual(2, 1, AlphaInput({dumbbell()})).is_zero();
        // equivariance: contract after relabel vs relabel after contract
        std::vector<int> sigma = {0, 3, 1, 4, 2};
        auto moved = relabel(k4(), sigma);
        auto a = contract(k4(), 2);
        auto b = contract(moved.graph, 2);
        Canonical ca = canonicalize(a.value.graph), cb = canonicalize(b.value.graph);
        bool equivariance_broke =
            !(ca.sign * a.value.sign == moved.sign * cb.sign * b.value.sign);
        // golden rank: the (4,6) -> (3,5) differential has rank 1, mutated 0
        Basis b46 = enumerate_graphs(4, 6), b35 = enumerate_graphs(3, 5);
        bool rank_broke = exact_rank(differential_matrix(b46, b35)) != 1;
        ok = ok && residual_still_zero && equivariance_broke && rank_broke;
        if (!equivariance_broke || !rank_broke)
            note += " [contraction control failed to bite]";
        if (!residual_still_zero) note += " [contraction gauge analysis violated]";
    }

    // control 3: skipping any constructible membership condition must make
    // the certificate audit reject the family
    {
        struct Case {
            unsigned bullet;
            int m, n;
            std::vector<OrientedGraph> input;
        };
        const std::vector<Case> cases = {
            {fc_crossed_nonloop, 1, 1, {k4()}},
            {fc_distinct_second_pair, 1, 1, {k4()}},
            {fc_second_pair_nonloop, 1, 1, {k4()}},
            {fc_second_crossed_nonloop, 1, 1, {k4()}},
            {fc_s_nonempty, 1, 2, {theta(), k4()}},
            {fc_s_mixed, 1, 2, {theta(), k4()}},
            {fc_u_mixed, 2, 1, {product(dumbbell(), theta())}},
            {fc_u_component_closed, 2, 1, {dumbbell()}},
        };
        for (const auto& c : cases) {
            ScopedMutations guard({false, false, c.bullet});
            bool caught = false;
            try {
                verify_pairing(c.m, c.n, AlphaInput(c.input));
            } catch (const check_failure&) {
                caught = true;
            }
            ok = ok && caught;
            if (!caught) note += " [condition skip " + std::to_string(c.bullet) + " uncaught]";
        }
        // the first-pair distinctness condition admits no data at all: there
        // is no once-surgered graph to host the second pair
        ScopedMutations guard({false, false, fc_distinct_first_pair});
        ok = ok && FSet(1, 1, AlphaInput({k4()})).elements().size() ==
                       [] {
                           ScopedMutations clean({});
                           return FSet(1, 1, AlphaInput({k4()})).elements().size();
                       }();
    }

    report(8, ok, "negative controls: shuffle-sign drop breaks a residual and a "
                  "certificate; contraction-sign drop is a pairing-invariant gauge "
                  "(breaks equivariance and homology ranks instead); every "
                  "constructible membership-condition skip is caught by the "
                  "certificate audit" + note);
}

// ---------------------------------------------------------------- criterion 9

struct GoldenRow {
    int v, e;
    long long dim, rank_out, rank_in, betti;
};

// produced by the oracle run (naive enumeration, exhaustive canonicalizer,
// rational Gaussian elimination)
const std::vector<GoldenRow> kGoldens = {
    {2, 3, 1, 0, 0, 1}, {2, 4, 0, 0, 0, 0}, {2, 5, 1, 0, 1, 0}, {2, 6, 0, 0, 0, 0},
    {2, 7, 1, 0, 1, 0}, {2, 8, 0, 0, 0, 0}, {3, 5, 1, 0, 1, 0}, {3, 6, 1, 1, 0, 0},
    {3, 7, 4, 0, 4, 0}, {3, 8, 3, 1, 2, 0}, {4, 6, 3, 1, 0, 2}, {4, 7, 0, 0, 0, 0},
    {4, 8, 16, 4, 11, 1}, {5, 8, 4, 0, 4, 0},
};

std::set<CanonicalKey> oracle_basis(int v, int e) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a <= v; ++a)
        for (int b = a + 1; b <= v; ++b) pairs.emplace_back(a, b);
    std::set<CanonicalKey> keys;
    std::vector<int> mult(pairs.size(), 0);
    std::function<void(size_t, int)> walk = [&](size_t i, int left) {
        if (i == pairs.size()) {
            if (left != 0) return;
            OrientedGraph g{v, {}};
            for (size_t k = 0; k < pairs.size(); ++k)
                for (int c = 0; c < mult[k]; ++c) g.edges.push_back(pairs[k]);
            for (int u = 1; u <= v; ++u)
                if (g.valency(u) < 3) return;
            Canonical c = canonicalize_exhaustive(g);
            if (!c.is_zero()) keys.insert(c.key);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            mult[i] = k;
            walk(i + 1, left - k);
        }
        mult[i] = 0;
    };
    walk(0, e);
    return keys;
}

long long oracle_rank(const Basis& from, const Basis& to) {
    using Rat = boost::multiprecision::cpp_rational;
    if (from.size() == 0 || to.size() == 0) return 0;
    std::vector<std::vector<Rat>> a(to.size(), std::vector<Rat>(from.size(), 0));
    for (size_t j = 0; j < from.keys.size(); ++j) {
        OrientedGraph g = decode_key(from.keys[j]);
        std::map<CanonicalKey, long long> column;
        for (const auto& h1 : g.half_edges())
            for (const auto& h2 : g.half_edges()) {
                if (h1.edge == h2.edge) continue;
                auto r = surgery(g, h1, h2);
                if (r.value.is_zero()) continue;
                Canonical c = canonicalize_exhaustive(r.value.graph);
                if (c.is_zero()) continue;
                column[c.key] += r.value.sign * c.sign;
            }
        for (const auto& [key, coeff] : column) {
            if (coeff == 0) continue;
            auto it = std::lower_bound(to.keys.begin(), to.keys.end(), key);
            if (it == to.keys.end() || *it != key) return -1;
            a[static_cast<size_t>(it - to.keys.begin())][j] = coeff;
        }
    }
    size_t rank = 0;
    for (size_t col = 0; col < a[0].size() && rank < a.size(); ++col) {
        size_t p = rank;
        while (p < a.size() && a[p][col] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[rank], a[p]);
        for (size_t r = 0; r < a.size(); ++r) {
            if (r == rank || a[r][col] == 0) continue;
            Rat f = a[r][col] / a[rank][col];
            for (size_t c = col; c < a[0].size(); ++c) a[r][c] -= f * a[rank][c];
        }
        ++rank;
    }
    return static_cast<long long>(rank);
}

void criterion_9() {
    bool ok = true;
    std::string note;
    std::map<Bidegree, Basis> bases;
    auto basis_at = [&](int v, int e) -> const Basis& {
        Bidegree d{v, e};
        auto it = bases.find(d);
        if (it == bases.end()) it = bases.emplace(d, enumerate_graphs(v, e)).first;
        return it->second;
    };
    for (const auto& row : kGoldens) {
        const Basis& here = basis_at(row.v, row.e);
        const Basis& below = basis_at(std::max(row.v - 1, 1), std::max(row.e - 1, 1));
        const Basis& above = basis_at(row.v + 1, row.e + 1);
        // main implementation
        long long rank_out = exact_rank(differential_matrix(here, below));
        long long rank_in = exact_rank(differential_matrix(above, here));
        long long b = static_cast<long long>(here.size()) - rank_out - rank_in;
        bool row_ok = static_cast<long long>(here.size()) == row.dim &&
                      rank_out == row.rank_out && rank_in == row.rank_in && b == row.betti;
        // independent oracle recomputation
        auto okeys = oracle_basis(row.v, row.e);
        row_ok = row_ok && okeys == std::set<CanonicalKey>(here.keys.begin(), here.keys.end());
        row_ok = row_ok && oracle_rank(here, below) == row.rank_out;
        // rank-nullity
        row_ok = row_ok && rank_out + (static_cast<long long>(here.size()) - rank_out) ==
                               static_cast<long long>(here.size());
        row_ok = row_ok && rank_out + rank_in <= static_cast<long long>(here.size());
        if (!row_ok) {
            ok = false;
            note += " [(" + std::to_string(row.v) + "," + std::to_string(row.e) + ")]";
        }
    }
    // consecutive matrices compose to zero wherever three bidegrees live,
    // including the chain with nonzero composable matrices
    for (const auto& row : kGoldens) {
        const Basis& a = basis_at(row.v + 1, row.e + 1);
        const Basis& b = basis_at(row.v, row.e);
        const Basis& c = basis_at(std::max(row.v - 1, 1), std::max(row.e - 1, 1));
        auto m1 = differential_matrix(a, b);
        auto m2 = differential_matrix(b, c);
        std::vector<std::vector<long long>> d1(b.size(), std::vector<long long>(a.size(), 0));
        for (const auto& [r, col, v] : m1.entries)
            d1[static_cast<size_t>(r)][static_cast<size_t>(col)] += v;
        std::vector<std::vector<long long>> d2(c.size(), std::vector<long long>(b.size(), 0));
        for (const auto& [r, col, v] : m2.entries)
            d2[static_cast<size_t>(r)][static_cast<size_t>(col)] += v;
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < a.size(); ++j) {
                long long sum = 0;
                for (size_t k = 0; k < b.size(); ++k) sum += d2[i][k] * d1[k][j];
                if (sum != 0) ok = false;
            }
    }
    report(9, ok, "homology plumbing: basis counts, ranks and Betti numbers match the "
                  "frozen oracle goldens (incl. betti(2,3)=1, betti(4,6)=2, "
                  "betti(4,8)=1), oracle re-run agrees, rank-nullity holds, and all "
                  "consecutive differential matrices compose to zero" + note);
}

} // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    criterion_1();
    GridResults grid = run_grid();
    criterion_2(grid);
    criterion_3(grid);
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    const auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::printf("%d criterion(s) failed; total %llds\n", failures,
                static_cast<long long>(elapsed));
    return failures == 0 ? 0 : 1;
}
