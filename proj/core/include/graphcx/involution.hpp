#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphcx/flowcharts.hpp"

namespace graphcx {

// A half-edge of the once-surgered product P1, addressed through provenance:
// the image of a surviving half-edge of P, or one of the two fresh halves of
// the crossed edge e2 (its source half and its partner).
struct P1Half {
    enum class Origin : std::uint8_t { old_half, fresh, fresh_bar };
    Origin origin = Origin::old_half;
    HalfEdgeRef old_ref{};

    static P1Half old_of(HalfEdgeRef h) { return {Origin::old_half, h}; }
    static P1Half fresh() { return {Origin::fresh, {}}; }
    static P1Half fresh_bar() { return {Origin::fresh_bar, {}}; }

    friend auto operator<=>(const P1Half&, const P1Half&) = default;
};

P1Half bar(const P1Half& h);

// Shared data of one composite surgery (h1,h2,h3,h4): both intermediate
// graphs with provenance, the factor attribution sets S_i, and the four
// marked vertices resolved in P2.
struct FQuad {
    HalfEdgeRef h1, h2;
    P1Half h3, h4;
    HalfEdgeRef h3_in_p1, h4_in_p1;
    SignedGraph p1;        // surgery(P, h1, h2)
    Provenance prov1;
    SignedGraph p2;        // surgery(P1, h3, h4), sign composed from P
    Provenance prov2;      // P1 -> P2
    std::array<int, 4> marks{};      // P2 vertex of v(h'_j), j = 1..4
    std::array<int, 4> mark_comp{};  // connected component of each mark in P2
    std::vector<std::uint8_t> s_parts; // size n; bit j-1: index j attributed to factor i

    auto key() const { return std::tie(h1, h2, h3, h4); }
};

// One datum of the indexing family: a composite surgery plus an ordered
// partition U of the four mark indices into m nonempty parts.
struct FElement {
    int quad = -1;
    std::vector<std::uint8_t> u_parts; // size m; bit j-1: mark index j in part i

    friend bool operator==(const FElement&, const FElement&) = default;
};

// The exhaustively enumerated family for fixed (m, n) and inputs, with the
// per-element term, the flowchart map, and the sign-reversing pairing.
class FSet {
  public:
    // Enumerates the full family; inputs must be loop-free.  m, n <= 3.
    FSet(int m, int n, AlphaInput input);

    int m() const { return m_; }
    int n() const { return n_; }
    const AlphaInput& input() const { return input_; }
    const std::vector<FQuad>& quads() const { return quads_; }
    const std::vector<FElement>& elements() const { return elements_; }
    const FQuad& quad_of(const FElement& f) const {
        return quads_[static_cast<size_t>(f.quad)];
    }

    // The signed tensor sum of ordered factorizations of P2 prescribed by U.
    TensorVector term(const FElement& f) const;

    // The unique flowchart routing: input i enters the first corolla iff S_i
    // meets {1,2}; output i leaves the second iff U_i meets {3,4}.
    Flowchart flowchart_of(const FElement& f) const;

    // The pairing.  Applies the case tables; if the rewritten datum is not a
    // member of the family or does not map back, f is its own partner (such
    // fixed points are only admissible with a zero term, which
    // verify_pairing enforces).
    FElement mu(const FElement& f) const;

    // Rewrite-table output before validation; nullopt if the rewritten
    // datum is not a member of the family.
    std::optional<FElement> mu_raw(const FElement& f) const;

    std::string describe(const FElement& f) const;

    std::optional<std::size_t> index_of(const FElement& f) const;

    // Re-checks the nine membership conditions of one element, ignoring any
    // active mutation seams; used by the certificate audit.
    bool audit_member(const FElement& f) const;

  private:
    int m_, n_;
    AlphaInput input_;
    std::vector<FQuad> quads_;
    std::vector<FElement> elements_;
    std::map<std::tuple<HalfEdgeRef, HalfEdgeRef, P1Half, P1Half>, int> quad_index_;
    std::map<std::pair<int, std::vector<std::uint8_t>>, int> element_index_;

    friend class FBuilder;
};

// Streaming sum of term(f) over the whole family, without storing it.
TensorVector sum_of_terms(int m, int n, const AlphaInput& input);

// Residuals for m = 1, 2, 3 in one pass (the composite-surgery data is
// shared; only the partitions differ).
std::array<TensorVector, 3> residuals_up_to_three(int n, const AlphaInput& input);

TensorVector compose_along(const Flowchart& t, const FSet& f);

struct CertifiedPair {
    std::string f_desc, partner_desc;
    TensorVector f_term, partner_term;
};
struct CertifiedFixedPoint {
    std::string f_desc;
    TensorVector term;
};

// Every element appears exactly once across pairs and fixed points; each
// pair's terms sum to zero and each fixed point's term is zero.
struct PairingCertificate {
    int m = 1, n = 1;
    std::size_t family_size = 0;
    std::vector<CertifiedPair> pairs;
    std::vector<CertifiedFixedPoint> fixed_points;
    bool residual_matches = false; // sum of terms equals the flowchart-grouped sum
};

// Builds the family and checks, for every element: membership of mu(f),
// mu(mu(f)) == f, term(f) + term(mu(f)) == 0 (zero term at fixed points),
// and that grouping by flowchart reproduces the residual.  Throws
// check_failure with the offending element on any violation.
PairingCertificate verify_pairing(int m, int n, const AlphaInput& input);

} // namespace graphcx
