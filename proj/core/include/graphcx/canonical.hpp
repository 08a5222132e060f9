#pragma once

#include <compare>
#include <string>

#include "graphcx/graph.hpp"

namespace graphcx {

// Identity of a basis element: `V:E:(s1,t1)(s2,t2)...` with the edge multiset
// sorted lexicographically and every edge directed min->max.  The string is
// the cross-module and on-disk identity.
struct CanonicalKey {
    std::string text;

    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

// sign == 0 encodes the zero class; otherwise [input] = sign * [key].
struct Canonical {
    int sign = 0;
    CanonicalKey key;

    bool is_zero() const { return sign == 0; }
};

// Canonical form modulo relabeling and edge reversal.  Zero when the graph
// has a loop or when the least encoding is reached with both signs (an
// orientation-reversing automorphism).  Branch-and-bound search; result is
// bit-identical to canonicalize_exhaustive.
Canonical canonicalize(const OrientedGraph& g);

// Reference semantics: plain scan of all V! relabelings.
Canonical canonicalize_exhaustive(const OrientedGraph& g);

CanonicalKey encode_graph(const OrientedGraph& g); // render as-is, no normalization
OrientedGraph decode_key(const CanonicalKey& key);

struct KeyParity {
    bool plain_even;   // V mod 2 == 0
    bool shifted_even; // (V+1) mod 2 == 0
};
KeyParity parity(const CanonicalKey& key);

} // namespace graphcx
