#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "graphcx/algebra.hpp"
#include "graphcx/structure_maps.hpp"

namespace graphcx {

// A two-corolla composition scheme with n inputs and m outputs: which
// labeled inputs feed the first corolla s and which labeled outputs leave
// the second corolla t.  The two corollas are joined by one internal edge.
struct Flowchart {
    int n = 1, m = 1;
    std::uint32_t inputs_to_s = 0;   // bit i-1 set: input i enters s
    std::uint32_t outputs_from_t = 0; // bit i-1 set: output i leaves t

    int in_s() const { return std::popcount(inputs_to_s); }
    int out_t() const { return std::popcount(outputs_from_t); }
    int out_s() const { return m - out_t() + 1; }
    int in_t() const { return n - in_s() + 1; }
    bool small_arities() const {
        return in_s() <= 2 && out_s() <= 2 && in_t() <= 2 && out_t() <= 2;
    }

    friend auto operator<=>(const Flowchart&, const Flowchart&) = default;
};

// All (2^n - 1)(2^m - 1) flowcharts, ordered by (inputs_to_s, outputs_from_t).
std::vector<Flowchart> enumerate_flowcharts(int m, int n);

// Sum of the grouped terms whose flowchart is T; zero whenever T has a
// corolla of arity > 2.
TensorVector compose_along(const Flowchart& t, const AlphaInput& input);

// Sum over all of T(m,n); the strong homotopy identity asserts this is zero.
// Structurally zero when m > 3 or n > 3.
TensorVector shlb_residual(int m, int n, const AlphaInput& input);

struct NamedIdentity {
    std::string_view name;
    int m, n;
};

// d_squared, leibniz, jacobi, coderivation, cojacobi, bialgebra22, id23,
// id32, id33.
const std::vector<NamedIdentity>& named_identities();

// Residual of the named identity; throws input_error on unknown name or
// input arity mismatch.
TensorVector named_identity(std::string_view name, const AlphaInput& input);

} // namespace graphcx
