#include "graphcx/flowcharts.hpp"

#include "graphcx/errors.hpp"
#include "graphcx/involution.hpp"

namespace graphcx {

std::vector<Flowchart> enumerate_flowcharts(int m, int n) {
    if (m < 1 || n < 1) throw input_error("m, n must be positive");
    std::vector<Flowchart> out;
    out.reserve(((1u << n) - 1) * ((1u << m) - 1));
    for (std::uint32_t in_s = 1; in_s < (1u << n); ++in_s)
        for (std::uint32_t out_t = 1; out_t < (1u << m); ++out_t)
            out.push_back({n, m, in_s, out_t});
    return out;
}

TensorVector compose_along(const Flowchart& t, const AlphaInput& input) {
    if (!t.small_arities()) return TensorVector::zero(t.m);
    FSet f(t.m, t.n, input);
    return compose_along(t, f);
}

TensorVector shlb_residual(int m, int n, const AlphaInput& input) {
    if (m < 1 || n < 1) throw input_error("m, n must be positive");
    if (n != input.n()) throw input_error("input arity does not match n");
    if (m > 3 || n > 3) return TensorVector::zero(m); // every flowchart has a big corolla
    return sum_of_terms(m, n, input);
}

const std::vector<NamedIdentity>& named_identities() {
    static const std::vector<NamedIdentity> table = {
        {"d_squared", 1, 1}, {"leibniz", 1, 2},     {"jacobi", 1, 3},
        {"coderivation", 2, 1}, {"cojacobi", 3, 1}, {"bialgebra22", 2, 2},
        {"id23", 2, 3},      {"id32", 3, 2},        {"id33", 3, 3},
    };
    return table;
}

TensorVector named_identity(std::string_view name, const AlphaInput& input) {
    for (const auto& id : named_identities()) {
        if (id.name != name) continue;
        if (input.n() != id.n)
            throw input_error(std::string(name) + " takes " + std::to_string(id.n) +
                              " input graph(s)");
        return shlb_residual(id.m, id.n, input);
    }
    throw input_error("unknown identity: " + std::string(name));
}

} // namespace graphcx
