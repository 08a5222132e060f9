#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "graphcx/errors.hpp"
#include "graphcx/flowcharts.hpp"
#include "graphcx/involution.hpp"

#include "fixtures.hpp"

using namespace graphcx;
using namespace fixtures;

TEST_CASE("flowchart counts") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n) {
            auto all = enumerate_flowcharts(m, n);
            CHECK(all.size() ==
                  static_cast<size_t>(((1 << n) - 1) * ((1 << m) - 1)));
            std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
            for (const auto& t : all) seen.insert({t.inputs_to_s, t.outputs_from_t});
            CHECK(seen.size() == all.size());
        }
}

TEST_CASE("the nine two-in two-out flowcharts") {
    // the (inputs_to_s, outputs_from_t) encoding walks all nonempty subset
    // pairs; each of the nine diagrams is one choice of which inputs feed
    // the first corolla and which outputs leave the second
    auto all = enumerate_flowcharts(2, 2);
    REQUIRE(all.size() == 9);
    std::set<std::pair<std::uint32_t, std::uint32_t>> expected;
    for (std::uint32_t a : {1u, 2u, 3u})
        for (std::uint32_t b : {1u, 2u, 3u}) expected.insert({a, b});
    std::set<std::pair<std::uint32_t, std::uint32_t>> got;
    for (const auto& t : all) {
        got.insert({t.inputs_to_s, t.outputs_from_t});
        // the internal edge contributes one to each corolla
        CHECK(t.in_s() + t.in_t() == t.n + 1);
        CHECK(t.out_s() + t.out_t() == t.m + 1);
    }
    CHECK(got == expected);
}

TEST_CASE("one-input one-output has a single flowchart") {
    auto all = enumerate_flowcharts(1, 1);
    REQUIRE(all.size() == 1);
    CHECK(all[0].inputs_to_s == 1);
    CHECK(all[0].outputs_from_t == 1);
}

TEST_CASE("three inputs: seven flowcharts, three with small corollas") {
    auto all = enumerate_flowcharts(1, 3);
    CHECK(all.size() == 7);
    int small = 0;
    for (const auto& t : all)
        if (t.small_arities()) ++small;
    CHECK(small == 3);
}

TEST_CASE("every flowchart with four inputs or outputs has a big corolla") {
    for (const auto& t : enumerate_flowcharts(4, 1)) CHECK(!t.small_arities());
    for (const auto& t : enumerate_flowcharts(1, 4)) CHECK(!t.small_arities());
    for (const auto& t : enumerate_flowcharts(4, 4)) CHECK(!t.small_arities());
}

TEST_CASE("composition along the unique (1,1) flowchart on theta is zero") {
    auto t = enumerate_flowcharts(1, 1)[0];
    CHECK(compose_along(t, AlphaInput({theta()})).is_zero());
}

TEST_CASE("d squared on k4 through the flowchart sum") {
    AlphaInput input({k4()});
    TensorVector total = TensorVector::zero(1);
    for (const auto& t : enumerate_flowcharts(1, 1)) total += compose_along(t, input);
    CHECK(total.is_zero());
    CHECK(shlb_residual(1, 1, input).is_zero());
}

TEST_CASE("grouping the family by flowchart reproduces the residual") {
    AlphaInput input({theta(), k4()});
    for (int m = 1; m <= 2; ++m) {
        FSet fs(m, 2, input);
        TensorVector direct = TensorVector::zero(m);
        for (const auto& f : fs.elements()) direct += fs.term(f);
        TensorVector grouped = TensorVector::zero(m);
        for (const auto& t : enumerate_flowcharts(m, 2)) grouped += compose_along(t, fs);
        CHECK(direct == grouped);
        CHECK(direct == shlb_residual(m, 2, input));
    }
}

TEST_CASE("residual is structurally zero for big m or n") {
    CHECK(shlb_residual(4, 1, AlphaInput({k4()})).is_zero());
    CHECK(shlb_residual(1, 4, AlphaInput({theta(), theta(), theta(), theta()})).is_zero());
}

TEST_CASE("named identities resolve and check arity") {
    CHECK(named_identity("d_squared", AlphaInput({k4()})).is_zero());
    CHECK_THROWS_AS(named_identity("leibniz", AlphaInput({k4()})), input_error);
    CHECK_THROWS_AS(named_identity("nonsense", AlphaInput({k4()})), input_error);
    CHECK(named_identities().size() == 9);
}

TEST_CASE("jacobi on three thetas") {
    AlphaInput input({theta(), theta(), theta()});
    TensorVector total = TensorVector::zero(1);
    int admissible = 0;
    FSet fs(1, 3, input);
    for (const auto& t : enumerate_flowcharts(1, 3)) {
        if (t.small_arities()) ++admissible;
        total += compose_along(t, fs);
    }
    CHECK(admissible == 3);
    CHECK(total.is_zero());
    CHECK(named_identity("jacobi", input).is_zero());
}
