#pragma once

namespace graphcx::testing {

// Bit flags naming the membership conditions enforced by build_F.  The
// negative-control tests switch individual conditions off and assert that a
// verified identity breaks; production code never sets these.
enum FCondition : unsigned {
    fc_distinct_first_pair = 1u << 0,  // h1, h2 in distinct edges
    fc_crossed_nonloop     = 1u << 1,  // e1, e2 not loops in the spliced graph
    fc_distinct_second_pair = 1u << 2, // h3, h4 in distinct edges
    fc_second_pair_nonloop = 1u << 3,  // e(h3), e(h4) not loops
    fc_second_crossed_nonloop = 1u << 4, // crossed pair of the second splice not loops
    fc_s_nonempty          = 1u << 5,  // every S_i nonempty
    fc_s_mixed             = 1u << 6,  // some S_i meets both {1,2} and {3,4}
    fc_u_mixed             = 1u << 7,  // some U_i meets both {3,4} and {1,2}
    fc_u_component_closed  = 1u << 8,  // U parts constant on connected components
};

// Verification seams used only by the negative-control suite.
struct Mutations {
    bool drop_shuffle_sign = false;  // use +1 instead of the block-shuffle sign
    bool drop_contract_sign = false; // ignore the relabeling sign in contract
    unsigned skip_f_conditions = 0;  // FCondition bits to skip in build_F
};

Mutations& mutations();

struct ScopedMutations {
    explicit ScopedMutations(Mutations m) : saved_(mutations()) { mutations() = m; }
    ~ScopedMutations() { mutations() = saved_; }
    ScopedMutations(const ScopedMutations&) = delete;
    ScopedMutations& operator=(const ScopedMutations&) = delete;

  private:
    Mutations saved_;
};

} // namespace graphcx::testing
