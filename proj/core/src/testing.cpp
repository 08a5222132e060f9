#include "graphcx/testing.hpp"

namespace graphcx::testing {

Mutations& mutations() {
    static Mutations m;
    return m;
}

} // namespace graphcx::testing
