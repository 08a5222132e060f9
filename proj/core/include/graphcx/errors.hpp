#pragma once

#include <stdexcept>
#include <string>

namespace graphcx {

// Bad user input: malformed graph text, valency violation, arity mismatch.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A verified identity failed to hold.  This is the falsification channel:
// it carries a description of the offending datum.
struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency violation (e.g. a differential term missing from the
// target basis).  Indicates a bug, never bad input.
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace graphcx
