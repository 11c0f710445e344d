#pragma once

#include <cstdint>

namespace dlab {

// Node budget for the combinatorial searches. A "node" is one extension
// attempt (order search) or one pattern-intersection step (independence
// search). When the limit trips, the search stops and reports its best
// result so far with exhausted = false; ranks are then certified lower
// bounds, never upper bounds.
struct SearchBudget {
    std::uint64_t node_limit = 10'000'000;
};

}  // namespace dlab
