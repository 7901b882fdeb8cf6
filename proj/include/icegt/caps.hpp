#pragma once

#include <cstdint>

namespace icegt {

// Resource limits. Defaults may be overridden by ICEGT_MAX_DP_STATES,
// ICEGT_MAX_CONFIGS and ICEGT_MAX_ORACLE_EDGES.
struct Caps {
    uint64_t max_dp_states = 10'000'000;
    uint64_t max_configs = 10'000'000;
    uint64_t max_oracle_edges = 80;

    static Caps from_env();
};

}  // namespace icegt
