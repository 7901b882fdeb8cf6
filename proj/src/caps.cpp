#include "icegt/caps.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace icegt {

namespace {

void read_env(const char* name, uint64_t& field) {
    const char* v = std::getenv(name);
    if (!v || !*v) return;
    try {
        field = std::stoull(v);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(name) + ": not a number");
    }
}

}  // namespace

Caps Caps::from_env() {
    Caps c;
    read_env("ICEGT_MAX_DP_STATES", c.max_dp_states);
    read_env("ICEGT_MAX_CONFIGS", c.max_configs);
    read_env("ICEGT_MAX_ORACLE_EDGES", c.max_oracle_edges);
    return c;
}

}  // namespace icegt
