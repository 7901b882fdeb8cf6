#pragma once

#include <optional>
#include <string>

#include "icegt/caps.hpp"
#include "icegt/exactalg.hpp"
#include "icegt/lattice.hpp"

namespace icegt {

struct Count20V {
    BoundarySpec k;
    BigInt count;
    std::string method;  // "explicit" or "dp"
};

SearchResult enumerate_20v(const BoundarySpec& k, const FamilySink& sink, std::optional<uint64_t> limit = {},
                           const Caps& caps = Caps::from_env());

// Column-sweep DP over the occupied horizontal/diagonal edges crossing each
// column boundary.
Count20V count_20v(const BoundarySpec& k, const Caps& caps = Caps::from_env());

// Counts by exhaustive enumeration, optionally split across threads.
Count20V count_20v_explicit(const BoundarySpec& k, int threads = 1, const Caps& caps = Caps::from_env());

}  // namespace icegt
