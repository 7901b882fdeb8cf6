#pragma once

// Worked configurations transcribed by hand from their drawings.

#include "icegt/gtpat.hpp"
#include "icegt/lattice.hpp"

namespace fixtures {

using namespace icegt;

// Four osculating paths on M_(1,2,3,4) with ic = 3.
inline PathFamily crossing_family() {
    return PathFamily{Model::SixV, BoundarySpec({1, 2, 3, 4}), {"", "RDD", "DRDRDD", "RDDDRRDDD"}};
}

// Its barred triangle: 2bar / 2 2bar / 2 2bar 4 / 1 2 3 4.
inline BarredTriangle crossing_triangle() {
    return BarredTriangle{{{4}, {3, 4}, {3, 4, 7}, {1, 3, 5, 7}}};
}

// Six paths on M_(2,3,5,6,7,8).
inline PathFamily six_path_family() {
    return PathFamily{Model::SixV,
                      BoundarySpec({2, 3, 5, 6, 7, 8}),
                      {"DD", "DRDDD", "DRDRDDDDDD", "DRDDRDRDDDDDD", "RRDDDRDDRDDDDDDD", "RDRDRDRDDDRDDDDDDDD"}};
}

// 5 / 4bar 6bar / 4 5bar 7 / 4 4bar 7 7bar / 2bar 4bar 5bar 7 8 / 2 3 5 6 7 8
inline BarredTriangle six_path_triangle() {
    return BarredTriangle{{{9}, {8, 12}, {7, 10, 13}, {7, 8, 13, 14}, {4, 8, 10, 13, 15}, {3, 5, 9, 11, 13, 15}}};
}

inline GTPattern six_path_pattern() {
    return GTPattern{{{5}, {4, 6}, {4, 5, 7}, {4, 4, 7, 7}, {2, 4, 5, 7, 8}, {2, 3, 5, 6, 7, 8}}};
}

// Triple-free pattern whose weight is 2^13.
inline GTPattern fsa_pattern() { return GTPattern{{{5}, {5, 6}, {4, 6, 6}, {4, 4, 6, 9}, {2, 4, 5, 8, 9}}}; }

// Pattern with a six-element fibre.
inline GTPattern small_fibre_pattern() { return GTPattern{{{2}, {2, 3}, {2, 3, 3}, {1, 2, 3, 4}}}; }

}  // namespace fixtures
