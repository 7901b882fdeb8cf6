#pragma once

#include <array>
#include <optional>
#include <vector>

#include "icegt/caps.hpp"
#include "icegt/exactalg.hpp"
#include "icegt/lattice.hpp"

namespace icegt {

// Vertex types by path usage: 1 all four, 2 none, 3 left+right, 4 top+bottom,
// 5 left+bottom, 6 top+right.
int vertex_type(const Domain& d, const EdgeOrientation& o, int v);

struct RowStats {
    // counts[row][type], row = 1..2k_n-1, type = 1..6 (index 0 unused)
    std::vector<std::array<int, 7>> counts;

    int odd(int type) const;
    int even(int type) const;
    int total(int type) const { return odd(type) + even(type); }
};

struct Classification {
    std::vector<int> types;  // per vertex index
    RowStats stats;
};

Classification classify(const Domain& d, const EdgeOrientation& o);

int ic(const Domain& d, const EdgeOrientation& o);
WeightMonomial omega(const Domain& d, const EdgeOrientation& o);

// Rows run top-down: matrix row r holds lattice row 2k_n - r.
struct SignMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<int> a;  // row-major, 1-based accessors below

    int at(int r, int c) const { return a[(r - 1) * cols + (c - 1)]; }
};

SignMatrix sign_matrix(const Domain& d, const EdgeOrientation& o);
long inv(const SignMatrix& a);
long inv(const Domain& d, const EdgeOrientation& o);

SearchResult enumerate_m6v(const BoundarySpec& k, const FamilySink& sink, std::optional<uint64_t> limit = {},
                           const Caps& caps = Caps::from_env());

// Sum of 2^ic over all configurations, by enumeration.
BigInt weighted_count_m6v(const BoundarySpec& k, const Caps& caps = Caps::from_env());

// Path i runs east along row 2k_i-1 to column i, then straight down.
PathFamily x_max(const BoundarySpec& k);

// Cell (col,row) spans columns col..col+1 and rows row..row+1. A flip swaps a
// path turning through the upper-right corner with one turning through the
// lower-left corner, or back.
bool flippable(const Domain& d, const EdgeOrientation& o, int col, int row);
EdgeOrientation corner_flip(const Domain& d, const EdgeOrientation& o, int col, int row);

// Change of ic caused by a flip, recomputed from the four corner vertices only.
int corner_flip_ic_delta(const Domain& d, const EdgeOrientation& o, int col, int row);

}  // namespace icegt
