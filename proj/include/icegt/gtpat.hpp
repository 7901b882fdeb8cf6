#pragma once

#include <functional>
#include <string>
#include <vector>

#include "icegt/caps.hpp"
#include "icegt/exactalg.hpp"
#include "icegt/lattice.hpp"

namespace icegt {

using Rows = std::vector<std::vector<int>>;  // rows[0] is the apex

struct GTPattern {
    Rows rows;

    int n() const { return static_cast<int>(rows.size()); }
    int at(int i, int j) const { return rows[i - 1][j - 1]; }  // 1-based
    bool operator==(const GTPattern&) const = default;
    auto operator<=>(const GTPattern&) const = default;
};

// Entries over 1 < 1bar < 2 < 2bar < ..., coded t -> 2t-1 and tbar -> 2t.
struct BarredTriangle {
    Rows rows;

    int n() const { return static_cast<int>(rows.size()); }
    int at(int i, int j) const { return rows[i - 1][j - 1]; }
    bool operator==(const BarredTriangle&) const = default;
    auto operator<=>(const BarredTriangle&) const = default;
};

inline int bar_code(int t, bool barred) { return barred ? 2 * t : 2 * t - 1; }
inline bool is_barred(int code) { return code % 2 == 0; }
inline int unbar(int code) { return (code + 1) / 2; }

bool is_gt_pattern(const GTPattern& p, std::string* why = nullptr);
bool is_triple_free(const GTPattern& p);
bool is_barred_triangle(const BarredTriangle& t, std::string* why = nullptr);

int omega_fsa_exponent(const GTPattern& p);
BigInt omega_fsa(const GTPattern& p);

using PatternSink = std::function<bool(const GTPattern&)>;

// Triple-free GT patterns with the given bottom row, in lexicographic order
// of rows read upward from the row above the bottom.
void enumerate_gt(const std::vector<int>& bottom, const PatternSink& sink);
// Same, over every strictly increasing bottom row of length n in [1, bound].
void enumerate_gt_bounded(int n, int bound, const PatternSink& sink);

BarredTriangle psi1(const Domain& d, const EdgeOrientation& o);
BarredTriangle psi1(const PathFamily& f);
EdgeOrientation psi1_inverse_orientation(const Domain& d, const BarredTriangle& t);
PathFamily psi1_inverse(const BarredTriangle& t);
GTPattern psi2(const BarredTriangle& t);

int alpha_bar(const BarredTriangle& t);  // T(i,j) = T(i+1,j), barred
int beta(const BarredTriangle& t);       // T(i,j) = T(i+1,j+1), unbarred
int ic_triangle(const BarredTriangle& t);

struct Cell {
    int row;  // 1-based, 1 = apex
    int col;
    bool operator==(const Cell&) const = default;
    auto operator<=>(const Cell&) const = default;
};

struct ConnectedBlock {
    int value = 0;            // the unbarred value t
    std::vector<Cell> cells;  // sorted by (row, col)
};

std::vector<ConnectedBlock> max_connected_blocks(const GTPattern& p);
std::vector<ConnectedBlock> max_connected_blocks(const BarredTriangle& t);

bool touches_bottom(const ConnectedBlock& b, int n);
int horizontal_pairs(const ConnectedBlock& b);
BigInt block_weight(const ConnectedBlock& b);
int block_ic(const BarredTriangle& t, const ConnectedBlock& b);

// Valid bar assignments of one block (codes in cell order), with a bottom-row
// cell kept unbarred.
std::vector<std::vector<int>> block_assignments(const ConnectedBlock& b, int n);
BigInt block_fiber_sum(const ConnectedBlock& b, int n);

struct BlockPart {
    bool joint = false;
    std::vector<Cell> cells;  // top to bottom
};

// Zigzag parts (width-1 row runs) alternating with joints (width-2 rows),
// listed from the bottom of the block to its top. Two adjacent joint rows are
// separated by an empty zigzag part.
std::vector<BlockPart> zigzag_decompose(const ConnectedBlock& b);

// All of psi2^{-1}(p), built block by block.
std::vector<BarredTriangle> fiber(const GTPattern& p, const Caps& caps = Caps::from_env());
BigInt fiber_sum(const GTPattern& p, const Caps& caps = Caps::from_env());

// Sum of 2^ic over barred triangles with bottom row k, by a row-by-row DP.
BigInt weighted_count_triangles(const BoundarySpec& k, const Caps& caps = Caps::from_env());
// Number of barred triangles with bottom row k (same DP, unit weights).
BigInt count_triangles(const BoundarySpec& k, const Caps& caps = Caps::from_env());

}  // namespace icegt
