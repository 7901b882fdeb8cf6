#include "icegt/gtpat.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace icegt {

namespace {

bool triangular(const Rows& rows, std::string* why) {
    for (size_t i = 0; i < rows.size(); ++i)
        if (rows[i].size() != i + 1) {
            if (why) *why = "row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) + " entries";
            return false;
        }
    if (rows.empty()) {
        if (why) *why = "empty triangle";
        return false;
    }
    return true;
}

bool interlacing(const Rows& rows, std::string* why) {
    for (size_t i = 0; i + 1 < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j)
            if (!(rows[i + 1][j] <= rows[i][j] && rows[i][j] <= rows[i + 1][j + 1])) {
                if (why) *why = "interlacing fails at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
                return false;
            }
    return true;
}

bool strictly_increasing(const std::vector<int>& r) {
    for (size_t j = 1; j < r.size(); ++j)
        if (r[j] <= r[j - 1]) return false;
    return true;
}

}  // namespace

bool is_gt_pattern(const GTPattern& p, std::string* why) {
    return triangular(p.rows, why) && interlacing(p.rows, why);
}

bool is_triple_free(const GTPattern& p) {
    for (const auto& r : p.rows)
        for (size_t j = 0; j + 2 < r.size(); ++j)
            if (r[j] == r[j + 1] && r[j + 1] == r[j + 2]) return false;
    return true;
}

bool is_barred_triangle(const BarredTriangle& t, std::string* why) {
    if (!triangular(t.rows, why) || !interlacing(t.rows, why)) return false;
    for (size_t i = 0; i < t.rows.size(); ++i)
        if (!strictly_increasing(t.rows[i])) {
            if (why) *why = "row " + std::to_string(i + 1) + " is not strictly increasing";
            return false;
        }
    for (int c : t.rows.back())
        if (c < 1 || is_barred(c)) {
            if (why) *why = "bottom row must be unbarred and positive";
            return false;
        }
    return true;
}

int omega_fsa_exponent(const GTPattern& p) {
    if (!is_triple_free(p)) throw std::invalid_argument("omega_fsa: pattern is not triple-free");
    int entries = 0, boxed = 0;
    for (int i = 1; i <= p.n(); ++i)
        for (int j = 1; j <= i; ++j) {
            ++entries;
            if (i >= 2 && j >= 2 && j <= i - 1 && p.at(i - 1, j - 1) == p.at(i, j) && p.at(i, j) == p.at(i - 1, j))
                ++boxed;
        }
    return entries - boxed;
}

BigInt omega_fsa(const GTPattern& p) { return pow2(omega_fsa_exponent(p)); }

namespace {

class GTWalker {
public:
    GTWalker(const std::vector<int>& bottom, const PatternSink& sink) : sink_(sink) {
        int n = static_cast<int>(bottom.size());
        rows_.assign(n, {});
        rows_[n - 1] = bottom;
        for (int i = 0; i < n; ++i) rows_[i].resize(i + 1);
    }

    bool run() { return build(static_cast<int>(rows_.size()) - 2, 0); }

private:
    // fill row index i (0-based) at position j
    bool build(int i, int j) {
        if (i < 0) return sink_(GTPattern{rows_});
        if (j > i) return build(i - 1, 0);
        const auto& below = rows_[i + 1];
        for (int v = below[j]; v <= below[j + 1]; ++v) {
            if (j >= 2 && rows_[i][j - 1] == v && rows_[i][j - 2] == v) continue;
            rows_[i][j] = v;
            if (!build(i, j + 1)) return false;
        }
        return true;
    }

    const PatternSink& sink_;
    Rows rows_;
};

}  // namespace

void enumerate_gt(const std::vector<int>& bottom, const PatternSink& sink) {
    if (bottom.empty() || !strictly_increasing(bottom))
        throw std::invalid_argument("enumerate_gt: bottom row must be strictly increasing");
    GTWalker(bottom, sink).run();
}

void enumerate_gt_bounded(int n, int bound, const PatternSink& sink) {
    bool go = true;
    for (const auto& k : all_boundaries(n, bound)) {
        enumerate_gt(k.values(), [&](const GTPattern& p) { return go = sink(p); });
        if (!go) return;
    }
}

BarredTriangle psi1(const Domain& d, const EdgeOrientation& o) {
    if (d.model() != Model::SixV) throw std::invalid_argument("psi1: six-vertex domain required");
    const int n = d.n();
    BarredTriangle t;
    t.rows.resize(n);
    for (int c = 1; c <= n; ++c) {
        auto& row = t.rows[n - c];
        for (int y = 1; y <= d.row_max(); ++y)
            if (path_used(d, o, d.index_of(c, y), Dir::W)) row.push_back(y);
    }
    return t;
}

BarredTriangle psi1(const PathFamily& f) {
    Domain d = domain_for(f);
    return psi1(d, paths_to_orientation(d, f));
}

EdgeOrientation psi1_inverse_orientation(const Domain& d, const BarredTriangle& t) {
    std::string why;
    if (!is_barred_triangle(t, &why)) throw std::invalid_argument("psi1_inverse: " + why);
    const int n = d.n();
    if (t.n() != n) throw std::invalid_argument("psi1_inverse: triangle size does not match the domain");
    for (int l = 0; l < n; ++l)
        if (t.rows.back()[l] != 2 * d.spec()[l] - 1)
            throw std::invalid_argument("psi1_inverse: bottom row does not match k");
    EdgeOrientation o{std::vector<bool>(d.num_edges(), false)};
    const int height = d.row_max();
    for (int c = 1; c <= n; ++c) {
        const auto& in = t.rows[n - c];
        static const std::vector<int> none;
        const auto& out = c < n ? t.rows[n - c - 1] : none;
        for (int y : out) {
            if (y > height) throw std::invalid_argument("psi1_inverse: entry outside the domain");
            o.forward[d.slot(d.index_of(c, y), Dir::E).edge] = true;
        }
        for (int y = height; y >= 2; --y) {
            long a = std::count_if(in.begin(), in.end(), [&](int r) { return r >= y; });
            long b = std::count_if(out.begin(), out.end(), [&](int r) { return r >= y; });
            if (a - b < 0 || a - b > 1) throw std::invalid_argument("psi1_inverse: malformed triangle");
            if (a - b == 1) o.forward[d.slot(d.index_of(c, y), Dir::S).edge] = true;
        }
    }
    IceReport rep = validate_ice(d, o);
    if (!rep.ok) throw std::invalid_argument("psi1_inverse: " + rep.message);
    return o;
}

PathFamily psi1_inverse(const BarredTriangle& t) {
    std::vector<int> k;
    for (int c : t.rows.back()) k.push_back(unbar(c));
    Domain d = Domain::rect(BoundarySpec(k));
    return orientation_to_paths(d, psi1_inverse_orientation(d, t));
}

GTPattern psi2(const BarredTriangle& t) {
    GTPattern p;
    p.rows = t.rows;
    for (auto& r : p.rows)
        for (auto& v : r) v = unbar(v);
    return p;
}

int alpha_bar(const BarredTriangle& t) {
    int c = 0;
    for (int i = 1; i < t.n(); ++i)
        for (int j = 1; j <= i; ++j)
            if (t.at(i, j) == t.at(i + 1, j) && is_barred(t.at(i, j))) ++c;
    return c;
}

int beta(const BarredTriangle& t) {
    int c = 0;
    for (int i = 1; i < t.n(); ++i)
        for (int j = 1; j <= i; ++j)
            if (t.at(i, j) == t.at(i + 1, j + 1) && !is_barred(t.at(i, j))) ++c;
    return c;
}

int ic_triangle(const BarredTriangle& t) { return alpha_bar(t) + beta(t); }

namespace {

std::vector<ConnectedBlock> blocks_of(const Rows& values) {
    const int n = static_cast<int>(values.size());
    std::vector<std::vector<int>> label(n);
    for (int i = 0; i < n; ++i) label[i].assign(i + 1, -1);
    std::vector<ConnectedBlock> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) {
            if (label[i][j] >= 0) continue;
            ConnectedBlock b;
            b.value = values[i][j];
            int id = static_cast<int>(out.size());
            std::vector<std::pair<int, int>> stack{{i, j}};
            label[i][j] = id;
            while (!stack.empty()) {
                auto [r, c] = stack.back();
                stack.pop_back();
                b.cells.push_back({r + 1, c + 1});
                const std::pair<int, int> nb[4] = {{r - 1, c - 1}, {r - 1, c}, {r + 1, c}, {r + 1, c + 1}};
                for (auto [r2, c2] : nb) {
                    if (r2 < 0 || r2 >= n || c2 < 0 || c2 > r2) continue;
                    if (label[r2][c2] >= 0 || values[r2][c2] != b.value) continue;
                    label[r2][c2] = id;
                    stack.push_back({r2, c2});
                }
            }
            std::sort(b.cells.begin(), b.cells.end());
            out.push_back(std::move(b));
        }
    return out;
}

}  // namespace

std::vector<ConnectedBlock> max_connected_blocks(const GTPattern& p) { return blocks_of(p.rows); }

std::vector<ConnectedBlock> max_connected_blocks(const BarredTriangle& t) { return blocks_of(psi2(t).rows); }

bool touches_bottom(const ConnectedBlock& b, int n) {
    return std::any_of(b.cells.begin(), b.cells.end(), [&](const Cell& c) { return c.row == n; });
}

int horizontal_pairs(const ConnectedBlock& b) {
    int pairs = 0;
    for (size_t a = 0; a + 1 < b.cells.size(); ++a)
        if (b.cells[a].row == b.cells[a + 1].row && b.cells[a].col + 1 == b.cells[a + 1].col) ++pairs;
    return pairs;
}

BigInt block_weight(const ConnectedBlock& b) {
    return pow2(static_cast<long>(b.cells.size()) - horizontal_pairs(b));
}

namespace {

int block_ic_codes(const ConnectedBlock& b, const std::vector<int>& codes) {
    int total = 0;
    for (size_t a = 0; a < b.cells.size(); ++a)
        for (size_t z = 0; z < b.cells.size(); ++z) {
            const Cell& u = b.cells[a];
            const Cell& l = b.cells[z];
            if (l.row != u.row + 1 || codes[a] != codes[z]) continue;
            if (l.col == u.col && is_barred(codes[a])) ++total;
            if (l.col == u.col + 1 && !is_barred(codes[a])) ++total;
        }
    return total;
}

}  // namespace

int block_ic(const BarredTriangle& t, const ConnectedBlock& b) {
    std::vector<int> codes;
    for (const Cell& c : b.cells) codes.push_back(t.at(c.row, c.col));
    return block_ic_codes(b, codes);
}

std::vector<std::vector<int>> block_assignments(const ConnectedBlock& b, int n) {
    const size_t m = b.cells.size();
    std::vector<std::vector<int>> out;
    std::vector<int> codes(m);
    std::function<void(size_t)> go = [&](size_t a) {
        if (a == m) {
            out.push_back(codes);
            return;
        }
        const Cell& c = b.cells[a];
        for (int barred = 0; barred <= 1; ++barred) {
            if (barred && c.row == n) continue;
            int code = bar_code(b.value, barred);
            bool ok = true;
            for (size_t p = 0; p < a && ok; ++p) {
                const Cell& q = b.cells[p];
                if (q.row == c.row && q.col + 1 == c.col) ok = codes[p] < code;
                else if (q.row + 1 == c.row && q.col == c.col) ok = code <= codes[p];
                else if (q.row + 1 == c.row && q.col + 1 == c.col) ok = codes[p] <= code;
            }
            if (!ok) continue;
            codes[a] = code;
            go(a + 1);
        }
    };
    go(0);
    return out;
}

BigInt block_fiber_sum(const ConnectedBlock& b, int n) {
    BigInt total = 0;
    for (const auto& codes : block_assignments(b, n)) total += pow2(block_ic_codes(b, codes));
    return total;
}

std::vector<BlockPart> zigzag_decompose(const ConnectedBlock& b) {
    std::map<int, std::vector<Cell>> by_row;
    for (const Cell& c : b.cells) by_row[c.row].push_back(c);
    std::vector<BlockPart> parts;
    BlockPart zig;
    for (auto it = by_row.rbegin(); it != by_row.rend(); ++it) {
        const auto& cells = it->second;
        if (cells.size() == 1) {
            zig.cells.insert(zig.cells.begin(), cells[0]);
        } else {
            if (cells.size() != 2) throw std::invalid_argument("zigzag_decompose: row wider than 2");
            parts.push_back(std::move(zig));
            zig = BlockPart{};
            parts.push_back(BlockPart{true, cells});
        }
    }
    parts.push_back(std::move(zig));
    return parts;
}

std::vector<BarredTriangle> fiber(const GTPattern& p, const Caps& caps) {
    std::string why;
    if (!is_gt_pattern(p, &why)) throw std::invalid_argument("fiber: " + why);
    if (!is_triple_free(p)) throw std::invalid_argument("fiber: pattern is not triple-free");
    if (!strictly_increasing(p.rows.back())) throw std::invalid_argument("fiber: bottom row not strictly increasing");
    const int n = p.n();
    auto blocks = max_connected_blocks(p);
    std::vector<std::vector<std::vector<int>>> options;
    uint64_t size = 1;
    for (const auto& b : blocks) {
        options.push_back(block_assignments(b, n));
        size *= options.back().size();
        if (size > caps.max_configs) throw CapExceeded("max_configs", caps.max_configs);
    }
    std::vector<BarredTriangle> out;
    if (size == 0) return out;
    BarredTriangle t{p.rows};
    std::vector<size_t> pick(blocks.size(), 0);
    while (true) {
        for (size_t bi = 0; bi < blocks.size(); ++bi)
            for (size_t a = 0; a < blocks[bi].cells.size(); ++a) {
                const Cell& c = blocks[bi].cells[a];
                t.rows[c.row - 1][c.col - 1] = options[bi][pick[bi]][a];
            }
        out.push_back(t);
        size_t bi = blocks.size();
        while (bi > 0) {
            --bi;
            if (++pick[bi] < options[bi].size()) break;
            pick[bi] = 0;
            if (bi == 0) return out;
        }
    }
}

BigInt fiber_sum(const GTPattern& p, const Caps& caps) {
    BigInt total = 0;
    for (const auto& t : fiber(p, caps)) total += pow2(ic_triangle(t));
    return total;
}

namespace {

BigInt triangle_sum(const BoundarySpec& k, bool weighted, const Caps& caps) {
    std::vector<int> bottom;
    for (int v : k.values()) bottom.push_back(2 * v - 1);
    std::map<std::vector<int>, BigInt> cur{{bottom, BigInt(1)}};
    for (int len = k.n() - 1; len >= 1; --len) {
        std::map<std::vector<int>, BigInt> next;
        std::vector<int> row(len);
        for (const auto& [below, w] : cur) {
            std::function<void(int, int)> go = [&](int j, int exp) {
                if (j == len) {
                    next[row] += weighted ? BigInt(w * pow2(exp)) : w;
                    return;
                }
                int lo = below[j];
                if (j > 0) lo = std::max(lo, row[j - 1] + 1);
                for (int c = lo; c <= below[j + 1]; ++c) {
                    row[j] = c;
                    int add = (c == below[j] && is_barred(c)) + (c == below[j + 1] && !is_barred(c));
                    go(j + 1, exp + add);
                }
            };
            go(0, 0);
            if (next.size() > caps.max_dp_states) throw CapExceeded("max_dp_states", caps.max_dp_states);
        }
        cur = std::move(next);
    }
    BigInt total = 0;
    for (const auto& [row, w] : cur) total += w;
    return total;
}

}  // namespace

BigInt weighted_count_triangles(const BoundarySpec& k, const Caps& caps) { return triangle_sum(k, true, caps); }

BigInt count_triangles(const BoundarySpec& k, const Caps& caps) { return triangle_sum(k, false, caps); }

}  // namespace icegt
