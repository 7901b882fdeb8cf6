#include "icegt/enum6v.hpp"

#include <stdexcept>

namespace icegt {

int vertex_type(const Domain& d, const EdgeOrientation& o, int v) {
    bool w = path_used(d, o, v, Dir::W), e = path_used(d, o, v, Dir::E);
    bool n = path_used(d, o, v, Dir::N), s = path_used(d, o, v, Dir::S);
    if (w && e && n && s) return 1;
    if (!w && !e && !n && !s) return 2;
    if (w && e) return 3;
    if (n && s) return 4;
    if (w && s) return 5;
    if (n && e) return 6;
    throw LatticeError("vertex violates the ice rule");
}

int RowStats::odd(int type) const {
    int t = 0;
    for (size_t r = 1; r < counts.size(); r += 2) t += counts[r][type];
    return t;
}

int RowStats::even(int type) const {
    int t = 0;
    for (size_t r = 2; r < counts.size(); r += 2) t += counts[r][type];
    return t;
}

Classification classify(const Domain& d, const EdgeOrientation& o) {
    if (d.model() != Model::SixV) throw std::invalid_argument("classify: six-vertex domain required");
    Classification c;
    c.types.resize(d.num_vertices());
    c.stats.counts.assign(d.row_max() + 1, {});
    for (int v = 0; v < d.num_vertices(); ++v) {
        int t = vertex_type(d, o, v);
        c.types[v] = t;
        ++c.stats.counts[d.vertex(v).row][t];
    }
    return c;
}

namespace {

int ic_contribution(int type, int row) { return (type == 1 && row % 2 == 0) + (type == 3 && row % 2 == 1); }

}  // namespace

int ic(const Domain& d, const EdgeOrientation& o) {
    int total = 0;
    for (int v = 0; v < d.num_vertices(); ++v) total += ic_contribution(vertex_type(d, o, v), d.vertex(v).row);
    return total;
}

WeightMonomial omega(const Domain& d, const EdgeOrientation& o) {
    WeightMonomial w;
    for (int v = 0; v < d.num_vertices(); ++v) {
        int t = vertex_type(d, o, v);
        Family f = d.vertex(v).row % 2 == 1 ? Family::HV : Family::VD;
        Letter l = t <= 2 ? Letter::a : t <= 4 ? Letter::b : Letter::c;
        w *= vertex_weight(f, l);
    }
    return w;
}

SignMatrix sign_matrix(const Domain& d, const EdgeOrientation& o) {
    SignMatrix m;
    m.rows = d.row_max();
    m.cols = d.n();
    m.a.assign(m.rows * m.cols, 0);
    for (int v = 0; v < d.num_vertices(); ++v) {
        int t = vertex_type(d, o, v);
        int r = d.row_max() + 1 - d.vertex(v).row;
        int val = t == 5 ? 1 : t == 6 ? -1 : 0;
        m.a[(r - 1) * m.cols + (d.vertex(v).col - 1)] = val;
    }
    return m;
}

long inv(const SignMatrix& a) {
    long total = 0;
    for (int i = 1; i <= a.rows; ++i)
        for (int ip = 1; ip < i; ++ip)
            for (int j = 1; j <= a.cols; ++j) {
                int top = a.at(ip, j);
                if (!top) continue;
                for (int jp = 1; jp <= j; ++jp) total += top * a.at(i, jp);
            }
    return total;
}

long inv(const Domain& d, const EdgeOrientation& o) { return inv(sign_matrix(d, o)); }

SearchResult enumerate_m6v(const BoundarySpec& k, const FamilySink& sink, std::optional<uint64_t> limit,
                           const Caps& caps) {
    Domain d = Domain::rect(k);
    SearchOptions opt;
    opt.limit = limit;
    opt.cap = caps.max_configs;
    return search_families(d, sink, opt);
}

BigInt weighted_count_m6v(const BoundarySpec& k, const Caps& caps) {
    Domain d = Domain::rect(k);
    BigInt total = 0;
    SearchOptions opt;
    opt.cap = caps.max_configs;
    search_families(
        d,
        [&](const PathFamily&, const EdgeOrientation& o) {
            total += pow2(ic(d, o));
            return true;
        },
        opt);
    return total;
}

PathFamily x_max(const BoundarySpec& k) {
    PathFamily f{Model::SixV, k, {}};
    for (int i = 0; i < k.n(); ++i) f.paths.push_back(std::string(i, 'R') + std::string(2 * k[i] - 2, 'D'));
    return f;
}

namespace {

struct CellEdges {
    int top, right, left, bottom;
};

CellEdges cell_edges(const Domain& d, int col, int row) {
    int ll = d.index_of(col, row), ul = d.index_of(col, row + 1), ur = d.index_of(col + 1, row + 1);
    if (ll < 0 || ul < 0 || ur < 0 || d.index_of(col + 1, row) < 0)
        throw std::invalid_argument("corner flip: cell outside the domain");
    return {d.slot(ul, Dir::E).edge, d.slot(ur, Dir::S).edge, d.slot(ul, Dir::S).edge, d.slot(ll, Dir::E).edge};
}

}  // namespace

bool flippable(const Domain& d, const EdgeOrientation& o, int col, int row) {
    CellEdges c = cell_edges(d, col, row);
    bool t = o.forward[c.top], r = o.forward[c.right], l = o.forward[c.left], b = o.forward[c.bottom];
    return (t && r && !l && !b) || (!t && !r && l && b);
}

EdgeOrientation corner_flip(const Domain& d, const EdgeOrientation& o, int col, int row) {
    if (!flippable(d, o, col, row)) throw std::invalid_argument("corner flip: cell is not flippable");
    CellEdges c = cell_edges(d, col, row);
    EdgeOrientation out = o;
    for (int e : {c.top, c.right, c.left, c.bottom}) out.forward[e] = !out.forward[e];
    return out;
}

int corner_flip_ic_delta(const Domain& d, const EdgeOrientation& o, int col, int row) {
    EdgeOrientation after = corner_flip(d, o, col, row);
    int delta = 0;
    for (int dc = 0; dc <= 1; ++dc)
        for (int dr = 0; dr <= 1; ++dr) {
            int v = d.index_of(col + dc, row + dr);
            delta += ic_contribution(vertex_type(d, after, v), row + dr) -
                     ic_contribution(vertex_type(d, o, v), row + dr);
        }
    return delta;
}

}  // namespace icegt
