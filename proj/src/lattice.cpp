#include "icegt/lattice.hpp"

#include <algorithm>

namespace icegt {

namespace {

std::pair<int, int> step(int col, int row, Dir d) {
    switch (d) {
        case Dir::W: return {col - 1, row};
        case Dir::NW: return {col - 1, row + 1};
        case Dir::N: return {col, row + 1};
        case Dir::E: return {col + 1, row};
        case Dir::SE: return {col + 1, row - 1};
        case Dir::S: return {col, row - 1};
    }
    return {col, row};
}

}  // namespace

const char* model_name(Model m) { return m == Model::TwentyV ? "20v" : "m6v"; }

Model parse_model(const std::string& s) {
    if (s == "20v") return Model::TwentyV;
    if (s == "m6v") return Model::SixV;
    throw std::invalid_argument("unknown model '" + s + "'");
}

Dir opposite(Dir d) { return static_cast<Dir>((static_cast<int>(d) + 3) % 6); }

char step_char(Dir out) {
    switch (out) {
        case Dir::E: return 'R';
        case Dir::S: return 'D';
        case Dir::SE: return 'S';
        default: throw std::invalid_argument("step_char: not an out-side");
    }
}

Dir step_dir(char c) {
    switch (c) {
        case 'R': return Dir::E;
        case 'D': return Dir::S;
        case 'S': return Dir::SE;
        default: throw LatticeError(std::string("unknown step '") + c + "'");
    }
}

CapExceeded::CapExceeded(std::string cap, uint64_t limit)
    : std::runtime_error("resource cap exceeded: " + cap + " > " + std::to_string(limit)),
      cap_(std::move(cap)),
      limit_(limit) {}

Domain Domain::quad(const BoundarySpec& k) {
    Domain d;
    d.model_ = Model::TwentyV;
    d.spec_ = k;
    d.row_lo_ = 2 - k.n();
    d.row_hi_ = k.last();
    d.build();
    return d;
}

Domain Domain::rect(const BoundarySpec& k) {
    Domain d;
    d.model_ = Model::SixV;
    d.spec_ = k;
    d.row_lo_ = 1;
    d.row_hi_ = 2 * k.last() - 1;
    d.build();
    return d;
}

int Domain::row_min(int col) const { return model_ == Model::TwentyV ? 2 - col : 1; }

int Domain::index_of(int col, int row) const {
    if (col < 1 || col > n() || row < row_min(col) || row > row_hi_) return -1;
    return grid_[(col - 1) * (row_hi_ - row_lo_ + 1) + (row - row_lo_)];
}

int Domain::start_vertex(int l) const {
    int row = model_ == Model::TwentyV ? spec_[l] : 2 * spec_[l] - 1;
    return index_of(1, row);
}

int Domain::end_vertex(int l) const { return index_of(l + 1, row_min(l + 1)); }

void Domain::build() {
    const int n = spec_.n();
    const int height = row_hi_ - row_lo_ + 1;
    grid_.assign(n * height, -1);
    for (int row = row_lo_; row <= row_hi_; ++row)
        for (int col = 1; col <= n; ++col)
            if (row >= row_min(col)) {
                grid_[(col - 1) * height + (row - row_lo_)] = static_cast<int>(vertices_.size());
                vertices_.push_back({col, row});
            }

    std::vector<bool> west_in(row_hi_ + 1, false);
    for (int l = 0; l < n; ++l) west_in[model_ == Model::TwentyV ? spec_[l] : 2 * spec_[l] - 1] = true;

    slots_.assign(vertices_.size(), {});
    const std::array<std::pair<Dir, EdgeKind>, 3> outs{
        {{Dir::E, EdgeKind::H}, {Dir::SE, EdgeKind::D}, {Dir::S, EdgeKind::V}}};
    for (int v = 0; v < num_vertices(); ++v) {
        const auto [col, row] = vertices_[v];
        for (const auto& [dir, kind] : outs) {
            if (kind == EdgeKind::D && !has_diagonals()) continue;
            auto [c2, r2] = step(col, row, dir);
            int h = index_of(c2, r2);
            if (h < 0) continue;
            int e = static_cast<int>(edges_.size());
            edges_.push_back({v, h, kind});
            slots_[v][static_cast<int>(dir)] = {Slot::Kind::Internal, e, false};
            slots_[h][static_cast<int>(opposite(dir))] = {Slot::Kind::Internal, e, false};
        }
    }

    for (int v = 0; v < num_vertices(); ++v) {
        const auto [col, row] = vertices_[v];
        for (int t = 0; t < 6; ++t) {
            Dir dir = static_cast<Dir>(t);
            if ((dir == Dir::NW || dir == Dir::SE) && !has_diagonals()) continue;
            Slot& s = slots_[v][t];
            if (s.kind == Slot::Kind::Internal) continue;
            auto [c2, r2] = step(col, row, dir);
            bool used = false;
            if (c2 < 1) {
                used = dir == Dir::W && west_in[row];
            } else if (c2 > n || r2 > row_hi_) {
                used = false;
            } else {
                used = dir == Dir::S;  // south side
            }
            s = {Slot::Kind::Boundary, -1, used};
        }
    }
}

bool path_used(const Domain& d, const EdgeOrientation& o, int v, Dir dir) {
    const Slot& s = d.slot(v, dir);
    if (s.kind == Slot::Kind::Internal) return o.forward[s.edge];
    return s.kind == Slot::Kind::Boundary && s.used;
}

IceReport validate_ice(const Domain& d, const EdgeOrientation& o) {
    IceReport rep;
    if (static_cast<int>(o.forward.size()) != d.num_edges()) {
        rep.ok = false;
        rep.message = "orientation has " + std::to_string(o.forward.size()) + " edges, domain has " +
                      std::to_string(d.num_edges());
        return rep;
    }
    for (int v = 0; v < d.num_vertices(); ++v) {
        int in = 0, out = 0;
        for (int t = 0; t < 6; ++t) {
            Dir dir = static_cast<Dir>(t);
            const Slot& s = d.slot(v, dir);
            if (s.kind == Slot::Kind::None) continue;
            bool fwd = path_used(d, o, v, dir);
            // an in-side edge points at v when forward; an out-side edge points at v when reversed
            bool incoming = is_in_dir(dir) ? fwd : !fwd;
            (incoming ? in : out) += 1;
        }
        if (in != d.half_degree() || out != d.half_degree()) {
            rep.violations.push_back(v);
            if (rep.ok) {
                const auto& vx = d.vertex(v);
                rep.message = "ice rule fails at (" + std::to_string(vx.col) + "," + std::to_string(vx.row) +
                              "): " + std::to_string(in) + " in, " + std::to_string(out) + " out";
            }
            rep.ok = false;
        }
    }
    return rep;
}

Domain domain_for(const PathFamily& f) {
    return f.model == Model::TwentyV ? Domain::quad(f.k) : Domain::rect(f.k);
}

EdgeOrientation paths_to_orientation(const PathFamily& f) { return paths_to_orientation(domain_for(f), f); }

EdgeOrientation paths_to_orientation(const Domain& d, const PathFamily& f) {
    if (f.model != d.model() || !(f.k == d.spec())) throw LatticeError("path family does not match domain");
    if (static_cast<int>(f.paths.size()) != d.n())
        throw LatticeError("expected " + std::to_string(d.n()) + " paths, got " + std::to_string(f.paths.size()));
    EdgeOrientation o{std::vector<bool>(d.num_edges(), false)};
    for (int l = 0; l < d.n(); ++l) {
        int v = d.start_vertex(l);
        for (char c : f.paths[l]) {
            Dir dir = step_dir(c);
            const Slot& s = d.slot(v, dir);
            if (s.kind != Slot::Kind::Internal)
                throw LatticeError("path " + std::to_string(l + 1) + " leaves the domain");
            if (o.forward[s.edge]) throw LatticeError("paths overlap on an edge (path " + std::to_string(l + 1) + ")");
            o.forward[s.edge] = true;
            v = d.edge(s.edge).head;
        }
        if (v != d.end_vertex(l)) throw LatticeError("path " + std::to_string(l + 1) + " ends at the wrong vertex");
    }
    return o;
}

PathFamily orientation_to_paths(const Domain& d, const EdgeOrientation& o) {
    IceReport rep = validate_ice(d, o);
    if (!rep.ok) throw LatticeError(rep.message);
    PathFamily f{d.model(), d.spec(), {}};
    for (int l = 0; l < d.n(); ++l) {
        std::string steps;
        int v = d.start_vertex(l);
        Dir in = Dir::W;
        while (true) {
            // pair the used in-sides with the used out-sides so that paths never cross
            std::array<Dir, 3> ins{}, outs{};
            int ni = 0, no = 0, pos = -1;
            for (Dir x : kInDirs)
                if (path_used(d, o, v, x)) {
                    if (x == in) pos = ni;
                    ins[ni++] = x;
                }
            for (Dir x : kOutDirs)
                if (path_used(d, o, v, x)) outs[no++] = x;
            if (pos < 0 || ni != no) throw LatticeError("inconsistent path usage");
            Dir out = outs[no - 1 - pos];
            const Slot& s = d.slot(v, out);
            if (s.kind != Slot::Kind::Internal) break;
            steps += step_char(out);
            v = d.edge(s.edge).head;
            in = opposite(out);
        }
        if (v != d.end_vertex(l)) throw LatticeError("path " + std::to_string(l + 1) + " ends at the wrong vertex");
        f.paths.push_back(std::move(steps));
    }
    return f;
}

namespace {

class FamilySearch {
public:
    FamilySearch(const Domain& d, const FamilySink& sink, const SearchOptions& opt)
        : d_(d), sink_(sink), opt_(opt), used_(d.num_edges(), false), last_(d.num_vertices(), {-1, 3}) {
        depth_ = opt.depth < 0 ? d.n() : std::min(opt.depth, d.n());
        steps_.resize(d.n());
        allowed_ = {Dir::S, Dir::E, Dir::SE};  // step order D < R < S
    }

    SearchResult run() {
        if (!apply_prefix()) return res_;
        next_path(static_cast<int>(opt_.prefix.size()));
        return res_;
    }

private:
    bool apply_prefix() {
        for (size_t l = 0; l < opt_.prefix.size(); ++l) {
            int v = d_.start_vertex(static_cast<int>(l));
            int in = 0;
            for (char c : opt_.prefix[l]) {
                Dir out = step_dir(c);
                const Slot& s = d_.slot(v, out);
                if (s.kind != Slot::Kind::Internal || used_[s.edge] || !compatible(v, in, dir_rank(out)))
                    return false;
                used_[s.edge] = true;
                last_[v] = {in, dir_rank(out)};
                v = d_.edge(s.edge).head;
                in = dir_rank(opposite(out));
            }
            if (v != d_.end_vertex(static_cast<int>(l)) || !compatible(v, in, 2)) return false;
            last_[v] = {in, 2};
            steps_[l] = opt_.prefix[l];
        }
        return true;
    }

    bool compatible(int v, int in, int out) const { return in > last_[v].first && out < last_[v].second; }

    void next_path(int l) {
        if (stop_) return;
        if (l == depth_) {
            emit();
            return;
        }
        walk(l, d_.start_vertex(l), 0);
    }

    void walk(int l, int v, int in) {
        if (stop_) return;
        if (v == d_.end_vertex(l)) {
            if (!compatible(v, in, 2)) return;
            auto saved = last_[v];
            last_[v] = {in, 2};
            next_path(l + 1);
            last_[v] = saved;
            return;
        }
        const int target_col = l + 1;
        for (Dir out : allowed_) {
            const Slot& s = d_.slot(v, out);
            if (s.kind != Slot::Kind::Internal || used_[s.edge]) continue;
            int h = d_.edge(s.edge).head;
            if (d_.vertex(h).col > target_col) continue;
            int r = dir_rank(out);
            if (!compatible(v, in, r)) continue;
            auto saved = last_[v];
            last_[v] = {in, r};
            used_[s.edge] = true;
            steps_[l].push_back(step_char(out));
            walk(l, h, dir_rank(opposite(out)));
            steps_[l].pop_back();
            used_[s.edge] = false;
            last_[v] = saved;
            if (stop_) return;
        }
    }

    void emit() {
        if (opt_.limit && res_.emitted >= *opt_.limit) {
            res_.truncated = true;
            stop_ = true;
            return;
        }
        if (res_.emitted >= opt_.cap) throw CapExceeded("max_configs", opt_.cap);
        ++res_.emitted;
        PathFamily f{d_.model(), d_.spec(), std::vector<std::string>(steps_.begin(), steps_.begin() + depth_)};
        if (!sink_(f, EdgeOrientation{used_})) stop_ = true;
    }

    const Domain& d_;
    const FamilySink& sink_;
    const SearchOptions& opt_;
    std::vector<bool> used_;
    // per vertex: (in rank, out rank) of the most recent path through it
    std::vector<std::pair<int, int>> last_;
    std::vector<std::string> steps_;
    std::vector<Dir> allowed_;
    int depth_ = 0;
    bool stop_ = false;
    SearchResult res_;
};

}  // namespace

SearchResult search_families(const Domain& d, const FamilySink& sink, const SearchOptions& opt) {
    FamilySearch s(d, sink, opt);
    return s.run();
}

std::vector<std::vector<std::string>> family_prefixes(const Domain& d, int depth) {
    std::vector<std::vector<std::string>> out;
    SearchOptions opt;
    opt.depth = depth;
    search_families(
        d,
        [&](const PathFamily& f, const EdgeOrientation&) {
            out.push_back(f.paths);
            return true;
        },
        opt);
    return out;
}

}  // namespace icegt
