#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "icegt/boundary.hpp"

namespace icegt {

enum class Model { TwentyV, SixV };

const char* model_name(Model m);  // "20v" / "m6v"
Model parse_model(const std::string& s);

// In-sides listed clockwise (W, NW, N), then out-sides clockwise (E, SE, S).
enum class Dir : uint8_t { W = 0, NW = 1, N = 2, E = 3, SE = 4, S = 5 };
inline constexpr std::array<Dir, 3> kInDirs{Dir::W, Dir::NW, Dir::N};
inline constexpr std::array<Dir, 3> kOutDirs{Dir::E, Dir::SE, Dir::S};

inline bool is_in_dir(Dir d) { return static_cast<int>(d) < 3; }
inline int dir_rank(Dir d) { return static_cast<int>(d) % 3; }  // clockwise rank within its side
Dir opposite(Dir d);
char step_char(Dir out);     // E->'R', S->'D', SE->'S'
Dir step_dir(char c);        // inverse of step_char

enum class EdgeKind : uint8_t { H, V, D };

struct Vertex {
    int col;
    int row;
};

// Internal edge; tail -> head is the forward direction (east, south or south-east).
struct Edge {
    int tail;
    int head;
    EdgeKind kind;
};

struct Slot {
    enum class Kind : uint8_t { None, Internal, Boundary };
    Kind kind = Kind::None;
    int edge = -1;
    bool used = false;  // boundary slots only: fixed path usage
};

class Domain {
public:
    static Domain quad(const BoundarySpec& k);
    static Domain rect(const BoundarySpec& k);

    Model model() const { return model_; }
    const BoundarySpec& spec() const { return spec_; }
    int n() const { return spec_.n(); }

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const Vertex& vertex(int v) const { return vertices_[v]; }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    int index_of(int col, int row) const;  // -1 when (col,row) is not a vertex
    const Slot& slot(int v, Dir d) const { return slots_[v][static_cast<int>(d)]; }

    int row_min(int col) const;
    int row_max() const { return row_hi_; }
    int half_degree() const { return model_ == Model::TwentyV ? 3 : 2; }
    bool has_diagonals() const { return model_ == Model::TwentyV; }

    // Paths are 0-based here: path l enters at start_vertex(l) from the west
    // and leaves end_vertex(l) through the south.
    int start_vertex(int l) const;
    int end_vertex(int l) const;

private:
    Domain() = default;
    void build();

    Model model_ = Model::TwentyV;
    BoundarySpec spec_;
    int row_lo_ = 0;
    int row_hi_ = 0;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::array<Slot, 6>> slots_;
    std::vector<int> grid_;
};

// forward[e] == true iff internal edge e points east / south / south-east,
// i.e. it is occupied by a path.
struct EdgeOrientation {
    std::vector<bool> forward;

    bool operator==(const EdgeOrientation&) const = default;
    auto operator<=>(const EdgeOrientation& o) const { return forward <=> o.forward; }
};

bool path_used(const Domain& d, const EdgeOrientation& o, int v, Dir dir);

struct PathFamily {
    Model model = Model::TwentyV;
    BoundarySpec k;
    std::vector<std::string> paths;

    bool operator==(const PathFamily&) const = default;
};

class LatticeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct IceReport {
    bool ok = true;
    std::vector<int> violations;  // vertex indices
    std::string message;
};

IceReport validate_ice(const Domain& d, const EdgeOrientation& o);

EdgeOrientation paths_to_orientation(const Domain& d, const PathFamily& f);
PathFamily orientation_to_paths(const Domain& d, const EdgeOrientation& o);

Domain domain_for(const PathFamily& f);
EdgeOrientation paths_to_orientation(const PathFamily& f);

// Depth-first search over osculating path families in lexicographic order of
// step sequences (path 1 first, steps ordered D < R < S). Each configuration
// is produced once: where paths share a vertex, the lower-indexed path takes
// the more south-westerly pairing of in/out sides.
using FamilySink = std::function<bool(const PathFamily&, const EdgeOrientation&)>;

struct SearchResult {
    uint64_t emitted = 0;
    bool truncated = false;
};

struct SearchOptions {
    std::optional<uint64_t> limit;
    uint64_t cap = 10'000'000;
    std::vector<std::string> prefix;  // fixed step strings for the leading paths
    int depth = -1;                   // stop after this many paths (partial families); -1 = all
};

SearchResult search_families(const Domain& d, const FamilySink& sink, const SearchOptions& opt = {});

// Admissible partial families of the first `depth` paths in canonical order
// (some may have no completion); used to split a search into parts.
std::vector<std::vector<std::string>> family_prefixes(const Domain& d, int depth);

class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::string cap, uint64_t limit);
    const std::string& cap() const { return cap_; }
    uint64_t limit() const { return limit_; }

private:
    std::string cap_;
    uint64_t limit_;
};

}  // namespace icegt
