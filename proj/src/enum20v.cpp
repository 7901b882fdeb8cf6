#include "icegt/enum20v.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <thread>
#include <utility>

namespace icegt {

SearchResult enumerate_20v(const BoundarySpec& k, const FamilySink& sink, std::optional<uint64_t> limit,
                           const Caps& caps) {
    Domain d = Domain::quad(k);
    SearchOptions opt;
    opt.limit = limit;
    opt.cap = caps.max_configs;
    return search_families(d, sink, opt);
}

namespace {

// Occupied crossing edges into the next column, as bitmasks over rows
// (bit = row - lowest row of the domain).
using State = std::pair<uint64_t, uint64_t>;  // (horizontal, diagonal)

class ColumnSweep {
public:
    ColumnSweep(const BoundarySpec& k, const Caps& caps) : n_(k.n()), kn_(k.last()), lo_(2 - k.n()), caps_(caps) {
        if (kn_ - lo_ + 1 > 63) throw CapExceeded("dp_rows", 63);
        uint64_t h = 0;
        for (int v : k.values()) h |= bit(v);
        cur_[{h, 0}] = 1;
    }

    BigInt run() {
        for (int c = 1; c <= n_; ++c) {
            std::map<State, BigInt> next;
            for (const auto& [st, cnt] : cur_) {
                col_ = c;
                in_ = st;
                weight_ = &cnt;
                out_ = &next;
                fill(kn_, 0, 0, 0);
                if (next.size() > caps_.max_dp_states) throw CapExceeded("max_dp_states", caps_.max_dp_states);
            }
            cur_ = std::move(next);
        }
        auto it = cur_.find({0, 0});
        return it == cur_.end() ? BigInt(0) : it->second;
    }

private:
    uint64_t bit(int row) const { return uint64_t{1} << (row - lo_); }

    void fill(int row, int north, uint64_t h_out, uint64_t d_out) {
        const int bottom = 2 - col_;
        const int in = ((in_.first & bit(row)) ? 1 : 0) + ((in_.second & bit(row)) ? 1 : 0) + north;
        const int side = col_ < n_ ? 1 : 0;
        for (int e = 0; e <= side; ++e)
            for (int se = 0; se <= side; ++se) {
                int s = in - e - se;
                if (s < 0 || s > 1) continue;
                if (row == bottom && s != 1) continue;
                uint64_t h2 = e ? (h_out | bit(row)) : h_out;
                uint64_t d2 = se ? (d_out | bit(row - 1)) : d_out;
                if (row == bottom) {
                    (*out_)[{h2, d2}] += *weight_;
                } else {
                    fill(row - 1, s, h2, d2);
                }
            }
    }

    int n_, kn_, lo_;
    Caps caps_;
    std::map<State, BigInt> cur_;
    int col_ = 0;
    State in_{};
    const BigInt* weight_ = nullptr;
    std::map<State, BigInt>* out_ = nullptr;
};

}  // namespace

Count20V count_20v(const BoundarySpec& k, const Caps& caps) {
    ColumnSweep sweep(k, caps);
    return {k, sweep.run(), "dp"};
}

Count20V count_20v_explicit(const BoundarySpec& k, int threads, const Caps& caps) {
    Domain d = Domain::quad(k);
    auto count_all = [&](const std::vector<std::string>& prefix) {
        SearchOptions opt;
        opt.cap = caps.max_configs;
        opt.prefix = prefix;
        return search_families(d, [](const PathFamily&, const EdgeOrientation&) { return true; }, opt).emitted;
    };
    if (threads <= 1) return {k, BigInt(std::to_string(count_all({}))), "explicit"};

    std::vector<std::vector<std::string>> parts;
    for (int depth = 1; depth <= d.n(); ++depth) {
        parts = family_prefixes(d, depth);
        if (parts.size() >= static_cast<size_t>(4 * threads)) break;
    }
    std::atomic<size_t> next{0};
    std::atomic<uint64_t> total{0};
    std::mutex err_mu;
    std::exception_ptr err;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            try {
                for (size_t i = next++; i < parts.size(); i = next++) total += count_all(parts[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                err = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
    if (total > caps.max_configs) throw CapExceeded("max_configs", caps.max_configs);
    return {k, BigInt(std::to_string(total.load())), "explicit"};
}

}  // namespace icegt
