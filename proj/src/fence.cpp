#include "icegt/fence.hpp"

#include <set>
#include <stdexcept>

namespace icegt {

Fence parse_fence(const std::string& steps) {
    for (char c : steps)
        if (c != 'u' && c != 'd') throw std::invalid_argument("fence: steps must be 'u' or 'd'");
    return Fence{steps};
}

bool is_order_ideal(const Fence& f, const OrderIdeal& in) {
    if (static_cast<int>(in.size()) != f.size()) return false;
    for (int t = 0; t + 1 < f.size(); ++t) {
        bool lower_in = f.steps[t] == 'u' ? in[t] : in[t + 1];
        bool upper_in = f.steps[t] == 'u' ? in[t + 1] : in[t];
        if (upper_in && !lower_in) return false;
    }
    return true;
}

void enumerate_ideals(const Fence& f, const std::function<void(const OrderIdeal&)>& sink) {
    OrderIdeal cur(f.size(), false);
    std::function<void(int)> go = [&](int t) {
        if (t == f.size()) {
            sink(cur);
            return;
        }
        for (int b = 0; b <= 1; ++b) {
            if (t > 0) {
                bool prev = cur[t - 1];
                if (f.steps[t - 1] == 'u' && b && !prev) continue;
                if (f.steps[t - 1] == 'd' && prev && !b) continue;
            }
            cur[t] = b;
            go(t + 1);
        }
    };
    go(0);
}

std::vector<OrderIdeal> order_ideals(const Fence& f) {
    std::vector<OrderIdeal> out;
    enumerate_ideals(f, [&](const OrderIdeal& i) { out.push_back(i); });
    return out;
}

int ic_ideal(const Fence& f, const OrderIdeal& in) {
    int c = 0;
    for (int t = 0; t + 1 < f.size(); ++t) {
        if (f.steps[t] == 'd' && !in[t] && !in[t + 1]) ++c;
        if (f.steps[t] == 'u' && in[t] && in[t + 1]) ++c;
    }
    return c;
}

BigRat fence_gf(const Fence& f, const BigRat& q) {
    BigRat total = 0;
    enumerate_ideals(f, [&](const OrderIdeal& i) {
        BigRat term = 1;
        for (int e = ic_ideal(f, i); e > 0; --e) term *= q;
        total += term;
    });
    return total;
}

std::vector<Fence> all_fences(int size) {
    if (size < 1) throw std::invalid_argument("fence size must be positive");
    std::vector<Fence> out;
    const int m = size - 1;
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        std::string s(m, 'd');
        for (int t = 0; t < m; ++t)
            if (mask >> (m - 1 - t) & 1) s[t] = 'u';
        out.push_back(Fence{s});
    }
    return out;
}

Fence fence_of(const BlockPart& zigzag) {
    if (zigzag.joint) throw std::invalid_argument("fence_of: joint part given");
    if (zigzag.cells.empty()) throw std::invalid_argument("fence_of: empty zigzag part");
    Fence f;
    for (size_t a = 0; a + 1 < zigzag.cells.size(); ++a) {
        const Cell& u = zigzag.cells[a];
        const Cell& l = zigzag.cells[a + 1];
        if (l.row != u.row + 1 || (l.col != u.col && l.col != u.col + 1))
            throw std::invalid_argument("fence_of: cells are not a zigzag");
        f.steps += l.col == u.col + 1 ? 'u' : 'd';
    }
    return f;
}

OrderIdeal ideal_of(const BarredTriangle& t, const BlockPart& zigzag) {
    OrderIdeal in;
    for (const Cell& c : zigzag.cells) in.push_back(!is_barred(t.at(c.row, c.col)));
    return in;
}

int distinct_ideal_counts(int size) {
    std::set<size_t> seen;
    for (const auto& f : all_fences(size)) {
        size_t count = 0;
        enumerate_ideals(f, [&](const OrderIdeal&) { ++count; });
        seen.insert(count);
    }
    return static_cast<int>(seen.size());
}

}  // namespace icegt
