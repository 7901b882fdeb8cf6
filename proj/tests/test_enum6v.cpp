#include <doctest.h>

#include <algorithm>
#include <deque>
#include <set>

#include "fixtures.hpp"
#include "icegt/enum20v.hpp"
#include "icegt/enum6v.hpp"
#include "oracles.hpp"

using namespace icegt;

namespace {

std::vector<EdgeOrientation> all_m6v(const BoundarySpec& k) {
    std::vector<EdgeOrientation> out;
    enumerate_m6v(k, [&](const PathFamily&, const EdgeOrientation& o) {
        out.push_back(o);
        return true;
    });
    return out;
}

}  // namespace

TEST_CASE("crossing example") {
    PathFamily f = fixtures::crossing_family();
    Domain d = domain_for(f);
    EdgeOrientation o = paths_to_orientation(d, f);
    Classification c = classify(d, o);
    CHECK(c.stats.even(1) == 1);
    CHECK(c.stats.odd(3) == 2);
    CHECK(ic(d, o) == 3);
    CHECK(omega(d, o) == WeightMonomial(-20, 12));
    CHECK(prefactor(f.k) * omega(d, o) == WeightMonomial(18, 0));
    // a1^5 b1^7 c1^4 a3^5 b3^5 c3^2
    CHECK(c.stats.odd(1) + c.stats.odd(2) == 5);
    CHECK(c.stats.odd(3) + c.stats.odd(4) == 7);
    CHECK(c.stats.odd(5) + c.stats.odd(6) == 4);
    CHECK(c.stats.even(1) + c.stats.even(2) == 5);
    CHECK(c.stats.even(3) + c.stats.even(4) == 5);
    CHECK(c.stats.even(5) + c.stats.even(6) == 2);
}

TEST_CASE("x_max") {
    for (int n = 1; n <= 5; ++n) {
        PathFamily f = x_max(BoundarySpec::iota(n));
        Domain d = domain_for(f);
        EdgeOrientation o = paths_to_orientation(d, f);
        CHECK(validate_ice(d, o).ok);
        CHECK(ic(d, o) == n * (n - 1) / 2);
    }
    PathFamily one = x_max(BoundarySpec({1}));
    Domain d1 = domain_for(one);
    EdgeOrientation o1 = paths_to_orientation(d1, one);
    // in from the west, out to the south: a turning vertex, weight c1 = a1
    CHECK(vertex_type(d1, o1, 0) == 5);
    CHECK(omega(d1, o1) == WeightMonomial(-2, 0));
    CHECK(inv(d1, o1) == 0);
}

TEST_CASE("ic distribution matches the oracle") {
    for (const auto& k : std::vector<BoundarySpec>{BoundarySpec({1, 2}), BoundarySpec({1, 2, 3}),
                                                   BoundarySpec({1, 3, 4}), BoundarySpec({2, 3, 4, 6})}) {
        std::map<int, long> hist;
        Domain d = Domain::rect(k);
        for (const auto& o : all_m6v(k)) ++hist[ic(d, o)];
        CHECK(hist == oracle::m6v_ic_histogram(k.values()));
    }
    // frozen from the oracle
    CHECK(oracle::count_m6v({1, 2, 3}) == 26);
    CHECK(oracle::count_m6v({1, 2, 3, 4}) == 646);
    CHECK(oracle::count_m6v({2, 3, 4, 6}) == 1832);
    CHECK(all_m6v(BoundarySpec::iota(4)).size() == 646);
}

TEST_CASE("weighted six-vertex count equals the twenty-vertex count") {
    CHECK(weighted_count_m6v(BoundarySpec({1, 2})) == 4);
    CHECK(weighted_count_m6v(BoundarySpec({1, 2, 3})) == 60);
    for (int n = 1; n <= 3; ++n)
        for (const auto& k : all_boundaries(n, 5)) CHECK(weighted_count_m6v(k) == count_20v(k).count);
    CHECK(weighted_count_m6v(BoundarySpec({2, 3, 4, 6})) == count_20v(BoundarySpec({2, 3, 4, 6})).count);
}

TEST_CASE("inv statistic") {
    for (int n = 1; n <= 4; ++n) {
        BoundarySpec k = BoundarySpec::iota(n);
        Domain d = Domain::rect(k);
        std::multiset<long> ics, invs;
        for (const auto& o : all_m6v(k)) {
            Classification c = classify(d, o);
            long v = inv(d, o);
            CHECK(ic(d, o) == v + c.stats.even(1) - c.stats.even(3));
            ics.insert(ic(d, o));
            invs.insert(v);
        }
        CHECK(ics == invs);
    }
}

TEST_CASE("sign matrix rows run top-down") {
    PathFamily f = fixtures::crossing_family();
    Domain d = domain_for(f);
    EdgeOrientation o = paths_to_orientation(d, f);
    SignMatrix a = sign_matrix(d, o);
    REQUIRE(a.rows == 7);
    REQUIRE(a.cols == 4);
    // a path enters from the west on lattice rows 1,3,5,7, i.e. matrix rows 7,5,3,1
    for (int r = 1; r <= a.rows; ++r) {
        int sum = 0;
        const int entering = r % 2 == 1 ? 1 : 0;
        for (int c = 1; c <= a.cols; ++c) {
            sum += a.at(r, c);
            CHECK((sum == entering || sum == entering - 1));
        }
        CHECK(sum == entering);
    }
    for (int c = 1; c <= a.cols; ++c) {
        int sum = 0;
        for (int r = 1; r <= a.rows; ++r) {
            sum += a.at(r, c);
            CHECK((sum == 0 || sum == 1));
        }
        CHECK(sum == 1);
    }
    // path 4 turns down at (2,7), the top-left area of the matrix
    CHECK(a.at(1, 2) == 1);
    CHECK(a.at(1, 1) == 0);
}

TEST_CASE("corner flips") {
    BoundarySpec k({1, 2});
    Domain d = Domain::rect(k);
    EdgeOrientation top = paths_to_orientation(d, x_max(k));
    std::vector<std::pair<int, int>> cells;
    for (int col = 1; col < 2; ++col)
        for (int row = 1; row < 3; ++row)
            if (flippable(d, top, col, row)) cells.push_back({col, row});
    REQUIRE(cells.size() == 1);
    EdgeOrientation next = corner_flip(d, top, cells[0].first, cells[0].second);
    CHECK(validate_ice(d, next).ok);
    CHECK(next != top);
    CHECK(corner_flip(d, next, cells[0].first, cells[0].second) == top);
    CHECK_THROWS(corner_flip(d, top, 1, 3 - cells[0].second));
}

TEST_CASE("corner flips reach every configuration") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& k : all_boundaries(n, 4)) {
            Domain d = Domain::rect(k);
            std::set<EdgeOrientation> seen;
            std::deque<std::pair<EdgeOrientation, int>> queue;
            EdgeOrientation start = paths_to_orientation(d, x_max(k));
            seen.insert(start);
            queue.push_back({start, ic(d, start)});
            while (!queue.empty()) {
                auto [o, tracked] = queue.front();
                queue.pop_front();
                REQUIRE(tracked == ic(d, o));
                for (int col = 1; col < n; ++col)
                    for (int row = 1; row < d.row_max(); ++row) {
                        if (!flippable(d, o, col, row)) continue;
                        int delta = corner_flip_ic_delta(d, o, col, row);
                        CHECK(std::abs(delta) <= 2);
                        EdgeOrientation p = corner_flip(d, o, col, row);
                        CHECK(ic(d, p) == tracked + delta);
                        if (seen.insert(p).second) queue.push_back({p, tracked + delta});
                    }
            }
            CHECK(seen.size() == all_m6v(k).size());
        }
}
