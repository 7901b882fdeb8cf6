#include "icegt/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "icegt/enum20v.hpp"
#include "icegt/enum6v.hpp"
#include "icegt/fence.hpp"
#include "icegt/probbij.hpp"

namespace icegt {

VerifyRange VerifyRange::quick() {
    VerifyRange r;
    r.nmax = 3;
    r.kmax = 5;
    r.mmax = 5;
    r.size = 10;
    return r;
}

Json SuiteResult::to_json() const {
    Json j{{"suite", suite}, {"checked", checked}, {"failed", failed}, {"pass", ok()}};
    if (!detail.empty()) j["detail"] = detail;
    if (!counterexamples.empty()) j["counterexamples"] = counterexamples;
    return j;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"ybe",  "thm42", "prop54",   "thm52",
                                                "lemma510", "thm11", "thm12", "equidist"};
    return names;
}

namespace {

constexpr size_t kMaxCounterexamples = 5;

class Collector {
public:
    explicit Collector(std::string suite) { r_.suite = std::move(suite); }

    void pass() {
        std::lock_guard<std::mutex> l(mu_);
        ++r_.checked;
    }
    void fail(Json ce) {
        std::lock_guard<std::mutex> l(mu_);
        ++r_.checked;
        ++r_.failed;
        if (r_.counterexamples.size() < kMaxCounterexamples) r_.counterexamples.push_back(std::move(ce));
    }
    void check(bool ok, const std::function<Json()>& ce) { ok ? pass() : fail(ce()); }
    SuiteResult& result() { return r_; }

private:
    std::mutex mu_;
    SuiteResult r_;
};

std::vector<BoundarySpec> boundaries_in(int nmax, int kmax) {
    std::vector<BoundarySpec> out;
    for (int n = 1; n <= nmax; ++n)
        for (auto& k : all_boundaries(n, kmax)) out.push_back(std::move(k));
    return out;
}

// Runs body(i) for i in [0, count) on up to `threads` workers.
void parallel_for(size_t count, int threads, const std::function<void(size_t)>& body) {
    if (threads <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr err;
    std::mutex mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            try {
                for (size_t i = next++; i < count; i = next++) body(i);
            } catch (...) {
                std::lock_guard<std::mutex> l(mu);
                err = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

void for_each_m6v(const BoundarySpec& k, const Caps& caps,
                  const std::function<void(const Domain&, const PathFamily&, const EdgeOrientation&)>& f) {
    Domain d = Domain::rect(k);
    SearchOptions opt;
    opt.cap = caps.max_configs;
    search_families(
        d,
        [&](const PathFamily& p, const EdgeOrientation& o) {
            f(d, p, o);
            return true;
        },
        opt);
}

SuiteResult suite_ybe() {
    Collector c("ybe");
    for (int b = 0; b < 64; ++b) {
        RingElem ne = resolve_degree6(b, Bend::NE), sw = resolve_degree6(b, Bend::SW);
        bool ok = ne == sw && (balanced(b) ? ne == RingElem(BigRat(1)) : ne.is_zero());
        c.check(ok, [&] { return Json{{"boundary", b}, {"ne", ne.to_string()}, {"sw", sw.to_string()}}; });
    }
    return c.result();
}

SuiteResult suite_thm42(const VerifyRange& r) {
    Collector c("thm42");
    auto ks = boundaries_in(r.nmax, r.kmax);
    parallel_for(ks.size(), r.threads, [&](size_t i) {
        WeightMonomial pre = prefactor(ks[i]);
        for_each_m6v(ks[i], r.caps, [&](const Domain& d, const PathFamily& f, const EdgeOrientation& o) {
            bool ok = pre * omega(d, o) == WeightMonomial(6 * ic(d, o), 0);
            c.check(ok, [&] { return family_to_json(f); });
        });
    });
    return c.result();
}

SuiteResult suite_prop54(const VerifyRange& r) {
    Collector c("prop54");
    auto ks = boundaries_in(r.nmax, r.kmax);
    parallel_for(ks.size(), r.threads, [&](size_t i) {
        uint64_t configs = 0;
        for_each_m6v(ks[i], r.caps, [&](const Domain& d, const PathFamily& f, const EdgeOrientation& o) {
            ++configs;
            BarredTriangle t = psi1(d, o);
            bool ok = is_barred_triangle(t) && ic_triangle(t) == ic(d, o) && psi1_inverse_orientation(d, t) == o &&
                      psi1_inverse(t) == f;
            c.check(ok, [&] { return family_to_json(f); });
        });
        bool counts = count_triangles(ks[i], r.caps) == BigInt(static_cast<unsigned long>(configs));
        c.check(counts, [&] { return Json{{"k", ks[i].values()}, {"configs", configs}}; });
    });
    return c.result();
}

SuiteResult suite_thm52(const VerifyRange& r) {
    Collector c("thm52");
    auto ks = boundaries_in(r.nmax, r.kmax);
    parallel_for(ks.size(), r.threads, [&](size_t i) {
        const BoundarySpec& k = ks[i];
        std::map<GTPattern, BigInt> grouped;
        for_each_m6v(k, r.caps, [&](const Domain& d, const PathFamily&, const EdgeOrientation& o) {
            grouped[psi2(psi1(d, o))] += pow2(ic(d, o));
        });
        size_t seen = 0;
        enumerate_gt(k.values(), [&](const GTPattern& p) {
            ++seen;
            BigInt target = omega_fsa(p) / pow2(k.n());
            auto it = grouped.find(p);
            bool ok = it != grouped.end() && it->second == target && fiber_sum(p, r.caps) == target;
            c.check(ok, [&] { return pattern_to_json(p); });
            return true;
        });
        c.check(seen == grouped.size(), [&] { return Json{{"k", k.values()}, {"detail", "image size mismatch"}}; });
    });
    GTPattern example{{{2}, {2, 3}, {2, 3, 3}, {1, 2, 3, 4}}};
    std::multiset<int> ics;
    for (const auto& t : fiber(example, r.caps)) ics.insert(ic_triangle(t));
    c.check(ics == std::multiset<int>{2, 2, 2, 2, 3, 3} && fiber_sum(example, r.caps) == 32,
            [&] { return pattern_to_json(example); });
    return c.result();
}

SuiteResult suite_lemma510(const VerifyRange& r) {
    Collector c("lemma510");
    for (int s = 1; s <= r.size; ++s)
        for (const auto& f : all_fences(s)) {
            BigInt total = 0;
            enumerate_ideals(f, [&](const OrderIdeal& i) { total += pow2(ic_ideal(f, i)); });
            c.check(total == pow2(s), [&] { return Json{{"fence", f.steps}, {"sum", total.get_str()}}; });
        }
    return c.result();
}

SuiteResult suite_thm11(const VerifyRange& r) {
    Collector c("thm11");
    auto ks = boundaries_in(r.nmax, r.kmax);
    parallel_for(ks.size(), r.threads, [&](size_t i) {
        const BoundarySpec& k = ks[i];
        BigInt dp = count_20v(k, r.caps).count;
        BigInt sum = 0;
        enumerate_gt(k.values(), [&](const GTPattern& p) {
            sum += omega_fsa(p);
            return true;
        });
        bool ok = dp * pow2(k.n()) == sum && weighted_count_triangles(k, r.caps) == dp;
        c.check(ok, [&] {
            return Json{{"k", k.values()}, {"count_20v", dp.get_str()}, {"sum_omega_fsa", sum.get_str()}};
        });
    });
    return c.result();
}

SuiteResult suite_thm12(const VerifyRange& r) {
    Collector c("thm12");
    for (int n = 1; n <= r.nmax; ++n)
        for (int m = n - 1; m <= r.mmax; ++m) {
            auto ks = all_boundaries(n, m + 1);
            std::vector<BigInt> counts(ks.size());
            parallel_for(ks.size(), r.threads, [&](size_t i) { counts[i] = count_20v(ks[i], r.caps).count; });
            BigInt sum = 0;
            for (const auto& v : counts) sum += v;
            BigInt formula = eval_free_boundary_formula(n, m);
            c.check(sum == formula, [&] {
                return Json{{"n", n}, {"m", m}, {"sum", sum.get_str()}, {"formula", formula.get_str()}};
            });
        }
    for (int n = 1; n <= 6; ++n) {
        BigInt a = eval_free_boundary_formula(n, n - 1), b = eval_df_formula(n);
        c.check(a == b, [&] { return Json{{"n", n}, {"free", a.get_str()}, {"df", b.get_str()}}; });
    }
    return c.result();
}

SuiteResult suite_equidist(const VerifyRange& r) {
    Collector c("equidist");
    int top = r.include_n5 ? std::max(r.nmax, 5) : r.nmax;
    for (int n = 1; n <= top; ++n) {
        std::map<long, long> by_ic, by_inv;
        for_each_m6v(BoundarySpec::iota(n), r.caps, [&](const Domain& d, const PathFamily& f, const EdgeOrientation& o) {
            Classification cl = classify(d, o);
            long i = inv(d, o);
            int x = ic(d, o);
            ++by_ic[x];
            ++by_inv[i];
            // remark identity relating ic and inv
            bool ok = x == i + cl.stats.even(1) - cl.stats.even(3);
            c.check(ok, [&] { return family_to_json(f); });
        });
        c.check(by_ic == by_inv, [&] {
            Json a = Json::object(), b = Json::object();
            for (auto [k, v] : by_ic) a[std::to_string(k)] = v;
            for (auto [k, v] : by_inv) b[std::to_string(k)] = v;
            return Json{{"n", n}, {"ic", a}, {"inv", b}};
        });
    }
    return c.result();
}

}  // namespace

SuiteResult run_suite(const std::string& name, const VerifyRange& range) {
    if (name == "ybe") return suite_ybe();
    if (name == "thm42") return suite_thm42(range);
    if (name == "prop54") return suite_prop54(range);
    if (name == "thm52") return suite_thm52(range);
    if (name == "lemma510") return suite_lemma510(range);
    if (name == "thm11") return suite_thm11(range);
    if (name == "thm12") return suite_thm12(range);
    if (name == "equidist") return suite_equidist(range);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

SuiteResult replay(const Json& config) {
    Collector c("replay");
    PathFamily f = family_from_json(config);
    Domain d = domain_for(f);
    EdgeOrientation o;
    try {
        o = paths_to_orientation(d, f);
    } catch (const LatticeError& e) {
        c.fail(Json{{"paths", e.what()}});
        return c.result();
    }
    IceReport ice = validate_ice(d, o);
    c.check(ice.ok, [&] { return Json{{"ice", ice.message}}; });
    if (!ice.ok) return c.result();
    c.check(orientation_to_paths(d, o) == f, [&] { return Json{{"round_trip", false}}; });
    if (f.model == Model::SixV) {
        int x = ic(d, o);
        c.check(prefactor(f.k) * omega(d, o) == WeightMonomial(6 * x, 0),
                [&] { return Json{{"omega", monomial_to_json(omega(d, o))}, {"ic", x}}; });
        BarredTriangle t = psi1(d, o);
        c.check(ic_triangle(t) == x && psi1_inverse(t) == f, [&] { return triangle_to_json(t); });
    }
    return c.result();
}

}  // namespace icegt
