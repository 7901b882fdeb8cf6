// Runs the twelve acceptance checks and prints one PASS/FAIL line for each.

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <chrono>
#include <cstring>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <iostream>
#include <sstream>

#include "fixtures.hpp"
#include "icegt/cli.hpp"
#include "icegt/enum20v.hpp"
#include "icegt/enum6v.hpp"
#include "icegt/probbij.hpp"
#include "icegt/verify.hpp"

using namespace icegt;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double s) {
    std::ostringstream o;
    o.precision(3);
    o << std::fixed << s << "s";
    return o.str();
}

Outcome suite_outcome(const std::string& name, const VerifyRange& r, double limit = 0) {
    auto t0 = Clock::now();
    SuiteResult res = run_suite(name, r);
    double dt = seconds_since(t0);
    bool ok = res.ok() && (limit <= 0 || dt < limit);
    std::string d = std::to_string(res.checked) + " checked, " + std::to_string(res.failed) + " failed, " + fmt(dt);
    if (!res.counterexamples.empty()) d += ", first counterexample " + res.counterexamples.front().dump();
    return {ok, d};
}

Outcome product_formula() {
    const char* values[] = {"1", "4", "60", "3328", "678912"};
    bool ok = true;
    std::string d;
    for (int n = 1; n <= 5; ++n) {
        auto t0 = Clock::now();
        Count20V c = n <= 4 ? count_20v_explicit(BoundarySpec::iota(n)) : count_20v(BoundarySpec::iota(n));
        double dt = seconds_since(t0);
        double limit = n <= 4 ? 10 : 300;
        bool good = c.count == BigInt(values[n - 1]) && dt < limit;
        ok = ok && good;
        d += (n > 1 ? ", " : "") + c.count.get_str() + " (" + c.method + " " + fmt(dt) + ")";
    }
    return {ok, d};
}

Outcome ybe_gate() {
    auto t0 = Clock::now();
    YbeReport r;
    bool ok = verify_ybe(&r);
    double dt = seconds_since(t0);
    ok = ok && r.boundaries == 64 && r.equal == 64 && r.balanced_unit == 20 && dt < 1.0;
    return {ok, std::to_string(r.equal) + "/64 equal, " + std::to_string(r.balanced_unit) + " balanced give 1, " +
                    std::to_string(r.unbalanced_zero) + " unbalanced give 0, " + fmt(dt)};
}

Outcome worked_examples() {
    bool ok = true;
    std::string d;
    auto note = [&](bool good, const std::string& what) {
        ok = ok && good;
        d += (d.empty() ? "" : ", ") + what + (good ? " ok" : " FAILED");
    };

    PathFamily f = fixtures::crossing_family();
    Domain dm = domain_for(f);
    EdgeOrientation o = paths_to_orientation(dm, f);
    WeightMonomial w = omega(dm, o);
    note(ic(dm, o) == 3 && w == WeightMonomial(-20, 12) && prefactor(f.k) * w == WeightMonomial(18, 0),
         "crossing example ic=3 omega=2^(-10/3)q^12 C*omega=2^3");

    note(omega_fsa(fixtures::fsa_pattern()) == pow2(13), "pattern weight 2^13");

    PathFamily six = fixtures::six_path_family();
    BarredTriangle t = psi1(six);
    note(t == fixtures::six_path_triangle() && psi2(t) == fixtures::six_path_pattern(),
         "six-path psi for k=(2,3,5,6,7,8)");

    const int b = (1 << static_cast<int>(Dir::NW)) | (1 << static_cast<int>(Dir::SE));
    LocalConfig along{b, 4};
    bool reach = true;
    for (auto [from, to] : {std::pair{LocalShape::BendSW, LocalShape::BendNE}, {LocalShape::BendNE, LocalShape::BendSW}}) {
        LocalKernel lk = local_kernel(from, to, b);
        auto it = std::find(lk.xs.begin(), lk.xs.end(), along);
        reach = reach && it != lk.xs.end() && lk.reachable(static_cast<int>(it - lk.xs.begin())) == 2;
    }
    note(reach, "bend flips reach 2 configurations both ways");
    return {ok, d};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome sampler_law() {
    GTPattern p = fixtures::small_fibre_pattern();
    FiberSampler s(p);
    const int draws = 100000;
    std::mt19937_64 rng(20240611);
    std::vector<long> hits(s.triangles().size());
    for (int i = 0; i < draws; ++i) ++hits[s.draw_index(rng)];
    double stat = 0;
    std::string law;
    for (size_t i = 0; i < hits.size(); ++i) {
        double e = draws * s.probability(i).get_d();
        stat += (hits[i] - e) * (hits[i] - e) / e;
        law += (i ? "," : "") + s.probability(i).get_str();
    }
    boost::math::chi_squared dist(static_cast<double>(hits.size() - 1));
    double pvalue = boost::math::cdf(boost::math::complement(dist, stat));

    std::vector<std::string> args{"sample", "--pattern", "2;2,3;2,3,3;1,2,3,4", "--count", "8", "--seed", "42"};
    std::ostringstream a, b, err;
    run_cli(args, a, err);
    run_cli(args, b, err);
    bool golden = a.str() == b.str() && a.str() == slurp(std::string(ICEGT_GOLDEN_DIR) + "/sample_seed42.jsonl");

    std::ostringstream d;
    d << "law (" << law << "), chi2=" << stat << " p=" << pvalue << ", golden " << (golden ? "stable" : "DIFFERS");
    std::multiset<BigRat> probs, expect{BigRat(1, 8), BigRat(1, 8), BigRat(1, 4), BigRat(1, 8), BigRat(1, 8), BigRat(1, 4)};
    for (size_t i = 0; i < hits.size(); ++i) probs.insert(s.probability(i));
    bool law_ok = probs == expect;
    return {law_ok && pvalue > 0.001 && golden, d.str()};
}

Outcome kernel_axioms(const VerifyRange& range) {
    long kernels = 0;
    std::string bad;
    auto check = [&](const AxiomReport& r, const std::string& what) {
        ++kernels;
        if (!r.ok && bad.empty()) bad = what + ": " + r.violation;
    };

    for (LocalShape from : {LocalShape::BendSW, LocalShape::BendNE, LocalShape::Degree6})
        for (LocalShape to : {LocalShape::BendSW, LocalShape::BendNE, LocalShape::Degree6})
            for (int b = 0; b < 64; ++b) {
                if (local_configs(from, b).empty() && local_configs(to, b).empty()) continue;
                LocalKernel lk = local_kernel(from, to, b);
                check(check_axioms(lk.wx, lk.wy, lk.k),
                      std::string("local ") + shape_name(from) + "->" + shape_name(to) + " b=" + std::to_string(b));
            }

    // psi1 and psi2 are block diagonal over the fibres of psi, so each fibre
    // gets its own kernels; whole-domain kernels are built where they stay small.
    const size_t dense_limit = 250000;
    for (int n = 1; n <= range.nmax; ++n)
        for (const auto& k : all_boundaries(n, range.kmax)) {
            const std::string tag = " k=" + k.to_string();
            Domain d = Domain::rect(k);
            std::vector<GTPattern> pats;
            std::vector<BigRat> wpat;
            std::map<GTPattern, size_t> index;
            enumerate_gt(k.values(), [&](const GTPattern& p) {
                index[p] = pats.size();
                pats.push_back(p);
                BigRat w(omega_fsa(p), pow2(n));
                w.canonicalize();
                wpat.push_back(w);
                return true;
            });

            struct Fibre {
                std::vector<BarredTriangle> conf;  // psi1 image of each configuration
                std::vector<BigRat> wconf;
            };
            std::vector<Fibre> fibres(pats.size());
            std::vector<BarredTriangle> all_tris;
            std::vector<BigRat> all_w;
            enumerate_m6v(k, [&](const PathFamily&, const EdgeOrientation& o) {
                BarredTriangle t = psi1(d, o);
                size_t z = index.at(psi2(t));
                fibres[z].conf.push_back(t);
                fibres[z].wconf.push_back(BigRat(pow2(ic(d, o))));
                all_tris.push_back(t);
                all_w.push_back(fibres[z].wconf.back());
                return true;
            });

            try {
                for (size_t z = 0; z < pats.size(); ++z) {
                    const std::string ztag = tag + " T'=" + pattern_to_json(pats[z]).dump();
                    Fibre& f = fibres[z];
                    std::vector<BarredTriangle> ys = fiber(pats[z], range.caps);
                    std::sort(ys.begin(), ys.end());
                    std::vector<BigRat> wy;
                    for (const auto& t : ys) wy.push_back(BigRat(pow2(ic_triangle(t))));
                    std::vector<int> to_y, to_z(ys.size(), 0), conf_to_z(f.conf.size(), 0);
                    for (const auto& t : f.conf)
                        to_y.push_back(static_cast<int>(std::lower_bound(ys.begin(), ys.end(), t) - ys.begin()));
                    std::vector<BigRat> wz{wpat[z]};
                    Kernel k1 = kernel_from_surjection(to_y, f.wconf, wy);
                    check(check_axioms(f.wconf, wy, k1), "psi1" + ztag);
                    Kernel k2 = kernel_from_surjection(to_z, wy, wz);
                    check(check_axioms(wy, wz, k2), "psi2" + ztag);
                    check(check_axioms(f.wconf, wz, kernel_from_surjection(conf_to_z, f.wconf, wz)), "psi" + ztag);
                    check(check_axioms(f.wconf, wz, compose(k1, k2)), "psi2 after psi1" + ztag);
                }

                std::vector<BigRat> wone{BigRat(count_20v(k, range.caps).count)};
                Kernel collapse = kernel_from_surjection(std::vector<int>(pats.size(), 0), wpat, wone);
                check(check_axioms(wpat, wone, collapse), "collapse" + tag);

                if (all_tris.size() * pats.size() <= dense_limit) {
                    std::vector<int> to_pat;
                    for (const auto& t : all_tris) to_pat.push_back(static_cast<int>(index.at(psi2(t))));
                    Kernel whole = kernel_from_surjection(to_pat, all_w, wpat);
                    check(check_axioms(all_w, wpat, whole), "psi" + tag);
                    check(check_axioms(all_w, wone, compose(whole, collapse)), "collapse after psi" + tag);
                }
            } catch (const KernelError& e) {
                ++kernels;
                if (bad.empty()) bad = std::string(e.what()) + tag;
            }
        }
    return {bad.empty(), std::to_string(kernels) + " kernels" + (bad.empty() ? "" : ", first failure " + bad)};
}

}  // namespace

int main(int argc, char** argv) {
    VerifyRange range;  // n <= 4, k_n <= 6, m <= 6, fences up to 12
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--n5") == 0) range.include_n5 = true;

    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> criteria{
        {"product formula 1,4,60,3328,678912", product_formula},
        {"Yang-Baxter gate", ybe_gate},
        {"C_k * omega = 2^ic on every M_k", [&] { return suite_outcome("thm42", range); }},
        {"ic = alpha_bar + beta and psi1 round trip", [&] { return suite_outcome("prop54", range); }},
        {"fibre sums equal 2^-n omega_FSA", [&] { return suite_outcome("thm52", range); }},
        {"20V count equals 2^-n sum omega_FSA", [&] { return suite_outcome("thm11", range, 600); }},
        {"free boundary sums", [&] { return suite_outcome("thm12", range); }},
        {"fence ideals sum to 2^#F", [&] { return suite_outcome("lemma510", range, 60); }},
        {"ic and inv equidistributed", [&] { return suite_outcome("equidist", range); }},
        {"worked examples", worked_examples},
        {"sampler law and golden output", sampler_law},
        {"kernel axioms", [&] { return kernel_axioms(range); }},
    };

    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].name << ": " << o.detail
                  << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
    return failed == 0 ? 0 : 1;
}
