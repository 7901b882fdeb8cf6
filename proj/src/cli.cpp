#include "icegt/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <random>

#include "icegt/enum20v.hpp"
#include "icegt/enum6v.hpp"
#include "icegt/probbij.hpp"
#include "icegt/verify.hpp"

namespace icegt {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CountArgs {
    std::string model;
    std::string k;
    bool weighted = false;
    std::string method = "auto";
    int threads = 1;
    bool timing = false;
    bool list = false;
    std::optional<uint64_t> limit;
};

struct VerifyArgs {
    std::string suite = "all";
    bool quick = false;
    std::optional<int> nmax, kmax, mmax, size;
    bool n5 = false;
    int threads = 1;
    std::string replay_file;
};

struct SampleArgs {
    std::string pattern;
    std::string pattern_file;
    std::string bottom;
    uint64_t count = 1;
    uint64_t seed = 0;
};

struct FormulaArgs {
    std::string which;
    int n = 0;
    std::optional<int> m;
};

Json k_json(const BoundarySpec& k) { return k.values(); }

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int cmd_count(const CountArgs& a, std::ostream& out, std::ostream& err) {
    Caps caps = Caps::from_env();
    BoundarySpec k = BoundarySpec::parse(a.k);
    auto t0 = std::chrono::steady_clock::now();
    Json report;
    report["model"] = a.model;
    report["k"] = k_json(k);

    if (a.model == "20v") {
        if (a.weighted) throw UsageError("--weighted applies to m6v and gt only");
        if (a.list) {
            auto res = enumerate_20v(
                k,
                [&](const PathFamily& f, const EdgeOrientation&) {
                    emit(out, family_to_json(f));
                    return true;
                },
                a.limit, caps);
            report["listed"] = res.emitted;
            report["truncated"] = res.truncated;
        } else {
            if (a.method != "auto" && a.method != "dp" && a.method != "explicit")
                throw UsageError("20v methods: auto, dp, explicit");
            Count20V c = a.method == "explicit" ? count_20v_explicit(k, a.threads, caps) : count_20v(k, caps);
            report["count"] = c.count.get_str();
            report["method"] = c.method;
        }
    } else if (a.model == "m6v") {
        if (a.list) {
            Domain d = Domain::rect(k);
            auto res = enumerate_m6v(
                k,
                [&](const PathFamily& f, const EdgeOrientation& o) {
                    emit(out, record_6v(d, o, f));
                    return true;
                },
                a.limit, caps);
            report["listed"] = res.emitted;
            report["truncated"] = res.truncated;
        } else {
            if (a.method != "auto" && a.method != "dp" && a.method != "explicit")
                throw UsageError("m6v methods: auto, dp, explicit");
            bool expl = a.method == "explicit";
            BigInt v;
            if (expl) {
                if (a.weighted) {
                    v = weighted_count_m6v(k, caps);
                } else {
                    auto res = enumerate_m6v(k, [](const PathFamily&, const EdgeOrientation&) { return true; }, {}, caps);
                    v = BigInt(static_cast<unsigned long>(res.emitted));
                }
            } else {
                v = a.weighted ? weighted_count_triangles(k, caps) : count_triangles(k, caps);
            }
            report[a.weighted ? "sum_2_ic" : "count"] = v.get_str();
            report["method"] = expl ? "explicit" : "dp";
        }
    } else if (a.model == "gt") {
        BigInt total = 0;
        uint64_t listed = 0;
        bool truncated = false;
        enumerate_gt(k.values(), [&](const GTPattern& p) {
            if (a.list) {
                if (a.limit && listed >= *a.limit) {
                    truncated = true;
                    return false;
                }
                Json j = pattern_to_json(p);
                j["omega_fsa"] = omega_fsa(p).get_str();
                emit(out, j);
                ++listed;
            }
            total += a.weighted ? omega_fsa(p) : BigInt(1);
            return true;
        });
        if (a.list) {
            report["listed"] = listed;
            report["truncated"] = truncated;
        } else {
            report[a.weighted ? "sum_omega_fsa" : "count"] = total.get_str();
            report["method"] = "explicit";
        }
    } else {
        throw UsageError("unknown model '" + a.model + "' (expected 20v, m6v or gt)");
    }
    if (a.timing)
        report["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    // listings keep stdout to one configuration per line
    emit(a.list ? err : out, report);
    return kOk;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
    if (!a.replay_file.empty()) {
        std::ifstream in(a.replay_file);
        if (!in) throw UsageError("cannot open '" + a.replay_file + "'");
        bool ok = true;
        std::string line;
        int records = 0;
        while (std::getline(in, line)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            Json j;
            try {
                j = Json::parse(line);
            } catch (const Json::exception& e) {
                throw UsageError(a.replay_file + ": " + e.what());
            }
            SuiteResult r = replay(j);
            ok = ok && r.ok();
            emit(out, r.to_json());
            ++records;
        }
        if (records == 0) throw UsageError(a.replay_file + ": no configurations");
        return ok ? kOk : kVerifyFailed;
    }

    VerifyRange range = a.quick ? VerifyRange::quick() : VerifyRange{};
    if (a.nmax) range.nmax = *a.nmax;
    if (a.kmax) range.kmax = *a.kmax;
    if (a.mmax) range.mmax = *a.mmax;
    if (a.size) range.size = *a.size;
    range.include_n5 = a.n5;
    range.threads = a.threads;

    std::vector<std::string> suites;
    if (a.suite == "all") {
        suites = suite_names();
    } else {
        const auto& names = suite_names();
        if (std::find(names.begin(), names.end(), a.suite) == names.end())
            throw UsageError("unknown suite '" + a.suite + "'");
        suites.push_back(a.suite);
    }
    bool ok = true;
    for (const auto& s : suites) {
        SuiteResult r = run_suite(s, range);
        ok = ok && r.ok();
        emit(out, r.to_json());
    }
    return ok ? kOk : kVerifyFailed;
}

int cmd_sample(const SampleArgs& a, std::ostream& out) {
    int given = !a.pattern.empty() + !a.pattern_file.empty() + !a.bottom.empty();
    if (given != 1) throw UsageError("give exactly one of --pattern, --pattern-file, --bottom");
    Caps caps = Caps::from_env();
    std::mt19937_64 rng(a.seed);

    if (!a.bottom.empty()) {
        // Pattern drawn with weight omega_FSA, then a configuration from its fibre.
        BoundarySpec k = BoundarySpec::parse(a.bottom);
        std::vector<GTPattern> patterns;
        std::vector<BigInt> cumulative;
        BigInt total = 0;
        enumerate_gt(k.values(), [&](const GTPattern& p) {
            patterns.push_back(p);
            total += omega_fsa(p);
            cumulative.push_back(total);
            if (patterns.size() > caps.max_configs) throw CapExceeded("max_configs", caps.max_configs);
            return true;
        });
        std::map<size_t, FiberSampler> samplers;
        for (uint64_t i = 0; i < a.count; ++i) {
            BigInt u = uniform_below(total, rng);
            size_t pi = std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin();
            auto it = samplers.find(pi);
            if (it == samplers.end()) it = samplers.emplace(pi, FiberSampler(patterns[pi], caps)).first;
            size_t j = it->second.draw_index(rng);
            const BarredTriangle& t = it->second.triangles()[j];
            BigRat prob(pow2(ic_triangle(t)) * pow2(k.n()), total);
            prob.canonicalize();
            emit(out, Json{{"seed", a.seed},
                           {"index", i},
                           {"generator", FiberSampler::kGenerator},
                           {"pattern", pattern_to_json(patterns[pi])},
                           {"sample", family_to_json(psi1_inverse(t))},
                           {"prob", prob.get_str()}});
        }
        return kOk;
    }

    GTPattern target;
    if (!a.pattern.empty())
        target = GTPattern{parse_rows(a.pattern)};
    else
        target = pattern_from_json(read_json_file(a.pattern_file));
    std::string why;
    if (!is_gt_pattern(target, &why)) throw UsageError("not a GT pattern: " + why);
    if (!is_triple_free(target)) throw UsageError("pattern is not triple-free");
    FiberSampler sampler(target, caps);
    for (uint64_t i = 0; i < a.count; ++i) {
        size_t j = sampler.draw_index(rng);
        emit(out, Json{{"seed", a.seed},
                       {"index", i},
                       {"generator", FiberSampler::kGenerator},
                       {"sample", family_to_json(psi1_inverse(sampler.triangles()[j]))},
                       {"prob", sampler.probability(j).get_str()}});
    }
    return kOk;
}

int cmd_formula(const FormulaArgs& a, std::ostream& out) {
    BigInt v;
    if (a.which == "df") {
        if (a.m) throw UsageError("formula df takes --n only");
        v = eval_df_formula(a.n);
    } else if (a.which == "free") {
        if (!a.m) throw UsageError("formula free needs --m");
        if (a.n < 1 || *a.m < a.n - 1) throw UsageError("formula free needs n >= 1 and m >= n-1");
        v = eval_free_boundary_formula(a.n, *a.m);
    } else {
        throw UsageError("unknown formula '" + a.which + "' (expected df or free)");
    }
    out << v.get_str() << '\n';
    return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact enumeration and verification for twenty-vertex, mixed six-vertex and GT models", "icegt"};
    app.require_subcommand(1);

    CountArgs ca;
    auto* count = app.add_subcommand("count", "Count or list configurations");
    count->add_option("model", ca.model, "20v, m6v or gt")->required();
    auto* kopt = count->add_option("--k", ca.k, "boundary, comma separated");
    count->add_option("--bottom", ca.k, "alias of --k")->excludes(kopt);
    count->add_flag("--weighted", ca.weighted, "sum 2^ic (m6v) or omega_FSA (gt)");
    count->add_option("--method", ca.method, "auto, dp or explicit");
    count->add_option("--threads", ca.threads, "worker threads for explicit 20v counting")->check(CLI::PositiveNumber);
    count->add_flag("--timing", ca.timing, "include wall time in the report");
    count->add_flag("--list", ca.list, "print every configuration as a JSON line");
    count->add_option("--limit", ca.limit, "stop listing after this many");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run exhaustive verification suites");
    verify->add_option("suite", va.suite, "ybe, thm42, prop54, thm52, lemma510, thm11, thm12, equidist or all");
    verify->add_flag("--quick", va.quick, "smaller default ranges");
    verify->add_option("--nmax", va.nmax);
    verify->add_option("--kmax", va.kmax);
    verify->add_option("--mmax", va.mmax);
    verify->add_option("--size", va.size, "largest fence size");
    verify->add_flag("--n5", va.n5, "also run equidistribution for k = (1,...,5)");
    verify->add_option("--threads", va.threads)->check(CLI::PositiveNumber);
    verify->add_option("--replay", va.replay_file, "file of configuration JSON lines to re-check");

    SampleArgs sa;
    auto* sample = app.add_subcommand("sample", "Draw configurations from the fibre of a GT pattern");
    sample->add_option("--pattern", sa.pattern, "rows from the apex, e.g. 2;2,3;2,3,3;1,2,3,4");
    sample->add_option("--pattern-file", sa.pattern_file, "JSON file with a \"rows\" array");
    sample->add_option("--bottom", sa.bottom, "sample over all of M_k instead");
    sample->add_option("--count", sa.count);
    sample->add_option("--seed", sa.seed);

    FormulaArgs fa;
    auto* formula = app.add_subcommand("formula", "Evaluate the closed product formulas");
    formula->add_option("which", fa.which, "df or free")->required();
    formula->add_option("--n", fa.n)->required();
    formula->add_option("--m", fa.m);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (count->parsed()) {
            if (ca.k.empty()) throw UsageError("count needs --k");
            return cmd_count(ca, out, err);
        }
        if (verify->parsed()) return cmd_verify(va, out);
        if (sample->parsed()) return cmd_sample(sa, out);
        return cmd_formula(fa, out);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kCapExceeded;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const LatticeError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ArithmeticError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace icegt
