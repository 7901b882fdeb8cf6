#pragma once

#include <string>
#include <vector>

#include "icegt/caps.hpp"
#include "icegt/json_io.hpp"

namespace icegt {

struct VerifyRange {
    int nmax = 4;
    int kmax = 6;
    int mmax = 6;
    int size = 12;
    bool include_n5 = false;  // equidistribution on k = (1,...,5)
    int threads = 1;
    Caps caps = Caps::from_env();

    static VerifyRange quick();
};

struct SuiteResult {
    std::string suite;
    uint64_t checked = 0;
    uint64_t failed = 0;
    std::vector<Json> counterexamples;  // first few failures, replayable where possible
    std::string detail;

    bool ok() const { return failed == 0 && checked > 0; }
    Json to_json() const;
};

const std::vector<std::string>& suite_names();
SuiteResult run_suite(const std::string& name, const VerifyRange& range);

// Re-checks one serialized configuration (ice rule, path round trip, and for
// six-vertex configurations the weight identity and the triangle statistic).
SuiteResult replay(const Json& config);

}  // namespace icegt
