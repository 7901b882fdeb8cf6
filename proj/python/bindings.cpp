#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <sstream>

#include "icegt/cli.hpp"
#include "icegt/enum20v.hpp"
#include "icegt/enum6v.hpp"
#include "icegt/probbij.hpp"
#include "icegt/verify.hpp"

namespace py = pybind11;
using namespace icegt;

// Big integers cross the boundary as decimal strings; the Python package
// turns them into ints.

namespace {

std::string count_20v_str(const std::vector<int>& k, const std::string& method, int threads) {
    BoundarySpec spec(k);
    if (method == "dp") return count_20v(spec).count.get_str();
    if (method == "explicit") return count_20v_explicit(spec, threads).count.get_str();
    throw std::invalid_argument("method must be 'dp' or 'explicit'");
}

std::vector<std::string> list_m6v(const std::vector<int>& k, std::optional<uint64_t> limit) {
    BoundarySpec spec(k);
    Domain d = Domain::rect(spec);
    std::vector<std::string> out;
    enumerate_m6v(
        spec,
        [&](const PathFamily& f, const EdgeOrientation& o) {
            out.push_back(record_6v(d, o, f).dump());
            return true;
        },
        limit);
    return out;
}

std::vector<std::string> sample_lines(const Rows& rows, uint64_t count, uint64_t seed) {
    FiberSampler s(GTPattern{rows});
    std::mt19937_64 rng(seed);
    std::vector<std::string> out;
    for (uint64_t i = 0; i < count; ++i) {
        size_t j = s.draw_index(rng);
        out.push_back(Json{{"seed", seed},
                           {"index", i},
                           {"generator", FiberSampler::kGenerator},
                           {"sample", family_to_json(psi1_inverse(s.triangles()[j]))},
                           {"prob", s.probability(j).get_str()}}
                          .dump());
    }
    return out;
}

std::string suite_json(const std::string& name, bool quick, int threads) {
    VerifyRange r = quick ? VerifyRange::quick() : VerifyRange{};
    r.threads = threads;
    return run_suite(name, r).to_json().dump();
}

py::tuple cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code;
    {
        py::gil_scoped_release release;
        code = run_cli(args, out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_icegt, m) {
    m.doc() = "Exact counts and checks for twenty-vertex, mixed six-vertex and GT pattern models";

    py::register_exception<CapExceeded>(m, "CapExceeded");
    py::register_exception<LatticeError>(m, "LatticeError");

    m.def("count_20v", &count_20v_str, py::arg("k"), py::arg("method") = "dp", py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("weighted_count_m6v", [](const std::vector<int>& k) { return weighted_count_m6v(BoundarySpec(k)).get_str(); });
    m.def("weighted_count_triangles",
          [](const std::vector<int>& k) { return weighted_count_triangles(BoundarySpec(k)).get_str(); });
    m.def("count_triangles", [](const std::vector<int>& k) { return count_triangles(BoundarySpec(k)).get_str(); });
    m.def("eval_df_formula", [](int n) { return eval_df_formula(n).get_str(); });
    m.def("eval_free_boundary_formula", [](int n, int mm) { return eval_free_boundary_formula(n, mm).get_str(); },
          py::arg("n"), py::arg("m"));
    m.def("omega_fsa", [](const Rows& rows) { return omega_fsa(GTPattern{rows}).get_str(); });
    m.def("fiber_sum", [](const Rows& rows) { return fiber_sum(GTPattern{rows}).get_str(); });
    m.def("verify_ybe", [] { return verify_ybe(); });
    m.def("suite_names", &suite_names);
    m.def("run_suite", &suite_json, py::arg("name"), py::arg("quick") = false, py::arg("threads") = 1,
          py::call_guard<py::gil_scoped_release>());
    m.def("list_m6v", &list_m6v, py::arg("k"), py::arg("limit") = py::none());
    m.def("sample", &sample_lines, py::arg("rows"), py::arg("count") = 1, py::arg("seed") = 0);
    m.def("run_cli", &cli, py::arg("args"));
}
