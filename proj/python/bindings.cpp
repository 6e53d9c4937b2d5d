#include "sturm/sturm.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace sturm;

namespace {

Permutation perm(const std::vector<int>& s) { return Permutation(s); }

std::vector<std::vector<int>> matrix(const ZeroMatrix& zm, bool signs) {
    const int n = zm.size();
    std::vector<std::vector<int>> out(n, std::vector<int>(n));
    for (int v = 1; v <= n; ++v)
        for (int w = 1; w <= n; ++w)
            out[v - 1][w - 1] = signs ? zm.sign(v, w) : zm.z(v, w);
    return out;
}

std::string design_json(const std::string& path) {
    CellComplex c = load_complex(path);
    PathPair pair;
    if (c.ball) {
        Decoration d = c.decoration ? *c.decoration : infer_decorations(c).at(0);
        pair = szs_pair(c, d);
    } else {
        pair = zs_pair(c);
    }
    return pair_to_json(pair).dump();
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sturm permutations, 3-meander templates and 3-cell templates";

    static py::exception<Error> error(m, "SturmError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(error, e.what());
        }
    });

    m.def("parse_permutation", [](const std::string& s) { return parse_permutation(s).one_line(); });
    m.def("is_sturm", [](const std::vector<int>& s) {
        auto v = is_sturm(perm(s));
        py::dict d;
        d["odd"] = v.odd;
        d["dissipative"] = v.dissipative;
        d["meander"] = v.meander;
        d["morse"] = v.morse;
        d["sturm"] = v.sturm();
        return d;
    });
    m.def("morse_numbers", [](const std::vector<int>& s) { return morse_numbers(perm(s)); });
    m.def("zero_numbers", [](const std::vector<int>& s) {
        auto zm = zero_numbers(perm(s));
        return py::make_tuple(matrix(zm, false), matrix(zm, true));
    });
    m.def(
        "enumerate_sturm",
        [](int n, int max_n, int jobs) {
            std::vector<std::vector<int>> out;
            for (const auto& p : enumerate_sturm(n, max_n, jobs))
                out.push_back(p.one_line());
            return out;
        },
        py::arg("n"), py::arg("max_n") = kDefaultMaxN, py::arg("jobs") = 1);
    m.def("is_three_meander_template", [](const std::vector<int>& s) { return is_three_meander_template(perm(s)).ok(); });
    m.def("is_sturm_3ball", [](const std::vector<int>& s) { return is_sturm_3ball(perm(s)); });
    m.def("find_noses", [](const std::vector<int>& s) {
        std::vector<std::pair<int, int>> out;
        for (const auto& n : find_noses(perm(s)))
            out.push_back({n.v1, n.v2});
        return out;
    });
    m.def("retract_nose",
          [](const std::vector<int>& s, int v1, int v2) { return retract_nose(perm(s), v1, v2).sigma.one_line(); });
    m.def("scoop", [](const std::vector<int>& s, bool east) {
        return scoop(perm(s), east ? ScoopSide::East : ScoopSide::West).sigma_scooped.one_line();
    });
    m.def("roundtrip", [](const std::vector<int>& s) { return roundtrip(perm(s)); });
    m.def("planar_roundtrip", [](const std::vector<int>& s) { return planar_roundtrip(perm(s)); });
    m.def("analysis_report_json", [](const std::vector<int>& s) { return analysis_report(perm(s)).dump(); });
    m.def("complex_json", [](const std::vector<int>& s) {
        Permutation p = perm(s);
        return complex_to_json(is_sturm_3ball(p) ? complex_from_sigma(p).complex : planar_complex_from_sigma(p)).dump();
    });
    m.def("design_json", &design_json);
    m.def("render_svg", [](const std::vector<int>& s) { return render_svg(perm(s)); });
}
