#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tilt/gathering.hpp"
#include "tilt/generators.hpp"
#include "tilt/gridio.hpp"

namespace py = pybind11;
using namespace tilt;

namespace {

Variant variant_from(const std::string& name) {
    if (name == "ft-merge") return kFTMerge;
    if (name == "ft-block") return kFTBlock;
    if (name == "s1-merge") return kS1Merge;
    if (name == "s1-block") return kS1Block;
    throw py::value_error("unknown variant '" + name + "'");
}

std::vector<Pixel> to_pixels(const std::vector<std::pair<int, int>>& px) {
    std::vector<Pixel> out;
    for (auto [x, y] : px) out.push_back({x, y});
    return out;
}

std::pair<int, int> to_pair(Pixel p) { return {p.x, p.y}; }

std::vector<std::pair<int, int>> to_pairs(const std::vector<Pixel>& px) {
    std::vector<std::pair<int, int>> out;
    for (auto p : px) out.push_back(to_pair(p));
    return out;
}

py::object gather_result(const std::optional<GatherResult>& g) {
    if (!g) return py::none();
    return py::make_tuple(g->sequence, to_pair(g->target));
}

}  // namespace

PYBIND11_MODULE(_tilt, m) {
    m.doc() = "Tilt model particle gathering";

    static py::exception<Error> err(m, "TiltError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            err(e.what());
        }
    });

    py::class_<Polyomino>(m, "Polyomino")
        .def(py::init([](const std::vector<std::pair<int, int>>& px) { return Polyomino(to_pixels(px)); }))
        .def_static("from_grid", [](const std::string& text) { return parse_grid(text).P; })
        .def("__len__", &Polyomino::size)
        .def("pixels", [](const Polyomino& P) { return to_pairs(P.pixels()); })
        .def("corners", [](const Polyomino& P) { return P.boundary().n; })
        .def("classify",
             [](const Polyomino& P) {
                 auto c = classify(P);
                 py::dict d;
                 d["simple"] = c.simple;
                 d["thin"] = c.thin;
                 d["maze"] = c.maze;
                 d["rectangle"] = c.rectangle;
                 return d;
             })
        .def("render", [](const Polyomino& P) { return render_ascii(P); });

    m.def(
        "apply",
        [](const Polyomino& P, const std::vector<std::pair<int, int>>& C, const std::string& w, const std::string& v) {
            return to_pairs(config_pixels(P, apply(P, make_config(P, to_pixels(C)), w, variant_from(v))));
        },
        py::arg("P"), py::arg("C"), py::arg("word"), py::arg("variant") = "ft-merge");
    m.def("normalize", &normalize);
    m.def("is_gatherable", [](const Polyomino& P) { return is_gatherable(P.boundary()); });
    m.def("full_gathering", [](const Polyomino& P) { return gather_result(full_gathering(P.boundary())); });
    m.def("s1_gathering", [](const Polyomino& P) { return gather_result(s1_gathering(P)); });
    m.def(
        "sgs",
        [](const Polyomino& P, std::optional<std::vector<std::pair<int, int>>> C) -> py::object {
            Config cfg = C ? make_config(P, to_pixels(*C)) : full_config(P);
            auto r = sgs_exact(P, cfg);
            if (!r) return py::none();
            return py::make_tuple(r->length, r->word);
        },
        py::arg("P"), py::arg("C") = py::none());
    m.def("tally_intersection_smallest",
          [](const std::vector<std::tuple<int, std::vector<int>, int>>& as, long long bound) {
              std::vector<TallyAutomaton> ts;
              for (auto& [rho, acc, init] : as) ts.push_back(tally_cycle(rho, acc, init));
              return tally_intersection_smallest(ts, bound);
          },
          py::arg("automata"), py::arg("bound") = 1000000);
    m.def("scs_binary", [](const std::vector<std::string>& words) {
        auto inst = gen_scs_binary(words);
        return py::make_tuple(inst.P, to_pairs(inst.starts));
    });
    m.def("lower_bound", [](int m) {
        auto L = gen_lower_bound(m);
        return py::make_tuple(L.P, to_pairs(L.classes.at("p")));
    });
}
