// Copyright 2026 The twistcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twistcode/errors.h"
#include "twistcode/experiment.h"
#include "twistcode/ising.h"
#include "twistcode/jordan_wigner.h"
#include "twistcode/lattice.h"
#include "twistcode/mbb.h"

namespace py = pybind11;
using namespace twistcode;

namespace {

std::string run_json(const std::string &config, const std::string &format) {
    ExperimentConfig cfg = parse_config(nlohmann::json::parse(config));
    cfg.format = format;
    return render(run_experiment(cfg), format);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "twist-defect surface code simulator";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<GeometryError>(m, "GeometryError", base.ptr());
    py::register_exception<SizeError>(m, "SizeError", base.ptr());

    m.def("version", &library_version);

    py::class_<PauliString>(m, "PauliString")
        .def_static("parse", [](const std::string &s) { return PauliString::parse(s); })
        .def_property_readonly("weight", &PauliString::weight)
        .def_property_readonly("hermitian", &PauliString::is_hermitian)
        .def("letter", [](const PauliString &p, SiteId s) { return std::string(1, letter_char(p.at(s))); })
        .def("commutes_with", [](const PauliString &p, const PauliString &q) { return commutes(p, q); })
        .def("__mul__", [](const PauliString &p, const PauliString &q) { return p * q; })
        .def("__eq__", [](const PauliString &p, const PauliString &q) { return p == q; })
        .def("__str__", &PauliString::str)
        .def("__repr__", [](const PauliString &p) { return "PauliString('" + p.str() + "')"; });

    py::class_<TwistLattice>(m, "TwistLattice")
        .def_property_readonly("width", &TwistLattice::width)
        .def_property_readonly("height", &TwistLattice::height)
        .def_property_readonly("num_sites", &TwistLattice::num_sites)
        .def_property_readonly("num_plaquettes", [](const TwistLattice &l) { return l.plaquettes().size(); })
        .def_property_readonly("num_pairs", &TwistLattice::num_pairs)
        .def("logical_count", &TwistLattice::logical_count)
        .def("stabilizer", &TwistLattice::stabilizer)
        .def("twist_sites", [](const TwistLattice &l) {
            std::vector<SiteId> out;
            for (const auto &t : l.twists()) {
                out.push_back(t.site);
            }
            return out;
        })
        .def("describe", &TwistLattice::describe);

    m.def(
        "build_lattice",
        [](int w, int h, const std::vector<std::array<int, 3>> &segs) {
            std::vector<DislocationSegment> s;
            for (const auto &x : segs) {
                s.push_back({x[0], x[1], x[2]});
            }
            return build_lattice(w, h, s);
        },
        py::arg("width"), py::arg("height"), py::arg("segments") = std::vector<std::array<int, 3>>{});

    m.def("parity_operator", [](const TwistLattice &lat, size_t pair) {
        return parity_operator(lat, pair_path(lat, pair), pair);
    });
    m.def("reduce_by_stabilizers", &reduce_by_stabilizers);
    m.def("in_commutant", &in_commutant);
    m.def("in_plaquette_group", &in_plaquette_group);

    m.def("pair_transform", [](bool odd, const std::string &from, const std::string &to) {
        return Eigen::MatrixXcd(pair_transform(odd ? Parity::Odd : Parity::Even, parse_pairing4(from), parse_pairing4(to)));
    });

    m.def(
        "flip_statistics",
        [](int n_braids, long shots, uint64_t seed) {
            AnyonBackend b(statistics_initial_state());
            StatsResult r = run_statistics(b, n_braids, shots, seed);
            py::dict d;
            d["n_braids"] = r.n_braids;
            d["shots"] = r.shots;
            d["flips"] = r.flips;
            d["frequency"] = r.frequency;
            d["sigma"] = r.sigma;
            return d;
        },
        py::arg("n_braids"), py::arg("shots") = 10000, py::arg("seed") = 1);

    m.def("run", &run_json, py::arg("config"), py::arg("format") = "json",
          "Runs an experiment from a JSON config string and returns the rendered report.");
}
