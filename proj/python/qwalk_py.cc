// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "qwalk/cli.h"
#include "qwalk/errors.h"
#include "qwalk/experiment.h"
#include "qwalk/povm.h"
#include "qwalk/protocol_io.h"
#include "qwalk/usd.h"
#include "qwalk/walk.h"

namespace py = pybind11;
using namespace qwalk;

namespace {

py::array_t<std::complex<double>> to_numpy(const Mat2 &m) {
    py::array_t<std::complex<double>> out({2, 2});
    auto r = out.mutable_unchecked<2>();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r(i, j) = m(i, j);
    return out;
}

CoinState to_coin(const std::pair<Complex, Complex> &c) { return {c.first, c.second}; }
std::pair<Complex, Complex> from_coin(const CoinState &c) { return {c.h, c.v}; }

Sign to_sign(const std::string &s) {
    if (s == "plus" || s == "+") return Sign::Plus;
    if (s == "minus" || s == "-") return Sign::Minus;
    throw DomainError("sign must be 'plus' or 'minus'");
}

py::object to_python(const nlohmann::json &j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(qwalk, m) {
    m.doc() = "Position-dependent-coin quantum walks: unambiguous state discrimination and POVM extraction";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<LeakageError>(m, "LeakageError", PyExc_RuntimeError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    m.def("coin_matrix", [](double theta) { return to_numpy(coin_matrix(theta)); }, py::arg("theta"),
          "Half-wave-plate coin [[cos 2t, sin 2t], [sin 2t, -cos 2t]].");

    py::class_<Protocol>(m, "Protocol")
        .def(py::init([](const std::string &text) { return parse_protocol(text); }), py::arg("text"))
        .def("__len__", &Protocol::size)
        .def("format", [](const Protocol &p) { return format_protocol(p); });

    m.def(
        "run",
        [](const Protocol &protocol, std::pair<Complex, Complex> coin, int start, bool per_step) {
            WalkState s = WalkState::localized(start, to_coin(coin));
            py::list steps;
            for (const auto &step : protocol.steps()) {
                s = apply_step(s, step);
                if (per_step) steps.append(position_distribution(s));
            }
            return per_step ? py::object(steps) : py::cast(position_distribution(s));
        },
        py::arg("protocol"), py::arg("coin"), py::arg("start") = 0, py::arg("per_step") = false,
        "Position distribution after the walk (or after every step).");

    py::class_<UsdParams>(m, "UsdParams")
        .def_static("from_alpha", &UsdParams::from_alpha, py::arg("alpha"))
        .def_static("from_phi", &UsdParams::from_phi, py::arg("phi"))
        .def_property_readonly("alpha", &UsdParams::alpha)
        .def_property_readonly("beta", &UsdParams::beta)
        .def_property_readonly("phi", &UsdParams::phi);

    m.def(
        "prepare_coin", [](const UsdParams &p, const std::string &sign) { return from_coin(prepare_coin(p, to_sign(sign))); },
        py::arg("params"), py::arg("sign"));
    m.def(
        "prepare_superposition",
        [](const UsdParams &p, double a, double b) { return from_coin(prepare_superposition(p, a, b)); },
        py::arg("params"), py::arg("a"), py::arg("b"));

    m.def(
        "compile",
        [](const UsdParams &p) {
            UsdProtocol usd = compile(p);
            py::dict angles;
            angles["theta_m1_2"] = usd.angles.theta_m1_2;
            angles["theta_1_2"] = usd.angles.theta_1_2;
            angles["theta_0_3"] = usd.angles.theta_0_3;
            return py::make_tuple(usd.protocol, angles);
        },
        py::arg("params"), "Returns (Protocol, angles in radians).");

    m.def(
        "discriminate",
        [](const UsdParams &p, std::pair<Complex, Complex> coin) {
            py::dict out;
            for (const auto &o : discriminate(p, to_coin(coin))) out[py::int_(o.position)] = o.probability;
            return out;
        },
        py::arg("params"), py::arg("coin"), "Outcome probabilities keyed by position (+1, -1, +3).");
    m.def("success_probability", &success_probability, py::arg("params"));

    m.def(
        "kraus_from_walk", [](const Protocol &p, int i) { return to_numpy(kraus_from_walk(p, i).m); },
        py::arg("protocol"), py::arg("position"));
    m.def(
        "povm_elements",
        [](const UsdParams &p) {
            UsdPovm walk = walk_usd_elements(compile(p));
            UsdPovm closed = closed_form_usd_elements(p);
            py::dict out;
            out["walk"] = py::make_tuple(to_numpy(walk.plus), to_numpy(walk.minus), to_numpy(walk.inconclusive));
            out["closed_form"] =
                py::make_tuple(to_numpy(closed.plus), to_numpy(closed.minus), to_numpy(closed.inconclusive));
            return out;
        },
        py::arg("params"), "E_plus, E_minus, E_inconclusive from the walk and in closed form.");

    m.def(
        "sample_counts",
        [](const Distribution &dist, std::int64_t shots, std::uint64_t seed) { return sample_counts(dist, shots, seed).counts; },
        py::arg("distribution"), py::arg("shots"), py::arg("seed"));
    m.def(
        "l1_distance", [](const Distribution &a, const Distribution &b) { return l1_distance(a, b).d; }, py::arg("p_exp"),
        py::arg("p_th"));

    m.def(
        "report",
        [](const std::string &command, std::optional<double> alpha, const std::string &state, std::int64_t shots,
           std::uint64_t seed, std::optional<std::string> protocol_file, bool per_step) {
            cli::RunConfig config;
            config.command = command;
            config.alpha = alpha;
            config.state = cli::parse_state(state);
            config.shots = shots;
            config.seed = seed;
            config.protocol_file = protocol_file;
            config.per_step = per_step;
            return to_python(cli::execute(config));
        },
        py::arg("command"), py::arg("alpha") = py::none(), py::arg("state") = "plus",
        py::arg("shots") = cli::kDefaultShots, py::arg("seed") = cli::kDefaultSeed, py::arg("protocol_file") = py::none(),
        py::arg("per_step") = false, "Same JSON report the command-line tool emits, as a dict.");
}
