// SPDX-License-Identifier: Apache-2.0
// Copyright contributors to the cam16 project.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cam16/bench.hpp"
#include "cam16/cam16.hpp"
#include "cam16/legacy.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

PYBIND11_MODULE(_cam16, m) {
    m.doc() = "CAM16 color appearance model with robust edge-case handling";

    py::register_exception<cam16::DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<cam16::UnrepresentableError>(m, "UnrepresentableError",
                                                        PyExc_ValueError);

    py::class_<cam16::XyzColor>(m, "XyzColor")
        .def(py::init<double, double, double>(), "x"_a, "y"_a, "z"_a)
        .def_readwrite("x", &cam16::XyzColor::x)
        .def_readwrite("y", &cam16::XyzColor::y)
        .def_readwrite("z", &cam16::XyzColor::z)
        .def("__repr__", [](const cam16::XyzColor& c) {
            std::ostringstream os;
            os << "XyzColor(" << c.x << ", " << c.y << ", " << c.z << ")";
            return os.str();
        });

    py::class_<cam16::Surround>(m, "Surround")
        .def(py::init<double, double, double>(), "f"_a, "c"_a, "n_c"_a)
        .def_readwrite("f", &cam16::Surround::f)
        .def_readwrite("c", &cam16::Surround::c)
        .def_readwrite("n_c", &cam16::Surround::n_c);

    py::enum_<cam16::SurroundName>(m, "SurroundName")
        .value("Average", cam16::SurroundName::Average)
        .value("Dim", cam16::SurroundName::Dim)
        .value("Dark", cam16::SurroundName::Dark);

    py::enum_<cam16::LightnessKind>(m, "LightnessKind")
        .value("J", cam16::LightnessKind::J)
        .value("Q", cam16::LightnessKind::Q);

    py::enum_<cam16::ChromaKind>(m, "ChromaKind")
        .value("C", cam16::ChromaKind::C)
        .value("M", cam16::ChromaKind::M)
        .value("S", cam16::ChromaKind::S);

    py::enum_<cam16::HueKind>(m, "HueKind")
        .value("Angle", cam16::HueKind::Angle)
        .value("Quadrature", cam16::HueKind::Quadrature);

    py::class_<cam16::ViewingConditions>(m, "ViewingConditions")
        .def_readonly("white", &cam16::ViewingConditions::white)
        .def_readonly("y_b", &cam16::ViewingConditions::y_b)
        .def_readonly("l_a", &cam16::ViewingConditions::l_a)
        .def_readonly("surround", &cam16::ViewingConditions::surround)
        .def_readonly("rgb_w", &cam16::ViewingConditions::rgb_w)
        .def_readonly("d", &cam16::ViewingConditions::d)
        .def_readonly("d_rgb", &cam16::ViewingConditions::d_rgb)
        .def_readonly("f_l", &cam16::ViewingConditions::f_l)
        .def_readonly("n", &cam16::ViewingConditions::n)
        .def_readonly("z", &cam16::ViewingConditions::z)
        .def_readonly("n_bb", &cam16::ViewingConditions::n_bb)
        .def_readonly("n_cb", &cam16::ViewingConditions::n_cb)
        .def_readonly("rgb_wc", &cam16::ViewingConditions::rgb_wc)
        .def_readonly("rgb_aw", &cam16::ViewingConditions::rgb_aw)
        .def_readonly("a_w", &cam16::ViewingConditions::a_w);

    py::class_<cam16::Correlates>(m, "Correlates")
        .def_readonly("j", &cam16::Correlates::j)
        .def_readonly("c", &cam16::Correlates::c)
        .def_readonly("h", &cam16::Correlates::h)
        .def_readonly("q", &cam16::Correlates::q)
        .def_readonly("m", &cam16::Correlates::m)
        .def_readonly("s", &cam16::Correlates::s)
        .def_readonly("big_h", &cam16::Correlates::big_h)
        .def_readonly("h_c", &cam16::Correlates::h_c)
        .def("__repr__", [](const cam16::Correlates& r) {
            std::ostringstream os;
            os << "Correlates(j=" << r.j << ", c=" << r.c << ", h=" << r.h << ", q=" << r.q
               << ", m=" << r.m << ", s=" << r.s << ", big_h=" << r.big_h << ", h_c='"
               << r.h_c << "')";
            return os.str();
        });

    py::class_<cam16::HueQuadrature>(m, "HueQuadrature")
        .def_readonly("big_h", &cam16::HueQuadrature::big_h)
        .def_readonly("percent_left", &cam16::HueQuadrature::percent_left)
        .def_readonly("percent_right", &cam16::HueQuadrature::percent_right)
        .def_readonly("left", &cam16::HueQuadrature::left)
        .def_readonly("right", &cam16::HueQuadrature::right)
        .def_readonly("text", &cam16::HueQuadrature::text);

    py::class_<cam16::CorrelateSelection>(m, "CorrelateSelection")
        .def(py::init([](cam16::LightnessKind lk, double lightness, cam16::ChromaKind ck,
                         double chroma, cam16::HueKind hk, double hue) {
                 return cam16::CorrelateSelection{lk, lightness, ck, chroma, hk, hue};
             }),
             "lightness_kind"_a, "lightness"_a, "chroma_kind"_a, "chroma"_a, "hue_kind"_a,
             "hue"_a)
        .def_static("jch", &cam16::CorrelateSelection::jch, "j"_a, "c"_a, "h"_a)
        .def_static("pick", &cam16::CorrelateSelection::pick, "correlates"_a,
                    "lightness_kind"_a, "chroma_kind"_a, "hue_kind"_a)
        .def_readwrite("lightness_kind", &cam16::CorrelateSelection::lightness_kind)
        .def_readwrite("lightness", &cam16::CorrelateSelection::lightness)
        .def_readwrite("chroma_kind", &cam16::CorrelateSelection::chroma_kind)
        .def_readwrite("chroma", &cam16::CorrelateSelection::chroma)
        .def_readwrite("hue_kind", &cam16::CorrelateSelection::hue_kind)
        .def_readwrite("hue", &cam16::CorrelateSelection::hue);

    m.def("surround_preset", &cam16::surround_preset, "name"_a);
    m.def("surround_interpolate", &cam16::surround_interpolate, "c"_a);
    m.def("adapting_luminance_from_illuminance", &cam16::adapting_luminance_from_illuminance,
          "e_w"_a, "y_b"_a, "y_w"_a);
    m.def("viewing_conditions", &cam16::viewing_conditions, "white"_a, "y_b"_a, "l_a"_a,
          "surround"_a, "discount_illuminant"_a = false);
    m.def("postadapt", &cam16::postadapt, "x"_a, "f_l"_a);
    m.def("postadapt_inverse", &cam16::postadapt_inverse, "y"_a, "f_l"_a);
    m.def("eccentricity", &cam16::eccentricity, "h"_a);
    m.def("hue_quadrature", &cam16::hue_quadrature, "h"_a);
    m.def("hue_from_quadrature", &cam16::hue_from_quadrature, "big_h"_a);
    m.def("forward", &cam16::forward, "xyz"_a, "vc"_a);
    m.def("inverse", &cam16::inverse, "selection"_a, "vc"_a);

    py::class_<cam16::BenchReport>(m, "BenchReport")
        .def_readonly("sizes", &cam16::BenchReport::sizes)
        .def_readonly("fixed_seconds", &cam16::BenchReport::fixed_seconds)
        .def_readonly("legacy_seconds", &cam16::BenchReport::legacy_seconds)
        .def_readonly("speedup", &cam16::BenchReport::speedup)
        .def_readonly("seed", &cam16::BenchReport::seed)
        .def_readonly("repetitions", &cam16::BenchReport::repetitions)
        .def_readonly("cpu", &cam16::BenchReport::cpu)
        .def_readonly("build", &cam16::BenchReport::build);
    m.def("run_benchmark", &cam16::run_benchmark, "sizes"_a, "repetitions"_a, "seed"_a,
          py::call_guard<py::gil_scoped_release>());

    py::module_ legacy = m.def_submodule("legacy", "original CAM16 step definitions");
    legacy.def("postadapt", &cam16::legacy::postadapt, "x"_a, "f_l"_a);
    legacy.def("forward", &cam16::legacy::forward, "xyz"_a, "vc"_a);
    legacy.def("inverse", &cam16::legacy::inverse, "selection"_a, "vc"_a);
}
