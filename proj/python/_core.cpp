#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperspace/geometry.hpp"
#include "hyperspace/io.hpp"
#include "hyperspace/metric.hpp"
#include "hyperspace/paths.hpp"
#include "hyperspace/verify.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
namespace hs = hyperspace;

namespace {

hs::Point to_point(const std::vector<double>& coords) { return hs::Point(coords); }

std::vector<double> from_point(const hs::Point& p) {
  return {p.coords().begin(), p.coords().end()};
}

// JSON crosses the boundary as text; the Python side uses the json module.
hs::CompactSet set_from_json(const std::string& text) {
  return hs::io::parse_set_document(hs::io::json::parse(text));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = R"pbdoc(
        Hausdorff distances and hyperspace paths
        ----------------------------------------

        .. currentmodule:: hyperspace

        .. autosummary::
           :toctree: _generate

           hausdorff
           directed_distance
           connect
  )pbdoc";

  py::register_exception<hs::GeometryError>(m, "GeometryError", PyExc_ValueError);
  py::register_exception<hs::io::FormatError>(m, "FormatError", PyExc_ValueError);

  py::class_<hs::AxisBox>(m, "AxisBox")
      .def(py::init([](const std::vector<double>& u, const std::vector<double>& v) {
             return hs::canonical_box(to_point(u), to_point(v));
           }),
           py::arg("u"), py::arg("v"), "Box spanned by two corners (canonicalised).")
      .def_property_readonly("lo", [](const hs::AxisBox& b) { return from_point(b.lo()); })
      .def_property_readonly("hi", [](const hs::AxisBox& b) { return from_point(b.hi()); })
      .def_property_readonly("dim", &hs::AxisBox::dim)
      .def("__eq__", [](const hs::AxisBox& a, const hs::AxisBox& b) { return a == b; })
      .def("__repr__", [](const hs::AxisBox& b) {
        return "AxisBox(lo=" + py::repr(py::cast(from_point(b.lo()))).cast<std::string>() +
               ", hi=" + py::repr(py::cast(from_point(b.hi()))).cast<std::string>() + ")";
      });

  py::class_<hs::CompactSet>(m, "CompactSet")
      .def_static("points",
                  [](const std::vector<std::vector<double>>& pts) {
                    std::vector<hs::Point> out;
                    for (const auto& p : pts) out.push_back(to_point(p));
                    return hs::CompactSet::points(std::move(out));
                  })
      .def_static("box",
                  [](const std::vector<double>& lo, const std::vector<double>& hi) {
                    return hs::CompactSet::box(hs::canonical_box(to_point(lo), to_point(hi)));
                  })
      .def_static("segment",
                  [](const std::vector<double>& p, const std::vector<double>& q) {
                    return hs::CompactSet::segment(hs::Segment(to_point(p), to_point(q)));
                  })
      .def_static("union_of", &hs::CompactSet::union_of)
      .def_static("box_boundary",
                  [](const std::vector<double>& lo, const std::vector<double>& hi) {
                    return hs::CompactSet::box_boundary(hs::canonical_box(to_point(lo), to_point(hi)));
                  })
      .def_static("from_json", &set_from_json, "Parse a set-description document.")
      .def("to_json", [](const hs::CompactSet& s) { return hs::io::set_document(s).dump(); })
      .def_property_readonly("dim", &hs::CompactSet::dim)
      .def("__eq__", [](const hs::CompactSet& a, const hs::CompactSet& b) { return a == b; })
      .def("__repr__", [](const hs::CompactSet& s) {
        return "CompactSet(" + hs::io::set_node(s).dump() + ")";
      });

  py::class_<hs::DistanceResult>(m, "DistanceResult")
      .def_readonly("value", &hs::DistanceResult::value)
      .def_readonly("err", &hs::DistanceResult::err)
      .def("__repr__", [](const hs::DistanceResult& r) {
        return "DistanceResult(value=" + std::to_string(r.value) +
               ", err=" + std::to_string(r.err) + ")";
      });

  m.def("translate", [](const hs::CompactSet& s, const std::vector<double>& v) {
    return hs::translate(s, to_point(v));
  });
  m.def("bounding_box", py::overload_cast<const hs::CompactSet&>(&hs::bounding_box));
  m.def("point_to_set", [](const std::vector<double>& x, const hs::CompactSet& s) {
    return hs::point_to_set(to_point(x), s);
  });
  m.def("directed_distance", &hs::directed_distance, py::arg("a"), py::arg("b"),
        py::arg("tol") = hs::kDefaultTolerance);
  m.def("hausdorff", &hs::hausdorff, py::arg("a"), py::arg("b"),
        py::arg("tol") = hs::kDefaultTolerance, "h(A, B) with a certified error radius.");
  m.def("nested_box_hausdorff", &hs::nested_box_hausdorff, py::arg("inner"), py::arg("outer"));
  m.def("brute_force_hausdorff", &hs::brute_force_hausdorff, py::arg("a"), py::arg("b"),
        py::arg("resolution"), py::arg("point_budget") = hs::kDefaultPointBudget);

  py::class_<hs::HyperPath>(m, "HyperPath")
      .def("__call__", [](const hs::HyperPath& p, double t) { return p(t); })
      .def("sample_err", [](const hs::HyperPath& p, double t) { return p.sample(t).err; })
      .def_property_readonly("start", &hs::HyperPath::start)
      .def_property_readonly("end", &hs::HyperPath::end)
      .def_property_readonly("lipschitz", &hs::HyperPath::lipschitz)
      .def_property_readonly("max_err", &hs::HyperPath::max_err)
      .def_property_readonly("kind", [](const hs::HyperPath& p) {
        return std::string(hs::to_string(p.kind()));
      });

  m.def("translation_path", [](const hs::CompactSet& a, const std::vector<double>& v) {
    return hs::translation_path(a, to_point(v));
  });
  m.def("point_to_box_path", [](const std::vector<double>& a, const std::vector<double>& lo,
                                const std::vector<double>& hi) {
    return hs::point_to_box_path(to_point(a), to_point(lo), to_point(hi));
  });
  m.def("set_to_box_path", [](const hs::CompactSet& a, const std::vector<double>& lo,
                              const std::vector<double>& hi) {
    return hs::set_to_box_path(a, to_point(lo), to_point(hi));
  });
  m.def("reverse", &hs::reverse);
  m.def("concat", &hs::concat, py::arg("legs"), py::arg("junction_tol") = 1e-9);
  m.def("connect", [](const hs::CompactSet& a, const hs::CompactSet& b) {
    return hs::connect(a, b);
  });
  m.def("contraction_gap",
        [](const std::vector<double>& a, const std::vector<double>& a2,
           const std::vector<double>& lo, const std::vector<double>& hi, double t) {
          return hs::contraction_gap(to_point(a), to_point(a2), to_point(lo), to_point(hi), t);
        });

  m.def(
      "path_modulus_failures",
      [](const hs::HyperPath& p, std::size_t grid, double tol) {
        return hs::verify::run_path_modulus(p, grid, tol).failures.size();
      },
      py::arg("path"), py::arg("grid") = 11, py::arg("tol") = 1e-9,
      "Number of grid pairs violating the path's Lipschitz bound.");

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
