#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pakstanley/arrangement.hpp"
#include "pakstanley/parking.hpp"
#include "pakstanley/psi.hpp"
#include "pakstanley/region.hpp"
#include "pakstanley/spec_file.hpp"
#include "pakstanley/svg.hpp"
#include "pakstanley/verify.hpp"

namespace py = pybind11;
using namespace pakstanley;

namespace {

using PairMap = std::map<std::pair<int, int>, std::vector<int>>;

ParkingFunction to_parking(const std::vector<int>& values) { return ParkingFunction{values}; }

py::tuple to_tuple(const ParkingFunction& p) { return py::cast(p.values); }

py::object m_eps_object(const std::optional<MEpsData>& data) {
  if (!data) return py::none();
  std::map<std::pair<int, int>, int> eps;
  for (int i = 1; i <= data->n(); ++i) {
    for (int j = 1; j <= data->n(); ++j) {
      if (i != j && data->epsilon(i, j)) eps[{i, j}] = 1;
    }
  }
  return py::make_tuple(data->m, eps);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pak-Stanley labelings of deformed braid arrangements";

  py::register_exception<ArrangementError>(m, "ArrangementError", PyExc_ValueError);
  py::register_exception<ParkingError>(m, "ParkingError", PyExc_ValueError);
  py::register_exception<SketchError>(m, "SketchError", PyExc_ValueError);
  py::register_exception<SpecFileError>(m, "SpecFileError", PyExc_ValueError);

  py::class_<Arrangement>(m, "Arrangement")
      .def_property_readonly("n", &Arrangement::n)
      .def_property_readonly("m", &Arrangement::m)
      .def_property_readonly("hyperplanes",
                             [](const Arrangement& a) {
                               std::vector<std::tuple<int, int, int>> out;
                               for (const auto& h : a.hyperplanes()) out.emplace_back(h.i, h.j, h.offset);
                               return out;
                             })
      .def("splus", [](const Arrangement& a, int i, int j) { return splus(a, i, j); })
      .def("__len__", &Arrangement::size)
      .def("__eq__", &Arrangement::operator==)
      .def("__repr__", [](const Arrangement& a) { return "<Arrangement " + describe(a) + ">"; });

  m.def(
      "from_sets",
      [](int n, const PairMap& sets) {
        OffsetSets converted;
        for (const auto& [key, values] : sets) converted[key].insert(values.begin(), values.end());
        return build_from_sets(n, converted);
      },
      py::arg("n"), py::arg("sets"), "Arrangement with x_i - x_j = s for s in sets[(i, j)], i < j.");
  m.def(
      "from_m_eps",
      [](const std::vector<int>& levels, const std::map<std::pair<int, int>, int>& eps) {
        auto data = MEpsData::zeros(static_cast<int>(levels.size()));
        data.m = levels;
        for (const auto& [key, value] : eps) {
          if (key.first < 1 || key.second < 1 || key.first > data.n() || key.second > data.n()) {
            throw ArrangementError("eps index out of range");
          }
          data.set_epsilon(key.first, key.second, value);
        }
        return build_from_m_eps(data);
      },
      py::arg("m"), py::arg("eps") = std::map<std::pair<int, int>, int>{});
  m.def("from_json", [](const std::string& text) { return parse_arrangement_file(text).arrangement; });
  m.def("to_json", [](const Arrangement& a) { return serialize_arrangement(a); });
  m.def("shi", &shi_arrangement, py::arg("n"), py::arg("m") = 1);
  m.def("catalan", &catalan_arrangement, py::arg("n"), py::arg("m") = 1);
  m.def("braid", &braid_arrangement, py::arg("n"));

  m.def("recognize_m_eps", [](const Arrangement& a) { return m_eps_object(recognize_m_eps(a)); },
        "(m, eps) witness or None; eps lists only the pairs with eps = 1.");
  m.def("is_transitive", &is_transitive);
  m.def("holds_x", &holds_x);
  m.def("holds_y", &holds_y);

  m.def(
      "regions",
      [](const Arrangement& a) {
        const auto table = enumerate_regions(a);
        std::vector<std::pair<std::string, std::vector<int>>> out;
        for (std::size_t r = 0; r < table.regions.size(); ++r) {
          out.emplace_back(to_string(table.regions[r]), table.labels[r].values);
        }
        return out;
      },
      "(sign string, label) per region; '-' means x_i - x_j < s.");
  m.def("labeling_report", [](const Arrangement& a) {
    const auto r = labeling_report(a);
    py::dict out;
    out["regions"] = r.regions;
    out["distinct_labels"] = r.distinct_labels;
    out["parking_functions"] = r.parking_functions;
    out["injective"] = r.injective;
    out["surjective"] = r.surjective;
    out["bijective"] = r.bijective;
    return out;
  });
  m.def("parking_functions", [](const Arrangement& a) {
    py::list out;
    for (const auto& p : enumerate_parking(build_d_graph(a))) out.append(to_tuple(p));
    return out;
  });
  m.def("count_parking_determinant",
        [](const Arrangement& a) { return count_parking_determinant(build_d_graph(a)); });

  m.def("phi", [](const Arrangement& a, const std::string& sketch) {
    return to_tuple(phi(a, validate_sketch(parse_letters(sketch), a.m(), a.n())));
  });
  m.def("psi", [](const Arrangement& a, const std::vector<int>& p) {
    return to_string(psi(a, to_parking(p)));
  });
  m.def("psi_trace", [](const Arrangement& a, const std::vector<int>& p) {
    return format_trace(psi_trace(a, to_parking(p)));
  });
  m.def("inverse_region", [](const Arrangement& a, const std::vector<int>& p) {
    return to_string(inverse_region(a, to_parking(p)));
  });

  m.def("verify", [](const Arrangement& a) {
    SketchCache cache;
    py::dict out;
    for (const auto& check : verify_arrangement(a, cache).checks) {
      out[py::str(check.name)] = py::make_tuple(check.passed, check.counterexample);
    }
    return out;
  }, "check name -> (passed, counterexample)");
  m.def("render_svg", [](const Arrangement& a) { return render_svg(a, enumerate_regions(a)); });
}
