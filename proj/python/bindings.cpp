#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "torelli/torelli.hpp"

namespace py = pybind11;
using namespace torelli;

namespace {

py::int_ to_py(const BigInt& v) { return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10)); }

py::dict series_dict(const TruncatedSeries& s) {
  py::dict out;
  for (const auto& [m, c] : s.terms()) out[py::tuple(py::cast(m.indices()))] = to_py(c);
  return out;
}

py::dict lie_dict(const LieElement& e) {
  py::dict out;
  for (const auto& [w, c] : e.coords()) out[py::tuple(py::cast(w.indices()))] = to_py(c);
  return out;
}

std::vector<py::dict> tau_components(const TauValue& v) {
  std::vector<py::dict> out;
  for (const auto& c : v.components) out.push_back(lie_dict(c));
  return out;
}

std::optional<int> depth_of(const MappingClass& f, int cutoff) { return filtration_depth(f, cutoff).depth; }

}  // namespace

PYBIND11_MODULE(_torelli, m) {
  m.doc() = "Johnson filtration invariants of surface mapping classes";

  static py::exception<Error> error(m, "TorelliError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error.ptr())(e.what());
      exc.attr("code") = e.code();
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  py::class_<Word>(m, "Word")
      .def_property_readonly("rank", &Word::rank)
      .def_property_readonly("letters", [](const Word& w) { return std::vector<int>(w.letters().begin(), w.letters().end()); })
      .def("__len__", &Word::length)
      .def("__mul__", &multiply)
      .def("__invert__", &invert)
      .def("__eq__", [](const Word& a, const Word& b) { return a == b; })
      .def("__hash__", [](const Word& w) { return py::hash(py::str(to_string(w))); })
      .def("__str__", [](const Word& w) { return to_string(w); })
      .def("__repr__", [](const Word& w) { return "Word('" + to_string(w) + "')"; });

  m.def("word", [](std::string_view text, int genus) { return parse_word(text, genus); }, py::arg("text"),
        py::arg("genus"));
  m.def("commutator", &commutator);
  m.def("boundary_word", &boundary_word);

  py::class_<MappingClass>(m, "MappingClass")
      .def_property_readonly("genus", &MappingClass::genus)
      .def_property_readonly("images", &MappingClass::images)
      .def_property_readonly("inverse_images", &MappingClass::inverse_images)
      .def("__call__", [](const MappingClass& f, const Word& w) { return apply(f, w); })
      .def("__mul__", &compose)
      .def("inverse", [](const MappingClass& f) { return inverse(f); })
      .def("same_action", &MappingClass::same_action)
      .def("__str__", &serialize_map);
  m.def("identity", &MappingClass::identity, py::arg("genus"));
  m.def("parse_map", [](std::string_view text) { return parse_map_file(text); });
  m.def("validate", [](const MappingClass& f) {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& c : validate(f).checks) out.emplace_back(c.name, c.passed, c.detail);
    return out;
  });

  m.def("magnus", [](const Word& w, int N) { return series_dict(magnus_expand(w, N)); }, py::arg("word"),
        py::arg("N"));
  m.def("fox_coefficient", [](const Word& w, const std::vector<int>& js) { return to_py(fox_coefficient(w, js)); });
  m.def("lcs_degree", [](const Word& w, int cutoff) { return lcs_degree(w, cutoff).degree; }, py::arg("word"),
        py::arg("cutoff"));

  m.def("lyndon_basis", [](int n, int k) {
    std::vector<std::vector<int>> out;
    for (const auto& w : lyndon_basis(n, k)) out.push_back(w.indices());
    return out;
  });
  m.def("witt_dim", [](int n, int k) { return to_py(witt_dim(n, k)); });

  m.def("depth", &depth_of, py::arg("f"), py::arg("cutoff") = kDefaultDepthCutoff);
  m.def("tau", [](const MappingClass& f, int k) { return tau_components(tau(f, k)); }, py::arg("f"), py::arg("k"));
  m.def("tau_text", [](const MappingClass& f, int k, bool monomial) { return to_string(tau(f, k), monomial); },
        py::arg("f"), py::arg("k"), py::arg("monomial") = false);
  m.def("morita_contained", [](const MappingClass& f, int k) { return morita_check(f, k).contained; });
  m.def("bordant", &bordant, py::arg("f"), py::arg("h"), py::arg("k"));

  py::class_<QuadForm>(m, "QuadForm")
      .def_property_readonly("genus", &QuadForm::genus)
      .def("__str__", [](const QuadForm& q) { return to_string(q); });
  m.def("parse_form", &parse_form_literal);
  m.def("arf", &arf);
  m.def("forms", &enumerate_forms, py::arg("genus"), py::arg("arf") = std::nullopt);

  py::class_<GeneratorEntry>(m, "Generator")
      .def_readonly("name", &GeneratorEntry::name)
      .def_property_readonly("action", &GeneratorEntry::action);
  m.def("library", &library, py::arg("genus"));
  m.def("generator", &library_entry, py::arg("genus"), py::arg("name"));

  m.def(
      "eta2",
      [](int genus, const std::vector<std::pair<std::string, int>>& word) {
        TorelliWord w;
        for (const auto& [name, exp] : word) w.push_back(library_entry(genus, name).letter(exp));
        const Eta2Value v = eta2(genus, w);
        return py::make_tuple(tau_components(v.tau2), v.rho, v.is_trivial());
      },
      py::arg("genus"), py::arg("word"));

  m.def("present", [](const MappingClass& f, bool filled) {
    return to_string(filled ? present_filled(f) : present_mapping_torus(f));
  }, py::arg("f"), py::arg("filled") = false);
  m.def("block_ranks", [](int genus, int k) {
    const BlockRanks r = eta_block_ranks(genus, k);
    return py::make_tuple(to_py(r.h2), r.h1, r.h0);
  });
}
