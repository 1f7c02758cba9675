#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coxshuffle/buildings.hpp"
#include "coxshuffle/io.hpp"
#include "coxshuffle/maps.hpp"
#include "coxshuffle/spectral.hpp"
#include "coxshuffle/verify.hpp"
#include "coxshuffle/walks.hpp"

namespace py = pybind11;
using namespace coxshuffle;

namespace {

py::object to_py(const Integer& x) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& x) {
  // leaked on purpose: must outlive interpreter shutdown
  static auto* fraction = new py::object(py::module_::import("fractions").attr("Fraction"));
  return (*fraction)(to_py(x.get_num()), to_py(x.get_den()));
}

// Python int or Fraction (anything with numerator/denominator) to Rational.
Rational from_py(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return Rational(Integer(py::str(h).cast<std::string>()));
  if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator"))
    return make_rational(Integer(py::str(h.attr("numerator")).cast<std::string>()),
                         Integer(py::str(h.attr("denominator")).cast<std::string>()));
  throw py::type_error("expected int, str or Fraction");
}

py::object to_py(const Json& j) {
  static auto* loads = new py::object(py::module_::import("json").attr("loads"));
  return (*loads)(j.dump());
}

Json to_json(const py::handle& obj) {
  static auto* dumps = new py::object(py::module_::import("json").attr("dumps"));
  return Json::parse((*dumps)(obj).cast<std::string>());
}

py::list checks_py(const std::vector<Check>& cs) { return to_py(checks_json(cs)); }

}  // namespace

PYBIND11_MODULE(_coxshuffle, m) {
  m.doc() = "Exact face semigroups, shuffle algebras and random walks on Coxeter complexes and buildings";

  py::register_exception<ScaleLimit>(m, "ScaleLimit", PyExc_ValueError);

  py::class_<Face>(m, "Face")
      .def_static("parse", [](const std::string& family, int n, const std::string& text) {
        return Face::parse(parse_family(family), n, text);
      }, py::arg("family"), py::arg("n"), py::arg("text"))
      .def_static("identity", [](const std::string& family, int n) { return Face::identity(parse_family(family), n); })
      .def_static("from_deck", [](const std::string& family, const std::vector<int>& deck) {
        return Face::from_deck(parse_family(family), deck);
      })
      .def_property_readonly("family", [](const Face& f) { return std::string(to_string(f.family())); })
      .def_property_readonly("n", &Face::n)
      .def_property_readonly("levels", &Face::levels)
      .def_property_readonly("type", [](const Face& f) { return f.type().labels(); })
      .def_property_readonly("rank", &Face::rank)
      .def("is_chamber", &Face::is_chamber)
      .def("deck", &Face::deck)
      .def("is_face_of", [](const Face& x, const Face& y) { return is_face_of(x, y); })
      .def("__mul__", [](const Face& x, const Face& y) { return x * y; })
      .def("__eq__", [](const Face& x, const Face& y) { return x == y; })
      .def("__hash__", [](const Face& f) { return std::hash<Face>{}(f); })
      .def("__str__", &Face::to_string)
      .def("__repr__", [](const Face& f) { return "Face('" + std::string(to_string(f.family())) + "', " + f.to_string() + ")"; });

  m.def("enumerate_faces", [](const std::string& family, int n, const std::string& type) {
    const Family fam = parse_family(family);
    std::optional<FaceType> filter;
    if (!type.empty()) filter = FaceType::parse(fam, n, type);
    return enumerate_faces(fam, n, filter);
  }, py::arg("family"), py::arg("n"), py::arg("type") = "");

  py::class_<AlgebraElement>(m, "Element")
      .def_static("parse", [](const std::string& family, int n, const std::string& text) {
        return parse_element_text(parse_family(family), n, text);
      })
      .def_static("from_json", [](const py::object& obj) { return element_from_json(to_json(obj)); })
      .def_static("of_face", [](const Face& f, const py::object& c) { return AlgebraElement::of_face(f, from_py(c)); },
                  py::arg("face"), py::arg("coefficient") = 1)
      .def_property_readonly("family", [](const AlgebraElement& x) { return std::string(to_string(x.family())); })
      .def_property_readonly("n", &AlgebraElement::n)
      .def("terms", [](const AlgebraElement& x) {
        py::list out;
        for (const auto& [f, c] : x.sorted_terms()) out.append(py::make_tuple(f, to_py(c)));
        return out;
      })
      .def("coefficient", [](const AlgebraElement& x, const Face& f) { return to_py(x.coefficient(f)); })
      .def("coefficient_sum", [](const AlgebraElement& x) { return to_py(x.coefficient_sum()); })
      .def("is_zero", &AlgebraElement::is_zero)
      .def("to_json", [](const AlgebraElement& x) { return to_py(element_json(x)); })
      .def("__len__", &AlgebraElement::size)
      .def("__add__", [](const AlgebraElement& x, const AlgebraElement& y) { return x + y; })
      .def("__sub__", [](const AlgebraElement& x, const AlgebraElement& y) { return x - y; })
      .def("__neg__", [](const AlgebraElement& x) { return -x; })
      .def("__mul__", [](const AlgebraElement& x, const AlgebraElement& y) { return x * y; })
      .def("__mul__", [](const AlgebraElement& x, const py::object& c) { return x * from_py(c); })
      .def("__rmul__", [](const AlgebraElement& x, const py::object& c) { return from_py(c) * x; })
      .def("__pow__", [](const AlgebraElement& x, unsigned k) { return power(x, k); })
      .def("__eq__", [](const AlgebraElement& x, const AlgebraElement& y) { return x == y; })
      .def("__str__", &AlgebraElement::to_string)
      .def("__repr__", [](const AlgebraElement& x) { return "Element(" + x.to_string() + ")"; });

  m.def("shuffle", [](const std::string& f, int n, long a) { return shuffle(parse_shuffle_family(f), n, a); },
        py::arg("family"), py::arg("n"), py::arg("a"));
  m.def("sigma", [](const std::string& f, int n, int j, bool primed) { return sigma(parse_shuffle_family(f), n, j, primed); },
        py::arg("family"), py::arg("n"), py::arg("j"), py::arg("primed") = false);
  m.def("idempotents", [](const std::string& f, int n) {
    py::list out;
    for (const auto& c : idempotents(parse_shuffle_family(f), n))
      out.append(py::make_tuple(c.label, c.element, c.character.to_string()));
    return out;
  });
  m.def("eigenvalues", [](const std::string& f, int n, long a) {
    py::list out;
    for (const auto& x : shuffle_eigenvalues(parse_shuffle_family(f), n, a)) out.append(to_py(x));
    return out;
  });
  m.def("spectrum", [](const std::string& f, int n, long a) {
    const auto fam = parse_shuffle_family(f);
    check_verify_scale(fam, n);
    return to_py(spectrum_json(verify_minimal_polynomial(fam, n, a)));
  });
  m.def("transition_matrix", [](const AlgebraElement& x, bool normalized) {
    auto op = transition_operator(x);
    const auto& mat = normalized ? op.normalized() : op.matrix;
    py::list rows;
    for (const auto& r : mat) {
      py::list row;
      for (const auto& v : r) row.append(to_py(v));
      rows.append(row);
    }
    return rows;
  }, py::arg("element"), py::arg("normalized") = true);
  m.def("verify", [](const std::string& f, int n, const std::vector<std::string>& checks) {
    return checks_py(run_verify(parse_shuffle_family(f), n, checks));
  }, py::arg("family"), py::arg("n"), py::arg("checks") = std::vector<std::string>{});

  m.def("map_face", [](const std::string& map, const Face& f) { return apply_map(parse_complex_map(map), f); });
  m.def("push_element", [](const std::string& map, const AlgebraElement& x) { return push_element(parse_complex_map(map), x); });
  m.def("verify_homomorphism", [](const std::string& map, int n, std::uint64_t samples, std::uint64_t seed) {
    auto r = verify_homomorphism(parse_complex_map(map), n, samples, seed);
    py::dict d;
    d["pairs"] = r.pairs;
    d["failures"] = r.failures;
    d["exhaustive"] = r.exhaustive;
    return d;
  }, py::arg("map"), py::arg("n"), py::arg("samples") = 0, py::arg("seed") = 1);

  m.def("qshuffle", [](const std::string& building, int n, long q, int max_a) {
    return checks_py(qshuffle_checks(parse_building_kind(building), n, q, max_a));
  }, py::arg("building"), py::arg("n"), py::arg("q"), py::arg("max_a") = 4);
  m.def("building_face_count", [](const std::string& building, int n, long q, int j) {
    return to_py(predicted_face_count(parse_building_kind(building), n, q, j));
  });

  m.def("simulate", [](const std::string& f, int n, long a, int steps, std::uint64_t trials, std::uint64_t seed,
                       const std::string& route) {
    WalkConfig cfg;
    cfg.family = parse_shuffle_family(f);
    cfg.n = n;
    cfg.a = a;
    cfg.steps = steps;
    cfg.trials = trials;
    cfg.seed = seed;
    if (route != "element" && route != "procedural") throw std::invalid_argument("route must be element or procedural");
    cfg.route = route == "procedural" ? SamplerRoute::Procedural : SamplerRoute::Element;
    WalkTrace t;
    {
      py::gil_scoped_release release;
      t = run_walk(cfg);
    }
    py::dict d;
    d["path"] = t.path;
    d["tv_distance"] = t.tv;
    d["final_counts"] = t.final_counts;
    return d;
  }, py::arg("family"), py::arg("n"), py::arg("a"), py::arg("steps"), py::arg("trials"), py::arg("seed") = 1,
     py::arg("route") = "element");

  m.def("stirling2", [](unsigned a, unsigned j) { return to_py(stirling2(a, j)); });
  m.def("signed_stirling", [](unsigned a, unsigned j) { return to_py(signed_stirling(a, j)); });
  m.def("q_stirling", [](const std::string& kind, unsigned a, unsigned j, long q, int n) {
    return to_py(q_stirling(parse_stirling_kind(kind), a, j, q, n));
  }, py::arg("kind"), py::arg("a"), py::arg("j"), py::arg("q") = 1, py::arg("n") = 0);
  m.def("q_number", [](unsigned j, long q) { return to_py(q_number(j, q)); });
}
