#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "polarix/alexander.hpp"
#include "polarix/degree_two.hpp"
#include "polarix/io.hpp"
#include "polarix/render.hpp"
#include "polarix/simplicial.hpp"

namespace py = pybind11;
using namespace polarix;

namespace {

Multidegree as_point(const std::vector<int>& coords) { return Multidegree(coords); }

std::vector<std::vector<int>> points_of(int m, int n) {
  const Simplex simplex(m, n);
  std::vector<std::vector<int>> out;
  for (const Multidegree& b : simplex.points()) out.push_back(b.coords());
  return out;
}

std::vector<int> set_of(const IsotoneFamily& f, int color,
                        const std::vector<int>& point) {
  std::vector<int> out;
  for (int j : index_set::elements(f.set(color, as_point(point))))
    out.push_back(j + 1);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact engine for polarizations of powers of graded maximal ideals";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded");

  py::class_<IsotoneFamily>(m, "IsotoneFamily")
      .def_property_readonly("m", &IsotoneFamily::m)
      .def_property_readonly("n", &IsotoneFamily::n)
      .def("set", &set_of, py::arg("color"), py::arg("point"),
           "1-based members of X_color at the point (color is 0-based)")
      .def("to_json", [](const IsotoneFamily& f) { return to_json(f).dump(); })
      .def("__eq__", [](const IsotoneFamily& a, const IsotoneFamily& b) {
        return a == b;
      });

  py::class_<MonomialIdeal>(m, "MonomialIdeal")
      .def_property_readonly("generator_count", &MonomialIdeal::generator_count)
      .def("generators",
           [](const MonomialIdeal& ideal) {
             std::vector<std::string> out;
             for (const Monomial& g : ideal.generators())
               out.push_back(g.str(ideal.ring()));
             return out;
           })
      .def("to_json", [](const MonomialIdeal& i) { return to_json(i).dump(); })
      .def("to_m2", [](const MonomialIdeal& i) { return to_m2(i); })
      .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) {
        return a == b;
      })
      .def("__str__", &MonomialIdeal::str);

  py::class_<DirectedLabeledTree>(m, "DirectedLabeledTree")
      .def(py::init([](int vertices, const std::vector<std::vector<int>>& edges) {
             std::vector<TreeEdge> list;
             for (const auto& e : edges)
               list.push_back(TreeEdge{e.at(0), e.at(1), e.at(2) - 1});
             return DirectedLabeledTree(vertices, std::move(list));
           }),
           py::arg("vertices"), py::arg("edges"),
           "edges as [tail, head, label] with 1-based labels")
      .def_property_readonly("vertex_count", &DirectedLabeledTree::vertex_count)
      .def("dot", &DirectedLabeledTree::dot)
      .def("to_json", [](const DirectedLabeledTree& t) { return to_json(t).dump(); });

  py::class_<SimplicialComplex>(m, "SimplicialComplex")
      .def_property_readonly("dimension", &SimplicialComplex::dimension)
      .def_property_readonly("facet_count",
                             [](const SimplicialComplex& c) {
                               return static_cast<int>(c.facets().size());
                             })
      .def("f_vector", [](const SimplicialComplex& c) { return c.f_vector(); })
      .def("to_json", [](const SimplicialComplex& c) { return to_json(c).dump(); });

  m.def("simplex_points", &points_of, py::arg("m"), py::arg("n"),
        "lattice points of Delta_m(n), lexicographic descending");
  m.def("standard_family", &standard_family, py::arg("m"), py::arg("n"));
  m.def("b_family", &b_family, py::arg("m"), py::arg("n"));
  m.def("family_from_json", [](const std::string& text) {
    return family_from_json(nlohmann::json::parse(text));
  });

  m.def("validate_family", [](const IsotoneFamily& f) {
    ValidationReport report = validate_family(f);
    return py::make_tuple(static_cast<bool>(report), report.message());
  });
  m.def("is_valid_polarization", [](const IsotoneFamily& f) {
    PolarizationCheck check = is_valid_polarization(f);
    return py::make_tuple(check.valid,
                          check.witness ? py::cast(check.witness->coords())
                                        : py::none().cast<py::object>());
  });
  m.def("generators_from_family", &generators_from_family);
  m.def("collapse", &collapse);
  m.def("hilbert_numerator", [](const MonomialIdeal& ideal) {
    return hilbert_numerator(ideal).coeffs;
  });
  m.def("is_polarization_oracle", [](const MonomialIdeal& ideal, int m_, int n_) {
    return is_polarization_oracle(ideal, m_, n_);
  });
  m.def("canonical_form",
        [](const IsotoneFamily& f) { return canonical_form(f); });
  m.def("ls_path", [](const IsotoneFamily& f, const std::vector<int>& a,
                      const std::vector<int>& b) -> py::object {
    auto path = ls_path(f, as_point(a), as_point(b));
    if (!path) return py::none();
    std::vector<std::vector<int>> out;
    for (const Multidegree& u : *path) out.push_back(u.coords());
    return py::cast(out);
  });

  m.def("alexander_dual_oracle",
        [](const MonomialIdeal& ideal) { return alexander_dual_oracle(ideal); });
  m.def("alexander_dual_from_family", &alexander_dual_from_family);
  m.def("rainbow_linear_resolution", &rainbow_linear_resolution);
  m.def("rainbow_binary_words", &rainbow_binary_words);

  m.def("tree_vertex_ideal", &tree_vertex_ideal);
  m.def("tree_pair_ideal", &tree_pair_ideal);
  m.def("trees_up_to_iso", &trees_up_to_iso);
  m.def("tree_linear_quotients_order",
        [](const DirectedLabeledTree& t, int root) {
          const Ring ring = Ring::colored(t.color_count(), 2);
          std::vector<std::string> out;
          for (const Monomial& g : tree_linear_quotients_order(t, root))
            out.push_back(g.str(ring));
          return out;
        });

  m.def("complex_from_ideal",
        [](const MonomialIdeal& ideal) { return complex_from_ideal(ideal); });
  m.def("reduced_homology_gf2", [](const SimplicialComplex& complex) {
    return reduced_homology_gf2(complex);
  });
  m.def("ball_or_sphere_verdict", [](const SimplicialComplex& complex) {
    const TopologyVerdict v = ball_or_sphere_verdict(complex);
    return to_json(v).dump();
  });
  m.def("dual_linear_quotients_order", [](const IsotoneFamily& f) {
    const Ring ring = Ring::colored(f.m(), f.n());
    std::vector<std::string> out;
    for (const Monomial& g : dual_linear_quotients_order(f))
      out.push_back(g.str(ring));
    return out;
  });
  m.def("render_svg", &render_svg);

  m.def("map_count_up_to_symmetry", [](int n) {
    std::set<std::vector<IndexSet>> canon;
    for (const CoordinateMap& x : enumerate_coordinate_maps(3, n, 0))
      canon.insert(canonical_coordinate_map(x).sets);
    return static_cast<long long>(canon.size());
  });
  m.def("enumerate_valid_families", &enumerate_valid_families,
        py::arg("m"), py::arg("n"));
}
