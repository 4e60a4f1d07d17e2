#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "homdual/ac_decider.hpp"
#include "homdual/duality.hpp"
#include "homdual/error.hpp"
#include "homdual/families.hpp"
#include "homdual/graph_io.hpp"
#include "homdual/hom_search.hpp"
#include "homdual/unoriented.hpp"

namespace py = pybind11;
using namespace homdual;

namespace {

using PairList = std::vector<std::pair<int, int>>;

Digraph make_digraph(int order, const PairList& arcs) {
  std::vector<Arc> out;
  for (auto [u, v] : arcs) out.push_back({u, v});
  return Digraph(order, std::move(out));
}

UndirectedGraph make_graph(int order, const PairList& edges) {
  std::vector<Edge> out;
  for (auto [u, v] : edges) out.push_back({u, v});
  return UndirectedGraph(order, std::move(out));
}

PairList arc_list(const Digraph& g) {
  PairList out;
  for (const Arc& a : g.arcs()) out.emplace_back(a.from, a.to);
  return out;
}

PairList edge_list(const UndirectedGraph& g) {
  PairList out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

Digraph family(const std::string& name, int n) {
  const auto tag = parse_family_name(name);
  if (!tag || *tag == FamilyTag::UndirectedCycle) throw ValidationError("unknown digraph family '" + name + "'");
  return make_family({*tag, n});
}

ColourMethod colour_method(const std::string& m) {
  if (m == "hom") return ColourMethod::Hom;
  if (m == "orientation") return ColourMethod::Orientation;
  if (m == "pattern") return ColourMethod::Pattern;
  throw ValidationError("method must be hom, orientation or pattern");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Homomorphisms into AC_n, duality pairs and certificates";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);
  py::register_exception<ContractError>(m, "ContractError", PyExc_AssertionError);

  py::class_<Digraph>(m, "Digraph")
      .def(py::init(&make_digraph), py::arg("order"), py::arg("arcs") = PairList{})
      .def_property_readonly("order", &Digraph::order)
      .def_property_readonly("arcs", &arc_list)
      .def("has_arc", &Digraph::has_arc)
      .def("is_oriented", &Digraph::is_oriented)
      .def("__eq__", [](const Digraph& a, const Digraph& b) { return a == b; })
      .def("__str__", [](const Digraph& g) { return format_graph(g); })
      .def("__repr__", [](const Digraph& g) {
        return "Digraph(" + std::to_string(g.order()) + ", " + std::to_string(g.arc_count()) + " arcs)";
      });

  py::class_<UndirectedGraph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("order"), py::arg("edges") = PairList{})
      .def_property_readonly("order", &UndirectedGraph::order)
      .def_property_readonly("edges", &edge_list)
      .def("__str__", [](const UndirectedGraph& g) { return format_graph(g); });

  m.def("parse_digraph", [](const std::string& text) {
    auto g = parse_graph(text);
    if (auto* d = std::get_if<Digraph>(&g)) return *d;
    throw ValidationError("expected a digraph");
  });
  m.def("family", &family, py::arg("name"), py::arg("n"), "dipath, dicycle, altpath, qpath, accycle or tt");
  m.def("cycle", &make_undirected_cycle, py::arg("n"));
  m.def("complete_graph", &make_complete_graph, py::arg("n"));

  m.def(
      "exists_hom",
      [](const Digraph& g, const Digraph& h, std::size_t guard) -> std::optional<std::vector<Vertex>> {
        auto hom = exists_hom(g, h, guard);
        if (!hom) return std::nullopt;
        return hom->map;
      },
      py::arg("g"), py::arg("h"), py::arg("guard") = kDefaultHomGuard);
  m.def("isomorphic", [](const Digraph& g, const Digraph& h) { return isomorphic(g, h); });
  m.def("core", [](const Digraph& g) { return core_of(g); });
  m.def(
      "images",
      [](int n) {
        const ImageSet set = surjective_images(make_q_path(n));
        return std::vector<Digraph>(set.members.begin(), set.members.end());
      },
      py::arg("n"), "minimal surjective images of Q_n");
  m.def(
      "oriented_graphs",
      [](int order, bool connected) {
        const auto list = enumerate_oriented_graphs(order, connected);
        return std::vector<Digraph>(list.begin(), list.end());
      },
      py::arg("order"), py::arg("connected_only") = false);

  m.def(
      "decide_ac",
      [](const Digraph& g, int n) {
        const Certificate c = decide_ac(g, n);
        return py::module_::import("json").attr("loads")(certificate_to_json(c));
      },
      py::arg("g"), py::arg("n"), "certificate dict for g -> AC_n");
  m.def(
      "verify_certificate",
      [](const Digraph& g, int n, const py::dict& cert) {
        const std::string text = py::str(py::module_::import("json").attr("dumps")(cert));
        const VerifyResult r = verify_certificate(g, n, certificate_from_json(text));
        return std::make_pair(r.ok, r.reason);
      },
      py::arg("g"), py::arg("n"), py::arg("cert"));

  m.def(
      "check_duality_pair",
      [](const Digraph& left, const Digraph& right, int max_order, int samples, int sample_order,
         std::uint64_t seed) {
        SampleSpec sampling{samples, std::min(max_order + 1, sample_order), sample_order, seed};
        const DualityReport r = check_duality_pair(left, right, max_order, sampling);
        return py::module_::import("json").attr("loads")(r.to_json());
      },
      py::arg("left"), py::arg("right"), py::arg("max_order"), py::arg("samples") = 0, py::arg("sample_order") = 8,
      py::arg("seed") = 0);
  m.def("tree_dual", [](const Digraph& t) { return Digraph(tree_dual(t)); });

  m.def(
      "cycle_colourable",
      [](const UndirectedGraph& g, int k, const std::string& method) {
        const ColourResult r = cycle_colourable(g, k, colour_method(method));
        return std::make_pair(r.colourable, r.mapping);
      },
      py::arg("g"), py::arg("k"), py::arg("method") = "hom");
}
