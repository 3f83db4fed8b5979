// Python bindings for the group, crossed-module, pullback, induced and text
// format layers. Groups are shared and immutable, so they cross the boundary
// by shared pointer.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "crossmod/induced.hpp"
#include "crossmod/textformat.hpp"

namespace py = pybind11;
using namespace crossmod;

namespace {

Strategy parse_strategy(const std::string& s) {
  if (s == "auto") return Strategy::Auto;
  if (s == "epi") return Strategy::Epi;
  if (s == "mono") return Strategy::Mono;
  if (s == "general") return Strategy::GeneralTC;
  throw py::value_error("strategy must be one of auto, epi, mono, general");
}

InducedOptions options(const std::string& strategy, int coset_limit, bool compare_relators) {
  InducedOptions o;
  o.strategy = parse_strategy(strategy);
  o.coset_limit = coset_limit;
  o.compare_relators = compare_relators;
  return o;
}

py::dict summary_dict(const EnumerationSummary& s) {
  py::dict d;
  d["relators"] = s.relators;
  d["rounds"] = s.rounds;
  d["max_active"] = s.max_active;
  d["total_defined"] = s.total_defined;
  d["coset_limit"] = s.coset_limit;
  return d;
}

}  // namespace

PYBIND11_MODULE(_crossmod, m) {
  m.doc() = "Crossed modules and 2-crossed modules over finite groups";

  static py::exception<Error> error_type(m, "CrossmodError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error_type.ptr())(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      exc.attr("witness") = e.witness();
      PyErr_SetObject(error_type.ptr(), exc.ptr());
    }
  });

  py::class_<FiniteGroup, std::shared_ptr<FiniteGroup>>(m, "Group")
      .def_static("cyclic", [](int n) { return std::const_pointer_cast<FiniteGroup>(FiniteGroup::cyclic(n)); })
      .def_static("dihedral", [](int n) { return std::const_pointer_cast<FiniteGroup>(FiniteGroup::dihedral(n)); })
      .def_static("symmetric", [](int n) { return std::const_pointer_cast<FiniteGroup>(FiniteGroup::symmetric(n)); })
      .def_static("klein_four", [] { return std::const_pointer_cast<FiniteGroup>(FiniteGroup::klein_four()); })
      .def_static("quaternion", [] { return std::const_pointer_cast<FiniteGroup>(FiniteGroup::quaternion()); })
      .def_static("trivial", [] { return std::const_pointer_cast<FiniteGroup>(FiniteGroup::trivial()); })
      .def_static(
          "from_table",
          [](const std::vector<std::vector<Elem>>& t, std::vector<std::string> labels) {
            return std::const_pointer_cast<FiniteGroup>(FiniteGroup::from_table(t, std::move(labels)));
          },
          py::arg("table"), py::arg("labels") = std::vector<std::string>{})
      .def_static("direct_product",
                  [](const std::shared_ptr<FiniteGroup>& a, const std::shared_ptr<FiniteGroup>& b) {
                    return std::const_pointer_cast<FiniteGroup>(FiniteGroup::direct_product(a, b));
                  })
      .def_property_readonly("order", &FiniteGroup::order)
      .def("mul", &FiniteGroup::mul)
      .def("inv", &FiniteGroup::inv)
      .def("element_order", &FiniteGroup::element_order)
      .def("is_abelian", &FiniteGroup::is_abelian)
      .def("label", &FiniteGroup::label)
      .def("table", &FiniteGroup::table)
      .def("__len__", &FiniteGroup::order)
      .def("__repr__", [](const FiniteGroup& g) { return "<Group of order " + std::to_string(g.order()) + ">"; });

  // Group is shared_ptr<const FiniteGroup>; expose it through the non-const holder.
  const auto group = [](const Group& g) { return std::const_pointer_cast<FiniteGroup>(g); };

  py::class_<GroupHom>(m, "GroupHom")
      .def(py::init([](const std::shared_ptr<FiniteGroup>& s, const std::shared_ptr<FiniteGroup>& d,
                       std::vector<Elem> map) { return GroupHom::make(s, d, std::move(map)); }),
           py::arg("src"), py::arg("dst"), py::arg("map"))
      .def_static("identity", [](const std::shared_ptr<FiniteGroup>& g) { return GroupHom::identity(g); })
      .def_static("trivial", [](const std::shared_ptr<FiniteGroup>& s, const std::shared_ptr<FiniteGroup>& d) {
        return GroupHom::trivial(s, d);
      })
      .def_property_readonly("src", [group](const GroupHom& h) { return group(h.src()); })
      .def_property_readonly("dst", [group](const GroupHom& h) { return group(h.dst()); })
      .def_property_readonly("map", &GroupHom::map)
      .def("__call__", &GroupHom::operator());

  py::class_<ActionTable>(m, "ActionTable")
      .def(py::init([](const std::shared_ptr<FiniteGroup>& actor, const std::shared_ptr<FiniteGroup>& space,
                       const std::vector<std::vector<Elem>>& rows) { return ActionTable::make(actor, space, rows); }),
           py::arg("actor"), py::arg("space"), py::arg("rows"))
      .def_static("conjugation", [](const std::shared_ptr<FiniteGroup>& g) { return ActionTable::conjugation(g); })
      .def_static("trivial", [](const std::shared_ptr<FiniteGroup>& a, const std::shared_ptr<FiniteGroup>& s) {
        return ActionTable::trivial(a, s);
      })
      .def_property_readonly("actor", [group](const ActionTable& a) { return group(a.actor()); })
      .def_property_readonly("space", [group](const ActionTable& a) { return group(a.space()); })
      .def("rows", &ActionTable::rows)
      .def("__call__", &ActionTable::operator());

  py::class_<PreCrossedModule>(m, "PreCrossedModule")
      .def(py::init(&PreCrossedModule::make), py::arg("action"), py::arg("boundary"))
      .def_property_readonly("M", [group](const PreCrossedModule& x) { return group(x.M()); })
      .def_property_readonly("P", [group](const PreCrossedModule& x) { return group(x.P()); })
      .def_property_readonly("action", &PreCrossedModule::action)
      .def_property_readonly("boundary", &PreCrossedModule::boundary)
      .def("act", &PreCrossedModule::act);
  py::class_<CrossedModule, PreCrossedModule>(m, "CrossedModule")
      .def(py::init(&CrossedModule::make), py::arg("action"), py::arg("boundary"))
      .def_static("from_precrossed", &CrossedModule::from);

  m.def("is_crossed", &is_crossed);
  m.def("peiffer_commutator", &peiffer_commutator);
  m.def("normal_inclusion", [](const std::shared_ptr<FiniteGroup>& g, const std::vector<Elem>& gens) {
    return normal_inclusion(g, Subgroup::generated(g, gens));
  }, py::arg("group"), py::arg("generators"), "Inclusion of the subgroup generated by `generators`, which must be normal.");
  m.def("automorphism_xmod", [](const std::shared_ptr<FiniteGroup>& g) { return automorphism_xmod(g); });
  m.def("abelian_xmod", &abelian_xmod);
  m.def("central_extension_xmod", [](const GroupHom& d) { return central_extension_xmod(d); });

  py::class_<XModMorphism>(m, "XModMorphism")
      .def(py::init(&XModMorphism::make), py::arg("mu"), py::arg("eta"), py::arg("src"), py::arg("dst"))
      .def_static("identity", &XModMorphism::identity)
      .def_property_readonly("mu", &XModMorphism::mu)
      .def_property_readonly("eta", &XModMorphism::eta)
      .def_property_readonly("src", &XModMorphism::src)
      .def_property_readonly("dst", &XModMorphism::dst);
  m.def("find_xmod_isomorphism", &find_xmod_isomorphism);

  py::class_<TwoCrossedModule>(m, "TwoCrossedModule")
      .def(py::init([](GroupHom d2, GroupHom d1, ActionTable act_l, ActionTable act_m, std::vector<Elem> lifting) {
             return TwoCrossedModule::make({std::move(d2), std::move(d1), std::move(act_l), std::move(act_m),
                                            std::move(lifting)});
           }),
           py::arg("d2"), py::arg("d1"), py::arg("act_l"), py::arg("act_m"), py::arg("lifting"),
           "lifting is the flat table with {m0, m1} at m0 * |M| + m1")
      .def_property_readonly("L", [group](const TwoCrossedModule& x) { return group(x.L()); })
      .def_property_readonly("M", [group](const TwoCrossedModule& x) { return group(x.M()); })
      .def_property_readonly("P", [group](const TwoCrossedModule& x) { return group(x.P()); })
      .def_property_readonly("d2", &TwoCrossedModule::d2)
      .def_property_readonly("d1", &TwoCrossedModule::d1)
      .def_property_readonly("act_l", &TwoCrossedModule::act_l)
      .def_property_readonly("act_m", &TwoCrossedModule::act_m)
      .def_property_readonly("lifting", [](const TwoCrossedModule& x) { return x.data().lifting; })
      .def("lift", &TwoCrossedModule::lift)
      .def("m_act", &TwoCrossedModule::m_act)
      .def("lifting_trivial", &TwoCrossedModule::lifting_trivial)
      .def("base", &TwoCrossedModule::base);

  m.def("from_precrossed_peiffer", &from_precrossed_peiffer);
  m.def("from_crossed", py::overload_cast<const CrossedModule&>(&from_crossed));
  m.def("reflect_to_xmod", &reflect_to_xmod);
  m.def("top_crossed_module", &top_crossed_module);
  m.def("scan_axioms", [](const TwoCrossedModule& x) {
    std::vector<std::pair<std::string, std::vector<Elem>>> out;
    for (const Violation& v : scan_axioms(x.data(), {false, 0})) out.emplace_back(to_string(v.axiom), v.witness);
    return out;
  }, "All axiom violations as (axiom, witness) pairs; empty for a valid module.");
  m.def("trivial_lifting_report", [](const TwoCrossedModule& x) {
    const TrivialLiftingReport r = trivial_lifting_report(x);
    py::dict d;
    d["peiffer_identity"] = r.peiffer_identity.pass;
    d["l_abelian"] = r.l_abelian.pass;
    d["image_acts_trivially"] = r.image_acts_trivially.pass;
    return d;
  });

  py::class_<X2Morphism>(m, "X2Morphism")
      .def(py::init(&X2Morphism::make), py::arg("f2"), py::arg("f1"), py::arg("f0"), py::arg("src"), py::arg("dst"))
      .def_static("identity", &X2Morphism::identity)
      .def_property_readonly("f2", &X2Morphism::f2)
      .def_property_readonly("f1", &X2Morphism::f1)
      .def_property_readonly("f0", &X2Morphism::f0)
      .def_property_readonly("src", &X2Morphism::src)
      .def_property_readonly("dst", &X2Morphism::dst);
  m.def("find_x2_isomorphism", &find_x2_isomorphism);
  m.def("trivial_x2mod", &trivial_x2mod);

  py::class_<PullbackXModResult>(m, "PullbackXModResult")
      .def_readonly("module", &PullbackXModResult::module)
      .def_readonly("proj_to_N", &PullbackXModResult::proj_to_N)
      .def_readonly("legend", &PullbackXModResult::legend);
  py::class_<PullbackX2Result>(m, "PullbackX2Result")
      .def_readonly("module", &PullbackX2Result::module)
      .def_readonly("proj", &PullbackX2Result::proj)
      .def_readonly("legend_m", &PullbackX2Result::legend_m)
      .def_readonly("legend_l", &PullbackX2Result::legend_l);
  m.def("pullback_xmod", &pullback_xmod, py::arg("module"), py::arg("phi"));
  m.def("pullback_x2mod", &pullback_x2mod, py::arg("module"), py::arg("phi"));

  py::class_<InducedXModResult>(m, "InducedXModResult")
      .def_property_readonly("decided", &InducedXModResult::decided)
      .def_property_readonly("strategy", [](const InducedXModResult& r) { return to_string(r.strategy_used); })
      .def_readonly("module", &InducedXModResult::module)
      .def_readonly("canonical", &InducedXModResult::canonical)
      .def_property_readonly("summary", [](const InducedXModResult& r) { return summary_dict(r.summary); });
  py::class_<InducedX2Result>(m, "InducedX2Result")
      .def_property_readonly("decided", &InducedX2Result::decided)
      .def_property_readonly("strategy", [](const InducedX2Result& r) { return to_string(r.strategy_used); })
      .def_readonly("module", &InducedX2Result::module)
      .def_readonly("canonical", &InducedX2Result::canonical)
      .def_readonly("component_orders", &InducedX2Result::component_orders)
      .def_property_readonly("summary", [](const InducedX2Result& r) { return summary_dict(r.summary); });

  m.def(
      "induced_xmod",
      [](const CrossedModule& x, const GroupHom& phi, const std::string& strategy, int coset_limit) {
        return induced_xmod(x, phi, options(strategy, coset_limit, false));
      },
      py::arg("module"), py::arg("phi"), py::arg("strategy") = "auto", py::arg("coset_limit") = 100000);
  m.def(
      "induced_x2mod",
      [](const XModMorphism& theta, const TwoCrossedModule& x, const std::string& strategy, int coset_limit,
         bool compare_relators) { return induced_x2mod(theta, x, options(strategy, coset_limit, compare_relators)); },
      py::arg("theta"), py::arg("module"), py::arg("strategy") = "auto", py::arg("coset_limit") = 100000,
      py::arg("compare_relators") = false);
  m.def(
      "pushout_x2",
      [](const X2Morphism& l, const X2Morphism& r, int coset_limit) {
        return pushout_x2(l, r, options("auto", coset_limit, false));
      },
      py::arg("left"), py::arg("right"), py::arg("coset_limit") = 100000);
  m.def(
      "cokernel_x2", [](const X2Morphism& f, int coset_limit) { return cokernel_x2(f, options("auto", coset_limit, false)); },
      py::arg("morphism"), py::arg("coset_limit") = 100000);

  py::class_<Workspace>(m, "Workspace")
      .def(py::init<>())
      .def("names", &Workspace::names)
      .def("kind", [](const Workspace& w, const std::string& n) { return std::string(to_string(w.kind(n))); })
      .def("__contains__", &Workspace::contains)
      .def("group", [group](const Workspace& w, const std::string& n) { return group(w.group(n)); })
      .def("hom", &Workspace::hom)
      .def("action", &Workspace::action)
      .def("precrossed", &Workspace::precrossed)
      .def("xmod", &Workspace::xmod)
      .def("x2mod", &Workspace::x2mod)
      .def("xmorphism", &Workspace::xmorphism)
      .def("x2morphism", &Workspace::x2morphism)
      .def("add_group", [](Workspace& w, const std::string& n, const std::shared_ptr<FiniteGroup>& g) { w.add_group(n, g); })
      .def("add_xmod", &Workspace::add_xmod)
      .def("add_precrossed", &Workspace::add_precrossed)
      .def("add_x2mod", &Workspace::add_x2mod)
      .def("add_xmorphism", &Workspace::add_xmorphism)
      .def("add_x2morphism", &Workspace::add_x2morphism)
      .def("serialize", &Workspace::serialize);
  m.def("parse_text", [](const std::string& text, const std::string& source) { return parse_text(text, source); },
        py::arg("text"), py::arg("source") = "<input>");
  m.def("parse_files", &parse_files);
}
