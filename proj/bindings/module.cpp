#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <random>
#include <sstream>

#include "sylowlab/catalog.hpp"
#include "sylowlab/criterion.hpp"
#include "sylowlab/gstruct.hpp"
#include "sylowlab/sylow.hpp"

namespace py = pybind11;
using namespace sylowlab;

namespace {

SylowOptions make_options(std::uint64_t seed) {
  SylowOptions opts;
  opts.seed = seed;
  return opts;
}

py::dict verdict_dict(const Verdict& v) {
  py::dict d;
  d["hypothesis_satisfied"] = v.hypothesis_satisfied;
  d["predicted_solvable"] =
      v.predicted_solvable ? py::cast(*v.predicted_solvable) : py::none();
  d["actual_solvable"] = v.actual_solvable;
  d["consistent"] = v.consistent;
  return d;
}

}  // namespace

PYBIND11_MODULE(_sylowlab, m) {
  m.doc() = "Sylow subgroup counts and solvability criteria for finite "
            "permutation groups";

  py::register_exception<parse_error>(m, "ParseError", PyExc_ValueError);
  py::register_exception<cap_exceeded>(m, "CapExceeded", PyExc_RuntimeError);
  py::register_exception<inconsistency_error>(m, "InconsistencyError",
                                              PyExc_RuntimeError);

  py::class_<Perm>(m, "Perm")
      .def(py::init<int>(), py::arg("degree"))
      .def(py::init<std::vector<int>>(), py::arg("images"))
      .def_property_readonly("degree", &Perm::degree)
      .def_property_readonly("images", &Perm::images)
      .def("is_identity", &Perm::is_identity)
      .def("__eq__", [](const Perm& a, const Perm& b) { return a == b; })
      .def("__hash__",
           [](const Perm& a) {
             std::size_t h = 0;
             for (int i : a.images()) h = h * 1000003u + static_cast<std::size_t>(i);
             return h;
           })
      .def("__mul__", &compose)   // left-to-right: (a * b)(i) = b(a(i))
      .def("__invert__", &inverse)
      .def("__repr__", [](const Perm& a) { return "Perm(" + format_cycles(a) + ")"; })
      .def("__str__", &format_cycles);

  m.def("parse_cycles", &parse_cycles, py::arg("text"), py::arg("degree"));
  m.def("format_cycles", &format_cycles, py::arg("perm"));
  m.def("compose", &compose, py::arg("a"), py::arg("b"));
  m.def("inverse", &inverse, py::arg("a"));
  m.def("conjugate", &conjugate, py::arg("a"), py::arg("b"));
  m.def("commutator", &commutator, py::arg("a"), py::arg("b"));
  m.def("element_order", &element_order, py::arg("a"));

  py::class_<Group>(m, "Group")
      .def(py::init<int, std::vector<Perm>>(), py::arg("degree"), py::arg("generators"))
      .def_static("trivial", &Group::trivial, py::arg("degree"))
      .def_property_readonly("degree", &Group::degree)
      .def_property_readonly("generators", &Group::generators)
      .def_property_readonly("order", &Group::order)
      .def("contains", &Group::contains, py::arg("g"))
      .def("orbit",
           [](const Group& g, int point) { return g.orbit(point).points; },
           py::arg("point"))
      .def("elements", &Group::elements, py::arg("cap") = kDefaultEnumerationCap)
      .def("random_element",
           [](const Group& g, std::uint64_t seed) {
             std::mt19937_64 rng(seed);
             return g.random_element(rng);
           },
           py::arg("seed"))
      .def("__len__", [](const Group& g) { return g.order(); })
      .def("__contains__", &Group::contains)
      .def("__repr__", [](const Group& g) {
        return "Group(degree=" + std::to_string(g.degree()) +
               ", order=" + std::to_string(g.order()) + ")";
      });

  m.def("read_group_file", &read_group_file, py::arg("path"));
  m.def("read_group_str", [](const std::string& text) {
    std::istringstream in(text);
    return read_group(in);
  });
  m.def("write_group_str", [](const Group& g) {
    std::ostringstream out;
    write_group(out, g);
    return out.str();
  });

  m.def("is_solvable", &is_solvable, py::arg("g"));
  m.def("is_nilpotent", &is_nilpotent, py::arg("g"));
  m.def("is_normal", &is_normal, py::arg("g"), py::arg("h"));
  m.def("derived_subgroup", &derived_subgroup, py::arg("g"));
  m.def("normal_closure", &normal_closure, py::arg("g"), py::arg("seeds"));
  m.def("derived_series_orders", [](const Group& g) {
    std::vector<long long> orders;
    for (const Group& t : derived_series(g).terms) orders.push_back(t.order());
    return orders;
  });

  py::class_<SylowReport>(m, "SylowReport")
      .def_readonly("p", &SylowReport::p)
      .def_readonly("a", &SylowReport::a)
      .def_readonly("subgroup", &SylowReport::subgroup)
      .def_readonly("v_p", &SylowReport::v_p)
      .def_readonly("normalizer_order", &SylowReport::normalizer_order)
      .def("__repr__", [](const SylowReport& r) {
        return "SylowReport(p=" + std::to_string(r.p) + ", a=" + std::to_string(r.a) +
               ", v_p=" + std::to_string(r.v_p) +
               ", normalizer_order=" + std::to_string(r.normalizer_order) + ")";
      });

  m.def("factorize", &factorize, py::arg("n"));
  m.def("p_part", &p_part, py::arg("n"), py::arg("p"));
  m.def(
      "sylow_subgroup",
      [](const Group& g, long p, std::uint64_t seed) {
        return sylow_subgroup(g, p, make_options(seed));
      },
      py::arg("g"), py::arg("p"), py::arg("seed") = SylowOptions{}.seed);
  m.def(
      "count_sylow",
      [](const Group& g, long p, std::uint64_t seed) {
        return count_sylow(g, p, make_options(seed));
      },
      py::arg("g"), py::arg("p"), py::arg("seed") = SylowOptions{}.seed);
  m.def(
      "count_sylow_bruteforce",
      [](const Group& g, long p) { return count_sylow_bruteforce(g, p); },
      py::arg("g"), py::arg("p"));

  py::class_<CatalogEntry>(m, "CatalogEntry")
      .def_readonly("name", &CatalogEntry::name)
      .def_readonly("params", &CatalogEntry::params)
      .def_readonly("group", &CatalogEntry::group)
      .def_readonly("expected_order", &CatalogEntry::expected_order)
      .def("__repr__", [](const CatalogEntry& e) {
        return "CatalogEntry(" + e.name + ", order=" +
               std::to_string(e.expected_order) + ")";
      });

  m.def("alternating", &alternating, py::arg("n"));
  m.def("symmetric", &symmetric, py::arg("n"));
  m.def("cyclic", &cyclic, py::arg("n"));
  m.def("dihedral", &dihedral, py::arg("m"));
  m.def("direct_product", &direct_product, py::arg("factors"));
  m.def("psl2", &psl2, py::arg("q"));
  m.def("psl3_3", &psl3_3);
  m.def("suzuki_8", &suzuki_8);
  m.def("sl2_3", &sl2_3);
  m.def("builtin_corpus", &builtin_corpus);

  m.def(
      "vp_profile",
      [](const Group& g, const std::string& name) {
        VpProfile profile = vp_profile(g, name);
        py::dict d;
        d["name"] = profile.name;
        d["order"] = profile.order;
        d["factorization"] = profile.factorization;
        py::list entries;
        for (const SylowReport& e : profile.entries) entries.append(e);
        d["entries"] = entries;
        return d;
      },
      py::arg("g"), py::arg("name") = std::string{});
  m.def("check_theorem_1_1",
        [](const Group& g) { return verdict_dict(check_theorem_1_1(g)); },
        py::arg("g"));
  m.def("check_theorem_1_3",
        [](const Group& g) { return verdict_dict(check_theorem_1_3(g)); },
        py::arg("g"));
  m.def("check_conjecture_1_2",
        [](const Group& g) { return verdict_dict(check_conjecture_1_2(g)); },
        py::arg("g"));
}
