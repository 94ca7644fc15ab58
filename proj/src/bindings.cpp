#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "coxstar/demazure.hpp"
#include "coxstar/facemonoid.hpp"
#include "coxstar/oracle.hpp"
#include "coxstar/table_io.hpp"

namespace py = pybind11;
using namespace coxstar;

namespace {

NodeSet set_from(const Group& g, const std::vector<int>& labels) {
    NodeSet s;
    for (int l : labels) {
        if (l < 1 || l > g.rank()) throw py::value_error("label out of range");
        s = s.with(l);
    }
    return s;
}

std::vector<int> set_to(NodeSet s) { return s.labels(); }

py::dict report_dict(const VerificationReport& rep) {
    py::dict d;
    d["type"] = rep.type_name;
    d["ok"] = rep.ok();
    d["pairs"] = rep.pairs;
    d["assoc_triples"] = rep.assoc_triples;
    d["internal_mismatch"] = rep.internal_mismatch;
    py::list failures;
    for (const auto& f : rep.failures) {
        py::dict fd;
        fd["check"] = f.check;
        fd["detail"] = f.detail;
        failures.append(fd);
    }
    d["failures"] = failures;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Demazure product, downward operation, and the subset face monoid "
              "of finite Coxeter groups (exact arithmetic)";

    py::register_exception<ParseError>(m, "TypeParseError", PyExc_ValueError);
    py::register_exception<NotALongestElement>(m, "NotALongestElement", PyExc_RuntimeError);
    py::register_exception<InternalMismatch>(m, "InternalMismatchError", PyExc_RuntimeError);

    py::class_<Group>(m, "Group")
        .def(py::init([](const std::string& type) { return new Group(parse_type(type)); }),
             py::arg("type"))
        .def_property_readonly("name", [](const Group& g) { return g.diagram().name(); })
        .def_property_readonly("rank", &Group::rank)
        .def_property_readonly("positive_roots",
                               [](const Group& g) {
                                   return g.dihedral() ? g.dihedral_bond() : g.roots().npos();
                               })
        .def("length",
             [](const Group& g, const Word& w) { return g.from_word(w).length(); })
        .def("canonical",
             [](const Group& g, const Word& w) { return canonical_word(g.from_word(w)); })
        .def("mul",
             [](const Group& g, const Word& a, const Word& b) {
                 return canonical_word(mul(g.from_word(a), g.from_word(b)));
             })
        .def("inverse",
             [](const Group& g, const Word& w) { return canonical_word(inverse(g.from_word(w))); })
        .def("left_descents",
             [](const Group& g, const Word& w) { return set_to(left_descents(g.from_word(w))); })
        .def("support",
             [](const Group& g, const Word& w) { return set_to(support(g.from_word(w))); })
        .def("bruhat_leq",
             [](const Group& g, const Word& u, const Word& w) {
                 return bruhat_leq(g.from_word(u), g.from_word(w));
             })
        .def("star",
             [](const Group& g, const Word& a, const Word& b) {
                 return canonical_word(star(g.from_word(a), g.from_word(b)));
             })
        .def("down",
             [](const Group& g, const Word& a, const Word& b) {
                 return canonical_word(down(g.from_word(a), g.from_word(b)));
             })
        .def("longest",
             [](const Group& g, const std::vector<int>& j) {
                 return canonical_word(longest(g, set_from(g, j)));
             })
        .def("star_sets",
             [](const Group& g, const std::vector<int>& j1, const std::vector<int>& j2) {
                 return set_to(star_sets(g, set_from(g, j1), set_from(g, j2)));
             })
        .def("star_sets_inductive",
             [](const Group& g, const std::vector<int>& j1, const std::vector<int>& j2) {
                 return set_to(star_sets_inductive(g, set_from(g, j1), set_from(g, j2)));
             })
        .def("closed_form",
             [](const Group& g, const std::vector<int>& j1, const std::vector<int>& j2) {
                 return set_to(closed_form(g.diagram(), set_from(g, j1), set_from(g, j2)));
             })
        .def("full_table",
             [](const Group& g) {
                 py::list entries;
                 const StarTable t = full_table(g);
                 const std::uint32_t nsub = 1u << t.rank;
                 for (std::uint32_t m1 = 0; m1 < nsub; ++m1)
                     for (std::uint32_t m2 = 0; m2 < nsub; ++m2) {
                         py::tuple e = py::make_tuple(set_to(NodeSet::from_mask(m1)),
                                                      set_to(NodeSet::from_mask(m2)),
                                                      set_to(NodeSet::from_mask(t.entry(m1, m2))));
                         entries.append(e);
                     }
                 return entries;
             })
        .def("table_json",
             [](const Group& g) { return emit_table(full_table(g), OutputFormat::json); })
        .def("verify", [](const Group& g) { return report_dict(verify(g)); })
        .def("oracle_cross_check",
             [](const Group& g, std::uint64_t guard) {
                 const CrossCheckReport rep = cross_check(g, guard);
                 py::dict d;
                 d["ok"] = rep.ok();
                 d["size"] = rep.group_size;
                 d["mismatches"] = rep.mismatches;
                 return d;
             },
             py::arg("guard") = 50000)
        .def("__repr__",
             [](const Group& g) { return "<coxstar.Group " + g.diagram().name() + ">"; });
}
