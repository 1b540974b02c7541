#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "steiner/configurations.hpp"
#include "steiner/constructions.hpp"
#include "steiner/explorer.hpp"
#include "steiner/moufang.hpp"
#include "steiner/term.hpp"
#include "steiner/text_io.hpp"

namespace py = pybind11;
using namespace steiner;

namespace {

std::vector<std::vector<Element>> rows_of(const CayleyTable& t) {
  std::vector<std::vector<Element>> rows;
  for (Element a = 0; a < t.order(); ++a) rows.emplace_back(t.row(a).begin(), t.row(a).end());
  return rows;
}

py::object counterexample(const CheckReport& r) {
  if (!r.counterexample) return py::none();
  py::dict d;
  for (auto [name, value] : *r.counterexample) d[py::str(std::string(1, name))] = value;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Steiner triple systems, Steiner loops, and Moufang's theorem";

  auto base = py::register_exception<Error>(m, "SteinerError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());

  py::class_<TripleSystem>(m, "TripleSystem")
      .def(py::init<std::size_t, std::vector<Block>>(), py::arg("v"), py::arg("blocks"))
      .def_property_readonly("points", &TripleSystem::points)
      .def_property_readonly("blocks", &TripleSystem::blocks)
      .def("__eq__", [](const TripleSystem& a, const TripleSystem& b) { return a == b; })
      .def("__str__", &format_sts)
      .def("__repr__", [](const TripleSystem& s) {
        return "TripleSystem(v=" + std::to_string(s.points()) + ", " + std::to_string(s.blocks().size()) +
               " blocks)";
      });

  py::class_<LoopTable>(m, "LoopTable")
      .def(py::init([](const std::vector<std::vector<Element>>& rows) {
             return LoopTable(CayleyTable::from_rows(rows));
           }),
           py::arg("rows"))
      .def_property_readonly("order", &LoopTable::order)
      .def_property_readonly("rows", [](const LoopTable& t) { return rows_of(t.table()); })
      .def("__call__", [](const LoopTable& t, Element a, Element b) {
        if (a >= t.order() || b >= t.order()) throw py::index_error("element out of range");
        return t(a, b);
      })
      .def("__eq__", [](const LoopTable& a, const LoopTable& b) { return a == b; })
      .def("__str__", [](const LoopTable& t) { return format_table(t.table()); });

  py::class_<QuasigroupTable>(m, "QuasigroupTable")
      .def(py::init([](const std::vector<std::vector<Element>>& rows) {
             return QuasigroupTable(CayleyTable::from_rows(rows));
           }),
           py::arg("rows"))
      .def_property_readonly("order", &QuasigroupTable::order)
      .def_property_readonly("rows", [](const QuasigroupTable& t) { return rows_of(t.table()); })
      .def("__call__", [](const QuasigroupTable& t, Element a, Element b) {
        if (a >= t.order() || b >= t.order()) throw py::index_error("element out of range");
        return t(a, b);
      })
      .def("__eq__", [](const QuasigroupTable& a, const QuasigroupTable& b) { return a == b; })
      .def("__str__", [](const QuasigroupTable& t) { return format_table(t.table()); });

  m.def("validate_sts", [](long long v, const std::vector<RawTriple>& blocks) {
    auto report = validate_sts(v, blocks);
    py::list violations;
    for (const auto& violation : report.violations) violations.append(py::make_tuple(violation.rule, violation.witness));
    return py::make_tuple(report.valid, violations);
  });
  m.def("is_steiner_loop", &is_steiner_loop);
  m.def("is_steiner_quasigroup", &is_steiner_quasigroup);
  m.def("is_associative", [](const LoopTable& t) { return is_associative(t.table()); });
  m.def("sts_to_quasigroup", &sts_to_quasigroup);
  m.def("quasigroup_to_sts", &quasigroup_to_sts);
  m.def("quasigroup_to_loop", &quasigroup_to_loop);
  m.def("sts_to_loop", &sts_to_loop);
  m.def("loop_to_quasigroup", &loop_to_quasigroup);
  m.def("loop_to_sts", &loop_to_sts);

  m.def("read_sts", [](const std::string& text) { return std::get<TripleSystem>(read_structure(text, FileKind::sts)); });
  m.def("read_loop", [](const std::string& text) { return std::get<LoopTable>(read_structure(text, FileKind::loop)); });
  m.def("format_sts", &format_sts);
  m.def("format_table", [](const LoopTable& t) { return format_table(t.table()); });

  m.def("parse_identity", [](const std::string& s) { return print_identity(parse_identity(s)); },
        "Parses and reprints an identity with minimal parentheses.");
  m.def("builtin_names", &builtin_names);
  m.def(
      "check_identity",
      [](const std::string& identity, const LoopTable& loop) {
        auto id = builtin_identity(identity);
        CheckReport r = check_identity(id ? *id : parse_identity(identity), loop);
        return py::make_tuple(r.holds, counterexample(r), r.assignments_checked);
      },
      py::arg("identity"), py::arg("loop"),
      "Identity text or builtin name; returns (holds, counterexample, assignments_checked).");

  m.def(
      "satisfies_mt",
      [](const LoopTable& loop, const std::string& method) {
        MTReport r;
        if (method == "def") r = satisfies_mt_definition(loop);
        else if (method == "prop1") r = satisfies_mt_prop1(loop);
        else if (method == "fano") r = satisfies_mt_fano(loop);
        else throw py::value_error("method must be def, prop1 or fano");
        return py::make_tuple(r.satisfies, r.counterexample, r.triples_examined);
      },
      py::arg("loop"), py::arg("method") = "def");
  m.def("subloop_generated", &subloop_generated);
  m.def("is_moufang", [](const LoopTable& loop) { return is_moufang(loop).holds; });

  m.def("pasch_configs", [](const TripleSystem& s) {
    std::vector<std::array<Block, 4>> out;
    for (const auto& p : find_pasch_configs(s)) out.push_back(p.blocks());
    return out;
  });
  m.def("pasch_counts_per_point", &pasch_counts_per_point);
  m.def("subsystem_generated", &subsystem_generated);

  m.def("fano", &fano);
  m.def("affine_ag23", &affine_ag23);
  m.def("projective", &projective, py::arg("n"));
  m.def("bose", &bose, py::arg("k"));
  m.def("steiner_loop_10", &steiner_loop_10);
  m.def("elementary_abelian_loop", &elementary_abelian_loop, py::arg("n"));
  m.def("cyclic_group", &cyclic_group, py::arg("n"));
  m.def("moufang_loop_12", &moufang_loop_12);
  m.def("sts13_classes", &sts13_classes);
  m.def("relabel", &relabel);
  m.def("are_isomorphic", &are_isomorphic);
  m.def("canonical_form", &canonical_form);
  m.def(
      "enumerate_sts",
      [](int v, bool allow_slow) {
        EnumerateOptions options;
        options.allow_slow = allow_slow;
        py::gil_scoped_release release;
        return enumerate_sts(v, options);
      },
      py::arg("v"), py::arg("allow_slow") = false);

  m.def(
      "find_identities",
      [](const LoopTable& target, const std::optional<std::vector<std::pair<std::string, LoopTable>>>& witnesses,
         std::size_t max_leaves, const std::string& variables) {
        std::vector<NamedLoop> named;
        if (witnesses)
          for (const auto& [name, loop] : *witnesses) named.push_back({name, loop});
        else
          named = default_witnesses();
        ExploreOptions options;
        options.max_leaves = max_leaves;
        options.variables.assign(variables.begin(), variables.end());
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& f : find_identities(target, named, options))
          out.emplace_back(print_identity(f.identity), f.witness);
        return out;
      },
      py::arg("target"), py::arg("witnesses") = py::none(), py::arg("max_leaves") = 6, py::arg("variables") = "xyz");

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Runs the command line tool in-process; returns (exit_code, stdout, stderr).");
}
