#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skeinpos/errors.hpp"
#include "skeinpos/positivity.hpp"

namespace py = pybind11;
using namespace skeinpos;

// Results cross the boundary as the library's JSON text; the Python package decodes them.

namespace {

SequenceSpec sequence_arg(const std::string& selector, bool is_json) {
  if (is_json) return sequence_from_json(nlohmann::json::parse(selector));
  return parse_sequence(selector);
}

ResolveOptions options(std::size_t cap, unsigned jobs) { return {cap, jobs}; }

Diagram diagram_arg(const std::string& name, int k, int n) {
  if (name == "core-stack") return build_core_stack(k);
  if (name == "theta-over-cores") return build_theta_over_cores(k);
  if (name == "xk-yn") return build_xk_yn(k, n);
  if (name == "zkn") return build_zkn(k, n);
  if (name == "d1-xy") return build_d1_xy();
  if (name == "kink+") return build_kink(Sign::Positive);
  if (name == "kink-") return build_kink(Sign::Negative);
  throw std::invalid_argument("unknown diagram '" + name + "'");
}

std::string maybe_q1(const ConstraintReport& r, bool q1) { return to_json(q1 ? specialize_q1(r) : r).dump(); }

}  // namespace

PYBIND11_MODULE(_skeinpos, m) {
  m.doc() = "Exact Kauffman bracket skein computations";

  py::register_exception<CrossingCapExceeded>(m, "CrossingCapExceeded", PyExc_RuntimeError);
  py::register_exception<StructureError>(m, "StructureError", PyExc_RuntimeError);

  m.def("sequence_entry", [](const std::string& seq, bool is_json, int n) {
    return to_json(sequence_arg(seq, is_json).at(n)).dump();
  });
  m.def("to_basis", [](const std::string& poly, const std::string& seq, bool is_json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& c : to_basis(unipoly_from_json(nlohmann::json::parse(poly)), sequence_arg(seq, is_json)))
      j.push_back(to_json(c));
    return j.dump();
  });

  m.def("theta_bullet", [](const std::string& poly, std::size_t cap, unsigned jobs, bool q1) {
    const SkeinVector v = theta_bullet(unipoly_from_json(nlohmann::json::parse(poly)), options(cap, jobs));
    return to_json(q1 ? specialize_q1(v) : v).dump();
  });
  m.def("resolve", [](const std::string& diagram, int k, int n, const std::string& ideal, std::size_t cap,
                      unsigned jobs, bool q1) {
    const Diagram d = diagram_arg(diagram, k, n);
    SkeinVector v;
    if (ideal == "none") v = resolve_all(d, options(cap, jobs));
    else if (ideal == "gammas") v = resolve_all_mod(d, IdealSpec::gammas(d.surface.point_count() / 2 - 1), options(cap, jobs));
    else if (ideal == "boundary") v = resolve_all_mod(d, IdealSpec::boundary(d.surface), options(cap, jobs));
    else throw std::invalid_argument("unknown ideal '" + ideal + "'");
    return to_json(q1 ? specialize_q1(v) : v).dump();
  });
  m.def("zkn_target", [](int k, int n) {
    const auto t = normal_form(build_zkn(k, n));
    SkeinVector v;
    if (t) v = SkeinVector(t->basis, t->coeff.shifted(-k * n));
    return to_json(v).dump();
  });

  m.def("minimality", [](const std::string& seq, bool is_json, int n, bool q1) {
    return maybe_q1(minimality_constraints(sequence_arg(seq, is_json), n), q1);
  });
  m.def("arc_constraints", [](const std::string& seq, bool is_json, int n, int k, bool verify, std::size_t cap,
                              unsigned jobs, bool q1) {
    return maybe_q1(q_constraints(sequence_arg(seq, is_json), n, k, verify, options(cap, jobs)), q1);
  });
  m.def("d1_constraints", [](const std::string& seq, bool is_json, bool q1) {
    return maybe_q1(d1_constraints(sequence_arg(seq, is_json)), q1);
  });
  m.def("audit", [](const std::string& seq, bool is_json, int max_n, bool q1) {
    return to_json(structure_constant_audit(sequence_arg(seq, is_json), max_n, q1)).dump();
  });
}
