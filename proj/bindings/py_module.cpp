#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cyclohodge/criteria.hpp"
#include "cyclohodge/galois_orbits.hpp"
#include "cyclohodge/hodge_data.hpp"
#include "cyclohodge/lemma_engine.hpp"
#include "cyclohodge/scans.hpp"
#include "cyclohodge/unit_group.hpp"
#include "cyclohodge/version.hpp"

namespace py = pybind11;
using namespace cyclohodge;

namespace {

py::object json_to_py(const json& j) {
    py::object loads = py::module_::import("json").attr("loads");
    return loads(j.dump());
}

py::dict dimension_set_dict(i64 n, i64 q) {
    UnitGroup g(q);
    DimensionSet d = dimension_set(n, g);
    py::dict out;
    out["n"] = d.n;
    out["q"] = d.q;
    out["genus"] = d.genus;
    out["new_dim"] = d.new_dim;
    out["e_dim"] = d.e_dim;
    out["half_deg"] = d.half_deg;
    out["unitary_dim"] = d.unitary_dim;
    out["ss_lower_bound"] = d.ss_lower_bound;
    return out;
}

py::dict conditions_dict(i64 n, i64 q) {
    UnitGroup g(q);
    ConditionReport rep = check_conditions(n, g);
    py::dict out;
    out["n"] = rep.n;
    out["q"] = rep.q;
    out["p"] = rep.p;
    out["holds_a"] = rep.holds_a;
    out["holds_b"] = rep.holds_b;
    out["holds_c"] = rep.holds_c;
    out["any_holds"] = rep.any_holds;
    out["witness"] = rep.witness ? py::cast(*rep.witness) : py::none();
    out["witness_exists"] = rep.witness_exists;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Unit-group arithmetic modulo prime powers, floor-multiplicity tables, and the\n"
              "even-function constancy decision with certificates.";
    m.attr("__version__") = kVersion;

    py::register_exception<NotPrimePower>(m, "NotPrimePowerError", PyExc_ValueError);
    py::register_exception<InvalidParams>(m, "InvalidParamsError", PyExc_ValueError);
    py::register_exception<BadPair>(m, "BadPairError", PyExc_ValueError);
    py::register_exception<PreconditionViolated>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<DomainTooLarge>(m, "DomainTooLargeError", PyExc_ValueError);
    py::register_exception<Overflow>(m, "OverflowErrorCH", PyExc_OverflowError);
    py::register_exception<InvariantViolation>(m, "InvariantViolationError", PyExc_RuntimeError);

    py::class_<HalfRange>(m, "HalfRange")
        .def_readonly("lo", &HalfRange::lo)
        .def_readonly("hi", &HalfRange::hi)
        .def_readonly("members", &HalfRange::members)
        .def("contains", &HalfRange::contains);

    py::class_<UnitGroup>(m, "UnitGroup")
        .def(py::init<i64>(), py::arg("q"))
        .def_property_readonly("q", &UnitGroup::q)
        .def_property_readonly("p", &UnitGroup::p)
        .def_property_readonly("r", &UnitGroup::r)
        .def_property_readonly("phi", &UnitGroup::phi)
        .def("is_unit", &UnitGroup::is_unit)
        .def("mul", &UnitGroup::mul)
        .def("inv", &UnitGroup::inv)
        .def("order", &UnitGroup::order)
        .def("conj", &UnitGroup::conj)
        .def("fold", &UnitGroup::fold)
        .def("units", &UnitGroup::units)
        .def("subgroup_pm", &UnitGroup::subgroup_pm)
        .def("b_max", &UnitGroup::b_max)
        .def("range_coprime", &UnitGroup::range_coprime)
        .def("half_range", &UnitGroup::half_range)
        .def("order_two_elements", &UnitGroup::order_two_elements);

    m.def("make_group", &make_group, py::arg("q"));
    m.def("is_prime_power", [](i64 q) { return is_prime_power(q); });
    m.def("prime_powers_upto", &prime_powers_upto);

    py::class_<HodgeProfile>(m, "HodgeProfile")
        .def(py::init([](i64 n, i64 q) { return HodgeProfile(n, UnitGroup(q)); }),
             py::arg("n"), py::arg("q"))
        .def_property_readonly("n", &HodgeProfile::n)
        .def_property_readonly("q", [](const HodgeProfile& p) { return p.group().q(); })
        .def("mult", &HodgeProfile::mult)
        .def("hquad", &HodgeProfile::hquad)
        .def("hquad_on_half_range", &HodgeProfile::hquad_on_half_range);

    m.def("multiplicity",
          [](i64 n, i64 q, i64 a) { return multiplicity(n, UnitGroup(q), a); });
    m.def("dimension_set", &dimension_set_dict, py::arg("n"), py::arg("q"));
    m.def("new_part_dim", &new_part_dim);
    m.def("is_h_constant", [](const HodgeProfile& profile) {
        ConstancyCheck c = is_h_constant(profile);
        return py::make_tuple(c.constant,
                              c.witness ? py::cast(*c.witness) : py::none());
    });
    m.def("h_difference_factored", &h_difference_factored);

    m.def("check_conditions", &conditions_dict, py::arg("n"), py::arg("q"));
    m.def("find_coprime_witness", [](i64 n, i64 q) -> py::object {
        auto w = find_coprime_witness(n, UnitGroup(q));
        return w ? py::cast(*w) : py::none();
    });

    py::class_<LemmaCertificate>(m, "LemmaCertificate")
        .def_readonly("q", &LemmaCertificate::q)
        .def_readonly("a", &LemmaCertificate::a)
        .def_readonly("b_max", &LemmaCertificate::b_max)
        .def_property_readonly("verdict",
                               [](const LemmaCertificate& c) { return to_string(c.verdict); })
        .def_property_readonly("step",
                               [](const LemmaCertificate& c) { return to_string(c.step_tag); })
        .def_property_readonly("constant_forced",
                               [](const LemmaCertificate& c) {
                                   return c.verdict == Verdict::constant_forced;
                               })
        .def_property_readonly("blocks",
                               [](const LemmaCertificate& c) { return c.trace.blocks(); })
        .def_property_readonly("counterexample",
                               [](const LemmaCertificate& c) -> py::object {
                                   return c.counterexample ? py::cast(*c.counterexample)
                                                           : py::none();
                               })
        .def("to_json", [](const LemmaCertificate& c) { return c.to_json().dump(2); })
        .def("to_dict", [](const LemmaCertificate& c) { return json_to_py(c.to_json()); });

    m.def(
        "decide_even_lemma",
        [](i64 q, i64 a, const std::string& direction) {
            MonotoneDirection dir = direction == "non_decreasing"
                                        ? MonotoneDirection::non_decreasing
                                        : MonotoneDirection::non_increasing;
            return decide_even_lemma(UnitGroup(q), a, dir);
        },
        py::arg("q"), py::arg("a"), py::arg("direction") = "non_increasing");
    m.def("classify_step", [](i64 q, i64 a) { return to_string(classify_step(UnitGroup(q), a)); });
    m.def("threshold_oracle", [](i64 q, i64 a) { return threshold_oracle(UnitGroup(q), a); });
    m.def("collapse_blocks",
          [](i64 q, i64 a) { return collapse_closure(UnitGroup(q), a).blocks(); });
    m.def("verify_certificate", [](const LemmaCertificate& cert) {
        CertificateAudit audit = verify_certificate(UnitGroup(cert.q), cert);
        return py::make_tuple(audit.ok, audit.detail);
    });
    m.def("is_theta_invariant",
          [](const HodgeProfile& profile, i64 a) { return is_theta_invariant(profile, a); });
    m.def("invariance_set",
          [](const HodgeProfile& profile) { return invariance_set(profile); });
    m.def("separation_witness", [](const HodgeProfile& profile, i64 a, i64 b) -> py::object {
        auto x = separation_witness(profile, a, b);
        return x ? py::cast(*x) : py::none();
    });

    m.def("conjugate", [](i64 q, i64 a) { return conjugate(UnitGroup(q), a); });
    m.def("pair_orbit", [](i64 q, i64 a, i64 b) { return pair_orbit(UnitGroup(q), a, b).members; });
    m.def("good_pairs", [](i64 q) { return good_pairs(UnitGroup(q)); });
    m.def("cm_type_count_log2",
          [](i64 q) { return cm_types(UnitGroup(q)).count_log2(); });
    m.def("cm_type_at", [](i64 q, std::uint64_t index) {
        return cm_types(UnitGroup(q)).type_at(index);
    });

    // Grid scans, returned as parsed JSON reports.
    m.def(
        "verify_lemma_exhaustive",
        [](i64 q_max, i64 oracle_q_max, int jobs) {
            LemmaScanOptions opts;
            opts.oracle_q_max = oracle_q_max;
            opts.jobs = jobs;
            return json_to_py(verify_lemma_exhaustive(q_max, opts).to_json());
        },
        py::arg("q_max"), py::arg("oracle_q_max") = -1, py::arg("jobs") = 1);
    m.def(
        "scan_condition_implication",
        [](i64 n_max, i64 q_max, int jobs) {
            ScanOptions opts;
            opts.jobs = jobs;
            return json_to_py(scan_condition_implication(n_max, q_max, opts).to_json());
        },
        py::arg("n_max"), py::arg("q_max"), py::arg("jobs") = 1);
    m.def("verify_separation", [](const HodgeProfile& profile) {
        return json_to_py(verify_separation(profile).to_json());
    });
    m.def("orbit_separation_cover", [](const HodgeProfile& profile) {
        return json_to_py(orbit_separation_cover(profile).to_json());
    });
}
