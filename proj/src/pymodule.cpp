/// @file pymodule.cpp
/// @brief Python bindings. Rationals cross the boundary as "num/den" strings
///        to preserve exactness; reports come back as plain dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qreduce/identities.hpp"
#include "qreduce/numeric.hpp"

namespace py = pybind11;
using namespace qreduce;

namespace {

ParamAssignment to_assignment(const std::string& b,
                              const std::map<std::string, std::string>& values, long p,
                              const std::vector<std::string>& d,
                              const std::vector<std::string>& g) {
    ParamAssignment a;
    a.b = parse_rational(b);
    a.p = p;
    for (const auto& [k, v] : values) a.values[k] = parse_rational(v);
    for (const auto& v : d) a.d.push_back(parse_rational(v));
    for (const auto& v : g) a.g.push_back(parse_rational(v));
    return a;
}

py::dict to_dict(const VerificationReport& r) {
    py::dict params;
    for (const auto& [k, v] : r.params) params[py::str(k)] = format_rational(v);
    py::dict out;
    out["identity"] = r.id;
    out["variant"] = r.variant;
    out["p"] = r.p;
    out["D"] = r.D;
    out["G"] = r.G;
    out["params"] = params;
    out["b"] = format_rational(r.b);
    out["order"] = r.order;
    out["status"] = r.status;
    out["mismatch_degree"] = r.has_coeffs ? py::object(py::int_(r.mismatch_degree))
                                          : py::object(py::none());
    out["lhs_coeff"] = r.has_coeffs ? py::object(py::str(format_rational(r.lhs_coeff)))
                                    : py::object(py::none());
    out["rhs_coeff"] = r.has_coeffs ? py::object(py::str(format_rational(r.rhs_coeff)))
                                    : py::object(py::none());
    out["reason"] = r.reason;
    out["elapsed_ms"] = r.elapsed_ms;
    return out;
}

Variant to_variant(const std::string& name) {
    if (name == "verbatim") return Variant::Verbatim;
    if (name == "corrected") return Variant::Corrected;
    throw std::invalid_argument("unknown variant: " + name);
}

}  // namespace

PYBIND11_MODULE(_qreduce, m) {
    m.doc() = "exact verifier for two-variable q-series reduction identities";

    m.def("identity_ids", [] { return identity_ids(); });
    m.def("recipe_ids", [] {
        const auto& ids = recipe_ids();
        return std::vector<std::string>(ids.begin(), ids.end());
    });
    m.def("validity_window", &validity_window, py::arg("id"));
    m.def(
        "default_variant",
        [](const std::string& id) { return std::string(variant_name(default_variant(id))); },
        py::arg("id"));
    m.def(
        "identity_symbols",
        [](const std::string& id) { return identity_info(id).symbols; }, py::arg("id"));
    m.def(
        "identity_note", [](const std::string& id) { return identity_info(id).note; },
        py::arg("id"));

    m.def(
        "verify",
        [](const std::string& id, const std::string& b,
           const std::map<std::string, std::string>& values, long p, long order,
           const std::string& variant, const std::vector<std::string>& d,
           const std::vector<std::string>& g) {
            const ParamAssignment a = to_assignment(b, values, p, d, g);
            return to_dict(verify(id, a, order, to_variant(variant)));
        },
        py::arg("id"), py::arg("b"), py::arg("values"), py::arg("p") = 0,
        py::arg("order") = 12, py::arg("variant") = "corrected",
        py::arg("d") = std::vector<std::string>{},
        py::arg("g") = std::vector<std::string>{});

    m.def(
        "sweep",
        [](const std::string& id, long order, long trials, unsigned long long seed) {
            py::list out;
            for (const auto& r : sweep(id, order, trials, seed)) out.append(to_dict(r));
            return out;
        },
        py::arg("id"), py::arg("order") = 12, py::arg("trials") = 3, py::arg("seed") = 0);

    m.def(
        "cross_check_with_bailey",
        [](const std::string& id, const std::string& b,
           const std::map<std::string, std::string>& values, long p, long order) {
            const ParamAssignment a = to_assignment(b, values, p, {}, {});
            return cross_check_with_bailey(id, a, order).status == CompareStatus::PASS;
        },
        py::arg("id"), py::arg("b"), py::arg("values"), py::arg("p") = 0,
        py::arg("order") = 8);

    m.def(
        "transform_check",
        [](const std::string& recipe_id, const std::string& b,
           const std::map<std::string, std::string>& values, long p, long support) {
            const int idx = recipe_index(recipe_id);
            if (idx == 0) throw std::invalid_argument("unknown recipe id: " + recipe_id);
            Assignment params;
            for (const auto& [k, v] : values) params[k] = parse_rational(v);
            RecipeInstance inst =
                make_recipe(idx, params, p, QBase(parse_rational(b)), support, {}, {});
            return transform_check(inst.config).status == CompareStatus::PASS;
        },
        py::arg("recipe_id"), py::arg("b"), py::arg("values"), py::arg("p") = 1,
        py::arg("support") = 6);

    m.def(
        "sample_assignment",
        [](const std::string& id) {
            const ParamAssignment a = sample_assignment(id);
            py::dict out;
            py::dict values;
            for (const auto& [k, v] : a.values) values[py::str(k)] = format_rational(v);
            out["b"] = format_rational(a.b);
            out["values"] = values;
            out["p"] = a.p;
            return out;
        },
        py::arg("id"));

    m.def("q_pochhammer", [](const std::string& a, const std::string& q, long n) {
        return format_rational(q_pochhammer(parse_rational(a), parse_rational(q), n));
    });
}
