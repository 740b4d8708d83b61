#include "opcheck/json_io.hpp"

namespace opcheck {

using nlohmann::json;

json matrix_to_json(const ComplexMatrix& m) {
    json entries = json::array();
    for (const Complex& z : m.data()) entries.push_back({z.real(), z.imag()});
    return {{"dim", m.dim()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& j) {
    const int n = j.at("dim").get<int>();
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != n * n)
        throw KernelError(ErrorKind::InvalidArgument, "matrix JSON: entry count != dim^2");
    ComplexMatrix m(n);
    for (int k = 0; k < n * n; ++k) {
        const auto& e = entries[static_cast<size_t>(k)];
        m.data()[static_cast<size_t>(k)] = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
    return m;
}

json points_to_json(const std::vector<Complex>& pts) {
    json points = json::array();
    for (const Complex& z : pts) points.push_back({z.real(), z.imag()});
    return {{"points", std::move(points)}};
}

json witness_to_json(const Witness& w) {
    json inputs = json::object();
    for (const auto& [name, m] : w.inputs) inputs[name] = matrix_to_json(m);
    json margins = json::object();
    for (const auto& [name, v] : w.margins) margins[name] = v;
    return {{"seed", w.seed},
            {"dim", w.dim},
            {"inputs", std::move(inputs)},
            {"margins", std::move(margins)},
            {"message", w.message}};
}

json property_report_to_json(const PropertyReport& r) {
    json failures = json::array();
    for (const Witness& w : r.failures) failures.push_back(witness_to_json(w));
    json j = {{"property", property_name(r.property)},
              {"trials", r.trials},
              {"passes", r.passes},
              {"vacuous", r.vacuous},
              {"faults", r.faults},
              {"failures", std::move(failures)}};
    if (!r.min_margins.empty()) {
        json m = json::object();
        for (const auto& [k, v] : r.min_margins) m[k] = v;
        j["min_margins"] = std::move(m);
    }
    if (!r.max_margins.empty()) {
        json m = json::object();
        for (const auto& [k, v] : r.max_margins) m[k] = v;
        j["max_margins"] = std::move(m);
    }
    return j;
}

json counterexamples_to_json(const std::vector<CounterexampleResult>& results) {
    json arr = json::array();
    for (const auto& r : results) {
        json claims = json::array();
        for (const auto& c : r.claims)
            claims.push_back(
                {{"claim", c.description}, {"expected", c.expected}, {"actual", c.actual}});
        arr.push_back({{"name", r.name}, {"confirmed", r.confirmed}, {"claims", std::move(claims)}});
    }
    return arr;
}

json tolerances_to_json(const Tolerances& t) {
    return {{"tol_herm", t.tol_herm}, {"tol_psd", t.tol_psd},   {"tol_inv", t.tol_inv},
            {"tol_spec", t.tol_spec}, {"tol_eq", t.tol_eq},     {"guard", t.guard}};
}

}  // namespace opcheck
