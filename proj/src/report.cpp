#include "mrlab/report.hpp"

#include <cmath>
#include <fstream>

#include "mrlab/errors.hpp"

namespace mrlab {

Json number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return v;
}

Json to_json(const QuadratureSpec& q) {
    return Json{{"t_min", q.t_min}, {"t_max", q.t_max}, {"n_nodes", q.n_nodes}, {"rel_tol", q.rel_tol}, {"rule", q.rule}};
}

Json to_json(const Growth& g) {
    return Json{{"tag", g.tag_name()}, {"slope", number(g.slope)}, {"alpha", number(g.alpha)},
                {"level", number(g.level)}, {"residual", number(g.residual)}};
}

Json to_json(const ConditionReport& r) {
    return Json{{"name", r.name},
                {"constant", number(r.constant)},
                {"arg_sup", number(r.arg_sup)},
                {"t_min", r.truncation.t_min},
                {"t_max", r.truncation.t_max},
                {"n_nodes", r.truncation.n_nodes},
                {"verdict", to_string(r.verdict)},
                {"overflow", r.overflow},
                {"ess_sup_as_node_max", r.node_max_ess_sup}};
}

Json to_json(const SeminormReport& r) {
    return Json{{"value", number(r.value)},
                {"verdict", to_string(r.verdict)},
                {"phi_kind", r.phi_kind},
                {"theta_or_weight", r.theta_or_weight},
                {"quadrature", to_json(r.quadrature)}};
}

Json to_json(const BesovReport& r) {
    Json bands = Json::array();
    for (double b : r.band_norms) bands.push_back(number(b));
    return Json{{"s", r.spec.s},
                {"p", number(r.spec.p)},
                {"q", number(r.spec.q)},
                {"homogeneous", r.spec.homogeneous},
                {"value", number(r.value)},
                {"k_min", r.k_min},
                {"k_max", r.k_max},
                {"truncation_mass", number(r.truncation_mass)},
                {"verdict", to_string(r.verdict)},
                {"band_norms", bands}};
}

Json to_json(const ThermicReport& r) {
    return Json{{"value", number(r.value)}, {"verdict", to_string(r.verdict)}, {"quadrature", to_json(r.quadrature)}};
}

Json to_json(const MRReport& r) {
    Json certs = Json::array();
    for (const auto& [label, value] : r.certificates) certs.push_back(Json{{"certificate", label}, {"value", number(value)}});
    Json out{{"test", r.test},
             {"model", r.model},
             {"phi", r.phi},
             {"weight", r.weight},
             {"constant", number(r.constant)},
             {"constant_with_u", number(r.constant_with_u)},
             {"verdict", to_string(r.verdict)},
             {"vacuous", r.vacuous},
             {"growth", to_json(r.growth)}};
    if (r.components.present)
        out["components"] = Json{{"deriv_norm", number(r.components.deriv_norm)},
                                 {"Au_norm", number(r.components.Au_norm)},
                                 {"f_norm", number(r.components.f_norm)},
                                 {"u_norm", number(r.components.u_norm)}};
    out["certificates"] = certs;
    out["quadrature"] = to_json(r.quadrature);
    return out;
}

double Claim::rel_error() const {
    if (expected == 0.0) return std::abs(computed);
    return std::abs(computed - expected) / std::abs(expected);
}

bool Claim::pass() const { return std::isfinite(computed) && rel_error() <= tolerance; }

Json to_json(const Claim& c) {
    Json out{{"claim", c.name},
             {"expected", number(c.expected)},
             {"computed", number(c.computed)},
             {"rel_error", number(c.rel_error())},
             {"tolerance", c.tolerance},
             {"pass", c.pass()}};
    if (!c.note.empty()) out["note"] = c.note;
    return out;
}

void write_json(const std::string& path, const Json& body) {
    Json out{{"schema", kSchema}};
    for (auto it = body.begin(); it != body.end(); ++it)
        if (it.key() != "schema") out[it.key()] = it.value();
    std::ofstream os(path);
    if (!os) throw InvalidSpec("cannot write " + path);
    os << out.dump(2) << '\n';
}

void write_curve_csv(const std::string& path, const std::vector<double>& t, const std::vector<double>& values,
                     const std::string& header) {
    if (t.size() != values.size()) throw InvalidSpec("curve size mismatch");
    std::ofstream os(path);
    if (!os) throw InvalidSpec("cannot write " + path);
    os.precision(17);
    os << header << '\n';
    for (std::size_t i = 0; i < t.size(); ++i) os << t[i] << ',' << values[i] << '\n';
}

}  // namespace mrlab
