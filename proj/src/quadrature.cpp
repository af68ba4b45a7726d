#include "mrlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "mrlab/errors.hpp"

namespace mrlab {

namespace {

constexpr double kSlopeSlack = 1e-9;

void check_nodes(std::span<const double> nodes, std::span<const double> g) {
    if (nodes.size() != g.size()) throw InvalidSpec("node/value size mismatch");
    if (nodes.size() < 2) throw InvalidSpec("need at least two nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!(nodes[i] > 0.0)) throw InvalidSpec("non-positive quadrature node");
        if (i > 0 && !(nodes[i] > nodes[i - 1])) throw InvalidSpec("nodes not increasing");
    }
}

double segment(double s0, double g0, double s1, double g1) {
    return 0.5 * (std::log(s1) - std::log(s0)) * (s0 * g0 + s1 * g1);
}

}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::finite: return "finite";
        case Verdict::diverging: return "diverging";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

void QuadratureSpec::validate() const {
    if (!(t_min > 0.0) || !std::isfinite(t_min)) throw InvalidSpec("t_min must be positive");
    if (!(t_max > t_min) || !std::isfinite(t_max)) throw InvalidSpec("t_max must exceed t_min");
    if (n_nodes < 16) throw InvalidSpec("n_nodes must be at least 16");
    if (!(rel_tol > 0.0)) throw InvalidSpec("rel_tol must be positive");
    if (rule != "log-trapezoid") throw InvalidSpec("unknown quadrature rule: " + rule);
}

double QuadratureSpec::log_step() const {
    return (std::log(t_max) - std::log(t_min)) / (n_nodes - 1);
}

double QuadratureSpec::node(int i) const {
    if (i == n_nodes - 1) return t_max;
    return std::exp(std::log(t_min) + log_step() * i);
}

std::vector<double> QuadratureSpec::nodes() const {
    validate();
    std::vector<double> out(n_nodes);
    for (int i = 0; i < n_nodes; ++i) out[i] = node(i);
    return out;
}

double QuadratureSpec::nodes_per_decade() const {
    return std::log(10.0) / log_step();
}

QuadratureSpec QuadratureSpec::widened(int k) const {
    validate();
    QuadratureSpec out = *this;
    const double h = log_step();
    const int m = static_cast<int>(std::lround(k * std::numbers::ln2 / h));
    out.t_min = std::exp(std::log(t_min) - m * h);
    out.t_max = std::exp(std::log(t_max) + m * h);
    out.n_nodes = n_nodes + 2 * m;
    return out;
}

QuadratureSpec QuadratureSpec::with_range(double lo, double hi) const {
    QuadratureSpec out = *this;
    const double density = nodes_per_decade();
    out.t_min = lo;
    out.t_max = hi;
    out.n_nodes = std::max(16, static_cast<int>(std::ceil(std::log10(hi / lo) * density)) + 1);
    out.validate();
    return out;
}

QuadratureSpec QuadratureSpec::capped_density(double per_decade) const {
    validate();
    if (nodes_per_decade() <= per_decade) return *this;
    QuadratureSpec out = *this;
    out.n_nodes = std::max(16, static_cast<int>(std::ceil(std::log10(t_max / t_min) * per_decade)) + 1);
    return out;
}

LogGrid LogGrid::padded(const QuadratureSpec& q, double pad_decades) {
    q.validate();
    LogGrid g;
    g.log_t0 = std::log(q.t_min);
    g.h = q.log_step();
    const int pad = static_cast<int>(std::ceil(pad_decades * std::log(10.0) / g.h));
    g.j_lo = -pad;
    g.j_hi = q.n_nodes - 1 + pad;
    return g;
}

double LogGrid::node_at(int j) const { return std::exp(log_t0 + h * j); }

std::vector<double> LogGrid::nodes() const {
    std::vector<double> out(size());
    for (int j = j_lo; j <= j_hi; ++j) out[j - j_lo] = node_at(j);
    return out;
}

double power_slope(double s0, double g0, double s1, double g1) {
    return (std::log(g1) - std::log(g0)) / (std::log(s1) - std::log(s0));
}

TailClosure lower_power_tail(double s0, double g0, double s1, double g1) {
    if (g0 == 0.0) return {0.0, true};
    if (g1 == 0.0) return {0.0, true};
    const double p = power_slope(s0, g0, s1, g1);
    if (!(p > -1.0 + kSlopeSlack)) return {std::numeric_limits<double>::infinity(), false};
    return {g0 * s0 / (p + 1.0), true};
}

TailClosure upper_power_tail(double sa, double ga, double sb, double gb) {
    if (gb == 0.0) return {0.0, true};
    if (ga == 0.0) return {0.0, true};
    const double p = power_slope(sa, ga, sb, gb);
    if (!(p < -1.0 - kSlopeSlack)) return {std::numeric_limits<double>::infinity(), false};
    return {gb * sb / (-p - 1.0), true};
}

HalfLineIntegral integrate_half_line(std::span<const double> nodes, std::span<const double> g,
                                     bool close_lower, bool close_upper) {
    check_nodes(nodes, g);
    HalfLineIntegral r;
    const std::size_t n = nodes.size();
    for (std::size_t i = 0; i + 1 < n; ++i) r.interior += segment(nodes[i], g[i], nodes[i + 1], g[i + 1]);
    if (close_lower) {
        auto lo = lower_power_tail(nodes[0], g[0], nodes[1], g[1]);
        r.lower_tail = lo.value;
        r.finite = r.finite && lo.finite;
    }
    if (close_upper) {
        auto hi = upper_power_tail(nodes[n - 2], g[n - 2], nodes[n - 1], g[n - 1]);
        r.upper_tail = hi.value;
        r.finite = r.finite && hi.finite;
    }
    r.value = r.finite ? r.interior + r.lower_tail + r.upper_tail : std::numeric_limits<double>::infinity();
    return r;
}

std::vector<double> cumulative_from_zero(std::span<const double> nodes, std::span<const double> g,
                                         bool* lower_finite) {
    check_nodes(nodes, g);
    auto lo = lower_power_tail(nodes[0], g[0], nodes[1], g[1]);
    if (lower_finite) *lower_finite = lo.finite;
    std::vector<double> out(nodes.size());
    out[0] = lo.value;
    for (std::size_t i = 1; i < nodes.size(); ++i)
        out[i] = out[i - 1] + segment(nodes[i - 1], g[i - 1], nodes[i], g[i]);
    return out;
}

std::vector<double> cumulative_to_infinity(std::span<const double> nodes, std::span<const double> g,
                                           bool* upper_finite) {
    check_nodes(nodes, g);
    const std::size_t n = nodes.size();
    auto hi = upper_power_tail(nodes[n - 2], g[n - 2], nodes[n - 1], g[n - 1]);
    if (upper_finite) *upper_finite = hi.finite;
    std::vector<double> out(n);
    out[n - 1] = hi.value;
    for (std::size_t i = n - 1; i-- > 0;)
        out[i] = out[i + 1] + segment(nodes[i], g[i], nodes[i + 1], g[i + 1]);
    return out;
}

Verdict refinement_verdict(double e0, double e1, double e2, double rel_tol) {
    if (!std::isfinite(e0) || !std::isfinite(e1) || !std::isfinite(e2)) return Verdict::diverging;
    const bool moved1 = std::abs(e1 - e0) > rel_tol * std::abs(e0);
    const bool moved2 = std::abs(e2 - e1) > rel_tol * std::abs(e1);
    if (moved1 && moved2) return Verdict::diverging;
    if (!moved1 && !moved2) return Verdict::finite;
    return Verdict::inconclusive;
}

}  // namespace mrlab
