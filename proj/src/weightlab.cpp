#include "mrlab/weightlab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mrlab/errors.hpp"

namespace mrlab {

namespace {

constexpr double kPadDecades = 4.0;
constexpr double kInf = std::numeric_limits<double>::infinity();

// P, Q and S of a non-negative function sampled on a padded log grid.
class HalfLineOperators {
public:
    HalfLineOperators(const LogGrid& grid, std::vector<double> w) : grid_(grid), s_(grid.nodes()), w_(std::move(w)) {
        const std::size_t m = s_.size();
        std::vector<double> w_over_s(m);
        for (std::size_t j = 0; j < m; ++j) w_over_s[j] = w_[j] / s_[j];
        cum_low_ = cumulative_from_zero(s_, w_, &low_finite_);
        cum_high_ = cumulative_to_infinity(s_, w_over_s, &high_finite_);
        weights_.resize(m);
        for (std::size_t j = 0; j < m; ++j) weights_[j] = grid_.h * s_[j] * w_[j];
        weights_.front() *= 0.5;
        weights_.back() *= 0.5;
    }

    int index_of(int spec_i) const { return grid_.offset_of_spec_node(spec_i); }
    double node(int j) const { return s_[j]; }

    double P(int j) const { return low_finite_ ? cum_low_[j] / s_[j] : kInf; }
    double Q(int j) const { return high_finite_ ? cum_high_[j] : kInf; }

    double S_at(double t) const {
        const std::size_t m = s_.size();
        const double lo = lower_series(t);
        const double hi = upper_series(t);
        if (!std::isfinite(lo) || !std::isfinite(hi)) return kInf;
        double acc = 0.0;
        for (std::size_t j = 0; j < m; ++j) acc += weights_[j] / (t + s_[j]);
        return acc + lo + hi;
    }

private:
    LogGrid grid_;
    std::vector<double> s_, w_, cum_low_, cum_high_, weights_;
    bool low_finite_ = true, high_finite_ = true;

    // int_0^{s0} c s^p/(t+s) ds for the boundary power law
    double lower_series(double t) const {
        const double s0 = s_[0], w0 = w_[0];
        if (w0 == 0.0 || w_[1] == 0.0) return 0.0;
        const double p = power_slope(s0, w0, s_[1], w_[1]);
        if (!(p > -1.0 + 1e-9)) return kInf;
        const double x = s0 / t;
        double term = 1.0, sum = 0.0;
        for (int k = 0; k < 400; ++k) {
            const double add = term / (p + k + 1.0);
            sum += add;
            if (std::abs(add) < 1e-18 * std::abs(sum)) break;
            term *= -x;
        }
        return w0 * s0 / t * sum;
    }

    // int_b^inf c s^p/(t+s) ds for the boundary power law
    double upper_series(double t) const {
        const std::size_t m = s_.size();
        const double b = s_[m - 1], wb = w_[m - 1];
        if (wb == 0.0 || w_[m - 2] == 0.0) return 0.0;
        const double p = power_slope(s_[m - 2], w_[m - 2], b, wb);
        if (!(p < -1e-9)) return kInf;
        const double x = t / b;
        double term = 1.0, sum = 0.0;
        for (int k = 0; k < 400; ++k) {
            const double add = term / (k - p);
            sum += add;
            if (std::abs(add) < 1e-18 * std::abs(sum)) break;
            term *= -x;
        }
        return wb * sum;
    }
};

enum class Condition { P_L1, Q_L1, P_Linf, Q_Linf, PQ_L1, PQ_Linf };

const char* condition_name(Condition c) {
    switch (c) {
        case Condition::P_L1: return "P_L1";
        case Condition::Q_L1: return "Q_L1";
        case Condition::P_Linf: return "P_Linf";
        case Condition::Q_Linf: return "Q_Linf";
        case Condition::PQ_L1: return "P+Q_L1";
        case Condition::PQ_Linf: return "P+Q_Linf";
    }
    return "";
}

struct Estimate {
    double value = 0.0;
    double arg = 0.0;
    bool overflow = false;
};

std::vector<double> sample_on(const FunctionOnHalfLine& w, const std::vector<double>& s, bool invert, bool* overflow) {
    std::vector<double> out(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
        double v = w(s[j]);
        if (v == 0.0 && !invert) {
            out[j] = 0.0;
            continue;
        }
        if (!(v > 0.0) || !std::isfinite(v)) {
            *overflow = true;
            v = std::isfinite(v) ? std::numeric_limits<double>::min() : std::numeric_limits<double>::max();
        }
        out[j] = invert ? 1.0 / v : v;
    }
    return out;
}

Estimate estimate(const FunctionOnHalfLine& w, const QuadratureSpec& q, Condition c) {
    const LogGrid grid = LogGrid::padded(q, kPadDecades);
    const std::vector<double> s = grid.nodes();
    const bool invert = c == Condition::P_Linf || c == Condition::Q_Linf || c == Condition::PQ_Linf;
    Estimate e;
    HalfLineOperators ops(grid, sample_on(w, s, invert, &e.overflow));
    e.value = -1.0;
    for (int i = 0; i < q.n_nodes; ++i) {
        const int j = ops.index_of(i);
        const double t = s[j];
        const double wt = w(t);
        double r = 0.0;
        switch (c) {
            case Condition::P_L1: r = ops.Q(j) / wt; break;
            case Condition::Q_L1: r = ops.P(j) / wt; break;
            case Condition::P_Linf: r = wt * ops.P(j); break;
            case Condition::Q_Linf: r = wt * ops.Q(j); break;
            case Condition::PQ_L1: r = ops.S_at(t) / wt; break;
            case Condition::PQ_Linf: r = wt * ops.S_at(t); break;
        }
        if (std::isnan(r)) {
            e.overflow = true;
            r = kInf;
        }
        if (r > e.value) {
            e.value = r;
            e.arg = t;
        }
        if (!std::isfinite(r)) break;
    }
    return e;
}

ConditionReport certify(const FunctionOnHalfLine& w, const QuadratureSpec& q, Condition c) {
    q.validate();
    ConditionReport rep;
    rep.name = condition_name(c);
    rep.truncation = q;
    const Estimate e0 = estimate(w, q, c);
    rep.constant = e0.value;
    rep.arg_sup = std::clamp(e0.arg, q.t_min, q.t_max);
    rep.overflow = e0.overflow;
    if (!std::isfinite(e0.value) || e0.overflow) {
        rep.verdict = Verdict::diverging;
        rep.constant = kInf;
        return rep;
    }
    const Estimate e1 = estimate(w, q.widened(1), c);
    const Estimate e2 = estimate(w, q.widened(2), c);
    rep.verdict = refinement_verdict(e0.value, e1.value, e2.value, q.rel_tol);
    return rep;
}

FunctionOnHalfLine apply_transform(const FunctionOnHalfLine& f, const QuadratureSpec& q, bool hardy) {
    q.validate();
    const LogGrid grid = LogGrid::padded(q, kPadDecades);
    const std::vector<double> s = grid.nodes();
    std::vector<double> fs(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) {
        fs[j] = f(s[j]);
        if (!(fs[j] >= 0.0) || !std::isfinite(fs[j])) throw DomainError("function must be non-negative and finite");
    }
    HalfLineOperators ops(grid, std::move(fs));
    std::vector<double> nodes(q.n_nodes), vals(q.n_nodes);
    for (int i = 0; i < q.n_nodes; ++i) {
        const int j = ops.index_of(i);
        nodes[i] = s[j];
        vals[i] = hardy ? ops.P(j) : ops.Q(j);
        if (!std::isfinite(vals[i])) throw DomainError(hardy ? "integral diverges at 0" : "integral diverges at infinity");
    }
    return FunctionOnHalfLine::sampled(std::move(nodes), std::move(vals));
}

std::vector<double> domain_nodes(const FunctionOnHalfLine& phi, const QuadratureSpec& q) {
    return phi.is_sampled() ? phi.nodes() : q.nodes();
}

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

// sup over nodes of (1/phi) int_0^t phi/s  (lower) or (t/phi) int_t^inf phi/s^2  (upper)
Estimate index_estimate(const FunctionOnHalfLine& phi, const QuadratureSpec& q, bool lower) {
    const LogGrid grid = LogGrid::padded(q, kPadDecades);
    const std::vector<double> s = grid.nodes();
    std::vector<double> g(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) g[j] = phi(s[j]) / (lower ? s[j] : s[j] * s[j]);
    bool fin = true;
    const std::vector<double> cum = lower ? cumulative_from_zero(s, g, &fin) : cumulative_to_infinity(s, g, &fin);
    Estimate e;
    if (!fin) {
        e.value = kInf;
        e.arg = lower ? q.t_min : q.t_max;
        return e;
    }
    e.value = -1.0;
    for (int i = 0; i < q.n_nodes; ++i) {
        const int j = grid.offset_of_spec_node(i);
        const double r = lower ? cum[j] / phi(s[j]) : s[j] * cum[j] / phi(s[j]);
        if (r > e.value) {
            e.value = r;
            e.arg = s[j];
        }
    }
    return e;
}

IndexCheck index_check(const FunctionOnHalfLine& phi, const QuadratureSpec& q, bool lower) {
    q.validate();
    if (!quasiconcave_check(phi, q)) throw DomainError("function is not quasi-concave");
    IndexCheck out;
    const Estimate e0 = index_estimate(phi, q, lower);
    out.sup_value = e0.value;
    out.arg_sup = std::clamp(e0.arg, q.t_min, q.t_max);
    if (!std::isfinite(e0.value)) {
        out.verdict = Verdict::diverging;
    } else {
        const Estimate e1 = index_estimate(phi, q.widened(1), lower);
        const Estimate e2 = index_estimate(phi, q.widened(2), lower);
        out.verdict = refinement_verdict(e0.value, e1.value, e2.value, q.rel_tol);
    }
    const DilationIndices di = dilation_indices(phi, q);
    constexpr double kIndexTol = 1e-2;
    out.index = lower ? di.alpha : di.beta;
    out.index_condition = lower ? di.alpha > kIndexTol : di.beta < 1.0 - kIndexTol;
    out.consistent = (out.verdict == Verdict::finite) == out.index_condition;
    return out;
}

}  // namespace

bool ConditionReport::infinite() const { return !std::isfinite(constant); }

FunctionOnHalfLine hardy_apply(const FunctionOnHalfLine& f, const QuadratureSpec& q) {
    return apply_transform(f, q, true);
}

FunctionOnHalfLine adjoint_apply(const FunctionOnHalfLine& f, const QuadratureSpec& q) {
    return apply_transform(f, q, false);
}

ConditionReport bound_P_L1(const FunctionOnHalfLine& w, const QuadratureSpec& q) { return certify(w, q, Condition::P_L1); }
ConditionReport bound_Q_L1(const FunctionOnHalfLine& w, const QuadratureSpec& q) { return certify(w, q, Condition::Q_L1); }
ConditionReport bound_P_Linf(const FunctionOnHalfLine& w, const QuadratureSpec& q) { return certify(w, q, Condition::P_Linf); }
ConditionReport bound_Q_Linf(const FunctionOnHalfLine& w, const QuadratureSpec& q) { return certify(w, q, Condition::Q_Linf); }
ConditionReport calderon_bound_L1(const FunctionOnHalfLine& w, const QuadratureSpec& q) { return certify(w, q, Condition::PQ_L1); }
ConditionReport calderon_bound_Linf(const FunctionOnHalfLine& w, const QuadratureSpec& q) { return certify(w, q, Condition::PQ_Linf); }

double stieltjes(const FunctionOnHalfLine& w, double t, const QuadratureSpec& q) {
    q.validate();
    if (!(t >= q.t_min && t <= q.t_max)) throw DomainError("t outside quadrature range");
    const LogGrid grid = LogGrid::padded(q, kPadDecades);
    const std::vector<double> s = grid.nodes();
    bool overflow = false;
    HalfLineOperators ops(grid, sample_on(w, s, false, &overflow));
    if (overflow) throw NumericError("weight not positive and finite on the grid");
    return ops.S_at(t);
}

Sandwich stieltjes_sandwich(const FunctionOnHalfLine& w, const QuadratureSpec& q) {
    q.validate();
    const LogGrid grid = LogGrid::padded(q, kPadDecades);
    const std::vector<double> s = grid.nodes();
    bool overflow = false;
    HalfLineOperators ops(grid, sample_on(w, s, false, &overflow));
    if (overflow) throw NumericError("weight not positive and finite on the grid");
    Sandwich out;
    out.nodes.resize(q.n_nodes);
    out.S.resize(q.n_nodes);
    out.PQ.resize(q.n_nodes);
    for (int i = 0; i < q.n_nodes; ++i) {
        const int j = ops.index_of(i);
        out.nodes[i] = s[j];
        out.S[i] = ops.S_at(s[j]);
        out.PQ[i] = ops.P(j) + ops.Q(j);
    }
    return out;
}

bool quasiconcave_check(const FunctionOnHalfLine& phi, const QuadratureSpec& q) {
    const std::vector<double> t = domain_nodes(phi, q);
    constexpr double slack = 1e-12;
    double prev = phi(t[0]);
    if (!(prev > 0.0) || !std::isfinite(prev)) return false;
    for (std::size_t i = 1; i < t.size(); ++i) {
        const double cur = phi(t[i]);
        if (!(cur > 0.0) || !std::isfinite(cur)) return false;
        if (cur < prev * (1.0 - slack)) return false;
        if (cur / t[i] > prev / t[i - 1] * (1.0 + slack)) return false;
        prev = cur;
    }
    return true;
}

DilationIndices dilation_indices(const FunctionOnHalfLine& phi, const QuadratureSpec& q) {
    q.validate();
    if (!quasiconcave_check(phi, q)) throw DomainError("function is not quasi-concave");
    const int n = q.n_nodes;
    const double h = q.log_step();
    std::vector<double> lphi(n);
    for (int j = 0; j < n; ++j) lphi[j] = phi.log_value(std::exp(std::log(q.t_min) + h * j));
    const int K = (n - 1) / 2;
    DilationIndices out;
    out.t.resize(2 * K + 1);
    out.s_phi.resize(2 * K + 1);
    for (int k = -K; k <= K; ++k) {
        double best = -kInf;
        const int j0 = std::max(0, -k), j1 = std::min(n - 1, n - 1 - k);
        for (int j = j0; j <= j1; ++j) best = std::max(best, lphi[j + k] - lphi[j]);
        out.t[k + K] = std::exp(h * k);
        out.s_phi[k + K] = std::exp(best);
    }
    const int decade = std::max(2, static_cast<int>(std::lround(std::log(10.0) / h)));
    std::vector<double> x, y;
    for (int i = 0; i <= decade; ++i) {
        x.push_back(std::log(out.t[i]));
        y.push_back(std::log(out.s_phi[i]));
    }
    out.alpha = std::clamp(ls_slope(x, y), 0.0, 1.0);
    x.clear();
    y.clear();
    for (int i = 2 * K - decade; i <= 2 * K; ++i) {
        x.push_back(std::log(out.t[i]));
        y.push_back(std::log(out.s_phi[i]));
    }
    out.beta = std::clamp(ls_slope(x, y), out.alpha, 1.0);
    return out;
}

IndexCheck integral_index_check(const FunctionOnHalfLine& phi, const QuadratureSpec& q) {
    return index_check(phi, q, true);
}

IndexCheck integral_index_check_upper(const FunctionOnHalfLine& phi, const QuadratureSpec& q) {
    return index_check(phi, q, false);
}

FunctionOnHalfLine least_concave_majorant(const FunctionOnHalfLine& phi) {
    if (!phi.is_sampled()) throw InvalidSpec("closed-form input needs a quadrature spec");
    return least_concave_majorant(phi, QuadratureSpec{});
}

FunctionOnHalfLine least_concave_majorant(const FunctionOnHalfLine& phi, const QuadratureSpec& q) {
    const std::vector<double> t = domain_nodes(phi, q);
    if (t.size() < 3) throw InvalidSpec("concave majorant needs at least three nodes");
    if (!quasiconcave_check(phi, q)) throw DomainError("function is not quasi-concave");
    const std::vector<double> y = phi.sample(t);
    // upper hull, monotone chain
    std::vector<std::size_t> hull;
    for (std::size_t i = 0; i < t.size(); ++i) {
        while (hull.size() >= 2) {
            const std::size_t a = hull[hull.size() - 2], b = hull.back();
            const long double cross = static_cast<long double>(t[b] - t[a]) * (y[i] - y[a]) -
                                      static_cast<long double>(y[b] - y[a]) * (t[i] - t[a]);
            if (cross >= 0.0L) hull.pop_back();
            else break;
        }
        hull.push_back(i);
    }
    std::vector<double> out(t.size());
    std::size_t seg = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        while (seg + 1 < hull.size() && hull[seg + 1] < i) ++seg;
        const std::size_t a = hull[seg];
        if (a == i || seg + 1 >= hull.size()) {
            out[i] = y[i];
            continue;
        }
        const std::size_t b = hull[seg + 1];
        const double lam = (t[i] - t[a]) / (t[b] - t[a]);
        out[i] = std::max(y[i], (1.0 - lam) * y[a] + lam * y[b]);
    }
    return FunctionOnHalfLine::sampled(t, std::move(out));
}

FunctionOnHalfLine linf_phi_representation(const FunctionOnHalfLine& w, const QuadratureSpec& q) {
    q.validate();
    const LogGrid grid = LogGrid::padded(q, kPadDecades);
    const std::vector<double> s = grid.nodes();
    const std::size_t m = s.size();
    std::vector<double> ws(m);
    for (std::size_t j = 0; j < m; ++j) {
        ws[j] = w(s[j]);
        if (!(ws[j] > 0.0) || !std::isfinite(ws[j])) throw DomainError("weight not positive and finite");
    }
    constexpr double slack = 1e-6;
    const double p0 = power_slope(s[0], ws[0], s[1], ws[1]);
    const double p1 = power_slope(s[m - 2], ws[m - 2], s[m - 1], ws[m - 1]);
    if (p0 < -slack || p1 > 1.0 + slack) throw DomainError("min(1,1/t) is not in L^inf_w: parameter space is trivial");
    std::vector<double> suffix(m), prefix(m);
    suffix[m - 1] = s[m - 1] / ws[m - 1];
    for (std::size_t j = m - 1; j-- > 0;) suffix[j] = std::min(suffix[j + 1], s[j] / ws[j]);
    prefix[0] = 1.0 / ws[0];
    for (std::size_t j = 1; j < m; ++j) prefix[j] = std::min(prefix[j - 1], 1.0 / ws[j]);
    std::vector<double> nodes(q.n_nodes), vals(q.n_nodes);
    for (int i = 0; i < q.n_nodes; ++i) {
        const int j = grid.offset_of_spec_node(i);
        nodes[i] = s[j];
        vals[i] = std::min(suffix[j], s[j] * prefix[j]);
    }
    return FunctionOnHalfLine::sampled(std::move(nodes), std::move(vals));
}

FunctionOnHalfLine fundamental_weight(const FunctionOnHalfLine& w, const QuadratureSpec& q) {
    const ConditionReport c = calderon_bound_L1(w, q);
    if (c.verdict != Verdict::finite) throw DomainError("Calderon constant of the weight is not finite");
    const Sandwich sw = stieltjes_sandwich(w, q);
    return FunctionOnHalfLine::sampled(sw.nodes, sw.PQ);
}

bool ratio_monotone_check(const FunctionOnHalfLine& v, double t, const QuadratureSpec& q) {
    if (!(t > 0.0)) throw DomainError("t must be positive");
    const std::vector<double> s = q.nodes();
    double prev = -kInf;
    for (double si : s) {
        const double r = v.log_value(t + si) - v.log_value(si);
        if (r < prev - 1e-10 * (1.0 + std::abs(prev))) return false;
        prev = std::max(prev, r);
    }
    return true;
}

bool log_convexity_check(const FunctionOnHalfLine& v, const QuadratureSpec& q) {
    const std::vector<double> s = q.nodes();
    for (std::size_t i = 0; i + 2 < s.size(); ++i) {
        const double a = s[i], b = s[i + 2];
        const double la = v.log_value(a), lb = v.log_value(b), lm = v.log_value(0.5 * (a + b));
        if (lm > 0.5 * (la + lb) + 1e-10 * (1.0 + std::abs(la) + std::abs(lb))) return false;
    }
    return true;
}

bool non_increasing_check(const FunctionOnHalfLine& v, const QuadratureSpec& q) {
    const std::vector<double> s = q.nodes();
    double prev = v.log_value(s[0]);
    for (std::size_t i = 1; i < s.size(); ++i) {
        const double cur = v.log_value(s[i]);
        if (cur > prev + 1e-12 * (1.0 + std::abs(prev))) return false;
        prev = cur;
    }
    return true;
}

TailRatio tail_ratio(const FunctionOnHalfLine& v, double t, const QuadratureSpec& q) {
    q.validate();
    if (!(t > 0.0)) throw DomainError("t must be positive");
    auto at = [&](double s) { return std::exp(v.log_value(t + s) - v.log_value(s)); };
    TailRatio out;
    out.value = at(q.t_max);
    out.stable = refinement_verdict(out.value, at(2.0 * q.t_max), at(4.0 * q.t_max), q.rel_tol) == Verdict::finite;
    return out;
}

}  // namespace mrlab
