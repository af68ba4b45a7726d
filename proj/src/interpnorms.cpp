#include "mrlab/interpnorms.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "mrlab/errors.hpp"

namespace mrlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> concave_majorant_through_origin(const std::vector<double>& t, const std::vector<double>& y) {
    std::vector<double> xs(t.size() + 1), ys(y.size() + 1);
    xs[0] = 0.0;
    ys[0] = 0.0;
    std::copy(t.begin(), t.end(), xs.begin() + 1);
    std::copy(y.begin(), y.end(), ys.begin() + 1);
    std::vector<std::size_t> hull;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        while (hull.size() >= 2) {
            const std::size_t a = hull[hull.size() - 2], b = hull.back();
            const long double cross = static_cast<long double>(xs[b] - xs[a]) * (ys[i] - ys[a]) -
                                      static_cast<long double>(ys[b] - ys[a]) * (xs[i] - xs[a]);
            if (cross >= 0.0L) hull.pop_back();
            else break;
        }
        hull.push_back(i);
    }
    std::vector<double> out(t.size());
    std::size_t seg = 0;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        while (seg + 1 < hull.size() && hull[seg + 1] < i) ++seg;
        const std::size_t a = hull[seg];
        double v = ys[i];
        if (a != i && seg + 1 < hull.size()) {
            const std::size_t b = hull[seg + 1];
            const double lam = (xs[i] - xs[a]) / (xs[b] - xs[a]);
            v = std::max(v, (1.0 - lam) * ys[a] + lam * ys[b]);
        }
        out[i - 1] = v;
    }
    for (std::size_t i = 1; i < out.size(); ++i) out[i] = std::max(out[i], out[i - 1]);
    return out;
}

SecondDifference second_difference(const GridField& f, int m, double p) {
    const int N = f.samples();
    SecondDifference best;
    best.shift_cells = m;
    best.h_used = m * f.space_step();
    const int axes = f.dim();
    for (int axis = 0; axis < axes; ++axis) {
        GridField d(f.dim(), f.half_width(), N);
        if (f.dim() == 1) {
            for (int j = 0; j < N; ++j)
                d[j] = f[j] - 2.0 * f[((j - m) % N + N) % N] + f[((j - 2 * m) % N + N) % N];
        } else {
            for (int iy = 0; iy < N; ++iy)
                for (int ix = 0; ix < N; ++ix) {
                    auto at = [&](int sx, int sy) {
                        const int x = ((ix - sx) % N + N) % N, y = ((iy - sy) % N + N) % N;
                        return f[static_cast<std::size_t>(y) * N + x];
                    };
                    const int sx = axis == 0 ? m : 0, sy = axis == 1 ? m : 0;
                    d[static_cast<std::size_t>(iy) * N + ix] = at(0, 0) - 2.0 * at(sx, sy) + at(2 * sx, 2 * sy);
                }
        }
        best.value = std::max(best.value, d.lp_norm(p));
    }
    return best;
}

int shift_cells_for(const GridField& f, double h) {
    if (!(std::abs(h) < f.half_width() / 4.0)) throw DomainError("shift must satisfy |h| < L/4");
    const int m = static_cast<int>(std::lround(std::abs(h) / f.space_step()));
    if (m < 1) throw ResolutionError("shift below one grid cell");
    return m;
}

}  // namespace

LebesgueParameter LebesgueParameter::L1(FunctionOnHalfLine w) {
    LebesgueParameter p;
    p.kind = Kind::L1_weighted;
    p.w = std::move(w);
    return p;
}

LebesgueParameter LebesgueParameter::Linf(FunctionOnHalfLine w) {
    LebesgueParameter p;
    p.kind = Kind::Linf_weighted;
    p.w = std::move(w);
    return p;
}

LebesgueParameter LebesgueParameter::power_L1(double theta) {
    LebesgueParameter p = L1(FunctionOnHalfLine::power(-theta));
    p.theta = theta;
    return p;
}

LebesgueParameter LebesgueParameter::power_Linf(double theta) {
    LebesgueParameter p = Linf(FunctionOnHalfLine::power(1.0 - theta));
    p.theta = theta;
    return p;
}

LebesgueParameter LebesgueParameter::power(double theta, double q) {
    if (q == 1.0) return power_L1(theta);
    if (std::isinf(q)) return power_Linf(theta);
    throw InvalidSpec("only q = 1 and q = inf parameters are supported");
}

std::string LebesgueParameter::kind_name() const {
    return kind == Kind::L1_weighted ? "L1_weighted" : "Linf_weighted";
}

std::string LebesgueParameter::weight_description() const {
    if (!std::isnan(theta)) {
        std::ostringstream os;
        os.precision(17);
        os << "theta=" << theta;
        return os.str();
    }
    return w.tag();
}

void LebesgueParameter::require_nontrivial(const QuadratureSpec& q) const {
    const LogGrid grid = LogGrid::padded(q, 4.0);
    const std::vector<double> t = grid.nodes();
    std::vector<double> g(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) g[i] = std::min(1.0, 1.0 / t[i]);
    if (phi_norm(t, g, *this).verdict != Verdict::finite)
        throw DomainError("min(1, 1/t) is not in the parameter space: K_Phi is trivial");
}

PhiNorm phi_norm(const std::vector<double>& nodes, const std::vector<double>& g, const LebesgueParameter& phi) {
    if (nodes.size() != g.size() || nodes.size() < 2) throw InvalidSpec("bad samples for parameter norm");
    std::vector<double> r(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) r[i] = phi.w(nodes[i]) * g[i];
    PhiNorm out;
    if (phi.kind == LebesgueParameter::Kind::L1_weighted) {
        const HalfLineIntegral I = integrate_half_line(nodes, r);
        out.value = I.value;
        out.verdict = I.finite ? Verdict::finite : Verdict::diverging;
        return out;
    }
    const auto it = std::max_element(r.begin(), r.end());
    out.value = *it;
    out.verdict = Verdict::finite;
    if (out.value == 0.0) return out;
    const std::size_t k = static_cast<std::size_t>(it - r.begin());
    const std::size_t n = r.size();
    if (k == 0 && r[1] > 0.0 && power_slope(nodes[0], r[0], nodes[1], r[1]) < -1e-3) out.verdict = Verdict::diverging;
    if (k == n - 1 && r[n - 2] > 0.0 && power_slope(nodes[n - 2], r[n - 2], nodes[n - 1], r[n - 1]) > 1e-3)
        out.verdict = Verdict::diverging;
    return out;
}

KCurve KCurve::make(std::vector<double> nodes, std::vector<double> raw, Source source) {
    if (nodes.size() != raw.size() || nodes.size() < 2) throw InvalidSpec("bad K-curve samples");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!(nodes[i] > 0.0) || (i > 0 && !(nodes[i] > nodes[i - 1]))) throw InvalidSpec("K-curve nodes must increase");
        if (!(raw[i] >= 0.0) || !std::isfinite(raw[i])) throw NumericError("K-curve sample not finite");
    }
    KCurve c;
    c.values = concave_majorant_through_origin(nodes, raw);
    c.nodes = std::move(nodes);
    c.raw = std::move(raw);
    c.source = source;
    return c;
}

bool KCurve::admissible(const std::vector<double>& nodes, const std::vector<double>& values, double slack) {
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        const double scale = std::max(std::abs(values[i - 1]), std::numeric_limits<double>::min());
        if (values[i] < values[i - 1] - slack * scale) return false;
        if (values[i] / nodes[i] > values[i - 1] / nodes[i - 1] * (1.0 + slack)) return false;
    }
    return true;
}

std::string KCurve::source_name() const {
    switch (source) {
        case Source::scalar_exact: return "scalar_exact";
        case Source::thermic: return "thermic";
        case Source::modulus: return "modulus";
        case Source::smoothness2: return "smoothness2";
    }
    return "";
}

void KCurve::write_csv(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw InvalidSpec("cannot write " + path);
    os.precision(17);
    os << "t,K\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) os << nodes[i] << ',' << values[i] << '\n';
}

double k_scalar(double t_couple, double h, double r) {
    if (!(t_couple > 0.0) || !(h > 0.0)) throw DomainError("couple parameters must be positive");
    return std::min(t_couple, h) * std::abs(r);
}

KCurve k_scalar_curve(double h, double r, const QuadratureSpec& q) {
    std::vector<double> t = q.nodes();
    std::vector<double> v(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) v[i] = k_scalar(t[i], h, r);
    return KCurve::make(std::move(t), std::move(v), KCurve::Source::scalar_exact);
}

template <SpectralModel M>
KCurve k_thermic_curve(const M& m, const typename M::Element& x, const QuadratureSpec& q, std::vector<double>* lower) {
    const QuadratureSpec ts = model_time_spec(m, q);
    std::vector<double> t = ts.nodes();
    const std::vector<cplx> c = m.to_spectral(x);
    const double k = m.time_scale();
    const std::vector<double> a = norm_profile(m, c, t, [k](double s) { return at_symbol(k, s); });
    const std::vector<double> b = norm_profile(m, c, t, [k](double s) { return semigroup_symbol(k, s); });
    const std::vector<double> d = norm_profile(m, c, t, [k](double s) -> Symbol {
        return [k, s](double lam) { return std::expm1(-k * s * lam); };
    });
    const double xn = m.norm(x);
    const double cst = 1.0 / std::max(1.0, m.analytic_bound());
    std::vector<double> up(t.size());
    if (lower) lower->resize(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        up[i] = d[i] + t[i] * a[i] + t[i] * b[i];
        if (lower) (*lower)[i] = std::max(cst * t[i] * a[i], std::min(1.0, t[i]) * xn);
    }
    return KCurve::make(std::move(t), std::move(up), KCurve::Source::thermic);
}

template <SpectralModel M>
KBracket k_thermic(const M& m, const typename M::Element& x, double t, const QuadratureSpec& q) {
    if (!(t > 0.0)) throw DomainError("t must be positive");
    const QuadratureSpec base = model_time_spec(m, q);
    const QuadratureSpec ts = base.with_range(std::min(base.t_min, t * 1e-3), t);
    std::vector<double> lower;
    const KCurve c = k_thermic_curve(m, x, ts, &lower);
    return {lower.back(), c.raw.back()};
}

template <SpectralModel M>
KCurve k_modulus_curve(const M& m, const typename M::Element& x, const QuadratureSpec& q) {
    const QuadratureSpec ts = model_time_spec(m, q);
    std::vector<double> t = ts.nodes();
    const std::vector<cplx> c = m.to_spectral(x);
    const double k = m.time_scale();
    std::vector<double> w = norm_profile(m, c, t, [k](double s) -> Symbol {
        return [k, s](double lam) { return std::expm1(-k * s * lam); };
    });
    for (std::size_t i = 1; i < w.size(); ++i) w[i] = std::max(w[i], w[i - 1]);
    return KCurve::make(std::move(t), std::move(w), KCurve::Source::modulus);
}

template <SpectralModel M>
double k_modulus(const M& m, const typename M::Element& x, double t, const QuadratureSpec& q) {
    if (!(t > 0.0)) throw DomainError("t must be positive");
    const QuadratureSpec base = model_time_spec(m, q);
    const QuadratureSpec ts = base.with_range(std::min(base.t_min, t * 1e-3), t);
    return k_modulus_curve(m, x, ts).raw.back();
}

SecondDifference modulus_smoothness2(const GridField& f, double h, double p) {
    return second_difference(f, shift_cells_for(f, h), p);
}

SecondDifference modulus_smoothness2_sup(const GridField& f, double r, double p) {
    const int M = shift_cells_for(f, r);
    SecondDifference best;
    for (int m = 1; m <= M; ++m) {
        const SecondDifference d = second_difference(f, m, p);
        if (d.value >= best.value) best = d;
    }
    return best;
}

KCurve smoothness2_curve(const GridField& f, double p, const std::vector<double>& nodes) {
    if (nodes.empty()) throw InvalidSpec("empty node set");
    const int M = shift_cells_for(f, std::sqrt(nodes.back()));
    std::vector<double> d(M + 1, 0.0);
    for (int m = 1; m <= M; ++m) d[m] = std::max(d[m - 1], second_difference(f, m, p).value);
    std::vector<double> raw(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) raw[i] = d[shift_cells_for(f, std::sqrt(nodes[i]))];
    return KCurve::make(nodes, std::move(raw), KCurve::Source::smoothness2);
}

double kphi_norm(const KCurve& curve, const LebesgueParameter& phi, const QuadratureSpec& q) {
    phi.require_nontrivial(q);
    std::vector<double> g(curve.nodes.size());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = curve.values[i] / curve.nodes[i];
    const PhiNorm n = phi_norm(curve.nodes, g, phi);
    return n.verdict == Verdict::diverging ? kInf : n.value;
}

template <SpectralModel M>
SeminormReport homogeneous_seminorm(const M& m, const typename M::Element& x, const LebesgueParameter& phi,
                                    const QuadratureSpec& q) {
    SeminormReport rep;
    rep.quadrature = model_time_spec(m, q);
    const std::vector<double> t = rep.quadrature.nodes();
    const double k = m.time_scale();
    const std::vector<double> a = norm_profile(m, m.to_spectral(x), t, [k](double s) { return at_symbol(k, s); });
    const PhiNorm n = phi_norm(t, a, phi);
    rep.value = n.value;
    rep.verdict = n.verdict;
    rep.phi_kind = phi.kind_name();
    rep.theta_or_weight = phi.weight_description();
    return rep;
}

template <SpectralModel M>
SeminormReport psi_seminorm(const M& m, const typename M::Element& x, const LebesgueParameter& phi, const PsiSymbol& psi,
                            const QuadratureSpec& q) {
    SeminormReport rep;
    rep.quadrature = model_time_spec(m, q);
    const std::vector<double> t = rep.quadrature.nodes();
    std::vector<double> g = norm_profile(m, m.to_spectral(x), t, [&psi](double s) -> Symbol {
        return [&psi, s](double lam) { return psi(s * lam); };
    });
    for (std::size_t i = 0; i < t.size(); ++i) g[i] /= t[i];
    const PhiNorm n = phi_norm(t, g, phi);
    rep.value = n.value;
    rep.verdict = n.verdict;
    rep.phi_kind = phi.kind_name();
    rep.theta_or_weight = phi.weight_description() + ";psi=" + psi.name();
    return rep;
}

#define MRLAB_INSTANTIATE(M)                                                                                          \
    template KBracket k_thermic<M>(const M&, const M::Element&, double, const QuadratureSpec&);                      \
    template KCurve k_thermic_curve<M>(const M&, const M::Element&, const QuadratureSpec&, std::vector<double>*);    \
    template double k_modulus<M>(const M&, const M::Element&, double, const QuadratureSpec&);                        \
    template KCurve k_modulus_curve<M>(const M&, const M::Element&, const QuadratureSpec&);                          \
    template SeminormReport homogeneous_seminorm<M>(const M&, const M::Element&, const LebesgueParameter&,           \
                                                    const QuadratureSpec&);                                          \
    template SeminormReport psi_seminorm<M>(const M&, const M::Element&, const LebesgueParameter&, const PsiSymbol&, \
                                            const QuadratureSpec&);

MRLAB_INSTANTIATE(DiagonalModel)
MRLAB_INSTANTIATE(HeatModel)

#undef MRLAB_INSTANTIATE

}  // namespace mrlab
