#include "mrlab/mrtest.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "mrlab/errors.hpp"

namespace mrlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct LinearFit {
    double a = 0.0, b = 0.0, residual = kInf;
};

LinearFit fit_linear(const std::vector<double>& x, const std::vector<double>& y, double scale) {
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    LinearFit f;
    if (!(sxx > 0.0)) return f;
    f.b = sxy / sxx;
    f.a = my - f.b * mx;
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - f.a - f.b * x[i];
        ss += r * r;
    }
    f.residual = std::sqrt(ss / n) / scale;
    return f;
}

struct ExponentFit {
    LinearFit fit;
    double exponent = 0.0;
};

ExponentFit best_exponent(const std::vector<double>& T, const std::vector<double>& y, double scale, double sign) {
    ExponentFit best;
    constexpr int kSteps = 240;
    const double lo = std::log(0.05), hi = std::log(3.0);
    for (int i = 0; i <= kSteps; ++i) {
        const double e = std::exp(lo + (hi - lo) * i / kSteps);
        std::vector<double> x(T.size());
        const double T0 = T.back();
        for (std::size_t j = 0; j < T.size(); ++j) x[j] = std::pow(T[j] / T0, sign * e);
        const LinearFit f = fit_linear(x, y, scale);
        if (f.residual < best.fit.residual) {
            best.fit = f;
            best.exponent = e;
        }
    }
    return best;
}

// phi_1(z) = (1 - e^-z)/z and (1 - e^-z (1+z))/z^2
double phi1(double z) { return z < 1e-8 ? 1.0 - 0.5 * z : -std::expm1(-z) / z; }
double phi2(double z) {
    if (z < 1e-3) return 0.5 - z / 3.0 + z * z / 8.0 - z * z * z / 30.0;
    return (-std::expm1(-z) - z * std::exp(-z)) / (z * z);
}

template <SpectralModel M>
MRReport integral_test(const std::string& name, const M& m, const typename M::Element& x, const QuadratureSpec& q,
                       const std::function<Symbol(double)>& symbol_at) {
    MRReport rep;
    rep.test = name;
    rep.model = m.describe();
    rep.quadrature = model_time_spec(m, q);
    const double xn = m.norm(x);
    if (!(xn > 0.0)) {
        rep.vacuous = true;
        rep.constant = 0.0;
        rep.verdict = Verdict::finite;
        rep.growth.tag = Growth::Tag::bounded;
        return rep;
    }
    const std::vector<double> t = rep.quadrature.nodes();
    const std::vector<double> g = norm_profile(m, m.to_spectral(x), t, symbol_at);
    bool low_fin = true, high_fin = true;
    const std::vector<double> I = cumulative_from_zero(t, g, &low_fin);
    const auto hi = upper_power_tail(t[t.size() - 2], g[g.size() - 2], t.back(), g.back());
    high_fin = hi.finite;
    rep.growth = divergence_fit(t, I, q.rel_tol);
    if (!low_fin) {
        rep.verdict = Verdict::diverging;
        rep.constant = kInf;
    } else if (rep.growth.tag == Growth::Tag::bounded && high_fin) {
        rep.verdict = Verdict::finite;
        rep.constant = (I.back() + hi.value) / xn;
    } else if (rep.growth.diverging()) {
        rep.verdict = Verdict::diverging;
        rep.constant = kInf;
    } else {
        rep.verdict = Verdict::inconclusive;
        rep.constant = I.back() / xn;
    }
    return rep;
}

double time_norm(const std::vector<double>& t, const std::vector<double>& g, const TimeNormSpec& E) {
    const double tiny = 1e-12 * t.back();
    if (std::isinf(E.p)) {
        double m = 0.0;
        for (std::size_t i = 0; i < t.size(); ++i) m = std::max(m, E.v(std::max(t[i], tiny)) * g[i]);
        return m;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        const double a = E.v(std::max(t[i], tiny)) * std::pow(g[i], E.p);
        const double b = E.v(std::max(t[i + 1], tiny)) * std::pow(g[i + 1], E.p);
        acc += 0.5 * (t[i + 1] - t[i]) * (a + b);
    }
    return std::pow(acc, 1.0 / E.p);
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

std::string Growth::tag_name() const {
    switch (tag) {
        case Tag::bounded: return "bounded";
        case Tag::log: return "log";
        case Tag::power: return "power";
        case Tag::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Growth divergence_fit(const std::vector<double>& T, const std::vector<double>& I, double rel_tol) {
    if (T.size() != I.size()) throw InvalidSpec("divergence fit: size mismatch");
    Growth g;
    if (T.size() < 3) return g;
    g.level = I.back();
    if (!std::isfinite(I.back())) {
        g.tag = Growth::Tag::power;
        g.alpha = kInf;
        return g;
    }
    std::size_t start = 0;
    while (start < T.size() && T[start] < T.back() / 100.0) ++start;
    if (T.size() - start < 5) start = T.size() >= 5 ? T.size() - 5 : 0;
    const std::vector<double> Tw(T.begin() + start, T.end()), Iw(I.begin() + start, I.end());
    const double lo = *std::min_element(Iw.begin(), Iw.end()), hi = *std::max_element(Iw.begin(), Iw.end());
    if (std::abs(Iw.back() - Iw.front()) <= rel_tol * std::abs(Iw.back()) || hi == lo) {
        g.tag = Growth::Tag::bounded;
        return g;
    }
    const double scale = hi - lo;
    std::vector<double> lnT(Tw.size());
    for (std::size_t i = 0; i < Tw.size(); ++i) lnT[i] = std::log(Tw[i]);
    const LinearFit flog = fit_linear(lnT, Iw, scale);
    const ExponentFit fbnd = best_exponent(Tw, Iw, scale, -1.0);
    const ExponentFit fpow = best_exponent(Tw, Iw, scale, 1.0);
    struct Candidate {
        Growth::Tag tag;
        double residual;
    };
    std::vector<Candidate> c = {{Growth::Tag::bounded, fbnd.fit.residual},
                                {Growth::Tag::log, flog.residual},
                                {Growth::Tag::power, fpow.fit.residual}};
    std::sort(c.begin(), c.end(), [](const Candidate& a, const Candidate& b) { return a.residual < b.residual; });
    g.residual = c[0].residual;
    if (c[0].residual > 1e-6 && c[1].residual <= 1.1 * c[0].residual) return g;
    switch (c[0].tag) {
        case Growth::Tag::bounded:
            g.tag = Growth::Tag::bounded;
            g.alpha = -fbnd.exponent;
            break;
        case Growth::Tag::log:
            g.slope = flog.b;
            if (flog.residual < 1e-2 && flog.b > 0.0) g.tag = Growth::Tag::log;
            break;
        case Growth::Tag::power:
            g.alpha = fpow.exponent;
            g.slope = fpow.fit.b / std::pow(Tw.back(), fpow.exponent);
            if (fpow.fit.b > 0.0) g.tag = Growth::Tag::power;
            break;
        default: break;
    }
    return g;
}

void MRReport::write_sweep_csv(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw InvalidSpec("cannot write " + path);
    os.precision(17);
    os << "certificate,value\n";
    for (const auto& [label, value] : certificates) os << label << ',' << value << '\n';
}

template <class E>
void TimeSampledPath<E>::validate() const {
    if (t.size() != values.size() || t.size() < 2) throw InvalidSpec("time path needs matching nodes and values");
    if (t[0] != 0.0) throw InvalidSpec("time path must start at 0");
    for (std::size_t i = 1; i < t.size(); ++i)
        if (!(t[i] > t[i - 1])) throw InvalidSpec("time nodes must increase");
}

template struct TimeSampledPath<std::vector<double>>;
template struct TimeSampledPath<GridField>;

std::vector<double> uniform_times(double tau, double dt) {
    if (!(tau > 0.0) || !(dt > 0.0)) throw InvalidSpec("tau and dt must be positive");
    const int n = static_cast<int>(std::lround(tau / dt));
    std::vector<double> t(n + 1);
    for (int i = 0; i <= n; ++i) t[i] = tau * i / n;
    return t;
}

template <SpectralModel M>
TimeSampledPath<typename M::Element> solution_operator(const M& m, const TimeSampledPath<typename M::Element>& f,
                                                       const typename M::Element* x0) {
    f.validate();
    const std::vector<double>& lam = m.eigenvalues();
    const double k = m.time_scale();
    const std::size_t n = f.t.size();
    std::vector<std::vector<cplx>> F(n);
    for (std::size_t j = 0; j < n; ++j) F[j] = m.to_spectral(f.values[j]);
    std::vector<cplx> U = x0 ? m.to_spectral(*x0) : std::vector<cplx>(lam.size());
    TimeSampledPath<typename M::Element> u;
    u.t = f.t;
    u.interpolation = f.interpolation;
    u.values.reserve(n);
    u.values.push_back(m.from_spectral(U));
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const double h = f.t[j + 1] - f.t[j];
        for (std::size_t i = 0; i < U.size(); ++i) {
            const double z = k * lam[i] * h;
            const double e = std::exp(-z);
            if (f.interpolation == Interpolation::piecewise_constant) {
                U[i] = e * U[i] + h * phi1(z) * F[j][i];
            } else {
                const double p1 = phi1(z), p2 = phi2(z);
                U[i] = e * U[i] + h * (p2 * F[j][i] + (p1 - p2) * F[j + 1][i]);
            }
        }
        u.values.push_back(m.from_spectral(U));
    }
    return u;
}

template <SpectralModel M>
double residual_check(const M& m, const TimeSampledPath<typename M::Element>& u,
                      const TimeSampledPath<typename M::Element>& f) {
    u.validate();
    f.validate();
    if (u.t != f.t) throw InvalidSpec("paths must share time nodes");
    const std::vector<double>& lam = m.eigenvalues();
    const double k = m.time_scale();
    double worst = 0.0;
    for (std::size_t j = 1; j + 1 < u.t.size(); ++j) {
        const std::vector<cplx> a = m.to_spectral(u.values[j - 1]), b = m.to_spectral(u.values[j + 1]);
        const std::vector<cplx> c = m.to_spectral(u.values[j]), fj = m.to_spectral(f.values[j]);
        const double hm = u.t[j] - u.t[j - 1], hp = u.t[j + 1] - u.t[j];
        std::vector<cplx> r(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            // three-point derivative on a non-uniform grid
            const cplx d = (-hp / (hm * (hm + hp))) * a[i] + ((hp - hm) / (hm * hp)) * c[i] + (hm / (hp * (hm + hp))) * b[i];
            r[i] = d + k * lam[i] * c[i] - fj[i];
        }
        worst = std::max(worst, m.norm_of_spectral(r));
    }
    return worst;
}

template <SpectralModel M>
MRReport kp_l1_test(const M& m, const typename M::Element& x, const QuadratureSpec& q) {
    const double k = m.time_scale();
    MRReport rep = integral_test("kp", m, x, q, [k](double t) { return at_symbol(k, t); });
    rep.weight = "constant(1)";
    rep.certificates.push_back({"x", rep.constant});
    return rep;
}

template <SpectralModel M>
MRReport weighted_l1_test(const M& m, const typename M::Element& x, const FunctionOnHalfLine& v,
                          const std::vector<double>& s_grid, const QuadratureSpec& q) {
    MRReport rep;
    rep.test = "weighted";
    rep.model = m.describe();
    rep.weight = v.tag();
    rep.quadrature = model_time_spec(m, q);
    const double xn = m.norm(x);
    if (!(xn > 0.0)) {
        rep.vacuous = true;
        rep.verdict = Verdict::finite;
        rep.growth.tag = Growth::Tag::bounded;
        return rep;
    }
    if (s_grid.size() < 5) throw InvalidSpec("s-grid needs at least five nodes");
    const std::vector<double> t = rep.quadrature.nodes();
    const double k = m.time_scale();
    const std::vector<double> g = norm_profile(m, m.to_spectral(x), t, [k](double s) { return at_symbol(k, s); });
    std::vector<double> c(s_grid.size());
    std::vector<double> h(t.size());
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
        const double s = s_grid[i];
        const double lvs = v.log_value(s);
        for (std::size_t j = 0; j < t.size(); ++j) h[j] = g[j] * std::exp(v.log_value(t[j] + s) - lvs);
        const HalfLineIntegral I = integrate_half_line(t, h);
        c[i] = I.value / xn;
    }
    double best = -1.0;
    for (double ci : c) best = std::max(best, ci);
    // running sup towards large s and towards small s
    std::vector<double> up(c.size());
    up[0] = c[0];
    for (std::size_t i = 1; i < c.size(); ++i) up[i] = std::max(up[i - 1], c[i]);
    std::vector<double> inv_s(c.size()), down(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::size_t r = c.size() - 1 - i;
        inv_s[i] = 1.0 / s_grid[r];
        down[i] = i == 0 ? c[r] : std::max(down[i - 1], c[r]);
    }
    const Growth gu = divergence_fit(s_grid, up, q.rel_tol);
    const Growth gd = divergence_fit(inv_s, down, q.rel_tol);
    rep.growth = gu.diverging() || !gd.diverging() ? gu : gd;
    if (!std::isfinite(best) || gu.diverging() || gd.diverging()) {
        rep.verdict = Verdict::diverging;
        rep.constant = kInf;
    } else if (gu.tag == Growth::Tag::bounded && gd.tag == Growth::Tag::bounded) {
        rep.verdict = Verdict::finite;
        rep.constant = best;
    } else {
        rep.verdict = Verdict::inconclusive;
        rep.constant = best;
    }
    rep.certificates.push_back({"x", rep.constant});
    return rep;
}

template <SpectralModel M>
MRReport weighted_l1_test(const M& m, const typename M::Element& x, const FunctionOnHalfLine& v, const QuadratureSpec& q) {
    const QuadratureSpec ts = model_time_spec(m, q);
    return weighted_l1_test(m, x, v, ts.capped_density(32.0).nodes(), q);
}

template <SpectralModel M>
MRReport linf_test(const M& m, const typename M::Element& x, const QuadratureSpec& q) {
    MRReport rep;
    rep.test = "linf";
    rep.model = m.describe();
    rep.quadrature = model_time_spec(m, q);
    const double xn = m.norm(x);
    if (!(xn > 0.0)) {
        rep.vacuous = true;
        rep.constant = 0.0;
        rep.verdict = Verdict::finite;
        rep.growth.tag = Growth::Tag::bounded;
        return rep;
    }
    const std::vector<double> t = rep.quadrature.nodes();
    const std::vector<cplx> c = m.to_spectral(x);
    const double k = m.time_scale();
    std::vector<double> a = norm_profile(m, c, t, [k](double s) { return at_symbol(k, s); });
    const std::vector<double> b = norm_profile(m, c, t, [k](double s) { return semigroup_symbol(k, s); });
    double sup = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) sup = std::max(sup, t[i] * a[i]);
    // limsup as the max over the last decade, checked against the last half decade
    double tail = 0.0, tail_half = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] >= t.back() / 10.0) tail = std::max(tail, b[i]);
        if (t[i] >= t.back() / std::sqrt(10.0)) tail_half = std::max(tail_half, b[i]);
    }
    const bool stable = std::abs(tail - tail_half) <= q.rel_tol * std::max(xn, tail);
    rep.constant = sup > 0.0 ? std::max(0.0, xn - tail) / sup : kInf;
    rep.verdict = !std::isfinite(rep.constant) ? Verdict::diverging : stable ? Verdict::finite : Verdict::inconclusive;
    rep.growth.tag = Growth::Tag::bounded;
    rep.growth.level = tail;
    rep.certificates.push_back({"x", rep.constant});
    return rep;
}

template <SpectralModel M>
MRReport resolvent_l1_test(const M& m, const typename M::Element& x, const QuadratureSpec& q) {
    MRReport rep = integral_test("resolvent", m, x, q, [](double t) -> Symbol {
        return [t](double lam) { return lam / (1.0 + t * lam); };
    });
    rep.certificates.push_back({"x", rep.constant});
    return rep;
}

template <SpectralModel M>
MRReport gamma_l1_test(const M& m, const typename M::Element& x, double eps, const QuadratureSpec& q) {
    if (!(eps > 0.0)) throw DomainError("eps must be positive");
    MRReport rep = integral_test("gamma", m, x, q, [eps](double t) -> Symbol {
        return [t, eps](double lam) { return lam * std::pow(1.0 + t * lam, -1.0 - eps); };
    });
    rep.phi = "gamma(eps=" + fmt(eps) + ")";
    rep.certificates.push_back({"x", rep.constant});
    return rep;
}

template <SpectralModel M>
MRReport mre_ratio(const M& m, const TimeSampledPath<typename M::Element>& f, const TimeNormSpec& E, double tau) {
    f.validate();
    MRReport rep;
    rep.test = "mre";
    rep.model = m.describe();
    rep.weight = E.v.tag();
    rep.phi = "L^" + fmt(E.p);
    const TimeSampledPath<typename M::Element> u = solution_operator(m, f);
    const std::vector<double>& lam = m.eigenvalues();
    const double k = m.time_scale();
    std::vector<double> t, nd, na, nf, nu;
    for (std::size_t j = 0; j < f.t.size() && f.t[j] <= tau * (1.0 + 1e-12); ++j) {
        const std::vector<cplx> U = m.to_spectral(u.values[j]), F = m.to_spectral(f.values[j]);
        std::vector<cplx> AU(U.size()), D(U.size());
        for (std::size_t i = 0; i < U.size(); ++i) {
            AU[i] = k * lam[i] * U[i];
            D[i] = F[i] - AU[i];
        }
        t.push_back(f.t[j]);
        nd.push_back(m.norm_of_spectral(D));
        na.push_back(m.norm_of_spectral(AU));
        nf.push_back(m.norm_of_spectral(F));
        nu.push_back(m.norm_of_spectral(U));
    }
    if (t.size() < 2) throw InvalidSpec("tau leaves fewer than two time nodes");
    rep.components.present = true;
    rep.components.deriv_norm = time_norm(t, nd, E);
    rep.components.Au_norm = time_norm(t, na, E);
    rep.components.f_norm = time_norm(t, nf, E);
    rep.components.u_norm = time_norm(t, nu, E);
    if (rep.components.f_norm == 0.0) {
        rep.vacuous = true;
        rep.constant = kNaN;
        rep.verdict = Verdict::inconclusive;
        return rep;
    }
    rep.constant = (rep.components.deriv_norm + rep.components.Au_norm) / rep.components.f_norm;
    rep.constant_with_u =
        (rep.components.deriv_norm + rep.components.Au_norm + rep.components.u_norm) / rep.components.f_norm;
    rep.verdict = std::isfinite(rep.constant) ? Verdict::finite : Verdict::diverging;
    rep.growth.tag = Growth::Tag::bounded;
    rep.certificates.push_back({"f", rep.constant});
    return rep;
}

template <SpectralModel M>
MRReport homogeneous_mre(const M& m, const TimeSampledPath<typename M::Element>& f, const LebesgueParameter& phi,
                         TimeNorm tn, double tau, const QuadratureSpec& q, const typename M::Element* x0) {
    f.validate();
    MRReport rep;
    rep.test = "homogeneous_mre";
    rep.model = m.describe();
    rep.phi = phi.kind_name() + "(" + phi.weight_description() + ")";
    rep.weight = tn == TimeNorm::L1 ? "time L1" : "time Linf";
    rep.quadrature = model_time_spec(m, q);
    const std::vector<double> s = rep.quadrature.nodes();
    const std::vector<double>& lam = m.eigenvalues();
    const double k = m.time_scale();
    auto seminorm = [&](const std::vector<cplx>& c) {
        std::vector<double> g(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) g[i] = applied_norm(m, c, at_symbol(k, s[i]));
        return phi_norm(s, g, phi).value;
    };
    const TimeSampledPath<typename M::Element> u = solution_operator(m, f, x0);
    std::vector<double> t, nd, na, nf, nu;
    for (std::size_t j = 0; j < f.t.size() && f.t[j] <= tau * (1.0 + 1e-12); ++j) {
        const std::vector<cplx> U = m.to_spectral(u.values[j]), F = m.to_spectral(f.values[j]);
        std::vector<cplx> AU(U.size()), D(U.size());
        for (std::size_t i = 0; i < U.size(); ++i) {
            AU[i] = k * lam[i] * U[i];
            D[i] = F[i] - AU[i];
        }
        t.push_back(f.t[j]);
        nd.push_back(seminorm(D));
        na.push_back(seminorm(AU));
        nf.push_back(seminorm(F));
        nu.push_back(seminorm(U));
    }
    if (t.size() < 2) throw InvalidSpec("tau leaves fewer than two time nodes");
    TimeNormSpec E;
    E.p = tn == TimeNorm::L1 ? 1.0 : kInf;
    const double xs = x0 ? seminorm(m.to_spectral(*x0)) : 0.0;
    rep.components.present = true;
    rep.components.deriv_norm = time_norm(t, nd, E);
    rep.components.Au_norm = time_norm(t, na, E);
    rep.components.f_norm = time_norm(t, nf, E) + xs;
    rep.components.u_norm = time_norm(t, nu, E);
    if (rep.components.f_norm == 0.0) {
        rep.vacuous = true;
        rep.constant = kNaN;
        return rep;
    }
    rep.constant = (rep.components.deriv_norm + rep.components.Au_norm) / rep.components.f_norm;
    rep.constant_with_u =
        (rep.components.deriv_norm + rep.components.Au_norm + rep.components.u_norm) / rep.components.f_norm;
    rep.verdict = std::isfinite(rep.constant) ? Verdict::finite : Verdict::diverging;
    rep.growth.tag = Growth::Tag::bounded;
    rep.certificates.push_back({"f", rep.constant});
    return rep;
}

RemarkMeasurement remark_example_measurement(double theta, const QuadratureSpec& q) {
    if (!(theta > 0.0 && theta < 1.0)) throw DomainError("theta must lie in (0,1)");
    q.validate();
    RemarkMeasurement out;
    // radial integrals in space, heat time s and outer time t = 1 + tau
    QuadratureSpec qr = q;
    qr.n_nodes = 1024;
    const QuadratureSpec qs = q.capped_density(24.0);
    const QuadratureSpec qt = q.with_range(1e-4, 1e4).capped_density(24.0);
    const std::vector<double> s = qs.nodes(), tau = qt.nodes();
    std::vector<double> outer(tau.size()), inner(s.size());
    bool finite = true;
    for (std::size_t i = 0; i < tau.size(); ++i) {
        const double t = 1.0 + tau[i];
        // s = t^2 sigma
        const double t2 = t * t;
        for (std::size_t j = 0; j < s.size(); ++j)
            inner[j] = std::pow(t2 * s[j], -theta) *
                       radial_lp_norm(1.0, RadialProfile::remark_example(t, t2 * s[j]), ProfileKind::laplacian, qr);
        const HalfLineIntegral I = integrate_half_line(s, inner);
        finite = finite && I.finite;
        outer[i] = t2 * I.value;
    }
    const HalfLineIntegral O = integrate_half_line(tau, outer);
    out.double_integral = O.value;
    out.double_integral_verdict = finite && O.finite ? Verdict::finite : Verdict::diverging;
    // int_1^T ||f(t)||_1 dt
    std::vector<double> g(tau.size());
    for (std::size_t i = 0; i < tau.size(); ++i)
        g[i] = radial_lp_norm(1.0, RadialProfile::remark_example(1.0 + tau[i], 0.0), ProfileKind::value, qr);
    const std::vector<double> I = cumulative_from_zero(tau, g);
    std::vector<double> T(tau.size());
    for (std::size_t i = 0; i < tau.size(); ++i) T[i] = 1.0 + tau[i];
    out.inhomogeneous_growth = divergence_fit(T, I, q.rel_tol);
    return out;
}

MRReport merge_reports(const std::vector<MRReport>& reports, const std::vector<std::string>& labels) {
    if (reports.empty() || reports.size() != labels.size()) throw InvalidSpec("nothing to merge");
    MRReport out = reports.front();
    out.certificates.clear();
    bool any_div = false, all_fin = true;
    std::size_t worst = 0;
    double worst_val = -1.0;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const MRReport& r = reports[i];
        out.certificates.push_back({labels[i], r.constant});
        if (r.vacuous) continue;
        any_div = any_div || r.verdict == Verdict::diverging;
        all_fin = all_fin && r.verdict == Verdict::finite;
        const double v = std::isnan(r.constant) ? -1.0 : r.constant;
        if (v > worst_val) {
            worst_val = v;
            worst = i;
        }
    }
    const MRReport& w = reports[worst];
    out.constant = w.constant;
    out.constant_with_u = w.constant_with_u;
    out.growth = w.growth;
    out.components = w.components;
    out.vacuous = w.vacuous;
    out.verdict = any_div ? Verdict::diverging : all_fin ? Verdict::finite : Verdict::inconclusive;
    return out;
}

std::vector<Certificate<std::vector<double>>> diag_certificates(const DiagonalModel& m, int n_random, std::uint64_t seed) {
    const std::size_t n = m.eigenvalues().size();
    std::vector<Certificate<std::vector<double>>> out;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<double> e(n, 0.0);
        e[k] = 1.0;
        out.push_back({"basis:" + std::to_string(k), e});
    }
    std::vector<double> u(n, 1.0);
    const double un = m.norm(u);
    for (double& v : u) v /= un;
    out.push_back({"uniform", u});
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int r = 0; r < n_random; ++r) {
        std::vector<double> x(n);
        for (double& v : x) v = dist(rng);
        const double xn = m.norm(x);
        if (xn > 0.0)
            for (double& v : x) v /= xn;
        out.push_back({"random:" + std::to_string(r), x});
    }
    return out;
}

GridField gaussian_field(int n, double L, int N, double width) {
    const double w2 = width * width;
    if (n == 1) return GridField::from_function(L, N, [w2](double x) { return cplx(std::exp(-x * x / (2.0 * w2)), 0.0); });
    return GridField::from_function(L, N, [w2](double x, double y) {
        return cplx(std::exp(-(x * x + y * y) / (2.0 * w2)), 0.0);
    });
}

GridField meanzero_field(int n, double L, int N, double width) {
    const double w2 = width * width;
    if (n == 1)
        return GridField::from_function(L, N, [w2, width](double x) { return cplx(x / width * std::exp(-x * x / (2.0 * w2)), 0.0); });
    return GridField::from_function(L, N, [w2, width](double x, double y) {
        return cplx(x / width * std::exp(-(x * x + y * y) / (2.0 * w2)), 0.0);
    });
}

std::vector<Certificate<GridField>> heat_certificates(const HeatModel& m) {
    const int n = m.dim();
    const double L = m.half_width();
    const int N = m.samples();
    std::vector<Certificate<GridField>> out;
    out.push_back({"gaussian", gaussian_field(n, L, N)});
    out.push_back({"gaussian:2", gaussian_field(n, L, N, 2.0)});
    out.push_back({"meanzero", meanzero_field(n, L, N)});
    out.push_back({"meanzero:2", meanzero_field(n, L, N, 2.0)});
    if (n == 1)
        out.push_back({"modulated", GridField::from_function(L, N, [](double x) {
                           return cplx(std::cos(3.0 * x) * std::exp(-x * x / 2.0), 0.0);
                       })});
    return out;
}

#define MRLAB_INSTANTIATE(M)                                                                                             \
    template TimeSampledPath<M::Element> solution_operator<M>(const M&, const TimeSampledPath<M::Element>&,            \
                                                              const M::Element*);                                      \
    template double residual_check<M>(const M&, const TimeSampledPath<M::Element>&, const TimeSampledPath<M::Element>&); \
    template MRReport kp_l1_test<M>(const M&, const M::Element&, const QuadratureSpec&);                                \
    template MRReport weighted_l1_test<M>(const M&, const M::Element&, const FunctionOnHalfLine&,                       \
                                          const std::vector<double>&, const QuadratureSpec&);                           \
    template MRReport weighted_l1_test<M>(const M&, const M::Element&, const FunctionOnHalfLine&, const QuadratureSpec&); \
    template MRReport linf_test<M>(const M&, const M::Element&, const QuadratureSpec&);                                 \
    template MRReport resolvent_l1_test<M>(const M&, const M::Element&, const QuadratureSpec&);                         \
    template MRReport gamma_l1_test<M>(const M&, const M::Element&, double, const QuadratureSpec&);                     \
    template MRReport mre_ratio<M>(const M&, const TimeSampledPath<M::Element>&, const TimeNormSpec&, double);          \
    template MRReport homogeneous_mre<M>(const M&, const TimeSampledPath<M::Element>&, const LebesgueParameter&,        \
                                         TimeNorm, double, const QuadratureSpec&, const M::Element*);

MRLAB_INSTANTIATE(DiagonalModel)
MRLAB_INSTANTIATE(HeatModel)

#undef MRLAB_INSTANTIATE

}  // namespace mrlab
