#include "mrlab/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace mrlab {

void DiagonalOperator::validate() const {
    if (spectrum.empty()) throw InvalidSpec("diagonal operator needs at least one eigenvalue");
    for (double a : spectrum)
        if (!(a > 0.0) || !std::isfinite(a)) throw InvalidSpec("diagonal eigenvalues must be positive");
}

std::vector<double> diag_semigroup(const DiagonalOperator& A, double t, const std::vector<double>& x) {
    A.validate();
    if (t < 0.0) throw DomainError("time must be non-negative");
    if (x.size() != A.spectrum.size()) throw InvalidSpec("sequence length mismatch");
    std::vector<double> out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) out[k] = std::exp(-t * A.spectrum[k]) * x[k];
    return out;
}

std::vector<double> diag_AT(const DiagonalOperator& A, double t, const std::vector<double>& x) {
    std::vector<double> out = diag_semigroup(A, t, x);
    for (std::size_t k = 0; k < x.size(); ++k) out[k] *= A.spectrum[k];
    return out;
}

DiagonalModel::DiagonalModel(DiagonalOperator op) : op_(std::move(op)) { op_.validate(); }

std::vector<cplx> DiagonalModel::to_spectral(const Element& x) const {
    if (x.size() != op_.spectrum.size()) throw InvalidSpec("sequence length mismatch");
    return std::vector<cplx>(x.begin(), x.end());
}

DiagonalModel::Element DiagonalModel::from_spectral(const std::vector<cplx>& c) const {
    Element out(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) out[k] = c[k].real();
    return out;
}

double DiagonalModel::norm(const Element& x) const {
    double s = 0.0;
    for (double v : x) s = op_.ambient_norm == AmbientNorm::l1 ? s + std::abs(v) : std::max(s, std::abs(v));
    return s;
}

double DiagonalModel::norm_of_spectral(const std::vector<cplx>& c) const {
    double s = 0.0;
    for (const cplx& v : c) s = op_.ambient_norm == AmbientNorm::l1 ? s + std::abs(v) : std::max(s, std::abs(v));
    return s;
}

double DiagonalModel::analytic_bound() const { return 1.0 / (time_scale() * std::numbers::e); }

std::string DiagonalModel::describe() const {
    std::ostringstream os;
    os.precision(17);
    os << "diag:";
    for (std::size_t k = 0; k < op_.spectrum.size(); ++k) os << (k ? "," : "") << op_.spectrum[k];
    os << (op_.ambient_norm == AmbientNorm::l1 ? " (l1)" : " (linf)");
    return os.str();
}

HeatModel::HeatModel(int n, double L, int N, double p, double kappa)
    : geometry_(n, L, N), p_(p), kappa_(kappa), lambda_(squared_frequencies(geometry_)) {
    if (!(p >= 1.0)) throw InvalidSpec("Lebesgue exponent must be >= 1");
    if (!(kappa > 0.0)) throw InvalidSpec("time scale must be positive");
}

HeatModel HeatModel::like(const GridField& f, double p, double kappa) {
    return HeatModel(f.dim(), f.half_width(), f.samples(), p, kappa);
}

std::vector<cplx> HeatModel::to_spectral(const Element& x) const {
    if (!x.same_geometry(geometry_)) throw InvalidSpec("field geometry does not match the model");
    return fourier_forward(x);
}

HeatModel::Element HeatModel::from_spectral(const std::vector<cplx>& c) const { return fourier_inverse(geometry_, c); }

double HeatModel::horizon() const {
    const double r = half_width() / 8.0;
    return r * r / (2.0 * kappa_);
}

double HeatModel::analytic_bound() const {
    if (p_ == 2.0) return 1.0 / (kappa_ * std::numbers::e);
    // L1 norm of the kernel of t A T(t)
    const double cn = dim() == 1 ? 4.0 * std::exp(-0.5) / std::sqrt(2.0 * std::numbers::pi) : 4.0 / std::numbers::e;
    return cn / (2.0 * kappa_);
}

std::string HeatModel::describe() const {
    std::ostringstream os;
    os.precision(17);
    os << "heat" << dim() << "d(L=" << half_width() << ",N=" << samples() << ",p=" << p_ << ",kappa=" << kappa_ << ")";
    return os.str();
}

std::vector<cplx> multiply_symbol(const std::vector<cplx>& c, const std::vector<double>& lambda, const Symbol& g) {
    if (c.size() != lambda.size()) throw InvalidSpec("spectrum size mismatch");
    std::vector<cplx> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double v = g(lambda[i]);
        if (!std::isfinite(v)) throw NumericError("symbol not finite at a grid frequency");
        out[i] = c[i] * v;
    }
    return out;
}

Symbol at_symbol(double kappa, double t) {
    return [kappa, t](double lam) { return lam * std::exp(-kappa * t * lam); };
}

Symbol semigroup_symbol(double kappa, double t) {
    return [kappa, t](double lam) { return std::exp(-kappa * t * lam); };
}

double PsiSymbol::operator()(double z) const {
    switch (tag) {
        case Tag::psi1: return std::expm1(-z);
        case Tag::psi2: return z / (1.0 + z);
        case Tag::psi3: return z / ((1.0 + z) * (1.0 + z));
        case Tag::eta: return z * std::exp(-z);
        case Tag::frac_eps: return z * std::pow(1.0 + z, -1.0 - eps);
    }
    return 0.0;
}

std::string PsiSymbol::name() const {
    switch (tag) {
        case Tag::psi1: return "psi1";
        case Tag::psi2: return "psi2";
        case Tag::psi3: return "psi3";
        case Tag::eta: return "eta";
        case Tag::frac_eps: {
            std::ostringstream os;
            os << "frac_eps(" << eps << ")";
            return os.str();
        }
    }
    return "";
}

PsiSymbol PsiSymbol::parse(const std::string& s) {
    PsiSymbol p;
    if (s == "psi1") p.tag = Tag::psi1;
    else if (s == "psi2") p.tag = Tag::psi2;
    else if (s == "psi3") p.tag = Tag::psi3;
    else if (s == "eta") p.tag = Tag::eta;
    else if (s.rfind("frac_eps", 0) == 0) {
        p.tag = Tag::frac_eps;
        const auto colon = s.find(':');
        if (colon != std::string::npos) p.eps = std::stod(s.substr(colon + 1));
        if (!(p.eps > 0.0)) throw InvalidSpec("frac_eps needs eps > 0");
    } else {
        throw InvalidSpec("unknown psi symbol: " + s);
    }
    return p;
}

GridField heat_multiplier_apply(const GridField& f, const std::function<double(double, double)>& m, double t) {
    const std::vector<double> lam = squared_frequencies(f);
    std::vector<cplx> c = fourier_forward(f);
    for (std::size_t i = 0; i < c.size(); ++i) {
        const double v = m(lam[i], t);
        if (!std::isfinite(v)) throw NumericError("symbol not finite at a grid frequency");
        c[i] *= v;
    }
    return fourier_inverse(f, std::move(c));
}

RadialProfile RadialProfile::gaussian_heat(int n, double t) {
    if (n != 1 && n != 2) throw InvalidSpec("dimension must be 1 or 2");
    if (!(t >= 0.0)) throw DomainError("heat time must be non-negative");
    RadialProfile p;
    p.family = Family::gaussian_heat;
    p.n = n;
    p.t = t;
    return p;
}

RadialProfile RadialProfile::remark_example(double t, double s) {
    if (!(t > 1.0)) throw DomainError("outer time must exceed 1");
    if (!(s >= 0.0)) throw DomainError("heat time must be non-negative");
    RadialProfile p;
    p.family = Family::remark_example;
    p.n = 1;
    p.t = t;
    p.s = s;
    return p;
}

double RadialProfile::value(double r) const {
    if (family == Family::gaussian_heat) {
        const double a = t + 1.0;
        return std::pow(a, -0.5 * n) * std::exp(-r * r / (2.0 * a));
    }
    const double b = s + t * t;
    return std::exp(-r * r / (2.0 * b)) / (t * std::sqrt(b));
}

double RadialProfile::laplacian_value(double r) const {
    if (family == Family::gaussian_heat) {
        const double a = t + 1.0;
        return std::pow(a, -0.5 * n - 1.0) * std::exp(-r * r / (2.0 * a)) * (r * r / a - n);
    }
    const double b = s + t * t;
    return std::exp(-r * r / (2.0 * b)) / (t * std::sqrt(b) * b) * (r * r / b - 1.0);
}

double RadialProfile::width() const {
    return family == Family::gaussian_heat ? std::sqrt(1.0 + t) : std::sqrt(s + t * t);
}

GridField RadialProfile::sample(double L, int N) const {
    if (n == 1) return GridField::from_function(L, N, [this](double x) { return cplx(value(std::abs(x)), 0.0); });
    return GridField::from_function(L, N, [this](double x, double y) { return cplx(value(std::hypot(x, y)), 0.0); });
}

double radial_lp_norm(double p, const RadialProfile& profile, ProfileKind kind, const QuadratureSpec& q) {
    if (p != 1.0) throw InvalidSpec("radial norms support p = 1 only");
    q.validate();
    std::vector<double> r = q.nodes();
    const double width = profile.width();
    for (double& x : r) x *= width;
    auto g = [&](double x) { return kind == ProfileKind::value ? profile.value(x) : profile.laplacian_value(x); };
    const int n = profile.n;
    // |g| r^{n-1} dr = |g| r^n du with u = ln r
    auto F = [&](double u) {
        const double x = std::exp(u);
        return std::pow(x, n) * std::abs(g(x));
    };
    static constexpr double gx[4] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563, 0.8611363115940526};
    static constexpr double gw[4] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461, 0.3478548451374538};
    auto gauss = [&](double a, double b) {
        const double c = 0.5 * (a + b), h = 0.5 * (b - a);
        double acc = 0.0;
        for (int k = 0; k < 4; ++k) acc += gw[k] * F(c + h * gx[k]);
        return h * acc;
    };
    std::vector<double> gv(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) gv[i] = g(r[i]);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < r.size(); ++i) {
        const double u0 = std::log(r[i]), u1 = std::log(r[i + 1]);
        if (gv[i] * gv[i + 1] < 0.0) {
            double lo = u0, hi = u1;
            for (int it = 0; it < 100 && hi - lo > 1e-15 * (1.0 + std::abs(lo)); ++it) {
                const double mid = 0.5 * (lo + hi);
                if (g(std::exp(mid)) * gv[i] > 0.0) lo = mid;
                else hi = mid;
            }
            const double us = 0.5 * (lo + hi);
            acc += gauss(u0, us) + gauss(us, u1);
        } else {
            acc += gauss(u0, u1);
        }
    }
    const std::size_t m = r.size();
    auto edge = [&](std::size_t i) { return std::pow(r[i], n - 1) * std::abs(gv[i]); };
    const auto lo = lower_power_tail(r[0], edge(0), r[1], edge(1));
    const auto hi = upper_power_tail(r[m - 2], edge(m - 2), r[m - 1], edge(m - 1));
    if (!lo.finite || !hi.finite) throw NumericError("radial profile not integrable");
    const double omega = n == 1 ? 2.0 : 2.0 * std::numbers::pi;
    return omega * (acc + lo.value + hi.value);
}

double density_identity_error(const HeatModel& m, const GridField& x, double t) {
    if (!(t > 0.0)) throw DomainError("time must be positive");
    static constexpr double gl_x[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
                                       0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
    static constexpr double gl_w[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
                                       0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};
    const std::vector<cplx> c = m.to_spectral(x);
    const std::vector<double>& lam = m.eigenvalues();
    const double k = m.time_scale();
    double cmax = 0.0;
    for (const cplx& v : c) cmax = std::max(cmax, std::abs(v));
    double lam_max = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i)
        if (std::abs(c[i]) > 1e-14 * cmax) lam_max = std::max(lam_max, lam[i]);
    const int panels = std::max(16, static_cast<int>(std::ceil(k * lam_max * t)));
    const double hp = t / panels;
    std::vector<cplx> lhs(c.size()), rhs(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == cplx(0.0, 0.0)) continue;
        double integral = 0.0;
        for (int pnl = 0; pnl < panels; ++pnl) {
            const double mid = (pnl + 0.5) * hp;
            for (int g = 0; g < 8; ++g) integral += gl_w[g] * 0.5 * hp * std::exp(-k * lam[i] * (mid + 0.5 * hp * gl_x[g]));
        }
        lhs[i] = c[i] * (k * lam[i] * integral);
        rhs[i] = c[i] * (-std::expm1(-k * lam[i] * t));
    }
    const GridField a = m.from_spectral(lhs), b = m.from_spectral(rhs);
    double err = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) err = std::max(err, std::abs(a[i] - b[i]));
    return err;
}

}  // namespace mrlab
