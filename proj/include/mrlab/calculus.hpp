#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "mrlab/errors.hpp"
#include "mrlab/grid_field.hpp"
#include "mrlab/quadrature.hpp"

namespace mrlab {

enum class AmbientNorm { l1, linf };

struct DiagonalOperator {
    std::vector<double> spectrum;
    AmbientNorm ambient_norm = AmbientNorm::l1;

    void validate() const;
};

std::vector<double> diag_semigroup(const DiagonalOperator& A, double t, const std::vector<double>& x);
std::vector<double> diag_AT(const DiagonalOperator& A, double t, const std::vector<double>& x);

// Spectral symbol as a function of the eigenvalue lambda.
using Symbol = std::function<double(double)>;

// Model with a self-adjoint non-negative operator A diagonalized by a fixed
// transform. The semigroup is T(t) = exp(-kappa t A); kappa = time_scale().
class DiagonalModel {
public:
    using Element = std::vector<double>;

    explicit DiagonalModel(DiagonalOperator op);

    std::vector<cplx> to_spectral(const Element& x) const;
    Element from_spectral(const std::vector<cplx>& c) const;
    const std::vector<double>& eigenvalues() const { return op_.spectrum; }
    double norm(const Element& x) const;
    double norm_of_spectral(const std::vector<cplx>& c) const;
    double time_scale() const { return 1.0; }
    // largest time at which the model is faithful
    double horizon() const { return std::numeric_limits<double>::infinity(); }
    // sup_t ||t A T(t)|| as an operator bound
    double analytic_bound() const;
    std::string describe() const;
    const DiagonalOperator& op() const { return op_; }

private:
    DiagonalOperator op_;
};

// A = -Laplacian on a periodic box, T(t) = exp(t Laplacian / 2) by default.
class HeatModel {
public:
    using Element = GridField;

    HeatModel(int n, double L, int N, double p = 1.0, double kappa = 0.5);
    static HeatModel like(const GridField& f, double p = 1.0, double kappa = 0.5);

    std::vector<cplx> to_spectral(const Element& x) const;
    Element from_spectral(const std::vector<cplx>& c) const;
    const std::vector<double>& eigenvalues() const { return lambda_; }
    double norm(const Element& x) const { return x.lp_norm(p_); }
    double norm_of_spectral(const std::vector<cplx>& c) const { return norm(from_spectral(c)); }
    double time_scale() const { return kappa_; }
    double horizon() const;
    double analytic_bound() const;
    std::string describe() const;

    int dim() const { return geometry_.dim(); }
    double half_width() const { return geometry_.half_width(); }
    int samples() const { return geometry_.samples(); }
    double exponent() const { return p_; }
    const GridField& geometry() const { return geometry_; }

private:
    GridField geometry_;
    double p_;
    double kappa_;
    std::vector<double> lambda_;
};

template <class M>
concept SpectralModel = requires(const M& m, const typename M::Element& x, const std::vector<cplx>& c) {
    { m.to_spectral(x) } -> std::same_as<std::vector<cplx>>;
    { m.from_spectral(c) } -> std::same_as<typename M::Element>;
    { m.eigenvalues() } -> std::convertible_to<const std::vector<double>&>;
    { m.norm(x) } -> std::same_as<double>;
    { m.norm_of_spectral(c) } -> std::same_as<double>;
    { m.time_scale() } -> std::same_as<double>;
    { m.horizon() } -> std::same_as<double>;
    { m.analytic_bound() } -> std::same_as<double>;
    { m.describe() } -> std::same_as<std::string>;
};

// Coefficients multiplied by g(lambda).
std::vector<cplx> multiply_symbol(const std::vector<cplx>& c, const std::vector<double>& lambda, const Symbol& g);

template <SpectralModel M>
typename M::Element apply_symbol(const M& m, const typename M::Element& x, const Symbol& g) {
    return m.from_spectral(multiply_symbol(m.to_spectral(x), m.eigenvalues(), g));
}

template <SpectralModel M>
double applied_norm(const M& m, const std::vector<cplx>& c, const Symbol& g) {
    return m.norm_of_spectral(multiply_symbol(c, m.eigenvalues(), g));
}

template <SpectralModel M>
typename M::Element semigroup(const M& m, double t, const typename M::Element& x) {
    if (t < 0.0) throw DomainError("time must be non-negative");
    const double k = m.time_scale();
    return apply_symbol(m, x, [k, t](double lam) { return std::exp(-k * t * lam); });
}

// A T(t) x
template <SpectralModel M>
typename M::Element generator_semigroup(const M& m, double t, const typename M::Element& x) {
    if (t < 0.0) throw DomainError("time must be non-negative");
    const double k = m.time_scale();
    return apply_symbol(m, x, [k, t](double lam) { return lam * std::exp(-k * t * lam); });
}

template <SpectralModel M>
typename M::Element operator_action(const M& m, const typename M::Element& x) {
    return apply_symbol(m, x, [](double lam) { return lam; });
}

// Symbol of A T(t).
Symbol at_symbol(double kappa, double t);
Symbol semigroup_symbol(double kappa, double t);

struct PsiSymbol {
    enum class Tag { psi1, psi2, psi3, eta, frac_eps };
    Tag tag = Tag::eta;
    double eps = 1.0;

    double operator()(double z) const;
    std::string name() const;
    static PsiSymbol parse(const std::string& s);
};

template <SpectralModel M>
typename M::Element psi_calculus(const M& m, const PsiSymbol& psi, double t, const typename M::Element& x) {
    if (!(t > 0.0)) throw DomainError("time must be positive");
    return apply_symbol(m, x, [&psi, t](double lam) { return psi(t * lam); });
}

// Multiplier m(|xi|^2, t) on the field's Fourier side.
GridField heat_multiplier_apply(const GridField& f, const std::function<double(double, double)>& m, double t);

struct RadialProfile {
    enum class Family { gaussian_heat, remark_example };
    Family family = Family::gaussian_heat;
    int n = 1;
    double t = 0.0;
    double s = 0.0;

    static RadialProfile gaussian_heat(int n, double t);
    // chi_(1,inf)(t) t^-2 exp(-r^2/(2t^2)) after heat time s
    static RadialProfile remark_example(double t, double s);

    double value(double r) const;
    double laplacian_value(double r) const;
    // Gaussian standard deviation of the profile
    double width() const;
    GridField sample(double L, int N) const;
};

enum class ProfileKind { value, laplacian };

double radial_lp_norm(double p, const RadialProfile& profile, ProfileKind kind, const QuadratureSpec& q);

// max |A int_0^t T(s)x ds - (x - T(t)x)| with the time integral done by
// composite Gauss-Legendre; uses the generator kappa A of T.
double density_identity_error(const HeatModel& m, const GridField& x, double t);

}  // namespace mrlab

namespace mrlab {

// Time grid adapted to a model: grid models are clipped to their horizon and
// to times where the semigroup still moves the top frequency.
template <SpectralModel M>
QuadratureSpec model_time_spec(const M& m, const QuadratureSpec& q, double max_per_decade = 16.0) {
    q.validate();
    if (std::isinf(m.horizon())) return q;
    double lam_max = 0.0;
    for (double l : m.eigenvalues()) lam_max = std::max(lam_max, l);
    const double lo = std::max(q.t_min, 1e-3 / (m.time_scale() * lam_max));
    const double hi = std::min(q.t_max, m.horizon());
    if (!(hi > lo)) throw InvalidSpec("quadrature range does not meet the model's time range");
    QuadratureSpec r = q;
    r.t_min = lo;
    r.t_max = hi;
    const double density = std::min(max_per_decade, q.nodes_per_decade());
    r.n_nodes = std::max(16, static_cast<int>(std::floor(std::log10(hi / lo) * density)) + 1);
    return r;
}

// t -> ||g_t(A) x|| on the given nodes.
template <SpectralModel M>
std::vector<double> norm_profile(const M& m, const std::vector<cplx>& c, const std::vector<double>& nodes,
                                 const std::function<Symbol(double)>& symbol_at) {
    std::vector<double> out(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) out[i] = applied_norm(m, c, symbol_at(nodes[i]));
    return out;
}

}  // namespace mrlab
