#pragma once

#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "mrlab/calculus.hpp"
#include "mrlab/function_on_half_line.hpp"
#include "mrlab/quadrature.hpp"

namespace mrlab {

struct LebesgueParameter {
    enum class Kind { L1_weighted, Linf_weighted };
    Kind kind = Kind::L1_weighted;
    FunctionOnHalfLine w = FunctionOnHalfLine::constant(1.0);
    double theta = std::numeric_limits<double>::quiet_NaN();

    static LebesgueParameter L1(FunctionOnHalfLine w);
    static LebesgueParameter Linf(FunctionOnHalfLine w);
    // w(t) = t^{-theta} with L1 aggregation
    static LebesgueParameter power_L1(double theta);
    // w(t) = t^{1-theta} with sup aggregation
    static LebesgueParameter power_Linf(double theta);
    // q = 1 or +inf
    static LebesgueParameter power(double theta, double q);

    std::string kind_name() const;
    std::string weight_description() const;
    // Throws DomainError when min(1, 1/t) has infinite norm.
    void require_nontrivial(const QuadratureSpec& q) const;
};

struct PhiNorm {
    double value = 0.0;
    Verdict verdict = Verdict::inconclusive;
};

// || g ||_Phi for samples g on log-spaced nodes.
PhiNorm phi_norm(const std::vector<double>& nodes, const std::vector<double>& g, const LebesgueParameter& phi);

struct KCurve {
    enum class Source { scalar_exact, thermic, modulus, smoothness2 };
    std::vector<double> nodes;
    std::vector<double> values;  // least concave non-decreasing majorant of raw
    std::vector<double> raw;
    Source source = Source::scalar_exact;

    static KCurve make(std::vector<double> nodes, std::vector<double> raw, Source source);
    static bool admissible(const std::vector<double>& nodes, const std::vector<double>& values, double slack = 1e-9);
    bool admissible(double slack = 1e-9) const { return admissible(nodes, values, slack); }
    std::string source_name() const;
    void write_csv(const std::string& path) const;
};

double k_scalar(double t_couple, double h, double r);
KCurve k_scalar_curve(double h, double r, const QuadratureSpec& q);

struct KBracket {
    double lower = 0.0;
    double upper = 0.0;
};

template <SpectralModel M>
KBracket k_thermic(const M& m, const typename M::Element& x, double t, const QuadratureSpec& q);
template <SpectralModel M>
KCurve k_thermic_curve(const M& m, const typename M::Element& x, const QuadratureSpec& q, std::vector<double>* lower = nullptr);

// omega_A(t, x) = sup_{0<s<=t} ||T(s)x - x||
template <SpectralModel M>
double k_modulus(const M& m, const typename M::Element& x, double t, const QuadratureSpec& q);
template <SpectralModel M>
KCurve k_modulus_curve(const M& m, const typename M::Element& x, const QuadratureSpec& q);

struct SecondDifference {
    double value = 0.0;
    int shift_cells = 0;
    double h_used = 0.0;
};
// ||phi - 2 phi(. - h) + phi(. - 2h)||_p with h quantized to whole cells
SecondDifference modulus_smoothness2(const GridField& f, double h, double p);
// sup over 0 < |h| <= r
SecondDifference modulus_smoothness2_sup(const GridField& f, double r, double p);
// t -> omega^2_p(sqrt t, f)
KCurve smoothness2_curve(const GridField& f, double p, const std::vector<double>& nodes);

double kphi_norm(const KCurve& curve, const LebesgueParameter& phi, const QuadratureSpec& q);

struct SeminormReport {
    double value = 0.0;
    Verdict verdict = Verdict::inconclusive;
    std::string phi_kind;
    std::string theta_or_weight;
    QuadratureSpec quadrature;
};

// || t -> ||A T(t) x|| ||_Phi
template <SpectralModel M>
SeminormReport homogeneous_seminorm(const M& m, const typename M::Element& x, const LebesgueParameter& phi,
                                    const QuadratureSpec& q);
// || t -> ||psi(tA) x|| / t ||_Phi
template <SpectralModel M>
SeminormReport psi_seminorm(const M& m, const typename M::Element& x, const LebesgueParameter& phi, const PsiSymbol& psi,
                            const QuadratureSpec& q);

template <class E>
std::pair<double, double> equivalence_ratio(const std::function<double(const E&)>& a,
                                            const std::function<double(const E&)>& b, const std::vector<E>& family) {
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const E& x : family) {
        const double r = a(x) / b(x);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    return {lo, hi};
}

}  // namespace mrlab
