#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "mrlab/calculus.hpp"
#include "mrlab/function_on_half_line.hpp"
#include "mrlab/interpnorms.hpp"
#include "mrlab/quadrature.hpp"

namespace mrlab {

struct Growth {
    enum class Tag { bounded, log, power, inconclusive };
    Tag tag = Tag::inconclusive;
    double slope = 0.0;  // log coefficient
    double alpha = 0.0;  // power exponent
    double level = 0.0;  // last sample
    double residual = 0.0;

    std::string tag_name() const;
    bool diverging() const { return tag == Tag::log || tag == Tag::power; }
};

// Classifies I(T) over its last two decades against const + b T^-beta,
// a + b ln T and a + b T^alpha.
Growth divergence_fit(const std::vector<double>& T, const std::vector<double>& I, double rel_tol = 1e-3);

struct MRComponents {
    double deriv_norm = 0.0;
    double Au_norm = 0.0;
    double f_norm = 0.0;
    double u_norm = 0.0;
    bool present = false;
};

struct MRReport {
    std::string test;
    std::string model;
    std::string phi;
    std::string weight;
    double constant = 0.0;  // +inf when diverging, NaN when vacuous
    double constant_with_u = std::numeric_limits<double>::quiet_NaN();
    Verdict verdict = Verdict::inconclusive;
    bool vacuous = false;
    Growth growth;
    MRComponents components;
    std::vector<std::pair<std::string, double>> certificates;
    QuadratureSpec quadrature;

    void write_sweep_csv(const std::string& path) const;
};

template <class E>
struct Certificate {
    std::string label;
    E x;
};

enum class Interpolation { piecewise_constant, piecewise_linear };

template <class E>
struct TimeSampledPath {
    std::vector<double> t;
    std::vector<E> values;
    Interpolation interpolation = Interpolation::piecewise_linear;

    void validate() const;
};

// Uniform nodes 0, dt, ..., tau.
std::vector<double> uniform_times(double tau, double dt);

// u(t) = T(t) x0 + int_0^t T(t-s) f(s) ds, exponential integrator per segment.
template <SpectralModel M>
TimeSampledPath<typename M::Element> solution_operator(const M& m, const TimeSampledPath<typename M::Element>& f,
                                                       const typename M::Element* x0 = nullptr);

// max over interior nodes of ||u' + G u - f|| with central differences; G = kappa A.
template <SpectralModel M>
double residual_check(const M& m, const TimeSampledPath<typename M::Element>& u,
                      const TimeSampledPath<typename M::Element>& f);

template <SpectralModel M>
MRReport kp_l1_test(const M& m, const typename M::Element& x, const QuadratureSpec& q);

template <SpectralModel M>
MRReport weighted_l1_test(const M& m, const typename M::Element& x, const FunctionOnHalfLine& v,
                          const std::vector<double>& s_grid, const QuadratureSpec& q);
// s-grid taken from the model's time grid
template <SpectralModel M>
MRReport weighted_l1_test(const M& m, const typename M::Element& x, const FunctionOnHalfLine& v, const QuadratureSpec& q);

template <SpectralModel M>
MRReport linf_test(const M& m, const typename M::Element& x, const QuadratureSpec& q);

template <SpectralModel M>
MRReport resolvent_l1_test(const M& m, const typename M::Element& x, const QuadratureSpec& q);

template <SpectralModel M>
MRReport gamma_l1_test(const M& m, const typename M::Element& x, double eps, const QuadratureSpec& q);

struct TimeNormSpec {
    double p = 1.0;  // 1, 2 or inf
    FunctionOnHalfLine v = FunctionOnHalfLine::constant(1.0);
};

template <SpectralModel M>
MRReport mre_ratio(const M& m, const TimeSampledPath<typename M::Element>& f, const TimeNormSpec& E, double tau);

enum class TimeNorm { L1, Linf };

// Time norms of [u']_{Phi,A}, [Au]_{Phi,A}, [f]_{Phi,A} plus [x]_{Phi,A}.
template <SpectralModel M>
MRReport homogeneous_mre(const M& m, const TimeSampledPath<typename M::Element>& f, const LebesgueParameter& phi,
                         TimeNorm time_norm, double tau, const QuadratureSpec& q,
                         const typename M::Element* x0 = nullptr);

// Closed-form radial evaluation for f(t) = chi_(1,inf)(t) t^-2 exp(-xi^2/(2t^2)) on the line:
// the double integral int_1^inf int_0^inf s^-theta ||A T(s) f(t)||_1 ds dt and the growth of
// int_1^T ||f(t)||_1 dt.
struct RemarkMeasurement {
    double double_integral = 0.0;
    Verdict double_integral_verdict = Verdict::inconclusive;
    Growth inhomogeneous_growth;
};
RemarkMeasurement remark_example_measurement(double theta, const QuadratureSpec& q);

// Sup-merge of per-certificate reports (deterministic, in certificate order).
MRReport merge_reports(const std::vector<MRReport>& reports, const std::vector<std::string>& labels);

template <SpectralModel M, class Test>
MRReport sweep(const M& m, const std::vector<Certificate<typename M::Element>>& family, Test&& test) {
    std::vector<MRReport> reps;
    std::vector<std::string> labels;
    for (const auto& c : family) {
        reps.push_back(test(m, c.x));
        labels.push_back(c.label);
    }
    return merge_reports(reps, labels);
}

// Fixed certificate families.
std::vector<Certificate<std::vector<double>>> diag_certificates(const DiagonalModel& m, int n_random = 4,
                                                                std::uint64_t seed = 20240607);
std::vector<Certificate<GridField>> heat_certificates(const HeatModel& m);

GridField gaussian_field(int n, double L, int N, double width = 1.0);
GridField meanzero_field(int n, double L, int N, double width = 1.0);

}  // namespace mrlab
