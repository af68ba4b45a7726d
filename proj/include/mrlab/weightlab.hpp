#pragma once

#include <string>
#include <vector>

#include "mrlab/function_on_half_line.hpp"
#include "mrlab/quadrature.hpp"

namespace mrlab {

struct ConditionReport {
    std::string name;
    double constant = 0.0;  // +inf when a tail closure diverges
    double arg_sup = 0.0;
    QuadratureSpec truncation;
    Verdict verdict = Verdict::inconclusive;
    bool overflow = false;
    // ess sup is taken as the max over nodes
    bool node_max_ess_sup = true;

    bool infinite() const;
};

FunctionOnHalfLine hardy_apply(const FunctionOnHalfLine& f, const QuadratureSpec& q);
FunctionOnHalfLine adjoint_apply(const FunctionOnHalfLine& f, const QuadratureSpec& q);

// [w]_{P,L1} = sup Qw/w
ConditionReport bound_P_L1(const FunctionOnHalfLine& w, const QuadratureSpec& q);
// [w]_{Q,L1} = sup Pw/w
ConditionReport bound_Q_L1(const FunctionOnHalfLine& w, const QuadratureSpec& q);
// [w]_{P,Linf} = sup w P(1/w)
ConditionReport bound_P_Linf(const FunctionOnHalfLine& w, const QuadratureSpec& q);
// [w]_{Q,Linf} = sup w Q(1/w)
ConditionReport bound_Q_Linf(const FunctionOnHalfLine& w, const QuadratureSpec& q);
// sup Sw/w
ConditionReport calderon_bound_L1(const FunctionOnHalfLine& w, const QuadratureSpec& q);
// sup w S(1/w)
ConditionReport calderon_bound_Linf(const FunctionOnHalfLine& w, const QuadratureSpec& q);

double stieltjes(const FunctionOnHalfLine& w, double t, const QuadratureSpec& q);

struct Sandwich {
    std::vector<double> nodes;
    std::vector<double> S;   // Stieltjes transform
    std::vector<double> PQ;  // Pw + Qw
};
Sandwich stieltjes_sandwich(const FunctionOnHalfLine& w, const QuadratureSpec& q);

bool quasiconcave_check(const FunctionOnHalfLine& phi, const QuadratureSpec& q);

struct DilationIndices {
    double alpha = 0.0;
    double beta = 0.0;
    std::vector<double> t;        // dilation arguments
    std::vector<double> s_phi;    // sup_r phi(rt)/phi(r)
};
DilationIndices dilation_indices(const FunctionOnHalfLine& phi, const QuadratureSpec& q);

struct IndexCheck {
    double sup_value = 0.0;
    double arg_sup = 0.0;
    Verdict verdict = Verdict::inconclusive;
    double index = 0.0;          // alpha for the lower check, beta for the upper one
    bool index_condition = false;  // alpha > 0 resp. beta < 1
    bool consistent = false;     // finite sup <=> index_condition
};
// sup_t (1/phi(t)) int_0^t phi(s)/s ds against alpha > 0
IndexCheck integral_index_check(const FunctionOnHalfLine& phi, const QuadratureSpec& q);
// sup_t (t/phi(t)) int_t^inf phi(s)/s^2 ds against beta < 1
IndexCheck integral_index_check_upper(const FunctionOnHalfLine& phi, const QuadratureSpec& q);

FunctionOnHalfLine least_concave_majorant(const FunctionOnHalfLine& phi);
FunctionOnHalfLine least_concave_majorant(const FunctionOnHalfLine& phi, const QuadratureSpec& q);

// phi(t) = inf_s max(1, t/s) s / w(s)
FunctionOnHalfLine linf_phi_representation(const FunctionOnHalfLine& w, const QuadratureSpec& q);

// v(t) = (1/t) int_0^t w + int_t^inf w(s)/s ds
FunctionOnHalfLine fundamental_weight(const FunctionOnHalfLine& w, const QuadratureSpec& q);

bool ratio_monotone_check(const FunctionOnHalfLine& v, double t, const QuadratureSpec& q);
bool log_convexity_check(const FunctionOnHalfLine& v, const QuadratureSpec& q);
bool non_increasing_check(const FunctionOnHalfLine& v, const QuadratureSpec& q);

struct TailRatio {
    double value = 0.0;
    bool stable = false;
};
TailRatio tail_ratio(const FunctionOnHalfLine& v, double t, const QuadratureSpec& q);

}  // namespace mrlab
