#pragma once

#include <span>
#include <string>
#include <vector>

namespace mrlab {

enum class Verdict { finite, diverging, inconclusive };

std::string to_string(Verdict v);

// Log-uniform node set on [t_min, t_max]; all improper integrals and
// essential suprema are discretized on it.
struct QuadratureSpec {
    double t_min = 1e-6;
    double t_max = 1e6;
    int n_nodes = 4096;
    double rel_tol = 1e-3;
    std::string rule = "log-trapezoid";

    void validate() const;
    double log_step() const;
    double node(int i) const;
    std::vector<double> nodes() const;
    double nodes_per_decade() const;

    // Same log step, range stretched by 2^k at both ends.
    QuadratureSpec widened(int k) const;
    QuadratureSpec with_range(double lo, double hi) const;
    // Same range, at most the given node density.
    QuadratureSpec capped_density(double per_decade) const;
};

// Nodes exp(log_t0 + h*j) for j in [j_lo, j_hi]; spec node i sits at j = i.
struct LogGrid {
    double log_t0 = 0.0;
    double h = 0.0;
    int j_lo = 0;
    int j_hi = 0;

    static LogGrid padded(const QuadratureSpec& q, double pad_decades);

    int size() const { return j_hi - j_lo + 1; }
    double node_at(int j) const;
    int offset_of_spec_node(int i) const { return i - j_lo; }
    std::vector<double> nodes() const;
};

struct TailClosure {
    double value = 0.0;
    bool finite = true;
};

// Local power law through two positive samples.
double power_slope(double s0, double g0, double s1, double g1);

// Integral of the power law through (s0,g0),(s1,g1) over (0, s0].
TailClosure lower_power_tail(double s0, double g0, double s1, double g1);
// Integral of the power law through (sa,ga),(sb,gb) over [sb, inf).
TailClosure upper_power_tail(double sa, double ga, double sb, double gb);

struct HalfLineIntegral {
    double value = 0.0;
    double interior = 0.0;
    double lower_tail = 0.0;
    double upper_tail = 0.0;
    bool finite = true;
};

// Log-trapezoid on log-uniform nodes plus power-law tail closures.
HalfLineIntegral integrate_half_line(std::span<const double> nodes, std::span<const double> g,
                                     bool close_lower = true, bool close_upper = true);

// Cumulative integral from 0 (with lower closure) to each node.
std::vector<double> cumulative_from_zero(std::span<const double> nodes, std::span<const double> g,
                                         bool* lower_finite = nullptr);
// Cumulative integral from each node to infinity (with upper closure).
std::vector<double> cumulative_to_infinity(std::span<const double> nodes, std::span<const double> g,
                                           bool* upper_finite = nullptr);

// Two-refinement divergence check on a sequence of estimates e0, e1, e2.
Verdict refinement_verdict(double e0, double e1, double e2, double rel_tol);

}  // namespace mrlab
