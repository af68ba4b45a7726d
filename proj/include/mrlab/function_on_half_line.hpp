#pragma once

#include <span>
#include <string>
#include <vector>

namespace mrlab {

// Non-negative scalar function on (0, inf): a tagged closed form or a table
// interpolated log-log linearly and extrapolated by the boundary power law.
class FunctionOnHalfLine {
public:
    enum class Family { constant, power, exponential, min_power, power_log, sampled };

    static FunctionOnHalfLine constant(double c);
    // c * t^e
    static FunctionOnHalfLine power(double e, double c = 1.0);
    // exp(-rate * t)
    static FunctionOnHalfLine exponential(double rate = 1.0);
    // min(t, 1)^e
    static FunctionOnHalfLine min_power(double e = 1.0);
    // t^e * (1 + |ln t|)^b
    static FunctionOnHalfLine power_log(double e, double b);
    static FunctionOnHalfLine sampled(std::vector<double> nodes, std::vector<double> values);

    double operator()(double t) const;
    double log_value(double t) const;
    std::vector<double> sample(std::span<const double> ts) const;

    Family family() const { return family_; }
    bool is_sampled() const { return family_ == Family::sampled; }
    std::string tag() const;
    const std::vector<double>& params() const { return params_; }
    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& values() const { return values_; }

    // Throws DomainError unless the function is positive and finite at every node.
    void require_positive(std::span<const double> ts) const;

private:
    Family family_ = Family::constant;
    std::vector<double> params_;
    std::vector<double> nodes_;
    std::vector<double> values_;
    std::vector<double> log_nodes_;

    double sampled_value(double t) const;
};

}  // namespace mrlab
