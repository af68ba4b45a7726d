#include "mrlab/function_on_half_line.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mrlab/errors.hpp"

namespace mrlab {

FunctionOnHalfLine FunctionOnHalfLine::constant(double c) {
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("constant must be positive");
    FunctionOnHalfLine f;
    f.family_ = Family::constant;
    f.params_ = {c};
    return f;
}

FunctionOnHalfLine FunctionOnHalfLine::power(double e, double c) {
    if (!(c > 0.0) || !std::isfinite(c) || !std::isfinite(e)) throw DomainError("bad power parameters");
    FunctionOnHalfLine f;
    f.family_ = Family::power;
    f.params_ = {e, c};
    return f;
}

FunctionOnHalfLine FunctionOnHalfLine::exponential(double rate) {
    if (!(rate > 0.0) || !std::isfinite(rate)) throw DomainError("rate must be positive");
    FunctionOnHalfLine f;
    f.family_ = Family::exponential;
    f.params_ = {rate};
    return f;
}

FunctionOnHalfLine FunctionOnHalfLine::min_power(double e) {
    if (!std::isfinite(e)) throw DomainError("bad exponent");
    FunctionOnHalfLine f;
    f.family_ = Family::min_power;
    f.params_ = {e};
    return f;
}

FunctionOnHalfLine FunctionOnHalfLine::power_log(double e, double b) {
    if (!std::isfinite(e) || !std::isfinite(b)) throw DomainError("bad exponents");
    FunctionOnHalfLine f;
    f.family_ = Family::power_log;
    f.params_ = {e, b};
    return f;
}

FunctionOnHalfLine FunctionOnHalfLine::sampled(std::vector<double> nodes, std::vector<double> values) {
    if (nodes.size() != values.size()) throw InvalidSpec("sampled function: size mismatch");
    if (nodes.size() < 2) throw InvalidSpec("sampled function: need at least two nodes");
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!(nodes[i] > 0.0) || !std::isfinite(nodes[i])) throw InvalidSpec("sampled function: bad node");
        if (i > 0 && !(nodes[i] > nodes[i - 1])) throw InvalidSpec("sampled function: nodes not increasing");
        if (!(values[i] >= 0.0) || !std::isfinite(values[i])) throw DomainError("sampled function: bad value");
    }
    FunctionOnHalfLine f;
    f.family_ = Family::sampled;
    f.log_nodes_.resize(nodes.size());
    std::transform(nodes.begin(), nodes.end(), f.log_nodes_.begin(), [](double t) { return std::log(t); });
    f.nodes_ = std::move(nodes);
    f.values_ = std::move(values);
    return f;
}

double FunctionOnHalfLine::sampled_value(double t) const {
    const double u = std::log(t);
    const std::size_t n = nodes_.size();
    std::size_t i;
    if (u <= log_nodes_.front()) {
        i = 0;
    } else if (u >= log_nodes_.back()) {
        i = n - 2;
    } else {
        i = static_cast<std::size_t>(std::upper_bound(log_nodes_.begin(), log_nodes_.end(), u) - log_nodes_.begin()) - 1;
        if (u == log_nodes_[i]) return values_[i];
    }
    const double u0 = log_nodes_[i], u1 = log_nodes_[i + 1];
    const double v0 = values_[i], v1 = values_[i + 1];
    const double a = (u - u0) / (u1 - u0);
    if (v0 > 0.0 && v1 > 0.0) return std::exp(std::log(v0) + a * (std::log(v1) - std::log(v0)));
    // zero endpoint: linear in ln t inside, zero outside
    if (a < 0.0 || a > 1.0) return 0.0;
    return v0 + a * (v1 - v0);
}

double FunctionOnHalfLine::operator()(double t) const {
    if (!(t > 0.0)) throw DomainError("argument must be positive");
    switch (family_) {
        case Family::constant: return params_[0];
        case Family::power: return params_[1] * std::pow(t, params_[0]);
        case Family::exponential: return std::exp(-params_[0] * t);
        case Family::min_power: return std::pow(std::min(t, 1.0), params_[0]);
        case Family::power_log: return std::pow(t, params_[0]) * std::pow(1.0 + std::abs(std::log(t)), params_[1]);
        case Family::sampled: return sampled_value(t);
    }
    return 0.0;
}

double FunctionOnHalfLine::log_value(double t) const {
    if (!(t > 0.0)) throw DomainError("argument must be positive");
    switch (family_) {
        case Family::constant: return std::log(params_[0]);
        case Family::power: return std::log(params_[1]) + params_[0] * std::log(t);
        case Family::exponential: return -params_[0] * t;
        case Family::min_power: return params_[0] * std::log(std::min(t, 1.0));
        case Family::power_log: return params_[0] * std::log(t) + params_[1] * std::log1p(std::abs(std::log(t)));
        case Family::sampled: {
            const double v = sampled_value(t);
            return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity();
        }
    }
    return 0.0;
}

std::vector<double> FunctionOnHalfLine::sample(std::span<const double> ts) const {
    std::vector<double> out(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) out[i] = (*this)(ts[i]);
    return out;
}

std::string FunctionOnHalfLine::tag() const {
    std::ostringstream os;
    os.precision(17);
    switch (family_) {
        case Family::constant: os << "constant(" << params_[0] << ")"; break;
        case Family::power: os << "power(e=" << params_[0] << ",c=" << params_[1] << ")"; break;
        case Family::exponential: os << "exponential(rate=" << params_[0] << ")"; break;
        case Family::min_power: os << "min_power(e=" << params_[0] << ")"; break;
        case Family::power_log: os << "power_log(e=" << params_[0] << ",b=" << params_[1] << ")"; break;
        case Family::sampled: os << "sampled(n=" << nodes_.size() << ")"; break;
    }
    return os.str();
}

void FunctionOnHalfLine::require_positive(std::span<const double> ts) const {
    for (double t : ts) {
        const double v = (*this)(t);
        if (!(v > 0.0) || !std::isfinite(v)) {
            std::ostringstream os;
            os << "function not positive and finite at t=" << t;
            throw DomainError(os.str());
        }
    }
}

}  // namespace mrlab
