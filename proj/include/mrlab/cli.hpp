#pragma once

#include <limits>
#include <string>
#include <vector>

#include "mrlab/quadrature.hpp"
#include "mrlab/report.hpp"

namespace mrlab {

struct RunConfig {
    QuadratureSpec quad;
    std::string out;
    std::uint64_t seed = 20240607;
    std::string model = "heat1d";
    std::string certificate = "family";
    std::string weight = "power";
    std::string family = "power";
    std::string compare;
    std::string source = "thermic";
    std::string forcing = "exp";
    double theta = std::numeric_limits<double>::quiet_NaN();
    double q = 1.0;
    double p = 1.0;
    double mu = 0.5;
    double eps = 1.0;
    double L = 0.0;
    int N = 0;
    double tau = 5.0;
    double dt = 1e-2;
};

const std::vector<std::string>& reproduce_presets();
// Claims of one preset; "all" concatenates every preset.
std::vector<Claim> reproduce(const std::string& preset, const RunConfig& cfg);

int run_cli(int argc, char** argv);

}  // namespace mrlab
