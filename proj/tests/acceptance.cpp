#include <chrono>
#include <cmath>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mrlab/besov.hpp"
#include "mrlab/cli.hpp"
#include "mrlab/interpnorms.hpp"
#include "mrlab/mrtest.hpp"
#include "mrlab/weightlab.hpp"

using namespace mrlab;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
};

void report(int n, Outcome& o) {
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << "  " << o.detail.str() << std::endl;
}

void claims_into(Outcome& o, const std::vector<Claim>& claims) {
    for (const Claim& c : claims) {
        o.pass = o.pass && c.pass();
        o.detail << c.name << "=" << c.computed << " (" << c.rel_error() << ") ";
    }
}

Outcome calderon_powers() {
    Outcome o;
    QuadratureSpec q;
    const auto start = std::chrono::steady_clock::now();
    for (double mu : {0.1, 0.25, 0.5, 0.75, 0.9}) {
        const double c = calderon_bound_L1(FunctionOnHalfLine::power(-mu), q).constant;
        const double e = std::numbers::pi / std::sin(std::numbers::pi * mu);
        o.pass = o.pass && std::abs(c / e - 1.0) < 0.01;
        o.detail << "mu=" << mu << ":" << c << " ";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.pass = o.pass && secs < 5.0;
    o.detail << "time=" << secs << "s";
    return o;
}

Outcome kalton_portal_oracle() {
    Outcome o;
    QuadratureSpec q;
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> expo(-3.0, 3.0);
    std::uniform_int_distribution<int> len(1, 8);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        std::vector<double> a(len(rng));
        for (double& v : a) v = std::pow(10.0, expo(rng));
        const DiagonalModel m(DiagonalOperator{a, AmbientNorm::l1});
        for (const auto& c : diag_certificates(m, 2, 1000 + i)) {
            const MRReport r = kp_l1_test(m, c.x, q);
            const double err = std::abs(r.constant - 1.0);
            worst = std::max(worst, err);
            o.pass = o.pass && r.verdict == Verdict::finite && err < 1e-6;
        }
    }
    o.detail << "worst |C-1|=" << worst;
    return o;
}

Outcome exp_weight(const RunConfig& cfg) {
    Outcome o;
    const auto claims = reproduce("exp-weight", cfg);
    claims_into(o, claims);
    for (const Claim& c : claims) o.pass = o.pass && c.computed < 1.0;
    return o;
}

Outcome structural() {
    Outcome o;
    double dens = 0.0;
    const HeatModel h1(1, 40.0, 1024);
    const GridField x1 = band_limited_random_field(1, 40.0, 1024, 4.0, 17);
    for (double t : {0.01, 0.1, 1.0, 10.0}) dens = std::max(dens, density_identity_error(h1, x1, t));
    const HeatModel h2(2, 20.0, 128);
    const GridField x2 = band_limited_random_field(2, 20.0, 128, 3.0, 18);
    for (double t : {0.1, 1.0}) dens = std::max(dens, density_identity_error(h2, x2, t));
    o.pass = dens < 1e-8;
    o.detail << "density=" << dens << " ";

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    QuadratureSpec q;
    q.n_nodes = 1024;
    double worst = 0.0;
    for (int k = 0; k < 50; ++k) {
        const int n = 12 + k % 7;
        std::vector<double> t(n), v(n);
        for (int i = 0; i < n; ++i) {
            t[i] = std::pow(10.0, -4.0 + 8.0 * i / (n - 1));
            v[i] = std::pow(10.0, u(rng));
        }
        const Sandwich s = stieltjes_sandwich(FunctionOnHalfLine::sampled(t, v), q);
        for (std::size_t i = 0; i < s.nodes.size(); ++i) {
            worst = std::max(worst, s.S[i] / s.PQ[i] - 1.0);
            worst = std::max(worst, s.PQ[i] / (2.0 * s.S[i]) - 1.0);
        }
    }
    o.pass = o.pass && worst <= 1e-10;
    o.detail << "sandwich excess=" << worst << " ";

    QuadratureSpec base;
    std::vector<KCurve> curves;
    curves.push_back(k_scalar_curve(1.0, 1.0, base));
    curves.push_back(k_scalar_curve(0.1, 3.0, base));
    const DiagonalModel d(DiagonalOperator{{0.5, 1.0, 4.0}, AmbientNorm::l1});
    for (const auto& c : diag_certificates(d)) {
        curves.push_back(k_thermic_curve(d, c.x, base));
        curves.push_back(k_modulus_curve(d, c.x, base));
    }
    const HeatModel h(1, 80.0, 4096);
    for (const auto& c : heat_certificates(h)) {
        curves.push_back(k_thermic_curve(h, c.x, base));
        curves.push_back(k_modulus_curve(h, c.x, base));
        curves.push_back(smoothness2_curve(c.x, 1.0, base.with_range(1e-3, 100.0).nodes()));
    }
    int bad = 0;
    for (const KCurve& c : curves) bad += c.admissible() ? 0 : 1;
    o.pass = o.pass && bad == 0;
    o.detail << "curves=" << curves.size() << " inadmissible=" << bad;
    return o;
}

template <class M>
void verdicts_agree(Outcome& o, const M& m, const std::vector<Certificate<typename M::Element>>& family,
                    const QuadratureSpec& q) {
    for (const auto& c : family) {
        const Verdict kp = kp_l1_test(m, c.x, q).verdict;
        for (double th : {0.25, 0.5}) {
            const Verdict w = weighted_l1_test(m, c.x, FunctionOnHalfLine::power(-th), q).verdict;
            o.pass = o.pass && w == kp;
            o.detail << c.label << "@" << th << ":" << to_string(w) << "/" << to_string(kp) << " ";
        }
    }
}

Outcome weighted_equivalence(const RunConfig& cfg) {
    Outcome o;
    const DiagonalModel d(DiagonalOperator{{0.5, 2.0, 7.0}, AmbientNorm::l1});
    verdicts_agree(o, d, diag_certificates(d, 4, cfg.seed), cfg.quad);
    const HeatModel h(1, 1024.0, 32768);
    verdicts_agree(o, h, heat_certificates(h), cfg.quad);
    return o;
}

}  // namespace

int main() {
    RunConfig cfg;
    bool all = true;
    auto run = [&all](int n, auto&& body) {
        Outcome o;
        try {
            o = body();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "error: " << e.what();
        }
        all = all && o.pass;
        report(n, o);
    };
    auto from_preset = [&cfg](const char* name) {
        return [&cfg, name] {
            Outcome o;
            claims_into(o, reproduce(name, cfg));
            return o;
        };
    };
    run(1, calderon_powers);
    run(2, from_preset("laplacian-b11"));
    run(3, from_preset("remark-l1c"));
    run(4, kalton_portal_oracle);
    run(5, [&cfg] { return exp_weight(cfg); });
    run(6, from_preset("resolvent"));
    run(7, from_preset("besov-thermic"));
    run(8, structural);
    run(9, [&cfg] { return weighted_equivalence(cfg); });
    return all ? 0 : 1;
}
