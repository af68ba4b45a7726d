#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "mrlab/errors.hpp"
#include "mrlab/interpnorms.hpp"

using namespace mrlab;

namespace {

const double kGauss = 4.0 * std::exp(-0.5);

GridField gaussian(double L, int N, double scale = 1.0) {
    return GridField::from_function(L, N, [scale](double x) { return cplx(std::exp(-scale * scale * x * x / 2.0), 0.0); });
}

bool sandwich(const KCurve& c, double tol = 1e-9) {
    // K(1) by log-linear interpolation on the nodes
    std::size_t j = 0;
    while (j + 1 < c.nodes.size() && c.nodes[j + 1] < 1.0) ++j;
    if (j + 1 >= c.nodes.size()) return false;
    const double w = std::log(1.0 / c.nodes[j]) / std::log(c.nodes[j + 1] / c.nodes[j]);
    const double k1 = c.values[j] + w * (c.values[j + 1] - c.values[j]);
    for (std::size_t i = 0; i < c.nodes.size(); ++i) {
        const double t = c.nodes[i];
        if (c.values[i] < std::min(1.0, t) * k1 * (1.0 - tol) - tol) return false;
        if (c.values[i] > std::max(1.0, t) * k1 * (1.0 + tol) + tol) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("parameter norms") {
    QuadratureSpec q;
    const auto t = q.nodes();
    std::vector<double> g(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) g[i] = std::min(t[i], 1.0) / t[i];
    // int t^{-3/2} min(t,1) dt = 4
    const PhiNorm a = phi_norm(t, g, LebesgueParameter::power_L1(0.5));
    CHECK(a.verdict == Verdict::finite);
    CHECK(a.value == doctest::Approx(4.0).epsilon(1e-4));
    // node max: t = 1 sits between nodes
    const PhiNorm b = phi_norm(t, g, LebesgueParameter::power_Linf(0.5));
    CHECK(b.value <= 1.0);
    CHECK(b.value == doctest::Approx(1.0).epsilon(0.5 * q.log_step()));

    CHECK_THROWS_AS(LebesgueParameter::power(0.5, 2.0), InvalidSpec);
    CHECK_NOTHROW(LebesgueParameter::power_L1(0.3).require_nontrivial(q));
    CHECK_THROWS_AS(LebesgueParameter::L1(FunctionOnHalfLine::constant(1.0)).require_nontrivial(q), DomainError);
}

TEST_CASE("scalar couple") {
    CHECK(k_scalar(2.0, 1.0, 3.0) == 3.0);
    CHECK(k_scalar(2.0, 5.0, 3.0) == 6.0);
    CHECK(k_scalar(0.7, 2.0, 0.0) == 0.0);
    CHECK_THROWS_AS(k_scalar(0.0, 1.0, 1.0), DomainError);

    QuadratureSpec q;
    const KCurve c = k_scalar_curve(1.0, 1.0, q);
    CHECK(c.admissible());
    CHECK(sandwich(c));
    for (std::size_t i = 0; i < c.nodes.size(); i += 97) CHECK(c.values[i] == doctest::Approx(std::min(c.nodes[i], 1.0)));
    CHECK(kphi_norm(c, LebesgueParameter::power_L1(0.5), q) == doctest::Approx(4.0).epsilon(1e-4));
    CHECK(kphi_norm(c, LebesgueParameter::power_Linf(0.5), q) == doctest::Approx(1.0).epsilon(0.5 * q.log_step()));

    // domination is inherited by the parameter norm
    const KCurve d = k_scalar_curve(2.0, 1.5, q);
    for (double th : {0.25, 0.5, 0.75}) {
        CHECK(kphi_norm(c, LebesgueParameter::power_L1(th), q) <= kphi_norm(d, LebesgueParameter::power_L1(th), q));
        CHECK(kphi_norm(c, LebesgueParameter::power_Linf(th), q) <= kphi_norm(d, LebesgueParameter::power_Linf(th), q));
    }
}

TEST_CASE("concave regularization") {
    const std::vector<double> t = {0.1, 1.0, 2.0, 3.0, 10.0};
    const KCurve c = KCurve::make(t, {0.5, 0.2, 3.0, 1.0, 2.0}, KCurve::Source::thermic);
    CHECK(c.admissible());
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(c.values[i] >= c.raw[i] - 1e-15);
    CHECK_FALSE(KCurve::admissible(t, {0.5, 0.2, 3.0, 1.0, 2.0}));
    CHECK_THROWS_AS(KCurve::make({1.0, 0.5}, {1.0, 1.0}, KCurve::Source::thermic), InvalidSpec);
    CHECK_THROWS_AS(KCurve::make({0.5, 1.0}, {1.0, -1.0}, KCurve::Source::thermic), NumericError);
}

TEST_CASE("modulus of continuity") {
    QuadratureSpec q;
    const DiagonalModel d(DiagonalOperator{{1.0}, AmbientNorm::l1});
    CHECK(k_modulus(d, {1.0}, 1.0, q) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-10));
    CHECK(k_modulus(d, {1.0}, 1e-6, q) < 2e-6);
    const KCurve c = k_modulus_curve(d, {1.0}, q);
    CHECK(c.admissible());
    CHECK(sandwich(c));

    // omega(t) <= int_0^t ||A T(s) x|| ds on the grid
    const HeatModel h(1, 40.0, 2048);
    const GridField g = gaussian(40.0, 2048);
    const auto s = model_time_spec(h, q).nodes();
    std::vector<double> a(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) a[i] = generator_semigroup(h, s[i], g).lp_norm(1.0);
    const std::vector<double> cum = cumulative_from_zero(s, a);
    for (std::size_t i = 0; i < s.size(); i += 25) {
        CHECK(k_modulus(h, g, s[i], q) <= cum[i] * (1.0 + 1e-4));
        CHECK(k_modulus(h, g, s[i], q) > 0.0);
    }
    CHECK(k_modulus(h, g, 1e-6, q) < 1e-4);
}

TEST_CASE("thermic bracket") {
    QuadratureSpec q;
    const DiagonalModel d(DiagonalOperator{{1.0}, AmbientNorm::l1});
    for (double t : {1e-3, 1e-2, 0.1, 1.0, 10.0, 100.0}) {
        const KBracket b = k_thermic(d, {1.0}, t, q);
        CHECK(b.lower <= b.upper * (1.0 + 1e-12));
        // explicit couple: K(t) = min(t, 2) for x = 1 with the graph norm (1+a)|x|
        const double exact = std::min(t * 2.0, 1.0);
        CHECK(b.lower <= exact * (1.0 + 1e-9));
        CHECK(b.upper >= std::min(t, 1.0) * 0.5);
        if (t >= 10.0) CHECK(b.upper / b.lower < 4.0);
        if (t <= 1e-2) CHECK(b.upper <= 4.0 * t);
    }
    const HeatModel h(1, 40.0, 2048);
    const GridField g = gaussian(40.0, 2048);
    const KBracket b = k_thermic(h, g, 1.0, q);
    CHECK(b.lower > 0.0);
    CHECK(b.lower <= b.upper);
    const KCurve c = k_thermic_curve(h, g, q);
    CHECK(c.admissible());
    CHECK(sandwich(c));
    CHECK_THROWS_AS(k_thermic(h, g, 0.0, q), DomainError);
}

TEST_CASE("second differences") {
    const GridField one = GridField::from_function(20.0, 512, [](double) { return cplx(1.0, 0.0); });
    CHECK(modulus_smoothness2(one, 1.0, 1.0).value < 1e-13);
    // affine on the interior: only the wrap-around cells see the jump
    const GridField lin = GridField::from_function(20.0, 512, [](double x) { return cplx(x, 0.0); });
    const SecondDifference s = modulus_smoothness2(lin, 1.0, std::numeric_limits<double>::infinity());
    CHECK(s.shift_cells >= 1);
    const GridField g = gaussian(20.0, 512);
    CHECK_THROWS_AS(modulus_smoothness2(g, 5.0, 1.0), DomainError);
    CHECK_THROWS_AS(modulus_smoothness2(g, 1e-4, 1.0), ResolutionError);
    const SecondDifference sup = modulus_smoothness2_sup(g, 2.0, 1.0);
    CHECK(sup.value >= modulus_smoothness2(g, 1.0, 1.0).value);

    QuadratureSpec q;
    q.t_min = 1e-2;
    q.t_max = 1e2;
    q.n_nodes = 65;
    const KCurve c = smoothness2_curve(gaussian(80.0, 8192), 1.0, q.nodes());
    CHECK(c.admissible());
}

TEST_CASE("second difference against the thermic bracket") {
    QuadratureSpec q;
    q.t_min = 1e-2;
    q.t_max = 1e2;
    q.n_nodes = 41;
    const auto t = q.nodes();
    std::pair<double, double> prev{0.0, 0.0};
    for (int N : {8192, 16384}) {
        const GridField g = gaussian(80.0, N);
        const HeatModel h(1, 80.0, N);
        const KCurve w = smoothness2_curve(g, 1.0, t);
        double lo = 1e300, hi = 0.0;
        for (std::size_t i = 0; i < t.size(); ++i) {
            const KBracket b = k_thermic(h, g, t[i], QuadratureSpec{});
            const double r = w.raw[i] / b.upper;
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        CHECK(lo > 0.0);
        CHECK(hi / lo < 100.0);
        if (prev.first > 0.0) {
            CHECK(std::abs(lo / prev.first - 1.0) < 0.1);
            CHECK(std::abs(hi / prev.second - 1.0) < 0.1);
        }
        prev = {lo, hi};
    }
}

TEST_CASE("homogeneous seminorm closed forms") {
    QuadratureSpec q;
    const HeatModel h(1, 1024.0, 32768);
    const GridField g = gaussian(1024.0, 32768);
    for (double th : {0.25, 0.5, 0.75}) {
        const SeminormReport r = homogeneous_seminorm(h, g, LebesgueParameter::power_L1(th), q);
        CHECK(r.verdict == Verdict::finite);
        CHECK(r.value == doctest::Approx(kGauss * std::numbers::pi / std::sin(std::numbers::pi * th)).epsilon(1e-3));
    }
    // sup_t t^{1/2} / (1 + t) = 1/2
    const SeminormReport s = homogeneous_seminorm(h, g, LebesgueParameter::power_Linf(0.5), q);
    CHECK(s.value == doctest::Approx(kGauss / 2.0).epsilon(1e-3));

    const DiagonalModel d(DiagonalOperator{{1.0}, AmbientNorm::l1});
    const SeminormReport u = homogeneous_seminorm(d, {1.0}, LebesgueParameter::L1(FunctionOnHalfLine::constant(1.0)), q);
    CHECK(u.value == doctest::Approx(1.0).epsilon(1e-5));
}

TEST_CASE("dilation homogeneity") {
    QuadratureSpec q;
    const HeatModel h(1, 1024.0, 32768);
    for (double th : {0.25, 0.5, 0.75}) {
        const auto phi = LebesgueParameter::power_L1(th);
        const double base = homogeneous_seminorm(h, gaussian(1024.0, 32768), phi, q).value;
        for (double lam : {0.5, 2.0}) {
            const double v = homogeneous_seminorm(h, gaussian(1024.0, 32768, lam), phi, q).value;
            CHECK(v / base == doctest::Approx(std::pow(lam, 2.0 * th - 1.0)).epsilon(0.01));
        }
    }
}

TEST_CASE("psi seminorms") {
    QuadratureSpec q;
    const DiagonalModel d(DiagonalOperator{{1.0}, AmbientNorm::l1});
    const auto L1 = LebesgueParameter::L1(FunctionOnHalfLine::constant(1.0));
    CHECK(psi_seminorm(d, {1.0}, L1, PsiSymbol::parse("psi3"), q).value == doctest::Approx(1.0).epsilon(1e-5));
    const SeminormReport div = psi_seminorm(d, {1.0}, L1, PsiSymbol::parse("psi2"), q);
    CHECK(div.verdict == Verdict::diverging);
    // truncated at T the integral is ln(1 + T)
    QuadratureSpec qt = q.with_range(q.t_min, 1e3);
    const auto t = qt.nodes();
    std::vector<double> g(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) g[i] = 1.0 / (1.0 + t[i]);
    CHECK(cumulative_from_zero(t, g).back() == doctest::Approx(std::log1p(1e3)).epsilon(1e-4));

    const DiagonalModel d3(DiagonalOperator{{0.3, 1.0, 7.0}, AmbientNorm::l1});
    const std::vector<double> x = {1.0, -2.0, 0.5};
    for (double th : {0.25, 0.5, 0.75}) {
        const auto phi = LebesgueParameter::power_L1(th);
        CHECK(psi_seminorm(d3, x, phi, PsiSymbol::parse("eta"), q).value ==
              doctest::Approx(homogeneous_seminorm(d3, x, phi, q).value).epsilon(1e-12));
    }
    // heat runs T(t) = e^{-kappa t A}: the eta seminorm picks up kappa^{1-theta}
    const HeatModel h(1, 1024.0, 32768);
    const GridField f = gaussian(1024.0, 32768);
    const double k = h.time_scale();
    for (double th : {0.25, 0.5}) {
        const auto phi = LebesgueParameter::power_L1(th);
        const double a = psi_seminorm(h, f, phi, PsiSymbol::parse("eta"), q).value;
        const double b = homogeneous_seminorm(h, f, phi, q).value;
        CHECK(a == doctest::Approx(std::pow(k, 1.0 - th) * b).epsilon(1e-3));
    }
}

TEST_CASE("psi seminorm equivalence") {
    CHECK(equivalence_ratio<double>([](const double& v) { return v; }, [](const double& v) { return v; }, {1.0, 2.0}) ==
          std::pair<double, double>{1.0, 1.0});

    std::vector<double> scales;
    for (int j = -4; j <= 4; ++j) scales.push_back(std::pow(2.0, 0.5 * j));
    for (double th : {0.25, 0.5, 0.75}) {
        const auto phi = LebesgueParameter::power_L1(th);
        for (const char* name : {"psi1", "psi3", "eta"}) {
            const PsiSymbol psi = PsiSymbol::parse(name);
            double width[2];
            int idx = 0;
            for (int refine : {1, 2}) {
                QuadratureSpec q;
                q.n_nodes = q.n_nodes * refine;
                const int N = 8192 * refine;
                const HeatModel h(1, 256.0, N);
                const auto ratio = equivalence_ratio<double>(
                    [&](const double& s) { return psi_seminorm(h, gaussian(256.0, N, s), phi, psi, q).value; },
                    [&](const double& s) { return homogeneous_seminorm(h, gaussian(256.0, N, s), phi, q).value; }, scales);
                CHECK(ratio.first > 0.0);
                width[idx++] = ratio.second / ratio.first;
            }
            CHECK(width[1] / width[0] == doctest::Approx(1.0).epsilon(0.05));
        }
    }
}
