#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <numbers>

#include "mrlab/calculus.hpp"
#include "mrlab/errors.hpp"
#include "mrlab/grid_field.hpp"

using namespace mrlab;

namespace {

const double kGauss = 4.0 * std::exp(-0.5);

double max_abs_diff(const GridField& a, const GridField& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

GridField gaussian(double L, int N) {
    return GridField::from_function(L, N, [](double x) { return cplx(std::exp(-x * x / 2.0), 0.0); });
}

}  // namespace

TEST_CASE("grid field basics") {
    CHECK_THROWS_AS(GridField(3, 1.0, 64), InvalidSpec);
    CHECK_THROWS_AS(GridField(1, 1.0, 48), InvalidSpec);
    CHECK_THROWS_AS(GridField(1, -1.0, 64), InvalidSpec);
    const GridField g = gaussian(40.0, 4096);
    CHECK(g.round_trip_error() < 1e-13);
    CHECK(g.lp_norm(1.0) == doctest::Approx(std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-12));
    CHECK(g.lp_norm(2.0) == doctest::Approx(std::pow(std::numbers::pi, 0.25)).epsilon(1e-12));
    CHECK(g.lp_norm(std::numeric_limits<double>::infinity()) == doctest::Approx(1.0));
    CHECK(g.frequency(1) == doctest::Approx(std::numbers::pi / 40.0));
    CHECK(g.lowest_frequency() == doctest::Approx(std::numbers::pi / 40.0));

    const auto dir = std::filesystem::temp_directory_path() / "mrlab_field_test";
    std::filesystem::create_directories(dir);
    const GridField s = gaussian(8.0, 64);
    s.write((dir / "f.csv").string(), (dir / "f.json").string());
    const GridField r = GridField::read((dir / "f.csv").string(), (dir / "f.json").string());
    CHECK(r.same_geometry(s));
    CHECK(max_abs_diff(r, s) == 0.0);
}

TEST_CASE("diagonal semigroup") {
    DiagonalOperator A{{1.0, 2.0, 4.0}, AmbientNorm::l1};
    const auto x0 = diag_semigroup(A, 0.0, {1.0, 1.0, 1.0});
    CHECK(x0 == std::vector<double>{1.0, 1.0, 1.0});
    DiagonalOperator B{{3.0}, AmbientNorm::l1};
    CHECK(diag_AT(B, 1.0, {2.0})[0] == doctest::Approx(6.0 * std::exp(-3.0)));
    CHECK_THROWS_AS((DiagonalOperator{{-1.0}, AmbientNorm::l1}).validate(), InvalidSpec);

    // int_0^inf a e^{-ta} dt = 1 by quadrature
    QuadratureSpec q;
    DiagonalOperator C{{1.0}, AmbientNorm::l1};
    const auto t = q.nodes();
    std::vector<double> g(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) g[i] = diag_AT(C, t[i], {1.0})[0];
    CHECK(integrate_half_line(t, g).value == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("semigroup law on both models") {
    const DiagonalModel d(DiagonalOperator{{0.5, 1.0, 3.0}, AmbientNorm::l1});
    const std::vector<double> x = {1.0, -2.0, 0.5};
    const HeatModel h(1, 40.0, 1024);
    const GridField g = gaussian(40.0, 1024);
    for (double s : {0.1, 1.0, 10.0})
        for (double t : {0.1, 1.0, 10.0}) {
            const auto a = semigroup(d, t, semigroup(d, s, x));
            const auto b = semigroup(d, t + s, x);
            for (std::size_t i = 0; i < x.size(); ++i) CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-10));
            CHECK(max_abs_diff(semigroup(h, t, semigroup(h, s, g)), semigroup(h, t + s, g)) < 1e-10);
        }
}

TEST_CASE("heat multipliers and the Gaussian profile") {
    const GridField g = gaussian(40.0, 4096);
    CHECK(max_abs_diff(heat_multiplier_apply(g, [](double, double) { return 1.0; }, 1.0), g) < 1e-13);
    const HeatModel h(1, 40.0, 4096);
    const GridField t1 = semigroup(h, 1.0, g);
    const GridField oracle = RadialProfile::gaussian_heat(1, 1.0).sample(40.0, 4096);
    CHECK(max_abs_diff(t1, oracle) < 1e-8);
    const GridField via = heat_multiplier_apply(g, [](double lam, double t) { return std::exp(-0.5 * t * lam); }, 1.0);
    CHECK(max_abs_diff(via, oracle) < 1e-8);
}

TEST_CASE("density identity") {
    const GridField x = band_limited_random_field(1, 40.0, 1024, 4.0, 99);
    const HeatModel h(1, 40.0, 1024);
    for (double t : {0.1, 1.0, 5.0}) CHECK(density_identity_error(h, x, t) < 1e-8);
    const GridField y = band_limited_random_field(2, 20.0, 128, 3.0, 5);
    CHECK(density_identity_error(HeatModel(2, 20.0, 128), y, 1.0) < 1e-8);
}

TEST_CASE("radial norms") {
    QuadratureSpec q;
    CHECK(radial_lp_norm(1.0, RadialProfile::gaussian_heat(1, 0.0), ProfileKind::laplacian, q) ==
          doctest::Approx(kGauss).epsilon(1e-6));
    CHECK(radial_lp_norm(1.0, RadialProfile::gaussian_heat(1, 1.0), ProfileKind::laplacian, q) ==
          doctest::Approx(kGauss / 2.0).epsilon(1e-6));
    CHECK(radial_lp_norm(1.0, RadialProfile::remark_example(2.0, 0.0), ProfileKind::laplacian, q) ==
          doctest::Approx(kGauss / 8.0).epsilon(1e-6));
    // n = 2: int |r^2 - 2| e^{-r^2/2} r dr * 2 pi = 8 pi / e
    CHECK(radial_lp_norm(1.0, RadialProfile::gaussian_heat(2, 0.0), ProfileKind::laplacian, q) ==
          doctest::Approx(8.0 * std::numbers::pi / std::numbers::e).epsilon(1e-6));
    CHECK_THROWS_AS(radial_lp_norm(2.0, RadialProfile::gaussian_heat(1, 0.0), ProfileKind::value, q), InvalidSpec);
}

TEST_CASE("radial norms agree with grid sums") {
    QuadratureSpec q;
    for (double t : {0.0, 1.0, 10.0}) {
        const auto prof = RadialProfile::gaussian_heat(1, t);
        const GridField f = prof.sample(40.0, 4096);
        CHECK(radial_lp_norm(1.0, prof, ProfileKind::value, q) == doctest::Approx(f.lp_norm(1.0)).epsilon(1e-6));
        const HeatModel h(1, 40.0, 4096);
        const GridField lap = operator_action(h, f);
        // Riemann sums of |lap f| lose O(dx^2) at the sign changes
        CHECK(radial_lp_norm(1.0, prof, ProfileKind::laplacian, q) == doctest::Approx(lap.lp_norm(1.0)).epsilon(1e-4));
    }
}

TEST_CASE("psi calculus") {
    const DiagonalModel d(DiagonalOperator{{1.0}, AmbientNorm::l1});
    CHECK(psi_calculus(d, PsiSymbol::parse("psi2"), 1.0, {1.0})[0] == doctest::Approx(0.5));
    CHECK(std::abs(psi_calculus(d, PsiSymbol::parse("psi1"), 1e-12, {1.0})[0]) < 1e-11);
    CHECK(PsiSymbol::parse("frac_eps:0.5").eps == doctest::Approx(0.5));
    CHECK_THROWS_AS(PsiSymbol::parse("nope"), InvalidSpec);

    // eta(tA)x/t = A e^{-tA} x; on diag T(t) = e^{-tA}
    const DiagonalModel d3(DiagonalOperator{{0.3, 1.0, 7.0}, AmbientNorm::l1});
    const std::vector<double> x = {1.0, 2.0, -1.0};
    const PsiSymbol eta = PsiSymbol::parse("eta");
    for (double t : {0.01, 1.0, 30.0}) {
        auto e = psi_calculus(d3, eta, t, x);
        const auto at = generator_semigroup(d3, t, x);
        for (std::size_t i = 0; i < x.size(); ++i) CHECK(e[i] / t == doctest::Approx(at[i]).epsilon(1e-12));
    }
    // heat runs T(t) = e^{-kappa t A}, so eta(tA)/t = A T(t/kappa)
    const HeatModel h(1, 40.0, 512);
    const GridField g = gaussian(40.0, 512);
    const double k = h.time_scale();
    for (double t : {0.1, 2.0}) {
        GridField e = psi_calculus(h, eta, t, g);
        e *= 1.0 / t;
        CHECK(max_abs_diff(e, generator_semigroup(h, t / k, g)) < 1e-12);
    }
}

TEST_CASE("analyticity surrogate") {
    const DiagonalModel d(DiagonalOperator{{0.1, 1.0, 10.0}, AmbientNorm::l1});
    CHECK(d.analytic_bound() == doctest::Approx(std::exp(-1.0)));
    const std::vector<double> x = {0.2, 0.3, 0.5};
    QuadratureSpec q;
    q.n_nodes = 512;
    for (double t : q.nodes()) {
        const auto y = generator_semigroup(d, t, x);
        CHECK(t * d.norm(y) <= d.analytic_bound() * d.norm(x) * (1.0 + 1e-12));
    }
    const HeatModel h(1, 40.0, 1024);
    const GridField g = gaussian(40.0, 1024);
    for (double t : {0.01, 0.1, 1.0, 10.0, 100.0})
        CHECK(t * generator_semigroup(h, t, g).lp_norm(1.0) <= h.analytic_bound() * g.lp_norm(1.0) * (1.0 + 1e-9));
}

TEST_CASE("model time grid") {
    const HeatModel h(1, 1024.0, 32768);
    const QuadratureSpec ts = model_time_spec(h, QuadratureSpec{});
    CHECK(ts.t_max == doctest::Approx(16384.0));
    CHECK(ts.nodes_per_decade() <= 16.0 + 1e-9);
    const DiagonalModel d(DiagonalOperator{{1.0}, AmbientNorm::l1});
    CHECK(model_time_spec(d, QuadratureSpec{}).n_nodes == 4096);
}
