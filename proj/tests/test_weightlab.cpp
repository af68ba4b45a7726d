#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "mrlab/errors.hpp"
#include "mrlab/weightlab.hpp"

using namespace mrlab;

namespace {

const double kPi = std::numbers::pi;

// random non-decreasing sampled function with phi(t)/t non-increasing
FunctionOnHalfLine random_quasiconcave(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> t(n), v(n);
    double lt = std::log(1e-3), lv = 0.0;
    const double h = std::log(1e6) / (n - 1);
    for (int i = 0; i < n; ++i) {
        t[i] = std::exp(lt);
        v[i] = std::exp(lv);
        lt += h;
        lv += h * u(rng);
    }
    return FunctionOnHalfLine::sampled(t, v);
}

FunctionOnHalfLine random_positive(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<double> t(n), v(n);
    for (int i = 0; i < n; ++i) {
        t[i] = std::pow(10.0, -4.0 + 8.0 * i / (n - 1));
        v[i] = std::pow(10.0, u(rng));
    }
    return FunctionOnHalfLine::sampled(t, v);
}

// O(N^3) upper hull over the nodes
std::vector<double> hull_oracle(const std::vector<double>& t, const std::vector<double>& y) {
    std::vector<double> out(y);
    for (std::size_t a = 0; a < t.size(); ++a)
        for (std::size_t b = a + 1; b < t.size(); ++b)
            for (std::size_t i = a; i <= b; ++i) {
                const double lam = (t[i] - t[a]) / (t[b] - t[a]);
                out[i] = std::max(out[i], (1.0 - lam) * y[a] + lam * y[b]);
            }
    return out;
}

}  // namespace

TEST_CASE("Hardy operator and its adjoint on closed forms") {
    QuadratureSpec q;
    // log-trapezoid error is (e h)^2/12 relative for s^e integrands
    const auto p = hardy_apply(FunctionOnHalfLine::power(-0.5), q);
    CHECK(p(1.0) == doctest::Approx(2.0).epsilon(1e-5));
    CHECK(hardy_apply(FunctionOnHalfLine::constant(1.0), q)(3.0) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(hardy_apply(FunctionOnHalfLine::power(1.0), q)(2.0) == doctest::Approx(1.0).epsilon(1e-4));

    CHECK(adjoint_apply(FunctionOnHalfLine::power(-0.5), q)(1.0) == doctest::Approx(2.0).epsilon(1e-5));
    // E1(1) = 0.219383934...
    CHECK(adjoint_apply(FunctionOnHalfLine::exponential(1.0), q)(1.0) == doctest::Approx(0.21938393439552).epsilon(1e-5));
    // support inside (0,1)
    const auto bump = FunctionOnHalfLine::sampled({0.1, 0.2, 0.5, 0.9, 1.0, 1.1}, {0.0, 1.0, 2.0, 1.0, 0.0, 0.0});
    CHECK(adjoint_apply(bump, q)(2.0) == doctest::Approx(0.0));
}

TEST_CASE("weighted Hardy conditions") {
    QuadratureSpec q;
    const auto w = FunctionOnHalfLine::power(-0.5);
    CHECK(bound_P_L1(w, q).constant == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(bound_Q_L1(w, q).constant == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(bound_P_L1(w, q).verdict == Verdict::finite);

    const auto c = bound_P_L1(FunctionOnHalfLine::constant(1.0), q);
    CHECK(c.verdict == Verdict::diverging);
    CHECK(c.infinite());

    const auto r = bound_Q_Linf(FunctionOnHalfLine::power(0.5), q);
    CHECK(r.constant == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(r.node_max_ess_sup);
}

TEST_CASE("Calderon constants of power weights") {
    QuadratureSpec q;
    for (double mu : {0.1, 0.2, 0.25, 0.3, 0.4, 0.5, 0.6, 0.7, 0.75, 0.8, 0.9}) {
        INFO("mu = " << mu);
        const auto r = calderon_bound_L1(FunctionOnHalfLine::power(-mu), q);
        CHECK(r.verdict == Verdict::finite);
        CHECK(r.constant == doctest::Approx(kPi / std::sin(kPi * mu)).epsilon(1e-2));
    }
    CHECK(calderon_bound_L1(FunctionOnHalfLine::power(-0.25), q).constant ==
          doctest::Approx(kPi * std::sqrt(2.0)).epsilon(1e-3));
    CHECK(calderon_bound_L1(FunctionOnHalfLine::constant(1.0), q).verdict == Verdict::diverging);
}

TEST_CASE("P+Q inequalities on certified weights") {
    QuadratureSpec q;
    for (double mu : {0.2, 0.5, 0.8}) {
        const auto w = FunctionOnHalfLine::power(-mu);
        const double p = bound_P_L1(w, q).constant, qq = bound_Q_L1(w, q).constant;
        const double pq = calderon_bound_L1(w, q).constant;
        CHECK(2.0 * pq >= p + qq - 1e-9);
        CHECK(pq <= p + qq + 1e-9);
    }
}

TEST_CASE("Stieltjes transform") {
    QuadratureSpec q;
    CHECK(stieltjes(FunctionOnHalfLine::power(-0.5), 1.0, q) == doctest::Approx(kPi).epsilon(1e-6));
    // bump of mass one near t in [1,2]: S w(t) ~ 1/t
    const auto bump = FunctionOnHalfLine::sampled({0.99, 1.0, 2.0, 2.01}, {0.0, 1.0, 1.0, 0.0});
    const double big = 1e5;
    CHECK(stieltjes(bump, big, q) * big == doctest::Approx(1.0).epsilon(1e-2));
}

TEST_CASE("Stieltjes sandwich on random weights") {
    std::mt19937_64 rng(7);
    QuadratureSpec q;
    q.n_nodes = 1024;
    for (int k = 0; k < 50; ++k) {
        const auto w = random_positive(rng, 12 + k % 7);
        const Sandwich s = stieltjes_sandwich(w, q);
        for (std::size_t i = 0; i < s.nodes.size(); ++i) {
            CHECK(s.S[i] <= s.PQ[i] * (1.0 + 1e-10));
            CHECK(s.PQ[i] <= 2.0 * s.S[i] * (1.0 + 1e-10));
        }
    }
}

TEST_CASE("dilation indices") {
    QuadratureSpec q;
    q.n_nodes = 1201;
    auto d = dilation_indices(FunctionOnHalfLine::power(0.5), q);
    CHECK(d.alpha == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(d.beta == doctest::Approx(0.5).epsilon(1e-6));
    d = dilation_indices(FunctionOnHalfLine::power_log(0.5, 0.0), q);
    CHECK(d.alpha == doctest::Approx(0.5).epsilon(1e-6));
    // s(t) = max(1, t) for min(t, 1)
    d = dilation_indices(FunctionOnHalfLine::min_power(1.0), q);
    CHECK(d.alpha == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(d.beta == doctest::Approx(1.0).epsilon(1e-6));
    for (std::size_t i = 0; i < d.t.size(); i += 97)
        CHECK(d.s_phi[i] == doctest::Approx(std::max(1.0, d.t[i])).epsilon(1e-9));
}

TEST_CASE("dilation function against a brute-force sup") {
    std::mt19937_64 rng(11);
    QuadratureSpec q;
    q.t_min = 1e-3;
    q.t_max = 1e3;
    q.n_nodes = 121;
    for (int k = 0; k < 5; ++k) {
        const auto phi = random_quasiconcave(rng, 40);
        const auto d = dilation_indices(phi, q);
        const auto r = q.nodes();
        for (std::size_t i = 0; i < d.t.size(); i += 7) {
            double best = 0.0;
            for (double ri : r) {
                const double rt = ri * d.t[i];
                if (rt < q.t_min * (1 - 1e-12) || rt > q.t_max * (1 + 1e-12)) continue;
                best = std::max(best, phi(rt) / phi(ri));
            }
            CHECK(d.s_phi[i] == doctest::Approx(best).epsilon(1e-9));
        }
        CHECK(d.alpha >= 0.0);
        CHECK(d.alpha <= d.beta);
        CHECK(d.beta <= 1.0);
    }
}

TEST_CASE("integral index checks") {
    QuadratureSpec q;
    auto c = integral_index_check(FunctionOnHalfLine::power(0.5), q);
    CHECK(c.sup_value == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(c.verdict == Verdict::finite);
    CHECK(c.index_condition);
    CHECK(c.consistent);

    c = integral_index_check(FunctionOnHalfLine::constant(1.0), q);
    CHECK(c.verdict == Verdict::diverging);
    CHECK_FALSE(c.index_condition);
    CHECK(c.consistent);

    // min(t,1) has upper index 1, so the tail condition fails
    c = integral_index_check_upper(FunctionOnHalfLine::min_power(1.0), q);
    CHECK(c.verdict != Verdict::finite);
    CHECK_FALSE(c.index_condition);

    c = integral_index_check_upper(FunctionOnHalfLine::power(0.5), q);
    CHECK(c.sup_value == doctest::Approx(2.0).epsilon(1e-4));
    CHECK(c.verdict == Verdict::finite);
}

TEST_CASE("least concave majorant") {
    QuadratureSpec q;
    q.t_min = 1e-2;
    q.t_max = 1e2;
    q.n_nodes = 201;
    const auto m = least_concave_majorant(FunctionOnHalfLine::min_power(1.0), q);
    for (double t : {0.05, 0.5, 1.0, 7.0}) CHECK(m(t) == doctest::Approx(std::min(t, 1.0)).epsilon(1e-9));

    std::vector<double> t = q.nodes(), y(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) y[i] = std::pow(std::min(t[i], 1.0), 2.0);
    CHECK_THROWS_AS(least_concave_majorant(FunctionOnHalfLine::sampled(t, y)), DomainError);

    std::mt19937_64 rng(3);
    for (int k = 0; k < 10; ++k) {
        const auto phi = random_quasiconcave(rng, 60);
        const auto hull = least_concave_majorant(phi);
        const auto oracle = hull_oracle(phi.nodes(), phi.values());
        for (std::size_t i = 0; i < oracle.size(); ++i) {
            const double ti = phi.nodes()[i];
            CHECK(hull(ti) == doctest::Approx(oracle[i]).epsilon(1e-9));
            CHECK(hull(ti) >= phi(ti) * (1.0 - 1e-12));
            CHECK(hull(ti) <= 2.0 * phi(ti) * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("L-infinity representation of Lebesgue parameters") {
    QuadratureSpec q;
    q.n_nodes = 1024;
    auto phi = linf_phi_representation(FunctionOnHalfLine::power(0.5), q);
    for (double t : {1e-3, 1.0, 50.0}) CHECK(phi(t) == doctest::Approx(std::sqrt(t)).epsilon(1e-6));
    CHECK(quasiconcave_check(phi, q));

    // grid infimum oracle for a sampled weight
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> ts = q.nodes(), ws(ts.size());
    double lw = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        ws[i] = std::exp(lw);
        lw += q.log_step() * u(rng);
    }
    const auto w = FunctionOnHalfLine::sampled(ts, ws);
    phi = linf_phi_representation(w, q);
    CHECK(quasiconcave_check(phi, q));
    for (std::size_t i = 0; i < ts.size(); i += 101) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < ts.size(); ++j) best = std::min(best, std::max(1.0, ts[i] / ts[j]) * ts[j] / ws[j]);
        // the padded grid can only lower the infimum
        CHECK(phi(ts[i]) <= best * (1.0 + 1e-9));
        CHECK(phi(ts[i]) >= best * (1.0 - 1e-2));
    }
}

TEST_CASE("fundamental weight") {
    QuadratureSpec q;
    auto v = fundamental_weight(FunctionOnHalfLine::power(-0.5), q);
    for (double t : {1e-3, 1.0, 1e3}) CHECK(v(t) == doctest::Approx(4.0 / std::sqrt(t)).epsilon(1e-5));
    v = fundamental_weight(FunctionOnHalfLine::power(-0.25), q);
    CHECK(v(1.0) == doctest::Approx(16.0 / 3.0).epsilon(1e-5));
    CHECK(calderon_bound_L1(v, q).verdict == Verdict::finite);
}

TEST_CASE("weight shape checks") {
    QuadratureSpec q;
    const auto p = FunctionOnHalfLine::power(-0.5);
    CHECK(log_convexity_check(p, q));
    CHECK(non_increasing_check(p, q));
    CHECK(ratio_monotone_check(p, 1.0, q));
    const auto tr = tail_ratio(p, 1.0, q);
    CHECK(tr.value == doctest::Approx(1.0).epsilon(1e-5));

    const auto e = FunctionOnHalfLine::exponential(1.0);
    CHECK(log_convexity_check(e, q));
    CHECK(tail_ratio(e, 2.0, q).value == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
    CHECK(tail_ratio(e, 2.0, q).stable);

    CHECK_FALSE(non_increasing_check(FunctionOnHalfLine::power(1.0), q));
}
