#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "logspike/errors.hpp"
#include "logspike/ode.hpp"

#include <cmath>
#include <vector>

using logspike::ode::integrate_ivp;
using logspike::ode::IvpState;
using logspike::ode::sample_at;

namespace {

const logspike::ode::Coefficient zero = [](double) { return 0.0; };
const logspike::ode::Coefficient minus_one = [](double) { return -1.0; };
const logspike::ode::Coefficient plus_one = [](double) { return 1.0; };

}

TEST_CASE("straight lines are reproduced to rounding")
{
    const auto sol = integrate_ivp(zero, {0.0, 1.0, 2.0}, 3.0, 1e-10, 1e-12, false);
    CHECK(sol.final.y == doctest::Approx(7.0).epsilon(1e-13));
    CHECK(sol.final.dy == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("oscillator and hyperbolic solutions match closed forms")
{
    const auto s1 = integrate_ivp(minus_one, {0.0, 0.0, 1.0}, 1.0, 1e-10, 1e-12, false);
    CHECK(std::fabs(s1.final.y - std::sin(1.0)) <= 1e-9);
    CHECK(std::fabs(s1.final.dy - std::cos(1.0)) <= 1e-9);

    const auto s2 = integrate_ivp(plus_one, {0.0, 1.0, 0.0}, 1.0, 1e-10, 1e-12, false);
    CHECK(std::fabs(s2.final.y - std::cosh(1.0)) <= 1e-9);
    CHECK(std::fabs(s2.final.dy - std::sinh(1.0)) <= 1e-9);
}

TEST_CASE("integration runs backward as well")
{
    const double target = -std::acos(-1.0) / 2;
    const auto sol = integrate_ivp(minus_one, {0.0, 0.0, 1.0}, target, 1e-10, 1e-12, false);
    CHECK(std::fabs(sol.final.y - (-1.0)) <= 1e-9);
    CHECK(std::fabs(sol.final.dy) <= 1e-9);
}

TEST_CASE("solutions are linear in the initial data")
{
    const logspike::ode::Coefficient c = [](double x) { return x; };
    const auto base = integrate_ivp(c, {0.0, 0.4, -0.3}, 2.0, 1e-10, 1e-12, false);
    const auto scaled = integrate_ivp(c, {0.0, 3.7 * 0.4, 3.7 * -0.3}, 2.0, 1e-10, 1e-12, false);
    CHECK(scaled.final.y == doctest::Approx(3.7 * base.final.y).epsilon(1e-10));
    CHECK(scaled.final.dy == doctest::Approx(3.7 * base.final.dy).epsilon(1e-10));
}

TEST_CASE("the Wronskian of two independent solutions is conserved")
{
    const logspike::ode::Coefficient c = [](double x) { return x; };
    const auto u = integrate_ivp(c, {0.0, 1.0, 0.0}, 3.0, 1e-10, 1e-12, false).final;
    const auto v = integrate_ivp(c, {0.0, 0.0, 1.0}, 3.0, 1e-10, 1e-12, false).final;
    const double w = u.y * v.dy - u.dy * v.y;
    CHECK(w == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("integrating forward then back returns near the start")
{
    const logspike::ode::Coefficient c = [](double) { return -4.0; };
    const auto fwd = integrate_ivp(c, {0.0, 0.7, -0.2}, 5.0, 1e-10, 1e-12, false);
    const auto back = integrate_ivp(c, fwd.final, 0.0, 1e-10, 1e-12, false);
    CHECK(std::fabs(back.final.y - 0.7) <= 1e-9);
    CHECK(std::fabs(back.final.dy - (-0.2)) <= 1e-9);
}

TEST_CASE("errors shrink as tolerances tighten")
{
    const double exact = std::sin(10.0);
    double prev_err = 1e9;
    for (double tol : {1e-5, 1e-8, 1e-11}) {
        const auto sol = integrate_ivp(minus_one, {0.0, 0.0, 1.0}, 10.0, tol, tol * 1e-2, false);
        const double err = std::fabs(sol.final.y - exact);
        CHECK(err < prev_err);
        prev_err = err;
    }
}

TEST_CASE("recorded trajectories bracket the run and agree with the maxima")
{
    const auto sol = integrate_ivp(minus_one, {0.0, 0.0, 1.0}, 6.0, 1e-10, 1e-12, true);
    REQUIRE(!sol.trajectory.empty());
    CHECK(sol.trajectory.front().x == 0.0);
    CHECK(sol.trajectory.front().y == 0.0);
    CHECK(sol.trajectory.back().x == 6.0);
    CHECK(sol.trajectory.size() == sol.steps_taken + 1);

    double my = 0.0, mdy = 0.0;
    for (const auto& s : sol.trajectory) {
        my = std::max(my, std::fabs(s.y));
        mdy = std::max(mdy, std::fabs(s.dy));
    }
    CHECK(my == sol.max_abs_y);
    CHECK(mdy == sol.max_abs_dy);
}

TEST_CASE("sample_at lands exactly on the stops, both directions")
{
    const std::vector<double> stops = {0.5, 1.0, 2.5};
    const auto out = sample_at(minus_one, {0.0, 0.0, 1.0}, stops, 1e-10, 1e-12);
    REQUIRE(out.size() == 3);
    for (std::size_t i = 0; i < stops.size(); ++i) {
        CHECK(out[i].x == stops[i]);
        CHECK(std::fabs(out[i].y - std::sin(stops[i])) <= 1e-9);
    }

    const std::vector<double> down = {-1.0, -2.0};
    const auto rev = sample_at(minus_one, {0.0, 0.0, 1.0}, down, 1e-10, 1e-12);
    CHECK(std::fabs(rev[1].y - std::sin(-2.0)) <= 1e-9);
}

TEST_CASE("invalid arguments are rejected")
{
    CHECK_THROWS_AS(integrate_ivp(zero, {0.0, 0.0, 1.0}, 0.0, 1e-10, 1e-12, false),
                    logspike::ConfigError);
    CHECK_THROWS_AS(integrate_ivp(zero, {0.0, 0.0, 1.0}, 1.0, 1e-2, 1e-12, false),
                    logspike::ConfigError);
    CHECK_THROWS_AS(integrate_ivp(zero, {0.0, 0.0, 1.0}, 1.0, 1e-10, 1e-15, false),
                    logspike::ConfigError);
    const std::vector<double> bad = {1.0, 0.5};
    CHECK_THROWS_AS(sample_at(zero, {0.0, 0.0, 1.0}, bad, 1e-10, 1e-12),
                    logspike::ConfigError);
}

TEST_CASE("a non-finite coefficient raises a domain error")
{
    const logspike::ode::Coefficient c = [](double x) {
        return x > 2.0 ? std::nan("") : 0.0;
    };
    CHECK_THROWS_AS(integrate_ivp(c, {0.0, 0.0, 1.0}, 3.0, 1e-10, 1e-12, false),
                    logspike::DomainError);
}

TEST_CASE("a step-size collapse raises a stiffness error")
{
    // A finite but absurd coefficient jump drives the controller to reject
    // until the step underflows the documented floor.
    const logspike::ode::Coefficient c = [](double x) {
        return x < 0.5 ? 0.0 : 1e30;
    };
    CHECK_THROWS_AS(integrate_ivp(c, {0.0, 1.0, 0.0}, 1.0, 1e-10, 1e-12, false),
                    logspike::StiffnessError);
}
