#include "logspike/ode.hpp"
#include "logspike/errors.hpp"

#include <algorithm>
#include <cmath>

namespace logspike::ode {

namespace {

struct Deriv {
    double y;   // = dy
    double dy;  // = c(x) * y
};

Deriv eval(const Coefficient& c, double x, double y, double dy)
{
    const double cc = c(x);
    if (!std::isfinite(cc))
        throw DomainError("integrate_ivp: coefficient evaluated to a non-finite value");
    return {dy, cc * y};
}

void check_tols(double rel_tol, double abs_tol)
{
    if (!(rel_tol >= 1e-14 && rel_tol <= 1e-3))
        throw ConfigError("integrate_ivp: rel_tol must lie in [1e-14, 1e-3]");
    if (!(abs_tol >= 1e-14 && abs_tol <= 1e-3))
        throw ConfigError("integrate_ivp: abs_tol must lie in [1e-14, 1e-3]");
}

}

IvpSolution integrate_ivp(const Coefficient& c, const IvpState& from, double to_x,
                          double rel_tol, double abs_tol, bool record)
{
    check_tols(rel_tol, abs_tol);
    if (!std::isfinite(from.x) || !std::isfinite(from.y) || !std::isfinite(from.dy) ||
        !std::isfinite(to_x))
        throw DomainError("integrate_ivp: states and endpoints must be finite");
    if (to_x == from.x)
        throw ConfigError("integrate_ivp: integration interval is empty");

    // Dormand-Prince 5(4) pair with the first-same-as-last property and a
    // PI step controller (exponents 0.7/5 and 0.4/5, safety 0.9).
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                     a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                     a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                     b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                     e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                     e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

    const double interval = std::fabs(to_x - from.x);
    const double dir = to_x > from.x ? 1.0 : -1.0;

    IvpSolution out;
    double x = from.x, y = from.y, dy = from.dy;
    out.max_abs_y = std::fabs(y);
    out.max_abs_dy = std::fabs(dy);
    if (record)
        out.trajectory.push_back({x, y, dy});

    double h = dir * 1e-4 * interval;
    double err_prev = 1.0;
    Deriv k1 = eval(c, x, y, dy);

    for (;;) {
        bool last = false;
        if (dir * (x + h - to_x) >= 0.0) {
            h = to_x - x;
            last = true;
        }

        const Deriv k2 = eval(c, x + c2 * h, y + h * a21 * k1.y, dy + h * a21 * k1.dy);
        const Deriv k3 = eval(c, x + c3 * h,
                              y + h * (a31 * k1.y + a32 * k2.y),
                              dy + h * (a31 * k1.dy + a32 * k2.dy));
        const Deriv k4 = eval(c, x + c4 * h,
                              y + h * (a41 * k1.y + a42 * k2.y + a43 * k3.y),
                              dy + h * (a41 * k1.dy + a42 * k2.dy + a43 * k3.dy));
        const Deriv k5 = eval(c, x + c5 * h,
                              y + h * (a51 * k1.y + a52 * k2.y + a53 * k3.y + a54 * k4.y),
                              dy + h * (a51 * k1.dy + a52 * k2.dy + a53 * k3.dy + a54 * k4.dy));
        const Deriv k6 = eval(c, x + h,
                              y + h * (a61 * k1.y + a62 * k2.y + a63 * k3.y + a64 * k4.y + a65 * k5.y),
                              dy + h * (a61 * k1.dy + a62 * k2.dy + a63 * k3.dy + a64 * k4.dy + a65 * k5.dy));

        const double y5 = y + h * (b1 * k1.y + b3 * k3.y + b4 * k4.y + b5 * k5.y + b6 * k6.y);
        const double dy5 = dy + h * (b1 * k1.dy + b3 * k3.dy + b4 * k4.dy + b5 * k5.dy + b6 * k6.dy);
        const double xn = last ? to_x : x + h;
        const Deriv k7 = eval(c, xn, y5, dy5);

        const double ey = h * (e1 * k1.y + e3 * k3.y + e4 * k4.y + e5 * k5.y + e6 * k6.y + e7 * k7.y);
        const double edy = h * (e1 * k1.dy + e3 * k3.dy + e4 * k4.dy + e5 * k5.dy + e6 * k6.dy + e7 * k7.dy);
        const double sc_y = abs_tol + rel_tol * std::max(std::fabs(y), std::fabs(y5));
        const double sc_dy = abs_tol + rel_tol * std::max(std::fabs(dy), std::fabs(dy5));
        const double err = std::sqrt(0.5 * ((ey / sc_y) * (ey / sc_y) + (edy / sc_dy) * (edy / sc_dy)));

        if (err <= 1.0) {
            x = xn;
            y = y5;
            dy = dy5;
            k1 = k7;
            ++out.steps_taken;
            out.max_abs_y = std::max(out.max_abs_y, std::fabs(y));
            out.max_abs_dy = std::max(out.max_abs_dy, std::fabs(dy));
            if (record)
                out.trajectory.push_back({x, y, dy});
            if (last)
                break;
            double fac = err == 0.0 ? 5.0
                                    : 0.9 * std::pow(err, -0.14) * std::pow(err_prev, 0.08);
            fac = std::clamp(fac, 0.2, 5.0);
            h *= fac;
            err_prev = std::max(err, 1e-4);
        } else {
            h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
        }

        if (std::fabs(h) < 1e-15 * interval)
            throw StiffnessError("integrate_ivp: step size collapsed below 1e-15 of the interval");
    }

    out.final = {to_x, y, dy};
    return out;
}

std::vector<IvpState> sample_at(const Coefficient& c, const IvpState& from,
                                std::span<const double> stops,
                                double rel_tol, double abs_tol)
{
    if (stops.empty())
        throw ConfigError("sample_at: stop list is empty");
    const double dir = stops[0] > from.x ? 1.0 : -1.0;
    double prev = from.x;
    for (double s : stops) {
        if (dir * (s - prev) <= 0.0)
            throw ConfigError("sample_at: stops must move strictly monotonically away from the start");
        prev = s;
    }

    std::vector<IvpState> out;
    out.reserve(stops.size());
    IvpState cur = from;
    for (double s : stops) {
        cur = integrate_ivp(c, cur, s, rel_tol, abs_tol, false).final;
        out.push_back(cur);
    }
    return out;
}

}
