#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace logspike::ode {

// Coefficient c(x) of the linear second-order equation y'' = c(x) y.
using Coefficient = std::function<double(double)>;

struct IvpState {
    double x = 0.0;
    double y = 0.0;
    double dy = 0.0;
};

struct IvpSolution {
    IvpState final;
    std::vector<IvpState> trajectory;  // accepted steps incl. the initial state; empty unless recorded
    std::size_t steps_taken = 0;       // accepted steps
    double max_abs_y = 0.0;            // over all accepted states incl. the initial one
    double max_abs_dy = 0.0;
};

// Integrates y'' = c(x) y from `from` to to_x, in either direction, with the
// local error per step held below abs_tol + rel_tol * |component|.
// Tolerances must lie in [1e-14, 1e-3].
IvpSolution integrate_ivp(const Coefficient& c, const IvpState& from, double to_x,
                          double rel_tol, double abs_tol, bool record);

// States exactly at each stop, obtained by integrating leg by leg with the
// stops forced as step boundaries. Stops must move strictly monotonically
// away from from.x (toward either side).
std::vector<IvpState> sample_at(const Coefficient& c, const IvpState& from,
                                std::span<const double> stops,
                                double rel_tol, double abs_tol);

}
