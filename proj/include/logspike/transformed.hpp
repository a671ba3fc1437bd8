#pragma once

#include "logspike/ode.hpp"

#include <optional>
#include <span>
#include <vector>

namespace logspike::transformed {

// Log-coordinate form of the left-half problem: x = -exp(-lambda) maps
// [-1, 0) to [0, inf), psi = exp(-lambda/2) phi(lambda), and phi obeys
// phi'' = c(lambda) phi with the coefficient below.
struct TransformedParams {
    double g = 1.0;          // > 0
    double E = 0.0;
    double lambda_max = 4.0; // truncation point, in [1, 50]
};

struct ConditioningRow {
    double E = 0.0;
    double lambda_max = 0.0;
    double phi_at_zero = 0.0;
    std::optional<double> difference;  // previous row's value minus this one, within an E block
};

// c(lambda) = 1/4 - exp(-2 lambda) (E - 2 g lambda).
double transformed_coefficient(double lambda, double E, double g);

// Forward sweep from phi(0) = 0, phi'(0) = 1. The solution grows like
// exp(lambda/2), so the state is renormalized whenever it passes 1e12;
// recorded states all share the final scale and log_scale holds the log of
// the total factor taken out.
struct ForwardSolution {
    ode::IvpSolution solution;
    double log_scale = 0.0;  // true phi = stored phi * exp(log_scale)
};

ForwardSolution forward_solve(const TransformedParams& p, bool record);

// Backward sweep from phi(lambda_max) = 1, phi'(lambda_max) = 0 down to
// lambda = 0; returns phi(0). The growing mode of the reversed direction
// swamps the solution, which is the ill-conditioning this probes.
double backward_solve(const TransformedParams& p);

// backward_solve over the grid of energies and truncation points, with the
// difference column that exposes how strongly phi(0) moves with lambda_max.
std::vector<ConditioningRow> conditioning_study(std::span<const double> energies,
                                                std::span<const double> lambda_maxes,
                                                double g);

// The right half maps through x = exp(rho) onto the same form with
// c(rho) = 1/4 - exp(2 rho) (E + 2 g rho) integrated toward negative rho
// from phi(0) = 0, phi'(0) = -1. Returns the largest discrepancy against
// the left-half sweep under rho = -lambda, checked on a uniform grid.
double right_side_equivalence(double E, double g, double lambda_max);

}
