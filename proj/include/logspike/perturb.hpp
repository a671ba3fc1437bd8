#pragma once

#include <optional>

namespace logspike::perturb {

// Level n >= 0 of the infinite square well on [-1, 1] at zero coupling:
// ((n + 1) pi / 2)^2. Even n are even-parity states, odd n odd-parity.
double unperturbed_energy(int n);

// First-order energy shift per unit coupling, in closed form through the
// sine integral. Even levels n = 2p, odd levels n = 2q + 1.
double first_order_even(int p);
double first_order_odd(int q);
double first_order(int n);

// Same quantity by adaptive quadrature of the weighted log integral,
// evaluated to absolute accuracy tol in [1e-14, 1e-4]. The integrable
// endpoint spike is handled by an exponential substitution below 1e-3.
double first_order_quadrature(int n, double tol);

// Bounds on the tail dropped when the weighted log integral is truncated
// at x = exp(-R), R > 0. Both bounds are negative, like the tail itself.
double tail_bound_even(double R);
double tail_bound_odd(double R);

// First-order straight line E(g) = E0(n) + g * E1(n), g >= 0.
double linear_energy(int n, double g);

struct CrossingEstimate {
    int m = 0;
    int n = 0;
    double g_cross = 0.0;
    bool spurious = false;  // same-parity pair; the exact levels cannot cross
};

// Coupling where the first-order lines of levels m < n intersect, or
// nothing when the slopes never let them meet.
std::optional<CrossingEstimate> crossing(int m, int n);

}
