#include "logspike/perturb.hpp"
#include "logspike/errors.hpp"
#include "logspike/quadrature.hpp"
#include "logspike/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace logspike::perturb {

namespace {

void require_level(int n, const char* who)
{
    if (n < 0)
        throw ConfigError(std::string(who) + ": level index must be non-negative");
}

}

double unperturbed_energy(int n)
{
    require_level(n, "unperturbed_energy");
    const double k = (n + 1) * std::numbers::pi / 2;
    return k * k;
}

double first_order_even(int p)
{
    require_level(p, "first_order_even");
    const double a = (2 * p + 1) * std::numbers::pi;
    return 2.0 + 2.0 * si(a) / a;
}

double first_order_odd(int q)
{
    require_level(q, "first_order_odd");
    const double b = (2 * q + 2) * std::numbers::pi;
    return 2.0 - 2.0 * si(b) / b;
}

double first_order(int n)
{
    require_level(n, "first_order");
    return n % 2 == 0 ? first_order_even(n / 2) : first_order_odd((n - 1) / 2);
}

double first_order_quadrature(int n, double tol)
{
    require_level(n, "first_order_quadrature");
    if (!(tol >= 1e-14 && tol <= 1e-4))
        throw ConfigError("first_order_quadrature: tol must lie in [1e-14, 1e-4]");

    // Squared normalized eigenfunction times the weight -2 ln x, doubled for
    // the mirror half: w(x) = -4 cos^2(a x) or -4 sin^2(a x), a = (n+1) pi/2.
    const double a = (n + 1) * std::numbers::pi / 2;
    const bool even = n % 2 == 0;
    const auto w = [a, even](double x) {
        const double s = even ? std::cos(a * x) : std::sin(a * x);
        return -4.0 * s * s;
    };

    // [1e-3, 1]: direct. (0, 1e-3]: substitute x = exp(-u); the image
    // integrand w(e^-u) (-u) e^-u is smooth and decays like u e^-u, so
    // cutting it off 40 units past the split point drops less than 1e-18.
    const double split = 1e-3;
    const double u0 = -std::log(split);
    const double outer = quad::integrate([&](double x) { return w(x) * std::log(x); },
                                         split, 1.0, 0.45 * tol);
    const double inner = quad::integrate([&](double u) {
                                             const double x = std::exp(-u);
                                             return w(x) * (-u) * x;
                                         },
                                         u0, u0 + 40.0, 0.45 * tol);
    return outer + inner;
}

double tail_bound_even(double R)
{
    if (!(R > 0))
        throw ConfigError("tail_bound_even: R must be positive");
    return -(R + 1.0) * std::exp(-R);
}

double tail_bound_odd(double R)
{
    if (!(R > 0))
        throw ConfigError("tail_bound_odd: R must be positive");
    return -(3.0 * R + 1.0) * std::exp(-3.0 * R) / 9.0;
}

double linear_energy(int n, double g)
{
    require_level(n, "linear_energy");
    if (!(g >= 0))
        throw ConfigError("linear_energy: coupling must be non-negative");
    return unperturbed_energy(n) + g * first_order(n);
}

std::optional<CrossingEstimate> crossing(int m, int n)
{
    if (m < 0 || m >= n)
        throw ConfigError("crossing: need 0 <= m < n");
    const double em = first_order(m);
    const double en = first_order(n);
    if (!(em > en))
        return std::nullopt;
    const double g = (unperturbed_energy(n) - unperturbed_energy(m)) / (em - en);
    return CrossingEstimate{m, n, g, m % 2 == n % 2};
}

}
