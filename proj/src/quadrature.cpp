#include "logspike/quadrature.hpp"
#include "logspike/errors.hpp"

#include <cmath>
#include <numbers>

namespace logspike::quad {

namespace {

// Positive nodes and weights of 10-point Gauss-Legendre on [-1, 1],
// generated once by Newton iteration on P10 so no tabulated constants
// need to be trusted.
struct Gauss10 {
    double node[5];
    double weight[5];
};

Gauss10 make_gauss10()
{
    Gauss10 g{};
    for (int i = 0; i < 5; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / 10.5);
        double dp = 0.0;
        for (int it = 0; it < 64; ++it) {
            double p0 = 1.0, p1 = x;
            for (int n = 2; n <= 10; ++n) {
                const double p2 = ((2 * n - 1) * x * p1 - (n - 1) * p0) / n;
                p0 = p1;
                p1 = p2;
            }
            dp = 10.0 * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15)
                break;
        }
        g.node[i] = x;
        g.weight[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return g;
}

const Gauss10& gauss10()
{
    static const Gauss10 g = make_gauss10();
    return g;
}

double panel(const std::function<double(double)>& f, double a, double b)
{
    const Gauss10& g = gauss10();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 5; ++i)
        s += g.weight[i] * (f(mid - half * g.node[i]) + f(mid + half * g.node[i]));
    s *= half;
    if (!std::isfinite(s))
        throw DomainError("integrate: integrand evaluated to a non-finite value");
    return s;
}

double adapt(const std::function<double(double)>& f, double a, double b,
             double tol, double whole, int depth)
{
    const double mid = 0.5 * (a + b);
    const double left = panel(f, a, mid);
    const double right = panel(f, mid, b);
    if (std::fabs(left + right - whole) <= tol)
        return left + right;
    if (depth >= 60)
        throw Error("integrate: refinement limit reached without convergence");
    return adapt(f, a, mid, 0.5 * tol, left, depth + 1) +
           adapt(f, mid, b, 0.5 * tol, right, depth + 1);
}

}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol)
{
    if (!std::isfinite(a) || !std::isfinite(b))
        throw DomainError("integrate: endpoints must be finite");
    if (!(abs_tol > 0))
        throw ConfigError("integrate: abs_tol must be positive");
    if (a == b)
        return 0.0;
    return adapt(f, a, b, abs_tol, panel(f, a, b), 0);
}

}
