#pragma once

// Test-side integrator, deliberately built on a different rule (adaptive
// Simpson with Richardson correction) than the library quadrature, so that
// agreement between the two is evidence rather than tautology.

#include <cmath>
#include <functional>

namespace quad_oracle {

namespace detail {

inline double simpson(double a, double b, double fa, double fm, double fb)
{
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adapt(const std::function<double(double)>& f, double a, double b,
                    double fa, double fm, double fb, double whole, double tol,
                    int depth)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double d = left + right - whole;
    if (depth <= 0 || std::fabs(d) <= 15.0 * tol)
        return left + right + d / 15.0;
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}

inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol)
{
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    return detail::adapt(f, a, b, fa, fm, fb, detail::simpson(a, b, fa, fm, fb),
                         tol, 48);
}

}
