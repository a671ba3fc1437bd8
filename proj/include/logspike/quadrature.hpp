#pragma once

#include <functional>

namespace logspike::quad {

// Adaptive quadrature of f over [a, b] to absolute accuracy abs_tol.
// Panels are 10-point Gauss-Legendre; a panel is bisected until the
// parent-versus-children difference is below its share of the budget.
// The integrand must be finite everywhere it is evaluated.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol);

}
