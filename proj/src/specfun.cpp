#include "logspike/specfun.hpp"
#include "logspike/errors.hpp"

#include <cmath>
#include <numbers>

namespace logspike {

namespace {

// Maclaurin sum, accumulated in long double. Near the upper end of the
// series range the partial sums pass through O(1e2) terms while the result
// stays O(1), so plain double accumulation loses the last required digits.
long double si_series(long double x)
{
    const long double x2 = x * x;
    long double term = x;  // x^(2k+1) / (2k+1)!
    long double sum = x;
    for (int k = 1; k < 200; ++k) {
        term *= -x2 / ((2.0L * k) * (2.0L * k + 1.0L));
        const long double contrib = term / (2.0L * k + 1.0L);
        sum += contrib;
        if (fabsl(contrib) <= 1e-17L * fabsl(sum))
            break;
    }
    return sum;
}

// Rational minimax fits for the auxiliary functions f, g of
//   Si(x) = pi/2 - f(x) cos(x) - g(x) sin(x),   x > 0,
// in the variable y = 1/x^2. Good to full double precision for x >= 4;
// used here only beyond the series range.
double si_aux(double x)
{
    const double y = 1.0 / (x * x);
    const double f =
        (1.0 +
         y * (7.44437068161936700618e2 +
         y * (1.96396372895146869801e5 +
         y * (2.37750310125431834034e7 +
         y * (1.43073403821274636888e9 +
         y * (4.33736238870432522765e10 +
         y * (6.40533830574022022911e11 +
         y * (4.20968180571076940208e12 +
         y * (1.00795182980368574617e13 +
         y * (4.94816688199951963482e12 +
         y * (-4.94701168645415959931e11))))))))))) /
        (x * (1.0 +
         y * (7.46437068161927678031e2 +
         y * (1.97865247031583951450e5 +
         y * (2.41535670165126845144e7 +
         y * (1.47478952192985464958e9 +
         y * (4.58595115847765779830e10 +
         y * (7.08501308149515401563e11 +
         y * (5.06084464593475076774e12 +
         y * (1.43468549171581016479e13 +
         y * (1.11535493509914254097e13)))))))))));
    const double g =
        y * (1.0 +
         y * (8.1359520115168615e2 +
         y * (2.35239181626478200e5 +
         y * (3.12557570795778731e7 +
         y * (2.06297595146763354e9 +
         y * (6.83052205423625007e10 +
         y * (1.09049528450362786e12 +
         y * (7.57664583257834349e12 +
         y * (1.81004487464664575e13 +
         y * (6.43291613143049485e12 +
         y * (-1.36517137670871689e12))))))))))) /
        (1.0 +
         y * (8.19595201151451564e2 +
         y * (2.40036752835578777e5 +
         y * (3.26026661647090822e7 +
         y * (2.23355543278099360e9 +
         y * (7.87465017341829930e10 +
         y * (1.39866710696414565e12 +
         y * (1.17164723371736605e13 +
         y * (4.01839087307656620e13 +
         y * (3.99653257887490811e13))))))))));
    return std::numbers::pi / 2 - f * std::cos(x) - g * std::sin(x);
}

}

double si(double x)
{
    if (!std::isfinite(x))
        throw DomainError("si: argument must be finite");
    const double ax = std::fabs(x);
    const double v = ax <= 16.0 ? static_cast<double>(si_series(ax)) : si_aux(ax);
    return x < 0 ? -v : v;
}

}
