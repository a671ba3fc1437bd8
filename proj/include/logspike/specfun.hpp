#pragma once

namespace logspike {

// Sine integral Si(x) = integral of sin(t)/t from 0 to x.
// Absolute error below 1e-12 for |x| <= 100; exactly odd in x.
double si(double x);

}
