#pragma once

#include <vector>

namespace logspike::shooting {

enum class Parity { Even, Odd };

// Parity of well level n: even indices are even states.
Parity parity_of(int n);

struct ModelParams {
    double g = 1.0;         // coupling of the attractive log spike, >= 0
    double delta = 1e-10;   // shooting cutoff distance from the singularity, in (0, 0.01)
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
};

struct EnergyLevel {
    int n = 0;
    Parity parity = Parity::Even;
    double energy = 0.0;
};

enum class Normalization { MaxAbsOne, L2One };

struct WavePoint {
    double x = 0.0;
    double psi = 0.0;
};

struct WaveGrid {
    std::vector<WavePoint> samples;  // uniform in x over [-1, 1]
    Normalization normalization = Normalization::MaxAbsOne;
    bool clamp_warning = false;      // a slow-phase radicand went negative beyond rounding noise
};

// Barrier geometry of the rectangular replacement for the log spike at
// energy E: half-width d where the potential crosses E, outer wavenumber k,
// inner decay rate kappa.
struct BarrierApprox {
    double energy = 0.0;
    double d = 0.0;
    double k = 0.0;
    double kappa = 0.0;
};

// V(x) = -2 g ln|x| on [-1, 1], x != 0.
double potential(double x, double g);

// Matching defect at the cutoff for parity-restricted shooting from x = -1:
// psi'(-delta) for even states, psi(-delta) for odd, scaled by the largest
// component magnitude seen along the way. Roots in E are eigenvalues.
double mismatch(double E, const ModelParams& p, Parity parity);

// Level n by scanning E upward from the unperturbed energy and bisecting
// the first sign change of the mismatch to width e_tol (>= 1e-12).
EnergyLevel eigenvalue(int n, const ModelParams& p, double e_tol);

// Levels 0..n_max (n_max <= 50); energies come out strictly increasing.
std::vector<EnergyLevel> spectrum(const ModelParams& p, int n_max, double e_tol);

// Eigenfunction on a uniform grid of `points` >= 16 samples across [-1, 1].
// The gap (-delta, delta) is filled by parity-consistent linear continuation
// from the cutoff state; the right half is the parity mirror of the left.
// Sign convention: psi'(-1) > 0.
WaveGrid wavefunction(const EnergyLevel& level, const ModelParams& p, int points,
                      Normalization norm = Normalization::MaxAbsOne);

// Half-width of the equivalent rectangular barrier: exp(-E / (2g)).
double barrier_halfwidth(double E, double g);

BarrierApprox barrier(double E, double g);

// Piecewise closed forms on the same grid layout as wavefunction().
// Rectangular model: trigonometric outside the barrier, hyperbolic inside,
// amplitudes matched for continuity at x = -d.
WaveGrid rect_approx_wavefunction(double E, double g, Parity parity, int points);

// Slowly-varying-phase model: sin of the local phase outside the turning
// points. Both radicands vanish at |x| = d, so continuity forces the inner
// amplitude to zero; the inner region is identically zero by construction.
WaveGrid wkb_approx_wavefunction(double E, double g, Parity parity, int points);

// Eigenvalue of the rectangular model near level n: root of the pole-free
// continuity condition, bracketed around the unperturbed energy.
double rect_approx_energy(int n, double g, double e_tol);

}
