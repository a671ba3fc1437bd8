#pragma once

#include "logspike/shooting.hpp"

#include <span>
#include <vector>

namespace logspike::sweep {

// Spectra over a list of couplings; result[i][n] is level n at gs[i].
// delta and the integration tolerances come from `base` (its g is ignored).
// The _omp variant distributes the flattened (coupling, level) tasks over
// threads and returns bitwise-identical results because every task is
// independent and nothing is reduced across them.
std::vector<std::vector<shooting::EnergyLevel>>
spectra(std::span<const double> gs, int n_max, double e_tol,
        const shooting::ModelParams& base);

std::vector<std::vector<shooting::EnergyLevel>>
spectra_omp(std::span<const double> gs, int n_max, double e_tol,
            const shooting::ModelParams& base);

// First-order coefficient table: closed form next to the quadrature route.
struct PerturbRow {
    int n = 0;
    double e0 = 0.0;
    double e1_closed = 0.0;
    double e1_quadrature = 0.0;
};

std::vector<PerturbRow> perturb_table(int n_max, double quad_tol);
std::vector<PerturbRow> perturb_table_omp(int n_max, double quad_tol);

}
