#include "logspike/sweep.hpp"
#include "logspike/errors.hpp"
#include "logspike/perturb.hpp"

#include <exception>
#include <vector>

namespace logspike::sweep {

namespace {

void check_args(std::span<const double> gs, int n_max)
{
    if (gs.empty())
        throw ConfigError("spectra: coupling list must be non-empty");
    if (n_max < 0 || n_max > 50)
        throw ConfigError("spectra: n_max must lie in [0, 50]");
}

shooting::ModelParams with_g(const shooting::ModelParams& base, double g)
{
    shooting::ModelParams p = base;
    p.g = g;
    return p;
}

}

std::vector<std::vector<shooting::EnergyLevel>>
spectra(std::span<const double> gs, int n_max, double e_tol,
        const shooting::ModelParams& base)
{
    check_args(gs, n_max);
    std::vector<std::vector<shooting::EnergyLevel>> out(gs.size());
    for (std::size_t i = 0; i < gs.size(); ++i) {
        out[i].resize(n_max + 1);
        for (int n = 0; n <= n_max; ++n)
            out[i][n] = shooting::eigenvalue(n, with_g(base, gs[i]), e_tol);
    }
    return out;
}

std::vector<std::vector<shooting::EnergyLevel>>
spectra_omp(std::span<const double> gs, int n_max, double e_tol,
            const shooting::ModelParams& base)
{
    check_args(gs, n_max);
    std::vector<std::vector<shooting::EnergyLevel>> out(gs.size());
    for (auto& row : out)
        row.resize(n_max + 1);

    const int tasks = static_cast<int>(gs.size()) * (n_max + 1);
    std::exception_ptr failure = nullptr;

    // Each task owns one (coupling, level) slot; exceptions cannot cross the
    // parallel region, so the first one is carried out by hand.
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < tasks; ++t) {
        try {
            const int i = t / (n_max + 1);
            const int n = t % (n_max + 1);
            out[i][n] = shooting::eigenvalue(n, with_g(base, gs[i]), e_tol);
        } catch (...) {
#pragma omp critical
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return out;
}

std::vector<PerturbRow> perturb_table(int n_max, double quad_tol)
{
    if (n_max < 0 || n_max > 50)
        throw ConfigError("perturb_table: n_max must lie in [0, 50]");
    std::vector<PerturbRow> rows(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        rows[n] = {n, perturb::unperturbed_energy(n), perturb::first_order(n),
                   perturb::first_order_quadrature(n, quad_tol)};
    return rows;
}

std::vector<PerturbRow> perturb_table_omp(int n_max, double quad_tol)
{
    if (n_max < 0 || n_max > 50)
        throw ConfigError("perturb_table: n_max must lie in [0, 50]");
    std::vector<PerturbRow> rows(n_max + 1);
    std::exception_ptr failure = nullptr;

#pragma omp parallel for schedule(dynamic)
    for (int n = 0; n <= n_max; ++n) {
        try {
            rows[n] = {n, perturb::unperturbed_energy(n), perturb::first_order(n),
                       perturb::first_order_quadrature(n, quad_tol)};
        } catch (...) {
#pragma omp critical
            if (!failure)
                failure = std::current_exception();
        }
    }
    if (failure)
        std::rethrow_exception(failure);
    return rows;
}

}
