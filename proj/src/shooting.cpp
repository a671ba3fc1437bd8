#include "logspike/shooting.hpp"
#include "logspike/errors.hpp"
#include "logspike/ode.hpp"
#include "logspike/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace logspike::shooting {

namespace {

void validate(const ModelParams& p)
{
    if (!(p.g >= 0))
        throw ConfigError("shooting: coupling must be non-negative");
    if (!(p.delta > 0 && p.delta < 0.01))
        throw ConfigError("shooting: delta must lie in (0, 0.01)");
}

ode::Coefficient well_coefficient(double E, double g)
{
    // psi'' = (V - E) psi with V(x) = -2 g ln|x|, valid on [-1, 0).
    return [E, g](double x) { return -2.0 * g * std::log(-x) - E; };
}

// Integrates the left half from x = -1 (psi = 0, psi' = 1) to the cutoff.
// Forced stops at -10^-k keep the controller honest across the spike; the
// adaptive steps alone would overshoot the narrow high barrier region.
struct HalfSolve {
    ode::IvpState at_cut;
    double scale;  // largest |psi| or |psi'| seen anywhere on the way
};

HalfSolve integrate_half(double E, const ModelParams& p)
{
    const auto c = well_coefficient(E, p.g);
    ode::IvpState s{-1.0, 0.0, 1.0};
    double scale = 1.0;
    double last_x = -1.0;
    for (int k = 2; ; ++k) {
        const double stop = -std::pow(10.0, -k);
        if (stop <= last_x || stop >= -p.delta * (1.0 + 1e-9))
            break;
        const auto leg = ode::integrate_ivp(c, s, stop, p.rel_tol, p.abs_tol, false);
        scale = std::max({scale, leg.max_abs_y, leg.max_abs_dy});
        s = leg.final;
        last_x = stop;
    }
    const auto leg = ode::integrate_ivp(c, s, -p.delta, p.rel_tol, p.abs_tol, false);
    scale = std::max({scale, leg.max_abs_y, leg.max_abs_dy});
    return {leg.final, scale};
}

std::vector<double> symmetric_grid(int points)
{
    std::vector<double> xs(points);
    for (int i = 0; i <= (points - 1) / 2; ++i) {
        const double x = -1.0 + 2.0 * i / (points - 1);
        xs[i] = x;
        xs[points - 1 - i] = -x;
    }
    if (points % 2 == 1)
        xs[points / 2] = 0.0;  // not -0.0, which -x leaves behind
    return xs;
}

void mirror_right(std::vector<double>& psi, const std::vector<double>& xs, Parity par)
{
    const int n = static_cast<int>(xs.size());
    const double sign = par == Parity::Even ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i)
        if (xs[i] > 0.0)
            psi[i] = psi[n - 1 - i] == 0.0 ? 0.0 : sign * psi[n - 1 - i];
}

void normalize(std::vector<double>& psi, const std::vector<double>& xs, Normalization norm)
{
    double s;
    if (norm == Normalization::MaxAbsOne) {
        s = 0.0;
        for (double v : psi)
            s = std::max(s, std::fabs(v));
    } else {
        const double dx = xs[1] - xs[0];
        double sum = 0.0;
        for (double v : psi)
            sum += v * v;
        sum -= 0.5 * (psi.front() * psi.front() + psi.back() * psi.back());
        s = std::sqrt(sum * dx);
    }
    if (s > 0.0)
        for (double& v : psi)
            v /= s;
}

WaveGrid pack(const std::vector<double>& xs, const std::vector<double>& psi,
              Normalization norm, bool clamp_warning)
{
    WaveGrid g;
    g.samples.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
        g.samples.push_back({xs[i], psi[i]});
    g.normalization = norm;
    g.clamp_warning = clamp_warning;
    return g;
}

// Exact eigenfunction samples on the symmetric grid, no convergence gate.
WaveGrid build_grid(double E, Parity par, const ModelParams& p, int points,
                    Normalization norm)
{
    const auto xs = symmetric_grid(points);
    std::vector<double> psi(points, 0.0);
    const auto c = well_coefficient(E, p.g);

    ode::IvpState s{-1.0, 0.0, 1.0};
    double last_x = -1.0;
    int gi = 1;
    int k = 2;
    for (;;) {
        const double xg = (gi < points && xs[gi] < -p.delta) ? xs[gi] : 1.0;
        double xd = 1.0;
        if (k <= 300) {
            const double cand = -std::pow(10.0, -k);
            if (cand < -p.delta * (1.0 + 1e-9))
                xd = cand;
        }
        const double nxt = std::min(xg, xd);
        if (nxt == 1.0)
            break;
        if (nxt > last_x) {
            s = ode::integrate_ivp(c, s, nxt, p.rel_tol, p.abs_tol, false).final;
            last_x = nxt;
        }
        if (nxt == xg) {
            psi[gi] = s.y;
            ++gi;
        }
        if (nxt == xd)
            ++k;
    }
    if (-p.delta > last_x)
        s = ode::integrate_ivp(c, s, -p.delta, p.rel_tol, p.abs_tol, false).final;

    // Grid points inside the cutoff gap: linear continuation from the cut
    // state, except that odd parity pins psi(0) = 0.
    for (; gi < points && xs[gi] <= 0.0; ++gi)
        psi[gi] = (par == Parity::Odd && xs[gi] == 0.0)
                      ? 0.0
                      : s.y + (xs[gi] + p.delta) * s.dy;

    mirror_right(psi, xs, par);
    normalize(psi, xs, norm);
    return pack(xs, psi, norm, false);
}

int count_nodes(const WaveGrid& grid)
{
    double maxabs = 0.0;
    for (const auto& s : grid.samples)
        maxabs = std::max(maxabs, std::fabs(s.psi));
    const double cut = 1e-8 * maxabs;
    int nodes = 0;
    int prev = 0;  // sign of the last sample clearly away from zero
    for (const auto& s : grid.samples) {
        if (std::fabs(s.psi) <= cut)
            continue;
        const int sg = s.psi > 0 ? 1 : -1;
        if (prev != 0 && sg != prev)
            ++nodes;
        prev = sg;
    }
    return nodes;
}

// Scans f upward from half a step below e0 in `steps` increments of
// span/steps, bisects each sign change to width e_tol, and returns the
// first root the acceptor approves. The window doubles twice on failure.
// Starting half a step low keeps a root sitting exactly at e0 (the g = 0
// limit) strictly inside the first cell.
template <class F, class Accept>
double scan_bisect(F&& f, double e0, double span0, int steps, double e_tol,
                   Accept&& accept, const char* who)
{
    double span = span0;
    for (int attempt = 0; attempt < 3; ++attempt, span *= 2) {
        const double h = span / steps;
        double prev_e = e0 - 0.5 * h;
        double prev_f = f(prev_e);
        for (int i = 0; i <= steps; ++i) {
            const double e = e0 + i * h;
            const double fe = f(e);
            if ((prev_f < 0) != (fe < 0)) {
                double lo = prev_e, hi = e, flo = prev_f;
                while (hi - lo > e_tol) {
                    const double mid = 0.5 * (lo + hi);
                    const double fm = f(mid);
                    if ((fm < 0) == (flo < 0)) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                const double root = 0.5 * (lo + hi);
                if (accept(root))
                    return root;
            }
            prev_e = e;
            prev_f = fe;
        }
    }
    throw BracketError(std::string(who) +
                       ": no acceptable sign change in the scan window, "
                       "even after widening it twice");
}

}

Parity parity_of(int n)
{
    if (n < 0)
        throw ConfigError("parity_of: level index must be non-negative");
    return n % 2 == 0 ? Parity::Even : Parity::Odd;
}

double potential(double x, double g)
{
    if (!(g >= 0))
        throw ConfigError("potential: coupling must be non-negative");
    if (x == 0.0 || std::fabs(x) > 1.0)
        throw DomainError("potential: x must lie in [-1, 1] excluding 0");
    return -2.0 * g * std::log(std::fabs(x));
}

double mismatch(double E, const ModelParams& p, Parity parity)
{
    validate(p);
    if (!std::isfinite(E))
        throw DomainError("mismatch: energy must be finite");
    const HalfSolve h = integrate_half(E, p);
    return (parity == Parity::Even ? h.at_cut.dy : h.at_cut.y) / h.scale;
}

EnergyLevel eigenvalue(int n, const ModelParams& p, double e_tol)
{
    validate(p);
    if (n < 0)
        throw ConfigError("eigenvalue: level index must be non-negative");
    if (!(e_tol >= 1e-12))
        throw ConfigError("eigenvalue: e_tol must be at least 1e-12");

    const Parity par = parity_of(n);
    const double e0 = perturb::unperturbed_energy(n);
    const int node_points = std::max(201, 16 * (n + 1));
    const auto accept = [&](double E) {
        return count_nodes(build_grid(E, par, p, node_points, Normalization::MaxAbsOne)) == n;
    };
    const double E = scan_bisect([&](double e) { return mismatch(e, p, par); },
                                 e0, 4.0 * p.g + 4.0, 64, e_tol, accept, "eigenvalue");
    return {n, par, E};
}

std::vector<EnergyLevel> spectrum(const ModelParams& p, int n_max, double e_tol)
{
    if (n_max < 0 || n_max > 50)
        throw ConfigError("spectrum: n_max must lie in [0, 50]");
    std::vector<EnergyLevel> levels;
    levels.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        levels.push_back(eigenvalue(n, p, e_tol));
        if (n > 0 && !(levels[n].energy > levels[n - 1].energy))
            throw BracketError("spectrum: computed levels are not strictly increasing");
    }
    return levels;
}

WaveGrid wavefunction(const EnergyLevel& level, const ModelParams& p, int points,
                      Normalization norm)
{
    validate(p);
    if (points < 16)
        throw ConfigError("wavefunction: need at least 16 grid points");
    if (level.n < 0 || parity_of(level.n) != level.parity || !std::isfinite(level.energy))
        throw StateError("wavefunction: inconsistent level");
    if (std::fabs(mismatch(level.energy, p, level.parity)) > 1e-3)
        throw StateError("wavefunction: level is not converged for these parameters");
    return build_grid(level.energy, level.parity, p, points, norm);
}

double barrier_halfwidth(double E, double g)
{
    if (!(g > 0))
        throw ConfigError("barrier_halfwidth: coupling must be positive");
    if (!std::isfinite(E))
        throw DomainError("barrier_halfwidth: energy must be finite");
    return std::exp(-E / (2.0 * g));
}

BarrierApprox barrier(double E, double g)
{
    if (!(E > 0))
        throw DomainError("barrier: the barrier model needs E > 0");
    return {E, barrier_halfwidth(E, g), std::sqrt(E), std::sqrt(2.0 * g)};
}

WaveGrid rect_approx_wavefunction(double E, double g, Parity parity, int points)
{
    if (points < 16)
        throw ConfigError("rect_approx_wavefunction: need at least 16 grid points");
    const BarrierApprox bar = barrier(E, g);

    // Outer amplitude 1 before normalization; the inner hyperbolic piece is
    // rescaled so the two pieces agree at x = -d.
    const double outer_at_d = std::sin(bar.k * (1.0 - bar.d));
    const double inner_scale = parity == Parity::Even
                                   ? outer_at_d / std::cosh(bar.kappa * bar.d)
                                   : -outer_at_d / std::sinh(bar.kappa * bar.d);

    const auto xs = symmetric_grid(points);
    std::vector<double> psi(points, 0.0);
    for (int i = 0; i < points && xs[i] <= 0.0; ++i) {
        if (xs[i] <= -bar.d)
            psi[i] = std::sin(bar.k * (xs[i] + 1.0));
        else
            psi[i] = inner_scale * (parity == Parity::Even ? std::cosh(bar.kappa * xs[i])
                                                           : std::sinh(bar.kappa * xs[i]));
    }
    mirror_right(psi, xs, parity);
    normalize(psi, xs, Normalization::MaxAbsOne);
    return pack(xs, psi, Normalization::MaxAbsOne, false);
}

WaveGrid wkb_approx_wavefunction(double E, double g, Parity parity, int points)
{
    if (points < 16)
        throw ConfigError("wkb_approx_wavefunction: need at least 16 grid points");
    const BarrierApprox bar = barrier(E, g);

    // Local wavenumber outside the turning points. It vanishes at |x| = d,
    // so the continuity match hands the inner piece amplitude zero: the
    // model is kept literal instead of borrowing the rectangular constants.
    bool clamped = false;
    const auto mu = [&](double x) {
        const double r = E - potential(x, g);
        if (r < 0.0) {
            if (r < -1e-12 * (std::fabs(E) + 1.0))
                clamped = true;
            return 0.0;
        }
        return std::sqrt(r);
    };

    const auto xs = symmetric_grid(points);
    std::vector<double> psi(points, 0.0);
    for (int i = 0; i < points && xs[i] <= 0.0; ++i) {
        if (xs[i] <= -bar.d)
            psi[i] = std::sin(mu(xs[i]) * (xs[i] + 1.0));
        // inside the turning points the amplitude is zero
    }
    mirror_right(psi, xs, parity);
    normalize(psi, xs, Normalization::MaxAbsOne);
    return pack(xs, psi, Normalization::MaxAbsOne, clamped);
}

double rect_approx_energy(int n, double g, double e_tol)
{
    if (n < 0)
        throw ConfigError("rect_approx_energy: level index must be non-negative");
    if (!(g > 0))
        throw ConfigError("rect_approx_energy: coupling must be positive");
    if (!(e_tol >= 1e-12))
        throw ConfigError("rect_approx_energy: e_tol must be at least 1e-12");

    const Parity par = parity_of(n);
    // Continuity of value and slope at x = -d, cleared of denominators so
    // the root function has no poles:
    //   even:  k cos(th) cosh(ph) + kappa sinh(ph) sin(th) = 0
    //   odd:   k cos(th) sinh(ph) + kappa cosh(ph) sin(th) = 0
    // with th = k (1 - d), ph = kappa d.
    const auto f = [g, par](double E) {
        if (!(E > 0))
            return 1.0;  // no bound-state geometry at non-positive energy
        const double d = std::exp(-E / (2.0 * g));
        const double k = std::sqrt(E);
        const double kap = std::sqrt(2.0 * g);
        const double th = k * (1.0 - d);
        const double ph = kap * d;
        return par == Parity::Even
                   ? k * std::cos(th) * std::cosh(ph) + kap * std::sinh(ph) * std::sin(th)
                   : k * std::cos(th) * std::sinh(ph) + kap * std::cosh(ph) * std::sin(th);
    };
    // The outer phase th fixes the node count of the piecewise solution.
    const auto accept = [g, par, n](double E) {
        if (!(E > 0))
            return false;
        const double d = std::exp(-E / (2.0 * g));
        if (d >= 1.0)
            return false;
        const double th = std::sqrt(E) * (1.0 - d);
        const int nodes = 2 * static_cast<int>(std::floor(th / std::numbers::pi)) +
                          (par == Parity::Odd ? 1 : 0);
        return nodes == n;
    };
    return scan_bisect(f, perturb::unperturbed_energy(n), 4.0 * g + 4.0, 64, e_tol,
                       accept, "rect_approx_energy");
}

}
