#include "logspike/transformed.hpp"
#include "logspike/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace logspike::transformed {

namespace {

constexpr double kRelTol = 1e-10;
constexpr double kAbsTol = 1e-12;
constexpr double kRescaleAt = 1e12;

void validate(const TransformedParams& p)
{
    if (!(p.g > 0))
        throw ConfigError("transformed: coupling must be positive");
    if (!(p.lambda_max >= 1.0 && p.lambda_max <= 50.0))
        throw ConfigError("transformed: lambda_max must lie in [1, 50]");
    if (!std::isfinite(p.E))
        throw DomainError("transformed: energy must be finite");
}

ode::Coefficient left_coefficient(double E, double g)
{
    return [E, g](double l) { return transformed_coefficient(l, E, g); };
}

}

double transformed_coefficient(double lambda, double E, double g)
{
    return 0.25 - std::exp(-2.0 * lambda) * (E - 2.0 * g * lambda);
}

ForwardSolution forward_solve(const TransformedParams& p, bool record)
{
    validate(p);
    const auto c = left_coefficient(p.E, p.g);

    ForwardSolution out;
    ode::IvpState s{0.0, 0.0, 1.0};
    if (record)
        out.solution.trajectory.push_back(s);
    out.solution.max_abs_y = 0.0;
    out.solution.max_abs_dy = 1.0;

    // March in unit legs; the solution grows like exp(lambda/2) (faster for
    // very negative E), so the state is pulled back to O(1) whenever it
    // passes the rescale threshold. Earlier recorded states are rescaled
    // too, keeping the whole trajectory in one common unit.
    double lam = 0.0;
    while (lam < p.lambda_max) {
        const double next = std::min(lam + 1.0, p.lambda_max);
        auto leg = ode::integrate_ivp(c, s, next, kRelTol, kAbsTol, record);
        s = leg.final;
        lam = next;
        out.solution.steps_taken += leg.steps_taken;
        out.solution.max_abs_y = std::max(out.solution.max_abs_y, leg.max_abs_y);
        out.solution.max_abs_dy = std::max(out.solution.max_abs_dy, leg.max_abs_dy);
        if (record)
            out.solution.trajectory.insert(out.solution.trajectory.end(),
                                           leg.trajectory.begin() + 1, leg.trajectory.end());

        const double m = std::max(std::fabs(s.y), std::fabs(s.dy));
        if (m > kRescaleAt) {
            s.y /= m;
            s.dy /= m;
            out.log_scale += std::log(m);
            out.solution.max_abs_y /= m;
            out.solution.max_abs_dy /= m;
            for (auto& st : out.solution.trajectory) {
                st.y /= m;
                st.dy /= m;
            }
        }
    }
    out.solution.final = s;
    return out;
}

double backward_solve(const TransformedParams& p)
{
    validate(p);
    const auto c = left_coefficient(p.E, p.g);
    const ode::IvpState from{p.lambda_max, 1.0, 0.0};
    return ode::integrate_ivp(c, from, 0.0, kRelTol, kAbsTol, false).final.y;
}

std::vector<ConditioningRow> conditioning_study(std::span<const double> energies,
                                                std::span<const double> lambda_maxes,
                                                double g)
{
    if (energies.empty() || lambda_maxes.empty())
        throw ConfigError("conditioning_study: energy and lambda_max lists must be non-empty");
    for (std::size_t i = 1; i < lambda_maxes.size(); ++i)
        if (!(lambda_maxes[i] > lambda_maxes[i - 1]))
            throw ConfigError("conditioning_study: lambda_max values must be strictly increasing");

    std::vector<ConditioningRow> rows;
    rows.reserve(energies.size() * lambda_maxes.size());
    for (double E : energies) {
        std::optional<double> prev;
        for (double lm : lambda_maxes) {
            const double phi0 = backward_solve({g, E, lm});
            ConditioningRow row{E, lm, phi0, std::nullopt};
            if (prev)
                row.difference = *prev - phi0;
            prev = phi0;
            rows.push_back(row);
        }
    }
    return rows;
}

double right_side_equivalence(double E, double g, double lambda_max)
{
    validate({g, E, lambda_max});

    const auto c_right = [E, g](double rho) {
        return 0.25 - std::exp(2.0 * rho) * (E + 2.0 * g * rho);
    };

    constexpr int kStops = 64;
    std::vector<double> left_stops(kStops), right_stops(kStops);
    for (int i = 1; i <= kStops; ++i) {
        left_stops[i - 1] = lambda_max * i / kStops;
        right_stops[i - 1] = -left_stops[i - 1];
    }

    const auto left = ode::sample_at(left_coefficient(E, g), {0.0, 0.0, 1.0},
                                     left_stops, 1e-12, 1e-14);
    const auto right = ode::sample_at(c_right, {0.0, 0.0, -1.0},
                                      right_stops, 1e-12, 1e-14);

    double worst = 0.0;
    for (int i = 0; i < kStops; ++i)
        worst = std::max(worst, std::fabs(left[i].y - right[i].y));
    return worst;
}

}
