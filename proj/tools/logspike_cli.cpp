// Command-line front end: every computation behind one executable with
// machine-readable CSV or JSON output for reproduction scripts and plots.

#include "logspike/errors.hpp"
#include "logspike/perturb.hpp"
#include "logspike/shooting.hpp"
#include "logspike/sweep.hpp"
#include "logspike/transformed.hpp"
#include "logspike/version.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using logspike::shooting::Parity;

std::string fmt12(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

const char* parity_name(Parity p)
{
    return p == Parity::Even ? "even" : "odd";
}

// One output cell: a raw token (number, bool, or empty = missing) or a
// string that JSON must quote. Cells are rendered once so both formats
// emit identical digits.
struct Cell {
    std::string token;
    bool quoted = false;
};

Cell num(double v) { return {fmt12(v), false}; }
Cell num(int v) { return {std::to_string(v), false}; }
Cell str(std::string s) { return {std::move(s), true}; }
Cell boolean(bool b) { return {b ? "true" : "false", false}; }
Cell none() { return {"", false}; }

struct Table {
    std::string command;
    std::vector<std::pair<std::string, Cell>> params;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    std::optional<std::string> error;
};

std::string json_escape(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

void render_csv(const Table& t, std::ostream& os)
{
    os << "# command = " << t.command << "\n";
    os << "# version = " << logspike::version << "\n";
    for (const auto& [k, v] : t.params)
        os << "# " << k << " = " << v.token << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i];
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << row[i].token;
        os << "\n";
    }
    if (t.error)
        os << "# error = " << *t.error << "\n";
}

void render_json(const Table& t, std::ostream& os)
{
    const auto cell = [](const Cell& c) -> std::string {
        if (c.quoted)
            return "\"" + json_escape(c.token) + "\"";
        return c.token.empty() ? "null" : c.token;
    };
    os << "{\n\"meta\": {\"command\": \"" << t.command << "\", \"version\": \""
       << logspike::version << "\", \"parameters\": {";
    for (std::size_t i = 0; i < t.params.size(); ++i)
        os << (i ? ", " : "") << "\"" << t.params[i].first << "\": "
           << cell(t.params[i].second);
    os << "}},\n\"rows\": [\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        os << "{";
        for (std::size_t i = 0; i < t.rows[r].size(); ++i)
            os << (i ? ", " : "") << "\"" << t.columns[i] << "\": " << cell(t.rows[r][i]);
        os << "}" << (r + 1 < t.rows.size() ? "," : "") << "\n";
    }
    os << "]";
    if (t.error)
        os << ",\n\"error\": \"" << json_escape(*t.error) << "\"";
    os << "\n}\n";
}

int emit(const Table& t, const std::string& format, const std::string& out_path)
{
    std::ostringstream body;
    if (format == "json")
        render_json(t, body);
    else
        render_csv(t, body);
    if (out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(out_path);
        if (!f)
            throw logspike::ConfigError("cannot open output file: " + out_path);
        f << body.str();
    }
    return t.error ? 1 : 0;
}

}

int main(int argc, char** argv)
{
    CLI::App app{"bound states of a square well with a central logarithmic spike"};
    app.require_subcommand(1);
    app.fallthrough();  // --format / --out are accepted after the subcommand too
    app.set_version_flag("--version", logspike::version);

    std::string format = "csv";
    std::string out_path;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "write output to this file instead of stdout");

    double g = 1.0;
    int n_max = 4;
    int level = 0;
    int points = 401;
    double e_tol = 1e-10;
    double delta = 1e-10;
    std::string normalization = "max";
    std::vector<std::string> pairs;
    std::vector<double> energies;
    std::vector<double> lambda_maxes;

    auto* perturb_cmd = app.add_subcommand(
        "perturb", "first-order energy coefficients, closed form vs quadrature");
    int perturb_n_max = 9;
    perturb_cmd->add_option("--n-max", perturb_n_max, "highest level")
        ->check(CLI::Range(0, 50))
        ->capture_default_str();

    auto* crossings_cmd = app.add_subcommand(
        "crossings", "couplings where first-order energy lines intersect");
    crossings_cmd->add_option("pairs", pairs, "level pairs, each as m,n with m < n")
        ->required();

    auto* spectrum_cmd = app.add_subcommand(
        "spectrum", "converged energy levels by half-interval shooting");
    spectrum_cmd->add_option("--g", g, "coupling")->capture_default_str();
    spectrum_cmd->add_option("--n-max", n_max, "highest level")
        ->check(CLI::Range(0, 50))
        ->capture_default_str();
    spectrum_cmd->add_option("--e-tol", e_tol, "bisection width")->capture_default_str();
    spectrum_cmd->add_option("--delta", delta, "shooting cutoff")->capture_default_str();

    auto* wave_cmd = app.add_subcommand(
        "wavefunction", "eigenfunction samples on a uniform grid");
    wave_cmd->add_option("--g", g, "coupling")->capture_default_str();
    wave_cmd->add_option("--level", level, "level index")
        ->check(CLI::Range(0, 50))
        ->capture_default_str();
    wave_cmd->add_option("--points", points, "grid size")->capture_default_str();
    wave_cmd->add_option("--e-tol", e_tol, "bisection width")->capture_default_str();
    wave_cmd->add_option("--delta", delta, "shooting cutoff")->capture_default_str();
    wave_cmd->add_option("--normalization", normalization, "max or l2")
        ->check(CLI::IsMember({"max", "l2"}))
        ->capture_default_str();

    auto* approx_cmd = app.add_subcommand(
        "approx", "rectangular-barrier eigenvalues next to the converged ones");
    approx_cmd->add_option("--g", g, "coupling")->capture_default_str();
    approx_cmd->add_option("--n-max", n_max, "highest level")
        ->check(CLI::Range(0, 50))
        ->capture_default_str();
    approx_cmd->add_option("--e-tol", e_tol, "bisection width")->capture_default_str();

    auto* transform_cmd = app.add_subcommand(
        "transform-study", "backward-sweep conditioning of the log-coordinate form");
    transform_cmd->add_option("--g", g, "coupling")->capture_default_str();
    transform_cmd->add_option("--energy", energies, "energy value (repeatable)");
    transform_cmd->add_option("--lambda-max", lambda_maxes,
                              "truncation point (repeatable, increasing)");

    CLI11_PARSE(app, argc, argv);

    try {
        Table t;

        if (perturb_cmd->parsed()) {
            const double quad_tol = 1e-10;
            t.command = "perturb";
            t.params = {{"n_max", num(perturb_n_max)}, {"quad_tol", num(quad_tol)}};
            t.columns = {"n", "parity", "e0", "e1_closed", "e1_quadrature",
                         "abs_difference"};
            for (const auto& r : logspike::sweep::perturb_table_omp(perturb_n_max, quad_tol))
                t.rows.push_back({num(r.n), str(parity_name(logspike::shooting::parity_of(r.n))),
                                  num(r.e0), num(r.e1_closed), num(r.e1_quadrature),
                                  num(std::fabs(r.e1_closed - r.e1_quadrature))});
        } else if (crossings_cmd->parsed()) {
            t.command = "crossings";
            std::string joined;
            for (const auto& p : pairs)
                joined += (joined.empty() ? "" : " ") + p;
            t.params = {{"pairs", str(joined)}};
            t.columns = {"m", "n", "g_cross", "spurious"};
            for (const auto& p : pairs) {
                int m, n;
                if (std::sscanf(p.c_str(), "%d,%d", &m, &n) != 2)
                    throw logspike::ConfigError("crossings: pair must look like m,n: " + p);
                const auto c = logspike::perturb::crossing(m, n);
                if (c)
                    t.rows.push_back({num(m), num(n), num(c->g_cross), boolean(c->spurious)});
                else
                    t.rows.push_back({num(m), num(n), none(), none()});
            }
        } else if (spectrum_cmd->parsed()) {
            t.command = "spectrum";
            t.params = {{"g", num(g)}, {"n_max", num(n_max)}, {"e_tol", num(e_tol)},
                        {"delta", num(delta)}};
            t.columns = {"n", "parity", "e_numeric", "e_first_order", "residual_mismatch"};
            logspike::shooting::ModelParams mp;
            mp.g = g;
            mp.delta = delta;
            try {
                for (int n = 0; n <= n_max; ++n) {
                    const auto lvl = logspike::shooting::eigenvalue(n, mp, e_tol);
                    t.rows.push_back({num(n), str(parity_name(lvl.parity)), num(lvl.energy),
                                      num(logspike::perturb::linear_energy(n, g)),
                                      num(logspike::shooting::mismatch(lvl.energy, mp, lvl.parity))});
                }
            } catch (const logspike::BracketError& e) {
                t.error = e.what();
            }
        } else if (wave_cmd->parsed()) {
            t.command = "wavefunction";
            logspike::shooting::ModelParams mp;
            mp.g = g;
            mp.delta = delta;
            const auto lvl = logspike::shooting::eigenvalue(level, mp, e_tol);
            const auto norm = normalization == "l2"
                                  ? logspike::shooting::Normalization::L2One
                                  : logspike::shooting::Normalization::MaxAbsOne;
            const auto grid = logspike::shooting::wavefunction(lvl, mp, points, norm);
            t.params = {{"g", num(g)},
                        {"level", num(level)},
                        {"parity", str(parity_name(lvl.parity))},
                        {"energy", num(lvl.energy)},
                        {"points", num(points)},
                        {"e_tol", num(e_tol)},
                        {"delta", num(delta)},
                        {"normalization", str(normalization)}};
            t.columns = {"x", "psi"};
            for (const auto& s : grid.samples)
                t.rows.push_back({num(s.x), num(s.psi)});
        } else if (approx_cmd->parsed()) {
            t.command = "approx";
            t.params = {{"g", num(g)}, {"n_max", num(n_max)}, {"e_tol", num(e_tol)}};
            t.columns = {"n", "parity", "e_rect", "e_shoot", "abs_difference", "d", "kappa"};
            logspike::shooting::ModelParams mp;
            mp.g = g;
            for (int n = 0; n <= n_max; ++n) {
                const double er = logspike::shooting::rect_approx_energy(n, g, e_tol);
                const auto lvl = logspike::shooting::eigenvalue(n, mp, e_tol);
                const auto bar = logspike::shooting::barrier(er, g);
                t.rows.push_back({num(n), str(parity_name(lvl.parity)), num(er),
                                  num(lvl.energy), num(std::fabs(er - lvl.energy)),
                                  num(bar.d), num(bar.kappa)});
            }
        } else if (transform_cmd->parsed()) {
            t.command = "transform-study";
            if (energies.empty())
                energies = {5.55, 5.45};
            if (lambda_maxes.empty())
                lambda_maxes = {3.5, 3.75, 4.0, 4.25};
            std::string es, ls;
            for (double e : energies)
                es += (es.empty() ? "" : " ") + fmt12(e);
            for (double l : lambda_maxes)
                ls += (ls.empty() ? "" : " ") + fmt12(l);
            t.params = {{"g", num(g)}, {"energies", str(es)}, {"lambda_maxes", str(ls)}};
            t.columns = {"e", "lambda_max", "phi_at_zero", "difference"};
            for (const auto& row :
                 logspike::transformed::conditioning_study(energies, lambda_maxes, g))
                t.rows.push_back({num(row.E), num(row.lambda_max), num(row.phi_at_zero),
                                  row.difference ? num(*row.difference) : none()});
        }

        return emit(t, format, out_path);
    } catch (const logspike::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
