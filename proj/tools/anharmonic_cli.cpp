// Command-line front end: trajectories, coefficient tables, spectra and the
// acceptance run. Exit codes: 0 ok, 1 verification failure, 2 usage error,
// 3 numerical failure.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "anharmonic/acceptance.hpp"
#include "anharmonic/closed_form.hpp"
#include "anharmonic/fock.hpp"
#include "anharmonic/ode_oracle.hpp"
#include "anharmonic/reports.hpp"
#include "anharmonic/series.hpp"

namespace {

using namespace anharmonic;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_numerical = 3;

struct RunConfig {
    int m = 3;
    double lambda = 0.01;
    double x0 = 2.0;
    double v0 = 0.0;
    double t_end = 50.0;
    int samples = 0; // 0: 200 per base period
    std::optional<int> n;
    int dim = 120;
    double rel_tol = default_rel_tol;
    std::string out_path;
    // coeffs
    std::optional<int> i;
    int count = 8;
    int max_order = 16;
    std::string kind = "sequences";
    // quantum
    bool elements = false;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ANHARMONIC_OUT_DIR, if set, relocates relative output paths.
std::filesystem::path resolve_output(const std::string& path)
{
    std::filesystem::path p(path);
    if (const char* dir = std::getenv("ANHARMONIC_OUT_DIR"); dir && *dir && p.is_relative())
        return std::filesystem::path(dir) / p;
    return p;
}

template <class Writer>
void emit(const RunConfig& cfg, Writer&& write)
{
    if (cfg.out_path.empty() || cfg.out_path == "-") {
        write(std::cout);
        return;
    }
    const auto path = resolve_output(cfg.out_path);
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open output file " + path.string());
    write(file);
    if (!file) throw std::runtime_error("failed writing " + path.string());
}

std::vector<double> sample_grid(const RunConfig& cfg)
{
    const int samples = cfg.samples > 0 ? cfg.samples : default_sample_count(cfg.t_end);
    return uniform_grid(cfg.t_end, samples);
}

void trajectory_command(const RunConfig& cfg)
{
    const OscillatorSpec spec(cfg.m, cfg.lambda);
    const InitialState state(cfg.x0, cfg.v0);
    const auto grid = sample_grid(cfg);
    const Trajectory oracle = integrate(spec, state, grid, cfg.rel_tol);
    bool warned = false;
    emit(cfg, [&](std::ostream& os) { warned = write_trajectory_table(os, spec, state, grid, &oracle); });
    if (warned)
        std::cerr << "warning: |shift * t| exceeds 0.5 on part of the grid; the resummed solution is outside the "
                     "weak-coupling regime there\n";
}

void figure1_command(RunConfig cfg)
{
    cfg.m = 3;
    cfg.lambda = figure1_lambda;
    cfg.x0 = figure1_amplitude;
    cfg.v0 = 0.0;
    cfg.t_end = figure1_t_end;
    trajectory_command(cfg);
    const auto cmp = compare_with_oracle(OscillatorSpec(3, figure1_lambda), figure1_amplitude, figure1_t_end,
                                         40.0, 60.0, cfg.rel_tol);
    std::cerr << "sup |renormalized - oracle| on [0, 50] = " << cmp.renormalized_sup_error << '\n'
              << "max |first order - oracle| on [40, 60] = " << cmp.first_order_max_error << '\n';
}

void coeffs_command(const RunConfig& cfg)
{
    if (cfg.kind == "harmonics") {
        emit(cfg, [&](std::ostream& os) { write_harmonic_table(os, cfg.m); });
    } else if (cfg.kind == "sequences") {
        if (cfg.i) emit(cfg, [&](std::ostream& os) { write_coefficient_table(os, cfg.m, *cfg.i, cfg.count); });
        else emit(cfg, [&](std::ostream& os) { write_coefficient_table(os, cfg.m, cfg.max_order); });
    } else {
        throw UsageError("--kind must be 'sequences' or 'harmonics'");
    }
}

void quantum_command(const RunConfig& cfg)
{
    const OscillatorSpec spec(cfg.m, cfg.lambda);
    if (cfg.elements) {
        const int n = cfg.n.value_or(1);
        const auto grid = sample_grid(cfg);
        emit(cfg, [&](std::ostream& os) { write_dipole_table(os, spec, cfg.dim, n, grid); });
        return;
    }
    std::vector<int> levels;
    if (cfg.n) levels.push_back(*cfg.n);
    else {
        levels.resize(5);
        std::iota(levels.begin(), levels.end(), 0);
    }
    emit(cfg, [&](std::ostream& os) { write_shift_table(os, spec, cfg.dim, levels); });
}

void spectrum_command(const RunConfig& cfg)
{
    const OscillatorSpec spec(cfg.m, cfg.lambda);
    emit(cfg, [&](std::ostream& os) { write_spectrum_table(os, spec, cfg.dim, cfg.n.value_or(4)); });
}

int verify_command()
{
    return report_acceptance(std::cout, run_acceptance()) ? exit_ok : exit_verify_failed;
}

void add_model_flags(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--m", cfg.m, "anharmonicity index (potential x^(2m))")->check(CLI::Range(2, 64));
    cmd->add_option("--lambda", cfg.lambda, "anharmonic constant");
    cmd->add_option("--out", cfg.out_path, "output CSV path (default: stdout)");
}

void add_time_flags(CLI::App* cmd, RunConfig& cfg)
{
    cmd->add_option("--t-end", cfg.t_end, "end of the time grid")->check(CLI::PositiveNumber);
    cmd->add_option("--samples", cfg.samples, "number of grid points (default: 200 per base period)")
        ->check(CLI::Range(2, 100000000));
    cmd->add_option("--rel-tol", cfg.rel_tol, "integrator relative tolerance")->check(CLI::Range(1e-13, 1e-3));
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"First-order sextic and octic anharmonic oscillators: classical and quantum checks"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* classical = app.add_subcommand("classical", "trajectory CSV: zeroth, first-order, resummed, oracle");
    add_model_flags(classical, cfg);
    add_time_flags(classical, cfg);
    classical->add_option("--x0", cfg.x0, "initial position");
    classical->add_option("--v0", cfg.v0, "initial velocity");

    auto* figure1 = app.add_subcommand("figure1", "a = 2, lambda = 0.01 sextic trajectory over [0, 50]");
    figure1->add_option("--out", cfg.out_path, "output CSV path (default: stdout)");
    figure1->add_option("--samples", cfg.samples, "number of grid points")->check(CLI::Range(2, 100000000));
    figure1->add_option("--rel-tol", cfg.rel_tol, "integrator relative tolerance")->check(CLI::Range(1e-13, 1e-3));

    auto* coeffs = app.add_subcommand("coeffs", "exact coefficient tables");
    coeffs->add_option("--m", cfg.m, "anharmonicity index")->check(CLI::Range(2, 64));
    coeffs->add_option("--out", cfg.out_path, "output CSV path (default: stdout)");
    coeffs->add_option("--i", cfg.i, "monomial index: coefficient of x0^(2m-1-i) v0^i");
    coeffs->add_option("--count", cfg.count, "number of sequence entries with --i")->check(CLI::PositiveNumber);
    coeffs->add_option("--max-order", cfg.max_order, "highest Taylor order for the full table")
        ->check(CLI::Range(2, 200));
    coeffs->add_option("--kind", cfg.kind, "sequences (default) or harmonics");

    auto* quantum = app.add_subcommand("quantum", "level-gap shifts, or matrix elements with --elements");
    add_model_flags(quantum, cfg);
    add_time_flags(quantum, cfg);
    quantum->add_option("--n", cfg.n, "level index (default: 0..4)")->check(CLI::NonNegativeNumber);
    quantum->add_option("--dim", cfg.dim, "Fock-space truncation N")->check(CLI::Range(2, 2000));
    quantum->add_flag("--elements", cfg.elements, "write <n-1|X(t)|n> over the time grid");

    auto* spectrum = app.add_subcommand("spectrum", "diagonalized levels against first-order energies");
    add_model_flags(spectrum, cfg);
    spectrum->add_option("--n", cfg.n, "highest level n_max (default 4)")->check(CLI::NonNegativeNumber);
    spectrum->add_option("--dim", cfg.dim, "Fock-space truncation N")->check(CLI::Range(2, 2000));

    auto* verify = app.add_subcommand("verify", "run every acceptance criterion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*classical) trajectory_command(cfg);
        else if (*figure1) figure1_command(cfg);
        else if (*coeffs) coeffs_command(cfg);
        else if (*quantum) quantum_command(cfg);
        else if (*spectrum) spectrum_command(cfg);
        else if (*verify) return verify_command();
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return exit_usage;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return exit_numerical;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_numerical;
    }
    return exit_ok;
}
