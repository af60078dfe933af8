#include "anharmonic/reports.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "anharmonic/closed_form.hpp"
#include "anharmonic/csv.hpp"

namespace anharmonic {

bool write_trajectory_table(std::ostream& out, const OscillatorSpec& spec, const InitialState& state,
                            std::span<const double> times, const Trajectory* oracle)
{
    if (oracle && oracle->times.size() != times.size())
        throw std::invalid_argument("oracle trajectory must be sampled on the same grid");
    const ClassicalSolution solution(spec, state);
    bool warned = false;
    out << "t,x_zeroth,x_first_order,x_renormalized";
    if (oracle) out << ",x_oracle";
    out << '\n';
    for (std::size_t k = 0; k < times.size(); ++k) {
        const double t = times[k];
        const auto renorm = solution.renormalized(t);
        warned = warned || renorm.weak_coupling_warning;
        out << format_real(t) << ',' << format_real(solution.zeroth_order(t)) << ','
            << format_real(solution.first_order(t)) << ',' << format_real(renorm.x);
        if (oracle) out << ',' << format_real(oracle->positions[k]);
        out << '\n';
    }
    return warned;
}

Figure1Comparison compare_with_oracle(const OscillatorSpec& spec, double amplitude, double resummed_window,
                                      double divergence_begin, double divergence_end, double rel_tol)
{
    const InitialState state{amplitude, 0.0};
    const double t_end = std::max(resummed_window, divergence_end);
    const auto grid = uniform_grid(t_end, default_sample_count(t_end) * 4);
    const Trajectory traj = integrate(spec, state, grid, rel_tol);
    const ClassicalSolution solution(spec, state);

    Figure1Comparison out;
    out.oracle_energy_drift = traj.energy_drift;
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double t = grid[k];
        const double exact = traj.positions[k];
        if (t <= resummed_window)
            out.renormalized_sup_error = std::max(out.renormalized_sup_error, std::abs(solution.renormalized(t).x - exact));
        if (t >= divergence_begin && t <= divergence_end)
            out.first_order_max_error = std::max(out.first_order_max_error, std::abs(solution.first_order(t) - exact));
    }
    return out;
}

} // namespace anharmonic
