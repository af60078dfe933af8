#include "anharmonic/ode_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/numeric/odeint.hpp>

namespace anharmonic {

namespace {

using State = std::array<double, 2>;
namespace odeint = boost::numeric::odeint;

struct EquationOfMotion {
    double lambda;
    int force_degree;

    void operator()(const State& s, State& ds, double /*t*/) const
    {
        ds[0] = s[1];
        ds[1] = -s[0] - lambda * std::pow(s[0], force_degree);
    }
};

} // namespace

Trajectory integrate(const OscillatorSpec& spec, const InitialState& state, std::span<const double> sample_times,
                     double rel_tol)
{
    if (!(rel_tol >= 1e-13 && rel_tol <= 1e-3)) throw std::invalid_argument("rel_tol must lie in [1e-13, 1e-3]");
    if (sample_times.empty()) throw std::invalid_argument("no sample times requested");
    if (sample_times.front() < 0.0) throw std::invalid_argument("sample times must be non-negative");
    for (std::size_t k = 1; k < sample_times.size(); ++k)
        if (!(sample_times[k] > sample_times[k - 1]))
            throw std::invalid_argument("sample times must be strictly increasing");

    const EquationOfMotion eom{spec.lambda(), spec.force_degree()};
    const double h0 = hamiltonian_energy(spec, state);
    const double scale = std::max({std::abs(state.x0), std::abs(state.v0), std::sqrt(std::abs(2.0 * h0))});
    const double abs_tol = rel_tol * (scale > 0.0 ? scale : 1.0);

    auto stepper = odeint::make_dense_output(abs_tol, rel_tol, odeint::runge_kutta_dopri5<State>());

    Trajectory traj;
    traj.times.reserve(sample_times.size());
    traj.positions.reserve(sample_times.size());
    traj.velocities.reserve(sample_times.size());

    auto record_energy = [&](const State& s) {
        traj.energy_drift = std::max(traj.energy_drift, std::abs(hamiltonian_energy(spec, s[0], s[1]) - h0));
    };
    auto record_sample = [&](double t, const State& s) {
        traj.times.push_back(t);
        traj.positions.push_back(s[0]);
        traj.velocities.push_back(s[1]);
        record_energy(s);
    };

    const double t_end = sample_times.back();
    std::size_t next = 0;
    if (sample_times.front() == 0.0) {
        record_sample(0.0, {state.x0, state.v0});
        next = 1;
    }
    if (next == sample_times.size()) return traj;

    stepper.initialize(State{state.x0, state.v0}, 0.0, std::min(1e-3, t_end));
    State interpolated{};
    try {
        while (next < sample_times.size()) {
            const double t_before = stepper.current_time();
            stepper.do_step(eom);
            ++traj.steps;
            const double t_now = stepper.current_time();
            const double taken = t_now - t_before;
            if (!(taken > 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(t_now))))
                throw NumericalError("step-size underflow at t = " + std::to_string(t_now));
            record_energy(stepper.current_state());
            while (next < sample_times.size() && sample_times[next] <= t_now) {
                stepper.calc_state(sample_times[next], interpolated);
                record_sample(sample_times[next], interpolated);
                ++next;
            }
        }
    } catch (const odeint::step_adjustment_error& e) {
        throw NumericalError(std::string("step adjustment failed: ") + e.what());
    }
    return traj;
}

std::vector<double> uniform_grid(double t_end, int samples)
{
    if (!(t_end > 0.0)) throw std::invalid_argument("t_end must be positive");
    if (samples < 2) throw std::invalid_argument("need at least two samples");
    std::vector<double> grid(static_cast<std::size_t>(samples));
    for (int k = 0; k < samples; ++k) grid[k] = t_end * k / (samples - 1);
    grid.back() = t_end;
    return grid;
}

int default_sample_count(double t_end)
{
    return static_cast<int>(std::ceil(t_end / (2.0 * std::numbers::pi) * default_samples_per_period)) + 1;
}

Trajectory integrate(const OscillatorSpec& spec, const InitialState& state, double t_end, double rel_tol,
                     int samples_per_period)
{
    if (!(t_end > 0.0)) throw std::invalid_argument("t_end must be positive");
    if (samples_per_period < 1) throw std::invalid_argument("samples_per_period must be positive");
    const int samples =
        static_cast<int>(std::ceil(t_end / (2.0 * std::numbers::pi) * samples_per_period)) + 1;
    const auto grid = uniform_grid(t_end, std::max(samples, 2));
    return integrate(spec, state, grid, rel_tol);
}

double estimate_frequency(const Trajectory& traj)
{
    std::vector<double> crossings;
    const auto& t = traj.times;
    const auto& x = traj.positions;
    for (std::size_t k = 1; k < x.size(); ++k) {
        if (x[k - 1] < 0.0 && x[k] >= 0.0) {
            const double frac = -x[k - 1] / (x[k] - x[k - 1]);
            crossings.push_back(t[k - 1] + frac * (t[k] - t[k - 1]));
        }
    }
    if (crossings.size() < 6)
        throw NumericalError("too few upward zero crossings (" + std::to_string(crossings.size())
                             + ") for a frequency estimate; need 6");
    const double mean_period = (crossings.back() - crossings.front()) / static_cast<double>(crossings.size() - 1);
    return 2.0 * std::numbers::pi / mean_period;
}

Trajectory subsample(const Trajectory& traj, std::size_t stride)
{
    if (stride == 0) throw std::invalid_argument("stride must be positive");
    Trajectory out;
    out.energy_drift = traj.energy_drift;
    out.steps = traj.steps;
    for (std::size_t k = 0; k < traj.times.size(); k += stride) {
        out.times.push_back(traj.times[k]);
        out.positions.push_back(traj.positions[k]);
        out.velocities.push_back(traj.velocities[k]);
    }
    return out;
}

} // namespace anharmonic
