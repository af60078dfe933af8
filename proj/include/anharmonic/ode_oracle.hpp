#pragma once

#include <span>
#include <vector>

#include "anharmonic/oscillator.hpp"

namespace anharmonic {

struct Trajectory {
    std::vector<double> times; // strictly increasing
    std::vector<double> positions;
    std::vector<double> velocities;
    double energy_drift = 0.0; // max |H(t) - H(0)| over accepted steps and samples
    std::size_t steps = 0;
};

inline constexpr double default_rel_tol = 1e-10;
inline constexpr int default_samples_per_period = 200;

// Integrates x'' + x + lambda x^(2m-1) = 0 from t = 0 with an adaptive
// Dormand-Prince 5(4) pair and dense output at the requested sample times.
// Sample times must be non-negative and strictly increasing.
// Throws NumericalError on step-size underflow.
Trajectory integrate(const OscillatorSpec& spec, const InitialState& state, std::span<const double> sample_times,
                     double rel_tol = default_rel_tol);

// Uniform grid on [0, t_end] with samples_per_period points per 2*pi.
Trajectory integrate(const OscillatorSpec& spec, const InitialState& state, double t_end,
                     double rel_tol = default_rel_tol, int samples_per_period = default_samples_per_period);

std::vector<double> uniform_grid(double t_end, int samples);
int default_sample_count(double t_end);

// Angular frequency from successive upward zero crossings of x(t), located
// by linear interpolation. Needs at least five full oscillations.
double estimate_frequency(const Trajectory& traj);

// Keeps every stride-th sample.
Trajectory subsample(const Trajectory& traj, std::size_t stride);

} // namespace anharmonic
