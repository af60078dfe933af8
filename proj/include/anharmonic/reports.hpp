#pragma once

#include <iosfwd>

#include "anharmonic/ode_oracle.hpp"
#include "anharmonic/oscillator.hpp"

namespace anharmonic {

// Columns t, x_zeroth, x_first_order, x_renormalized, and x_oracle when an
// oracle trajectory sampled at the same times is supplied.
// Returns true if any row violated the weak-coupling condition.
bool write_trajectory_table(std::ostream& out, const OscillatorSpec& spec, const InitialState& state,
                            std::span<const double> times, const Trajectory* oracle = nullptr);

struct Figure1Comparison {
    double renormalized_sup_error = 0.0; // sup |renormalized - oracle| on [0, resummed_window]
    double first_order_max_error = 0.0;  // max |first order - oracle| on the divergence window
    double oracle_energy_drift = 0.0;
};

// Sextic oscillator with x0 = a, v0 = 0: compares the resummed solution with
// the oracle on [0, resummed_window] and the un-resummed one on
// [divergence_begin, divergence_end].
Figure1Comparison compare_with_oracle(const OscillatorSpec& spec, double amplitude, double resummed_window,
                                      double divergence_begin, double divergence_end,
                                      double rel_tol = default_rel_tol);

// The a = 2, lambda = 0.01 sextic preset over [0, 50].
inline constexpr double figure1_lambda = 0.01;
inline constexpr double figure1_amplitude = 2.0;
inline constexpr double figure1_t_end = 50.0;

} // namespace anharmonic
