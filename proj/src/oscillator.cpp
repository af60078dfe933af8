#include "anharmonic/oscillator.hpp"

#include <cmath>

namespace anharmonic {

OscillatorSpec::OscillatorSpec(int m, double lambda) : m_(m), lambda_(lambda)
{
    if (m < 2) throw std::invalid_argument("anharmonicity index m must be >= 2, got " + std::to_string(m));
    if (!std::isfinite(lambda)) throw std::invalid_argument("anharmonic constant must be finite");
}

InitialState::InitialState(double x, double v) : x0(x), v0(v)
{
    if (!std::isfinite(x) || !std::isfinite(v)) throw std::invalid_argument("initial state must be finite");
}

double hamiltonian_energy(const OscillatorSpec& spec, double x, double v)
{
    const int m = spec.m();
    return 0.5 * v * v + 0.5 * x * x + spec.lambda() / (2.0 * m) * std::pow(x, 2 * m);
}

double hamiltonian_energy(const OscillatorSpec& spec, const InitialState& state)
{
    return hamiltonian_energy(spec, state.x0, state.v0);
}

void require_closed_form_order(int m)
{
    if (m != 3 && m != 4)
        throw std::invalid_argument("closed-form solutions exist only for m = 3 (sextic) and m = 4 (octic), got m = "
                                    + std::to_string(m));
}

} // namespace anharmonic
