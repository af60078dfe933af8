"""First-order sextic and octic anharmonic oscillators.

Exact coefficients come back from the extension as "p/q" strings; the
wrappers here turn them into Fraction objects.
"""

from fractions import Fraction

from . import _core
from ._core import (
    InitialState,
    NumericalError,
    OscillatorSpec,
    Trajectory,
    classical_frequency_shift,
    dipole_matrix_element,
    eigen_spectrum,
    estimate_frequency,
    first_order_solution,
    frequency_operator,
    frequency_operator_eigenvalue,
    hamiltonian,
    hamiltonian_energy,
    heisenberg_solution,
    integrate,
    integrate_at,
    momentum_operator,
    position_operator,
    quantum_frequency_shift,
    renormalized_solution,
    rspt_first_order_energy,
    run_acceptance,
    taylor_partial_sum,
)

__all__ = [
    "InitialState",
    "NumericalError",
    "OscillatorSpec",
    "Trajectory",
    "classical_frequency_shift",
    "coefficient_sequence",
    "dipole_matrix_element",
    "eigen_spectrum",
    "estimate_frequency",
    "first_order_solution",
    "frequency_operator",
    "frequency_operator_eigenvalue",
    "frequency_shift_coefficient",
    "hamiltonian",
    "hamiltonian_energy",
    "heisenberg_solution",
    "integrate",
    "integrate_at",
    "k_coefficients",
    "momentum_operator",
    "position_operator",
    "quantum_frequency_shift",
    "renormalized_solution",
    "rspt_first_order_energy",
    "rspt_first_order_energy_exact",
    "run_acceptance",
    "sextic_generator",
    "taylor_partial_sum",
]


def coefficient_sequence(m, i, count):
    return [Fraction(s) for s in _core.coefficient_sequence(m, i, count)]


def sextic_generator(r):
    return Fraction(_core.sextic_generator(r))


def frequency_shift_coefficient(m):
    return Fraction(_core.frequency_shift_coefficient(m))


def rspt_first_order_energy_exact(m, n):
    """(unperturbed, lambda coefficient) of the first-order level energy."""
    e0, e1 = _core.rspt_first_order_energy_exact(m, n)
    return Fraction(e0), Fraction(e1)


def k_coefficients(m):
    """Per monomial index i: {(kind, harmonic): coeff} plus the secular term."""
    out = []
    for k in _core.k_coefficients(m):
        terms = {(kind, w): Fraction(c) for w, kind, c in k["harmonics"]}
        kind, c = k["secular"]
        terms[(kind, 1)] = Fraction(c)
        out.append(terms)
    return out
