#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "anharmonic/acceptance.hpp"
#include "anharmonic/closed_form.hpp"
#include "anharmonic/fock.hpp"
#include "anharmonic/ode_oracle.hpp"
#include "anharmonic/series.hpp"

namespace py = pybind11;
using namespace anharmonic;

namespace {

std::vector<std::string> rational_strings(const std::vector<Rational>& v)
{
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& q : v) out.push_back(to_string(q));
    return out;
}

py::dict decomposition_dict(const HarmonicDecomposition& k)
{
    py::list harmonics;
    for (const auto& h : k.harmonics())
        harmonics.append(py::make_tuple(h.harmonic, h.kind == TrigKind::cosine ? "cos" : "sin", to_string(h.coeff)));
    py::dict d;
    d["i"] = k.index();
    d["harmonics"] = harmonics;
    d["secular"] = py::make_tuple(k.secular().kind == SecularKind::t_sine ? "t*sin" : "t*cos",
                                  to_string(k.secular().coeff));
    return d;
}

} // namespace

PYBIND11_MODULE(_core, mod)
{
    mod.doc() = "First-order sextic and octic anharmonic oscillators";

    py::register_exception<NumericalError>(mod, "NumericalError", PyExc_ArithmeticError);

    py::class_<OscillatorSpec>(mod, "OscillatorSpec")
        .def(py::init<int, double>(), py::arg("m"), py::arg("lam"))
        .def_property_readonly("m", &OscillatorSpec::m)
        .def_property_readonly("lam", &OscillatorSpec::lambda)
        .def("__repr__", [](const OscillatorSpec& s) {
            return "OscillatorSpec(m=" + std::to_string(s.m()) + ", lam=" + py::repr(py::float_(s.lambda())).cast<std::string>() + ")";
        });

    py::class_<InitialState>(mod, "InitialState")
        .def(py::init<double, double>(), py::arg("x0"), py::arg("v0"))
        .def_readonly("x0", &InitialState::x0)
        .def_readonly("v0", &InitialState::v0);

    mod.def("hamiltonian_energy", py::overload_cast<const OscillatorSpec&, const InitialState&>(&hamiltonian_energy));

    // series
    mod.def("coefficient_sequence", [](int m, int i, int count) { return rational_strings(coefficient_sequence(m, i, count).terms); },
            py::arg("m"), py::arg("i"), py::arg("count"));
    mod.def("sextic_generator", [](int r) { return to_string(sextic_generator(r)); });
    mod.def("taylor_partial_sum", &taylor_partial_sum, py::arg("spec"), py::arg("state"), py::arg("t"), py::arg("max_order"));

    // closed form
    mod.def("k_coefficients", [](int m) {
        py::list out;
        for (const auto& k : k_coefficients(m)) out.append(decomposition_dict(k));
        return out;
    });
    mod.def("frequency_shift_coefficient", [](int m) { return to_string(frequency_shift_coefficient(m)); });
    mod.def("classical_frequency_shift", &classical_frequency_shift, py::arg("spec"), py::arg("amplitude"));
    mod.def("first_order_solution", &first_order_solution, py::arg("spec"), py::arg("state"), py::arg("t"));
    mod.def("first_order_solution",
            [](const OscillatorSpec& spec, const InitialState& state, py::array_t<double, py::array::forcecast> t) {
                const ClassicalSolution sol(spec, state);
                return py::vectorize([&sol](double s) { return sol.first_order(s); })(t);
            },
            py::arg("spec"), py::arg("state"), py::arg("t"));
    mod.def("renormalized_solution",
            [](const OscillatorSpec& spec, const InitialState& state, double t) {
                const auto r = renormalized_solution(spec, state, t);
                return py::make_tuple(r.x, r.weak_coupling_warning);
            },
            py::arg("spec"), py::arg("state"), py::arg("t"));

    // numerical oracle
    py::class_<Trajectory>(mod, "Trajectory")
        .def_readonly("times", &Trajectory::times)
        .def_readonly("positions", &Trajectory::positions)
        .def_readonly("velocities", &Trajectory::velocities)
        .def_readonly("energy_drift", &Trajectory::energy_drift)
        .def_readonly("steps", &Trajectory::steps);
    mod.def("integrate",
            [](const OscillatorSpec& spec, const InitialState& state, double t_end, double rel_tol) {
                return integrate(spec, state, t_end, rel_tol);
            },
            py::arg("spec"), py::arg("state"), py::arg("t_end"), py::arg("rel_tol") = default_rel_tol);
    mod.def("integrate_at",
            [](const OscillatorSpec& spec, const InitialState& state, const std::vector<double>& times, double rel_tol) {
                return integrate(spec, state, std::span<const double>(times), rel_tol);
            },
            py::arg("spec"), py::arg("state"), py::arg("times"), py::arg("rel_tol") = default_rel_tol);
    mod.def("estimate_frequency", &estimate_frequency);

    // quantum
    mod.def("position_operator", [](int N) { return position_operator(N).entries(); });
    mod.def("momentum_operator", [](int N) { return momentum_operator(N).entries(); });
    mod.def("hamiltonian", [](const OscillatorSpec& spec, int N) { return hamiltonian(spec, N).entries(); });
    mod.def("frequency_operator", [](const OscillatorSpec& spec, int N) { return frequency_operator(spec, N).entries(); });
    mod.def("eigen_spectrum",
            [](const OscillatorSpec& spec, int N, int n_max) {
                const auto s = eigen_spectrum(hamiltonian(spec, N), n_max);
                return py::make_tuple(s.level_energies, s.gaps);
            },
            py::arg("spec"), py::arg("N"), py::arg("n_max"));
    mod.def("rspt_first_order_energy", &rspt_first_order_energy, py::arg("spec"), py::arg("n"));
    mod.def("rspt_first_order_energy_exact",
            [](int m, int n) {
                const auto e = rspt_first_order_energy_exact(m, n);
                return py::make_tuple(to_string(e.unperturbed), to_string(e.lambda_coefficient));
            },
            py::arg("m"), py::arg("n"));
    mod.def("quantum_frequency_shift", &quantum_frequency_shift, py::arg("spec"), py::arg("n"));
    mod.def("frequency_operator_eigenvalue", &frequency_operator_eigenvalue, py::arg("spec"), py::arg("n"));
    mod.def("heisenberg_solution", [](const OscillatorSpec& spec, int N, double t) { return heisenberg_solution(spec, N, t).entries(); },
            py::arg("spec"), py::arg("N"), py::arg("t"));
    mod.def("dipole_matrix_element", &dipole_matrix_element, py::arg("spec"), py::arg("N"), py::arg("n"), py::arg("t"));

    mod.def("run_acceptance", [] {
        py::list out;
        for (const auto& r : run_acceptance()) {
            py::dict d;
            d["id"] = r.id;
            d["title"] = r.title;
            d["passed"] = r.passed;
            d["detail"] = r.detail;
            d["seconds"] = r.seconds;
            out.append(d);
        }
        return out;
    });
}
