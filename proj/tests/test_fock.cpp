#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "anharmonic/fock.hpp"
#include "anharmonic/operator_algebra.hpp"

using namespace anharmonic;
using cplx = std::complex<double>;

namespace {

const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

double block_distance(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, int block)
{
    return (a.topLeftCorner(block, block) - b.topLeftCorner(block, block)).cwiseAbs().maxCoeff();
}

} // namespace

TEST(Fock, LadderMatricesN2)
{
    const auto x = position_operator(2);
    const auto p = momentum_operator(2);
    EXPECT_EQ(x.element(0, 0), cplx(0.0));
    EXPECT_NEAR(std::abs(x.element(0, 1) - inv_sqrt2), 0.0, 2e-16);
    EXPECT_NEAR(std::abs(x.element(1, 0) - inv_sqrt2), 0.0, 2e-16);
    EXPECT_NEAR(std::abs(p.element(0, 1) - cplx(0.0, -inv_sqrt2)), 0.0, 2e-16);
    EXPECT_NEAR(std::abs(p.element(1, 0) - cplx(0.0, inv_sqrt2)), 0.0, 2e-16);
    EXPECT_TRUE(x.hermitian());
    EXPECT_TRUE(p.hermitian());
    EXPECT_THROW(position_operator(1), std::invalid_argument);
}

TEST(Fock, LadderElementsAndParity)
{
    const auto x = position_operator(30);
    const auto p = momentum_operator(30);
    for (int n = 1; n < 30; ++n) {
        EXPECT_NEAR(x.element(n - 1, n).real(), std::sqrt(n / 2.0), 1e-15);
        EXPECT_NEAR(p.element(n - 1, n).imag(), -std::sqrt(n / 2.0), 1e-15);
    }
    for (int n = 0; n < 30; ++n) {
        EXPECT_EQ(x.element(n, n), cplx(0.0));
        EXPECT_EQ(p.element(n, n), cplx(0.0));
    }
}

TEST(Fock, CanonicalCommutatorBlock)
{
    const int N = 40;
    const Eigen::MatrixXcd x = position_operator(N).entries();
    const Eigen::MatrixXcd p = momentum_operator(N).entries();
    const Eigen::MatrixXcd c = x * p - p * x;
    const Eigen::MatrixXcd expect = cplx(0.0, 1.0) * Eigen::MatrixXcd::Identity(N, N);
    EXPECT_LT(block_distance(c, expect, N - 2), 1e-12);
}

TEST(Fock, HamiltonianSpectrum)
{
    const auto h0 = hamiltonian(OscillatorSpec(3, 0.0), 40);
    const auto s0 = eigen_spectrum(h0, 20);
    for (int n = 0; n <= 20; ++n) EXPECT_NEAR(s0.level_energies[n], n + 0.5, 1e-12);
    for (int n = 1; n <= 20; ++n) EXPECT_NEAR(s0.gap(n), 1.0, 1e-12);

    const auto s3 = eigen_spectrum(hamiltonian(OscillatorSpec(3, 0.001), 100), 4);
    EXPECT_NEAR(s3.level_energies[0], 0.5003125, 1e-5);
    const auto s4 = eigen_spectrum(hamiltonian(OscillatorSpec(4, 0.0001), 120), 4);
    EXPECT_NEAR(s4.level_energies[0], 0.5 + 105.0 * 0.0001 / 128.0, 1e-6);

    EXPECT_THROW(hamiltonian(OscillatorSpec(3, 0.01), 7), std::invalid_argument);
    EXPECT_THROW(eigen_spectrum(h0, 21), std::invalid_argument);
    EXPECT_LT(hamiltonian(OscillatorSpec(4, 0.01), 60).hermiticity_defect(), 1e-12);
}

TEST(Fock, OcticFirstGap)
{
    const auto s = eigen_spectrum(hamiltonian(OscillatorSpec(4, 0.0001), 120), 1);
    EXPECT_NEAR(s.gap(1), 1.0 + (35.0 * 0.0001 / 16.0) * 3.0, 1e-5);
}

TEST(Fock, SexticSecondGap)
{
    const auto s = eigen_spectrum(hamiltonian(OscillatorSpec(3, 0.001), 100), 2);
    EXPECT_NEAR(s.gap(2), 1.005625, 1e-4);
}

// A tenfold smaller lambda shrinks the gap residual a hundredfold.
TEST(Fock, GapResidualIsSecondOrder)
{
    for (int m : {3, 4}) {
        const double lambda = m == 3 ? 1e-3 : 1e-4;
        for (int n = 1; n <= 4; ++n) {
            const double r1 = shift_report(OscillatorSpec(m, lambda), 120, n).residual;
            const double r2 = shift_report(OscillatorSpec(m, lambda / 10), 120, n).residual;
            EXPECT_NEAR(r1 / r2, 100.0, 15.0) << "m=" << m << " n=" << n;
        }
    }
}

TEST(Fock, GapsConvergeInTruncation)
{
    const OscillatorSpec spec(3, 0.001);
    const auto a = eigen_spectrum(hamiltonian(spec, 100), 4);
    const auto b = eigen_spectrum(hamiltonian(spec, 200), 4);
    for (int n = 1; n <= 4; ++n) EXPECT_LT(std::abs(a.gap(n) - b.gap(n)), 1e-8);
}

TEST(Fock, RsptEnergies)
{
    auto e = rspt_first_order_energy_exact(3, 0);
    EXPECT_EQ(e.unperturbed, Rational(1, 2));
    EXPECT_EQ(e.lambda_coefficient, Rational(5, 16));
    e = rspt_first_order_energy_exact(3, 1);
    EXPECT_EQ(e.unperturbed, Rational(3, 2));
    EXPECT_EQ(e.lambda_coefficient, Rational(35, 16));
    e = rspt_first_order_energy_exact(4, 0);
    EXPECT_EQ(e.lambda_coefficient, Rational(105, 128));
    EXPECT_DOUBLE_EQ(rspt_first_order_energy(OscillatorSpec(3, 0.01), 1), 1.5 + 0.35 / 16.0);
    for (int n = 0; n <= 10; ++n) {
        const Rational nn(n);
        EXPECT_EQ(number_state_moment(n, 6) / 6, Rational(5, 48) * (4 * nn * nn * nn + 6 * nn * nn + 8 * nn + 3));
        EXPECT_EQ(number_state_moment(n, 8) / 8,
                  Rational(35, 64) * (Rational(3, 2) + 4 * nn + 5 * nn * nn + 2 * nn * nn * nn + nn * nn * nn * nn));
    }
    EXPECT_THROW(rspt_first_order_energy_exact(5, 0), std::invalid_argument);
}

TEST(Fock, FrequencyShifts)
{
    EXPECT_DOUBLE_EQ(quantum_frequency_shift(OscillatorSpec(3, 0.02), 0), 5.0 * 0.02 / 8.0);
    EXPECT_EQ(quantum_frequency_shift(OscillatorSpec(4, 0.02), 0), 0.0);
    EXPECT_NEAR(quantum_frequency_shift(OscillatorSpec(3, 0.01), 1), 0.01875, 1e-17);
    EXPECT_EQ(quantum_frequency_shift_coefficient(4, 0), 0);
    EXPECT_EQ(quantum_frequency_shift_coefficient(3, 0), Rational(5, 8));
    EXPECT_EQ(quantum_frequency_shift_coefficient(4, 2), Rational(35, 16) * 12);
    // the shift is the first-order level gap
    for (int m : {3, 4})
        for (int n = 1; n <= 6; ++n)
            EXPECT_EQ(quantum_frequency_shift_coefficient(m, n),
                      rspt_first_order_energy_exact(m, n).lambda_coefficient -
                          rspt_first_order_energy_exact(m, n - 1).lambda_coefficient);
}

TEST(Fock, FrequencyOperator)
{
    EXPECT_EQ(frequency_operator_eigenvalue(OscillatorSpec(3, 0.0), 7), 1.0);
    EXPECT_NEAR(frequency_operator_eigenvalue(OscillatorSpec(3, 0.01), 0), 1.00625, 1e-15);
    EXPECT_NEAR(frequency_operator_eigenvalue(OscillatorSpec(4, 0.01), 0), 1.0 + 0.35 / 64.0 * 3.0, 1e-15);
    const auto omega = frequency_operator(OscillatorSpec(4, 0.01), 12);
    EXPECT_TRUE(omega.hermitian());
    for (int n = 0; n < 12; ++n)
        EXPECT_NEAR(omega.element(n, n).real(), frequency_operator_eigenvalue(OscillatorSpec(4, 0.01), n), 1e-15);
    EXPECT_EQ(omega.element(0, 1), cplx(0.0));
    // the gap between eigenvalues n and n-1 averages to the level-gap shift
    const OscillatorSpec spec(3, 0.01);
    for (int n = 1; n <= 5; ++n) {
        const double mean = (frequency_operator_eigenvalue(spec, n) + frequency_operator_eigenvalue(spec, n - 1)) / 2;
        EXPECT_NEAR(mean, 1.0 + quantum_frequency_shift(spec, n), 1e-15);
    }
}

TEST(Fock, HeisenbergSolutionLimits)
{
    const int N = 30;
    const Eigen::MatrixXcd x = position_operator(N).entries();
    const Eigen::MatrixXcd p = momentum_operator(N).entries();
    for (double t : {0.4, 2.2}) {
        const Eigen::MatrixXcd sho = x * std::cos(t) + p * std::sin(t);
        EXPECT_LT((heisenberg_solution(OscillatorSpec(3, 0.0), N, t).entries() - sho).cwiseAbs().maxCoeff(), 1e-15);
    }
    for (int m : {3, 4}) {
        const auto at0 = heisenberg_solution(OscillatorSpec(m, 0.05), N, 0.0);
        EXPECT_TRUE(at0.entries() == x);
        for (double t : {0.3, 1.7, 5.0}) EXPECT_LT(heisenberg_solution(OscillatorSpec(m, 0.05), N, t).hermiticity_defect(), 1e-12);
    }
    EXPECT_THROW(heisenberg_solution(OscillatorSpec(4, 0.01), 11, 1.0), std::invalid_argument);
}

// Central differences at t = 0: the first derivative is P(0), the second is
// the force -X - lambda X^(2m-1).
TEST(Fock, HeisenbergEquationOfMotion)
{
    const int N = 40;
    for (int m : {3, 4}) {
        const OscillatorSpec spec(m, 0.01);
        const QuantumSolution sol(spec, N);
        const int block = N - 2 * m - 2;
        const double d = 1e-5;
        const Eigen::MatrixXcd velocity = (sol.operator_at(d).entries() - sol.operator_at(-d).entries()) / (2 * d);
        EXPECT_LT(block_distance(velocity, momentum_operator(N).entries(), block), 1e-6);

        const double h = 1e-3;
        const Eigen::MatrixXcd xp = sol.operator_at(h).entries();
        const Eigen::MatrixXcd x0 = sol.operator_at(0.0).entries();
        const Eigen::MatrixXcd xm = sol.operator_at(-h).entries();
        const Eigen::MatrixXcd force =
            -to_matrix(OrderedPolynomial::monomial(1, 0), N) - spec.lambda() * to_matrix(OrderedPolynomial::monomial(2 * m - 1, 0), N);
        const Eigen::MatrixXcd accel = (xp - 2.0 * x0 + xm) / (h * h);
        EXPECT_LT(block_distance(accel, force, block), 1e-3 * force.topLeftCorner(block, block).cwiseAbs().maxCoeff());
    }
}

TEST(Fock, DipoleHarmonicLimit)
{
    for (double t : {0.0, 0.7, 3.1, 12.0}) {
        const cplx d = dipole_matrix_element(OscillatorSpec(3, 0.0), 20, 1, t);
        EXPECT_LT(std::abs(d - std::exp(cplx(0.0, -t)) * inv_sqrt2), 1e-14);
    }
    for (int n = 1; n <= 5; ++n)
        EXPECT_NEAR(std::abs(dipole_matrix_element(OscillatorSpec(3, 0.02), 20, n, 0.0) - std::sqrt(n / 2.0)), 0.0, 1e-15);
}

TEST(Fock, DipolePhaseRate)
{
    const OscillatorSpec spec(3, 0.01);
    const QuantumSolution sol(spec, 30);
    // long-time slope of the unwrapped phase
    double prev = 0.0, unwrapped = 0.0;
    const double dt = 0.05, t_end = 40.0;
    for (double t = dt; t <= t_end + 1e-12; t += dt) {
        const double ph = std::arg(sol.dipole(1, t).value);
        double d = ph - prev;
        while (d > std::numbers::pi) d -= 2 * std::numbers::pi;
        while (d < -std::numbers::pi) d += 2 * std::numbers::pi;
        unwrapped += d;
        prev = ph;
    }
    EXPECT_NEAR(-unwrapped / t_end, 1.01875, 1e-3);
    EXPECT_DOUBLE_EQ(sol.dipole(1, 1.0).mean_frequency, 1.01875);

    // local rate against the unresummed element, agreement to O(lambda^2 t)
    const double t = 0.5, delta = 1e-4;
    const auto rate = [&](auto f) { return -(std::arg(f(t + delta)) - std::arg(f(t))) / delta; };
    const double resummed = rate([&](double s) { return sol.dipole(1, s).value; });
    const double plain = rate([&](double s) { return sol.operator_at(s).element(0, 1); });
    EXPECT_NEAR(resummed, plain, 1e-3);
}

TEST(Fock, DipoleErrors)
{
    const QuantumSolution sol(OscillatorSpec(3, 0.01), 20);
    EXPECT_THROW(sol.dipole(0, 1.0), std::out_of_range);
    EXPECT_THROW(sol.dipole(11, 1.0), std::out_of_range);
    // cos((omega_1 - omega_0) t / 2) vanishes at t = pi / 0.025
    EXPECT_THROW(sol.dipole(1, std::numbers::pi / 0.025), NumericalError);
    EXPECT_THROW(QuantumSolution(OscillatorSpec(3, 0.01), 9), std::invalid_argument);
}

TEST(Fock, TableHeaders)
{
    const OscillatorSpec spec(4, 0.01);
    std::ostringstream a, b, c;
    write_spectrum_table(a, spec, 40, 2);
    const std::vector<int> levels{0, 1};
    write_shift_table(b, spec, 40, levels);
    const std::vector<double> times{0.0, 1.0};
    write_dipole_table(c, spec, 20, 1, times);
    EXPECT_EQ(a.str().substr(0, a.str().find('\n')), "m,lambda,N,n,E_diag,E_rspt,gap_diag,gap_formula,residual");
    EXPECT_EQ(b.str().substr(0, b.str().find('\n')), "m,lambda,N,n,shift_formula,shift_rspt,shift_diag,residual");
    EXPECT_EQ(c.str().substr(0, c.str().find('\n')), "m,lambda,n,t,re,im,abs,phase");
    EXPECT_NE(b.str().find("\n4,0.01,40,0,0,nan,nan,nan\n"), std::string::npos);
}
