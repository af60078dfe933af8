#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "anharmonic/closed_form.hpp"
#include "anharmonic/operator_algebra.hpp"
#include "anharmonic/oscillator.hpp"
#include "anharmonic/rational.hpp"

namespace anharmonic {

// Matrix of an operator in the first N number states |0>..|N-1>.
// Rows/columns with index >= trusted_dim are affected by truncation.
class FockOperator {
public:
    FockOperator(Eigen::MatrixXcd entries, bool hermitian, int trusted_dim);

    int dim() const noexcept { return static_cast<int>(entries_.rows()); }
    int trusted_dim() const noexcept { return trusted_dim_; }
    bool hermitian() const noexcept { return hermitian_; }
    const Eigen::MatrixXcd& entries() const noexcept { return entries_; }
    std::complex<double> element(int row, int col) const { return entries_(row, col); }

    // max |A - A^dagger| / max(1, max |A|)
    double hermiticity_defect() const;

private:
    Eigen::MatrixXcd entries_;
    bool hermitian_;
    int trusted_dim_;
};

// <n-1|X|n> = sqrt(n/2)
FockOperator position_operator(int N);
// <n-1|P|n> = -i sqrt(n/2), <n|P|n-1> = i sqrt(n/2)
FockOperator momentum_operator(int N);

// Matrix of an exact operator polynomial restricted to the first N states.
// Products are formed in a padded basis, so no truncation error enters.
Eigen::MatrixXcd to_matrix(const OrderedPolynomial& poly, int N);

// P^2/2 + X^2/2 + (lambda/2m) X^(2m); requires N >= 2m + 2.
FockOperator hamiltonian(const OscillatorSpec& spec, int N);

struct SpectrumResult {
    std::vector<double> level_energies; // ascending, levels 0..n_max
    std::vector<double> gaps;           // gaps[n-1] = E_n - E_(n-1)

    double gap(int n) const { return gaps.at(static_cast<std::size_t>(n - 1)); }
};

// Lowest n_max + 1 eigenvalues; n_max <= dim / 2.
SpectrumResult eigen_spectrum(const FockOperator& h, int n_max);

// (n + 1/2) + lambda * lambda_coefficient
struct RsptEnergy {
    Rational unperturbed;
    Rational lambda_coefficient;

    double value(double lambda) const { return to_double(unperturbed) + lambda * to_double(lambda_coefficient); }
};

// First-order level energy from <n|X^(2m)|n> / (2m), computed by ladder
// algebra and checked against the closed-form level polynomial.
RsptEnergy rspt_first_order_energy_exact(int m, int n);
double rspt_first_order_energy(const OscillatorSpec& spec, int n);

// (5/48)(4n^3+6n^2+8n+3) for m = 3, (35/64)(3/2+4n+5n^2+2n^3+n^4) for m = 4.
Rational level_shift_polynomial(int m, int n);

// Shift part of the level gap: (5 lambda/4)(n^2+1/2) or (35 lambda/16)(n^3+2n).
double quantum_frequency_shift(const OscillatorSpec& spec, int n);
Rational quantum_frequency_shift_coefficient(int m, int n);

// Eigenvalue of the frequency operator on |n>.
double frequency_operator_eigenvalue(const OscillatorSpec& spec, int n);
FockOperator frequency_operator(const OscillatorSpec& spec, int N);

struct DipoleElement {
    std::complex<double> value;  // normalized element
    std::complex<double> raw;    // before division by the normalization factor
    double normalization = 1.0;  // cos((omega_n - omega_(n-1)) t / 2)
    double mean_frequency = 1.0; // (omega_n + omega_(n-1)) / 2
};

// First-order Heisenberg solution X(t) with fully symmetrized operator
// monomials; precomputes the operator matrices for one (spec, N).
class QuantumSolution {
public:
    QuantumSolution(const OscillatorSpec& spec, int N);

    int dim() const noexcept { return dim_; }
    const OscillatorSpec& spec() const noexcept { return spec_; }

    // Includes the secular terms.
    FockOperator operator_at(double t) const;

    // <n-1|X(t)|n> with the zeroth-order part resummed through the frequency
    // operator and the harmonic remainder kept at first order.
    DipoleElement dipole(int n, double t) const;

private:
    OscillatorSpec spec_;
    int dim_;
    FockOperator x_;
    FockOperator p_;
    std::vector<HarmonicDecomposition> k_;
    std::vector<Eigen::MatrixXcd> symmetrized_; // Weyl-ordered X^(2m-1-i) P^i
};

FockOperator heisenberg_solution(const OscillatorSpec& spec, int N, double t);
std::complex<double> dipole_matrix_element(const OscillatorSpec& spec, int N, int n, double t);

struct ShiftReport {
    int n = 1;
    double shift_formula = 0.0;
    double shift_rspt = 0.0;
    double shift_diag = 0.0;
    double residual = 0.0; // |shift_diag - shift_formula|
};

ShiftReport shift_report(const OscillatorSpec& spec, int N, int n);

// Columns m, lambda, N, n, E_diag, E_rspt, gap_diag, gap_formula, residual.
void write_spectrum_table(std::ostream& out, const OscillatorSpec& spec, int N, int n_max);
// Columns m, lambda, N, n, shift_formula, shift_rspt, shift_diag, residual.
void write_shift_table(std::ostream& out, const OscillatorSpec& spec, int N, std::span<const int> levels);
// Columns m, lambda, n, t, re, im, abs, phase.
void write_dipole_table(std::ostream& out, const OscillatorSpec& spec, int N, int n, std::span<const double> times);

} // namespace anharmonic
