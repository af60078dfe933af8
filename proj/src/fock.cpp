#include "anharmonic/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "anharmonic/csv.hpp"

namespace anharmonic {

namespace {

using cplx = std::complex<double>;
constexpr double hermitian_tolerance = 1e-10;

void require_dim(int N, int minimum, const char* what)
{
    if (N < minimum)
        throw std::invalid_argument(std::string(what) + " needs N >= " + std::to_string(minimum) + ", got "
                                    + std::to_string(N));
}

Eigen::MatrixXcd ladder_position(int N)
{
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(N, N);
    for (int n = 1; n < N; ++n) {
        const double amp = std::sqrt(n / 2.0);
        x(n - 1, n) = amp;
        x(n, n - 1) = amp;
    }
    return x;
}

Eigen::MatrixXcd ladder_momentum(int N)
{
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(N, N);
    for (int n = 1; n < N; ++n) {
        const double amp = std::sqrt(n / 2.0);
        p(n - 1, n) = cplx(0.0, -amp);
        p(n, n - 1) = cplx(0.0, amp);
    }
    return p;
}

} // namespace

FockOperator::FockOperator(Eigen::MatrixXcd entries, bool hermitian, int trusted_dim)
    : entries_(std::move(entries)), hermitian_(hermitian), trusted_dim_(trusted_dim)
{
    if (entries_.rows() != entries_.cols() || entries_.rows() < 1)
        throw std::invalid_argument("operator matrix must be square and non-empty");
    if (!entries_.allFinite()) throw std::invalid_argument("operator matrix has non-finite entries");
    if (trusted_dim_ < 0 || trusted_dim_ > dim()) throw std::invalid_argument("trusted dimension out of range");
    if (hermitian_ && hermiticity_defect() > hermitian_tolerance)
        throw std::invalid_argument("operator flagged hermitian but its entries are not");
}

double FockOperator::hermiticity_defect() const
{
    const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() / scale;
}

FockOperator position_operator(int N)
{
    require_dim(N, 2, "position operator");
    return {ladder_position(N), true, N - 1};
}

FockOperator momentum_operator(int N)
{
    require_dim(N, 2, "momentum operator");
    return {ladder_momentum(N), true, N - 1};
}

Eigen::MatrixXcd to_matrix(const OrderedPolynomial& poly, int N)
{
    require_dim(N, 1, "operator matrix");
    const int degree = std::max(poly.degree(), 0);
    const int padded = N + degree;
    const Eigen::MatrixXcd x = ladder_position(padded);
    const Eigen::MatrixXcd p = ladder_momentum(padded);

    std::vector<Eigen::MatrixXcd> x_pow{Eigen::MatrixXcd::Identity(padded, padded)};
    std::vector<Eigen::MatrixXcd> p_pow{Eigen::MatrixXcd::Identity(padded, padded)};
    for (int k = 1; k <= degree; ++k) {
        x_pow.push_back(x_pow.back() * x);
        p_pow.push_back(p_pow.back() * p);
    }

    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(padded, padded);
    for (const auto& [key, c] : poly.terms()) {
        const cplx coeff(to_double(c.re), to_double(c.im));
        out.noalias() += coeff * (x_pow[key.first] * p_pow[key.second]);
    }
    return out.topLeftCorner(N, N);
}

FockOperator hamiltonian(const OscillatorSpec& spec, int N)
{
    const int m = spec.m();
    require_dim(N, 2 * m + 2, "hamiltonian");
    OrderedPolynomial h0 = OrderedPolynomial::monomial(2, 0) + OrderedPolynomial::monomial(0, 2);
    h0 *= GaussianRational{Rational(1, 2)};
    Eigen::MatrixXcd entries = to_matrix(h0, N);
    entries += (spec.lambda() / (2.0 * m)) * to_matrix(OrderedPolynomial::monomial(2 * m, 0), N);
    return {std::move(entries), true, N};
}

SpectrumResult eigen_spectrum(const FockOperator& h, int n_max)
{
    if (h.hermiticity_defect() > hermitian_tolerance)
        throw std::invalid_argument("eigen_spectrum needs a hermitian operator");
    if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
    if (n_max > h.dim() / 2)
        throw std::invalid_argument("n_max = " + std::to_string(n_max) + " exceeds the trusted range dim/2 = "
                                    + std::to_string(h.dim() / 2));

    Eigen::VectorXd values;
    if (h.entries().imag().cwiseAbs().maxCoeff() == 0.0) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h.entries().real(), Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) throw NumericalError("eigenvalue solver did not converge");
        values = solver.eigenvalues();
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.entries(), Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) throw NumericalError("eigenvalue solver did not converge");
        values = solver.eigenvalues();
    }

    SpectrumResult out;
    for (int n = 0; n <= n_max; ++n) out.level_energies.push_back(values(n));
    for (int n = 1; n <= n_max; ++n) out.gaps.push_back(values(n) - values(n - 1));
    return out;
}

Rational level_shift_polynomial(int m, int n)
{
    require_closed_form_order(m);
    if (n < 0) throw std::invalid_argument("level index must be non-negative");
    const BigInt k = n;
    if (m == 3) return Rational(5, 48) * Rational(4 * k * k * k + 6 * k * k + 8 * k + 3);
    return Rational(35, 64) * (Rational(3, 2) + Rational(4 * k + 5 * k * k + 2 * k * k * k + k * k * k * k));
}

RsptEnergy rspt_first_order_energy_exact(int m, int n)
{
    require_closed_form_order(m);
    if (n < 0) throw std::invalid_argument("level index must be non-negative");
    RsptEnergy out{Rational(2 * n + 1, 2), number_state_moment(n, 2 * m) / Rational(2 * m)};
    if (out.lambda_coefficient != level_shift_polynomial(m, n))
        throw std::logic_error("ladder algebra disagrees with the closed-form level polynomial");
    return out;
}

double rspt_first_order_energy(const OscillatorSpec& spec, int n)
{
    return rspt_first_order_energy_exact(spec.m(), n).value(spec.lambda());
}

Rational quantum_frequency_shift_coefficient(int m, int n)
{
    require_closed_form_order(m);
    if (n < 0) throw std::invalid_argument("level index must be non-negative");
    const BigInt k = n;
    if (m == 3) return Rational(5, 4) * (Rational(k * k) + Rational(1, 2));
    return Rational(35, 16) * Rational(k * k * k + 2 * k);
}

double quantum_frequency_shift(const OscillatorSpec& spec, int n)
{
    return spec.lambda() * to_double(quantum_frequency_shift_coefficient(spec.m(), n));
}

double frequency_operator_eigenvalue(const OscillatorSpec& spec, int n)
{
    require_closed_form_order(spec.m());
    if (n < 0) throw std::invalid_argument("level index must be non-negative");
    const Rational e = Rational(2 * n + 1, 2); // H0 eigenvalue
    const Rational c = spec.m() == 3 ? Rational(5, 4) * (e * e + Rational(1, 4))
                                     : Rational(35, 64) * (4 * e * e * e + 5 * e);
    return 1.0 + spec.lambda() * to_double(c);
}

FockOperator frequency_operator(const OscillatorSpec& spec, int N)
{
    require_closed_form_order(spec.m());
    require_dim(N, 2, "frequency operator");
    Eigen::MatrixXcd entries = Eigen::MatrixXcd::Zero(N, N);
    for (int n = 0; n < N; ++n) entries(n, n) = frequency_operator_eigenvalue(spec, n);
    return {std::move(entries), true, N};
}

QuantumSolution::QuantumSolution(const OscillatorSpec& spec, int N)
    : spec_(spec), dim_(N), x_(position_operator(std::max(N, 2))), p_(momentum_operator(std::max(N, 2))),
      k_(k_coefficients(spec.m()))
{
    require_dim(N, 2 * spec.m() + 4, "Heisenberg solution");
    const int force = spec.force_degree();
    for (int i = 0; i <= force; ++i) symmetrized_.push_back(to_matrix(weyl_symmetrized(force - i, i), N));
}

FockOperator QuantumSolution::operator_at(double t) const
{
    Eigen::MatrixXcd out = x_.entries() * std::cos(t) + p_.entries() * std::sin(t);
    for (std::size_t i = 0; i < k_.size(); ++i) {
        const double factor = spec_.lambda() * k_[i].value(t);
        if (factor != 0.0) out += factor * symmetrized_[i];
    }
    return {std::move(out), true, dim_};
}

DipoleElement QuantumSolution::dipole(int n, double t) const
{
    if (n < 1 || n > dim_ / 2)
        throw std::out_of_range("level n = " + std::to_string(n) + " outside the trusted range [1, "
                                + std::to_string(dim_ / 2) + "]");
    const double w_hi = frequency_operator_eigenvalue(spec_, n);
    const double w_lo = frequency_operator_eigenvalue(spec_, n - 1);

    DipoleElement out;
    out.mean_frequency = 0.5 * (w_hi + w_lo);
    const cplx x_el = x_.element(n - 1, n);
    const cplx p_el = p_.element(n - 1, n);
    // <n-1| X f(Omega) + f(Omega) X |n> = X_(n-1,n) (f(w_n) + f(w_(n-1)))
    out.raw = 0.5 * (x_el * (std::cos(w_hi * t) + std::cos(w_lo * t)) + p_el * (std::sin(w_hi * t) + std::sin(w_lo * t)));
    for (std::size_t i = 0; i < k_.size(); ++i)
        out.raw += spec_.lambda() * k_[i].harmonic_value(t) * symmetrized_[i](n - 1, n);

    out.normalization = std::cos(0.5 * (w_hi - w_lo) * t);
    if (std::abs(out.normalization) < 1e-6)
        throw NumericalError("matrix-element normalization vanishes at t = " + std::to_string(t));
    out.value = out.raw / out.normalization;
    return out;
}

FockOperator heisenberg_solution(const OscillatorSpec& spec, int N, double t)
{
    return QuantumSolution(spec, N).operator_at(t);
}

std::complex<double> dipole_matrix_element(const OscillatorSpec& spec, int N, int n, double t)
{
    return QuantumSolution(spec, N).dipole(n, t).value;
}

namespace {

ShiftReport make_report(const OscillatorSpec& spec, const SpectrumResult& spectrum, int n)
{
    ShiftReport r;
    r.n = n;
    r.shift_formula = quantum_frequency_shift(spec, n);
    if (n == 0) {
        r.shift_rspt = r.shift_diag = r.residual = std::numeric_limits<double>::quiet_NaN();
        return r;
    }
    r.shift_rspt = rspt_first_order_energy(spec, n) - rspt_first_order_energy(spec, n - 1) - 1.0;
    r.shift_diag = spectrum.gap(n) - 1.0;
    r.residual = std::abs(r.shift_diag - r.shift_formula);
    return r;
}

} // namespace

ShiftReport shift_report(const OscillatorSpec& spec, int N, int n)
{
    if (n < 0) throw std::invalid_argument("level index must be non-negative");
    const auto spectrum = eigen_spectrum(hamiltonian(spec, N), std::max(n, 1));
    return make_report(spec, spectrum, n);
}

void write_spectrum_table(std::ostream& out, const OscillatorSpec& spec, int N, int n_max)
{
    const auto spectrum = eigen_spectrum(hamiltonian(spec, N), n_max);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    out << "m,lambda,N,n,E_diag,E_rspt,gap_diag,gap_formula,residual\n";
    for (int n = 0; n <= n_max; ++n) {
        const double gap_diag = n > 0 ? spectrum.gap(n) : nan;
        const double gap_formula = n > 0 ? 1.0 + quantum_frequency_shift(spec, n) : nan;
        out << spec.m() << ',' << format_real(spec.lambda()) << ',' << N << ',' << n << ','
            << format_real(spectrum.level_energies[n]) << ',' << format_real(rspt_first_order_energy(spec, n)) << ','
            << format_real(gap_diag) << ',' << format_real(gap_formula) << ','
            << format_real(n > 0 ? std::abs(gap_diag - gap_formula) : nan) << '\n';
    }
}

void write_shift_table(std::ostream& out, const OscillatorSpec& spec, int N, std::span<const int> levels)
{
    int top = 1;
    for (int n : levels) {
        if (n < 0) throw std::invalid_argument("level index must be non-negative");
        top = std::max(top, n);
    }
    const auto spectrum = eigen_spectrum(hamiltonian(spec, N), top);
    out << "m,lambda,N,n,shift_formula,shift_rspt,shift_diag,residual\n";
    for (int n : levels) {
        const auto r = make_report(spec, spectrum, n);
        out << spec.m() << ',' << format_real(spec.lambda()) << ',' << N << ',' << n << ','
            << format_real(r.shift_formula) << ',' << format_real(r.shift_rspt) << ',' << format_real(r.shift_diag)
            << ',' << format_real(r.residual) << '\n';
    }
}

void write_dipole_table(std::ostream& out, const OscillatorSpec& spec, int N, int n, std::span<const double> times)
{
    const QuantumSolution solution(spec, N);
    out << "m,lambda,n,t,re,im,abs,phase\n";
    for (double t : times) {
        const cplx v = solution.dipole(n, t).value;
        out << spec.m() << ',' << format_real(spec.lambda()) << ',' << n << ',' << format_real(t) << ','
            << format_real(v.real()) << ',' << format_real(v.imag()) << ',' << format_real(std::abs(v)) << ','
            << format_real(std::arg(v)) << '\n';
    }
}

} // namespace anharmonic
