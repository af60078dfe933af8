#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "anharmonic/oscillator.hpp"
#include "anharmonic/rational.hpp"

using namespace anharmonic;

TEST(Oscillator, EnergyExamples)
{
    EXPECT_EQ(hamiltonian_energy(OscillatorSpec(3, 0.0), InitialState(0.0, 0.0)), 0.0);
    EXPECT_NEAR(hamiltonian_energy(OscillatorSpec(3, 0.01), InitialState(2.0, 0.0)), 2.0 + 0.01 / 6.0 * 64.0, 1e-15);
    EXPECT_NEAR(hamiltonian_energy(OscillatorSpec(3, 0.01), InitialState(2.0, 0.0)), 2.10667, 1e-5);
    EXPECT_NEAR(hamiltonian_energy(OscillatorSpec(4, 0.01), InitialState(1.0, 1.0)), 1.00125, 1e-15);
}

TEST(Oscillator, EnergyEvenAndHarmonicLimit)
{
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> d(-3.0, 3.0);
    for (int k = 0; k < 200; ++k) {
        const double x = d(rng), v = d(rng);
        for (int m = 2; m <= 5; ++m) {
            const OscillatorSpec spec(m, 0.02);
            EXPECT_EQ(hamiltonian_energy(spec, x, v), hamiltonian_energy(spec, -x, -v));
        }
        EXPECT_EQ(hamiltonian_energy(OscillatorSpec(3, 0.0), x, v), (x * x + v * v) / 2.0);
    }
}

TEST(Oscillator, RejectsInvalidModels)
{
    EXPECT_THROW(OscillatorSpec(1, 0.1), std::invalid_argument);
    EXPECT_THROW(OscillatorSpec(3, std::nan("")), std::invalid_argument);
    EXPECT_THROW(OscillatorSpec(3, INFINITY), std::invalid_argument);
    EXPECT_THROW(InitialState(std::nan(""), 0.0), std::invalid_argument);
    EXPECT_NO_THROW(OscillatorSpec(3, -0.01)); // metastable, accepted
    EXPECT_THROW(require_closed_form_order(2), std::invalid_argument);
    EXPECT_NO_THROW(require_closed_form_order(4));
}

TEST(Rational, FormattingAndCanonicalForm)
{
    EXPECT_EQ(to_string(Rational(6) / Rational(-4)), "-3/2");
    EXPECT_EQ(to_string(Rational(12, 4)), "3");
    EXPECT_EQ(to_string_over(Rational(1, 24), 384), "16/384");
    EXPECT_THROW(to_string_over(Rational(1, 5), 384), std::invalid_argument);
    EXPECT_EQ(binomial(7, 3), 35);
    EXPECT_EQ(factorial(10), 3628800);
}
