#include <cmath>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "anharmonic/ode_oracle.hpp"
#include "anharmonic/series.hpp"

using namespace anharmonic;

namespace {

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<Rational> as_rationals(std::initializer_list<long> v)
{
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}

} // namespace

TEST(Series, LowOrderSexticDerivatives)
{
    const auto d = derivative_polynomials(3, 5);
    ASSERT_EQ(d.size(), 6u);

    const DerivativePolynomial k2(2, {{1, 0, 0, Rational(-1)}, {5, 0, 1, Rational(-1)}});
    const DerivativePolynomial k3(3, {{0, 1, 0, Rational(-1)}, {4, 1, 1, Rational(-5)}});
    const DerivativePolynomial k4(4, {{1, 0, 0, Rational(1)}, {5, 0, 1, Rational(6)}, {3, 2, 1, Rational(-20)}});
    const DerivativePolynomial k5(5, {{0, 1, 0, Rational(1)}, {4, 1, 1, Rational(70)}, {2, 3, 1, Rational(-60)}});
    EXPECT_EQ(d[2], k2);
    EXPECT_EQ(d[3], k3);
    EXPECT_EQ(d[4], k4);
    EXPECT_EQ(d[5], k5);
    EXPECT_EQ(d[0].coefficient(1, 0, 0), 1);
    EXPECT_EQ(d[1].coefficient(0, 1, 0), 1);
}

TEST(Series, CoefficientSequences)
{
    EXPECT_EQ(coefficient_sequence(3, 0, 4).terms, as_rationals({-1, 6, -71, 1276}));
    EXPECT_EQ(coefficient_sequence(3, 1, 3).terms, as_rationals({-5, 70, -1275}));
    EXPECT_EQ(coefficient_sequence(3, 2, 2).terms, as_rationals({-20, 460}));
    EXPECT_EQ(coefficient_sequence(4, 0, 3).terms, as_rationals({-1, 8, -141}));
    EXPECT_THROW(coefficient_sequence(3, 6, 2), std::out_of_range);
    EXPECT_THROW(coefficient_sequence(3, -1, 2), std::out_of_range);
}

// Octic i = 0 entries against the Maclaurin series of
// (cos7t + 14cos5t + 126cos3t - 141cost - 840 t sint) / 3072, expanded here.
TEST(Series, OcticSequenceMatchesTrigLine)
{
    const auto seq = coefficient_sequence(4, 0, 6);
    for (std::size_t r = 0; r < seq.terms.size(); ++r) {
        const int k = seq.taylor_orders[r];
        ASSERT_EQ(k % 2, 0);
        const int h = k / 2;
        const Rational sign = h % 2 ? Rational(-1) : Rational(1);
        Rational sum = 0;
        const std::pair<int, int> lines[] = {{7, 1}, {5, 14}, {3, 126}, {1, -141}};
        for (auto [w, c] : lines) sum += Rational(c) * rational_pow(Rational(w), k) / factorial(k) * sign;
        // t sint = sum (-1)^j t^(2j+2)/(2j+1)!, so the t^k coefficient has j = h - 1
        sum += Rational(-840) * (h % 2 ? Rational(1) : Rational(-1)) / factorial(k - 1);
        sum /= 3072;
        EXPECT_EQ(sum * factorial(k), seq.terms[r]) << "k = " << k;
    }
}

TEST(Series, SexticGenerator)
{
    EXPECT_EQ(sextic_generator(0), 0);
    EXPECT_EQ(sextic_generator(1), -1);
    EXPECT_EQ(sextic_generator(3), -71);
    EXPECT_EQ(sextic_generator(4), 1276);
}

TEST(Series, ParityAndLambdaGrading)
{
    for (int m = 2; m <= 5; ++m) {
        for (const auto& p : derivative_polynomials(m, 14)) {
            for (const auto& t : p.terms()) {
                ASSERT_TRUE(t.lambda_order == 0 || t.lambda_order == 1);
                const int degree = t.x_power + t.v_power;
                EXPECT_EQ(degree, t.lambda_order ? 2 * m - 1 : 1);
                EXPECT_EQ(degree % 2, 1);
                EXPECT_EQ(t.v_power % 2, (p.order() % 2)) << "time-reversal parity, m=" << m;
            }
            const InitialState s(0.7, -0.3), r(-0.7, 0.3);
            EXPECT_DOUBLE_EQ(p.evaluate(0.05, s), -p.evaluate(0.05, r));
        }
    }
}

TEST(Series, GeneratorIsIncremental)
{
    DerivativeGenerator g(4);
    const auto all = derivative_polynomials(4, 9);
    for (int k = 0; k <= 9; ++k) {
        EXPECT_EQ(g.order(), k);
        EXPECT_EQ(g.current(), all[static_cast<std::size_t>(k)]);
        g.advance();
    }
}

TEST(Series, TaylorPartialSumHarmonicLimit)
{
    const OscillatorSpec sho(3, 0.0);
    EXPECT_EQ(taylor_partial_sum(sho, InitialState(1.0, 0.0), 0.0, 7), 1.0);
    EXPECT_NEAR(taylor_partial_sum(sho, InitialState(1.0, 0.0), 0.1, 20), std::cos(0.1), 1e-15);
}

// The first-order series differs from the exact flow by O(lambda^2): halving
// lambda quarters the residual.
TEST(Series, TaylorAgainstOracleIsSecondOrder)
{
    const InitialState s(2.0, 0.0);
    const double t[] = {0.0, 0.5};
    double residual[2];
    const double lambdas[] = {0.01, 0.005};
    for (int j = 0; j < 2; ++j) {
        const OscillatorSpec spec(3, lambdas[j]);
        const auto traj = integrate(spec, s, std::span<const double>(t), 1e-13);
        residual[j] = std::abs(taylor_partial_sum(spec, s, 0.5, 30) - traj.positions[1]);
    }
    EXPECT_LT(residual[0], 0.01 * 0.01 * std::pow(2.0, 9)); // lambda^2 a^(4m-3)
    EXPECT_NEAR(residual[0] / residual[1], 4.0, 0.2);
}

TEST(Series, FirstOrderTaylorTable)
{
    const auto table = first_order_taylor_table(3, 6);
    ASSERT_EQ(table.size(), 6u);
    EXPECT_EQ(table[0][2], Rational(-1, 2));
    EXPECT_EQ(table[0][4], Rational(6, 24));
    EXPECT_EQ(table[1][3], Rational(-5, 6));
    EXPECT_EQ(table[2][1], 0);
}

TEST(Series, GoldenCoefficientTables)
{
    for (int m : {3, 4}) {
        std::ostringstream out;
        write_coefficient_table(out, m);
        const std::string path = std::string(ANHARMONIC_GOLDEN_DIR) + "/coeffs_m" + std::to_string(m) + ".csv";
        const std::string golden = slurp(path);
        ASSERT_FALSE(golden.empty()) << path;
        EXPECT_EQ(out.str(), golden) << "m = " << m;
    }
}
