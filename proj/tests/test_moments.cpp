#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "appell/moments.hpp"
#include "appell/rational.hpp"
#include "appell/seq.hpp"

using namespace appell;

namespace {
const Rational half(BigInt(1), BigInt(2));
}

TEST_CASE("catalog moments") {
    CHECK(moment(RandomVariable::uniform01(), 3) == Rational(BigInt(1), BigInt(4)));
    CHECK(moment(RandomVariable::std_normal(), 4) == Rational(3));
    CHECK(moment(RandomVariable::std_normal(), 5) == Rational(0));
    // coefficient extraction of log(1+z)/z: n![z^n] = (-1)^n n!/(n+1)
    CHECK(moment(RandomVariable::cauchy_signed(), 2) == Rational(BigInt(2), BigInt(3)));
    CHECK(moment(RandomVariable::cauchy_signed(), 3) == Rational(BigInt(-3), BigInt(2)));
    CHECK(moment(RandomVariable::exponential(), 4) == Rational(24));
    CHECK(moment(RandomVariable::gamma(half), 2) == half * Rational(BigInt(3), BigInt(2)));
    CHECK(moment(RandomVariable::constant(Rational(-3)), 3) == Rational(-27));

    // E Y^n = p for every n >= 1 under bernoulli(p)
    const RandomVariable ber = RandomVariable::bernoulli(Rational(BigInt(2), BigInt(3)));
    for (unsigned n = 1; n <= 9; ++n) CHECK(moment(ber, n) == Rational(BigInt(2), BigInt(3)));

    // mu_0 = 1 for every kind
    for (const auto& rv : {RandomVariable::uniform01(), RandomVariable::cauchy_signed(),
                           RandomVariable::exponential(), RandomVariable::std_normal(),
                           RandomVariable::gamma(half), RandomVariable::bernoulli(half),
                           RandomVariable::constant(Rational(5))})
        CHECK(moment(rv, 0) == Rational(1));
}

TEST_CASE("catalog names parse and print") {
    for (const char* name : {"const:-3/2", "uniform01", "bernoulli:1/2", "cauchy",
                             "exponential", "gamma:3/2", "normal"})
        CHECK(RandomVariable::parse(name).name() == name);
    CHECK_THROWS_AS(RandomVariable::parse("poisson"), std::invalid_argument);
    CHECK_THROWS_AS(RandomVariable::parse("bernoulli:3/2"), std::invalid_argument);
    CHECK_THROWS_AS(RandomVariable::parse("gamma:0"), std::invalid_argument);
    CHECK_THROWS_AS(RandomVariable::parse("uniform01:1"), std::invalid_argument);
}

TEST_CASE("iid sum moments") {
    const RandomVariable uni = RandomVariable::uniform01();

    const MomentSequence s0 = iid_sum_moments(uni, 0, 5);
    CHECK(s0.values == Seq::identity(5));  // E S_0^n = 0^n

    // E (U_1 + U_2)^2 = 2*(1/3) + 2*(1/2)^2 = 7/6, by hand
    CHECK(iid_sum_moments(uni, 2, 2)[2] == Rational(BigInt(7), BigInt(6)));

    // deterministic sum: E S_k^n = k^n
    const MomentSequence det = iid_sum_moments(RandomVariable::constant(Rational(1)), 3, 6);
    for (unsigned n = 0; n <= 6; ++n) CHECK(det[n] == Rational(3).pow(n));

    // semigroup law: S_{k+j} moments = convolution of S_k and S_j moments
    for (const auto& rv : {RandomVariable::uniform01(), RandomVariable::cauchy_signed(),
                           RandomVariable::exponential(), RandomVariable::std_normal()}) {
        for (unsigned k = 0; k <= 4; ++k)
            for (unsigned j = 0; j + k <= 4; ++j)
                CHECK(iid_sum_moments(rv, k + j, 10).values ==
                      binomial_convolve(iid_sum_moments(rv, k, 10).values,
                                        iid_sum_moments(rv, j, 10).values));
    }
}

TEST_CASE("linear combination moments") {
    const RandomVariable uni = RandomVariable::uniform01();

    // identity combination
    const std::vector<Rational> one = {Rational(1)};
    const std::vector<RandomVariable> just_uni = {uni};
    CHECK(linear_combo_moments(one, just_uni, 8).values == moments_of(uni, 8).values);

    // degenerate weights give the 0^n sequence
    const std::vector<Rational> zeros = {Rational(0), Rational(0)};
    const std::vector<RandomVariable> two_uni = {uni, uni};
    CHECK(linear_combo_moments(zeros, two_uni, 6).values == Seq::identity(6));

    // unit weights on m copies reproduce the iid sum
    for (const auto& rv : {uni, RandomVariable::exponential(), RandomVariable::bernoulli(half)}) {
        for (std::size_t m = 1; m <= 3; ++m) {
            const std::vector<Rational> w(m, Rational(1));
            const std::vector<RandomVariable> rvs(m, rv);
            CHECK(linear_combo_moments(w, rvs, 8).values ==
                  iid_sum_moments(rv, static_cast<unsigned>(m), 8).values);
        }
    }
    const std::vector<Rational> unit2 = {Rational(1), Rational(1)};
    CHECK(linear_combo_moments(unit2, two_uni, 2)[2] == Rational(BigInt(7), BigInt(6)));

    const std::vector<Rational> wrong = {Rational(1)};
    CHECK_THROWS_AS(linear_combo_moments(wrong, two_uni, 4), std::invalid_argument);
}

TEST_CASE("iid moment table matches its defining sequence") {
    const MomentSequence mu = moments_of(RandomVariable::exponential(), 8);
    const IidMomentTable table(mu, 4);
    for (unsigned k = 0; k <= 4; ++k) {
        const MomentSequence direct = iid_sum_moments(RandomVariable::exponential(), k, 8);
        for (unsigned j = 0; j <= 8; ++j) CHECK(table(k, j) == direct[j]);
    }
    // E (x + S_k)^n expands binomially
    const Rational x(BigInt(-2), BigInt(3));
    Rational expect(0);
    for (unsigned j = 0; j <= 5; ++j)
        expect += binomial(5, j) * x.pow(5 - j) * table(3, j);
    CHECK(table.shifted_moment(3, 5, x) == expect);
}
