#include <catch2/catch_amalgamated.hpp>

#include <sstream>
#include <utility>
#include <vector>

#include "appell/appell_algebra.hpp"
#include "appell/moments.hpp"
#include "appell/seeded.hpp"
#include "appell/seq.hpp"

using namespace appell;

namespace {

const Rational half(BigInt(1), BigInt(2));

Seq constant_seq(std::size_t order, long long v) { return Seq(order, Rational(v)); }

// Bernoulli base numbers through the inverse recursion, worked by hand.
const std::vector<Rational> kBernoulliBase = {
    Rational(1), Rational(BigInt(-1), BigInt(2)), Rational(BigInt(1), BigInt(6)),
    Rational(0), Rational(BigInt(-1), BigInt(30)),
};

}  // namespace

TEST_CASE("binomial convolution basics") {
    const Seq ones = constant_seq(6, 1);
    CHECK(binomial_convolve(Seq::identity(6), ones) == ones);

    // e^z * e^z = e^{2z}
    const Seq twos = binomial_convolve(ones, ones);
    for (unsigned n = 0; n <= 6; ++n) CHECK(twos[n] == Rational(2).pow(n));

    // Bernoulli base numbers invert the uniform moment sequence termwise
    const Seq mu = moments_of(RandomVariable::uniform01(), 12).values;
    CHECK(binomial_convolve(bernoulli_sequence(12).base, mu) == Seq::identity(12));

    CHECK_THROWS_AS(binomial_convolve(constant_seq(3, 1), constant_seq(4, 1)), std::invalid_argument);
}

TEST_CASE("multinomial convolution agrees with the fold and the direct sum") {
    const Seq mu = moments_of(RandomVariable::uniform01(), 8).values;
    const std::vector<Seq> single = {mu};
    CHECK(multinomial_convolve(single) == mu);

    const std::vector<Seq> es(3, Seq::identity(8));
    CHECK(multinomial_convolve(es) == Seq::identity(8));

    const std::vector<Seq> two = {mu, mu};
    CHECK(multinomial_convolve(two) == iid_sum_moments(RandomVariable::uniform01(), 2, 8).values);

    RationalPool pool(3);
    std::vector<Seq> random;
    for (int s = 0; s < 3; ++s) {
        Seq u(7, Rational(0));
        for (std::size_t k = 0; k <= 7; ++k) u[k] = pool.next();
        random.push_back(u);
    }
    CHECK(multinomial_convolve(random) == multinomial_convolve_direct(random));

    const std::vector<Seq> empty;
    CHECK_THROWS_AS(multinomial_convolve(empty), std::invalid_argument);
}

TEST_CASE("convolution inverse") {
    CHECK(conv_inverse(Seq::identity(9)) == Seq::identity(9));

    const Seq inv = conv_inverse(moments_of(RandomVariable::uniform01(), 4).values);
    for (unsigned n = 0; n <= 4; ++n) CHECK(inv[n] == kBernoulliBase[n]);

    Seq twos(6, Rational(0));
    for (std::size_t n = 0; n <= 6; ++n) twos[n] = Rational(2).pow(static_cast<unsigned>(n));
    const Seq inv2 = conv_inverse(twos);
    for (unsigned n = 0; n <= 6; ++n) CHECK(inv2[n] == Rational(-2).pow(n));

    Seq singular(4, Rational(1));
    singular[0] = Rational(0);
    CHECK_THROWS_AS(conv_inverse(singular), std::domain_error);
}

TEST_CASE("appell evaluation and polynomial extraction") {
    const AppellSeq bern = bernoulli_sequence(8);

    // B_1(x) = x - 1/2
    const Poly b1 = appell_poly(bern, 1);
    CHECK(b1.coeffs() == std::vector<Rational>{-half, Rational(1)});

    RationalPool pool(5);
    const Rational x = pool.next();
    CHECK(appell_eval(bern, 0, x) == Rational(1));
    CHECK(appell_eval(bern, 1, x) == x - half);
    CHECK(appell_eval(bern, 2, Rational(0)) == Rational(BigInt(1), BigInt(6)));

    for (unsigned n = 0; n <= 8; ++n)
        CHECK(appell_poly(bern, n).eval(x) == appell_eval(bern, n, x));

    CHECK_THROWS_AS(appell_eval(bern, 9, x), std::out_of_range);
    CHECK_THROWS_AS(appell_poly(bern, 9), std::out_of_range);
}

TEST_CASE("appell derivative property") {
    for (const AppellSeq& a : {bernoulli_sequence(10), euler_sequence(10), cauchy_sequence(10),
                               appell_from_rv(RandomVariable::gamma(Rational(BigInt(3), BigInt(2))), 10)}) {
        for (unsigned n = 1; n <= 10; ++n)
            CHECK(appell_poly(a, n).derivative() == appell_poly(a, n - 1).scaled(Rational(n)));
    }
}

TEST_CASE("scale transformation") {
    const AppellSeq bern = bernoulli_sequence(6);

    CHECK(scale_transform(bern, Rational(1)).base == bern.base);

    // T_0 collapses members of R to the monomial sequence
    CHECK(scale_transform(bern, Rational(0)).base == Seq::identity(6));

    // T_2 B_2(x) = x^2 - 2x + 2/3
    const AppellSeq scaled = scale_transform(bern, Rational(2));
    CHECK(appell_poly(scaled, 2).coeffs() ==
          std::vector<Rational>{Rational(BigInt(2), BigInt(3)), Rational(-2), Rational(1)});

    RationalPool pool(9);
    const Rational w = pool.next_nonzero(), v = pool.next_nonzero();
    const AppellSeq euler = euler_sequence(6);
    CHECK(scale_transform(appell_convolve(bern, euler), w).base ==
          binomial_convolve(scale_transform(bern, w).base, scale_transform(euler, w).base));
    CHECK(scale_transform(scale_transform(bern, w), v).base == scale_transform(bern, w * v).base);
    CHECK(scale_transform(scale_transform(bern, w), w.reciprocal()).base == bern.base);
}

TEST_CASE("construction from a random variable") {
    // Uniform01 gives the Bernoulli numbers on every route
    for (AppellRoute route : {AppellRoute::MomentInverse, AppellRoute::StirlingSum,
                              AppellRoute::SignedIidSum, AppellRoute::XExpansion,
                              AppellRoute::AllChecked}) {
        const AppellSeq a = appell_from_rv(RandomVariable::uniform01(), 4, route);
        for (unsigned n = 0; n <= 4; ++n) CHECK(a.base[n] == kBernoulliBase[n]);
    }

    // a constant zero variable has E e^{zY} = 1
    CHECK(appell_from_rv(RandomVariable::constant(Rational(0)), 6, AppellRoute::AllChecked).base ==
          Seq::identity(6));

    // Euler base numbers 1, -1/2, 0, 1/4, 0, -1/2
    const AppellSeq euler = euler_sequence(5);
    const std::vector<Rational> expected = {Rational(1), -half, Rational(0),
                                            Rational(BigInt(1), BigInt(4)), Rational(0), -half};
    for (unsigned n = 0; n <= 5; ++n) CHECK(euler.base[n] == expected[n]);

    // route (b) at n = 2 for the uniform variable: -3*(1/3) + 7/6 = 1/6
    const IidMomentTable sums(moments_of(RandomVariable::uniform01(), 2), 2);
    Rational acc(0);
    for (unsigned k = 0; k <= 2; ++k) {
        const Rational term = binomial(3, k + 1) * sums(k, 2);
        acc += (k % 2 == 0) ? term : -term;
    }
    CHECK(acc == Rational(BigInt(1), BigInt(6)));
}

TEST_CASE("theorem1 x-expansion matches evaluation at nonzero x") {
    for (const auto& rv : {RandomVariable::uniform01(), RandomVariable::cauchy_signed(),
                           RandomVariable::bernoulli(Rational(BigInt(2), BigInt(3)))}) {
        const MomentSequence mu = moments_of(rv, 8);
        const AppellSeq a = appell_from_moments(mu);
        const IidMomentTable sums(mu, 8);
        for (const Rational& x : {Rational(1), -half, Rational(BigInt(5), BigInt(3))})
            for (unsigned n = 0; n <= 8; ++n)
                CHECK(appell_x_expansion(sums, n, x) == appell_eval(a, n, x));
    }
}

TEST_CASE("convolution evaluation splits across the arguments") {
    // Eq-(2.12) behaviour: (A x C)_n(x1 + x2) = sum_k C(n,k) A_k(x1) C_{n-k}(x2)
    const AppellSeq a = bernoulli_sequence(9), c = cauchy_sequence(9);
    const AppellSeq ac = appell_convolve(a, c);
    RationalPool pool(13);
    for (int trial = 0; trial < 4; ++trial) {
        const Rational x1 = pool.next(), x2 = pool.next();
        for (unsigned n = 0; n <= 9; ++n) {
            Rational split(0);
            for (unsigned k = 0; k <= n; ++k)
                split += binomial(n, k) * appell_eval(a, k, x1) * appell_eval(c, n - k, x2);
            CHECK(split == appell_eval(ac, n, x1 + x2));
        }
    }
}

TEST_CASE("scaled convolutions have the linear combination as associated variable") {
    // theorem-3 witness across catalog pairs
    RationalPool pool(17);
    const std::vector<std::pair<RandomVariable, RandomVariable>> pairs = {
        {RandomVariable::uniform01(), RandomVariable::bernoulli(half)},
        {RandomVariable::uniform01(), RandomVariable::cauchy_signed()},
        {RandomVariable::exponential(), RandomVariable::std_normal()},
    };
    for (const auto& [rv1, rv2] : pairs) {
        const Rational w1 = pool.next(), w2 = pool.next();
        const Seq left = binomial_convolve(scale_transform(appell_from_rv(rv1, 8), w1).base,
                                           scale_transform(appell_from_rv(rv2, 8), w2).base);
        const std::vector<Rational> w = {w1, w2};
        const std::vector<RandomVariable> rvs = {rv1, rv2};
        CHECK(left == conv_inverse(linear_combo_moments(w, rvs, 8).values));
    }
}

TEST_CASE("seq serialization lines") {
    std::ostringstream os;
    bernoulli_sequence(2).base.write_lines(os);
    CHECK(os.str() == "0 1\n1 -1/2\n2 1/6\n");
}
