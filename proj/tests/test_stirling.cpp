#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <vector>

#include "appell/appell_algebra.hpp"
#include "appell/moments.hpp"
#include "appell/stirling.hpp"

using namespace appell;

namespace {

// Independent oracle: count the set partitions of {0..n-1} with exactly r
// blocks by exhaustive enumeration of restricted growth strings.
long long partitions_into_blocks(unsigned n, unsigned r) {
    long long count = 0;
    std::function<void(unsigned, unsigned)> walk = [&](unsigned i, unsigned blocks) {
        if (i == n) {
            if (blocks == r) ++count;
            return;
        }
        for (unsigned b = 0; b <= blocks; ++b)  // existing block or a fresh one
            walk(i + 1, b == blocks ? blocks + 1 : blocks);
    };
    walk(0, 0);
    return count;
}

const RandomVariable kOne = RandomVariable::constant(Rational(1));

}  // namespace

TEST_CASE("classical stirling numbers against set-partition enumeration") {
    CHECK(partitions_into_blocks(4, 2) == 7);
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned r = 0; r <= n; ++r)
            CHECK(stirling_num(kOne, n, r) == Rational(partitions_into_blocks(n, r)));
}

TEST_CASE("stirling polynomial examples") {
    // r = 0 leaves the single k = 0 term: x^n
    const Rational x(BigInt(-3), BigInt(5));
    for (const auto& rv : {RandomVariable::uniform01(), RandomVariable::exponential()})
        for (unsigned n = 0; n <= 6; ++n)
            CHECK(stirling_poly(rv, n, 0, x) == x.pow(n));

    CHECK(stirling_num(kOne, 4, 2) == Rational(7));
    CHECK(stirling_poly(RandomVariable::uniform01(), 2, 1, Rational(0)) ==
          Rational(BigInt(1), BigInt(3)));  // E S_1^2 = E U^2

    for (unsigned n = 1; n <= 10; ++n) {
        CHECK(stirling_num(kOne, n, n) == Rational(1));
        CHECK(stirling_num(kOne, n, 1) == Rational(1));
    }

    CHECK_THROWS_AS(stirling_num(kOne, 3, 4), std::invalid_argument);
}

TEST_CASE("classical table matches the recurrence") {
    const auto def = classical_stirling_table(12);
    const auto rec = classical_stirling_recurrence_table(12);
    REQUIRE(def.size() == rec.size());
    for (unsigned n = 0; n <= 12; ++n) {
        REQUIRE(def[n].size() == n + 1);
        for (unsigned r = 0; r <= n; ++r) CHECK(def[n][r] == rec[n][r]);
    }
    CHECK(rec[4] == std::vector<Rational>{Rational(0), Rational(1), Rational(7), Rational(6), Rational(1)});
    for (unsigned n = 1; n <= 12; ++n) CHECK(rec[n][0] == Rational(0));
    CHECK(rec[0][0] == Rational(1));
}

TEST_CASE("uniform sums represent the classical numbers") {
    // S(n,k) = C(n,k) E S_k^{n-k} for uniform summands
    const unsigned N = 15;
    const auto table = classical_stirling_recurrence_table(N);
    const IidMomentTable sums(moments_of(RandomVariable::uniform01(), N), N);
    for (unsigned n = 0; n <= N; ++n)
        for (unsigned k = 0; k <= n; ++k)
            CHECK(binomial(n, k) * sums(k, n - k) == table[n][k]);
}

TEST_CASE("alternating stirling sums reproduce the convolution inverse") {
    for (const auto& rv : {RandomVariable::uniform01(), RandomVariable::bernoulli(Rational(BigInt(1), BigInt(2))),
                           RandomVariable::cauchy_signed(), RandomVariable::exponential()}) {
        const MomentSequence mu = moments_of(rv, 12);
        const Seq inverse = conv_inverse(mu.values);
        const IidMomentTable sums(mu, 12);
        for (unsigned n = 0; n <= 12; ++n) {
            Rational acc(0);
            for (unsigned r = 0; r <= n; ++r) {
                const Rational term = factorial(r) * stirling_poly(sums, n, r, Rational(0));
                acc += (r % 2 == 0) ? term : -term;
            }
            CHECK(acc == inverse[n]);
        }
    }
}

TEST_CASE("stirling polynomial has degree n - r in x") {
    // finite differences of a polynomial vanish beyond its degree
    for (const auto& rv : {RandomVariable::uniform01(), RandomVariable::exponential()}) {
        const unsigned n = 7;
        const MomentSequence mu = moments_of(rv, n);
        const IidMomentTable sums(mu, n);
        for (unsigned r = 0; r <= n; ++r) {
            std::vector<Rational> diffs(n + 1);
            for (unsigned t = 0; t <= n; ++t)
                diffs[t] = stirling_poly(sums, n, r, Rational(t));
            unsigned level = 0;
            while (diffs.size() > 1) {
                for (std::size_t i = 0; i + 1 < diffs.size(); ++i) diffs[i] = diffs[i + 1] - diffs[i];
                diffs.pop_back();
                ++level;
                if (level == n - r)
                    CHECK_FALSE(diffs[0].is_zero());  // leading coefficient survives
                if (level > n - r)
                    for (const Rational& d : diffs) CHECK(d.is_zero());
            }
        }
    }
}

TEST_CASE("generating function cross-check") {
    const std::vector<Rational> xs = {Rational(0), Rational(1), Rational(BigInt(-2), BigInt(3))};

    // (e^z - 1) expands with S(n,1)/n! = 1/n!
    CHECK(gf_cross_check(kOne, 1, 6, xs).pass);
    // r = 0 reduces to e^{xz}
    for (const auto& rv : {kOne, RandomVariable::std_normal(), RandomVariable::cauchy_signed()})
        CHECK(gf_cross_check(rv, 0, 8, xs).pass);
    CHECK(gf_cross_check(RandomVariable::uniform01(), 2, 8, xs).pass);
    CHECK(gf_cross_check(RandomVariable::gamma(Rational(BigInt(3), BigInt(2))), 2, 8).pass);

    CHECK_THROWS_AS(gf_cross_check(kOne, 9, 8, xs), std::invalid_argument);
}
