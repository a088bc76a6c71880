#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "appell/combinatorics.hpp"
#include "appell/moments.hpp"
#include "appell/power_series.hpp"
#include "appell/rational.hpp"
#include "appell/seeded.hpp"

namespace appell {

namespace detail {

inline void check_stirling_range(unsigned n, unsigned r) {
    // r > n is rejected rather than mapped to 0: the defining sum is only
    // stated for r <= n, and a stray index is a caller bug.
    if (r > n)
        throw std::invalid_argument("stirling: r = " + std::to_string(r) +
                                    " exceeds n = " + std::to_string(n));
}

}  // namespace detail

/// Stirling polynomial of the second kind associated with the variable whose
/// moments are given:
///   S_Y(n,r;x) = (1/r!) sum_{k=0}^r C(r,k) (-1)^{r-k} E (x + S_k)^n,
/// with S_k a sum of k independent copies of Y. Requires 0 <= r <= n and a
/// moment table of order >= n.
inline Rational stirling_poly(const IidMomentTable& sums, unsigned n, unsigned r, const Rational& x) {
    detail::check_stirling_range(n, r);
    Rational acc(0);
    for (unsigned k = 0; k <= r; ++k) {
        const Rational term = binomial(r, k) * sums.shifted_moment(k, n, x);
        acc += ((r - k) % 2 == 0) ? term : -term;
    }
    return acc / factorial(r);
}

inline Rational stirling_poly(const MomentSequence& y, unsigned n, unsigned r, const Rational& x) {
    detail::check_stirling_range(n, r);
    if (y.order() < n)
        throw std::out_of_range("stirling_poly: moment table shorter than n");
    return stirling_poly(IidMomentTable(y, r), n, r, x);
}

inline Rational stirling_poly(const RandomVariable& rv, unsigned n, unsigned r, const Rational& x) {
    return stirling_poly(moments_of(rv, n), n, r, x);
}

/// Stirling numbers of the second kind associated with Y: S_Y(n,r) = S_Y(n,r;0).
inline Rational stirling_num(const MomentSequence& y, unsigned n, unsigned r) {
    return stirling_poly(y, n, r, Rational(0));
}

inline Rational stirling_num(const RandomVariable& rv, unsigned n, unsigned r) {
    return stirling_num(moments_of(rv, n), n, r);
}

/// Classical table S(n,r) for n <= N, computed through the probabilistic
/// definition at Y = 1. Row n holds r = 0..n.
inline std::vector<std::vector<Rational>> classical_stirling_table(unsigned N) {
    const MomentSequence one = moments_of(RandomVariable::constant(Rational(1)), N);
    const IidMomentTable sums(one, N);
    std::vector<std::vector<Rational>> table(N + 1);
    for (unsigned n = 0; n <= N; ++n) {
        table[n].reserve(n + 1);
        for (unsigned r = 0; r <= n; ++r)
            table[n].push_back(stirling_poly(sums, n, r, Rational(0)));
    }
    return table;
}

/// Independent route: the same table built from the recurrence
/// S(n,r) = r S(n-1,r) + S(n-1,r-1), S(0,0) = 1.
inline std::vector<std::vector<Rational>> classical_stirling_recurrence_table(unsigned N) {
    std::vector<std::vector<Rational>> table(N + 1);
    table[0] = {Rational(1)};
    for (unsigned n = 1; n <= N; ++n) {
        table[n].assign(n + 1, Rational(0));
        for (unsigned r = 1; r <= n; ++r) {
            Rational v = Rational(r) * (r <= n - 1 ? table[n - 1][r] : Rational(0));
            v += table[n - 1][r - 1];
            table[n][r] = v;
        }
    }
    return table;
}

/// Outcome of the generating-function cross-check of S_Y against the
/// truncated series (M(z)-1)^r / r! * e^{xz}.
struct GfCrossCheck {
    bool pass = true;
    unsigned first_bad_n = 0;
    Rational x;
    Rational expected;  // series coefficient of z^n
    Rational actual;    // S_Y(n,r;x)/n!

    std::string describe() const {
        if (pass) return "pass";
        return "mismatch at n=" + std::to_string(first_bad_n) + " x=" + x.str() +
               ": series " + expected.str() + " vs definition " + actual.str();
    }
};

/// Verifies, coefficient by coefficient, that the EGF identity
///   e^{xz} (E e^{zY} - 1)^r / r! = sum_{n>=r} S_Y(n,r;x) z^n / n!
/// holds after truncation at order N, for each supplied x.
inline GfCrossCheck gf_cross_check(const RandomVariable& rv, unsigned r, unsigned N,
                                   std::span<const Rational> xs) {
    if (r > N)
        throw std::invalid_argument("gf_cross_check: r exceeds truncation order");
    const MomentSequence mu = moments_of(rv, N);
    const IidMomentTable sums(mu, r);

    TruncatedSeries egf(N);
    for (unsigned n = 0; n <= N; ++n) egf[n] = mu[n] / factorial(n);
    egf -= Rational(1);
    TruncatedSeries powed = egf.pow(r);
    powed *= factorial(r).reciprocal();

    for (const Rational& x : xs) {
        const TruncatedSeries series = powed * TruncatedSeries::exp_xz(x, N);
        for (unsigned n = r; n <= N; ++n) {
            const Rational expected = series[n];
            const Rational actual = stirling_poly(sums, n, r, x) / factorial(n);
            if (expected != actual)
                return {false, n, x, expected, actual};
        }
    }
    return {};
}

/// Same check at three x values from the default seeded pool.
inline GfCrossCheck gf_cross_check(const RandomVariable& rv, unsigned r, unsigned N) {
    RationalPool pool;
    return gf_cross_check(rv, r, N, pool.take(3));
}

}  // namespace appell
