#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "appell/combinatorics.hpp"
#include "appell/moments.hpp"
#include "appell/poly.hpp"
#include "appell/rational.hpp"
#include "appell/seq.hpp"
#include "appell/stirling.hpp"

namespace appell {

/// Two supposedly-equal routes produced different values. Carries both so the
/// caller sees the exact disagreement.
class consistency_error : public std::logic_error {
public:
    consistency_error(const std::string& where, const Rational& a, const Rational& b)
        : std::logic_error(where + ": routes disagree, " + a.str() + " vs " + b.str()),
          lhs(a), rhs(b) {}

    Rational lhs;
    Rational rhs;
};

/// An Appell sequence, represented by its base numbers A_n(0) up to the
/// truncation order. Values A_n(x) are always derived from the base through
/// A_n(x) = sum_k C(n,k) A_k(0) x^{n-k}.
struct AppellSeq {
    Seq base;                // A_0(0)..A_N(0); A_0(0) != 0 for group membership
    std::string provenance;  // catalog variable, convolution, or transform

    std::size_t order() const { return base.order(); }
};

/// A_n(x) for n within the truncation.
inline Rational appell_eval(const AppellSeq& a, unsigned n, const Rational& x) {
    if (n > a.order())
        throw std::out_of_range("appell_eval: degree exceeds truncation order");
    Rational acc(0);
    for (unsigned k = 0; k <= n; ++k)
        acc += binomial(n, k) * a.base[k] * x.pow(n - k);
    return acc;
}

/// A_n as a polynomial in x: coefficient of x^{n-k} is C(n,k) A_k(0).
inline Poly appell_poly(const AppellSeq& a, unsigned n) {
    if (n > a.order())
        throw std::out_of_range("appell_poly: degree exceeds truncation order");
    std::vector<Rational> coeffs(n + 1, Rational(0));
    for (unsigned k = 0; k <= n; ++k)
        coeffs[n - k] = binomial(n, k) * a.base[k];
    return Poly(std::move(coeffs));
}

/// Scale transformation T_w: base numbers become w^k A_k(0), so that
/// T_w A_n(x) = w^n A_n(x/w) for w != 0. T_0 is defined separately and
/// collapses to the sequence with base (A_0(0), 0, 0, ...), i.e.
/// T_0 A_n(x) = A_0(0) x^n.
inline AppellSeq scale_transform(const AppellSeq& a, const Rational& w) {
    Seq base(a.order(), Rational(0));
    if (w.is_zero()) {
        base[0] = a.base[0];
    } else {
        for (std::size_t k = 0; k <= a.order(); ++k)
            base[k] = w.pow(static_cast<unsigned>(k)) * a.base[k];
    }
    return {std::move(base), "T_" + w.str() + "(" + a.provenance + ")"};
}

/// Convolution of Appell sequences: base sequences convolve binomially.
inline AppellSeq appell_convolve(const AppellSeq& a, const AppellSeq& c) {
    return {binomial_convolve(a.base, c.base), a.provenance + " x " + c.provenance};
}

/// Construction routes for the Appell sequence with associated random
/// variable Y (generating function e^{xz} / E e^{zY}):
///   StirlingSum   : A_n(0) = sum_r (-1)^r r! S_Y(n,r)
///   SignedIidSum  : A_n(0) = sum_k C(n+1,k+1) (-1)^k E S_k^n
///   XExpansion    : the two-index expansion evaluated at x = 0
///   MomentInverse : convolution inverse of the moment sequence
///   AllChecked    : all of the above, compared termwise
enum class AppellRoute { StirlingSum, SignedIidSum, XExpansion, MomentInverse, AllChecked };

/// The x-expansion of Theorem-1 type:
///   A_n(x) = sum_r C(n,r) x^{n-r} sum_k C(r+1,k+1) (-1)^k E S_k^r.
inline Rational appell_x_expansion(const IidMomentTable& sums, unsigned n, const Rational& x) {
    Rational acc(0);
    for (unsigned r = 0; r <= n; ++r) {
        Rational inner(0);
        for (unsigned k = 0; k <= r; ++k) {
            const Rational term = binomial(r + 1, k + 1) * sums(k, r);
            inner += (k % 2 == 0) ? term : -term;
        }
        acc += binomial(n, r) * x.pow(n - r) * inner;
    }
    return acc;
}

inline Rational appell_x_expansion(const RandomVariable& rv, unsigned n, const Rational& x) {
    return appell_x_expansion(IidMomentTable(moments_of(rv, n), n), n, x);
}

namespace detail {

inline Seq appell_base_from_moments(const MomentSequence& mu, AppellRoute route) {
    const std::size_t N = mu.order();
    switch (route) {
        case AppellRoute::MomentInverse:
            return conv_inverse(mu.values);
        case AppellRoute::SignedIidSum: {
            const IidMomentTable sums(mu, static_cast<unsigned>(N));
            Seq base(N, Rational(0));
            for (unsigned n = 0; n <= N; ++n) {
                Rational acc(0);
                for (unsigned k = 0; k <= n; ++k) {
                    const Rational term = binomial(n + 1, k + 1) * sums(k, n);
                    acc += (k % 2 == 0) ? term : -term;
                }
                base[n] = acc;
            }
            return base;
        }
        case AppellRoute::StirlingSum: {
            const IidMomentTable sums(mu, static_cast<unsigned>(N));
            Seq base(N, Rational(0));
            for (unsigned n = 0; n <= N; ++n) {
                Rational acc(0);
                for (unsigned r = 0; r <= n; ++r) {
                    const Rational term = factorial(r) * stirling_poly(sums, n, r, Rational(0));
                    acc += (r % 2 == 0) ? term : -term;
                }
                base[n] = acc;
            }
            return base;
        }
        case AppellRoute::XExpansion: {
            const IidMomentTable sums(mu, static_cast<unsigned>(N));
            Seq base(N, Rational(0));
            for (unsigned n = 0; n <= N; ++n)
                base[n] = appell_x_expansion(sums, n, Rational(0));
            return base;
        }
        case AppellRoute::AllChecked: {
            Seq ref = appell_base_from_moments(mu, AppellRoute::MomentInverse);
            for (AppellRoute r : {AppellRoute::StirlingSum, AppellRoute::SignedIidSum, AppellRoute::XExpansion}) {
                const Seq other = appell_base_from_moments(mu, r);
                for (std::size_t n = 0; n <= N; ++n)
                    if (other[n] != ref[n])
                        throw consistency_error("appell_from_rv(" + mu.source + ") n=" + std::to_string(n),
                                                ref[n], other[n]);
            }
            return ref;
        }
    }
    throw std::logic_error("appell_base_from_moments: bad route");
}

}  // namespace detail

/// Appell sequence associated with a compound variable given by its moments.
inline AppellSeq appell_from_moments(const MomentSequence& mu, AppellRoute route = AppellRoute::MomentInverse) {
    return {detail::appell_base_from_moments(mu, route), "appell(" + mu.source + ")"};
}

/// Appell sequence associated with a catalog random variable.
inline AppellSeq appell_from_rv(const RandomVariable& rv, std::size_t order,
                                AppellRoute route = AppellRoute::MomentInverse) {
    return appell_from_moments(moments_of(rv, order), route);
}

// The three named families used throughout the examples.
inline AppellSeq bernoulli_sequence(std::size_t order) {
    AppellSeq a = appell_from_rv(RandomVariable::uniform01(), order);
    a.provenance = "bernoulli";
    return a;
}

inline AppellSeq euler_sequence(std::size_t order) {
    AppellSeq a = appell_from_rv(RandomVariable::bernoulli(Rational(BigInt(1), BigInt(2))), order);
    a.provenance = "euler";
    return a;
}

inline AppellSeq cauchy_sequence(std::size_t order) {
    AppellSeq a = appell_from_rv(RandomVariable::cauchy_signed(), order);
    a.provenance = "cauchy";
    return a;
}

}  // namespace appell
