#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "appell/appell_algebra.hpp"
#include "appell/combinatorics.hpp"
#include "appell/moments.hpp"
#include "appell/oracle.hpp"
#include "appell/rational.hpp"
#include "appell/stirling.hpp"

namespace appell {

/// One convolution-identity instance: m Appell slots given by their
/// associated variables, evaluation points x_1..x_m, a weight oracle, and the
/// total degree n.
struct ConvolutionProblem {
    std::vector<RandomVariable> slots;
    std::vector<Rational> xs;
    MixedMomentOracle oracle;
    unsigned n = 0;

    std::size_t arity() const { return slots.size(); }

    void validate() const {
        if (slots.empty() || slots.size() != xs.size() || slots.size() != oracle.arity())
            throw std::invalid_argument("ConvolutionProblem: slots, xs, and oracle arity must agree");
    }
};

/// Exact LHS/RHS pair for one identity instance.
struct VerificationReport {
    std::string identity;
    std::size_t m = 0;
    unsigned n = 0;
    std::string parameters;
    Rational lhs;
    Rational rhs;
    bool equal = false;
    std::string lhs_route;
    std::string rhs_route;
    std::int64_t micros = 0;
};

namespace detail {

inline std::string join_rationals(std::span<const Rational> vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ',';
        s += vs[i].str();
    }
    return s;
}

inline std::string join_slots(std::span<const RandomVariable> rvs) {
    std::string s;
    for (std::size_t i = 0; i < rvs.size(); ++i) {
        if (i) s += ',';
        s += rvs[i].name();
    }
    return s;
}

class Stopwatch {
public:
    std::int64_t micros() const {
        return std::chrono::duration_cast<std::chrono::microseconds>(
                   std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

/// Brute-force left-hand side shared by every identity in the engine:
///   sum_{|j|=n} multinomial(n,j) E(W^j) prod_v A_{j_v}^{(v)}(x_v).
/// This is the universal oracle side the closed forms are checked against.
inline Rational lhs_multinomial_sum(const ConvolutionProblem& p) {
    p.validate();
    const std::size_t m = p.arity();
    std::vector<AppellSeq> seqs;
    seqs.reserve(m);
    for (const RandomVariable& rv : p.slots) seqs.push_back(appell_from_rv(rv, p.n));

    Rational acc(0);
    for_each_composition(p.n, m, [&](const MultiIndex& j) {
        Rational term = multinomial(p.n, j) * p.oracle(j);
        if (term.is_zero()) return;
        for (std::size_t v = 0; v < m; ++v)
            term *= appell_eval(seqs[v], j[v], p.xs[v]);
        acc += term;
    });
    return acc;
}

/// E ( W^i (x_1 W_1 + ... + x_m W_m)^{power} ), expanded over compositions of
/// the power; the oracle supplies every mixed moment.
inline Rational oracle_weighted_moment(const MixedMomentOracle& oracle, std::span<const Rational> xs,
                                       unsigned power, const MultiIndex& i) {
    const std::size_t m = i.size();
    Rational acc(0);
    for_each_composition(power, m, [&](const MultiIndex& l) {
        Rational term = multinomial(power, l);
        for (std::size_t v = 0; v < m; ++v) term *= xs[v].pow(l[v]);
        if (term.is_zero()) return;
        std::vector<unsigned> sum(m);
        for (std::size_t v = 0; v < m; ++v) sum[v] = i[v] + l[v];
        acc += term * oracle(MultiIndex(std::move(sum)));
    });
    return acc;
}

/// Deterministic-weight right-hand side, both routes computed and compared:
///   (a) sum_r (-1)^r r! S_{w.Y}(n,r;x) at x = sum_v w_v x_v
///   (b) sum_r C(n,r) x^{n-r} sum_k C(r+1,k+1) (-1)^k E (sum_v w_v S_k^(v))^r
/// Throws consistency_error when the routes disagree.
inline Rational theorem4_rhs(std::span<const Rational> w, std::span<const RandomVariable> slots,
                             std::span<const Rational> xs, unsigned n) {
    if (w.empty() || w.size() != slots.size() || w.size() != xs.size())
        throw std::invalid_argument("theorem4_rhs: w, slots, xs must be nonempty and equal-length");
    const std::size_t m = w.size();
    Rational x(0);
    for (std::size_t v = 0; v < m; ++v) x += w[v] * xs[v];

    // (a) through the Stirling polynomials of the compound variable w.Y
    const MomentSequence compound = linear_combo_moments(w, slots, n);
    const IidMomentTable compound_sums(compound, n);
    Rational route_a(0);
    for (unsigned r = 0; r <= n; ++r) {
        const Rational term = factorial(r) * stirling_poly(compound_sums, n, r, x);
        route_a += (r % 2 == 0) ? term : -term;
    }

    // (b) through the per-slot sums, expanding the r-th moment multinomially
    std::vector<IidMomentTable> sums;
    sums.reserve(m);
    for (const RandomVariable& rv : slots) sums.emplace_back(moments_of(rv, n), n);
    Rational route_b(0);
    for (unsigned r = 0; r <= n; ++r) {
        Rational inner(0);
        for (unsigned k = 0; k <= r; ++k) {
            Rational mixed(0);  // E (w_1 S_k^(1) + ... + w_m S_k^(m))^r
            for_each_composition(r, m, [&](const MultiIndex& i) {
                Rational term = multinomial(r, i);
                for (std::size_t v = 0; v < m; ++v)
                    term *= w[v].pow(i[v]) * sums[v](k, i[v]);
                mixed += term;
            });
            const Rational term = binomial(r + 1, k + 1) * mixed;
            inner += (k % 2 == 0) ? term : -term;
        }
        route_b += binomial(n, r) * x.pow(n - r) * inner;
    }

    if (route_a != route_b)
        throw consistency_error("theorem4_rhs", route_a, route_b);
    return route_a;
}

/// Random-weight right-hand side:
///   sum_r C(n,r) sum_k C(r+1,k+1) (-1)^k sum_{|i|=r} multinomial(r,i)
///     * E( W^i (x.W)^{n-r} ) * prod_v E (S_k^(v))^{i_v}.
inline Rational theorem5_rhs(const ConvolutionProblem& p) {
    p.validate();
    const std::size_t m = p.arity();
    std::vector<IidMomentTable> sums;
    sums.reserve(m);
    for (const RandomVariable& rv : p.slots) sums.emplace_back(moments_of(rv, p.n), p.n);

    Rational acc(0);
    for (unsigned r = 0; r <= p.n; ++r) {
        Rational over_k(0);
        for_each_composition(r, m, [&](const MultiIndex& i) {
            const Rational base = multinomial(r, i) * oracle_weighted_moment(p.oracle, p.xs, p.n - r, i);
            if (base.is_zero()) return;
            Rational signed_sum(0);
            for (unsigned k = 0; k <= r; ++k) {
                Rational prod(1);
                for (std::size_t v = 0; v < m; ++v) prod *= sums[v](k, i[v]);
                const Rational term = binomial(r + 1, k + 1) * prod;
                signed_sum += (k % 2 == 0) ? term : -term;
            }
            over_k += base * signed_sum;
        });
        acc += binomial(p.n, r) * over_k;
    }
    return acc;
}

/// Bernoulli-slot specialization: per-slot sum moments are replaced by the
/// classical Stirling ratios S(k+i,k)/C(k+i,k). Every slot must be uniform01.
inline Rational corollary41_rhs(const ConvolutionProblem& p) {
    p.validate();
    for (const RandomVariable& rv : p.slots)
        if (rv.kind() != RandomVariable::Kind::Uniform01)
            throw std::invalid_argument("corollary41_rhs: every slot must be uniform01, got " + rv.name());
    const std::size_t m = p.arity();
    const auto table = classical_stirling_recurrence_table(2 * p.n);
    const auto ratio = [&](unsigned k, unsigned i) {  // S(k+i,k)/C(k+i,k)
        return table[k + i][k] / binomial(k + i, k);
    };

    Rational acc(0);
    for (unsigned r = 0; r <= p.n; ++r) {
        Rational over_k(0);
        for_each_composition(r, m, [&](const MultiIndex& i) {
            const Rational base = multinomial(r, i) * oracle_weighted_moment(p.oracle, p.xs, p.n - r, i);
            if (base.is_zero()) return;
            Rational signed_sum(0);
            for (unsigned k = 0; k <= r; ++k) {
                Rational prod(1);
                for (std::size_t v = 0; v < m; ++v) prod *= ratio(k, i[v]);
                const Rational term = binomial(r + 1, k + 1) * prod;
                signed_sum += (k % 2 == 0) ? term : -term;
            }
            over_k += base * signed_sum;
        });
        acc += binomial(p.n, r) * over_k;
    }
    return acc;
}

// --- Dirichlet specialization (equal evaluation points) ---

/// Closed-form C(j) = prod <alpha_v>_{j_v} / <sum alpha>_n for |j| = n.
inline Rational corollary43_c(std::span<const Rational> alpha, const MultiIndex& j) {
    return dirichlet_mixed_moment(alpha, j);
}

/// Closed-form D(i;x) = x^{n-r} prod <alpha_v>_{i_v} / <sum alpha>_r for |i| = r.
inline Rational corollary43_d(std::span<const Rational> alpha, unsigned n, unsigned r,
                              const MultiIndex& i, const Rational& x) {
    if (i.weight() != r)
        throw std::invalid_argument("corollary43_d: index weight must equal r");
    return x.pow(n - r) * dirichlet_mixed_moment(alpha, i);
}

/// Corollary-4.1 right-hand side with the Dirichlet closed forms substituted;
/// requires one common evaluation point x.
inline Rational corollary43_rhs(std::span<const Rational> alpha, unsigned n, const Rational& x) {
    const std::size_t m = alpha.size();
    if (m < 2) throw std::invalid_argument("corollary43_rhs: needs m >= 2");
    const auto table = classical_stirling_recurrence_table(2 * n);
    const auto ratio = [&](unsigned k, unsigned i) {
        return table[k + i][k] / binomial(k + i, k);
    };
    Rational acc(0);
    for (unsigned r = 0; r <= n; ++r) {
        Rational over_k(0);
        for_each_composition(r, m, [&](const MultiIndex& i) {
            const Rational base = multinomial(r, i) * corollary43_d(alpha, n, r, i, x);
            if (base.is_zero()) return;
            Rational signed_sum(0);
            for (unsigned k = 0; k <= r; ++k) {
                Rational prod(1);
                for (std::size_t v = 0; v < m; ++v) prod *= ratio(k, i[v]);
                const Rational term = binomial(r + 1, k + 1) * prod;
                signed_sum += (k % 2 == 0) ? term : -term;
            }
            over_k += base * signed_sum;
        });
        acc += binomial(n, r) * over_k;
    }
    return acc;
}

// --- i.i.d.-exponential specialization ---

/// C(j) = prod j_v! (exponential mixed moments). The index weight is the
/// total degree of the instance it belongs to.
inline Rational corollary45_c(const MultiIndex& j) {
    Rational acc(1);
    for (unsigned part : j) acc *= factorial(part);
    return acc;
}

/// D(i;x) = x^{n-r} (m+n-1)!/(m+r-1)! prod i_v!, the Chu-Vandermonde collapse
/// of the l-sum. Requires |i| = r.
inline Rational corollary45_d(std::size_t m, unsigned n, unsigned r, const MultiIndex& i,
                              const Rational& x) {
    if (i.size() != m)
        throw std::invalid_argument("corollary45_d: index arity mismatch");
    if (i.weight() != r)
        throw std::invalid_argument("corollary45_d: index weight must equal r");
    Rational acc = x.pow(n - r);
    acc *= Rational(factorial_int(static_cast<unsigned>(m) + n - 1), factorial_int(static_cast<unsigned>(m) + r - 1));
    for (unsigned part : i) acc *= factorial(part);
    return acc;
}

/// Corollary-4.1 right-hand side with the exponential closed forms.
inline Rational corollary45_rhs(std::size_t m, unsigned n, const Rational& x) {
    if (m < 1) throw std::invalid_argument("corollary45_rhs: needs m >= 1");
    const auto table = classical_stirling_recurrence_table(2 * n);
    const auto ratio = [&](unsigned k, unsigned i) {
        return table[k + i][k] / binomial(k + i, k);
    };
    Rational acc(0);
    for (unsigned r = 0; r <= n; ++r) {
        Rational over_k(0);
        for_each_composition(r, m, [&](const MultiIndex& i) {
            const Rational base = multinomial(r, i) * corollary45_d(m, n, r, i, x);
            if (base.is_zero()) return;
            Rational signed_sum(0);
            for (unsigned k = 0; k <= r; ++k) {
                Rational prod(1);
                for (std::size_t v = 0; v < m; ++v) prod *= ratio(k, i[v]);
                const Rational term = binomial(r + 1, k + 1) * prod;
                signed_sum += (k % 2 == 0) ? term : -term;
            }
            over_k += base * signed_sum;
        });
        acc += binomial(n, r) * over_k;
    }
    return acc;
}

// --- i.i.d.-normal specialization ---

/// H_n(0) without complex arithmetic: 0 for odd n, (-1)^k (2k-1)!! at n = 2k.
inline Rational hermite_zero(unsigned n) {
    if (n % 2 == 1) return Rational(0);
    const Rational v = double_factorial_odd(n / 2);
    return (n / 2) % 2 == 0 ? v : -v;
}

/// prod_v E Z^{j_v} for independent standard normals.
inline Rational normal_product_coefficient(const MultiIndex& j) {
    Rational acc(1);
    for (unsigned part : j) {
        acc *= moment(RandomVariable::std_normal(), part);
        if (acc.is_zero()) return acc;
    }
    return acc;
}

/// The same coefficient through (-i)^{|j|} prod_v H_{j_v}(0). The power of
/// -i is real exactly when the product is nonzero (all parts even), so no
/// complex arithmetic is needed: odd |j| forces a zero product.
inline Rational hermite_product_coefficient(const MultiIndex& j) {
    Rational prod(1);
    for (unsigned part : j) {
        prod *= hermite_zero(part);
        if (prod.is_zero()) return prod;
    }
    // Nonzero product: every part is even, so |j| = 2K and (-i)^{|j|} = (-1)^K.
    const unsigned half = j.weight() / 2;
    return half % 2 == 0 ? prod : -prod;
}

// --- stand-alone checks ---

/// Chu-Vandermonde reformulation, brute force against the closed form:
///   sum_{|l|=n} prod C(t_v + l_v, l_v) = C(t + m + n - 1, n),  t = sum t_v,
/// with rational upper arguments via falling factorials.
inline VerificationReport chu_vandermonde_check(std::span<const Rational> t, unsigned n) {
    if (t.empty()) throw std::invalid_argument("chu_vandermonde_check: empty parameter vector");
    detail::Stopwatch clock;
    const std::size_t m = t.size();

    Rational lhs(0);
    for_each_composition(n, m, [&](const MultiIndex& l) {
        Rational term(1);
        for (std::size_t v = 0; v < m; ++v)
            term *= generalized_binomial(t[v] + Rational(l[v]), l[v]);
        lhs += term;
    });

    Rational t_sum(0);
    for (const Rational& tv : t) t_sum += tv;
    const Rational rhs = generalized_binomial(t_sum + Rational(static_cast<long long>(m) + n - 1), n);

    VerificationReport rep;
    rep.identity = "chu-vandermonde";
    rep.m = m;
    rep.n = n;
    rep.parameters = "t=" + detail::join_rationals(t);
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.equal = lhs == rhs;
    rep.lhs_route = "composition-sum";
    rep.rhs_route = "closed-form";
    rep.micros = clock.micros();
    return rep;
}

/// Unweighted Bernoulli product sum against the Stirling-ratio closed form:
///   sum_{|j|=n} prod B_{j_v}(x)
///   = sum_r C(m+n-1,n-r) x^{n-r} sum_k C(r+1,k+1)(-1)^k
///       sum_{|i|=r} prod S(k+i_v,k)/C(k+i_v,k).
inline VerificationReport eq440_check(std::size_t m, unsigned n, const Rational& x) {
    if (m < 2) throw std::invalid_argument("eq440_check: needs m >= 2");
    detail::Stopwatch clock;

    const AppellSeq bern = bernoulli_sequence(n);
    std::vector<Rational> b(n + 1);  // B_j(x)
    for (unsigned jj = 0; jj <= n; ++jj) b[jj] = appell_eval(bern, jj, x);

    Rational lhs(0);
    for_each_composition(n, m, [&](const MultiIndex& j) {
        Rational term(1);
        for (unsigned part : j) term *= b[part];
        lhs += term;
    });

    const auto table = classical_stirling_recurrence_table(2 * n);
    const auto ratio = [&](unsigned k, unsigned i) {
        return table[k + i][k] / binomial(k + i, k);
    };
    Rational rhs(0);
    for (unsigned r = 0; r <= n; ++r) {
        Rational signed_sum(0);
        for (unsigned k = 0; k <= r; ++k) {
            Rational comp_sum(0);
            for_each_composition(r, m, [&](const MultiIndex& i) {
                Rational prod(1);
                for (std::size_t v = 0; v < m; ++v) prod *= ratio(k, i[v]);
                comp_sum += prod;
            });
            const Rational term = binomial(r + 1, k + 1) * comp_sum;
            signed_sum += (k % 2 == 0) ? term : -term;
        }
        rhs += binomial(static_cast<unsigned>(m) + n - 1, n - r) * x.pow(n - r) * signed_sum;
    }

    VerificationReport rep;
    rep.identity = "eq440";
    rep.m = m;
    rep.n = n;
    rep.parameters = "x=" + x.str();
    rep.lhs = lhs;
    rep.rhs = rhs;
    rep.equal = lhs == rhs;
    rep.lhs_route = "composition-sum";
    rep.rhs_route = "stirling-ratio";
    rep.micros = clock.micros();
    return rep;
}

/// Second-order Bernoulli convolution. The printed form of the classical
/// identity carries a sign misprint on its first term; the corrected form
///   sum_k C(n,k) B_k(x) B_{n-k}(y) = n(x+y-1) B_{n-1}(x+y) - (n-1) B_n(x+y)
/// is verified, and the printed form's value is recorded alongside for
/// transparency.
inline VerificationReport norlund_check(unsigned n, const Rational& x, const Rational& y) {
    if (n < 1) throw std::invalid_argument("norlund_check: needs n >= 1");
    detail::Stopwatch clock;

    const AppellSeq bern = bernoulli_sequence(n);
    Rational lhs(0);
    for (unsigned k = 0; k <= n; ++k)
        lhs += binomial(n, k) * appell_eval(bern, k, x) * appell_eval(bern, n - k, y);

    const Rational s = x + y;
    const Rational first = Rational(n) * (s - Rational(1)) * appell_eval(bern, n - 1, s);
    const Rational second = Rational(static_cast<long long>(n) - 1) * appell_eval(bern, n, s);
    const Rational corrected = first - second;
    const Rational printed = -first - second;

    VerificationReport rep;
    rep.identity = "norlund";
    rep.m = 2;
    rep.n = n;
    rep.parameters = "x=" + x.str() + " y=" + y.str() + " printed_rhs=" + printed.str() +
                     " printed_matches=" + (printed == lhs ? std::string("true") : std::string("false"));
    rep.lhs = lhs;
    rep.rhs = corrected;
    rep.equal = lhs == corrected;
    rep.lhs_route = "composition-sum";
    rep.rhs_route = "corrected-sign";
    rep.micros = clock.micros();
    return rep;
}

}  // namespace appell
