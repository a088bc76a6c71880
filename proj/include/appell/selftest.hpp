#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "appell/appell_algebra.hpp"
#include "appell/identity.hpp"
#include "appell/moments.hpp"
#include "appell/oracle.hpp"
#include "appell/seeded.hpp"
#include "appell/seq.hpp"
#include "appell/stirling.hpp"

namespace appell::selftest {

struct Options {
    bool quick = false;             // reduced sweep sizes, same criteria
    bool corrupt_stirling = false;  // fault injection: flips one classical table entry
    std::uint64_t seed = kDefaultSeed;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;      // first failure, or a short summary of what ran
    std::int64_t micros = 0;
    std::int64_t budget_ms = 0;
};

namespace detail {

using appell::detail::Stopwatch;

// First-failure collector. Criteria stop probing once a mismatch is found.
struct Check {
    bool ok = true;
    std::string detail;

    bool expect(bool cond, const std::function<std::string()>& describe) {
        if (ok && !cond) {
            ok = false;
            detail = describe();
        }
        return ok;
    }
};

inline std::vector<RandomVariable> catalog_representatives() {
    return {
        RandomVariable::constant(Rational(1)),
        RandomVariable::uniform01(),
        RandomVariable::bernoulli(Rational(BigInt(1), BigInt(2))),
        RandomVariable::cauchy_signed(),
        RandomVariable::exponential(),
        RandomVariable::gamma(Rational(BigInt(3), BigInt(2))),
        RandomVariable::std_normal(),
    };
}

// 1. Four construction routes of the Appell sequence agree.
inline CriterionResult criterion1(const Options& opt) {
    Stopwatch clock;
    const unsigned N = opt.quick ? 10 : 20;
    Check c;
    const std::vector<RandomVariable> rvs = {
        RandomVariable::uniform01(),
        RandomVariable::bernoulli(Rational(BigInt(1), BigInt(2))),
        RandomVariable::bernoulli(Rational(BigInt(2), BigInt(3))),
        RandomVariable::cauchy_signed(),
    };
    const std::vector<Rational> xs = {Rational(0), Rational(1), Rational(BigInt(-1), BigInt(2))};
    for (const RandomVariable& rv : rvs) {
        const MomentSequence mu = moments_of(rv, N);
        const Seq base_d = appell_from_moments(mu, AppellRoute::MomentInverse).base;
        const Seq base_a = appell_from_moments(mu, AppellRoute::StirlingSum).base;
        const Seq base_b = appell_from_moments(mu, AppellRoute::SignedIidSum).base;
        for (unsigned n = 0; n <= N && c.ok; ++n) {
            c.expect(base_a[n] == base_d[n], [&] {
                return rv.name() + " n=" + std::to_string(n) + ": stirling route " + base_a[n].str() +
                       " vs inverse route " + base_d[n].str();
            });
            c.expect(base_b[n] == base_d[n], [&] {
                return rv.name() + " n=" + std::to_string(n) + ": signed-sum route " + base_b[n].str() +
                       " vs inverse route " + base_d[n].str();
            });
        }
        const AppellSeq a{base_d, rv.name()};
        const IidMomentTable sums(mu, N);
        for (const Rational& x : xs) {
            for (unsigned n = 0; n <= N && c.ok; ++n) {
                const Rational expanded = appell_x_expansion(sums, n, x);
                const Rational direct = appell_eval(a, n, x);
                c.expect(expanded == direct, [&] {
                    return rv.name() + " n=" + std::to_string(n) + " x=" + x.str() +
                           ": x-expansion " + expanded.str() + " vs eval " + direct.str();
                });
            }
        }
        if (!c.ok) break;
    }
    return {1, "theorem1 four-route agreement", c.ok,
            c.ok ? "4 variables, n <= " + std::to_string(N) : c.detail, clock.micros(), 5000};
}

// 2. Bernoulli base numbers satisfy sum_{k<=n} C(n+1,k) B_k = 0.
inline CriterionResult criterion2(const Options&) {
    Stopwatch clock;
    const unsigned N = 12;
    Check c;
    const AppellSeq bern = bernoulli_sequence(N);
    for (unsigned n = 1; n <= N && c.ok; ++n) {
        Rational acc(0);
        for (unsigned k = 0; k <= n; ++k) acc += binomial(n + 1, k) * bern.base[k];
        c.expect(acc.is_zero(), [&] {
            return "n=" + std::to_string(n) + ": recursion sum " + acc.str() + " != 0";
        });
    }
    return {2, "bernoulli recursion ground truth", c.ok,
            c.ok ? "n <= 12" : c.detail, clock.micros(), 1000};
}

// 3. Probabilistic classical Stirling table vs recurrence, plus the
//    representation S(n,k) = C(n,k) E S_k^{n-k} for uniform sums.
inline CriterionResult criterion3(const Options& opt) {
    Stopwatch clock;
    const unsigned N = opt.quick ? 10 : 15;
    Check c;
    const auto via_def = classical_stirling_table(N);
    auto via_rec = classical_stirling_recurrence_table(N);
    if (opt.corrupt_stirling && N >= 4) via_rec[4][2] += Rational(1);
    for (unsigned n = 0; n <= N && c.ok; ++n)
        for (unsigned r = 0; r <= n && c.ok; ++r)
            c.expect(via_def[n][r] == via_rec[n][r], [&] {
                return "S(" + std::to_string(n) + "," + std::to_string(r) + "): definition " +
                       via_def[n][r].str() + " vs recurrence " + via_rec[n][r].str();
            });
    const IidMomentTable uniform_sums(moments_of(RandomVariable::uniform01(), N), N);
    for (unsigned n = 0; n <= N && c.ok; ++n)
        for (unsigned k = 0; k <= n && c.ok; ++k) {
            const Rational lhs = binomial(n, k) * uniform_sums(k, n - k);
            c.expect(lhs == via_rec[n][k], [&] {
                return "eq4.31 n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " +
                       lhs.str() + " vs S = " + via_rec[n][k].str();
            });
        }
    return {3, "classical stirling table + uniform-sum representation", c.ok,
            c.ok ? "n <= " + std::to_string(N) : c.detail, clock.micros(), 2000};
}

// 4. Generating-function cross-check of S_Y for every catalog kind.
inline CriterionResult criterion4(const Options& opt) {
    Stopwatch clock;
    const unsigned N = opt.quick ? 8 : 12;
    const unsigned rmax = opt.quick ? 3 : 6;
    Check c;
    RationalPool pool(opt.seed);
    const std::vector<Rational> xs = pool.take(opt.quick ? 2 : 3);
    for (const RandomVariable& rv : catalog_representatives()) {
        for (unsigned r = 0; r <= rmax && c.ok; ++r) {
            const GfCrossCheck res = gf_cross_check(rv, r, N, xs);
            c.expect(res.pass, [&] { return rv.name() + " r=" + std::to_string(r) + ": " + res.describe(); });
        }
        if (!c.ok) break;
    }
    return {4, "eq2.20 generating-function cross-check", c.ok,
            c.ok ? "7 kinds, r <= " + std::to_string(rmax) + ", N = " + std::to_string(N) : c.detail,
            clock.micros(), 3000};
}

// 5. Theorem 4 against the brute-force sum, mixed slots, seeded weights.
inline CriterionResult criterion5(const Options& opt) {
    Stopwatch clock;
    const unsigned nmax = opt.quick ? 6 : 12;
    const unsigned tuples = opt.quick ? 2 : 5;
    Check c;
    RationalPool pool(opt.seed + 5);
    std::mt19937_64 bits(opt.seed + 55);
    const RandomVariable uni = RandomVariable::uniform01();
    const RandomVariable ber = RandomVariable::bernoulli(Rational(BigInt(1), BigInt(2)));
    for (std::size_t m : {std::size_t{2}, std::size_t{3}}) {
        for (unsigned n = 0; n <= nmax && c.ok; ++n) {
            for (unsigned t = 0; t < tuples && c.ok; ++t) {
                std::vector<RandomVariable> slots;
                for (std::size_t v = 0; v < m; ++v) slots.push_back((bits() & 1) ? uni : ber);
                const std::vector<Rational> w = pool.take(m);
                const std::vector<Rational> xs = pool.take(m);
                ConvolutionProblem p{slots, xs, MixedMomentOracle::deterministic(w), n};
                const Rational lhs = lhs_multinomial_sum(p);
                const Rational rhs = theorem4_rhs(w, slots, xs, n);
                c.expect(lhs == rhs, [&] {
                    return "m=" + std::to_string(m) + " n=" + std::to_string(n) +
                           " w=" + appell::detail::join_rationals(w) +
                           " x=" + appell::detail::join_rationals(xs) + ": lhs " + lhs.str() +
                           " vs rhs " + rhs.str();
                });
            }
        }
        if (!c.ok) break;
    }
    return {5, "theorem4 deterministic-weight identity", c.ok,
            c.ok ? "m in {2,3}, n <= " + std::to_string(nmax) + ", " + std::to_string(tuples) +
                   " tuples each" : c.detail,
            clock.micros(), 10000};
}

// 6. Theorem 5 and Corollary 4.1 across every oracle family.
inline CriterionResult criterion6(const Options& opt) {
    Stopwatch clock;
    const unsigned nmax = opt.quick ? 6 : 10;
    Check c;
    RationalPool pool(opt.seed + 6);
    const Rational half(BigInt(1), BigInt(2));
    const Rational three_halves(BigInt(3), BigInt(2));
    for (std::size_t m : {std::size_t{2}, std::size_t{3}}) {
        std::vector<MixedMomentOracle> oracles;
        oracles.push_back(MixedMomentOracle::deterministic(pool.take(m)));
        if (m == 2) {
            oracles.push_back(MixedMomentOracle::dirichlet({Rational(1), Rational(1)}));
            oracles.push_back(MixedMomentOracle::dirichlet({half, three_halves}));
        } else {
            oracles.push_back(MixedMomentOracle::dirichlet({Rational(1), Rational(2), Rational(3)}));
        }
        oracles.push_back(MixedMomentOracle::iid_product(RandomVariable::exponential(), m));
        oracles.push_back(MixedMomentOracle::iid_product(RandomVariable::std_normal(), m));
        const std::vector<RandomVariable> slots(m, RandomVariable::uniform01());
        for (MixedMomentOracle& oracle : oracles) {
            oracle.precompute(nmax);
            for (unsigned n = 0; n <= nmax && c.ok; ++n) {
                const std::vector<Rational> xs = pool.take(m);
                ConvolutionProblem p{slots, xs, oracle, n};
                const Rational lhs = lhs_multinomial_sum(p);
                const Rational th5 = theorem5_rhs(p);
                const Rational c41 = corollary41_rhs(p);
                c.expect(lhs == th5 && th5 == c41, [&] {
                    return oracle.descriptor() + " m=" + std::to_string(m) + " n=" + std::to_string(n) +
                           " x=" + appell::detail::join_rationals(xs) + ": lhs " + lhs.str() +
                           ", theorem5 " + th5.str() + ", corollary41 " + c41.str();
                });
            }
            if (!c.ok) break;
        }
        if (!c.ok) break;
    }
    return {6, "theorem5 / corollary4.1 oracle sweep", c.ok,
            c.ok ? "m in {2,3}, n <= " + std::to_string(nmax) + ", det/dirichlet/iid oracles" : c.detail,
            clock.micros(), 20000};
}

// 7. Corollary 4.3 closed C and D against raw Dirichlet-oracle evaluation.
inline CriterionResult criterion7(const Options& opt) {
    Stopwatch clock;
    const unsigned nmax = opt.quick ? 6 : 10;
    Check c;
    RationalPool pool(opt.seed + 7);
    const Rational half(BigInt(1), BigInt(2));
    const Rational three_halves(BigInt(3), BigInt(2));
    const std::vector<std::vector<Rational>> alphas = {
        {Rational(1), Rational(1)},
        {half, three_halves},
        {Rational(1), Rational(2), Rational(3)},
    };
    for (const auto& alpha : alphas) {
        const std::size_t m = alpha.size();
        MixedMomentOracle oracle = MixedMomentOracle::dirichlet(alpha);
        oracle.precompute(nmax);
        for (unsigned n = 0; n <= nmax && c.ok; ++n) {
            const Rational x = pool.next();
            const std::vector<Rational> xs(m, x);
            for_each_composition(n, m, [&](const MultiIndex& j) {
                if (!c.ok) return;
                c.expect(corollary43_c(alpha, j) == oracle(j), [&] {
                    return "C" + j.str() + " alpha=" + appell::detail::join_rationals(alpha);
                });
            });
            for (unsigned r = 0; r <= n && c.ok; ++r) {
                for_each_composition(r, m, [&](const MultiIndex& i) {
                    if (!c.ok) return;
                    const Rational closed = corollary43_d(alpha, n, r, i, x);
                    const Rational raw = oracle_weighted_moment(oracle, xs, n - r, i);
                    c.expect(closed == raw, [&] {
                        return "D" + i.str() + " n=" + std::to_string(n) + " r=" + std::to_string(r) +
                               " x=" + x.str() + ": closed " + closed.str() + " vs raw " + raw.str();
                    });
                });
            }
        }
        if (!c.ok) break;
    }
    return {7, "corollary4.3 closed-form coefficients", c.ok,
            c.ok ? "3 alpha vectors, n <= " + std::to_string(nmax) : c.detail, clock.micros(), 2000};
}

// 8. Corollary 4.5, Eq (4.40), and the Chu-Vandermonde lemma.
inline CriterionResult criterion8(const Options& opt) {
    Stopwatch clock;
    const unsigned nmax = opt.quick ? 6 : 10;
    const unsigned lemma_nmax = opt.quick ? 5 : 8;
    const std::size_t mmax = opt.quick ? 3 : 4;
    Check c;
    const std::vector<Rational> xs = {Rational(0), Rational(1), Rational(BigInt(1), BigInt(3))};

    for (std::size_t m = 2; m <= mmax && c.ok; ++m) {
        for (unsigned n = 0; n <= nmax && c.ok; ++n) {
            for (const Rational& x : xs) {
                const VerificationReport rep = eq440_check(m, n, x);
                if (!c.expect(rep.equal, [&] {
                        return "eq440 m=" + std::to_string(m) + " n=" + std::to_string(n) +
                               " x=" + x.str() + ": " + rep.lhs.str() + " vs " + rep.rhs.str();
                    }))
                    break;
                // Corollary 4.5 proper: brute force with the exponential
                // oracle against the collapsed closed form.
                ConvolutionProblem p{std::vector<RandomVariable>(m, RandomVariable::uniform01()),
                                     std::vector<Rational>(m, x),
                                     MixedMomentOracle::iid_product(RandomVariable::exponential(), m), n};
                const Rational lhs = lhs_multinomial_sum(p);
                const Rational rhs = corollary45_rhs(m, n, x);
                if (!c.expect(lhs == rhs, [&] {
                        return "corollary45 m=" + std::to_string(m) + " n=" + std::to_string(n) +
                               " x=" + x.str() + ": lhs " + lhs.str() + " vs rhs " + rhs.str();
                    }))
                    break;
            }
        }
    }

    // Raw l-sum vs its Chu-Vandermonde collapse inside D.
    const Rational xfix(BigInt(1), BigInt(3));
    for (std::size_t m = 2; m <= mmax && c.ok; ++m) {
        MixedMomentOracle oracle = MixedMomentOracle::iid_product(RandomVariable::exponential(), m);
        oracle.precompute(lemma_nmax);
        const std::vector<Rational> xvec(m, xfix);
        for (unsigned n = 0; n <= lemma_nmax && c.ok; ++n)
            for (unsigned r = 0; r <= n && c.ok; ++r)
                for_each_composition(r, m, [&](const MultiIndex& i) {
                    if (!c.ok) return;
                    const Rational raw = oracle_weighted_moment(oracle, xvec, n - r, i);
                    const Rational closed = corollary45_d(m, n, r, i, xfix);
                    c.expect(raw == closed, [&] {
                        return "D-collapse m=" + std::to_string(m) + " n=" + std::to_string(n) +
                               " r=" + std::to_string(r) + " i=" + i.str() + ": raw " + raw.str() +
                               " vs closed " + closed.str();
                    });
                });
    }

    // Lemma 8 at integer parameters...
    for (std::size_t m : {std::size_t{2}, std::size_t{3}}) {
        std::vector<unsigned> digits(m, 0);
        for (;;) {
            std::vector<Rational> t;
            t.reserve(m);
            for (unsigned d : digits) t.emplace_back(d);
            for (unsigned n = 0; n <= lemma_nmax && c.ok; ++n) {
                const VerificationReport rep = chu_vandermonde_check(t, n);
                c.expect(rep.equal, [&] {
                    return "chu t=" + appell::detail::join_rationals(t) + " n=" + std::to_string(n) +
                           ": " + rep.lhs.str() + " vs " + rep.rhs.str();
                });
            }
            std::size_t pos = 0;
            while (pos < m && digits[pos] == 3) digits[pos++] = 0;
            if (pos == m || !c.ok) break;
            ++digits[pos];
        }
        if (!c.ok) break;
    }
    // ...and at the rational vector t = (1/2, 1/2).
    const Rational half(BigInt(1), BigInt(2));
    for (unsigned n = 0; n <= lemma_nmax && c.ok; ++n) {
        const VerificationReport rep = chu_vandermonde_check(std::vector<Rational>{half, half}, n);
        c.expect(rep.equal, [&] {
            return "chu t=1/2,1/2 n=" + std::to_string(n) + ": " + rep.lhs.str() + " vs " + rep.rhs.str();
        });
    }

    return {8, "corollary4.5 / eq4.40 / chu-vandermonde", c.ok,
            c.ok ? "m <= " + std::to_string(mmax) + ", n <= " + std::to_string(nmax) : c.detail,
            clock.micros(), 5000};
}

// 9. Corollary 4.6: both normal-coefficient routes, then the full identity.
inline CriterionResult criterion9(const Options& opt) {
    Stopwatch clock;
    const unsigned nmax = opt.quick ? 6 : 10;
    Check c;
    RationalPool pool(opt.seed + 9);
    for (std::size_t m : {std::size_t{2}, std::size_t{3}}) {
        MixedMomentOracle oracle = MixedMomentOracle::iid_product(RandomVariable::std_normal(), m);
        oracle.precompute(nmax);
        const std::vector<RandomVariable> slots(m, RandomVariable::uniform01());
        for (unsigned n = 0; n <= nmax && c.ok; ++n) {
            for_each_composition(n, m, [&](const MultiIndex& j) {
                if (!c.ok) return;
                const Rational direct = normal_product_coefficient(j);
                const Rational viaH = hermite_product_coefficient(j);
                c.expect(direct == viaH, [&] {
                    return "coefficient " + j.str() + ": moments " + direct.str() +
                           " vs hermite " + viaH.str();
                });
            });
            if (!c.ok) break;
            const Rational x = pool.next();
            ConvolutionProblem p{slots, std::vector<Rational>(m, x), oracle, n};
            const Rational lhs = lhs_multinomial_sum(p);
            const Rational rhs = theorem5_rhs(p);
            c.expect(lhs == rhs, [&] {
                return "identity m=" + std::to_string(m) + " n=" + std::to_string(n) +
                       " x=" + x.str() + ": lhs " + lhs.str() + " vs rhs " + rhs.str();
            });
        }
        if (!c.ok) break;
    }
    return {9, "corollary4.6 hermite coefficients + identity", c.ok,
            c.ok ? "m in {2,3}, n <= " + std::to_string(nmax) : c.detail, clock.micros(), 5000};
}

// 10. Norlund identity with the corrected sign; the printed sign must fail
//     at n = 1 (negative control for the documented misprint).
inline CriterionResult criterion10(const Options& opt) {
    Stopwatch clock;
    const unsigned nmax = opt.quick ? 10 : 20;
    const unsigned pairs = opt.quick ? 2 : 5;
    Check c;
    RationalPool pool(opt.seed + 10);
    for (unsigned t = 0; t < pairs && c.ok; ++t) {
        const Rational x = pool.next();
        const Rational y = pool.next();
        for (unsigned n = 1; n <= nmax && c.ok; ++n) {
            const VerificationReport rep = norlund_check(n, x, y);
            c.expect(rep.equal, [&] {
                return "n=" + std::to_string(n) + " x=" + x.str() + " y=" + y.str() + ": lhs " +
                       rep.lhs.str() + " vs corrected rhs " + rep.rhs.str();
            });
        }
    }
    if (c.ok) {
        // x + y != 1 so the printed form cannot accidentally agree.
        const Rational x(1), y(1);
        const AppellSeq bern = bernoulli_sequence(1);
        const Rational lhs = appell_eval(bern, 0, x) * appell_eval(bern, 1, y) +
                             appell_eval(bern, 1, x) * appell_eval(bern, 0, y);
        const Rational printed = -(x + y - Rational(1)) * appell_eval(bern, 0, x + y);
        c.expect(lhs != printed, [&] {
            return "negative control: printed form unexpectedly matches at n=1";
        });
    }
    return {10, "norlund corrected-sign identity", c.ok,
            c.ok ? "n <= " + std::to_string(nmax) + ", printed sign refuted at n=1" : c.detail,
            clock.micros(), 1000};
}

// 11. Group and scale-transform laws.
inline CriterionResult criterion11(const Options& opt) {
    Stopwatch clock;
    const unsigned N = opt.quick ? 8 : 12;
    Check c;
    RationalPool pool(opt.seed + 11);

    const auto random_group_seq = [&] {
        Seq u(N, Rational(0));
        u[0] = pool.next_nonzero();
        for (std::size_t k = 1; k <= N; ++k) u[k] = pool.next();
        return u;
    };

    for (int trial = 0; trial < 3 && c.ok; ++trial) {
        const Seq u = random_group_seq(), v = random_group_seq(), w = random_group_seq();
        c.expect(binomial_convolve(binomial_convolve(u, v), w) ==
                     binomial_convolve(u, binomial_convolve(v, w)),
                 [&] { return "associativity failed on random triple"; });
        c.expect(binomial_convolve(u, v) == binomial_convolve(v, u),
                 [&] { return "commutativity failed on random pair"; });
        c.expect(binomial_convolve(u, conv_inverse(u)) == Seq::identity(N),
                 [&] { return "inverse failed on random sequence"; });
    }

    for (const RandomVariable& rv : catalog_representatives()) {
        if (!c.ok) break;
        const Seq mu = moments_of(rv, N).values;
        c.expect(binomial_convolve(mu, conv_inverse(mu)) == Seq::identity(N),
                 [&] { return "inverse failed for " + rv.name(); });
    }

    const AppellSeq A = bernoulli_sequence(N);
    const AppellSeq C = euler_sequence(N);
    const std::vector<Rational> ws = {pool.next_nonzero(), pool.next_nonzero(), Rational(0), Rational(1)};
    for (const Rational& w : ws) {
        if (!c.ok) break;
        // T_w is a homomorphism of the convolution group.
        const Seq left = scale_transform(appell_convolve(A, C), w).base;
        const Seq right = binomial_convolve(scale_transform(A, w).base, scale_transform(C, w).base);
        c.expect(left == right, [&] { return "T_w homomorphism failed at w=" + w.str(); });
        if (!w.is_zero()) {
            c.expect(scale_transform(scale_transform(A, w), w.reciprocal()).base == A.base,
                     [&] { return "T_w o T_{1/w} != id at w=" + w.str(); });
        }
        const Rational v = pool.next();
        c.expect(scale_transform(scale_transform(A, v), w).base == scale_transform(A, w * v).base,
                 [&] { return "T_w o T_v != T_{wv} at w=" + w.str() + " v=" + v.str(); });
    }
    c.expect(scale_transform(A, Rational(1)).base == A.base, [&] { return "T_1 != id"; });

    // Appell derivative property for the constructed families.
    const unsigned dmax = std::min<unsigned>(N, 10);
    for (const AppellSeq& s : {A, C, cauchy_sequence(N),
                               appell_from_rv(RandomVariable::gamma(Rational(BigInt(3), BigInt(2))), N)}) {
        if (!c.ok) break;
        for (unsigned n = 1; n <= dmax && c.ok; ++n) {
            const Poly d = appell_poly(s, n).derivative();
            const Poly expected = appell_poly(s, n - 1).scaled(Rational(n));
            c.expect(d == expected, [&] {
                return s.provenance + " n=" + std::to_string(n) + ": derivative property failed";
            });
        }
    }

    // Eq (2.12): evaluating the convolution at x splits across x = x1 + x2.
    for (int trial = 0; trial < 3 && c.ok; ++trial) {
        const Rational x1 = pool.next(), x2 = pool.next();
        const AppellSeq AC = appell_convolve(A, C);
        for (unsigned n = 0; n <= N && c.ok; ++n) {
            Rational split(0);
            for (unsigned k = 0; k <= n; ++k)
                split += binomial(n, k) * appell_eval(A, k, x1) * appell_eval(C, n - k, x2);
            const Rational joint = appell_eval(AC, n, x1 + x2);
            c.expect(split == joint, [&] {
                return "eq2.12 n=" + std::to_string(n) + " x1=" + x1.str() + " x2=" + x2.str() +
                       ": split " + split.str() + " vs joint " + joint.str();
            });
        }
    }

    // Theorem 3 witness: scaled convolutions have associated variable w.Y.
    const std::vector<std::pair<RandomVariable, RandomVariable>> pairs = {
        {RandomVariable::uniform01(), RandomVariable::bernoulli(Rational(BigInt(1), BigInt(2)))},
        {RandomVariable::uniform01(), RandomVariable::cauchy_signed()},
    };
    for (const auto& [rv1, rv2] : pairs) {
        if (!c.ok) break;
        const Rational w1 = pool.next(), w2 = pool.next();
        const Seq left = binomial_convolve(scale_transform(appell_from_rv(rv1, N), w1).base,
                                           scale_transform(appell_from_rv(rv2, N), w2).base);
        const std::vector<Rational> wvec = {w1, w2};
        const std::vector<RandomVariable> rvs = {rv1, rv2};
        const Seq right = conv_inverse(linear_combo_moments(wvec, rvs, N).values);
        c.expect(left == right, [&] {
            return "theorem3 witness failed for " + rv1.name() + "," + rv2.name() +
                   " w=" + w1.str() + "," + w2.str();
        });
    }

    return {11, "group and scale-transform laws", c.ok,
            c.ok ? "N = " + std::to_string(N) : c.detail, clock.micros(), 5000};
}

}  // namespace detail

inline std::vector<CriterionResult> run_all(const Options& opt = {}) {
    return {
        detail::criterion1(opt),  detail::criterion2(opt), detail::criterion3(opt),
        detail::criterion4(opt),  detail::criterion5(opt), detail::criterion6(opt),
        detail::criterion7(opt),  detail::criterion8(opt), detail::criterion9(opt),
        detail::criterion10(opt), detail::criterion11(opt),
    };
}

}  // namespace appell::selftest
