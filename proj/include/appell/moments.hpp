#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "appell/combinatorics.hpp"
#include "appell/rational.hpp"
#include "appell/seq.hpp"

namespace appell {

/// Catalog of associated random variables. The law of each kind enters the
/// library only through its exact moment sequence E Y^n:
///
///   constant c     : c^n
///   uniform01      : 1/(n+1)
///   bernoulli p    : p for n >= 1        (p = lambda/(1+lambda) ranges the
///                                         Apostol-Euler family; p = 1/2 the
///                                         Euler polynomials)
///   cauchy         : (-1)^n n!/(n+1)     (formal sequence with
///                                         E e^{zY} = log(1+z)/z)
///   exponential    : n!
///   gamma a        : <a>_n
///   normal         : (2k-1)!! at n = 2k, 0 at odd n
class RandomVariable {
public:
    enum class Kind { Constant, Uniform01, Bernoulli, CauchySigned, Exponential, Gamma, StdNormal };

    static RandomVariable constant(Rational c) { return {Kind::Constant, std::move(c)}; }
    static RandomVariable uniform01() { return {Kind::Uniform01, Rational(0)}; }
    static RandomVariable bernoulli(Rational p) {
        if (p < Rational(0) || p > Rational(1))
            throw std::invalid_argument("bernoulli: p must lie in [0,1], got " + p.str());
        return {Kind::Bernoulli, std::move(p)};
    }
    static RandomVariable cauchy_signed() { return {Kind::CauchySigned, Rational(0)}; }
    static RandomVariable exponential() { return {Kind::Exponential, Rational(0)}; }
    static RandomVariable gamma(Rational alpha) {
        if (!(alpha > Rational(0)))
            throw std::invalid_argument("gamma: alpha must be positive, got " + alpha.str());
        return {Kind::Gamma, std::move(alpha)};
    }
    static RandomVariable std_normal() { return {Kind::StdNormal, Rational(0)}; }

    Kind kind() const { return kind_; }
    const Rational& param() const { return param_; }

    friend bool operator==(const RandomVariable&, const RandomVariable&) = default;

    /// Canonical CLI name: "const:c", "uniform01", "bernoulli:p", "cauchy",
    /// "exponential", "gamma:a", "normal".
    std::string name() const {
        switch (kind_) {
            case Kind::Constant:     return "const:" + param_.str();
            case Kind::Uniform01:    return "uniform01";
            case Kind::Bernoulli:    return "bernoulli:" + param_.str();
            case Kind::CauchySigned: return "cauchy";
            case Kind::Exponential:  return "exponential";
            case Kind::Gamma:        return "gamma:" + param_.str();
            case Kind::StdNormal:    return "normal";
        }
        throw std::logic_error("RandomVariable: bad kind");
    }

    static RandomVariable parse(std::string_view text) {
        const auto split = text.find(':');
        const std::string_view head = text.substr(0, split);
        if (head == "uniform01" && split == std::string_view::npos) return uniform01();
        if (head == "cauchy" && split == std::string_view::npos) return cauchy_signed();
        if (head == "exponential" && split == std::string_view::npos) return exponential();
        if (head == "normal" && split == std::string_view::npos) return std_normal();
        if (split != std::string_view::npos) {
            const Rational arg = Rational::parse(text.substr(split + 1));
            if (head == "const") return constant(arg);
            if (head == "bernoulli") return bernoulli(arg);
            if (head == "gamma") return gamma(arg);
        }
        throw std::invalid_argument("unknown random variable '" + std::string(text) + "'");
    }

private:
    RandomVariable(Kind kind, Rational param) : kind_(kind), param_(std::move(param)) {}

    Kind kind_;
    Rational param_;
};

/// E Y^n for a catalog variable.
inline Rational moment(const RandomVariable& rv, unsigned n) {
    switch (rv.kind()) {
        case RandomVariable::Kind::Constant:
            return rv.param().pow(n);
        case RandomVariable::Kind::Uniform01:
            return Rational(BigInt(1), BigInt(n + 1));
        case RandomVariable::Kind::Bernoulli:
            return n == 0 ? Rational(1) : rv.param();
        case RandomVariable::Kind::CauchySigned: {
            Rational v(factorial_int(n), BigInt(n + 1));
            return (n % 2 == 0) ? v : -v;
        }
        case RandomVariable::Kind::Exponential:
            return factorial(n);
        case RandomVariable::Kind::Gamma:
            return rising_factorial(rv.param(), n);
        case RandomVariable::Kind::StdNormal:
            return (n % 2 == 0) ? double_factorial_odd(n / 2) : Rational(0);
    }
    throw std::logic_error("moment: bad kind");
}

/// The table (E Y^n)_{n<=N} together with a provenance label. mu_0 = 1 always.
struct MomentSequence {
    Seq values;
    std::string source;

    std::size_t order() const { return values.order(); }
    const Rational& operator[](std::size_t n) const { return values[n]; }
};

inline MomentSequence moments_of(const RandomVariable& rv, std::size_t order) {
    std::vector<Rational> mu(order + 1);
    for (std::size_t n = 0; n <= order; ++n) mu[n] = moment(rv, static_cast<unsigned>(n));
    return {Seq(std::move(mu)), rv.name()};
}

/// Moments of S_k = Y_1 + ... + Y_k for independent copies of the base
/// variable: the k-fold binomial convolution of the base sequence. k = 0
/// gives the identity sequence (E S_0^n = 0^n).
inline MomentSequence iid_sum_moments(const MomentSequence& base, unsigned k) {
    return {convolve_power(base.values, k), "iid-sum(" + base.source + ", k=" + std::to_string(k) + ")"};
}

inline MomentSequence iid_sum_moments(const RandomVariable& rv, unsigned k, std::size_t order) {
    return iid_sum_moments(moments_of(rv, order), k);
}

/// Moments of the linear combination w_1 Y^(1) + ... + w_m Y^(m) of
/// independent variables, by the multinomial expansion
///   E (w.Y)^n = sum_{|i|=n} multinomial(n,i) prod_v w_v^{i_v} E (Y^(v))^{i_v}.
inline MomentSequence linear_combo_moments(std::span<const Rational> w,
                                           std::span<const RandomVariable> rvs,
                                           std::size_t order) {
    if (w.empty() || w.size() != rvs.size())
        throw std::invalid_argument("linear_combo_moments: weight/variable lists must be nonempty and equal-length");
    const std::size_t m = w.size();
    std::vector<MomentSequence> mu;
    mu.reserve(m);
    for (const RandomVariable& rv : rvs) mu.push_back(moments_of(rv, order));

    std::vector<Rational> out(order + 1, Rational(0));
    for (std::size_t n = 0; n <= order; ++n) {
        Rational acc(0);
        for_each_composition(static_cast<unsigned>(n), m, [&](const MultiIndex& idx) {
            Rational term = multinomial(static_cast<unsigned>(n), idx);
            for (std::size_t v = 0; v < m; ++v)
                term *= w[v].pow(idx[v]) * mu[v][idx[v]];
            acc += term;
        });
        out[n] = acc;
    }

    std::string label = "combo(";
    for (std::size_t v = 0; v < m; ++v) {
        if (v) label += '+';
        label += w[v].str() + "*" + rvs[v].name();
    }
    label += ')';
    return {Seq(std::move(out)), std::move(label)};
}

/// Dense table of E (S_k)^j for k <= kmax, j <= base.order(). Every identity
/// evaluation that sums over k reads from one of these.
class IidMomentTable {
public:
    IidMomentTable(const MomentSequence& base, unsigned kmax) {
        rows_.reserve(kmax + 1);
        Seq acc = Seq::identity(base.order());
        rows_.push_back(acc);
        for (unsigned k = 1; k <= kmax; ++k) {
            acc = binomial_convolve(acc, base.values);
            rows_.push_back(acc);
        }
    }

    unsigned kmax() const { return static_cast<unsigned>(rows_.size() - 1); }
    std::size_t order() const { return rows_[0].order(); }

    const Rational& operator()(unsigned k, std::size_t j) const { return rows_.at(k)[j]; }

    /// E (x + S_k)^n, expanded binomially over the table.
    Rational shifted_moment(unsigned k, unsigned n, const Rational& x) const {
        Rational acc(0);
        for (unsigned j = 0; j <= n; ++j)
            acc += binomial(n, j) * x.pow(n - j) * rows_[k][j];
        return acc;
    }

private:
    std::vector<Seq> rows_;
};

}  // namespace appell
