#pragma once

#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

#include "appell/combinatorics.hpp"
#include "appell/rational.hpp"

namespace appell {

/// A real sequence u_0..u_N truncated at order N. Entries above N are
/// undefined rather than implicitly zero: every group operation below is
/// exact for indices <= N and refuses mismatched truncations.
class Seq {
public:
    Seq() : values_(1, Rational(0)) {}
    explicit Seq(std::vector<Rational> values) : values_(std::move(values)) {
        if (values_.empty())
            throw std::invalid_argument("Seq: needs at least the order-0 entry");
    }
    Seq(std::size_t order, const Rational& fill) : values_(order + 1, fill) {}

    /// Identity element e = (1,0,0,...) of the convolution group.
    static Seq identity(std::size_t order) {
        Seq e(order, Rational(0));
        e.values_[0] = Rational(1);
        return e;
    }

    std::size_t order() const { return values_.size() - 1; }

    const Rational& operator[](std::size_t n) const {
        if (n >= values_.size())
            throw std::out_of_range("Seq: index exceeds truncation order");
        return values_[n];
    }
    Rational& operator[](std::size_t n) {
        if (n >= values_.size())
            throw std::out_of_range("Seq: index exceeds truncation order");
        return values_[n];
    }

    const std::vector<Rational>& values() const { return values_; }

    friend bool operator==(const Seq&, const Seq&) = default;

    /// Line-oriented text form: "index value" per line, canonical rationals.
    void write_lines(std::ostream& os) const {
        for (std::size_t n = 0; n < values_.size(); ++n)
            os << n << ' ' << values_[n].str() << '\n';
    }

private:
    std::vector<Rational> values_;
};

/// Binomial convolution (u x v)_n = sum_k C(n,k) u_k v_{n-k}. Generating
/// functions multiply. Both operands must share one truncation order.
inline Seq binomial_convolve(const Seq& u, const Seq& v) {
    if (u.order() != v.order())
        throw std::invalid_argument("binomial_convolve: truncation orders differ");
    const std::size_t N = u.order();
    Seq out(N, Rational(0));
    for (std::size_t n = 0; n <= N; ++n) {
        Rational acc(0);
        for (std::size_t k = 0; k <= n; ++k)
            acc += binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * u[k] * v[n - k];
        out[n] = acc;
    }
    return out;
}

/// Left-fold of binomial_convolve over a nonempty list of equal-order
/// sequences. Coincides with the direct multinomial sum.
inline Seq multinomial_convolve(std::span<const Seq> us) {
    if (us.empty())
        throw std::invalid_argument("multinomial_convolve: empty list");
    Seq acc = us[0];
    for (std::size_t j = 1; j < us.size(); ++j) acc = binomial_convolve(acc, us[j]);
    return acc;
}

/// Direct evaluation of the m-fold convolution as a multinomial sum over
/// compositions. Kept as the independent route the fold is tested against.
inline Seq multinomial_convolve_direct(std::span<const Seq> us) {
    if (us.empty())
        throw std::invalid_argument("multinomial_convolve_direct: empty list");
    const std::size_t N = us[0].order();
    for (const Seq& u : us)
        if (u.order() != N)
            throw std::invalid_argument("multinomial_convolve_direct: truncation orders differ");
    Seq out(N, Rational(0));
    for (std::size_t n = 0; n <= N; ++n) {
        Rational acc(0);
        for_each_composition(static_cast<unsigned>(n), us.size(), [&](const MultiIndex& idx) {
            Rational term = multinomial(static_cast<unsigned>(n), idx);
            for (std::size_t v = 0; v < us.size(); ++v) term *= us[v][idx[v]];
            acc += term;
        });
        out[n] = acc;
    }
    return out;
}

/// Convolution inverse: the unique v with u x v = e. Requires u_0 != 0;
/// v_0 = 1/u_0 and v_n = -(1/u_0) sum_{k=1}^n C(n,k) u_k v_{n-k}.
inline Seq conv_inverse(const Seq& u) {
    if (u[0].is_zero())
        throw std::domain_error("conv_inverse: u_0 = 0, sequence is not invertible");
    const std::size_t N = u.order();
    Seq v(N, Rational(0));
    const Rational inv0 = u[0].reciprocal();
    v[0] = inv0;
    for (std::size_t n = 1; n <= N; ++n) {
        Rational acc(0);
        for (std::size_t k = 1; k <= n; ++k)
            acc += binomial(static_cast<unsigned>(n), static_cast<unsigned>(k)) * u[k] * v[n - k];
        v[n] = -inv0 * acc;
    }
    return v;
}

/// k-fold convolution power, with u^0 = e.
inline Seq convolve_power(const Seq& u, unsigned k) {
    Seq acc = Seq::identity(u.order());
    for (unsigned i = 0; i < k; ++i) acc = binomial_convolve(acc, u);
    return acc;
}

}  // namespace appell
