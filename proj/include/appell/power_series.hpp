#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "appell/combinatorics.hpp"
#include "appell/rational.hpp"

namespace appell {

/// Formal power series with exact rational coefficients, hard-truncated at a
/// fixed order. Coefficients are ordinary (c_n multiplies z^n); exponential
/// generating functions are represented by storing u_n/n!.
class TruncatedSeries {
public:
    TruncatedSeries(std::size_t order, const Rational& fill = Rational(0))
        : coeffs_(order + 1, fill) {}
    explicit TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw std::invalid_argument("TruncatedSeries: needs the order-0 coefficient");
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
    Rational& operator[](std::size_t n) { return coeffs_.at(n); }

    TruncatedSeries& operator-=(const Rational& c) { coeffs_[0] -= c; return *this; }

    TruncatedSeries& operator*=(const Rational& c) {
        for (Rational& a : coeffs_) a *= c;
        return *this;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        if (a.order() != b.order())
            throw std::invalid_argument("TruncatedSeries: truncation orders differ");
        TruncatedSeries out(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j <= a.order(); ++j)
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return out;
    }

    TruncatedSeries pow(unsigned e) const {
        TruncatedSeries acc(order());
        acc.coeffs_[0] = Rational(1);
        for (unsigned i = 0; i < e; ++i) acc = acc * *this;
        return acc;
    }

    /// e^{xz} as an ordinary-coefficient series: x^n/n!.
    static TruncatedSeries exp_xz(const Rational& x, std::size_t order) {
        TruncatedSeries s(order);
        for (std::size_t n = 0; n <= order; ++n)
            s.coeffs_[n] = x.pow(static_cast<unsigned>(n)) / factorial(static_cast<unsigned>(n));
        return s;
    }

private:
    std::vector<Rational> coeffs_;
};

}  // namespace appell
