#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "appell/rational.hpp"

namespace appell {

/// Dense univariate polynomial over Rational, coefficients in ascending
/// powers. Trailing zeros are trimmed so degree is canonical; the zero
/// polynomial keeps a single zero coefficient.
class Poly {
public:
    Poly() : coeffs_(1, Rational(0)) {}
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.assign(1, Rational(0));
        trim();
    }

    std::size_t degree() const { return coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }

    const Rational& coeff(std::size_t k) const {
        static const Rational zero(0);
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t k = coeffs_.size(); k-- > 0;)
            acc = acc * x + coeffs_[k];
        return acc;
    }

    Poly derivative() const {
        if (coeffs_.size() == 1) return Poly();
        std::vector<Rational> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            d[k - 1] = Rational(static_cast<long long>(k)) * coeffs_[k];
        return Poly(std::move(d));
    }

    Poly scaled(const Rational& c) const {
        std::vector<Rational> s(coeffs_);
        for (Rational& a : s) a *= c;
        return Poly(std::move(s));
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    std::string str() const {
        std::string s;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (k) s += ' ';
            s += coeffs_[k].str();
        }
        return s;
    }

private:
    void trim() {
        while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

}  // namespace appell
