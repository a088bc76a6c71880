#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "appell/combinatorics.hpp"
#include "appell/moments.hpp"
#include "appell/rational.hpp"

namespace appell {

/// Mixed moment of the Dirichlet weight vector with parameters alpha:
///   E (W_1^{j_1} ... W_m^{j_m}) = prod <alpha_v>_{j_v} / <sum alpha>_{|j|}.
inline Rational dirichlet_mixed_moment(std::span<const Rational> alpha, const MultiIndex& idx) {
    if (alpha.size() != idx.size())
        throw std::invalid_argument("dirichlet_mixed_moment: alpha/index lengths differ");
    Rational num(1);
    Rational alpha_sum(0);
    for (std::size_t v = 0; v < alpha.size(); ++v) {
        num *= rising_factorial(alpha[v], idx[v]);
        alpha_sum += alpha[v];
    }
    return num / rising_factorial(alpha_sum, idx.weight());
}

/// The map (i_1,...,i_m) -> E (W_1^{i_1} ... W_m^{i_m}) for a weight random
/// vector W. Three descriptors:
///   deterministic(w) : prod w_v^{i_v}
///   dirichlet(alpha) : ratio of rising factorials (components sum to one)
///   iid_product(rv)  : prod E Y^{i_v} for independent copies of one variable
///
/// precompute(max_weight) fills a lookup table for every index of weight up
/// to the bound; after that, evaluation is a read-only lookup and the oracle
/// may be shared across threads.
class MixedMomentOracle {
public:
    static MixedMomentOracle deterministic(std::vector<Rational> w) {
        if (w.empty()) throw std::invalid_argument("oracle: empty weight vector");
        MixedMomentOracle o(Kind::Deterministic, w.size());
        o.weights_ = std::move(w);
        o.descriptor_ = "det:" + join(o.weights_);
        return o;
    }

    static MixedMomentOracle dirichlet(std::vector<Rational> alpha) {
        if (alpha.empty()) throw std::invalid_argument("oracle: empty alpha vector");
        for (const Rational& a : alpha)
            if (!(a > Rational(0)))
                throw std::invalid_argument("oracle: dirichlet alpha must be positive, got " + a.str());
        MixedMomentOracle o(Kind::Dirichlet, alpha.size());
        o.weights_ = std::move(alpha);
        o.descriptor_ = "dirichlet:" + join(o.weights_);
        return o;
    }

    static MixedMomentOracle iid_product(const RandomVariable& rv, std::size_t m) {
        if (m == 0) throw std::invalid_argument("oracle: arity must be positive");
        MixedMomentOracle o(Kind::IidProduct, m);
        o.rv_ = rv;
        o.descriptor_ = "iid:" + rv.name();
        return o;
    }

    std::size_t arity() const { return m_; }
    const std::string& descriptor() const { return descriptor_; }

    Rational operator()(const MultiIndex& idx) const {
        if (idx.size() != m_)
            throw std::invalid_argument("oracle: index arity mismatch");
        if (const auto it = memo_.find(idx.parts()); it != memo_.end())
            return it->second;
        return compute(idx);
    }

    void precompute(unsigned max_weight) {
        for (unsigned w = 0; w <= max_weight; ++w)
            for_each_composition(w, m_, [&](const MultiIndex& idx) {
                memo_.emplace(idx.parts(), compute(idx));
            });
    }

private:
    enum class Kind { Deterministic, Dirichlet, IidProduct };

    MixedMomentOracle(Kind kind, std::size_t m) : kind_(kind), m_(m) {}

    Rational compute(const MultiIndex& idx) const {
        switch (kind_) {
            case Kind::Deterministic: {
                Rational acc(1);
                for (std::size_t v = 0; v < m_; ++v) acc *= weights_[v].pow(idx[v]);
                return acc;
            }
            case Kind::Dirichlet:
                return dirichlet_mixed_moment(weights_, idx);
            case Kind::IidProduct: {
                Rational acc(1);
                for (std::size_t v = 0; v < m_; ++v) acc *= moment(*rv_, idx[v]);
                return acc;
            }
        }
        throw std::logic_error("oracle: bad kind");
    }

    static std::string join(const std::vector<Rational>& vs) {
        std::string s;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (i) s += ',';
            s += vs[i].str();
        }
        return s;
    }

    Kind kind_;
    std::size_t m_;
    std::vector<Rational> weights_;          // weights or alpha, by kind
    std::optional<RandomVariable> rv_;
    std::string descriptor_;
    std::map<std::vector<unsigned>, Rational> memo_;
};

}  // namespace appell
