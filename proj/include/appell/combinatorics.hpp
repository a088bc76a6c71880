#pragma once

#include <cstddef>
#include <deque>
#include <iterator>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "appell/rational.hpp"

namespace appell {

/// An ordered tuple (j_1,...,j_m) of nonnegative integers, m >= 1.
/// The weight (sum of parts) is cached at construction.
class MultiIndex {
public:
    explicit MultiIndex(std::vector<unsigned> parts)
        : parts_(std::move(parts)),
          weight_(std::accumulate(parts_.begin(), parts_.end(), 0u)) {
        if (parts_.empty())
            throw std::invalid_argument("MultiIndex: needs at least one part");
    }

    std::size_t size() const { return parts_.size(); }
    unsigned weight() const { return weight_; }
    unsigned operator[](std::size_t i) const { return parts_[i]; }
    const std::vector<unsigned>& parts() const { return parts_; }

    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<unsigned> parts_;
    unsigned weight_;
};

namespace detail {

// Shared factorial memo. Extended on demand; reads take a shared lock so the
// table behaves as if absent under concurrency.
inline BigInt factorial_memo(unsigned n) {
    static std::deque<BigInt> table{BigInt(1)};  // 0! = 1
    static std::shared_mutex mutex;
    {
        std::shared_lock lock(mutex);
        if (n < table.size()) return table[n];
    }
    std::unique_lock lock(mutex);
    while (table.size() <= n)
        table.push_back(table.back() * BigInt(table.size()));
    return table[n];
}

}  // namespace detail

inline BigInt factorial_int(unsigned n) { return detail::factorial_memo(n); }

inline Rational factorial(unsigned n) { return Rational(factorial_int(n)); }

/// Pre-extends the factorial memo so a sweep of bounded order never grows it
/// mid-flight.
inline void ensure_factorials(unsigned max_n) { detail::factorial_memo(max_n); }

/// C(n,k), with C(n,k) = 0 whenever k > n.
inline BigInt binomial_int(unsigned n, unsigned k) {
    if (k > n) return BigInt(0);
    return detail::factorial_memo(n) / (detail::factorial_memo(k) * detail::factorial_memo(n - k));
}

inline Rational binomial(unsigned n, unsigned k) { return Rational(binomial_int(n, k)); }

/// n! / (j_1! ... j_m!). The parts must sum to n.
inline Rational multinomial(unsigned n, const MultiIndex& idx) {
    if (idx.weight() != n)
        throw std::invalid_argument("multinomial: index weight " + std::to_string(idx.weight()) +
                                    " does not match n = " + std::to_string(n));
    BigInt denom(1);
    for (unsigned j : idx) denom *= detail::factorial_memo(j);
    return Rational(detail::factorial_memo(n) / denom);
}

/// Rising factorial <x>_n = x(x+1)...(x+n-1), with <x>_0 = 1.
inline Rational rising_factorial(const Rational& x, unsigned n) {
    Rational acc(1);
    for (unsigned t = 0; t < n; ++t) acc *= x + Rational(t);
    return acc;
}

/// Falling factorial x(x-1)...(x-n+1), the empty product for n = 0.
inline Rational falling_factorial(const Rational& x, unsigned n) {
    Rational acc(1);
    for (unsigned t = 0; t < n; ++t) acc *= x - Rational(t);
    return acc;
}

/// Binomial coefficient C(u, k) with rational upper argument, defined through
/// the falling factorial u(u-1)...(u-k+1)/k!. Agrees with binomial() at
/// nonnegative integer u.
inline Rational generalized_binomial(const Rational& upper, unsigned k) {
    return falling_factorial(upper, k) / factorial(k);
}

/// (2k-1)!! with the empty-product convention (-1)!! = 1.
inline Rational double_factorial_odd(unsigned k) {
    BigInt acc(1);
    for (unsigned t = 1; t <= k; ++t) acc *= BigInt(2 * t - 1);
    return Rational(acc);
}

/// All multi-indices of length m and weight n, enumerated exactly once in
/// lexicographic-descending order on the parts: (n,0,...,0) first,
/// (0,...,0,n) last. The count is C(n+m-1, m-1).
class Compositions {
public:
    Compositions(unsigned n, std::size_t m) : n_(n), m_(m) {
        if (m == 0)
            throw std::invalid_argument("Compositions: m must be positive");
    }

    class iterator {
    public:
        using value_type = MultiIndex;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        iterator(unsigned n, std::size_t m) : parts_(m, 0u), done_(false) { parts_[0] = n; }

        MultiIndex operator*() const { return MultiIndex(parts_); }

        iterator& operator++() {
            // Decrement the rightmost movable part and push its tail weight
            // one slot to the right.
            std::size_t k = parts_.size() - 1;
            unsigned tail = 0;
            while (true) {
                if (k == 0 && parts_[0] == 0) { done_ = true; return *this; }
                if (k < parts_.size() - 1 && parts_[k] > 0) break;
                tail += parts_[k];
                if (k == 0) { done_ = true; return *this; }
                --k;
            }
            parts_[k] -= 1;
            parts_[k + 1] = tail + 1;
            for (std::size_t i = k + 2; i < parts_.size(); ++i) parts_[i] = 0;
            return *this;
        }

        void operator++(int) { ++*this; }

        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

    private:
        std::vector<unsigned> parts_;
        bool done_ = true;
    };

    iterator begin() const { return iterator(n_, m_); }
    std::default_sentinel_t end() const { return {}; }

    static BigInt count(unsigned n, std::size_t m) {
        return binomial_int(n + static_cast<unsigned>(m) - 1, static_cast<unsigned>(m) - 1);
    }

    std::vector<MultiIndex> to_vector() const {
        std::vector<MultiIndex> out;
        for (auto it = begin(); it != end(); ++it) out.push_back(*it);
        return out;
    }

private:
    unsigned n_;
    std::size_t m_;
};

/// Calls fn once per composition, in the Compositions enumeration order.
template <typename Fn>
void for_each_composition(unsigned n, std::size_t m, Fn&& fn) {
    Compositions comps(n, m);
    for (auto it = comps.begin(); it != comps.end(); ++it) fn(*it);
}

}  // namespace appell
