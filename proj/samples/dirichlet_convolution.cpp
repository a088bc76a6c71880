// Verifies a Dirichlet-weighted Bernoulli convolution identity for a few
// degrees and prints the exact values of both sides.

#include <iostream>
#include <vector>

#include "appell/identity.hpp"
#include "appell/oracle.hpp"

int main() {
    using namespace appell;

    const std::vector<Rational> alpha = {Rational(1), Rational(2), Rational(3)};
    const Rational x(BigInt(1), BigInt(2));

    MixedMomentOracle oracle = MixedMomentOracle::dirichlet(alpha);
    oracle.precompute(8);

    bool all_equal = true;
    for (unsigned n = 0; n <= 8; ++n) {
        ConvolutionProblem p{std::vector<RandomVariable>(3, RandomVariable::uniform01()),
                             std::vector<Rational>(3, x), oracle, n};
        const Rational lhs = lhs_multinomial_sum(p);
        const Rational rhs = corollary43_rhs(alpha, n, x);
        all_equal = all_equal && lhs == rhs;
        std::cout << "n=" << n << "  lhs=" << lhs << "  rhs=" << rhs
                  << (lhs == rhs ? "" : "  MISMATCH") << '\n';
    }
    return all_equal ? 0 : 1;
}
