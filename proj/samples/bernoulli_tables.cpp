// Prints the Bernoulli base numbers, a few polynomials, and checks the
// defining inverse relation against the uniform moment sequence.

#include <iostream>

#include "appell/appell_algebra.hpp"
#include "appell/moments.hpp"

int main() {
    using namespace appell;

    const std::size_t N = 10;
    const AppellSeq bern = bernoulli_sequence(N);

    std::cout << "Bernoulli numbers B_n = B_n(0):\n";
    bern.base.write_lines(std::cout);

    std::cout << "\nB_n(x) coefficients (ascending powers):\n";
    for (unsigned n = 0; n <= 4; ++n)
        std::cout << "B_" << n << ": " << appell_poly(bern, n).str() << '\n';

    const Seq mu = moments_of(RandomVariable::uniform01(), N).values;
    const bool inverse_ok = binomial_convolve(bern.base, mu) == Seq::identity(N);
    std::cout << "\nB(0) x (uniform moments) == e: " << (inverse_ok ? "yes" : "NO") << '\n';
    return inverse_ok ? 0 : 1;
}
