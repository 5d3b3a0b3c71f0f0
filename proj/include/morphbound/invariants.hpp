#ifndef MORPHBOUND_INVARIANTS_HPP
#define MORPHBOUND_INVARIANTS_HPP

#include <string_view>

#include "morphbound/rational.hpp"

namespace morphbound {

// Numerical data of a smooth projective threefold with Neron-Severi group Z:
// the triple self-intersection H^3 of the ample generator, the pairing
// c2(X).H, and the index k defined by K_X == k H.
struct ThreefoldInvariants {
    long long h3 = 1;
    long long c2h = 0;
    long long index = 0;

    friend bool operator==(const ThreefoldInvariants&, const ThreefoldInvariants&) = default;
};

// Degree of the pullback of the hyperplane class under a candidate morphism.
struct GeneratorDegree {
    explicit GeneratorDegree(long long value);
    long long d;
};

// h3 must be positive; anything else is rejected up front.
void validate(const ThreefoldInvariants& inv);

// Smooth degree-m hypersurface in P^4: H^3 = m, c2.H = m^3 - 5m^2 + 10m,
// index m - 5.
ThreefoldInvariants hypersurface_invariants(long long m);

// "P3" -> (1, 6, -4), "Q" -> (2, 8, -3).
ThreefoldInvariants preset(std::string_view name);

} // namespace morphbound

#endif
