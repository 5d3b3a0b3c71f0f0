#ifndef MORPHBOUND_ADJUNCTION_HPP
#define MORPHBOUND_ADJUNCTION_HPP

#include "morphbound/invariants.hpp"
#include "morphbound/unipoly.hpp"

namespace morphbound {

// Chern data of the surface S in X pulled back from a general hyperplane
// section of the quadric under a candidate morphism of generator degree d.
// S is nodal; k_s_squared and c2_surface are the invariants of its smooth
// model, and double_points = H^3 d^3 / 2 is the number of nodes. The latter
// is kept rational on purpose: a non-integral value is itself a proof that
// no morphism exists.
struct SurfaceInvariants {
    BigInt k_s_squared;
    BigInt c2_surface;
    Rational double_points;
};

// (k + d)^2 * d * H^3, with k the index of X.
BigInt canonical_square(const ThreefoldInvariants& inv, const GeneratorDegree& deg);

// d * c2.H + d^2 (d + k) * H^3.
BigInt second_chern_surface(const ThreefoldInvariants& inv, const GeneratorDegree& deg);

// H^3 d^3 / 2.
Rational double_points(const ThreefoldInvariants& inv, const GeneratorDegree& deg);

// Miyaoka's cap on the number of nodes: (2/3) (c2_surface - k_s_squared / 3).
Rational miyaoka_rhs(const ThreefoldInvariants& inv, const GeneratorDegree& deg);

SurfaceInvariants surface_invariants(const ThreefoldInvariants& inv, const GeneratorDegree& deg);

// miyaoka_rhs as a cubic in d:
//   (4/9) h3 d^3 + (2/9) k h3 d^2 + (2/3)(c2h - k^2 h3 / 3) d.
UniPoly bound_polynomial(const ThreefoldInvariants& inv);

// double_points(d) - bound(d). Positive deficit at an applicable degree
// excludes that degree. Leading coefficient is h3/18 > 0, so only finitely
// many degrees can survive.
UniPoly deficit_polynomial(const ThreefoldInvariants& inv);

} // namespace morphbound

#endif
