#include "morphbound/adjunction.hpp"

namespace morphbound {

BigInt canonical_square(const ThreefoldInvariants& inv, const GeneratorDegree& deg) {
    validate(inv);
    BigInt k = inv.index, d = deg.d, h3 = inv.h3;
    return (k + d) * (k + d) * d * h3;
}

BigInt second_chern_surface(const ThreefoldInvariants& inv, const GeneratorDegree& deg) {
    validate(inv);
    BigInt k = inv.index, d = deg.d, h3 = inv.h3, c2h = inv.c2h;
    return d * c2h + d * d * (d + k) * h3;
}

Rational double_points(const ThreefoldInvariants& inv, const GeneratorDegree& deg) {
    validate(inv);
    BigInt d = deg.d;
    return Rational(BigInt(inv.h3) * d * d * d, BigInt(2));
}

Rational miyaoka_rhs(const ThreefoldInvariants& inv, const GeneratorDegree& deg) {
    Rational c2(second_chern_surface(inv, deg));
    Rational ks(canonical_square(inv, deg));
    return (c2 - ks / Rational(3)) * Rational(2, 3);
}

SurfaceInvariants surface_invariants(const ThreefoldInvariants& inv, const GeneratorDegree& deg) {
    return SurfaceInvariants{
        canonical_square(inv, deg),
        second_chern_surface(inv, deg),
        double_points(inv, deg),
    };
}

UniPoly bound_polynomial(const ThreefoldInvariants& inv) {
    validate(inv);
    BigInt k = inv.index, h3 = inv.h3, c2h = inv.c2h;
    Rational c3(BigInt(4) * h3, BigInt(9));
    Rational c2(BigInt(2) * k * h3, BigInt(9));
    Rational c1 = (Rational(c2h) - Rational(k * k * h3, BigInt(3))) * Rational(2, 3);
    return UniPoly({Rational(0), c1, c2, c3});
}

UniPoly deficit_polynomial(const ThreefoldInvariants& inv) {
    UniPoly dp({Rational(0), Rational(0), Rational(0), Rational(BigInt(inv.h3), BigInt(2))});
    return dp - bound_polynomial(inv);
}

} // namespace morphbound
