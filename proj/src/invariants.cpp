#include "morphbound/invariants.hpp"

#include "morphbound/errors.hpp"

namespace morphbound {

namespace {
// m^3 must stay inside long long; anything larger is outside the tool's
// intended range anyway.
constexpr long long kMaxHypersurfaceDegree = 2'000'000;
} // namespace

GeneratorDegree::GeneratorDegree(long long value) : d(value) {
    if (value < 1) throw input_error("generator degree must be at least 1");
}

void validate(const ThreefoldInvariants& inv) {
    if (inv.h3 < 1) throw input_error("H^3 must be a positive integer");
}

ThreefoldInvariants hypersurface_invariants(long long m) {
    if (m < 2) throw input_error("hypersurface degree must be at least 2");
    if (m > kMaxHypersurfaceDegree) throw input_error("hypersurface degree too large");
    return ThreefoldInvariants{m, m * m * m - 5 * m * m + 10 * m, m - 5};
}

ThreefoldInvariants preset(std::string_view name) {
    if (name == "P3") return ThreefoldInvariants{1, 6, -4};
    if (name == "Q") return ThreefoldInvariants{2, 8, -3};
    throw input_error("unknown preset '" + std::string(name) + "' (expected P3 or Q)");
}

} // namespace morphbound
