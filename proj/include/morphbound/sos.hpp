#ifndef MORPHBOUND_SOS_HPP
#define MORPHBOUND_SOS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "morphbound/multipoly.hpp"

namespace morphbound {

// A morphism certificate: five forms phi_i of degree d on the hypersurface
// cut out by F (degree m) whose squares sum to F * G. Restricting the phi_i
// to {F = 0} then lands in the quadric sum(y_i^2) = 0, and the absence of a
// common zero on {F = 0} makes the map a morphism.
struct SosWitness {
    long long m = 0;
    long long d = 0;
    HomogeneousPoly F = HomogeneousPoly::zero(0);
    std::array<HomogeneousPoly, kNumVars> phi{
        HomogeneousPoly::zero(0), HomogeneousPoly::zero(0), HomogeneousPoly::zero(0),
        HomogeneousPoly::zero(0), HomogeneousPoly::zero(0)};
    HomogeneousPoly G = HomogeneousPoly::zero(0);
};

// The Fermat construction for even m: F = sum(x_i^m), phi_i = x_i^(m/2),
// G = 1. The returned witness is re-verified before it leaves this function.
SosWitness fermat_witness(long long m);

struct WitnessCheck {
    HomogeneousPoly G = HomogeneousPoly::zero(0);
    long long remainder_degree = 0; // deg G = 2d - m
};

// Divides sum(phi_i^2) by F exactly; a failed division throws witness_error.
// F must be nonzero of degree m >= 1, the phi_i of one common degree d with
// 2d >= m and not all zero.
WitnessCheck verify_witness(const HomogeneousPoly& F,
                            const std::array<HomogeneousPoly, kNumVars>& phi);

enum class CommonZeroStatus { Empty, Nontrivial, Undetermined };

std::string_view to_string(CommonZeroStatus s);

struct CommonZeroFinding {
    CommonZeroStatus status = CommonZeroStatus::Undetermined;
    // Exact projective common zero over Q, when one was found and lifted.
    std::optional<std::array<Rational, kNumVars>> rational_point;
    // Common zero over GF(prime) that did not lift; evidence only.
    std::optional<std::array<std::uint64_t, kNumVars>> mod_p_point;
    std::uint64_t prime = 0;
    std::string note;
};

// Partial decision procedure for whether the phi_i share a projective zero.
// Empty is proved by a variable-forcing argument (each phi_i, after setting
// already-forced variables to zero, reduces to a pure power of one variable);
// Nontrivial is proved by an exact rational point, or evidenced by a point
// over GF(10007) that does not lift; anything else is Undetermined.
CommonZeroFinding common_zero_check(const std::array<HomogeneousPoly, kNumVars>& phi,
                                    std::uint64_t seed = 0);

} // namespace morphbound

#endif
