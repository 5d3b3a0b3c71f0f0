#include "morphbound/sos.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <vector>

#include "morphbound/errors.hpp"

namespace morphbound {

namespace {

constexpr std::uint64_t kFalsifierPrime = 10007;
constexpr int kRandomTrials = 2000;

HomogeneousPoly sum_of_squares(const std::array<HomogeneousPoly, kNumVars>& phi) {
    HomogeneousPoly s = HomogeneousPoly::zero(2 * phi[0].degree());
    for (const HomogeneousPoly& p : phi) s = s + p * p;
    return s;
}

} // namespace

SosWitness fermat_witness(long long m) {
    if (m < 2) throw input_error("Fermat construction needs m >= 2");
    if (m % 2 != 0) throw input_error("Fermat construction needs an even degree, got m = " +
                                      std::to_string(m));
    if (m > 10000) throw input_error("Fermat construction degree too large");
    int mi = static_cast<int>(m);
    SosWitness w;
    w.m = m;
    w.d = m / 2;
    w.F = HomogeneousPoly::zero(mi);
    for (int v = 0; v < kNumVars; ++v) w.F = w.F + HomogeneousPoly::variable_power(v, mi);
    for (int v = 0; v < kNumVars; ++v)
        w.phi[static_cast<size_t>(v)] = HomogeneousPoly::variable_power(v, mi / 2);
    w.G = HomogeneousPoly::one();

    WitnessCheck check = verify_witness(w.F, w.phi);
    if (!(check.G == w.G))
        throw contract_error("Fermat construction failed its own verification");
    return w;
}

WitnessCheck verify_witness(const HomogeneousPoly& F,
                            const std::array<HomogeneousPoly, kNumVars>& phi) {
    if (F.is_zero() || F.degree() < 1) throw input_error("F must be nonzero of degree >= 1");
    int d = phi[0].degree();
    for (const HomogeneousPoly& p : phi)
        if (p.degree() != d) throw input_error("the five forms must share one degree");
    if (std::all_of(phi.begin(), phi.end(),
                    [](const HomogeneousPoly& p) { return p.is_zero(); }))
        throw input_error("the five forms must not all vanish");
    if (2 * d < F.degree())
        throw input_error("need 2d >= deg F for the sum of squares to be divisible");

    HomogeneousPoly s = sum_of_squares(phi);
    std::optional<HomogeneousPoly> g = exact_divide(s, F);
    if (!g)
        throw witness_error("sum(phi_i^2) is not a multiple of F");
    return WitnessCheck{*g, static_cast<long long>(2 * d - F.degree())};
}

std::string_view to_string(CommonZeroStatus s) {
    switch (s) {
        case CommonZeroStatus::Empty: return "EMPTY";
        case CommonZeroStatus::Nontrivial: return "NONTRIVIAL";
        case CommonZeroStatus::Undetermined: return "UNDETERMINED";
    }
    throw contract_error("unhandled common-zero status");
}

namespace {

// Sets the forced variables to zero by dropping every term they appear in.
HomogeneousPoly restrict_forced(const HomogeneousPoly& p, const std::array<bool, kNumVars>& forced) {
    HomogeneousPoly::TermMap kept;
    for (const auto& [m, c] : p.terms()) {
        bool alive = true;
        for (int v = 0; v < kNumVars; ++v)
            if (forced[static_cast<size_t>(v)] && m.exp[static_cast<size_t>(v)] > 0) {
                alive = false;
                break;
            }
        if (alive) kept.emplace(m, c);
    }
    return HomogeneousPoly::from_terms(p.degree(), std::move(kept));
}

// If p is a nonzero multiple of a single pure power x_v^e, vanishing forces
// x_v = 0; that is the only deterministic conclusion a single term gives.
std::optional<int> forced_variable(const HomogeneousPoly& p) {
    if (p.term_count() != 1) return std::nullopt;
    const auto& [m, c] = *p.terms().begin();
    int var = -1;
    for (int v = 0; v < kNumVars; ++v) {
        if (m.exp[static_cast<size_t>(v)] == 0) continue;
        if (var >= 0) return std::nullopt;
        var = v;
    }
    if (var < 0) return std::nullopt;
    return var;
}

bool vanishes_mod(const std::array<HomogeneousPoly, kNumVars>& phi,
                  const std::array<std::uint64_t, kNumVars>& pt) {
    for (const HomogeneousPoly& p : phi)
        if (p.eval_mod(pt, kFalsifierPrime) != 0) return false;
    return true;
}

std::optional<std::array<Rational, kNumVars>>
lift_exact(const std::array<HomogeneousPoly, kNumVars>& phi,
           const std::array<std::uint64_t, kNumVars>& pt) {
    // Symmetric lift: residues above p/2 become small negatives, which is
    // what an exact zero with small integer coordinates reduces to.
    std::array<Rational, kNumVars> exact;
    for (size_t v = 0; v < kNumVars; ++v) {
        long long c = static_cast<long long>(pt[v]);
        if (pt[v] > kFalsifierPrime / 2) c -= static_cast<long long>(kFalsifierPrime);
        exact[v] = Rational(c);
    }
    for (const HomogeneousPoly& p : phi)
        if (!p.eval(exact).is_zero()) return std::nullopt;
    return exact;
}

} // namespace

CommonZeroFinding common_zero_check(const std::array<HomogeneousPoly, kNumVars>& phi,
                                    std::uint64_t seed) {
    int d = phi[0].degree();
    for (const HomogeneousPoly& p : phi)
        if (p.degree() != d) throw input_error("the five forms must share one degree");

    CommonZeroFinding out;
    if (d == 0) {
        bool all_zero = std::all_of(phi.begin(), phi.end(),
                                    [](const HomogeneousPoly& p) { return p.is_zero(); });
        out.status = all_zero ? CommonZeroStatus::Nontrivial : CommonZeroStatus::Empty;
        if (all_zero) {
            out.rational_point = std::array<Rational, kNumVars>{Rational(1), Rational(0),
                                                                Rational(0), Rational(0),
                                                                Rational(0)};
            out.note = "all five forms are identically zero";
        } else {
            out.note = "a nonzero constant form has no zeros at all";
        }
        return out;
    }

    // Variable-forcing pass: proves emptiness when it forces everything.
    std::array<bool, kNumVars> forced{};
    bool changed = true;
    while (changed) {
        changed = false;
        for (const HomogeneousPoly& p : phi) {
            std::optional<int> v = forced_variable(restrict_forced(p, forced));
            if (v && !forced[static_cast<size_t>(*v)]) {
                forced[static_cast<size_t>(*v)] = true;
                changed = true;
            }
        }
    }
    if (std::all_of(forced.begin(), forced.end(), [](bool b) { return b; })) {
        out.status = CommonZeroStatus::Empty;
        out.note = "vanishing forces every coordinate to zero, which is no projective point";
        return out;
    }

    // Counterexample hunt over GF(10007), with an exact lift attempt on hits.
    bool mod_ok = true;
    for (const HomogeneousPoly& p : phi)
        for (const auto& [m, c] : p.terms())
            if ((c.den() % kFalsifierPrime) == 0) mod_ok = false;

    if (mod_ok) {
        std::vector<std::array<std::uint64_t, kNumVars>> candidates;
        for (unsigned mask = 1; mask < (1u << kNumVars); ++mask) {
            std::array<std::uint64_t, kNumVars> pt{};
            for (int v = 0; v < kNumVars; ++v)
                pt[static_cast<size_t>(v)] = (mask >> v) & 1u;
            candidates.push_back(pt);
        }
        std::mt19937_64 rng(seed);
        for (int t = 0; t < kRandomTrials; ++t) {
            std::array<std::uint64_t, kNumVars> pt{};
            bool nonzero = false;
            for (size_t v = 0; v < kNumVars; ++v) {
                pt[v] = rng() % kFalsifierPrime;
                nonzero = nonzero || pt[v] != 0;
            }
            if (nonzero) candidates.push_back(pt);
        }
        for (const auto& pt : candidates) {
            if (!vanishes_mod(phi, pt)) continue;
            out.status = CommonZeroStatus::Nontrivial;
            out.prime = kFalsifierPrime;
            if (auto exact = lift_exact(phi, pt)) {
                out.rational_point = *exact;
                out.note = "exact rational common zero";
            } else {
                out.mod_p_point = pt;
                out.note = "common zero over GF(10007) only; no exact lift found, so this is "
                           "characteristic-p evidence, not a proof over Q";
            }
            return out;
        }
    } else {
        out.note = "coefficient denominator divisible by 10007; sampling skipped. ";
    }

    out.status = CommonZeroStatus::Undetermined;
    out.note += "forcing incomplete and no common zero found by sampling; this check is a "
                "partial decision procedure";
    return out;
}

} // namespace morphbound
