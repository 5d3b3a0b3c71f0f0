#ifndef MORPHBOUND_FEASIBILITY_HPP
#define MORPHBOUND_FEASIBILITY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "morphbound/adjunction.hpp"
#include "morphbound/invariants.hpp"

namespace morphbound {

enum class VerdictStatus {
    ExcludedDegreeLow,
    ExcludedLinearRemainder,
    ExcludedParity,
    ExcludedMiyaoka,
    RealizableFermat,
    Undetermined,
};

std::string_view to_string(VerdictStatus s);
bool is_excluded(VerdictStatus s);

// Verdict for a single generator degree d of a degree-m hypersurface source.
// Exclusion rules are tested in a fixed order (degree too low, linear
// cofactor, parity, node bound), so equal inputs always yield equal verdicts.
struct FeasibilityVerdict {
    long long d = 0;
    VerdictStatus status = VerdictStatus::Undetermined;
    std::string detail;
    Rational double_points;
    Rational bound;
    Rational deficit;
    long long remainder_2d_minus_m = 0;
};

// Smallest degree where the node bound applies: the hyperplane pullback is
// nef once d >= -k, and degrees are at least 1.
long long miyaoka_floor(const ThreefoldInvariants& inv);

struct BoundReport {
    long long d_floor = 1;
    // Largest d at or above d_floor with deficit(d) <= 0; absent when the
    // deficit is already positive from the floor on.
    std::optional<BigInt> d_max;
    // Degrees 1 <= d < d_floor, where the node bound is silent.
    struct Range {
        long long from = 0;
        long long to = -1;
        bool empty() const { return to < from; }
    };
    Range inconclusive;
};

BoundReport bound_report(const ThreefoldInvariants& inv);

struct VerdictList {
    long long m = 0;
    ThreefoldInvariants invariants;
    long long d_floor = 1;
    std::optional<BigInt> d_max;
    std::vector<FeasibilityVerdict> verdicts;
    std::string tail_note; // why every degree beyond the listed ones is excluded
    std::string summary;
};

// Verdicts for every d from 1 through max(d_max + 1, d_floor - 1, d_limit).
// d_limit only ever extends the list.
VerdictList generator_degree_verdicts(long long m,
                                      std::optional<long long> d_limit = std::nullopt);

// Largest feasible degree for the degree-m hypersurface, straight from the
// quadratic factor of the deficit: the integer part of
// 2(m-5) + 2 sqrt(3m^2 - 15m + 30), adjusted so the quadratic inequality
// holds at d and fails at d+1. Absent when no degree >= 1 qualifies.
std::optional<long long> hypersurface_dmax_closed_form(long long m);

struct AsymptoticRow {
    long long m = 0;
    std::optional<BigInt> d_m;
    double ratio = 0.0; // d_m / m, display-only approximation
};

std::vector<AsymptoticRow> asymptotic_report(const std::vector<long long>& ms);

// d_max grows like slope * m + offset. Both values are irrational; these
// doubles are labeled approximations for display only.
double asymptotic_slope();  // 2 + 2 sqrt(3)
double asymptotic_offset(); // -10 - 5 sqrt(3)

struct TableRow {
    long long m = 0;
    ThreefoldInvariants invariants;
    long long d_floor = 1;
    std::optional<BigInt> d_max;
    std::optional<long long> closed_form;
};

std::vector<TableRow> hypersurface_table(long long m_from, long long m_to);

} // namespace morphbound

#endif
