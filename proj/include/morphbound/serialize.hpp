#ifndef MORPHBOUND_SERIALIZE_HPP
#define MORPHBOUND_SERIALIZE_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "morphbound/feasibility.hpp"
#include "morphbound/sos.hpp"
#include "morphbound/target.hpp"

namespace morphbound {

using Json = nlohmann::ordered_json;

// Exact values cross the JSON boundary as [num, den] integer pairs (decimal
// strings only when a value overflows 64 bits); nothing exact is ever
// rendered as a float.
Json rational_json(const Rational& r);
Json bigint_json(const BigInt& v);

Json invariants_json(const ThreefoldInvariants& inv);

struct BoundContext {
    std::optional<long long> hypersurface_m;
};

Json bound_report_json(const ThreefoldInvariants& inv, const BoundReport& rep,
                       const BoundContext& ctx = {});

Json verdict_json(const FeasibilityVerdict& v);
Json verdict_list_json(const VerdictList& list);
std::string verdict_list_csv(const VerdictList& list);

Json table_json(const std::vector<TableRow>& rows);
std::string table_csv(const std::vector<TableRow>& rows);

Json asymptote_json(const std::vector<AsymptoticRow>& rows);
std::string asymptote_csv(const std::vector<AsymptoticRow>& rows);

struct TargetMapDegree {
    long long h3;
    long long d;
    Rational value;
};

Json target_json(const TargetSpec& spec, const NodeThreshold& threshold,
                 const std::optional<TargetMapDegree>& map_degree);

Json common_zero_json(const CommonZeroFinding& finding);

Json fermat_summary_json(const SosWitness& w, const CommonZeroFinding& zeros);

Json verify_summary_json(const SosWitness& w, const WitnessCheck& check);

} // namespace morphbound

#endif
