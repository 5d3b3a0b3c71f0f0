#include "morphbound/serialize.hpp"

#include <limits>
#include <sstream>

#include "morphbound/witness_io.hpp"

namespace morphbound {

namespace {

bool fits_int64(const BigInt& v) {
    static const BigInt kLo = std::numeric_limits<long long>::min();
    static const BigInt kHi = std::numeric_limits<long long>::max();
    return v >= kLo && v <= kHi;
}

Json coeff_pairs(const UniPoly& p) {
    Json out = Json::array();
    for (int i = 0; i <= p.degree(); ++i) out.push_back(rational_json(p.coeff(i)));
    return out;
}

} // namespace

Json bigint_json(const BigInt& v) {
    if (fits_int64(v)) return v.convert_to<long long>();
    return v.str();
}

Json rational_json(const Rational& r) {
    return Json::array({bigint_json(r.num()), bigint_json(r.den())});
}

Json invariants_json(const ThreefoldInvariants& inv) {
    Json j;
    j["h3"] = inv.h3;
    j["c2h"] = inv.c2h;
    j["index"] = inv.index;
    return j;
}

Json bound_report_json(const ThreefoldInvariants& inv, const BoundReport& rep,
                       const BoundContext& ctx) {
    Json j;
    if (ctx.hypersurface_m) j["m"] = *ctx.hypersurface_m;
    j["invariants"] = invariants_json(inv);
    j["d_floor"] = rep.d_floor;
    j["d_max"] = rep.d_max ? bigint_json(*rep.d_max) : Json(nullptr);
    if (rep.inconclusive.empty()) {
        j["inconclusive_range"] = nullptr;
    } else {
        j["inconclusive_range"] = Json{{"from", rep.inconclusive.from},
                                       {"to", rep.inconclusive.to}};
    }
    UniPoly bound = bound_polynomial(inv);
    UniPoly deficit = deficit_polynomial(inv);
    j["bound_coefficients"] = coeff_pairs(bound);
    j["deficit_coefficients"] = coeff_pairs(deficit);
    j["cauchy_ceiling"] = bigint_json(cauchy_root_bound(deficit).ceil());
    if (ctx.hypersurface_m) {
        j["closed_form_d_max"] = [&]() -> Json {
            auto cf = hypersurface_dmax_closed_form(*ctx.hypersurface_m);
            return cf ? Json(*cf) : Json(nullptr);
        }();
        if (*ctx.hypersurface_m == 3) {
            GeneratorDegree three(3);
            Rational dp = double_points(inv, three);
            Rational rhs = miyaoka_rhs(inv, three);
            Json note;
            note["stated_value"] = 3;
            note["computed_value"] = rep.d_max ? bigint_json(*rep.d_max) : Json(nullptr);
            note["double_points_at_3"] = rational_json(dp);
            note["bound_at_3"] = rational_json(rhs);
            note["deficit_at_3"] = rational_json(dp - rhs);
            note["text"] =
                "the literature value for the cubic is d_3 = 3, but exact evaluation gives "
                "bound(3) = 40 < 81/2 = double points, so this tool reports d_max = 2; the "
                "discrepancy changes nothing downstream because d = 3 is already excluded by "
                "parity";
            j["literature_note"] = std::move(note);
        }
    }
    return j;
}

Json verdict_json(const FeasibilityVerdict& v) {
    Json j;
    j["d"] = v.d;
    j["status"] = std::string(to_string(v.status));
    j["double_points"] = rational_json(v.double_points);
    j["bound"] = rational_json(v.bound);
    j["deficit"] = rational_json(v.deficit);
    j["remainder_2d_minus_m"] = v.remainder_2d_minus_m;
    j["detail"] = v.detail;
    return j;
}

Json verdict_list_json(const VerdictList& list) {
    Json j;
    j["m"] = list.m;
    j["invariants"] = invariants_json(list.invariants);
    j["d_floor"] = list.d_floor;
    j["d_max"] = list.d_max ? bigint_json(*list.d_max) : Json(nullptr);
    Json rows = Json::array();
    for (const FeasibilityVerdict& v : list.verdicts) rows.push_back(verdict_json(v));
    j["verdicts"] = std::move(rows);
    j["tail_note"] = list.tail_note;
    j["summary"] = list.summary;
    return j;
}

std::string verdict_list_csv(const VerdictList& list) {
    std::ostringstream os;
    os << "d,status,double_points_num,double_points_den,bound_num,bound_den,"
          "remainder_2d_minus_m\n";
    for (const FeasibilityVerdict& v : list.verdicts) {
        os << v.d << "," << to_string(v.status) << "," << v.double_points.num().str() << ","
           << v.double_points.den().str() << "," << v.bound.num().str() << ","
           << v.bound.den().str() << "," << v.remainder_2d_minus_m << "\n";
    }
    return os.str();
}

Json table_json(const std::vector<TableRow>& rows) {
    Json out = Json::array();
    for (const TableRow& r : rows) {
        Json j;
        j["m"] = r.m;
        j["h3"] = r.invariants.h3;
        j["c2h"] = r.invariants.c2h;
        j["index"] = r.invariants.index;
        j["d_floor"] = r.d_floor;
        j["d_max"] = r.d_max ? bigint_json(*r.d_max) : Json(nullptr);
        j["closed_form_d_max"] = r.closed_form ? Json(*r.closed_form) : Json(nullptr);
        out.push_back(std::move(j));
    }
    return Json{{"rows", std::move(out)}};
}

std::string table_csv(const std::vector<TableRow>& rows) {
    std::ostringstream os;
    os << "m,h3,c2h,index,d_floor,d_max,closed_form_d_max\n";
    for (const TableRow& r : rows) {
        os << r.m << "," << r.invariants.h3 << "," << r.invariants.c2h << ","
           << r.invariants.index << "," << r.d_floor << ",";
        if (r.d_max) os << r.d_max->str();
        os << ",";
        if (r.closed_form) os << *r.closed_form;
        os << "\n";
    }
    return os.str();
}

Json asymptote_json(const std::vector<AsymptoticRow>& rows) {
    Json j;
    j["slope_approx"] = asymptotic_slope();
    j["offset_approx"] = asymptotic_offset();
    Json out = Json::array();
    for (const AsymptoticRow& r : rows) {
        Json row;
        row["m"] = r.m;
        row["d_m"] = r.d_m ? bigint_json(*r.d_m) : Json(nullptr);
        row["ratio_approx"] = r.ratio;
        out.push_back(std::move(row));
    }
    j["rows"] = std::move(out);
    return j;
}

std::string asymptote_csv(const std::vector<AsymptoticRow>& rows) {
    std::ostringstream os;
    os << "m,d_m,ratio_approx\n";
    for (const AsymptoticRow& r : rows) {
        os << r.m << ",";
        if (r.d_m) os << r.d_m->str();
        os << "," << r.ratio << "\n";
    }
    return os.str();
}

Json target_json(const TargetSpec& spec, const NodeThreshold& threshold,
                 const std::optional<TargetMapDegree>& map_degree) {
    Json j;
    j["degrees"] = spec.degrees;
    j["product"] = bigint_json(spec.product());
    j["min_nodes_exact"] = rational_json(threshold.exact);
    j["min_nodes"] = bigint_json(threshold.ceiling);
    if (map_degree) {
        j["h3"] = map_degree->h3;
        j["d"] = map_degree->d;
        j["map_degree"] = rational_json(map_degree->value);
        j["map_degree_integral"] = map_degree->value.is_integer();
    }
    return j;
}

Json common_zero_json(const CommonZeroFinding& finding) {
    Json j;
    j["status"] = std::string(to_string(finding.status));
    if (finding.rational_point) {
        Json pt = Json::array();
        for (const Rational& c : *finding.rational_point) pt.push_back(rational_json(c));
        j["point"] = std::move(pt);
        j["point_field"] = "Q";
    } else if (finding.mod_p_point) {
        Json pt = Json::array();
        for (std::uint64_t c : *finding.mod_p_point) pt.push_back(c);
        j["point"] = std::move(pt);
        j["point_field"] = "GF(" + std::to_string(finding.prime) + ")";
    }
    j["note"] = finding.note;
    return j;
}

Json fermat_summary_json(const SosWitness& w, const CommonZeroFinding& zeros) {
    Json j;
    j["m"] = w.m;
    j["d"] = w.d;
    // The source has H^3 = m and the quadric H^3 = 2, so the morphism degree
    // is m d^3 / 2.
    Rational map_degree(BigInt(w.m) * w.d * w.d * w.d, BigInt(2));
    j["map_degree"] = rational_json(map_degree);
    j["g_is_one"] = (w.G == HomogeneousPoly::one());
    j["common_zeros"] = common_zero_json(zeros);
    j["witness"] = witness_to_json(w);
    return j;
}

Json verify_summary_json(const SosWitness& w, const WitnessCheck& check) {
    Json j;
    j["m"] = w.m;
    j["d"] = w.d;
    j["remainder_degree"] = check.remainder_degree;
    j["g"] = poly_to_json(check.G);
    j["g_is_one"] = (check.G == HomogeneousPoly::one());
    j["g_matches_stored"] = (check.G == w.G);
    j["status"] = "verified";
    return j;
}

} // namespace morphbound
