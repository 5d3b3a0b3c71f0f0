#include "morphbound/feasibility.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "morphbound/errors.hpp"

namespace morphbound {

std::string_view to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::ExcludedDegreeLow: return "EXCLUDED_DEGREE_LOW";
        case VerdictStatus::ExcludedLinearRemainder: return "EXCLUDED_LINEAR_REMAINDER";
        case VerdictStatus::ExcludedParity: return "EXCLUDED_PARITY";
        case VerdictStatus::ExcludedMiyaoka: return "EXCLUDED_MIYAOKA";
        case VerdictStatus::RealizableFermat: return "REALIZABLE_FERMAT";
        case VerdictStatus::Undetermined: return "UNDETERMINED";
    }
    throw contract_error("unhandled verdict status");
}

bool is_excluded(VerdictStatus s) {
    return s == VerdictStatus::ExcludedDegreeLow || s == VerdictStatus::ExcludedLinearRemainder ||
           s == VerdictStatus::ExcludedParity || s == VerdictStatus::ExcludedMiyaoka;
}

long long miyaoka_floor(const ThreefoldInvariants& inv) {
    validate(inv);
    return std::max(1LL, -inv.index);
}

BoundReport bound_report(const ThreefoldInvariants& inv) {
    BoundReport rep;
    rep.d_floor = miyaoka_floor(inv);
    rep.d_max = max_integer_nonpositive(deficit_polynomial(inv), BigInt(rep.d_floor));
    rep.inconclusive = BoundReport::Range{1, rep.d_floor - 1};
    return rep;
}

namespace {

FeasibilityVerdict verdict_for(long long m, long long d, const ThreefoldInvariants& inv,
                               const UniPoly& bound_poly, long long d_floor) {
    GeneratorDegree deg(d);
    FeasibilityVerdict v;
    v.d = d;
    v.double_points = double_points(inv, deg);
    v.bound = poly_eval(bound_poly, Rational(d));
    v.deficit = v.double_points - v.bound;
    v.remainder_2d_minus_m = 2 * d - m;

    std::ostringstream detail;
    if (2 * d < m) {
        v.status = VerdictStatus::ExcludedDegreeLow;
        detail << "2d = " << 2 * d << " < m = " << m
               << ": the sum-of-squares identity needs a cofactor of degree 2d - m >= 0";
    } else if (2 * d - m == 1) {
        v.status = VerdictStatus::ExcludedLinearRemainder;
        detail << "2d - m = 1: the cofactor would be a hyperplane, and restricting the morphism "
                  "to it would map P3 nonconstantly to the quadric, against Lazarsfeld's theorem";
    } else if (m % 2 != 0 && d % 2 != 0) {
        v.status = VerdictStatus::ExcludedParity;
        detail << "double-point count " << v.double_points.str() << " is not an integer (" << m
               << "*" << d << "^3 is odd)";
        if (d >= d_floor && v.deficit.sign() > 0)
            detail << "; the node bound fails too (deficit " << v.deficit.str() << " > 0)";
    } else if (d >= d_floor && v.deficit.sign() > 0) {
        v.status = VerdictStatus::ExcludedMiyaoka;
        detail << v.double_points.str() << " nodes would exceed the Miyaoka bound "
               << v.bound.str() << " (deficit " << v.deficit.str() << " > 0, applicable since d >= "
               << d_floor << ")";
    } else if (m % 2 == 0 && d == m / 2) {
        v.status = VerdictStatus::RealizableFermat;
        detail << "realized by the Fermat sum-of-squares construction: phi_i = x_i"
               << (d > 1 ? "^" + std::to_string(d) : std::string())
               << " maps the degree-" << m << " Fermat hypersurface onto the quadric";
    } else {
        v.status = VerdictStatus::Undetermined;
        if (d < d_floor)
            detail << "node bound not applicable below d = " << d_floor
                   << " and no other rule decides this degree";
        else
            detail << "deficit " << v.deficit.str()
                   << " <= 0: the node bound permits this degree and no other rule decides it";
    }
    v.detail = detail.str();
    return v;
}

std::string join_degrees(const std::vector<long long>& ds) {
    std::ostringstream os;
    for (size_t i = 0; i < ds.size(); ++i) {
        if (i) os << ", ";
        os << ds[i];
    }
    return os.str();
}

} // namespace

VerdictList generator_degree_verdicts(long long m, std::optional<long long> d_limit) {
    ThreefoldInvariants inv = hypersurface_invariants(m);
    BoundReport rep = bound_report(inv);
    UniPoly bound_poly = bound_polynomial(inv);

    BigInt last = rep.d_floor - 1;
    if (rep.d_max && *rep.d_max + 1 > last) last = *rep.d_max + 1;
    if (d_limit && BigInt(*d_limit) > last) last = *d_limit;
    if (last < 1) last = 1;
    if (last > 1'000'000)
        throw input_error("verdict table would exceed 1000000 rows; pass a smaller degree");
    long long L = last.convert_to<long long>();

    VerdictList out;
    out.m = m;
    out.invariants = inv;
    out.d_floor = rep.d_floor;
    out.d_max = rep.d_max;
    out.verdicts.reserve(static_cast<size_t>(L));
    for (long long d = 1; d <= L; ++d)
        out.verdicts.push_back(verdict_for(m, d, inv, bound_poly, rep.d_floor));

    std::ostringstream tail;
    if (rep.d_max) {
        tail << "every d > " << L << " is excluded: the deficit is a cubic with positive leading "
             << "coefficient and is positive for all d > " << rep.d_max->str()
             << ", while the node bound applies from d = " << rep.d_floor << " on";
    } else {
        tail << "every d > " << L << " is excluded: the deficit is positive for every degree at "
             << "or above the applicability floor d = " << rep.d_floor;
    }
    out.tail_note = tail.str();

    std::vector<long long> realizable, open;
    for (const FeasibilityVerdict& v : out.verdicts) {
        if (v.status == VerdictStatus::RealizableFermat) realizable.push_back(v.d);
        if (v.status == VerdictStatus::Undetermined) open.push_back(v.d);
    }
    std::ostringstream summary;
    if (realizable.empty() && open.empty()) {
        summary << "no nonconstant morphisms to the quadric exist from a smooth degree-" << m
                << " hypersurface: every generator degree is excluded";
    } else {
        if (!realizable.empty())
            summary << "realizable at d = " << join_degrees(realizable)
                    << " (Fermat construction)";
        if (!open.empty()) {
            if (!realizable.empty()) summary << "; ";
            summary << "undetermined at d = " << join_degrees(open);
        }
        summary << "; every other degree is excluded";
    }
    out.summary = summary.str();
    return out;
}

std::optional<long long> hypersurface_dmax_closed_form(long long m) {
    hypersurface_invariants(m); // range checks
    BigInt mm = m;
    BigInt disc = 3 * mm * mm - 15 * mm + 30;
    BigInt root = boost::multiprecision::sqrt(disc); // integer part
    BigInt c = 2 * (mm - 5) + 2 * root;
    // deficit(d) = (m d / 18) q(d) for d > 0, with q as below.
    auto q = [&](const BigInt& x) {
        return x * x - 4 * (mm - 5) * x - 4 * (2 * mm * mm - 5 * mm + 5);
    };
    while (q(c + 1) <= 0) ++c;
    while (c >= 1 && q(c) > 0) --c;
    if (c < 1) return std::nullopt;
    return c.convert_to<long long>();
}

std::vector<AsymptoticRow> asymptotic_report(const std::vector<long long>& ms) {
    std::vector<AsymptoticRow> rows;
    rows.reserve(ms.size());
    for (long long m : ms) {
        ThreefoldInvariants inv = hypersurface_invariants(m);
        AsymptoticRow row;
        row.m = m;
        row.d_m = max_integer_nonpositive(deficit_polynomial(inv), BigInt(1));
        row.ratio = row.d_m ? row.d_m->convert_to<double>() / static_cast<double>(m) : 0.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

double asymptotic_slope() { return 2.0 + 2.0 * std::sqrt(3.0); }

double asymptotic_offset() { return -10.0 - 5.0 * std::sqrt(3.0); }

std::vector<TableRow> hypersurface_table(long long m_from, long long m_to) {
    if (m_from < 2) throw input_error("table range must start at m >= 2");
    if (m_to < m_from) throw input_error("empty table range");
    std::vector<TableRow> rows;
    rows.reserve(static_cast<size_t>(m_to - m_from + 1));
    for (long long m = m_from; m <= m_to; ++m) {
        ThreefoldInvariants inv = hypersurface_invariants(m);
        BoundReport rep = bound_report(inv);
        rows.push_back(TableRow{m, inv, rep.d_floor, rep.d_max, hypersurface_dmax_closed_form(m)});
    }
    return rows;
}

} // namespace morphbound
