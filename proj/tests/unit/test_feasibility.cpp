#include "doctest.h"

#include <algorithm>
#include <sstream>

#include "morphbound/feasibility.hpp"
#include "morphbound/serialize.hpp"

using namespace morphbound;

namespace {

const FeasibilityVerdict& row(const VerdictList& list, long long d) {
    for (const FeasibilityVerdict& v : list.verdicts)
        if (v.d == d) return v;
    REQUIRE(false);
    return list.verdicts.front();
}

} // namespace

TEST_CASE("applicability floor") {
    CHECK(miyaoka_floor(preset("P3")) == 4);
    CHECK(miyaoka_floor(preset("Q")) == 3);
    CHECK(miyaoka_floor(hypersurface_invariants(3)) == 2);
    CHECK(miyaoka_floor(hypersurface_invariants(5)) == 1);
    CHECK(miyaoka_floor(hypersurface_invariants(10)) == 1);
}

TEST_CASE("bound report for the cubic") {
    BoundReport rep = bound_report(hypersurface_invariants(3));
    CHECK(rep.d_floor == 2);
    REQUIRE(rep.d_max.has_value());
    CHECK(*rep.d_max == 2);
    CHECK(rep.inconclusive.from == 1);
    CHECK(rep.inconclusive.to == 1);
}

TEST_CASE("bound report for the quadric leaves no feasible degree at or above the floor") {
    BoundReport rep = bound_report(preset("Q"));
    CHECK(rep.d_floor == 3);
    CHECK(!rep.d_max.has_value());
    CHECK(rep.inconclusive.from == 1);
    CHECK(rep.inconclusive.to == 2);
}

TEST_CASE("bound report for the quartic") {
    BoundReport rep = bound_report(hypersurface_invariants(4));
    CHECK(rep.d_floor == 1);
    REQUIRE(rep.d_max.has_value());
    CHECK(*rep.d_max == 6);
    CHECK(rep.inconclusive.empty());
}

TEST_CASE("closed form at pinned degrees") {
    CHECK(!hypersurface_dmax_closed_form(2).has_value());
    CHECK(hypersurface_dmax_closed_form(3) == 2);
    CHECK(hypersurface_dmax_closed_form(4) == 6);
    CHECK(hypersurface_dmax_closed_form(5) == 10);
    CHECK(hypersurface_dmax_closed_form(10) == 36);
    CHECK(hypersurface_dmax_closed_form(100) == 527);
}

TEST_CASE("closed form equals the deficit scan for every small m") {
    for (long long m = 2; m <= 400; ++m) {
        auto cf = hypersurface_dmax_closed_form(m);
        auto scan = max_integer_nonpositive(deficit_polynomial(hypersurface_invariants(m)),
                                            BigInt(1));
        REQUIRE(cf.has_value() == scan.has_value());
        if (cf) CHECK(BigInt(*cf) == *scan);
    }
}

TEST_CASE("verdicts for the cubic: every degree dies") {
    VerdictList list = generator_degree_verdicts(3);
    CHECK(list.d_floor == 2);
    REQUIRE(list.d_max.has_value());
    CHECK(*list.d_max == 2);
    REQUIRE(list.verdicts.size() == 3);

    CHECK(row(list, 1).status == VerdictStatus::ExcludedDegreeLow);
    CHECK(row(list, 1).remainder_2d_minus_m == -1);
    CHECK(row(list, 2).status == VerdictStatus::ExcludedLinearRemainder);
    CHECK(row(list, 2).remainder_2d_minus_m == 1);
    CHECK(row(list, 3).status == VerdictStatus::ExcludedParity);
    CHECK(row(list, 3).double_points == Rational(81, 2));
    CHECK(row(list, 3).bound == Rational(40));
    CHECK(row(list, 3).deficit == Rational(1, 2));

    for (const FeasibilityVerdict& v : list.verdicts) CHECK(is_excluded(v.status));
    CHECK(list.summary.find("no nonconstant morphisms") != std::string::npos);
    CHECK(!list.tail_note.empty());
}

TEST_CASE("verdicts for the quartic: Fermat at d = 2, open middle, bound kills the tail") {
    VerdictList list = generator_degree_verdicts(4);
    REQUIRE(list.d_max.has_value());
    CHECK(*list.d_max == 6);
    REQUIRE(list.verdicts.size() == 7);

    CHECK(row(list, 1).status == VerdictStatus::ExcludedDegreeLow);
    CHECK(row(list, 2).status == VerdictStatus::RealizableFermat);
    for (long long d = 3; d <= 6; ++d) CHECK(row(list, d).status == VerdictStatus::Undetermined);
    CHECK(row(list, 7).status == VerdictStatus::ExcludedMiyaoka);
    CHECK(row(list, 7).double_points == Rational(686));
    CHECK(row(list, 7).bound == Rational(672));
}

TEST_CASE("verdicts for the quintic: only even degrees in [4, 10] survive") {
    VerdictList list = generator_degree_verdicts(5);
    REQUIRE(list.d_max.has_value());
    CHECK(*list.d_max == 10);

    std::vector<long long> open;
    for (const FeasibilityVerdict& v : list.verdicts)
        if (v.status == VerdictStatus::Undetermined) open.push_back(v.d);
    CHECK(open == std::vector<long long>{4, 6, 8, 10});

    CHECK(row(list, 1).status == VerdictStatus::ExcludedDegreeLow);
    CHECK(row(list, 2).status == VerdictStatus::ExcludedDegreeLow);
    CHECK(row(list, 3).status == VerdictStatus::ExcludedLinearRemainder);
    CHECK(row(list, 5).status == VerdictStatus::ExcludedParity);
    CHECK(row(list, 7).status == VerdictStatus::ExcludedParity);
    CHECK(row(list, 9).status == VerdictStatus::ExcludedParity);
    CHECK(row(list, 11).status == VerdictStatus::ExcludedParity);
    // No realizable degree: 5 is odd, so the Fermat construction is silent.
    for (const FeasibilityVerdict& v : list.verdicts)
        CHECK(v.status != VerdictStatus::RealizableFermat);
}

TEST_CASE("verdicts for the quadric source, m = 2: the identity degree survives") {
    VerdictList list = generator_degree_verdicts(2);
    CHECK(!list.d_max.has_value());
    REQUIRE(list.verdicts.size() == 2);
    CHECK(row(list, 1).status == VerdictStatus::RealizableFermat);
    CHECK(row(list, 2).status == VerdictStatus::Undetermined);
}

TEST_CASE("every excluded verdict carries its reason in the numbers") {
    for (long long m = 2; m <= 12; ++m) {
        VerdictList list = generator_degree_verdicts(m);
        for (const FeasibilityVerdict& v : list.verdicts) {
            CHECK(v.double_points == Rational(BigInt(m) * v.d * v.d * v.d, BigInt(2)));
            CHECK(v.deficit == v.double_points - v.bound);
            switch (v.status) {
                case VerdictStatus::ExcludedDegreeLow:
                    CHECK(2 * v.d < m);
                    break;
                case VerdictStatus::ExcludedLinearRemainder:
                    CHECK(v.remainder_2d_minus_m == 1);
                    break;
                case VerdictStatus::ExcludedParity:
                    CHECK((m * v.d * v.d * v.d) % 2 == 1);
                    CHECK(!v.double_points.is_integer());
                    break;
                case VerdictStatus::ExcludedMiyaoka:
                    CHECK(v.d >= list.d_floor);
                    CHECK(v.deficit.sign() > 0);
                    CHECK(v.double_points.is_integer());
                    break;
                case VerdictStatus::RealizableFermat:
                    CHECK(m % 2 == 0);
                    CHECK(v.d == m / 2);
                    break;
                case VerdictStatus::Undetermined:
                    CHECK(v.remainder_2d_minus_m >= 0);
                    CHECK(v.remainder_2d_minus_m != 1);
                    break;
            }
        }
    }
}

TEST_CASE("d-limit only extends the table") {
    VerdictList base = generator_degree_verdicts(3);
    VerdictList wider = generator_degree_verdicts(3, 10);
    CHECK(wider.verdicts.size() == 10);
    VerdictList narrower = generator_degree_verdicts(3, 2);
    CHECK(narrower.verdicts.size() == base.verdicts.size());
    for (long long d = 4; d <= 10; ++d) CHECK(is_excluded(row(wider, d).status));
}

TEST_CASE("asymptotic rows at pinned degrees") {
    auto rows = asymptotic_report({10, 100});
    REQUIRE(rows.size() == 2);
    REQUIRE(rows[0].d_m.has_value());
    CHECK(*rows[0].d_m == 36);
    CHECK(rows[0].ratio == doctest::Approx(3.6));
    REQUIRE(rows[1].d_m.has_value());
    CHECK(*rows[1].d_m == 527);
    CHECK(rows[1].ratio == doctest::Approx(5.27));

    CHECK(asymptotic_slope() == doctest::Approx(5.4641016151));
    CHECK(asymptotic_offset() == doctest::Approx(-18.6602540378));
}

TEST_CASE("hypersurface table spans its range with consistent columns") {
    auto rows = hypersurface_table(2, 12);
    REQUIRE(rows.size() == 11);
    for (const TableRow& r : rows) {
        CHECK(r.invariants == hypersurface_invariants(r.m));
        CHECK(r.d_floor == miyaoka_floor(r.invariants));
        if (r.m == 2) {
            CHECK(!r.d_max.has_value());
            CHECK(!r.closed_form.has_value());
        } else {
            REQUIRE(r.d_max.has_value());
            REQUIRE(r.closed_form.has_value());
        }
    }
    CHECK_THROWS_AS(hypersurface_table(1, 5), input_error);
    CHECK_THROWS_AS(hypersurface_table(5, 4), input_error);
}

TEST_CASE("CSV columns are exactly the published ones") {
    VerdictList list = generator_degree_verdicts(3);
    std::string csv = verdict_list_csv(list);
    std::istringstream in(csv);
    std::string header;
    std::getline(in, header);
    CHECK(header ==
          "d,status,double_points_num,double_points_den,bound_num,bound_den,"
          "remainder_2d_minus_m");
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 6);
    }
    CHECK(rows == 3);
    CHECK(csv.find("3,EXCLUDED_PARITY,81,2,40,1,3") != std::string::npos);
}

TEST_CASE("verdict JSON carries exact pairs and the closing notes") {
    VerdictList list = generator_degree_verdicts(3);
    Json j = verdict_list_json(list);
    CHECK(j["m"] == 3);
    CHECK(j["invariants"]["h3"] == 3);
    CHECK(j["d_max"] == 2);
    REQUIRE(j["verdicts"].size() == 3);
    CHECK(j["verdicts"][2]["double_points"] == Json::array({81, 2}));
    CHECK(j["verdicts"][2]["bound"] == Json::array({40, 1}));
    CHECK(j["verdicts"][2]["deficit"] == Json::array({1, 2}));
    CHECK(j["verdicts"][2]["status"] == "EXCLUDED_PARITY");
    CHECK(!j["summary"].get<std::string>().empty());
    CHECK(!j["tail_note"].get<std::string>().empty());
}

TEST_CASE("bound JSON for the cubic flags the literature discrepancy") {
    ThreefoldInvariants inv = hypersurface_invariants(3);
    BoundReport rep = bound_report(inv);
    Json j = bound_report_json(inv, rep, BoundContext{3});
    CHECK(j["d_max"] == 2);
    CHECK(j["closed_form_d_max"] == 2);
    REQUIRE(j.contains("literature_note"));
    CHECK(j["literature_note"]["stated_value"] == 3);
    CHECK(j["literature_note"]["computed_value"] == 2);
    CHECK(j["literature_note"]["bound_at_3"] == Json::array({40, 1}));
    CHECK(j["literature_note"]["double_points_at_3"] == Json::array({81, 2}));

    // Only the cubic carries the note.
    ThreefoldInvariants inv4 = hypersurface_invariants(4);
    Json j4 = bound_report_json(inv4, bound_report(inv4), BoundContext{4});
    CHECK(!j4.contains("literature_note"));
}
