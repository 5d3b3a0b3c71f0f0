// End-to-end acceptance suite. Each criterion prints one PASS/FAIL line;
// the process exits nonzero if any of them fail. The first argument must be
// the path to the CLI binary.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "json.hpp"
#include "morphbound/feasibility.hpp"
#include "morphbound/multipoly.hpp"
#include "morphbound/sos.hpp"
#include "morphbound/target.hpp"
#include "morphbound/witness_io.hpp"

using nlohmann::json;
using namespace morphbound;

namespace {

std::string g_cli;
int g_failed = 0;

void report(int idx, const char* name, bool ok, const std::string& note = "") {
    std::string suffix = note.empty() ? std::string() : " (" + note + ")";
    std::printf("%s  criterion %d: %s%s\n", ok ? "PASS" : "FAIL", idx, name, suffix.c_str());
    if (!ok) ++g_failed;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = "'" + g_cli + "' " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    RunResult r;
    if (!pipe) return r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json parse_or_null(const RunResult& r) { return json::parse(r.out, nullptr, false); }

std::string temp_witness_path() {
    const char* dir = std::getenv("TMPDIR");
    std::string base = dir ? dir : "/tmp";
    return base + "/morphbound_acceptance_witness.json";
}

// 1: the cubic hypersurface is fully excluded, degree by degree.
void criterion_cubic_chain() {
    RunResult r = run_cli("feasible --hypersurface 3 --json");
    json j = parse_or_null(r);
    bool ok = r.exit_code == 0 && !j.is_discarded();
    std::string note;
    if (ok) {
        const json& v = j["verdicts"];
        ok = v.is_array() && v.size() >= 3 &&
             v[0]["status"] == "EXCLUDED_DEGREE_LOW" &&
             v[1]["status"] == "EXCLUDED_LINEAR_REMAINDER" &&
             v[2]["status"] == "EXCLUDED_PARITY" &&
             v[2]["double_points"] == json::array({81, 2}) &&
             v[2]["deficit"] == json::array({1, 2});
        std::string summary = ok ? j["summary"].get<std::string>() : "";
        std::string tail = ok ? j["tail_note"].get<std::string>() : "";
        ok = ok && summary.find("no nonconstant morphisms") != std::string::npos &&
             tail.find("every d > 3 is excluded") != std::string::npos;
        if (!ok) note = "verdict chain, tail note, or summary mismatch";
    } else {
        note = "CLI failed or emitted non-JSON";
    }
    report(1, "degree-by-degree exclusion for the cubic hypersurface", ok, note);
}

// 2: bound report for the cubic, with the literature discrepancy called out.
void criterion_cubic_bound() {
    RunResult r = run_cli("bound --hypersurface 3 --json");
    json j = parse_or_null(r);
    bool ok = r.exit_code == 0 && !j.is_discarded() && j["d_max"] == 2 &&
              j.contains("literature_note") && j["literature_note"]["stated_value"] == 3 &&
              j["literature_note"]["bound_at_3"] == json::array({40, 1}) &&
              j["literature_note"]["double_points_at_3"] == json::array({81, 2});
    report(2, "cubic bound report: d_max = 2 with bound(3) = 40 vs 81/2, stated value 3 noted",
           ok, ok ? "" : "missing values or note");
}

// 3: Fermat witness for m = 4 via the CLI, then re-verified.
void criterion_fermat_quartic() {
    std::string path = temp_witness_path();
    RunResult r = run_cli("fermat --degree 4 --json --emit-witness '" + path + "'");
    json j = parse_or_null(r);
    bool ok = r.exit_code == 0 && !j.is_discarded() && j["map_degree"] == json::array({16, 1}) &&
              j["g_is_one"] == true && j["common_zeros"]["status"] == "EMPTY";
    if (ok) {
        const json& phi = j["witness"]["phi"];
        ok = phi.is_array() && phi.size() == 5;
        for (size_t i = 0; ok && i < 5; ++i) {
            ok = phi[i].size() == 1 && phi[i][0]["num"] == 1 && phi[i][0]["den"] == 1;
            for (size_t v = 0; ok && v < 5; ++v)
                ok = phi[i][0]["exp"][v] == (v == i ? 2 : 0);
        }
    }
    if (ok) {
        RunResult v = run_cli("verify-sos --input '" + path + "'");
        ok = v.exit_code == 0;
    }
    std::remove(path.c_str());
    report(3, "Fermat witness for m = 4: phi_i = x_i^2, G = 1, degree 16, no common zeros", ok);
}

// 4: quadric self-maps: the node bound bites everywhere at or above its floor.
void criterion_quadric_positivity() {
    ThreefoldInvariants inv{2, 8, -3};
    bool ok = miyaoka_floor(inv) == 3;
    UniPoly deficit = deficit_polynomial(inv);
    Rational cauchy = cauchy_root_bound(deficit);
    BigInt top = cauchy.ceil();
    for (BigInt d = 3; ok && d <= top; ++d)
        ok = poly_eval(deficit, Rational(d)).sign() > 0;
    // No real roots at all beyond the floor: positivity cannot flip later.
    ok = ok && sign_change_count(deficit, Rational(3), cauchy + Rational(1)) == 0 &&
         poly_eval(deficit, Rational(3)).sign() > 0 &&
         !bound_report(inv).d_max.has_value();
    report(4, "quadric source: deficit positive for every d >= 3 up to the root bound, "
              "and no roots beyond it", ok);
}

// 5: the bound polynomial is the pointwise bound, for many random inputs.
void criterion_polynomial_consistency() {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long long> h3(1, 50);
    std::uniform_int_distribution<long long> c2h(-500, 1000);
    std::uniform_int_distribution<long long> k(-6, 10);
    std::uniform_int_distribution<long long> dd(1, 200);
    int mismatches = 0;
    for (int i = 0; i < 500; ++i) {
        ThreefoldInvariants inv{h3(rng), c2h(rng), k(rng)};
        long long d = dd(rng);
        if (poly_eval(bound_polynomial(inv), Rational(d)) !=
            miyaoka_rhs(inv, GeneratorDegree(d)))
            ++mismatches;
    }
    report(5, "bound polynomial equals the direct bound on 500 random invariant tuples",
           mismatches == 0,
           mismatches ? std::to_string(mismatches) + " mismatches" : "");
}

// 6: closed form vs integer scan for every m up to 10000, within the budget.
void criterion_closed_form_sweep() {
    auto start = std::chrono::steady_clock::now();
    long long bad = -1;
    for (long long m = 2; m <= 10000; ++m) {
        auto cf = hypersurface_dmax_closed_form(m);
        auto scan = max_integer_nonpositive(deficit_polynomial(hypersurface_invariants(m)),
                                            BigInt(1));
        bool same = cf.has_value() == scan.has_value() && (!cf || BigInt(*cf) == *scan);
        if (!same) {
            bad = m;
            break;
        }
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = bad < 0 && secs < 60.0;
    char note[64];
    std::snprintf(note, sizeof(note), "%.1fs for 9999 degrees", secs);
    report(6, "closed-form d_max equals the deficit scan for every m in [2, 10000]", ok,
           bad >= 0 ? "first mismatch at m = " + std::to_string(bad) : std::string(note));
}

// 7: the growth ratio d_m / m settles near its predicted slope.
void criterion_asymptotic_ratio() {
    const Rational slope(546410, 100000);
    bool ok = true;
    std::string note;
    for (long long m : {100, 300, 1000, 3000, 10000}) {
        auto d = hypersurface_dmax_closed_form(m);
        if (!d) {
            ok = false;
            note = "no d_max at m = " + std::to_string(m);
            break;
        }
        Rational gap = (Rational(*d, m) - slope).abs();
        if (!(gap <= Rational(25, m))) {
            ok = false;
            note = "ratio drifts at m = " + std::to_string(m);
            break;
        }
    }
    report(7, "d_m / m stays within 25/m of 5.46410 at m = 100, 300, 1000, 3000, 10000", ok,
           note);
}

// 8: node thresholds for the smallest complete-intersection targets.
void criterion_node_thresholds() {
    NodeThreshold a = min_nodes_required(TargetSpec({2}));
    NodeThreshold b = min_nodes_required(TargetSpec({3}));
    NodeThreshold c = min_nodes_required(TargetSpec({2, 2}));
    bool ok = a.exact == Rational(8, 9) && a.ceiling == 1 && b.exact == Rational(4, 3) &&
              b.ceiling == 2 && c.exact == Rational(16, 9) && c.ceiling == 2;
    report(8, "minimum node counts: 1 for [2], 2 for [3], 2 for [2,2]", ok);
}

// 9: the polynomial ring and witness layer hold up under random fire.
void criterion_sos_properties() {
    std::mt19937 rng(987654321);
    std::uniform_int_distribution<int> var(0, kNumVars - 1);
    std::uniform_int_distribution<long long> coef(-6, 6);
    auto random_poly = [&](int degree, int terms) {
        HomogeneousPoly p = HomogeneousPoly::zero(degree);
        for (int t = 0; t < terms; ++t) {
            Monomial m;
            for (int i = 0; i < degree; ++i) ++m.exp[static_cast<size_t>(var(rng))];
            p = p + HomogeneousPoly::term(Rational(coef(rng)), m);
        }
        return p;
    };

    int failures = 0;
    for (int i = 0; i < 100; ++i) {
        HomogeneousPoly a = random_poly(2, 4);
        HomogeneousPoly b = random_poly(2, 4);
        HomogeneousPoly c = random_poly(3, 4);
        if (!(a + b == b + a)) ++failures;
        if (!(a * b == b * a)) ++failures;
        if (!((a * b) * c == a * (b * c))) ++failures;
        if (!(a * (b + b) == a * b + a * b)) ++failures;
        if (!((a - b) + b == a)) ++failures;
    }
    for (int i = 0; i < 50; ++i) {
        HomogeneousPoly a = random_poly(2, 4);
        HomogeneousPoly b = random_poly(3, 4);
        if (a.is_zero() || b.is_zero()) continue;
        auto q = exact_divide(a * b, a);
        if (!q || !(*q == b)) ++failures;
    }
    for (long long m = 2; m <= 50; m += 2) {
        SosWitness w = fermat_witness(m);
        WitnessCheck check = verify_witness(w.F, w.phi);
        if (!(check.G == HomogeneousPoly::one())) ++failures;
        if (check.remainder_degree != 0) ++failures;
        if (common_zero_check(w.phi).status != CommonZeroStatus::Empty) ++failures;
        SosWitness back = witness_from_json(witness_to_json(w));
        if (!(back.F == w.F) || !(back.G == w.G)) ++failures;
    }
    report(9, "sum-of-squares property suite: ring axioms, division round trips, Fermat "
              "witnesses for even m <= 50", failures == 0,
           failures ? std::to_string(failures) + " failures" : "");
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance_tests <path-to-morphbound-binary>\n");
        return 1;
    }
    g_cli = argv[1];

    criterion_cubic_chain();
    criterion_cubic_bound();
    criterion_fermat_quartic();
    criterion_quadric_positivity();
    criterion_polynomial_consistency();
    criterion_closed_form_sweep();
    criterion_asymptotic_ratio();
    criterion_node_thresholds();
    criterion_sos_properties();

    if (g_failed) {
        std::printf("%d criterion(s) failed\n", g_failed);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
