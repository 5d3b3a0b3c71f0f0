#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "morphbound/errors.hpp"
#include "morphbound/feasibility.hpp"
#include "morphbound/serialize.hpp"
#include "morphbound/sos.hpp"
#include "morphbound/target.hpp"
#include "morphbound/witness_io.hpp"

namespace {

using namespace morphbound;

enum class Format { Human, Jsonic, Csv };

Format pick_format(bool json, bool csv) {
    if (json && csv) throw input_error("--json and --csv are mutually exclusive");
    if (json) return Format::Jsonic;
    if (csv) return Format::Csv;
    return Format::Human;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// One subcommand's source-of-invariants flags; exactly one of the three
// spellings must be used.
struct InvSource {
    std::string preset_name;
    long long m = 0;
    long long h3 = 0;
    long long c2h = 0;
    long long index = 0;
    CLI::App* sub = nullptr;

    void attach(CLI::App* s, bool with_preset = true) {
        sub = s;
        if (with_preset)
            s->add_option("preset", preset_name, "named source: P3 or Q");
        s->add_option("--hypersurface", m, "degree of a smooth hypersurface source in P^4");
        s->add_option("--h3", h3, "H^3 of the ample generator");
        s->add_option("--c2h", c2h, "c2(X).H");
        s->add_option("--index", index, "index k with K_X = k H");
    }

    bool is_hypersurface() const { return sub->count("--hypersurface") > 0; }

    ThreefoldInvariants resolve() const {
        bool has_m = sub->count("--hypersurface") > 0;
        bool has_preset = !preset_name.empty();
        int triple = (sub->count("--h3") ? 1 : 0) + (sub->count("--c2h") ? 1 : 0) +
                     (sub->count("--index") ? 1 : 0);
        if ((has_m ? 1 : 0) + (has_preset ? 1 : 0) + (triple ? 1 : 0) > 1)
            throw input_error("pick one source: a preset, --hypersurface, or the "
                              "--h3/--c2h/--index triple");
        if (has_m) return hypersurface_invariants(m);
        if (has_preset) return preset(preset_name);
        if (triple == 3) {
            ThreefoldInvariants inv{h3, c2h, index};
            validate(inv);
            return inv;
        }
        if (triple > 0)
            throw input_error("custom invariants need all three of --h3, --c2h, --index");
        throw input_error("no source given: pass a preset, --hypersurface, or "
                          "--h3/--c2h/--index");
    }
};

void print_invariants_human(const ThreefoldInvariants& inv) {
    std::cout << "H^3   = " << inv.h3 << "\n"
              << "c2.H  = " << inv.c2h << "\n"
              << "index = " << inv.index << "\n";
}

void run_invariants(const InvSource& src, bool json) {
    ThreefoldInvariants inv = src.resolve();
    if (json)
        emit(invariants_json(inv));
    else
        print_invariants_human(inv);
}

void run_bound(const InvSource& src, bool json) {
    ThreefoldInvariants inv = src.resolve();
    BoundReport rep = bound_report(inv);
    BoundContext ctx;
    if (src.is_hypersurface()) ctx.hypersurface_m = src.m;
    Json j = bound_report_json(inv, rep, ctx);
    if (json) {
        emit(j);
        return;
    }
    std::cout << "invariants: H^3 = " << inv.h3 << ", c2.H = " << inv.c2h
              << ", index = " << inv.index << "\n";
    std::cout << "node bound:       " << bound_polynomial(inv).str() << "\n";
    std::cout << "deficit:          " << deficit_polynomial(inv).str() << "\n";
    std::cout << "applicable from:  d = " << rep.d_floor << "\n";
    if (!rep.inconclusive.empty())
        std::cout << "inconclusive:     1 <= d <= " << rep.inconclusive.to
                  << " (bound not applicable there)\n";
    std::cout << "d_max:            " << (rep.d_max ? rep.d_max->str() : "none") << "\n";
    if (j.contains("closed_form_d_max") && !j["closed_form_d_max"].is_null())
        std::cout << "closed form:      " << j["closed_form_d_max"].dump() << "\n";
    if (j.contains("literature_note"))
        std::cout << "note: " << j["literature_note"]["text"].get<std::string>() << "\n";
}

void run_feasible(long long m, std::optional<long long> d_limit, Format fmt) {
    VerdictList list = generator_degree_verdicts(m, d_limit);
    switch (fmt) {
        case Format::Jsonic:
            emit(verdict_list_json(list));
            return;
        case Format::Csv:
            std::cout << verdict_list_csv(list);
            return;
        case Format::Human:
            break;
    }
    std::cout << "m = " << list.m << " (H^3 = " << list.invariants.h3
              << ", c2.H = " << list.invariants.c2h << ", index = " << list.invariants.index
              << "), node bound applies from d = " << list.d_floor
              << ", d_max = " << (list.d_max ? list.d_max->str() : "none") << "\n";
    for (const FeasibilityVerdict& v : list.verdicts) {
        std::cout << "d = " << v.d << "  " << to_string(v.status) << "\n"
                  << "    double points " << v.double_points.str() << ", bound " << v.bound.str()
                  << ", 2d - m = " << v.remainder_2d_minus_m << "\n"
                  << "    " << v.detail << "\n";
    }
    std::cout << "beyond the table: " << list.tail_note << "\n";
    std::cout << "summary: " << list.summary << "\n";
}

void run_fermat(long long m, std::uint64_t seed, const std::string& emit_path, bool json) {
    SosWitness w = fermat_witness(m);
    CommonZeroFinding zeros = common_zero_check(w.phi, seed);
    if (!emit_path.empty()) write_witness_file(emit_path, w);
    if (json) {
        Json j = fermat_summary_json(w, zeros);
        if (!emit_path.empty()) j["witness_file"] = emit_path;
        emit(j);
        return;
    }
    std::cout << "F   = " << w.F.str() << "\n";
    for (int i = 0; i < kNumVars; ++i)
        std::cout << "phi" << i << " = " << w.phi[static_cast<size_t>(i)].str() << "\n";
    std::cout << "G   = " << w.G.str() << "\n";
    Rational map_degree(BigInt(w.m) * w.d * w.d * w.d, BigInt(2));
    std::cout << "sum(phi_i^2) = F * G holds; morphism degree " << map_degree.str() << "\n";
    std::cout << "common zeros: " << to_string(zeros.status) << " (" << zeros.note << ")\n";
    if (!emit_path.empty()) std::cout << "witness written to " << emit_path << "\n";
}

void run_verify(const std::string& path, bool json) {
    SosWitness w = read_witness_file(path);
    WitnessCheck check = verify_witness(w.F, w.phi);
    if (!(check.G == w.G))
        throw witness_error("the identity holds, but with G = " + check.G.str() +
                            " instead of the stored G");
    if (json) {
        emit(verify_summary_json(w, check));
        return;
    }
    std::cout << "verified: sum(phi_i^2) = F * G with G = " << check.G.str() << " (degree "
              << check.remainder_degree << ")\n";
}

void run_common_zeros(const std::string& path, std::uint64_t seed, bool json) {
    SosWitness w = read_witness_file(path);
    CommonZeroFinding zeros = common_zero_check(w.phi, seed);
    if (json) {
        emit(common_zero_json(zeros));
        return;
    }
    std::cout << to_string(zeros.status) << ": " << zeros.note << "\n";
    if (zeros.rational_point) {
        std::cout << "point over Q: (";
        for (size_t i = 0; i < kNumVars; ++i)
            std::cout << (i ? " : " : "") << (*zeros.rational_point)[i].str();
        std::cout << ")\n";
    } else if (zeros.mod_p_point) {
        std::cout << "point over GF(" << zeros.prime << "): (";
        for (size_t i = 0; i < kNumVars; ++i)
            std::cout << (i ? " : " : "") << (*zeros.mod_p_point)[i];
        std::cout << ")\n";
    }
}

void run_table(long long m_from, long long m_to, Format fmt) {
    std::vector<TableRow> rows = hypersurface_table(m_from, m_to);
    switch (fmt) {
        case Format::Jsonic:
            emit(table_json(rows));
            return;
        case Format::Csv:
            std::cout << table_csv(rows);
            return;
        case Format::Human:
            break;
    }
    std::cout << "m\th3\tc2h\tindex\td_floor\td_max\tclosed_form\n";
    for (const TableRow& r : rows) {
        std::cout << r.m << "\t" << r.invariants.h3 << "\t" << r.invariants.c2h << "\t"
                  << r.invariants.index << "\t" << r.d_floor << "\t"
                  << (r.d_max ? r.d_max->str() : "-") << "\t"
                  << (r.closed_form ? std::to_string(*r.closed_form) : "-") << "\n";
    }
}

void run_target(const std::vector<long long>& degrees, std::optional<long long> h3,
                std::optional<long long> d, bool json) {
    TargetSpec spec(degrees);
    NodeThreshold threshold = min_nodes_required(spec);
    std::optional<TargetMapDegree> map_degree;
    if (h3.has_value() != d.has_value())
        throw input_error("--h3 and --degree must be given together");
    if (h3) {
        GeneratorDegree deg(*d);
        map_degree = TargetMapDegree{*h3, *d, ci_map_degree(*h3, deg, spec)};
    }
    if (json) {
        emit(target_json(spec, threshold, map_degree));
        return;
    }
    std::cout << "complete-intersection target, degrees (";
    for (size_t i = 0; i < spec.degrees.size(); ++i)
        std::cout << (i ? ", " : "") << spec.degrees[i];
    std::cout << "), product " << spec.product().str() << "\n";
    std::cout << "minimum nodes for the double-point argument: " << threshold.exact.str()
              << ", rounded up to " << threshold.ceiling.str() << "\n";
    if (map_degree) {
        std::cout << "map degree for H^3 = " << map_degree->h3 << ", d = " << map_degree->d
                  << ": " << map_degree->value.str()
                  << (map_degree->value.is_integer() ? "" : " (not an integer: excluded)") << "\n";
    }
}

void run_asymptote(const std::vector<long long>& ms, Format fmt) {
    std::vector<AsymptoticRow> rows = asymptotic_report(ms);
    switch (fmt) {
        case Format::Jsonic:
            emit(asymptote_json(rows));
            return;
        case Format::Csv:
            std::cout << asymptote_csv(rows);
            return;
        case Format::Human:
            break;
    }
    std::cout << "d_max grows like " << asymptotic_slope() << " * m - " << -asymptotic_offset()
              << " (approximate values of 2 + 2 sqrt(3) and 10 + 5 sqrt(3))\n";
    for (const AsymptoticRow& r : rows) {
        std::cout << "m = " << r.m << ": d_m = " << (r.d_m ? r.d_m->str() : "none");
        if (r.d_m) std::cout << ", d_m / m ~ " << r.ratio;
        std::cout << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree bounds and sum-of-squares witnesses for morphisms onto the "
                 "3-dimensional quadric"};
    app.require_subcommand(1);

    InvSource inv_src, bound_src;
    bool inv_json = false, bound_json = false;

    CLI::App* inv = app.add_subcommand("invariants", "resolve and print source invariants");
    inv_src.attach(inv);
    inv->add_flag("--json", inv_json, "emit JSON");
    inv->callback([&] { run_invariants(inv_src, inv_json); });

    CLI::App* bnd = app.add_subcommand("bound", "node-bound report: d_floor, d_max, deficit");
    bound_src.attach(bnd);
    bnd->add_flag("--json", bound_json, "emit JSON");
    bnd->callback([&] { run_bound(bound_src, bound_json); });

    long long feas_m = 0;
    long long feas_limit = 0;
    bool feas_json = false, feas_csv = false;
    CLI::App* feas = app.add_subcommand("feasible", "verdict for every generator degree of a "
                                                    "hypersurface source");
    feas->add_option("--hypersurface", feas_m, "hypersurface degree m")->required();
    CLI::Option* feas_limit_opt =
        feas->add_option("--d-limit", feas_limit, "extend the verdict table at least this far");
    feas->add_flag("--json", feas_json, "emit JSON");
    feas->add_flag("--csv", feas_csv, "emit CSV");
    feas->callback([&] {
        std::optional<long long> limit;
        if (feas_limit_opt->count()) limit = feas_limit;
        run_feasible(feas_m, limit, pick_format(feas_json, feas_csv));
    });

    long long fermat_m = 0;
    std::uint64_t fermat_seed = 0;
    std::string fermat_emit;
    bool fermat_json = false;
    CLI::App* fer = app.add_subcommand("fermat", "construct the Fermat sum-of-squares witness "
                                                 "for even m");
    fer->add_option("--degree", fermat_m, "even hypersurface degree m")->required();
    fer->add_option("--emit-witness", fermat_emit, "write the witness JSON to this file");
    fer->add_option("--seed", fermat_seed, "seed for the common-zero sampler");
    fer->add_flag("--json", fermat_json, "emit JSON");
    fer->callback([&] { run_fermat(fermat_m, fermat_seed, fermat_emit, fermat_json); });

    std::string verify_input;
    bool verify_json = false;
    CLI::App* ver = app.add_subcommand("verify-sos", "check a stored witness file");
    ver->add_option("--input", verify_input, "witness JSON file")->required();
    ver->add_flag("--json", verify_json, "emit JSON");
    ver->callback([&] { run_verify(verify_input, verify_json); });

    std::string zeros_input;
    std::uint64_t zeros_seed = 0;
    bool zeros_json = false;
    CLI::App* zer = app.add_subcommand("common-zeros", "decide whether the five forms of a "
                                                       "witness share a projective zero");
    zer->add_option("--input", zeros_input, "witness JSON file")->required();
    zer->add_option("--seed", zeros_seed, "seed for the sampler");
    zer->add_flag("--json", zeros_json, "emit JSON");
    zer->callback([&] { run_common_zeros(zeros_input, zeros_seed, zeros_json); });

    long long m_from = 0, m_to = 0;
    bool table_json_flag = false, table_csv_flag = false;
    CLI::App* tab = app.add_subcommand("table", "d_max table over a range of hypersurface "
                                                "degrees");
    tab->add_option("--m-from", m_from, "first hypersurface degree")->required();
    tab->add_option("--m-to", m_to, "last hypersurface degree")->required();
    tab->add_flag("--json", table_json_flag, "emit JSON");
    tab->add_flag("--csv", table_csv_flag, "emit CSV");
    tab->callback([&] { run_table(m_from, m_to, pick_format(table_json_flag, table_csv_flag)); });

    std::vector<long long> target_degrees;
    long long target_h3 = 0, target_d = 0;
    bool target_json_flag = false;
    CLI::App* tgt = app.add_subcommand("target", "complete-intersection target thresholds");
    tgt->add_option("--degrees", target_degrees, "complete-intersection degrees, e.g. 2,3")
        ->required()
        ->delimiter(',');
    CLI::Option* tgt_h3 = tgt->add_option("--h3", target_h3, "source H^3 for a map degree");
    CLI::Option* tgt_d = tgt->add_option("--degree", target_d, "generator degree d");
    tgt->add_flag("--json", target_json_flag, "emit JSON");
    tgt->callback([&] {
        std::optional<long long> h3_opt, d_opt;
        if (tgt_h3->count()) h3_opt = target_h3;
        if (tgt_d->count()) d_opt = target_d;
        run_target(target_degrees, h3_opt, d_opt, target_json_flag);
    });

    std::vector<long long> asym_ms;
    bool asym_json = false, asym_csv = false;
    CLI::App* asym = app.add_subcommand("asymptote", "growth of d_max across hypersurface "
                                                     "degrees");
    asym->add_option("m", asym_ms, "hypersurface degrees to sample")->required();
    asym->add_flag("--json", asym_json, "emit JSON");
    asym->add_flag("--csv", asym_csv, "emit CSV");
    asym->callback([&] { run_asymptote(asym_ms, pick_format(asym_json, asym_csv)); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const witness_error& e) {
        std::cerr << "not a witness: " << e.what() << "\n";
        return 3;
    } catch (const contract_error& e) {
        std::cerr << "internal contract violated: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
