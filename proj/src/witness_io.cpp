#include "morphbound/witness_io.hpp"

#include <fstream>
#include <limits>

#include "morphbound/errors.hpp"

namespace morphbound {

namespace {

long long coeff_part(const Json& term, const char* key, const char* what) {
    if (!term.contains(key) || !term[key].is_number_integer())
        throw input_error(std::string(what) + ": each term needs an integer '" + key + "'");
    return term[key].get<long long>();
}

} // namespace

Json poly_to_json(const HomogeneousPoly& p) {
    static const BigInt kLo = std::numeric_limits<long long>::min();
    static const BigInt kHi = std::numeric_limits<long long>::max();
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        if (c.num() < kLo || c.num() > kHi || c.den() > kHi)
            throw input_error("coefficient too large for the witness file format");
        Json t;
        t["exp"] = m.exp;
        t["num"] = c.num().convert_to<long long>();
        t["den"] = c.den().convert_to<long long>();
        terms.push_back(std::move(t));
    }
    return terms;
}

HomogeneousPoly poly_from_json(const Json& j, const char* what, int expected_degree) {
    if (!j.is_array()) throw input_error(std::string(what) + ": expected a list of terms");
    HomogeneousPoly::TermMap terms;
    int degree = expected_degree;
    for (const Json& t : j) {
        if (!t.is_object() || !t.contains("exp") || !t["exp"].is_array() ||
            t["exp"].size() != kNumVars)
            throw input_error(std::string(what) + ": each term needs an 'exp' list of " +
                              std::to_string(kNumVars) + " integers");
        Monomial m;
        for (size_t v = 0; v < kNumVars; ++v) {
            if (!t["exp"][v].is_number_integer())
                throw input_error(std::string(what) + ": exponents must be integers");
            int e = t["exp"][v].get<int>();
            if (e < 0) throw input_error(std::string(what) + ": exponents must be nonnegative");
            m.exp[v] = e;
        }
        long long num = coeff_part(t, "num", what);
        long long den = coeff_part(t, "den", what);
        if (den <= 0) throw input_error(std::string(what) + ": 'den' must be positive");
        if (degree < 0) degree = m.total_degree();
        auto [it, fresh] = terms.emplace(m, Rational(num, den));
        if (!fresh) throw input_error(std::string(what) + ": duplicate monomial");
    }
    if (degree < 0)
        throw input_error(std::string(what) +
                          ": empty term list with no declared degree to inherit");
    return HomogeneousPoly::from_terms(degree, std::move(terms));
}

Json witness_to_json(const SosWitness& w) {
    Json j;
    j["m"] = w.m;
    j["d"] = w.d;
    j["F"] = poly_to_json(w.F);
    Json phis = Json::array();
    for (const HomogeneousPoly& p : w.phi) phis.push_back(poly_to_json(p));
    j["phi"] = std::move(phis);
    j["G"] = poly_to_json(w.G);
    return j;
}

SosWitness witness_from_json(const Json& j) {
    if (!j.is_object()) throw input_error("witness: expected a JSON object");
    for (const char* key : {"m", "d", "F", "phi", "G"})
        if (!j.contains(key))
            throw input_error(std::string("witness: missing field '") + key + "'");
    if (!j["m"].is_number_integer() || !j["d"].is_number_integer())
        throw input_error("witness: 'm' and 'd' must be integers");

    SosWitness w;
    w.m = j["m"].get<long long>();
    w.d = j["d"].get<long long>();
    if (w.m < 1 || w.d < 1) throw input_error("witness: 'm' and 'd' must be positive");
    if (w.m > 1'000'000 || w.d > 1'000'000) throw input_error("witness: degrees too large");
    w.F = poly_from_json(j["F"], "F", static_cast<int>(w.m));
    if (!j["phi"].is_array() || j["phi"].size() != kNumVars)
        throw input_error("witness: 'phi' must hold exactly five forms");
    for (size_t i = 0; i < kNumVars; ++i)
        w.phi[i] = poly_from_json(j["phi"][i], "phi", static_cast<int>(w.d));
    if (2 * w.d - w.m < 0) throw input_error("witness: needs 2d >= m");
    w.G = poly_from_json(j["G"], "G", static_cast<int>(2 * w.d - w.m));

    if (w.F.degree() != w.m) throw input_error("witness: deg F differs from 'm'");
    for (const HomogeneousPoly& p : w.phi)
        if (p.degree() != w.d) throw input_error("witness: a phi_i differs in degree from 'd'");
    if (w.G.degree() != 2 * w.d - w.m)
        throw input_error("witness: deg G must equal 2d - m");
    return w;
}

void write_witness_file(const std::string& path, const SosWitness& w) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot open '" + path + "' for writing");
    out << witness_to_json(w).dump(2) << "\n";
}

SosWitness read_witness_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw input_error("'" + path + "' is not valid JSON");
    return witness_from_json(j);
}

} // namespace morphbound
