#include "morphbound/multipoly.hpp"

#include <sstream>

#include "morphbound/errors.hpp"

namespace morphbound {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return acc;
}

std::uint64_t bigint_mod(const BigInt& v, std::uint64_t p) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return r.convert_to<std::uint64_t>();
}

} // namespace

HomogeneousPoly HomogeneousPoly::zero(int degree) {
    if (degree < 0) throw contract_error("polynomial degree must be nonnegative");
    return HomogeneousPoly(degree);
}

HomogeneousPoly HomogeneousPoly::term(Rational c, const Monomial& m) {
    for (int e : m.exp)
        if (e < 0) throw input_error("monomial exponents must be nonnegative");
    HomogeneousPoly p(m.total_degree());
    if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
    return p;
}

HomogeneousPoly HomogeneousPoly::variable_power(int var, int power) {
    if (var < 0 || var >= kNumVars) throw input_error("variable index out of range");
    if (power < 0) throw input_error("monomial exponents must be nonnegative");
    Monomial m;
    m.exp[static_cast<size_t>(var)] = power;
    return term(Rational(1), m);
}

HomogeneousPoly HomogeneousPoly::from_terms(int degree, TermMap terms) {
    HomogeneousPoly p = zero(degree);
    for (auto& [m, c] : terms) {
        if (m.total_degree() != degree)
            throw input_error("term of degree " + std::to_string(m.total_degree()) +
                              " in a polynomial declared homogeneous of degree " +
                              std::to_string(degree));
        if (!c.is_zero()) p.terms_.emplace(m, std::move(c));
    }
    return p;
}

std::pair<Monomial, Rational> HomogeneousPoly::leading_term() const {
    if (is_zero()) throw contract_error("leading term of the zero polynomial");
    return *terms_.begin();
}

void HomogeneousPoly::insert_term(const Monomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Rational HomogeneousPoly::eval(const std::array<Rational, kNumVars>& point) const {
    Rational acc;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int v = 0; v < kNumVars; ++v)
            for (int e = 0; e < m.exp[static_cast<size_t>(v)]; ++e)
                t *= point[static_cast<size_t>(v)];
        acc += t;
    }
    return acc;
}

std::uint64_t HomogeneousPoly::eval_mod(const std::array<std::uint64_t, kNumVars>& point,
                                        std::uint64_t prime) const {
    std::uint64_t acc = 0;
    for (const auto& [m, c] : terms_) {
        std::uint64_t den = bigint_mod(c.den(), prime);
        if (den == 0) throw contract_error("coefficient denominator divisible by the modulus");
        std::uint64_t t = mulmod(bigint_mod(c.num(), prime), powmod(den, prime - 2, prime), prime);
        for (int v = 0; v < kNumVars; ++v) {
            int e = m.exp[static_cast<size_t>(v)];
            if (e > 0)
                t = mulmod(t, powmod(point[static_cast<size_t>(v)] % prime,
                                     static_cast<std::uint64_t>(e), prime),
                           prime);
        }
        acc = (acc + t) % prime;
    }
    return acc;
}

HomogeneousPoly HomogeneousPoly::operator-() const {
    HomogeneousPoly out(degree_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

HomogeneousPoly HomogeneousPoly::scaled(const Rational& c) const {
    HomogeneousPoly out(degree_);
    if (c.is_zero()) return out;
    for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
    return out;
}

HomogeneousPoly operator+(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    if (a.degree_ != b.degree_)
        throw contract_error("adding homogeneous polynomials of different degrees");
    HomogeneousPoly out = a;
    for (const auto& [m, c] : b.terms_) out.insert_term(m, c);
    return out;
}

HomogeneousPoly operator-(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    if (a.degree_ != b.degree_)
        throw contract_error("subtracting homogeneous polynomials of different degrees");
    HomogeneousPoly out = a;
    for (const auto& [m, c] : b.terms_) out.insert_term(m, -c);
    return out;
}

HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    HomogeneousPoly out(a.degree_ + b.degree_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            for (size_t v = 0; v < kNumVars; ++v) m.exp[v] = ma.exp[v] + mb.exp[v];
            out.insert_term(m, ca * cb);
        }
    }
    return out;
}

std::string HomogeneousPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = (a == Rational(1));
        bool constant = (m.total_degree() == 0);
        if (constant || !unit) {
            os << (a.is_integer() ? a.str() : "(" + a.str() + ")");
            if (!constant) os << "*";
        }
        bool first_var = true;
        for (int v = 0; v < kNumVars; ++v) {
            int e = m.exp[static_cast<size_t>(v)];
            if (e == 0) continue;
            if (!first_var) os << "*";
            first_var = false;
            os << "x" << v;
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

std::optional<HomogeneousPoly> exact_divide(const HomogeneousPoly& a, const HomogeneousPoly& b) {
    if (b.is_zero()) throw contract_error("exact division by the zero polynomial");
    if (a.degree() < b.degree()) {
        if (a.is_zero()) return HomogeneousPoly::zero(0);
        return std::nullopt;
    }
    HomogeneousPoly q = HomogeneousPoly::zero(a.degree() - b.degree());
    HomogeneousPoly r = a;
    const auto [mb, cb] = b.leading_term();
    while (!r.is_zero()) {
        auto [mr, cr] = r.leading_term();
        Monomial mt;
        for (size_t v = 0; v < kNumVars; ++v) {
            int e = mr.exp[v] - mb.exp[v];
            if (e < 0) return std::nullopt;
            mt.exp[v] = e;
        }
        HomogeneousPoly t = HomogeneousPoly::term(cr / cb, mt);
        q = q + t;
        r = r - t * b;
    }
    return q;
}

} // namespace morphbound
