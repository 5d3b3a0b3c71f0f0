#include "morphbound/unipoly.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <sstream>

namespace morphbound {

namespace {
const Rational kZero{};
} // namespace

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::constant(Rational c) {
    std::vector<Rational> v;
    if (!c.is_zero()) v.push_back(std::move(c));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::monomial(Rational c, int power) {
    if (power < 0) throw contract_error("monomial with negative power");
    if (c.is_zero()) return UniPoly();
    std::vector<Rational> v(static_cast<size_t>(power) + 1);
    v.back() = std::move(c);
    return UniPoly(std::move(v));
}

const Rational& UniPoly::coeff(int i) const {
    if (i < 0 || i > degree()) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

const Rational& UniPoly::leading_coeff() const {
    if (is_zero()) throw contract_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational UniPoly::eval(const Rational& x) const {
    if (is_zero()) return Rational();
    Rational acc = coeffs_.back();
    for (size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (degree() < 1) return UniPoly();
    std::vector<Rational> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        v[i - 1] = coeffs_[i] * Rational(static_cast<long long>(i));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return UniPoly();
    std::vector<Rational> v(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i] * c;
    return UniPoly(std::move(v));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < a.coeffs_.size()) v[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) v[i] += b.coeffs_[i];
    }
    return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < a.coeffs_.size()) v[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) v[i] -= b.coeffs_[i];
    }
    return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(v));
}

std::string UniPoly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeff(i);
        if (c.is_zero()) continue;
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = (a == Rational(1));
        if (i == 0) {
            os << a.str();
        } else {
            if (!unit) {
                if (a.is_integer())
                    os << a.str() << "*";
                else
                    os << "(" << a.str() << ")*";
            }
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Rational poly_eval(const UniPoly& p, const Rational& x) { return p.eval(x); }

Rational cauchy_root_bound(const UniPoly& p) {
    if (p.degree() < 1) throw input_error("root bound needs a nonconstant polynomial");
    const Rational& lead = p.leading_coeff();
    Rational best;
    for (int i = 0; i < p.degree(); ++i) {
        Rational q = (p.coeff(i) / lead).abs();
        if (q > best) best = q;
    }
    return best + Rational(1);
}

namespace polydetail {

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw contract_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly(), a};
    std::vector<Rational> q(static_cast<size_t>(a.degree() - b.degree()) + 1);
    UniPoly r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        Rational c = r.leading_coeff() / b.leading_coeff();
        q[static_cast<size_t>(shift)] = c;
        r = r - UniPoly::monomial(c, shift) * b;
    }
    return {UniPoly(std::move(q)), r};
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        // Normalizing to a monic remainder keeps coefficient growth in check
        // and does not change the root set.
        if (!r.is_zero()) r = r.scaled(Rational(1) / r.leading_coeff());
        b = std::move(r);
    }
    if (!a.is_zero()) a = a.scaled(Rational(1) / a.leading_coeff());
    return a;
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.degree() < 1) return p;
    UniPoly g = poly_gcd(p, p.derivative());
    if (g.degree() < 1) return p;
    return divmod(p, g).first;
}

SturmChain::SturmChain(const UniPoly& p) {
    if (p.is_zero()) throw contract_error("Sturm chain of the zero polynomial");
    UniPoly q = squarefree_part(p);
    seq_.push_back(q);
    if (q.degree() >= 1) {
        seq_.push_back(q.derivative());
        while (seq_.back().degree() >= 1) {
            UniPoly r = divmod(seq_[seq_.size() - 2], seq_.back()).second;
            if (r.is_zero()) break;
            r = -r;
            // Rescaling by a positive constant preserves every sign pattern.
            r = r.scaled(Rational(1) / r.leading_coeff().abs());
            seq_.push_back(std::move(r));
        }
    }
}

int SturmChain::variations_at(const Rational& x) const {
    int count = 0;
    int prev = 0;
    for (const UniPoly& s : seq_) {
        int sg = s.eval(x).sign();
        if (sg == 0) continue;
        if (prev != 0 && sg != prev) ++count;
        prev = sg;
    }
    return count;
}

int SturmChain::count_halfopen(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
}

std::vector<BigInt> scaled_integer_coeffs(const UniPoly& p) {
    BigInt l = 1;
    for (const Rational& c : p.coeffs()) l = boost::multiprecision::lcm(l, c.den());
    std::vector<BigInt> out(p.coeffs().size());
    for (size_t i = 0; i < out.size(); ++i) {
        const Rational& c = p.coeffs()[i];
        out[i] = c.num() * (l / c.den());
    }
    return out;
}

namespace {

// Integer Horner on pre-scaled coefficients; only the sign and the <= 0
// comparison are ever consumed.
BigInt eval_scaled(const std::vector<BigInt>& c, const BigInt& x) {
    BigInt acc = c.back();
    for (size_t i = c.size() - 1; i-- > 0;) acc = acc * x + c[i];
    return acc;
}

std::optional<BigInt>
linear_scan(const std::vector<BigInt>& c, const BigInt& lo, const BigInt& hi) {
    std::optional<BigInt> best;
    for (BigInt d = lo; d <= hi; ++d)
        if (eval_scaled(c, d) <= 0) best = d;
    return best;
}

// Locates the largest root via Sturm counts, then inspects the two integers
// around it. Loop invariant: p(x) > 0 at every integer x > U, and U itself
// satisfies p(U) > 0. Each pass strips at least one root out of (L, U], so
// the loop runs at most deg(p) times.
std::optional<BigInt> sturm_descent(const UniPoly& p, const std::vector<BigInt>& c,
                                    const BigInt& d_min, const BigInt& hi) {
    SturmChain chain(p);
    BigInt L = d_min - 1;
    BigInt U = hi;
    while (U > L) {
        int at_u = chain.variations_at(Rational(U));
        if (chain.variations_at(Rational(L)) - at_u == 0) return std::nullopt;
        // Largest integer t in [L, U-1] still seeing a root in (t, U].
        BigInt lo = L, hi2 = U - 1;
        while (lo < hi2) {
            BigInt mid = lo + (hi2 - lo + 1) / 2;
            if (chain.variations_at(Rational(mid)) > at_u)
                lo = mid;
            else
                hi2 = mid - 1;
        }
        BigInt t = lo;
        // The largest root r in (L, U] lies in (t, t+1]. Integers above t+1
        // up to U are beyond r, hence positive; above U by the invariant.
        if (eval_scaled(c, t + 1) <= 0) {
            if (t + 1 >= d_min) return t + 1;
            return std::nullopt;
        }
        if (eval_scaled(c, t) <= 0) {
            if (t >= d_min) return t;
            return std::nullopt;
        }
        U = t;
    }
    return std::nullopt;
}

} // namespace

std::optional<BigInt>
max_integer_nonpositive_with(const UniPoly& p, const BigInt& d_min, RootScan strategy) {
    if (p.is_zero() || p.leading_coeff().sign() <= 0)
        throw contract_error("max_integer_nonpositive needs a positive leading coefficient");
    if (p.degree() == 0) return std::nullopt;
    BigInt hi = cauchy_root_bound(p).ceil();
    if (hi < d_min) return std::nullopt;
    std::vector<BigInt> c = scaled_integer_coeffs(p);
    if (strategy == RootScan::Linear) return linear_scan(c, d_min, hi);
    return sturm_descent(p, c, d_min, hi);
}

} // namespace polydetail

std::optional<BigInt> max_integer_nonpositive(const UniPoly& p, const BigInt& d_min) {
    using namespace polydetail;
    if (p.is_zero() || p.leading_coeff().sign() <= 0)
        throw contract_error("max_integer_nonpositive needs a positive leading coefficient");
    if (p.degree() == 0) return std::nullopt;
    BigInt hi = cauchy_root_bound(p).ceil();
    if (hi < d_min) return std::nullopt;
    constexpr long long kScanWindow = 16384;
    RootScan strategy = (hi - d_min <= kScanWindow) ? RootScan::Linear : RootScan::SturmBisect;
    return max_integer_nonpositive_with(p, d_min, strategy);
}

int sign_change_count(const UniPoly& p, const Rational& a, const Rational& b) {
    if (p.is_zero()) throw contract_error("root count of the zero polynomial");
    if (!(a < b)) throw contract_error("root count needs a < b");
    polydetail::SturmChain chain(p);
    return chain.count_halfopen(a, b);
}

} // namespace morphbound
