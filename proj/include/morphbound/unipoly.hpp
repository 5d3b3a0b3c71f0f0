#ifndef MORPHBOUND_UNIPOLY_HPP
#define MORPHBOUND_UNIPOLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morphbound/rational.hpp"

namespace morphbound {

// Univariate polynomial over Q. coeff(i) multiplies d^i; trailing zeros are
// never stored, so the zero polynomial has an empty coefficient vector and
// degree() == -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPoly constant(Rational c);
    static UniPoly monomial(Rational c, int power);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int i) const;
    const Rational& leading_coeff() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const;
    UniPoly derivative() const;

    UniPoly operator-() const;
    UniPoly scaled(const Rational& c) const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string str(const char* var = "d") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Rational poly_eval(const UniPoly& p, const Rational& x);

// B = 1 + max_i |c_i / c_n|, so every real root r satisfies |r| < B.
// Requires degree >= 1.
Rational cauchy_root_bound(const UniPoly& p);

// Largest integer d >= d_min with p(d) <= 0. Requires a strictly positive
// leading coefficient, so p(d) > 0 for all large d and the answer is finite
// or absent. Picks a plain scan when the Cauchy window is small and a
// Sturm-guided bisection otherwise; the two strategies are interchangeable.
std::optional<BigInt> max_integer_nonpositive(const UniPoly& p, const BigInt& d_min);

// Number of distinct real roots of p in the half-open interval (a, b].
// Requires p nonzero and a < b.
int sign_change_count(const UniPoly& p, const Rational& a, const Rational& b);

namespace polydetail {

// Quotient and remainder of a by b (b nonzero).
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

UniPoly poly_gcd(UniPoly a, UniPoly b);
UniPoly squarefree_part(const UniPoly& p);

// Sturm chain of the squarefree part of p. Sign variations are counted with
// zeros skipped, which makes the variation function right-continuous:
// variations_at(a) - variations_at(b) is exactly the number of distinct real
// roots of p in (a, b], endpoints allowed to be roots.
class SturmChain {
public:
    explicit SturmChain(const UniPoly& p);
    int variations_at(const Rational& x) const;
    int count_halfopen(const Rational& a, const Rational& b) const;

private:
    std::vector<UniPoly> seq_;
};

enum class RootScan { Linear, SturmBisect };

std::optional<BigInt>
max_integer_nonpositive_with(const UniPoly& p, const BigInt& d_min, RootScan strategy);

// Coefficients rescaled by the (positive) lcm of the denominators; sign of
// the value at any point is unchanged, but evaluation stays in integers.
std::vector<BigInt> scaled_integer_coeffs(const UniPoly& p);

} // namespace polydetail

} // namespace morphbound

#endif
