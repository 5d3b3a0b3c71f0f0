#ifndef MORPHBOUND_MULTIPOLY_HPP
#define MORPHBOUND_MULTIPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "morphbound/rational.hpp"

namespace morphbound {

inline constexpr int kNumVars = 5;

struct Monomial {
    std::array<int, kNumVars> exp{};

    int total_degree() const {
        int t = 0;
        for (int e : exp) t += e;
        return t;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic order, largest first: higher total degree wins, ties
// break lexicographically with x0 > x1 > ... > x4. A monomial order, so the
// leading term of a product is the product of leading terms.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db) return da > db;
        return a.exp > b.exp;
    }
};

// Homogeneous polynomial in five variables over Q. The degree is part of the
// value even when there are no terms, so the zero polynomial of each degree
// is representable and addition can insist on matching degrees.
class HomogeneousPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    static HomogeneousPoly zero(int degree);
    static HomogeneousPoly one() { return term(Rational(1), Monomial{}); }
    static HomogeneousPoly term(Rational c, const Monomial& m);
    static HomogeneousPoly variable_power(int var, int power);
    static HomogeneousPoly from_terms(int degree, TermMap terms);

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Leading term under grlex; contract error when zero.
    std::pair<Monomial, Rational> leading_term() const;

    Rational eval(const std::array<Rational, kNumVars>& point) const;

    // Evaluation in GF(prime); every coefficient denominator must be
    // invertible mod prime. Used only to hunt for counterexample points.
    std::uint64_t eval_mod(const std::array<std::uint64_t, kNumVars>& point,
                           std::uint64_t prime) const;

    HomogeneousPoly operator-() const;
    HomogeneousPoly scaled(const Rational& c) const;

    friend HomogeneousPoly operator+(const HomogeneousPoly& a, const HomogeneousPoly& b);
    friend HomogeneousPoly operator-(const HomogeneousPoly& a, const HomogeneousPoly& b);
    friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b);
    friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        return !(a == b);
    }

    std::string str() const;

private:
    explicit HomogeneousPoly(int degree) : degree_(degree) {}
    void insert_term(const Monomial& m, const Rational& c);

    int degree_ = 0;
    TermMap terms_;
};

// Quotient a / b when it divides exactly, nullopt otherwise. Works by
// repeated leading-term elimination, which for a domain with a monomial
// order succeeds precisely on exact multiples. b must be nonzero.
std::optional<HomogeneousPoly> exact_divide(const HomogeneousPoly& a, const HomogeneousPoly& b);

} // namespace morphbound

#endif
