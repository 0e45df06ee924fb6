#ifndef TAME_POLY_HPP
#define TAME_POLY_HPP

#include "tame/numeric.hpp"

namespace tame {

// Polynomial with rational coefficients, ascending order (c[k] multiplies
// x^k). Trailing zeros are stripped; the zero polynomial has empty storage and
// degree -1.
struct RatPoly {
    std::vector<Rational> c;

    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { normalize(); }

    int degree() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Rational& lead() const { return c.back(); }
    void normalize() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    Rational coeff(size_t k) const { return k < c.size() ? c[k] : Rational(0); }
    bool operator==(const RatPoly& o) const { return c == o.c; }
};

RatPoly rp_add(const RatPoly& a, const RatPoly& b);
RatPoly rp_sub(const RatPoly& a, const RatPoly& b);
RatPoly rp_mul(const RatPoly& a, const RatPoly& b);
RatPoly rp_scale(const RatPoly& a, const Rational& s);
// Quotient and remainder; divisor must be nonzero.
std::pair<RatPoly, RatPoly> rp_divmod(const RatPoly& a, const RatPoly& b);
RatPoly rp_mod(const RatPoly& a, const RatPoly& b);
Rational rp_eval(const RatPoly& a, const Rational& x);
RatPoly rp_derivative(const RatPoly& a);
// g(h) reduced mod f.
RatPoly rp_compose_mod(const RatPoly& g, const RatPoly& h, const RatPoly& f);

// Exact resultant Res(a, b) by the Euclidean recursion over Q.
Rational resultant(const RatPoly& a, const RatPoly& b);
Rational discriminant(const RatPoly& f);

// Number of distinct real roots, by Sturm's theorem (f need not be
// squarefree; the squarefree part is used).
int sturm_real_roots(const RatPoly& f);

// Polynomial over F_q, q a prime BigInt; coefficients reduced to [0, q).
struct FpPoly {
    BigInt q;
    std::vector<BigInt> c;

    int degree() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void normalize();
    bool operator==(const FpPoly& o) const { return q == o.q && c == o.c; }
    bool operator<(const FpPoly& o) const;  // canonical order: (degree, coeffs lex)
};

FpPoly fp_from_rat(const RatPoly& a, const BigInt& q);  // BadPrime if a denominator vanishes mod q
FpPoly fp_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b);
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b);
FpPoly fp_mod(const FpPoly& a, const FpPoly& b);
FpPoly fp_gcd(FpPoly a, FpPoly b);  // monic gcd
FpPoly fp_monic(const FpPoly& a);
FpPoly fp_powmod(const FpPoly& base, const BigInt& e, const FpPoly& f);
BigInt fp_eval(const FpPoly& a, const BigInt& x);

// Factor f mod q into monic irreducibles (distinct-degree then equal-degree
// splitting, deterministic PRNG seeded from (f, q)), returned in the canonical
// order: ascending degree, then ascending lexicographic coefficient vector
// (constant term first). The caller asserts q is unramified for f: a repeated
// factor raises RamifiedModulus, as does q dividing the leading coefficient.
std::vector<FpPoly> factor_mod(const RatPoly& f, const BigInt& q);

}  // namespace tame

#endif
