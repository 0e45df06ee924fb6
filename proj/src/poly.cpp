#include "tame/poly.hpp"

#include <algorithm>

namespace tame {

// --- rational polynomials ---

RatPoly rp_add(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> c(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return RatPoly(std::move(c));
}

RatPoly rp_sub(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> c(std::max(a.c.size(), b.c.size()), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return RatPoly(std::move(c));
}

RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rational> c(a.c.size() + b.c.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
    return RatPoly(std::move(c));
}

RatPoly rp_scale(const RatPoly& a, const Rational& s) {
    std::vector<Rational> c(a.c);
    for (auto& x : c) x *= s;
    return RatPoly(std::move(c));
}

std::pair<RatPoly, RatPoly> rp_divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw InternalError("polynomial division by zero");
    RatPoly r = a;
    std::vector<Rational> qc;
    int db = b.degree();
    if (r.degree() >= db) qc.assign(size_t(r.degree() - db) + 1, Rational(0));
    while (r.degree() >= db) {
        Rational f = r.lead() / b.lead();
        int shift = r.degree() - db;
        qc[size_t(shift)] = f;
        for (int i = 0; i <= db; ++i) r.c[size_t(i + shift)] -= f * b.c[size_t(i)];
        r.normalize();
    }
    return {RatPoly(std::move(qc)), r};
}

RatPoly rp_mod(const RatPoly& a, const RatPoly& b) { return rp_divmod(a, b).second; }

Rational rp_eval(const RatPoly& a, const Rational& x) {
    Rational r(0);
    for (size_t i = a.c.size(); i-- > 0;) r = r * x + a.c[i];
    return r;
}

RatPoly rp_derivative(const RatPoly& a) {
    if (a.degree() < 1) return RatPoly();
    std::vector<Rational> c(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) c[i - 1] = a.c[i] * Rational(BigInt(i));
    return RatPoly(std::move(c));
}

RatPoly rp_compose_mod(const RatPoly& g, const RatPoly& h, const RatPoly& f) {
    RatPoly acc;  // Horner over the coefficients of g
    for (size_t i = g.c.size(); i-- > 0;) {
        acc = rp_mul(acc, h);
        if (g.c[i] != 0) acc = rp_add(acc, RatPoly({g.c[i]}));
        acc = rp_mod(acc, f);
    }
    return acc;
}

namespace {

Rational rational_pow(const Rational& base, unsigned k) {
    Rational r(1);
    for (unsigned i = 0; i < k; ++i) r *= base;
    return r;
}

}  // namespace

Rational resultant(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return Rational(0);
    if (a.degree() == 0) return rational_pow(a.lead(), unsigned(b.degree()));
    if (b.degree() == 0) return rational_pow(b.lead(), unsigned(a.degree()));
    if (a.degree() < b.degree()) {
        Rational sign = (unsigned(a.degree()) * unsigned(b.degree())) % 2 ? Rational(-1)
                                                                          : Rational(1);
        return sign * resultant(b, a);
    }
    RatPoly r = rp_mod(a, b);
    if (r.is_zero()) return Rational(0);
    Rational sign = (unsigned(a.degree()) * unsigned(b.degree())) % 2 ? Rational(-1)
                                                                      : Rational(1);
    return sign * rational_pow(b.lead(), unsigned(a.degree() - r.degree())) * resultant(b, r);
}

Rational discriminant(const RatPoly& f) {
    int n = f.degree();
    if (n < 1) throw ConfigError("discriminant needs degree >= 1");
    Rational res = resultant(f, rp_derivative(f));
    Rational sign = (unsigned(n) * unsigned(n - 1) / 2) % 2 ? Rational(-1) : Rational(1);
    return sign * res / f.lead();
}

namespace {

int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Sign of p(x) as x -> +inf (dir=+1) or -inf (dir=-1).
int sign_at_inf(const RatPoly& p, int dir) {
    if (p.is_zero()) return 0;
    int s = sign_of(p.lead());
    if (dir < 0 && p.degree() % 2 == 1) s = -s;
    return s;
}

int sign_changes(const std::vector<int>& signs) {
    int changes = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = rp_mod(a, b);
        a = b;
        b = r;
    }
    if (!a.is_zero()) a = rp_scale(a, Rational(1) / a.lead());
    return a;
}

}  // namespace

int sturm_real_roots(const RatPoly& f) {
    if (f.degree() < 1) return 0;
    RatPoly g = rat_gcd(f, rp_derivative(f));
    RatPoly sq = g.degree() > 0 ? rp_divmod(f, g).first : f;  // squarefree part
    std::vector<RatPoly> chain{sq, rp_derivative(sq)};
    while (!chain.back().is_zero() && chain.back().degree() > 0) {
        RatPoly r = rp_mod(chain[chain.size() - 2], chain.back());
        chain.push_back(rp_scale(r, Rational(-1)));
    }
    std::vector<int> lo, hi;
    for (const auto& p : chain) {
        lo.push_back(sign_at_inf(p, -1));
        hi.push_back(sign_at_inf(p, +1));
    }
    return sign_changes(lo) - sign_changes(hi);
}

// --- polynomials over F_q ---

void FpPoly::normalize() {
    for (auto& x : c) x = bmod(x, q);
    while (!c.empty() && c.back() == 0) c.pop_back();
}

bool FpPoly::operator<(const FpPoly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    return std::lexicographical_compare(c.begin(), c.end(), o.c.begin(), o.c.end());
}

FpPoly fp_from_rat(const RatPoly& a, const BigInt& q) {
    FpPoly r;
    r.q = q;
    r.c.reserve(a.c.size());
    for (const auto& x : a.c) {
        BigInt den = bmod(denominator(x), q);
        if (den == 0) throw BadPrime("denominator vanishes mod " + to_string(q));
        r.c.push_back(bmod(bmod(numerator(x), q) * inv_mod(den, q), q));
    }
    r.normalize();
    return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
    FpPoly r;
    r.q = a.q;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    }
    r.normalize();
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
    FpPoly r;
    r.q = a.q;
    r.c.assign(std::max(a.c.size(), b.c.size()), BigInt(0));
    for (size_t i = 0; i < r.c.size(); ++i) {
        BigInt av = i < a.c.size() ? a.c[i] : BigInt(0);
        BigInt bv = i < b.c.size() ? b.c[i] : BigInt(0);
        r.c[i] = av - bv;
    }
    r.normalize();
    return r;
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw InternalError("polynomial division by zero mod q");
    FpPoly r = a, quo;
    quo.q = a.q;
    int db = b.degree();
    BigInt lead_inv = inv_mod(b.c.back(), a.q);
    if (r.degree() >= db) quo.c.assign(size_t(r.degree() - db) + 1, BigInt(0));
    while (r.degree() >= db) {
        BigInt f = bmod(r.c.back() * lead_inv, a.q);
        int shift = r.degree() - db;
        quo.c[size_t(shift)] = f;
        for (int i = 0; i <= db; ++i)
            r.c[size_t(i + shift)] = bmod(r.c[size_t(i + shift)] - f * b.c[size_t(i)], a.q);
        r.normalize();
    }
    quo.normalize();
    return {quo, r};
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b) { return fp_divmod(a, b).second; }

FpPoly fp_monic(const FpPoly& a) {
    if (a.is_zero()) return a;
    FpPoly r = a;
    BigInt inv = inv_mod(a.c.back(), a.q);
    for (auto& x : r.c) x = bmod(x * inv, a.q);
    return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = fp_mod(a, b);
        a = b;
        b = r;
    }
    return fp_monic(a);
}

FpPoly fp_powmod(const FpPoly& base, const BigInt& e, const FpPoly& f) {
    FpPoly r;
    r.q = base.q;
    r.c = {BigInt(1)};
    FpPoly b = fp_mod(base, f);
    size_t bits = e > 0 ? mpz_sizeinbase(e.get_mpz_t(), 2) : 0;
    for (size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_mod(fp_mul(r, b), f);
        if (i + 1 < bits) b = fp_mod(fp_mul(b, b), f);
    }
    return r;
}

BigInt fp_eval(const FpPoly& a, const BigInt& x) {
    BigInt r = 0;
    for (size_t i = a.c.size(); i-- > 0;) r = bmod(r * x + a.c[i], a.q);
    return r;
}

namespace {

FpPoly fp_x(const BigInt& q) {
    FpPoly r;
    r.q = q;
    r.c = {BigInt(0), BigInt(1)};
    return r;
}

FpPoly fp_const(const BigInt& q, const BigInt& v) {
    FpPoly r;
    r.q = q;
    r.c = {bmod(v, q)};
    r.normalize();
    return r;
}

FpPoly fp_derivative(const FpPoly& a) {
    FpPoly r;
    r.q = a.q;
    if (a.degree() < 1) return r;
    r.c.assign(a.c.size() - 1, BigInt(0));
    for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = bmod(a.c[i] * BigInt(i), a.q);
    r.normalize();
    return r;
}

// Equal-degree splitting (Cantor-Zassenhaus) of a squarefree product of
// irreducibles all of degree d, odd q. The PRNG is shared across the whole
// factorization so the split is a deterministic function of (f, q).
void edf(const FpPoly& g, int d, SplitMix64& rng, std::vector<FpPoly>& out) {
    if (g.degree() == d) {
        out.push_back(fp_monic(g));
        return;
    }
    const BigInt& q = g.q;
    BigInt qd = 1;
    for (int i = 0; i < d; ++i) qd *= q;
    BigInt e = (qd - 1) / 2;
    while (true) {
        FpPoly r;
        r.q = q;
        r.c.assign(size_t(g.degree()), BigInt(0));
        for (auto& x : r.c) x = BigInt(rng.next()) % q;
        r.normalize();
        if (r.degree() < 1) continue;
        FpPoly h = fp_powmod(r, e, g);
        if (h.is_zero()) continue;
        h.c[0] = bmod(h.c[0] - 1, q);
        h.normalize();
        FpPoly d1 = fp_gcd(h, g);
        if (d1.degree() <= 0 || d1.degree() == g.degree()) continue;
        edf(d1, d, rng, out);
        edf(fp_divmod(g, d1).first, d, rng, out);
        return;
    }
}

// Exhaustive factorization used only for q = 2 (Cantor-Zassenhaus above needs
// odd q); degrees in this project are at most 6 so trial division over the
// 2^d monic candidates is instant.
std::vector<FpPoly> factor_mod2(FpPoly f) {
    std::vector<FpPoly> out;
    const BigInt q = 2;
    for (int d = 1; d <= f.degree(); ++d) {
        for (uint64_t mask = 0; mask < (uint64_t(1) << d) && d <= f.degree(); ++mask) {
            FpPoly cand;
            cand.q = q;
            for (int i = 0; i < d; ++i) cand.c.push_back(BigInt((mask >> i) & 1));
            cand.c.push_back(BigInt(1));
            bool divides = true;
            while (divides && f.degree() >= d) {
                auto [quo, rem] = fp_divmod(f, cand);
                if (rem.is_zero()) {
                    out.push_back(cand);
                    f = quo;
                } else {
                    divides = false;
                }
            }
        }
    }
    if (f.degree() > 0) out.push_back(fp_monic(f));
    return out;
}

}  // namespace

std::vector<FpPoly> factor_mod(const RatPoly& f, const BigInt& q) {
    if (f.is_zero()) throw InternalError("factor_mod of the zero polynomial");
    if (bmod(numerator(f.lead()), q) == 0 || bmod(denominator(f.lead()), q) == 0)
        throw RamifiedModulus("leading coefficient vanishes mod " + to_string(q));
    FpPoly fs = fp_monic(fp_from_rat(f, q));
    FpPoly der = fp_derivative(fs);
    if (der.is_zero() || fp_gcd(fs, der).degree() != 0)
        throw RamifiedModulus("repeated factor mod " + to_string(q));

    std::vector<FpPoly> out;
    if (q == 2) {
        out = factor_mod2(fs);
    } else {
        uint64_t seed = fnv1a(to_string(q).data(), to_string(q).size());
        for (const auto& cf : f.c) {
            std::string s = to_string(cf);
            seed = fnv1a(s.data(), s.size(), seed);
        }
        SplitMix64 rng(seed);
        // distinct-degree splitting
        FpPoly w = fp_mod(fp_x(q), fs);
        FpPoly rest = fs;
        for (int d = 1; rest.degree() >= 2 * d; ++d) {
            w = fp_powmod(w, q, rest);
            FpPoly g = fp_gcd(fp_sub(w, fp_mod(fp_x(q), rest)), rest);
            if (g.degree() > 0) {
                edf(g, d, rng, out);
                rest = fp_divmod(rest, g).first;
                w = fp_mod(w, rest);
            }
        }
        if (rest.degree() > 0) out.push_back(fp_monic(rest));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tame
