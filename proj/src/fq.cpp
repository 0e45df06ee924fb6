#include "tame/fq.hpp"

namespace tame {

namespace {

BigInt mod(const BigInt& a, const BigInt& q) {
    BigInt r = a % q;
    if (r < 0) r += q;
    return r;
}

void check_compatible(const FqElement& a, const FqElement& b) {
    if (a.q != b.q || a.e != b.e || (a.e == 2 && (a.m0 != b.m0 || a.m1 != b.m1)))
        throw InternalError("mixed residue fields in Fq arithmetic");
}

}  // namespace

FqElement fq1(const BigInt& q, const BigInt& value) {
    FqElement r;
    r.q = q;
    r.e = 1;
    r.c0 = mod(value, q);
    return r;
}

FqElement fq2(const BigInt& q, const BigInt& m0, const BigInt& m1, const BigInt& c0,
              const BigInt& c1) {
    FqElement r;
    r.q = q;
    r.e = 2;
    r.m0 = mod(m0, q);
    r.m1 = mod(m1, q);
    r.c0 = mod(c0, q);
    r.c1 = mod(c1, q);
    return r;
}

bool fq_eq(const FqElement& a, const FqElement& b) {
    check_compatible(a, b);
    return a.c0 == b.c0 && a.c1 == b.c1;
}

FqElement fq_add(const FqElement& a, const FqElement& b) {
    check_compatible(a, b);
    FqElement r = a;
    r.c0 = mod(a.c0 + b.c0, a.q);
    r.c1 = mod(a.c1 + b.c1, a.q);
    return r;
}

FqElement fq_mul(const FqElement& a, const FqElement& b) {
    check_compatible(a, b);
    FqElement r = a;
    if (a.e == 1) {
        r.c0 = mod(a.c0 * b.c0, a.q);
        return r;
    }
    // (a0 + a1 x)(b0 + b1 x) with x^2 = -m1 x - m0
    BigInt t2 = a.c1 * b.c1;
    r.c0 = mod(a.c0 * b.c0 - t2 * a.m0, a.q);
    r.c1 = mod(a.c0 * b.c1 + a.c1 * b.c0 - t2 * a.m1, a.q);
    return r;
}

FqElement fq_inv(const FqElement& a) {
    if (a.is_zero()) throw InternalError("inverse of zero residue");
    FqElement r = a;
    if (a.e == 1) {
        BigInt inv;
        if (!mpz_invert(inv.get_mpz_t(), a.c0.get_mpz_t(), a.q.get_mpz_t()))
            throw InternalError("non-invertible residue (modulus not prime?)");
        r.c0 = inv;
        return r;
    }
    // Solve (c0 + c1 x)(d0 + d1 x) = 1: the 2x2 linear system over F_q is
    //   c0 d0 - m0 c1 d1 = 1
    //   c1 d0 + (c0 - m1 c1) d1 = 0
    BigInt det = mod(a.c0 * (a.c0 - a.m1 * a.c1) + a.m0 * a.c1 * a.c1, a.q);
    BigInt det_inv;
    if (!mpz_invert(det_inv.get_mpz_t(), det.get_mpz_t(), a.q.get_mpz_t()))
        throw InternalError("non-invertible quadratic residue element");
    r.c0 = mod((a.c0 - a.m1 * a.c1) * det_inv, a.q);
    r.c1 = mod(-a.c1 * det_inv, a.q);
    return r;
}

FqElement fq_pow(const FqElement& a, const BigInt& k) {
    if (k < 0) return fq_pow(fq_inv(a), -k);
    FqElement r = a;
    r.c0 = 1;
    r.c1 = 0;
    FqElement b = a;
    size_t bits = mpz_sizeinbase(k.get_mpz_t(), 2);
    if (k == 0) return r;
    for (size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(k.get_mpz_t(), i)) r = fq_mul(r, b);
        if (i + 1 < bits) b = fq_mul(b, b);
    }
    return r;
}

namespace {

bool is_generator(const FqElement& g, const BigInt& order,
                  const std::vector<std::pair<BigInt, unsigned>>& order_factors) {
    if (g.is_zero()) return false;
    for (const auto& [ell, mult] : order_factors) {
        (void)mult;
        if (fq_pow(g, order / ell).is_one()) return false;
    }
    return true;
}

}  // namespace

FqElement smallest_primitive_root(const BigInt& q, unsigned e, const BigInt& m0,
                                  const BigInt& m1) {
    if (e != 1 && e != 2) throw ConfigError("extension degree must be 1 or 2");
    BigInt order = (e == 1 ? BigInt(q - 1) : BigInt(q * q - 1));
    if (order == 0) throw ConfigError("trivial multiplicative group");
    auto factors = factorize(order);
    if (e == 1) {
        for (BigInt c = 1; c < q; ++c) {
            FqElement g = fq1(q, c);
            if (is_generator(g, order, factors)) return g;
        }
    } else {
        for (BigInt a = 0; a < q; ++a) {
            if (a == 0) {
                // On the c0 = 0 row, (b·x)^{(q^2-1)/l} = x^{(q^2-1)/l} for
                // every prime l | q+1, since (q-1) divides (q^2-1)/l and the
                // b-part dies. One failure of x there kills the whole row, so
                // test x once instead of scanning q-1 doomed candidates.
                FqElement xbar = fq2(q, m0, m1, 0, 1);
                bool dead = false;
                for (const auto& [ell, mult] : factors) {
                    (void)mult;
                    if ((q + 1) % ell != 0) continue;
                    if (fq_pow(xbar, order / ell).is_one()) {
                        dead = true;
                        break;
                    }
                }
                if (dead) continue;
            }
            for (BigInt b = 0; b < q; ++b) {
                if (a == 0 && b == 0) continue;
                FqElement g = fq2(q, m0, m1, a, b);
                if (is_generator(g, order, factors)) return g;
            }
        }
    }
    throw InternalError("no primitive root found (modulus reducible?)");
}

ResidueCharacter::ResidueCharacter(const BigInt& q, unsigned e, const BigInt& m0,
                                   const BigInt& m1, unsigned p)
    : p_(p) {
    BigInt order = (e == 1 ? BigInt(q - 1) : BigInt(q * q - 1));
    defined_ = (order % p == 0);
    if (!defined_) return;
    exponent_ = order / p;
    FqElement g = smallest_primitive_root(q, e, m0, m1);
    FqElement zeta = fq_pow(g, exponent_);
    FqElement acc = zeta;
    acc.c0 = 1;
    acc.c1 = 0;
    for (unsigned k = 0; k < p; ++k) {
        zeta_pows_.push_back(acc);
        acc = fq_mul(acc, zeta);
    }
}

std::optional<unsigned> ResidueCharacter::operator()(const FqElement& beta,
                                                     unsigned char_scale) const {
    if (!defined_) return std::nullopt;
    if (beta.is_zero()) throw InternalError("power residue character of zero");
    FqElement t = fq_pow(beta, exponent_);
    for (unsigned k = 0; k < p_; ++k)
        if (fq_eq(t, zeta_pows_[k])) return (k * char_scale) % p_;
    throw InternalError("residue is not a p-power root of unity");
}

std::optional<unsigned> power_residue_value(const FqElement& beta, unsigned p,
                                            unsigned char_scale) {
    ResidueCharacter chi(beta.q, beta.e, beta.m0, beta.m1, p);
    return chi(beta, char_scale);
}

}  // namespace tame
