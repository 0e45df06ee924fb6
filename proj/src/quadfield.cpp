#include "tame/quadfield.hpp"

#include <algorithm>
#include <numeric>

#include "tame/errors.hpp"
#include "tame/fq.hpp"

namespace tame {

namespace {

using i128 = __int128;

long long ll_of(const i128& v) { return static_cast<long long>(v); }

// x*s + y*t = gcd, returned gcd >= 0.
long long ext_gcd(long long x, long long y, long long& s, long long& t) {
    long long old_r = x, r = y, old_s = 1, s1 = 0, old_t = 0, t1 = 1;
    while (r != 0) {
        long long qu = old_r / r;
        long long tmp = old_r - qu * r;
        old_r = r;
        r = tmp;
        tmp = old_s - qu * s1;
        old_s = s1;
        s1 = tmp;
        tmp = old_t - qu * t1;
        old_t = t1;
        t1 = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    s = old_s;
    t = old_t;
    return old_r;
}

// Ideals of the maximal order as Z-modules in the basis (1, w): upper
// triangular Hermite form [[m00, m01], [0, m11]], columns = basis vectors.
struct IdealHNF {
    BigInt m00, m01, m11;
};

struct WBasis {
    BigInt t, n;  // w^2 = t*w + n
};

WBasis w_basis(const BigInt& D) {
    if (bmod(D, BigInt(4)) == 1) return {1, (D - 1) / 4};
    return {0, D / 4};
}

// (x + y*sqrt(D))/2  ->  u + v*w
std::pair<BigInt, BigInt> w_coords(const QuadInt& a, const BigInt& D) {
    if (bmod(D, BigInt(4)) == 1) return {(a.x - a.y) / 2, a.y};
    return {a.x / 2, a.y};
}

IdealHNF hnf_of_columns(std::vector<std::pair<BigInt, BigInt>> cols) {
    BigInt xg = 0, yg = 0;
    for (const auto& [x, y] : cols) {
        if (y == 0) continue;
        BigInt s, t, g;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), yg.get_mpz_t(),
                   y.get_mpz_t());
        xg = s * xg + t * x;
        yg = g;
    }
    if (yg == 0) throw InternalError("ideal basis degenerate");
    BigInt m00 = 0;
    for (const auto& [x, y] : cols) {
        BigInt res = x - (y / yg) * xg;
        mpz_gcd(m00.get_mpz_t(), m00.get_mpz_t(), res.get_mpz_t());
    }
    if (m00 == 0) throw InternalError("ideal basis degenerate");
    return {m00, bmod(xg, m00), yg};
}

IdealHNF ideal_mul(const IdealHNF& a, const IdealHNF& b, const WBasis& w) {
    std::vector<std::pair<BigInt, BigInt>> gens_a{{a.m00, BigInt(0)}, {a.m01, a.m11}};
    std::vector<std::pair<BigInt, BigInt>> gens_b{{b.m00, BigInt(0)}, {b.m01, b.m11}};
    std::vector<std::pair<BigInt, BigInt>> prods;
    for (const auto& [u, v] : gens_a)
        for (const auto& [s, t] : gens_b)
            prods.emplace_back(u * s + w.n * v * t, u * t + v * s + w.t * v * t);
    return hnf_of_columns(std::move(prods));
}

bool ideal_contains(const IdealHNF& id, const BigInt& u, const BigInt& v) {
    if (bmod(v, id.m11) != 0) return false;
    return bmod(u - (v / id.m11) * id.m01, id.m00) == 0;
}

}  // namespace

QuadInt quad_conj(const QuadInt& a) { return {a.x, -a.y}; }

QuadInt quad_mul(const QuadInt& a, const QuadInt& b, const BigInt& D) {
    return {(a.x * b.x + D * a.y * b.y) / 2, (a.x * b.y + a.y * b.x) / 2};
}

BigInt quad_norm(const QuadInt& a, const BigInt& D) { return (a.x * a.x - D * a.y * a.y) / 4; }

bool is_fundamental_discriminant(const BigInt& D) {
    if (D == 0 || D == 1) return false;
    auto squarefree = [](const BigInt& m) {
        for (const auto& [prime, mult] : factorize(m < 0 ? BigInt(-m) : m)) {
            (void)prime;
            if (mult > 1) return false;
        }
        return true;
    };
    BigInt r = bmod(D, BigInt(4));
    if (r == 1) return squarefree(D);
    if (r != 0) return false;
    BigInt m = D / 4, rm = bmod(m, BigInt(4));
    return (rm == 2 || rm == 3) && squarefree(m);
}

QuadClassGroup::QuadClassGroup(const BigInt& D) : D_(D) {
    if (D >= 0 || !is_fundamental_discriminant(D))
        throw NotFundamental("discriminant must be negative and fundamental: " + to_string(D));
    if (-D > 10000000) throw NotFundamental("discriminant magnitude exceeds 10^7");
    const long long d = D.get_si();
    for (long long a = 1; 3 * a * a <= -d; ++a) {
        for (long long b = -a + 1; b <= a; ++b) {
            if (((b - d) % 2) != 0) continue;  // b and D must share parity
            long long num = b * b - d;
            if (num % (4 * a) != 0) continue;
            long long c = num / (4 * a);
            if (c < a) continue;
            if (b < 0 && a == c) continue;  // reduced: b >= 0 when a = c
            long long g = std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c));
            if (g != 1) continue;
            forms_.push_back({a, b, c});
        }
    }
    std::sort(forms_.begin(), forms_.end());
    principal_ = (((d % 2) + 2) % 2 == 1) ? QuadForm{1, 1, (1 - d) / 4}
                                          : QuadForm{1, 0, -d / 4};
}

QuadForm QuadClassGroup::reduce(QuadForm f) const {
    i128 a = f.a, b = f.b, c = f.c;
    const i128 d = D_.get_si();
    for (;;) {
        // normalize b into (-a, a]
        i128 twoa = 2 * a;
        i128 r = b % twoa;
        if (r > a) r -= twoa;
        if (r <= -a) r += twoa;
        c = (r * r - d) / (4 * a);
        b = r;
        if (a > c) {
            i128 t = a;
            a = c;
            b = -b;
            c = t;
            continue;
        }
        if (a == c && b < 0) b = -b;
        break;
    }
    return {ll_of(a), ll_of(b), ll_of(c)};
}

QuadForm QuadClassGroup::compose(const QuadForm& f, const QuadForm& g) const {
    // Find a form g' ~ g with gcd(g'.a, f.a) = 1 by evaluating g at a small
    // primitive vector, then Dirichlet-compose the concordant pair.
    long long x = 0, y = 0;
    i128 ag = 0;
    bool found = false;
    for (long long s = 1; s <= 64 && !found; ++s)
        for (long long xx = -s; xx <= s && !found; ++xx)
            for (long long yy = -s; yy <= s && !found; ++yy) {
                if (std::max(std::llabs(xx), std::llabs(yy)) != s) continue;
                if (std::gcd(std::llabs(xx), std::llabs(yy)) != 1) continue;
                i128 val = i128(g.a) * xx * xx + i128(g.b) * xx * yy + i128(g.c) * yy * yy;
                if (std::gcd(ll_of(val), f.a) == 1) {
                    x = xx;
                    y = yy;
                    ag = val;
                    found = true;
                }
            }
    if (!found) throw InternalError("no concordant transform found");
    long long v, nu;
    ext_gcd(x, y, v, nu);  // x*v + y*nu = 1
    long long u = -nu;     // x*v - y*u = 1
    i128 bg = 2 * (i128(g.a) * x * u + i128(g.c) * y * v) +
              i128(g.b) * (i128(x) * v + i128(y) * u);
    // CRT: B = f.b mod 2 f.a, B = bg mod 2 ag (moduli have gcd 2, residues
    // share parity with D).
    long long s, t;
    long long agl = ll_of(ag);
    ext_gcd(f.a % agl, agl, s, t);
    i128 half_diff = (bg - f.b) / 2;
    i128 k = (half_diff % agl) * (s % agl) % agl;
    i128 B = f.b + 2 * i128(f.a) * k;
    i128 prod = i128(f.a) * agl;
    i128 twoprod = 2 * prod;
    B %= twoprod;
    const i128 d = D_.get_si();
    i128 C = (B * B - d) / (4 * prod);
    QuadForm raw{ll_of(prod), ll_of(B), ll_of(C)};
    return reduce(raw);
}

QuadForm QuadClassGroup::pow(QuadForm f, unsigned long e) const {
    QuadForm r = principal_;
    while (e) {
        if (e & 1) r = compose(r, f);
        e >>= 1;
        if (e) f = compose(f, f);
    }
    return r;
}

QuadForm QuadClassGroup::inverse_of(const QuadForm& f) const {
    return reduce({f.a, -f.b, f.c});
}

unsigned QuadClassGroup::order_of(const QuadForm& f) const {
    QuadForm x = reduce(f);
    unsigned k = 1;
    while (!(x == principal_)) {
        x = compose(x, f);
        ++k;
        if (k > h()) throw InternalError("element order exceeds group order");
    }
    return k;
}

unsigned QuadClassGroup::p_part_order(unsigned p) const {
    unsigned hp = 1, n = h();
    while (n % p == 0) {
        n /= p;
        hp *= p;
    }
    return hp;
}

bool QuadClassGroup::p_part_cyclic(unsigned p) const {
    unsigned hp = p_part_order(p);
    if (hp == 1) return true;
    unsigned m = h() / hp;
    for (const QuadForm& f : forms_)
        if (order_of(pow(f, m)) == hp) return true;
    return false;
}

QuadForm QuadClassGroup::p_part_generator(unsigned p) const {
    unsigned hp = p_part_order(p);
    unsigned m = h() / hp;
    for (const QuadForm& f : forms_) {
        QuadForm g = pow(f, m);
        if (order_of(g) == hp) return g;
    }
    return principal_;  // trivial p-part
}

QuadField::QuadField(const BigInt& D, unsigned p)
    : D_(D),
      p_(p),
      w_(D == -3 ? 6 : (D == -4 ? 4 : 2)),
      delta_F_(p == 3 && D == -3 ? 1 : 0),
      cl_(D) {
    if (p < 3 || !is_prime(BigInt(p)))
        throw ConfigError("p must be an odd prime, got " + std::to_string(p));
    if (cl_.h() % p != 0)
        throw ConfigError("hypothesis violated: the p-class group of disc " + to_string(D) +
                          " is trivial (h = " + std::to_string(cl_.h()) + ")");
    if (!cl_.p_part_cyclic(p))
        throw ConfigError("hypothesis violated: the p-class group of disc " + to_string(D) +
                          " is not cyclic");
}

SplittingType splitting_type(const QuadField& Q, const BigInt& q) {
    if (bmod(Q.D(), q) == 0) return SplittingType::RAMIFIED;
    return kronecker(Q.D(), q) == 1 ? SplittingType::SPLIT : SplittingType::INERT;
}

BigInt prime_form_b(const QuadField& Q, const BigInt& q) {
    if (splitting_type(Q, q) != SplittingType::SPLIT)
        throw PreconditionSplit("prime form root requested at a non-split prime");
    const BigInt& D = Q.D();
    if (q == 2) return 1;  // D = 1 mod 8 here, so b^2 = D mod 8 with b odd
    BigInt r = sqrt_mod(bmod(D, q), q);
    BigInt want = bmod(D, BigInt(2));
    BigInt other = q - r;
    BigInt best = 0;
    for (const BigInt& s : {r, other}) {
        BigInt b = (bmod(s, BigInt(2)) == want) ? s : BigInt(s + q);
        if (best == 0 || b < best) best = b;
    }
    return best;
}

QuadForm class_of_prime(const QuadField& Q, const BigInt& q) {
    switch (splitting_type(Q, q)) {
        case SplittingType::RAMIFIED:
            throw Ramified("prime " + to_string(q) + " ramifies in F");
        case SplittingType::INERT:
            return Q.cl().principal();
        case SplittingType::SPLIT:
            break;
    }
    BigInt b = prime_form_b(Q, q);
    BigInt c = (b * b - Q.D()) / (4 * q);
    return Q.cl().reduce({q.get_si(), b.get_si(), c.get_si()});
}

bool splits_in_F1(const QuadField& Q, const BigInt& q) {
    // The Artin symbol of a prime in the unramified degree-p subextension is
    // its ideal class modulo the index-p subgroup. Inert primes are principal
    // as ideals, so they always split completely in F1.
    if (splitting_type(Q, q) == SplittingType::INERT) return true;
    QuadForm c = class_of_prime(Q, q);  // throws Ramified when q | D
    return Q.cl().pow(c, Q.cl().h() / Q.p()) == Q.cl().principal();
}

AlphaData find_alpha(const QuadField& Q) {
    const BigInt& D = Q.D();
    const unsigned p = Q.p();
    if (Q.cl().h() % p != 0) throw NotApplicable("p-class group is trivial");

    // Smallest-norm split prime whose class has order exactly p.
    BigInt ell = 1;
    QuadForm aclass{};
    for (;;) {
        mpz_nextprime(ell.get_mpz_t(), ell.get_mpz_t());
        if (ell > 100000) throw SearchExhausted("no small prime generates Cl[p]");
        if (splitting_type(Q, ell) != SplittingType::SPLIT) continue;
        QuadForm f = class_of_prime(Q, ell);
        if (Q.cl().order_of(f) == p) {
            aclass = f;
            break;
        }
    }

    const WBasis w = w_basis(D);
    BigInt b = prime_form_b(Q, ell);
    // a = (ell, (-b + sqrt(D))/2) in the (1, w) basis.
    QuadInt second{-b, 1};
    auto [u0, v0] = w_coords(second, D);
    IdealHNF a = hnf_of_columns({{ell, BigInt(0)}, {u0, v0}});
    IdealHNF ap = a;
    for (unsigned i = 1; i < p; ++i) ap = ideal_mul(ap, a, w);

    // Enumerate x^2 + |D| y^2 = 4 ell^p by x ascending, then |y|, -y first.
    BigInt target = 4;
    for (unsigned i = 0; i < p; ++i) target *= ell;
    for (BigInt x = 0; x * x <= target; ++x) {
        BigInt rem = target - x * x;
        if (bmod(rem, BigInt(-D)) != 0) continue;
        BigInt y2 = rem / -D;
        if (mpz_perfect_square_p(y2.get_mpz_t()) == 0) continue;
        BigInt y0;
        mpz_sqrt(y0.get_mpz_t(), y2.get_mpz_t());
        std::vector<BigInt> ys = (y0 == 0) ? std::vector<BigInt>{BigInt(0)}
                                           : std::vector<BigInt>{-y0, y0};
        for (const BigInt& y : ys) {
            if (bmod(x - y * D, BigInt(2)) != 0) continue;  // integrality
            QuadInt cand{x, y};
            auto [cu, cv] = w_coords(cand, D);
            BigInt g;
            mpz_gcd(g.get_mpz_t(), cu.get_mpz_t(), cv.get_mpz_t());
            if (g != 1) continue;  // not primitive
            if (!ideal_contains(ap, cu, cv)) continue;
            return {cand, ell, aclass};
        }
    }
    throw SearchExhausted("no generator of a^p found despite valid class data");
}

std::optional<unsigned> residue_character(const QuadField& Q, const QuadInt& beta,
                                          const BigInt& q, RootChoice root,
                                          unsigned char_scale) {
    const BigInt& D = Q.D();
    const unsigned p = Q.p();
    BigInt nb = quad_norm(beta, D);
    if (bmod(BigInt(p * D * nb), q) == 0)
        throw BadPrime("prime " + to_string(q) + " divides p*D*N(beta)");
    QuadInt b = (root == RootChoice::CONJUGATE) ? quad_conj(beta) : beta;
    SplittingType st = splitting_type(Q, q);
    if (st == SplittingType::SPLIT) {
        if (bmod(q - 1, BigInt(p)) != 0) return std::nullopt;
        BigInt r = bmod(prime_form_b(Q, q), q);
        BigInt inv2 = inv_mod(BigInt(2), q);
        BigInt val = bmod((b.x + b.y * r) * inv2, q);
        ResidueCharacter chi(q, 1, 0, 0, p);
        return chi(fq1(q, val), char_scale);
    }
    // INERT: residue field F_{q^2}.
    if (bmod(q * q - 1, BigInt(p)) != 0) return std::nullopt;
    if (q == 2) {
        // x^2 - D is not separable mod 2; present the field on the basis
        // (1, w) instead, with the minimal polynomial of w = (1 + sqrt(D))/2.
        BigInt m0 = bmod((1 - D) / 4, BigInt(2)), m1 = 1;
        auto [u, v] = w_coords(b, D);
        ResidueCharacter chi(q, 2, m0, m1, p);
        return chi(fq2(q, m0, m1, u, v), char_scale);
    }
    BigInt m0 = bmod(-D, q);  // modulus x^2 - D
    BigInt inv2 = inv_mod(BigInt(2), q);
    ResidueCharacter chi(q, 2, m0, 0, p);
    return chi(fq2(q, m0, 0, bmod(b.x * inv2, q), bmod(b.y * inv2, q)), char_scale);
}

unsigned d_rank(const QuadField& Q, const QuadInt& alpha, const BigInt& q, RootChoice root) {
    auto chi_alpha = residue_character(Q, alpha, q, root);
    if (!chi_alpha) return 1;  // residue norm not 1 mod p: no tame p-extension
    if (*chi_alpha != 0) return 1;
    if (Q.torsion_w() > 2) {
        // Character of the torsion unit: zeta_4 for D=-4, zeta_6 for D=-3.
        QuadInt t = (Q.D() == -4) ? QuadInt{0, 1} : QuadInt{1, 1};
        auto chi_t = residue_character(Q, t, q, root);
        if (!chi_t || *chi_t != 0) return 1;
    }
    return 2;
}

}  // namespace tame
