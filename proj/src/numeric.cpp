#include "tame/numeric.hpp"

#include <algorithm>
#include <array>

namespace tame {

std::string to_string(const BigInt& n) { return n.get_str(); }

std::string to_string(const Rational& r) {
    Rational c(r);
    c.canonicalize();
    return c.get_str();
}

BigInt parse_bigint(const std::string& s) {
    mpz_class v;
    if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw ConfigError("not a decimal integer: '" + s + "'");
    return v;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_bigint(s));
    BigInt num = parse_bigint(s.substr(0, slash));
    BigInt den = parse_bigint(s.substr(slash + 1));
    if (den == 0) throw ConfigError("zero denominator: '" + s + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

BigInt bmod(const BigInt& a, const BigInt& q) {
    BigInt r = a % q;
    if (r < 0) r += q;
    return r;
}

BigInt inv_mod(const BigInt& a, const BigInt& q) {
    BigInt r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t()))
        throw InternalError("non-invertible residue mod " + to_string(q));
    return r;
}

BigInt powmod(BigInt base, const BigInt& exp, const BigInt& mod) {
    BigInt r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

BigInt sqrt_mod(const BigInt& a, const BigInt& q) {
    BigInt v = bmod(a, q);
    if (v == 0) return 0;
    if (powmod(v, (q - 1) / 2, q) != 1) throw InternalError("non-residue in sqrt_mod");
    BigInt root;
    if (bmod(q, 4) == 3) {
        root = powmod(v, (q + 1) / 4, q);
    } else {
        // Tonelli-Shanks: q - 1 = s * 2^e with s odd.
        BigInt s = q - 1;
        unsigned long e = 0;
        while (s % 2 == 0) {
            s /= 2;
            ++e;
        }
        BigInt n = 2;
        while (powmod(n, (q - 1) / 2, q) == 1) ++n;
        BigInt x = powmod(v, (s + 1) / 2, q), b = powmod(v, s, q), g = powmod(n, s, q);
        unsigned long r = e;
        while (b != 1) {
            BigInt t = b;
            unsigned long m = 0;
            while (t != 1) {
                t = t * t % q;
                ++m;
            }
            for (unsigned long i = 0; i + 1 < r - m; ++i) g = g * g % q;
            x = x * g % q;
            g = g * g % q;
            b = b * g % q;
            r = m;
        }
        root = x;
    }
    return std::min(root, BigInt(q - root));
}

namespace {

// one Miller-Rabin round; n odd > 2, n - 1 = d * 2^s
bool mr_round(const BigInt& n, const BigInt& d, unsigned s, const BigInt& base) {
    BigInt a = base % n;
    if (a <= 1) return true;
    BigInt x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace

bool is_prime(const BigInt& n) {
    if (n < 0) throw ConfigError("is_prime: negative input");
    if (n < 2) return false;
    static const std::array<unsigned, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (unsigned b : kBases) {
        if (n == b) return true;
        if (n % b == 0) return false;
    }
    BigInt d = n - 1;
    unsigned s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }
    for (unsigned b : kBases)
        if (!mr_round(n, d, s, BigInt(b))) return false;
    static const BigInt kDeterministicBound("3317044064679887385961981");
    if (n < kDeterministicBound) return true;
    SplitMix64 rng(fnv1a(n.get_str().data(), n.get_str().size()));
    for (int i = 0; i < 64; ++i) {
        BigInt base = BigInt(rng.next()) % (n - 3) + 2;
        if (!mr_round(n, d, s, base)) return false;
    }
    return true;
}

std::vector<uint64_t> prime_sieve(uint64_t bound) {
    std::vector<uint64_t> out;
    if (bound < 2) return out;
    std::vector<bool> comp(bound + 1, false);
    for (uint64_t i = 2; i <= bound; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (uint64_t j = i * i; j <= bound; j += i) comp[j] = true;
    }
    return out;
}

int kronecker(const BigInt& D, const BigInt& n) {
    return mpz_kronecker(D.get_mpz_t(), n.get_mpz_t());
}

namespace {

BigInt pollard_brent(const BigInt& n, uint64_t seed) {
    // Brent's cycle variant of Pollard rho; n odd composite, not a prime power.
    SplitMix64 rng(seed);
    while (true) {
        BigInt y = BigInt(rng.next()) % n;
        BigInt c = BigInt(rng.next()) % n + 1;
        BigInt m = 128, g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (BigInt i = 0; i < r; ++i) y = (y * y + c) % n;
            BigInt k = 0;
            while (k < r && g == 1) {
                ys = y;
                BigInt lim = std::min(m, BigInt(r - k));
                for (BigInt i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            do {
                ys = (ys * ys + c) % n;
                BigInt d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(BigInt n, std::vector<BigInt>& primes, int depth) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    if (depth > 64 || mpz_sizeinbase(n.get_mpz_t(), 2) > 126)
        throw FactorizationTooHard("composite cofactor " + n.get_str());
    BigInt d = pollard_brent(n, fnv1a(n.get_str().data(), n.get_str().size(), 42));
    factor_into(d, primes, depth + 1);
    factor_into(n / d, primes, depth + 1);
}

}  // namespace

std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n) {
    if (n <= 0) throw ConfigError("factorize: input must be positive");
    BigInt m = n;
    std::vector<BigInt> primes;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        while (m % p == 0) {
            primes.emplace_back(p);
            m /= p;
        }
    }
    for (unsigned long p = 17; p <= 10000 && BigInt(p) * p <= m; p += 2) {
        while (m % p == 0) {
            primes.emplace_back(p);
            m /= p;
        }
    }
    factor_into(m, primes, 0);
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<BigInt, unsigned>> out;
    for (const auto& p : primes) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    }
    return out;
}

uint64_t fnv1a(const void* data, size_t n, uint64_t h) {
    const auto* b = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        h ^= b[i];
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace tame
