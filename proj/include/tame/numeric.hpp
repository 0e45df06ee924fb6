#ifndef TAME_NUMERIC_HPP
#define TAME_NUMERIC_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tame/errors.hpp"

namespace tame {

// Arbitrary-precision integers and rationals. Backed by GMP; values are
// immutable by convention once handed across module boundaries. Rationals are
// kept canonical (reduced, positive denominator) by mpq semantics.
using BigInt = mpz_class;
using Rational = mpq_class;

// --- serialization (decimal strings: "-123"; rationals "7/3", integers "7") ---

std::string to_string(const BigInt& n);
std::string to_string(const Rational& r);
BigInt parse_bigint(const std::string& s);
Rational parse_rational(const std::string& s);

inline BigInt numerator(const Rational& r) { return r.get_num(); }
inline BigInt denominator(const Rational& r) { return r.get_den(); }

// --- modular arithmetic ---

// Least nonnegative residue of a mod q (q > 0).
BigInt bmod(const BigInt& a, const BigInt& q);

// Inverse of a mod q; InternalError if not invertible.
BigInt inv_mod(const BigInt& a, const BigInt& q);

BigInt powmod(BigInt base, const BigInt& exp, const BigInt& mod);

// A square root of a mod odd prime q (Tonelli-Shanks), least of the pair;
// InternalError when a is a non-residue.
BigInt sqrt_mod(const BigInt& a, const BigInt& q);

// --- primality / factorization ---

// Deterministic below 3.317e24 via the fixed Miller-Rabin base set
// {2,3,5,7,11,13,17,19,23,29,31,37} (Sorenson & Webster's verified bound);
// above that, the same bases plus 64 further rounds with bases drawn from a
// splitmix64 stream seeded by n, giving error probability < 4^-64 = 2^-128.
bool is_prime(const BigInt& n);

// Ascending list of primes <= bound.
std::vector<uint64_t> prime_sieve(uint64_t bound);

// Kronecker symbol (D/n).
int kronecker(const BigInt& D, const BigInt& n);

// Prime factorization by trial division then Pollard rho (Brent variant).
// Throws FactorizationTooHard if a composite cofactor > 2^126 resists; at this
// project's scale (group orders < 2^70) that cannot trigger.
std::vector<std::pair<BigInt, unsigned>> factorize(const BigInt& n);

// --- deterministic PRNG (splitmix64): reproducible randomized algorithms ---

struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, m), m > 0, by rejection
    uint64_t below(uint64_t m) {
        uint64_t lim = ~0ULL - ~0ULL % m;
        uint64_t v;
        do {
            v = next();
        } while (v >= lim);
        return v % m;
    }
};

uint64_t fnv1a(const void* data, size_t n, uint64_t h = 1469598103934665603ULL);

}  // namespace tame

#endif
