#ifndef TAME_BUNDLE_HPP
#define TAME_BUNDLE_HPP

#include <string>
#include <utility>
#include <vector>

#include "tame/poly.hpp"
#include "tame/quadfield.hpp"

namespace tame {

// Defining data of the degree-p unramified cyclic extension F1/F presented as
// an absolute field Q(theta): monic integral f, the image of sqrt(D) as a
// polynomial in theta, and a polynomial realizing a generator of Gal(F1/F).
struct NumberFieldSpec {
    RatPoly f;
    RatPoly sqrtD;
    RatPoly sigma;
};

// Externally produced arithmetic data for F1. Every claim is re-verified by
// validate_bundle; nothing here is trusted as-is.
struct FieldDataBundle {
    unsigned p = 0;
    BigInt disc;
    NumberFieldSpec spec;
    std::vector<RatPoly> units;            // fundamental unit generators
    unsigned torsion_order = 0;            // order of the root-of-unity group of F1
    int delta_F1 = 0;                      // 1 iff zeta_p in F1
    std::vector<std::pair<RatPoly, BigInt>> selmer_extra;  // (alpha_j, p-th root of |N|)
    unsigned cl_p_rank = 0;                // declared rank of Cl_{F1}[p]
    bool tower_terminates = false;         // asserts the p-class group of F1 is trivial
    BigInt denominator_bound;              // all coefficient denominators divide this
};

FieldDataBundle parse_bundle_json(const std::string& text);  // BundleInvalid
FieldDataBundle load_bundle(const std::string& path);        // IoError on unreadable file

struct ValidatedBundle {
    FieldDataBundle data;
    unsigned r_F1 = 0;   // unit rank of F1, from the signature of f
    unsigned n_V = 0;    // (r_F1 + delta_F1) + cl_p_rank
    std::vector<BigInt> bad_primes;  // sorted, deduplicated
};

// Re-verifies every arithmetic claim of the bundle against the base field:
// coefficient denominators, irreducibility of f, unit resultants, sigma order
// and sqrt(D) fixing, alpha norms, rank bookkeeping. Throws the specific
// error kind for the violated invariant.
ValidatedBundle validate_bundle(const QuadField& Q, const FieldDataBundle& b);

bool is_bad_prime(const ValidatedBundle& vb, const BigInt& q);

}  // namespace tame

#endif
