#ifndef TAME_FQ_HPP
#define TAME_FQ_HPP

#include <optional>

#include "tame/numeric.hpp"

namespace tame {

// Element of a residue field F_q (e = 1) or F_{q^2} (e = 2). The quadratic
// case stores its defining modulus x^2 + m1*x + m0 (monic, irreducible mod q)
// alongside the coordinates c0 + c1*x, so values from different residue-field
// presentations cannot be mixed accidentally. Extension degree is capped at 2:
// the pipeline only ever reduces at degree-1 and degree-2 primes.
struct FqElement {
    BigInt q;
    unsigned e = 1;
    BigInt m0, m1;  // modulus tail, used only when e == 2
    BigInt c0, c1;  // value c0 + c1*x (c1 == 0 when e == 1)

    bool is_zero() const { return c0 == 0 && c1 == 0; }
    bool is_one() const { return c0 == 1 && c1 == 0; }
    BigInt field_order() const { return e == 1 ? q : q * q; }
};

FqElement fq1(const BigInt& q, const BigInt& value);
FqElement fq2(const BigInt& q, const BigInt& m0, const BigInt& m1, const BigInt& c0,
              const BigInt& c1);

bool fq_eq(const FqElement& a, const FqElement& b);
FqElement fq_add(const FqElement& a, const FqElement& b);
FqElement fq_mul(const FqElement& a, const FqElement& b);
FqElement fq_inv(const FqElement& a);
FqElement fq_pow(const FqElement& a, const BigInt& k);

// Least generator of the multiplicative group under the documented total
// order: e = 1 scans 1, 2, 3, ...; e = 2 scans coordinate pairs (c0, c1)
// lexicographically (c0 outer, c1 inner). The group order q^e - 1 is factored
// by trial division + Pollard rho; candidates are tested against each prime
// factor of the order.
FqElement smallest_primitive_root(const BigInt& q, unsigned e, const BigInt& m0 = 0,
                                  const BigInt& m1 = 0);

// p-th power-residue character with respect to the canonical generator g of
// the field: the unique k in F_p with beta^((N-1)/p) = zeta^k, where
// zeta = g^((N-1)/p) and N = q^e. Returns nullopt when N is not 1 mod p (the
// character is undefined: no p-th roots of unity in the field). The returned
// value is multiplied by char_scale (a unit mod p); scaling models switching
// to a different root-of-unity normalization and must leave all downstream
// verdicts unchanged.
std::optional<unsigned> power_residue_value(const FqElement& beta, unsigned p,
                                            unsigned char_scale = 1);

// Reusable character context: fixes the residue field and its canonical zeta
// once, then evaluates many betas cheaply (the primitive-root search and the
// group-order factorization are done a single time).
class ResidueCharacter {
  public:
    ResidueCharacter(const BigInt& q, unsigned e, const BigInt& m0, const BigInt& m1,
                     unsigned p);

    // False when the field has no p-th roots of unity (N not 1 mod p); every
    // evaluation is then UNDEFINED.
    bool defined() const { return defined_; }
    std::optional<unsigned> operator()(const FqElement& beta, unsigned char_scale = 1) const;

  private:
    unsigned p_;
    bool defined_;
    BigInt exponent_;             // (N-1)/p
    std::vector<FqElement> zeta_pows_;  // zeta^0 .. zeta^(p-1)
};

}  // namespace tame

#endif
