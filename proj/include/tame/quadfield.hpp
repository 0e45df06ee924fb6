#ifndef TAME_QUADFIELD_HPP
#define TAME_QUADFIELD_HPP

#include <optional>
#include <vector>

#include "tame/numeric.hpp"

namespace tame {

enum class SplittingType { SPLIT, INERT, RAMIFIED };

// Positive definite integral binary quadratic form a x^2 + b x y + c y^2.
struct QuadForm {
    long long a = 0, b = 0, c = 0;
    bool operator==(const QuadForm& o) const { return a == o.a && b == o.b && c == o.c; }
    bool operator<(const QuadForm& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

// Algebraic integer (x + y*sqrt(D))/2 of the imaginary quadratic field, with
// the integrality condition x ≡ y·D (mod 2).
struct QuadInt {
    BigInt x, y;
};

QuadInt quad_conj(const QuadInt& a);
QuadInt quad_mul(const QuadInt& a, const QuadInt& b, const BigInt& D);
BigInt quad_norm(const QuadInt& a, const BigInt& D);  // (x^2 - D y^2)/4, positive for D < 0

bool is_fundamental_discriminant(const BigInt& D);

// The class group of discriminant D realized on reduced forms.
class QuadClassGroup {
  public:
    explicit QuadClassGroup(const BigInt& D);  // NotFundamental, |D| <= 10^7

    const BigInt& D() const { return D_; }
    unsigned h() const { return unsigned(forms_.size()); }
    const std::vector<QuadForm>& forms() const { return forms_; }
    QuadForm principal() const { return principal_; }

    QuadForm reduce(QuadForm f) const;
    QuadForm compose(const QuadForm& f, const QuadForm& g) const;
    QuadForm pow(QuadForm f, unsigned long e) const;
    QuadForm inverse_of(const QuadForm& f) const;  // (a, -b, c) reduced
    unsigned order_of(const QuadForm& f) const;

    unsigned p_part_order(unsigned p) const;    // largest power of p dividing h
    bool p_part_cyclic(unsigned p) const;       // some element's p-component attains it
    QuadForm p_part_generator(unsigned p) const;

  private:
    BigInt D_;
    std::vector<QuadForm> forms_;
    QuadForm principal_;
};

// Imaginary quadratic base field with an odd prime p such that the p-class
// group is nontrivial cyclic (validated; ConfigError diagnostics otherwise).
class QuadField {
  public:
    QuadField(const BigInt& D, unsigned p);

    const BigInt& D() const { return D_; }
    unsigned p() const { return p_; }
    const QuadClassGroup& cl() const { return cl_; }
    unsigned torsion_w() const { return w_; }  // order of the unit group: 2, 4, or 6
    int delta_F() const { return delta_F_; }   // 1 iff zeta_p in F (p=3, D=-3)
    unsigned r_F() const { return 0; }         // imaginary quadratic: unit rank 0

  private:
    BigInt D_;
    unsigned p_;
    unsigned w_;
    int delta_F_;
    QuadClassGroup cl_;
};

SplittingType splitting_type(const QuadField& Q, const BigInt& q);

// Reduced form of the fixed prime above SPLIT q (root b minimal in (0, 2q)
// with b^2 ≡ D mod 4q); principal form for INERT q. Ramified error otherwise.
QuadForm class_of_prime(const QuadField& Q, const BigInt& q);

// For SPLIT q the minimal b in (0, 2q); used to fix the residue reduction root.
BigInt prime_form_b(const QuadField& Q, const BigInt& q);

// Whether q splits completely in the degree-p unramified cyclic extension:
// Artin symbol of the prime's class trivial in the p-part quotient. INERT
// primes always qualify ((q) is principal).
bool splits_in_F1(const QuadField& Q, const BigInt& q);

// The generator (alpha) = a^p of the capitulation data: a is the smallest-norm
// split prime whose class has order exactly p; alpha is the lexicographically
// least (x, |y|, -y before +y) solution of x^2 + |D| y^2 = 4 N(a)^p lying in
// a^p and primitive. NotApplicable when the p-class group is trivial.
struct AlphaData {
    QuadInt alpha;
    BigInt prime_norm;  // N(a)
    QuadForm prime_class;
};
AlphaData find_alpha(const QuadField& Q);

enum class RootChoice { CANONICAL, CONJUGATE };

// p-th power-residue character of beta in the residue field at the fixed
// prime above q (SPLIT: F_q via sqrt(D) ≡ b; INERT: F_{q^2}). nullopt when
// the residue field has no p-th roots of unity (N ≢ 1 mod p). BadPrime if q
// divides p·D·N(beta). char_scale multiplies the value (a normalization knob
// exercised by invariance tests).
std::optional<unsigned> residue_character(const QuadField& Q, const QuadInt& beta,
                                          const BigInt& q,
                                          RootChoice root = RootChoice::CANONICAL,
                                          unsigned char_scale = 1);

// Number of degree-p extensions ramified exactly at q, as 1 or 2: 2 iff
// N(q) ≡ 1 mod p and the character of alpha (and of the torsion generator
// when w > 2) vanishes at q.
unsigned d_rank(const QuadField& Q, const QuadInt& alpha, const BigInt& q,
                RootChoice root = RootChoice::CANONICAL);

}  // namespace tame

#endif
