#ifndef TAME_SELMER_HPP
#define TAME_SELMER_HPP

#include <vector>

#include "tame/bundle.hpp"
#include "tame/fp_matrix.hpp"
#include "tame/poly.hpp"
#include "tame/quadfield.hpp"

namespace tame {

// Frobenius functional at an auxiliary degree-1 prime of F1: the p-th
// power-residue character at (ell, theta - root), evaluated on the basis.
struct AuxFunctional {
    BigInt ell;
    BigInt root;
    std::vector<unsigned> values;
};

// The mod-p Selmer space V of F1 coordinatized by auxiliary-prime characters:
// basis = unit generators then the alpha_j's; full-rank functional table makes
// coordinates exact. Immutable after construction; queries are pure and safe
// to call concurrently.
class SelmerSpace {
  public:
    // seed skips that many admissible auxiliary primes before the table scan
    // starts (coordinates are seed-independent once rank n_V is reached).
    SelmerSpace(const QuadField& Q, const ValidatedBundle& vb, unsigned seed = 0,
                unsigned max_scan = 400);

    unsigned p() const { return p_; }
    unsigned dim() const { return n_V_; }
    const std::vector<RatPoly>& basis() const { return basis_; }
    const std::vector<AuxFunctional>& table() const { return table_; }
    const ValidatedBundle& bundle() const { return vb_; }

    // Action of the fixed generator of Gal(F1/F) on an algebraic number.
    RatPoly sigma_apply(const RatPoly& v) const;

    // Coordinates of a certified Selmer element in the basis; NotInSpan when
    // the functional values are inconsistent with every coordinate vector.
    std::vector<unsigned> coordinates(const RatPoly& v) const;

    // Matrix of sigma in the basis (column i = coordinates of sigma(basis_i));
    // verified to satisfy S^p = I.
    const FpMatrix& sigma_matrix() const { return sigma_; }

    // Coordinates of the image of the base-field alpha; sigma-fixed by the
    // capitulation argument (verified).
    const std::vector<unsigned>& capitulation() const { return capit_; }

    // The base-field alpha data the capitulation image was computed from.
    const AlphaData& alpha() const { return alpha_; }

    // Frobenius data at a target prime q (unramified in F1, not bad): the
    // number of degree-1 primes above q (else degree-2), and the character
    // row of the basis at the chosen prime. choice indexes the canonical
    // factor list; all choices must yield the same classifier verdict.
    unsigned frobenius_choices(const BigInt& q) const;
    std::vector<unsigned> frobenius_vector(const BigInt& q, unsigned choice = 0,
                                           unsigned char_scale = 1) const;

  private:
    // Character row of the basis at (ell, root); false when ell is unusable.
    bool basis_row(const BigInt& ell, const BigInt& root, std::vector<unsigned>& out) const;
    bool value_at(const BigInt& ell, const BigInt& root, const RatPoly& v,
                  BigInt& out) const;

    ValidatedBundle vb_;
    unsigned p_ = 0, n_V_ = 0;
    std::vector<RatPoly> basis_;
    std::vector<AuxFunctional> table_;
    FpMatrix sigma_{3, 0, 0};
    std::vector<unsigned> capit_;
    AlphaData alpha_;
};

}  // namespace tame

#endif
