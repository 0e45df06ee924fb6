#ifndef TAME_CYCLIC_MODULE_HPP
#define TAME_CYCLIC_MODULE_HPP

#include "tame/fp_matrix.hpp"
#include "tame/numeric.hpp"

namespace tame {

// A finite-dimensional F_p-space together with an automorphism sigma of order
// dividing p, i.e. a module over F_p[X]/(X^p - 1). Every such module is a
// direct sum of the indecomposables Y_i = F_p[X]/((X-1)^i), 1 <= i <= p.
struct CyclicModule {
    unsigned p;
    FpMatrix sigma;

    CyclicModule(unsigned p_, FpMatrix sigma_);  // InvalidModule unless sigma^p = I
    unsigned dim() const { return sigma.rows(); }
};

// Multiplicities t_1..t_p of the indecomposable summands Y_1..Y_p.
struct JordanType {
    unsigned p;
    std::vector<unsigned> t;  // t[i-1] = multiplicity of Y_i

    unsigned dim() const {
        unsigned d = 0;
        for (unsigned i = 0; i < t.size(); ++i) d += (i + 1) * t[i];
        return d;
    }
    bool operator==(const JordanType& o) const { return p == o.p && t == o.t; }
};

// Computed from the nullity sequence n_k = dim ker (sigma-1)^k via
// t_i = 2 n_i - n_{i-1} - n_{i+1}.
JordanType jordan_type(const CyclicModule& m);

// dim ker Psi(sigma) with Psi(X) = (X-1)^(p-2); equals sum_i t_i min(i, p-2).
unsigned psi_kernel_dim(const CyclicModule& m);

// Contragredient module: action transpose-of-inverse; same Jordan type.
CyclicModule dual_module(const CyclicModule& m);

// #M[Psi] / #M = p^{-(2 t_p + t_{p-1})}; the closed form and the direct count
// are both computed and must agree exactly.
Rational ratio_psi(const CyclicModule& m);

// Dimensions of the Tate cohomology of the cyclic group <sigma> acting on the
// finite module: degree 0 -> ker(sigma-1)/im(N), degree 1 -> ker(N)/im(sigma-1),
// with N = 1 + sigma + ... + sigma^(p-1).
unsigned tate_cohomology(const CyclicModule& m, int degree);

// Coefficients of Psi(X) = (X-1)^(p-2) reduced mod p, ascending. All p-1 of
// them are nonzero mod p (no base-p carries), which downstream logic relies on.
std::vector<unsigned> psi_coefficients(unsigned p);

enum class MuCase { NO_ZETA, ZETA_NEW, ZETA_OLD };

// The finitely many shapes the mod-p unit module of the degree-p unramified
// extension can take, as a function of the base unit rank r_F and whether the
// p-th roots of unity are new/old/absent upstairs. ZETA_OLD with r_F = 0 keeps
// only the first shape (the other would need a negative multiplicity).
std::vector<JordanType> prop48_allowed_types(unsigned p, unsigned r_F, int delta_F1,
                                             MuCase mu_case);

// Block-diagonal module with the given Jordan type (unipotent upper blocks).
CyclicModule block_module(unsigned p, const JordanType& type);

}  // namespace tame

#endif
