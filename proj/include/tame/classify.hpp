#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tame/fp_matrix.hpp"
#include "tame/numeric.hpp"
#include "tame/quadfield.hpp"
#include "tame/selmer.hpp"

namespace tame {

// Verdict for a single prime q of the base field.
enum class Verdict {
    SKIPPED_BAD,               // q interferes with the input data; not classified
    FINITE_D_AT_MOST_1,        // generator rank <= 1, group finite cyclic
    FINITE_NONSPLIT_POWERFUL,  // rank 2, nonsplit: powerful, hence finite
    FINITE_PSI_POWERFUL,       // rank 2, split, psi test passed: powerful, finite
    NOT_POWERFUL_UNDECIDED,    // rank 2, split with trivial Frobenius: not powerful
    UNDECIDED,                 // rank 2, split, psi-annihilated Frobenius
    UNKNOWN_TOWER,             // rank 2, nonsplit but tower termination not supplied
};

const char* verdict_name(Verdict v);

// Result of classifying one rational prime q.
struct ClassifiedPrime {
    BigInt q;
    BigInt Nq;  // residue norm of a prime of F above q (q or q^2)
    SplittingType split_F = SplittingType::SPLIT;
    bool classified = false;       // false for SKIPPED_BAD
    bool class_principal = false;  // meaningful only when classified
    unsigned d = 0;                // generator rank; meaningful only when classified
    bool has_tau = false;          // step-3 primes carry a Frobenius vector
    std::vector<unsigned> tau;
    bool tau_zero = false;
    bool psi_ann = false;  // tau annihilated by the psi operator (true when tau = 0)
    Verdict verdict = Verdict::SKIPPED_BAD;
    std::string rule;
};

// Generator/relation-rank finiteness test: rk >= 2 and (rk-2)^2 >= 4(r_K + theta + 1)
// certifies an infinite quotient.
bool golod_shafarevich_infinite(unsigned rk, unsigned r_K, unsigned theta);

// Existence of an everywhere-nonzero dependency: coefficients a_v in {1..p-1}
// with sum a_v * g_v = 0.  Exhaustive over (p-1)^{|S|} tuples; |S| <= 8.
bool gras_munnier_exists(const std::vector<std::vector<unsigned>>& elements, unsigned p);

// Whether tau annihilates the capitulation image (dot product zero mod p).
bool fixes_gov_F(const std::vector<unsigned>& capit, const std::vector<unsigned>& tau,
                 unsigned p);

// Whether ((S^T - I)^{p-2}) tau = 0 for the sigma action matrix S.
bool psi_annihilated(const FpMatrix& sigma, const std::vector<unsigned>& tau);

// Independent route to the same predicate: a nonzero-coefficient dependency
// among the sigma-orbit tau, S^T tau, ..., (S^T)^{p-2} tau exists iff tau is
// psi-annihilated.  Used as a cross-check, never as the primary test.
bool cross_check_cor38(const FpMatrix& sigma, const std::vector<unsigned>& tau, unsigned p);

// Classify one rational prime.  root_choice / char_scale vary the internal
// normalizations; the verdict is invariant under them.
ClassifiedPrime classify_prime(const QuadField& Q, const SelmerSpace& space, const BigInt& q,
                               RootChoice root = RootChoice::CANONICAL,
                               unsigned root_choice = 0, unsigned char_scale = 1);

}  // namespace tame
