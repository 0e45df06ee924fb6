#ifndef TAME_PGROUP_HPP
#define TAME_PGROUP_HPP

#include <cstdint>
#include <vector>

namespace tame {

// Order caps: closure enumeration refuses to materialize more elements than
// kOrderCap; exhaustive subgroup listing is restricted to kSubgroupCap.
inline constexpr unsigned kOrderCap = 2187;    // 3^7
inline constexpr unsigned kSubgroupCap = 243;  // 3^5

// A finite p-group materialized as a Cayley table. Element 0 is the identity.
// Immutable after construction; all queries are pure.
class FinitePGroup {
  public:
    FinitePGroup(unsigned p, std::vector<uint16_t> table, unsigned order);

    unsigned p() const { return p_; }
    unsigned order() const { return order_; }
    unsigned mult(unsigned a, unsigned b) const { return table_[size_t(a) * order_ + b]; }
    unsigned inv(unsigned a) const { return inv_[a]; }
    unsigned commutator(unsigned a, unsigned b) const {
        return mult(mult(inv(a), inv(b)), mult(a, b));
    }
    unsigned power(unsigned a, unsigned long k) const;
    unsigned element_order(unsigned a) const;
    unsigned exponent() const;
    bool is_abelian() const;

    // Indices of the generators handed to generate(); empty for groups built
    // directly from a table (quotients, direct products).
    const std::vector<unsigned>& generator_indices() const { return gens_; }
    void set_generator_indices(std::vector<unsigned> g) { gens_ = std::move(g); }

  private:
    unsigned p_, order_;
    std::vector<uint16_t> table_;
    std::vector<uint16_t> inv_;
    std::vector<unsigned> gens_;
};

// Closure of n×n generator matrices over Z/mod (n ≤ 4, mod ≤ 27) under
// multiplication. Errors: OrderCapExceeded, NotPGroup (closure not a group of
// p-power order).
FinitePGroup generate_matrix_group(unsigned p, unsigned mod, unsigned dim,
                                   const std::vector<std::vector<unsigned>>& gens);

// Closure of permutations given as image lists on ≤ 243 points.
FinitePGroup generate_permutation_group(unsigned p,
                                        const std::vector<std::vector<unsigned>>& gens);

// Direct product of cyclic groups Z/p^{k_i}.
FinitePGroup abelian_group(unsigned p, const std::vector<unsigned>& exponents);

// Upper unitriangular 3×3 matrices over F_p: order p^3, exponent p (p odd).
FinitePGroup heisenberg(unsigned p);

// Subgroup generated by the given element indices, as a sorted index list.
std::vector<unsigned> subgroup_closure(const FinitePGroup& g, const std::vector<unsigned>& gens);

// Subgroup generated by all p-th powers / by all commutators.
std::vector<unsigned> power_subgroup(const FinitePGroup& g);
std::vector<unsigned> derived_subgroup(const FinitePGroup& g);

// G/N for a normal subgroup given as a sorted element-index list.
// InternalError if N is not normal.
FinitePGroup quotient(const FinitePGroup& g, const std::vector<unsigned>& normal);

// Whether [G,G] ⊆ G^p (p odd).
bool is_powerful(const FinitePGroup& g);

// d(G) = dim_{F_p} G/(G^p [G,G]).
unsigned frattini_rank(const FinitePGroup& g);

// Orders of G = G^(1) ⊇ G^(2) ⊇ …, G^(i+1) = (G^(i))^p [G^(i), G], down to 1.
std::vector<unsigned> lower_p_central_series(const FinitePGroup& g);

// For a 2-generated nonabelian group of exponent p: form G/[[G,G],G] and test
// whether it is the order-p^3 exponent-p nonabelian 2-generated group (which
// the classification of groups of order p^3 makes unique, i.e. Heisenberg).
// PreconditionFailed unless d(G) = 2, exponent = p, nonabelian.
bool check_lemma34(const FinitePGroup& g);

// d(H) for every subgroup H of G (including 1 and G), sorted ascending.
// OrderCapExceeded when |G| > 243.
std::vector<unsigned> all_subgroup_ranks(const FinitePGroup& g);

}  // namespace tame

#endif
