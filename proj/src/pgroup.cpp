#include "tame/pgroup.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "tame/errors.hpp"

namespace tame {

namespace {

bool is_power_of(unsigned n, unsigned p) {
    while (n % p == 0) n /= p;
    return n == 1;
}

// Shared closure machinery over opaque element representations.
template <class Rep, class Mul>
FinitePGroup close_and_tabulate(unsigned p, const std::vector<Rep>& gens, const Rep& id,
                                Mul mul) {
    std::map<Rep, unsigned> index;
    std::vector<Rep> elems;
    index[id] = 0;
    elems.push_back(id);
    for (size_t i = 0; i < elems.size(); ++i) {
        for (const Rep& g : gens) {
            Rep w = mul(elems[i], g);
            if (index.emplace(w, unsigned(elems.size())).second) {
                elems.push_back(std::move(w));
                if (elems.size() > kOrderCap)
                    throw OrderCapExceeded("closure exceeds " + std::to_string(kOrderCap) +
                                           " elements");
            }
        }
    }
    const unsigned n = unsigned(elems.size());
    if (!is_power_of(n, p))
        throw NotPGroup("closure has order " + std::to_string(n) +
                        ", not a power of " + std::to_string(p));
    std::vector<uint16_t> table(size_t(n) * n);
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) {
            auto it = index.find(mul(elems[a], elems[b]));
            if (it == index.end()) throw NotPGroup("closure is not multiplicatively closed");
            table[size_t(a) * n + b] = uint16_t(it->second);
        }
    FinitePGroup grp(p, std::move(table), n);
    std::vector<unsigned> gidx;
    for (const Rep& g : gens) gidx.push_back(index.at(g));
    grp.set_generator_indices(std::move(gidx));
    return grp;
}

std::vector<unsigned> closure_from_gens(const FinitePGroup& g, const std::vector<unsigned>& gens,
                                        std::vector<char>& in) {
    std::vector<unsigned> elems{0};
    std::fill(in.begin(), in.end(), 0);
    in[0] = 1;
    for (size_t i = 0; i < elems.size(); ++i)
        for (unsigned s : gens) {
            unsigned w = g.mult(elems[i], s);
            if (!in[w]) {
                in[w] = 1;
                elems.push_back(w);
            }
        }
    std::sort(elems.begin(), elems.end());
    return elems;
}

}  // namespace

FinitePGroup::FinitePGroup(unsigned p, std::vector<uint16_t> table, unsigned order)
    : p_(p), order_(order), table_(std::move(table)), inv_(order, 0) {
    if (p < 2) throw NotPGroup("prime must be >= 2");
    if (table_.size() != size_t(order) * order) throw NotPGroup("table size mismatch");
    if (!is_power_of(order, p)) throw NotPGroup("order is not a power of p");
    for (unsigned a = 0; a < order_; ++a) {
        if (mult(a, 0) != a || mult(0, a) != a) throw NotPGroup("element 0 is not an identity");
        bool found = false;
        for (unsigned b = 0; b < order_; ++b)
            if (mult(a, b) == 0 && mult(b, a) == 0) {
                inv_[a] = uint16_t(b);
                found = true;
                break;
            }
        if (!found) throw NotPGroup("element without inverse");
    }
}

unsigned FinitePGroup::power(unsigned a, unsigned long k) const {
    unsigned r = 0, b = a;
    for (; k; k >>= 1) {
        if (k & 1) r = mult(r, b);
        if (k > 1) b = mult(b, b);
    }
    return r;
}

unsigned FinitePGroup::element_order(unsigned a) const {
    unsigned k = 1, x = a;
    while (x != 0) {
        x = mult(x, a);
        ++k;
    }
    return k;
}

unsigned FinitePGroup::exponent() const {
    // In a p-group the exponent is the maximal element order.
    unsigned e = 1;
    for (unsigned a = 0; a < order_; ++a) e = std::max(e, element_order(a));
    return e;
}

bool FinitePGroup::is_abelian() const {
    for (unsigned a = 0; a < order_; ++a)
        for (unsigned b = a + 1; b < order_; ++b)
            if (mult(a, b) != mult(b, a)) return false;
    return true;
}

FinitePGroup generate_matrix_group(unsigned p, unsigned mod, unsigned dim,
                                   const std::vector<std::vector<unsigned>>& gens) {
    if (dim < 1 || dim > 4) throw NotPGroup("matrix dimension must be 1..4");
    if (mod < 2 || mod > 27) throw NotPGroup("matrix modulus must be 2..27");
    using Rep = std::vector<uint16_t>;
    Rep id(dim * dim, 0);
    for (unsigned i = 0; i < dim; ++i) id[i * dim + i] = 1;
    std::vector<Rep> g;
    for (const auto& m : gens) {
        if (m.size() != size_t(dim) * dim) throw NotPGroup("generator entry count mismatch");
        Rep r(dim * dim);
        for (size_t i = 0; i < r.size(); ++i) r[i] = uint16_t(m[i] % mod);
        g.push_back(std::move(r));
    }
    auto mul = [dim, mod](const Rep& a, const Rep& b) {
        Rep c(size_t(dim) * dim, 0);
        for (unsigned i = 0; i < dim; ++i)
            for (unsigned k = 0; k < dim; ++k) {
                unsigned av = a[i * dim + k];
                if (!av) continue;
                for (unsigned j = 0; j < dim; ++j)
                    c[i * dim + j] = uint16_t((c[i * dim + j] + av * b[k * dim + j]) % mod);
            }
        return c;
    };
    return close_and_tabulate(p, g, id, mul);
}

FinitePGroup generate_permutation_group(unsigned p,
                                        const std::vector<std::vector<unsigned>>& gens) {
    size_t npts = gens.empty() ? 1 : gens[0].size();
    if (npts == 0 || npts > kSubgroupCap) throw NotPGroup("permutation degree must be 1..243");
    using Rep = std::vector<uint16_t>;
    Rep id(npts);
    for (size_t i = 0; i < npts; ++i) id[i] = uint16_t(i);
    std::vector<Rep> g;
    for (const auto& im : gens) {
        if (im.size() != npts) throw NotPGroup("permutation degrees disagree");
        Rep r(npts);
        std::vector<char> seen(npts, 0);
        for (size_t i = 0; i < npts; ++i) {
            if (im[i] >= npts || seen[im[i]]) throw NotPGroup("generator is not a permutation");
            seen[im[i]] = 1;
            r[i] = uint16_t(im[i]);
        }
        g.push_back(std::move(r));
    }
    auto mul = [](const Rep& a, const Rep& b) {  // (a·b)(x) = b(a(x)): act left-to-right
        Rep c(a.size());
        for (size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
        return c;
    };
    return close_and_tabulate(p, g, id, mul);
}

FinitePGroup abelian_group(unsigned p, const std::vector<unsigned>& exponents) {
    unsigned long order = 1;
    std::vector<unsigned> mods;
    for (unsigned k : exponents) {
        unsigned long m = 1;
        for (unsigned i = 0; i < k; ++i) m *= p;
        mods.push_back(unsigned(m));
        order *= m;
        if (order > kOrderCap) throw OrderCapExceeded("direct product exceeds the order cap");
    }
    const unsigned n = unsigned(order);
    // Mixed-radix indexing: index = sum over components of digit * stride.
    auto add = [&](unsigned a, unsigned b) {
        unsigned r = 0, stride = 1;
        for (unsigned m : mods) {
            unsigned da = (a / stride) % m, db = (b / stride) % m;
            r += ((da + db) % m) * stride;
            stride *= m;
        }
        return r;
    };
    std::vector<uint16_t> table(size_t(n) * n);
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b) table[size_t(a) * n + b] = uint16_t(add(a, b));
    FinitePGroup grp(p, std::move(table), n);
    std::vector<unsigned> gidx;
    unsigned stride = 1;
    for (unsigned m : mods) {
        gidx.push_back(stride);
        stride *= m;
    }
    grp.set_generator_indices(std::move(gidx));
    return grp;
}

FinitePGroup heisenberg(unsigned p) {
    if (p == 2) throw PreconditionFailed("Heisenberg construction requires odd p");
    std::vector<unsigned> e12{1, 1, 0, 0, 1, 0, 0, 0, 1};
    std::vector<unsigned> e23{1, 0, 0, 0, 1, 1, 0, 0, 1};
    return generate_matrix_group(p, p, 3, {e12, e23});
}

std::vector<unsigned> subgroup_closure(const FinitePGroup& g, const std::vector<unsigned>& gens) {
    std::vector<char> in(g.order(), 0);
    return closure_from_gens(g, gens, in);
}

std::vector<unsigned> power_subgroup(const FinitePGroup& g) {
    std::set<unsigned> s;
    for (unsigned a = 0; a < g.order(); ++a) s.insert(g.power(a, g.p()));
    return subgroup_closure(g, std::vector<unsigned>(s.begin(), s.end()));
}

std::vector<unsigned> derived_subgroup(const FinitePGroup& g) {
    std::set<unsigned> s;
    for (unsigned a = 0; a < g.order(); ++a)
        for (unsigned b = a + 1; b < g.order(); ++b) s.insert(g.commutator(a, b));
    s.erase(0u);
    return subgroup_closure(g, std::vector<unsigned>(s.begin(), s.end()));
}

FinitePGroup quotient(const FinitePGroup& g, const std::vector<unsigned>& normal) {
    const unsigned n = g.order();
    std::vector<char> in(n, 0);
    for (unsigned x : normal) in[x] = 1;
    if (normal.empty() || !in[0]) throw InternalError("normal subgroup must contain the identity");
    for (unsigned x = 0; x < n; ++x)
        for (unsigned m : normal)
            if (!in[g.mult(g.mult(x, m), g.inv(x))])
                throw InternalError("subgroup is not normal");
    std::vector<int> coset(n, -1);
    std::vector<unsigned> rep;
    for (unsigned x = 0; x < n; ++x) {
        if (coset[x] >= 0) continue;
        int c = int(rep.size());
        rep.push_back(x);
        for (unsigned m : normal) coset[g.mult(x, m)] = c;
    }
    const unsigned q = unsigned(rep.size());
    std::vector<uint16_t> table(size_t(q) * q);
    for (unsigned a = 0; a < q; ++a)
        for (unsigned b = 0; b < q; ++b)
            table[size_t(a) * q + b] = uint16_t(coset[g.mult(rep[a], rep[b])]);
    return FinitePGroup(g.p(), std::move(table), q);
}

bool is_powerful(const FinitePGroup& g) {
    if (g.p() == 2) throw PreconditionFailed("powerful test implemented for odd p only");
    std::vector<unsigned> gp = power_subgroup(g);
    std::vector<char> in(g.order(), 0);
    for (unsigned x : gp) in[x] = 1;
    for (unsigned a = 0; a < g.order(); ++a)
        for (unsigned b = a + 1; b < g.order(); ++b)
            if (!in[g.commutator(a, b)]) return false;
    return true;
}

unsigned frattini_rank(const FinitePGroup& g) {
    std::set<unsigned> s;
    for (unsigned a = 0; a < g.order(); ++a) s.insert(g.power(a, g.p()));
    for (unsigned a = 0; a < g.order(); ++a)
        for (unsigned b = a + 1; b < g.order(); ++b) s.insert(g.commutator(a, b));
    std::vector<unsigned> phi = subgroup_closure(g, std::vector<unsigned>(s.begin(), s.end()));
    unsigned idx = g.order() / unsigned(phi.size()), d = 0;
    while (idx > 1) {
        idx /= g.p();
        ++d;
    }
    return d;
}

std::vector<unsigned> lower_p_central_series(const FinitePGroup& g) {
    std::vector<unsigned> orders{g.order()};
    std::vector<unsigned> cur(g.order());
    for (unsigned i = 0; i < g.order(); ++i) cur[i] = i;
    while (cur.size() > 1) {
        std::set<unsigned> s;
        for (unsigned x : cur) s.insert(g.power(x, g.p()));
        for (unsigned x : cur)
            for (unsigned y = 0; y < g.order(); ++y) s.insert(g.commutator(x, y));
        s.erase(0u);
        std::vector<unsigned> next =
            subgroup_closure(g, std::vector<unsigned>(s.begin(), s.end()));
        if (next.size() >= cur.size())
            throw InternalError("lower p-central series failed to decrease");
        orders.push_back(unsigned(next.size()));
        cur = std::move(next);
    }
    return orders;
}

bool check_lemma34(const FinitePGroup& g) {
    if (g.is_abelian() || g.exponent() != g.p() || frattini_rank(g) != 2)
        throw PreconditionFailed("requires a 2-generated nonabelian group of exponent p");
    std::vector<unsigned> der = derived_subgroup(g);
    std::set<unsigned> s;
    for (unsigned x : der)
        for (unsigned y = 0; y < g.order(); ++y) s.insert(g.commutator(x, y));
    s.erase(0u);
    std::vector<unsigned> k = subgroup_closure(g, std::vector<unsigned>(s.begin(), s.end()));
    FinitePGroup q = quotient(g, k);
    unsigned p3 = g.p() * g.p() * g.p();
    return q.order() == p3 && q.exponent() == g.p() && !q.is_abelian() && frattini_rank(q) == 2;
}

std::vector<unsigned> all_subgroup_ranks(const FinitePGroup& g) {
    const unsigned n = g.order();
    if (n > kSubgroupCap)
        throw OrderCapExceeded("subgroup enumeration capped at order " +
                               std::to_string(kSubgroupCap));
    const bool abelian = g.is_abelian();
    std::vector<char> scratch(n, 0);

    // Subgroups discovered as closures of growing generator lists; identified
    // by their sorted element lists.
    std::map<std::vector<unsigned>, std::vector<unsigned>> gens_of;  // elements -> generators
    std::vector<std::vector<unsigned>> queue{{0}};
    gens_of[{0}] = {};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        std::vector<unsigned> h = queue[qi];  // copy: gens_of mutates below
        std::vector<unsigned> hgens = gens_of.at(h);
        std::vector<char> in(n, 0);
        for (unsigned x : h) in[x] = 1;
        for (unsigned gelt = 1; gelt < n; ++gelt) {
            if (in[gelt]) continue;
            std::vector<unsigned> ext;
            if (abelian) {
                // <H, g> = U_k H·g^k
                std::vector<char> in2 = in;
                ext = h;
                unsigned gk = gelt;
                while (gk != 0) {
                    for (unsigned x : h) {
                        unsigned w = g.mult(x, gk);
                        if (!in2[w]) {
                            in2[w] = 1;
                            ext.push_back(w);
                        }
                    }
                    gk = g.mult(gk, gelt);
                }
                std::sort(ext.begin(), ext.end());
            } else {
                std::vector<unsigned> eg = hgens;
                eg.push_back(gelt);
                ext = closure_from_gens(g, eg, scratch);
            }
            auto it = gens_of.find(ext);
            if (it == gens_of.end()) {
                std::vector<unsigned> eg = hgens;
                eg.push_back(gelt);
                gens_of.emplace(ext, std::move(eg));
                queue.push_back(std::move(ext));
            }
        }
    }

    std::vector<unsigned> ranks;
    for (const auto& [h, hg] : gens_of) {
        (void)hg;
        std::set<unsigned> s;
        for (unsigned x : h) s.insert(g.power(x, g.p()));
        if (!abelian)
            for (unsigned x : h)
                for (unsigned y : h) s.insert(g.commutator(x, y));
        s.erase(0u);
        std::vector<unsigned> phi =
            subgroup_closure(g, std::vector<unsigned>(s.begin(), s.end()));
        unsigned idx = unsigned(h.size() / phi.size()), d = 0;
        while (idx > 1) {
            idx /= g.p();
            ++d;
        }
        ranks.push_back(d);
    }
    std::sort(ranks.begin(), ranks.end());
    return ranks;
}

}  // namespace tame
