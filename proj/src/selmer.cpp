#include "tame/selmer.hpp"

#include <string>

#include "tame/errors.hpp"
#include "tame/fq.hpp"

namespace tame {

namespace {

FpMatrix stack_rows(unsigned p, unsigned cols, const std::vector<std::vector<unsigned>>& rows) {
    FpMatrix a(p, unsigned(rows.size()), cols);
    for (unsigned i = 0; i < rows.size(); ++i)
        for (unsigned j = 0; j < cols; ++j) a.at(i, j) = rows[i][j] % p;
    return a;
}

}  // namespace

bool SelmerSpace::value_at(const BigInt& ell, const BigInt& root, const RatPoly& v,
                           BigInt& out) const {
    try {
        out = fp_eval(fp_from_rat(v, ell), root);
    } catch (const BadPrime&) {
        return false;
    }
    return out != 0;
}

bool SelmerSpace::basis_row(const BigInt& ell, const BigInt& root,
                            std::vector<unsigned>& out) const {
    ResidueCharacter chi(ell, 1, 0, 0, p_);
    if (!chi.defined()) return false;
    out.clear();
    for (const RatPoly& b : basis_) {
        BigInt val;
        if (!value_at(ell, root, b, val)) return false;
        out.push_back(*chi(fq1(ell, val)));
    }
    return true;
}

SelmerSpace::SelmerSpace(const QuadField& Q, const ValidatedBundle& vb, unsigned seed,
                         unsigned max_scan)
    : vb_(vb), p_(vb.data.p), n_V_(vb.n_V), sigma_(vb.data.p, 0, 0) {
    for (const RatPoly& u : vb_.data.units) basis_.push_back(u);
    for (const auto& [a, nr] : vb_.data.selmer_extra) {
        (void)nr;
        basis_.push_back(a);
    }
    if (basis_.size() != n_V_)
        throw InternalError("basis size disagrees with the validated dimension");

    // Functional table: deterministic scan of auxiliary primes ell = 1 mod p
    // with good reduction, skipping `seed` admissible primes up front.
    if (n_V_ > 0) {
        std::vector<std::vector<unsigned>> rows;
        unsigned rank = 0, scanned = 0, skipped = 0;
        BigInt ell = 1;
        while (rank < n_V_ && scanned < max_scan) {
            mpz_nextprime(ell.get_mpz_t(), ell.get_mpz_t());
            if (bmod(ell - 1, BigInt(p_)) != 0 || is_bad_prime(vb_, ell)) continue;
            if (skipped < seed) {
                ++skipped;
                continue;
            }
            ++scanned;
            std::vector<FpPoly> factors = factor_mod(vb_.data.spec.f, ell);
            const FpPoly* lin = nullptr;
            for (const auto& g : factors)
                if (g.degree() == 1) {
                    lin = &g;
                    break;
                }
            if (!lin) continue;  // no degree-1 prime above ell
            BigInt root = bmod(-lin->c[0], ell);
            std::vector<unsigned> row;
            if (!basis_row(ell, root, row)) continue;
            table_.push_back({ell, root, row});
            rows.push_back(std::move(row));
            rank = stack_rows(p_, n_V_, rows).rank();
        }
        if (rank < n_V_)
            throw RankDeficit("functional rank " + std::to_string(rank) + " < " +
                              std::to_string(n_V_) + " after " + std::to_string(scanned) +
                              " admissible primes");
    }

    // Matrix of sigma in the basis.
    FpMatrix S(p_, n_V_, n_V_);
    for (unsigned i = 0; i < n_V_; ++i) {
        std::vector<unsigned> col;
        try {
            col = coordinates(sigma_apply(basis_[i]));
        } catch (const NotInSpan&) {
            throw NonGeneratingBundle("sigma image of basis element " + std::to_string(i) +
                                      " lies outside the declared span");
        }
        for (unsigned r = 0; r < n_V_; ++r) S.at(r, i) = col[r];
    }
    if (!(S.pow(p_) == FpMatrix::identity(p_, n_V_)))
        throw SigmaInconsistent("sigma action matrix does not have order dividing p");
    sigma_ = S;

    // Capitulation: image of the base-field alpha, necessarily sigma-fixed.
    AlphaData ad = find_alpha(Q);
    alpha_ = ad;
    RatPoly alpha_img = rp_scale(
        rp_add(RatPoly(std::vector<Rational>{Rational(ad.alpha.x)}),
               rp_scale(vb_.data.spec.sqrtD, Rational(ad.alpha.y))),
        Rational(1, 2));
    try {
        capit_ = coordinates(alpha_img);
    } catch (const NotInSpan&) {
        throw NonGeneratingBundle("base-field alpha lies outside the declared span");
    }
    std::vector<unsigned> fixed = sigma_.apply(capit_);
    for (unsigned r = 0; r < n_V_; ++r)
        if (fixed[r] != capit_[r])
            throw NotSigmaFixed("capitulation image is not fixed by sigma");
}

RatPoly SelmerSpace::sigma_apply(const RatPoly& v) const {
    return rp_compose_mod(v, vb_.data.spec.sigma, vb_.data.spec.f);
}

std::vector<unsigned> SelmerSpace::coordinates(const RatPoly& v) const {
    if (n_V_ == 0) return {};
    std::vector<std::vector<unsigned>> rows;
    std::vector<unsigned> rhs;
    for (const AuxFunctional& fn : table_) {
        BigInt val;
        if (!value_at(fn.ell, fn.root, v, val)) continue;
        ResidueCharacter chi(fn.ell, 1, 0, 0, p_);
        rows.push_back(fn.values);
        rhs.push_back(*chi(fq1(fn.ell, val)));
    }
    // Extend past the table when v had bad reduction at some table prime.
    if (stack_rows(p_, n_V_, rows).rank() < n_V_) {
        BigInt ell = table_.empty() ? BigInt(1) : table_.back().ell;
        unsigned extra = 0;
        while (extra < 200 && stack_rows(p_, n_V_, rows).rank() < n_V_) {
            mpz_nextprime(ell.get_mpz_t(), ell.get_mpz_t());
            if (bmod(ell - 1, BigInt(p_)) != 0 || is_bad_prime(vb_, ell)) continue;
            ++extra;
            std::vector<FpPoly> factors = factor_mod(vb_.data.spec.f, ell);
            const FpPoly* lin = nullptr;
            for (const auto& g : factors)
                if (g.degree() == 1) {
                    lin = &g;
                    break;
                }
            if (!lin) continue;
            BigInt root = bmod(-lin->c[0], ell);
            std::vector<unsigned> row;
            BigInt val;
            if (!basis_row(ell, root, row) || !value_at(ell, root, v, val)) continue;
            ResidueCharacter chi(ell, 1, 0, 0, p_);
            rows.push_back(std::move(row));
            rhs.push_back(*chi(fq1(ell, val)));
        }
        if (stack_rows(p_, n_V_, rows).rank() < n_V_)
            throw RankDeficit("could not rebuild full functional rank for this element");
    }
    auto [ok, e] = stack_rows(p_, n_V_, rows).solve(rhs);
    if (!ok)
        throw NotInSpan("functional values are inconsistent with every coordinate vector");
    return e;
}

unsigned SelmerSpace::frobenius_choices(const BigInt& q) const {
    std::vector<FpPoly> factors = factor_mod(vb_.data.spec.f, q);
    unsigned lin = 0, quad = 0;
    for (const auto& g : factors) {
        if (g.degree() == 1) ++lin;
        if (g.degree() == 2) ++quad;
    }
    return lin > 0 ? lin : quad;
}

std::vector<unsigned> SelmerSpace::frobenius_vector(const BigInt& q, unsigned choice,
                                                    unsigned char_scale) const {
    std::vector<FpPoly> factors = factor_mod(vb_.data.spec.f, q);
    std::vector<const FpPoly*> lin, quad;
    for (const auto& g : factors) {
        if (g.degree() == 1) lin.push_back(&g);
        if (g.degree() == 2) quad.push_back(&g);
    }
    std::vector<unsigned> out;
    if (!lin.empty()) {
        const FpPoly& fac = *lin[choice % lin.size()];
        BigInt root = bmod(-fac.c[0], q);
        ResidueCharacter chi(q, 1, 0, 0, p_);
        if (!chi.defined())
            throw PreconditionFailed("residue field at " + to_string(q) +
                                     " has no p-th roots of unity");
        for (const RatPoly& b : basis_) {
            BigInt val;
            if (!value_at(q, root, b, val))
                throw InternalError("target prime divides basis data");
            out.push_back(*chi(fq1(q, val), char_scale));
        }
        return out;
    }
    if (quad.empty())
        throw PreconditionFailed("no prime of residue degree <= 2 above " + to_string(q));
    const FpPoly& fac = *quad[choice % quad.size()];
    BigInt m0 = fac.c[0], m1 = fac.c[1];
    ResidueCharacter chi(q, 2, m0, m1, p_);
    if (!chi.defined())
        throw PreconditionFailed("residue field at " + to_string(q) +
                                 " has no p-th roots of unity");
    for (const RatPoly& b : basis_) {
        FpPoly rb;
        try {
            rb = fp_mod(fp_from_rat(b, q), fac);
        } catch (const BadPrime&) {
            throw InternalError("target prime divides basis denominators");
        }
        if (rb.is_zero()) throw InternalError("target prime divides basis data");
        BigInt c0 = rb.c.size() > 0 ? rb.c[0] : BigInt(0);
        BigInt c1 = rb.c.size() > 1 ? rb.c[1] : BigInt(0);
        out.push_back(*chi(fq2(q, m0, m1, c0, c1), char_scale));
    }
    return out;
}

}  // namespace tame
