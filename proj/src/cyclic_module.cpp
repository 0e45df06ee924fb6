#include "tame/cyclic_module.hpp"

#include <string>

#include "tame/errors.hpp"

namespace tame {

CyclicModule::CyclicModule(unsigned p_, FpMatrix sigma_) : p(p_), sigma(std::move(sigma_)) {
    if (p < 2 || sigma.p() != p)
        throw InvalidModule("module prime and matrix modulus disagree");
    if (sigma.rows() != sigma.cols()) throw InvalidModule("action matrix must be square");
    if (!(sigma.pow(p) == FpMatrix::identity(p, sigma.rows())))
        throw InvalidModule("action is not of order dividing p");
}

JordanType jordan_type(const CyclicModule& m) {
    const unsigned p = m.p, n = m.dim();
    FpMatrix a = m.sigma - FpMatrix::identity(p, n);
    // n_k = dim ker a^k; n_0 = 0 and n_k = n once a^k = 0.
    std::vector<unsigned> nullity(p + 2, 0);
    FpMatrix pw = FpMatrix::identity(p, n);
    for (unsigned k = 1; k <= p + 1; ++k) {
        pw = pw * a;
        nullity[k] = n - pw.rank();
    }
    JordanType t{p, std::vector<unsigned>(p, 0)};
    for (unsigned i = 1; i <= p; ++i) {
        long v = 2L * nullity[i] - nullity[i - 1] - nullity[i + 1];
        if (v < 0) throw InvalidModule("nullity sequence is not concave");
        t.t[i - 1] = static_cast<unsigned>(v);
    }
    if (t.dim() != n) throw InvalidModule("Jordan multiplicities do not exhaust the module");
    return t;
}

unsigned psi_kernel_dim(const CyclicModule& m) {
    const unsigned p = m.p, n = m.dim();
    FpMatrix a = m.sigma - FpMatrix::identity(p, n);
    return n - a.pow(p - 2).rank();
}

CyclicModule dual_module(const CyclicModule& m) {
    auto inv = m.sigma.inverse();
    if (!inv.first) throw InvalidModule("action matrix is singular");
    return CyclicModule(m.p, inv.second.transpose());
}

Rational ratio_psi(const CyclicModule& m) {
    const unsigned p = m.p, n = m.dim();
    JordanType t = jordan_type(m);
    unsigned formula_exp = 2 * t.t[p - 1] + (p >= 2 ? t.t[p - 2] : 0);
    unsigned direct_exp = n - psi_kernel_dim(m);  // #M / #M[Psi] = p^(n - kdim)
    if (formula_exp != direct_exp)
        throw InternalError("ratio exponent mismatch: formula " + std::to_string(formula_exp) +
                            " vs direct " + std::to_string(direct_exp));
    BigInt denom = 1;
    for (unsigned i = 0; i < formula_exp; ++i) denom *= p;
    Rational r(1, denom);
    r.canonicalize();
    return r;
}

unsigned tate_cohomology(const CyclicModule& m, int degree) {
    const unsigned p = m.p, n = m.dim();
    FpMatrix a = m.sigma - FpMatrix::identity(p, n);
    FpMatrix norm(p, n, n);  // N = 1 + sigma + ... + sigma^(p-1)
    FpMatrix pw = FpMatrix::identity(p, n);
    for (unsigned k = 0; k < p; ++k) {
        norm = norm + pw;
        pw = pw * m.sigma;
    }
    // Cohomology of a cyclic group is 2-periodic.
    int d = ((degree % 2) + 2) % 2;
    if (d == 0) return (n - a.rank()) - norm.rank();
    return (n - norm.rank()) - a.rank();
}

std::vector<unsigned> psi_coefficients(unsigned p) {
    // (X-1)^(p-2) expanded mod p, ascending.
    std::vector<long> c{1};
    for (unsigned k = 0; k < p - 2; ++k) {
        std::vector<long> nx(c.size() + 1, 0);
        for (size_t i = 0; i < c.size(); ++i) {
            nx[i] = ((nx[i] - c[i]) % p + p) % p;
            nx[i + 1] = (nx[i + 1] + c[i]) % p;
        }
        c = std::move(nx);
    }
    return std::vector<unsigned>(c.begin(), c.end());
}

std::vector<JordanType> prop48_allowed_types(unsigned p, unsigned r_F, int delta_F1,
                                             MuCase mu_case) {
    if ((delta_F1 == 0) != (mu_case == MuCase::NO_ZETA))
        throw InvalidCase("zeta flags disagree with the case selector");
    auto make = [&](unsigned t1, unsigned t_pm1, unsigned t_p) {
        JordanType t{p, std::vector<unsigned>(p, 0)};
        t.t[0] += t1;
        t.t[p - 2] += t_pm1;
        t.t[p - 1] += t_p;
        return t;
    };
    std::vector<JordanType> out;
    switch (mu_case) {
        case MuCase::NO_ZETA:
            out.push_back(make(0, 1, r_F));
            break;
        case MuCase::ZETA_NEW:
            out.push_back(make(1, 1, r_F));
            break;
        case MuCase::ZETA_OLD:
            out.push_back(make(1, 1, r_F));
            if (r_F >= 1) out.push_back(make(2, 2, r_F - 1));
            break;
    }
    return out;
}

CyclicModule block_module(unsigned p, const JordanType& type) {
    if (type.p != p) throw InvalidModule("type prime disagrees");
    unsigned n = type.dim();
    if (n == 0) throw InvalidModule("empty module");
    FpMatrix s(p, n, n);
    unsigned off = 0;
    for (unsigned i = 1; i <= p; ++i) {
        for (unsigned rep = 0; rep < type.t[i - 1]; ++rep) {
            // One unipotent Jordan block of size i with eigenvalue 1.
            for (unsigned r = 0; r < i; ++r) {
                s.at(off + r, off + r) = 1;
                if (r + 1 < i) s.at(off + r, off + r + 1) = 1;
            }
            off += i;
        }
    }
    return CyclicModule(p, s);
}

}  // namespace tame
