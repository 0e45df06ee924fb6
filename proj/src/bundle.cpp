#include "tame/bundle.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "tame/errors.hpp"

namespace tame {

namespace {

using nlohmann::json;

RatPoly poly_from_json(const json& arr, const char* what) {
    if (!arr.is_array()) throw BundleInvalid(std::string(what) + " must be an array");
    std::vector<Rational> c;
    for (const auto& e : arr) {
        if (!e.is_string()) throw BundleInvalid(std::string(what) + " entries must be strings");
        try {
            c.push_back(parse_rational(e.get<std::string>()));
        } catch (const ConfigError& err) {
            throw BundleInvalid(std::string(what) + ": " + err.what());
        }
    }
    return RatPoly(std::move(c));
}

BigInt bigint_from_json(const json& v, const char* what) {
    try {
        if (v.is_string()) return parse_bigint(v.get<std::string>());
        if (v.is_number_integer()) return BigInt(static_cast<long>(v.get<long long>()));
    } catch (const ConfigError& err) {
        throw BundleInvalid(std::string(what) + ": " + err.what());
    }
    throw BundleInvalid(std::string(what) + " must be an integer or decimal string");
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw BundleInvalid(std::string("missing field '") + name + "'");
    return *it;
}

// Subset sums of a multiset of factor degrees: the possible degrees of
// products of the irreducible factors mod one prime.
std::set<unsigned> degree_subset_sums(const std::vector<unsigned>& degs) {
    std::set<unsigned> sums{0};
    for (unsigned d : degs) {
        std::set<unsigned> nx = sums;
        for (unsigned s : sums) nx.insert(s + d);
        sums = std::move(nx);
    }
    return sums;
}

}  // namespace

FieldDataBundle parse_bundle_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw BundleInvalid(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw BundleInvalid("bundle must be a JSON object");

    FieldDataBundle b;
    const json& jp = field(j, "p");
    if (!jp.is_number_unsigned() || jp.get<unsigned>() < 2)
        throw BundleInvalid("p must be a prime >= 2");
    b.p = jp.get<unsigned>();
    b.disc = bigint_from_json(field(j, "disc"), "disc");
    b.spec.f = poly_from_json(field(j, "f"), "f");
    b.spec.sqrtD = poly_from_json(field(j, "sqrtD"), "sqrtD");
    b.spec.sigma = poly_from_json(field(j, "sigma"), "sigma");
    const json& ju = field(j, "units");
    if (!ju.is_array()) throw BundleInvalid("units must be an array");
    for (const auto& u : ju) b.units.push_back(poly_from_json(u, "unit"));
    const json& jt = field(j, "torsion_order");
    if (!jt.is_number_unsigned() || jt.get<unsigned>() == 0)
        throw BundleInvalid("torsion_order must be a positive integer");
    b.torsion_order = jt.get<unsigned>();
    const json& jd = field(j, "delta_F1");
    if (!jd.is_number_integer() || (jd.get<int>() != 0 && jd.get<int>() != 1))
        throw BundleInvalid("delta_F1 must be 0 or 1");
    b.delta_F1 = jd.get<int>();
    const json& js = field(j, "selmer_extra");
    if (!js.is_array()) throw BundleInvalid("selmer_extra must be an array");
    for (const auto& e : js) {
        if (!e.is_object()) throw BundleInvalid("selmer_extra entries must be objects");
        RatPoly a = poly_from_json(field(e, "alpha"), "selmer_extra.alpha");
        BigInt nr = bigint_from_json(field(e, "norm_root"), "selmer_extra.norm_root");
        b.selmer_extra.emplace_back(std::move(a), std::move(nr));
    }
    const json& jr = field(j, "cl_p_rank");
    if (!jr.is_number_unsigned()) throw BundleInvalid("cl_p_rank must be a nonnegative integer");
    b.cl_p_rank = jr.get<unsigned>();
    const json& jw = field(j, "tower_terminates");
    if (!jw.is_boolean()) throw BundleInvalid("tower_terminates must be a boolean");
    b.tower_terminates = jw.get<bool>();
    b.denominator_bound = bigint_from_json(field(j, "denominator_bound"), "denominator_bound");
    if (b.denominator_bound <= 0) throw BundleInvalid("denominator_bound must be positive");
    return b;
}

FieldDataBundle load_bundle(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open bundle file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_bundle_json(ss.str());
}

ValidatedBundle validate_bundle(const QuadField& Q, const FieldDataBundle& b) {
    const RatPoly& f = b.spec.f;
    const unsigned p = b.p;

    if (p != Q.p()) throw BundleInvalid("bundle p disagrees with the configured p");
    if (b.disc != Q.D()) throw BundleInvalid("bundle disc disagrees with the configured field");
    const int deg = f.degree();
    if (deg != int(2 * p)) throw BundleInvalid("f must have degree 2p");
    if (f.lead() != 1) throw BundleInvalid("f must be monic");
    for (const auto& coef : f.c)
        if (denominator(coef) != 1) throw BundleInvalid("f must have integer coefficients");

    // Coefficient denominators must divide the declared bound.
    auto check_denoms = [&](const RatPoly& a, const char* what) {
        if (a.degree() >= deg)
            throw BundleInvalid(std::string(what) + " must have degree < deg f");
        for (const auto& coef : a.c)
            if (bmod(b.denominator_bound, denominator(coef)) != 0)
                throw BundleInvalid(std::string(what) +
                                    " has a denominator outside the declared bound");
    };
    check_denoms(b.spec.sqrtD, "sqrtD");
    check_denoms(b.spec.sigma, "sigma");
    for (const auto& u : b.units) check_denoms(u, "unit");
    for (const auto& [a, nr] : b.selmer_extra) {
        (void)nr;
        check_denoms(a, "selmer alpha");
    }

    Rational disc_f = discriminant(f);
    if (disc_f == 0) throw BundleInvalid("f is not squarefree");

    // Irreducibility of f over Q: reduce mod several good primes; the degree
    // of any rational factor must be a subset sum of the factor degrees at
    // every good prime. If the intersection of those subset-sum sets is
    // {0, deg}, f is irreducible.
    {
        std::set<unsigned> possible;
        for (unsigned d = 0; d <= unsigned(deg); ++d) possible.insert(d);
        BigInt ell = 1;
        unsigned used = 0;
        for (unsigned tries = 0; tries < 60 && used < 12; ++tries) {
            mpz_nextprime(ell.get_mpz_t(), ell.get_mpz_t());
            std::vector<FpPoly> factors;
            try {
                factors = factor_mod(f, ell);
            } catch (const RamifiedModulus&) {
                continue;
            }
            ++used;
            std::vector<unsigned> degs;
            for (const auto& g : factors) degs.push_back(unsigned(g.degree()));
            std::set<unsigned> sums = degree_subset_sums(degs);
            std::set<unsigned> inter;
            std::set_intersection(possible.begin(), possible.end(), sums.begin(), sums.end(),
                                  std::inserter(inter, inter.begin()));
            possible = std::move(inter);
            if (possible.size() == 2) break;  // only {0, deg} remain
        }
        std::set<unsigned> trivial{0, unsigned(deg)};
        if (possible != trivial)
            throw BundleInvalid("cannot certify that f is irreducible over Q");
    }

    // (ii) sigma has order exactly p and fixes sqrt(D); sigma permutes roots.
    {
        const RatPoly& g = b.spec.sigma;
        RatPoly fg = rp_compose_mod(f, g, f);
        if (!fg.is_zero()) throw SigmaOrder("sigma map does not permute the roots of f");
        RatPoly theta(std::vector<Rational>{Rational(0), Rational(1)});
        if (g == theta) throw SigmaOrder("sigma map is the identity");
        RatPoly it = g;
        for (unsigned k = 1; k < p; ++k) it = rp_compose_mod(it, g, f);
        if (!(it == theta)) throw SigmaOrder("sigma map does not have order p");
        RatPoly sfix = rp_compose_mod(b.spec.sqrtD, g, f);
        if (!(sfix == b.spec.sqrtD)) throw SigmaOrder("sigma map does not fix sqrt(D)");
    }

    // sqrt(D) really squares to D.
    {
        RatPoly sq = rp_mod(rp_mul(b.spec.sqrtD, b.spec.sqrtD), f);
        RatPoly constD(std::vector<Rational>{Rational(Q.D())});
        if (!(sq == constD)) throw BundleInvalid("sqrtD image does not square to disc");
    }

    // (i) units: N(u) = Res(f, u) = +-1 for monic f.
    for (const auto& u : b.units) {
        Rational r = resultant(f, u);
        if (!(r == 1 || r == -1)) throw IsNotUnit("unit generator has norm " + to_string(r));
    }

    // Unit rank from the signature of f: r1 + r2 - 1.
    int r1 = sturm_real_roots(f);
    if ((deg - r1) % 2 != 0) throw InternalError("impossible signature");
    unsigned r_F1 = unsigned(r1 + (deg - r1) / 2 - 1);
    if (b.units.size() != r_F1 + unsigned(b.delta_F1))
        throw BundleInvalid("unit generator count " + std::to_string(b.units.size()) +
                            " does not match r_F1 + delta = " +
                            std::to_string(r_F1 + unsigned(b.delta_F1)));

    // (iii) alpha_j norms: |N(alpha_j)| = norm_root^p.
    for (const auto& [a, nr] : b.selmer_extra) {
        Rational n = resultant(f, a);
        BigInt expect = 1;
        for (unsigned i = 0; i < p; ++i) expect *= nr;
        if (denominator(n) != 1) throw BundleInvalid("alpha_j is not integral");
        BigInt nn = numerator(n);
        if (nn < 0) nn = -nn;
        if (nn != expect)
            throw BundleInvalid("alpha_j norm " + to_string(nn) + " is not norm_root^p");
    }

    // (v) rank bookkeeping.
    if (b.cl_p_rank != b.selmer_extra.size())
        throw BundleInvalid("cl_p_rank disagrees with the number of selmer_extra entries");
    if (b.tower_terminates && b.cl_p_rank != 0)
        throw BundleInvalid("tower_terminates requires cl_p_rank = 0");
    if ((b.torsion_order % p == 0) != (b.delta_F1 == 1))
        throw BundleInvalid("delta_F1 disagrees with torsion_order");

    ValidatedBundle vb;
    vb.data = b;
    vb.r_F1 = r_F1;
    vb.n_V = r_F1 + unsigned(b.delta_F1) + b.cl_p_rank;

    // Bad primes: p, D, the denominator bound, alpha norms, disc f.
    BigInt prod = BigInt(p) * Q.D() * b.denominator_bound * numerator(disc_f);
    for (const auto& [a, nr] : b.selmer_extra) {
        (void)a;
        prod *= nr;
    }
    if (prod < 0) prod = -prod;
    std::set<BigInt> bad;
    for (const auto& [prime, mult] : factorize(prod)) {
        (void)mult;
        bad.insert(prime);
    }
    vb.bad_primes.assign(bad.begin(), bad.end());
    return vb;
}

bool is_bad_prime(const ValidatedBundle& vb, const BigInt& q) {
    return std::binary_search(vb.bad_primes.begin(), vb.bad_primes.end(), q);
}

}  // namespace tame
