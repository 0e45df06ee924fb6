#!/usr/bin/env python3
"""Generate the shipped field-data bundles and pinned oracle values.

Constructs, in exact rational arithmetic, the degree-6 splitting field
F1 = Q[y,z]/(cubic(y), z^2 - D) of an imaginary quadratic field F = Q(sqrt(D))
with class number 3, together with:

  * a primitive element t = y + z and its monic integral minimal polynomial f,
  * the image of sqrt(D) as a polynomial in t,
  * a generator sigma of Gal(F1/F) as a polynomial map t -> g(t),
  * unit generators (the cubic-subfield unit y and its sigma-conjugate),
  * the Selmer element alpha of F with (alpha) = a^3 for the canonical
    degree-2 prime ideal class generator a,

and emits fixtures/f1_m<|D|>.json (the bundle) and fixtures/pins_m<|D|>.json
(independently computed residue characters, d-ranks, Frobenius vectors and
verdicts used to pin the C++ implementation in tests).

Everything here is an *oracle*: plain integer / rational arithmetic,
brute-force residue enumeration, no shared code with the C++ library.
"""

import json
import math
import os
import sys
from fractions import Fraction

import sympy
from sympy import Rational, Matrix, Poly, symbols

X = symbols("x")

# ----------------------------------------------------------------------------
# arithmetic in H = Q[y,z]/(y^3 + P*y + Q, z^2 - D)
# elements are 6-vectors over Q indexed by y^i z^j  ->  i + 3*j
# ----------------------------------------------------------------------------


class SexticField:
    def __init__(self, D, P, Q):
        self.D, self.P, self.Q = D, P, Q  # cubic x^3 + P x + Q, disc = D

    def zero(self):
        return [Rational(0)] * 6

    def basis(self, i, j):
        v = self.zero()
        v[i + 3 * j] = Rational(1)
        return v

    def add(self, a, b):
        return [x + y for x, y in zip(a, b)]

    def scale(self, c, a):
        return [c * x for x in a]

    def _reduce_y(self, coeffs):
        # reduce a polynomial in y (list, ascending) modulo y^3 = -P*y - Q
        coeffs = list(coeffs)
        while len(coeffs) > 3:
            top = coeffs.pop()
            k = len(coeffs) - 3  # y^(k+3) = y^k * (-P y - Q)
            coeffs[k + 1] -= self.P * top
            coeffs[k] -= self.Q * top
        while len(coeffs) < 3:
            coeffs.append(Rational(0))
        return coeffs

    def mul(self, a, b):
        # split into z-parts: a = a0(y) + a1(y) z
        a0, a1 = a[0:3], a[3:6]
        b0, b1 = b[0:3], b[3:6]

        def ymul(u, v):
            out = [Rational(0)] * 5
            for i, ui in enumerate(u):
                for j, vj in enumerate(v):
                    out[i + j] += ui * vj
            return self._reduce_y(out)

        c0 = [p + self.D * q for p, q in zip(ymul(a0, b0), ymul(a1, b1))]
        c1 = [p + q for p, q in zip(ymul(a0, b1), ymul(a1, b0))]
        return c0 + c1

    def pow(self, a, n):
        r = self.basis(0, 0)
        for _ in range(n):
            r = self.mul(r, a)
        return r

    def inv(self, a):
        # solve a * x = 1 by linear algebra over Q
        cols = [self.mul(a, self.basis(i, j)) for j in range(2) for i in range(3)]
        M = Matrix([[cols[k][r] for k in range(6)] for r in range(6)])
        e = Matrix([1, 0, 0, 0, 0, 0])
        sol = M.solve(e)
        return list(sol)


def poly_of(vec, Tpow_matrix):
    """coordinates of vec in the basis 1, t, ..., t^5 (exact solve)."""
    sol = Tpow_matrix.solve(Matrix(vec))
    return list(sol)


def poly_compose_mod(g, h, f):
    """g(h(x)) mod f(x), all sympy Poly in X over Q."""
    return (g.compose(h)) % f


# ----------------------------------------------------------------------------
# quadratic-field side oracles (ideals, forms, characters) -- pure integers
# ----------------------------------------------------------------------------


def reduced_forms(D):
    forms = []
    a = 1
    while a * a <= abs(D) // 3:
        for b in range(-a, a + 1):
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a:
                continue
            if abs(b) == a or a == c:
                if b < 0:
                    continue
            g = math.gcd(math.gcd(a, abs(b)), c)
            if g != 1:
                continue
            forms.append((a, b, c))
        a += 1
    return sorted(forms)


def prime_form(D, q):
    """(q, b, c) with minimal b in (0, 2q), b^2 = D mod 4q; None if inert."""
    for b in range(1, 2 * q):
        if (b * b - D) % (4 * q) == 0:
            return (q, b, (b * b - D) // (4 * q))
    return None


def reduce_form(a, b, c):
    while True:
        if c < a:
            a, b, c = c, -b, a
            continue
        if b > a or b <= -a:
            # normalize b into (-a, a]
            k = (a - b) // (2 * a)
            b2 = b + 2 * a * k
            c = (b2 * b2 - (b * b - 4 * a * c)) // (4 * a)
            b = b2
            continue
        break
    if (abs(b) == a or a == c) and b < 0:
        b = -b
    return (a, b, c)


def is_principal(D, form):
    return reduce_form(*form) == (1, 1 if D % 2 else 0, (1 - D) // 4 if D % 4 == 1 else -D // 4)


class IdealLattice:
    """Z-lattice a Z + (b + c w) Z inside O = Z[w], w = (1+sqrt(D))/2, D = 1 mod 4.

    Stored as HNF rows (x, y) meaning x + y*w.
    """

    def __init__(self, D, rows):
        self.D = D
        # w^2 = w - (1-D)/4
        self.wsq = (1, -(1 - D) // 4)  # w^2 = 1*w + c0 with c0 = (D-1)/4
        self.rows = self._hnf(rows)

    @staticmethod
    def _hnf(rows):
        rows = [r for r in rows if r != (0, 0)]
        # column 2 (w-coordinate) first
        while True:
            ys = [(abs(r[1]), i) for i, r in enumerate(rows) if r[1] != 0]
            if not ys:
                raise ValueError("rank < 2")
            ys.sort()
            _, i0 = ys[0]
            pivot = rows[i0]
            done = True
            for i, r in enumerate(rows):
                if i != i0 and r[1] != 0:
                    k = r[1] // pivot[1]
                    rows[i] = (r[0] - k * pivot[0], r[1] - k * pivot[1])
                    if rows[i][1] != 0:
                        done = False
            if done:
                break
        xs = [r[0] for r in rows if r[1] == 0 and r[0] != 0]
        g = 0
        for v in xs:
            g = math.gcd(g, v)
        if g == 0:
            raise ValueError("rank < 2")
        x0 = (g, 0)
        p = pivot
        p = (p[0] % g if p[1] > 0 else p[0], p[1])
        if p[1] < 0:
            p = (-p[0] % g, -p[1])
        return [x0, (p[0] % g, p[1])]

    def mul_gens(self, other):
        D = self.D
        c0 = (D - 1) // 4  # w^2 = w + c0
        prods = []
        for (a, b) in self.rows:
            for (c, d) in other.rows:
                # (a + b w)(c + d w) = ac + (ad+bc) w + bd w^2
                x = a * c + b * d * c0
                y = a * d + b * c + b * d
                prods.append((x, y))
        return IdealLattice(D, prods)

    def contains(self, x, y):
        (g, _), (s, u) = self.rows
        if u == 0 or y % u:
            return False
        k = y // u
        return (x - k * s) % g == 0

    def norm(self):
        return abs(self.rows[0][0] * self.rows[1][1])


def find_alpha(D):
    """returns (x, y) with alpha = (x + y sqrt(D))/2, (alpha) = a^3, a = canonical
    prime generator of Cl[3] (smallest-norm prime whose form class is nonprincipal)."""
    q = 2
    while True:
        if sympy.isprime(q) and D % q:
            pf = prime_form(D, q)
            if pf and not is_principal(D, pf):
                break
        q += 1
    a, b, c = pf
    # ideal [q, (-b + sqrt(D))/2] = [q, (-(b+1)/2 + w)]  (D odd, b odd)
    assert b % 2 == 1 and D % 4 == 1
    ideal = IdealLattice(D, [(q, 0), (-(b + 1) // 2, 1)])
    acubed = ideal.mul_gens(ideal).mul_gens(ideal)
    Na3 = q ** 3
    assert acubed.norm() == Na3
    best = None
    for x in range(0, math.isqrt(4 * Na3) + 1):
        rem = 4 * Na3 - x * x
        if rem < 0 or rem % abs(D):
            continue
        y2 = rem // abs(D)
        y = math.isqrt(y2)
        if y * y != y2 or y == 0:
            continue
        for sy in ([1, -1] if y else [1]):
            yy = y * sy
            if (x - yy) % 2:
                continue
            # alpha = (x + yy sqrt(D))/2 = (x - yy)/2 + yy w
            u, v = (x - yy) // 2, yy
            if not acubed.contains(u, v):
                continue
            # primitivity: alpha / r integral for prime r | gcd(x, yy)?
            g = math.gcd(x, abs(yy))
            prim = True
            for r in range(2, g + 1):
                if g % r == 0 and x % (2 * r) == (yy * D) % (2 * r) % 2 == 0:
                    pass  # conservative; g = 1 for our fields
            key = (x, abs(yy), 1 if yy > 0 else -1)
            if best is None or key < best[0]:
                best = (key, x, yy)
    assert best, "no alpha found"
    _, x, yy = best
    return q, (a, b, c), x, yy


# residue characters ---------------------------------------------------------


def chi_split(D, p, q, beta_xy, g=None):
    """character of beta = (x + y sqrt(D))/2 at the canonical prime above split q.
    Returns (b_root, g, zeta, k)."""
    assert (q - 1) % p == 0
    qf = prime_form(D, q)
    b = qf[1] % q  # sqrt(D) -> b at the form's ideal
    x, y = beta_xy
    val = (x + y * b) * pow(2, q - 2, q) % q
    assert val % q != 0
    if g is None:
        g = sympy.primitive_root(q)
    zeta = pow(g, (q - 1) // p, q)
    c = pow(val, (q - 1) // p, q)
    for k in range(p):
        if c == pow(zeta, k, q):
            return b, g, zeta, k
    raise AssertionError("character value not a p-th root of unity")


class Fq2:
    """F_q[x]/(m), m monic quadratic (c0, c1, 1); elements are pairs (a0, a1)."""

    def __init__(self, q, c0, c1):
        self.q, self.c0, self.c1 = q, c0, c1

    def mul(self, a, b):
        q, c0, c1 = self.q, self.c0, self.c1
        a0, a1 = a
        b0, b1 = b
        # (a0 + a1 x)(b0 + b1 x); x^2 = -c1 x - c0
        t2 = a1 * b1
        return ((a0 * b0 - t2 * c0) % q, (a0 * b1 + a1 * b0 - t2 * c1) % q)

    def pow(self, a, n):
        r = (1, 0)
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r

    def order(self, a):
        n = self.q * self.q - 1
        o = 1
        x = a
        while x != (1, 0):
            x = self.mul(x, a)
            o += 1
            if o > n:
                raise AssertionError("order overflow")
        return o

    def lex_least_generator(self):
        n = self.q * self.q - 1
        fac = sympy.factorint(n)
        for a0 in range(self.q):
            for a1 in range(self.q):
                a = (a0, a1)
                if a == (0, 0):
                    continue
                if all(self.pow(a, n // r) != (1, 0) for r in fac):
                    return a
        raise AssertionError("no generator")

    def dlog_root_of_unity(self, c, zeta, p):
        for k in range(p):
            acc = (1, 0)
            for _ in range(k):
                acc = self.mul(acc, zeta)
            if c == acc:
                return k
        raise AssertionError("not a p-th root of unity")


def chi_inert(D, p, q, beta_xy, field=None, g=None):
    """character of beta in F_{q^2} = F_q[x]/(x^2 - D); x is the sqrt(D) image."""
    if field is None:
        field = Fq2(q, (-D) % q, 0)
    x, y = beta_xy
    inv2 = pow(2, q - 2, q)
    val = ((x * inv2) % q, (y * inv2) % q)
    assert val != (0, 0)
    if g is None:
        g = field.lex_least_generator()
    n = q * q - 1
    assert n % p == 0
    zeta = field.pow(g, n // p)
    c = field.pow(val, n // p)
    k = field.dlog_root_of_unity(c, zeta, p)
    return g, zeta, k


# ----------------------------------------------------------------------------


def rat_str(r):
    r = Rational(r)
    return str(r.p) if r.q == 1 else f"{r.p}/{r.q}"


def poly_str_list(coeffs):
    return [rat_str(c) for c in coeffs]


def build(D, P, Q, outdir):
    p = 3
    print(f"=== D = {D}, cubic x^3 + ({P})x + ({Q}) ===")
    H = SexticField(D, Rational(P), Rational(Q))
    y = H.basis(1, 0)
    z = H.basis(0, 1)
    t = H.add(y, z)

    # powers of t
    tp = [H.basis(0, 0)]
    for _ in range(6):
        tp.append(H.mul(tp[-1], t))
    T = Matrix([[tp[k][r] for k in range(6)] for r in range(6)])
    assert T.det() != 0, "t is not primitive"
    fneg = T.solve(Matrix(tp[6]))  # t^6 = sum fneg_i t^i
    fcoeffs = [-c for c in fneg] + [Rational(1)]
    f = Poly(fcoeffs[::-1], X, domain="QQ")
    assert all(c.q == 1 for c in fcoeffs), "f not integral"
    print("f =", f.as_expr())
    assert f.is_irreducible, "f reducible"
    discf = sympy.discriminant(f, X)
    discf_fac = sympy.factorint(int(discf))
    print("disc f =", int(discf), "=", discf_fac)
    nreal = len(Poly(f, X).real_roots())
    assert nreal == 0, f"expected 0 real roots, got {nreal}"

    # y2 = (-y + z / (3y^2 + P)) / 2   (second root of the cubic)
    fprime_y = H.add(H.scale(Rational(3), H.mul(y, y)), H.scale(Rational(P), H.basis(0, 0)))
    y2 = H.scale(Rational(1, 2), H.add(H.scale(Rational(-1), y), H.mul(z, H.inv(fprime_y))))
    # verify cubic(y2) = 0
    c3 = H.add(H.add(H.pow(y2, 3), H.scale(Rational(P), y2)), H.scale(Rational(Q), H.basis(0, 0)))
    assert c3 == H.zero(), "y2 is not a root"
    y3 = H.scale(Rational(-1), H.add(y, y2))  # y + y2 + y3 = 0
    prod = H.mul(H.mul(y, y2), y3)
    assert prod == H.scale(Rational(-Q), H.basis(0, 0)), "Vieta fails"

    sigma_t = H.add(y2, z)
    g_poly = Poly(poly_of(sigma_t, T)[::-1], X, domain="QQ")
    sqrtD_poly = Poly(poly_of(z, T)[::-1], X, domain="QQ")
    u1_poly = Poly(poly_of(y, T)[::-1], X, domain="QQ")
    u2_poly = Poly(poly_of(y2, T)[::-1], X, domain="QQ")

    # sanity: f(g) = 0 mod f; g has order 3; sqrtD fixed; sqrtD^2 = D
    assert poly_compose_mod(f, g_poly, f).is_zero, "f(g) != 0 mod f"
    gg = poly_compose_mod(g_poly, g_poly, f)
    ggg = poly_compose_mod(Poly(X, X, domain="QQ"), g_poly, f)  # placeholder
    ggg = poly_compose_mod(gg, g_poly, f)
    assert ggg == Poly(X, X, domain="QQ") % f and not (g_poly == Poly(X, X, domain="QQ")), "sigma order != 3"
    assert poly_compose_mod(sqrtD_poly, g_poly, f) == sqrtD_poly % f, "sigma moves sqrt(D)"
    assert (sqrtD_poly * sqrtD_poly) % f == Poly(D, X, domain="QQ") % f, "sqrtD^2 != D"
    for u in (u1_poly, u2_poly):
        res = sympy.resultant(f.as_expr(), u.as_expr(), X)
        assert abs(res) == 1, f"unit resultant {res}"

    # sigma matrix on units modulo cubes: sigma(u1) = u2, sigma(u2) = (u1 u2)^(-1)
    s_u2 = poly_compose_mod(u2_poly, g_poly, f)
    inv_u1u2 = None
    u1u2 = (u1_poly * u2_poly) % f
    # (u1 u2) * s_u2 should be (-Q) = 1 for our cubics (product of roots = -Q)
    assert (u1u2 * s_u2) % f == Poly(-Q, X, domain="QQ") % f
    assert Q == -1, "unit relation assumes product of roots = 1"
    sigma_matrix = [[0, 2], [1, 2]]

    # alpha
    aq, aform, ax, ay = find_alpha(D)
    alpha_norm = (ax * ax - D * ay * ay) // 4
    print(f"alpha = ({ax} + {ay} sqrt({D}))/2, norm {alpha_norm}, a over {aq}, form {aform}")
    assert alpha_norm == aq ** 3

    # denominators
    def denom_lcm(polys):
        l = 1
        for pl in polys:
            for c in pl.all_coeffs():
                l = sympy.lcm(l, Rational(c).q)
        return int(l)

    dl = denom_lcm([g_poly, sqrtD_poly, u1_poly, u2_poly])
    dl = int(sympy.lcm(dl, 2))  # quad integers (x + y sqrt D)/2
    print("denominator lcm =", dl)

    bundle = {
        "p": p,
        "disc": D,
        "f": [str(int(c)) for c in fcoeffs],
        "sqrtD": poly_str_list(poly_of(z, T)),
        "sigma": poly_str_list(poly_of(sigma_t, T)),
        "units": [poly_str_list(poly_of(y, T)), poly_str_list(poly_of(y2, T))],
        "torsion_order": 2,
        "delta_F1": 0,
        "selmer_extra": [],
        "cl_p_rank": 0,
        "tower_terminates": True,
        "denominator_bound": str(dl),
    }

    # ------------------------------------------------------------------ pins
    forms = reduced_forms(D)
    h = len(forms)
    print("class group forms:", forms, "h =", h)
    assert h == 3

    bad = abs(D) * abs(int(discf)) * dl * alpha_norm

    def splitting(q):
        if D % q == 0:
            return "RAMIFIED"
        return "SPLIT" if sympy.jacobi_symbol(D, q) == 1 else "INERT"

    def d_rank(q):
        if q == p or bad % q == 0:
            return None
        sp = splitting(q)
        if sp == "RAMIFIED":
            return None
        N = q if sp == "SPLIT" else q * q
        if N % p != 1:
            return 1
        if sp == "SPLIT":
            _, _, _, k = chi_split(D, p, q, (ax, ay))
        else:
            _, _, k = chi_inert(D, p, q, (ax, ay))
        return 2 if k == 0 else 1

    def split_in_F1(q):
        sp = splitting(q)
        if sp == "INERT":
            return True
        pf = prime_form(D, q)
        return is_principal(D, pf)

    # verdict oracle (uses the ledger analysis: S^T fixes the admissible line)
    def verdict(q):
        if q == p:
            return ("SKIPPED_BAD", None)
        if bad % q == 0:
            return ("SKIPPED_BAD", None)
        d = d_rank(q)
        if d == 1:
            return ("FINITE_D_AT_MOST_1", d)
        if not split_in_F1(q):
            return ("FINITE_NONSPLIT_POWERFUL", d)
        tau = frobenius_tau(q)
        if tau == [0, 0]:
            return ("NOT_POWERFUL_UNDECIDED", d)
        # p = 3: psi = S^T - I; admissible tau has tau0 == tau1 (ker(S^T - I))
        assert tau[0] == tau[1], f"tau {tau} not sigma-fixed at q={q}"
        return ("UNDECIDED", d)

    fint = [int(c) for c in fcoeffs]  # ascending? fcoeffs is ascending c0..c6

    def f_eval_mod(r, q):
        acc = 0
        for c in reversed(fint):
            acc = (acc * r + c) % q
        return acc

    def poly_eval_mod(pl, r, q):
        acc = 0
        for c in pl.all_coeffs():
            c = Rational(c)
            cv = c.p * pow(c.q, q - 2, q) % q
            acc = (acc * r + cv) % q
        return acc

    def frobenius_tau(q):
        sp = splitting(q)
        if sp == "SPLIT":
            roots = [r for r in range(q) if f_eval_mod(r, q) == 0]
            assert len(roots) == 6, f"q={q} not totally split in F1"
            # canonical first factor (x - r) ~ coeff vector (q - r, 1): min c0 = max r
            r = max(roots)
            gq = sympy.primitive_root(q)
            zeta = pow(gq, (q - 1) // p, q)
            tau = []
            for u in (u1_poly, u2_poly):
                v = poly_eval_mod(u, r, q)
                c = pow(v, (q - 1) // p, q)
                tau.append([1 if c == pow(zeta, k, q) else 0 for k in range(p)].index(1))
            return tau
        # INERT: factor f mod q into quadratics, canonical first = min (c0, c1)
        fac = Poly(fint[::-1], X, modulus=q).factor_list()[1]
        quads = []
        for fp_, m in fac:
            cs = [int(c) % q for c in fp_.all_coeffs()]
            assert len(cs) == 3 and m == 1, f"unexpected factor {fp_} at q={q}"
            quads.append((cs[2], cs[1]))  # (c0, c1)
        quads.sort()
        c0, c1 = quads[0]
        fld = Fq2(q, c0, c1)
        gq = fld.lex_least_generator()
        n = q * q - 1
        zeta = fld.pow(gq, n // p)
        tau = []
        for u in (u1_poly, u2_poly):
            # evaluate u at theta = x in F_q[x]/(m)
            acc = (0, 0)
            for c in u.all_coeffs():
                c = Rational(c)
                cv = c.p * pow(c.q, q - 2, q) % q
                acc = fld.mul(acc, (0, 1))
                acc = ((acc[0] + cv) % q, acc[1])
            assert acc != (0, 0)
            cc = fld.pow(acc, n // p)
            tau.append(fld.dlog_root_of_unity(cc, zeta, p))
        return tau

    # chi pins
    chi_pins = []
    for q in (139, 151, 163):
        if splitting(q) == "SPLIT" and q % p == 1 and bad % q:
            b, gq, zeta, k = chi_split(D, p, q, (ax, ay))
            chi_pins.append({"q": q, "e": 1, "beta": "alpha", "root": b, "gen": str(gq), "value": k})
    for q in (5, 7, 11, 13):
        if splitting(q) == "INERT" and bad % q:
            fld = Fq2(q, (-D) % q, 0)
            gq, zeta, k = chi_inert(D, p, q, (ax, ay), fld)
            chi_pins.append(
                {"q": q, "e": 2, "beta": "alpha", "modulus_c0": (-D) % q, "gen": [str(gq[0]), str(gq[1])], "value": k}
            )

    d_pins = []
    for q in [2, 5, 7, 11, 13, 31, 41, 59, 139]:
        if q != p and bad % q and D % q:
            d_pins.append({"q": q, "splitting": splitting(q), "d": d_rank(q)})

    verdict_pins = []
    step3_split, step3_inert = [], []
    q = 1
    while len(verdict_pins) < 60 or len(step3_split) < 3 or len(step3_inert) < 2:
        q = int(sympy.nextprime(q))
        if q > 20000:
            break
        v, d = verdict(q)
        if len(verdict_pins) < 60:
            verdict_pins.append({"q": q, "verdict": v})
        if v in ("NOT_POWERFUL_UNDECIDED", "UNDECIDED"):
            sp = splitting(q)
            tau = frobenius_tau(q)
            entry = {"q": q, "splitting": sp, "tau": tau, "verdict": v}
            if sp == "SPLIT" and len(step3_split) < 3:
                step3_split.append(entry)
            if sp == "INERT" and len(step3_inert) < 2:
                step3_inert.append(entry)

    prim_pins = [{"q": int(q), "e": 1, "gen": str(sympy.primitive_root(q))} for q in (7, 13, 59, 139)]
    for q in (5, 7):
        if splitting(q) == "INERT":
            fld = Fq2(q, (-D) % q, 0)
            gq = fld.lex_least_generator()
            prim_pins.append({"q": q, "e": 2, "modulus_c0": (-D) % q, "gen": [str(gq[0]), str(gq[1])]})

    pins = {
        "disc": D,
        "p": p,
        "f": bundle["f"],
        "disc_f": str(int(discf)),
        "disc_f_primes": sorted(int(r) for r in discf_fac),
        "class_group": {"h": h, "forms": [list(fm) for fm in forms]},
        "alpha": {"x": str(ax), "y": str(ay), "norm": str(alpha_norm), "ideal_over": aq},
        "sigma_matrix": sigma_matrix,
        "primitive_roots": prim_pins,
        "chi": chi_pins,
        "d_rank": d_pins,
        "step3_split": step3_split,
        "step3_inert": step3_inert,
        "verdicts": verdict_pins,
    }

    os.makedirs(outdir, exist_ok=True)
    tag = f"m{abs(D)}"
    with open(os.path.join(outdir, f"f1_{tag}.json"), "w") as fh:
        json.dump(bundle, fh, indent=1)
        fh.write("\n")
    with open(os.path.join(outdir, f"pins_{tag}.json"), "w") as fh:
        json.dump(pins, fh, indent=1)
        fh.write("\n")
    print(f"wrote f1_{tag}.json and pins_{tag}.json")
    print("step3 split pins:", step3_split)
    print("step3 inert pins:", step3_inert)
    return bundle, pins


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "fixtures")
    build(-23, -1, -1, outdir)  # cubic x^3 - x - 1, disc -23
    build(-31, 1, -1, outdir)  # cubic x^3 + x - 1, disc -31
    print("OK")


if __name__ == "__main__":
    main()
