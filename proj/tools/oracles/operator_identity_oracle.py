#!/usr/bin/env python3
"""Independent symbolic oracle for the radial operator matrices.

Builds the forward 5x5 radial operator matrix and its adjoint from exact
sympy coefficients, then

  * proves the defining adjoint relation at the matrix level (see the flux
    oracle) fixed the one ambiguous scalar term: the adjoint (5,5) entry
    carries -4(a^2-1)*xi*phi1^2, matching the forward (5,5) entry,
  * confirms the fifteen conjugation identities relating the two matrices in
    their corrected form, exactly, with the frequency kept symbolic (six of
    them need explicit scalar correction terms; all corrections vanish at
    a=0),
  * confirms the row-reduction structure of the share-a-solution map: rows 1
    and 2 of the forward system applied to the mapped vector reduce exactly
    to adjoint rows, rows 3-5 reduce up to an antisymmetric pointwise
    residual (c_e, c_f below) whose contraction with the potentials cancels,
  * emits frozen numeric samples (operator applications, first-order-system
    matrices) for the C++ unit tests.

Operators are represented as lists of coefficient expressions: c[k]
multiplies the k-th radial derivative of the operand.
"""
import sympy as sp

r, w = sp.symbols('r w', positive=True)  # w: time frequency, kept symbolic


class Op:
    def __init__(self, c):
        self.c = list(c)

    def order(self):
        return len(self.c) - 1

    def apply(self, f):
        return sum(self.c[k] * sp.diff(f, r, k) for k in range(len(self.c)))

    def __add__(self, o):
        n = max(len(self.c), len(o.c))
        a = self.c + [sp.Integer(0)] * (n - len(self.c))
        b = o.c + [sp.Integer(0)] * (n - len(o.c))
        return Op([x + y for x, y in zip(a, b)])

    def __sub__(self, o):
        return self + o.scale(-1)

    def scale(self, s):
        return Op([s * x for x in self.c])

    def __matmul__(self, o):
        out = [sp.Integer(0)] * (self.order() + o.order() + 1)
        for j, aj in enumerate(self.c):
            if aj == 0:
                continue
            for k, bk in enumerate(o.c):
                if bk == 0:
                    continue
                for i in range(j + 1):
                    out[i + k] += aj * sp.binomial(j, i) * sp.diff(bk, r, j - i)
        return Op(out)


def mult(e):
    return Op([e])


def zero():
    return Op([sp.Integer(0)])


def background(rp, rm, a):
    eta = (1 - a**2) / (1 + a**2)
    b = a**2 / (1 + a**2)
    chi2 = (1 - rp / r) * (1 - rm / r) ** eta
    R = r * (1 - rm / r) ** b
    phi = -(a / (1 + a**2)) * sp.log(1 - rm / r)
    xi = -(1 - rm / r) ** (2 * b)
    Q2 = rp * rm / (1 + a**2)
    Dphi = sp.diff(phi, r)
    Dlphi = -(chi2 / 2) * Dphi
    rho = -sp.diff(R, r) / R
    mu = (chi2 / 2) * rho
    gamma = sp.diff(chi2, r) / 4
    phi1sq = -Q2 / (4 * R**4)
    Phi00 = -Dphi**2
    Phi22 = -Dlphi**2
    Phi11 = -(Dphi * Dlphi) / 2 - 2 * xi * phi1sq
    Psi2 = 2 * gamma * rho - sp.Rational(2, 3) * Dphi * Dlphi
    F1 = 8 * (gamma * Dphi + a * xi * phi1sq) / chi2
    F2 = 2 * (mu * Dphi + a * xi * phi1sq)
    return dict(a=a, chi2=chi2, R=R, xi=xi, Q2=Q2, Dphi=Dphi, Dlphi=Dlphi,
                rho=rho, mu=mu, gamma=gamma, phi1sq=phi1sq, Phi00=Phi00,
                Phi22=Phi22, Phi11=Phi11, Psi2=Psi2, F1=F1, F2=F2)


def operators(bg, l):
    """Both 5x5 matrices for the e^{-iwt} sector. Returns (O, Od, named)."""
    a = bg['a']
    c2, R, xi = bg['chi2'], bg['R'], bg['xi']
    Dphi, Dlphi = bg['Dphi'], bg['Dlphi']
    rho, mu, gm = bg['rho'], bg['mu'], bg['gamma']
    p1sq = bg['phi1sq']
    P00, P22, P11, Ps2 = bg['Phi00'], bg['Phi22'], bg['Phi11'], bg['Psi2']
    F1, F2 = bg['F1'], bg['F2']
    L2 = sp.Integer((l - 1) * (l + 2))
    I = sp.I

    D = Op([-I * w / c2, sp.Integer(1)])
    Dl = Op([-I * w / 2, -c2 / 2])
    ANG = mult(-L2 / (2 * R**2))     # value of either spin-raising-lowering composite
    sc = mult                         # scalar entry

    def Dp(s):   # D + s
        return D + sc(s)

    def Dlp(s):  # Delta + s
        return Dl + sc(s)

    O = [[zero() for _ in range(5)] for _ in range(5)]
    Od = [[zero() for _ in range(5)] for _ in range(5)]

    # ---- forward matrix ----
    O11 = Dp(-5 * rho) @ Dlp(-4 * gm + mu) - ANG - sc(3 * Ps2 - 2 * P11 + 2 * Dphi * Dlphi)
    O13 = sc(-8 * xi * p1sq) @ D - sc(4 * Dphi * (gm * Dphi - 3 * a * xi * p1sq))
    O22 = Dlp(2 * gm + 5 * mu) @ Dp(-rho) - ANG - sc(3 * Ps2 + 2 * Dphi * Dlphi - 2 * P11)
    O24 = sc(8 * xi * p1sq) @ Dlp(2 * gm) + sc(4 * Dlphi * (gm * Dphi - 3 * a * xi * p1sq))
    O31 = Dlp(-4 * gm + 2 * mu)
    O33 = (Dlp(-4 * gm) @ Dp(-2 * rho) - sc(a * Dphi) @ Dlp(-2 * gm) - ANG
           - sc(2 * (3 * Ps2 + 2 * P11)))
    O34 = sc(-a * Dphi) @ D + sc(2 * P00)
    O35 = Dp(-2 * rho).scale(a) - sc(2 * Dphi)
    O42 = Dp(-2 * rho)
    O43 = sc(a * Dlphi) @ Dlp(-2 * gm) - sc(2 * P22)
    O44 = (D.scale(-1) @ Dlp(2 * gm + 2 * mu) + sc(a * Dlphi) @ D + ANG
           + sc(2 * (3 * Ps2 + 2 * P11)))
    O45 = Dlp(2 * mu).scale(a) - sc(2 * Dlphi)
    O53 = (sc(-c2**2 * F1 / 8) @ Dp(-2 * rho)
           + (sc(Dlphi) @ Dp(-rho) - sc(2 * a * xi * p1sq)) @ Dlp(-2 * gm + mu)
           - sc(Dlphi) @ ANG - sc(mu * F2)
           - sc(P22 * Dphi))
    O54 = (sc(F2 - mu * Dphi) @ Dp(-rho)
           - Dp(-3 * rho) @ sc(Dphi) @ Dlp(2 * gm + 2 * mu)
           + sc(Dphi) @ ANG
           + sc(Dlphi * sp.diff(rho, r) - 2 * a * xi * p1sq * rho)
           + sc(Dphi * (3 * Ps2 + 2 * P11)))
    O55 = (Dp(-3 * rho) @ Dlp(3 * mu) - ANG
           + sc(-3 * Ps2 + 2 * mu * rho - 3 * Dphi * Dlphi
                - 4 * (a**2 - 1) * xi * p1sq))

    O[0] = [O11, zero(), O13, sc(-F1 * Dphi), sc(F1)]
    O[1] = [zero(), O22, sc(c2**2 * Dlphi * F1 / 4), O24, sc(c2**2 * F1 / 4)]
    O[2] = [O31, zero(), O33, O34, O35]
    O[3] = [zero(), O42, O43, O44, O45]
    O[4] = [sc(c2**2 * F1 / 8), sc(F1 / 2), O53, O54, O55]

    # ---- adjoint matrix ----
    # The (5,5) coupling scalar is -4(a^2-1)*xi*phi1^2, same sign as the
    # forward entry; this is the reading singled out by the adjoint relation
    # and by the conjugation identity for the (5,5) pair.
    Od11 = Dlp(2 * gm + mu) @ Dp(3 * rho) - ANG - sc(3 * Ps2 - 2 * P11 + 2 * Dphi * Dlphi)
    Od13 = sc(8 * xi * p1sq) @ Dp(2 * rho) + sc(F1 * Dlphi)
    Od22 = Dp(-rho) @ Dlp(-4 * gm - 3 * mu) - ANG - sc(3 * Ps2 - 2 * P11 + 2 * Dphi * Dlphi)
    Od24 = sc(-8 * xi * p1sq) @ Dlp(-4 * gm - 2 * mu) + sc((c2 / 2) * F1 * Dlphi)
    Od31 = Dlp(2 * gm).scale(-1)
    Od33 = (D @ Dlp(2 * gm + 2 * mu) + sc(a * Dphi) @ Dlp(2 * mu) - ANG
            - sc(2 * (3 * Ps2 + 2 * P11)) + sc(-a * (c2 / 2) * sp.diff(Dphi, r)))
    Od34 = (sc(a * Dphi) @ Dp(-2 * rho) + sc(a * sp.diff(Dphi, r)) + sc(2 * P00))
    Od35 = D.scale(-a) - sc(2 * Dphi)
    Od42 = D.scale(-1)
    Od43 = (sc(-a * Dlphi) @ Dlp(2 * mu) - sc(-a * (c2 / 2) * sp.diff(Dlphi, r))
            - sc(2 * P22))
    Od44 = ((Dlp(-4 * gm) + sc(a * Dlphi)).scale(-1) @ Dp(-2 * rho) + ANG
            + sc(2 * (3 * Ps2 + 2 * P11)) - sc(a * sp.diff(Dlphi, r)))
    Od45 = Dlp(-2 * gm).scale(-a) - sc(2 * Dlphi)
    Od53 = (D @ sc(c2**2 * F1) .scale(sp.Rational(1, 8))
            + Dlp(mu) @ (sc(Dlphi) @ D + sc(4 * a * xi * p1sq - mu * Dphi))
            - sc(Dlphi) @ ANG - sc(P22 * Dphi)
            - sc(mu * F2))
    Od54 = (Dp(-rho).scale(-1) @ sc(F2 - mu * Dphi)
            - Dlp(-4 * gm) @ sc(Dphi) @ Dp(rho)
            + sc(Dphi) @ ANG
            + sc(Dlphi * sp.diff(rho, r) - 2 * a * xi * p1sq * rho)
            + sc(Dphi * (3 * Ps2 + 2 * P11)))
    Od55 = (Dlp(-2 * gm - mu) @ Dp(rho) - ANG
            + sc(-3 * Ps2 + 2 * mu * rho - 3 * Dphi * Dlphi
                 - 4 * (a**2 - 1) * xi * p1sq))

    Od[0] = [Od11, zero(), Od31, zero(), sc(c2**2 * F1 / 8)]
    Od[1] = [zero(), Od22, zero(), Od42, sc(F1 / 2)]
    Od[2] = [Od13, sc(c2**2 * Dlphi * F1 / 4), Od33, Od43, Od53]
    Od[3] = [sc(-F1 * Dphi), Od24, Od34, Od44, Od54]
    Od[4] = [sc(F1), sc(c2**2 * F1 / 4), Od35, Od45, Od55]

    named = dict(O11=O11, O13=O13, O22=O22, O24=O24, O31=O31, O33=O33, O34=O34,
                 O35=O35, O42=O42, O43=O43, O44=O44, O45=O45, O53=O53, O54=O54,
                 O55=O55, Od11=Od11, Od13=Od13, Od22=Od22, Od24=Od24, Od31=Od31,
                 Od33=Od33, Od34=Od34, Od35=Od35, Od42=Od42, Od43=Od43,
                 Od44=Od44, Od45=Od45, Od53=Od53, Od54=Od54, Od55=Od55)
    return O, Od, named


def identity_list(bg, n):
    """(name, LHS Op, RHS Op) for the fifteen conjugation identities.

    Six identities carry explicit pointwise correction terms (they all vanish
    at a=0); with these corrections the set holds exactly for every coupling.
    Names follow the forward entry whose conjugation each identity expresses.
    """
    c2, R, xi = bg['chi2'], bg['R'], bg['xi']
    Dphi, Dlphi, Q2 = bg['Dphi'], bg['Dlphi'], bg['Q2']
    p1sq, F1, a = bg['phi1sq'], bg['F1'], bg['a']
    P00, P22, P11 = bg['Phi00'], bg['Phi22'], bg['Phi11']
    R4, iR4 = mult(R**4), mult(R**-4)
    ixi = mult(1 / xi)
    c8 = 1 / (8 * p1sq)   # = -R^4/(2 Q2)
    c4 = 1 / (4 * p1sq)
    return [
        ("c11", R4 @ n['O11'] @ iR4, n['Od22']),
        ("c13", mult(c8) @ (n['O13'] - mult(F1 * Dlphi)) @ ixi, n['Od42']),
        ("c22", R4 @ n['O22'] @ iR4, n['Od11']),
        ("c24", (mult(c8) @ (n['O24'] + mult(c2**2 * F1 * Dphi / 4)) @ ixi).scale(-1),
                n['Od31']),
        ("c31", mult(2 * Q2 * xi) @ n['O31'] @ iR4, n['Od24'] + mult(c2**2 * F1 * Dphi / 4)),
        ("c34", mult(-a * F1 / 2 + 4 * P00), n['Od34'] + mult(Dphi) @ n['Od35']),
        ("c33", mult(xi) @ (n['O33'] - n['O35'] @ mult(Dlphi)) @ ixi,
                (n['Od44'] + mult(Dphi) @ n['Od45']).scale(-1)),
        ("c35", mult(Q2 * xi) @ n['O35'] @ iR4 + mult(4 * Dphi * P11),
                n['Od54'] + mult(Dphi) @ n['Od55']),
        ("c42", mult(-2 * Q2 * xi) @ n['O42'] @ iR4, n['Od13'] - mult(F1 * Dlphi)),
        ("c43", mult(a * c2**2 * F1 / 8 - 4 * P22), n['Od43'] - mult(Dlphi) @ n['Od45']),
        ("c44", mult(xi) @ (n['O44'] + n['O45'] @ mult(Dphi)) @ ixi,
                (n['Od33'] - mult(Dlphi) @ n['Od35']).scale(-1)),
        ("c45", mult(-Q2 * xi) @ n['O45'] @ iR4 - mult(2 * Dphi * P22),
                n['Od53'] - mult(Dlphi) @ n['Od55']),
        ("c55", R4 @ n['O55'] @ iR4, n['Od55']),
        ("c54", mult(c4) @ (n['O54'] + n['O55'] @ mult(Dphi) - mult(4 * Dphi * P11)) @ ixi,
                n['Od35'].scale(-1)),
        ("c53", mult(c4) @ (n['O53'] - n['O55'] @ mult(Dlphi) + mult(2 * Dphi * P22)) @ ixi,
                n['Od45']),
    ]


def exact_zero(v):
    """Exact zero test robust against fractional-power radicals."""
    v = sp.cancel(sp.together(v))
    if v == 0:
        return True
    v = sp.powsimp(v, force=True)
    v = sp.radsimp(v)
    try:
        v = sp.nsimplify(v)
    except Exception:
        pass
    return sp.simplify(v) == 0


def op_residual_zero(A, B, samples, explain=False):
    """Exact zero test of A - B, coefficientwise, each w-power, at sample radii."""
    d = A - B
    first = None
    for k, ck in enumerate(d.c):
        e = sp.expand(sp.together(ck) * 1)
        if e.has(w):
            poly = sp.Poly(e, w)
            pairs = [(m[0], co) for m, co in zip(poly.monoms(), poly.coeffs())]
        else:
            pairs = [(0, e)]
        for wp, co in pairs:
            bad = False
            for rv in samples:
                if not exact_zero(co.subs({r: rv})):
                    bad = True
                    if first is None:
                        first = (k, wp, rv)
                    break
            if bad and explain:
                fn = sp.simplify(sp.cancel(sp.together(co)))
                print(f"      residual[d^{k}, w^{wp}](r) = {fn}")
    return first


def decoupling_rows(bg, O, Od, samples, label):
    """Row reduction of the forward system on the mapped potential vector.

    With v = S psi (the share-a-solution map), row i of O v must reduce to a
    pointwise combination of adjoint rows plus, for rows 3-5, an exact
    antisymmetric pointwise residual:
        row3: + c_e psi_d,  row4: + c_f psi_d,  row5: - c_e psi_e - c_f psi_f
    with c_e = -2 Dphi Phi11 / (Q^2 xi), c_f = -Dphi Phi22 / (Q^2 xi).
    The contraction psi^T (O v) therefore vanishes on-shell, which is what
    the minus-branch conserved quantity needs.
    """
    R, Q2, xi = bg['R'], bg['Q2'], bg['xi']
    Dphi, Dlphi = bg['Dphi'], bg['Dlphi']
    P11, P22 = bg['Phi11'], bg['Phi22']
    ce = -2 * Dphi * P11 / (Q2 * xi)
    cf = -Dphi * P22 / (Q2 * xi)

    S = [[zero()] * 5 for _ in range(5)]
    S[0][1] = mult(1 / R**4)
    S[1][0] = mult(1 / R**4)
    S[2][3] = mult(-1 / (2 * Q2 * xi))
    S[3][2] = mult(1 / (2 * Q2 * xi))
    S[4][2] = mult(Dphi / (2 * Q2 * xi))
    S[4][3] = mult(Dlphi / (2 * Q2 * xi))
    S[4][4] = mult(1 / (2 * R**4))

    def compose_row(Orow):
        return [sum((Orow[m] @ S[m][k] for m in range(5)), zero()) for k in range(5)]

    def combo(rows, weights):
        out = [zero()] * 5
        for W, row in zip(weights, rows):
            for k in range(5):
                out[k] = out[k] + W @ row[k]
        return out

    plans = [
        ("row1", O[0], combo([Od[1]], [mult(1 / R**4)]), {}),
        ("row2", O[1], combo([Od[0]], [mult(1 / R**4)]), {}),
        ("row3", O[2], combo([Od[3], Od[4]],
                             [mult(1 / (2 * Q2 * xi)), mult(Dphi / (2 * Q2 * xi))]),
         {4: ce}),
        ("row4", O[3], combo([Od[2], Od[4]],
                             [mult(-1 / (2 * Q2 * xi)), mult(Dlphi / (2 * Q2 * xi))]),
         {4: cf}),
        ("row5", O[4], combo([Od[4]], [mult(1 / (2 * R**4))]),
         {2: -ce, 3: -cf}),
    ]
    allok = True
    for name, Orow, Crow, extra in plans:
        Brow = compose_row(Orow)
        ok = True
        for k in range(5):
            res = Brow[k] - Crow[k]
            for o, cfn in enumerate(res.c):
                want = extra.get(k, 0) if o == 0 else 0
                e = sp.expand(sp.together(cfn - want))
                if e.has(w):
                    poly = sp.Poly(e, w)
                    cos = poly.coeffs()
                else:
                    cos = [e]
                for co in cos:
                    for rv in samples:
                        if not exact_zero(co.subs({r: rv})):
                            ok = False
                            print(f"    {label} {name} col {k+1} d^{o}: MISMATCH at r={rv}")
        print(f"  {label} decoupling {name}: {'EXACT-OK' if ok else 'FAIL'}")
        allok = allok and ok
    return allok


def reference_polys():
    """Fixed complex polynomial 5-vector used by the frozen samples."""
    I = sp.I
    return [
        (1 + I / 2) + r / 3 + I * r**2 / 7,
        2 - I / 3 + r / 5 - r**3 / 40,
        sp.Rational(-1, 2) + I / 4 + I * r / 6 + r**2 / 30,
        sp.Rational(1, 3) - I / 5 + r / 7 + I * r**3 / 100,
        sp.Rational(1, 2) + I / 9 - r / 8 + r**2 / 50,
    ]


def freeze_samples(bg, O, Od, named, l):
    """Numeric freeze: matrix applications on a reference polynomial vector."""
    t = r - 4
    f = (1 + 2 * sp.I) + t / 2 - 3 * sp.I * t**2 / 8 + t**3 / 16 + 5 * t**4 / 32
    subs = {r: sp.Integer(4), w: sp.Rational(3, 10)}
    print(f"\nfrozen single-entry applications on f(r)=(1+2i)+(r-4)/2-3i(r-4)^2/8"
          f"+(r-4)^3/16+5(r-4)^4/32 at r=4, w=3/10, l={l}:")
    for nm in ['O11', 'O31', 'O53', 'O54', 'O55', 'Od33', 'Od42', 'Od53', 'Od54', 'Od55']:
        v = sp.N(sp.simplify(named[nm].apply(f).subs(subs)), 20)
        print(f"  {nm}(f) = {v}")

    p = reference_polys()
    print("\nfrozen matrix-vector applications on the reference polynomial vector")
    print("  p = [(1+i/2)+r/3+i r^2/7, 2-i/3+r/5-r^3/40, -1/2+i/4+i r/6+r^2/30,")
    print("       1/3-i/5+r/7+i r^3/100, 1/2+i/9-r/8+r^2/50]  at r=4, w=3/10:")
    for labelm, M in (("O", O), ("Od", Od)):
        for i in range(5):
            v = sum(M[i][k].apply(p[k]) for k in range(5))
            v = sp.N(sp.simplify(v.subs(subs)), 20)
            print(f"  ({labelm} p)_{i+1} = {v}")

    ce = -2 * bg['Dphi'] * bg['Phi11'] / (bg['Q2'] * bg['xi'])
    cf = -bg['Dphi'] * bg['Phi22'] / (bg['Q2'] * bg['xi'])
    print(f"\nrow-residual scalars at r=4: c_e = {sp.nsimplify(ce.subs(subs))}, "
          f"c_f = {sp.nsimplify(cf.subs(subs))}")


def first_order_system(Od, rv, wv):
    """Emit A (2nd), B (1st), C (0th) coefficient matrices of the adjoint
    system at a sample point, plus M=-A^-1 C, N=-A^-1 B."""
    subs = {r: rv, w: wv}
    A = sp.zeros(5, 5)
    B = sp.zeros(5, 5)
    C = sp.zeros(5, 5)
    for i in range(5):
        for j in range(5):
            c = Od[i][j].c
            C[i, j] = c[0] if len(c) > 0 else 0
            B[i, j] = c[1] if len(c) > 1 else 0
            A[i, j] = c[2] if len(c) > 2 else 0
    An = A.subs(subs)
    Bn = B.subs(subs)
    Cn = C.subs(subs)
    print(f"\nadjoint system principal part A at r={rv}, w={wv}:")
    sp.pprint(sp.simplify(An))
    M = sp.simplify(-An.inv() * Cn)
    N = sp.simplify(-An.inv() * Bn)
    print("M = -A^-1 C (numeric, 17 digits):")
    for i in range(5):
        print("  " + "  ".join(f"{complex(sp.N(M[i, j], 20)):.17g}" for j in range(5)))
    print("N = -A^-1 B (numeric):")
    for i in range(5):
        print("  " + "  ".join(f"{complex(sp.N(N[i, j], 20)):.17g}" for j in range(5)))


def main():
    cases = [
        (sp.Integer(2), sp.Integer(1), sp.Integer(1), 2,
         [sp.Integer(4), sp.Rational(7, 2), sp.Integer(11)]),
        (sp.Integer(3), sp.Integer(1), sp.Integer(0), 3,
         [sp.Integer(5), sp.Rational(9, 2), sp.Integer(12)]),
        # radii where (1 - rm/r) is a perfect rational square, so that the
        # half-integer powers appearing at a^2 = 1/3 stay radical-free
        (sp.Integer(2), sp.Integer(1), sp.sqrt(3) / 3, 2,
         [sp.Rational(625, 49), sp.Rational(1369, 144)]),
    ]
    for rp, rm, a, l, samples in cases:
        bg = background(rp, rm, a)
        O, Od, named = operators(bg, l)
        print(f"case rp={rp} rm={rm} a={a} l={l}:")
        allok = True
        for nm, lhs, rhs in identity_list(bg, named):
            bad = op_residual_zero(lhs, rhs, samples)
            if bad is None:
                print(f"  identity {nm}: EXACT-OK")
            else:
                allok = False
                k, wp, rv = bad
                print(f"  identity {nm}: FAIL deriv-order {k} w^{wp} at r={rv}")
                op_residual_zero(lhs, rhs, samples, explain=True)
        rows_ok = decoupling_rows(bg, O, Od, samples, f"a={a}")
        print(f"  => {'ALL EXACT' if (allok and rows_ok) else 'FAILURES PRESENT'}")

    rp, rm, a, l = sp.Integer(2), sp.Integer(1), sp.Integer(1), 2
    bg = background(rp, rm, a)
    O, Od, named = operators(bg, l)
    freeze_samples(bg, O, Od, named, l)
    first_order_system(Od, sp.Integer(4), sp.Rational(3, 10))


if __name__ == '__main__':
    main()
