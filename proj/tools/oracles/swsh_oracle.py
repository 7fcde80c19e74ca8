#!/usr/bin/env python3
"""Independent oracle for spin-weighted spherical harmonics.

Convention under test: sYlm = sqrt((2l+1)/4pi) d^l_{m,-s}(theta) e^{im phi}
with the Wigner little-d in the z-y-z convention. By the d-matrix symmetry
d^l_{m,-s} = (-1)^{m+s} d^l_{-m,s} this equals (-1)^s times the common
convention built on (-1)^m d^l_{-m,s}, flipping the sign of both ladder
coefficients. The raising and lowering operators on a spin-s harmonic
carrying e^{im phi} are

    up(s):   [d/dtheta - m csc(theta) - s cot(theta)]
    down(s): [d/dtheta + m csc(theta) + s cot(theta)]

with  up(s) sYlm = +sqrt((l-s)(l+s+1)) s+1Ylm
and  down(s) sYlm = -sqrt((l+s)(l-s+1)) s-1Ylm.
"""
import sympy as sp
from sympy.physics.quantum.spin import Rotation

th, ph = sp.symbols('theta phi', real=True)


def sY(s, l, m):
    d = Rotation.d(l, m, -s, th).doit()
    return (sp.sqrt(sp.Rational(2 * l + 1, 4) / sp.pi) * d
            * sp.exp(sp.I * m * ph))


def up_op(f, s, m):
    return sp.diff(f, th) - m * sp.csc(th) * f - s * sp.cot(th) * f


def down_op(f, s, m):
    return sp.diff(f, th) + m * sp.csc(th) * f + s * sp.cot(th) * f


def is_zero(e):
    """Exact zero test for the ladder residuals.

    The residuals are polynomial in sin(theta/2), cos(theta/2) of even
    total degree divided by powers of sin(theta); substituting
    t = tan(theta/2) turns them into honest rational functions of t,
    where cancel() is decisive.
    """
    x, t = sp.symbols('_x _t', positive=True)
    e = e.subs(th, 2 * x)
    e = e.subs({sp.cot(2 * x): sp.cos(2 * x) / sp.sin(2 * x),
                sp.csc(2 * x): 1 / sp.sin(2 * x),
                sp.sec(2 * x): 1 / sp.cos(2 * x),
                sp.tan(2 * x): sp.sin(2 * x) / sp.cos(2 * x)})
    e = sp.expand_trig(e)
    r = sp.sqrt(1 + t ** 2)
    e = e.subs({sp.sin(x): t / r, sp.cos(x): 1 / r,
                sp.cot(x): 1 / t, sp.csc(x): r / t,
                sp.sec(x): r, sp.tan(x): t})
    return sp.cancel(sp.expand(sp.radsimp(e))) == 0


def check_ladders(lmax):
    ok = True
    for l in range(2, lmax + 1):
        for m in range(-l, l + 1):
            for s in range(-2, 3):
                if abs(s) > l:
                    continue
                f = sY(s, l, m) * sp.exp(-sp.I * m * ph)
                if s + 1 <= l:
                    tgt = sY(s + 1, l, m) * sp.exp(-sp.I * m * ph)
                    c = sp.sqrt(sp.Integer((l - s) * (l + s + 1)))
                    if not is_zero(up_op(f, s, m) - c * tgt):
                        print(f"  up ladder FAIL s={s} l={l} m={m}")
                        ok = False
                if s - 1 >= -l:
                    tgt = sY(s - 1, l, m) * sp.exp(-sp.I * m * ph)
                    c = sp.sqrt(sp.Integer((l + s) * (l - s + 1)))
                    if not is_zero(down_op(f, s, m) + c * tgt):
                        print(f"  down ladder FAIL s={s} l={l} m={m}")
                        ok = False
    return ok


def check_composite(lmax):
    """down(-1) up(-2) acting on a spin -2 harmonic must give
    -(l-1)(l+2) times it."""
    ok = True
    for l in range(2, lmax + 1):
        for m in (-l, 0, 1, l):
            f = sY(-2, l, m) * sp.exp(-sp.I * m * ph)
            g = down_op(up_op(f, -2, m), -1, m)
            L2 = sp.Integer((l - 1) * (l + 2))
            if not is_zero(g + L2 * f):
                print(f"  composite FAIL l={l} m={m}")
                ok = False
    return ok


def check_orthonormality(lmax):
    ok = True
    s = -2
    for l1 in range(2, lmax + 1):
        for l2 in range(l1, lmax + 1):
            for m in range(0, min(l1, l2) + 1):
                f1 = sY(s, l1, m)
                f2 = sY(s, l2, m)
                val = sp.integrate(
                    sp.simplify(f1 * sp.conjugate(f2)) * sp.sin(th),
                    (th, 0, sp.pi)) * 2 * sp.pi
                want = 1 if l1 == l2 else 0
                if sp.simplify(val - want) != 0:
                    print(f"  orthonormality FAIL l1={l1} l2={l2} m={m}: {val}")
                    ok = False
    return ok


def freeze(samples):
    print("frozen harmonic values:")
    for s, l, m, tv, pv in samples:
        v = sp.N(sY(s, l, m).subs({th: tv, ph: pv}), 20)
        print(f"  sY(s={s},l={l},m={m})(theta={tv},phi={pv}) = {v}")


def main():
    print("ladders l<=3:", "EXACT-OK" if check_ladders(3) else "FAIL")
    print("composite eigenvalue l<=4:",
          "EXACT-OK" if check_composite(4) else "FAIL")
    print("orthonormality l<=4:",
          "EXACT-OK" if check_orthonormality(4) else "FAIL")
    freeze([
        (-2, 2, 2, sp.pi / 2, sp.Integer(0)),
        (-2, 2, 2, sp.pi / 3, sp.pi / 5),
        (-2, 2, -1, sp.pi / 4, sp.Rational(1, 3)),
        (-2, 2, 0, sp.pi / 3, sp.Integer(0)),
        (-2, 3, 2, sp.pi / 3, sp.pi / 5),
        (-2, 3, -3, sp.Rational(2, 1) * sp.pi / 5, sp.Integer(1)),
        (-1, 2, 1, sp.pi / 3, sp.Rational(1, 2)),
        (-1, 2, 1, sp.pi / 4, sp.Rational(1, 2)),
        (0, 2, 2, sp.pi / 6, sp.Integer(0)),
        (1, 3, -2, sp.pi / 3, sp.Integer(2)),
        (2, 2, 2, sp.pi / 2, sp.Integer(0)),
        (2, 3, 0, sp.pi / 4, sp.pi / 7),
    ])


if __name__ == '__main__':
    main()
