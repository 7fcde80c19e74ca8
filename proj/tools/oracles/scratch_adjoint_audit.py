#!/usr/bin/env python3
"""Entrywise mutual-adjointness audit of the two 5x5 operator matrices.

The radial representation of the spacetime formal adjoint (measure R^2 dr,
frequency sector e^{-iwt}) is: flip w -> -w, then integrate by parts with
weight R^2. Every entry of the second matrix must equal the adjoint of the
transposed entry of the first."""
import sys
import sympy as sp

sys.path.insert(0, '/root/proj/tools/oracles')
from operator_identity_oracle import (background, operators, Op, mult,
                                      op_residual_zero, r, w)


def adjointize(A, R):
    cs = [c.subs({w: -w}) if hasattr(c, 'subs') else c for c in A.c]
    n = len(cs)
    out = [sp.Integer(0)] * n
    for k in range(n):
        ck = cs[k]
        if ck == 0:
            continue
        for i in range(k + 1):
            out[i] += ((-1) ** k * sp.binomial(k, i)
                       * sp.diff(R**2 * ck, r, k - i) / R**2)
    return Op(out)


def audit(rp, rm, a, l, samples):
    bg = background(rp, rm, a)
    O, Od, _ = operators(bg, l)
    R = bg['R']
    clean = True
    for i in range(5):
        for j in range(5):
            A = adjointize(O[j][i], R)
            bad = op_residual_zero(A, Od[i][j], samples)
            if bad is not None:
                clean = False
                print(f"  MISMATCH adj(O[{j+1}][{i+1}]) vs Od[{i+1}][{j+1}]: "
                      f"deriv-order {bad[0]}, w^{bad[1]}, r={bad[2]}")
                op_residual_zero(A, Od[i][j], samples, explain=True)
    print(f"  {'all 25 entries mutually adjoint' if clean else 'see above'}")
    return clean


def main():
    cases = [
        (sp.Integer(2), sp.Integer(1), sp.Integer(1), 2,
         [sp.Integer(4), sp.Rational(7, 2), sp.Integer(9)]),
        (sp.Integer(3), sp.Integer(1), sp.Integer(0), 3,
         [sp.Integer(5), sp.Rational(9, 2)]),
        (sp.Integer(2), sp.Integer(1), sp.sqrt(3) / 3, 2,
         [sp.Rational(625, 49), sp.Rational(1369, 144)]),
    ]
    for rp, rm, a, l, samples in cases:
        print(f"case rp={rp} rm={rm} a={a} l={l}:")
        audit(rp, rm, a, l, samples)


if __name__ == '__main__':
    main()
