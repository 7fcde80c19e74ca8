#!/usr/bin/env python3
"""Re-run the plus-branch on-shell row reduction, evaluating the jet
matrices strictly at the expansion point (t = 0). The previous run tested
whole truncated Taylor polynomials, whose high-order t-coefficients are not
trustworthy for the top derivative orders."""
import sys
import sympy as sp

sys.path.insert(0, '/root/proj/tools/oracles')
from operator_identity_oracle import background, operators, exact_zero, zero
from flux_split_oracle import (plus_map, shell_matrices, conj_sector, r, w)

t = sp.symbols('t')


def rows_at_point(bg, l, rv, wv):
    O, Od, _ = operators(bg, l)
    Oc = conj_sector(O)
    Odc = conj_sector(Od)
    T = plus_map(bg, l)
    rows = [[sum((Oc[i][m] @ T[m][k] for m in range(5)), zero())
             for k in range(5)] for i in range(5)]
    kmax = 1 + max(e.order() for row in rows for e in row)
    Pk, Qk = shell_matrices(Odc, rv, wv, kmax)
    P0 = [sp.Matrix(5, 5, lambda i_, j_: M[i_, j_].subs({t: 0})) for M in Pk]
    Q0 = [sp.Matrix(5, 5, lambda i_, j_: M[i_, j_].subs({t: 0})) for M in Qk]
    bad = []
    sub = {r: rv, w: wv}
    for i in range(5):
        cx = [sp.Integer(0)] * 5
        cd = [sp.Integer(0)] * 5
        for j in range(5):
            for k, cf in enumerate(rows[i][j].c):
                if cf == 0:
                    continue
                cfv = sp.cancel(cf.subs(sub))
                for m in range(5):
                    cx[m] += cfv * P0[k][j, m]
                    cd[m] += cfv * Q0[k][j, m]
        for m in range(5):
            if not exact_zero(cx[m]):
                bad.append((i + 1, 'x', m + 1, sp.nsimplify(sp.cancel(cx[m]))))
            if not exact_zero(cd[m]):
                bad.append((i + 1, 'd', m + 1, sp.nsimplify(sp.cancel(cd[m]))))
    return bad


def main():
    for rp, rm, a, l, rv in [
            (sp.Integer(4), sp.Integer(1), sp.Integer(0), 2, sp.Integer(6))]:
        bg = background(rp, rm, a)
        bg['rp'], bg['rm'] = rp, rm
        bad = rows_at_point(bg, l, rv, sp.Rational(3, 10))
        if not bad:
            print(f"plus rows at-point a={a} r={rv}: EXACT-OK")
        else:
            print(f"plus rows at-point a={a} r={rv}: NONZERO")
            for row, kind, comp, val in bad:
                print(f"    row {row} {kind}{comp}: {val}")


if __name__ == '__main__':
    main()
