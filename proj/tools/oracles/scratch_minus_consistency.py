#!/usr/bin/env python3
"""Native-sector consistency: the forward system applied to the pointwise
minus branch must vanish on the (same-sector) adjoint shell."""
import sys
import sympy as sp

sys.path.insert(0, '/root/proj/tools/oracles')
from operator_identity_oracle import background, operators, exact_zero, zero, mult
from flux_split_oracle import minus_map, shell_matrices, r, w


def rows_on_shell(bg, l, rv, wv):
    O, Od, _ = operators(bg, l)
    S = minus_map(bg, l)
    rows = [[sum((O[i][m] @ S[m][k] for m in range(5)), zero())
             for k in range(5)] for i in range(5)]
    kmax = 1 + max(e.order() for row in rows for e in row)
    Pk, Qk = shell_matrices(Od, rv, wv, kmax)
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
                    cx[m] += cfv * Pk[k][j, m]
                    cd[m] += cfv * Qk[k][j, m]
        for m in range(5):
            if not exact_zero(cx[m]):
                bad.append((i + 1, 'x', m + 1, sp.nsimplify(sp.cancel(cx[m]))))
            if not exact_zero(cd[m]):
                bad.append((i + 1, 'd', m + 1, sp.nsimplify(sp.cancel(cd[m]))))
    return bad


def main():
    cases = [
        (sp.Integer(4), sp.Integer(1), sp.Integer(0), 2, sp.Integer(6)),
        (sp.Integer(2), sp.Integer(1), sp.Integer(1), 2, sp.Integer(4)),
    ]
    for rp, rm, a, l, rv in cases:
        bg = background(rp, rm, a)
        bg['rp'], bg['rm'] = rp, rm
        bad = rows_on_shell(bg, l, rv, sp.Rational(3, 10))
        if not bad:
            print(f"minus rows on-shell a={a} r={rv}: EXACT-OK")
        else:
            print(f"minus rows on-shell a={a} r={rv}: NONZERO")
            for row, kind, comp, val in bad:
                print(f"    row {row} {kind}{comp}: {val}")


if __name__ == '__main__':
    main()
