"""Regenerates the genfunc_n*_l*.txt files with sympy.

Independent of the Rust code: builds the n x n determinant symbolically and
prints the expanded polynomial in the crate's canonical text form.
"""
import itertools
import pathlib

import sympy as sp

M, R, P, Q = sp.symbols("M R P Q")
OUT = pathlib.Path(__file__).parent


def binom(n, k):
    # falling factorial over k!, valid for negative n
    if k < 0:
        return 0
    num = 1
    for t in range(k):
        num *= n - t
    return num // sp.factorial(k)


def det_gf(n, l):
    mat = sp.zeros(n, n)
    for i, j in itertools.product(range(n), repeat=2):
        e = 0
        for k in range(i + 1):
            for m in range(j + 1):
                e += (R * Q ** (i - k) * binom(j, m) * M ** (k - m)
                      * (binom(k + l - 3, k - m) + binom(k + l - 3, k - m - 1) * P / M))
        mat[i, j] = e + (1 if i == j else 0)
    return sp.Poly(sp.expand(mat.det()), M, R, P, Q)


def canonical(poly):
    out = []
    for exps, c in sorted(poly.terms()):
        mono = "*".join(
            v if e == 1 else f"{v}^{e}" for v, e in zip("MRPQ", exps) if e
        )
        mag = abs(int(c))
        body = mono if mono and mag == 1 else (f"{mag}*{mono}" if mono else str(mag))
        if not out:
            out.append(body if c > 0 else f"- {body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out) if out else "0"


if __name__ == "__main__":
    for n in range(1, 6):
        for l in range(1, 6):
            if n == 5 and l > 3:
                continue
            (OUT / f"genfunc_n{n}_l{l}.txt").write_text(canonical(det_gf(n, l)) + "\n")
