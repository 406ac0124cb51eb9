"""Shared independent oracle for the bar-to-Koszul chain-map identity:
both sides of d_2 o psi_2 = psi_1 o delta_2 expanded symbolically into
Koszul-degree-1 coordinates (left exps, right exps, variable index)."""

from collections import defaultdict

from heckeforge.hecke import psi1, psi2


def _add(acc, key, c):
    acc[key] += c
    if not acc[key]:
        del acc[key]


def d2_psi2(k, m):
    acc = defaultdict(int)
    for L, R, (i, j) in psi2(k, m):

        def bump(e, t):
            e = list(e)
            e[t - 1] += 1
            return tuple(e)

        _add(acc, (bump(L, i), R, j), 1)
        _add(acc, (L, bump(R, i), j), -1)
        _add(acc, (bump(L, j), R, i), -1)
        _add(acc, (L, bump(R, j), i), 1)
    return dict(acc)


def psi1_delta2(k, m):
    acc = defaultdict(int)
    for L, R, i in psi1(m):
        _add(acc, (tuple(a + b for a, b in zip(k, L)), R, i), 1)
    for L, R, i in psi1(tuple(a + b for a, b in zip(k, m))):
        _add(acc, (L, R, i), -1)
    for L, R, i in psi1(k):
        _add(acc, (L, tuple(a + b for a, b in zip(R, m)), i), 1)
    return dict(acc)
