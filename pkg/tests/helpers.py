"""Shared checks for the induced-module tests."""

from fractions import Fraction

from hecke_fusion.coxeter import all_perms
from hecke_fusion.field import QQ
from hecke_fusion.induced import Character, act_X


def random_regular(n, rnd, field=QQ):
    vals: list = []
    while len(vals) < n:
        v = Fraction(rnd.randint(-20, 20), rnd.randint(1, 9))
        if v and v not in vals:
            vals.append(v)
    return Character(tuple(field.convert(v) for v in vals))


def operator_relations_hold(A, chi):
    """X_k X_l = X_l X_k, T_k X_k T_k = q X_{k+1}, X_l T_k = T_k X_l on every basis vector."""
    n, q = A.n, A.q
    for w in all_perms(n):
        v = A.basis(w)
        X = {k: act_X(k, v, chi) for k in range(1, n + 1)}
        for k in range(1, n + 1):
            for l in range(k + 1, n + 1):
                if act_X(k, X[l], chi) != act_X(l, X[k], chi):
                    return False
        for k in range(1, n):
            Tv = A.T(k) * v
            if A.T(k) * act_X(k, Tv, chi) != X[k + 1].scale(q):
                return False
            for l in range(1, n + 1):
                if l not in (k, k + 1) and act_X(l, Tv, chi) != A.T(k) * X[l]:
                    return False
    return True
