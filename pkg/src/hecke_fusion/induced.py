"""
Induced modules ``I_chi`` realized on h_n.

``I_chi`` is identified with h_n as a left h_n-module, with ``X_k . 1 =
chi(X_k)``.  The ``X_k`` action on a basis vector ``T_w`` is computed by
peeling a left descent ``w = s_l w'`` and commuting ``X_k`` past ``T_l``::

    X_k T_l     = T_l X_k                          k not in {l, l+1}
    X_l T_l     = T_l X_{l+1} - (q - 1) X_{l+1}
    X_{l+1} T_l = T_l X_l     + (q - 1) X_{l+1}

Both rules are consequences of ``T_l X_l T_l = q X_{l+1}`` and the quadratic
relation; the test suite checks all defining relations as operators.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from gmpy2 import prev_prime

from .coxeter import all_perms, identity, perm_inverse
from .diagram import Diagram
from .field import QQ, common_denominator, domain_of, frac_field, q_power, value_to_json
from .hecke import HeckeAlgebra, HeckeElt, _add_into, _lmul_gen, _prune

__all__ = [
    "Character", "XAction", "IntertwinerResult", "EigenResult", "VerificationReport",
    "character_of", "w0_twist", "twist", "act_X", "check_intertwiner",
    "eigencheck", "cyclic_dim", "span_rank", "character_to_json",
]


@dataclass(frozen=True)
class Character:
    values: tuple

    def __post_init__(self):
        if not self.values:
            raise ValueError("a character needs at least one value")
        if any(not v for v in self.values):
            raise ValueError("character values must be nonzero")

    @property
    def n(self) -> int:
        return len(self.values)

    def __call__(self, k: int):
        return self.values[k - 1]

    def is_regular(self) -> bool:
        """Pairwise distinct values."""
        vals = list(self.values)
        return all(vals[a] != vals[b] for a in range(len(vals)) for b in range(a + 1, len(vals)))

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def character_of(lam: Diagram, q=None) -> Character:
    """``chi_lambda(X_k) = q^{c_k}``."""
    if q is None:
        q = frac_field(QQ, "q").gen()
    return Character(tuple(q_power(q, c) for c in lam.filling.content))


def twist(w: Sequence[int], chi: Character) -> Character:
    """``(w . chi)(X_k) = chi(X_{w^{-1}(k)})``."""
    winv = perm_inverse(w)
    return Character(tuple(chi(winv[k - 1]) for k in range(1, chi.n + 1)))


def w0_twist(chi: Character) -> Character:
    return Character(tuple(reversed(chi.values)))


class XAction:
    """The ``X_k`` action on ``I_chi``, memoized on basis vectors."""

    def __init__(self, chi: Character, algebra: HeckeAlgebra):
        if chi.n != algebra.n:
            raise ValueError("character and algebra have different ranks")
        self.chi = chi
        self.algebra = algebra
        self.values = tuple(algebra.field.convert(v) for v in chi.values)
        self._memo: dict = {}

    def basis(self, k: int, w: tuple) -> dict:
        key = (k, w)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        A = self.algebra
        n = A.n
        inv = perm_inverse(w)
        for l in range(1, n):
            if inv[l - 1] > inv[l]:
                break
        else:
            res = {w: self.values[k - 1]}
            self._memo[key] = res
            return res
        # w = s_l w': swap the values l and l+1
        wp = list(w)
        wp[inv[l - 1] - 1], wp[inv[l] - 1] = l + 1, l
        wp = tuple(wp)
        if k != l and k != l + 1:
            res = _lmul_gen(self.basis(k, wp), l, A.q, A.qm1)
        elif k == l:
            inner = self.basis(l + 1, wp)
            res = _lmul_gen(inner, l, A.q, A.qm1)
            for u, c in inner.items():
                _add_into(res, u, -A.qm1 * c)
            res = _prune(res)
        else:
            res = _lmul_gen(self.basis(l, wp), l, A.q, A.qm1)
            for u, c in self.basis(l + 1, wp).items():
                _add_into(res, u, A.qm1 * c)
            res = _prune(res)
        self._memo[key] = res
        return res

    def apply_terms(self, k: int, terms: dict) -> dict:
        acc: dict = {}
        for w, c in terms.items():
            for u, d in self.basis(k, w).items():
                _add_into(acc, u, d * c)
        return _prune(acc)

    def apply(self, k: int, v: HeckeElt) -> HeckeElt:
        if not 1 <= k <= self.algebra.n:
            raise ValueError(f"X_{k} does not exist in rank {self.algebra.n}")
        return HeckeElt(v.algebra, self.apply_terms(k, v.terms))


def act_X(k: int, v: HeckeElt, chi: Character, action: XAction | None = None) -> HeckeElt:
    """``X_k . v`` in ``I_chi``."""
    action = action or XAction(chi, v.algebra)
    return action.apply(k, v)


def _left_translates(E: HeckeElt) -> dict:
    """``T_w . E`` for every ``w``, built up along left descents."""
    A = E.algebra
    out = {identity(A.n): E.terms}
    for w in all_perms(A.n)[1:]:
        inv = perm_inverse(w)
        l = next(l for l in range(1, A.n) if inv[l - 1] > inv[l])
        wp = list(w)
        wp[inv[l - 1] - 1], wp[inv[l] - 1] = l + 1, l
        out[w] = _lmul_gen(out[tuple(wp)], l, A.q, A.qm1)
    return out


def _integral(E: HeckeElt) -> HeckeElt:
    """``E`` times the lcm of its coefficient denominators."""
    return E.scale(common_denominator(E.terms.values(), E.algebra.field))


def _integral_characters(chis: Sequence[Character], algebra: HeckeAlgebra):
    """Scale several characters by one common factor so every value is a
    polynomial.  Every ``X_k`` action scales by the same factor, so checks
    that are homogeneous in the action are unaffected."""
    F = algebra.field
    vals = [F.convert(v) for chi in chis for v in chi.values]
    s = common_denominator(vals, F)
    return [Character(tuple(F.convert(v) * s for v in chi.values)) for chi in chis], s


@dataclass(frozen=True)
class IntertwinerResult:
    ok: bool
    counterexample: tuple | None = None    # (k, w)

    def __bool__(self) -> bool:
        return self.ok


def check_intertwiner(E: HeckeElt, src: Character, tgt: Character) -> IntertwinerResult:
    """Is right multiplication by ``E`` an H_n-map ``I_src -> I_tgt``?

    Compares ``X_k (T_w E)`` in ``I_tgt`` with ``(X_k T_w) E`` for every
    ``k`` and every basis vector.  The counterexample is the first failing
    ``(k, w)`` with ``w`` in order of increasing length.
    """
    A = E.algebra
    # both sides are linear in E and in the pair of actions: clear denominators
    (src, tgt), _ = _integral_characters((src, tgt), A)
    Xs, Xt = XAction(src, A), XAction(tgt, A)
    TE = _left_translates(_integral(E))
    if A.field is QQ:
        return _check_integer_matrices(Xs, Xt, TE, A.n)
    for w in all_perms(A.n):
        for k in range(1, A.n + 1):
            lhs = Xt.apply_terms(k, TE[w])
            rhs: dict = {}
            for u, d in Xs.basis(k, w).items():
                for v, c in TE[u].items():
                    _add_into(rhs, v, c * d)
            if lhs != _prune(rhs):
                return IntertwinerResult(False, (k, w))
    return IntertwinerResult(True)


_PRIME_CEILING = 1 << 21      # residues below 2^21 keep float64 products exact


def _primes_covering(bound: int) -> list[int]:
    """Primes below the ceiling, largest first, whose product exceeds ``bound``."""
    out, p, prod = [], _PRIME_CEILING, 1
    while prod <= bound:
        p = int(prev_prime(p))
        out.append(p)
        prod *= p
    return out


def _check_integer_matrices(Xs: XAction, Xt: XAction, TE: dict, n: int) -> IntertwinerResult:
    """The rational case as the matrix identity ``D_tgt M = M D_src``.

    ``M`` has the columns ``T_w E`` and ``D`` the columns ``X_k T_w``.  One
    common factor clears the denominators of ``M`` and another those of both
    ``D`` matrices; the identity is homogeneous in each, so it can be decided
    on integer matrices.  Both products are compared modulo primes whose
    product exceeds twice an a-priori bound on their entries, which decides
    integer equality exactly.
    """
    perms = all_perms(n)
    index = {w: i for i, w in enumerate(perms)}
    N = len(perms)
    sm = common_denominator((c for col in TE.values() for c in col.values()), QQ)
    M = np.zeros((N, N), dtype=object)
    for w, col in TE.items():
        j = index[w]
        for v, c in col.items():
            M[index[v], j] = int(c * sm)
    max_m = int(np.abs(M).max()) if N else 0
    residues: dict = {}
    bad: list[tuple[int, int]] = []          # (column index, k)
    for k in range(1, n + 1):
        cols_s = [Xs.basis(k, w) for w in perms]
        cols_t = [Xt.basis(k, w) for w in perms]
        sd = common_denominator((c for col in cols_s + cols_t for c in col.values()), QQ)
        Ds = np.zeros((N, N), dtype=object)
        Dt = np.zeros((N, N), dtype=object)
        for j in range(N):
            for u, c in cols_s[j].items():
                Ds[index[u], j] = int(c * sd)
            for u, c in cols_t[j].items():
                Dt[index[u], j] = int(c * sd)
        bound = max_m * max(int(np.abs(Dt).sum(axis=1).max()), int(np.abs(Ds).sum(axis=0).max()))
        differ = np.zeros(N, dtype=bool)
        for p in _primes_covering(2 * bound):
            if p not in residues:
                residues[p] = (M % p).astype(np.float64)
            Mp = residues[p]
            Dsp = (Ds % p).astype(np.float64)
            Dtp = (Dt % p).astype(np.float64)
            differ |= (np.fmod(Dtp @ Mp, p) != np.fmod(Mp @ Dsp, p)).any(axis=0)
        bad.extend((int(j), k) for j in np.flatnonzero(differ))
    if bad:
        j, k = min(bad)
        return IntertwinerResult(False, (k, perms[j]))
    return IntertwinerResult(True)


@dataclass(frozen=True)
class EigenResult:
    ok: bool
    eigenvalues: tuple
    failing: tuple = ()

    def __bool__(self) -> bool:
        return self.ok


def eigencheck(lam: Diagram, E: HeckeElt) -> EigenResult:
    """``X_k E = q^{c_k} E`` in ``I_{w_0 chi_lambda}`` for every ``k``."""
    A = E.algebra
    chi = character_of(lam, A.q)
    (tgt,), s = _integral_characters((w0_twist(chi),), A)
    action = XAction(tgt, A)
    E = _integral(E)
    failing = tuple(k for k in range(1, lam.n + 1)
                    if action.apply(k, E) != E.scale(A.field.convert(chi(k)) * s))
    return EigenResult(not failing, chi.values, failing)


@dataclass(frozen=True)
class VerificationReport:
    check: str
    diagram: str
    status: str                   # "pass" or "fail"
    counterexample: object = None

    def to_json(self) -> dict:
        d = {"check": self.check, "diagram": self.diagram, "status": self.status}
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d


# --------------------------------------------------------------------------
# cyclic span


def span_rank(vectors: Sequence[dict]) -> int:
    """Rank of sparse vectors over their coefficient field (exact elimination)."""
    pivots: dict = {}          # pivot key -> reduced row with coefficient 1 there
    for vec in vectors:
        v = dict(vec)
        while v:
            key = min(v)
            row = pivots.get(key)
            if row is None:
                inv = 1 / v[key]
                pivots[key] = {u: c * inv for u, c in v.items()}
                break
            c = v[key]
            for u, d in row.items():
                _add_into(v, u, -c * d)
            v = _prune(v)
    return len(pivots)


def cyclic_dim(lam: Diagram, q=None, E: HeckeElt | None = None) -> int:
    """``dim h_n E_lambda``; symbolic when ``q`` is None, else at ``q = q0``."""
    from .fusion import compute_E_limiting, specialize

    if E is None:
        E = compute_E_limiting(lam)
        if q is not None:
            E = specialize(E, q)
    elif q is not None and E.algebra.field is not domain_of(QQ.convert(q)):
        E = specialize(E, q)
    return span_rank(list(_left_translates(E).values()))


def character_to_json(chi: Character) -> list:
    return [value_to_json(v) for v in chi.values]
