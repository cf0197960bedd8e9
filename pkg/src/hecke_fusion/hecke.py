"""
The finite Hecke algebra h_n in the T_w basis.

Elements are sparse maps ``perm -> coefficient``.  The coefficient field is
whatever field the parameter ``q`` lives in: Q(q) with ``q`` the generator,
Q(q)(z) for the limit oracle, or Q with ``q`` specialized to a rational.
All of these share the multiplication code below.

The only multiplication primitive is right multiplication by a generator::

    T_w T_k = T_{w s_k}                      if l(w s_k) > l(w)
    T_w T_k = (q - 1) T_w + q T_{w s_k}      otherwise

and left multiplication, its mirror image, used by the module action.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .coxeter import Perm, all_perms, identity, length, reduced_word
from .field import QQ, RatFunc, domain_of, frac_field, value_from_json, value_to_json

__all__ = [
    "HeckeAlgebra", "HeckeElt", "HeckeError", "generic_algebra",
    "e_sum", "embed", "omega", "leading_terms",
]


class HeckeError(ValueError):
    pass


class HeckeAlgebra:
    """h_n over the field of ``q``."""

    def __init__(self, n: int, q):
        if n < 1:
            raise HeckeError("rank must be at least 1")
        self.n = n
        self.q = q
        self.field = domain_of(q)
        self.one_scalar = self.field.one
        self.zero_scalar = self.field.zero
        self.qm1 = q - self.field.one

    def __repr__(self) -> str:
        return f"HeckeAlgebra(n={self.n}, q={self.q})"

    def same_as(self, other: HeckeAlgebra) -> bool:
        return self is other or (self.n == other.n and self.field is other.field
                                 and self.q == other.q)

    def scalar(self, c) -> HeckeElt:
        c = self.field.convert(c)
        return HeckeElt(self, {identity(self.n): c} if c else {})

    @property
    def one(self) -> HeckeElt:
        return self.scalar(self.one_scalar)

    @property
    def zero(self) -> HeckeElt:
        return HeckeElt(self, {})

    def basis(self, w) -> HeckeElt:
        w = Perm(tuple(w))
        if len(w) != self.n:
            raise HeckeError(f"permutation {w} does not have rank {self.n}")
        return HeckeElt(self, {w: self.one_scalar})

    def T(self, *word: int) -> HeckeElt:
        """The product ``T_{k_1} ... T_{k_m}`` (any word, reduced or not)."""
        x = self.one
        for k in word:
            if not 1 <= k <= self.n - 1:
                raise HeckeError(f"generator T_{k} does not exist in h_{self.n}")
            x = HeckeElt(self, _rmul_gen(x.terms, k, self.q, self.qm1))
        return x

    def from_json(self, data: Mapping) -> HeckeElt:
        if data["n"] != self.n:
            raise HeckeError("rank mismatch in JSON")
        terms = {}
        for t in data["terms"]:
            c = value_from_json(t["coeff"], self.field)
            if c:
                terms[Perm(tuple(t["perm"]))] = c
        return HeckeElt(self, terms)


def generic_algebra(n: int) -> HeckeAlgebra:
    """h_n over Q(q) with ``q`` transcendental."""
    return HeckeAlgebra(n, frac_field(QQ, "q").gen())


def _add_into(acc: dict, key, c) -> None:
    old = acc.get(key)
    acc[key] = c if old is None else old + c


def _prune(acc: dict) -> dict:
    return {w: c for w, c in acc.items() if c}


def _rmul_gen(terms: Mapping, k: int, q, qm1) -> dict:
    acc: dict = {}
    for w, c in terms.items():
        a, b = w[k - 1], w[k]
        ws = w[:k - 1] + (b, a) + w[k + 1:]
        if a < b:
            _add_into(acc, ws, c)
        else:
            _add_into(acc, w, c * qm1)
            _add_into(acc, ws, c * q)
    return _prune(acc)


def _lmul_gen(terms: Mapping, k: int, q, qm1) -> dict:
    acc: dict = {}
    for w, c in terms.items():
        pa = w.index(k)
        pb = w.index(k + 1)
        sw = list(w)
        sw[pa], sw[pb] = k + 1, k
        sw = tuple(sw)
        if pa < pb:
            _add_into(acc, sw, c)
        else:
            _add_into(acc, w, c * qm1)
            _add_into(acc, sw, c * q)
    return _prune(acc)


class HeckeElt:
    """A finite linear combination of basis elements ``T_w``."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: HeckeAlgebra, terms: Mapping):
        self.algebra = algebra
        self.terms = dict(terms)

    @property
    def n(self) -> int:
        return self.algebra.n

    def _check(self, other: HeckeElt) -> None:
        if not self.algebra.same_as(other.algebra):
            raise HeckeError(f"rank or parameter mismatch: {self.algebra} vs {other.algebra}")

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator:
        return iter(self.terms.items())

    def coeff(self, w):
        return self.terms.get(tuple(w), self.algebra.zero_scalar)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElt):
            if other == 0 or other is None:
                return not self.terms
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __add__(self, other) -> HeckeElt:
        if not isinstance(other, HeckeElt):
            other = self.algebra.scalar(other)
        self._check(other)
        acc = dict(self.terms)
        for w, c in other.terms.items():
            _add_into(acc, w, c)
        return HeckeElt(self.algebra, _prune(acc))

    __radd__ = __add__

    def __neg__(self) -> HeckeElt:
        return HeckeElt(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other) -> HeckeElt:
        if not isinstance(other, HeckeElt):
            other = self.algebra.scalar(other)
        return self + (-other)

    def __rsub__(self, other) -> HeckeElt:
        return (-self) + other

    def scale(self, c) -> HeckeElt:
        if not c:
            return self.algebra.zero
        return HeckeElt(self.algebra, {w: x * c for w, x in self.terms.items()})

    def mul_generator(self, k: int) -> HeckeElt:
        """Right multiplication by ``T_k``."""
        A = self.algebra
        return HeckeElt(A, _rmul_gen(self.terms, k, A.q, A.qm1))

    def lmul_generator(self, k: int) -> HeckeElt:
        """Left multiplication by ``T_k``."""
        A = self.algebra
        return HeckeElt(A, _lmul_gen(self.terms, k, A.q, A.qm1))

    def mul_basis(self, v) -> HeckeElt:
        """Right multiplication by ``T_v``, folded over a reduced word of ``v``."""
        A = self.algebra
        terms = self.terms
        for k in reduced_word(tuple(v)):
            terms = _rmul_gen(terms, k, A.q, A.qm1)
        return HeckeElt(A, terms)

    def __mul__(self, other) -> HeckeElt:
        if not isinstance(other, HeckeElt):
            return self.scale(self.algebra.field.convert(other))
        self._check(other)
        A = self.algebra
        e = identity(A.n)
        acc: dict = {}
        for v, c in other.terms.items():
            if v == e:
                part = self.terms
            else:
                part = self.terms
                for k in reduced_word(v):
                    part = _rmul_gen(part, k, A.q, A.qm1)
            for w, x in part.items():
                _add_into(acc, w, x * c)
        return HeckeElt(A, _prune(acc))

    def __rmul__(self, other) -> HeckeElt:
        # scalars commute with everything
        return self.__mul__(other)

    def map_coefficients(self, f, algebra: HeckeAlgebra) -> HeckeElt:
        """Apply ``f`` to every coefficient, landing in ``algebra``."""
        return HeckeElt(algebra, _prune({w: f(c) for w, c in self.terms.items()}))

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda t: (length(t[0]), t[0]))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"perm": list(w), "coeff": value_to_json(c)} for w, c in self.sorted_terms()],
        }

    def __repr__(self) -> str:
        return f"HeckeElt({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            word = reduced_word(w)
            cs = format_scalar(c)
            if not word:
                parts.append(f"({cs})" if " " in cs else cs)
                continue
            mono = "*".join(f"T{k}" for k in word)
            if cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append(f"-{mono}")
            elif " " in cs or "/" in cs:
                parts.append(f"({cs})*{mono}")
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts)


def format_scalar(c) -> str:
    return str(c) if isinstance(c, RatFunc) else QQ.format(c)


# --------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _e_sum_terms(n: int) -> tuple:
    return all_perms(n)


def e_sum(n: int, algebra: HeckeAlgebra | None = None) -> HeckeElt:
    """``E_n``: the sum of all ``T_w`` over S_n, each with coefficient 1."""
    if n < 1:
        raise HeckeError("e_sum needs n >= 1")
    A = algebra if algebra is not None else generic_algebra(n)
    if A.n != n:
        raise HeckeError("algebra rank must equal n; use embed() for smaller blocks")
    return HeckeElt(A, {w: A.one_scalar for w in _e_sum_terms(n)})


def embed_perm(h: int, w: tuple, n: int) -> Perm:
    m = len(w)
    return Perm(tuple(range(1, h + 1)) + tuple(h + x for x in w) + tuple(range(h + m + 1, n + 1)))


def embed(h: int, a: HeckeElt, n: int, algebra: HeckeAlgebra | None = None) -> HeckeElt:
    """The image of ``a`` in h_n under ``T_k -> T_{k+h}``."""
    m = a.n
    if h < 0 or h + m > n:
        raise HeckeError(f"cannot embed h_{m} into h_{n} with shift {h}")
    A = algebra if algebra is not None else HeckeAlgebra(n, a.algebra.q)
    return HeckeElt(A, {embed_perm(h, w, n): c for w, c in a.terms.items()})


def omega_perm(w: tuple) -> Perm:
    n = len(w)
    return Perm(tuple(n + 1 - w[n - i] for i in range(1, n + 1)))


def omega(a: HeckeElt) -> HeckeElt:
    """The involutive automorphism ``T_k -> T_{n-k}`` (conjugation by ``w_0``)."""
    return HeckeElt(a.algebra, {omega_perm(w): c for w, c in a.terms.items()})


def leading_terms(a: HeckeElt) -> dict:
    """All terms of maximal length."""
    if not a:
        raise HeckeError("the zero element has no leading term")
    top = max(length(w) for w in a.terms)
    return {w: c for w, c in a.terms.items() if length(w) == top}


def product(factors: Iterable[HeckeElt], algebra: HeckeAlgebra) -> HeckeElt:
    acc = algebra.one
    for f in factors:
        acc = acc * f
    return acc
