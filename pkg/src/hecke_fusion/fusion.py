"""
The fusion engine.

Two closed-form recipes produce ``E_lambda`` as an ordered product along the
special order:

* :func:`limiting_plan` -- plain factors ``T_{j-i} + <q^{c_j - c_i}>``, the
  scalar ``1 - q`` for singular pairs outside ``R``, and a three-term factor
  for every fused pair;
* :func:`shortening_plan` -- the same, with within-row blocks replaced by
  shifted sums ``E_m^{(h)}`` and blocks of two parallel rows by ``f_m``.

:func:`compute_E_oracle` computes the same element the long way: the full
product ``phi_0`` over a lexicographic reduced word of ``w_0`` at a point of
a curve ``x_k = q^{c_k} z^{e_row(k)}``, times the correction factor, with
``z -> 1`` taken coefficientwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .coxeter import Pair, lex_order, order_to_word, word_to_order
from .diagram import (
    Diagram, earlier_parallel_boxes, parallel_data, rows_parallel, special_order,
)
from .field import QQ, PoleError, RatFunc, bracket, domain_of, eval_at, frac_field, q_power
from .hecke import HeckeAlgebra, HeckeElt, e_sum, embed, format_scalar, generic_algebra

__all__ = [
    "Step", "Scalar", "Plain", "Fused", "RowSum", "ParallelScalar", "FusionPlan",
    "DeltaSpec", "RestrictionChart", "OracleError",
    "factor_value", "three_term", "f_scalar", "f_label", "limiting_plan", "shortening_plan",
    "compute_E_limiting", "compute_E_shortening", "phi_product", "delta_spec",
    "compute_E_oracle", "admissible_q_values", "specialize",
]


class OracleError(PoleError):
    """A coefficient of the curve product still has a pole at ``z = 1``."""

    def __init__(self, message: str, perm=None, order: int = 0):
        super().__init__(message, order=order)
        self.perm = perm


def _algebra_for(n: int, algebra: HeckeAlgebra | None) -> HeckeAlgebra:
    if algebra is None:
        return generic_algebra(n)
    if algebra.n != n:
        raise ValueError(f"algebra has rank {algebra.n}, diagram has degree {n}")
    return algebra


def factor_value(pair: Pair, contents: Sequence[int], algebra: HeckeAlgebra) -> HeckeElt:
    """``T_{j-i} + <q^{c_j - c_i}>`` for a non-singular pair ``(i, j)``."""
    i, j = pair
    dc = contents[j - 1] - contents[i - 1]
    if dc == 0:
        raise PoleError(f"pair {pair} is singular", order=1)
    q = algebra.q
    return algebra.T(j - i) + bracket(q_power(q, dc), q)


def three_term(k: int, orientation: str, algebra: HeckeAlgebra) -> HeckeElt:
    """``T_k T_{k+1} - q T_{k+1} - q`` (minus) or ``T_{k+1} T_k - q T_{k+1} - q`` (plus)."""
    if not 1 <= k <= algebra.n - 2:
        raise ValueError(f"three-term factor needs 1 <= k <= n - 2, got k={k}, n={algebra.n}")
    q = algebra.q
    if orientation == "minus":
        head = algebra.T(k, k + 1)
    elif orientation == "plus":
        head = algebra.T(k + 1, k)
    else:
        raise ValueError(f"orientation must be 'minus' or 'plus', not {orientation!r}")
    return head - algebra.T(k + 1).scale(q) - q


def f_scalar(m: int, q=None):
    """``(-1)^m q^{m(m-1)/2} (q^m - 1)``."""
    if m < 1:
        raise ValueError("f_scalar needs m >= 1")
    if q is None:
        q = frac_field(QQ, "q").gen()
    one = domain_of(q).one
    sign = one if m % 2 == 0 else -one
    return sign * q ** (m * (m - 1) // 2) * (q ** m - one)


def f_label(m: int) -> str:
    """``f_m`` in factored form, e.g. ``q(q^2 - 1)``."""
    if m == 1:
        return "1 - q"
    e = m * (m - 1) // 2
    qe = "q" if e == 1 else f"q^{e}"
    return f"{'' if m % 2 == 0 else '-'}{qe}(q^{m} - 1)"


# --------------------------------------------------------------------------
# plans


def _t_label(*ks: int) -> str:
    return "".join(f"T{k}" for k in ks)


@dataclass(frozen=True)
class Step:
    positions: tuple[int, ...]   # 0-based positions in the special order
    pairs: tuple[Pair, ...]

    tag = "step"

    def element(self, algebra: HeckeAlgebra, contents) -> HeckeElt | object:
        raise NotImplementedError

    def label(self, algebra: HeckeAlgebra, contents) -> str:
        raise NotImplementedError

    def extra_json(self) -> dict:
        return {}

    def to_json(self, algebra: HeckeAlgebra, contents) -> dict:
        d = {"tag": self.tag, "positions": list(self.positions),
             "pairs": [list(p) for p in self.pairs]}
        d.update(self.extra_json())
        d["factor"] = self.label(algebra, contents)
        return d


@dataclass(frozen=True)
class Scalar(Step):
    """A singular pair outside ``R``: the scalar ``1 - q``."""

    tag = "scalar"

    def element(self, algebra, contents):
        return algebra.one_scalar - algebra.q

    def label(self, algebra, contents):
        if isinstance(algebra.q, RatFunc):
            return "(1 - q)"
        return f"({format_scalar(algebra.one_scalar - algebra.q)})"


@dataclass(frozen=True)
class Plain(Step):
    gen: int = 0

    tag = "plain"

    def element(self, algebra, contents):
        return factor_value(self.pairs[0], contents, algebra)

    def value(self, algebra, contents):
        i, j = self.pairs[0]
        q = algebra.q
        return bracket(q_power(q, contents[j - 1] - contents[i - 1]), q)

    def label(self, algebra, contents):
        v = self.value(algebra, contents)
        s = format_scalar(v)
        if s.startswith("-"):
            return f"({_t_label(self.gen)} - {s[1:]})"
        return f"({_t_label(self.gen)} + {s})"

    def extra_json(self):
        return {"gen": self.gen}


@dataclass(frozen=True)
class Fused(Step):
    k: int = 0
    orientation: str = "minus"

    tag = "fused"

    def element(self, algebra, contents):
        return three_term(self.k, self.orientation, algebra)

    def label(self, algebra, contents):
        k = self.k
        head = _t_label(k, k + 1) if self.orientation == "minus" else _t_label(k + 1, k)
        return f"({head} - q{_t_label(k + 1)} - q)"

    def extra_json(self):
        return {"k": self.k, "orientation": self.orientation}


@dataclass(frozen=True)
class RowSum(Step):
    row: int = 0
    m: int = 0
    h: int = 0

    tag = "rowsum"

    def element(self, algebra, contents):
        small = HeckeAlgebra(self.m, algebra.q)
        return embed(self.h, e_sum(self.m, small), algebra.n, algebra)

    def label(self, algebra, contents):
        return f"E_{self.m}^({self.h})"

    def extra_json(self):
        return {"row": self.row, "m": self.m, "h": self.h}


@dataclass(frozen=True)
class ParallelScalar(Step):
    rows: tuple[int, int] = (0, 0)
    m: int = 0

    tag = "parallel"

    def element(self, algebra, contents):
        return f_scalar(self.m, algebra.q)

    def label(self, algebra, contents):
        if isinstance(algebra.q, RatFunc):
            return f"({f_label(self.m)})"
        return f"({format_scalar(f_scalar(self.m, algebra.q))})"

    def extra_json(self):
        return {"rows": list(self.rows), "m": self.m}


@dataclass(frozen=True)
class FusionPlan:
    diagram: Diagram
    kind: str                     # "limiting" or "shortening"
    steps: tuple[Step, ...]
    contents: tuple[int, ...] = field(repr=False, default=())

    def evaluate(self, algebra: HeckeAlgebra | None = None) -> HeckeElt:
        A = _algebra_for(self.diagram.n, algebra)
        acc = A.one
        for step in self.steps:
            f = step.element(A, self.contents)
            if isinstance(f, HeckeElt):
                acc = acc * f
            else:
                acc = acc.scale(f)
        return acc

    def factors(self, algebra: HeckeAlgebra | None = None) -> list[str]:
        A = _algebra_for(self.diagram.n, algebra)
        return [s.label(A, self.contents) for s in self.steps]

    def __str__(self) -> str:
        return "".join(self.factors())

    def to_json(self, algebra: HeckeAlgebra | None = None) -> dict:
        A = _algebra_for(self.diagram.n, algebra)
        return {"diagram": self.diagram.to_json(), "kind": self.kind,
                "steps": [s.to_json(A, self.contents) for s in self.steps]}


def _fusion_steps(entries, start: int, stop: int) -> list[Step]:
    """Limiting-recipe steps for the entries at positions ``start..stop-1``."""
    fused_at = {}
    for p in range(start, stop):
        e = entries[p]
        if e.in_R:
            a, b = sorted((p, e.partner_position))
            assert start <= a and b < stop, "fusion crosses a block boundary"
            assert a not in fused_at and b not in fused_at, "overlapping fusions"
            fused_at[a] = (a, b, p)
            fused_at[b] = None
    steps: list[Step] = []
    for p in range(start, stop):
        e = entries[p]
        if p in fused_at:
            if fused_at[p] is None:
                continue
            a, b, xi = fused_at[p]
            i, j = entries[xi].pair
            orient = "minus" if entries[xi].e_sign == "-" else "plus"
            steps.append(Fused((a, b), (entries[a].pair, entries[b].pair), k=j - i - 1,
                               orientation=orient))
        elif e.singular:
            steps.append(Scalar((p,), (e.pair,)))
        else:
            steps.append(Plain((p,), (e.pair,), gen=e.gen_index))
    return steps


def limiting_plan(lam: Diagram) -> FusionPlan:
    order = special_order(lam)
    steps = _fusion_steps(order.entries, 0, len(order.entries))
    used = sorted(p for s in steps for p in s.positions)
    assert used == list(range(len(order.entries))), "plan does not consume every pair once"
    return FusionPlan(lam, "limiting", tuple(steps), lam.filling.content)


def shortening_plan(lam: Diagram) -> FusionPlan:
    order = special_order(lam)
    steps: list[Step] = []
    for (k, l), block in order.blocks():
        start = order.position[block[0].pair]
        stop = start + len(block)
        positions = tuple(range(start, stop))
        pairs = tuple(e.pair for e in block)
        if k == l:
            m = lam.row_length(k)
            steps.append(RowSum(positions, pairs, row=k, m=m, h=earlier_parallel_boxes(lam, k)))
        elif rows_parallel(lam, k, l):
            steps.append(ParallelScalar(positions, pairs, rows=(k, l), m=lam.row_length(k)))
        else:
            steps.extend(_fusion_steps(order.entries, start, stop))
    used = sorted(p for s in steps for p in s.positions)
    assert used == list(range(len(order.entries))), "plan does not consume every pair once"
    return FusionPlan(lam, "shortening", tuple(steps), lam.filling.content)


def compute_E_limiting(lam: Diagram, algebra: HeckeAlgebra | None = None) -> HeckeElt:
    E = limiting_plan(lam).evaluate(algebra)
    assert E, "E_lambda vanished"
    return E


def compute_E_shortening(lam: Diagram, algebra: HeckeAlgebra | None = None) -> HeckeElt:
    E = shortening_plan(lam).evaluate(algebra)
    assert E, "E_lambda vanished"
    return E


# --------------------------------------------------------------------------
# the rational function phi_w and the limit oracle


def phi_product(word_or_order, x: Sequence, algebra: HeckeAlgebra) -> HeckeElt:
    """``prod_k (T_{i_k} + <x_j / x_i>)`` over ``beta_k = (i, j)``.

    Accepts a reduced word (sequence of ints) or a convex order (sequence
    of pairs); either determines the other.
    """
    n = algebra.n
    seq = list(word_or_order)
    if seq and isinstance(seq[0], int):
        word, order = seq, word_to_order(seq, n)
    else:
        order = [tuple(p) for p in seq]
        word = order_to_word(order, n)
    if len(x) != n:
        raise ValueError(f"point has {len(x)} coordinates, expected {n}")
    if any(not xi for xi in x):
        raise ValueError("coordinates must be nonzero")
    q = algebra.q
    acc = algebra.one
    for k, (i, j) in zip(word, order):
        acc = acc * (algebra.T(k) + bracket(x[j - 1] / x[i - 1], q))
    return acc


@dataclass(frozen=True)
class DeltaSpec:
    """The correction factor: ``prod (1 - x_l / x_k)`` over ``vanishing_pairs``."""

    vanishing_pairs: frozenset[Pair]

    def value(self, x: Sequence):
        one = domain_of(x[0]).one
        acc = one
        for k, l in sorted(self.vanishing_pairs):
            acc = acc * (one - x[l - 1] / x[k - 1])
        return acc


def delta_spec(lam: Diagram) -> DeltaSpec:
    return DeltaSpec(parallel_data(lam).vanishing_pairs)


@dataclass(frozen=True)
class RestrictionChart:
    """A curve through the evaluation point inside the restriction subspace:
    ``x_k = q^{c_k} z^{exponent[row(k)]}``."""

    exponent: dict

    def __post_init__(self):
        vals = list(self.exponent.values())
        if len(set(vals)) != len(vals):
            raise ValueError("row exponents must be pairwise distinct")

    @classmethod
    def default(cls, lam: Diagram) -> RestrictionChart:
        return cls({rho: rho for rho in range(1, lam.r + 1)})

    def point(self, lam: Diagram, q, z) -> list:
        fill = lam.filling
        return [q_power(q, c) * z ** self.exponent[rho]
                for c, rho in zip(fill.content, fill.row_of)]


def compute_E_oracle(rows, chart: RestrictionChart | None = None, q=None) -> HeckeElt:
    """``E`` as the ``z -> 1`` value of ``delta * phi_0`` along a chart curve.

    ``q`` is either ``None`` (symbolic, coefficients in Q(q)) or a rational
    specialization, in which case the computation runs over Q(z).  The row
    list need not satisfy the Cherednik condition; if some coefficient keeps
    a pole at ``z = 1``, :class:`OracleError` names the basis element.
    """
    lam = rows if isinstance(rows, Diagram) else Diagram(tuple(tuple(r) for r in rows))
    n = lam.n
    if q is None:
        K = frac_field(QQ, "q")
        qK = K.gen()
    else:
        K = QQ
        qK = QQ.convert(q)
    L = frac_field(K, "z")
    z = L.gen()
    qL = L.constant(qK)
    chart = chart or RestrictionChart.default(lam)
    x = chart.point(lam, qL, z)
    AL = HeckeAlgebra(n, qL)
    phi0 = phi_product(lex_order(n), x, AL)
    delta = delta_spec(lam).value(x) if n > 1 else L.one
    AK = HeckeAlgebra(n, qK)
    terms = {}
    for w, c in phi0.terms.items():
        try:
            v = eval_at(c * delta, K.one)
        except PoleError as err:
            raise OracleError(f"coefficient of T_{w} has a pole of order {err.order} at z = 1",
                              perm=w, order=err.order) from None
        if v:
            terms[w] = v
    return HeckeElt(AK, terms)


def admissible_q_values(count: int, n: int, seed: int = 0) -> list:
    """Random rationals away from 0, +1, -1 (and so from every root of unity)."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        # small heights keep specialized coefficients short
        num = rng.randint(-12, 12)
        den = rng.randint(1, 12)
        v = QQ.convert(Fraction(num, den))
        if v in (0, 1, -1) or v in out:
            continue
        if any(v ** c == 1 for c in range(1, n + 1)):
            continue
        out.append(v)
    return out


def specialize(E: HeckeElt, q0) -> HeckeElt:
    """Substitute ``q = q0`` into every coefficient of an element over Q(q)."""
    A = HeckeAlgebra(E.n, QQ.convert(q0))
    return E.map_coefficients(lambda c: eval_at(c, q0), A)
