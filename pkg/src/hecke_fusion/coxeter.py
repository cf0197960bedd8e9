"""
The symmetric group S_n as a Coxeter group of type A_{n-1}.

Permutations are tuples in one-line notation with 1-based values,
``w = (w(1), ..., w(n))``.  Positive roots ``u_i - u_j`` are identified with
pairs ``(i, j)``, ``i < j``, and the simple root ``alpha_k`` is ``(k, k+1)``.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterable, NewType, Sequence

__all__ = [
    "Perm", "Pair", "CoxeterError",
    "identity", "perm_compose", "perm_inverse", "length", "inversion_set",
    "length_and_inversions", "word_to_perm", "reduced_word", "longest_element",
    "positive_roots", "order_to_word", "word_to_order", "is_biconvex",
    "is_convex_order", "lex_order", "colex_order", "all_perms",
]

# a permutation of {1..n} in one-line notation
Perm = NewType("Perm", tuple)

# a positive root u_i - u_j written as (i, j), i < j
Pair = tuple[int, int]


class CoxeterError(ValueError):
    pass


def identity(n: int) -> Perm:
    return Perm(tuple(range(1, n + 1)))


def perm_compose(u: Sequence[int], v: Sequence[int]) -> Perm:
    """``(u o v)(k) = u(v(k))``."""
    if len(u) != len(v):
        raise CoxeterError(f"size mismatch: {len(u)} != {len(v)}")
    return Perm(tuple(u[k - 1] for k in v))


def perm_inverse(w: Sequence[int]) -> Perm:
    inv = [0] * len(w)
    for pos, val in enumerate(w, 1):
        inv[val - 1] = pos
    return Perm(tuple(inv))


def length(w: Sequence[int]) -> int:
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def inversion_set(w: Sequence[int]) -> frozenset[Pair]:
    """``I_w = {(i, j) : w^{-1}(i) > w^{-1}(j)}``, the inversions of ``w^{-1}``."""
    inv = perm_inverse(w)
    n = len(w)
    return frozenset((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)
                     if inv[i - 1] > inv[j - 1])


def length_and_inversions(w: Sequence[int]) -> tuple[int, frozenset[Pair]]:
    inv = inversion_set(w)
    return len(inv), inv


def _check_perm(w: Sequence[int]) -> None:
    if sorted(w) != list(range(1, len(w) + 1)):
        raise CoxeterError(f"not a permutation of 1..{len(w)}: {tuple(w)}")


def word_to_perm(word: Iterable[int], n: int) -> Perm:
    """The product ``s_{k_1} s_{k_2} ... s_{k_m}`` in S_n."""
    w = list(range(1, n + 1))
    for k in word:
        if not 1 <= k <= n - 1:
            raise CoxeterError(f"generator index {k} out of range 1..{n - 1}")
        # right multiplication by s_k swaps positions k, k+1
        w[k - 1], w[k] = w[k], w[k - 1]
    return Perm(tuple(w))


@lru_cache(maxsize=None)
def reduced_word(w: tuple) -> tuple[int, ...]:
    """A reduced word for ``w``, peeling right descents from the end."""
    w = list(w)
    word = []
    while True:
        for k in range(1, len(w)):
            if w[k - 1] > w[k]:
                w[k - 1], w[k] = w[k], w[k - 1]
                word.append(k)
                break
        else:
            break
    word.reverse()
    return tuple(word)


def longest_element(n: int) -> Perm:
    return Perm(tuple(range(n, 0, -1)))


def positive_roots(n: int) -> list[Pair]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def lex_order(n: int) -> list[Pair]:
    """The lexicographic order on positive roots: first by ``i``, then ``j``."""
    return sorted(positive_roots(n))


def colex_order(n: int) -> list[Pair]:
    """The order by ``j`` first, then ``i``."""
    return sorted(positive_roots(n), key=lambda p: (p[1], p[0]))


def order_to_word(order: Sequence[Pair], n: int) -> list[int]:
    """Recover the reduced word whose k-th generated inversion is ``order[k]``.

    Inverts ``beta_k = s_{i_1} ... s_{i_{k-1}}(alpha_{i_k})``: the root
    ``w_{k-1}^{-1}(beta_k)`` must be simple at every step, otherwise the
    sequence is not a convex order on a biconvex set.
    """
    w = list(range(1, n + 1))           # w_{k-1} in one-line notation
    winv = list(range(1, n + 1))
    word = []
    seen = set()
    for pos, (i, j) in enumerate(order):
        if not 1 <= i < j <= n:
            raise CoxeterError(f"invalid pair {(i, j)} at position {pos}")
        if (i, j) in seen:
            raise CoxeterError(f"pair {(i, j)} repeated at position {pos}")
        seen.add((i, j))
        t, u = winv[i - 1], winv[j - 1]
        if u != t + 1:
            raise CoxeterError(
                f"not a convex order: pair {(i, j)} at position {pos} is not a simple root "
                f"after the preceding prefix")
        word.append(t)
        a, b = w[t - 1], w[t]
        w[t - 1], w[t] = b, a
        winv[a - 1], winv[b - 1] = t + 1, t
    return word


def word_to_order(word: Sequence[int], n: int) -> list[Pair]:
    """The inversions ``beta_1, ..., beta_m`` generated by a word, in order."""
    w = list(range(1, n + 1))
    order = []
    for k in word:
        i, j = w[k - 1], w[k]
        if i > j:
            raise CoxeterError(f"word {list(word)} is not reduced")
        order.append((i, j))
        w[k - 1], w[k] = j, i
    return order


def _closed(subset: set[Pair], n: int) -> bool:
    for (i, j) in subset:
        for k in range(j + 1, n + 1):
            if (j, k) in subset and (i, k) not in subset:
                return False
    return True


def is_biconvex(subset: Iterable[Pair], n: int) -> bool:
    """Both the set and its complement in the positive roots are closed."""
    s = set(subset)
    comp = set(positive_roots(n)) - s
    return _closed(s, n) and _closed(comp, n)


def is_convex_order(order: Sequence[Pair], n: int) -> bool:
    """Check a total order on a biconvex set against the two axioms directly.

    (i) ``a < b`` with ``a + b`` a root forces ``a < a + b < b``;
    (ii) ``a + b`` in the set with ``a`` outside forces ``b < a + b``.
    """
    pos = {p: k for k, p in enumerate(order)}
    if len(pos) != len(order) or not is_biconvex(pos, n):
        return False
    roots = positive_roots(n)
    for (i, j) in roots:
        for k in range(j + 1, n + 1):
            # (i, j) + (j, k) = (i, k)
            a, b, s = (i, j), (j, k), (i, k)
            for x, y in ((a, b), (b, a)):
                if x in pos and y in pos:
                    if pos[x] < pos[y] and not pos[x] < pos[s] < pos[y]:
                        return False
                if s in pos and x not in pos:
                    if y not in pos or not pos[y] < pos[s]:
                        return False
    return True


@lru_cache(maxsize=None)
def all_perms(n: int) -> tuple[Perm, ...]:
    """All of S_n sorted by length, then one-line notation."""
    return tuple(sorted((Perm(p) for p in permutations(range(1, n + 1))),
                        key=lambda p: (length(p), p)))
