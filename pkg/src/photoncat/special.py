"""Special functions and operator-ordering combinatorics.

Everything integer-valued is computed in exact integer arithmetic and only
converted to float at the final multiplication; the alternating sums the
witnesses build on are cancellation-prone otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import OddOrderError


def assoc_laguerre(n: int, k: int, x: float) -> float:
    """Associated Laguerre polynomial L_n^k(x) by the upward three-term recurrence.

    Stable for the argument range used here (|x| up to ~100, n up to a few
    tens); no asymptotic branches.
    """
    if n < 0 or k < 0:
        raise ValueError("assoc_laguerre requires n >= 0 and k >= 0")
    if n == 0:
        return 1.0
    prev = 1.0
    cur = 1.0 + k - x
    for i in range(1, n):
        prev, cur = cur, ((2 * i + k + 1 - x) * cur - (i + k) * prev) / (i + 1)
    return cur


@lru_cache(maxsize=None)
def stirling2(r: int, n: int) -> int:
    """Stirling number of the second kind S(r, n): partitions of an r-set into n blocks.

    Exact integers via the additive recurrence, so no alternating-sum
    cancellation. S(0, 0) = 1; n > r gives 0.
    """
    if r < 0 or n < 0:
        raise ValueError("stirling2 requires nonnegative arguments")
    if n == 0:
        return 1 if r == 0 else 0
    if n > r:
        return 0
    if n == r:
        return 1
    return n * stirling2(r - 1, n) + stirling2(r - 1, n - 1)


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient; k > n returns 0."""
    if n < 0 or k < 0:
        raise ValueError("binomial requires nonnegative arguments")
    if k > n:
        return 0
    return math.comb(n, k)


def double_factorial(n: int) -> int:
    """n!! with the empty-product convention (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError("double_factorial requires n >= -1")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def squeezing_threshold(l: int) -> float:
    """Coherent-state value of the l-th central quadrature moment, (l-1)!!/2^(l/2).

    Equals the rising factorial (1/2)_(l/2). Only even l >= 2 is meaningful.
    """
    if l < 2 or l % 2 != 0:
        raise OddOrderError(f"squeezing threshold needs even l >= 2, got {l}")
    return double_factorial(l - 1) / 2 ** (l // 2)


@dataclass(frozen=True)
class OrderingCoeffs:
    """Expansion a^p a+^q = sum_k weight(k) a+^(q-k) a^(p-k), weights exact ints."""

    p: int
    q: int
    coeffs: tuple[tuple[int, int], ...]


def ordering_weight(p: int, q: int, k: int) -> int:
    """Single term k! C(p,k) C(q,k) of the anti-normal -> normal expansion."""
    return math.factorial(k) * math.comb(p, k) * math.comb(q, k)


def ordering_coeffs(p: int, q: int) -> OrderingCoeffs:
    """All contraction weights for rewriting a^p a+^q in normal order."""
    if p < 0 or q < 0:
        raise ValueError("ordering_coeffs requires nonnegative powers")
    terms = tuple((k, ordering_weight(p, q, k)) for k in range(min(p, q) + 1))
    return OrderingCoeffs(p=p, q=q, coeffs=terms)


def xpower_expansion(r: int) -> tuple[tuple[int, int, int], ...]:
    """Normal-ordered expansion of (a + a+)^r via pair contractions.

    Returns (j, k, weight) triples meaning

        (a + a+)^r = sum weight * a+^j a^k        with j + k = r - 2i,

    weight = C(r, 2i) (2i-1)!! C(r-2i, j) counting the ways to contract i
    pairs out of r factors and split the surviving ones.
    """
    if r < 0:
        raise ValueError("xpower_expansion requires r >= 0")
    terms = []
    for i in range(r // 2 + 1):
        pair_ways = math.comb(r, 2 * i) * double_factorial(2 * i - 1)
        s = r - 2 * i
        for j in range(s + 1):
            terms.append((j, s - j, pair_ways * math.comb(s, j)))
    return tuple(terms)


def quadrature_power(moment, r: int) -> float:
    """<X^r> with X = (a + a+)/sqrt(2) from a normal-moment accessor.

    ``moment(j, k)`` must return <a+^j a^k>; the result keeps only the real
    part (imaginary residue is the caller's concern).
    """
    total = math.fsum(
        w * complex(moment(j, k)).real for (j, k, w) in xpower_expansion(r)
    )
    return total / 2 ** (r / 2)


def quadrature_central_power(moment, l: int) -> float:
    """<(X - <X>)^l> from a normal-moment accessor, compensated summation."""
    xbar = quadrature_power(moment, 1)
    return math.fsum(
        math.comb(l, r) * quadrature_power(moment, r) * (-xbar) ** (l - r)
        for r in range(l + 1)
    )
