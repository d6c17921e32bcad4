"""Hom and Ext dimensions between uniserial modules.

All counts are combinatorial and independent of the ground field. A nonzero
map ``M -> N`` has as image a top segment of ``M`` which is also a bottom
segment of ``N``; ``hom_dim`` counts the lengths ``t`` for which those two
segments agree. ``ext1_dim`` comes from applying ``Hom(-, N)`` to
``0 -> Omega M -> P(M) -> M -> 0``.

The region predicates give a second, independent description of the same
vanishing sets on the lattice of a selfinjective algebra with ``k <= n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

from .algebra import Indec, NakayamaAlgebra
from .modcat import ZERO, gamma, syzygy


def hom_dim(A: NakayamaAlgebra, M: Indec, N: Indec) -> int:
    A.check(M)
    A.check(N)
    count = 0
    for t in range(1, min(M.length, N.length) + 1):
        if A.is_cyclic:
            if (M.top - (N.top + N.length - t)) % A.n == 0:
                count += 1
        elif M.top == N.top + N.length - t:
            count += 1
    return count


def ext1_dim(A: NakayamaAlgebra, M: Indec, N: Indec) -> int:
    om = syzygy(A, M)
    if om is ZERO:
        A.check(N)
        return 0
    P = A.projective(M.top)
    d = hom_dim(A, om, N) - hom_dim(A, P, N) + hom_dim(A, M, N)
    assert d >= 0, (A, M, N, d)
    return d


@dataclass(frozen=True)
class OmegaOrbit:
    """Successive syzygies ``M, Omega M, Omega^2 M, ...`` up to zero or the first repeat.

    ``cycle_start`` is the index the last entry's syzygy returns to, or ``None``
    when the chain ends in the zero module.
    """

    chain: tuple[Indec, ...]
    terminal: Literal["reachesZero", "entersCycle"]
    cycle_start: int | None = None

    @property
    def period(self) -> int | None:
        if self.cycle_start is None:
            return None
        return len(self.chain) - self.cycle_start

    def at(self, j: int):
        """``Omega^j M`` for any ``j >= 0``, using the eventual periodicity."""
        if j < len(self.chain):
            return self.chain[j]
        if self.cycle_start is None:
            return ZERO
        return self.chain[self.cycle_start + (j - self.cycle_start) % self.period]


@lru_cache(maxsize=None)
def omega_orbit(A: NakayamaAlgebra, M: Indec) -> OmegaOrbit:
    A.check(M)
    chain = [M]
    seen = {M: 0}
    while True:
        nxt = syzygy(A, chain[-1])
        if nxt is ZERO:
            return OmegaOrbit(tuple(chain), "reachesZero")
        if nxt in seen:
            return OmegaOrbit(tuple(chain), "entersCycle", seen[nxt])
        seen[nxt] = len(chain)
        chain.append(nxt)


def is_periodic(A: NakayamaAlgebra, M: Indec) -> bool:
    orbit = omega_orbit(A, M)
    return orbit.terminal == "entersCycle" and orbit.cycle_start == 0


def ext_dim(A: NakayamaAlgebra, M: Indec, N: Indec, r: int) -> int:
    """``dim Ext^r(M, N) = dim Ext^1(Omega^{r-1} M, N)``."""
    if r < 1:
        raise ValueError("r must be positive")
    A.check(N)
    X = omega_orbit(A, M).at(r - 1)
    if X is ZERO:
        return 0
    return ext1_dim(A, X, N)


def higher_ext_vanishes(A: NakayamaAlgebra, M: Indec, N: Indec) -> bool:
    """True when ``Ext^r(M, N) = 0`` for every ``r >= 1``.

    Only finitely many syzygies of ``M`` occur, so checking each once decides it.
    """
    A.check(N)
    return all(ext1_dim(A, X, N) == 0 for X in omega_orbit(A, M).chain)


def _require_region_algebra(A: NakayamaAlgebra) -> None:
    if not A.is_selfinjective:
        raise ValueError(f"regions need a selfinjective algebra, got {A.spec()}")
    if A.k > A.n:
        raise ValueError(f"regions are only described for k <= n (k={A.k}, n={A.n})")


def _representatives(x0: int, n: int, lo: int, hi: int):
    """Integers ``x = x0 (mod n)`` with ``lo <= x <= hi``."""
    x = lo + (x0 - lo) % n
    while x <= hi:
        yield x
        x += n


def hom_region_contains(A: NakayamaAlgebra, M: Indec, X: Indec) -> bool:
    """Is ``Gamma(X)`` in the trapezoid with corners (a,b), (a+b,0), (a+b,k-1), (a,k-1)?

    Half-planes: ``a <= x <= a+b`` and ``x + y >= a+b`` for some lift ``x`` of ``Gamma(X)_1``.
    """
    _require_region_algebra(A)
    a, b = gamma(A, M)
    x0, y = gamma(A, X)
    return any(x + y >= a + b for x in _representatives(x0, A.n, a, a + b))


def ext_region_corners(A: NakayamaAlgebra, M: Indec) -> tuple[tuple[int, int], ...]:
    """Corners of the Ext region of ``M`` in universal-cover coordinates.

    With ``(a, b) = Gamma(M)`` these are (a-1,b), (a-1,0), (a+b-k+1,k-2-b),
    (a+b-k+1,k-2). The region is empty for projective ``M`` (the corners then
    describe an inverted strip).
    """
    _require_region_algebra(A)
    a, b = gamma(A, M)
    k = A.k
    return ((a - 1, b), (a - 1, 0), (a + b - k + 1, k - 2 - b), (a + b - k + 1, k - 2))


def ext_region_contains(A: NakayamaAlgebra, M: Indec, X: Indec) -> bool:
    """Is ``Gamma(X)`` inside the Ext parallelogram of ``M`` (see :func:`ext_region_corners`)?

    In half-planes: ``a+b-k+1 <= x <= a-1`` and ``a-1 <= x+y <= a+b-1``.
    """
    _require_region_algebra(A)
    a, b = gamma(A, M)
    x0, y = gamma(A, X)
    lo = max(a + b - A.k + 1, a - 1 - y)
    hi = min(a - 1, a + b - 1 - y)
    return any(True for _ in _representatives(x0, A.n, lo, hi))
