"""Structural accessors for indecomposables and the lattice maps Gamma, sigma.

``gamma`` sends a module over a selfinjective algebra to the integer point
``(n - socle, length - 1)``; ``sigma`` shifts that point one unit to the
right, which lowers the socle index by one and keeps the length.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Final, NamedTuple, Union

from .algebra import Indec, NakayamaAlgebra


class _Zero:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"

    def __bool__(self) -> bool:
        return False

    def __reduce__(self):
        return (_Zero, ())


#: The zero module. Never an :class:`Indec`.
ZERO: Final = _Zero()

ModOrZero = Union[Indec, _Zero]


class LatticePoint(NamedTuple):
    a: int
    b: int


@dataclass(frozen=True)
class ModuleInfo:
    top: int
    socle: int
    radical: ModOrZero
    injective_envelope: Indec | None
    is_projective: bool


def socle(A: NakayamaAlgebra, M: Indec) -> int:
    return A.vertex(M.top + M.length - 1)


def is_projective(A: NakayamaAlgebra, M: Indec) -> bool:
    return M.length == A.c(M.top)


def radical(A: NakayamaAlgebra, M: Indec) -> ModOrZero:
    A.check(M)
    if M.length == 1:
        return ZERO
    return Indec(A.vertex(M.top + 1), M.length - 1)


def injective_envelope(A: NakayamaAlgebra, M: Indec) -> Indec:
    """The projective-injective with the same socle; selfinjective algebras only."""
    _require_selfinjective(A)
    A.check(M)
    return Indec(A.vertex(socle(A, M) - A.k + 1), A.k)


def describe_module(A: NakayamaAlgebra, M: Indec) -> ModuleInfo:
    A.check(M)
    return ModuleInfo(
        top=M.top,
        socle=socle(A, M),
        radical=radical(A, M),
        injective_envelope=injective_envelope(A, M) if A.is_selfinjective else None,
        is_projective=is_projective(A, M),
    )


def syzygy(A: NakayamaAlgebra, M: Indec) -> ModOrZero:
    """Kernel of the projective cover ``P_top -> M``."""
    A.check(M)
    c = A.c(M.top)
    if M.length == c:
        return ZERO
    # linear admissibility guarantees top + length <= n here
    return Indec(A.vertex(M.top + M.length), c - M.length)


def _require_selfinjective(A: NakayamaAlgebra) -> None:
    if not A.is_selfinjective:
        raise ValueError(f"{A.spec()} is not selfinjective; lattice maps are undefined")


def gamma(A: NakayamaAlgebra, M: Indec) -> LatticePoint:
    _require_selfinjective(A)
    A.check(M)
    return LatticePoint(A.n - socle(A, M), M.length - 1)


def gamma_inv(A: NakayamaAlgebra, p: tuple[int, int]) -> Indec:
    """Module of length ``b+1`` whose socle is ``n - (a mod n)`` (socle ``n`` when ``a = 0 mod n``)."""
    _require_selfinjective(A)
    a, b = p
    if not 0 <= b <= A.k - 1:
        raise ValueError(f"b = {b} outside 0..{A.k - 1}")
    soc = A.n - a % A.n
    return Indec(A.vertex(soc - b), b + 1)


def sigma(A: NakayamaAlgebra, M: Indec, times: int = 1) -> Indec:
    a, b = gamma(A, M)
    return gamma_inv(A, (a + times, b))
