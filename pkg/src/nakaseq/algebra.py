"""Nakayama algebras described by their Kupisch series.

Vertices are 1-based everywhere a user can see them. Arrows run
``i -> i+1`` (and ``n -> 1`` for cyclic algebras), so the indecomposable
module with top ``a`` and length ``l`` has composition factors
``a, a+1, ..., a+l-1`` read from top to socle.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Literal

Shape = Literal["cyclic", "linear"]


class AlgebraSpecError(ValueError):
    """Raised for malformed or inadmissible algebra descriptions."""


@dataclass(frozen=True, order=True)
class Indec:
    """Indecomposable (uniserial) module keyed by its top vertex and length."""

    top: int
    length: int

    def __str__(self) -> str:
        return f"{self.top},{self.length}"


@dataclass(frozen=True)
class NakayamaAlgebra:
    shape: Shape
    kupisch: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "kupisch", tuple(int(c) for c in self.kupisch))
        _check_admissible(self.shape, self.kupisch)

    @property
    def n(self) -> int:
        return len(self.kupisch)

    @property
    def is_cyclic(self) -> bool:
        return self.shape == "cyclic"

    @property
    def is_selfinjective(self) -> bool:
        return self.is_cyclic and len(set(self.kupisch)) == 1

    @property
    def k(self) -> int:
        """Common projective length of a selfinjective algebra."""
        if not self.is_selfinjective:
            raise ValueError("k is only defined for selfinjective algebras")
        return self.kupisch[0]

    def c(self, i: int) -> int:
        """Length of the indecomposable projective at vertex ``i`` (1-based)."""
        return self.kupisch[self.vertex(i) - 1]

    def vertex(self, i: int) -> int:
        """Reduce an integer to a vertex label in ``1..n`` (cyclic only wraps)."""
        if self.is_cyclic:
            return (i - 1) % self.n + 1
        if not 1 <= i <= self.n:
            raise ValueError(f"vertex {i} outside 1..{self.n}")
        return i

    def exists(self, m: Indec) -> bool:
        if not 1 <= m.top <= self.n or m.length < 1:
            return False
        if m.length > self.kupisch[m.top - 1]:
            return False
        if not self.is_cyclic and m.top + m.length - 1 > self.n:
            return False
        return True

    def check(self, m: Indec) -> Indec:
        if not self.exists(m):
            raise ValueError(f"module (top {m.top}, length {m.length}) does not exist over {self.spec()}")
        return m

    def indecomposables(self) -> list[Indec]:
        """All indecomposables sorted by ``(top, length)``."""
        return [Indec(a, l) for a in range(1, self.n + 1) for l in range(1, self.kupisch[a - 1] + 1)]

    def projective(self, i: int) -> Indec:
        i = self.vertex(i)
        return Indec(i, self.kupisch[i - 1])

    def simple(self, i: int) -> Indec:
        return Indec(self.vertex(i), 1)

    def spec(self) -> str:
        """Canonical text form; ``parse_algebra_spec`` inverts it."""
        if self.is_selfinjective and self.n >= 2:
            return f"selfinjective:n={self.n},k={self.k}"
        return f"{self.shape}:" + ",".join(str(c) for c in self.kupisch)

    def __str__(self) -> str:
        return self.spec()


def _check_admissible(shape: str, c: tuple[int, ...]) -> None:
    n = len(c)
    if shape not in ("cyclic", "linear"):
        raise AlgebraSpecError(f"unknown shape {shape!r}")
    if n == 0:
        raise AlgebraSpecError("empty Kupisch series")
    if shape == "cyclic":
        for i in range(n):
            if c[i] < 2:
                raise AlgebraSpecError(f"c_{i + 1} = {c[i]} < 2")
        for i in range(n):
            j = (i + 1) % n
            if c[j] < c[i] - 1:
                raise AlgebraSpecError(f"c_{j + 1} = {c[j]} < c_{i + 1} - 1 = {c[i] - 1}")
        return
    for i in range(n - 1):
        if c[i] < 2:
            raise AlgebraSpecError(f"c_{i + 1} = {c[i]} < 2")
    if c[-1] != 1:
        raise AlgebraSpecError(f"c_{n} = {c[-1]} != 1")
    for i in range(n - 1):
        if c[i + 1] < c[i] - 1:
            raise AlgebraSpecError(f"c_{i + 2} = {c[i + 1]} < c_{i + 1} - 1 = {c[i] - 1}")
    for i in range(n):
        if c[i] > n - i:
            raise AlgebraSpecError(f"c_{i + 1} = {c[i]} > n - i + 1 = {n - i}")


def selfinjective(n: int, k: int) -> NakayamaAlgebra:
    """The selfinjective algebra with ``n`` vertices and projectives of length ``k``."""
    if n < 2 or k < 2:
        raise AlgebraSpecError("selfinjective requires n >= 2 and k >= 2")
    return NakayamaAlgebra("cyclic", (k,) * n)


def hereditary_a(m: int) -> NakayamaAlgebra:
    """Path algebra of the linearly oriented A_m quiver."""
    if m < 1:
        raise AlgebraSpecError("hereditary-a requires m >= 1")
    return NakayamaAlgebra("linear", tuple(range(m, 0, -1)))


def linear_rad2(n: int) -> NakayamaAlgebra:
    """Linear radical square zero algebra on ``n`` vertices, Kupisch (2, ..., 2, 1)."""
    if n < 1:
        raise AlgebraSpecError("linear radical square zero requires n >= 1")
    return NakayamaAlgebra("linear", (2,) * (n - 1) + (1,))


_INT = r"\s*(\d+)\s*"
_SELFINJ = re.compile(rf"selfinjective:\s*n\s*={_INT},\s*k\s*={_INT}")
_SERIES = re.compile(r"(cyclic|linear):\s*(\d+(?:\s*,\s*\d+)*)\s*")
_HERED = re.compile(rf"hereditary-a:{_INT}")


def parse_algebra_spec(text: str) -> NakayamaAlgebra:
    """Parse ``selfinjective:n=4,k=2``, ``cyclic:3,3,2``, ``linear:2,2,1`` or ``hereditary-a:3``."""
    s = text.strip()
    if m := _SELFINJ.fullmatch(s):
        return selfinjective(int(m.group(1)), int(m.group(2)))
    if m := _SERIES.fullmatch(s):
        series = tuple(int(x) for x in m.group(2).split(","))
        return NakayamaAlgebra(m.group(1), series)  # type: ignore[arg-type]
    if m := _HERED.fullmatch(s):
        return hereditary_a(int(m.group(1)))
    raise AlgebraSpecError(
        f"cannot parse algebra spec {text!r}; expected selfinjective:n=<int>,k=<int> | "
        "cyclic:<c1>,... | linear:<c1>,... | hereditary-a:<m>"
    )


def parse_module(text: str) -> Indec:
    """Parse the ``top,len`` module literal."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"module literal must be 'top,len', got {text!r}")
    try:
        return Indec(int(parts[0]), int(parts[1]))
    except ValueError:
        raise ValueError(f"module literal must be 'top,len', got {text!r}") from None
