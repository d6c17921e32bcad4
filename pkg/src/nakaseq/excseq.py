"""Weak and standard exceptional modules, pairs, sequences, and their enumeration.

A sequence ``(M_1, ..., M_r)`` is exceptional when every ``(M_i, M_j)`` with
``i < j`` is an exceptional pair, i.e. ``Hom(M_j, M_i) = 0`` and the relevant
Ext groups from ``M_j`` to ``M_i`` vanish. In *weak* mode only ``Ext^1`` is
required to vanish; *standard* mode requires all ``Ext^r``.

The enumerator works on bitmasks over the exceptional modules of the algebra.
For a set ``C`` of modules still allowed next, the longest continuation and
the number of such continuations only depend on ``C``, so they are memoised
per mask. The result is an exact exhaustive count.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Literal, Sequence

from .algebra import Indec, NakayamaAlgebra
from .homology import ext1_dim, higher_ext_vanishes, hom_dim
from .modcat import sigma

Mode = Literal["weak", "standard"]
MODES: tuple[Mode, ...] = ("weak", "standard")


class NodeBudgetExceeded(RuntimeError):
    """The search visited more nodes than the configured budget allows."""


# -- predicates --------------------------------------------------------------


def is_weak_exceptional(A: NakayamaAlgebra, M: Indec) -> bool:
    return hom_dim(A, M, M) == 1 and ext1_dim(A, M, M) == 0


def is_standard_exceptional(A: NakayamaAlgebra, M: Indec) -> bool:
    return hom_dim(A, M, M) == 1 and higher_ext_vanishes(A, M, M)


def is_weak_pair(A: NakayamaAlgebra, M: Indec, N: Indec) -> bool:
    """``M`` earlier, ``N`` later."""
    return (
        is_weak_exceptional(A, M)
        and is_weak_exceptional(A, N)
        and hom_dim(A, N, M) == 0
        and ext1_dim(A, N, M) == 0
    )


def is_standard_pair(A: NakayamaAlgebra, M: Indec, N: Indec) -> bool:
    return (
        is_standard_exceptional(A, M)
        and is_standard_exceptional(A, N)
        and hom_dim(A, N, M) == 0
        and higher_ext_vanishes(A, N, M)
    )


def is_exceptional(A: NakayamaAlgebra, M: Indec, mode: Mode = "weak") -> bool:
    return is_weak_exceptional(A, M) if _mode(mode) == "weak" else is_standard_exceptional(A, M)


def is_pair(A: NakayamaAlgebra, M: Indec, N: Indec, mode: Mode = "weak") -> bool:
    return is_weak_pair(A, M, N) if _mode(mode) == "weak" else is_standard_pair(A, M, N)


def _mode(mode: str) -> Mode:
    if mode not in MODES:
        raise ValueError(f"mode must be 'weak' or 'standard', got {mode!r}")
    return mode  # type: ignore[return-value]


@dataclass(frozen=True)
class ExcSequence:
    mode: Mode
    modules: tuple[Indec, ...]

    def __len__(self) -> int:
        return len(self.modules)

    def __iter__(self) -> Iterator[Indec]:
        return iter(self.modules)

    @property
    def size(self) -> int:
        return len(set(self.modules))


@dataclass(frozen=True)
class Violation:
    i: int
    j: int
    reason: str


@dataclass(frozen=True)
class Validation:
    valid: bool
    first_violation: Violation | None = None

    def __bool__(self) -> bool:
        return self.valid


def validate_sequence(A: NakayamaAlgebra, mode: Mode, modules: Sequence[Indec]) -> Validation:
    """Check every pair ``i < j``; report the lexicographically first failure.

    Indices in the reported violation are 0-based positions in ``modules``.
    A failing singleton is reported as ``(i, i)``.
    """
    mode = _mode(mode)
    mods = [A.check(M) for M in modules]
    bad_self = [i for i, M in enumerate(mods) if not is_exceptional(A, M, mode)]
    for i, M in enumerate(mods):
        if i in bad_self:
            return Validation(False, Violation(i, i, f"({M}) is not {mode} exceptional"))
        for j in range(i + 1, len(mods)):
            N = mods[j]
            if j in bad_self:
                return Validation(False, Violation(i, j, f"({N}) is not {mode} exceptional"))
            if hom_dim(A, N, M):
                return Validation(False, Violation(i, j, f"Hom(({N}), ({M})) != 0"))
            if mode == "weak":
                if ext1_dim(A, N, M):
                    return Validation(False, Violation(i, j, f"Ext^1(({N}), ({M})) != 0"))
            elif not higher_ext_vanishes(A, N, M):
                return Validation(False, Violation(i, j, f"Ext^r(({N}), ({M})) != 0 for some r"))
    return Validation(True)


def is_orthogonal(A: NakayamaAlgebra, modules: Sequence[Indec]) -> bool:
    return all(
        hom_dim(A, M, N) == 0
        for i, M in enumerate(modules)
        for j, N in enumerate(modules)
        if i != j
    )


# -- enumeration -------------------------------------------------------------


@dataclass(frozen=True)
class PairTable:
    """Exceptional modules of one algebra and, per module, the mask of admissible successors."""

    modules: tuple[Indec, ...]
    after: tuple[int, ...]

    @property
    def full_mask(self) -> int:
        return (1 << len(self.modules)) - 1

    def index(self, M: Indec) -> int:
        return self.modules.index(M)


@lru_cache(maxsize=64)
def pair_table(A: NakayamaAlgebra, mode: Mode) -> PairTable:
    mode = _mode(mode)
    mods = tuple(M for M in A.indecomposables() if is_exceptional(A, M, mode))
    after = []
    for M in mods:
        mask = 0
        for j, N in enumerate(mods):
            if hom_dim(A, N, M) == 0 and (
                ext1_dim(A, N, M) == 0 if mode == "weak" else higher_ext_vanishes(A, N, M)
            ):
                mask |= 1 << j
        after.append(mask)
    for i, mask in enumerate(after):
        # End(M) = k forbids repeating a module
        assert not mask >> i & 1
    return PairTable(mods, tuple(after))


class _Search:
    def __init__(self, table: PairTable, node_budget: int | None = None):
        self.after = table.after
        self.budget = node_budget
        self.nodes = 0
        self._best: dict[int, tuple[int, int]] = {}
        self._exact: dict[tuple[int, int], int] = {}

    def _tick(self) -> None:
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise NodeBudgetExceeded(f"node budget {self.budget} exhausted")

    def best(self, mask: int) -> tuple[int, int]:
        """(longest continuation drawn from ``mask``, number of such continuations)."""
        if mask == 0:
            return 0, 1
        hit = self._best.get(mask)
        if hit is not None:
            return hit
        self._tick()
        top, cnt = 0, 0
        for i in _bits(mask):
            length, c = self.best(mask & self.after[i])
            length += 1
            if length > top:
                top, cnt = length, c
            elif length == top:
                cnt += c
        self._best[mask] = (top, cnt)
        return top, cnt

    def exact(self, mask: int, r: int) -> int:
        """Number of continuations of length exactly ``r`` drawn from ``mask``."""
        if r == 0:
            return 1
        if mask.bit_count() < r:
            return 0
        key = (mask, r)
        hit = self._exact.get(key)
        if hit is not None:
            return hit
        self._tick()
        total = sum(self.exact(mask & self.after[i], r - 1) for i in _bits(mask))
        self._exact[key] = total
        return total

    def witnesses(self, mask: int, r: int, prefix: list[int]) -> Iterator[list[int]]:
        """Continuations of length ``r`` from ``mask`` in lexicographic order."""
        if r == 0:
            yield list(prefix)
            return
        for i in _bits(mask):
            sub = mask & self.after[i]
            if self.exact(sub, r - 1) == 0:
                continue
            prefix.append(i)
            yield from self.witnesses(sub, r - 1, prefix)
            prefix.pop()


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass
class EnumResult:
    """Outcome of an exhaustive search.

    ``count`` counts ordered sequences of length ``size``; ``size`` equals
    ``max_size`` unless a fixed size was requested.
    """

    max_size: int
    count: int
    size: int
    sequences: list[ExcSequence] | None = None
    nodes: int = field(default=0, compare=False)


def _first_module_job(args) -> tuple[int, int, int, list[list[int]], int]:
    table, first, size, materialize, limit, budget = args
    search = _Search(table, budget)
    sub = table.after[first]
    length, _ = search.best(sub)
    if size is None:
        target = length + 1
    else:
        target = size
    count = search.exact(sub, target - 1) if target >= 1 else 0
    wit: list[list[int]] = []
    if materialize and count:
        for w in search.witnesses(sub, target - 1, [first]):
            wit.append(w)
            if limit is not None and len(wit) >= limit:
                break
    return first, length + 1, count, wit, search.nodes


def enumerate_sequences(
    A: NakayamaAlgebra,
    mode: Mode = "weak",
    *,
    materialize: bool = False,
    fixed_size: int | None = None,
    max_witnesses: int | None = None,
    node_budget: int | None = None,
    workers: int = 1,
    use_symmetry: bool = False,
) -> EnumResult:
    """Exhaustively find the maximal size of ``mode`` exceptional sequences and count them.

    With ``fixed_size`` the count is of sequences of exactly that size.
    ``use_symmetry`` (selfinjective algebras only) searches only sequences
    starting at a module with socle ``n`` and multiplies by ``n``; totals are
    identical to the plain search. Witnesses are always returned sorted by
    their module keys, whatever ``workers`` is.
    """
    mode = _mode(mode)
    table = pair_table(A, mode)
    if fixed_size is not None and fixed_size < 0:
        raise ValueError("fixed_size must be non-negative")
    if use_symmetry and not A.is_selfinjective:
        raise ValueError("symmetry reduction needs a selfinjective algebra")

    firsts = list(range(len(table.modules)))
    if use_symmetry:
        firsts = [i for i, M in enumerate(table.modules) if (M.top + M.length - 1) % A.n == 0]
    sized = fixed_size if fixed_size is not None and fixed_size >= 1 else None
    jobs = [(table, i, sized, materialize, max_witnesses, node_budget) for i in firsts]

    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_first_module_job, jobs))
    else:
        results = [_first_module_job(job) for job in jobs]
    nodes = sum(r[4] for r in results)
    if node_budget is not None and nodes > node_budget:
        raise NodeBudgetExceeded(f"node budget {node_budget} exhausted")

    mult = A.n if use_symmetry else 1
    max_size = max((r[1] for r in results), default=0)
    if fixed_size is None:
        size = max_size
        picked = [r for r in results if r[1] == max_size]
    else:
        size = fixed_size
        picked = list(results) if fixed_size >= 1 else []
    if size == 0:
        count = 1
    else:
        count = mult * sum(r[2] for r in picked)

    sequences = None
    if materialize:
        raw: list[tuple[Indec, ...]] = []
        if size == 0:
            raw.append(())
        for r in picked:
            for w in r[3]:
                mods = tuple(table.modules[i] for i in w)
                if use_symmetry:
                    raw.extend(tuple(sigma(A, M, s) for M in mods) for s in range(A.n))
                else:
                    raw.append(mods)
        raw.sort()
        if max_witnesses is not None:
            raw = raw[:max_witnesses]
        sequences = [ExcSequence(mode, mods) for mods in raw]
    return EnumResult(max_size, count, size, sequences, nodes)


def default_workers() -> int:
    return os.cpu_count() or 1
