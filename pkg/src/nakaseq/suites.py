"""Sweeps that compare enumerated or computed quantities with their predictions.

Each suite returns rows with the columns of :data:`CSV_HEADER`. For counting
suites the size and count columns carry the full-sequence size and count. The
structural suites reuse them: ``weakvs`` puts the number of modules checked in
the size columns and the number of standard exceptional modules in the count
columns; ``regions`` puts pairs with nonzero Hom in the size columns and pairs
with nonzero Ext^1 in the count columns, region-based on the predicted side;
``sigma`` compares the witness set with its image under sigma.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .algebra import NakayamaAlgebra, hereditary_a, linear_rad2, selfinjective
from .excseq import enumerate_sequences, is_standard_exceptional
from .formulas import FamilyParams, predicted_count, predicted_size
from .homology import (
    ext1_dim,
    ext_region_contains,
    hom_dim,
    hom_region_contains,
    is_periodic,
)
from .modcat import is_projective, sigma

CSV_HEADER = ("suite", "param", "predicted_size", "found_size", "predicted_count", "found_count", "match")

#: inclusive parameter bounds each suite is known to handle quickly
SAFE_RANGES = {
    "thm1": (2, 6),
    "thm2": (3, 7),
    "thm3": (2, 9),
    "seidel": (1, 6),
    "rad2": (1, 6),
    "unique-linear": (3, 7),
    "weakvs": (2, 5),
    "regions": (2, 8),
    "sigma": (2, 6),
}
SUITES = tuple(SAFE_RANGES)


@dataclass
class Row:
    suite: str
    param: str
    predicted_size: int | str
    found_size: int | str
    predicted_count: int | str
    found_count: int | str
    match: bool

    def as_tuple(self) -> tuple:
        return (
            self.suite,
            self.param,
            self.predicted_size,
            self.found_size,
            self.predicted_count,
            self.found_count,
            "true" if self.match else "false",
        )


def unique_linear_algebra(n: int) -> NakayamaAlgebra:
    """Linear algebra with Kupisch series (n-1, n-1, n-2, ..., 2, 1)."""
    return NakayamaAlgebra("linear", (n - 1,) + tuple(range(n - 1, 0, -1)))


#: non-constant cyclic series checked by ``weakvs``, keyed by vertex count
WEAKVS_EXTRA = {3: [(3, 3, 2), (3, 3, 3)], 4: [(4, 3, 3, 2)]}


def weakvs_algebras(n: int) -> list[NakayamaAlgebra]:
    series = [(n,) * n] + [s for s in WEAKVS_EXTRA.get(n, []) if s != (n,) * n]
    return [NakayamaAlgebra("cyclic", s) for s in series]


def _family_row(suite: str, family: str, n: int, workers: int, check_one_projective: bool = False) -> Row:
    p = FamilyParams(family, n)  # type: ignore[arg-type]
    A = p.algebra()
    res = enumerate_sequences(A, p.mode, workers=workers, materialize=check_one_projective)  # type: ignore[arg-type]
    ps, pc = predicted_size(p), predicted_count(p)
    ok = res.max_size == ps and res.count == pc
    if check_one_projective:
        ok = ok and all(sum(is_projective(A, M) for M in s) == 1 for s in res.sequences or [])
    return Row(suite, str(n), ps, res.max_size, pc, res.count, ok)


def _rows(suite: str, n: int, workers: int) -> list[Row]:
    if suite == "thm1":
        return [_family_row(suite, "selfinj-nn", n, workers, check_one_projective=True)]
    if suite == "thm2":
        return [_family_row(suite, "selfinj-n1n", n, workers)]
    if suite == "thm3":
        return [_family_row(suite, "lambda2", n, workers)]
    if suite == "seidel":
        return [_family_row(suite, "hereditary-a", n, workers)]
    if suite == "rad2":
        return [_family_row(suite, "linear-rad2", n, workers)]
    if suite == "unique-linear":
        res = enumerate_sequences(unique_linear_algebra(n), "weak", workers=workers)
        return [Row(suite, str(n), "", res.max_size, 1, res.count, res.count == 1)]
    if suite == "weakvs":
        rows = []
        for A in weakvs_algebras(n):
            mods = A.indecomposables()
            pred = [not is_periodic(A, M) and M.length <= A.n for M in mods]
            found = [is_standard_exceptional(A, M) for M in mods]
            rows.append(Row(suite, A.spec(), len(mods), len(mods), sum(pred), sum(found), pred == found))
        return rows
    if suite == "regions":
        rows = []
        for k in range(2, n + 1):
            A = selfinjective(n, k)
            mods = A.indecomposables()
            rh = fh = re_ = fe = 0
            ok = True
            for M in mods:
                for X in mods:
                    h1, h2 = hom_region_contains(A, M, X), hom_dim(A, M, X) > 0
                    e1, e2 = ext_region_contains(A, M, X), ext1_dim(A, M, X) > 0
                    rh += h1
                    fh += h2
                    re_ += e1
                    fe += e2
                    ok = ok and h1 == h2 and e1 == e2
            rows.append(Row(suite, f"n={n},k={k}", rh, fh, re_, fe, ok))
        return rows
    if suite == "sigma":
        rows = []
        for k in sorted({2, n}):
            A = selfinjective(n, k)
            res = enumerate_sequences(A, "weak", materialize=True, workers=workers)
            wit = {s.modules for s in res.sequences or []}
            moved = {tuple(sigma(A, M) for M in s) for s in wit}
            rows.append(Row(suite, A.spec(), res.max_size, res.max_size, len(wit), len(moved), moved == wit))
        return rows
    raise ValueError(f"unknown suite {suite!r}")


def run_suite(suite: str, lo: int, hi: int, workers: int = 1) -> list[Row]:
    if suite not in SAFE_RANGES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    slo, shi = SAFE_RANGES[suite]
    if lo > hi or lo < slo or hi > shi:
        raise ValueError(f"range {lo}..{hi} outside the supported bounds {slo}..{shi} for {suite}")
    rows: list[Row] = []
    for n in range(lo, hi + 1):
        rows.extend(_rows(suite, n, workers))
    return rows


def rows_to_csv(rows: list[Row]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow(r.as_tuple())
    return buf.getvalue()
