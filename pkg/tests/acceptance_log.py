"""Collects one pass/fail line per acceptance criterion."""
from __future__ import annotations

RESULTS: dict[str, tuple[bool, str]] = {}


def record(label: str, ok: bool, detail: str = "") -> None:
    RESULTS[label] = (ok, detail)


def lines() -> list[str]:
    def key(label: str):
        num = "".join(ch for ch in label.split()[0] if ch.isdigit())
        return (int(num or 0), label)

    out = []
    for label in sorted(RESULTS, key=key):
        ok, detail = RESULTS[label]
        out.append(f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else ""))
    return out
