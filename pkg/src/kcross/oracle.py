"""Brute-force ground truth for the structure counts.

Enumerates diagrams by backtracking and histograms them by arc count.
Exponential in n, deliberately plain: this module is the trust anchor the
fast counting routes are checked against, so it favours obviousness over
speed.

Two modes, because the matching numbers and the structure numbers count
different objects:

* structures: partial matchings, adjacent-position arcs forbidden;
* matchings:  perfect matchings, adjacent-position arcs allowed.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "Diagram",
    "DEFAULT_CAP",
    "crossing_number",
    "enumerate_structures",
    "enumerate_matchings",
    "histogram_by_arcs",
]

DEFAULT_CAP = 14


@dataclass(frozen=True)
class Diagram:
    """Partial matching on vertices 1..n, arcs as sorted (i, j) pairs, i < j."""

    n: int
    arcs: tuple[tuple[int, int], ...]

    def validate(self, allow_adjacent: bool = False) -> None:
        """Raise ValueError unless every vertex has degree <= 1, endpoints
        lie in 1..n, and (unless allowed) no arc joins adjacent positions."""
        seen: set[int] = set()
        for i, j in self.arcs:
            if not (1 <= i < j <= self.n):
                raise ValueError(f"arc ({i},{j}) out of range for n={self.n}")
            if not allow_adjacent and j - i < 2:
                raise ValueError(f"adjacent-position arc ({i},{j})")
            if i in seen or j in seen:
                raise ValueError(f"vertex reused by arc ({i},{j})")
            seen.add(i)
            seen.add(j)


def _longest_increasing_chain(pairs: list[tuple[int, int]]) -> int:
    """Longest subsequence of (left, right) pairs, sorted by left, whose
    right endpoints strictly increase.  O(m^2)."""
    best: list[int] = []
    for idx, (_, j) in enumerate(pairs):
        b = 1
        for prev in range(idx):
            if pairs[prev][1] < j and best[prev] + 1 > b:
                b = best[prev] + 1
        best.append(b)
    return max(best, default=0)


def _crossing_number(arcs: list[tuple[int, int]] | tuple[tuple[int, int], ...]) -> int:
    """Largest c such that some c arcs (i_1,j_1)..(i_c,j_c) satisfy
    i_1 < ... < i_c < j_1 < ... < j_c.

    The arc with the smallest left endpoint in such a set also has the
    smallest right endpoint, and every other member starts inside it and
    ends beyond it.  Among those members any chain with increasing lefts
    and rights is automatically mutually crossing, so one pivot pass plus
    a longest-increasing-chain suffices.
    """
    ordered = sorted(arcs)
    best = 0
    for i1, j1 in ordered:
        inner = [(i, j) for (i, j) in ordered if i1 < i < j1 < j]
        size = 1 + _longest_increasing_chain(inner)
        if size > best:
            best = size
    return best


def crossing_number(d: Diagram) -> int:
    """Maximum number of mutually crossing arcs in the diagram."""
    return _crossing_number(d.arcs)


def _enumerate(n: int, k: int, min_span: int, perfect: bool) -> list[tuple[tuple[int, int], ...]]:
    results: list[tuple[tuple[int, int], ...]] = []
    used = [False] * (n + 2)
    arcs: list[tuple[int, int]] = []

    def walk(i: int) -> None:
        while i <= n and used[i]:
            i += 1
        if i > n:
            results.append(tuple(arcs))
            return
        if not perfect:
            used[i] = True
            walk(i + 1)
            used[i] = False
        for j in range(i + min_span, n + 1):
            if used[j]:
                continue
            arcs.append((i, j))
            if _crossing_number(arcs) < k:
                used[i] = used[j] = True
                walk(i + 1)
                used[i] = used[j] = False
            arcs.pop()

    walk(1)
    results.sort()
    return results


def _check_args(n: int, k: int, cap: int) -> None:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 2:
        raise ValueError("crossing bound k must be at least 2")
    if n > cap:
        raise ValueError(
            f"n={n} exceeds the oracle cap {cap}; enumeration cost is exponential"
        )


def enumerate_structures(n: int, k: int, cap: int = DEFAULT_CAP) -> list[Diagram]:
    """All structures on n vertices (no adjacent-position arcs, crossing
    number < k), each exactly once, in lexicographic arc order."""
    _check_args(n, k, cap)
    return [Diagram(n, a) for a in _enumerate(n, k, min_span=2, perfect=False)]


def enumerate_matchings(n: int, k: int, cap: int = DEFAULT_CAP) -> list[Diagram]:
    """All perfect matchings on n vertices with crossing number < k,
    adjacent-position arcs allowed.  Empty for odd n."""
    _check_args(n, k, cap)
    if n % 2:
        return []
    return [Diagram(n, a) for a in _enumerate(n, k, min_span=1, perfect=True)]


def histogram_by_arcs(n: int, k: int, cap: int = DEFAULT_CAP) -> dict[int, int]:
    """Histogram of the structures on n vertices by arc count."""
    hist: dict[int, int] = {}
    for d in enumerate_structures(n, k, cap):
        hist[len(d.arcs)] = hist.get(len(d.arcs), 0) + 1
    return hist
