"""Exact counts of k-noncrossing RNA structures.

A structure on vertices 1..n is a partial matching drawn as arcs in the
upper half-plane, with two constraints: no arc joins adjacent positions
(i, i+1), and no k arcs are mutually crossing.  k=2 recovers classical
secondary structures; larger k admits pseudoknots.

All counting is done in arbitrary-precision integers.  The alternating
inclusion-exclusion sums that remove adjacent-position arcs cancel badly,
so floating point is never used here.

Two independent routes exist for the matching numbers (``matchings_closed``
for k=2,3 and ``matchings_dp`` for any k); tests compare them against each
other and against the brute-force oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

__all__ = [
    "CountTable",
    "catalan",
    "matchings_closed",
    "matchings_dp",
    "perfect_matchings",
    "structures_with_isolated",
    "structure_total",
    "count_table",
]


_catalan: list[int] = [1]


def catalan(m: int) -> int:
    """m-th Catalan number, exact."""
    if m < 0:
        raise ValueError("Catalan index must be nonnegative")
    while len(_catalan) <= m:
        j = len(_catalan)
        _catalan.append(comb(2 * j, j) // (j + 1))
    return _catalan[m]


def matchings_closed(k: int, n: int, isolated: int) -> int:
    """Partial matchings on n vertices with no k mutually crossing arcs and
    the given number of isolated vertices (arcs between neighbours allowed).

    Closed forms exist for k=2 (a Catalan number) and k=3 (a 2x2 Catalan
    determinant); other k must go through ``matchings_dp``.
    """
    if k not in (2, 3):
        raise ValueError("closed form only available for k=2 and k=3")
    if not 0 <= isolated <= n:
        raise ValueError("isolated count must lie in 0..n")
    if (n - isolated) % 2:
        return 0
    m = (n - isolated) // 2
    if k == 2:
        core = catalan(m)
    else:
        core = catalan(m + 2) * catalan(m) - catalan(m + 1) ** 2
    return comb(n, isolated) * core


# Walk DP state, resumable per k: counts[m] is the number of closed walks of
# length 2m, fronts[k] the shape distribution after the last computed step.
_walk_counts: dict[int, list[int]] = {}
_walk_fronts: dict[int, dict[tuple[int, ...], int]] = {}


def _shape_moves(shape: tuple[int, ...], max_rows: int) -> list[tuple[int, ...]]:
    """Shapes reachable from a Young diagram by adding or removing one cell,
    keeping at most max_rows rows."""
    out = []
    rows = len(shape)
    for i in range(rows):
        if i == 0 or shape[i - 1] > shape[i]:
            out.append(shape[:i] + (shape[i] + 1,) + shape[i + 1 :])
    if rows < max_rows:
        out.append(shape + (1,))
    for i in range(rows):
        if i == rows - 1 or shape[i] > shape[i + 1]:
            if shape[i] > 1:
                out.append(shape[:i] + (shape[i] - 1,) + shape[i + 1 :])
            else:
                out.append(shape[:-1])
    return out


def _perfect_matchings_dp(k: int, m: int) -> int:
    """k-noncrossing perfect matchings on 2m vertices, counted as closed
    walks of length 2m on Young diagrams with fewer than k rows in which
    consecutive shapes differ by one cell."""
    counts = _walk_counts.setdefault(k, [1])
    front = _walk_fronts.setdefault(k, {(): 1})
    while len(counts) <= m:
        for _ in range(2):
            nxt: dict[tuple[int, ...], int] = {}
            for shape, c in front.items():
                for moved in _shape_moves(shape, k - 1):
                    nxt[moved] = nxt.get(moved, 0) + c
            front = nxt
        _walk_fronts[k] = front
        counts.append(front.get((), 0))
    return counts[m]


def matchings_dp(k: int, n: int, isolated: int) -> int:
    """Same count as ``matchings_closed`` but for arbitrary k >= 2, via the
    lattice-walk dynamic program.  Never consults the closed forms, so the
    two routes can cross-check each other."""
    if k < 2:
        raise ValueError("crossing bound k must be at least 2")
    if not 0 <= isolated <= n:
        raise ValueError("isolated count must lie in 0..n")
    if (n - isolated) % 2:
        return 0
    return comb(n, isolated) * _perfect_matchings_dp(k, (n - isolated) // 2)


def perfect_matchings(k: int, m: int) -> int:
    """k-noncrossing perfect matchings on 2m vertices (fast dispatch:
    closed form for k=2,3, walk DP otherwise)."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    if k == 2:
        return catalan(m)
    if k == 3:
        return catalan(m + 2) * catalan(m) - catalan(m + 1) ** 2
    return _perfect_matchings_dp(k, m)


def _matchings(k: int, n: int, isolated: int) -> int:
    if (n - isolated) % 2:
        return 0
    return comb(n, isolated) * perfect_matchings(k, (n - isolated) // 2)


def structures_with_isolated(k: int, n: int, isolated: int) -> int:
    """Structures on n vertices with exactly the given number of isolated
    vertices, obtained by inclusion-exclusion over placements of forbidden
    adjacent-position arcs."""
    if k < 2:
        raise ValueError("crossing bound k must be at least 2")
    if not 0 <= isolated <= n:
        raise ValueError("isolated count must lie in 0..n")
    if (n - isolated) % 2:
        return 0
    total = 0
    for b in range((n - isolated) // 2 + 1):
        term = comb(n - b, b) * _matchings(k, n - 2 * b, isolated)
        total += -term if b & 1 else term
    assert total >= 0, f"inclusion-exclusion went negative: k={k} n={n} iso={isolated}"
    return total


# Cache for the matchings-summed-over-isolated-vertices numbers that feed
# the independent total below; heavily reused across n in sweeps.
_all_matchings_cache: dict[tuple[int, int], int] = {}


def _all_matchings(k: int, m: int) -> int:
    """Partial matchings on m vertices with no k mutually crossing arcs,
    any number of isolated vertices."""
    key = (k, m)
    val = _all_matchings_cache.get(key)
    if val is None:
        val = sum(comb(m, 2 * j) * perfect_matchings(k, j) for j in range(m // 2 + 1))
        _all_matchings_cache[key] = val
    return val


def structure_total(k: int, n: int) -> int:
    """Total number of structures on n vertices, via inclusion-exclusion on
    the matchings summed over all isolated-vertex counts.  Independent of
    the per-arc-count route, so ``count_table`` can assert both agree."""
    if k < 2:
        raise ValueError("crossing bound k must be at least 2")
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 0
    for b in range(n // 2 + 1):
        term = comb(n - b, b) * _all_matchings(k, n - 2 * b)
        total += -term if b & 1 else term
    assert total >= 0
    return total


@dataclass(frozen=True)
class CountTable:
    """Arc-count histogram of the structures on n vertices.

    by_arcs[h] is the number of structures with exactly h arcs
    (h isolated-vertex counterpart: n - 2h); total is their sum, computed
    by an independent formula and asserted equal on construction.
    """

    k: int
    n: int
    by_arcs: dict[int, int]
    total: int


def count_table(k: int, n: int) -> CountTable:
    """Build the arc-count table for structures on n vertices."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    by_arcs = {
        h: structures_with_isolated(k, n, n - 2 * h) for h in range(n // 2 + 1)
    }
    total = structure_total(k, n)
    assert total == sum(by_arcs.values()), (
        f"independent total disagrees with row sum at k={k} n={n}"
    )
    return CountTable(k=k, n=n, by_arcs=by_arcs, total=total)
