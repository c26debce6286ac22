"""Exhaustive search for e-perfect codes in small Johnson graphs.

An e-perfect code is exactly a set of e-spheres partitioning V_w^n, so the
search is an exact cover problem: columns are vertices, and row c covers
the e-sphere around centre c. Solved with Knuth's Algorithm X on dicts of
sets, branching on the column with the fewest candidate rows.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .bigmath import binomial
from .johnson import (DISJOINT_PAIR, FULL_SPACE, NONTRIVIAL, SINGLETON, CodeSubset,
                      JohnsonParams, johnson_distance, johnson_space, sphere_enumerate,
                      sphere_size)
from .verdict import Verdict

DEFAULT_MAX_UNIVERSE = 10_000


class InstanceTooLarge(ValueError):
    pass


@dataclass
class CoverInstance:
    n: int
    w: int
    e: int
    universe: list[CodeSubset]
    rows: dict[int, list[int]]

    @classmethod
    def build(cls, n: int, w: int, e: int) -> "CoverInstance":
        universe = list(johnson_space(n, w))
        index = {v: i for i, v in enumerate(universe)}
        radius = min(e, w, n - w)
        rows = {i: [index[u] for u in sphere_enumerate(c, radius)]
                for i, c in enumerate(universe)}
        return cls(n, w, e, universe, rows)


def _solve(cols: dict[int, set[int]], rows: dict[int, list[int]],
           partial: list[int]) -> Iterator[list[int]]:
    if not cols:
        yield list(partial)
        return
    c = min(cols, key=lambda k: (len(cols[k]), k))
    for r in sorted(cols[c]):
        partial.append(r)
        removed = _select(cols, rows, r)
        yield from _solve(cols, rows, partial)
        _deselect(cols, rows, r, removed)
        partial.pop()


def _select(cols, rows, r):
    removed = []
    for j in rows[r]:
        for i in cols[j]:
            for k in rows[i]:
                if k != j:
                    cols[k].discard(i)
        removed.append(cols.pop(j))
    return removed


def _deselect(cols, rows, r, removed):
    for j in reversed(rows[r]):
        cols[j] = removed.pop()
        for i in cols[j]:
            for k in rows[i]:
                if k != j:
                    cols[k].add(i)


def exact_covers(inst: CoverInstance) -> Iterator[list[int]]:
    cols: dict[int, set[int]] = {j: set() for j in range(len(inst.universe))}
    for r, members in inst.rows.items():
        for j in members:
            cols[j].add(r)
    return _solve(cols, inst.rows, [])


def quick_divisibility(n: int, w: int, e: int) -> Verdict:
    """Sphere-packing condition: Phi_e must divide |V_w^n|."""
    p = JohnsonParams.from_nw(n, w, min(e, w, n - w))
    size, total = sphere_size(p), binomial(n, w)
    if total % size:
        return Verdict.fail("sphere-packing", sphere=size, space=total)
    return Verdict.ok(sphere=size, space=total, code_size=total // size)


def verify_code(code, n: int, w: int, e: int) -> bool:
    """Every vertex has exactly one codeword within distance e.

    A plain double loop over V_w^n and the code; shares nothing with the
    cover solver.
    """
    code = list(code)
    for c in code:
        if c.n != n or c.w != w:
            raise ValueError(f"{c} is not a {w}-subset of 1..{n}")
    if len(set(code)) != len(code):
        return False
    for v in johnson_space(n, w):
        if sum(1 for c in code if johnson_distance(v, c) <= e) != 1:
            return False
    return True


def classify_code(code, n: int, w: int, e: int) -> str:
    code = list(code)
    if e == 0 and len(code) == binomial(n, w):
        return FULL_SPACE
    if len(code) == 1:
        return SINGLETON
    if len(code) == 2 and n == 2 * w and not set(code[0].elements) & set(code[1].elements):
        return DISJOINT_PAIR
    return NONTRIVIAL


@dataclass
class PerfectCodeResult:
    n: int
    w: int
    e: int
    codes: list[tuple[CodeSubset, ...]] = field(default_factory=list)
    families: list[str] = field(default_factory=list)
    complete: bool = True
    divisibility: Verdict | None = None

    @property
    def exists(self) -> bool:
        return bool(self.codes)

    @property
    def counts(self) -> dict[str, int]:
        c = Counter(self.families)
        return {k: c.get(k, 0) for k in (FULL_SPACE, SINGLETON, DISJOINT_PAIR, NONTRIVIAL)}


def search_perfect_codes(n: int, w: int, e: int, enumerate_all: bool = False,
                         max_universe: int = DEFAULT_MAX_UNIVERSE) -> PerfectCodeResult:
    """Find one e-perfect code in J(n, w), or all of them with ``enumerate_all``.

    Every code found is re-checked with :func:`verify_code` before it is
    returned. ``complete`` is False when the search stopped after the first
    hit, meaning ``counts`` is not a full tally.
    """
    if not 0 <= w <= n:
        raise ValueError(f"need 0 <= w <= n, got n={n}, w={w}")
    if binomial(n, w) > max_universe:
        raise InstanceTooLarge(f"|V_{w}^{n}| = {binomial(n, w)} exceeds {max_universe}")
    inst = CoverInstance.build(n, w, e)
    result = PerfectCodeResult(n, w, e, divisibility=quick_divisibility(n, w, e))
    for rows in exact_covers(inst):
        code = tuple(sorted(inst.universe[r] for r in rows))
        if not verify_code(code, n, w, e):
            raise AssertionError(f"cover solver produced a non-perfect code {code}")
        result.codes.append(code)
        result.families.append(classify_code(code, n, w, e))
        if not enumerate_all:
            result.complete = False
            break
    result.codes, result.families = _sorted_pairs(result.codes, result.families)
    return result


def _sorted_pairs(codes, families):
    pairs = sorted(zip(codes, families))
    return [c for c, _ in pairs], [f for _, f in pairs]


def brute_force_codes(n: int, w: int, e: int) -> list[tuple[CodeSubset, ...]]:
    """All perfect codes by trying every subset of the right size.

    Only the size |V| / Phi_e can work, so only those subsets are tried.
    Meant for tiny instances as an independent check of the cover solver.
    """
    v = quick_divisibility(n, w, e)
    if not v:
        return []
    space = list(johnson_space(n, w))
    return [code for code in combinations(space, v.witness["code_size"])
            if verify_code(code, n, w, e)]


def complement_code(code, n: int) -> tuple[CodeSubset, ...]:
    full = set(range(1, n + 1))
    return tuple(sorted(CodeSubset(tuple(sorted(full - set(c.elements))), n) for c in code))


def block_counts(code, n: int, t: int) -> Counter:
    """How many codewords contain each t-subset of {1..n}."""
    counts: Counter = Counter({s: 0 for s in combinations(range(1, n + 1), t)})
    for c in code:
        for s in combinations(c.elements, t):
            counts[s] += 1
    return counts


def design_strength(code, n: int, w: int) -> int:
    """Largest t <= w such that the code is a t-design, by direct counting."""
    best = 0
    for t in range(w + 1):
        if len(set(block_counts(code, n, t).values())) != 1:
            break
        best = t
    return best
