"""Johnson space J(n, w): parameters, vertices, distance, spheres and the
three trivial perfect-code families."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .bigmath import binomial


@dataclass(frozen=True)
class JohnsonParams:
    """A putative e-perfect code in J(2w + a, w)."""

    w: int
    a: int
    e: int

    def __post_init__(self):
        if self.w < 0 or self.a < 0 or self.e < 0:
            raise ValueError(f"parameters must be nonnegative: {self}")
        if self.e > self.w:
            raise ValueError(f"radius e={self.e} exceeds the diameter w={self.w}")

    @property
    def n(self) -> int:
        return 2 * self.w + self.a

    @classmethod
    def from_nw(cls, n: int, w: int, e: int) -> "JohnsonParams":
        """Normalise J(n, w) to n >= 2w by complementing when needed."""
        if not 0 <= w <= n:
            raise ValueError(f"need 0 <= w <= n, got n={n}, w={w}")
        w = min(w, n - w)
        return cls(w, n - 2 * w, e)


@dataclass(frozen=True, order=True)
class CodeSubset:
    """A w-subset of {1..n}, stored sorted."""

    elements: tuple[int, ...]
    n: int

    def __post_init__(self):
        els = tuple(self.elements)
        object.__setattr__(self, "elements", els)
        if any(b <= a for a, b in zip(els, els[1:])):
            raise ValueError(f"elements must be strictly increasing: {els}")
        if els and (els[0] < 1 or els[-1] > self.n):
            raise ValueError(f"elements out of range 1..{self.n}: {els}")

    @classmethod
    def of(cls, elements, n: int) -> "CodeSubset":
        return cls(tuple(sorted(elements)), n)

    @classmethod
    def from_vector(cls, bits: Sequence[int]) -> "CodeSubset":
        return cls(tuple(i + 1 for i, b in enumerate(bits) if b), len(bits))

    @property
    def w(self) -> int:
        return len(self.elements)

    def vector(self) -> tuple[int, ...]:
        s = set(self.elements)
        return tuple(int(i in s) for i in range(1, self.n + 1))

    def __str__(self):
        return "{" + ",".join(map(str, self.elements)) + "}"


def johnson_space(n: int, w: int) -> Iterator[CodeSubset]:
    """All of V_w^n in lexicographic order."""
    for c in combinations(range(1, n + 1), w):
        yield CodeSubset(c, n)


def johnson_distance(s: CodeSubset, t: CodeSubset) -> int:
    if s.n != t.n or s.w != t.w:
        raise ValueError(f"subsets live in different spaces: J({s.n},{s.w}) vs J({t.n},{t.w})")
    return s.w - len(set(s.elements) & set(t.elements))


def sphere_size(p: JohnsonParams) -> int:
    # choose i points to drop from the centre and i to add from outside it
    return sum(binomial(p.w, i) * binomial(p.w + p.a, i) for i in range(p.e + 1))


def sphere_enumerate(c: CodeSubset, e: int) -> list[CodeSubset]:
    if e > c.w:
        raise ValueError(f"radius {e} exceeds w={c.w}")
    inside = set(c.elements)
    outside = [x for x in range(1, c.n + 1) if x not in inside]
    out = []
    for i in range(min(e, c.w, len(outside)) + 1):
        for drop in combinations(c.elements, i):
            kept = inside.difference(drop)
            for add in combinations(outside, i):
                out.append(CodeSubset(tuple(sorted(kept.union(add))), c.n))
    out.sort()
    return out


FULL_SPACE = "full-space"
SINGLETON = "singleton"
DISJOINT_PAIR = "disjoint-pair"
NONTRIVIAL = "nontrivial"


@dataclass(frozen=True)
class TrivialCode:
    family: str
    params: JohnsonParams
    description: str
    representative: tuple[CodeSubset, ...]


def trivial_codes(p: JohnsonParams) -> list[TrivialCode]:
    """The trivial e-perfect families that exist for these parameters.

    Each entry carries one explicit member of the family; every other member
    is an image of it under a permutation of {1..n}.
    """
    n, w, e = p.n, p.w, p.e
    found = []
    if e == 0:
        found.append(TrivialCode(
            FULL_SPACE, p, f"all of V_{w}^{n} is 0-perfect",
            tuple(johnson_space(n, w)),
        ))
    if e == w:
        # w <= n - w holds by construction of JohnsonParams
        found.append(TrivialCode(
            SINGLETON, p, f"any single {w}-subset is {w}-perfect",
            (CodeSubset(tuple(range(1, w + 1)), n),),
        ))
    if p.a == 0 and w % 2 == 1 and 2 * e == w - 1:
        found.append(TrivialCode(
            DISJOINT_PAIR, p, f"any pair of disjoint {w}-subsets is {e}-perfect",
            (CodeSubset(tuple(range(1, w + 1)), n),
             CodeSubset(tuple(range(w + 1, n + 1)), n)),
        ))
    return found
