"""2-perfect codes in J(2w, w) via the Pell equation x^2 - 2y^2 = -1.

A 2-perfect code in J(2w, w) forces x = 2w - 3 to be a Pell solution and one
of 4(x - y) + 1, 4(x + y) + 1 to be a perfect square. Solutions are produced
by the integer recurrence (x, y) -> (3x + 4y, 2x + 3y) starting at (1, 1);
no irrational arithmetic happens at runtime.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterator

from .bigmath import is_perfect_square, isqrt, to_decimal
from .verdict import Verdict

MOD60_RESIDUES = (2, 26, 50)


@dataclass(frozen=True)
class PellSolution:
    m: int
    x: int
    y: int

    def check(self) -> bool:
        return self.x * self.x - 2 * self.y * self.y == -1


def iter_pell() -> Iterator[PellSolution]:
    x, y, m = 1, 1, 0
    while True:
        yield PellSolution(m, x, y)
        x, y = 3 * x + 4 * y, 2 * x + 3 * y
        m += 1


def pell_stream(m_max: int) -> list[PellSolution]:
    out = []
    for s in iter_pell():
        if s.m > m_max:
            break
        out.append(s)
    return out


def pell_solution(m: int) -> PellSolution:
    return pell_stream(m)[-1]


def w_from_solution(s: PellSolution) -> int:
    if s.x % 2 == 0:
        raise ValueError(f"x = {s.x} is even; not a solution of x^2 - 2y^2 = -1")
    return (s.x + 3) // 2


def gamma_value(s: PellSolution) -> int:
    return 4 * (s.x - s.y) + 1


def alpha_value(s: PellSolution) -> int:
    return 4 * (s.x + s.y) + 1


def gamma_check(s: PellSolution) -> tuple[int, bool]:
    g = gamma_value(s)
    return g, is_perfect_square(g)


def mod60_check(w: int) -> Verdict:
    r = w % 60
    if r in MOD60_RESIDUES:
        return Verdict.ok(w_mod60=r)
    return Verdict.fail("mod60", w_mod60=r)


@dataclass(frozen=True)
class Candidate2:
    m: int
    w: int
    gamma: int
    alpha_candidate: int
    gamma_square: bool
    alpha_square: bool
    passed: bool
    reason: str | None = None

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"


def evaluate(s: PellSolution) -> Candidate2:
    """Square tests on both branches, then the residue condition on w.

    The candidate survives the square stage if either 4(x - y) + 1 or
    4(x + y) + 1 is a square; the latter equals the former at index m + 1.
    """
    w = w_from_solution(s)
    g, a = gamma_value(s), alpha_value(s)
    g_sq, a_sq = is_perfect_square(g), is_perfect_square(a)
    reason = None
    if not (g_sq or a_sq):
        reason = "not-square"
    elif not mod60_check(w):
        reason = "mod60"
    return Candidate2(s.m, w, g, a, g_sq, a_sq, reason is None, reason)


def iter_sieve2(m_max: int) -> Iterator[Candidate2]:
    for s in iter_pell():
        if s.m > m_max:
            return
        yield evaluate(s)


@dataclass
class Sieve2Report:
    m_max: int
    candidates: list[Candidate2] = field(default_factory=list)

    @property
    def gamma_squares(self) -> list[int]:
        return [c.m for c in self.candidates if c.gamma_square]

    @property
    def square_survivors(self) -> list[int]:
        return [c.m for c in self.candidates if c.gamma_square or c.alpha_square]

    @property
    def survivors(self) -> list[int]:
        return [c.m for c in self.candidates if c.passed]

    @property
    def frontier_w(self) -> int:
        return self.candidates[-1].w

    def frontier(self) -> dict[str, Any]:
        return frontier_summary(self.frontier_w)


def frontier_summary(w: int) -> dict[str, Any]:
    s = to_decimal(w)
    return {"digits": len(s), "leading": f"{s[0]}.{s[1:6]}", "exponent": len(s) - 1}


def run_sieve2(m_max: int) -> Sieve2Report:
    return Sieve2Report(m_max, list(iter_sieve2(m_max)))


@dataclass(frozen=True)
class Strength2:
    w: int
    y_squared: int
    y: int | None
    branches: dict[str, tuple[int, bool]]
    strengths: tuple[int, ...]

    @property
    def pell_member(self) -> bool:
        return self.y is not None


def strength2(w: int) -> Strength2:
    """Evaluate the nested radicals in the e = 2, a = 0 strength formula.

    5 - 6w + 2w^2 must be a square y^2 (equivalently 2w - 3 solves the Pell
    equation), and then 8w - 11 +- 4y are the two inner branches.
    """
    if w < 2:
        raise ValueError(f"need w >= 2, got {w}")
    y2 = 5 - 6 * w + 2 * w * w
    if not is_perfect_square(y2):
        return Strength2(w, y2, None, {}, ())
    y = isqrt(y2)
    branches = {}
    strengths = set()
    for sign, b in (("+", 8 * w - 11 + 4 * y), ("-", 8 * w - 11 - 4 * y)):
        sq = b >= 0 and is_perfect_square(b)
        branches[sign] = (b, sq)
        if sq:
            num = 2 * w - 1 - isqrt(b)
            if num >= 0 and num % 2 == 0:
                strengths.add(num // 2)
    return Strength2(w, y2, y, branches, tuple(sorted(strengths)))
