"""Feasibility sieve for 1-perfect codes in J(2w + a, w).

Candidates are indexed by (w, d) where w - d is the strength of the code;
a is then forced by (d - 1) a = w - d^2 + d - 1. Each candidate runs through
the stages below and stops at the first one it fails:

    derive_a -> roos-bound -> congruences -> divisibility product
             -> strength root -> lambda_t integrality near the strength
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import chain
from typing import Any, Iterator

from .designs import integrality_check, sigma
from .verdict import Verdict

REASONS = (
    "a-not-integer", "a-negative", "roos-bound", "mod12-w", "mod12-a",
    "d-mod3", "wd-mod12", "divis-fail", "lambda-fail", "strength-not-integral",
)

DEFAULT_LAMBDA_CAP = 50


@dataclass(frozen=True)
class Candidate1:
    w: int
    d: int
    a: int | None
    passed: bool
    reason: str | None = None
    witness: dict[str, Any] = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"

    @property
    def strength(self) -> int:
        return self.w - self.d


def derive_a(w: int, d: int) -> int | None:
    if d < 2:
        raise ValueError(f"d must be at least 2, got {d}")
    num = w - d * d + d - 1
    if num < 0 or num % (d - 1):
        return None
    return num // (d - 1)


def roos_check(w: int, a: int, e: int) -> Verdict:
    """n <= (w - 1)(2e + 1)/e, compared after clearing the denominator."""
    lhs, rhs = e * (2 * w + a), (w - 1) * (2 * e + 1)
    if lhs <= rhs:
        return Verdict.ok(lhs=lhs, rhs=rhs)
    return Verdict.fail("roos-bound", lhs=lhs, rhs=rhs)


def congruence_filter(w: int, a: int, d: int) -> Verdict:
    if d % 3 not in (0, 1):
        return Verdict.fail("d-mod3", d_mod3=d % 3)
    if w % 12 not in (1, 7):
        return Verdict.fail("mod12-w", w_mod12=w % 12)
    if a % 12:
        return Verdict.fail("mod12-a", a_mod12=a % 12)
    if (w - d) % 12 not in (0, 1, 4, 9):
        return Verdict.fail("wd-mod12", wd_mod12=(w - d) % 12)
    return Verdict.ok()


def divis_ratio(w: int, d: int) -> Fraction:
    num = math.prod(w * d - (d + i * (d - 1)) for i in range(d - 1))
    den = math.factorial(d - 1) * (d - 1) ** (d - 1) * d * (w - d + 1)
    return Fraction(num, den)


def divis_check(w: int, d: int) -> Verdict:
    if d < 2:
        raise ValueError(f"d must be at least 2, got {d}")
    if w < d:
        raise ValueError(f"need w >= d, got w={w}, d={d}")
    r = divis_ratio(w, d)
    if r.denominator == 1:
        return Verdict.ok(ratio=r)
    return Verdict.fail("divis-fail", ratio=r)


def evaluate_candidate(w: int, d: int, lambda_cap: int | None = DEFAULT_LAMBDA_CAP) -> Candidate1:
    """Run one (w, d) pair through every stage.

    ``lambda_cap`` bounds how many t below the strength are checked for
    integral lambda_t; None checks all of 0..phi. The window starts at the
    strength and walks down, where C(2w + a - t, w - t) is smallest.
    """
    num = w - d * d + d - 1
    if num < 0:
        return Candidate1(w, d, None, False, "a-negative", {"numerator": num})
    if num % (d - 1):
        return Candidate1(w, d, None, False, "a-not-integer",
                          {"numerator": num, "divisor": d - 1})
    a = num // (d - 1)

    v = roos_check(w, a, 1)
    if v:
        v = congruence_filter(w, a, d)
    if v:
        v = divis_check(w, d)
    if not v:
        return Candidate1(w, d, a, False, v.reason, dict(v.witness))

    phi = w - d
    # sigma_1(w, a, .) is quadratic with roots w - d + 1 and w + a + d, so the
    # strength is w - d exactly when this one value vanishes
    s = sigma(1, w, a, phi + 1)
    if s != 0:
        return Candidate1(w, d, a, False, "strength-not-integral", {"sigma": s, "t": phi + 1})

    lo = 0 if lambda_cap is None else max(0, phi - lambda_cap)
    v = integrality_check(1, w, a, ts=range(phi, lo - 1, -1), phi=phi)
    if not v:
        return Candidate1(w, d, a, False, v.reason, dict(v.witness))
    return Candidate1(w, d, a, True, None, {"phi": phi, "lambda_checked_from": lo})


def _pairs_in_block(lo: int, hi: int) -> list[tuple[int, int]]:
    """All (w, d) with lo <= w <= hi, d >= 2, integral a >= 0.

    a is integral iff (d - 1) divides w - 1, and a >= 0 iff d(d - 1) <= w - 1.
    """
    pairs = []
    q = 1
    while q * (q + 1) <= hi - 1:
        start = max(lo, q * (q + 1) + 1)
        # smallest w >= start with w = 1 (mod q)
        w = start + (-(start - 1)) % q
        pairs.extend((x, q + 1) for x in range(w, hi + 1, q))
        q += 1
    pairs.sort()
    return pairs


def _nonintegral_pairs_in_block(lo: int, hi: int) -> list[tuple[int, int]]:
    pairs = []
    for w in range(lo, hi + 1):
        d = 2
        while d * (d - 1) <= w - 1:
            pairs.append((w, d))
            d += 1
    return pairs


def _sieve_block(args) -> list[Candidate1]:
    lo, hi, lambda_cap, include_nonintegral = args
    pairs = (_nonintegral_pairs_in_block if include_nonintegral else _pairs_in_block)(lo, hi)
    return [evaluate_candidate(w, d, lambda_cap) for w, d in pairs]


def iter_sieve1(w_min: int, w_max: int, lambda_cap: int | None = DEFAULT_LAMBDA_CAP,
                include_nonintegral: bool = False, workers: int = 1,
                block: int = 4096) -> Iterator[Candidate1]:
    """Stream candidates ordered by (w, d).

    Only pairs with integral a >= 0 are emitted unless
    ``include_nonintegral`` is set, in which case every d with
    d(d - 1) <= w - 1 appears and most of them fail with a-not-integer.
    With ``workers > 1`` blocks of w are evaluated in a process pool; output
    order is unchanged.
    """
    if w_min > w_max:
        raise ValueError(f"w_min={w_min} exceeds w_max={w_max}")
    w_min = max(w_min, 1)
    jobs = [(lo, min(lo + block - 1, w_max), lambda_cap, include_nonintegral)
            for lo in range(w_min, w_max + 1, block)]
    if workers <= 1 or len(jobs) == 1:
        for job in jobs:
            yield from _sieve_block(job)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from chain.from_iterable(pool.map(_sieve_block, jobs))


def run_sieve1(w_min: int, w_max: int, lambda_cap: int | None = DEFAULT_LAMBDA_CAP,
               include_nonintegral: bool = False, workers: int = 1) -> list[Candidate1]:
    return list(iter_sieve1(w_min, w_max, lambda_cap, include_nonintegral, workers))


def satisfies_d_bound(c: Candidate1) -> bool:
    """Survivors must have d >= 12, i.e. 11a <= w - 133."""
    return c.d >= 12 and 11 * c.a <= c.w - 133

