"""Design strength of a putative perfect code and the integrality of its
t-design parameters."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .bigmath import binomial, is_integral, is_perfect_square, isqrt, poly_binomial
from .johnson import JohnsonParams, sphere_size
from .verdict import Verdict


def sigma(e: int, w: int, a: int, t: int) -> int:
    """The strength polynomial sigma_e(w, a, t), evaluated exactly.

    The last binomial has upper argument w + a - t + i, which goes negative
    once t is past w + a; it is evaluated as a polynomial there so that the
    value stays a polynomial in t.
    """
    total = 0
    for i in range(e + 1):
        inner = sum(binomial(w - i, j) * poly_binomial(w + a - t + i, i + j)
                    for j in range(e - i + 1))
        term = binomial(t, i) * inner
        total += -term if i % 2 else term
    return total


def sigma1_closed(w: int, a: int, t: int) -> int:
    return 1 + w * (w + a - t) - t * (w + a - t + 1)


@dataclass(frozen=True)
class StrengthResult:
    phi: int | None
    witness: dict[int, int] = field(default_factory=dict)
    roots: tuple[int, ...] = ()
    note: str = ""

    @property
    def multiple_roots(self) -> bool:
        return len(self.roots) > 1


def strength(e: int, w: int, a: int, scan_all: bool = True) -> StrengthResult:
    """Smallest t >= 0 with sigma_e(w, a, t + 1) == 0, scanning t = 0..w.

    ``witness`` maps each scanned t to sigma_e(w, a, t + 1). With
    ``scan_all`` the scan continues past the first root so that every root in
    range is reported; several roots are flagged via ``multiple_roots``.

    Two boundary conventions: t = 0 is included, which gives the single
    codeword (e = w) its strength 0; and e = 0, where sigma is identically
    1, returns w since the only 0-perfect code is the whole space.
    """
    JohnsonParams(w, a, e)
    if e == 0:
        return StrengthResult(w, note="e=0: the whole space is a w-design")
    witness = {}
    roots = []
    for t in range(w + 1):
        s = sigma(e, w, a, t + 1)
        witness[t] = s
        if s == 0:
            roots.append(t)
            if not scan_all:
                break
    return StrengthResult(roots[0] if roots else None, witness, tuple(roots))


def closed_form_strengths(e: int, w: int, a: int) -> list[int]:
    """Integral values of the radical closed forms for the strength.

    e = 1: (2w + a - 1 - sqrt((a+1)^2 + 4(w-1))) / 2.
    e = 2, a = 0: (-1 + 2w - sqrt(8w - 11 +- 4 sqrt(5 - 6w + 2w^2))) / 2.
    Returns an empty list when no branch is integral.
    """
    out = set()
    if e == 1:
        disc = (a + 1) ** 2 + 4 * (w - 1)
        if is_perfect_square(disc):
            num = 2 * w + a - 1 - isqrt(disc)
            if num >= 0 and num % 2 == 0:
                out.add(num // 2)
    elif e == 2:
        if a != 0:
            raise ValueError("the e = 2 closed form is only known for a = 0")
        inner = 5 - 6 * w + 2 * w * w
        if is_perfect_square(inner):
            y = isqrt(inner)
            for branch in (8 * w - 11 + 4 * y, 8 * w - 11 - 4 * y):
                if branch >= 0 and is_perfect_square(branch):
                    num = -1 + 2 * w - isqrt(branch)
                    if num >= 0 and num % 2 == 0:
                        out.add(num // 2)
    else:
        raise ValueError(f"no closed form for e = {e}")
    return sorted(out)


@dataclass(frozen=True)
class DesignParams:
    t: int
    lambda_t: Fraction

    @property
    def integral(self) -> bool:
        return is_integral(self.lambda_t)


def design_lambda(e: int, w: int, a: int, t: int) -> Fraction:
    """lambda_t = C(2w + a - t, w - t) / Phi_e(w, a) as an exact ratio."""
    if not 0 <= t <= w:
        raise ValueError(f"need 0 <= t <= w, got t={t}, w={w}")
    return Fraction(binomial(2 * w + a - t, w - t), sphere_size(JohnsonParams(w, a, e)))


def design_params(e: int, w: int, a: int, t: int) -> DesignParams:
    return DesignParams(t, design_lambda(e, w, a, t))


class NoStrengthError(ValueError):
    pass


def integrality_check(e: int, w: int, a: int, ts: Iterable[int] | None = None,
                      phi: int | None = None) -> Verdict:
    """PASS iff lambda_t is integral for every t checked.

    By default every t in 0..phi is checked in ascending order, so a FAIL
    names the smallest violating t. ``ts`` overrides the set and order of t
    values; the first violation in that order is reported.
    """
    if phi is None:
        phi = strength(e, w, a, scan_all=False).phi
        if phi is None:
            raise NoStrengthError(f"sigma_{e}({w},{a},t) has no root for t in 0..{w}")
    phi_size = sphere_size(JohnsonParams(w, a, e))
    prev_t = top = None
    for t in (range(phi + 1) if ts is None else ts):
        if not 0 <= t <= phi:
            raise ValueError(f"t={t} outside 0..{phi}")
        hi, lo = 2 * w + a - t, w - t
        # neighbouring t values differ by one step of Pascal's triangle
        if prev_t == t + 1:
            top = top * hi // lo
        elif prev_t == t - 1:
            top = top * (lo + 1) // (hi + 1)
        else:
            top = binomial(hi, lo)
        prev_t = t
        if top % phi_size:
            return Verdict.fail("lambda-fail", phi=phi, t=t, sphere=phi_size,
                                binomial=(2 * w + a - t, w - t),
                                ratio=Fraction(top, phi_size))
    return Verdict.ok(phi=phi)
