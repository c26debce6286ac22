from decimal import Decimal, getcontext

import pytest

from johnson_perfect.bigmath import is_perfect_square, isqrt
from johnson_perfect.sieve2 import (PellSolution, alpha_value, evaluate, gamma_check,
                                    gamma_value, mod60_check, pell_stream, run_sieve2,
                                    strength2, w_from_solution)


@pytest.fixture(scope="module")
def stream():
    return pell_stream(10_001)


def test_first_solutions(stream):
    assert [(s.x, s.y) for s in stream[:4]] == [(1, 1), (7, 5), (41, 29), (239, 169)]
    assert [s.m for s in stream[:4]] == [0, 1, 2, 3]


def test_pell_identity_everywhere(stream):
    for s in stream:
        assert s.x * s.x - 2 * s.y * s.y == -1


def test_growth(stream):
    for s, t in zip(stream[1:], stream[2:]):
        assert t.x > 5 * s.x and t.y > s.y


def test_recurrence_matches_radical_closed_form(stream):
    getcontext().prec = 80
    r2 = Decimal(2).sqrt()
    for s in stream[:21]:
        k = 2 * s.m + 1
        x = ((1 + r2) ** k + (1 - r2) ** k) / 2
        y = ((1 + r2) ** k - (1 - r2) ** k) / (2 * r2)
        assert int(x.to_integral_value()) == s.x
        assert int(y.to_integral_value()) == s.y
        w = ((1 + r2) ** k + (1 - r2) ** k + 6) / 4
        assert int(w.to_integral_value()) == w_from_solution(s)
        g = r2 * ((1 + r2) ** (2 * s.m) - (1 - r2) ** (2 * s.m)) + 1
        assert int(g.to_integral_value()) == gamma_value(s)


def test_w_from_solution():
    assert [w_from_solution(PellSolution(0, x, 0)) for x in (1, 7, 41, 239)] == [2, 5, 22, 121]
    with pytest.raises(ValueError):
        w_from_solution(PellSolution(0, 4, 0))


def test_w_and_y_relations(stream):
    for s in stream:
        w = w_from_solution(s)
        assert 2 * w - 3 == s.x
        assert 5 - 6 * w + 2 * w * w == s.y * s.y


def test_gamma_examples(stream):
    assert [gamma_check(s) for s in stream[:3]] == [(1, True), (9, True), (49, True)]
    assert gamma_check(stream[3]) == (281, False)


def test_alpha_is_next_gamma(stream):
    for s, t in zip(stream[:1001], stream[1:1002]):
        assert alpha_value(s) == gamma_value(t)


def test_mod60_examples():
    assert not mod60_check(5) and not mod60_check(22)
    assert mod60_check(2) and mod60_check(26) and mod60_check(50)
    assert mod60_check(62).witness["w_mod60"] == 2


def test_evaluate_small():
    c = evaluate(PellSolution(2, 41, 29))
    assert (c.w, c.gamma, c.alpha_candidate) == (22, 49, 281)
    assert c.gamma_square and not c.alpha_square
    assert c.reason == "mod60"
    assert evaluate(PellSolution(3, 239, 169)).reason == "not-square"


def test_strength2_examples():
    s = strength2(5)
    assert s.y == 5 and s.branches == {"+": (49, True), "-": (9, True)}
    assert s.strengths == (1, 3)
    assert not strength2(4).pell_member and strength2(4).y_squared == 13
    s = strength2(2)
    assert s.y_squared == 1 and s.branches == {"+": (9, True), "-": (1, True)}
    with pytest.raises(ValueError):
        strength2(1)


def test_strength2_matches_gamma_alpha(stream):
    for s in stream[:200]:
        w = w_from_solution(s)
        r = strength2(w)
        assert r.y == s.y
        assert r.branches["+"] == (alpha_value(s), is_perfect_square(alpha_value(s)))
        assert r.branches["-"] == (gamma_value(s), is_perfect_square(gamma_value(s)))


def test_strength2_pell_membership():
    pell_ws = {w_from_solution(s) for s in pell_stream(8)}
    for w in range(2, 5000):
        assert strength2(w).pell_member == (w in pell_ws)


def test_small_sieve():
    r = run_sieve2(50)
    assert r.gamma_squares == [0, 1, 2]
    assert r.survivors == [0]
    assert r.candidates[0].w == 2


def test_squares_checked_with_isqrt_not_only_residues(stream):
    for s in stream[:300]:
        g = gamma_value(s)
        assert is_perfect_square(g) == (isqrt(g) ** 2 == g)
