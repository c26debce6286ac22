from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from johnson_perfect.designs import design_lambda
from johnson_perfect.sieve1 import (REASONS, congruence_filter, derive_a, divis_check,
                                    divis_ratio, evaluate_candidate, iter_sieve1, roos_check,
                                    run_sieve1, satisfies_d_bound)


def test_derive_a_examples():
    assert derive_a(13, 3) == 3
    assert derive_a(271, 6) == 48
    assert derive_a(14, 3) is None
    assert derive_a(5, 3) is None  # numerator 5 - 9 + 2 = -2
    with pytest.raises(ValueError):
        derive_a(10, 1)


@given(st.integers(2, 10 ** 6), st.integers(2, 1000))
def test_derive_a_relation(w, d):
    a = derive_a(w, d)
    if a is not None:
        assert (d - 1) * a == w - d * d + d - 1
        assert a >= 0


def test_congruence_examples():
    assert congruence_filter(271, 48, 6)
    v = congruence_filter(4, 1, 2)
    assert not v
    v = congruence_filter(4, 1, 3)
    assert v.reason == "mod12-w"
    for w, a, d in [(271, 48, 5), (13, 0, 2), (97, 12, 8)]:
        assert congruence_filter(w, a, d).reason == "d-mod3"


def test_mod12_consistency():
    # whenever 12 | a, w - d = (d - 1)^2 (mod 12)
    for w in range(2, 3000):
        for d in range(2, 60):
            a = derive_a(w, d)
            if a is not None and a % 12 == 0:
                assert (w - d) % 12 == (d - 1) ** 2 % 12


def test_divis_examples():
    v = divis_check(13, 3)
    assert not v and v.witness["ratio"] == Fraction(51, 11)
    for w in range(2, 500):
        assert divis_ratio(w, 2) == 1
    # (271, 6) gets through this stage
    assert divis_check(271, 6)
    with pytest.raises(ValueError):
        divis_check(5, 1)


def test_divis_is_lambda_at_the_strength():
    # the product form is lambda_{w-d} rewritten using a = a(w, d)
    n = 0
    for w in range(3, 800):
        for d in range(2, 30):
            a = derive_a(w, d)
            if a is None or w < d:
                continue
            assert divis_ratio(w, d) == design_lambda(1, w, a, w - d), (w, d)
            n += 1
    assert n > 500


def test_divis_d3_always_fails():
    for w in range(4, 10 ** 5 + 1):
        assert divis_ratio(w, 3).denominator != 1, w


def test_roos_examples():
    for w in range(3, 60):
        for a in range(0, 70):
            assert bool(roos_check(w, a, 1)) == (a <= w - 3)
    assert not roos_check(7, 11, 1)
    v = roos_check(7, 4, 1)
    assert v and v.witness["lhs"] == v.witness["rhs"] == 18


def test_candidate_271_6():
    c = evaluate_candidate(271, 6)
    assert c.a == 48
    assert c.reason == "lambda-fail"
    assert c.witness["t"] == 264
    assert c.witness["binomial"] == (326, 7)
    assert c.witness["sphere"] == 86450


def test_candidate_a_failures():
    assert evaluate_candidate(14, 3).reason == "a-not-integer"
    assert evaluate_candidate(5, 3).reason == "a-negative"


def test_sieve_small_range_ordering_and_reasons():
    out = run_sieve1(1, 3000)
    keys = [(c.w, c.d) for c in out]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    assert all(c.reason in REASONS for c in out if not c.passed)
    for c in out:
        assert derive_a(c.w, c.d) == c.a
    counts = Counter(c.reason for c in out)
    assert counts["a-not-integer"] == 0


def test_sieve_matches_brute_iteration():
    fast = run_sieve1(1, 400)
    slow = [c for c in run_sieve1(1, 400, include_nonintegral=True) if c.a is not None]
    assert fast == slow
    full = run_sieve1(1, 400, include_nonintegral=True)
    assert {c.reason for c in full if c.a is None} == {"a-not-integer"}


def test_sieve_workers_do_not_change_output():
    assert run_sieve1(1, 9000, workers=2) == run_sieve1(1, 9000)


def test_sieve_rejects_bad_range():
    with pytest.raises(ValueError):
        run_sieve1(10, 5)


def test_lambda_cap_full_vs_window():
    windowed = run_sieve1(1, 20_000)
    full = run_sieve1(1, 20_000, lambda_cap=None)
    # widening the window can only kill more
    assert {(c.w, c.d) for c in full if c.passed} <= {(c.w, c.d) for c in windowed if c.passed}


def test_survivors_up_to_1e5():
    surv = [c for c in iter_sieve1(1, 10 ** 5) if c.passed]
    assert surv
    for c in surv:
        assert c.w % 12 in (1, 7) and c.a % 12 == 0
        assert satisfies_d_bound(c)
        assert 11 * c.a < c.w


@pytest.mark.slow
def test_survivors_up_to_1e6():
    for c in iter_sieve1(1, 10 ** 6):
        if c.passed:
            assert c.w % 12 in (1, 7) and c.a % 12 == 0 and c.d >= 12
