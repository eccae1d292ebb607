import math
import random

import pytest

import kummerlog as kl
from kummerlog import oracle
from kummerlog.oracle import FieldUnit, GroupBudget


def test_bsgs_prime_field_example(f5):
    g, y = FieldUnit(f5, 2), FieldUnit(f5, 3)
    assert kl.bsgs_dlp(g, y, 4) == 3  # 2^3 = 8 = 3 mod 5
    assert kl.bsgs_dlp(g, FieldUnit(f5, 1), 4) == 0


def test_bsgs_extension_example(kummer54):
    target = kummer54.element([1, 4, 4, 1])
    assert kl.bsgs_dlp(kummer54.generator, target, 624) == 51


def test_bsgs_returns_least_exponent(f5):
    g = FieldUnit(f5, 4)  # order 2
    assert kl.bsgs_dlp(g, FieldUnit(f5, 1), 100) == 0
    assert kl.bsgs_dlp(g, FieldUnit(f5, 4), 100) == 1


def test_bsgs_not_in_subgroup(f5):
    g = FieldUnit(f5, 4)  # powers are {1, 4}
    with pytest.raises(oracle.NotInSubgroup):
        kl.bsgs_dlp(g, FieldUnit(f5, 2), 100)


def test_bsgs_budget(f5):
    with pytest.raises(oracle.BudgetExceeded):
        kl.bsgs_dlp(FieldUnit(f5, 2), FieldUnit(f5, 3), 100, GroupBudget(max_baby_steps=5))
    with pytest.raises(ValueError):
        GroupBudget(max_baby_steps=10, max_order=1000)


def test_element_order_examples(f5, kummer54):
    assert kl.element_order(FieldUnit(f5, 2), 4, [2, 2]) == 4
    assert kl.element_order(FieldUnit(f5, 1), 4, [2, 2]) == 1
    order = kl.element_order(kummer54.generator, 624, [2, 2, 2, 2, 3, 13])
    assert 624 % order == 0 and order > 2 ** 4
    g = kummer54.generator
    assert kl.ext_pow(g, order) == kummer54.one_element
    for r in set(kl.factorize(order)):
        assert kl.ext_pow(g, order // r) != kummer54.one_element


def test_element_order_bad_factorization(f5):
    with pytest.raises(oracle.BadFactorization):
        kl.element_order(FieldUnit(f5, 2), 4, [2])          # wrong product
    with pytest.raises(oracle.BadFactorization):
        kl.element_order(FieldUnit(f5, 2), 4, [4])          # composite entry
    with pytest.raises(oracle.BadFactorization):
        kl.element_order(FieldUnit(f5, 2), 3, [3])          # 2^3 != 1


def test_exhaustive_dlp_unique_answer(kummer54):
    target = kl.encode_digits(kummer54, kl.ExponentDigits(5, (1, 0, 2, 0)))
    found = kl.exhaustive_dlp_bounded(kummer54, target, 4)
    assert [tuple(e) for e in found] == [(1, 0, 2, 0)]


def test_exhaustive_dlp_empty_for_unbounded_target(kummer54):
    # digit sum 10; no vector with sum <= 4 can reach it, including modulo ord(g)
    e = kl.ExponentDigits(5, (4, 4, 2, 0))
    order = kl.element_order(kummer54.generator, 624, kl.factorize(624))
    assert all((e.to_int() - other) % order for other in range(0, 625)
               if _digit_sum_base5(other) <= 4 and other != e.to_int())
    target = kl.encode_digits(kummer54, e)
    assert kl.exhaustive_dlp_bounded(kummer54, target, 4) == []


def _digit_sum_base5(v):
    s = 0
    while v:
        s += v % 5
        v //= 5
    return s


def test_exhaustive_dlp_zero_bound(kummer54):
    found = kl.exhaustive_dlp_bounded(kummer54, kummer54.one_element, 0)
    assert [tuple(e) for e in found] == [(0, 0, 0, 0)]


def test_exhaustive_dlp_budget(kummer3115):
    with pytest.raises(oracle.BudgetExceeded):
        kl.exhaustive_dlp_bounded(kummer3115, kummer3115.one_element, 15, budget=1000)


def test_meet_in_middle_examples(kummer54):
    g = kummer54.generator
    e = kl.ExponentDigits(5, (1, 0, 1, 0))
    y = kl.encode_digits(kummer54, e)
    assert kl.meet_in_middle_binary(g, y, 4, 2) == 26  # 1 + 25
    assert kl.meet_in_middle_binary(g, kummer54.one_element, 4, 0) == 0


def test_meet_in_middle_weight3(f7):
    ctx = kl.build_kummer(f7, 6, 3, 1)
    g = ctx.generator
    rng = random.Random(33)
    for _ in range(10):
        # plant patterns compatible with the half-split +-1 slack
        while True:
            pos = rng.sample(range(6), 3)
            wl = sum(1 for i in pos if i < 3)
            if 0 <= wl <= 2:
                break
        e = kl.ExponentDigits(7, tuple(1 if i in pos else 0 for i in range(6)))
        y = kl.encode_digits(ctx, e)
        assert kl.meet_in_middle_binary(g, y, 6, 3) == e.to_int()


def test_meet_in_middle_slack_violation(f7):
    # all three 1-digits on the left half exceeds the +-1 slack: documented NotFound
    ctx = kl.build_kummer(f7, 6, 3, 1)
    e = kl.ExponentDigits(7, (1, 1, 1, 0, 0, 0))
    y = kl.encode_digits(ctx, e)
    with pytest.raises(oracle.NotFound):
        kl.meet_in_middle_binary(ctx.generator, y, 6, 3)


def test_meet_in_middle_wrong_weight(kummer54):
    with pytest.raises(oracle.NotFound):
        kl.meet_in_middle_binary(kummer54.generator, kummer54.one_element, 4, 1)


def test_factorize_basic():
    assert kl.factorize(1) == []
    assert kl.factorize(12) == [2, 2, 3]
    assert kl.factorize(624) == [2, 2, 2, 2, 3, 13]
    assert kl.factorize(7 ** 7 - 1) == [2, 3, 29, 4733]
    with pytest.raises(ValueError):
        kl.factorize(0)


def test_factorize_random_roundtrip():
    rng = random.Random(34)
    for _ in range(30):
        m = rng.randrange(2, 10 ** 9)
        fac = kl.factorize(m)
        assert math.prod(fac) == m
        assert all(oracle._is_probable_prime(p) for p in fac)


def test_factorize_semiprime_pollard():
    p, q = 1_000_003, 1_000_033
    assert kl.factorize(p * q) == [p, q]
    # around 2^60, well past trial division
    p2, q2 = 1_073_741_827, 1_073_741_831
    assert kl.factorize(p2 * q2) == sorted([p2, q2])


def test_bsgs_agrees_with_solver_full_sweep(kummer54):
    # every bounded exponent at (q, n) = (5, 4): bsgs and the reader agree
    import itertools
    rng = random.Random(35)
    for v in itertools.product(range(5), repeat=4):
        if sum(v) > 4:
            continue
        e = kl.ExponentDigits(5, v)
        target = kl.encode_digits(kummer54, e)
        out = kl.solve_bounded(kl.DlpInstance(kummer54, target), rng)
        x = kl.bsgs_dlp(kummer54.generator, target, 624)
        assert tuple(out.digits) == v
        assert kl.ext_pow(kummer54.generator, x) == target
