import itertools
import math
import random

import pytest

import kummerlog as kl
from kummerlog import listdecode as ld
from kummerlog.poly import Poly


def test_select_params_examples():
    p = kl.select_params(15, 4, 9)
    assert (p.multiplicity, p.weighted_degree_bound) == (3, 26)
    assert len(p.monomials()) == 105
    assert p.n_points * p.multiplicity * (p.multiplicity + 1) // 2 == 90

    p = kl.select_params(4, 1, 3)
    assert (p.multiplicity, p.weighted_degree_bound) == (1, 2)

    with pytest.raises(ld.AgreementTooSmall):
        kl.select_params(15, 4, 7)  # 49 < 60


def test_select_params_invariant():
    rng = random.Random(9)
    for _ in range(60):
        k = rng.randrange(0, 4)
        n = rng.randrange(2, 16)
        a_min = math.isqrt(k * n) + 1
        A = rng.randrange(a_min, a_min + 6)
        p = kl.select_params(n, k, A)
        m, D = p.multiplicity, p.weighted_degree_bound
        assert D == m * A - 1
        assert A * A * m > k * n * (m + 1)
        assert len(p.monomials()) > n * m * (m + 1) // 2


def test_interpolate_line(f7):
    pts = [(x, x) for x in range(4)]
    params = kl.select_params(4, 1, 3)
    Q = kl.interpolate(f7, pts, params)
    assert not Q.is_zero()
    assert Q.eval_y(Poly.x(f7)).is_zero()  # Q(x, x) = 0


def test_interpolate_single_point(f7):
    params = kl.select_params(1, 1, 2)
    Q = kl.interpolate(f7, [(0, 0)], params)
    assert not Q.is_zero()
    assert Q.eval(0, 0) == 0


def test_interpolate_multiplicity(f31, kummer3115):
    # the solver pipeline case: multiplicity 3 at all 15 points
    rng = random.Random(10)
    pts = [(x, f31.random_element(rng)) for x in kummer3115.point_xs]
    params = kl.select_params(15, 4, 9)
    Q = kl.interpolate(f31, pts, params)
    assert not Q.is_zero()
    assert Q.weighted_degree() <= params.weighted_degree_bound
    for a, b in pts:
        assert Q.vanishes_to_order(a, b, 3)


def test_interpolate_rejects_repeated_x(f7):
    params = kl.select_params(2, 1, 2)
    with pytest.raises(ValueError):
        kl.interpolate(f7, [(1, 2), (1, 3)], params)


def test_interpolate_generic_field_path(f9):
    # extension coefficients go through the python elimination
    rng = random.Random(11)
    xs = rng.sample(f9.elements(), 5)
    t = Poly(f9, [f9.random_element(rng), f9.random_element(rng)])
    pts = [(x, t.eval(x)) for x in xs]
    params = kl.select_params(5, 1, 3)
    Q = kl.interpolate(f9, pts, params)
    assert Q.eval_y(t).is_zero()


def test_y_roots_product(f7):
    t1 = Poly(f7, [1, 1])   # x + 1
    t2 = Poly(f7, [0, 2])   # 2x
    Q = ld.BivariatePoly.y_minus(f7, 1, t1) * ld.BivariatePoly.y_minus(f7, 1, t2)
    got = {t.coeffs for t in kl.y_roots(Q, 1)}
    assert got == {t1.coeffs, t2.coeffs}


def test_y_roots_edge_cases(f7):
    just_y = ld.BivariatePoly(f7, 1, {(0, 1): 1})
    assert [t.coeffs for t in kl.y_roots(just_y, 1)] == [()]  # t = 0
    just_x = ld.BivariatePoly(f7, 1, {(1, 0): 1})
    assert kl.y_roots(just_x, 1) == []
    with pytest.raises(ValueError):
        kl.y_roots(ld.BivariatePoly.zero(f7, 1), 1)


def test_y_roots_bound(f31):
    rng = random.Random(12)
    for _ in range(20):
        pts = [(x, f31.random_element(rng)) for x in rng.sample(range(31), 10)]
        k = rng.randrange(1, 3)
        A = math.isqrt(k * 10) + 1 + rng.randrange(0, 3)
        if A > 10:
            continue
        params = kl.select_params(10, k, A)
        Q = kl.interpolate(f31, pts, params)
        roots = kl.y_roots(Q, k)
        assert len(roots) <= params.weighted_degree_bound // k


def test_list_decode_planted(f31):
    rng = random.Random(13)
    for _ in range(10):
        t = Poly(f31, [rng.randrange(31) for _ in range(5)])
        xs = rng.sample(range(31), 15)
        pts = []
        for idx, x in enumerate(xs):
            if idx < 9:
                pts.append((x, t.eval(x)))
            else:
                pts.append((x, rng.randrange(31)))
        found = kl.list_decode(f31, pts, 4, 9, rng)
        assert any(s == t for s in found)


def test_list_decode_all_points_on_curve(f7):
    t = Poly(f7, [3, 2])
    pts = [(x, t.eval(x)) for x in range(7)]
    found = kl.list_decode(f7, pts, 1, 4, random.Random(14))
    assert any(s == t for s in found)


def test_list_decode_exhaustive_f5(f5):
    # completeness against all 25 linear candidates with agreement >= 3
    rng = random.Random(15)
    for _ in range(20):
        pts = [(x, rng.randrange(5)) for x in range(5)]
        found = {t.coeffs for t in kl.list_decode(f5, pts, 1, 3, rng)}
        for c0, c1 in itertools.product(range(5), repeat=2):
            t = Poly(f5, [c0, c1])
            if ld.agreement(t, pts) >= 3:
                assert t.coeffs in found


def test_list_decode_completeness_extension_field(f4, f9):
    rng = random.Random(16)
    for field in (f4, f9):
        q = field.q
        for _ in range(10):
            npts = rng.randrange(3, q + 1)
            xs = rng.sample(field.elements(), npts)
            pts = [(x, field.random_element(rng)) for x in xs]
            k = 1
            a_min = math.isqrt(k * npts) + 1
            if a_min > npts:
                continue
            A = rng.randrange(a_min, npts + 1)
            found = {t.coeffs for t in kl.list_decode(field, pts, k, A, rng)}
            for cand in itertools.product(field.elements(), repeat=k + 1):
                t = Poly(field, list(cand))
                if ld.agreement(t, pts) >= A:
                    assert t.coeffs in found


def test_list_decode_constants_k0(f7):
    rng = random.Random(17)
    pts = [(x, 3 if x < 4 else x % 3) for x in range(7)]
    found = {t.coeffs for t in kl.list_decode(f7, pts, 0, 3, rng)}
    assert (3,) in found  # the constant 3 agrees with 4 points


def test_hasse_derivative_values(f5):
    # D^(r,s) of x^2 y at (a, b): comb-shifted coefficients
    Q = ld.BivariatePoly(f5, 1, {(2, 1): 1})
    assert Q.hasse_eval(2, 3, 0, 0) == (4 * 3) % 5
    assert Q.hasse_eval(2, 3, 1, 0) == (2 * 2 * 3) % 5   # 2ab
    assert Q.hasse_eval(2, 3, 2, 0) == 3                 # b
    assert Q.hasse_eval(2, 3, 0, 1) == 4                 # a^2
    assert Q.hasse_eval(2, 3, 1, 1) == 4                 # 2a
