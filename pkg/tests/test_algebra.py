import random
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurthom.algebra import (
    InconsistentError,
    LinearSystem,
    NonIntegralError,
    Polynomial,
    UnderdeterminedError,
    determinant,
    integer_rank,
    solve_exact,
    taylor_coeffs,
)
from schurthom.partitions import Partition

VARS = ("x", "x1", "x2", "b1", "b2")


def random_poly(rng, nvars=3, max_deg=3, max_terms=4):
    p = Polynomial.zero()
    for _ in range(rng.randint(0, max_terms)):
        exps = {v: rng.randint(0, max_deg) for v in rng.sample(VARS[:nvars], rng.randint(0, nvars))}
        p = p + Polynomial.monomial(exps, rng.randint(-9, 9))
    return p


small_polys = st.builds(
    lambda seed: random_poly(random.Random(seed), nvars=5, max_deg=6, max_terms=5),
    st.integers(0, 10 ** 9),
)


def test_basic_identities():
    x1 = Polynomial.variable("x1")
    x2 = Polynomial.variable("x2")
    assert (x1 + x2) * (x1 - x2) == x1 ** 2 - x2 ** 2
    p = 3 * x1 * x2 - 7
    assert p + Polynomial.zero() == p
    assert p * Polynomial.one() == p
    assert p - p == Polynomial.zero()


@settings(max_examples=200, deadline=None)
@given(small_polys, small_polys, small_polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(small_polys, small_polys)
def test_exact_division_roundtrip(a, b):
    if b.is_zero():
        return
    assert (a * b).div_exact(b) == a


def test_exact_division_failures():
    x = Polynomial.variable("x")
    with pytest.raises(ValueError):
        (x ** 2 + 1).div_exact(x + 1)
    with pytest.raises(ValueError):
        (2 * x).div_exact(Polynomial.integer(3))


def test_substitute():
    x1 = Polynomial.variable("x1")
    b1 = Polynomial.variable("b1")
    p = (x1 + b1) ** 3
    assert p.substitute("b1", 2 * x1) == 27 * x1 ** 3
    assert p.substitute("b1", Polynomial.zero()) == x1 ** 3


def test_eval_int():
    x1 = Polynomial.variable("x1")
    x2 = Polynomial.variable("x2")
    p = x1 ** 2 * x2 - 5
    assert p.eval_int({"x1": 3, "x2": 2}) == 13


def test_series_product_truncation():
    # (1 - 2z) * (5 + 24z + 89z^2 + 300z^3 + ...) = 5 + 14z + 41z^2 + 122z^3 + ...
    z = Polynomial.variable("z")
    lead = [5, 24, 89, 300]
    series = sum((c * z ** i for i, c in enumerate(lead)), Polynomial.zero())
    product = (Polynomial.one() - 2 * z) * series
    tail = product - (5 + 14 * z + 41 * z ** 2)
    # everything past the checked prefix sits at z-degree >= 3
    tail.div_exact(z ** 3)


def test_taylor_examples():
    z = Polynomial.variable("z")
    num = Polynomial.integer(5) - 6 * z
    den = (1 - z) * (1 - 2 * z) * (1 - 3 * z)
    assert taylor_coeffs(num, den, 7) == [5, 24, 89, 300, 965, 3024, 9329]
    assert taylor_coeffs(Polynomial.one(), 1 - z, 4) == [1, 1, 1, 1]
    assert taylor_coeffs(Polynomial.one(), 1 - 2 * z, 5) == [1, 2, 4, 8, 16]


def test_taylor_long_division_oracle():
    # long-division oracle on random small series
    rng = random.Random(7)
    z = Polynomial.variable("z")
    for _ in range(25):
        den_coeffs = [1] + [rng.randint(-3, 3) for _ in range(rng.randint(0, 3))]
        num_coeffs = [rng.randint(-5, 5) for _ in range(rng.randint(1, 4))]
        den = sum((c * z ** i for i, c in enumerate(den_coeffs)), Polynomial.zero())
        num = sum((c * z ** i for i, c in enumerate(num_coeffs)), Polynomial.zero())
        got = taylor_coeffs(num, den, 8)
        acc = []
        for i in range(8):
            v = num_coeffs[i] if i < len(num_coeffs) else 0
            for k in range(1, min(i, len(den_coeffs) - 1) + 1):
                v -= den_coeffs[k] * acc[i - k]
            acc.append(v)
        assert got == acc


def test_taylor_rejects_zero_constant_term():
    z = Polynomial.variable("z")
    with pytest.raises(ValueError):
        taylor_coeffs(Polynomial.one(), z, 3)


def test_determinant_against_permutation_oracle():
    rng = random.Random(3)
    for n in (1, 2, 3, 4):
        for _ in range(10):
            grid = [[Polynomial.integer(rng.randint(-4, 4)) for _ in range(n)] for _ in range(n)]
            expected = 0
            for perm in permutations(range(n)):
                sign = 1
                seen = list(perm)
                for i in range(n):
                    for j in range(i + 1, n):
                        if seen[i] > seen[j]:
                            sign = -sign
                term = sign
                for i in range(n):
                    term *= grid[i][perm[i]].constant_value()
                expected += term
            assert determinant(grid).constant_value() == expected


def _labels(n):
    return [Partition((i + 1,)) for i in range(n)]


def test_solve_identity():
    sys3 = LinearSystem(rows=[[1, 0, 0], [0, 1, 0], [0, 0, 1]], rhs=[4, -7, 0], unknowns=_labels(3))
    sol = solve_exact(sys3)
    assert [sol[u] for u in sys3.unknowns] == [4, -7, 0]


def test_solve_underdetermined():
    sys_bad = LinearSystem(rows=[[1, 2, 3], [2, 4, 6]], rhs=[1, 2], unknowns=_labels(3))
    with pytest.raises(UnderdeterminedError):
        solve_exact(sys_bad)


def test_solve_inconsistent():
    sys_bad = LinearSystem(rows=[[1, 1], [1, 1], [1, 0]], rhs=[0, 1, 0], unknowns=_labels(2))
    with pytest.raises(InconsistentError):
        solve_exact(sys_bad)


def test_solve_nonintegral():
    sys_bad = LinearSystem(rows=[[2, 0], [0, 1], [2, 1]], rhs=[1, 1, 2], unknowns=_labels(2))
    with pytest.raises(NonIntegralError):
        solve_exact(sys_bad)


def test_solve_random_zero_residual():
    # construct systems with a known integer solution, possibly overdetermined
    rng = random.Random(11)
    for _ in range(120):
        n = rng.randint(1, 6)
        m = n + rng.randint(0, 4)
        truth = [rng.randint(-30, 30) for _ in range(n)]
        rows = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(m)]
        rhs = [sum(a * v for a, v in zip(row, truth)) for row in rows]
        system = LinearSystem(rows=rows, rhs=rhs, unknowns=_labels(n))
        try:
            sol = solve_exact(system)
        except UnderdeterminedError:
            assert integer_rank(rows) < n
            continue
        got = [sol[u] for u in system.unknowns]
        for row, b in zip(rows, rhs):
            assert sum(a * v for a, v in zip(row, got)) == b
        assert got == truth


def test_integer_rank():
    assert integer_rank([[1, 2], [2, 4]]) == 1
    assert integer_rank([[1, 0], [0, 3]]) == 2
    assert integer_rank([]) == 0
