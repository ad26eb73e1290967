import random

import pytest

from schurthom.algebra import Polynomial, determinant, integer_rank
from schurthom.alphabets import Alphabet, alphabet, b_alphabet, diff, letter, X_PAIR, X_SINGLE
from schurthom.partitions import Partition, conjugate, hook_contained, partitions_in_box
from schurthom.schur import (
    ShapeError,
    complete,
    evaluate_expansion,
    jacobi_trudi,
    multi_schur,
    resultant,
    resultant_sum_identity,
    schur,
    schur_factorized,
    schur_symmetrize,
    symmetrizer_oracle,
)


def elementary(letters, i):
    """Elementary symmetric polynomial oracle by direct expansion."""
    from itertools import combinations

    total = Polynomial.zero()
    for combo in combinations(letters, i):
        term = Polynomial.one()
        for v in combo:
            term = term * v.poly()
        total = total + term
    return total


def homogeneous(letters, i):
    """Complete homogeneous oracle by direct expansion."""
    from itertools import combinations_with_replacement

    total = Polynomial.zero()
    for combo in combinations_with_replacement(letters, i):
        term = Polynomial.one()
        for v in combo:
            term = term * v.poly()
        total = total + term
    return total


GENERIC_LETTERS = [letter(n) for n in ("x1", "x2", "b1", "b2", "b3", "b4", "y1", "y2")]


def random_alphabet(rng, pool, max_size):
    size = rng.randint(0, max_size)
    return Alphabet(rng.sample(pool, size))


def random_partition(rng, max_weight=8, max_part=None):
    parts = []
    remaining = rng.randint(0, max_weight)
    while remaining:
        v = rng.randint(1, remaining if max_part is None else min(remaining, max_part))
        parts.append(v)
        remaining -= v
    return Partition(parts)


def test_complete_examples():
    # S_3(A - B) = h_3(A) - h_2(A) e_1(B) + h_1(A) e_2(B) - e_3(B)
    a = [letter("x1"), letter("x2")]
    b = [letter("b1"), letter("b2"), letter("b3")]
    s = complete(diff(Alphabet(a), Alphabet(b)), 3)
    expected = (
        homogeneous(a, 3)
        - homogeneous(a, 2) * elementary(b, 1)
        + homogeneous(a, 1) * elementary(b, 2)
        - elementary(b, 3)
    )
    assert s[3] == expected
    assert s[0] == Polynomial.one()

    empty = complete(diff((), ()), 4)
    assert empty == [Polynomial.one()] + [Polynomial.zero()] * 4

    s2 = complete(diff(X_PAIR, ()), 2)[2]
    x1, x2 = Polynomial.variable("x1"), Polynomial.variable("x2")
    assert s2 == x1 ** 2 + x1 * x2 + x2 ** 2


def test_schur_examples():
    dgen = diff(X_PAIR, b_alphabet(4))
    assert schur(Partition((2, 5, 6, 8)), dgen).is_zero()
    x = Polynomial.variable("x")
    for r in (1, 3, 5):
        assert schur(Partition((r,)), diff(X_SINGLE, ())) == x ** r
    # S_1367(A2 - B4) = S_23(A2) R(A2, B4) S_13(-B4)
    lhs = schur(Partition((1, 3, 6, 7)), dgen)
    rhs = (
        schur(Partition((2, 3)), diff(X_PAIR, ()))
        * resultant(X_PAIR, b_alphabet(4))
        * schur(Partition((1, 3)), diff((), b_alphabet(4)))
    )
    assert lhs == rhs


def test_schur_matches_displayed_determinant_shape():
    # the 5x5 layout for I = (1,3,3,4,5): entry (p,q) = S_{i_q + q - p}
    d = diff(("x1",), ("b1",))
    series = complete(d, 9)
    idx = (1, 3, 3, 4, 5)
    grid = []
    for p in range(1, 6):
        row = []
        for q in range(1, 6):
            k = idx[q - 1] + q - p
            row.append(series[k] if k >= 0 else Polynomial.zero())
        grid.append(row)
    assert determinant(grid) == schur(Partition(idx), d)


def test_resultant_examples():
    assert resultant(Alphabet(()), b_alphabet(2)) == Polynomial.one()
    x = Polynomial.variable("x")
    assert resultant(alphabet("x"), alphabet("2x")) == -1 * x
    total = resultant(alphabet("x1", "x2", "b1"), b_alphabet(2, start=2))
    assert total.total_degree() == 6


def test_factorization_shape_errors():
    with pytest.raises(ShapeError):
        schur_factorized(Partition((3,)), diff(X_PAIR, alphabet("b1")))
    # rectangle exactly: S_(n^m) = R(A_m, B_n)
    d = diff(X_PAIR, alphabet("b1", "b2", "b3"))
    assert schur_factorized(Partition((3, 3)), d) == resultant(X_PAIR, alphabet("b1", "b2", "b3"))


def test_cancellation_property():
    # S_I((A+C) - (B+C)) = S_I(A - B), 100 randomized cases
    rng = random.Random(2024)
    cases = 0
    while cases < 100:
        a = random_alphabet(rng, GENERIC_LETTERS[:4], 2)
        b = random_alphabet(rng, GENERIC_LETTERS[4:], 2)
        c = random_alphabet(rng, [letter("2x1"), letter("x1+x2"), letter("3")], 2)
        p = random_partition(rng, max_weight=8)
        lhs = schur(p, diff(a + c, b + c))
        rhs = schur(p, diff(a, b))
        assert lhs == rhs, (p.parts, a, b, c)
        cases += 1


def test_duality_property():
    # S_I(A - B) = (-1)^|I| S_{conj I}(B - A), 100 randomized cases
    rng = random.Random(77)
    cases = 0
    while cases < 100:
        a = random_alphabet(rng, GENERIC_LETTERS[:4], 3)
        b = random_alphabet(rng, GENERIC_LETTERS[4:], 2)
        p = random_partition(rng, max_weight=8, max_part=5)
        if p.length > 5:
            continue
        lhs = schur(p, diff(a, b))
        rhs = schur(conjugate(p), diff(b, a))
        if p.weight % 2:
            rhs = -rhs
        assert lhs == rhs, (p.parts, a, b)
        cases += 1


def test_hook_vanishing_property():
    # S_I(A_m - B_n) = 0 outside the (m, n)-hook, generic letters, 100 cases
    rng = random.Random(5)
    cases = 0
    while cases < 100:
        m = rng.randint(0, 3)
        n = rng.randint(0, 3)
        a = Alphabet(GENERIC_LETTERS[:m])
        b = Alphabet(GENERIC_LETTERS[4:4 + n])
        p = random_partition(rng, max_weight=9)
        if hook_contained(p, m, n):
            continue
        value = jacobi_trudi(p.parts, diff(a, b))
        assert value.is_zero(), (p.parts, m, n)
        cases += 1


def test_inside_hook_generically_nonzero():
    rng = random.Random(6)
    for _ in range(30):
        m, n = rng.randint(1, 2), rng.randint(1, 2)
        a = Alphabet(GENERIC_LETTERS[:m])
        b = Alphabet(GENERIC_LETTERS[4:4 + n])
        p = random_partition(rng, max_weight=6, max_part=4)
        if not hook_contained(p, m, n) or not p.parts:
            continue
        assert not schur(p, diff(a, b)).is_zero(), (p.parts, m, n)


def test_linearity_formula():
    # S_j(-E - B_n) = S_j(-E - B_{n-1}) - b_n S_{j-1}(-E - B_{n-1}), 108 cases
    rng = random.Random(12)
    cases = 0
    while cases < 108:
        e = random_alphabet(rng, GENERIC_LETTERS[:3], 3)
        n = rng.randint(1, 4)
        bs = b_alphabet(n)
        smaller = b_alphabet(n - 1)
        bn = Polynomial.variable("b%d" % n)
        j = cases % 9  # j runs over 0..8
        full = complete(diff((), e + bs), j)
        part = complete(diff((), e + smaller), j)
        lhs = full[j]
        rhs = part[j] - (bn * part[j - 1] if j else Polynomial.zero())
        assert lhs == rhs, (j, n, e)
        cases += 1


def test_factorized_equals_determinant():
    # wherever the shape permits, both paths agree: 100 randomized cases
    rng = random.Random(31)
    cases = 0
    while cases < 100:
        m = rng.randint(1, 2)
        n = rng.randint(1, 3)
        a = Alphabet(GENERIC_LETTERS[:m])
        b = Alphabet(GENERIC_LETTERS[4:4 + n])
        low = sorted(rng.randint(0, n) for _ in range(rng.randint(0, 2)))
        top = sorted(rng.randint(n, n + 3) for _ in range(m))
        p = Partition(low + top)
        d = diff(a, b)
        try:
            fast = schur_factorized(p, d)
        except ShapeError:
            continue
        assert fast == schur(p, d), (p.parts, m, n)
        cases += 1


def test_transformation_lemma_instances():
    # adding admissible per-row alphabets leaves the multi-Schur value fixed:
    # 100 randomized instances
    rng = random.Random(19)
    pool = GENERIC_LETTERS + [letter("2x1"), letter("x1+x2")]
    cases = 0
    while cases < 100:
        s = rng.randint(2, 3)
        indices = tuple(sorted(rng.randint(0, 3) for _ in range(s)))
        diffs = []
        for _ in range(s):
            a = random_alphabet(rng, pool[:4], 2)
            b = random_alphabet(rng, pool[4:8], 1)
            diffs.append(diff(a, b))
        base = multi_schur(indices, diffs)
        # family D^0, ..., D^{s-1} with |D^i| <= i; row p uses D^{s-p}
        family = [Alphabet(rng.sample(pool, rng.randint(0, i))) for i in range(s)]
        cols = [indices[q] + q + 1 for q in range(s)]
        grid = []
        for p in range(1, s + 1):
            extra = family[s - p]
            row = []
            for q in range(s):
                dq = diffs[q]
                modified = diff(dq.plus, dq.minus + extra)
                k = cols[q] - p
                row.append(complete(modified, max(k, 0))[k] if k >= 0 else Polynomial.zero())
            grid.append(row)
        assert determinant(grid) == base, (indices,)
        cases += 1


def test_multi_schur_single_block_collapses():
    rng = random.Random(44)
    for _ in range(20):
        parts = tuple(sorted(rng.randint(0, 4) for _ in range(rng.randint(1, 3))))
        d = diff(("x1", "x2"), ("b1",))
        assert multi_schur(parts, [d] * len(parts)) == jacobi_trudi(parts, d)


def test_multi_schur_displayed_factorization():
    # S_{r,r;r}(X2 + 2x1 + 3x1 - D; x1 - D)
    #   = -3^{r-2} R(X2, D) (x1 x2)^{r-2} x1^{r-3} (3x1 - 2x2)  at r = 3, 4
    from schurthom.catalog import ROOTS_III22

    x1, x2 = Polynomial.variable("x1"), Polynomial.variable("x2")
    for r in (3, 4):
        wide = diff(X_PAIR + letter("2x1") + letter("3x1"), ROOTS_III22)
        narrow = diff(alphabet("x1"), ROOTS_III22)
        value = multi_schur((r, r, r), [wide, wide, narrow])
        expected = (
            -(3 ** (r - 2))
            * resultant(X_PAIR, ROOTS_III22)
            * Polynomial.monomial({"x1": r - 2, "x2": r - 2})
            * x1 ** (r - 3)
            * (3 * x1 - 2 * x2)
        )
        assert value == expected


def test_symmetrizer_on_monomials():
    # x1^j x2^i maps to the two-row S_{i,j}, all 0 <= i, j <= 5
    pair = diff(X_PAIR, ())
    for i in range(6):
        for j in range(6):
            mono = Polynomial.monomial({"x1": j, "x2": i})
            image = evaluate_expansion(schur_symmetrize(mono), pair)
            assert image == jacobi_trudi((i, j), pair), (i, j)
    assert schur_symmetrize(Polynomial.one()).coefficient(()) == 1


def test_symmetrizer_against_defining_expression():
    # linear extension agrees with (x1 f - x2 f(swapped)) / (x1 - x2), and
    # S_{0,2}(X2) evaluates to the full quadratic at random integer points
    rng = random.Random(9)
    pair = diff(X_PAIR, ())
    for _ in range(80):
        p = Polynomial.zero()
        for _ in range(rng.randint(1, 4)):
            p = p + Polynomial.monomial(
                {"x1": rng.randint(0, 5), "x2": rng.randint(0, 5)}, rng.randint(-9, 9)
            )
        assert evaluate_expansion(schur_symmetrize(p), pair) == symmetrizer_oracle(p)
    square = schur_symmetrize(Polynomial.monomial({"x1": 2}))
    value = evaluate_expansion(square, pair)
    for _ in range(10):
        a, b = rng.randint(-9, 9), rng.randint(-9, 9)
        assert value.eval_int({"x1": a, "x2": b}) == a * a + a * b + b * b


def test_symmetrizer_rejects_foreign_variables():
    with pytest.raises(ValueError):
        schur_symmetrize(Polynomial.variable("b1"))


def test_resultant_sum_identity_cases():
    assert resultant_sum_identity(Alphabet(()), letter("x"), b_alphabet(2))
    assert resultant_sum_identity(alphabet(2), letter("x"), b_alphabet(2))
    assert resultant_sum_identity(alphabet(2, 3), letter("x"), b_alphabet(3))
    assert resultant_sum_identity(alphabet(2, 3, 4), letter("x"), b_alphabet(2))


def test_basis_independence_inside_hook():
    # evaluation vectors of {S_I : I in the (2,1)-hook, |I| <= 6} at random
    # integer specializations have full rank
    rng = random.Random(101)
    hook_partitions = []
    seen = set()
    for w in range(0, 7):
        for p in _partitions_of(w):
            if hook_contained(p, 2, 1) and p not in seen:
                seen.add(p)
                hook_partitions.append(p)
    d = diff(X_PAIR, alphabet("b1"))
    polys = [schur(p, d) for p in hook_partitions]
    rows = []
    for _ in range(3 * len(hook_partitions)):
        point = {"x1": rng.randint(-20, 20), "x2": rng.randint(-20, 20), "b1": rng.randint(-20, 20)}
        rows.append([q.eval_int(point) for q in polys])
    assert integer_rank(rows) == len(hook_partitions)


def _partitions_of(w):
    out = []

    def rec(remaining, max_part, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for part in range(min(max_part, remaining), 0, -1):
            rec(remaining - part, part, prefix + [part])

    if w == 0:
        return [Partition()]
    rec(w, w, [])
    return out
