"""Closed-form builders: Porteous rectangles, the Morin one-part sums, the
staircase recursions behind the corank-two families, and their proof-level
consistency checks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Polynomial, taylor_coeffs
from .alphabets import Alphabet, AlphabetDiff, alphabet, b_alphabet, diff, letter, X_PAIR
from .partitions import Partition, SchurExpansion, add_column, partitions_in_box
from .schur import (
    complete,
    evaluate_expansion,
    jacobi_trudi,
    resultant,
    schur,
)


@dataclass(frozen=True)
class PascalStaircase:
    """Triangular array generated from a seed column by p[s+1][t] = p[s][t-1] + p[s][t].

    Entries with 2t > s + 1 are structurally zero; the first column is the
    seed.  entry(s, t) uses the 1-based row/column numbering of the array.
    """

    seed: tuple
    rows: int
    entries: tuple

    def entry(self, s, t):
        if not (1 <= s <= self.rows) or t < 1:
            raise IndexError("staircase entry (%d, %d) out of range" % (s, t))
        row = self.entries[s - 1]
        return row[t - 1] if t <= len(row) else 0

    def row(self, s):
        width = (self.rows + 1) // 2
        return tuple(self.entry(s, t) for t in range(1, width + 1))


def staircase(seed, rows):
    """Build the staircase with the given first column, down to `rows` rows."""
    seed = tuple(int(v) for v in seed)
    if rows > len(seed):
        raise ValueError("need %d seed values, got %d" % (rows, len(seed)))
    table = []
    for s in range(1, rows + 1):
        width = (s + 1) // 2  # nonzero region: 2t <= s + 1
        row = [seed[s - 1]]
        for t in range(2, width + 1):
            prev = table[s - 2]
            left = prev[t - 2] if t - 2 < len(prev) else 0
            same = prev[t - 1] if t - 1 < len(prev) else 0
            row.append(left + same)
        table.append(row)
    return PascalStaircase(seed=seed[:rows], rows=rows, entries=tuple(tuple(r) for r in table))


def staircase_from_series(numerator, denominator, rows):
    """Staircase seeded by the Taylor coefficients of numerator/denominator."""
    return staircase(taylor_coeffs(numerator, denominator, rows), rows)


def geometric_staircase(y, rows):
    """Staircase of 1/(1 - z*y): seed 1, y, y^2, ..."""
    return staircase([y ** i for i in range(rows)], rows)


def doubling_staircase(rows):
    """Staircase seeded by 2^i - 1, the two-row coefficient table of the
    I_{2,2} family."""
    return staircase([2 ** i - 1 for i in range(1, rows + 1)], rows)


def _z_poly(coeffs):
    z = Polynomial.variable("z")
    out = Polynomial.zero()
    for i, c in enumerate(coeffs):
        out = out + Polynomial.integer(c) * z ** i
    return out


def a3_staircase(rows):
    """Staircase seeded by the expansion of (5 - 6z) / ((1-z)(1-2z)(1-3z))."""
    num = _z_poly([5, -6])
    den = _z_poly([1, -1]) * _z_poly([1, -2]) * _z_poly([1, -3])
    return staircase_from_series(num, den, rows)


def staircase_sum(d, a, stairs):
    """The staircase-weighted double sum
    W(d, A) = sum_{i,j} p_{d+1-i, j+1} S_i(-A) S_{j, d-i-j}(x1+x2).

    `a` is the alphabet A (an AlphabetDiff is accepted and negated into the
    minus position).  The sum runs over the index pairs with a nonzero
    staircase entry and a weakly increasing two-row index.
    """
    if isinstance(a, AlphabetDiff):
        minus_side = a.negated()
    elif isinstance(a, Alphabet):
        minus_side = diff((), a)
    else:
        minus_side = diff((), Alphabet(a))
    if stairs.rows < d + 1:
        raise ValueError("staircase has %d rows, need %d" % (stairs.rows, d + 1))
    s_of_minus = complete(minus_side, d)
    pair_diff = diff(X_PAIR, ())
    memo = {}
    total = Polynomial.zero()
    for i in range(d + 1):
        si = s_of_minus[i]
        if si.is_zero():
            continue
        for j in range(0, (d - i) // 2 + 1):
            w = stairs.entry(d + 1 - i, j + 1)
            if w == 0:
                continue
            two_row = jacobi_trudi((j, d - i - j), pair_diff, memo=memo)
            total = total + w * (si * two_row)
    return total


def thom_porteous(i, offset):
    """Rectangle class of the rank-drop locus: the single term S_{(offset+i)^i}."""
    if i < 1:
        raise ValueError("need i >= 1")
    if offset < -i + 1:
        raise ValueError("offset must be at least %d" % (-i + 1))
    return SchurExpansion.single([offset + i] * i)


def thom_a1(r):
    if r < 1:
        raise ValueError("need r >= 1")
    return SchurExpansion.single([r])


def thom_a2(r):
    """sum_{j <= r} 2^j S_{r-j, r+j}."""
    if r < 1:
        raise ValueError("need r >= 1")
    out = {}
    for j in range(r + 1):
        out[Partition((r - j, r + j))] = 2 ** j
    return SchurExpansion(out)


def morin_one_part(i, r):
    """The one-part sum of the order-i Morin family:
    sum over J in (r^{i-1}) of S_J(2 + 3 + ... + i) S_{r-j_{i-1}, ..., r-j_1, r+|J|}.

    Coefficients S_J of the numeric alphabet go through the same determinant
    engine with constant letters.  For i = 1 this is the single term S_r.
    """
    if i < 1 or r < 1:
        raise ValueError("need i, r >= 1")
    if i == 1:
        return SchurExpansion.single([r])
    numeric = diff(alphabet(*range(2, i + 1)), ())
    out = {}
    for box_partition in partitions_in_box(r, i - 1):
        coeff = schur(box_partition, numeric).constant_value()
        if coeff == 0:
            continue
        padded = box_partition.padded(i - 1)
        index = tuple(r - v for v in reversed(padded)) + (r + box_partition.weight,)
        key = Partition(index)
        out[key] = out.get(key, 0) + coeff
    return SchurExpansion(out)


def thom_iii23(r):
    """sum_{i=1}^{r+1} 2^i S_{r+1-i, r+1, r+i}, with zero leading parts dropped.

    The same sum evaluated at r = 1 coincides with the first I_{2,3} table;
    the builder is exposed for r >= 2 where the family is defined.
    """
    if r < 2:
        raise ValueError("need r >= 2")
    out = {}
    for i in range(1, r + 2):
        out[Partition((r + 1 - i, r + 1, r + i))] = 2 ** i
    return SchurExpansion(out)


def i22_initial(r):
    """Initial two-row terms sum_{2j <= r+1} P_{r,j} S_{r+j, 2r+1-j}, with P
    the staircase seeded by 2^i - 1 (the terms not reachable by adding a
    full-height column)."""
    if r < 1:
        raise ValueError("need r >= 1")
    stairs = doubling_staircase(r)
    out = {}
    for j in range(1, (r + 1) // 2 + 1):
        c = stairs.entry(r, j)
        if c:
            out[Partition((r + j, 2 * r + 1 - j))] = c
    return SchurExpansion(out)


def thom_i22(r):
    """Full expansion: the initial parts stacked by the column-adding operator,
    sum_t Phi_3^t applied to the initial part at r - t."""
    if r < 1:
        raise ValueError("need r >= 1")
    total = SchurExpansion.zero()
    for t in range(r):
        piece = i22_initial(r - t)
        for _ in range(t):
            piece = add_column(3, piece)
        total = total + piece
    return total


def a3_h_initial(r):
    """Initial terms of the two-row band of the third-order Morin family:
    sum_{2j <= r} P_{r-1, j} S_{r+j, 2r-j} over the staircase of
    (5 - 6z)/((1-z)(1-2z)(1-3z)); defined for r >= 2."""
    if r < 2:
        raise ValueError("need r >= 2")
    stairs = a3_staircase(r - 1)
    out = {}
    for j in range(1, r // 2 + 1):
        c = stairs.entry(r - 1, j)
        if c:
            out[Partition((r + j, 2 * r - j))] = c
    return SchurExpansion(out)


def a3_two_part(r):
    """The stacked two-row band H_r; zero for r = 1."""
    if r < 1:
        raise ValueError("need r >= 1")
    total = SchurExpansion.zero()
    for t in range(r - 1):
        piece = a3_h_initial(r - t)
        for _ in range(t):
            piece = add_column(3, piece)
        total = total + piece
    return total


def thom_a3(r):
    """Third-order Morin expansion: one-part sum plus the stacked two-row band."""
    return morin_one_part(3, r) + a3_two_part(r)


# -- alphabets of the corank-two catalog, reused by the proof checks ----------

SECOND_SYMMETRIC_ROOTS = alphabet("2x1", "2x2", "x1+x2")


def _x1x2_power(k):
    return Polynomial.monomial({"x1": k, "x2": k})


def a3_quotient_v(r):
    """H_r(x1+x2 - D) / (R(x1+x2, D) (x1 x2)^(r-2)) for the root alphabet D
    of the second symmetric power; exact division."""
    if r < 2:
        raise ValueError("need r >= 2")
    value = evaluate_expansion(a3_two_part(r), diff(X_PAIR, SECOND_SYMMETRIC_ROOTS))
    quotient = value
    for a in X_PAIR:
        for m in SECOND_SYMMETRIC_ROOTS:
            quotient = quotient.div_exact(a.poly() - m.poly())
    return quotient.div_exact(_x1x2_power(r - 2))


def a3_quotient_u(r):
    """Same quotient for the one-part sum F_r; equals the negative of
    a3_quotient_v by the multi-Schur factorization argument."""
    if r < 2:
        raise ValueError("need r >= 2")
    value = evaluate_expansion(morin_one_part(3, r), diff(X_PAIR, SECOND_SYMMETRIC_ROOTS))
    quotient = value
    for a in X_PAIR:
        for m in SECOND_SYMMETRIC_ROOTS:
            quotient = quotient.div_exact(a.poly() - m.poly())
    return quotient.div_exact(_x1x2_power(r - 2))


def a3_quotient_closed_form(r):
    """3^(r-2) (3 S_{r-2}(x1+x2) - 2 S_{1,r-3}(x1+x2)), with the two-row index
    read through the determinant (so r = 2, 3 degenerate correctly)."""
    pair = diff(X_PAIR, ())
    value = 3 * jacobi_trudi((r - 2,), pair) - 2 * jacobi_trudi((1, r - 3), pair)
    return 3 ** (r - 2) * value


def a3_consistency_checks(r):
    """The divisibility, quotient, vanishing, and two-row-value checks that
    pin down the third-order Morin and I_{2,2} constructions for 2 <= r <= 6.

    Checks, all exact:
      (a) R(x1+x2, D + B_{r-2}) divides F_r and H_r at x1+x2 - D - B_{r-2};
      (b) the quotients at empty B match the closed form and are negatives
          of one another;
      (c) (F_r + H_r)(x1+x2 - D - B_{r-2}) = 0;
      (d) the initial I_{2,2} part evaluated on x1+x2 equals
          (x1 x2)^(r+1) S_{r-1}(D).
    """
    if not (2 <= r <= 6):
        raise ValueError("checks are set up for 2 <= r <= 6")
    bs = b_alphabet(r - 2)
    minus = SECOND_SYMMETRIC_ROOTS + bs
    argument = diff(X_PAIR, minus)

    f_value = evaluate_expansion(morin_one_part(3, r), argument)
    h_value = evaluate_expansion(a3_two_part(r), argument)

    # (c) first: the sum must vanish identically
    if not (f_value + h_value).is_zero():
        return False

    # (a) exact division by every linear factor of the resultant
    for value in (f_value, h_value):
        quotient = value
        try:
            for a in X_PAIR:
                for m in minus:
                    quotient = quotient.div_exact(a.poly() - m.poly())
        except ValueError:
            return False

    # (b) quotients at empty B against the closed form
    v0 = a3_quotient_v(r)
    u0 = a3_quotient_u(r)
    if v0 != a3_quotient_closed_form(r):
        return False
    if u0 != -1 * v0:
        return False

    # (d) two-row value of the initial I_{2,2} part
    lhs = evaluate_expansion(i22_initial(r), diff(X_PAIR, ()))
    rhs = _x1x2_power(r + 1) * complete(diff(SECOND_SYMMETRIC_ROOTS, ()), r - 1)[r - 1]
    if lhs != rhs:
        return False
    return True
