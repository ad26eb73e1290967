"""Complete and Schur functions of differences of alphabets, resultants,
multi-Schur determinants, and the two-row symmetrizer.

The generating series sum_i S_i(A-B) z^i = prod_{b in B}(1-bz) / prod_{a in A}(1-az)
defines the complete functions; Schur functions are the determinants
|S_{i_q+q-p}|_{p,q} built from them.  Everything here is exact.
"""

from __future__ import annotations

from .algebra import Polynomial, _SHIFT, _MASK, variable_index
from .alphabets import Alphabet, AlphabetDiff, EMPTY_ALPHABET, diff
from .partitions import Partition, SchurExpansion, hook_contained


class ShapeError(ValueError):
    """Partition does not split for the factorization fast path."""


_series_cache = {}


def _elementary_series(letters):
    """Coefficients of prod(1 - a*z) in z, as polynomials (signs included)."""
    coeffs = [Polynomial.one()]
    for a in letters:
        ap = a.poly()
        nxt = [Polynomial.zero()] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] = nxt[i] + c
            nxt[i + 1] = nxt[i + 1] - c * ap
        coeffs = nxt
    return coeffs


def complete(d, upto):
    """The list [S_0, ..., S_upto] of complete functions of a difference.

    S_0 is always 1; callers treat S_i for i < 0 as 0.  Results are cached
    per alphabet pair and extended on demand.
    """
    if upto < 0:
        raise ValueError("upto must be nonnegative")
    key = (d.plus, d.minus)
    state = _series_cache.get(key)
    if state is None:
        num = _elementary_series(d.minus.letters)
        den = _elementary_series(d.plus.letters)
        state = {"num": num, "den": den, "s": [Polynomial.one()]}
        _series_cache[key] = state
    series = state["s"]
    num, den = state["num"], state["den"]
    while len(series) <= upto:
        i = len(series)
        acc = num[i] if i < len(num) else Polynomial.zero()
        for k in range(1, min(i, len(den) - 1) + 1):
            dk = den[k]
            if not dk.is_zero():
                acc = acc - dk * series[i - k]
        series.append(acc)
    return series[: upto + 1]


def jacobi_trudi(indices, d, memo=None):
    """Determinant |S_{i_q + q - p}(d)| for an arbitrary integer index tuple.

    For a genuine partition this is the Schur function; other index tuples
    evaluate through the same determinant (used by straightening identities).
    """
    indices = tuple(int(v) for v in indices)
    s = len(indices)
    if s == 0:
        return Polynomial.one()
    cols = tuple(idx + q for q, idx in enumerate(indices, start=1))
    top = max(cols) - 1
    if top < 0:
        return Polynomial.zero()
    series = complete(d, top)

    def entry(p, c):
        i = c - p
        if i < 0:
            return None
        return series[i]

    if memo is None:
        memo = {}

    def minor(p, columns):
        if len(columns) == 1:
            e = entry(p, columns[0])
            return e if e is not None else Polynomial.zero()
        key = (p, columns)
        cached = memo.get(key)
        if cached is not None:
            return cached
        acc = Polynomial.zero()
        for j, c in enumerate(columns):
            e = entry(p, c)
            if e is None or e.is_zero():
                continue
            rest = columns[:j] + columns[j + 1:]
            term = e * minor(p + 1, rest)
            acc = acc - term if j & 1 else acc + term
        memo[key] = acc
        return acc

    return minor(1, cols)


def schur(partition, d, memo=None):
    """Schur function S_I of a difference of alphabets, exact.

    Vanishes outside the (m, n)-hook for plus and minus cardinalities (m, n);
    that case is short-circuited, the rest goes through the determinant.
    """
    if not isinstance(partition, Partition):
        partition = Partition(partition)
    if not hook_contained(partition, d.plus.cardinality, d.minus.cardinality):
        return Polynomial.zero()
    return jacobi_trudi(partition.parts, d, memo=memo)


def evaluate_expansion(expansion, d):
    """Evaluate sum alpha_I S_I at a difference, sharing minors across terms."""
    memo = {}
    total = Polynomial.zero()
    for p, c in expansion.items():
        value = schur(p, d, memo=memo)
        if not value.is_zero():
            total = total + value * c
    return total


def resultant(a, b):
    """Product of all letter differences prod_(x in a, y in b) (x - y)."""
    out = Polynomial.one()
    for x in a:
        xp = x.poly()
        for y in b:
            out = out * (xp - y.poly())
    return out


def split_for_factorization(partition, m, n):
    """Split I = (J, i_1+n, ..., i_m+n) for the factorization property.

    Returns (top partition of m rows with n removed, J).  Raises ShapeError
    when the top m parts are not all >= n.
    """
    parts = partition.padded(max(partition.length, m))
    top, rest = parts[len(parts) - m:], parts[: len(parts) - m]
    if any(v < n for v in top):
        raise ShapeError(
            "top %d parts of %r are not all >= %d" % (m, partition.parts, n)
        )
    return Partition(v - n for v in top), Partition(rest)


def schur_factorized(partition, d):
    """S_I(A_m - B_n) computed as S_top(A_m) * R(A_m, B_n) * S_J(-B_n).

    Requires the top m parts of I to be at least n; otherwise ShapeError is
    raised and the caller falls back to the determinant.
    """
    if not isinstance(partition, Partition):
        partition = Partition(partition)
    m, n = d.plus.cardinality, d.minus.cardinality
    top, rest = split_for_factorization(partition, m, n)
    value = schur(top, diff(d.plus, ()))
    value = value * resultant(d.plus, d.minus)
    return value * schur(rest, diff((), d.minus))


def multi_schur(indices, diffs, memo=None):
    """Multi-Schur determinant |S_{i_q+q-p}(diffs[q])| with one difference
    per column of the determinant.

    The single-difference case collapses to the ordinary Schur determinant.
    Use repeated entries in diffs for the block (semicolon) convention.
    """
    if isinstance(indices, Partition):
        indices = indices.parts
    indices = tuple(int(v) for v in indices)
    s = len(indices)
    if len(diffs) != s:
        raise ValueError("need one alphabet difference per index entry")
    if s == 0:
        return Polynomial.one()
    cols = tuple(idx + q for q, idx in enumerate(indices, start=1))
    top = max(cols) - 1
    if top < 0:
        return Polynomial.zero()
    serieses = [complete(dq, top) if top >= 0 else [] for dq in diffs]

    def entry(p, j):
        i = cols[j] - p
        if i < 0:
            return None
        return serieses[j][i]

    if memo is None:
        memo = {}

    def minor(p, columns):
        if len(columns) == 1:
            e = entry(p, columns[0])
            return e if e is not None else Polynomial.zero()
        key = (p, columns)
        cached = memo.get(key)
        if cached is not None:
            return cached
        acc = Polynomial.zero()
        for idx, j in enumerate(columns):
            e = entry(p, j)
            if e is None or e.is_zero():
                continue
            rest = columns[:idx] + columns[idx + 1:]
            term = e * minor(p + 1, rest)
            acc = acc - term if idx & 1 else acc + term
        memo[key] = acc
        return acc

    return minor(1, tuple(range(s)))


_X1_SHIFT = _SHIFT[variable_index("x1")]
_X2_SHIFT = _SHIFT[variable_index("x2")]


def schur_symmetrize(p):
    """Image of a polynomial in x1, x2 under the symmetrizing endomorphism
    sending x1^j x2^i to the two-row S_{i,j}.

    Index pairs with i > j are straightened through the two-row determinant:
    (i, i-1) cancels and (i, j) with i > j+1 flips sign to (j+1, i-1).
    """
    extra = p.variables_used() - {"x1", "x2"}
    if extra:
        raise ValueError("polynomial must involve x1, x2 only; found %s" % sorted(extra))
    out = {}
    for key, c in p.terms.items():
        j = (key >> _X1_SHIFT) & _MASK
        i = (key >> _X2_SHIFT) & _MASK
        if i <= j:
            idx, sign = (i, j), 1
        elif i == j + 1:
            continue
        else:
            idx, sign = (j + 1, i - 1), -1
        part = Partition(idx)
        out[part] = out.get(part, 0) + sign * c
    return SchurExpansion(out)


def symmetrizer_oracle(p):
    """The defining rational expression (x1*f(x1,x2) - x2*f(x2,x1)) / (x1 - x2),
    divided exactly; used to cross-check schur_symmetrize."""
    x1 = Polynomial.variable("x1")
    x2 = Polynomial.variable("x2")
    swapped = {}
    for key, c in p.terms.items():
        j = (key >> _X1_SHIFT) & _MASK
        i = (key >> _X2_SHIFT) & _MASK
        nk = key - (j << _X1_SHIFT) - (i << _X2_SHIFT) + (i << _X1_SHIFT) + (j << _X2_SHIFT)
        swapped[nk] = c
    numerator = x1 * p - x2 * Polynomial(swapped)
    return numerator.div_exact(x1 - x2)


def resultant_sum_identity(coeff_alphabet, x_letter, b):
    """Check F(A, x-B) = R(x + A*x, B) for a numeric alphabet A.

    The left side is the hook-indexed double sum
    sum_{I in (n^m)} S_I(A) * S_{n-i_m, ..., n-i_1, n+|I|}(x - B); the right
    side multiplies every letter of A (a constant) into x and takes the
    resultant with B.
    """
    from .partitions import partitions_in_box

    m = coeff_alphabet.cardinality
    n = b.cardinality
    for a in coeff_alphabet:
        if not a.is_constant():
            raise ValueError("coefficient alphabet must consist of constant letters")
    arg = diff(Alphabet([x_letter]), b)
    numeric = diff(coeff_alphabet, ())
    memo = {}
    total = Polynomial.zero()
    for box_partition in partitions_in_box(n, m):
        coeff = schur(box_partition, numeric).constant_value()
        if coeff == 0:
            continue
        padded = box_partition.padded(m)
        index = tuple(n - v for v in reversed(padded)) + (n + box_partition.weight,)
        total = total + coeff * jacobi_trudi(index, arg, memo=memo)
    scaled = Alphabet([x_letter] + [x_letter.scaled(a.const) for a in coeff_alphabet])
    return total == resultant(scaled, b)
