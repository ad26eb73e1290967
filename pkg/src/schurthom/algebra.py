"""Exact sparse multivariate polynomials over Z and fraction-free linear solving.

Every coefficient is a Python int, so there is no overflow and no floating
point anywhere.  Monomials are packed into a single integer key (a fixed bit
field per variable), which makes multiplication a dict convolution with plain
integer key addition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

# Fixed, interned variable universe.  The order is the graded-lex tie-break
# order used for canonical serialization: x < x1 < x2 < b1 < ... < y1 < ... < z < t.
VARIABLES = (
    ("x", "x1", "x2")
    + tuple("b%d" % j for j in range(1, 17))
    + tuple("y%d" % j for j in range(1, 17))
    + ("z", "t")
)

_INDEX = {name: i for i, name in enumerate(VARIABLES)}
_NVARS = len(VARIABLES)
_BITS = 12  # per-variable exponent field; all degrees here stay far below 4096
_MASK = (1 << _BITS) - 1

# Variable i occupies a field whose significance decreases with i, so plain
# integer comparison of packed keys is lexicographic comparison with x first.
_SHIFT = tuple((_NVARS - 1 - i) * _BITS for i in range(_NVARS))
_VARKEY = tuple(1 << s for s in _SHIFT)


def variable_index(name):
    try:
        return _INDEX[name]
    except KeyError:
        raise KeyError("unknown variable %r; universe is %s" % (name, VARIABLES))


def _unpack(key):
    return tuple((key >> s) & _MASK for s in _SHIFT)


def _pack(exps):
    key = 0
    for i, e in enumerate(exps):
        if e:
            key += e << _SHIFT[i]
    return key


def monomial_degree(key):
    deg = 0
    while key:
        deg += key & _MASK
        key >>= _BITS
    return deg


def _grlex(key):
    # sort key for graded-lex order, largest first when used with reverse=True
    return (monomial_degree(key), key)


class Polynomial:
    """Immutable sparse polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        # terms maps packed monomial -> nonzero int coefficient; the dict is
        # owned by the instance and must not be mutated afterwards.
        self.terms = terms or {}

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero():
        return _ZERO

    @staticmethod
    def one():
        return _ONE

    @staticmethod
    def integer(c):
        if c == 0:
            return _ZERO
        return Polynomial({0: c})

    @staticmethod
    def variable(name):
        return Polynomial({_VARKEY[variable_index(name)]: 1})

    @staticmethod
    def monomial(exponents, coeff=1):
        """Build coeff * prod(var**e) from a {name: exponent} mapping."""
        if coeff == 0:
            return _ZERO
        key = 0
        for name, e in exponents.items():
            if e < 0:
                raise ValueError("negative exponent for %s" % name)
            key += e << _SHIFT[variable_index(name)]
        return Polynomial({key: coeff})

    @staticmethod
    def linear_form(coeffs, const=0):
        """Integer linear combination of variables plus a constant."""
        terms = {}
        for name, c in coeffs.items():
            if c:
                terms[_VARKEY[variable_index(name)]] = c
        if const:
            terms[0] = const
        return Polynomial(terms)

    # -- predicates and views ----------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("polynomial is not constant: %s" % self)
        return self.terms.get(0, 0)

    def total_degree(self):
        if not self.terms:
            return 0
        return max(monomial_degree(k) for k in self.terms)

    def variables_used(self):
        used = set()
        for key in self.terms:
            i = 0
            while key:
                if key & _MASK:
                    used.add(VARIABLES[_NVARS - 1 - i])
                key >>= _BITS
                i += 1
        return used

    def sorted_terms(self):
        """Terms as (exponent tuple, coeff), graded-lex with the largest first."""
        keys = sorted(self.terms, key=_grlex, reverse=True)
        return [(_unpack(k), self.terms[k]) for k in keys]

    def __eq__(self, other):
        if isinstance(other, int):
            return self.is_constant() and self.terms.get(0, 0) == other
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.integer(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial.integer(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) - c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return Polynomial(out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return _ZERO
            if other == 1:
                return self
            return Polynomial({k: c * other for k, c in self.terms.items()})
        a, b = self.terms, other.terms
        if not a or not b:
            return _ZERO
        if len(a) > len(b):
            a, b = b, a
        out = {}
        get = out.get
        bitems = list(b.items())
        for ka, ca in a.items():
            for kb, cb in bitems:
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        return Polynomial({k: c for k, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- substitution and evaluation -----------------------------------------

    def substitute(self, name, value):
        """Replace one variable by a polynomial, exactly."""
        shift = _SHIFT[variable_index(name)]
        field = _MASK << shift
        grouped = {}
        for key, c in self.terms.items():
            e = (key >> shift) & _MASK
            grouped.setdefault(e, {})[key & ~field] = c
        if not grouped:
            return _ZERO
        powers = [_ONE]
        for _ in range(max(grouped)):
            powers.append(powers[-1] * value)
        out = _ZERO
        for e, terms in grouped.items():
            out = out + Polynomial(terms) * powers[e]
        return out

    def eval_int(self, assignment):
        """Evaluate at integer values; every used variable must be assigned."""
        vals = {}
        for name, v in assignment.items():
            vals[variable_index(name)] = v
        total = 0
        for key, c in self.terms.items():
            term = c
            i = _NVARS - 1
            k = key
            while k:
                e = k & _MASK
                if e:
                    term *= vals[i] ** e
                k >>= _BITS
                i -= 1
            total += term
        return total

    # -- exact division --------------------------------------------------------

    def div_exact(self, divisor):
        """Exact quotient self/divisor; raises ValueError if not divisible."""
        if isinstance(divisor, int):
            divisor = Polynomial.integer(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if divisor.is_constant():
            c = divisor.constant_value()
            out = {}
            for k, v in self.terms.items():
                q, r = divmod(v, c)
                if r:
                    raise ValueError("inexact constant division")
                out[k] = q
            return Polynomial(out)
        if len(divisor.terms) == 1:
            (dk, dc), = divisor.terms.items()
            out = {}
            for k, v in self.terms.items():
                q, r = divmod(v, dc)
                if r:
                    raise ValueError("inexact monomial division")
                nk = k - dk
                if nk < 0 or any(x > y for x, y in zip(_unpack(dk), _unpack(k))):
                    raise ValueError("monomial does not divide")
                out[nk] = q
            return Polynomial(out)
        return _div_general(self, divisor)

    # -- display ---------------------------------------------------------------

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps, c in self.sorted_terms():
            factors = []
            for i, e in enumerate(exps):
                if e == 1:
                    factors.append(VARIABLES[i])
                elif e:
                    factors.append("%s^%d" % (VARIABLES[i], e))
            body = "*".join(factors)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append("%d*%s" % (c, body))
        s = " + ".join(parts)
        return s.replace("+ -", "- ")


_ZERO = Polynomial({})
_ONE = Polynomial({0: 1})


def _leading(poly):
    key = max(poly.terms, key=_grlex)
    return key, poly.terms[key]


def _div_general(p, divisor):
    # multivariate exact division by leading-term reduction (graded-lex);
    # raises ValueError unless the remainder is exactly zero
    dk, dc = _leading(divisor)
    dexp = _unpack(dk)
    rem = dict(p.terms)
    quot = {}
    while rem:
        k = max(rem, key=_grlex)
        c = rem[k]
        kexp = _unpack(k)
        if any(a < b for a, b in zip(kexp, dexp)):
            raise ValueError("not divisible (leading monomial mismatch)")
        q, r = divmod(c, dc)
        if r:
            raise ValueError("not divisible (coefficient %d by %d)" % (c, dc))
        mk = k - dk
        quot[mk] = quot.get(mk, 0) + q
        for tk, tc in divisor.terms.items():
            nk = mk + tk
            s = rem.get(nk, 0) - q * tc
            if s:
                rem[nk] = s
            else:
                rem.pop(nk, None)
    return Polynomial({k: c for k, c in quot.items() if c})


def determinant(grid):
    """Determinant of a square grid of polynomials, by minor expansion."""
    n = len(grid)
    for row in grid:
        if len(row) != n:
            raise ValueError("grid is not square")
    if n == 0:
        return Polynomial.one()

    memo = {}

    def minor(row, cols):
        if len(cols) == 1:
            return grid[row][cols[0]]
        key = (row, cols)
        found = memo.get(key)
        if found is not None:
            return found
        acc = Polynomial.zero()
        for j, c in enumerate(cols):
            entry = grid[row][c]
            if entry.is_zero():
                continue
            rest = cols[:j] + cols[j + 1:]
            sub = entry * minor(row + 1, rest)
            acc = acc - sub if j & 1 else acc + sub
        memo[key] = acc
        return acc

    return minor(0, tuple(range(n)))


def taylor_coeffs(numerator, denominator, n):
    """First n coefficients of the power series numerator/denominator in z.

    Both arguments are polynomials in the single variable z.  The constant
    term of the denominator must be nonzero, and the requested coefficients
    must come out integral (they always do for the series used here).
    """
    for p in (numerator, denominator):
        extra = p.variables_used() - {"z"}
        if extra:
            raise ValueError("series arguments must be polynomials in z only, got %s" % sorted(extra))
    zshift = _SHIFT[variable_index("z")]

    def coeffs_list(p):
        out = {}
        for key, c in p.terms.items():
            out[(key >> zshift) & _MASK] = c
        return out

    num = coeffs_list(numerator)
    den = coeffs_list(denominator)
    d0 = den.get(0, 0)
    if d0 == 0:
        raise ValueError("denominator has zero constant term")
    maxden = max(den) if den else 0
    out = []
    for i in range(n):
        acc = Fraction(num.get(i, 0))
        for k in range(1, min(i, maxden) + 1):
            dk = den.get(k, 0)
            if dk:
                acc -= dk * out[i - k]
        acc = acc / d0
        out.append(acc)
    result = []
    for i, c in enumerate(out):
        if c.denominator != 1:
            raise ValueError("series coefficient %d is not an integer: %s" % (i, c))
        result.append(int(c))
    return result


# -- exact integer linear systems ---------------------------------------------


class ExactSolveError(Exception):
    """Base class for failures of the exact linear solver."""


class UnderdeterminedError(ExactSolveError):
    def __init__(self, rank, unknowns, free):
        self.rank = rank
        self.free = free
        super().__init__(
            "rank %d < %d unknowns; undetermined: %s" % (rank, unknowns, free)
        )


class InconsistentError(ExactSolveError):
    pass


class NonIntegralError(ExactSolveError):
    pass


@dataclass
class LinearSystem:
    """Integer matrix, right-hand side, and the partition labels of the unknowns."""

    rows: list
    rhs: list
    unknowns: list

    def __post_init__(self):
        n = len(self.unknowns)
        for row in self.rows:
            if len(row) != n:
                raise ValueError("row length %d != %d unknowns" % (len(row), n))
        if len(self.rhs) != len(self.rows):
            raise ValueError("rhs length mismatch")


def _fraction_free_echelon(aug, ncols):
    """Bareiss-style fraction-free elimination on augmented integer rows.

    Mutates aug in place into echelon form and returns the pivot columns.
    Every internal division is exact and asserted.
    """
    m = len(aug)
    pivots = []
    prev = 1
    r = 0
    for col in range(ncols):
        best = -1
        for i in range(r, m):
            v = aug[i][col]
            if v != 0 and (best < 0 or abs(v) < abs(aug[best][col])):
                best = i
        if best < 0:
            continue
        if best != r:
            aug[r], aug[best] = aug[best], aug[r]
        piv_row = aug[r]
        piv = piv_row[col]
        for i in range(r + 1, m):
            row = aug[i]
            f = row[col]
            for j in range(col, len(row)):
                num = piv * row[j] - f * piv_row[j]
                q, rem = divmod(num, prev)
                assert rem == 0, "fraction-free elimination produced an inexact division"
                row[j] = q
        pivots.append(col)
        prev = piv
        r += 1
        if r == m:
            break
    return pivots


def integer_rank(rows):
    """Rank of an integer matrix (no right-hand side)."""
    if not rows:
        return 0
    aug = [list(r) for r in rows]
    return len(_fraction_free_echelon(aug, len(aug[0])))


def solve_exact(system):
    """Solve an integer linear system exactly.

    Returns {unknown_label: int}.  Raises UnderdeterminedError when the rank
    is below the number of unknowns, InconsistentError when no solution
    exists, and NonIntegralError when the unique rational solution is not
    integral.  The solution is re-substituted into every original row; any
    nonzero residual raises InconsistentError.
    """
    n = len(system.unknowns)
    if len(system.rows) < n:
        raise UnderdeterminedError(len(system.rows), n, list(system.unknowns))
    aug = [list(row) + [b] for row, b in zip(system.rows, system.rhs)]
    pivots = _fraction_free_echelon(aug, n)
    rank = len(pivots)
    for i in range(rank, len(aug)):
        if aug[i][n] != 0:
            raise InconsistentError("equation reduces to 0 = %d" % aug[i][n])
    if rank < n:
        free_cols = sorted(set(range(n)) - set(pivots))
        raise UnderdeterminedError(rank, n, [system.unknowns[c] for c in free_cols])

    values = [Fraction(0)] * n
    for i in range(rank - 1, -1, -1):
        col = pivots[i]
        row = aug[i]
        acc = Fraction(row[n])
        for j in range(col + 1, n):
            if row[j]:
                acc -= row[j] * values[j]
        values[col] = acc / row[col]

    solution = {}
    for label, v in zip(system.unknowns, values):
        if v.denominator != 1:
            raise NonIntegralError("coefficient of %s is %s" % (label, v))
        solution[label] = int(v)

    ints = [solution[label] for label in system.unknowns]
    for row, b in zip(system.rows, system.rhs):
        acc = 0
        for a, v in zip(row, ints):
            if a:
                acc += a * v
        if acc != b:
            raise InconsistentError("residual %d != 0 after back-substitution" % (acc - b))
    return solution
