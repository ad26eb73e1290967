"""Static catalog of singularities: codimensions, local-algebra dimensions,
Chern-root substitution alphabets, Euler-class right-hand sides, and the
restriction-equation systems assembled from them.

The variables in the equations are specialized to Chern roots of cotangent
bundles; the catalog stores each displayed equation verbatim, with two
corrections forced by cross-checks against the published coefficient tables
(the root alphabet of the second symmetric power, and the overall sign of
the I_{2,3} normalizing side).
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Polynomial
from .alphabets import Alphabet, AlphabetDiff, alphabet, b_alphabet, diff, letter, X_PAIR, X_SINGLE
from .partitions import Partition, hook_contained
from .schur import resultant


class UnsupportedSingularityError(ValueError):
    pass


_FAMILIES = ("A", "I", "III")


@dataclass(frozen=True)
class SingularityId:
    """A singularity family member together with the shifted parameter r = k + 1."""

    family: str
    indices: tuple
    r: int

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise UnsupportedSingularityError("unknown family %r" % (self.family,))
        if self.family == "A":
            (i,) = self.indices
            if i < 0 or self.r < 1:
                raise UnsupportedSingularityError("A_i needs i >= 0 and r >= 1")
        else:
            a, b = self.indices
            if not (b >= a >= 2):
                raise UnsupportedSingularityError("%s_{a,b} needs b >= a >= 2" % self.family)
            min_r = 2 if self.family == "III" else 1
            if self.r < min_r:
                raise UnsupportedSingularityError(
                    "%s_{%d,%d} needs r >= %d" % (self.family, a, b, min_r)
                )

    @property
    def name(self):
        return self.family + "".join(str(v) for v in self.indices)

    def __repr__(self):
        return "%s(r=%d)" % (self.name, self.r)


def singularity(name, r):
    """Parse names like "A3", "I22", "III33" into a SingularityId."""
    for family in ("III", "I", "A"):
        if name.startswith(family):
            digits = name[len(family):]
            if not digits.isdigit():
                break
            if family == "A":
                return SingularityId("A", (int(digits),), r)
            if len(digits) != 2:
                raise UnsupportedSingularityError("expected two indices in %r" % name)
            return SingularityId(family, (int(digits[0]), int(digits[1])), r)
    raise UnsupportedSingularityError("cannot parse singularity name %r" % name)


def codim(s):
    """Codimension of the singularity locus: r*i for A_i, r(a+b-1)+1 for
    I_{a,b}, r(a+b-2)+2 for III_{a,b}."""
    if s.family == "A":
        return s.r * s.indices[0]
    a, b = s.indices
    if s.family == "I":
        return s.r * (a + b - 1) + 1
    return s.r * (a + b - 2) + 2


def local_algebra_dim(s):
    """Vector-space dimension of the local algebra; the length bound for
    index partitions is this value minus one."""
    if s.family == "A":
        return s.indices[0] + 1
    a, b = s.indices
    if s.family == "I":
        return a + b
    return a + b - 1


# Chern-root alphabets of the corank-two singularities (minus sides of the
# substitutions).  The first is the root alphabet of the second symmetric
# power of a rank-2 bundle with roots x1, x2.
ROOTS_III22 = alphabet("2x1", "2x2", "x1+x2")
ROOTS_I22 = alphabet("2x1", "2x2")
ROOTS_III23 = alphabet("2x1", "3x2", "x1+x2")
ROOTS_III33 = alphabet("3x1", "3x2", "x1+x2")
ROOTS_III24 = alphabet("2x1", "4x2", "x1+x2")
ROOTS_I23_PLUS = alphabet("2x", "3x")
ROOTS_I23_MINUS = alphabet("5x", "6x")


@dataclass(frozen=True)
class RestrictionEquation:
    """One restriction equation: T_r(substitution) = rhs.

    rhs is zero for vanishing equations and the Euler-class product for the
    normalizing equation.  rhs_stripped is rhs divided by the resultant of
    the substitution alphabets, available whenever that resultant is a
    nonzero polynomial; the solver uses it for the factorized fast path.
    """

    label: str
    substitution: AlphabetDiff
    rhs: Polynomial
    rhs_stripped: Polynomial

    def is_vanishing(self):
        return self.rhs.is_zero()

    def resultant_nonzero(self):
        plus = set(self.substitution.plus.letters)
        return not any(m in plus for m in self.substitution.minus.letters)


def _vanishing(label, plus, minus):
    return RestrictionEquation(label, diff(plus, minus), Polynomial.zero(), Polynomial.zero())


def _scaled_x(c):
    return letter("%dx" % c) if c != 1 else letter("x")


def eq_a_vanishing(i, r):
    """A_i(r): T_r(x - B_{r-1} - (i+1)x) = 0."""
    minus = b_alphabet(r - 1) + _scaled_x(i + 1)
    return _vanishing("A%d" % i, X_SINGLE, minus)


def eq_a_normalizing(i, r):
    """A_i(r): T_r(x - B_{r-1} - (i+1)x) = R(x + 2x + ... + ix, B_{r-1} + (i+1)x)."""
    minus = b_alphabet(r - 1) + _scaled_x(i + 1)
    smaller = Alphabet([_scaled_x(c) for c in range(2, i + 1)])
    stripped = resultant(smaller, minus)
    rhs = resultant(X_SINGLE, minus) * stripped
    return RestrictionEquation("A%d normalizing" % i, diff(X_SINGLE, minus), rhs, stripped)


def eq_i22_vanishing(r):
    return _vanishing("I22", X_PAIR, ROOTS_I22 + b_alphabet(r - 1))


def eq_i22_normalizing(r):
    """I_{2,2}(r): value x1 x2 (x1-2x2)(x2-2x1) R(x1+x2+[x1+x2], B_{r-1})."""
    bs = b_alphabet(r - 1)
    minus = ROOTS_I22 + bs
    x1 = Polynomial.variable("x1")
    x2 = Polynomial.variable("x2")
    head = x1 * x2 * (x1 - 2 * x2) * (x2 - 2 * x1)
    rhs = head * resultant(X_PAIR + letter("x1+x2"), bs)
    stripped = resultant(alphabet("x1+x2"), bs)
    return RestrictionEquation("I22 normalizing", diff(X_PAIR, minus), rhs, stripped)


def eq_i23_vanishing(r):
    return _vanishing("I23", ROOTS_I23_PLUS, ROOTS_I23_MINUS + b_alphabet(r - 1))


def eq_i23_normalizing(r):
    """I_{2,3}(r): value -2x R(2x+3x, 5x+6x+B_{r-1}) prod (4x-b_j)(6x-b_j).

    The sign is fixed so the published tables (T_1 = 2 S_122 + 4 S_23 and
    onward) satisfy the equation; the displayed positive sign contradicts
    them for every r.
    """
    bs = b_alphabet(r - 1)
    minus = ROOTS_I23_MINUS + bs
    x = Polynomial.variable("x")
    tail = resultant(alphabet("4x", "6x"), bs)
    stripped = -2 * x * tail
    rhs = resultant(ROOTS_I23_PLUS, minus) * stripped
    return RestrictionEquation("I23 normalizing", diff(ROOTS_I23_PLUS, minus), rhs, stripped)


def eq_iii22_vanishing(r):
    return _vanishing("III22", X_PAIR, ROOTS_III22 + b_alphabet(r - 2))


def eq_iii22_normalizing(r):
    minus = ROOTS_III22 + b_alphabet(r - 2)
    rhs = resultant(X_PAIR, minus)
    return RestrictionEquation("III22 normalizing", diff(X_PAIR, minus), rhs, Polynomial.one())


def eq_iii23_vanishing(r):
    return _vanishing("III23", X_PAIR, ROOTS_III23 + b_alphabet(r - 2))


def eq_iii23_normalizing(r):
    """III_{2,3}(r): value 2 x2 (x1-x2) R(x1+x2, F+B_{r-2}) prod (2x2-b_j)."""
    bs = b_alphabet(r - 2)
    minus = ROOTS_III23 + bs
    x1 = Polynomial.variable("x1")
    x2 = Polynomial.variable("x2")
    stripped = 2 * x2 * (x1 - x2) * resultant(alphabet("2x2"), bs)
    rhs = resultant(X_PAIR, minus) * stripped
    return RestrictionEquation("III23 normalizing", diff(X_PAIR, minus), rhs, stripped)


def eq_iii24_vanishing(r):
    return _vanishing("III24", X_PAIR, ROOTS_III24 + b_alphabet(r - 2))


def eq_iii33_normalizing(r):
    """III_{3,3}(r): value x1 x2 (3x1-2x2)(3x2-2x1) R(x1+x2, G+B_{r-2})
    prod (2x1-b_j)(2x2-b_j)."""
    bs = b_alphabet(r - 2)
    minus = ROOTS_III33 + bs
    x1 = Polynomial.variable("x1")
    x2 = Polynomial.variable("x2")
    head = x1 * x2 * (3 * x1 - 2 * x2) * (3 * x2 - 2 * x1)
    stripped = head * resultant(alphabet("2x1", "2x2"), bs)
    rhs = resultant(X_PAIR, minus) * stripped
    return RestrictionEquation("III33 normalizing", diff(X_PAIR, minus), rhs, stripped)


_SOLVABLE = ("I22", "A3", "III23", "III33", "I23")


def restriction_system(target):
    """The list of restriction equations characterizing the target, with the
    vanishing equations in catalog order and the normalizing equation last.

    Supported targets: I22, A3 (cross-check), III23, III33, I23.  Equations
    referring to singularities that do not exist at the target's r (the III
    family needs r >= 2) are omitted.
    """
    r = target.r
    name = target.name
    if name not in _SOLVABLE:
        raise UnsupportedSingularityError(
            "no restriction system cataloged for %s" % name
        )
    eqs = []
    if name == "I22":
        eqs += [eq_a_vanishing(i, r) for i in range(4)]
        if r >= 2:
            eqs.append(eq_iii22_vanishing(r))
        eqs.append(eq_i22_normalizing(r))
    elif name == "A3":
        eqs += [eq_a_vanishing(i, r) for i in range(3)]
        if r >= 2:
            eqs.append(eq_iii22_vanishing(r))
        eqs.append(eq_a_normalizing(3, r))
    elif name == "III23":
        eqs += [eq_a_vanishing(i, r) for i in range(4)]
        eqs.append(eq_iii22_vanishing(r))
        eqs.append(eq_iii23_normalizing(r))
    elif name == "III33":
        eqs += [eq_a_vanishing(i, r) for i in range(5)]
        eqs.append(eq_i22_vanishing(r))
        eqs.append(eq_i23_vanishing(r))
        eqs.append(eq_iii22_vanishing(r))
        eqs.append(eq_iii23_vanishing(r))
        eqs.append(eq_iii24_vanishing(r))
        eqs.append(eq_iii33_normalizing(r))
    elif name == "I23":
        eqs += [eq_a_vanishing(i, r) for i in range(4)]
        eqs.append(eq_i22_vanishing(r))
        if r >= 2:
            eqs.append(eq_iii22_vanishing(r))
            eqs.append(eq_iii23_vanishing(r))
        eqs.append(eq_i23_normalizing(r))
    return eqs


def auto_vanishing(partition, eq):
    """True iff S_I at the equation's substitution is identically zero by the
    hook criterion, so the solver can skip the pair without symbolic work."""
    return not hook_contained(
        partition,
        eq.substitution.plus.cardinality,
        eq.substitution.minus.cardinality,
    )


def chern_quotient_coefficients(eq, upto):
    """Degree-by-degree coefficients of the total Chern class quotient
    encoded by the equation's substitution: the degree-i part equals
    (-1)^i S_i(plus - minus)."""
    from .schur import complete

    series = complete(eq.substitution, upto)
    return [s if i % 2 == 0 else -1 * s for i, s in enumerate(series)]
