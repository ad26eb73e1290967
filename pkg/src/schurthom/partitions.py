"""Partitions, diagram containment, hook tests, and Schur-indexed expansions.

Partitions are stored weakly increasing with no zero parts, matching the
index convention S_{1,3,3,4,5} used throughout the catalog.  All values are
immutable; every operation is a pure function.
"""

from __future__ import annotations

from itertools import combinations_with_replacement


class Partition:
    """Weakly increasing tuple of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts=()):
        cleaned = []
        for v in parts:
            v = int(v)
            if v < 0:
                raise ValueError("negative part %d" % v)
            if v:
                cleaned.append(v)
        cleaned.sort()
        self.parts = tuple(cleaned)

    @property
    def weight(self):
        return sum(self.parts)

    @property
    def length(self):
        return len(self.parts)

    def padded(self, length):
        """Parts padded with leading zeros to the given length."""
        if length < len(self.parts):
            raise ValueError("cannot pad to shorter length")
        return (0,) * (length - len(self.parts)) + self.parts

    def sort_key(self):
        # graded-lex: weight first, then the weakly increasing tuple
        return (self.weight, self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self):
        return hash(self.parts)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __le__(self, other):
        return self.sort_key() <= other.sort_key()

    def __repr__(self):
        return "Partition%r" % (self.parts,)


EMPTY = Partition()


def conjugate(p):
    """Transpose the diagram: row q of the result is column q of p."""
    if not p.parts:
        return EMPTY
    largest = p.parts[-1]
    cols = [0] * largest
    for part in p.parts:
        for i in range(part):
            cols[i] += 1
    # cols is weakly decreasing by construction
    return Partition(reversed(cols))


def contains(inner, outer):
    """True iff the diagram of inner fits inside the diagram of outer.

    Diagrams are aligned at the largest parts: inner (i_1..i_s) is contained
    in outer (j_1..j_t) iff i_{s-p} <= j_{t-p} for every p >= 0.
    """
    a, b = inner.parts, outer.parts
    if len(a) > len(b):
        return False
    for p in range(1, len(a) + 1):
        if a[-p] > b[-p]:
            return False
    return True


def hook_contained(p, m, n):
    """True iff the diagram of p fits in the hook with leg m and arm n.

    Equivalently, at most m parts of p exceed n.
    """
    if m < 0 or n < 0:
        raise ValueError("hook parameters must be nonnegative")
    over = 0
    for part in reversed(p.parts):
        if part <= n:
            break
        over += 1
    return over <= m


def enumerate_candidates(weight, rect_width, rect_height, max_length, second_row_cap=None):
    """All partitions of the given weight containing the rectangle
    rect_width^rect_height, with at most max_length parts.

    When second_row_cap is given, at most two parts may exceed the cap (the
    second row of the diagram padded to max_length rows stays within the cap).
    Output is strictly increasing in graded-lex order and duplicate-free.
    Unsatisfiable constraints yield an empty list.
    """
    if rect_width < 0 or rect_height < 0:
        raise ValueError("rectangle sides must be nonnegative")
    if weight < rect_width * rect_height:
        return []
    if rect_height > max_length:
        return []

    rect = Partition([rect_width] * rect_height)
    found = []

    def descend(remaining, max_part, acc):
        if remaining == 0:
            p = Partition(reversed(acc))
            if contains(rect, p):
                found.append(p)
            return
        if len(acc) == max_length:
            return
        # parts generated largest first
        lo = -(-remaining // (max_length - len(acc)))  # ceil, smallest feasible part
        for part in range(min(max_part, remaining), lo - 1, -1):
            acc.append(part)
            descend(remaining - part, part, acc)
            acc.pop()

    descend(weight, weight, [])
    if second_row_cap is not None:
        found = [
            p for p in found
            if sum(1 for part in p.parts if part > second_row_cap) <= 2
        ]
    found.sort(key=Partition.sort_key)
    return found


def partitions_in_box(width, height):
    """All partitions with at most `height` parts, each at most `width`,
    padded views included implicitly (zero parts are dropped)."""
    out = []
    for combo in combinations_with_replacement(range(width + 1), height):
        out.append(Partition(combo))
    return out


class SchurExpansion:
    """Finite integer combination of Schur functions, keyed by partition.

    Zero coefficients are never stored.  Iteration follows graded-lex order
    on the index partitions, so serialization is deterministic.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for p, c in dict(terms).items():
                if not isinstance(p, Partition):
                    p = Partition(p)
                if c:
                    clean[p] = c
        self.terms = clean

    @staticmethod
    def single(parts, coeff=1):
        return SchurExpansion({Partition(parts): coeff})

    @staticmethod
    def zero():
        return SchurExpansion()

    def items(self):
        return [(p, self.terms[p]) for p in sorted(self.terms, key=Partition.sort_key)]

    def partitions(self):
        return sorted(self.terms, key=Partition.sort_key)

    def coefficient(self, p):
        if not isinstance(p, Partition):
            p = Partition(p)
        return self.terms.get(p, 0)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return isinstance(other, SchurExpansion) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for p, c in other.terms.items():
            s = out.get(p, 0) + c
            if s:
                out[p] = s
            else:
                del out[p]
        return SchurExpansion(out)

    def __sub__(self, other):
        out = dict(self.terms)
        for p, c in other.terms.items():
            s = out.get(p, 0) - c
            if s:
                out[p] = s
            else:
                out.pop(p, None)
        return SchurExpansion(out)

    def __mul__(self, scalar):
        if scalar == 0:
            return SchurExpansion()
        return SchurExpansion({p: c * scalar for p, c in self.terms.items()})

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def common_weight(self):
        """The shared weight of all index partitions, or None if mixed/empty."""
        weights = {p.weight for p in self.terms}
        if len(weights) == 1:
            return weights.pop()
        return None

    def max_length(self):
        return max((p.length for p in self.terms), default=0)

    def coefficient_sum(self):
        return sum(self.terms.values())

    def __repr__(self):
        if not self.terms:
            return "SchurExpansion(0)"
        bits = ["%d*S%r" % (c, p.parts) for p, c in self.items()]
        return "SchurExpansion(%s)" % " + ".join(bits)


def add_column(height, expansion):
    """Add one column of the given height to every index partition.

    Index partitions are padded with zero parts to the given height, then
    every part grows by one; coefficients are unchanged.  Partitions longer
    than the column height are rejected.
    """
    out = {}
    for p, c in expansion.terms.items():
        if p.length > height:
            raise ValueError(
                "partition %r is longer than the column height %d" % (p.parts, height)
            )
        grown = Partition(v + 1 for v in p.padded(height))
        out[grown] = out.get(grown, 0) + c
    return SchurExpansion(out)


def h_part(expansion, h, offset):
    """Sub-expansion over partitions containing (offset+h)^h but not
    (offset+h+1)^(h+1)."""
    if offset < 0:
        raise ValueError("offset must be nonnegative")
    inner = Partition([offset + h] * h)
    outer = Partition([offset + h + 1] * (h + 1))
    picked = {
        p: c
        for p, c in expansion.terms.items()
        if contains(inner, p) and not contains(outer, p)
    }
    return SchurExpansion(picked)
