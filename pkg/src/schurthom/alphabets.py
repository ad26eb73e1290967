"""Alphabets of letters, where each letter is an integer linear form.

A letter is a single formal variable that stands for an integer linear
combination of named variables plus an integer constant (so "2x1", "x1+x2",
or the bare number 3 are all single letters).  An alphabet is a finite
multiset of letters; only cardinalities and the letters' values matter.
"""

from __future__ import annotations

import re

from .algebra import Polynomial, variable_index


class Letter:
    """One letter: an integer linear form in the fixed variable universe."""

    __slots__ = ("coeffs", "const", "_poly")

    def __init__(self, coeffs=None, const=0):
        items = []
        if coeffs:
            for name, c in coeffs.items():
                variable_index(name)  # validates the name
                if c:
                    items.append((name, int(c)))
        items.sort(key=lambda nc: variable_index(nc[0]))
        self.coeffs = tuple(items)
        self.const = int(const)
        self._poly = None

    def poly(self):
        if self._poly is None:
            self._poly = Polynomial.linear_form(dict(self.coeffs), self.const)
        return self._poly

    def is_constant(self):
        return not self.coeffs

    def scaled(self, factor):
        return Letter({n: c * factor for n, c in self.coeffs}, self.const * factor)

    def __eq__(self, other):
        return (
            isinstance(other, Letter)
            and self.coeffs == other.coeffs
            and self.const == other.const
        )

    def __hash__(self):
        return hash((self.coeffs, self.const))

    def _key(self):
        return (self.coeffs, self.const)

    def __lt__(self, other):
        return self._key() < other._key()

    def __repr__(self):
        bits = []
        for name, c in self.coeffs:
            if c == 1:
                bits.append(name)
            elif c == -1:
                bits.append("-" + name)
            else:
                bits.append("%d%s" % (c, name))
        if self.const or not bits:
            bits.append(str(self.const))
        s = "+".join(bits).replace("+-", "-")
        return s


_TERM_RE = re.compile(r"([+-]?)\s*(\d*)\s*([A-Za-z][A-Za-z0-9]*)?")


def letter(text):
    """Parse a letter from text like "2x1", "x1+x2", "-x+3", or "5"."""
    if isinstance(text, Letter):
        return text
    if isinstance(text, int):
        return Letter(const=text)
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty letter")
    coeffs = {}
    const = 0
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError("cannot parse letter %r at position %d" % (text, pos))
        sign, digits, name = m.groups()
        if not digits and not name:
            raise ValueError("cannot parse letter %r at position %d" % (text, pos))
        value = int(digits) if digits else 1
        if sign == "-":
            value = -value
        if name:
            variable_index(name)
            coeffs[name] = coeffs.get(name, 0) + value
        else:
            const += value
        pos = m.end()
    return Letter(coeffs, const)


class Alphabet:
    """Finite multiset of letters, stored in a canonical order."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        items = [letter(v) for v in letters]
        items.sort(key=Letter._key)
        self.letters = tuple(items)

    @property
    def cardinality(self):
        return len(self.letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __add__(self, other):
        if isinstance(other, Letter):
            return Alphabet(self.letters + (other,))
        return Alphabet(self.letters + other.letters)

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return "Alphabet(%s)" % ", ".join(repr(v) for v in self.letters)


EMPTY_ALPHABET = Alphabet()


def alphabet(*letters_):
    return Alphabet(letters_)


class AlphabetDiff:
    """Formal difference plus - minus of two alphabets.

    No cancellation is performed on construction; the cancellation property
    is a theorem about the evaluated Schur functions, not a storage rule.
    """

    __slots__ = ("plus", "minus")

    def __init__(self, plus=EMPTY_ALPHABET, minus=EMPTY_ALPHABET):
        if not isinstance(plus, Alphabet):
            plus = Alphabet(plus)
        if not isinstance(minus, Alphabet):
            minus = Alphabet(minus)
        self.plus = plus
        self.minus = minus

    def __eq__(self, other):
        return (
            isinstance(other, AlphabetDiff)
            and self.plus == other.plus
            and self.minus == other.minus
        )

    def __hash__(self):
        return hash((self.plus, self.minus))

    def negated(self):
        return AlphabetDiff(self.minus, self.plus)

    def __repr__(self):
        return "AlphabetDiff(plus=%r, minus=%r)" % (self.plus, self.minus)


def diff(plus=(), minus=()):
    return AlphabetDiff(
        plus if isinstance(plus, Alphabet) else Alphabet(plus),
        minus if isinstance(minus, Alphabet) else Alphabet(minus),
    )


def b_alphabet(count, start=1):
    """The symbolic alphabet b_start .. b_{start+count-1}."""
    if count < 0:
        raise ValueError("negative cardinality")
    return Alphabet([letter("b%d" % j) for j in range(start, start + count)])


# Frequently used alphabets over the fixed universe.
X_SINGLE = alphabet("x")
X_PAIR = alphabet("x1", "x2")
