"""Text and JSON serialization of Schur expansions.

Text follows the compact index convention: parts are concatenated digits
when all are below ten ("4S_37"), and joined by commas in braces otherwise
("127S_{8,14}").  JSON encodes coefficients as decimal strings so consumers
never need a fixed integer width.
"""

from __future__ import annotations

import json
import re

from .partitions import Partition, SchurExpansion


def partition_text(p):
    if not p.parts:
        return "0"
    if all(v < 10 for v in p.parts):
        return "".join(str(v) for v in p.parts)
    return "{%s}" % ",".join(str(v) for v in p.parts)


def expansion_text(expansion):
    if expansion.is_zero():
        return "0"
    bits = []
    for p, c in expansion.items():
        body = "S_%s" % partition_text(p)
        if c == 1:
            term = body
        elif c == -1:
            term = "-" + body
        else:
            term = "%d%s" % (c, body)
        bits.append(term)
    out = bits[0]
    for term in bits[1:]:
        if term.startswith("-"):
            out += " - " + term[1:]
        else:
            out += " + " + term
    return out


_TERM_RE = re.compile(
    r"([+-]?)\s*(\d*)\s*S_(?:\{([0-9,\s]+)\}|([0-9]+))\s*"
)


def parse_expansion_text(text):
    """Parse the text rendering back into an expansion (round-trip inverse)."""
    s = text.strip()
    if s == "0":
        return SchurExpansion()
    out = {}
    pos = 0
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError("cannot parse expansion at %r" % s[pos:pos + 20])
        sign, digits, braced, compact = m.groups()
        coeff = int(digits) if digits else 1
        if sign == "-":
            coeff = -coeff
        if braced is not None:
            parts = [int(v) for v in braced.replace(" ", "").split(",") if v]
        elif compact == "0":
            parts = []
        else:
            parts = [int(ch) for ch in compact]
        p = Partition(parts)
        out[p] = out.get(p, 0) + coeff
        pos = m.end()
    return SchurExpansion(out)


def expansion_json(expansion, singularity_name, r, codim_value):
    """The wire schema: coefficients as decimal strings."""
    return {
        "singularity": singularity_name,
        "r": r,
        "codim": codim_value,
        "terms": [
            {"partition": list(p.parts), "coeff": str(c)}
            for p, c in expansion.items()
        ],
    }


def expansion_json_text(expansion, singularity_name, r, codim_value):
    return json.dumps(expansion_json(expansion, singularity_name, r, codim_value))


def parse_expansion_json(text):
    data = json.loads(text)
    out = {}
    for term in data["terms"]:
        p = Partition(term["partition"])
        out[p] = out.get(p, 0) + int(term["coeff"])
    return SchurExpansion(out), data
