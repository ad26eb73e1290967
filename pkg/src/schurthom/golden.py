"""Golden coefficient tables and their loader.

Each table file stores one expansion: directive lines (singularity, r,
optional tail and suspect flags), then one term per line as
"coefficient<TAB>comma-separated parts" with '#' comments.  Tables whose
printed form ends in a recursive column-adding tail store only the printed
terms plus a tail directive; the loader expands the tail from the lower-r
builtin table, so a loaded table is always a complete flat expansion.

Every loaded term must have weight equal to the codimension (a transcription
tripwire).  The one table that fails that check as printed is shipped as
printed and flagged suspect; it loads only on request.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass
from pathlib import Path

from .catalog import SingularityId, codim, local_algebra_dim, singularity
from .partitions import Partition, SchurExpansion, add_column


class GoldenTableError(ValueError):
    pass


@dataclass(frozen=True)
class GoldenTable:
    singularity: SingularityId
    expansion: SchurExpansion
    source: str
    suspect: bool = False


# Builtin table names; section-example tables carry the family name, the
# appendix tables keep their appendix numbering.
BUILTIN_TABLES = (
    "III33-r2",
    "III33-r3",
    "appendix1-r4",
    "appendix1-r5",
    "appendix1-r6",
    "appendix1-r7",
    "appendix1-r8",
    "I23-r1",
    "I23-r2",
    "I23-r3",
    "appendix2-r4",
    "appendix2-r5",
    "appendix2-r6",
    "appendix2-r7",
)

_TAIL_SOURCES = {}
for _name in BUILTIN_TABLES:
    _family = "III33" if ("III33" in _name or "appendix1" in _name) else "I23"
    _r = int(_name.rsplit("r", 1)[1])
    _TAIL_SOURCES[(_family, _r)] = _name


def builtin_names():
    return list(BUILTIN_TABLES)


def _builtin_text(name):
    if name not in BUILTIN_TABLES:
        raise GoldenTableError("unknown builtin table %r" % name)
    resource = importlib.resources.files("schurthom").joinpath("data/golden/%s.txt" % name)
    return resource.read_text()


def _parse_lines(text, origin):
    family = None
    r = None
    tail_r = None
    suspect = False
    source = origin
    terms = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "singularity":
            family = fields[1]
        elif fields[0] == "r":
            r = int(fields[1])
        elif fields[0] == "tail":
            tail_r = int(fields[1])
        elif fields[0] == "suspect":
            suspect = True
        elif fields[0] == "source":
            source = line.split(None, 1)[1]
        else:
            try:
                coeff = int(fields[0])
                parts = [int(v) for v in fields[1].split(",") if v]
            except (IndexError, ValueError):
                raise GoldenTableError(
                    "%s line %d: expected 'coeff<TAB>parts', got %r" % (origin, lineno, raw)
                )
            p = Partition(parts)
            if p in terms:
                raise GoldenTableError(
                    "%s line %d: duplicate partition %s" % (origin, lineno, p.parts)
                )
            terms[p] = coeff
    if family is None or r is None:
        raise GoldenTableError("%s: missing singularity/r directives" % origin)
    return family, r, tail_r, suspect, source, terms


def load_golden(name_or_path, allow_suspect=False):
    """Load a builtin table by name or a table file by path.

    The tail directive pulls in the lower-r builtin table and adds one
    column of the family's full height to each of its index partitions.
    Raises GoldenTableError on parse problems, on any term whose weight
    differs from the codimension, and on suspect tables unless allowed.
    """
    name = str(name_or_path)
    if name in BUILTIN_TABLES:
        text = _builtin_text(name)
        origin = name
    else:
        path = Path(name)
        if not path.is_file():
            raise GoldenTableError("no builtin table or file named %r" % name)
        text = path.read_text()
        origin = str(path)
    family, r, tail_r, suspect, source, terms = _parse_lines(text, origin)
    if suspect and not allow_suspect:
        raise GoldenTableError(
            "%s is flagged suspect as printed; pass allow_suspect=True to load it anyway"
            % origin
        )
    sing = singularity(family, r)
    expansion = SchurExpansion(terms)
    if tail_r is not None:
        tail_name = _TAIL_SOURCES.get((family, tail_r))
        if tail_name is None:
            raise GoldenTableError(
                "%s: no builtin table for the tail %s r=%d" % (origin, family, tail_r)
            )
        lower = load_golden(tail_name, allow_suspect=allow_suspect)
        expansion = expansion + add_column(local_algebra_dim(sing) - 1, lower.expansion)
    if not suspect:
        expected = codim(sing)
        for p in expansion.partitions():
            if p.weight != expected:
                raise GoldenTableError(
                    "%s: term %s has weight %d, codimension is %d"
                    % (origin, p.parts, p.weight, expected)
                )
    return GoldenTable(singularity=sing, expansion=expansion, source=source, suspect=suspect)


def reference_expansion(sing, budget_seconds=900.0, use_second_row_cap=True):
    """Recompute a singularity's expansion: restriction solver for the
    families it covers, closed forms for the rest.  Returns (expansion, how)."""
    from . import closed_forms
    from .solver import solve

    name = sing.name
    if name in ("III33", "I23"):
        report = solve(sing, use_second_row_cap=use_second_row_cap,
                       budget_seconds=budget_seconds)
        return report.expansion, "restriction equations"
    if name == "A1":
        return closed_forms.thom_a1(sing.r), "closed form"
    if name == "A2":
        return closed_forms.thom_a2(sing.r), "closed form"
    if name == "A3":
        return closed_forms.thom_a3(sing.r), "closed form"
    if name == "I22":
        return closed_forms.thom_i22(sing.r), "closed form"
    if name == "III23":
        return closed_forms.thom_iii23(sing.r), "closed form"
    raise GoldenTableError("no reference route for %s" % name)


def diff_expansions(reference, table):
    """First mismatching partition as (partition, reference coeff, table coeff),
    or None when the term sets agree exactly."""
    keys = set(reference.terms) | set(table.terms)
    for p in sorted(keys, key=Partition.sort_key):
        a = reference.coefficient(p)
        b = table.coefficient(p)
        if a != b:
            return p, a, b
    return None
