"""The bundled knot table and its on-disk format.

One record per line:

    name=3_1; pd=[(1,4,2,5),(3,6,4,1),(5,2,6,3)]; seifert=[[-1,1],[0,-1]]; provenance=...

Fields are ``key=value`` pairs separated by "; ".  ``pd`` and ``seifert``
are Python-literal lists (no spaces are required but are preserved by the
writer, so a parse/serialise round trip is bit-exact).  Lines starting
with '#' and blank lines are ignored and re-emitted verbatim by
``save_table``.  At least one of pd/seifert must be present.

The active table path can be overridden with the environment variable
``KNOTCONC_TABLE``.
"""

from __future__ import annotations

import ast
import os
import re
from dataclasses import dataclass, field

from . import seifert as _seifert
from .diagram import Diagram

_DATA = os.path.join(os.path.dirname(__file__), "data", "knots.tbl")


class TableError(ValueError):
    pass


@dataclass
class TableEntry:
    name: str
    pd: list | None = None
    seifert: list | None = None
    provenance: str = ""

    def diagram(self):
        if self.pd is None:
            raise TableError("knot %s has no diagram in the table" % self.name)
        return Diagram.from_pd(self.pd)

    def seifert_matrix(self):
        if self.seifert is not None:
            return [list(r) for r in self.seifert]
        from .braid import seifert_matrix_from_braid  # noqa: F401 (cycle guard)
        from .seifert_from_pd import seifert_matrix_from_diagram
        return seifert_matrix_from_diagram(self.diagram())

    def to_line(self):
        parts = ["name=%s" % self.name]
        if self.pd is not None:
            parts.append("pd=%s" % _fmt_tuples(self.pd))
        if self.seifert is not None:
            parts.append("seifert=%s" % _fmt_rows(self.seifert))
        parts.append("provenance=%s" % self.provenance)
        return "; ".join(parts)


def _fmt_tuples(pd):
    return "[" + ",".join("(%d,%d,%d,%d)" % tuple(x) for x in pd) + "]"


def _fmt_rows(m):
    return "[" + ",".join("[" + ",".join(str(x) for x in row) + "]" for row in m) + "]"


def parse_line(line):
    fields = {}
    # split only at separators followed by a key=, so free-text values
    # (provenance) may themselves contain "; "
    for chunk in re.split(r"; (?=\w+=)", line):
        if "=" not in chunk:
            raise TableError("malformed table field %r" % chunk)
        k, v = chunk.split("=", 1)
        fields[k.strip()] = v
    if "name" not in fields:
        raise TableError("table record missing name: %r" % line)
    pd = ast.literal_eval(fields["pd"]) if "pd" in fields else None
    if pd is not None:
        pd = [tuple(x) for x in pd]
    sf = ast.literal_eval(fields["seifert"]) if "seifert" in fields else None
    if sf is not None:
        sf = [list(r) for r in sf]
        _seifert.validate_seifert(sf)
    if pd is None and sf is None:
        raise TableError("entry %s has neither pd nor seifert" % fields["name"])
    return TableEntry(fields["name"], pd, sf, fields.get("provenance", ""))


@dataclass
class KnotTable:
    entries: dict = field(default_factory=dict)
    _raw_lines: list = field(default_factory=list)

    def get(self, name):
        return self.entries.get(name)

    def __contains__(self, name):
        return name in self.entries

    def __iter__(self):
        return iter(self.entries.values())

    def __len__(self):
        return len(self.entries)

    def names(self):
        return list(self.entries)

    def add(self, entry):
        self.entries[entry.name] = entry
        self._raw_lines.append(entry)


def load_table(path=None):
    if path is None:
        path = os.environ.get("KNOTCONC_TABLE", _DATA)
    table = KnotTable()
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.lstrip().startswith("#"):
                table._raw_lines.append(line)
                continue
            try:
                entry = parse_line(line)
            except (SyntaxError, ValueError) as e:
                raise TableError("%s:%d: %s" % (path, lineno, e)) from e
            if entry.name in table.entries:
                raise TableError("%s:%d: duplicate knot %s" % (path, lineno, entry.name))
            table.entries[entry.name] = entry
            table._raw_lines.append(entry)
    return table


def save_table(table, path):
    with open(path, "w", encoding="utf-8") as fh:
        for item in table._raw_lines:
            fh.write(item if isinstance(item, str) else item.to_line())
            fh.write("\n")


_default = None


def default_table():
    global _default
    if _default is None:
        _default = load_table()
    return _default
