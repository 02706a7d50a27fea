"""File formats: ideal files, poset files, DOT export, and JSON reports.

Ideal file: first significant line `vars: x y z`, then one monomial per
line, either in product syntax (`x^2*y`) or as a bare exponent vector
(`[2,0,1]`).  `#` starts a comment; blank lines are skipped.  Parsing
minimizes the generating set and reports what was removed.

Poset file: first significant line `elements: a b c`, then one cover per
line as `a < b`.

JSON reports carry a fixed schema (see schema_version) and are rendered
with sorted keys so identical inputs give byte-identical output.
"""

import json
import re
from dataclasses import dataclass

from .monomials import Monomial, MonomialIdeal, minimize
from .poset import FinitePoset


class IdealParseError(ValueError):
    def __init__(self, message, line, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class ParseResult:
    ideal: MonomialIdeal
    removed: tuple        # rendered monomials dropped by minimization


def _significant_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            yield lineno, line


def parse_ideal(text):
    lines = list(_significant_lines(text))
    if not lines:
        raise IdealParseError("empty file: expected a `vars:` header", 1)
    lineno, header = lines[0]
    m = re.match(r"\s*vars\s*:\s*(.*)$", header)
    if not m:
        raise IdealParseError("expected `vars: x1 x2 ...` on the first "
                              "significant line", lineno,
                              len(header) - len(header.lstrip()) + 1)
    variables = tuple(m.group(1).split())
    if not variables:
        raise IdealParseError("no variables declared", lineno)
    for v in variables:
        if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_]*", v):
            raise IdealParseError(f"bad variable name {v!r}", lineno,
                                  header.index(v) + 1)
    if len(set(variables)) != len(variables):
        raise IdealParseError("duplicate variable name", lineno)
    gens = []
    for lineno, line in lines[1:]:
        gens.append(_parse_monomial(line, lineno, variables))
    ideal = MonomialIdeal(variables, tuple(gens))
    minimized, removed = minimize(ideal)
    return ParseResult(minimized,
                       tuple(g.render(variables) for g in removed))


def _parse_monomial(line, lineno, variables):
    text = line.strip()
    col0 = line.index(text[0]) + 1
    if text.startswith("["):
        if not text.endswith("]"):
            raise IdealParseError("unterminated exponent vector", lineno,
                                  col0 + len(text) - 1)
        parts = [s.strip() for s in text[1:-1].split(",")] if text[1:-1].strip() else []
        if len(parts) != len(variables):
            raise IdealParseError(
                f"expected {len(variables)} exponents, got {len(parts)}",
                lineno, col0)
        exps = []
        for j, s in enumerate(parts):
            if not re.fullmatch(r"-?\d+", s):
                raise IdealParseError(f"bad exponent {s!r}", lineno,
                                      col0 + text.find(s))
            e = int(s)
            if e < 0:
                raise IdealParseError(f"negative exponent {e}", lineno,
                                      col0 + text.find(s))
            exps.append(e)
        mono = Monomial(tuple(exps))
    else:
        exps = [0] * len(variables)
        offset = 0
        for factor in text.split("*"):
            factor = factor.strip()
            fcol = col0 + line[col0 - 1:].find(factor, offset)
            offset = line[col0 - 1:].find(factor, offset) + len(factor)
            fm = re.fullmatch(r"([A-Za-z][A-Za-z0-9_]*)(?:\^(-?\d+))?", factor)
            if not fm:
                raise IdealParseError(f"bad factor {factor!r}", lineno, fcol)
            name, exp = fm.group(1), fm.group(2)
            if name not in variables:
                raise IdealParseError(f"undeclared variable {name!r}",
                                      lineno, fcol)
            e = 1 if exp is None else int(exp)
            if e < 0:
                raise IdealParseError(f"negative exponent {e}", lineno, fcol)
            exps[variables.index(name)] += e
        mono = Monomial(tuple(exps))
    if mono.is_one():
        raise IdealParseError("the unit monomial generates the whole ring",
                              lineno, col0)
    return mono


def format_ideal(ideal):
    lines = ["vars: " + " ".join(ideal.variables)]
    lines.extend(g.render(ideal.variables) for g in ideal.generators)
    return "\n".join(lines) + "\n"


# --- poset files ------------------------------------------------------------


def parse_poset(text):
    lines = list(_significant_lines(text))
    if not lines:
        raise IdealParseError("empty file: expected an `elements:` header", 1)
    lineno, header = lines[0]
    m = re.match(r"\s*elements\s*:\s*(.*)$", header)
    if not m:
        raise IdealParseError("expected `elements: a b c ...` first", lineno)
    labels = m.group(1).split()
    if len(set(labels)) != len(labels):
        raise IdealParseError("duplicate element name", lineno)
    pos = {l: i for i, l in enumerate(labels)}
    covers = []
    for lineno, line in lines[1:]:
        parts = line.split("<")
        if len(parts) != 2:
            raise IdealParseError("expected `a < b`", lineno)
        a, b = parts[0].strip(), parts[1].strip()
        for name in (a, b):
            if name not in pos:
                raise IdealParseError(f"unknown element {name!r}", lineno,
                                      line.index(name) + 1)
        covers.append((pos[a], pos[b]))
    return FinitePoset(labels, covers)


def format_poset(p):
    lines = ["elements: " + " ".join(str(l) for l in p.labels)]
    lines.extend(f"{p.labels[a]} < {p.labels[b]}" for a, b in sorted(p.covers))
    return "\n".join(lines) + "\n"


# --- DOT ---------------------------------------------------------------------


def dot_poset(p, label_of=None):
    """label_of maps an element index to its node label (default: str of
    the stored label)."""
    if label_of is None:
        label_of = lambda i: str(p.labels[i])
    out = ["digraph poset {", "  rankdir=BT;"]
    for i in p.elements():
        out.append(f'  n{i} [label="{label_of(i)}"];')
    for a, b in sorted(p.covers):
        out.append(f"  n{a} -> n{b};")
    out.append("}")
    return "\n".join(out) + "\n"


def dot_lattice(L):
    return dot_poset(L.poset, label_of=L.render)


# --- JSON reports ------------------------------------------------------------

SCHEMA_VERSION = 1


def field_name(fieldspec):
    return "Q" if fieldspec.kind == "rationals" else f"GF({fieldspec.characteristic})"


def lattice_section(L):
    return {"elements": [list(lab) for lab in L.poset.labels],
            "covers": [list(c) for c in sorted(L.poset.covers)],
            "degrees": [L.render(i) for i in L.poset.elements()]}


def poset_from_lattice_section(section):
    labels = [tuple(e) for e in section["elements"]]
    covers = [tuple(c) for c in section["covers"]]
    return FinitePoset(labels, covers)


def betti_section(table):
    if table is None:
        return None
    return {"multigraded": [[i, list(m), c] for (i, m), c
                            in sorted(table.multigraded.items())],
            "totals": [[i, t, c] for (i, t), c in sorted(table.totals().items())],
            "by_degree": table.total_by_degree()}


def report_json(ideal=None, fieldspec=None, variant=None, lattice=None,
                dims=None, betti=None, flags=None, witnesses=None):
    """Assemble the full report dictionary; every key is always present."""
    doc = {
        "schema_version": SCHEMA_VERSION,
        "ideal": None if ideal is None else {
            "variables": list(ideal.variables),
            "generators": [list(g.exponents) for g in ideal.generators]},
        "field": None if fieldspec is None else field_name(fieldspec),
        "variant": variant,
        "lattice": None if lattice is None else lattice_section(lattice),
        "dims": None if dims is None else
            [[i, _jsonable(lab), d] for (i, lab), d in sorted(dims.items())],
        "betti": betti_section(betti),
        "flags": flags or {},
        "witnesses": {k: _jsonable(v) for k, v in (witnesses or {}).items()
                      if v is not None},
    }
    return doc


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if isinstance(v, (int, str, bool)) or v is None:
        return v
    return str(v)


def dump_json(doc):
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
