"""Seed documents: a JSON-based text format for initial seeds.

Fixed field names: n, m, semifield, B, d, z, y (optional: labels, strict).
Coefficient entries are lists of terms, each ``{"exponents": [...],
"multiplicity": k}``; an empty list is the zero.  y entries are exponent
vectors (empty for the trivial semifield).  Rendering is canonical (sorted
keys, sorted terms), so parse/render round-trips are byte-identical.
"""

from __future__ import annotations

import json
from pathlib import Path

from .seedcore import ExchangeMatrix, Seed, initial_seed
from .semifield import NonNegCombination, SemifieldContext


class ParseError(ValueError):
    """Malformed seed document; the message names the offending field."""


def _fail(where: str, why: str) -> "ParseError":
    return ParseError(f"{where}: {why}")


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise _fail(where, f"expected an integer, got {value!r}")
    return value


def _int_list(value, where: str, length: int | None = None) -> list[int]:
    if not isinstance(value, list):
        raise _fail(where, f"expected a list, got {type(value).__name__}")
    if length is not None and len(value) != length:
        raise _fail(where, f"expected length {length}, got {len(value)}")
    return [_int(v, f"{where}[{i}]") for i, v in enumerate(value)]


def parse_seed_document(text: str) -> Seed:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    for name in ("n", "m", "semifield", "B", "d", "z", "y"):
        if name not in doc:
            raise ParseError(f"missing field {name!r}")
    known = {"n", "m", "semifield", "B", "d", "z", "y", "labels", "strict"}
    for name in doc:
        if name not in known:
            raise ParseError(f"unknown field {name!r}")

    n = _int(doc["n"], "n")
    m = _int(doc["m"], "m")
    kind = doc["semifield"]
    if kind == "trivial":
        if m != 0:
            raise _fail("m", "must be 0 for the trivial semifield")
        context = SemifieldContext.trivial()
    elif kind == "tropical":
        context = SemifieldContext.tropical(m)
    else:
        raise _fail("semifield", f"must be 'trivial' or 'tropical', got {kind!r}")

    if not isinstance(doc["B"], list) or len(doc["B"]) != n:
        raise _fail("B", f"expected {n} rows")
    B = [_int_list(row, f"B[{i}]", n) for i, row in enumerate(doc["B"])]

    d = _int_list(doc["d"], "d", n)

    if not isinstance(doc["z"], list) or len(doc["z"]) != n:
        raise _fail("z", f"expected {n} coefficient tuples")
    z = []
    for i, row in enumerate(doc["z"]):
        if not isinstance(row, list):
            raise _fail(f"z[{i}]", "expected a list of entries")
        entries = []
        for s, entry in enumerate(row):
            where = f"z[{i}][{s}]"
            if not isinstance(entry, list):
                raise _fail(where, "expected a list of terms (empty for zero)")
            terms = []
            for r, term in enumerate(entry):
                if not isinstance(term, dict) or set(term) != {"exponents", "multiplicity"}:
                    raise _fail(f"{where}[{r}]", "expected {exponents, multiplicity}")
                exps = _int_list(term["exponents"], f"{where}[{r}].exponents", m)
                mult = _int(term["multiplicity"], f"{where}[{r}].multiplicity")
                if mult <= 0:
                    raise _fail(f"{where}[{r}].multiplicity", "must be positive")
                terms.append((context.monomial(exps), mult))
            entries.append(NonNegCombination.from_terms(context, terms))
        z.append(entries)

    if not isinstance(doc["y"], list) or len(doc["y"]) != n:
        raise _fail("y", f"expected {n} exponent vectors")
    y = [context.monomial(_int_list(v, f"y[{i}]", m)) for i, v in enumerate(doc["y"])]

    strict = doc.get("strict", True)
    if not isinstance(strict, bool):
        raise _fail("strict", "must be a boolean")
    return initial_seed(B, d, z, context, y, strict=strict)


def seed_to_document(seed: Seed, labels: dict | None = None) -> dict:
    """Plain-data form of an *initial* seed (cluster variables untouched)."""
    algebra = seed.algebra
    for i, xi in enumerate(seed.x):
        if xi != seed.x[i].__class__(algebra.x_poly(i)):
            raise ValueError("only initial seeds (x_i the i-th variable) have documents")
    doc = {
        "n": seed.n,
        "m": seed.context.rank,
        "semifield": seed.context.kind,
        "B": [list(row) for row in seed.B.rows],
        "d": list(seed.d),
        "z": [
            [
                [
                    {"exponents": list(elem.exponents), "multiplicity": mult}
                    for elem, mult in comb.terms
                ]
                for comb in row
            ]
            for row in seed.z
        ],
        "y": [list(yi.exponents) for yi in seed.y],
    }
    if not seed.strict:
        doc["strict"] = False
    if labels:
        doc["labels"] = labels
    return doc


def render_seed_document(seed: Seed, labels: dict | None = None) -> str:
    return json.dumps(seed_to_document(seed, labels), sort_keys=True, indent=2) + "\n"


def load_seed(path: str | Path) -> Seed:
    return parse_seed_document(Path(path).read_text(encoding="utf-8"))


def save_seed(seed: Seed, path: str | Path, labels: dict | None = None) -> None:
    Path(path).write_text(render_seed_document(seed, labels), encoding="utf-8")
