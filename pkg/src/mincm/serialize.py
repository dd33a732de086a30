"""Reading and writing complexes.

Two formats:

* plain text — one facet per line, whitespace-separated vertex labels,
  ``#`` starts a comment; an empty body is the void complex.  Tokens that
  parse as integers become integer labels.  The irrelevant complex (only
  the empty face) has no text form.
* structured — a JSON document ``{"n": ..., "vertices": [...],
  "facets": [[...], ...]}`` where ``n`` and ``vertices`` are optional;
  ``vertices`` fixes the universe, a bare ``n`` extends it.

Emission is canonical (facets in canonical order), so emit-parse-emit is
byte-identical.
"""
from __future__ import annotations

import json
import re

from .complexes import SimplicialComplex
from .errors import MalformedInput, ParseError

_INT_TOKEN = re.compile(r"[+-]?\d+\Z")
_TOKEN = re.compile(r"\S+")


def _parse_token(tok: str):
    return int(tok) if _INT_TOKEN.match(tok) else tok


def parse_text(text: str) -> SimplicialComplex:
    """Parse the plain-text facet format; errors carry line and column."""
    raw: list[list] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0]
        labels = []
        seen_at: dict = {}
        for m in _TOKEN.finditer(body):
            lab = _parse_token(m.group())
            col = m.start() + 1
            if lab in seen_at:
                raise ParseError(f"facet repeats label {lab!r}",
                                 line=lineno, column=col)
            seen_at[lab] = col
            labels.append(lab)
        if labels:
            raw.append(labels)
    return SimplicialComplex.from_facets(raw)


def emit_text(cx: SimplicialComplex) -> str:
    """Canonical plain-text form; void is empty, irrelevant is rejected."""
    if cx.is_irrelevant:
        raise MalformedInput(
            "the irrelevant complex has no plain-text form; use the structured format")
    for lab in cx.labels:
        s = str(lab)
        if not isinstance(lab, int) and (_INT_TOKEN.match(s) or _TOKEN.fullmatch(s) is None or "#" in s):
            raise MalformedInput(
                f"label {lab!r} is ambiguous in plain text; use the structured format")
    return "".join(" ".join(str(v) for v in f) + "\n" for f in cx.facet_labels())


def parse_doc(doc) -> SimplicialComplex:
    """Build a complex from an already-decoded structured document."""
    if not isinstance(doc, dict) or "facets" not in doc:
        raise ParseError("structured document must be an object with a 'facets' field")
    facets = doc["facets"]
    if not isinstance(facets, list) or not all(isinstance(f, list) for f in facets):
        raise ParseError("'facets' must be a list of label lists")
    for f in facets:
        for lab in f:
            if not isinstance(lab, (int, str)) or isinstance(lab, bool):
                raise ParseError(f"label {lab!r} must be an integer or a string")
    vertices = doc.get("vertices")
    n = doc.get("n")
    if n is not None and (not isinstance(n, int) or isinstance(n, bool) or n < 0):
        raise ParseError("'n' must be a non-negative integer")
    if vertices is not None:
        if not isinstance(vertices, list):
            raise ParseError("'vertices' must be a list of labels")
        if n is not None and n != len(vertices):
            raise ParseError("'n' disagrees with the length of 'vertices'")
        try:
            return SimplicialComplex.from_facets(facets, universe=vertices)
        except MalformedInput as exc:
            raise ParseError(str(exc)) from None
    try:
        cx = SimplicialComplex.from_facets(facets)
        return cx.on_universe(n) if n is not None else cx
    except MalformedInput as exc:
        raise ParseError(str(exc)) from None


def parse_json(text: str) -> SimplicialComplex:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None
    return parse_doc(doc)


def emit_doc(cx: SimplicialComplex) -> dict:
    return {
        "n": cx.n,
        "vertices": list(cx.labels),
        "facets": [list(f) for f in cx.facet_labels()],
    }


def emit_json(cx: SimplicialComplex) -> str:
    return json.dumps(emit_doc(cx), indent=2, sort_keys=True) + "\n"


def load_path(path: str) -> SimplicialComplex:
    """Read a complex from a file, picking the format by extension."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror or exc}") from None
    if path.endswith(".json"):
        return parse_json(text)
    return parse_text(text)
