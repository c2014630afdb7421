"""Reading and writing poset files.

Two formats are accepted and distinguished by sniffing the first
non-whitespace character:

  edge text      first meaningful line is the element count n, every further
                 line is "u v" for one relation u < v; blank lines and lines
                 starting with '#' are ignored
  structured     a JSON object {"n": int, "edges": [[u, v], ...]} with an
                 optional "labels" array of n strings

Input edges may be any order relations; the constructor reduces them to
covers. Duplicate and reflexive pairs are tolerated.
"""

from __future__ import annotations

import json
import sys
from dataclasses import dataclass
from typing import Optional

from .errors import ParseError
from .poset import Poset


@dataclass
class PosetFileData:
    n: int
    edges: list
    labels: Optional[list]
    fmt: str  # "edges" or "json"


def parse_poset_text(text: str) -> PosetFileData:
    """Parse either format from a string."""
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(text)
    return _parse_edge_text(text)


def _parse_edge_text(text: str) -> PosetFileData:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise ParseError("expected the element count alone on the first line", lineno)
            try:
                n = int(fields[0])
            except ValueError:
                raise ParseError(f"element count is not an integer: {fields[0]!r}", lineno) from None
            if n < 0:
                raise ParseError(f"element count must be nonnegative, got {n}", lineno)
            continue
        if len(fields) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"edge endpoints are not integers: {line!r}", lineno) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) out of range for n={n}", lineno)
        edges.append((u, v))
    if n is None:
        raise ParseError("empty input: no element count found")
    return PosetFileData(n, edges, None, "edges")


def _parse_json(text: str) -> PosetFileData:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(obj, dict):
        raise ParseError("top-level JSON value must be an object")
    if not isinstance(obj.get("n"), int) or isinstance(obj.get("n"), bool):
        raise ParseError('"n" must be an integer')
    n = obj["n"]
    if n < 0:
        raise ParseError(f'"n" must be nonnegative, got {n}')
    raw_edges = obj.get("edges", [])
    if not isinstance(raw_edges, list):
        raise ParseError('"edges" must be an array of [u, v] pairs')
    edges = []
    for i, pair in enumerate(raw_edges):
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)):
            raise ParseError(f'edge #{i} is not a pair of integers: {pair!r}')
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) out of range for n={n}")
        edges.append((u, v))
    labels = obj.get("labels")
    if labels is not None:
        if (not isinstance(labels, list) or len(labels) != n
                or not all(isinstance(x, str) for x in labels)):
            raise ParseError(f'"labels" must be an array of {n} strings')
    return PosetFileData(n, edges, labels, "json")


def read_poset_file(path: str) -> PosetFileData:
    """Read and parse a file; '-' reads standard input."""
    if path == "-":
        return parse_poset_text(sys.stdin.read())
    with open(path, "r", encoding="utf-8") as fh:
        return parse_poset_text(fh.read())


def build_poset(data: PosetFileData) -> Poset:
    return Poset(data.n, data.edges, data.labels)


def load_poset(path: str) -> Poset:
    return build_poset(read_poset_file(path))


def to_edge_text(p: Poset) -> str:
    """Edge-text serialization (cover edges only; labels have no syntax in
    this format and are dropped)."""
    lines = [str(p.n)]
    lines += [f"{u} {v}" for u, v in sorted(p.covers)]
    return "\n".join(lines) + "\n"


def to_structured(p: Poset) -> dict:
    """Structured serialization as a plain dict, ready for json.dumps."""
    out = {"n": p.n, "edges": [[u, v] for u, v in sorted(p.covers)]}
    if p.labels is not None:
        out["labels"] = list(p.labels)
    return out
