"""Text and JSON serialization for matrices and permutations.

Matrix text format: a line holding ``n`` followed by ``n`` lines of ``n``
whitespace-separated rationals (``p``, ``-p`` or ``p/q`` with ``q > 0``).
JSON alternative: ``{"n": n, "entries": [["p/q", ...], ...]}``.
Permutation text format: a line holding ``n`` and a line of ``n`` images.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .core import Permutation, SquareMatrix

_RATIONAL = re.compile(r"-?[0-9]+(?:/[0-9]+)?\Z")
_NATURAL = re.compile(r"[0-9]+\Z")


class FormatError(ValueError):
    """Malformed input; carries the source name, 1-based line and offending token."""

    def __init__(self, message: str, source: str = "<input>", line: int | None = None, token: str | None = None):
        self.source = source
        self.line = line
        self.token = token
        where = source if line is None else f"{source}:{line}"
        tok = "" if token is None else f" (token {token!r})"
        super().__init__(f"{where}: {message}{tok}")


def parse_rational(token: str, source: str = "<input>", line: int | None = None) -> Fraction:
    if not _RATIONAL.match(token):
        raise FormatError("malformed rational", source, line, token)
    if "/" in token:
        p, q = token.split("/")
        if int(q) == 0:
            raise FormatError("zero denominator", source, line, token)
        return Fraction(int(p), int(q))
    return Fraction(int(token))


def format_rational(x: Fraction) -> str:
    return str(x)


def _content_lines(text: str) -> list[tuple[int, str]]:
    return [(k, ln.strip()) for k, ln in enumerate(text.splitlines(), start=1) if ln.strip()]


def _parse_order(lines, source) -> int:
    if not lines:
        raise FormatError("empty input, expected the order n", source, 1)
    lineno, first = lines[0]
    tokens = first.split()
    if len(tokens) != 1 or not _NATURAL.match(tokens[0]) or int(tokens[0]) < 1:
        raise FormatError("first line must be a single positive integer n", source, lineno, first)
    return int(tokens[0])


def parse_matrix_text(text: str, source: str = "<input>") -> SquareMatrix:
    lines = _content_lines(text)
    n = _parse_order(lines, source)
    body = lines[1:]
    if len(body) != n:
        where = body[n][0] if len(body) > n else (lines[-1][0] + 1)
        raise FormatError(f"expected {n} matrix rows, found {len(body)}", source, where)
    rows = []
    for lineno, ln in body:
        tokens = ln.split()
        if len(tokens) != n:
            bad = tokens[n] if len(tokens) > n else None
            raise FormatError(f"expected {n} entries, found {len(tokens)}", source, lineno, bad)
        rows.append([parse_rational(t, source, lineno) for t in tokens])
    return SquareMatrix(rows)


def format_matrix_text(A: SquareMatrix) -> str:
    out = [str(A.n)]
    out.extend(" ".join(format_rational(v) for v in row) for row in A.rows)
    return "\n".join(out) + "\n"


def matrix_to_json_obj(A: SquareMatrix) -> dict:
    return {"n": A.n, "entries": [[format_rational(v) for v in row] for row in A.rows]}


def parse_matrix_json(text: str, source: str = "<input>") -> SquareMatrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", source, exc.lineno) from None
    if not isinstance(obj, dict) or "n" not in obj or "entries" not in obj:
        raise FormatError('expected an object with keys "n" and "entries"', source)
    n = obj["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise FormatError('"n" must be a positive integer', source, token=str(n))
    rows = obj["entries"]
    if not isinstance(rows, list) or len(rows) != n:
        raise FormatError(f"expected {n} rows in \"entries\"", source)
    parsed = []
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise FormatError(f"row {r} must hold {n} entries", source)
        vals = []
        for tok in row:
            if not isinstance(tok, str):
                raise FormatError(f"row {r}: entries must be strings", source, token=str(tok))
            vals.append(parse_rational(tok, source))
        parsed.append(vals)
    return SquareMatrix(parsed)


def format_matrix_json(A: SquareMatrix) -> str:
    return json.dumps(matrix_to_json_obj(A), indent=2, sort_keys=True) + "\n"


def parse_matrix(text: str, source: str = "<input>") -> SquareMatrix:
    """Dispatch on the first non-blank character: ``{`` means JSON."""
    if text.lstrip().startswith("{"):
        return parse_matrix_json(text, source)
    return parse_matrix_text(text, source)


def parse_permutation_text(text: str, source: str = "<input>") -> Permutation:
    lines = _content_lines(text)
    n = _parse_order(lines, source)
    if len(lines) != 2:
        raise FormatError(f"expected one line of images, found {len(lines) - 1}", source, lines[-1][0])
    lineno, ln = lines[1]
    tokens = ln.split()
    if len(tokens) != n:
        raise FormatError(f"expected {n} images, found {len(tokens)}", source, lineno)
    for t in tokens:
        if not _NATURAL.match(t) or int(t) >= n:
            raise FormatError(f"image must be an integer in 0..{n - 1}", source, lineno, t)
    try:
        return Permutation(int(t) for t in tokens)
    except ValueError:
        raise FormatError("images are not a bijection", source, lineno) from None


def format_permutation_text(pi: Permutation) -> str:
    return f"{pi.n}\n{' '.join(str(x) for x in pi.images)}\n"
