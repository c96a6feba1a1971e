"""Plain-text point files.

One point per line, coordinates separated by whitespace, each an integer or a
``p/q`` rational.  ``#`` starts a comment.  A line prefixed with ``w:`` marks
the extra point (at most one).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import InputError
from .exact_core import as_rational


@dataclass
class PointFile:
    points: list = field(default_factory=list)  # excluding w
    extra: tuple | None = None
    comments: list = field(default_factory=list)

    @property
    def dimension(self) -> int:
        pts = self.points + ([self.extra] if self.extra is not None else [])
        return len(pts[0]) if pts else 0

    def all_points(self) -> list:
        """Points with w appended last (if present)."""
        return self.points + ([self.extra] if self.extra is not None else [])


def parse_pointfile(text: str) -> PointFile:
    pf = PointFile()
    dim = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line, _, comment = raw.partition("#")
        if comment.strip() and not line.strip():
            pf.comments.append(comment.strip())
        line = line.strip()
        if not line:
            continue
        is_w = False
        if line.lower().startswith("w:"):
            is_w = True
            line = line[2:].strip()
        try:
            coords = tuple(as_rational(tok) for tok in line.split())
        except InputError as exc:
            raise InputError(f"line {lineno}: {exc}") from None
        if not coords:
            raise InputError(f"line {lineno}: no coordinates")
        if dim is None:
            dim = len(coords)
        elif len(coords) != dim:
            raise InputError(f"line {lineno}: expected {dim} coordinates, got {len(coords)}")
        if is_w:
            if pf.extra is not None:
                raise InputError(f"line {lineno}: more than one w: line")
            pf.extra = coords
        else:
            pf.points.append(coords)
    return pf


def read_pointfile(path: str) -> PointFile:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_pointfile(fh.read())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _fmt(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_pointfile(points: Sequence, extra=None, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines += [" ".join(_fmt(c) for c in p) for p in points]
    if extra is not None:
        lines.append("w: " + " ".join(_fmt(c) for c in extra))
    return "\n".join(lines) + "\n"
