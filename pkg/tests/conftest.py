import random
from fractions import Fraction

import pytest

from wheelsets.errors import DegenerateError
from wheelsets.exact_core import det_sign

ACCEPTANCE_LINES: list[str] = []


def record(criterion: int, ok: bool, detail: str = "") -> None:
    line = f"criterion {criterion:2d}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip()
    ACCEPTANCE_LINES.append(line)
    print(line, flush=True)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_rational_points(rng: random.Random, n: int, d: int, span: int = 10**6) -> list[tuple]:
    return [tuple(Fraction(rng.randint(-span, span), rng.randint(1, 97)) for _ in range(d))
            for _ in range(n)]


def in_general_position(points, w) -> bool:
    """No d+1 of the points together with w span less than R^d (checked on direction tuples).

    Only the hyperplanes through w matter for embracing; this checks every
    d-subset of directions for linear independence.
    """
    from itertools import combinations

    d = len(w)
    vecs = [tuple(a - b for a, b in zip(p, w)) for p in points]
    return all(det_sign(list(c)) != 0 for c in combinations(vecs, d))


def general_position_sample(rng: random.Random, n: int, d: int, w=None):
    w = w if w is not None else tuple(Fraction(0) for _ in range(d))
    while True:
        pts = random_rational_points(rng, n, d)
        if in_general_position(pts, w):
            return pts, w


@pytest.fixture
def rng():
    return random.Random(20240611)


__all__ = ["record", "random_rational_points", "general_position_sample", "DegenerateError"]
