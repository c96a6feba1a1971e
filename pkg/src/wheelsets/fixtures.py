"""Frozen reference configurations with their expected values.

Coordinates were read off published drawings, rationalized, and kept only
after the expected values below were reproduced by the brute-force oracles.
Expected values carry a provenance tag: ``published`` (stated with the
drawing), ``trivial``, or ``derived`` (computed by an oracle and frozen).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction as Fr

from .errors import InputError
from .pointfile import format_pointfile

FIXTURE_NAMES = ("fig1_trio", "appendix_b_pair", "appendix_c_pair")


@dataclass(frozen=True)
class Fixture:
    name: str
    point_sets: dict  # label -> list of points (H only)
    extra_points: dict  # label -> the point w
    expected: dict  # key -> (value, provenance)
    notes: tuple = field(default=())

    def pointfile(self, label: str) -> str:
        comments = [f"fixture {self.name}, set {label}"] + list(self.notes)
        for key, (value, prov) in sorted(self.expected.items()):
            comments.append(f"expected {key} = {value} [{prov}]")
        return format_pointfile(self.point_sets[label], self.extra_points[label], comments)


def _fig1() -> Fixture:
    from .wheel import p_bar, p_con, p_sym

    sets = {"p_con": p_con(7), "p_bar": p_bar(7), "p_sym": p_sym(7)}
    return Fixture(
        "fig1_trio",
        {k: list(P.hull_points) for k, P in sets.items()},
        {k: P.extra_point for k, P in sets.items()},
        {
            "freqvec.p_con": ((1, 0, 2, 0, 2, 0, 2), "published"),
            "freqvec.p_bar": ((1, 0, 2, 0, 4, 0, 0), "published"),
            "freqvec.p_sym": ((7, 0, 0, 0, 0, 0, 0), "published"),
        },
        ("regular 8-gon / 7-gon with w near an edge / 7-gon with w at the center",),
    )


# Two 7-point planar sets that differ only in which side of the segment h1h2
# the point w lies on.  Order: h1, h2, w2, l1, l3, r1; w is stored separately.
_B_COMMON = [
    (Fr(0), Fr(1)),
    (Fr(0), Fr(-1)),
    (Fr(27, 50), Fr(-9, 20)),
    (Fr(-29, 20), Fr(39, 100)),
    (Fr(-29, 20), Fr(-39, 100)),
    (Fr(3, 2), Fr(0)),
]


def _appendix_b() -> Fixture:
    w_left, w_right = (Fr(-1, 5), Fr(0)), (Fr(1, 5), Fr(0))
    return Fixture(
        "appendix_b_pair",
        {"P": list(_B_COMMON), "P_prime": list(_B_COMMON)},
        {"P": w_left, "P_prime": w_right},
        {
            "triangulations.P": (25, "derived"),
            "triangulations.P_prime": (26, "derived"),
            "triangulation_difference": (1, "published"),
            "same_local_frequency_multiset": (True, "published"),
            "crossing_stats": ((23, 12), "derived"),
        },
        ("w and w2 are the two interior points",),
    )


def _lift(x, y, black: bool, scale: int):
    """Point of R^3 whose central projection to z = 1 is (x, y) (or (-x,-y,-1) side for white)."""
    s = Fr(scale)
    return (x * s, y * s, s) if black else (-x * s, -y * s, -s)


# Central-projection drawings: black points have z > 0, the single white point z < 0.
# Each point is scaled by a distinct factor so that no four of them are coplanar;
# only directions from the origin matter for the counted quantities.
_C_H = [
    (Fr(70, 99), Fr(70, 99), True),
    (Fr(0), Fr(1), True),
    (Fr(-70, 99), Fr(70, 99), True),
    (Fr(-1299, 1000), Fr(-3, 4), True),
    (Fr(1299, 1000), Fr(-3, 4), True),
    (Fr(-3, 10), Fr(-2, 5), True),
    (Fr(3, 10), Fr(-2, 5), False),
]
_C_H_PRIME = [
    (Fr(1128, 1000), Fr(41, 100), True),
    (Fr(688, 1000), Fr(983, 1000), True),
    (Fr(0), Fr(6, 5), True),
    (Fr(-688, 1000), Fr(983, 1000), True),
    (Fr(-1128, 1000), Fr(41, 100), True),
    (Fr(0), Fr(5, 2), True),
    (Fr(-1, 5), Fr(1, 2), False),
]


def _appendix_c() -> Fixture:
    H = [_lift(x, y, b, i + 1) for i, (x, y, b) in enumerate(_C_H)]
    H2 = [_lift(x, y, b, i + 1) for i, (x, y, b) in enumerate(_C_H_PRIME)]
    origin = (Fr(0), Fr(0), Fr(0))
    return Fixture(
        "appendix_c_pair",
        {"H": H, "H_prime": H2},
        {"H": origin, "H_prime": origin},
        {
            "depth.H": (6, "published"),
            "depth.H_prime": (4, "published"),
            "freqvec_d.H": ((0, 12, 0, 9, 0, 0), "published"),
            "freqvec_d.H_prime": ((0, 12, 0, 9, 0, 0), "published"),
        },
        ("coordinates read from a central-projection drawing and lifted to R^3",),
    )


def fixture(name: str) -> Fixture:
    builders = {"fig1_trio": _fig1, "appendix_b_pair": _appendix_b, "appendix_c_pair": _appendix_c}
    try:
        return builders[name]()
    except KeyError:
        raise InputError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURE_NAMES)}") from None
