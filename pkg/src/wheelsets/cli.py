"""Command-line front end.

Exit codes: 0 success, 1 oracle disagreement (with ``--oracle``), 2 malformed
input or violated precondition, 3 degenerate input, 4 enumeration bound
exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Callable, Sequence

from . import __version__
from .errors import (
    BoundExceeded,
    DegenerateError,
    FlatRetryExhausted,
    InconsistentProfile,
    InputError,
    NeedsWheelError,
    NotConowheelError,
    NotRealizableError,
)
from .pointfile import PointFile, read_pointfile

EXIT_OK, EXIT_DISAGREE, EXIT_INPUT, EXIT_DEGENERATE, EXIT_BOUND = 0, 1, 2, 3, 4


class OracleDisagreement(Exception):
    pass


# ------------------------------------------------------------------ helpers


def _load(path: str, need_w: bool = False, dim: int | None = None) -> PointFile:
    pf = read_pointfile(path)
    if not pf.points:
        raise InputError(f"{path}: no points")
    if need_w and pf.extra is None:
        raise InputError(f"{path}: a 'w:' line marking the extra point is required")
    if dim is not None and pf.dimension != dim:
        raise InputError(f"{path}: expected dimension {dim}, found {pf.dimension}")
    return pf


def _fixture_provenance(pf: PointFile) -> list[str]:
    return [c for c in pf.comments if c.startswith(("fixture", "expected"))]


def _oracle_check(results: dict, key: str, value, expected) -> None:
    results["oracle"] = {"agree": value == expected, "value": expected, "checked": key}
    if value != expected:
        raise OracleDisagreement(f"{key}: formula gives {value}, oracle gives {expected}")


def _jsonable(x):
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def _text(x) -> str:
    if isinstance(x, (list, tuple)):
        return " ".join(_text(v) for v in x)
    if isinstance(x, dict):
        return ", ".join(f"{k}={_text(v)}" for k, v in x.items())
    return str(x)


def _as_int_list(values: Sequence[str]) -> tuple:
    try:
        return tuple(int(v) for v in values)
    except ValueError:
        raise InputError("frequency vector entries must be integers") from None


# ------------------------------------------------------------ subcommands


def cmd_freqvec(args, out: dict) -> None:
    pf = _load(args.file, need_w=True, dim=args.dim)
    d = pf.dimension
    if d == 2:
        from .wheel import build_conowheel, frequency_vector

        P = build_conowheel(pf.all_points(), len(pf.points))
        F = frequency_vector(P)
    else:
        from .depth import frequency_vector_d

        F = frequency_vector_d(pf.points, pf.extra)
    out["freqvec"] = F
    if args.oracle:
        _oracle_check(out, "freqvec", F, _oracle_freqvec(pf.points, pf.extra))


def _oracle_freqvec(points, w) -> tuple:
    from itertools import combinations

    from .oracle import _det_sign_naive

    d = len(w)
    n = len(points)
    m = n - d + 1
    F = [0] * (m + 1)
    for rho in combinations(range(n), d - 1):
        signs = [_det_sign_naive([[c - wc for c, wc in zip(points[i], w)] for i in rho]
                                 + [[c - wc for c, wc in zip(points[x], w)]])
                 for x in range(n) if x not in rho]
        if 0 in signs:
            raise DegenerateError("zero orientation")
        F[abs(signs.count(1) - signs.count(-1))] += 1
    return tuple(F)


def cmd_necklace(args, out: dict) -> None:
    from .wheel import build_conowheel, canonical_necklace, necklace_of

    pf = _load(args.file, need_w=True, dim=2)
    P = build_conowheel(pf.all_points(), len(pf.points))
    N = necklace_of(P)
    out["necklace"] = N
    out["canonical"] = canonical_necklace(N, not args.no_reflection)
    if args.oracle:
        from functools import cmp_to_key

        from .exact_core import RadialOrder, radial_compare

        w = pf.extra
        rays = []
        for h in pf.points:
            rays.append(((h[0], h[1]), "1"))
            rays.append(((2 * w[0] - h[0], 2 * w[1] - h[1]), "0"))

        def cmp(a, b):
            res = radial_compare(w, a[0], b[0])
            if res is RadialOrder.SAME_RAY:
                raise DegenerateError("two points on a common ray from w")
            if res is RadialOrder.OPPOSITE_RAY:
                upper = a[0][1] > w[1] or (a[0][1] == w[1] and a[0][0] > w[0])
                return -1 if upper else 1
            return res.value

        rays.sort(key=cmp_to_key(cmp))
        _oracle_check(out, "necklace", N, "".join(c for _, c in rays))


def cmd_realize(args, out: dict) -> None:
    from .wheel import (
        canonical_necklace,
        frequency_vector,
        necklace_of,
        realize_frequency_vector,
        realize_necklace,
    )

    if (args.freqvec is None) == (args.necklace is None):
        raise InputError("give exactly one of --freqvec or --necklace")
    if args.freqvec is not None:
        F = _as_int_list(args.freqvec)
        P = realize_frequency_vector(F)
    else:
        P = realize_necklace(args.necklace)
    out["points"] = [list(h) for h in P.hull_points]
    out["w"] = list(P.extra_point)
    out["freqvec"] = frequency_vector(P)
    if args.oracle:
        if args.freqvec is not None:
            _oracle_check(out, "freqvec", frequency_vector(P), F)
        else:
            _oracle_check(out, "necklace", canonical_necklace(necklace_of(P)),
                          canonical_necklace(args.necklace))


def cmd_order_types(args, out: dict) -> None:
    from .wheel import count_order_types, enumerate_order_types

    refl = not args.no_reflection
    value = count_order_types(args.n, refl)
    out["order_types"] = value
    listing = None
    if args.enumerate or args.oracle:
        listing = enumerate_order_types(args.n, refl)
    if args.enumerate:
        out["necklaces"] = listing
    if args.oracle:
        _oracle_check(out, "order_types", value, len(listing))


def cmd_enumerate_freqvecs(args, out: dict) -> None:
    from .wheel import count_frequency_vectors, enumerate_frequency_vectors

    fs = enumerate_frequency_vectors(args.n)
    out["count"] = len(fs)
    out["freqvecs"] = fs
    if args.oracle:
        _oracle_check(out, "count", len(fs), count_frequency_vectors(args.n))


def cmd_count(args, out: dict) -> None:
    from .graph_count import count_detailed
    from .wheel import build_conowheel, realize_frequency_vector

    if (args.file is None) == (args.freqvec is None):
        raise InputError("give exactly one of a point file or --freqvec")
    if args.file is not None:
        pf = _load(args.file, need_w=True, dim=2)
        source = build_conowheel(pf.all_points(), len(pf.points))
    else:
        source = _as_int_list(args.freqvec)
    res = count_detailed(args.cls, source, strict=args.strict)
    out["count"] = res.value
    if res.convention:
        out["convention"] = res.convention
    if args.oracle:
        from .oracle import oracle_graph_count

        P = source if args.file is not None else realize_frequency_vector(source)
        pts = list(P.points)
        _oracle_check(out, "count", res.value, oracle_graph_count(args.cls, pts, extra_index=len(pts) - 1))


def cmd_embrace(args, out: dict) -> None:
    from .depth import DepthConfig, EmbraceQuery, embrace_count

    pf = _load(args.file, need_w=True)
    q = EmbraceQuery(tuple(pf.points), pf.extra, args.k)
    value = embrace_count(q, DepthConfig(seed=args.seed))
    out["embrace"] = value
    if args.oracle:
        from .oracle import oracle_embrace

        _oracle_check(out, "embrace", value, oracle_embrace(pf.points, pf.extra, args.k))


def cmd_depth(args, out: dict) -> None:
    from .depth import DepthConfig, simplicial_depth

    pf = _load(args.file, need_w=True)
    value = simplicial_depth(pf.points, pf.extra, DepthConfig(seed=args.seed))
    out["depth"] = value
    if args.oracle:
        from .oracle import oracle_embrace

        _oracle_check(out, "depth", value, oracle_embrace(pf.points, pf.extra, pf.dimension + 1))


def cmd_crossing_stats(args, out: dict) -> None:
    from .graph_count import crossing_stats

    pf = _load(args.file, dim=2)
    pts = pf.all_points()
    convex, concave = crossing_stats(pts)
    out["convex_quads"] = convex
    out["concave_quads"] = concave
    if args.oracle:
        from .oracle import oracle_crossing_stats

        _oracle_check(out, "crossing_stats", (convex, concave), oracle_crossing_stats(pts))


def _read_json_arg(value: str):
    if os.path.exists(value):
        with open(value, encoding="utf-8") as fh:
            value = fh.read()
    try:
        return json.loads(value)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON: {exc.msg}") from None


def cmd_reconstruct(args, out: dict) -> None:
    from .graph_count import (
        EmbraceProfile,
        TriangleFamily,
        embrace_counts_2d,
        frequency_from_embrace,
        order_type_from_triangles,
        triangle_family,
    )
    from .wheel import realize_frequency_vector, realize_necklace

    if (args.from_embrace is None) == (args.from_triangles is None):
        raise InputError("give exactly one of --from-embrace or --from-triangles")
    if args.from_embrace is not None:
        data = _read_json_arg(args.from_embrace)
        try:
            E = EmbraceProfile(int(data["n"]), tuple(int(c) for c in data["counts"]))
        except (KeyError, TypeError, ValueError):
            raise InputError('expected {"n": N, "counts": [embr_3, ..., embr_n]}') from None
        F = frequency_from_embrace(E)
        out["freqvec"] = F
        if args.oracle:
            _oracle_check(out, "embrace_profile", E, embrace_counts_2d(realize_frequency_vector(F)))
    else:
        data = _read_json_arg(args.from_triangles)
        try:
            T = TriangleFamily(int(data["n"]), frozenset(frozenset(int(x) for x in t) for t in data["triples"]))
        except (KeyError, TypeError, ValueError):
            raise InputError('expected {"n": N, "triples": [[i, j, k], ...]}') from None
        N = order_type_from_triangles(T)
        out["necklace"] = N
        if args.oracle:
            R = triangle_family(realize_necklace(N))

            def profile(fam):
                deg = [0] * fam.n
                for t in fam.triples:
                    for x in t:
                        deg[x] += 1
                return (len(fam.triples), sorted(deg))

            _oracle_check(out, "triangle_profile", profile(T), profile(R))


def cmd_gale_dual(args, out: dict) -> None:
    from .gale import check_orthogonal, gale_dual, legalize

    pf = _load(args.file)
    G = gale_dual(legalize(pf.all_points()))
    out["dual"] = [list(r) for r in G.dual]
    if args.oracle:
        _oracle_check(out, "orthogonal", check_orthogonal(G), True)


def cmd_fvector(args, out: dict) -> None:
    from .depth import DepthConfig
    from .gale import f_vector

    pf = _load(args.file)
    fv = f_vector(pf.all_points(), DepthConfig(seed=args.seed))
    out["fvector"] = fv.entries
    if args.oracle:
        from .oracle import oracle_f_vector

        _oracle_check(out, "fvector", fv.entries, oracle_f_vector(pf.all_points()))


def cmd_facets(args, out: dict) -> None:
    from .depth import DepthConfig
    from .gale import facet_count

    pf = _load(args.file)
    value = facet_count(pf.all_points(), DepthConfig(seed=args.seed))
    out["facets"] = value
    if args.oracle:
        from .oracle import oracle_facets

        _oracle_check(out, "facets", value, len(oracle_facets(pf.all_points())))


def cmd_minimal_embracing(args, out: dict) -> None:
    from .gale import minimal_embracing_count, minimal_pairs, minimal_triangles, project_to_circle

    pf = _load(args.file, dim=2)
    pts = pf.points
    if pf.extra is not None:
        pts = [(p[0] - pf.extra[0], p[1] - pf.extra[1]) for p in pts]
    M = project_to_circle(pts)
    value = minimal_embracing_count(M)
    out["minimal_embracing"] = value
    out["pairs"] = minimal_pairs(M)
    out["triangles"] = minimal_triangles(M)
    if args.oracle:
        from .oracle import oracle_minimal_embracing

        _oracle_check(out, "minimal_embracing", value, oracle_minimal_embracing(pts))


# ------------------------------------------------------------------ parser


def _common_options(suppress: bool) -> argparse.ArgumentParser:
    # subcommands repeat the global flags; SUPPRESS keeps a flag given before
    # the subcommand from being reset by the subparser default
    common = argparse.ArgumentParser(add_help=False)
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    common.add_argument("--seed", type=int, help="seed for generic flat selection",
                        **(kw or {"default": 0}))
    common.add_argument("--json", action="store_true", help="emit a JSON object", **kw)
    common.add_argument("--oracle", action="store_true",
                        help="cross-check against brute force; exit 1 on disagreement", **kw)
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options(suppress=True)
    p = argparse.ArgumentParser(prog="wheelsets", parents=[_common_options(suppress=False)],
                                description="Exact counting on conowheel sets and embracing simplices.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name: str, func: Callable, help_: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("freqvec", cmd_freqvec, "frequency vector of a point file (w-line required)")
    sp.add_argument("file")
    sp.add_argument("--dim", type=int, help="expected dimension")

    sp = add("necklace", cmd_necklace, "local sequence of a planar conowheel set")
    sp.add_argument("file")
    sp.add_argument("--no-reflection", action="store_true")

    sp = add("realize", cmd_realize, "rational conowheel set from a frequency vector or necklace")
    sp.add_argument("--freqvec", nargs="+", metavar="F")
    sp.add_argument("--necklace", metavar="BITS")

    sp = add("order-types", cmd_order_types, "number of order types of conowheel sets")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--no-reflection", action="store_true")
    sp.add_argument("--enumerate", action="store_true")

    sp = add("enumerate-freqvecs", cmd_enumerate_freqvecs, "all frequency vectors of length n")
    sp.add_argument("--n", type=int, required=True)

    from .graph_count import BUILTIN_CLASSES

    sp = add("count", cmd_count, "number of crossing-free structures of a class")
    sp.add_argument("--class", dest="cls", required=True, choices=BUILTIN_CLASSES)
    sp.add_argument("file", nargs="?")
    sp.add_argument("--freqvec", nargs="+", metavar="F")
    sp.add_argument("--strict", action="store_true",
                    help="fail instead of using the convex-position convention for triangulations")

    sp = add("embrace", cmd_embrace, "number of k-subsets whose hull contains w")
    sp.add_argument("file")
    sp.add_argument("--k", type=int, required=True)

    sp = add("depth", cmd_depth, "simplicial depth of w")
    sp.add_argument("file")

    sp = add("crossing-stats", cmd_crossing_stats, "convex and non-convex 4-subsets")
    sp.add_argument("file")

    sp = add("reconstruct", cmd_reconstruct, "frequency vector or order type from embracing data")
    sp.add_argument("--from-embrace", metavar="JSON")
    sp.add_argument("--from-triangles", metavar="JSON")

    sp = add("gale-dual", cmd_gale_dual, "integer Gale dual of a point matrix")
    sp.add_argument("file")

    sp = add("fvector", cmd_fvector, "f-vector of the simplicial polytope of the points")
    sp.add_argument("file")

    sp = add("facets", cmd_facets, "number of facets of the simplicial polytope of the points")
    sp.add_argument("file")

    sp = add("minimal-embracing", cmd_minimal_embracing,
             "minimal subsets of a planar multiset embracing the origin (or w)")
    sp.add_argument("file")
    return p


def _emit(args, out: dict, stream) -> None:
    if args.json:
        stream.write(json.dumps(_jsonable(out), sort_keys=True) + "\n")
        return
    for key, value in out.items():
        if key in ("input", "fixture"):
            continue
        if key == "oracle":
            value = "agree" if value["agree"] else f"DISAGREE (oracle {value['value']})"
        if isinstance(value, list) and value and isinstance(value[0], (list, tuple, str)):
            stream.write(f"{key}:\n")
            for item in value:
                stream.write(f"  {_text(item)}\n")
        else:
            stream.write(f"{key}: {_text(value)}\n")


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out: dict = {}
    echo = {k: v for k, v in vars(args).items() if k not in ("func", "json", "oracle")}
    out["input"] = echo
    code = EXIT_OK
    try:
        args.func(args, out)
        if getattr(args, "file", None):
            prov = _fixture_provenance(read_pointfile(args.file))
            if prov:
                out["fixture"] = prov
    except OracleDisagreement as exc:
        stderr.write(f"error: oracle disagreement: {exc}\n")
        code = EXIT_DISAGREE
    except (DegenerateError, FlatRetryExhausted) as exc:
        stderr.write(f"error: degenerate input: {exc}\n")
        return EXIT_DEGENERATE
    except BoundExceeded as exc:
        stderr.write(f"error: bound exceeded: {exc}\n")
        return EXIT_BOUND
    except (InputError, NotConowheelError, NotRealizableError, InconsistentProfile, NeedsWheelError) as exc:
        stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT
    _emit(args, out, stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
