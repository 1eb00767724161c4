"""
Command line for generating drawings, building and certifying colorings,
bound tables, triangle decompositions, exact oracle runs and SVG figures.

Exit codes: 0 certified, 1 certification failed, 2 usage or input error.
"""
import argparse
import csv
import io
import json
import logging
import sys
from typing import List, Optional

from . import config
from .bounds import (
    Setting,
    counting_upper_bound,
    general_upper_bound,
    lower_bound_formula,
)
from .conflict import ConflictGraph, Criterion
from .constructions import (
    Construction,
    coloring_for,
    points_for,
    requires_proper,
)
from .designs import hanani_decompose
from .exceptions import CertificationError, GeoGrundyError, InputError, OracleSizeError, QuadrupleNotFoundError
from .geometry import PointSet, gen_convex, gen_general
from .oracle import SmallInstance, exact_grundy, exact_pseudo_grundy
from .render import render_svg
from .schemas import BoundsRow, DecompositionFile, OracleOut, ReportOut
from .utils import (
    dump_json,
    format_point_file,
    read_coloring_file,
    read_point_file,
    write_coloring_file,
    write_decomposition_file,
    write_text,
)
from .verify import verify_coloring

logger = logging.getLogger("geogrundy")

CRITERIA = [c.value for c in Criterion]
CONSTRUCTIONS = [c.value for c in Construction]


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        write_text(out, text)
    else:
        sys.stdout.write(text)


def _drawing(args: argparse.Namespace) -> PointSet:
    """Point set from --points, or generated from --n with --seed or --convex"""
    if getattr(args, "points", None):
        return read_point_file(args.points)
    if args.n is None:
        raise InputError("pass --points FILE or --n N")
    if getattr(args, "convex", False):
        return gen_convex(args.n)
    return gen_general(args.n, args.seed)


def cmd_gen(args: argparse.Namespace) -> int:
    points = gen_convex(args.n) if args.convex else gen_general(args.n, args.seed)
    _emit(format_point_file(points), args.out)
    return 0


def cmd_color(args: argparse.Namespace) -> int:
    given = read_point_file(args.points) if args.points else None
    if given is None and args.n is None:
        raise InputError("pass --n N or --points FILE")
    name = Construction(args.construction)
    points = points_for(name, args.n, args.seed, given)

    coloring = coloring_for(name, points, args.criterion)
    report = verify_coloring(ConflictGraph(points, coloring.criterion), coloring)
    certified = report.grundy if requires_proper(name) else report.grundy_property

    out = ReportOut.model_validate(report)
    out.construction = name.value
    out.certified = certified
    text = dump_json(out)
    if args.out:
        write_coloring_file(args.out, coloring)
    if args.report:
        write_text(args.report, text)
    sys.stdout.write(text)

    if not certified:
        raise CertificationError(f"{name.value} coloring of K_{len(points)} is not certified")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    coloring = read_coloring_file(args.coloring)
    points = _drawing(args)
    if len(points) != coloring.n:
        raise InputError(f"coloring is for K_{coloring.n} but the point set has {len(points)} points")

    report = verify_coloring(ConflictGraph(points, coloring.criterion), coloring)
    certified = report.grundy if args.require_proper else report.grundy_property
    out = ReportOut.model_validate(report)
    out.certified = certified
    sys.stdout.write(dump_json(out))

    if not certified:
        raise CertificationError("coloring is not certified")
    return 0


def _achieved(name: Construction, n: int, seed: int, criterion: Criterion) -> Optional[int]:
    """Certified color count of a construction, or None when it does not apply"""
    try:
        points = points_for(name, n, seed)
        coloring = coloring_for(name, points, criterion)
    except (InputError, QuadrupleNotFoundError) as e:
        logger.debug("%s at n=%s skipped: %s", name.value, n, e.detail)
        return None
    report = verify_coloring(ConflictGraph(points, criterion), coloring)
    certified = report.grundy if requires_proper(name) else report.grundy_property
    if not certified:
        logger.warning("%s at n=%s failed certification", name.value, n)
        return None
    return coloring.color_count


def bounds_rows(n: int, seed: int) -> List[BoundsRow]:
    table = [
        (Criterion.INTERSECTION, Setting.CONVEX, Construction.CIRCULANT),
        (Criterion.CROSSING, Setting.CONVEX, Construction.BIPARTITION),
        (Criterion.CROSSING, Setting.GENERAL, Construction.TRANSVERSAL),
        (Criterion.INTERSECTION, Setting.GENERAL, Construction.TRANSVERSAL),
        (Criterion.DISJOINTNESS, Setting.GENERAL, Construction.HALVING),
        (Criterion.NONCROSSING, Setting.GENERAL, Construction.TRIANGLE),
    ]
    rows = []
    for criterion, setting, name in table:
        if setting == Setting.GENERAL and criterion in (Criterion.CROSSING, Criterion.INTERSECTION):
            upper = general_upper_bound(n, criterion)
        else:
            upper = counting_upper_bound(n, criterion)
        rows.append(BoundsRow(
            n=n,
            criterion=criterion,
            setting=setting.value,
            lower=str(lower_bound_formula(n, criterion, setting)),
            upper=upper,
            achieved=_achieved(name, n, seed, criterion),
        ))
    return rows


def cmd_bounds(args: argparse.Namespace) -> int:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["n", "criterion", "setting", "lower", "upper", "achieved"])
    for n in args.n:
        if n < 4:
            raise InputError(f"bounds need n >= 4, got {n}")
        for row in bounds_rows(n, args.seed):
            writer.writerow([
                row.n,
                row.criterion.value,
                row.setting,
                row.lower,
                row.upper,
                "" if row.achieved is None else row.achieved,
            ])
    _emit(buffer.getvalue(), args.out)
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    points = gen_convex(args.n) if args.convex else gen_general(args.n, args.seed)
    instance = SmallInstance.from_conflict_graph(ConflictGraph(points, args.criterion))

    def attempt(solver) -> Optional[int]:
        try:
            return solver(instance)
        except OracleSizeError as e:
            logger.warning(e.detail)
            return None

    out = OracleOut(
        n=args.n,
        criterion=args.criterion,
        convex=args.convex,
        seed=None if args.convex else args.seed,
        nodes=instance.size,
        exact_grundy=attempt(exact_grundy),
        exact_pseudo_grundy=attempt(exact_pseudo_grundy),
    )
    sys.stdout.write(dump_json(out))
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    decomposition = hanani_decompose(args.n)
    if args.out:
        write_decomposition_file(args.out, decomposition)
    else:
        sys.stdout.write(dump_json(DecompositionFile.from_decomposition(decomposition)))
    return 0


def cmd_render(args: argparse.Namespace) -> int:
    points = read_point_file(args.points)
    coloring = read_coloring_file(args.coloring) if args.coloring else None
    write_text(args.out, render_svg(points, coloring, args.classes))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="geogrundy", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a point set")
    gen.add_argument("--n", type=int, required=True)
    source = gen.add_mutually_exclusive_group()
    source.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    source.add_argument("--convex", action="store_true")
    gen.add_argument("--out")
    gen.set_defaults(handler=cmd_gen)

    color = sub.add_parser("color", help="build, complete and certify a coloring")
    color.add_argument("--construction", choices=CONSTRUCTIONS, required=True)
    color.add_argument("--n", type=int)
    color.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    color.add_argument("--points")
    color.add_argument("--criterion", choices=CRITERIA)
    color.add_argument("--out", help="coloring JSON")
    color.add_argument("--report", help="report JSON")
    color.set_defaults(handler=cmd_color)

    verify = sub.add_parser("verify", help="certify a coloring file")
    verify.add_argument("--coloring", required=True)
    verify.add_argument("--points")
    verify.add_argument("--n", type=int)
    drawn = verify.add_mutually_exclusive_group()
    drawn.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    drawn.add_argument("--convex", action="store_true")
    verify.add_argument("--require-proper", action="store_true")
    verify.set_defaults(handler=cmd_verify)

    bounds = sub.add_parser("bounds", help="CSV of lower, upper and achieved values")
    bounds.add_argument("--n", type=int, nargs="+", required=True)
    bounds.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    bounds.add_argument("--out")
    bounds.set_defaults(handler=cmd_bounds)

    oracle = sub.add_parser("oracle", help="exact indices of a small drawing")
    oracle.add_argument("--n", type=int, required=True)
    drawn = oracle.add_mutually_exclusive_group()
    drawn.add_argument("--seed", type=int, default=config.DEFAULT_SEED)
    drawn.add_argument("--convex", action="store_true")
    oracle.add_argument("--criterion", choices=CRITERIA, required=True)
    oracle.set_defaults(handler=cmd_oracle)

    decompose = sub.add_parser("decompose", help="triangles and leave of K_n")
    decompose.add_argument("--n", type=int, required=True)
    decompose.add_argument("--out")
    decompose.set_defaults(handler=cmd_decompose)

    render = sub.add_parser("render", help="SVG of a colored drawing")
    render.add_argument("--points", required=True)
    render.add_argument("--coloring")
    render.add_argument("--class", dest="classes", type=int, nargs="+")
    render.add_argument("--out", required=True)
    render.set_defaults(handler=cmd_render)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(level=config.LOG_LEVEL, stream=sys.stderr,
                        format="%(levelname)s %(name)s: %(message)s")
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except GeoGrundyError as e:
        sys.stderr.write(json.dumps(e.to_dict(), sort_keys=True) + "\n")
        return e.exit_code


if __name__ == "__main__":
    sys.exit(main())
