"""Command line front end.

    geocurves classify h2xh2 --d 5 --ram "11:both" --limit 5
    geocurves classify ball --d -1 --limit 4 --verify --format json
    geocurves oracle hilbert -1 -1 2
    geocurves explain transfer

Results go to stdout, diagnostics to stderr.  Exit status is 0 on success,
2 for invalid input and 1 for an internal inconsistency.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import TextIO

from . import hermitian, hilbert_surface, picard_surface
from .arith import Place, hilbert_local, hilbert_oracle
from .errors import InputError, InternalInconsistency, UnsupportedDeskScale
from .qfields import QuadField

MAX_LIMIT = 10_000

EXPLANATIONS = {
    "h2xh2": (
        "Irreducible lattices in SL2(R) x SL2(R) come from a quaternion algebra A over a "
        "totally real field K that is split at exactly two real places. Commensurability "
        "classes of arithmetic Fuchsian subgroups match quadratic subfields K0 of K together "
        "with K0-algebras B (up to automorphisms of K0) such that A = K (x) B. Here K is real "
        "quadratic, so K0 = Q and B ranges over indefinite quaternion algebras over Q."
    ),
    "transfer": (
        "K (x) B ramifies at both places of K over a prime that splits in K and B ramifies "
        "at, and nowhere over a prime that is inert or ramified in K. So A descends to Q "
        "exactly when its ramification is a union of full pairs over split primes. "
        "Changing B at non-split primes gives infinitely many classes."
    ),
    "obstruction": (
        "A totally real field of odd degree over Q has no quadratic subfield (tower law), "
        "so a lattice in SL2(R) x SL2(R) built over such a field contains no arithmetic "
        "Fuchsian subgroups and the surface has no geodesic curves."
    ),
    "ball": (
        "For a simple-type lattice with CM pair K/K0, classes of geodesic curves match "
        "K0-quaternion algebras (up to automorphisms of K0) ramified at all but one "
        "infinite place and at finitely many places not split in K. With K0 = Q these "
        "are indefinite algebras over Q ramified only at primes inert or ramified in K; "
        "there are infinitely many."
    ),
    "simple-type": (
        "Arithmetic lattices in SU(2,1) not of simple type contain no totally geodesic "
        "curves, so no computation is needed for them."
    ),
    "normal-form": (
        "Each algebra attached to a curve on a Picard surface over Q(sqrt(d)) contains the "
        "field, hence is (n, D) with D the field discriminant and n a positive squarefree "
        "integer. The smallest such n is reported."
    ),
    "verify": (
        "Verification rebuilds the ambient hermitian space: the trace form of B = (n, D) on "
        "the K-basis {1, i} is diag(2, -2n); adding an orthogonal line of norm "
        "det(h)/det(h_B) gives a form with the same rank, signature and determinant as h, "
        "hence one isomorphic to h."
    ),
}


def _bool(text: str) -> bool:
    t = text.strip().lower()
    if t in ("true", "yes", "1", "on"):
        return True
    if t in ("false", "no", "0", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected true or false, got {text!r}")


def _limit(text: str) -> int:
    n = int(text)
    if not 1 <= n <= MAX_LIMIT:
        raise argparse.ArgumentTypeError(f"limit must lie in [1, {MAX_LIMIT}]")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geocurves", description="Geodesic curves on Shimura surfaces."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    classify = sub.add_parser("classify", help="enumerate classes of geodesic curves")
    csub = classify.add_subparsers(dest="kind", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--limit", type=_limit, default=10)
    common.add_argument("--format", choices=("json", "table"), default="table")

    hxh = csub.add_parser("h2xh2", parents=[common], help="quotients of H^2 x H^2")
    hxh.add_argument("--d", type=int, help="radicand of the real quadratic field")
    hxh.add_argument("--ram", default="", help='finite ramification of A, e.g. "11:both,19:0"')
    hxh.add_argument("--degree", type=int, default=2, help="degree of the totally real field")

    ball = csub.add_parser("ball", parents=[common], help="ball quotients")
    ball.add_argument("--d", type=int, required=True, help="negative squarefree radicand")
    ball.add_argument("--verify", action="store_true")
    ball.add_argument("--simple-type", type=_bool, default=True)
    ball.add_argument("--base-degree", type=int, default=1, help="degree of the real subfield K0")

    oracle = sub.add_parser("oracle", help="brute-force checks")
    osub = oracle.add_subparsers(dest="oracle", required=True)
    hil = osub.add_parser("hilbert", help="Hilbert symbol by exhaustive search")
    hil.add_argument("a", type=int)
    hil.add_argument("b", type=int)
    hil.add_argument("place")

    explain = sub.add_parser("explain", help="describe the classification behind a verdict")
    explain.add_argument("topic", choices=sorted(EXPLANATIONS))
    return parser


def _h2xh2_report(args) -> dict:
    surface: dict = {"kind": "h2xh2", "degree": args.degree}
    if args.degree != 2:
        verdict = hilbert_surface.no_quadratic_subfield(args.degree)
        if verdict is hilbert_surface.Obstruction.OBSTRUCTED:
            return {
                "surface": surface,
                "admissible": False,
                "reason": "obstructed: " + EXPLANATIONS["obstruction"],
                "classes": [],
            }
        raise UnsupportedDeskScale(
            f"degree {args.degree} fields may have quadratic subfields, but only "
            "real quadratic fields are computed"
        )
    if args.d is None:
        raise InputError("--d is required for a real quadratic field")
    K = QuadField(args.d)
    S = hilbert_surface.validate_surface(K, hilbert_surface.parse_ram(K, args.ram))
    surface.update(d=K.d, disc=K.disc, ram=S.labels())
    verdict = hilbert_surface.admits_fuchsian(S)
    classes = []
    if verdict:
        for c in hilbert_surface.enumerate_classes(S, args.limit):
            classes.append(
                {"ram": c.B.labels(), "symbol": c.symbol.as_list(), "division": c.cocompact}
            )
    return {
        "surface": surface,
        "admissible": verdict.admissible,
        "reason": verdict.reason,
        "classes": classes,
    }


def _ball_report(args) -> dict:
    surface: dict = {"kind": "ball", "d": args.d, "simple_type": args.simple_type}
    gate, reason = picard_surface.simple_type_gate(args.simple_type)
    if gate is picard_surface.GateVerdict.NO_CURVES:
        return {"surface": surface, "admissible": False, "reason": reason, "classes": []}
    S = picard_surface.make_ball_surface(args.d, args.base_degree)
    surface.update(disc=S.K.disc, cocompact=S.cocompact)
    classes = []
    for c in picard_surface.enumerate_classes(S, args.limit):
        row = {
            "ram": c.B.labels(),
            "symbol": c.symbol(S).as_list(),
            "n": c.n,
            "division": not c.cuspidal,
        }
        if args.verify:
            row["verified"] = hermitian.verify_curve(S, c.B)
        classes.append(row)
    return {
        "surface": surface,
        "admissible": True,
        "reason": "simple type over Q: every allowed ramification set gives a class",
        "classes": classes,
    }


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2)


def render_table(report: dict) -> str:
    surface = ", ".join(f"{k}={_cell(v)}" for k, v in report["surface"].items())
    lines = [f"surface: {surface}", f"admissible: {_cell(report['admissible'])}"]
    lines.append(f"reason: {report['reason']}")
    rows = report["classes"]
    if rows:
        cols = list(rows[0])
        table = [["#"] + cols] + [[str(i)] + [_cell(r[c]) for c in cols] for i, r in enumerate(rows, 1)]
        widths = [max(len(row[k]) for row in table) for k in range(len(table[0]))]
        for row in table:
            lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines)


def _cell(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, list):
        if all(isinstance(x, str) for x in v):
            return "{" + ", ".join(v) + "}"
        return "(" + ", ".join(map(str, v)) + ")"
    return str(v)


def run(argv=None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "classify":
            report = _h2xh2_report(args) if args.kind == "h2xh2" else _ball_report(args)
            text = render_json(report) if args.format == "json" else render_table(report)
        elif args.command == "oracle":
            v = Place.parse(args.place)
            value = hilbert_oracle(args.a, args.b, v)
            if value != hilbert_local(args.a, args.b, v):
                raise InternalInconsistency(
                    f"oracle and closed form disagree on ({args.a}, {args.b})_{v}"
                )
            text = str(value)
        else:
            text = EXPLANATIONS[args.topic]
    except InternalInconsistency as exc:
        print(f"internal error: {exc}", file=stderr)
        return 1
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    print(text, file=stdout)
    return 0


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
