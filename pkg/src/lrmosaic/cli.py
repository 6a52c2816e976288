"""Command-line interface for Littlewood-Richardson puzzles, tableaux and mosaics.

Exit codes: 0 on success, 1 when a verification finds failures, 2 on
usage errors (bad flags, malformed partitions or strings, inconsistent
box parameters).  Output is deterministic for fixed flags.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import puzzles as pz
from .combinat import (
    BoxParams,
    LRBitableau,
    LRTableau,
    SkewShape,
    all_lr_tableaux,
    complement,
    contains,
    enumerate_lr,
    enumerate_lr_bitableaux,
    lr_count,
    partition,
    partition_of_string,
    partitions_in_box,
    string_of_partition,
)
from .mosaic import (
    OCTAGON,
    ORIENTATIONS,
    Flock,
    Mosaic,
    canonical_flock,
    canonical_mosaic,
    mosaic_to_puzzle,
    mosaics_with_boundary,
    puzzle_to_mosaic,
)


class UsageError(Exception):
    pass


# --- argument helpers ----------------------------------------------------------------


def _partition_arg(text: str):
    text = text.strip()
    if text in ("", "-", "0", "()"):
        return ()
    try:
        parts = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"malformed partition {text!r}; use a comma list such as 3,1")
    if any(p < 0 for p in parts) or parts != sorted(parts, reverse=True):
        raise UsageError(f"{text!r} is not a partition (parts must be weakly decreasing and non-negative)")
    return partition(parts)


def _string_arg(text: str) -> str:
    if not text or set(text) - {"0", "1"}:
        raise UsageError(f"malformed 01-string {text!r}")
    return text


def _box(args) -> BoxParams:
    if args.d is None or args.n is None:
        raise UsageError("--d and --n are required")
    try:
        return BoxParams(args.d, args.n)
    except ValueError as e:
        raise UsageError(str(e))


def _uses_partitions(args) -> bool:
    return any(getattr(args, k) is not None for k in ("nu", "mu", "lam"))


def _uses_strings(args) -> bool:
    return any(getattr(args, k) is not None for k in ("pi", "rho", "sigma", "tau"))


def _boundary(args):
    """``(box, (nu, mu, lam))`` from partition flags, or ``(box, strings)`` from string flags."""
    if _uses_partitions(args) and _uses_strings(args):
        raise UsageError("partition flags and string flags are mutually exclusive")
    if _uses_strings(args):
        strings = [args.pi, args.rho, args.sigma] + ([args.tau] if args.tau is not None else [])
        if any(s is None for s in strings):
            raise UsageError("--pi, --rho and --sigma are all required")
        strings = [_string_arg(s) for s in strings]
        n, d = len(strings[0]), strings[0].count("1")
        if any(len(s) != n or s.count("1") != d for s in strings):
            raise UsageError("all strings need the same length and the same number of 1s")
        if args.n is not None and args.n != n or args.d is not None and args.d != d:
            raise UsageError(f"strings describe d={d}, n={n}, inconsistent with --d/--n")
        try:
            box = BoxParams(d, n)
        except ValueError as e:
            raise UsageError(str(e))
        return box, tuple(strings)
    box = _box(args)
    parts = tuple(_partition_arg(getattr(args, k) or "") for k in ("nu", "mu", "lam"))
    for p in parts:
        if not box.fits(p):
            raise UsageError(f"{p} does not fit the {box.d} x {box.width} box")
    return box, parts


def _partition_triple(args):
    """``(box, (nu, mu, lam))`` from either flag family; strings give ``(nu, mu, lam^v)``."""
    box, data = _boundary(args)
    if not isinstance(data[0], str):
        return box, data
    if len(data) != 3:
        raise UsageError("expected three boundary strings")
    nu, mu, lam_vee = (partition_of_string(s, box) for s in data)
    return box, (nu, mu, complement(lam_vee, box))


def _read_json(path: str | None):
    if path is None:
        raise UsageError("--input is required")
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise UsageError(f"cannot read {path}: {e}")


def _load_object(data):
    """Mosaic, Puzzle, LRTableau or LRBitableau from its JSON form."""
    try:
        if "mosaic" in data:
            return Mosaic.from_json(data["mosaic"])
        if "tiles" in data:
            return Mosaic.from_json(data)
        if "n" in data and ("edges" in data or "rows" in data):
            return pz.Puzzle.from_json(data)
        if isinstance(data.get("outer"), dict):
            return LRBitableau.from_json(data)
        if "outer" in data:
            return LRTableau.from_json(data)
    except (KeyError, TypeError, ValueError) as e:
        raise UsageError(f"malformed document: {e}")
    raise UsageError("unrecognised document")


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True)


class _Out:
    def __init__(self, path: str | None):
        self.path = path
        self.fh = None

    def __enter__(self):
        self.fh = sys.stdout if self.path in (None, "-") else open(self.path, "w")
        return self.fh

    def __exit__(self, *exc):
        if self.fh is not sys.stdout:
            self.fh.close()
        return False


# --- subcommands -----------------------------------------------------------------------


def cmd_coeff(args) -> int:
    method = args.method or "algebra"
    if args.tau is not None:
        if method != "puzzle":
            raise UsageError("four boundary strings need --method puzzle")
        _, strings = _boundary(args)
        with _Out(args.output) as out:
            out.write(f"{len(pz.enumerate_bipuzzles(strings))}\n")
        return 0
    box, (nu, mu, lam) = _partition_triple(args)
    if method == "puzzle":
        strings = tuple(string_of_partition(p, box) for p in (nu, mu, complement(lam, box)))
        value = len(pz.enumerate_puzzles(strings))
    elif method == "tableau":
        value = lr_count(nu, mu, lam)
    elif method == "algebra":
        from .oracle import lr_coefficient_algebra

        value = lr_coefficient_algebra(nu, mu, lam, box)
    else:
        from .bijections import mosaic_to_tableau

        ms = mosaics_with_boundary(box, (nu, mu, complement(lam, box)))
        value = len({mosaic_to_tableau(m) for m in ms})
    with _Out(args.output) as out:
        out.write(f"{value}\n")
    return 0


ENUMERABLE = ("puzzle", "bipuzzle", "mosaic", "bimosaic", "tableau", "bitableau")


def _enumerate_objects(args, box: BoxParams) -> list:
    kind = args.object
    filtered = _uses_partitions(args) or _uses_strings(args)
    if kind in ("puzzle", "mosaic"):
        if filtered:
            _, (nu, mu, lam) = _partition_triple(args)
            strings = tuple(string_of_partition(p, box) for p in (nu, mu, complement(lam, box)))
            found = pz.enumerate_puzzles(strings)
        else:
            found = [p for p in pz.all_puzzles(box.n) if p.boundary()[0].count("1") == box.d]
        return found if kind == "puzzle" else [puzzle_to_mosaic(p, box) for p in found]
    if kind in ("bipuzzle", "bimosaic"):
        if filtered:
            _, data = _boundary(args)
            if not isinstance(data[0], str) or len(data) != 4:
                raise UsageError("bipuzzles are filtered by --pi --rho --sigma --tau")
            found = pz.enumerate_bipuzzles(data)
        else:
            found = [p for p in pz.all_puzzles(box.n, region=pz.RHOMBUS_REGION) if p.boundary()[0].count("1") == box.d]
        return found if kind == "bipuzzle" else [puzzle_to_mosaic(p, box) for p in found]
    if kind == "tableau":
        if filtered:
            _, (nu, mu, lam) = _partition_triple(args)
            return enumerate_lr(SkewShape(lam, mu), nu) if contains(lam, mu) else []
        return all_lr_tableaux(box)
    if filtered:
        raise UsageError("bitableaux are not filtered by boundary flags")
    parts = partitions_in_box(box)
    out = []
    for lam in parts:
        for mu in parts:
            if contains(lam, mu):
                for xi in parts:
                    for nu in parts:
                        out.extend(enumerate_lr_bitableaux(SkewShape(lam, mu), xi, nu))
    return out


def cmd_enumerate(args) -> int:
    if args.object is None:
        raise UsageError(f"--object is required ({', '.join(ENUMERABLE)})")
    if _uses_strings(args) and args.d is None:
        box, _ = _boundary(args)
    else:
        box = _box(args)
    objs = _enumerate_objects(args, box)
    if args.sample is not None:
        rng = random.Random(args.seed)
        idx = sorted(rng.sample(range(len(objs)), min(args.sample, len(objs))))
        objs = [objs[i] for i in idx]
    with _Out(args.output) as out:
        if args.count:
            out.write(f"{len(objs)}\n")
        else:
            for o in objs:
                out.write(_dump(o.to_json()) + "\n")
    return 0


def _mosaic_from_args(args) -> Mosaic:
    if args.input is not None:
        obj = _load_object(_read_json(args.input))
        if not isinstance(obj, Mosaic):
            raise UsageError("expected a mosaic document")
        if not obj.validate():
            raise UsageError("input is not a valid mosaic")
        return obj
    if args.tau is not None:
        box, strings = _boundary(args)
        parts = tuple(partition_of_string(s, box) for s in strings)
    else:
        box, (nu, mu, lam) = _partition_triple(args)
        parts = (nu, mu, complement(lam, box))
    found = mosaics_with_boundary(box, parts)
    if not found:
        raise UsageError("no mosaic has this boundary")
    if not 0 <= args.index < len(found):
        raise UsageError(f"--index must be below {len(found)}")
    return found[args.index]


def cmd_migrate(args) -> int:
    from .migration import MigrationError, migrate_flock

    m = _mosaic_from_args(args)
    if args.flock is not None:
        try:
            flock = Flock.from_json(_read_json(args.flock))
        except (KeyError, TypeError, ValueError) as e:
            raise UsageError(f"malformed flock: {e}")
    else:
        flock = canonical_flock(m, args.source, args.orientation)
    if args.target not in m.region.nest_names:
        raise UsageError(f"no nest {args.target!r} in a {m.kind}")
    try:
        r = migrate_flock(m, flock, args.target)
    except ValueError as e:
        raise UsageError(str(e))
    except MigrationError as e:
        with _Out(args.output) as out:
            out.write(_dump({"error": str(e), "flock": flock.to_json()}) + "\n")
        return 1
    with _Out(args.output) as out:
        if args.trace:
            for t in r.traces:
                out.write(_dump(t.to_json()) + "\n")
        out.write(_dump(r.to_json()) + "\n")
    return 0


MAPS = (
    "mosaic-to-tableau",
    "tableau-to-mosaic",
    "mosaic-to-puzzle",
    "puzzle-to-mosaic",
    "commute-mosaic",
    "uncommute-mosaic",
    "commute-tableau",
    "associate-bimosaic",
    "unassociate-bimosaic",
    "associate-bitableau",
    "unassociate-bitableau",
    "rotate-mosaic",
)


def _expect(obj, cls, what: str):
    if not isinstance(obj, cls):
        raise UsageError(f"{what} expects a {cls.__name__} document")
    return obj


def cmd_biject(args) -> int:
    from . import bijections as bj

    if args.map is None:
        raise UsageError(f"--map is required ({', '.join(MAPS)})")
    raw = _read_json(args.input)
    obj = _load_object(raw)
    name = args.map
    if name == "mosaic-to-tableau":
        doc = bj.mosaic_to_tableau(_expect(obj, Mosaic, name), args.variant).to_json()
    elif name == "tableau-to-mosaic":
        doc = bj.tableau_to_mosaic(_expect(obj, LRTableau, name), _box(args)).to_json()
    elif name == "mosaic-to-puzzle":
        doc = mosaic_to_puzzle(_expect(obj, Mosaic, name)).to_json()
    elif name == "puzzle-to-mosaic":
        p = _expect(obj, pz.Puzzle, name)
        box = BoxParams(p.boundary()[0].count("1"), p.n)
        doc = puzzle_to_mosaic(p, box).to_json()
    elif name == "commute-mosaic":
        r = bj.commute_mosaic_full(_expect(obj, Mosaic, name), args.orientation_a, args.orientation_b)
        doc = {"mosaic": r.mosaic.to_json(), "orientation_a": r.orientation_a, "orientation_b": r.orientation_b}
    elif name == "uncommute-mosaic":
        m = Mosaic.from_json(raw["mosaic"]) if "mosaic" in raw else _expect(obj, Mosaic, name)
        code_a = raw.get("orientation_a", args.orientation_a)
        code_b = raw.get("orientation_b", args.orientation_b)
        doc = bj.uncommute_mosaic(m, code_a, code_b).to_json()
    elif name == "commute-tableau":
        doc = bj.commute_tableau(_expect(obj, LRTableau, name), _box(args)).to_json()
    elif name == "associate-bimosaic":
        r = bj.associate_bimosaic_full(_expect(obj, Mosaic, name))
        doc = {"mosaic": r.mosaic.to_json(), "orientations": dict(sorted(r.orientations.items()))}
    elif name == "unassociate-bimosaic":
        if "mosaic" not in raw or "orientations" not in raw:
            raise UsageError("unassociate-bimosaic expects the output of associate-bimosaic")
        doc = bj.unassociate_bimosaic(Mosaic.from_json(raw["mosaic"]), raw["orientations"]).to_json()
    elif name == "associate-bitableau":
        doc = bj.associate_bitableau(_expect(obj, LRBitableau, name), _box(args)).to_json()
    elif name == "unassociate-bitableau":
        doc = bj.unassociate_bitableau(_expect(obj, LRBitableau, name), _box(args)).to_json()
    else:
        doc = bj.rotate_mosaic(_expect(obj, Mosaic, name), args.turns).to_json()
    with _Out(args.output) as out:
        out.write(_dump(doc) + "\n")
    return 0


def _suites():
    from . import oracle, sweeps

    def three_way(box):
        rows = oracle.three_way_sweep(box, workers=sweeps.worker_count())
        bad = [r.to_json() for r in rows if not r.agree]
        return {"identity": "three-way", "box": {"d": box.d, "n": box.n}, "cases": len(rows),
                "failures": bad[: sweeps.MAX_WITNESSES], "ok": not bad}

    def identity(name):
        return lambda box: oracle.verify_identities(box, name).to_json()

    def sweep(fn, **kw):
        def run(box):
            doc = fn(box, **kw).to_json()
            doc["box"] = {"d": box.d, "n": box.n}
            return doc

        return run

    return {
        "three-way": three_way,
        "commutativity": identity("commutativity"),
        "associativity": identity("associativity"),
        "bipuzzle": identity("bipuzzle"),
        "bitableau": identity("bitableau"),
        "mosaic-puzzle": sweep(sweeps.mosaic_puzzle_sweep),
        "migration": sweep(sweeps.migration_sweep),
        "bimosaic-migration": sweep(sweeps.migration_sweep, kind=OCTAGON),
        "dividing-line": sweep(sweeps.dividing_line_sweep),
        "tableau-bijection": sweep(sweeps.tableau_bijection_sweep),
        "commutor": sweep(sweeps.commutor_sweep),
        "bimosaic-associator": sweep(sweeps.bimosaic_associator_sweep),
        "bitableau-associator": sweep(sweeps.bitableau_associator_sweep),
        "jdt": sweep(sweeps.jdt_sweep),
    }


SUITES = (
    "three-way",
    "commutativity",
    "associativity",
    "bipuzzle",
    "bitableau",
    "mosaic-puzzle",
    "migration",
    "bimosaic-migration",
    "dividing-line",
    "tableau-bijection",
    "commutor",
    "bimosaic-associator",
    "bitableau-associator",
    "jdt",
)


def cmd_verify(args) -> int:
    from .sweeps import boxes

    if args.suite is None:
        raise UsageError(f"--suite is required ({', '.join(SUITES)})")
    if args.max_n is not None:
        if args.d is not None or args.n is not None:
            raise UsageError("--max-n replaces --d/--n")
        targets = boxes(args.max_n)
    else:
        targets = [_box(args)]
    run = _suites()[args.suite]
    reports = [run(b) for b in targets]
    ok = all(r["ok"] for r in reports)
    with _Out(args.output) as out:
        out.write(_dump({"suite": args.suite, "ok": ok, "reports": reports}) + "\n")
    return 0 if ok else 1


def cmd_render(args) -> int:
    from .render import RenderError, render

    if args.input is not None:
        obj = _load_object(_read_json(args.input))
    else:
        box = _box(args)
        beta = _partition_arg(args.mu or "")
        if not box.fits(beta):
            raise UsageError(f"{beta} does not fit the box")
        obj = canonical_mosaic(box, beta, "A")
    fmt = args.format or "svg"
    if fmt == "json":
        text = _dump(obj.to_json()) + "\n"
    else:
        try:
            text = render(obj, fmt)
        except RenderError as e:
            raise UsageError(str(e))
    with _Out(args.output) as out:
        out.write(text)
    return 0


# --- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--d", type=int, help="rows of the box")
    common.add_argument("--n", type=int, help="d plus the columns of the box")
    common.add_argument("--nu", help="partition as a comma list")
    common.add_argument("--mu", help="partition as a comma list")
    common.add_argument("--lambda", dest="lam", help="partition as a comma list")
    common.add_argument("--pi", help="01-string")
    common.add_argument("--rho", help="01-string")
    common.add_argument("--sigma", help="01-string")
    common.add_argument("--tau", help="01-string (bipuzzles)")
    common.add_argument("--input", help="input JSON file, '-' for standard input")
    common.add_argument("--output", help="output file, '-' or omitted for standard output")
    common.add_argument("--format", choices=("json", "svg", "ascii"))
    common.add_argument("--method", choices=("puzzle", "tableau", "algebra", "migration"))
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--max-n", dest="max_n", type=int)

    parser = argparse.ArgumentParser(prog="lrmosaic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("coeff", parents=[common], help="one Littlewood-Richardson coefficient")

    p = sub.add_parser("enumerate", parents=[common], help="list objects as JSON lines")
    p.add_argument("--object", choices=ENUMERABLE)
    p.add_argument("--count", action="store_true", help="print only the number of objects")
    p.add_argument("--sample", type=int, help="keep a random subset of this size (see --seed)")

    p = sub.add_parser("migrate", parents=[common], help="migrate a flock between nests")
    p.add_argument("--source", default="A")
    p.add_argument("--target", default="B")
    p.add_argument("--orientation", default="+EN", choices=ORIENTATIONS)
    p.add_argument("--flock", help="flock JSON file; default is the canonical flock of the source nest")
    p.add_argument("--index", type=int, default=0, help="which mosaic with the given boundary")
    p.add_argument("--trace", action="store_true", help="emit one JSON line per rhombus journey first")

    p = sub.add_parser("biject", parents=[common], help="apply a bijection to a JSON object")
    p.add_argument("--map", choices=MAPS)
    p.add_argument("--variant", default="-EN", choices=ORIENTATIONS)
    p.add_argument("--orientation-a", dest="orientation_a", default="+EN", choices=ORIENTATIONS)
    p.add_argument("--orientation-b", dest="orientation_b", default="+EN", choices=ORIENTATIONS)
    p.add_argument("--turns", type=int, default=1)

    p = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    p.add_argument("--suite", choices=SUITES)

    sub.add_parser("render", parents=[common], help="draw a mosaic, puzzle or tableau")
    return parser


COMMANDS = {
    "coeff": cmd_coeff,
    "enumerate": cmd_enumerate,
    "migrate": cmd_migrate,
    "biject": cmd_biject,
    "verify": cmd_verify,
    "render": cmd_render,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"lrmosaic: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
