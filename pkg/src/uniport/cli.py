"""Command-line entry point.

Exit status: 0 on success, 1 on a domain failure (incompatible family,
no beta found, unauthorized set), 2 on bad usage. JSON output always
carries ``"schema": 1``.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .access import build_gamma
from .compat import DeltaFamily, is_compatible
from .core import UniportError, format_family, format_vector
from .enumeration import TRANSFORMS, build_table, conjecture_scan, enumerate_deltas, enumerate_signatures
from .gf import check_prime, default_prime
from .hierarchy import hierarchy
from .polymatroid import UniformPolymatroid
from .represent import BetaNotFound, build_eta2_explicit, build_representation, eta2_split, find_beta, verify_port
from .scheme import ShareBundle, build_scheme, distribute, instance_from_json, parse_participants, reconstruct

SCHEMA = 1


class UsageError(Exception):
    pass


def _emit(data: dict) -> None:
    print(json.dumps({"schema": SCHEMA, **data}))


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _polymatroid(args) -> UniformPolymatroid:
    try:
        return UniformPolymatroid.from_increments(_ints(args.g), args.m)
    except UniportError as e:
        raise UsageError(f"--g: {e}") from None


def _family(args, m: int) -> DeltaFamily:
    try:
        return DeltaFamily.parse(args.delta, m)
    except UniportError as e:
        raise UsageError(f"--delta: {e}") from None


def _prime(args, m: int) -> int:
    if args.prime == "auto":
        return default_prime(m)
    try:
        return check_prime(int(args.prime))
    except (ValueError, UniportError):
        raise UsageError(f"--prime must be 'auto' or a prime, got {args.prime!r}") from None


def _blocks(args, z: UniformPolymatroid) -> tuple[int, ...] | None:
    if args.blocks is None:
        return None
    sizes = _ints(args.blocks)
    if len(sizes) != z.m:
        raise UsageError(f"--blocks needs {z.m} sizes")
    return sizes


def _require_compatible(z, d) -> bool:
    res = is_compatible(z, d)
    if not res:
        _emit({"g": list(z.g[:-1]), "delta": d.as_json(), **res.as_json()})
    return bool(res)


# -- commands ----------------------------------------------------------------


def cmd_check_compat(args) -> int:
    z = _polymatroid(args)
    d = _family(args, z.m)
    res = is_compatible(z, d)
    if args.format == "text":
        print("compatible" if res else f"incompatible: condition {res.condition} fails for {format_family([res.X, res.Y])}")
    else:
        _emit({"g": list(z.g[:-1]), "delta": d.as_json(), **res.as_json()})
    return 0 if res else 1


def cmd_min_gamma(args) -> int:
    z = _polymatroid(args)
    d = _family(args, z.m)
    sizes = _blocks(args, z)
    if not _require_compatible(z, d):
        return 1
    gamma = build_gamma(z, d, sizes)
    if args.format == "csv":
        for v in gamma.min_vectors:
            print(",".join(str(c) for c in v))
    elif args.format == "text":
        for v in gamma.min_vectors:
            print(format_vector(v))
    else:
        _emit({"g": list(z.g[:-1]), "delta": d.as_json(), "blocks": list(gamma.block_sizes), "minGamma": gamma.as_json()})
    return 0


def cmd_hierarchy(args) -> int:
    z = _polymatroid(args)
    d = _family(args, z.m)
    if not _require_compatible(z, d):
        return 1
    _emit(hierarchy(build_gamma(z, d)).as_json())
    return 0


def cmd_classify(args) -> int:
    z = _polymatroid(args)
    d = _family(args, z.m)
    res = is_compatible(z, d)
    if not res:
        _emit({**res.as_json(), "code": "-"})
        return 1
    report = hierarchy(build_gamma(z, d)).as_json()
    out = {"compatible": True, "code": report.pop("code")}
    out.update(report)
    _emit(out)
    return 0


def _check_m(m: int) -> None:
    if not 2 <= m <= 5:
        raise UsageError(f"--m must be between 2 and 5, got {m}")


def cmd_table(args) -> int:
    _check_m(args.m)
    table = build_table(args.m)
    if args.format == "csv":
        print("\n".join(table.to_csv_lines()))
    elif args.format == "json":
        _emit(table.as_json())
    else:
        print("\n".join(table.to_text_lines()))
    return 0


def cmd_enumerate_delta(args) -> int:
    _check_m(args.m)
    classes = enumerate_deltas(args.m)
    if args.format == "text":
        for c in classes:
            print(f"{c.representative}  (orbit {c.orbit_size})")
    else:
        _emit(
            {
                "m": args.m,
                "count": len(classes),
                "classes": [{"delta": c.representative.as_json(), "orbit": c.orbit_size} for c in classes],
                "signatures": [list(s.representative) for s in enumerate_signatures(args.m)],
            }
        )
    return 0


def cmd_conjecture_scan(args) -> int:
    _check_m(args.m)
    names = [t.strip() for t in args.amplify.split(",") if t.strip()]
    unknown = [t for t in names if t not in TRANSFORMS]
    if unknown:
        raise UsageError(f"unknown transform(s) {unknown}; known: {sorted(TRANSFORMS)}")
    report = conjecture_scan(args.m, names)
    if args.archive and report["mismatches"]:
        with open(args.archive, "w") as fh:
            json.dump({"schema": SCHEMA, **report}, fh, indent=1)
    _emit({**report, "mismatchCount": len(report["mismatches"])})
    return 0


def cmd_represent(args) -> int:
    z = _polymatroid(args)
    d = _family(args, z.m)
    p = _prime(args, z.m)
    if not _require_compatible(z, d):
        return 1
    if args.explicit:
        x = eta2_split(d)
        if z.eta != 2 or x is None:
            raise UsageError("--explicit needs eta(g) = 2 and a family of singletons plus pairs")
        ext = build_eta2_explicit(z, x, p)
    else:
        try:
            ext = find_beta(build_representation(z, p), d, args.tries, random.Random(args.seed))
        except BetaNotFound as e:
            _emit(e.as_json())
            return 1
    ok, witness = verify_port(ext, d)
    transcript = [
        {"X": sorted(i + 1 for i in range(z.m) if (x >> i) & 1), "inDelta": d.contains(x), "rankWithBeta": ext.rank_with_beta(x)}
        for x in range(1 << z.m)
    ]
    _emit(
        {
            "found": True,
            **ext.as_json(),
            "portVerified": ok,
            "portWitness": None if ok else format_family([witness]),
            "transcript": transcript,
        }
    )
    return 0 if ok else 1


def cmd_share(args) -> int:
    z = _polymatroid(args)
    d = _family(args, z.m)
    p = _prime(args, z.m)
    sizes = _blocks(args, z)
    if sizes is None:
        raise UsageError("--blocks is required")
    if not _require_compatible(z, d):
        return 1
    try:
        inst = build_scheme(z, d, sizes, p, args.seed, args.tries)
    except BetaNotFound as e:
        _emit(e.as_json())
        return 1
    bundle = distribute(inst, args.secret, args.seed)
    if args.instance_out:
        with open(args.instance_out, "w") as fh:
            json.dump(inst.as_json(), fh)
    if args.bundle_out:
        with open(args.bundle_out, "w") as fh:
            json.dump(bundle.as_json(), fh)
    out = bundle.as_json()
    out.pop("schema")
    _emit({**out, "participants": [inst.label(q) for q in range(len(inst.vectors))], "p": p})
    return 0


def cmd_reconstruct(args) -> int:
    try:
        with open(args.instance) as fh:
            inst_data = json.load(fh)
        with open(args.bundle) as fh:
            bundle = ShareBundle.from_json(json.load(fh))
    except (OSError, ValueError, KeyError) as e:
        raise UsageError(f"cannot read input: {e}") from None
    inst = instance_from_json(inst_data)
    try:
        subset = parse_participants(args.set, inst.block_sizes)
    except UniportError as e:
        raise UsageError(f"--set: {e}") from None
    if len(bundle.shares) != len(inst.vectors):
        raise UsageError("bundle and instance disagree on the number of participants")
    try:
        secret = reconstruct(inst, subset, bundle.shares)
    except UniportError as e:
        _emit({"recovered": False, "error": str(e)})
        return 1
    _emit({"recovered": True, "secret": secret})
    return 0


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="uniport", description="Uniform polymatroid access structures and ideal schemes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_gd(name, help, formats=("json",)):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--g", required=True, help="increments g_0..g_{m-1}, e.g. 3,2,1,1")
        sp.add_argument("--m", type=int, help="number of blocks; lets --g also carry the trailing g_m = 0")
        sp.add_argument("--delta", required=True, help='minimal sets, e.g. "{1};{2,3}"')
        sp.add_argument("--format", choices=formats, default=formats[0])
        return sp

    sp = with_gd("check-compat", "test compatibility of g and a family", ("json", "text"))
    sp.set_defaults(func=cmd_check_compat)

    sp = with_gd("min-gamma", "minimal authorized vectors", ("json", "csv", "text"))
    sp.add_argument("--blocks", help="block sizes, default g_0 + 1 each")
    sp.set_defaults(func=cmd_min_gamma)

    with_gd("hierarchy", "hierarchical preorder on blocks").set_defaults(func=cmd_hierarchy)
    with_gd("classify", "compatibility, access structure and order type").set_defaults(func=cmd_classify)

    sp = sub.add_parser("table", help="classification grid over all families and sign classes")
    sp.add_argument("--m", type=int, default=4)
    sp.add_argument("--format", choices=("text", "csv", "json"), default="text")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("enumerate-delta", help="families up to relabelling")
    sp.add_argument("--m", type=int, default=4)
    sp.add_argument("--format", choices=("json", "text"), default="json")
    sp.set_defaults(func=cmd_enumerate_delta)

    sp = sub.add_parser("conjecture-scan", help="compare preorders across increment sequences of one sign class")
    sp.add_argument("--m", type=int, default=4)
    sp.add_argument("--amplify", default="add1,scale2")
    sp.add_argument("--archive", help="write mismatches to this JSON file")
    sp.set_defaults(func=cmd_conjecture_scan)

    sp = with_gd("represent", "linear representation and beta search")
    sp.add_argument("--prime", default="auto")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--tries", type=int, default=200)
    sp.add_argument("--explicit", action="store_true", help="use the closed-form construction for eta(g) = 2")
    sp.set_defaults(func=cmd_represent)

    sp = with_gd("share", "build a scheme and deal shares")
    sp.add_argument("--blocks", required=True)
    sp.add_argument("--secret", type=int, required=True)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--prime", default="auto")
    sp.add_argument("--tries", type=int, default=200)
    sp.add_argument("--instance-out")
    sp.add_argument("--bundle-out")
    sp.set_defaults(func=cmd_share)

    sp = sub.add_parser("reconstruct", help="recover a secret from stored shares")
    sp.add_argument("--instance", required=True)
    sp.add_argument("--bundle", required=True)
    sp.add_argument("--set", required=True, help='participants as block.index, e.g. "1.1,2.2"')
    sp.set_defaults(func=cmd_reconstruct)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"uniport: error: {e}", file=sys.stderr)
        return 2
    except UniportError as e:
        _emit({"error": str(e)})
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
