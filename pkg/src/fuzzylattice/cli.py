"""Command line entry point.

Exit status is 0 on success, 1 when a check fails (details as JSON on
stdout) and 2 for usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .core import FrameError, is_fuzzy_poset
from .gen import GenConfig, gen_bounded_fuzzy_lattice, gen_fuzzy_poset
from .io import compare, dump, dumps, load
from .morphism import LatticeMap, is_bounded_homomorphism, is_monotone
from .order import LatticeCertError, certify_lattice, fuzzy_join, fuzzy_meet
from .product import ProductSizeError, direct_product, witness_intransitivity
from .tnorm import BUILTIN_NAMES
from .verify import THEOREMS, VerifyConfig, verify_theorem

OK, FAILED, USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _load(path, fmt=None):
    try:
        return load(path, fmt)
    except FrameError as e:
        raise InputError(f"{path}: {e}") from None


def _lattice(path, fmt=None):
    frame = _load(path, fmt)
    try:
        return certify_lattice(frame)
    except LatticeCertError as e:
        raise InputError(f"{path}: not a bounded fuzzy lattice ({e.kind})") from None


def _cert_dict(frame):
    labels = frame.elements
    try:
        lat = certify_lattice(frame)
    except LatticeCertError as e:
        return False, {"certified": False, "kind": e.kind, "detail": [labels[k] for k in e.detail]}
    return True, {"certified": True, "bottom": labels[lat.bottom], "top": labels[lat.top]}


def cmd_check(args) -> int:
    frame = _load(args.file, args.format)
    poset = is_fuzzy_poset(frame)
    ok, cert = _cert_dict(frame)
    _emit({"file": str(args.file), "poset": poset.to_dict(frame.elements), "lattice": cert})
    return OK if ok else FAILED


def cmd_product(args) -> int:
    factors = [_lattice(p, args.format) for p in args.files]
    try:
        p = direct_product(factors, args.tnorm, separator=args.sep)
    except ProductSizeError as e:
        raise InputError(str(e)) from None
    for note in p.notes:
        print(f"note: {note}", file=sys.stderr)
    out_fmt = args.out_format or (Path(args.output).suffix.lstrip(".") if args.output else "json")
    meta = {"name": f"{args.tnorm} product", "source": [str(f) for f in args.files]}
    if args.output:
        dump(p.frame, args.output, out_fmt, meta)
    else:
        sys.stdout.write(dumps(p.frame, out_fmt, meta))
    return OK


def cmd_compare(args) -> int:
    a, b = _load(args.a), _load(args.b)
    if len(a) != len(b):
        raise InputError(f"size mismatch: {len(a)} vs {len(b)} elements")
    rep = compare(a, b, args.tol)
    _emit(rep.to_dict(a.elements))
    return OK if rep.passed else FAILED


def _meet_join(args, op) -> int:
    frame = _load(args.file, args.format)
    try:
        i, j = frame.index(args.a), frame.index(args.b)
    except KeyError as e:
        raise InputError(str(e.args[0])) from None
    try:
        k = op(frame, i, j)
    except LatticeCertError as e:
        _emit({"exists": False, "kind": e.kind, "pair": [args.a, args.b]})
        return FAILED
    print(frame.elements[k])
    return OK


def cmd_hom(args) -> int:
    src, dst = _lattice(args.src), _lattice(args.dst)
    try:
        mapping = json.loads(Path(args.map).read_text(encoding="utf-8"))
        m = LatticeMap.from_labels(src, dst, mapping)
    except (OSError, json.JSONDecodeError, ValueError, KeyError) as e:
        raise InputError(f"bad map {args.map}: {e}") from None
    hom = is_bounded_homomorphism(m)
    mono = is_monotone(m)
    names = src.elements

    def show(v):
        return {"name": v.name, "holds": v.holds,
                "witnesses": [[w[0], *(names[k] for k in w[1:])] if isinstance(w[0], str)
                              else [names[k] for k in w] for w in v.witnesses]}

    _emit({"bounded_homomorphism": show(hom), "monotone": show(mono)})
    return OK if hom.holds else FAILED


def cmd_witness(args) -> int:
    frame = _load(args.file, args.format)
    w = witness_intransitivity(frame)
    if w is None:
        _emit({"transitive": True, "witness": None})
        return OK
    a, b, c = w
    _emit({
        "transitive": False,
        "witness": [frame.elements[k] for k in w],
        "grades": [float(frame.mu[a, b]), float(frame.mu[b, c]), float(frame.mu[a, c])],
    })
    return FAILED


def cmd_verify(args) -> int:
    tnorms = tuple(t for t in args.tnorm.split(",") if t) if args.tnorm else None
    try:
        cfg = VerifyConfig(
            trials=args.trials, seed=args.seed, tnorms=tnorms,
            size_range=tuple(args.sizes), factor_range=tuple(args.factors), variant=args.variant,
        )
        run = verify_theorem(args.theorem, cfg)
    except ValueError as e:
        raise InputError(str(e)) from None
    summary = run.to_dict()
    if run.failures:
        outdir = Path(args.bundle_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        paths = []
        for k, b in enumerate(run.failures):
            p = outdir / f"{args.theorem}-seed{args.seed}-{k:03d}.json"
            p.write_text(json.dumps(b, indent=1), encoding="utf-8")
            paths.append(str(p))
        summary["failures"] = len(run.failures)
        summary["bundles"] = paths
    _emit(summary)
    return OK if run.passed else FAILED


def cmd_gen(args) -> int:
    try:
        raw = json.loads(Path(args.config).read_text(encoding="utf-8"))
        kind = raw.get("kind", "lattice")
        cfg = GenConfig.from_dict(raw)
    except (OSError, json.JSONDecodeError, TypeError, ValueError) as e:
        raise InputError(f"bad config {args.config}: {e}") from None
    if kind == "lattice":
        frame = gen_bounded_fuzzy_lattice(cfg).frame
    elif kind == "poset":
        frame = gen_fuzzy_poset(cfg)
    else:
        raise InputError(f"config kind must be 'lattice' or 'poset', not {kind!r}")
    dump(frame, args.output, None, {"name": f"generated {kind}", "source": cfg.to_dict()})
    return OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fuzzylattice", description="Finite bounded fuzzy lattice toolkit")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_format(p):
        p.add_argument("--format", choices=("json", "csv"), help="input format (default: from suffix)")
        return p

    p = with_format(sub.add_parser("check", help="poset axioms and lattice certification"))
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = with_format(sub.add_parser("product", help="t-norm direct product of lattice files"))
    p.add_argument("files", nargs="+")
    p.add_argument("--tnorm", required=True, choices=BUILTIN_NAMES)
    p.add_argument("--sep", default="", help="label separator (default: none)")
    p.add_argument("-o", "--output")
    p.add_argument("--out-format", choices=("json", "csv"))
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("compare", help="compare two matrix files")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_compare)

    for name, op in (("meet", fuzzy_meet), ("join", fuzzy_join)):
        p = with_format(sub.add_parser(name, help=f"fuzzy {name} of two elements"))
        p.add_argument("file")
        p.add_argument("a")
        p.add_argument("b")
        p.set_defaults(func=lambda args, op=op: _meet_join(args, op))

    p = sub.add_parser("hom", help="check a map between two lattices")
    p.add_argument("src")
    p.add_argument("dst")
    p.add_argument("--map", required=True, help="JSON object {source_label: target_label}")
    p.set_defaults(func=cmd_hom)

    p = with_format(sub.add_parser("witness-intransitivity", help="find a transitivity failure"))
    p.add_argument("file")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("verify", help="seeded property run for a theorem")
    p.add_argument("--theorem", required=True, choices=THEOREMS)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--tnorm", help="comma-separated t-norm names")
    p.add_argument("--sizes", type=int, nargs=2, default=(2, 6), metavar=("MIN", "MAX"))
    p.add_argument("--factors", type=int, nargs=2, default=(2, 3), metavar=("MIN", "MAX"))
    p.add_argument("--variant", choices=("distributive", "modular", "both"), default="both")
    p.add_argument("--bundle-dir", default="failures")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a random lattice or poset fixture")
    p.add_argument("--config", required=True, help="JSON GenConfig, optional \"kind\": lattice|poset")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_gen)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return USAGE if e.code else OK
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
