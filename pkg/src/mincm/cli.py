"""Command-line front end.

Subcommands
-----------
analyze        full report: f/h-vectors, reduced Betti numbers, depth,
               Cohen-Macaulay / minimal / strongly-CM verdicts, certificates
reduce         greedy reduction of a CM complex to a minimal one + certificate
shellable      shelling certificate search (pure complexes)
shelled-over   certificate that the first complex is shelled over the second
dual           generators of the Alexander dual ideal
betti          graded Betti table of the Alexander dual ideal
minimal-check  minimality of a CM complex (--fast certificate / --brute)
catalog        list built-in complexes / emit one as plain text

Inputs are file paths (plain-text facet lists or the JSON document format)
or ``catalog:NAME`` references.  ``--field q`` (exact rationals, default) or
``--field gf<p>`` selects the coefficient field; every verdict in the output
names the field it was computed over.  ``--json`` switches to deterministic
machine-readable output.  ``--jobs N`` caps worker threads and never changes
any reported value.

Exit codes: 0 success; 1 a ``--expect`` assertion failed; 2 usage, I/O, or
parse errors (parse failures carry line/column diagnostics).
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import catalog as catalog_mod
from .cohen_macaulay import depth_report, free_facet, is_minimal_cm
from .complexes import SimplicialComplex
from .errors import MincmError
from .fields import parse_field
from .homology import betti_of_facets
from .ideals import betti_table, dual_ideal
from .serialize import emit_doc, emit_text, load_path
from .shelling import is_shellable, reduce_to_minimal, shelled_over

DEFAULT_SHELLING_LIMIT = 16


def _load(source: str) -> SimplicialComplex:
    if source.startswith("catalog:"):
        return catalog_mod.get(source[len("catalog:"):])
    return load_path(source)


def _print_json(doc) -> None:
    print(json.dumps(doc, indent=2, sort_keys=True))


def _identity(source: str, cx: SimplicialComplex) -> dict:
    return {
        "source": source,
        "n": cx.n,
        "vertices": list(cx.labels),
        "facet_count": len(cx.facets),
        "dimension": cx.dim,
    }


# ---------------------------------------------------------------------------
# analyze

def _analysis_report(source: str, cx: SimplicialComplex, field, jobs,
                     shelling_limit: int) -> dict:
    t0 = time.perf_counter()
    rep = depth_report(cx, field)
    mr = is_minimal_cm(cx, field, jobs=jobs)
    if not mr.is_cm:
        strongly = False
    elif mr.fast_path is not None:
        # fold certificate: every removal breaks CM, so none survives
        strongly = False
    else:
        strongly = len(mr.removable_facets) == len(cx.facets)

    betti = list(betti_of_facets(cx.facets, field))

    if not cx.is_pure:
        shelling = None
        free = None
    elif len(cx.facets) > shelling_limit:
        shelling = "skipped"
        free = free_facet(cx)
    else:
        cert = is_shellable(cx)
        shelling = None if cert is None else {
            "shellable": True,
            "moves": [list(m) for m in cert.moves],
        }
        if cert is None:
            shelling = {"shellable": False}
        free = free_facet(cx)

    seconds = time.perf_counter() - t0
    return {
        "input": _identity(source, cx),
        "field": field.token(),
        "f_vector": list(cx.f_vector),
        "h_vector": None if cx.is_void else list(cx.h_vector),
        "reduced_betti": betti,  # index k is dim H~_{k-1} over the field
        "depth": rep.depth,
        "is_cm": rep.is_cm,
        "witness": None if rep.witness is None else {
            "face": list(rep.witness[0]),
            "homology_degree": rep.witness[1],
        },
        "is_minimal_cm": mr.is_cm and mr.is_minimal,
        "is_strongly_cm": strongly,
        "certificates": {
            "fast_path": None if mr.fast_path is None else {
                "fold": mr.fast_path.fold,
                "max_boundary_ridges_per_facet":
                    mr.fast_path.max_boundary_ridges_per_facet,
            },
            "free_facet": None if free is None else list(free),
            "shelling": shelling,
        },
        "timing": {"seconds": round(seconds, 6)},
    }


def _render_analysis(rep: dict) -> str:
    lines = []
    ident = rep["input"]
    lines.append(f"input:          {ident['source']}  "
                 f"(n={ident['n']}, facets={ident['facet_count']}, "
                 f"dim={ident['dimension']})")
    lines.append(f"field:          {rep['field']}")
    lines.append(f"f-vector:       {tuple(rep['f_vector'])}")
    hv = rep["h_vector"]
    lines.append(f"h-vector:       {'-' if hv is None else tuple(hv)}")
    lines.append(f"reduced betti:  {tuple(rep['reduced_betti'])}  "
                 "(index k = dim H~_(k-1))")
    lines.append(f"depth:          {rep['depth']}")
    lines.append(f"is_cm:          {rep['is_cm']}")
    if rep["witness"] is not None:
        w = rep["witness"]
        lines.append(f"witness:        H~_{w['homology_degree']}"
                     f"(link {tuple(w['face'])}) != 0")
    lines.append(f"is_minimal_cm:  {rep['is_minimal_cm']}")
    lines.append(f"is_strongly_cm: {rep['is_strongly_cm']}")
    certs = rep["certificates"]
    fp = certs["fast_path"]
    lines.append("fast-path:      " + (
        "-" if fp is None else
        f"fold={fp['fold']} (max boundary ridges per facet "
        f"{fp['max_boundary_ridges_per_facet']})"))
    lines.append(f"free facet:     {certs['free_facet']}")
    sh = certs["shelling"]
    if sh is None:
        lines.append("shelling:       - (not pure)")
    elif sh == "skipped":
        lines.append("shelling:       skipped (facet count over limit; "
                     "raise --shelling-limit to search)")
    elif sh.get("shellable"):
        lines.append(f"shelling:       shellable ({len(sh['moves'])} moves)")
    else:
        lines.append("shelling:       not shellable")
    lines.append(f"elapsed:        {rep['timing']['seconds']:.3f}s")
    return "\n".join(lines)


def _cmd_analyze(args) -> int:
    cx = _load(args.input)
    field = parse_field(args.field)
    rep = _analysis_report(args.input, cx, field, args.jobs,
                           args.shelling_limit)
    if args.json:
        _print_json(rep)
    else:
        print(_render_analysis(rep))
    return 0


# ---------------------------------------------------------------------------
# reduce

def _cmd_reduce(args) -> int:
    cx = _load(args.input)
    field = parse_field(args.field)
    reduced, cert = reduce_to_minimal(cx, field, jobs=args.jobs)
    if args.cert:
        with open(args.cert, "w") as fh:
            json.dump(cert.to_doc(), fh, indent=2, sort_keys=True)
            fh.write("\n")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(emit_text(reduced))
    if args.json:
        _print_json({
            "field": field.token(),
            "input": _identity(args.input, cx),
            "reduced": emit_doc(reduced),
            "moves": len(cert.moves),
            "certificate": cert.to_doc(),
        })
    else:
        print(f"reduced {len(cx.facets)} facets -> {len(reduced.facets)} "
              f"({len(cert.moves)} shelling moves, field {field.token()})")
        if reduced.is_void:
            print("reduced complex: void")
        else:
            sys.stdout.write(emit_text(reduced))
    return 0


# ---------------------------------------------------------------------------
# shellable / shelled-over

def _expect_gate(expect, actual: bool) -> int:
    if expect is None:
        return 0
    want = expect == "true"
    return 0 if want == actual else 1


def _cmd_shellable(args) -> int:
    cx = _load(args.input)
    cert = is_shellable(cx)
    ok = cert is not None
    if args.json:
        _print_json({
            "input": _identity(args.input, cx),
            "shellable": ok,
            "certificate": cert.to_doc() if ok else None,
        })
    else:
        if ok:
            print(f"shellable: true ({len(cert.moves)} moves)")
            for m in cert.moves:
                print("  " + " ".join(str(v) for v in m))
        else:
            print("shellable: false")
    return _expect_gate(args.expect, ok)


def _cmd_shelled_over(args) -> int:
    cx = _load(args.input)
    base = _load(args.base)
    cert = shelled_over(cx, base)
    ok = cert is not None
    if args.json:
        _print_json({
            "input": _identity(args.input, cx),
            "base": _identity(args.base, base),
            "shelled_over": ok,
            "certificate": cert.to_doc() if ok else None,
        })
    else:
        if ok:
            print(f"shelled over: true ({len(cert.moves)} moves)")
            for m in cert.moves:
                print("  " + " ".join(str(v) for v in m))
        else:
            print("shelled over: false")
    return _expect_gate(args.expect, ok)


# ---------------------------------------------------------------------------
# dual / betti

def _cmd_dual(args) -> int:
    cx = _load(args.input)
    ideal = dual_ideal(cx, n=args.n)
    if args.json:
        _print_json({
            "input": _identity(args.input, cx),
            "ideal": ideal.to_doc(),
        })
    else:
        print(f"alexander dual ideal on {ideal.n} variables, "
              f"{len(ideal.generators)} generators")
        for sup in ideal.generator_supports():
            print("  " + (" ".join(str(v) for v in sup) if sup else "1"))
    return 0


def _cmd_betti(args) -> int:
    cx = _load(args.input)
    field = parse_field(args.field)
    ideal = dual_ideal(cx, n=args.n)
    table = betti_table(ideal, field, jobs=args.jobs)
    if args.json:
        _print_json({
            "input": _identity(args.input, cx),
            "field": field.token(),
            "ideal": ideal.to_doc(),
            "betti": [[i, j, v] for (i, j, v) in table.cells],
        })
    else:
        print(f"graded Betti numbers of the Alexander dual ideal "
              f"(field {field.token()}):")
        for i, j, v in table.cells:
            print(f"  beta_{i},{j} = {v}")
    return 0


# ---------------------------------------------------------------------------
# minimal-check

def _cmd_minimal_check(args) -> int:
    cx = _load(args.input)
    field = parse_field(args.field)
    use_fast = not args.brute
    mr = is_minimal_cm(cx, field, use_fast_path=use_fast, jobs=args.jobs)
    verdict = mr.is_cm and mr.is_minimal
    if args.json:
        _print_json({
            "input": _identity(args.input, cx),
            "field": field.token(),
            "is_cm": mr.is_cm,
            "is_minimal_cm": verdict,
            "fast_path": None if mr.fast_path is None else {
                "fold": mr.fast_path.fold,
                "max_boundary_ridges_per_facet":
                    mr.fast_path.max_boundary_ridges_per_facet,
            },
            "removable_facets": [list(f) for f in mr.removable_facets],
        })
    else:
        print(f"is_cm: {mr.is_cm} (field {field.token()})")
        path = "fast" if mr.fast_path is not None else "brute-force"
        print(f"is_minimal_cm: {verdict} ({path})")
        for f in mr.removable_facets:
            print("  removable: " + " ".join(str(v) for v in f))
    return _expect_gate(args.expect, verdict)


# ---------------------------------------------------------------------------
# catalog

def _cmd_catalog(args) -> int:
    if args.action == "list":
        rows = []
        for e in catalog_mod.entries():
            mark = "" if e.bundled else "  [not bundled]"
            rows.append((e.name, e.summary + mark))
        if args.json:
            _print_json([{"name": e.name, "bundled": e.bundled,
                          "summary": e.summary}
                         for e in catalog_mod.entries()])
        else:
            width = max(len(n) for n, _ in rows)
            for n, s in rows:
                print(f"{n:<{width}}  {s}")
            print("\nparameterized: simplex(n), boundary_simplex(n), "
                  "skeleton(n,i)")
        return 0
    # emit
    cx = catalog_mod.get(args.name)
    if args.json:
        _print_json(emit_doc(cx))
    else:
        sys.stdout.write(emit_text(cx))
    return 0


# ---------------------------------------------------------------------------
# parser

def _add_common(sp, field=True, jobs=True):
    sp.add_argument("--json", action="store_true",
                    help="machine-readable deterministic output")
    if field:
        sp.add_argument("--field", default="q",
                        help="coefficient field: q (default) or gf<p>")
    if jobs:
        sp.add_argument("--jobs", type=int, default=None,
                        help="worker threads (wall time only, never values)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mincm",
        description="Exact Cohen-Macaulay analysis of simplicial complexes")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("analyze", help="full report on one complex")
    sp.add_argument("input", help="facet file or catalog:NAME")
    sp.add_argument("--shelling-limit", type=int, default=DEFAULT_SHELLING_LIMIT,
                    help="skip the shellability search above this facet count")
    _add_common(sp)
    sp.set_defaults(fn=_cmd_analyze)

    sp = sub.add_parser("reduce", help="reduce a CM complex to a minimal one")
    sp.add_argument("input")
    sp.add_argument("--out", help="write the reduced complex here (text format)")
    sp.add_argument("--cert", help="write the shelling certificate here (JSON)")
    _add_common(sp)
    sp.set_defaults(fn=_cmd_reduce)

    sp = sub.add_parser("shellable", help="search for a shelling")
    sp.add_argument("input")
    sp.add_argument("--expect", choices=["true", "false"],
                    help="exit 1 unless the verdict matches")
    _add_common(sp, field=False, jobs=False)
    sp.set_defaults(fn=_cmd_shellable)

    sp = sub.add_parser("shelled-over",
                        help="certificate that INPUT is shelled over BASE")
    sp.add_argument("input")
    sp.add_argument("base")
    sp.add_argument("--expect", choices=["true", "false"])
    _add_common(sp, field=False, jobs=False)
    sp.set_defaults(fn=_cmd_shelled_over)

    sp = sub.add_parser("dual", help="Alexander dual ideal generators")
    sp.add_argument("input")
    sp.add_argument("--n", type=int, default=None,
                    help="ambient vertex count for the duality")
    _add_common(sp, field=False, jobs=False)
    sp.set_defaults(fn=_cmd_dual)

    sp = sub.add_parser("betti",
                        help="Betti table of the Alexander dual ideal")
    sp.add_argument("input")
    sp.add_argument("--n", type=int, default=None)
    _add_common(sp)
    sp.set_defaults(fn=_cmd_betti)

    sp = sub.add_parser("minimal-check", help="minimal Cohen-Macaulay test")
    sp.add_argument("input")
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--fast", action="store_true",
                       help="prefer the fold certificate (default)")
    group.add_argument("--brute", action="store_true",
                       help="force per-facet brute force")
    sp.add_argument("--expect", choices=["true", "false"])
    _add_common(sp)
    sp.set_defaults(fn=_cmd_minimal_check)

    sp = sub.add_parser("catalog", help="built-in complexes")
    sp.add_argument("action", choices=["list", "emit"])
    sp.add_argument("name", nargs="?",
                    help="catalog name (required for emit)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(fn=_cmd_catalog)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.command == "catalog" and args.action == "emit" and not args.name:
        ap.error("catalog emit requires a NAME")
    try:
        return args.fn(args)
    except MincmError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
