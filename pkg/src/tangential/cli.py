"""Command-line front end with machine-readable JSON certificates.

Subcommands:

* ``decompose``  isotypic decomposition of a degree of the coordinate
  ring (and the ideal part of the same degree)
* ``generators`` the minimal-generator catalog of a degree
* ``verify``     run both oracles on one (format, dims, degree) triple
  and emit a replayable certificate
* ``selftest``   run the shipped identity corpus

Exit codes: 0 success, 1 verification failure, 2 usage error.  Identical
configurations (including the seed) produce byte-identical JSON.
"""

import argparse
import json
import os
import sys

from . import __version__
from .generic import (TabloidFilling, pi_on_tabloid_all, straighten_check,
                      column_swap_relation, shuffle_relation, symmetrize,
                      filling_from_columns)
from .graphs import generators_catalog, witness_grade, witness_tabloid
from .jsonio import polynomial_to_json, tabloid_to_json
from .symfun import (FeasibilityError, NPartition, all_shapes, character,
                     coordinate_mult, dim_gl, mult_in_sym)
from .tangent import (DeskCapError, TensorSpaceSpec, coordinate_dim,
                      generated_in_degree, ideal_dimension)

USAGE_ERROR = 2


class UsageError(ValueError):
    pass


def _parse_int_tuple(text, name):
    try:
        parts = tuple(int(t) for t in text.replace(" ", "").split(",") if t)
    except ValueError:
        raise UsageError("--%s expects comma-separated integers, got %r" % (name, text))
    if not parts or any(p < 1 for p in parts):
        raise UsageError("--%s entries must be positive integers" % name)
    return parts


def _emit(report, args):
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    if args.format == "json":
        sys.stdout.write(text)
    else:
        _print_table(report)


def _flat(value):
    if isinstance(value, list) and all(
            not isinstance(x, (dict, list)) for x in value):
        return ",".join(str(x) for x in value)
    if isinstance(value, list) and all(
            isinstance(x, list) and not any(isinstance(y, (dict, list)) for y in x)
            for x in value):
        return " | ".join(",".join(str(y) for y in x) for x in value)
    return None


def _print_table(report, indent=0):
    pad = "  " * indent
    if isinstance(report, dict):
        for k in sorted(report):
            v = report[k]
            flat = _flat(v) if isinstance(v, list) else None
            if flat is not None:
                print("%s%s: %s" % (pad, k, flat))
            elif isinstance(v, (dict, list)):
                print("%s%s:" % (pad, k))
                _print_table(v, indent + 1)
            else:
                print("%s%s: %s" % (pad, k, v))
    elif isinstance(report, list):
        for v in report:
            flat = _flat(v)
            if flat is not None:
                print("%s- %s" % (pad, flat))
            else:
                _print_table(v, indent)
                print()
    else:
        print("%s%s" % (pad, report))


def _base_report(args, command):
    return {
        "command": command,
        "version": __version__,
        "seed": args.seed,
        "schema": 1,
    }


def cmd_decompose(args):
    d = _parse_int_tuple(args.d, "d")
    dims = _parse_int_tuple(args.dims, "dims") if args.dims else tuple([2] * len(d))
    if len(dims) != len(d):
        raise UsageError("--dims must match --d in length")
    if args.r is None:
        raise UsageError("decompose needs --r")
    r = args.r
    spec = TensorSpaceSpec(d, dims)

    ring_entries = []
    families = {}
    total = 0
    max_rows = tuple(min(mj, r) for mj in dims)
    ideal_entries = []
    for lam in all_shapes(r, d, max_rows):
        prod = 1
        for j, comp in enumerate(lam.components):
            prod *= dim_gl(comp, dims[j])
        if prod == 0:
            continue
        mt = coordinate_mult(lam, r, d)
        if mt:
            ring_entries.append({
                "shape": [list(c) for c in lam.components],
                "dimension": prod,
            })
            total += prod
            fam_key = tuple(sorted((d[j], lam.components[j])
                                   for j in range(len(d))))
            families.setdefault(fam_key, 0)
            families[fam_key] += 1
        try:
            ms = mult_in_sym(lam, r, d)
        except FeasibilityError:
            ms = None
        if ms is not None and ms - mt > 0:
            ideal_entries.append({
                "shape": [list(c) for c in lam.components],
                "multiplicity": ms - mt,
                "dimension": prod,
            })
    report = _base_report(args, "decompose")
    report.update({
        "d": list(d),
        "dims": list(dims),
        "r": r,
        "ring": {
            "entries": ring_entries,
            "families_up_to_permutation": len(families),
            "total_dimension": total,
        },
        "ideal": {"entries": ideal_entries},
    })
    _emit(report, args)
    return 0


def cmd_generators(args):
    d = _parse_int_tuple(args.d, "d")
    if args.degree is None:
        raise UsageError("generators needs --degree")
    cat = generators_catalog(d, args.degree)
    entries = []
    for shape, tabs in cat:
        entries.append({
            "shape": [list(c) for c in shape.components],
            "multiplicity": len(tabs),
            "tabloids": [tabloid_to_json(t) for t in tabs],
        })
    report = _base_report(args, "generators")
    report.update({
        "d": list(d),
        "d_sorted": list(cat.d_sorted),
        "factor_permutation": list(cat.permutation),
        "degree": args.degree,
        "entries": entries,
    })
    _emit(report, args)
    return 0


def cmd_verify(args):
    d = _parse_int_tuple(args.d, "d")
    dims = _parse_int_tuple(args.dims, "dims") if args.dims else tuple([2] * len(d))
    if len(dims) != len(d):
        raise UsageError("--dims must match --d in length")
    if args.r is None:
        raise UsageError("verify needs --r")
    r = args.r
    spec = TensorSpaceSpec(d, dims)
    ambient = len(spec.monomial_basis(r))
    dim, polys, rep = ideal_dimension(spec, r, seed=args.seed)
    cdim = coordinate_dim(spec, r)
    ok = (cdim + dim == ambient) and rep.oracle_agrees
    report = _base_report(args, "verify")
    report.update({
        "d": list(d),
        "dims": list(dims),
        "r": r,
        "ambient_dim": ambient,
        "ideal_dim": dim,
        "coordinate_dim": cdim,
        "reconciliation_ok": cdim + dim == ambient,
        "oracle": {"agrees": bool(rep.oracle_agrees), "samples": rep.samples},
        "kernel": [polynomial_to_json(p) for p in polys],
        "ok": bool(ok),
    })
    _emit(report, args)
    return 0 if ok else 1


def _selftest_checks(seed):
    from .symfun import NPartition as NP

    yield ("character chi_(2,1) values",
           (character((2, 1), (1, 1, 1)), character((2, 1), (2, 1)),
            character((2, 1), (3,))) == (2, 0, -1))

    lam = NP([(4, 2)])
    filling = filling_from_columns(lam, 3, (2,), [[(1, 2), (1, 3), (2,), (3,)]])
    yield ("column swap relation",
           straighten_check(column_swap_relation(filling, 0, 0)))
    yield ("shuffle relation",
           straighten_check(shuffle_relation(filling, 0, 0, 3)))

    tri = filling_from_columns(NP([(2, 1), (2, 1), (2, 1)]), 3, (1, 1, 1),
                               [[(1, 2), (3,)], [(2, 3), (1,)], [(3, 1), (2,)]])
    yield ("triangle covariant vanishes", symmetrize(tri).is_zero())

    wlam = NP([(6, 2), (12, 4), (7, 1)])
    w = witness_tabloid(wlam, 8, (1, 2, 1))
    res = pi_on_tabloid_all(w)
    grade = witness_grade(wlam, 8, (1, 2, 1))
    coeffs = list(res.get(grade, {None: None}).terms.values()) if grade in res else []
    yield ("witness tabloid scalar -8", coeffs == [-8])

    spec = TensorSpaceSpec((3,), (2,))
    ok = True
    for r, expected in [(2, 0), (3, 0), (4, 1)]:
        dim, _, rep = ideal_dimension(spec, r, seed=seed)
        ok = ok and dim == expected and rep.oracle_agrees
        ok = ok and coordinate_dim(spec, r) + dim == len(spec.monomial_basis(r))
    yield ("twisted cubic dims (0,0,1) with oracle agreement", ok)

    specm = TensorSpaceSpec((1, 1), (2, 2))
    ok = all(ideal_dimension(specm, r, seed=seed)[0] == 0 for r in (1, 2, 3))
    yield ("matrix space is degenerate", ok)

    cat = generators_catalog((1, 1, 1), 4)
    yield ("hyperdeterminant catalog entry",
           len(cat) == 1 and cat[0][0].components == ((2, 2), (2, 2), (2, 2)))


def cmd_selftest(args):
    failures = 0
    results = []
    for name, ok in _selftest_checks(args.seed):
        results.append({"check": name, "ok": bool(ok)})
        print("[%s] %s" % ("pass" if ok else "FAIL", name))
        if not ok:
            failures += 1
    report = _base_report(args, "selftest")
    report.update({"checks": results, "failures": failures})
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    return 0 if failures == 0 else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tangential",
        description="Exact equations and coordinate rings of tangential "
                    "varieties of Segre-Veronese varieties.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_format=True):
        if needs_format:
            p.add_argument("--d", required=True,
                           help="format, comma separated (e.g. 1,1,1)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--cache-dir", default=None,
                       help="cache directory (falls back to TANGENT_CACHE_DIR)")
        p.add_argument("--out", default=None, help="write the JSON report here")
        p.add_argument("--format", choices=("json", "table"), default="json")

    p = sub.add_parser("decompose", help="coordinate-ring decomposition")
    common(p)
    p.add_argument("--dims", default=None, help="dimensions, comma separated")
    p.add_argument("--r", type=int, default=None)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("generators", help="minimal generator catalog")
    common(p)
    p.add_argument("--degree", type=int, default=None)
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("verify", help="two-oracle verification certificate")
    common(p)
    p.add_argument("--dims", default=None)
    p.add_argument("--r", type=int, default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("selftest", help="run the shipped identity corpus")
    common(p, needs_format=False)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits with 2 on usage errors already
        raise
    if getattr(args, "cache_dir", None):
        os.environ.setdefault("TANGENT_CACHE_DIR", args.cache_dir)
    try:
        return args.func(args)
    except UsageError as exc:
        print("usage error: %s" % exc, file=sys.stderr)
        return USAGE_ERROR
    except (DeskCapError, FeasibilityError) as exc:
        print("desk-scale cap exceeded: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
