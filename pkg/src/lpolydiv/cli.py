"""Command-line front end.

Subcommands: count, lpoly, conjecture, and verify {morphism,lmw,involution,
as-image}.  Primary output goes to stdout in either human-readable table
form or line-delimited JSON records (--format records); progress for long
enumerations goes to stderr.  Exit codes are stable for scripting: 0 means
success/verified, 1 means a verification or consistency failure, 2 means a
usage error (bad parameters, oversize field).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from pathlib import Path

from .cache import CountCache
from .curves import (
    CountIntegrityError,
    CurveSpec,
    DEFAULT_MAX_ORDER,
    LARGE_MAX_ORDER,
    count_series,
    lmw_formula,
    lmw_zero_count,
    point_count,
)
from .gf import make_field
from .lseries import (
    LPolynomial,
    LSeriesError,
    divides,
    format_int_poly,
    lpoly_from_counts,
    lpoly_to_record,
)
from .sympoly import (
    artin_schreier_image,
    format_terms,
    involution_search,
    parse_terms,
    tower_obstruction,
    verify_covering,
)

CACHE_ENV = "LPOLYDIV_CACHE_DIR"
PROGRESS_INTERVAL = 1 << 24


@dataclass(frozen=True)
class RunConfig:
    workers: int
    cache_dir: Path
    out_format: str
    max_order: int


def _config(args) -> RunConfig:
    if args.workers < 1:
        raise ValueError("--workers must be >= 1")
    cache_dir = Path(
        args.cache_dir
        or os.environ.get(CACHE_ENV)
        or Path.home() / ".cache" / "lpolydiv"
    )
    cache_dir.mkdir(parents=True, exist_ok=True)
    if args.max_bits is not None:
        max_order = 1 << args.max_bits
    else:
        max_order = LARGE_MAX_ORDER if args.allow_large else DEFAULT_MAX_ORDER
    return RunConfig(args.workers, cache_dir, args.format, max_order)


def _cache(cfg: RunConfig) -> CountCache:
    return CountCache(cfg.cache_dir / "counts.jsonl")


def _progress(label: str):
    state = {"next": PROGRESS_INTERVAL}

    def callback(done: int, total: int):
        if total < PROGRESS_INTERVAL:
            return
        if done >= state["next"] or done == total:
            state["next"] = done + PROGRESS_INTERVAL
            print(f"{label}: {done}/{total} elements", file=sys.stderr)

    return callback


def _emit(cfg: RunConfig, record: dict, table_line: str):
    if cfg.out_format == "records":
        print(json.dumps(record, separators=(",", ":")))
    else:
        print(table_line)


def _spec(args) -> CurveSpec:
    return CurveSpec(args.family, args.k, args.p)


def _lpoly_for(spec: CurveSpec, cfg: RunConfig, cache: CountCache) -> LPolynomial:
    g = spec.genus
    if g == 0:
        return LPolynomial(spec.p, 0, (1,))
    series = count_series(
        spec,
        g,
        workers=cfg.workers,
        cache=cache,
        max_order=cfg.max_order,
        progress=_progress(f"counting {spec.label}"),
    )
    return lpoly_from_counts(series)


def cmd_count(args) -> int:
    cfg = _config(args)
    spec = _spec(args)
    if args.m < 1:
        raise ValueError("--m must be >= 1")
    cache = _cache(cfg)
    modulus = make_field(spec.p, args.m).modulus
    n = cache.lookup(spec, args.m, modulus)
    provenance = "cached" if n is not None else "fresh"
    if n is None:
        n = point_count(
            spec,
            args.m,
            workers=cfg.workers,
            max_order=cfg.max_order,
            progress=_progress(f"counting {spec.label} over GF({spec.p}^{args.m})"),
        )
        cache.store(spec, args.m, modulus, n)
    _emit(
        cfg,
        {
            "record": "count",
            "family": spec.family,
            "k": spec.k,
            "p": spec.p,
            "m": args.m,
            "n": n,
            "provenance": provenance,
        },
        f"{spec.label} / GF({spec.p}^{args.m}): N_{args.m} = {n} ({provenance})",
    )
    return 0


def cmd_lpoly(args) -> int:
    cfg = _config(args)
    spec = _spec(args)
    lpoly = _lpoly_for(spec, cfg, _cache(cfg))
    record = {"record": "lpoly", "family": spec.family, "k": spec.k, "p": spec.p}
    record.update(lpoly_to_record(lpoly))
    _emit(cfg, record, f"L({spec.label}) = {lpoly}")
    return 0


def cmd_conjecture(args) -> int:
    cfg = _config(args)
    if args.kmax < 2:
        raise ValueError("--kmax must be >= 2")
    cache = _cache(cfg)
    base = CurveSpec(args.family, 1, args.p)
    l_base = _lpoly_for(base, cfg, cache)
    all_ok = True
    for k in range(2, args.kmax + 1):
        spec = CurveSpec(args.family, k, args.p)
        l_k = _lpoly_for(spec, cfg, cache)
        result = divides(l_base, l_k)
        all_ok = all_ok and result.divides
        quotient = format_int_poly(result.quotient) if result.divides else "-"
        _emit(
            cfg,
            {
                "record": "conjecture",
                "family": args.family,
                "p": args.p,
                "k": k,
                "divides": result.divides,
                "quotient": [str(c) for c in result.quotient] if result.divides else None,
                "fail_index": result.fail_index,
            },
            f"k={k}: L({base.label}) divides L({spec.label}): "
            f"{'yes, quotient ' + quotient if result.divides else 'NO (fails at coefficient ' + str(result.fail_index) + ')'}",
        )
    if cfg.out_format == "table":
        print(f"all divisible: {'yes' if all_ok else 'no'}")
    return 0 if all_ok else 1


def cmd_verify_morphism(args) -> int:
    cfg = _config(args)
    holds = verify_covering(args.k, args.l)
    _emit(
        cfg,
        {"record": "verify", "check": "morphism", "k": args.k, "l": args.l, "holds": holds},
        f"covering identity (k={args.k}, l={args.l}): {'holds' if holds else 'FAILS'}",
    )
    return 0 if holds else 1


def cmd_verify_lmw(args) -> int:
    cfg = _config(args)
    predicted = lmw_formula(args.n, args.k, args.j)
    counted = lmw_zero_count(
        args.n,
        args.k,
        args.j,
        workers=cfg.workers,
        max_order=cfg.max_order,
        progress=_progress(f"enumerating GF(2^{args.n})"),
    )
    agree = counted == predicted
    _emit(
        cfg,
        {
            "record": "verify",
            "check": "lmw",
            "n": args.n,
            "k": args.k,
            "j": args.j,
            "counted": counted,
            "formula": predicted,
            "agree": agree,
        },
        f"lmw(n={args.n}, k={args.k}, j={args.j}): counted={counted} formula={predicted} "
        f"{'agree' if agree else 'DISAGREE'}",
    )
    return 0 if agree else 1


def cmd_verify_involution(args) -> int:
    cfg = _config(args)
    b = involution_search(args.k)
    expected = args.k % 2 == 0
    found = b is not None
    _emit(
        cfg,
        {
            "record": "verify",
            "check": "involution",
            "k": args.k,
            "found": found,
            "b": format_terms(b) if found else None,
        },
        f"involution search k={args.k}: {'B = ' + format_terms(b) if found else 'none exists'}",
    )
    return 0 if found == expected else 1


def cmd_verify_as_image(args) -> int:
    cfg = _config(args)
    if args.poly is not None:
        h = parse_terms(args.poly, args.p)
    else:
        h = tower_obstruction(args.p)
    decision = artin_schreier_image(h)
    if decision.in_image:
        table = f"p={args.p}: in image, witness g = {format_terms(decision.witness)}"
    else:
        table = f"p={args.p}: not an additive image (stuck at degree {decision.stuck_degree})"
    _emit(
        cfg,
        {
            "record": "verify",
            "check": "as-image",
            "p": args.p,
            "h": format_terms(h),
            "in_image": decision.in_image,
            "witness": format_terms(decision.witness) if decision.in_image else None,
            "stuck_degree": decision.stuck_degree,
        },
        table,
    )
    return 0


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--workers", type=int, default=1, help="enumeration worker count")
    parser.add_argument("--cache-dir", default=None, help=f"count cache directory (default ${CACHE_ENV} or ~/.cache/lpolydiv)")
    parser.add_argument("--format", choices=("table", "records"), default="table", help="output mode")
    parser.add_argument("--allow-large", action="store_true", help="raise the enumeration gate to 2^32 (multi-minute runs)")
    parser.add_argument("--max-bits", type=int, default=None, help="override the enumeration gate to 2^BITS")


def _add_family(parser: argparse.ArgumentParser):
    parser.add_argument("--family", required=True, choices=("ck", "ek", "ak", "ckp"))
    parser.add_argument("--k", required=True, type=int)
    parser.add_argument("--p", type=int, default=2, help="characteristic (odd prime for ckp)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lpolydiv",
        description="Count points on Artin-Schreier curve families, rebuild "
        "L-polynomials, and verify divisibility and morphism identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="print N_m for one curve and extension")
    _add_family(p_count)
    p_count.add_argument("--m", required=True, type=int)
    _add_common(p_count)
    p_count.set_defaults(func=cmd_count)

    p_lpoly = sub.add_parser("lpoly", help="count through m = genus and print the L-polynomial")
    _add_family(p_lpoly)
    _add_common(p_lpoly)
    p_lpoly.set_defaults(func=cmd_lpoly)

    p_conj = sub.add_parser("conjecture", help="check L(k=1) | L(k) for k = 2..kmax")
    p_conj.add_argument("--family", required=True, choices=("ck", "ek", "ckp"))
    p_conj.add_argument("--kmax", required=True, type=int)
    p_conj.add_argument("--p", type=int, default=2)
    _add_common(p_conj)
    p_conj.set_defaults(func=cmd_conjecture)

    p_verify = sub.add_parser("verify", help="symbolic and enumerative identity checks")
    vsub = p_verify.add_subparsers(dest="check", required=True)

    v_mor = vsub.add_parser("morphism", help="tower covering identity for l | k")
    v_mor.add_argument("--k", required=True, type=int)
    v_mor.add_argument("--l", required=True, type=int)
    _add_common(v_mor)
    v_mor.set_defaults(func=cmd_verify_morphism)

    v_lmw = vsub.add_parser("lmw", help="trace-form zero count vs closed formula")
    v_lmw.add_argument("--n", required=True, type=int)
    v_lmw.add_argument("--k", required=True, type=int)
    v_lmw.add_argument("--j", type=int, default=0)
    _add_common(v_lmw)
    v_lmw.set_defaults(func=cmd_verify_lmw)

    v_inv = vsub.add_parser("involution", help="search translation involutions")
    v_inv.add_argument("--k", required=True, type=int)
    _add_common(v_inv)
    v_inv.set_defaults(func=cmd_verify_involution)

    v_asi = vsub.add_parser("as-image", help="decide h = g^p - g by leading-term peeling")
    v_asi.add_argument("--p", type=int, default=3)
    v_asi.add_argument("--poly", default=None, help="polynomial text (default: the degree-p tower obstruction)")
    _add_common(v_asi)
    v_asi.set_defaults(func=cmd_verify_as_image)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CountIntegrityError, LSeriesError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
