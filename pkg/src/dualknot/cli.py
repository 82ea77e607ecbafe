"""Command line front end.

Exit codes: 0 ok, 2 semantic or usage error, 3 ``.cfk`` syntax error,
4 oracle mismatch (or a failed stabilization check), 5 unmet precondition.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from math import gcd
from pathlib import Path

from . import __version__
from .cfk import BUILTINS, CFKSyntaxError, CFKValidationError, KnotComplex, builtin, genus, parse_cfk, validate
from .domains import TestDomain, UnboundedDomainError, parse_domain
from .fcomplex import homology_rank
from .invariants import (
    StabilizationError,
    hf_hat_ambient,
    hfk_hat_dual,
    hfk_window,
    predicted_window,
    s3_pattern_check,
    scan_window,
    zeta_profile,
)
from .surgery import ConeSpec, TruncationParams, cone_rank, large_n_model, large_n_threshold, stabilization_check

EXIT_OK, EXIT_SEMANTIC, EXIT_SYNTAX, EXIT_MISMATCH, EXIT_PRECONDITION = 0, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


@dataclass
class RunConfig:
    command: str
    knot: KnotComplex | None
    p: int = 1
    q: int = 1
    classes: list[int] | None = None
    domain: TestDomain | None = None
    bound: int | None = None
    fmt: str = "table"
    output: str | None = None


# ------------------------------------------------------------------ parsing


def _classes(text: str | None) -> list[int] | None:
    if text is None or text == "all":
        return None
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        lo, sep, hi = part.partition("..")
        try:
            out.extend(range(int(lo), int(hi) + 1) if sep else [int(part)])
        except ValueError:
            raise CliError(EXIT_SEMANTIC, f"bad class list {text!r}") from None
    return sorted(set(out))


def load_knot(args) -> KnotComplex:
    if bool(args.knot) == bool(args.cfk):
        raise CliError(EXIT_SEMANTIC, "give exactly one of --knot or --cfk")
    if args.knot:
        name = args.knot.removeprefix("builtin:")
        try:
            return builtin(name)
        except KeyError:
            raise CliError(EXIT_SEMANTIC, f"unknown builtin knot {name!r}; choose from {', '.join(BUILTINS)}") from None
    return read_cfk(args.cfk)


def read_cfk(path: str) -> KnotComplex:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise CliError(EXIT_SEMANTIC, f"cannot read {path}: {e.strerror}") from None
    try:
        return parse_cfk(text, name=Path(path).stem)
    except CFKSyntaxError as e:
        raise CliError(EXIT_SYNTAX, f"{path}: {e}") from None
    except CFKValidationError as e:
        raise CliError(EXIT_SEMANTIC, f"{path}: {e}") from None


def make_config(args) -> RunConfig:
    knot = load_knot(args) if hasattr(args, "knot") else None
    p, q = getattr(args, "p", 1), getattr(args, "q", 1)
    if p < 1 or q < 1 or gcd(p, q) != 1:
        raise CliError(EXIT_SEMANTIC, f"p/q = {p}/{q} must have coprime positive p, q")
    domain = None
    if getattr(args, "domain", None):
        try:
            domain = parse_domain(args.domain)
        except (ValueError, TypeError) as e:
            raise CliError(EXIT_SEMANTIC, f"bad domain: {e}") from None
    return RunConfig(args.command, knot, p, q, _classes(getattr(args, "classes", None)), domain,
                     getattr(args, "bound", None), args.format, args.output)


# ------------------------------------------------------------------ output


def _table(header: list[str], rows: list[list], notes: list[str]) -> str:
    cells = [list(map(str, header))] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(notes + lines) + "\n"


def emit(cfg: RunConfig, payload: dict, header: list[str], rows: list[list], notes: list[str]) -> None:
    payload = {**payload, "version": __version__}
    if cfg.fmt == "json":
        text = json.dumps(payload, sort_keys=True, indent=2) + "\n"
    elif cfg.fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        text = buf.getvalue()
    else:
        text = _table(header, rows, notes + [f"version {__version__}, bound {payload.get('bound')}"])
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        sys.stdout.write(text)


def _window(w):
    return list(w) if w is not None else None


# ------------------------------------------------------------------ commands


def cmd_validate(args) -> int:
    try:
        text = Path(args.path).read_text()
    except OSError as e:
        raise CliError(EXIT_SEMANTIC, f"cannot read {args.path}: {e.strerror}") from None
    try:
        k = parse_cfk(text, name=Path(args.path).stem, check=False)
    except CFKSyntaxError as e:
        raise CliError(EXIT_SYNTAX, f"{args.path}: {e}") from None
    try:
        report = validate(k)
    except ValueError as e:
        raise CliError(EXIT_SEMANTIC, f"{args.path}: {e}") from None
    if not report.ok:
        for line in report.problems:
            print(line, file=sys.stderr)
        return EXIT_SEMANTIC
    print("valid")
    return EXIT_OK


def cmd_hfk(args) -> int:
    cfg = make_config(args)
    K = cfg.knot
    g = genus(K)
    trunc = TruncationParams(cfg.bound)
    classes = cfg.classes if cfg.classes is not None else list(scan_window(g, cfg.p, cfg.q))
    if cfg.domain is None or cfg.domain == TestDomain.singleton(0, 0):
        rep = hfk_hat_dual(K, cfg.p, cfg.q, classes, trunc=trunc)
        ranks, stable, bound = rep.ranks, rep.stable, rep.bound
    else:
        ranks, stable, bound = {}, True, 0
        for s in classes:
            spec = ConeSpec(K, cfg.p, cfg.q, s, cfg.domain, trunc)
            ranks[s] = cone_rank(spec)
            stable = stable and stabilization_check(spec)
            bound = max(bound, spec.bound)
    support = [s for s in sorted(ranks) if ranks[s]]
    computed = (support[0], support[-1]) if support else None
    predicted = predicted_window(g, cfg.p, cfg.q)
    payload = {
        "knot": K.name, "p": cfg.p, "q": cfg.q,
        "domain": str(cfg.domain or TestDomain.singleton(0, 0)),
        "classes": [{"sbar": s, "rank": ranks[s]} for s in sorted(ranks)],
        "window_predicted": list(predicted), "window_computed": _window(computed),
        "stable": stable, "bound": bound,
    }
    notes = [f"{K.name} {cfg.p}/{cfg.q}: predicted window {predicted}, computed {computed}, stable {stable}"]
    emit(cfg, payload, ["sbar", "rank"], [[s, ranks[s]] for s in sorted(ranks)], notes)
    return EXIT_OK if stable else EXIT_MISMATCH


def cmd_window(args) -> int:
    cfg = make_config(args)
    K = cfg.knot
    g = genus(K)
    rep = hfk_hat_dual(K, cfg.p, cfg.q, trunc=TruncationParams(cfg.bound))
    computed = hfk_window(K, cfg.p, cfg.q, rep)
    predicted = predicted_window(g, cfg.p, cfg.q)
    ok = computed == predicted
    payload = {"knot": K.name, "p": cfg.p, "q": cfg.q, "genus": g,
               "window_predicted": list(predicted), "window_computed": _window(computed),
               "match": ok, "stable": rep.stable, "bound": rep.bound}
    emit(cfg, payload, ["knot", "p", "q", "predicted", "computed", "match"],
         [[K.name, cfg.p, cfg.q, predicted, computed, ok]], [])
    return EXIT_OK if ok and rep.stable else EXIT_MISMATCH


def cmd_hf(args) -> int:
    cfg = make_config(args)
    K = cfg.knot
    try:
        rep = hf_hat_ambient(K, cfg.p, cfg.q, TruncationParams(cfg.bound))
    except StabilizationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MISMATCH
    payload = {"knot": K.name, "p": cfg.p, "q": cfg.q, "domain": "line_i(0,)",
               "classes": [{"class": s, "rank": r} for s, r in sorted(rep.ranks.items())],
               "total": rep.total, "stable": rep.stable, "bound": rep.bound}
    emit(cfg, payload, ["class", "rank"], [[s, r] for s, r in sorted(rep.ranks.items())],
         [f"{K.name} {cfg.p}/{cfg.q}: total rank {rep.total}"])
    return EXIT_OK


def cmd_crosscheck(args) -> int:
    cfg = make_config(args)
    K, n = cfg.knot, args.n
    threshold = large_n_threshold(K)
    if n < threshold:
        print(f"error: n={n} is below the large-n threshold {threshold} = 2g+1", file=sys.stderr)
        return EXIT_PRECONDITION
    domain = cfg.domain or TestDomain.singleton(0, 0)
    g = genus(K)
    classes = cfg.classes if cfg.classes is not None else list(scan_window(g, n, 1))
    rows, first_bad = [], None
    for s in classes:
        model = homology_rank(large_n_model(K, n, s, domain))
        cone = cone_rank(ConeSpec(K, n, 1, s, domain, TruncationParams(cfg.bound)))
        rows.append([s, model, cone, model == cone])
        if model != cone and first_bad is None:
            first_bad = s
    payload = {"knot": K.name, "n": n, "domain": str(domain),
               "classes": [{"sbar": s, "model": m, "cone": c} for s, m, c, _ in rows],
               "agree": first_bad is None, "first_mismatch": first_bad,
               "bound": cfg.bound if cfg.bound is not None else "default"}
    emit(cfg, payload, ["sbar", "model", "cone", "agree"], rows, [f"{K.name} n={n}"])
    if first_bad is not None:
        print(f"mismatch at class {first_bad}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_zeta(args) -> int:
    cfg = make_config(args)
    K, n, s = cfg.knot, args.n, args.s
    if not -n / 2 <= s < n / 2:
        print(f"error: need -n/2 <= s < n/2, got s={s}, n={n}", file=sys.stderr)
        return EXIT_PRECONDITION
    prof = zeta_profile(K, n, s, args.max_level)
    rows = [[N, r, (r - prof[N - 1]) if N else ""] for N, r in enumerate(prof)]
    payload = {"knot": K.name, "n": n, "s": s,
               "profile": [{"N": N, "rank": r} for N, r in enumerate(prof)], "bound": args.max_level}
    emit(cfg, payload, ["N", "rank", "step"], rows, [f"{K.name} zeta cone, n={n}, s={s}"])
    return EXIT_OK


def cmd_s3check(args) -> int:
    cfg = make_config(args)
    qs = _classes(args.qs) or [1, 2, 3]
    if any(q < 1 for q in qs):
        raise CliError(EXIT_SEMANTIC, "q values must be positive")
    rep = s3_pattern_check(cfg.knot, qs)
    rows = [[q, rep.predicted[q], rep.windows[q]] for q in qs]
    payload = {"knot": rep.knot, "genus": rep.genus, "verdict": rep.verdict,
               "windows": [{"q": q, "predicted": list(rep.predicted[q]), "computed": _window(rep.windows[q])}
                           for q in qs], "bound": "default"}
    emit(cfg, payload, ["q", "predicted", "computed"], rows, [f"{rep.knot}: {rep.verdict}"])
    return EXIT_OK


# ------------------------------------------------------------------ entry


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="dualknot", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, pq=True):
        src = sp.add_argument_group("knot source")
        src.add_argument("--knot", help=f"builtin name ({', '.join(BUILTINS)}), optionally prefixed 'builtin:'")
        src.add_argument("--cfk", help="path to a .cfk file")
        if pq:
            sp.add_argument("--p", type=int, default=1)
            sp.add_argument("--q", type=int, default=1)
        sp.add_argument("--bound", type=int, default=None, help="truncation bound B (default: automatic)")
        sp.add_argument("--format", choices=("table", "json", "csv"), default="table")
        sp.add_argument("--output", help="write to this file instead of stdout")

    v = sub.add_parser("validate", help="check a .cfk file")
    v.add_argument("path")
    v.set_defaults(func=cmd_validate)

    h = sub.add_parser("hfk", help="hat knot homology of the dual knot, per class")
    common(h)
    h.add_argument("--classes", help="'all' or a list like -2..2,5")
    h.add_argument("--domain", help="test domain, e.g. hat, line_i:0, box:-1,0,-1,0")
    h.set_defaults(func=cmd_hfk)

    w = sub.add_parser("window", help="computed vs predicted support window")
    common(w)
    w.set_defaults(func=cmd_window)

    f = sub.add_parser("hf", help="hat Floer homology of the surgered manifold")
    common(f)
    f.set_defaults(func=cmd_hf)

    c = sub.add_parser("crosscheck", help="large-n model against the integer cone")
    common(c, pq=False)
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--classes")
    c.add_argument("--domain")
    c.set_defaults(func=cmd_crosscheck)

    z = sub.add_parser("zeta", help="rank profile of the truncated zeta cone")
    common(z, pq=False)
    z.add_argument("--n", type=int, required=True)
    z.add_argument("--s", type=int, default=0)
    z.add_argument("--max-level", type=int, default=6)
    z.set_defaults(func=cmd_zeta)

    s = sub.add_parser("s3check", help="windows of 1/q surgeries")
    common(s, pq=False)
    s.add_argument("--qs", default="1,2,3", help="q values, e.g. 1,2,3 or 1..4")
    s.set_defaults(func=cmd_s3check)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as e:
        print(f"error: {e}", file=sys.stderr)
        return e.code
    except UnboundedDomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SEMANTIC
