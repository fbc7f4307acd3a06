"""Command-line entry point: ``ckit <command> [options]``.

Exit codes: 0 success, 1 invariant violation, 2 usage error (including
requests past the computed frontier), 3 IO or parse error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import cache, compact, modified
from .complexity import CutoffPolicy, build_complexity_table, witness_expression
from .errors import CacheFormatError, FrontierError, TableRangeError
from .frac3 import Frac3
from .ordinal import Ordinal, tu_index
from .stability import DEFAULT_SETTLE_WINDOW, StableTable, defect

EXIT_OK, EXIT_INVARIANT, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3

DEFAULT_MAX = 1_000_000
DEFAULT_CUTOFF = "4/3^2"


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


@dataclass
class RunConfig:
    command: str
    table_path: Path | None
    max_n: int
    cutoff: Frac3
    settle_window: int
    output_format: str


def _config(args) -> RunConfig:
    table = getattr(args, "table", None)
    return RunConfig(
        command=args.command,
        table_path=Path(table) if table else None,
        max_n=args.max,
        cutoff=args.cutoff,
        settle_window=args.settle_window,
        output_format=args.format,
    )


def _cutoff(text: str) -> Frac3:
    try:
        c = Frac3.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if c.is_zero:
        raise argparse.ArgumentTypeError("cutoff must be positive")
    return c


def _ordinal(text: str) -> Ordinal:
    try:
        return Ordinal.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _load(cfg: RunConfig, kind: str = "exhaustive"):
    path = cfg.table_path or cache.default_table_path(cfg.max_n, kind)
    if not path.exists():
        policy = "" if kind == "exhaustive" else f" --policy {kind}"
        raise CliError(f"no table at {path}; build it first with "
                       f"`ckit table --max {cfg.max_n}{policy}`", EXIT_IO)
    try:
        return cache.load_table(path)
    except CacheFormatError as exc:
        raise CliError(str(exc), EXIT_IO) from None


def _emit(cfg: RunConfig, record, text: str, tsv: str | None = None) -> None:
    if cfg.output_format == "json":
        print(json.dumps(record, indent=1))
    elif cfg.output_format == "tsv" and tsv is not None:
        print(tsv, end="" if tsv.endswith("\n") else "\n")
    else:
        print(text)


# -- commands -----------------------------------------------------------------

def cmd_table(args, cfg: RunConfig) -> int:
    if args.policy == "modified":
        table = modified.build_modified_table(cfg.max_n)
    else:
        table = build_complexity_table(cfg.max_n, CutoffPolicy.parse(args.policy))
    out = Path(args.out) if args.out else cache.default_table_path(cfg.max_n, args.policy)
    out.parent.mkdir(parents=True, exist_ok=True)
    try:
        cache.save_table(table, out)
    except OSError as exc:
        raise CliError(f"cannot write {out}: {exc}", EXIT_IO) from None
    _emit(cfg, {"path": str(out), "max_n": table.max_n, "policy": args.policy},
          f"wrote {out} (N={table.max_n}, policy={args.policy})")
    return EXIT_OK


def cmd_check_oeis(args, cfg: RunConfig) -> int:
    table = _load(cfg)
    try:
        ref = cache.read_bfile(args.bfile)
    except cache.BFileError as exc:
        raise CliError(str(exc), EXIT_IO) from None
    except OSError as exc:
        raise CliError(f"cannot read {args.bfile}: {exc}", EXIT_IO) from None
    overlap = sorted(n for n in ref if 1 <= n <= table.max_n)
    mismatches = [(n, table[n], ref[n]) for n in overlap if table[n] != ref[n]]
    beyond = len(ref) - len(overlap)
    lines = [f"{n}: ours={a} oeis={b}" for n, a, b in mismatches]
    lines.append(f"compared {len(overlap)} entries (n <= {table.max_n}), "
                 f"{len(mismatches)} mismatches")
    if beyond:
        lines.append(f"{beyond} b-file entries lie beyond the table bound and were skipped")
    rec = {"compared": len(overlap), "skipped": beyond,
           "mismatches": [{"n": n, "ours": a, "oeis": b} for n, a, b in mismatches]}
    _emit(cfg, rec, "\n".join(lines))
    return EXIT_INVARIANT if mismatches else EXIT_OK


def _layer_name(u: int) -> str:
    return "K" + "'" * u


def section_header(p: compact.KPrefix, sec: compact.Section) -> str:
    name = _layer_name(sec.u)
    lim = sec.limit.display()
    lim_label = tu_index(sec.u + 1, sec.beta)
    if sec.upper is None:
        top = sec.members[0].frac if sec.members else sec.limit
        top_label = p.labels[p.fracs.index(top)]
        interval = f"{name}∩({lim}, {top.display()}]"
    else:
        top = sec.upper
        top_label = p.labels[p.fracs.index(top)]
        interval = f"{name}∩({lim}, {top.display()})"
    return (f"K[{top_label}]={top.display()}    {interval}    "
            f"T_{sec.u}[w*({sec.beta})+n] -> K[{lim_label}]={lim}")


def section_text(p: compact.KPrefix, sec: compact.Section) -> str:
    members = ", ".join(f"**{e.frac.display()}**" if s else e.frac.display()
                        for e, s in zip(sec.members, sec.sporadic))
    tails = ", ".join(compact.emit_family_tail(g) for g in sec.families)
    lines = [section_header(p, sec), members + (", ..." if members else "..."), tails]
    if sec.family_outside:
        lines.append("family points missing from the section: "
                     + ", ".join(f.display() for f in sec.family_outside))
    return "\n".join(lines)


def section_tsv(sec: compact.Section) -> str:
    rows = []
    for i, (e, s, o) in enumerate(zip(sec.members, sec.sporadic, sec.origins)):
        origin = "" if o is None else f"{o[0]},{o[1]},{o[2]}"
        rows.append(f"{sec.beta}\t{sec.u}\t{i}\t{e.frac}\t{int(s)}\t{int(e.settled)}\t{origin}")
    return "\n".join(rows)


def _prefix(cfg: RunConfig, table) -> compact.KPrefix:
    return compact.build_k_prefix(table, cfg.cutoff, cfg.settle_window)


def cmd_emit_sections(args, cfg: RunConfig) -> int:
    table = _load(cfg)
    p = _prefix(cfg, table)
    secs = compact.sections(p, args.u, args.depth)
    if len(secs) < args.depth:
        raise FrontierError(
            f"only {len(secs)} sections of T_{args.u} close above cutoff {cfg.cutoff}; "
            f"lower --cutoff or build a larger table")
    _emit(cfg, [s.to_record() for s in secs],
          "\n\n".join(section_text(p, s) for s in secs),
          "\n".join(section_tsv(s) for s in secs))
    return EXIT_OK


def cmd_section(args, cfg: RunConfig) -> int:
    table = _load(cfg)
    p = _prefix(cfg, table)
    sec = compact.section_of(p, args.beta, args.u)
    _emit(cfg, sec.to_record(), section_text(p, sec), section_tsv(sec))
    return EXIT_OK


def cmd_query(args, cfg: RunConfig) -> int:
    table = _load(cfg)
    st = StableTable.of(table, cfg.settle_window)
    recs, lines = [], []
    for n in args.n:
        try:
            value = table[n]
        except TableRangeError as exc:
            raise CliError(str(exc), EXIT_USAGE) from None
        sv = st.get(n)
        rec = {"n": n, "complexity": value, "defect": defect(table, n).value,
               "stable": sv.value, "settled": sv.settled,
               "witness": str(witness_expression(table, n))}
        line = (f"n={n} ||n||={value} defect={rec['defect']:.6f} "
                f"||n||_st={sv.value}{'' if sv.settled else ' (unsettled)'}")
        if n % 3:
            ell = (sv.value - 2 + (2 - sv.value) % 3) // 3
            rec["kappa"] = ell
            rec["layer"] = (2 - sv.value) % 3
            line += f" kappa={ell} T_{rec['layer']}"
        lines.append(line + f"\n  {rec['witness']}")
        recs.append(rec)
    _emit(cfg, recs, "\n".join(lines),
          "\n".join(f"{r['n']}\t{r['complexity']}\t{r['stable']}\t{int(r['settled'])}" for r in recs))
    return EXIT_OK


def cmd_selfsim(args, cfg: RunConfig) -> int:
    table = _load(cfg)
    rep = compact.check_self_similarity(_prefix(cfg, table))
    rec = {"ok": rep.ok, "compared_above": str(rep.compared_above), "compared": rep.compared,
           "only_in_k": [str(f) for f in rep.only_in_k],
           "only_in_scaled": [str(f) for f in rep.only_in_scaled],
           "label_mismatches": [[str(f), str(a), str(b)] for f, a, b in rep.label_mismatches],
           "t3_mismatches": [str(f) for f in rep.t3_mismatches]}
    text = (f"3K''' vs K above {rep.compared_above.display()}: {rep.compared} points, "
            f"{'pass' if rep.ok else 'FAIL'}")
    if not rep.ok:
        text += "\n" + json.dumps(rec, indent=1)
    _emit(cfg, rec, text)
    return EXIT_OK if rep.ok else EXIT_INVARIANT


def cmd_limits(args, cfg: RunConfig) -> int:
    table = _load(cfg)
    p = _prefix(cfg, table)
    alphas = [Ordinal.of(a) for a in range(args.alphas)]
    rep = compact.check_limit_relations(p, alphas, args.depth, args.rel_tol)
    rows = [{"alpha": str(c.alpha), "u": c.u, "limit": str(c.limit), "members": c.members,
             "decreasing": c.decreasing, "shrinking": c.shrinking,
             "final_rel_distance": c.final_rel_distance, "wrap_ok": c.wrap_ok,
             "ok": c.ok(rep.rel_tol)} for c in rep.checks]
    text = "\n".join(f"alpha={r['alpha']} u={r['u']} -> {Frac3.parse(r['limit']).display()}: "
                     f"{'pass' if r['ok'] else 'FAIL'} (rel {r['final_rel_distance']:.2e})"
                     for r in rows)
    _emit(cfg, {"ok": rep.ok, "checks": rows}, text)
    return EXIT_OK if rep.ok else EXIT_INVARIANT


def cmd_compare_h(args, cfg: RunConfig) -> int:
    table = _load(cfg)
    mod_cfg = RunConfig(cfg.command, Path(args.htable) if args.htable else None,
                        cfg.max_n, cfg.cutoff, cfg.settle_window, cfg.output_format)
    mod = _load(mod_cfg, "modified")
    if not isinstance(mod, modified.ModifiedTable):
        raise CliError(f"{mod_cfg.table_path} does not hold a modified table", EXIT_IO)
    k = compact.build_k_prefix(table, cfg.cutoff, cfg.settle_window)
    h = modified.build_h_prefix(mod, cfg.cutoff, cfg.settle_window)
    diff = modified.compare_prefixes(k, h)
    text = f"{diff.verdict} (cutoff {cfg.cutoff.display()}, numerators <= {diff.horizon})"
    if not diff.empty:
        text += "\n" + json.dumps(diff.to_record(), indent=1)
    elif diff.unresolved_probes:
        text += (f"\nunresolved probes 73(3^k+1)+6 beyond horizon: "
                 f"{len(diff.unresolved_probes)} (from n={diff.unresolved_probes[0]})")
    _emit(cfg, diff.to_record(), text)
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max", type=int, default=DEFAULT_MAX,
                        help=f"table bound N (default {DEFAULT_MAX})")
    common.add_argument("--cutoff", type=_cutoff, default=Frac3.parse(DEFAULT_CUTOFF),
                        help=f"smallest value kept, as m/3^k (default {DEFAULT_CUTOFF})")
    common.add_argument("--settle-window", type=int, default=DEFAULT_SETTLE_WINDOW,
                        help=f"steps of agreement needed to call a value settled "
                             f"(default {DEFAULT_SETTLE_WINDOW})")
    common.add_argument("--format", choices=("text", "json", "tsv"), default="text")
    with_table = argparse.ArgumentParser(add_help=False)
    with_table.add_argument("--table", help=f"cache file (default: ${cache.CACHE_ENV} "
                                            f"or ~/.cache/ckit, named by --max)")

    ap = argparse.ArgumentParser(prog="ckit", description="Integer complexity tables and "
                                 "the compact set of fractions m/3^k they generate.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="build and cache a table")
    p.add_argument("--out", help="output path (default: cache dir)")
    p.add_argument("--policy", default="exhaustive",
                   help="exhaustive, bounded:B or modified (default exhaustive)")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check-oeis", parents=[common, with_table],
                       help="compare a table with an OEIS A005245 b-file")
    p.add_argument("--bfile", required=True)
    p.set_defaults(func=cmd_check_oeis)

    p = sub.add_parser("emit-sections", parents=[common, with_table],
                       help="print successive sections of T_u")
    p.add_argument("--u", type=int, choices=(0, 1, 2), default=0)
    p.add_argument("--depth", type=int, default=3, help="number of sections (default 3)")
    p.set_defaults(func=cmd_emit_sections)

    p = sub.add_parser("section", parents=[common, with_table], help="one section of T_u")
    p.add_argument("--u", type=int, choices=(0, 1, 2), default=0)
    p.add_argument("--beta", type=_ordinal, default=Ordinal(),
                   help="section index, e.g. 0, 3, w+2 (default 0)")
    p.set_defaults(func=cmd_section)

    p = sub.add_parser("query", parents=[common, with_table],
                       help="complexity, stable complexity and witness of integers")
    p.add_argument("n", type=int, nargs="+")
    p.set_defaults(func=cmd_query)

    p = sub.add_parser("selfsim", parents=[common, with_table], help="check 3K''' = K")
    p.set_defaults(func=cmd_selfsim)

    p = sub.add_parser("limits", parents=[common, with_table],
                       help="check that sections converge to their limits")
    p.add_argument("--depth", type=int, default=15, help="members checked (default 15)")
    p.add_argument("--alphas", type=int, default=3, help="check alpha = 0..A-1 (default 3)")
    p.add_argument("--rel-tol", type=float, default=1e-3)
    p.set_defaults(func=cmd_limits)

    p = sub.add_parser("compare-h", parents=[common, with_table],
                       help="compare K with the compact H of the modified complexity")
    p.add_argument("--htable", help="modified-table cache (default: cache dir)")
    p.set_defaults(func=cmd_compare_h)
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.max < 1:
        ap.error("--max must be >= 1")
    if args.settle_window < 1:
        ap.error("--settle-window must be >= 1")
    if getattr(args, "policy", None) not in (None, "modified"):
        try:
            CutoffPolicy.parse(args.policy)
        except ValueError as exc:
            ap.error(str(exc))
    cfg = _config(args)
    try:
        return args.func(args, cfg)
    except CliError as exc:
        print(f"ckit: {exc}", file=sys.stderr)
        return exc.code
    except FrontierError as exc:
        print(f"ckit: frontier: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"ckit: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
