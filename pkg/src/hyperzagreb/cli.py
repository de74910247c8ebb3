"""``hz`` command-line interface.

Output is line-oriented ``key=value`` text by default and JSON with
``--json``; index values are always printed as decimal integers.

Exit codes: 0 on success, 1 on usage / input / I/O errors, 2 when
``verify`` finds a violated claim.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import qsar
from .errors import HyperZagrebError
from .families import cross_check, parse_family
from .indices import edge_contributions, indices
from .io import format_hg, format_json, read_hypergraph
from .verify.claims import CLAIMS, VIOLATED, check_claims, default_battery
from .verify.report import extremal_to_dict, format_extremal, format_report, format_table, report_to_dict
from .verify.scan import DEFAULT_CHUNK_BITS, DEFAULT_WITNESSES, default_threads, scan
from .verify.spaces import DEFAULT_CAP, parse_space


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _cmd_compute(args) -> int:
    h = read_hypergraph(args.file, args.format)
    h1, h2 = indices(h)
    contribs = edge_contributions(h)
    if args.json:
        out = {
            "n": h.n,
            "m": h.m,
            "hm1": str(h1),
            "hm2": str(h2),
            "edges": [
                {"edge": list(c.edge), "degree_sum": c.degree_sum, "degree_product": str(c.degree_product)}
                for c in contribs
            ],
        }
        print(json.dumps(out))
    else:
        print(f"HM1={h1}")
        print(f"HM2={h2}")
        for c in contribs:
            print(f"edge={' '.join(map(str, c.edge))} sum={c.degree_sum} product={c.degree_product}")
    return 0


def _cmd_generate(args) -> int:
    h = parse_family(args.spec).generate()
    _write(args.output, format_json(h) if args.format == "json" else format_hg(h))
    return 0


def _cmd_closed_form(args) -> int:
    spec = parse_family(args.spec)
    cf = spec.closed_form()
    if args.json:
        out = {
            "spec": spec.text(),
            "hm1": [{"label": lab, "value": str(v)} for lab, v in cf.hm1_variants],
            "hm2": [{"label": lab, "value": str(v)} for lab, v in cf.hm2_variants],
        }
        print(json.dumps(out))
    else:
        print(f"spec={spec.text()}")
        for name, variants in (("HM1", cf.hm1_variants), ("HM2", cf.hm2_variants)):
            for lab, v in variants:
                print(f"{name}[{lab}]={v}")
    return 0


def _cmd_cross_check(args) -> int:
    rep = cross_check(parse_family(args.spec))
    if args.json:
        out = {
            "spec": rep.spec.text(),
            "structural_hm1": str(rep.structural_hm1),
            "structural_hm2": str(rep.structural_hm2),
            "verdicts": [
                {"index": v.index, "label": v.label, "claimed": str(v.claimed), "match": v.match}
                for v in rep.verdicts
            ],
        }
        print(json.dumps(out))
    else:
        print(f"spec={rep.spec.text()}")
        print(f"structural HM1={rep.structural_hm1}")
        print(f"structural HM2={rep.structural_hm2}")
        for v in rep.verdicts:
            verdict = "match" if v.match else "mismatch"
            print(f"{v.index.upper()}[{v.label}]={v.claimed} {verdict}")
    return 0


def _claim_params(args) -> dict:
    return {k: getattr(args, k) for k in ("n", "k", "m", "p", "q") if getattr(args, k) is not None}


def _cmd_verify(args) -> int:
    opts = dict(
        threads=args.threads,
        cap=args.cap,
        override=args.cap_override,
        witnesses=args.witnesses,
        chunk_bits=args.chunk_bits,
    )
    if args.claim == "all":
        reports = check_claims(default_battery(), **opts)
        if args.json:
            print(json.dumps([report_to_dict(r, args.timing) for r in reports], indent=2))
        else:
            sys.stdout.write(format_table(reports))
    else:
        reports = check_claims([(args.claim, _claim_params(args))], **opts)
        if args.json:
            print(json.dumps(report_to_dict(reports[0], args.timing), indent=2))
        else:
            sys.stdout.write(format_report(reports[0], args.timing))
    return 2 if any(r.status == VIOLATED for r in reports) else 0


def _cmd_claims(args) -> int:
    for c in CLAIMS.values():
        bound = ">=" if c.side == "lower" else "<="
        print(f"{c.claim_id}  params={','.join(c.params)}  {c.index} {bound} {c.expression}  over {c.source}")
    return 0


def _cmd_scan(args) -> int:
    space = parse_space(args.space)
    res = scan(
        space,
        threads=args.threads,
        cap=args.cap,
        override=args.cap_override,
        witnesses=args.witnesses,
        chunk_bits=args.chunk_bits,
    )
    which = ("hm1", "hm2") if args.index == "both" else (args.index,)
    if args.json:
        out = [extremal_to_dict(res.result(ix)) for ix in which]
        print(json.dumps(out if len(out) > 1 else out[0], indent=2))
    else:
        sys.stdout.write("\n".join(format_extremal(res.result(ix)) for ix in which))
    return 0


def _cmd_qsar_table(args) -> int:
    entries = [(Path(f).stem, read_hypergraph(f), None) for f in args.files]
    rows = qsar.descriptor_table(entries)
    _write(args.output, qsar.format_descriptor_csv(rows))
    return 0


def _cmd_qsar_fit(args) -> int:
    rows = qsar.read_descriptor_csv(args.csv)
    fitted = qsar.fit(rows)
    _write(args.output, qsar.fit_to_json(fitted))
    if args.predictions:
        Path(args.predictions).write_text(qsar.format_descriptor_csv(rows, fitted))
    if fitted.condition_warning:
        print("warning: design matrix is ill-conditioned; pseudo-inverse solution returned", file=sys.stderr)
    return 0


def _cmd_qsar_figure(args) -> int:
    if args.csv:
        lines = ["predicted,experimental"] + [f"{x!r},{y!r}" for x, y in qsar.figure1_points()]
        print("\n".join(lines))
        return 0
    rep = qsar.figure1_report()
    if args.json:
        print(json.dumps(rep, indent=2))
    else:
        c, r = rep["computed"], rep["reference"]
        print(f"n_points={rep['n_points']}")
        print(f"slope={c['slope']!r}")
        print(f"intercept={c['intercept']!r}")
        print(f"r_squared={c['r_squared']!r}")
        print(f"reference_line={r['plotted_slope']}x + {r['plotted_intercept']}")
        print(f"reference_r_squared={r['caption_r_squared']}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hz", description="Hyper-Zagreb indices of hypergraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    def enum_opts(sp):
        sp.add_argument("--threads", type=int, default=default_threads(),
                        help="worker processes (default: $HZ_THREADS or CPU count)")
        sp.add_argument("--cap", type=int, default=DEFAULT_CAP, help="enumeration size guard")
        sp.add_argument("--cap-override", action="store_true", help="allow spaces larger than --cap")
        sp.add_argument("--witnesses", type=int, default=DEFAULT_WITNESSES, help="witnesses kept per extremum")
        sp.add_argument("--chunk-bits", type=int, default=DEFAULT_CHUNK_BITS,
                        help="subset bits swept per work unit; results do not depend on it")
        sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("compute", help="HM1/HM2 and per-edge contributions of a .hg or .json file")
    sp.add_argument("file")
    sp.add_argument("--format", choices=["hg", "json"], help="input format (default: from suffix)")
    sp.add_argument("--threads", type=int, default=default_threads(), help="accepted for symmetry; unused")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_compute)

    sp = sub.add_parser("generate", help="write a family instance, e.g. sunflower:m=3,p=2,k=3")
    sp.add_argument("spec")
    sp.add_argument("-o", "--output")
    sp.add_argument("--format", choices=["hg", "json"], default="hg")
    sp.set_defaults(func=_cmd_generate)

    sp = sub.add_parser("closed-form", help="every published closed form for a family")
    sp.add_argument("spec")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_closed_form)

    sp = sub.add_parser("cross-check", help="closed forms versus the generated instance")
    sp.add_argument("spec")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_cross_check)

    sp = sub.add_parser("verify", help="adjudicate a bound claim ('all' runs the default battery)")
    sp.add_argument("claim")
    for name in ("n", "k", "m", "p", "q"):
        sp.add_argument(f"--{name}", type=int)
    sp.add_argument("--timing", action="store_true", help="include elapsed time in the report")
    enum_opts(sp)
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("claims", help="list registered claims")
    sp.set_defaults(func=_cmd_claims)

    sp = sub.add_parser("scan", help="exhaustive min/max over a space, e.g. connected:n=4")
    sp.add_argument("space")
    sp.add_argument("--index", choices=["hm1", "hm2", "both"], default="both")
    enum_opts(sp)
    sp.set_defaults(func=_cmd_scan)

    sp = sub.add_parser("qsar-table", help="descriptor CSV from hypergraph files")
    sp.add_argument("files", nargs="+")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=_cmd_qsar_table)

    sp = sub.add_parser("qsar-fit", help="fit the bioactivity model to a descriptor CSV")
    sp.add_argument("csv")
    sp.add_argument("-o", "--output", help="fit JSON (default: stdout)")
    sp.add_argument("--predictions", help="write the CSV with interaction and prediction columns")
    sp.set_defaults(func=_cmd_qsar_fit)

    sp = sub.add_parser("qsar-figure", help="regression line through the ACE-inhibitor scatter")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--csv", action="store_true", help="emit the point series instead")
    sp.set_defaults(func=_cmd_qsar_figure)
    return p


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (HyperZagrebError, ValueError) as exc:
        print(f"hz: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        name = exc.filename if exc.filename is not None else ""
        print(f"hz: error: cannot access {name}: {exc.strerror or exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())
