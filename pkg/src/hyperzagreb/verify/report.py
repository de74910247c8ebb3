"""JSON and key=value renderings of scan results and claim verdicts.

Big integers are always rendered as decimal strings. Wall-clock time is
only included on request so that outputs stay byte-identical across runs
and worker counts.
"""

from __future__ import annotations

import json

from ..io import format_inline
from .claims import VIOLATED, VerificationReport
from .scan import ExtremalResult


def _dec(v) -> str | None:
    return None if v is None else str(v)


def extremal_to_dict(res: ExtremalResult) -> dict:
    return {
        "space": res.space.text(),
        "index": res.index,
        "population": res.population,
        "min": _dec(res.min_value),
        "min_count": res.min_count,
        "min_witnesses": [format_inline(h) for h in res.min_witnesses],
        "max": _dec(res.max_value),
        "max_count": res.max_count,
        "max_witnesses": [format_inline(h) for h in res.max_witnesses],
    }


def format_extremal(res: ExtremalResult) -> str:
    d = extremal_to_dict(res)
    lines = [f"space={d['space']}", f"index={d['index']}", f"population={d['population']}"]
    for side in ("min", "max"):
        lines.append(f"{side}={d[side]}")
        lines.append(f"{side}_count={d[side + '_count']}")
        lines.extend(f"{side}_witness={w}" for w in d[side + "_witnesses"])
    return "\n".join(lines) + "\n"


def report_to_dict(r: VerificationReport, timing: bool = False) -> dict:
    d = {
        "claim_id": r.claim_id,
        "params": r.params,
        "index": r.index,
        "side": r.side,
        "expression": r.expression,
        "claimed": _dec(r.claimed),
        "observed": _dec(r.observed),
        "status": r.status,
        "space": r.space,
        "population": r.population,
        "witness_count": r.witness_count,
        "witnesses": [format_inline(h) for h in r.witnesses],
        "extremal": {
            "family": r.extremal_family,
            "value": _dec(r.extremal_value),
            "attains": r.extremal_attains,
            "unique": r.extremal_unique,
            "uniqueness_claimed": r.expects_unique,
        },
    }
    if timing:
        d["elapsed_seconds"] = round(r.elapsed, 6)
    return d


def format_report(r: VerificationReport, timing: bool = False) -> str:
    d = report_to_dict(r, timing)
    params = ",".join(f"{k}={v}" for k, v in d["params"].items())
    lines = [
        f"claim={d['claim_id']}",
        f"params={params}",
        f"bound={d['side']} {d['index']} >= {d['expression']}" if r.side == "lower"
        else f"bound={d['side']} {d['index']} <= {d['expression']}",
        f"claimed={d['claimed']}",
        f"observed={d['observed']}",
        f"status={d['status']}",
        f"space={d['space']}",
        f"population={d['population']}",
        f"witness_count={d['witness_count']}",
    ]
    lines.extend(f"witness={w}" for w in d["witnesses"])
    ex = d["extremal"]
    if ex["family"] is not None:
        lines += [
            f"extremal_family={ex['family']}",
            f"extremal_value={ex['value']}",
            f"extremal_attains={str(ex['attains']).lower()}",
            f"extremal_unique={str(ex['unique']).lower()}",
        ]
    if timing:
        lines.append(f"elapsed_seconds={d['elapsed_seconds']}")
    return "\n".join(lines) + "\n"


def format_table(reports: list[VerificationReport]) -> str:
    """Fixed-width ledger, one claim per row."""
    rows = [("claim", "params", "claimed", "observed", "status", "extremal")]
    for r in reports:
        params = ",".join(f"{k}={v}" for k, v in r.params.items())
        ext = "-" if r.extremal_attains is None else ("attains" if r.extremal_attains else "misses")
        if r.extremal_unique:
            ext += ",unique"
        rows.append((r.claim_id, params, str(r.claimed), str(r.observed), r.status, ext))
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    out = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip() for row in rows]
    violated = sum(r.status == VIOLATED for r in reports)
    out.append(f"{len(reports)} claims checked, {violated} violated")
    return "\n".join(out) + "\n"


def reports_json(reports: list[VerificationReport], timing: bool = False) -> str:
    return json.dumps([report_to_dict(r, timing) for r in reports], indent=2) + "\n"
