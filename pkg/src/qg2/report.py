"""Check reports: one record per verified identity, with stable formatting.

A report line carries a check id, a status, the two compared sides, and a
citation label naming the identity.  Status values:

``pass``
    computed and transcribed sides agree exactly;
``mismatch-reported``
    they disagree and the transcription is on the known-mismatch list
    (a suspected misprint): surfaced as a warning, not a failure;
``fail``
    they disagree and nothing excuses it.

Output ordering is the input ordering, which every producer keeps
deterministic, so repeated runs are byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, asdict

__all__ = ["Report", "make_report", "format_text", "format_json", "worst_status"]


@dataclass(frozen=True)
class Report:
    check_id: str
    status: str
    left: str
    right: str
    citation: str


def make_report(check_id, ok, left, right, citation, known_mismatches=None):
    """Build a report, downgrading known mismatches to warnings."""
    if ok:
        status = "pass"
    elif known_mismatches and check_id in known_mismatches:
        status = "mismatch-reported"
    else:
        status = "fail"
    return Report(check_id, status, str(left), str(right), citation)


_MARK = {"pass": "ok  ", "fail": "FAIL", "mismatch-reported": "warn"}


def format_text(reports, verbose=False):
    lines = []
    for rep in reports:
        lines.append(f"[{_MARK[rep.status]}] {rep.check_id}  ({rep.citation})")
        if rep.status != "pass" or verbose:
            lines.append(f"       computed:    {rep.left}")
            lines.append(f"       transcribed: {rep.right}")
    counts = {}
    for rep in reports:
        counts[rep.status] = counts.get(rep.status, 0) + 1
    summary = ", ".join(f"{counts.get(k, 0)} {k}"
                        for k in ("pass", "mismatch-reported", "fail"))
    lines.append(f"-- {summary}")
    return "\n".join(lines)


def format_json(reports):
    return json.dumps([asdict(r) for r in reports], indent=2, sort_keys=False)


def worst_status(reports):
    """Exit-code style worst status: 'fail' > 'mismatch-reported' > 'pass'."""
    if any(r.status == "fail" for r in reports):
        return "fail"
    if any(r.status == "mismatch-reported" for r in reports):
        return "mismatch-reported"
    return "pass"
