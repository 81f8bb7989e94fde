"""Command-line interface: explore, construct, verify, and render.

Exit codes separate the four kinds of outcome: 0 for success, 1 for
honest negative answers (no matching with that count, budget exhausted),
2 for usage errors, and 3 for falsification alarms, i.e. conditions that
are supposed to be impossible.  Reports are deterministic apart from the
timing field; JSON output is the machine-readable form.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
import time
from math import cos, pi, sin

from . import __version__
from .compose import achievable_range, compose
from .construct import (
    alternating_max_matching,
    balanced_fourblock_bound,
    fourblock_max_matching,
    lemma3_witness,
    plane_matching,
    sixblock_crossing_count,
    sixblock_witness,
)
from .core import (
    Coloring,
    Matching,
    all_symmetries,
    block_profile,
    crossing_number,
    validate,
)
from .errors import (
    DomainNegative,
    FalsificationAlarm,
    InvalidMatching,
    NotSixBlockPattern,
    ParseError,
    UsageError,
)
from .search import SearchBudget, enumerate_colorings, find_with_k, max_crossing, minmax_sweep, spectrum

_RUN_TOKEN = re.compile(r"(\d+)([RBrb])")

SVG_WIDTH = 440
SVG_HEIGHT = 470
SVG_CENTER = 220
SVG_RADIUS = 175
SVG_RED = "#cc3333"
SVG_BLUE = "#3366cc"


def parse_coloring(text: str) -> Coloring:
    """Coloring from compact ("RBRB") or run-length ("2R 2B") text."""
    stripped = "".join(text.split())
    if not stripped:
        raise ParseError("empty coloring text")
    if set(stripped.upper()) <= {"R", "B"}:
        return Coloring(stripped)
    parts = []
    consumed = 0
    for match in _RUN_TOKEN.finditer(stripped):
        if match.start() != consumed:
            raise ParseError(f"unreadable coloring text {text!r}")
        parts.append(match.group(2).upper() * int(match.group(1)))
        consumed = match.end()
    if consumed != len(stripped):
        raise ParseError(f"unreadable coloring text {text!r}")
    return Coloring("".join(parts))


def format_matching(matching: Matching) -> str:
    return ",".join(f"{a}-{b}" for a, b in matching.sorted_edges)


def parse_matching(text: str) -> Matching:
    """Matching from its text form "0-5,1-4"."""
    pairs = []
    for token in text.split(","):
        token = token.strip()
        if not re.fullmatch(r"\d+-\d+", token):
            raise ParseError(f"unreadable edge {token!r}")
        a, b = token.split("-")
        pairs.append((int(a), int(b)))
    return Matching.from_pairs(pairs)


def _matching_payload(matching: Matching) -> dict:
    return {
        "edges": [list(e) for e in matching.sorted_edges],
        "text": format_matching(matching),
    }


def render_svg(
    coloring: Coloring, matching: Matching, out_path: str | None = None
) -> str:
    """SVG picture: points on a circle, position 0 on top, clockwise.

    The styling is fixed so identical inputs yield byte-identical files.
    The matching is validated before anything is written.
    """
    problems = validate(coloring, matching)
    if problems:
        raise InvalidMatching("; ".join(problems))
    count = crossing_number(coloring, matching)
    size = coloring.size

    def point(i: int) -> tuple[float, float]:
        angle = 2 * pi * i / size
        return (
            SVG_CENTER + SVG_RADIUS * sin(angle),
            SVG_CENTER - SVG_RADIUS * cos(angle),
        )

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{SVG_WIDTH}" height="{SVG_HEIGHT}" '
        f'viewBox="0 0 {SVG_WIDTH} {SVG_HEIGHT}">',
        f'<rect width="{SVG_WIDTH}" height="{SVG_HEIGHT}" fill="#ffffff"/>',
        f'<circle cx="{SVG_CENTER}" cy="{SVG_CENTER}" r="{SVG_RADIUS}" '
        f'fill="none" stroke="#dddddd" stroke-width="1"/>',
    ]
    for a, b in matching.sorted_edges:
        xa, ya = point(a)
        xb, yb = point(b)
        lines.append(
            f'<line x1="{xa:.2f}" y1="{ya:.2f}" x2="{xb:.2f}" y2="{yb:.2f}" '
            f'stroke="#333333" stroke-width="1.5"/>'
        )
    for i in range(size):
        x, y = point(i)
        fill = SVG_RED if coloring.colors[i] == "R" else SVG_BLUE
        lines.append(
            f'<circle cx="{x:.2f}" cy="{y:.2f}" r="7" fill="{fill}" '
            f'stroke="#1a1a1a" stroke-width="1"/>'
        )
        lx = SVG_CENTER + (SVG_RADIUS + 16) * sin(2 * pi * i / size)
        ly = SVG_CENTER - (SVG_RADIUS + 16) * cos(2 * pi * i / size)
        lines.append(
            f'<text x="{lx:.2f}" y="{ly + 3:.2f}" font-family="monospace" '
            f'font-size="10" text-anchor="middle" fill="#666666">{i}</text>'
        )
    lines.append(
        f'<text x="{SVG_CENTER}" y="{SVG_HEIGHT - 15}" '
        f'font-family="monospace" font-size="16" text-anchor="middle" '
        f'fill="#222222">crossings: {count}</text>'
    )
    lines.append("</svg>")
    svg = "\n".join(lines) + "\n"
    if out_path is not None:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(svg)
    return svg


ATLAS_HEADER = (
    "n",
    "coloring",
    "orbit_size",
    "max_crossings",
    "spectrum_min",
    "spectrum_max",
    "missing_values",
)


def atlas(n: int, out_path: str, budget: SearchBudget | None = None) -> dict:
    """Spectrum atlas over all orbits: CSV rows plus a JSON summary.

    Progress is journaled per canonical coloring next to the output file,
    so an interrupted run resumes where it stopped; the journal is
    removed once the CSV and sidecar have been written atomically.
    """
    journal_path = out_path + ".journal"
    done: dict[str, dict] = {}
    if os.path.exists(journal_path):
        with open(journal_path, encoding="utf-8") as handle:
            for line in handle:
                if line.strip():
                    row = json.loads(line)
                    done[row["coloring"]] = row
    reps = enumerate_colorings(n)
    with open(journal_path, "a", encoding="utf-8") as journal:
        for rep in reps:
            if rep.colors in done:
                continue
            spec = spectrum(rep, budget)
            orbit = {sym.apply(rep).colors for sym in all_symmetries(rep.size)}
            low = spec.achievable[0]
            high = spec.achievable[-1]
            row = {
                "n": n,
                "coloring": rep.colors,
                "orbit_size": len(orbit),
                "max_crossings": high,
                "spectrum_min": low,
                "spectrum_max": high,
                "missing_values": [
                    v for v in range(low, high + 1)
                    if v not in set(spec.achievable)
                ],
            }
            journal.write(json.dumps(row, sort_keys=True) + "\n")
            journal.flush()
            done[rep.colors] = row

    rows = [done[rep.colors] for rep in reps]
    tmp = out_path + ".tmp"
    with open(tmp, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(ATLAS_HEADER)
        for row in rows:
            writer.writerow(
                [
                    row["n"],
                    row["coloring"],
                    row["orbit_size"],
                    row["max_crossings"],
                    row["spectrum_min"],
                    row["spectrum_max"],
                    ";".join(str(v) for v in row["missing_values"]),
                ]
            )
    os.replace(tmp, out_path)

    min_max = min(row["max_crossings"] for row in rows)
    summary = {
        "n": n,
        "orbit_count": len(rows),
        "min_max_crossings": min_max,
        "max_max_crossings": max(row["max_crossings"] for row in rows),
        "minimizers": [
            row["coloring"] for row in rows if row["max_crossings"] == min_max
        ],
        "csv": out_path,
    }
    sidecar = out_path + ".json"
    tmp = sidecar + ".tmp"
    with open(tmp, "w", encoding="utf-8") as handle:
        json.dump(summary, handle, indent=2, sort_keys=True)
        handle.write("\n")
    os.replace(tmp, sidecar)
    os.remove(journal_path)
    summary["sidecar"] = sidecar
    return summary


# --- subcommand handlers ----------------------------------------------------


def _budget(ns) -> SearchBudget:
    return SearchBudget(
        max_nodes=getattr(ns, "max_nodes", None),
        jobs=getattr(ns, "jobs", 1) or 1,
    )


def _parse_blocks(text: str, expected: int) -> list[int]:
    try:
        sizes = [int(part) for part in text.split(",")]
    except ValueError:
        raise ParseError(f"unreadable block sizes {text!r}")
    if len(sizes) != expected:
        raise ParseError(f"need {expected} block sizes, got {len(sizes)}")
    if any(s < 1 for s in sizes):
        raise ParseError("block sizes must be positive")
    return sizes


def _blocks_to_coloring(sizes: list[int]) -> Coloring:
    return Coloring(
        "".join(("R" if i % 2 == 0 else "B") * s for i, s in enumerate(sizes))
    )


def _cmd_spectrum(ns) -> tuple[dict, int]:
    coloring = parse_coloring(ns.coloring)
    spec = spectrum(coloring, _budget(ns))
    result = {
        "coloring": coloring.colors,
        "n": coloring.n,
        "achievable": list(spec.achievable),
        "missing": list(spec.missing),
        "witnesses": {
            str(k): format_matching(m) for k, m in sorted(spec.witnesses.items())
        },
    }
    return result, 0


def _cmd_max(ns) -> tuple[dict, int]:
    coloring = parse_coloring(ns.coloring)
    count, matching = max_crossing(coloring, _budget(ns))
    return {
        "coloring": coloring.colors,
        "count": count,
        "matching": _matching_payload(matching),
    }, 0


def _cmd_bound(ns) -> tuple[dict, int]:
    breakdown = balanced_fourblock_bound(ns.n)
    return {
        "n": breakdown.n,
        "m": breakdown.m,
        "residue": breakdown.residue,
        "value": breakdown.value,
    }, 0


def _cmd_find(ns) -> tuple[dict, int]:
    coloring = parse_coloring(ns.coloring)
    matching = find_with_k(coloring, ns.k, _budget(ns))
    if matching is None:
        return {
            "coloring": coloring.colors,
            "k": ns.k,
            "found": False,
        }, 1
    return {
        "coloring": coloring.colors,
        "k": ns.k,
        "found": True,
        "matching": _matching_payload(matching),
    }, 0


def _cmd_construct(ns) -> tuple[dict, int]:
    kind = ns.kind
    if kind == "alternating":
        coloring, matching = alternating_max_matching(ns.n)
        count = crossing_number(coloring, matching)
    elif kind == "fourblock":
        if ns.blocks:
            coloring = _blocks_to_coloring(_parse_blocks(ns.blocks, 4))
        elif ns.coloring:
            coloring = parse_coloring(ns.coloring)
        else:
            raise UsageError("fourblock needs --blocks or --coloring")
        matching, count = fourblock_max_matching(block_profile(coloring))
    elif kind == "sixblock":
        sizes = _parse_blocks(ns.blocks, 6)
        if sizes[1] != sizes[4] or sizes[1] % 2 == 0:
            raise NotSixBlockPattern(
                "second and fifth blocks must share an odd size"
            )
        m = (sizes[1] - 1) // 2
        y1, y2 = sizes[3], sizes[2]
        if sizes[0] != sizes[1] + y1 or sizes[5] != sizes[4] + y2:
            raise NotSixBlockPattern(
                "sizes must fit (2m+1+y1, 2m+1, y2, y1, 2m+1, 2m+1+y2)"
            )
        coloring, matching = sixblock_witness(m, y1, y2)
        count = sixblock_crossing_count(m, y1, y2)
    elif kind == "witness":
        coloring = parse_coloring(ns.coloring)
        matching, count = lemma3_witness(coloring)
    elif kind == "plane":
        coloring = parse_coloring(ns.coloring)
        matching = plane_matching(coloring)
        count = crossing_number(coloring, matching)
    else:  # pragma: no cover - argparse enforces the choices
        raise UsageError(f"unknown construction {kind!r}")
    result = {
        "kind": kind,
        "coloring": coloring.colors,
        "n": coloring.n,
        "count": count,
        "matching": _matching_payload(matching),
    }
    if kind == "witness":
        result["bound"] = balanced_fourblock_bound(coloring.n).value
    return result, 0


def _cmd_compose(ns) -> tuple[dict, int]:
    coloring = parse_coloring(ns.coloring)
    window_range = achievable_range(coloring)
    matching, plan = compose(coloring, ns.k)
    return {
        "coloring": coloring.colors,
        "k": ns.k,
        "achievable_max": window_range.max_k,
        "windows": [list(w) for w in plan.windows],
        "targets": list(plan.targets or ()),
        "remainder": list(plan.remainder),
        "matching": _matching_payload(matching),
    }, 0


def _cmd_sweep(ns) -> tuple[dict, int]:
    value, minimizers = minmax_sweep(ns.n, _budget(ns))
    return {
        "n": ns.n,
        "value": value,
        "bound": balanced_fourblock_bound(ns.n).value,
        "minimizers": [c.colors for c in minimizers],
    }, 0


def _cmd_atlas(ns) -> tuple[dict, int]:
    if not ns.out:
        raise UsageError("atlas needs --out for the CSV path")
    summary = atlas(ns.n, ns.out, _budget(ns))
    return summary, 0


def _cmd_render(ns) -> tuple[dict, int]:
    coloring = parse_coloring(ns.coloring)
    matching = parse_matching(ns.matching)
    if not ns.out:
        raise UsageError("render needs --out for the SVG path")
    render_svg(coloring, matching, ns.out)
    return {
        "coloring": coloring.colors,
        "count": crossing_number(coloring, matching),
        "out": ns.out,
    }, 0


_HANDLERS = {
    "spectrum": _cmd_spectrum,
    "max": _cmd_max,
    "bound": _cmd_bound,
    "find": _cmd_find,
    "construct": _cmd_construct,
    "compose": _cmd_compose,
    "sweep": _cmd_sweep,
    "atlas": _cmd_atlas,
    "render": _cmd_render,
}


def _input_echo(ns) -> dict:
    echo = {}
    for key in ("coloring", "n", "k", "blocks", "kind", "matching", "jobs",
                "max_nodes", "seed", "out"):
        value = getattr(ns, key, None)
        if value is not None:
            echo[key] = value
    return echo


def _flatten(value) -> str:
    if isinstance(value, dict):
        if "text" in value:
            return str(value["text"])
        return json.dumps(value, sort_keys=True)
    if isinstance(value, (list, tuple)):
        return " ".join(_flatten(v) for v in value) if value else "-"
    return str(value)


def _format_report(report: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer)
        writer.writerow(("key", "value"))
        for key in sorted(report["result"]):
            writer.writerow((key, _flatten(report["result"][key])))
        return buffer.getvalue()
    lines = [f"{report['command']} (v{report['version']})"]
    for key in sorted(report["result"]):
        lines.append(f"  {key}: {_flatten(report['result'][key])}")
    return "\n".join(lines) + "\n"


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="convexmatch",
        description=(
            "Bichromatic perfect matchings with prescribed crossing "
            "numbers on convex point sets."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("text", "json", "csv"),
                        default="text", help="report format")
        sp.add_argument("--out", help="write the report (or artifact) here")
        sp.add_argument("--seed", type=int, help="echoed into the report")

    sp = sub.add_parser("spectrum", help="all achievable crossing numbers")
    sp.add_argument("--coloring", required=True)
    sp.add_argument("--max-nodes", type=int, dest="max_nodes")
    common(sp)

    sp = sub.add_parser("max", help="exhaustive maximum crossing number")
    sp.add_argument("--coloring", required=True)
    sp.add_argument("--max-nodes", type=int, dest="max_nodes")
    common(sp)

    sp = sub.add_parser("bound", help="closed-form min-max crossing bound")
    sp.add_argument("--n", type=int, required=True)
    common(sp)

    sp = sub.add_parser("find", help="matching with exactly k crossings")
    sp.add_argument("--coloring", required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--max-nodes", type=int, dest="max_nodes")
    common(sp)

    sp = sub.add_parser("construct", help="named matching constructions")
    kinds = sp.add_subparsers(dest="kind", required=True)
    k = kinds.add_parser("alternating", help="maximum on alternating colors")
    k.add_argument("--n", type=int, required=True)
    common(k)
    k = kinds.add_parser("fourblock", help="exact maximum on four blocks")
    k.add_argument("--blocks", help="r1,b1,r2,b2")
    k.add_argument("--coloring")
    common(k)
    k = kinds.add_parser("sixblock", help="six-block witness construction")
    k.add_argument("--blocks", required=True, help="six block sizes")
    common(k)
    k = kinds.add_parser("witness", help="matching meeting the bound")
    k.add_argument("--coloring", required=True)
    common(k)
    k = kinds.add_parser("plane", help="crossing-free matching")
    k.add_argument("--coloring", required=True)
    common(k)

    sp = sub.add_parser("compose", help="matching with exactly k crossings "
                                        "via 14-point windows")
    sp.add_argument("--coloring", required=True)
    sp.add_argument("--k", type=int, required=True)
    common(sp)

    sp = sub.add_parser("sweep", help="min over orbits of max crossings")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=1)
    common(sp)

    sp = sub.add_parser("atlas", help="per-orbit spectrum atlas (CSV)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--max-nodes", type=int, dest="max_nodes")
    common(sp)

    sp = sub.add_parser("render", help="SVG picture of a matching")
    sp.add_argument("--coloring", required=True)
    sp.add_argument("--matching", required=True)
    common(sp)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as stop:
        return int(stop.code or 0)
    started = time.monotonic()
    try:
        result, code = _HANDLERS[ns.command](ns)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except DomainNegative as err:
        print(f"no: {err}", file=sys.stderr)
        return 1
    except FalsificationAlarm as err:
        print(f"FALSIFICATION ALARM: {err}", file=sys.stderr)
        return 3
    except OSError as err:
        print(f"io error: {err}", file=sys.stderr)
        return 2
    report = {
        "schema": 1,
        "version": __version__,
        "command": ns.command,
        "input": _input_echo(ns),
        "result": result,
        "elapsed_ms": int((time.monotonic() - started) * 1000),
    }
    text = _format_report(report, ns.format)
    # atlas and render already wrote their artifact to --out
    if ns.out and ns.command not in ("atlas", "render"):
        with open(ns.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
