"""Command-line front door wiring every module together.

Exit codes: 0 success, 1 formula/oracle check mismatch, 2 usage error,
3 budget or horizon exhaustion.  All outputs are deterministic: words are
sorted, JSON keys are sorted, floats use repr, and worker counts never
affect bytes written.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import boshernitzan, complexity, debruijn, repetitivity, spectral
from .coding import Coding
from .errors import (
    BudgetExceeded,
    HorizonExceeded,
    PrefixTooShort,
    ToeplitzError,
)
from .language import language
from .presets import PRESET_NAMES, parse_coding_spec, preset
from .verdicts import Status
from .words import DEFAULT_BUDGET, word_prefix

CHECK_MISMATCH = 1
USAGE_ERROR = 2
RESOURCE_ERROR = 3


@dataclass(frozen=True)
class RunConfig:
    """One resolved invocation: exactly one coding source plus bounds."""

    command: str
    coding: Coding
    budget: int
    jobs: int

    def __post_init__(self):
        if self.budget <= 0:
            raise ValueError("--budget: must be positive")
        if self.jobs <= 0:
            raise ValueError("--jobs: must be positive")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--coding", help="coding spec, e.g. 'a:2 | x:2 y:2 z:2'")
    parser.add_argument("--preset", help="preset name, e.g. grigorchuk")
    parser.add_argument(
        "--periods", default="2",
        help="cyclic period pattern for generator tails (comma separated)",
    )
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="symbol budget for materialized words")
    parser.add_argument("--jobs", type=int, default=os.cpu_count() or 1,
                        help="worker threads for partitionable scans "
                             "(default: logical cores)")


def _resolve(args: argparse.Namespace) -> RunConfig:
    sources = [s for s in (args.coding, args.preset) if s]
    if len(sources) != 1:
        raise ValueError("--coding/--preset: exactly one coding source required")
    try:
        periods = tuple(int(x) for x in args.periods.split(","))
    except ValueError:
        raise ValueError(
            f"--periods: expected comma-separated integers, got {args.periods!r}"
        ) from None
    if not periods or any(p < 2 for p in periods):
        raise ValueError("--periods: every period must be >= 2")
    if args.coding:
        coding = parse_coding_spec(args.coding, periods)
    else:
        coding = preset(args.preset, periods)
    return RunConfig(args.command, coding, args.budget, args.jobs)


def _write(path: Optional[str], text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _emit_json(payload, path: Optional[str]) -> None:
    _write(path, json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _cmd_gen(cfg: RunConfig, args) -> int:
    prefix = word_prefix(cfg.coding, args.length, cfg.budget)
    _write(args.out, cfg.coding.alphabet.render(prefix) + "\n")
    return 0


def _cmd_language(cfg: RunConfig, args) -> int:
    lang = language(cfg.coding, args.length, cfg.budget, cfg.jobs)
    rendered = [cfg.coding.alphabet.render(w) for w in lang.words]
    if args.json:
        _emit_json({"L": args.length, "count": len(rendered), "words": rendered},
                   args.out)
    else:
        _write(args.out, "".join(f"{w}\n" for w in rendered))
    return 0


def _csv_cell(value) -> str:
    return "" if value is None else str(value)


def _cmd_complexity(cfg: RunConfig, args) -> int:
    rows = complexity.profile(cfg.coding, args.max_len, args.check,
                              cfg.budget, cfg.jobs)
    lines = ["L,formula,oracle,growth"]
    lines += [
        f"{r.length},{r.formula},{_csv_cell(r.oracle)},{r.growth}" for r in rows
    ]
    _write(args.csv, "\n".join(lines) + "\n")
    if args.check:
        bad = [r for r in rows if r.oracle != r.formula]
        for r in bad:
            print(f"mismatch at L={r.length}: formula {r.formula} != "
                  f"oracle {r.oracle}", file=sys.stderr)
        return CHECK_MISMATCH if bad else 0
    return 0


def _cmd_palindrome(cfg: RunConfig, args) -> int:
    rows = debruijn.palindrome_profile(cfg.coding, args.max_len, args.check,
                                       cfg.budget, cfg.jobs)
    lines = ["L,formula,oracle"]
    lines += [f"{r.length},{r.formula},{_csv_cell(r.oracle)}" for r in rows]
    _write(args.csv, "\n".join(lines) + "\n")
    if args.check:
        bad = [r for r in rows if r.oracle != r.formula]
        for r in bad:
            print(f"mismatch at L={r.length}: formula {r.formula} != "
                  f"oracle {r.oracle}", file=sys.stderr)
        return CHECK_MISMATCH if bad else 0
    return 0


def _graph_payload(graph: debruijn.DeBruijnGraph) -> dict:
    render = graph.alphabet.render
    ann = graph.annotations
    return {
        "L": graph.length,
        "vertices": [render(v) for v in graph.vertices],
        "edges": [[render(u), render(v), render(w)] for u, v, w in graph.edges],
        "annotations": {
            "level": ann.level,
            "u1": render(ann.u1),
            "v1": render(ann.v1),
            "u2": None if ann.u2 is None else render(ann.u2),
            "v2": None if ann.v2 is None else render(ann.v2),
            "right_special": [
                {"vertex": render(rs.vertex), "out_degree": rs.out_degree}
                for rs in debruijn.right_special_report(graph)
            ],
        },
    }


def _cmd_debruijn(cfg: RunConfig, args) -> int:
    graph = debruijn.build_graph(cfg.coding, args.length, cfg.budget, cfg.jobs)
    if args.dot:
        _write(args.dot, debruijn.to_dot(graph))
    if args.json_out:
        _emit_json(_graph_payload(graph), args.json_out)
    if not args.dot and not args.json_out:
        _emit_json(_graph_payload(graph), None)
    return 0


def _verdict_payload(status: Status, kind: str, witness, period, trend) -> dict:
    return {
        "verdict": status.value,
        "kind": kind,
        "witness": list(witness),
        "period": None if period is None else list(period),
        "trend": trend,
    }


def _cmd_repetitivity(cfg: RunConfig, args) -> int:
    if not args.max_len and args.alpha is None:
        raise ValueError("--max-len: required unless --alpha is given")
    if args.max_len:
        rows = repetitivity.report(cfg.coding, args.max_len, cfg.budget,
                                   cfg.jobs)
        lines = ["L,formula,oracle"]
        lines += [
            f"{r.length},{_csv_cell(r.formula)},{r.oracle}" for r in rows
        ]
        _write(args.csv, "\n".join(lines) + "\n")
    if args.alpha is not None:
        av = repetitivity.alpha_verdict(cfg.coding, Fraction(args.alpha),
                                        args.horizon)
        payload = _verdict_payload(av.status, av.kind, av.products,
                                   av.period, av.trend)
        payload["alpha"] = str(av.alpha)
        payload["kappa_gaps"] = list(av.kappa_gaps)
        payload["log_ratios"] = [repr(x) for x in av.log_ratios]
        _emit_json(payload, None)
    return 0


def _cmd_bosh(cfg: RunConfig, args) -> int:
    bv = boshernitzan.bosh_verdict(cfg.coding, args.horizon)
    payload = _verdict_payload(bv.verdict.status, bv.verdict.kind,
                               bv.verdict.witness, bv.verdict.period,
                               bv.verdict.trend)
    payload["liminf_criterion"] = (
        None if bv.liminf_criterion is None else bv.liminf_criterion.value
    )
    if args.eta is not None:
        if args.prefix is None:
            raise ValueError("--eta: requires --prefix M")
        eta = boshernitzan.estimate_eta(cfg.coding, args.eta, args.prefix,
                                        cfg.budget, cfg.jobs)
        payload["eta"] = {
            "L": eta.length,
            "min_frequency": str(eta.min_frequency),
            "prefix": eta.prefix_length,
            "rarest": cfg.coding.alphabet.render(eta.rarest or b""),
        }
    _emit_json(payload, args.out)
    return 0


def _parse_coeff(cfg: RunConfig, qspec: str, pspec: str) -> spectral.CoefficientMap:
    def parse_one(spec: str, flag: str, default: float) -> list[float]:
        values = [default] * len(cfg.coding.alphabet)
        for item in spec.split(","):
            item = item.strip()
            if not item:
                continue
            if "=" not in item:
                raise ValueError(f"{flag}: bad assignment {item!r}")
            name, raw = item.split("=", 1)
            value = float(raw)
            if name == "const":
                values = [value] * len(cfg.coding.alphabet)
            else:
                values[cfg.coding.alphabet.by_name(name).id] = value
        return values

    q = parse_one(qspec, "--q", 0.0)
    p = parse_one(pspec, "--p", 1.0)
    return spectral.CoefficientMap(cfg.coding.alphabet, tuple(p), tuple(q))


def _cmd_spectrum(cfg: RunConfig, args) -> int:
    coeff = _parse_coeff(cfg, args.q, args.p)
    if args.energies:
        try:
            lo, hi, steps = args.energies.split(":")
            grid = spectral.energy_grid(float(lo), float(hi), int(steps))
        except ValueError:
            raise ValueError(
                f"--energies: expected lo:hi:steps, got {args.energies!r}"
            ) from None
        n = args.lyapunov or 4096
        estimates = spectral.lyapunov_over_grid(cfg.coding, coeff, grid, n,
                                                cfg.budget, cfg.jobs)
        lines = ["E,lyapunov"]
        lines += [f"{repr(e.energy)},{repr(e.value)}" for e in estimates]
        _write(args.csv, "\n".join(lines) + "\n")
        return 0
    approx = spectral.finite_section_spectrum(cfg.coding, coeff, args.size,
                                              cfg.budget)
    lines = ["j,eigenvalue"]
    lines += [f"{j},{repr(ev)}" for j, ev in enumerate(approx.eigenvalues)]
    _write(args.csv, "\n".join(lines) + "\n")
    return 0


def _cmd_presets(_cfg, _args) -> int:
    for name in PRESET_NAMES:
        print(name)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toeplitz",
        description="simple Toeplitz subshifts: words, complexity, graphs, "
                    "repetitivity, Boshernitzan checks and Jacobi spectra",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit a prefix of the limit word")
    _add_common(p)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--out", default=None)

    p = sub.add_parser("language", help="list all factors of one length")
    _add_common(p)
    p.add_argument("-L", "--length", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", default=None)

    p = sub.add_parser("complexity", help="complexity table, optionally checked")
    _add_common(p)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--check", action="store_true",
                   help="compute the oracle and fail on mismatch")
    p.add_argument("--csv", default=None)

    p = sub.add_parser("palindrome", help="palindrome complexity table")
    _add_common(p)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--check", action="store_true")
    p.add_argument("--csv", default=None)

    p = sub.add_parser("debruijn", help="de Bruijn graph at one length")
    _add_common(p)
    p.add_argument("-L", "--length", type=int, required=True)
    p.add_argument("--dot", default=None)
    p.add_argument("--json", dest="json_out", default=None,
                   help="write the graph as JSON to this path")

    p = sub.add_parser("repetitivity", help="repetitivity table and verdicts")
    _add_common(p)
    p.add_argument("--max-len", type=int, default=0)
    p.add_argument("--alpha", default=None,
                   help="also emit the alpha-repetitivity verdict")
    p.add_argument("--horizon", type=int, default=12)
    p.add_argument("--csv", default=None)

    p = sub.add_parser("bosh", help="Boshernitzan condition verdict")
    _add_common(p)
    p.add_argument("--horizon", type=int, default=12)
    p.add_argument("--eta", type=int, default=None,
                   help="also estimate eta at this word length")
    p.add_argument("--prefix", type=int, default=None,
                   help="prefix length for the eta estimate")
    p.add_argument("--json", action="store_true",
                   help="accepted for symmetry; output is always JSON")
    p.add_argument("--out", default=None)

    p = sub.add_parser("spectrum", help="finite sections and Lyapunov scans")
    _add_common(p)
    p.add_argument("--q", default="const=0", help="diagonal map, e.g. a=0,x=1")
    p.add_argument("--p", default="const=1", help="off-diagonal map")
    p.add_argument("--size", type=int, default=256)
    p.add_argument("--energies", default=None, help="lo:hi:steps grid")
    p.add_argument("--lyapunov", type=int, default=None,
                   help="cocycle steps per energy")
    p.add_argument("--csv", default=None)

    p = sub.add_parser("presets", help="list the preset registry")
    p.set_defaults(no_coding=True)

    return parser


_HANDLERS = {
    "gen": _cmd_gen,
    "language": _cmd_language,
    "complexity": _cmd_complexity,
    "palindrome": _cmd_palindrome,
    "debruijn": _cmd_debruijn,
    "repetitivity": _cmd_repetitivity,
    "bosh": _cmd_bosh,
    "spectrum": _cmd_spectrum,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "presets":
        return _cmd_presets(None, args)
    try:
        cfg = _resolve(args)
        return _HANDLERS[args.command](cfg, args)
    except (BudgetExceeded, HorizonExceeded, PrefixTooShort) as exc:
        print(f"toeplitz {args.command}: {exc}", file=sys.stderr)
        return RESOURCE_ERROR
    except (ToeplitzError, ValueError, KeyError, IndexError) as exc:
        print(f"toeplitz {args.command}: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
