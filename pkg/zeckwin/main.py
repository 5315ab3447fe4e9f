"""
Command-line entry point.

Every subcommand builds a Report; ``--format`` picks json, text, csv or dot.
Exit codes: 0 success, 1 usage errors, invalid input or an unusable window map,
2 when a published claim does not match the computation.
"""
import argparse
import logging
import sys
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Dict, List, Optional

from pydantic import ValidationError

from zeckwin.automata import avoids, build_avoidance_dfa, parse_family
from zeckwin.config import configure_logging, settings
from zeckwin.data import load_or_synthesize_theta
from zeckwin.errors import DomainError, ZeckwinError
from zeckwin.numeration import (
    digit_value,
    lsd_prefix,
    normalize,
    parse_digit_string,
    validate_window,
    validate_zeck_word,
    zeck_decode,
    zeck_encode,
)
from zeckwin.orbit import OrbitConfig, OrbitSummary, exponent_set, theta_orbit
from zeckwin.reporting import (
    Report,
    RunConfig,
    dfa_to_dot,
    export_dot,
    orbit_csv,
    orbit_to_dot,
    render,
    theta_to_dot,
    verify_paper,
)
from zeckwin.transducer import (
    MultiplierSpec,
    StreamFailure,
    ThetaMap,
    locality_probe,
    mul_addition_chain,
    mul_oracle,
    stream_multiply,
    theta_synthesize,
)

logger = logging.getLogger(__name__)


@dataclass
class CommandOutput:
    report: Report
    dot: Optional[str] = None
    csv: Optional[str] = None


def _int_argument(cfg: RunConfig, name: str) -> int:
    try:
        return int(cfg.argument)
    except (TypeError, ValueError):
        raise DomainError(f"{name} must be an integer, got {cfg.argument!r}")


def _theta(cfg: RunConfig) -> ThetaMap:
    if cfg.use_cache:
        return load_or_synthesize_theta(cfg.q, cfg.M, cfg.n_cap)
    return theta_synthesize(cfg.q, cfg.M, cfg.n_cap)


def _orbit_config(cfg: RunConfig) -> OrbitConfig:
    return OrbitConfig.create(cfg.u, cfg.q, cfg.M, cfg.family, cfg.n_max, cfg.override_ml_check)


def cmd_encode(cfg: RunConfig) -> CommandOutput:
    n = _int_argument(cfg, "N")
    word = zeck_encode(n)
    return CommandOutput(Report(command=cfg.command, inputs={"N": n}, results={"zeck": word}, text=word))


def cmd_decode(cfg: RunConfig) -> CommandOutput:
    word = validate_zeck_word(cfg.argument or "")
    value = zeck_decode(word)
    return CommandOutput(
        Report(command=cfg.command, inputs={"word": word}, results={"value": value}, text=str(value))
    )


def cmd_normalize(cfg: RunConfig) -> CommandOutput:
    digits = parse_digit_string(cfg.argument or "")
    word = normalize(digits)
    return CommandOutput(
        Report(
            command=cfg.command,
            inputs={"digits": digits},
            results={"value": digit_value(digits), "zeck": word},
            text=word,
        )
    )


def cmd_mul(cfg: RunConfig) -> CommandOutput:
    n = _int_argument(cfg, "N")
    inputs = {"N": n, "q": cfg.q, "method": cfg.method}
    if cfg.method == "oracle":
        word = mul_oracle(n, cfg.q)
    elif cfg.method == "chain":
        word = mul_addition_chain(n, cfg.q)
    else:
        spec = MultiplierSpec.for_q(cfg.q, cfg.carry_bound)
        inputs["spec"] = spec.model_dump()
        result = stream_multiply(n, spec)
        if isinstance(result, StreamFailure):
            logger.warning("%s", result)
            return CommandOutput(
                Report(
                    command=cfg.command,
                    inputs=inputs,
                    results={"failure": result.model_dump(mode="json")},
                    text=str(result),
                )
            )
        word = result
    return CommandOutput(Report(command=cfg.command, inputs=inputs, results={"zeck": word}, text=word))


def cmd_window(cfg: RunConfig) -> CommandOutput:
    n = _int_argument(cfg, "N")
    window = lsd_prefix(n, cfg.M)
    return CommandOutput(
        Report(command=cfg.command, inputs={"N": n, "M": cfg.M}, results={"window": window}, text=window)
    )


def cmd_avoid(cfg: RunConfig) -> CommandOutput:
    word = validate_window(cfg.argument or "")
    family = parse_family(cfg.family)
    accepted = avoids(word, family)
    return CommandOutput(
        Report(
            command=cfg.command,
            inputs={"word": word, "family": str(family)},
            results={"avoids": accepted},
            text="yes" if accepted else "no",
        ),
        dot=dfa_to_dot(build_avoidance_dfa(family)),
    )


def _theta_text(theta: ThetaMap) -> str:
    coverage = theta.coverage()
    lines = [
        f"q={theta.q} M={theta.window_len} N<={theta.n_cap}: "
        f"{coverage['seen']}/{coverage['reachable']} windows seen, {len(theta.conflicts)} conflicts"
    ]
    lines += [f"  {v} -> {w}" for v, w in theta.entries.items()]
    lines += [
        f"  conflict {c.window}: N={c.n1} -> {c.out1}, N={c.n2} -> {c.out2}" for c in theta.conflicts
    ]
    return "\n".join(lines)


def cmd_synthesize_theta(cfg: RunConfig) -> CommandOutput:
    theta = _theta(cfg)
    return CommandOutput(
        Report(
            command=cfg.command,
            inputs={"q": cfg.q, "M": cfg.M, "n_cap": cfg.n_cap},
            results=theta.to_json(),
            text=_theta_text(theta),
        ),
        dot=theta_to_dot(theta, parse_family(cfg.family)),
    )


def cmd_check_locality(cfg: RunConfig) -> CommandOutput:
    d = locality_probe(cfg.q, cfg.M, cfg.n_cap, cfg.d_max)
    return CommandOutput(
        Report(
            command=cfg.command,
            inputs={"q": cfg.q, "M": cfg.M, "n_cap": cfg.n_cap, "d_max": cfg.d_max},
            results={"found": d is not None, "D": d},
            text="NotFound" if d is None else str(d),
        )
    )


def _summary(cfg: RunConfig) -> OrbitSummary:
    orbit_cfg = _orbit_config(cfg)
    if cfg.mode == "theta":
        return theta_orbit(orbit_cfg, _theta(cfg))
    return exponent_set(orbit_cfg, confirm=cfg.confirm)


def cmd_orbit(cfg: RunConfig) -> CommandOutput:
    summary = _summary(cfg)
    period = "none found" if summary.p is None else f"n0={summary.n0} p={summary.p}"
    text = "\n".join(
        [
            f"S = {{{', '.join(map(str, summary.exponent_set))}}}",
            f"period: {period} (verified to {summary.verified_horizon})",
            f"finiteness: {summary.finiteness_verdict}",
        ]
    )
    return CommandOutput(
        Report(command=cfg.command, inputs=cfg.inputs(), results=summary.export(), text=text),
        dot=orbit_to_dot(summary),
        csv=orbit_csv(summary),
    )


def cmd_export_dot(cfg: RunConfig) -> CommandOutput:
    kind = cfg.argument
    family = parse_family(cfg.family)
    builders = {
        "dfa": lambda: build_avoidance_dfa(family),
        "theta": lambda: _theta(cfg),
        "orbit": lambda: _summary(cfg),
    }
    if kind not in builders:
        raise DomainError(f"unknown DOT export kind {kind!r}; expected theta, orbit or dfa")
    dot = export_dot(kind, builders[kind](), family)
    return CommandOutput(Report(command=cfg.command, inputs={"kind": kind}, text=dot), dot=dot)


def cmd_verify_paper(cfg: RunConfig) -> CommandOutput:
    return CommandOutput(verify_paper(cfg.argument or "example-3"))


COMMANDS: Dict[str, Callable[[RunConfig], CommandOutput]] = {
    "encode": cmd_encode,
    "decode": cmd_decode,
    "normalize": cmd_normalize,
    "mul": cmd_mul,
    "window": cmd_window,
    "avoid": cmd_avoid,
    "synthesize-theta": cmd_synthesize_theta,
    "check-locality": cmd_check_locality,
    "orbit": cmd_orbit,
    "export-dot": cmd_export_dot,
    "verify-paper": cmd_verify_paper,
}

POSITIONALS = {
    "encode": ("N", "positive integer to encode"),
    "decode": ("word", "Zeckendorf word, MSD first"),
    "normalize": ("digits", "comma-separated LSD-first digits, e.g. 1,1,1,1"),
    "mul": ("N", "positive integer to multiply by --q"),
    "window": ("N", "positive integer whose window is taken"),
    "avoid": ("word", "word over {0,1,#}"),
    "export-dot": ("kind", "theta, orbit or dfa"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--u", type=int, default=1, help="orbit seed u (default 1)")
    common.add_argument("--q", type=int, default=2, help="multiplier q >= 2 (default 2)")
    common.add_argument("--M", type=int, default=5, help="window length (default 5)")
    common.add_argument("--family", default="101", help="forbidden patterns, comma-separated (default 101)")
    common.add_argument("--n-max", type=int, default=settings.DEFAULT_N_MAX, help="orbit horizon")
    common.add_argument("--n-cap", type=int, default=settings.DEFAULT_N_CAP, help="window map sample bound")
    common.add_argument("--d-max", type=int, default=settings.DEFAULT_D_MAX, help="locality probe bound")
    common.add_argument("--format", dest="output_format", choices=["json", "csv", "dot", "text"], default="text")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--override-ml-check", action="store_true", help="allow M shorter than the longest pattern")
    common.add_argument("--log-level", default=None, help="DEBUG, INFO, WARNING or ERROR")

    parser = argparse.ArgumentParser(
        prog="zeckwin",
        description="Zeckendorf windows of u*q^n and their forbidden-pattern exponent sets",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name in POSITIONALS:
            arg, help_text = POSITIONALS[name]
            p.add_argument("argument", metavar=arg, help=help_text)
        if name == "mul":
            p.add_argument("--method", choices=["oracle", "stream", "chain"], default="oracle")
            p.add_argument("--carry-bound", type=int, default=None, help="stream digit bound (default q + C(q))")
        if name in ("orbit", "export-dot"):
            p.add_argument("--mode", choices=["oracle", "theta"], default="oracle")
            p.add_argument("--no-confirm", dest="confirm", action="store_false", help="skip the 2*n_max re-check")
        if name in ("synthesize-theta", "orbit", "export-dot"):
            p.add_argument("--no-cache", dest="use_cache", action="store_false", help="always rescan")
        if name == "verify-paper":
            p.add_argument("argument", metavar="example", nargs="?", default="example-3")
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (None, 0) else 1
    configure_logging(args.log_level)

    fields = {k: v for k, v in vars(args).items() if k != "log_level"}
    try:
        cfg = RunConfig(**fields).validate_numbers()
        started = time.perf_counter()
        output = COMMANDS[cfg.command](cfg)
        output.report.runtime_ms = (time.perf_counter() - started) * 1000
        output_format = "dot" if cfg.command == "export-dot" else cfg.output_format
        text = render(output.report, output_format, dot_source=output.dot, csv_source=output.csv)
    except (ZeckwinError, ValidationError) as e:
        logger.error("%s", e)
        return 1

    logger.debug("%s finished in %.1f ms", cfg.command, output.report.runtime_ms)
    if cfg.out:
        try:
            Path(cfg.out).write_text(text)
        except OSError as e:
            logger.error("Cannot write %s: %s", cfg.out, e)
            return 1
        logger.info("Wrote %s output to %s", output_format, cfg.out)
    else:
        sys.stdout.write(text)

    if output.report.mismatches:
        logger.warning("%d published claims do not match", len(output.report.mismatches))
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
