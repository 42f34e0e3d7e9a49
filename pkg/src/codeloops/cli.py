"""Command-line entry point.

    codeloops verify <matrix-file> [-o report]
    codeloops fuzz --dim K --len N --count C --seed S [-o dump]
    codeloops export <matrix-file> --what table|phi -o <file>

Exit status: 0 success, 1 a predicted verdict or equivalence failed,
2 invalid mathematical input, 3 usage or I/O error.
"""

from __future__ import annotations

import argparse
import logging
import random
import sys
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .factor_set import (DERIVED_CONGRUENCES, ERRATA as FACTOR_ERRATA, FactorSet,
                         axiom_violations, derived_congruence_check, format_factor_set,
                         random_normalized_phi, solve_factor_set)
from .gf2_code import (CodeError, DimensionTooLarge, GenerationFailed, LinearCode, ParseError,
                       is_doubly_even, parse_generator_matrix, random_doubly_even_code, span)
from .identity_catalog import (ERRATA, MAX_CLASSIFY_DIMENSION, classify, congruence_1_29,
                               iff_suite)
from .loop_core import build_loop, format_cayley_table

log = logging.getLogger("codeloops")

EXIT_OK, EXIT_INCONSISTENT, EXIT_BAD_INPUT, EXIT_USAGE = 0, 1, 2, 3
MAX_FUZZ_DIMENSION = 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    input: Path | None = None
    output: Path | None = None
    seed: int = 0
    count: int = 200
    dim: int = 2
    length: int | None = None
    what: str = "phi"
    verbosity: int = 0


class BadInput(Exception):
    """Mathematically invalid input (exit status 2)."""


def load_code(path: Path) -> LinearCode:
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise UsageError(f"{path}: file not found") from None
    except OSError as e:
        raise UsageError(f"{path}: {e.strerror}") from None
    try:
        return span(parse_generator_matrix(text))
    except ParseError as e:
        raise UsageError(f"{path}: {e}") from None


def _write(path: Path | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
        return
    try:
        path.write_text(text, encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot write {path}: {e.strerror}") from None


def verify_report(code: LinearCode, source: str = "") -> tuple[int, str]:
    """Run the whole pipeline on a code; return (exit status, report text)."""
    n, k = code.length, code.dimension
    lines = [f"# codeloops verify {source}".rstrip(), f"CODE n={n} k={k} words={len(code)}"]
    verdict = is_doubly_even(code)
    if not verdict:
        lines.append(f"DOUBLY_EVEN FAILS witness={verdict.describe()}")
        lines.append("VERDICT INVALID")
        return EXIT_BAD_INPUT, "\n".join(lines) + "\n"
    lines.append(f"DOUBLY_EVEN HOLDS scanned={len(code) + len(code) ** 2}")
    if k > MAX_CLASSIFY_DIMENSION:
        raise DimensionTooLarge(f"verify supports k <= {MAX_CLASSIFY_DIMENSION}, got {k}")

    phi = solve_factor_set(code)
    violations = axiom_violations(phi)
    scanned = violations.scanned
    lines.append(
        f"FACTOR_SET {'FAILS' if violations.total else 'HOLDS'} "
        f"scanned={scanned['SQUARE']}+{scanned['SYMMETRY']}+{scanned['COCYCLE']}")

    cl = classify(phi)
    lines.append(cl.header())
    lines += cl.check_lines()
    congruences = [congruence_1_29(phi, i) for i in range(1, 7)]
    derived = [derived_congruence_check(phi, name) for name in DERIVED_CONGRUENCES]
    lines += [r.line() for r in congruences + derived]
    lines += cl.matrix_lines()

    errata = [r for r in derived if not r.holds and r.name in FACTOR_ERRATA]
    errata += [cl[name] for name in ERRATA if not cl[name].holds]
    for rep in errata:
        lines.append(f"ERRATUM {rep.name} {rep.note}")

    gating = [r for r in congruences + derived if r.name not in FACTOR_ERRATA]
    ok = (not violations.total and cl.consistent and not cl.failed_predictions
          and all(r.holds for r in gating))
    for name in cl.failed_predictions:
        lines.append(f"UNEXPECTED {name} FAILS")
    lines.append(f"VERDICT {'CONSISTENT' if ok else 'INCONSISTENT'}")
    return (EXIT_OK if ok else EXIT_INCONSISTENT), "\n".join(lines) + "\n"


def cmd_verify(cfg: RunConfig) -> int:
    code = load_code(cfg.input)
    status, report = verify_report(code, str(cfg.input))
    _write(cfg.output, report)
    if cfg.output is not None and cfg.verbosity:
        sys.stdout.write(report)
    return status


def _dump_mismatch(code: LinearCode, phi: FactorSet, rows) -> str:
    lines = ["# mismatch", f"code n={code.length} k={code.dimension}"]
    lines += [str(w) for w in code.basis_words()]
    lines.append(format_factor_set(phi).rstrip("\n"))
    lines += [e.line() for e in rows]
    return "\n".join(lines) + "\n"


def fuzz(k: int, n: int, count: int, seed: int) -> tuple[int, int, list[str]]:
    """Returns (agreements, mismatches, dumps)."""
    rng = random.Random(seed)
    agree = mismatched = 0
    dumps: list[str] = []
    for _ in range(count):
        code = random_doubly_even_code(n, k, rng.getrandbits(64))
        phi = random_normalized_phi(code, rng.getrandbits(64))
        rows = iff_suite(phi)
        bad = [e for e in rows if not e.agree]
        agree += len(rows) - len(bad)
        mismatched += len(bad)
        if bad:
            dumps.append(_dump_mismatch(code, phi, rows))
    return agree, mismatched, dumps


def cmd_fuzz(cfg: RunConfig) -> int:
    k = cfg.dim
    n = cfg.length if cfg.length is not None else 4 * k + 4
    if not 0 <= k <= MAX_FUZZ_DIMENSION:
        raise UsageError(f"--dim must be in 0..{MAX_FUZZ_DIMENSION}")
    if cfg.count < 0:
        raise UsageError("--count must be nonnegative")
    agree, mismatched, dumps = fuzz(k, n, cfg.count, cfg.seed)
    summary = (f"fuzz k={k} n={n} count={cfg.count} seed={cfg.seed}: "
               f"{agree} agreements, {mismatched} mismatches\n")
    sys.stdout.write(summary)
    if dumps:
        text = summary + "".join(dumps)
        if cfg.output is not None:
            _write(cfg.output, text)
        else:
            sys.stderr.write(text)
    return EXIT_OK if not mismatched else EXIT_INCONSISTENT


def cmd_export(cfg: RunConfig) -> int:
    code = load_code(cfg.input)
    verdict = is_doubly_even(code)
    if not verdict:
        raise BadInput(f"code is not doubly even: {verdict.describe()}")
    phi = solve_factor_set(code)
    if cfg.what == "phi":
        text = format_factor_set(phi)
    else:
        text = format_cayley_table(build_loop(phi))
    if cfg.output is None:
        raise UsageError("export needs -o <file>")
    _write(cfg.output, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="codeloops", description=__doc__.split("\n\n")[0])
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("-v", "--verbose", action="count", default=0)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run every check on the code spanned by a matrix")
    v.add_argument("input", type=Path)
    v.add_argument("-o", "--output", type=Path)

    f = sub.add_parser("fuzz", help="cross-check loop and factor-set verdicts on random phi")
    f.add_argument("--dim", type=int, default=2)
    f.add_argument("--len", dest="length", type=int)
    f.add_argument("--count", type=int, default=200)
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("-o", "--output", type=Path)

    e = sub.add_parser("export", help="write the solved factor set or the Cayley table")
    e.add_argument("input", type=Path)
    e.add_argument("--what", choices=("table", "phi"), required=True)
    e.add_argument("-o", "--output", type=Path, required=True)
    return p


COMMANDS = {"verify": cmd_verify, "fuzz": cmd_fuzz, "export": cmd_export}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    cfg = RunConfig(command=args.command, verbosity=args.verbose,
                    **{k: v for k, v in vars(args).items()
                       if k in ("input", "output", "seed", "count", "dim", "length", "what")})
    logging.basicConfig(level=logging.DEBUG if cfg.verbosity > 1 else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return COMMANDS[cfg.command](cfg)
    except UsageError as e:
        log.error("%s", e)
        return EXIT_USAGE
    except (BadInput, GenerationFailed) as e:
        log.error("%s", e)
        return EXIT_BAD_INPUT
    except DimensionTooLarge as e:
        log.error("%s", e)
        return EXIT_USAGE
    except CodeError as e:
        log.error("%s", e)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
