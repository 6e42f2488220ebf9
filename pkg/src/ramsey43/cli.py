"""Command-line surface.

Exit codes: 0 success, 1 failed claim or failed check, 2 usage/parse errors.
Stdout stays line-oriented and machine-parseable.
"""

from __future__ import annotations

import argparse
import sys

from .certificate import (
    CertificateError,
    certify,
    check_claims,
    decode_certificate,
    encode_certificate,
)
from .checks import render_diagram, run_suite
from .cliques import count_mono, enumerate_mono
from .coloring import BLUE, RED, PRESETS, SpecError, build, preset
from .search import Policy, local_search


def _parse_color(name: str):
    key = name.strip().lower()
    if key == "red":
        return RED
    if key == "blue":
        return BLUE
    raise ValueError(f"unknown color {name!r}")


def _parse_vertices(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok != ""]


def _load_certificate(path: str):
    with open(path, "r", encoding="ascii") as fh:
        return decode_certificate(fh.read())


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramsey43",
        description="Build, verify, and search two-colorings of complete graphs "
                    "with certified monochromatic 5-clique counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="emit a certificate for a named construction")
    p.add_argument("preset", choices=sorted(PRESETS))
    p.add_argument("--out", metavar="FILE")

    p = sub.add_parser("verify", help="recompute all claims of a certificate")
    p.add_argument("file")
    p.add_argument("--oracle", action="store_true",
                   help="use the naive subset scanner instead of the mask engine")

    p = sub.add_parser("count", help="count monochromatic k-cliques")
    p.add_argument("file")
    p.add_argument("--color", type=_parse_color, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("enumerate", help="list monochromatic k-cliques, one per line")
    p.add_argument("file")
    p.add_argument("--color", type=_parse_color, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("lemmas", help="run the replayable check suite for a certificate")
    p.add_argument("file")

    p = sub.add_parser("diagram", help="render a color-neighborhood chart")
    p.add_argument("file")
    p.add_argument("--color", type=_parse_color, required=True)
    p.add_argument("--vertices", type=_parse_vertices, required=True,
                   metavar="A,B,...")

    p = sub.add_parser("search", help="flip local search minimizing monochromatic 5-cliques")
    p.add_argument("--start", required=True,
                   help="preset name or certificate file")
    p.add_argument("--budget", type=int, required=True,
                   help="maximum number of flip evaluations")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--policy", type=Policy.parse, default=Policy.GREEDY,
                   help="greedy | tabu | restart")
    p.add_argument("--red-to-blue-only", action="store_true",
                   help="only consider flipping red edges blue")
    p.add_argument("--log", metavar="FILE",
                   help="write improving-move records here instead of stdout")
    p.add_argument("--out", metavar="FILE",
                   help="write the best coloring found as a certificate")
    return parser


def _cmd_build(args) -> int:
    text = encode_certificate(certify(preset(args.preset)))
    if args.out:
        with open(args.out, "w", encoding="ascii", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_verify(args) -> int:
    cert = _load_certificate(args.file)
    results = check_claims(cert, use_oracle=args.oracle)
    for r in results:
        status = "ok" if r.ok else "FAIL"
        print(f"mono-k{r.k} {r.color} expected={r.expected} "
              f"computed={r.computed} {status}")
    good = sum(r.ok for r in results)
    print(f"verified: {good}/{len(results)} claims hold")
    return 0 if good == len(results) else 1


def _cmd_count(args) -> int:
    cert = _load_certificate(args.file)
    print(count_mono(build(cert.spec), args.color, args.k))
    return 0


def _cmd_enumerate(args) -> int:
    cert = _load_certificate(args.file)
    for clique in enumerate_mono(build(cert.spec), args.color, args.k):
        print(" ".join(str(v) for v in clique.vertices))
    return 0


def _cmd_lemmas(args) -> int:
    cert = _load_certificate(args.file)
    results = run_suite(cert.spec)
    for r in results:
        print(r.summary())
        for note in r.notes:
            print(f"note: {note}")
    return 0 if all(r.passed for r in results) else 1


def _cmd_diagram(args) -> int:
    cert = _load_certificate(args.file)
    sys.stdout.write(render_diagram(build(cert.spec), args.color, args.vertices))
    return 0


def _cmd_search(args) -> int:
    try:
        spec = preset(args.start)
    except ValueError:
        spec = _load_certificate(args.start).spec
    state = local_search(
        spec,
        args.budget,
        args.seed,
        args.policy,
        red_to_blue_only=args.red_to_blue_only,
    )
    log = state.log()
    if args.log:
        with open(args.log, "w", encoding="ascii", newline="") as fh:
            fh.write(log)
    else:
        sys.stdout.write(log)
    best = state.best
    red = count_mono(best.coloring, RED, 5)
    blue = count_mono(best.coloring, BLUE, 5)
    print(f"best: objective={best.objective} red={red} blue={blue} "
          f"moves={len(state.trace)} evaluations={state.evaluations}")
    if args.out:
        with open(args.out, "w", encoding="ascii", newline="") as fh:
            fh.write(encode_certificate(certify(best.coloring.spec)))
    return 0


_COMMANDS = {
    "build": _cmd_build,
    "verify": _cmd_verify,
    "count": _cmd_count,
    "enumerate": _cmd_enumerate,
    "lemmas": _cmd_lemmas,
    "diagram": _cmd_diagram,
    "search": _cmd_search,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (CertificateError, SpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


cli_main = main

if __name__ == "__main__":
    raise SystemExit(main())
