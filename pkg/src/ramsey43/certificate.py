"""Portable text certificates: a coloring recipe plus claimed clique counts.

A certificate never carries clique lists; verification recomputes every claim
from the recipe alone, so checking one is as honest as rebuilding it.  The
format is line-oriented ASCII with LF endings and a fixed section order:

    RAMSEY-CERT v1
    order: <n>
    blue-lengths: <comma-separated ascending>
    flip: <a> <b>          (zero or more, a < b, application order)
    delete: <v>            (zero or more)
    claim: mono-k<k> <red|blue> <count>   (zero or more)

Parsing is strict: unknown or misordered lines are errors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import BLUE, RED, ColoringSpec, EdgeColor, SpecError, build
from .cliques import count_mono
from .oracle import oracle_count

HEADER = "RAMSEY-CERT v1"


class CertificateError(ValueError):
    """Malformed or inconsistent certificate text."""


@dataclass(frozen=True)
class Certificate:
    spec: ColoringSpec
    claims: tuple[tuple[EdgeColor, int, int], ...]  # (color, k, count)
    version: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "claims", tuple(tuple(c) for c in self.claims))


def encode_certificate(cert: Certificate) -> str:
    spec = cert.spec
    lines = [HEADER, f"order: {spec.order}"]
    lengths = ",".join(str(x) for x in sorted(spec.blue_lengths))
    lines.append(f"blue-lengths: {lengths}" if lengths else "blue-lengths:")
    for a, b in spec.flips:
        lines.append(f"flip: {a} {b}")
    for v in sorted(spec.deletions):
        lines.append(f"delete: {v}")
    for color, k, count in cert.claims:
        lines.append(f"claim: mono-k{k} {color.value} {count}")
    return "\n".join(lines) + "\n"


def _int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise CertificateError(f"line {lineno}: {what} is not an integer: {token!r}") from None


def decode_certificate(text: str) -> Certificate:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise CertificateError("line 1: empty certificate")
    if lines[0] != HEADER:
        if lines[0].startswith("RAMSEY-CERT"):
            raise CertificateError(f"line 1: unsupported version {lines[0]!r}")
        raise CertificateError(f"line 1: expected {HEADER!r}")
    if len(lines) < 3:
        raise CertificateError(f"line {len(lines)}: certificate truncated")

    if not lines[1].startswith("order: "):
        raise CertificateError("line 2: expected 'order: <n>'")
    n = _int(lines[1][len("order: "):], 2, "order")
    if not 2 <= n <= 64:
        raise CertificateError(f"line 2: order must be in [2, 64], got {n}")

    if lines[2] == "blue-lengths:":
        lengths: list[int] = []
    elif lines[2].startswith("blue-lengths: "):
        body = lines[2][len("blue-lengths: "):]
        lengths = [_int(tok, 3, "blue length") for tok in body.split(",")]
    else:
        raise CertificateError("line 3: expected 'blue-lengths: <list>'")
    for length in lengths:
        if length < 1:
            raise CertificateError(f"line 3: length must be positive, got {length}")
        if length > n // 2:
            raise CertificateError(f"line 3: length exceeds floor(n/2): {length} > {n // 2}")
    if lengths != sorted(set(lengths)):
        raise CertificateError("line 3: blue lengths must be strictly ascending")

    flips: list[tuple[int, int]] = []
    deletions: list[int] = []
    claims: list[tuple[EdgeColor, int, int]] = []
    stage = "flip"  # flip -> delete -> claim
    for lineno, line in enumerate(lines[3:], start=4):
        if line.startswith("flip: "):
            if stage != "flip":
                raise CertificateError(f"line {lineno}: flip after {stage} lines")
            tokens = line[len("flip: "):].split(" ")
            if len(tokens) != 2:
                raise CertificateError(f"line {lineno}: expected 'flip: <a> <b>'")
            a = _int(tokens[0], lineno, "flip vertex")
            b = _int(tokens[1], lineno, "flip vertex")
            if a == b:
                raise CertificateError(f"line {lineno}: degenerate edge ({a}, {b})")
            if a > b:
                raise CertificateError(f"line {lineno}: flip endpoints must be ascending")
            if not (0 <= a < n and 0 <= b < n):
                raise CertificateError(f"line {lineno}: flip vertex out of range for order {n}")
            if (a, b) in flips:
                raise CertificateError(f"line {lineno}: duplicate flip ({a}, {b})")
            flips.append((a, b))
        elif line.startswith("delete: "):
            if stage == "claim":
                raise CertificateError(f"line {lineno}: delete after claim lines")
            stage = "delete"
            v = _int(line[len("delete: "):], lineno, "deleted vertex")
            if not 0 <= v < n:
                raise CertificateError(f"line {lineno}: deleted vertex out of range for order {n}")
            if v in deletions:
                raise CertificateError(f"line {lineno}: duplicate delete {v}")
            deletions.append(v)
        elif line.startswith("claim: "):
            stage = "claim"
            tokens = line[len("claim: "):].split(" ")
            if len(tokens) != 3 or not tokens[0].startswith("mono-k"):
                raise CertificateError(
                    f"line {lineno}: expected 'claim: mono-k<k> <red|blue> <count>'")
            k = _int(tokens[0][len("mono-k"):], lineno, "claim k")
            if tokens[1] == "red":
                color = RED
            elif tokens[1] == "blue":
                color = BLUE
            else:
                raise CertificateError(f"line {lineno}: unknown color {tokens[1]!r}")
            count = _int(tokens[2], lineno, "claim count")
            if k < 2 or count < 0:
                raise CertificateError(f"line {lineno}: claim out of range")
            claims.append((color, k, count))
        else:
            raise CertificateError(f"line {lineno}: unknown line {line!r}")

    try:
        spec = ColoringSpec(n, frozenset(lengths), tuple(flips), frozenset(deletions))
    except SpecError as exc:  # everything above should have caught this already
        raise CertificateError(str(exc)) from exc
    return Certificate(spec, tuple(claims))


def certify(spec: ColoringSpec, ks: tuple[int, ...] = (5,)) -> Certificate:
    """Certificate for the recipe with freshly computed claims."""
    c = build(spec)
    claims = []
    for k in ks:
        claims.append((RED, k, count_mono(c, RED, k)))
        claims.append((BLUE, k, count_mono(c, BLUE, k)))
    return Certificate(spec, tuple(claims))


@dataclass(frozen=True)
class ClaimCheck:
    color: EdgeColor
    k: int
    expected: int
    computed: int

    @property
    def ok(self) -> bool:
        return self.expected == self.computed


def check_claims(cert: Certificate, use_oracle: bool = False) -> list[ClaimCheck]:
    """Recompute every claim from the recipe (engine or brute-force route)."""
    results = []
    coloring = None if use_oracle else build(cert.spec)
    for color, k, expected in cert.claims:
        if use_oracle:
            computed = oracle_count(cert.spec, color, k)
        else:
            computed = count_mono(coloring, color, k)
        results.append(ClaimCheck(color, k, expected, computed))
    return results
