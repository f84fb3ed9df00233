"""Command-line front end.

Exit codes: 0 certificate independent (or query answered), 1 criterion
failed (certificate still written), 2 invalid input.
"""

from __future__ import annotations

import argparse
import dataclasses
import json
import logging
import os
import sys
from dataclasses import dataclass
from datetime import datetime, timezone
from pathlib import Path

from . import __version__
from .covers import CONVENTIONS, MERIDIAN_FIRST, decompose_cover, h1_order
from .criterion import certify_independence, invalid_certificate
from .errors import DomainError
from .family import FamilyMember, generate_family
from .ledger import build_P, build_R, build_Z, cover_to_splice, splice_to_surgery
from .moduli import HARD_TOLERANCE, dedekind_sum, moduli_dimension
from .seifert import SurgerySlope, TorusKnotParams, moser_surgery, normalize_seifert

log = logging.getLogger("wdcert")

TOLERANCE_ENV = "WDCERT_TOLERANCE"
EXIT_OK, EXIT_FAILED, EXIT_INVALID = 0, 1, 2


@dataclass
class RunConfig:
    subcommand: str | None = None
    family: str | None = None
    json_input: str | None = None
    output: str | None = None
    tolerance: float = HARD_TOLERANCE
    convention: str = MERIDIAN_FIRST
    jobs: int = 1
    verbosity: int = 0
    stamp: bool = False

    def validate(self):
        if not 0 < self.tolerance <= HARD_TOLERANCE:
            raise DomainError(f"tolerance must lie in (0, {HARD_TOLERANCE}], got {self.tolerance}")
        if self.convention not in CONVENTIONS:
            raise DomainError(f"unknown convention {self.convention!r}")
        if self.jobs < 1:
            raise DomainError(f"jobs must be >= 1, got {self.jobs}")
        if self.subcommand == "certify" and (self.family is None) == (self.json_input is None):
            raise DomainError("certify needs exactly one of --family or --json")


def load_config(argv_namespace: argparse.Namespace) -> RunConfig:
    """Defaults < environment < --config file < explicit flags."""
    config = RunConfig()
    env = os.environ.get(TOLERANCE_ENV)
    if env:
        config.tolerance = float(env)
    if argv_namespace.config:
        data = json.loads(Path(argv_namespace.config).read_text())
        known = {f.name for f in dataclasses.fields(RunConfig)}
        unknown = set(data) - known
        if unknown:
            raise DomainError(f"unknown config keys {sorted(unknown)}")
        for key, value in data.items():
            setattr(config, key, value)
    for key in ("family", "json_input", "output", "tolerance", "convention", "jobs", "stamp"):
        value = getattr(argv_namespace, key, None)
        if value is not None and value is not False:
            setattr(config, key, value)
    if argv_namespace.verbose:
        config.verbosity = argv_namespace.verbose
    config.subcommand = argv_namespace.command
    config.validate()
    return config


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def parse_family_text(text: str) -> list[FamilyMember]:
    """Parse a JSON family array or the inline form ``"2,3,1;2,7,2"`` (p,q[,r] or p,q,k,r)."""
    text = text.strip()
    if text.startswith("["):
        data = json.loads(text)
        if not isinstance(data, list):
            raise DomainError("family JSON must be an array")
        return [FamilyMember.from_json(entry) for entry in data]
    members = []
    for chunk in filter(None, (c.strip() for c in text.split(";"))):
        try:
            fields = [int(x) for x in chunk.split(",")]
        except ValueError as exc:
            raise DomainError(f"cannot parse family entry {chunk!r}") from exc
        if len(fields) == 2:
            members.append(FamilyMember(*fields))
        elif len(fields) == 3:
            members.append(FamilyMember(fields[0], fields[1], r=fields[2]))
        elif len(fields) == 4:
            members.append(FamilyMember(*fields))
        else:
            raise DomainError(f"family entry {chunk!r} needs 2 to 4 integers")
    return members


def read_family(config: RunConfig, stdin) -> list[FamilyMember]:
    if config.json_input is not None:
        text = stdin.read() if config.json_input == "-" else Path(config.json_input).read_text()
        return parse_family_text(text)
    path = Path(config.family)
    if path.is_file():
        return parse_family_text(path.read_text())
    return parse_family_text(config.family)


def _emit(text: str, config: RunConfig, stdout):
    if config.output and config.output != "-":
        Path(config.output).write_text(text)
    else:
        stdout.write(text)


def _stamp(payload: dict, config: RunConfig) -> dict:
    if config.stamp:
        payload = dict(payload, generated_at=datetime.now(timezone.utc).isoformat())
    return payload


def _cmd_certify(args, config, stdin, stdout):
    try:
        family = read_family(config, stdin)
        if not family:
            raise DomainError("family is empty")
    except (ValueError, OSError) as exc:
        _emit(canonical_json(_stamp(invalid_certificate(str(exc)), config)), config, stdout)
        raise
    cert = certify_independence(family, tolerance=config.tolerance, convention=config.convention, jobs=config.jobs)
    _emit(canonical_json(_stamp(cert.to_json(), config)), config, stdout)
    if not cert.independent:
        for check in cert.failures():
            log.error("check %s failed: %s", check.name, json.dumps(check.witness, sort_keys=True))
        return EXIT_FAILED
    return EXIT_OK


def _cmd_generate(args, config, stdin, stdout):
    pairs = generate_family((args.p, args.q), args.count)
    family = [{"p": p, "q": q, "r": args.depth} for p, q in pairs]
    _emit(canonical_json(family), config, stdout)
    return EXIT_OK


def _cmd_r_dim(args, config, stdin, stdout):
    sphere = normalize_seifert(*args.fibers)
    report = moduli_dimension(sphere, tolerance=config.tolerance)
    text = canonical_json(report.to_json()) if args.format == "json" else f"{report.dimension}\n"
    _emit(text, config, stdout)
    return EXIT_OK


def _cmd_moser(args, config, stdin, stdout):
    sphere = moser_surgery(TorusKnotParams(args.p, args.q), SurgerySlope.parse(args.slope))
    text = canonical_json(sphere.to_json()) if args.format == "json" else f"{sphere}\n"
    _emit(text, config, stdout)
    return EXIT_OK


def _cmd_cobordism(args, config, stdin, stdout):
    kind = args.kind
    if kind == "splice-to-surgery":
        if len(args.operands) != 2:
            raise DomainError("splice-to-surgery takes two knot labels")
        ledger = splice_to_surgery(*args.operands)
    else:
        if len(args.operands) != 2:
            raise DomainError(f"{kind} takes p and q")
        knot = TorusKnotParams(*(int(x) for x in args.operands))
        if kind == "Z":
            ledger = build_Z(knot, args.depth, args.crossings)
        elif kind == "P":
            ledger = build_P(knot, args.depth)
        elif kind == "R":
            ledger = build_R(knot, args.depth)
        else:
            ledger = cover_to_splice(knot, args.depth, args.crossings)
    _emit(canonical_json(ledger.to_json()), config, stdout)
    return EXIT_OK


def _cmd_cover(args, config, stdin, stdout):
    decomposition = decompose_cover(TorusKnotParams(args.p, args.q), args.depth, config.convention)
    payload = decomposition.to_json()
    payload["h1_order"] = h1_order(decomposition)
    _emit(canonical_json(payload), config, stdout)
    return EXIT_OK


def _cmd_dedekind(args, config, stdin, stdout):
    value = dedekind_sum(args.b, args.c)
    _emit(f"{value}\n", config, stdout)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-o", "--output", help="write output here instead of stdout")
    common.add_argument("--tolerance", type=float, help="float residual tolerance, in (0, 1e-3]")
    common.add_argument("--convention", choices=CONVENTIONS, help="torus curve coordinate order")
    common.add_argument("--config", help="JSON file with RunConfig fields")
    common.add_argument("--jobs", type=int, help="worker threads for per-member checks")
    common.add_argument("--stamp", action="store_true", help="add a generation timestamp")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(prog="wdcert", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("certify", parents=[common], help="certify a family of iterated doubles")
    p.add_argument("--family", help="family JSON file, or inline '2,3,1;2,7,2'")
    p.add_argument("--json", dest="json_input", metavar="SOURCE", help="read family JSON from SOURCE ('-' = stdin)")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("generate", parents=[common], help="least chain of torus knots from a start pair")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--count", type=int, default=4)
    p.add_argument("--depth", type=int, default=1, help="doubling depth recorded for every member")
    p.set_defaults(func=_cmd_generate)

    p = sub.add_parser("r-dim", parents=[common], help="moduli-space dimension for Σ(a1,a2,a3)")
    p.add_argument("fibers", type=int, nargs=3)
    p.set_defaults(func=_cmd_r_dim)

    p = sub.add_parser("moser", parents=[common], help="1/n surgery on T(p,q)")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--slope", default="1")
    p.set_defaults(func=_cmd_moser)

    p = sub.add_parser("cobordism", parents=[common], help="intersection ledger of a cobordism")
    p.add_argument("kind", choices=("Z", "P", "R", "cover-to-splice", "splice-to-surgery"))
    p.add_argument("operands", nargs="+", help="p q, or two knot labels for splice-to-surgery")
    p.add_argument("--depth", type=int, default=2)
    p.add_argument("--crossings", type=int, default=None)
    p.set_defaults(func=_cmd_cobordism)

    p = sub.add_parser("cover", parents=[common], help="decomposition of Σ(D^r(T(p,q))) and its H_1 order")
    p.add_argument("p", type=int)
    p.add_argument("q", type=int)
    p.add_argument("--depth", type=int, default=1)
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("dedekind", parents=[common], help="exact Dedekind sum s(b,c)")
    p.add_argument("b", type=int)
    p.add_argument("c", type=int)
    p.set_defaults(func=_cmd_dedekind)
    return parser


def run(argv, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    handler = logging.StreamHandler(stderr)
    handler.setFormatter(logging.Formatter("wdcert: %(levelname)s: %(message)s"))
    log.handlers[:] = [handler]
    log.propagate = False
    try:
        config = load_config(args)
        log.setLevel(logging.DEBUG if config.verbosity > 1 else logging.INFO if config.verbosity else logging.WARNING)
        return args.func(args, config, stdin, stdout)
    except (ValueError, OSError) as exc:
        log.error("%s", exc)
        return EXIT_INVALID


def main(argv=None) -> int:
    return run(sys.argv[1:] if argv is None else argv)
