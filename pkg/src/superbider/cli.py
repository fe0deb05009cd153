"""Command-line driver.

Exit status: 0 on success, 1 on input or parse errors (including an algebra
that fails its axioms), 2 when a computation contradicts a theorem.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import catalog
from .biderivations import biderivation_space, special_biderivation_space
from .certificate import FAIL, Certificate
from .errors import InputError, SuperbiderError, TheoremViolation, ValidationError
from .invariants import hypotheses
from .maps import centroid_space, commuting_map_space, derivation_space
from .superalgebra import EVEN, ODD, Parity, validate
from .theorems import THEOREMS

SCHEMA = 1

SPACES = {
    "der": lambda L, t: derivation_space(L, t),
    "centroid": lambda L, t: centroid_space(L, t),
    "commuting": lambda L, t: commuting_map_space(L) if t == EVEN else None,
    "bider": lambda L, t: biderivation_space(L, t),
    "special": lambda L, t: special_biderivation_space(L, t),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_algebra_args(p: argparse.ArgumentParser, positional: bool = True) -> None:
    if positional:
        p.add_argument("tokens", nargs="*", metavar="ALGEBRA",
                       help="catalog algebra, e.g. 'sl2', 'gl 1 1', 'sl2 + sl2'")
    p.add_argument("--algebra", nargs="+", metavar="TOKEN", help="catalog algebra and parameters")
    p.add_argument("--file", type=Path, help="LSA structure-constants file")
    p.add_argument("--json", action="store_true", help="machine-readable output")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="superbider", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    _add_algebra_args(sub.add_parser("info", help="dimensions and hypothesis flags"))
    _add_algebra_args(sub.add_parser("verify", help="check the Lie superalgebra axioms"))

    p = sub.add_parser("compute", help="solve for a map space")
    p.add_argument("kind", choices=sorted(SPACES))
    _add_algebra_args(p)
    p.add_argument("--degree", choices=["even", "odd", "both"], default="both")

    p = sub.add_parser("theorem", help="run a theorem or lemma check")
    p.add_argument("name", choices=sorted(THEOREMS))
    _add_algebra_args(p)

    _add_algebra_args(sub.add_parser("dump", help="print the algebra in LSA format"))
    p = sub.add_parser("load", help="read, validate, and re-emit an LSA file")
    p.add_argument("path", type=Path)
    return parser


def _resolve(args, check: bool = True):
    sources = [bool(getattr(args, "tokens", None)), bool(args.algebra), args.file is not None]
    if sum(sources) != 1:
        raise InputError("give exactly one algebra: positional name, --algebra, or --file")
    if args.file is not None:
        text = args.file.read_text(encoding="utf-8")
        return catalog.load(text, name=str(args.file), check=check), {"algebra.file": str(args.file)}
    tokens = args.tokens or args.algebra
    L = catalog.from_tokens(tokens)
    return L, {"algebra.spec": " ".join(tokens)}


def _rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _entries(vec, shape: int, arity: int) -> str:
    parts = []
    for idx, x in enumerate(vec):
        if x:
            coords = []
            for _ in range(arity):
                coords.append(idx % shape)
                idx //= shape
            parts.append(f"({','.join(str(c) for c in reversed(coords))})={_rational(x)}")
    return " ".join(parts) if parts else "0"


def _base(L, ident: dict) -> dict:
    facts = {"schema": SCHEMA, "algebra.name": L.name, **ident,
             "dims.even": L.dim_even, "dims.odd": L.dim_odd}
    return facts


def _hypothesis_facts(L) -> dict:
    h = hypotheses(L)
    return {
        "hypotheses.perfect": h.is_perfect,
        "hypotheses.centerless": h.is_centerless,
        "hypotheses.derived_dim": h.derived_dim,
        "hypotheses.center_dim": h.center_dim,
        "hypotheses.centralizer_of_derived_dim": h.centralizer_of_derived_dim,
    }


def _certificate_facts(c: Certificate) -> dict:
    prefix = f"certificate.{c.name}"
    facts = {f"{prefix}.status": c.status}
    if c.reason:
        facts[f"{prefix}.reason"] = c.reason
    for k, v in sorted(c.details.items()):
        facts[f"{prefix}.{k}"] = v
    if c.witness is not None:
        facts[f"{prefix}.witness"] = repr(c.witness)
    return facts


def _render(facts: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(facts, indent=2, sort_keys=True) + "\n"
    width = max((len(k) for k in facts), default=0)
    lines = []
    for k, v in facts.items():
        if isinstance(v, bool):
            v = "yes" if v else "no"
        lines.append(f"{k.ljust(width)}  {v}")
    return "\n".join(lines) + "\n"


def _degrees(choice: str) -> list:
    return list(Parity) if choice == "both" else [Parity.parse(choice)]


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return _dispatch(args, out)
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"invalid algebra: {exc}", file=sys.stderr)
        for v in exc.violations:
            print(f"  {v}", file=sys.stderr)
        return 1
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SuperbiderError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args, out) -> int:
    cmd = args.command
    if cmd == "load":
        L = catalog.load(args.path.read_text(encoding="utf-8"), name=str(args.path))
        out.write(catalog.dump(L))
        return 0
    if cmd == "dump":
        L, _ = _resolve(args)
        out.write(catalog.dump(L))
        return 0
    if cmd == "verify":
        L, ident = _resolve(args, check=False)
        report = validate(L)
        facts = _base(L, ident)
        facts["axioms.violations"] = len(report)
        for i, v in enumerate(report):
            facts[f"axioms.violation.{i}"] = str(v)
        out.write(_render(facts, args.json))
        return 1 if report else 0

    L, ident = _resolve(args)
    facts = _base(L, ident)
    facts.update(_hypothesis_facts(L))
    status = 0
    if cmd == "compute":
        for t in _degrees(args.degree):
            space = SPACES[args.kind](L, t)
            key = f"{args.kind}.{t}"
            if space is None:
                facts[f"{key}.dim"] = "n/a"
                continue
            facts[f"{key}.dim"] = space.dim
            arity = 3 if args.kind in ("bider", "special") else 2
            for i, row in enumerate(space.space.rows):
                facts[f"{key}.basis.{i}"] = _entries(row, L.dim, arity)
    elif cmd == "theorem":
        cert = THEOREMS[args.name](L)
        facts.update(_certificate_facts(cert))
        if cert.status == FAIL:
            status = 2
    out.write(_render(facts, args.json))
    return status


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
