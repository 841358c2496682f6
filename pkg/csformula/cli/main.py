# csformula/cli/main.py

"""
Command-line entry point: `python -m csformula <command> ...`.

This module is responsible for:
1. Building the argument grammar (datum, char, tensor, hecke, cs, verify).
2. Resolving the datum and the runtime settings, with flags taking priority.
3. Printing one JSON document (sorted keys) or a short text form on stdout.
4. Mapping outcomes to exit codes: 0 ok, 1 verification failure, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Dict, List, Optional, Sequence

from csformula.algebra.scalars import format_rational
from csformula.characters.tensor import tensor_coeffs, tensor_coeffs_dual
from csformula.characters.weyl_character import weyl_character
from csformula.exceptions import CSFormulaError
from csformula.hecke.bernstein import hecke_algebra
from csformula.hecke.term_language import parse_element
from csformula.roots.catalog import catalog_names, resolve_datum
from csformula.roots.isogeny import isogeny_decomposition
from csformula.roots.root_datum import RootDatum
from csformula.utils.config import get_settings
from csformula.utils.logger import configure_logging, get_logger
from csformula.verify.sweeps import CHECKS, SweepOptions, run_all, run_check
from csformula.whittaker.delta import delta_exponent, delta_half
from csformula.whittaker.formulas import adjoint_ratio, conductor_O_value, cs_value
from csformula.whittaker.general import general_cs_O_value, general_cs_value, reduce_to_product
from csformula.whittaker.specialize import SatakeSpecialization, specialize

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


# ----------------------------------------------------------------------------
# argument helpers
# ----------------------------------------------------------------------------

def parse_point(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'")


def parse_mult(items: Optional[List[str]]) -> Dict[int, int]:
    mult = {}
    for item in items or []:
        key, sep, value = item.partition("=")
        if not sep:
            raise ValueError(f"--mult expects k=v, got '{item}'")
        mult[int(key)] = int(value)
    return mult


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--datum", default=None, help="catalog:NAME or file:PATH")
    common.add_argument("--format", choices=["json", "text"], default=None, help="output format")
    common.add_argument("--seed", type=int, default=None, help="seed for randomized sweeps")
    common.add_argument("--mult", action="append", default=None, metavar="k=v",
                        help="override d_alpha for positive root index k")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="csformula", description="Exact Casselman-Shalika computations")
    commands = parser.add_subparsers(dest="command", required=True)

    datum = commands.add_parser("datum", parents=[common], help="describe a root datum and its dual")
    datum.add_argument("--list", action="store_true", help="list catalog entries")

    char = commands.add_parser("char", parents=[common], help="Weyl character chV_lambda")
    char.add_argument("--lambda", dest="lam", type=parse_point, required=True)
    char.add_argument("--xcal", action="store_true", help="lambda is given in Xcal coordinates")

    tensor = commands.add_parser("tensor", parents=[common], help="tensor coefficients c^eta_{mu,lambda}")
    tensor.add_argument("--lambda", dest="lam", type=parse_point, required=True)
    tensor.add_argument("--mu", type=parse_point, required=True, help="strictly dominant point of Xcal")
    tensor.add_argument("--xcal", action="store_true", help="lambda is given in Xcal coordinates")

    hecke = commands.add_parser("hecke", help="Iwahori-Hecke algebra in Bernstein presentation")
    hecke_commands = hecke.add_subparsers(dest="action", required=True)
    normal = hecke_commands.add_parser("normal-form", parents=[common])
    normal.add_argument("expression")
    ts = hecke_commands.add_parser("ts-theta", parents=[common])
    ts.add_argument("--s", type=int, required=True, help="simple reflection index (1-based)")
    ts.add_argument("--lambda", dest="lam", type=parse_point, required=True)
    one_k = hecke_commands.add_parser("one-k", parents=[common])
    one_k.add_argument("--lambda", dest="lam", type=parse_point, default=None)
    for sub in (normal, ts, one_k):
        sub.add_argument("--split", action="store_true", help="specialize q_j(s) = q(s) - 1")

    cs = commands.add_parser("cs", help="Whittaker function values")
    cs_commands = cs.add_subparsers(dest="action", required=True)
    ev = cs_commands.add_parser("eval", parents=[common])
    ev.add_argument("--mu", type=parse_point, required=True)
    o_eval = cs_commands.add_parser("o-eval", parents=[common])
    o_eval.add_argument("--lambda", dest="lam", type=parse_point, required=True)
    delta = cs_commands.add_parser("delta", parents=[common])
    delta.add_argument("--lambda", dest="lam", type=parse_point, required=True)
    general = cs_commands.add_parser("general", parents=[common])
    general.add_argument("--mu", type=parse_point, required=True)
    general_o = cs_commands.add_parser("general-o", parents=[common])
    general_o.add_argument("--lambda", dest="lam", type=parse_point, required=True)
    spec = cs_commands.add_parser("specialize", parents=[common])
    target = spec.add_mutually_exclusive_group(required=True)
    target.add_argument("--mu", type=parse_point, help="specialize cs_value(mu)")
    target.add_argument("--lambda", dest="lam", type=parse_point, help="specialize the adjoint ratio at lambda")
    spec.add_argument("--point", required=True, help="z1,z2,... (rationals)")
    spec.add_argument("--q", required=True, help="num/den, a rational square")

    verify = commands.add_parser("verify", parents=[common], help="run verification sweeps")
    verify.add_argument("check", choices=sorted(CHECKS) + ["all"])
    verify.add_argument("--box", type=int, default=None)
    verify.add_argument("--lambda-max", dest="lambda_max", type=int, default=None)
    verify.add_argument("--no-timings", action="store_true", help="report elapsed_ms as 0")
    return parser


# ----------------------------------------------------------------------------
# commands
# ----------------------------------------------------------------------------

def _datum(args) -> RootDatum:
    return resolve_datum(args.datum, parse_mult(args.mult))


def cmd_datum(args) -> Dict[str, Any]:
    if args.list:
        return {"catalog": catalog_names()}
    datum = _datum(args)
    dual = datum.dual_datum()
    info = datum.describe()
    info["dual"] = {
        "lattice": dual.lattice_tag,
        "basis": [[format_rational(x) for x in row] for row in dual.basis],
        "positive_roots": [list(a) for a in dual.positive_roots],
        "positive_coroots": [list(c) for c in dual.positive_coroots],
        "rho_vee": list(dual.rho_vee),
    }
    return info


def cmd_char(args) -> Dict[str, Any]:
    dual = _datum(args).dual_datum()
    lam = args.lam if args.xcal else dual.include(args.lam)
    character = weyl_character(dual, lam)
    payload = character.to_json()
    payload["dimension"] = character.dimension()
    payload["text"] = str(character.element)
    return payload


def cmd_tensor(args) -> Dict[str, Any]:
    dual = _datum(args).dual_datum()
    if args.xcal:
        return tensor_coeffs_dual(dual, args.lam, args.mu).to_json()
    return tensor_coeffs(dual, args.lam, args.mu).to_json()


def cmd_hecke(args) -> Dict[str, Any]:
    algebra = hecke_algebra(_datum(args), args.split)
    if args.action == "normal-form":
        element = parse_element(algebra, args.expression)
    elif args.action == "ts-theta":
        element = algebra.ts_theta(args.s - 1, args.lam)
    elif args.lam is None:
        element = algebra.one_K()
    else:
        element = algebra.theta_K(args.lam)
    return _element_payload(element)


def _element_payload(element) -> Dict[str, Any]:
    payload = element.to_json()
    payload["text"] = str(element)
    return payload


def cmd_cs(args) -> Dict[str, Any]:
    datum = _datum(args)
    if args.action == "eval":
        return _element_payload(cs_value(datum, args.mu))
    if args.action == "o-eval":
        return _element_payload(conductor_O_value(datum, args.lam))
    if args.action == "delta":
        return {
            "lambda": list(args.lam),
            "exponent": format_rational(delta_exponent(datum, args.lam)),
            "value": str(delta_half(datum, args.lam)),
        }
    if args.action in ("general", "general-o"):
        dec = isogeny_decomposition(datum)
        point = args.mu if args.action == "general" else args.lam
        mu, lam_t = reduce_to_product(dec, point)
        value = general_cs_value(dec, point) if args.action == "general" else general_cs_O_value(dec, point)
        payload = _element_payload(value)
        payload["product"] = {"adjoint": list(mu), "torus": list(lam_t)}
        payload["source"] = _element_payload(dec.pull_back(value))
        return payload

    s = SatakeSpecialization.parse(args.point, args.q)
    element = cs_value(datum, args.mu) if args.mu is not None else adjoint_ratio(datum, args.lam)
    return {
        "point": [format_rational(z) for z in s.point],
        "q": format_rational(s.q_value),
        "v": format_rational(s.v),
        "value": format_rational(specialize(element, s)),
    }


def cmd_verify(args, timings: bool) -> Dict[str, Any]:
    datum = _datum(args)
    options = SweepOptions.from_settings(box=args.box, lambda_max=args.lambda_max, seed=args.seed)
    if args.check == "all":
        reports = run_all(datum, options, timings)
        return {
            "datum": datum.name,
            "reports": [r.model_dump() for r in reports],
            "failures": [f for r in reports for f in ({"check": r.check, **x} for x in r.failures)],
        }
    return run_check(args.check, datum, options, timings).model_dump()


# ----------------------------------------------------------------------------
# output
# ----------------------------------------------------------------------------

def _text(payload: Dict[str, Any]) -> str:
    if "reports" in payload:
        return "\n".join(_text(r) for r in payload["reports"])
    if "check" in payload:
        status = "ok" if not payload["failures"] else f"{len(payload['failures'])} failures"
        return f"{payload['check']} on {payload['datum']}: {payload['cases']} cases, {status}"
    if "text" in payload:
        return payload["text"]
    if "value" in payload:
        return payload["value"]
    return json.dumps(payload, sort_keys=True)


def emit(payload: Dict[str, Any], fmt: str) -> None:
    if fmt == "text":
        sys.stdout.write(_text(payload) + "\n")
    else:
        sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


COMMANDS = {
    "datum": cmd_datum,
    "char": cmd_char,
    "tensor": cmd_tensor,
    "hecke": cmd_hecke,
    "cs": cmd_cs,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE

    settings = get_settings()
    configure_logging(settings.log_level)
    fmt = args.format or settings.output_format

    try:
        if args.command == "verify":
            payload = cmd_verify(args, timings=not args.no_timings)
        else:
            payload = COMMANDS[args.command](args)
    except (CSFormulaError, FileNotFoundError, ValueError) as exc:
        logger.debug("command failed", exc_info=True)
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE

    emit(payload, fmt)
    if args.command == "verify" and payload["failures"]:
        return EXIT_FAILED
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
