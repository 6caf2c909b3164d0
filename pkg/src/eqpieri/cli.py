"""Command-line interface for the equivariant Pieri calculator.

Subcommands
-----------
pieri      one structure coefficient N^mu_{lambda,p}
expand     every nonzero coefficient of a special-class product
restrict   the special class restricted to one fixed point
oracle     the same coefficient recomputed by torus localization
verify     sweep small spaces comparing the rule against the oracle
diagram    the cut diagram and reduction branch for a pair of symbols
enumerate  all Schubert symbols of a space

Output is deterministic byte for byte: polynomials render in descending
graded lexicographic order with explicit ``*`` and ``^``, symbols print in
increasing order, and thread counts never change results.  Exit status is 0
on success, 1 for invalid input, and 2 when an internal consistency check
fails (which would indicate a genuine defect, never bad user input).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from typing import List, Optional, Sequence

from .diagram import arrow, build
from .errors import ConsistencyError, InputError
from .gkm import GkmEngine, fixed_point_restriction, type_d_restriction
from .pieri import (
    compute_pieri,
    pieri_expansion,
    positivity_certificate,
)
from .polyring import Polynomial
from .restrict_a import restriction_coefficient, schur_identity_check
from .schubert import (
    Space,
    codim,
    enumerate_symbols,
    pieri_bound,
    special_symbol,
    validate_symbol,
)


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage failures exit with status 1."""

    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _symbol_argument(text: str) -> tuple:
    try:
        parts = tuple(int(piece) for piece in text.split(",") if piece.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated symbol")
    return parts


def _space_from(args) -> Space:
    return Space(args.lie_type, args.m, args.n)


def _add_space_flags(parser, with_mu=True, with_lambda=True):
    parser.add_argument("--type", dest="lie_type", required=True,
                        choices=("A", "B", "C", "D"), help="Lie type of the space")
    parser.add_argument("--n", type=int, required=True,
                        help="rank (ambient dimension in type A is n itself)")
    parser.add_argument("--m", type=int, required=True,
                        help="dimension of the subspaces")
    if with_lambda:
        parser.add_argument("--lambda", dest="lam", type=_symbol_argument,
                            required=True, help="symbol, e.g. 2,4,8")
    if with_mu:
        parser.add_argument("--mu", type=_symbol_argument, required=True,
                            help="symbol, e.g. 1,3,5")


def _add_choice_flags(parser):
    parser.add_argument("--chat", type=int, default=None,
                        help="column dropped from Q (types B and D)")
    parser.add_argument("--pivot", type=_symbol_argument, default=None,
                        help="replacement pivot columns (type C)")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker threads for subset terms "
                             "(default: EQPIERI_THREADS or 1)")


def build_parser() -> _Parser:
    parser = _Parser(prog="eqpieri",
                     description="equivariant Pieri coefficients for "
                                 "classical Grassmannians")
    sub = parser.add_subparsers(dest="command", required=True)

    p_pieri = sub.add_parser("pieri", parents=[], help="one structure coefficient")
    _add_space_flags(p_pieri)
    p_pieri.add_argument("--p", type=int, required=True, help="special-class degree")
    p_pieri.add_argument("--tilde", action="store_true",
                         help="use the second family at p = n-m (type D)")
    _add_choice_flags(p_pieri)
    p_pieri.add_argument("--json", action="store_true", help="emit JSON")
    p_pieri.add_argument("--certify", action="store_true",
                         help="attach a Graham-positivity certificate")

    p_expand = sub.add_parser("expand", help="full special-class product")
    _add_space_flags(p_expand, with_mu=False)
    p_expand.add_argument("--p", type=int, required=True)
    p_expand.add_argument("--tilde", action="store_true")
    _add_choice_flags(p_expand)
    p_expand.add_argument("--json", action="store_true")
    p_expand.add_argument("--certify", action="store_true")

    p_restrict = sub.add_parser(
        "restrict", help="special class restricted to the fixed point of a symbol"
    )
    _add_space_flags(p_restrict, with_mu=False)
    p_restrict.add_argument("--p", type=int, required=True)
    p_restrict.add_argument("--json", action="store_true")

    p_oracle = sub.add_parser(
        "oracle", help="the coefficient recomputed by localization"
    )
    _add_space_flags(p_oracle)
    p_oracle.add_argument("--p", type=int, required=True)
    p_oracle.add_argument("--tilde", action="store_true")
    p_oracle.add_argument("--json", action="store_true")

    p_verify = sub.add_parser("verify", help="rule-versus-oracle sweeps")
    p_verify.add_argument("--suite", choices=("small",), default="small")
    p_verify.add_argument("--seed", type=int, default=0,
                          help="seed for the polynomial identity spot checks")
    p_verify.add_argument("--threads", type=int, default=None)

    p_diagram = sub.add_parser("diagram", help="cut diagram and branch data")
    _add_space_flags(p_diagram)
    p_diagram.add_argument("--p", type=int, required=True)
    p_diagram.add_argument("--chat", type=int, default=None)
    p_diagram.add_argument("--pivot", type=_symbol_argument, default=None)

    p_enum = sub.add_parser("enumerate", help="all symbols of a space")
    _add_space_flags(p_enum, with_mu=False, with_lambda=False)
    p_enum.add_argument("--json", action="store_true")

    return parser


def _sym_text(sym: Sequence[int]) -> str:
    return "{" + ",".join(str(c) for c in sym) + "}"


def _json_print(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=False))


def _certificate_payload(space, value, wanted):
    if not wanted:
        return None
    certificate = positivity_certificate(space, value)
    if not certificate.ok:
        raise ConsistencyError(
            f"positivity certification failed: {certificate.failure}"
        )
    return certificate


def _cmd_pieri(args) -> int:
    space = _space_from(args)
    result = compute_pieri(
        space, args.lam, args.mu, args.p,
        chat=args.chat, pivot=args.pivot, tilde=args.tilde, threads=args.threads,
    )
    certificate = _certificate_payload(space, result.value, args.certify)
    if args.json:
        _json_print({
            "coefficient": result.value.to_json_dict(),
            "terms": [term.to_json_dict() for term in result.terms],
            "certificate": certificate.to_json_dict() if certificate else None,
        })
        return 0
    print(result.value.render())
    if certificate is not None:
        print(f"certificate: scale={certificate.scale} "
              f"expansion={certificate.expansion.render(prefix='v')}")
    return 0


def _cmd_expand(args) -> int:
    space = _space_from(args)
    expansion = pieri_expansion(
        space, args.lam, args.p,
        chat=args.chat, pivot=args.pivot, tilde=args.tilde, threads=args.threads,
    )
    if args.json:
        entries = []
        for mu, value in expansion.items():
            certificate = _certificate_payload(space, value, args.certify)
            entries.append({
                "mu": list(mu),
                "coefficient": value.to_json_dict(),
                "certificate": certificate.to_json_dict() if certificate else None,
            })
        _json_print({"expansion": entries})
        return 0
    for mu, value in expansion.items():
        _certificate_payload(space, value, args.certify)
        print(f"{_sym_text(mu)}: {value.render()}")
    return 0


def _cmd_restrict(args) -> int:
    space = _space_from(args)
    nu = validate_symbol(space, args.lam)
    if args.p < 0 or args.p > pieri_bound(space):
        raise InputError(
            f"p = {args.p} is outside the special-class range "
            f"[0, {pieri_bound(space)}]"
        )
    if args.p == 0:
        nvars = space.ambient if space.lie_type == "A" else space.n
        value = Polynomial.one(nvars)
    elif space.lie_type == "A":
        value = restriction_coefficient(space, nu, args.p)
    elif space.lie_type == "D" and space.m == space.n:
        value = type_d_restriction(space, nu, args.p)
    else:
        value = fixed_point_restriction(space, special_symbol(space, args.p)[0], nu)
    if args.json:
        _json_print({"restriction": value.to_json_dict()})
    else:
        print(value.render())
    return 0


def _cmd_oracle(args) -> int:
    space = _space_from(args)
    lam = validate_symbol(space, args.lam)
    mu = validate_symbol(space, args.mu)
    if args.p < 0 or args.p > pieri_bound(space):
        raise InputError(
            f"p = {args.p} is outside the special-class range "
            f"[0, {pieri_bound(space)}]"
        )
    sigma = special_symbol(space, args.p)[0] if args.p else None
    if args.tilde:
        if space.lie_type != "D" or args.p != space.n - space.m or args.p < 1:
            raise InputError(
                "the second special class exists only on even orthogonal "
                "spaces at p = n - m"
            )
        from .pieri import swap_wall_letters

        sigma = swap_wall_letters(space, sigma)
    if args.p == 0:
        nvars = space.ambient if space.lie_type == "A" else space.n
        value = Polynomial.one(nvars) if lam == mu else Polynomial.zero(nvars)
    else:
        engine = GkmEngine(space)
        value = engine.product_coefficient(lam, sigma, mu)
    if args.json:
        _json_print({"coefficient": value.to_json_dict()})
    else:
        print(value.render())
    return 0


def _cmd_diagram(args) -> int:
    space = _space_from(args)
    print(build(space, args.lam, args.mu, args.p,
                chat=args.chat, pivot=args.pivot).describe())
    return 0


def _cmd_enumerate(args) -> int:
    space = _space_from(args)
    symbols = enumerate_symbols(space)
    if args.json:
        _json_print({"space": space.name(), "symbols": [list(s) for s in symbols]})
        return 0
    for sym in symbols:
        print(_sym_text(sym))
    return 0


def _cmd_verify(args) -> int:
    spaces = (Space("A", 2, 5), Space("C", 2, 3), Space("B", 2, 3), Space("D", 2, 4))
    failures = 0
    for space in spaces:
        engine = GkmEngine(space)
        symbols = enumerate_symbols(space)
        checked = nonzero = 0
        for lam in symbols:
            for p in range(1, pieri_bound(space) + 1):
                expansion = engine.product_expansion(lam, special_symbol(space, p)[0])
                for mu in symbols:
                    truth = expansion.get(mu, Polynomial.zero(engine.nvars))
                    if not arrow(space, lam, mu):
                        if not truth.is_zero:
                            failures += 1
                        continue
                    value = compute_pieri(
                        space, lam, mu, p, threads=args.threads
                    ).value
                    checked += 1
                    if value != truth:
                        failures += 1
                        print(f"MISMATCH {space.name()} lambda={list(lam)} "
                              f"mu={list(mu)} p={p}")
                        continue
                    if not value.is_zero:
                        nonzero += 1
                        if not positivity_certificate(space, value).ok:
                            failures += 1
                            print(f"UNCERTIFIED {space.name()} lambda={list(lam)} "
                                  f"mu={list(mu)} p={p}")
        print(f"{space.name()}: {checked} coefficients checked, "
              f"{nonzero} nonzero, all against localization")
    rng = random.Random(args.seed)
    identity_checks = 0
    for _ in range(200):
        r = rng.randint(1, 5)
        p = rng.randint(1, 5)
        pool = rng.sample(range(-20, 21), r + p - 1 + r)
        xs, ys = pool[:r], pool[r:]
        if not schur_identity_check(xs, ys):
            failures += 1
            print(f"IDENTITY FAILURE xs={xs} ys={ys}")
        identity_checks += 1
    print(f"polynomial identity spot checks: {identity_checks}")
    if failures:
        print(f"verify: FAIL ({failures} failures)")
        raise ConsistencyError(f"{failures} verification failures")
    print("verify: PASS")
    return 0


_COMMANDS = {
    "pieri": _cmd_pieri,
    "expand": _cmd_expand,
    "restrict": _cmd_restrict,
    "oracle": _cmd_oracle,
    "verify": _cmd_verify,
    "diagram": _cmd_diagram,
    "enumerate": _cmd_enumerate,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except InputError as exc:
        print(f"eqpieri: error: {exc}", file=sys.stderr)
        return 1
    except ConsistencyError as exc:
        print(f"eqpieri: consistency failure: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
