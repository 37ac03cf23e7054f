"""Command line entry point.

Exit status: 0 when nothing was refuted and nothing failed, 2 for usage
errors, 3 when a Groebner computation hits its budget, 4 when a claim is
refuted, 5 when an instance violates a hypothesis, 1 for other errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import family, qdiv
from .algebra import AlgebraError, CoefficientField, MonomialOrder, RingSignature
from .groebner import (
    DEFAULT_BUDGET,
    Ideal,
    ResourceLimitExceeded,
    buchberger,
    hilbert_function,
    ideal_member,
    krull_dimension,
)
from .report import INVALID, REFUTED, VerificationReport

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_REFUTED = 4
EXIT_INVALID = 5


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n.replace("_", "-") for n in missing))


def resolve_claim(name: str) -> str:
    if name in family.CLAIMS:
        return name
    hits = [c for c in family.CLAIMS if c.startswith(name)]
    if len(hits) == 1:
        return hits[0]
    raise UsageError(f"unknown claim {name!r}; see list-claims")


def _instance(args, need_k=False) -> family.PaperInstance:
    _need(args, "p", "m", "n", *(["k"] if need_k else []))
    try:
        return family.PaperInstance(args.p, args.m, args.n, args.k)
    except family.InvalidInstance as exc:
        raise UsageError(str(exc)) from None


def run_verify(args) -> list[VerificationReport]:
    claim = resolve_claim(args.claim)
    b = args.budget
    if claim == "lemma-4.2":
        return [family.verify_key_lemma(_instance(args, True), budget=b)]
    if claim == "lemma-4.2-replay":
        _need(args, "m", "n", "k")
        return [family.replay_key_lemma_proof(args.m, args.n, args.k)]
    if claim == "prop-4.3-quotient-fregular":
        _need(args, "n", "p")
        return [family.verify_quotient_fregular(args.n, args.p, e_max=args.e_max, budget=b)]
    if claim == "prop-4.3-section-ring":
        _need(args, "n")
        return [qdiv.hilbert_crosscheck(args.n, args.up_to if args.up_to is not None else 20,
                                        budget=b)]
    if claim == "prop-4.4-not-fpure":
        return [family.verify_not_fpure(_instance(args), budget=b)]
    if claim == "prop-4.4-not-fregular":
        return [family.verify_not_fregular(_instance(args), q_window=args.q_window, budget=b)]
    if claim == "rem-4.1-hsop":
        return [family.verify_hsop(_instance(args), budget=b)]
    if claim == "rem-4.1-nzd":
        return [family.verify_nzd(_instance(args), budget=b)]
    if claim == "sec6-singular-locus":
        return [family.verify_singular_locus(_instance(args), budget=b)]
    if claim == "thm-1.1-bundle":
        return [family.verify_main_theorem(_instance(args), q_window=args.q_window,
                                           e_max=args.e_max, budget=b)]
    if claim == "sec5-sweep":
        return run_sweep(args)
    raise UsageError(f"no runner for {claim}")


def run_sweep(args) -> list[VerificationReport]:
    _need(args, "m", "n", "primes")
    return family.prime_sweep(args.m, args.n, _ints(args.primes), e_max=args.e_max,
                              budget=args.budget)


def _divisor(args) -> qdiv.QDivisor:
    _need(args, "E")
    try:
        return qdiv.QDivisor.parse(args.E)
    except qdiv.DivisorError as exc:
        raise UsageError(str(exc)) from None


def run_divisor(args) -> dict:
    E = _divisor(args)
    out = {"divisor": str(E), "divisor_degree": str(E.degree)}
    if args.action == "dims":
        try:
            out["section_dims"] = qdiv.section_dims(E, 20 if args.up_to is None else args.up_to)
        except qdiv.DivisorError as exc:
            raise UsageError(str(exc)) from None
    elif args.action == "floor":
        data = qdiv.class_data(E)
        out.update(floor=str(qdiv.floor_divisor(E)), fractional_part=str(qdiv.fractional_part_paper(E)),
                   floor_degree=data.floor_degree, h0=data.h0, h1=data.h1)
    elif args.action == "identity":
        lo, hi = _ints(args.range)
        out.update(range=[lo, hi], failures=qdiv.floor_identity_failures(E, lo, hi))
        out["holds"] = not out["failures"]
    else:
        _need(args, "p")
        h = qdiv.fpurity_degree_heuristic(E, args.p)
        out.update(p=args.p, k_plus_fractional_degree=str(h.base_degree),
                   p_multiple_degree=str(h.degree), h1=h.h1_value)
    return out


def _gb_ring(args) -> tuple[RingSignature, Ideal]:
    field = CoefficientField(args.p or 0)
    if args.vars is None:
        _need(args, "m", "n")
        I = family.matrix_ideal(args.m, args.n, field)
        ring = I.ring
        extra = [ring.parse(g) for g in args.ideal.split(";") if g.strip()] if args.ideal else []
        return ring, I + extra
    weights = _ints(args.weights) if args.weights else None
    ring = RingSignature.make(args.vars.replace(",", " "), weights, field)
    gens = [g for g in (args.ideal or "").split(";") if g.strip()]
    return ring, Ideal(ring, gens)


def run_gb(args) -> dict:
    try:
        ring, I = _gb_ring(args)
    except (AlgebraError, ValueError) as exc:
        raise UsageError(str(exc)) from None
    out = {"ring": str(ring), "ideal": I.render()}
    b = args.budget
    if args.action == "basis":
        order = MonomialOrder.named(args.order, ring) if args.order else None
        G = buchberger(I, order, budget=b)
        out.update(order=str(G.order), basis=G.render())
    elif args.action == "member":
        _need(args, "poly")
        f = ring.parse(args.poly)
        out.update(poly=f.render(), member=ideal_member(f, I, budget=b))
    elif args.action == "dim":
        out["dimension"] = krull_dimension(I, budget=b)
    else:
        out["hilbert_function"] = hilbert_function(I, 20 if args.up_to is None else args.up_to,
                                                   budget=b)
    return out


def list_claims() -> list[dict]:
    return [{"claim": c, "statement": text, "parameters": list(params)}
            for c, (text, params) in family.CLAIMS.items()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, help="field characteristic (prime)")
    common.add_argument("--m", type=int)
    common.add_argument("--n", type=int)
    common.add_argument("--k", type=int)
    common.add_argument("--e-max", type=int, default=family.DEFAULT_E_MAX,
                        help="largest Frobenius exponent searched (default %(default)s)")
    common.add_argument("--q-window", type=int, default=family.DEFAULT_Q_WINDOW,
                        help="check tight-closure witnesses for all q = p^e up to this (default %(default)s)")
    common.add_argument("--up-to", type=int, help="largest degree or multiple (default 20)")
    common.add_argument("--primes", help="comma-separated primes")
    common.add_argument("--order", help="lex, grevlex or weighted (default weighted)")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help="reduction steps per Groebner computation (default %(default)s)")
    common.add_argument("--out", help="write the report here instead of standard output")
    common.add_argument("--format", choices=("json", "text"), default="json")

    parser = argparse.ArgumentParser(prog="fregdeform", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", parents=[common], help="run one claim")
    v.add_argument("claim")
    sub.add_parser("sweep", parents=[common], help="fiber and quotient checks across primes")
    d = sub.add_parser("divisor", parents=[common], help="Q-divisor calculator on P^1")
    d.add_argument("action", choices=("dims", "floor", "identity", "heuristic"))
    d.add_argument("--E", help='divisor such as "1/2@VX, 1/2@VY, 1/4@VXY"')
    d.add_argument("--range", default="-50,50", help="lo,hi for the floor identity; write --range=-5,5 when lo is negative")
    g = sub.add_parser("gb", parents=[common], help="Groebner basis utilities")
    g.add_argument("action", choices=("basis", "member", "dim", "hilbert"))
    g.add_argument("--vars", help="variable names; defaults to the family ring from --m --n")
    g.add_argument("--weights", help="comma-separated weights")
    g.add_argument("--ideal", help="generators separated by ';'")
    g.add_argument("--poly", help="polynomial for membership")
    sub.add_parser("list-claims", parents=[common], help="print the claim catalog")
    return parser


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (set, frozenset, tuple)):
        return list(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def render_json(payload) -> str:
    return json.dumps(payload, indent=2, default=_jsonable) + "\n"


def render_text(command: str, payload) -> str:
    if command in ("verify", "sweep"):
        lines = []
        for rep in payload:
            inst = " ".join(f"{k}={v}" for k, v in rep["instance"].items() if v is not None)
            secs = rep["timings"].get("wall_seconds", 0.0)
            lines.append(f"{rep['claim']:<28} {inst:<28} {rep['verdict']:<16} {secs:.2f}s")
        return "\n".join(lines) + "\n"
    if command == "list-claims":
        return "\n".join(f"{c['claim']:<28} {c['statement']}  [{', '.join(c['parameters'])}]"
                         for c in payload) + "\n"
    return "\n".join(f"{k}: {v}" for k, v in payload.items()) + "\n"


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            reports = run_verify(args)
        elif args.command == "sweep":
            reports = run_sweep(args)
        else:
            reports = None
        if reports is not None:
            payload = [r.as_dict() for r in reports]
        elif args.command == "divisor":
            payload = run_divisor(args)
        elif args.command == "gb":
            payload = run_gb(args)
        else:
            payload = list_claims()
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"fregdeform: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceLimitExceeded as exc:
        print(f"fregdeform: resource budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (AlgebraError, ArithmeticError) as exc:
        print(f"fregdeform: error: {exc}", file=sys.stderr)
        return EXIT_ERROR

    text = render_json(payload) if args.format == "json" else render_text(args.command, payload)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)

    if reports is not None:
        verdicts = [r.verdict for r in reports]
        if REFUTED in verdicts:
            print("fregdeform: REFUTED: a stated claim failed; this indicates an engine bug",
                  file=sys.stderr)
            return EXIT_REFUTED
        if INVALID in verdicts:
            return EXIT_INVALID
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
