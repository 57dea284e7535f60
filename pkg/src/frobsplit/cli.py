"""Command-line frontend.

Problem files declare a ring, an order, named ideals, and optional witnesses
and weight vectors (grammar in ``docs/problem_grammar.ebnf``).  Subcommands
dispatch to the library and print a human-readable report, or a JSON envelope
with ``--json``; certificates can be written to a file with ``--out`` and
re-verified with ``verify-cert``.

Exit codes: 0 success / certificate found / true verdict; 1 not-found or
false verdict; 2 input error; 3 resource budget exceeded.  Output is
byte-deterministic for identical inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field as dc_field

from ._version import __version__
from .field_poly import (
    FieldPolyError,
    MonomialOrder,
    ParseError,
    Polynomial,
    RingContext,
    TokenStream,
    grevlex,
    parse_order,
    parse_polynomial_stream,
    tokenize,
    weight_order,
)
from .groebner import (
    Budget,
    DEFAULT_MAX_PAIRS,
    IdealPresentation,
    MonomialIdeal,
    ResourceLimitError,
    initial_ideal,
    member,
    normal_form,
    reduced_gb,
)
from . import ideal_ops
from . import frobenius
from . import criteria

BUDGET_ENV_VAR = "FROBSPLIT_BUDGET_PAIRS"

SUBCOMMANDS = (
    "gb", "nf", "initial", "member", "intersect", "colon", "saturate",
    "power", "bracket-power", "symbolic", "homogenize", "fibers", "dim",
    "trace", "star", "is-splitting", "fedder", "compatible", "fsplit",
    "charp-cert", "symb-cert", "verify-cert",
)


class InputError(FieldPolyError):
    """Problem-level input error (unknown ideal, missing witness, ...)."""


# -- problem files ---------------------------------------------------------------


@dataclass
class ProblemFile:
    """Parsed problem: ring, order, named ideals, optional witnesses/weights."""

    ring: RingContext
    order: MonomialOrder
    ideals: dict = dc_field(default_factory=dict)      # name -> IdealPresentation
    witnesses: dict = dc_field(default_factory=dict)   # ideal name -> Polynomial
    weights: tuple | None = None

    def ideal(self, name: str | None) -> tuple[str, IdealPresentation]:
        if not self.ideals:
            raise InputError("the problem file declares no ideals")
        if name is None:
            first = next(iter(self.ideals))
            return first, self.ideals[first]
        if name not in self.ideals:
            raise InputError(f"unknown ideal {name!r}")
        return name, self.ideals[name]


def parse_problem(text: str) -> ProblemFile:
    """Parse a problem file; raises ParseError with positions on bad syntax."""
    ts = TokenStream(tokenize(text))
    ring: RingContext | None = None
    order: MonomialOrder | None = None
    weights: tuple | None = None
    ideals: dict[str, IdealPresentation] = {}
    witnesses: dict[str, Polynomial] = {}

    def need_ring(tok) -> RingContext:
        if ring is None:
            raise ParseError("the ring must be declared first", tok.line, tok.column)
        return ring

    while True:
        tok = ts.peek()
        if tok is None:
            break
        if tok.kind != "ident":
            raise ParseError(f"expected a statement, found {tok.value!r}", tok.line, tok.column)
        ts.next()
        if tok.value == "ring":
            if ring is not None:
                raise ParseError("duplicate ring declaration", tok.line, tok.column)
            ts.expect(":")
            kw = ts.expect("ident")
            if kw.value != "p":
                raise ParseError("expected 'p='", kw.line, kw.column)
            ts.expect("=")
            p = int(ts.expect("int").value)
            ts.expect(";")
            kw = ts.expect("ident")
            if kw.value != "vars":
                raise ParseError("expected 'vars='", kw.line, kw.column)
            ts.expect("=")
            names = [ts.expect("ident").value]
            while ts.peek() is not None and ts.peek().kind == ",":
                ts.next()
                names.append(ts.expect("ident").value)
            try:
                ring = RingContext(p, tuple(names))
            except FieldPolyError as exc:
                raise ParseError(str(exc), tok.line, tok.column) from None
        elif tok.value == "order":
            if order is not None:
                raise ParseError("duplicate order declaration", tok.line, tok.column)
            ts.expect(":")
            kind = ts.expect("ident")
            if kind.value in ("lex", "grevlex"):
                order = MonomialOrder(kind.value)
            elif kind.value == "weight":
                ts.expect("(")
                ws = [int(ts.expect("int").value)]
                while ts.peek() is not None and ts.peek().kind == ",":
                    ts.next()
                    ws.append(int(ts.expect("int").value))
                ts.expect(";")
                kw = ts.expect("ident")
                if kw.value != "tie":
                    raise ParseError("expected 'tie='", kw.line, kw.column)
                ts.expect("=")
                tie = ts.expect("ident")
                if tie.value not in ("lex", "grevlex"):
                    raise ParseError("tiebreak must be lex or grevlex", tie.line, tie.column)
                ts.expect(")")
                try:
                    order = weight_order(tuple(ws), tie.value)
                except FieldPolyError as exc:
                    raise ParseError(str(exc), kind.line, kind.column) from None
            else:
                raise ParseError(f"unknown order {kind.value!r}", kind.line, kind.column)
        elif tok.value == "weight":
            if weights is not None:
                raise ParseError("duplicate weight declaration", tok.line, tok.column)
            ts.expect(":")
            ws = [int(ts.expect("int").value)]
            while ts.peek() is not None and ts.peek().kind == ",":
                ts.next()
                ws.append(int(ts.expect("int").value))
            weights = tuple(ws)
        elif tok.value == "ideal":
            r = need_ring(tok)
            name = ts.expect("ident").value
            if name in ideals:
                raise ParseError(f"duplicate ideal {name!r}", tok.line, tok.column)
            ts.expect(":")
            gens = [parse_polynomial_stream(r, ts)]
            while ts.peek() is not None and ts.peek().kind == ",":
                ts.next()
                gens.append(parse_polynomial_stream(r, ts))
            ts.expect(";")
            ideals[name] = IdealPresentation(r, tuple(gens))
        elif tok.value == "witness":
            r = need_ring(tok)
            name = ts.expect("ident").value
            ts.expect(":")
            w = parse_polynomial_stream(r, ts)
            ts.expect(";")
            witnesses[name] = w
        else:
            raise ParseError(f"unknown statement {tok.value!r}", tok.line, tok.column)

    if ring is None:
        raise ParseError("no ring declaration", 1, 1)
    if order is None:
        order = grevlex()
    for name in witnesses:
        if name not in ideals:
            raise ParseError(f"witness for undeclared ideal {name!r}", 1, 1)
    if weights is not None and len(weights) != ring.n:
        raise ParseError("weight vector length does not match the ring", 1, 1)
    return ProblemFile(ring, order, ideals, witnesses, weights)


def problem_text(pf: ProblemFile) -> str:
    """Canonical rendering; parse(problem_text(pf)) == pf."""
    lines = [
        f"ring: p={pf.ring.p}; vars={','.join(pf.ring.names)}",
        f"order: {pf.order.text()}",
    ]
    if pf.weights is not None:
        lines.append(f"weight: {','.join(map(str, pf.weights))}")
    for name, I in pf.ideals.items():
        gens = ", ".join(g.text(pf.order) for g in I.generators)
        lines.append(f"ideal {name}: {gens};")
    for name, w in pf.witnesses.items():
        lines.append(f"witness {name}: {w.text(pf.order)};")
    return "\n".join(lines) + "\n"


# -- dispatch -------------------------------------------------------------------


@dataclass
class Outcome:
    exit_code: int
    human: str
    result: dict


def _budget(args) -> Budget:
    pairs = args.budget_pairs
    if pairs is None:
        env = os.environ.get(BUDGET_ENV_VAR)
        pairs = int(env) if env else DEFAULT_MAX_PAIRS
    return Budget(max_pairs=pairs)


def _load(args) -> ProblemFile:
    try:
        text = open(args.problem, "r", encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"cannot read problem file: {exc}") from None
    pf = parse_problem(text)
    if args.order:
        pf.order = parse_order(args.order)
    if getattr(args, "weight", None):
        pf.weights = tuple(int(x) for x in args.weight.split(","))
        if len(pf.weights) != pf.ring.n:
            raise InputError("weight vector length does not match the ring")
    return pf


def _parse_poly(pf: ProblemFile, text: str) -> Polynomial:
    return pf.ring.parse(text)


def _gens(I: IdealPresentation, order) -> list[str]:
    return [g.text(order) for g in I.generators]


def _weights_for(pf: ProblemFile) -> tuple:
    if pf.weights is None:
        raise InputError("no weight vector: add a 'weight:' line or pass --weight")
    return pf.weights


def _maybe_write_cert(args, cert: criteria.Certificate) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(cert.to_json())


def _cert_outcome(args, cert: criteria.Certificate, budget, extra: dict | None = None,
                  exit_code: int = 0, headline: str = "") -> Outcome:
    verified = None
    if args.verify:
        verified = criteria.verify_certificate(cert, budget)
    _maybe_write_cert(args, cert)
    result = {"certificate": cert.data}
    if extra:
        result.update(extra)
    if verified is not None:
        result["verified"] = verified
    lines = [headline] if headline else []
    lines.append(f"certificate kind: {cert.kind}")
    for key, val in cert.data["conclusion"].items():
        lines.append(f"  {key}: {val}")
    if verified is not None:
        lines.append(f"verified by replay: {verified}")
    if getattr(args, "out", None):
        lines.append(f"certificate written to {args.out}")
    return Outcome(exit_code, "\n".join(lines), result)


def cmd_gb(args) -> Outcome:
    pf = _load(args)
    name, I = pf.ideal(args.ideal)
    gb = reduced_gb(I, pf.order, _budget(args))
    basis = [g.text(pf.order) for g in gb.elements]
    human = [f"reduced Groebner basis of {name} ({len(basis)} elements, order {pf.order.text()}):"]
    human += [f"  {t}" for t in basis]
    return Outcome(0, "\n".join(human), {"ideal": name, "order": pf.order.text(), "basis": basis})


def cmd_nf(args) -> Outcome:
    pf = _load(args)
    name, I = pf.ideal(args.ideal)
    f = _parse_poly(pf, args.poly)
    gb = reduced_gb(I, pf.order, _budget(args))
    r = normal_form(f, gb.elements, pf.order) if gb.elements else f
    return Outcome(
        0,
        f"normal form of {f.text(pf.order)} modulo {name}: {r.text(pf.order)}",
        {"ideal": name, "poly": f.text(pf.order), "normal_form": r.text(pf.order)},
    )


def cmd_initial(args) -> Outcome:
    pf = _load(args)
    name, I = pf.ideal(args.ideal)
    M = initial_ideal(I, pf.order, _budget(args))
    gens = [m.text() for m in M.generators]
    sqf = M.is_squarefree()
    human = [f"initial ideal of {name} (order {pf.order.text()}):"]
    human += [f"  {t}" for t in gens]
    human.append(f"squarefree: {sqf}")
    return Outcome(0, "\n".join(human), {"ideal": name, "generators": gens, "squarefree": sqf})


def cmd_member(args) -> Outcome:
    pf = _load(args)
    name, I = pf.ideal(args.ideal)
    f = _parse_poly(pf, args.poly)
    got = member(f, I, pf.order, _budget(args))
    return Outcome(
        0 if got else 1,
        f"{f.text(pf.order)} in {name}: {got}",
        {"ideal": name, "poly": f.text(pf.order), "member": got},
    )


def _two_ideals(pf: ProblemFile, spec: str | None):
    if spec:
        names = spec.split(",")
        if len(names) != 2:
            raise InputError("--ideals expects two comma-separated names")
    else:
        names = list(pf.ideals)[:2]
        if len(names) < 2:
            raise InputError("need two ideals in the problem file")
    pairs = [pf.ideal(n.strip()) for n in names]
    return pairs[0], pairs[1]


def cmd_intersect(args) -> Outcome:
    pf = _load(args)
    (na, A), (nb, B) = _two_ideals(pf, args.ideals)
    R = ideal_ops.intersect(A, B, pf.order, _budget(args))
    gens = _gens(R, pf.order)
    return Outcome(
        0,
        f"{na} ∩ {nb}:\n" + "\n".join(f"  {t}" for t in gens),
        {"ideals": [na, nb], "generators": gens},
    )


def cmd_colon(args) -> Outcome:
    pf = _load(args)
    name, I = pf.ideal(args.ideal)
    budget = _budget(args)
    if args.by_ideal:
        jname, J = pf.ideal(args.by_ideal)
        R = ideal_ops.colon_ideal(I, J, pf.order, budget)
        by = jname
    elif args.by:
        f = _parse_poly(pf, args.by)
        R = ideal_ops.colon(I, f, pf.order, budget)
        by = f.text(pf.order)
    else:
        raise InputError("colon needs --by POLY or --by-ideal NAME")
    gens = _gens(R, pf.order)
    return Outcome(
        0,
        f"{name} : {by}\n" + "\n".join(f"  {t}" for t in gens),
        {"ideal": name, "by": by, "generators": gens},
    )


def cmd_saturate(args) -> Outcome:
    pf = _load(args)
    name, I = pf.ideal(args.ideal)
    f = _parse_poly(pf, args.by)
    R = ideal_ops.saturate(I, f, pf.order, _budget(args))
    gens = _gens(R, pf.order)
    k = R.provenance["saturation_exponent"]
    return Outcome(
        0,
        f"{name} : ({f.text(pf.order)})^inf  [stabilized after {k} colon steps]\n"
        + "\n".join(f"  {t}" for t in gens),
        {"ideal": name, "by": f.text(pf.order), "generators": gens, "saturation_exponent": k},
    )


def cmd_power(args) -> Outcome:
    pf = _load(args)
    name, I = pf.ideal(args.ideal)
    R = ideal_ops.power(I, args.m)
    gens = _gens(R, pf.order)
    return Outcome(
        0,
        f"{name}^{args.m}:\n" + "\n".join(f"  {t}" for t in gens),
        {"ideal": name, "m": args.m, "generators": gens},
    )


def cmd_bracket_power(args) -> Outcome:
    pf = _load(args)
    name, I = pf.ideal(args.ideal)
    R = ideal_ops.bracket_power(I, args.e)
    gens = _gens(R, pf.order)
    q = pf.ring.p ** args.e
    return Outcome(
        0,
        f"{name}^[{q}]:\n" + "\n".join(f"  {t}" for t in gens),
        {"ideal": name, "e": args.e, "generators": gens},
    )


def _witness_for(pf: ProblemFile, args, name: str) -> Polynomial:
    if getattr(args, "witness", None):
        return _parse_poly(pf, args.witness)
    if name in pf.witnesses:
        return pf.witnesses[name]
    raise InputError(f"no witness for ideal {name!r}: add a witness line or pass --witness")


def cmd_symbolic(args) -> Outcome:
    pf = _load(args)
    name, P = pf.ideal(args.ideal)
    g = _witness_for(pf, args, name)
    R = ideal_ops.symbolic_power_prime(P, args.m, g, pf.order, _budget(args))
    gens = _gens(R, pf.order)
    return Outcome(
        0,
        f"{name}^({args.m}) relative to witness {g.text(pf.order)}:\n"
        + "\n".join(f"  {t}" for t in gens),
        {
            "ideal": name,
            "m": args.m,
            "witness": g.text(pf.order),
            "generators": gens,
            "saturation_exponent": R.provenance["saturation_exponent"],
        },
    )


def cmd_homogenize(args) -> Outcome:
    pf = _load(args)
    name, I = pf.ideal(args.ideal)
    w = _weights_for(pf)
    H = ideal_ops.homogenize_w(I, w, pf.order, _budget(args))
    gens = _gens(H, pf.order)
    return Outcome(
        0,
        f"weight homogenization of {name} (weights {','.join(map(str, w))}, "
        f"new variable {H.ring.names[-1]}):\n" + "\n".join(f"  {t}" for t in gens),
        {
            "ideal": name,
            "weights": list(w),
            "variables": list(H.ring.names),
            "generators": gens,
        },
    )


def cmd_fibers(args) -> Outcome:
    pf = _load(args)
    name, I = pf.ideal(args.ideal)
    w = _weights_for(pf)
    budget = _budget(args)
    cert = criteria.deformation_fibers(I, w, pf.order, budget)
    return _cert_outcome(args, cert, budget, extra={"ideal": name},
                         headline=f"deformation fibers of {name}: both checks passed")


def cmd_dim(args) -> Outcome:
    pf = _load(args)
    name, I = pf.ideal(args.ideal)
    M = initial_ideal(I, pf.order, _budget(args))
    dim = ideal_ops.monomial_dimension(M)
    height = pf.ring.n - dim
    return Outcome(
        0,
        f"dim S/in({name}) = {dim}, height = {height}",
        {
            "ideal": name,
            "initial_generators": [m.text() for m in M.generators],
            "dimension": dim,
            "height": height,
        },
    )


def cmd_trace(args) -> Outcome:
    pf = _load(args)
    g = _parse_poly(pf, args.poly)
    t = frobenius.trace(g)
    return Outcome(
        0,
        f"trace({g.text(pf.order)}) = {t.text(pf.order)}",
        {"poly": g.text(pf.order), "trace": t.text(pf.order)},
    )


def cmd_star(args) -> Outcome:
    pf = _load(args)
    f = _parse_poly(pf, args.poly)
    g = _parse_poly(pf, args.on)
    v = frobenius.star_apply(f, g)
    return Outcome(
        0,
        f"({f.text(pf.order)} * trace)({g.text(pf.order)}) = {v.text(pf.order)}",
        {"carrier": f.text(pf.order), "arg": g.text(pf.order), "value": v.text(pf.order)},
    )


def cmd_is_splitting(args) -> Outcome:
    pf = _load(args)
    f = _parse_poly(pf, args.poly)
    chk = frobenius.is_splitting(f)
    result = {
        "poly": f.text(pf.order),
        "splitting": chk.ok,
        "violation": chk.violation.text() if chk.violation else None,
        "reason": chk.reason,
    }
    human = f"{f.text(pf.order)} * trace is an F-splitting: {chk.ok}"
    if not chk.ok:
        human += f"\n  violation: {chk.violation.text()} ({chk.reason})"
    return Outcome(0 if chk.ok else 1, human, result)


def cmd_fedder(args) -> Outcome:
    pf = _load(args)
    name, I = pf.ideal(args.ideal)
    f = _parse_poly(pf, args.poly)
    got = frobenius.fedder_membership(f, I, pf.order, _budget(args))
    return Outcome(
        0 if got else 1,
        f"{f.text(pf.order)} in {name}^[p] : {name}: {got}",
        {"ideal": name, "poly": f.text(pf.order), "member": got},
    )


def cmd_compatible(args) -> Outcome:
    pf = _load(args)
    name, J = pf.ideal(args.ideal)
    f = _parse_poly(pf, args.poly)
    got = frobenius.compatible_check(f, J, pf.order, _budget(args))
    return Outcome(
        0 if got else 1,
        f"({f.text(pf.order)} * trace)({name}) ⊆ {name}: {got}",
        {"ideal": name, "poly": f.text(pf.order), "compatible": got},
    )


def cmd_fsplit(args) -> Outcome:
    pf = _load(args)
    name, I = pf.ideal(args.ideal)
    budget = _budget(args)
    cert = criteria.fsplit_certificate(I, pf.order, budget)
    split = cert.data["conclusion"]["f_split"]
    return _cert_outcome(
        args, cert, budget, extra={"ideal": name},
        exit_code=0 if split else 1,
        headline=f"S/{name} F-split: {split}",
    )


def cmd_charp_cert(args) -> Outcome:
    pf = _load(args)
    name, I = pf.ideal(args.ideal)
    budget = _budget(args)
    res = criteria.charp_certificate(I, pf.order, budget)
    if isinstance(res, criteria.NotFound):
        return Outcome(
            1,
            f"no certificate: {res.reason}\n  details: {json.dumps(res.details)}",
            {"ideal": name, "not_found": {"reason": res.reason, "details": res.details}},
        )
    return _cert_outcome(args, res, budget, extra={"ideal": name},
                         headline=f"certificate found for {name}")


def cmd_symb_cert(args) -> Outcome:
    pf = _load(args)
    if args.ideals:
        names = [n.strip() for n in args.ideals.split(",")]
    else:
        names = list(pf.ideals)
    primes = []
    for n in names:
        _, P = pf.ideal(n)
        primes.append((P, _witness_for(pf, args, n)))
    budget = _budget(args)
    res = criteria.symb_certificate(primes, pf.order, budget)
    if isinstance(res, criteria.NotFound):
        return Outcome(
            1,
            f"no certificate: {res.reason}\n  details: {json.dumps(res.details)}",
            {"ideals": names, "not_found": {"reason": res.reason, "details": res.details}},
        )
    return _cert_outcome(args, res, budget, extra={"ideals": names},
                         headline=f"certificate found for intersection of {', '.join(names)}")


def cmd_verify_cert(args) -> Outcome:
    try:
        text = open(args.certificate, "r", encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"cannot read certificate file: {exc}") from None
    try:
        cert = criteria.Certificate.from_json(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid certificate JSON: {exc}") from None
    report = criteria.replay(cert, _budget(args))
    steps = [
        {"index": s.index, "op": s.op, "recorded_ok": s.recorded_ok, "recomputed_ok": s.recomputed_ok}
        for s in report.steps
    ]
    human = [f"certificate kind: {cert.kind}", f"steps replayed: {len(steps)}"]
    for s in report.steps:
        mark = "ok" if (s.consistent and s.recomputed_ok) else "MISMATCH"
        human.append(f"  [{s.index}] {s.op}: {mark}")
    human.append(f"verified: {report.ok}")
    return Outcome(
        0 if report.ok else 1,
        "\n".join(human),
        {"kind": cert.kind, "verified": report.ok, "steps": steps},
    )


_HANDLERS = {
    "gb": cmd_gb,
    "nf": cmd_nf,
    "initial": cmd_initial,
    "member": cmd_member,
    "intersect": cmd_intersect,
    "colon": cmd_colon,
    "saturate": cmd_saturate,
    "power": cmd_power,
    "bracket-power": cmd_bracket_power,
    "symbolic": cmd_symbolic,
    "homogenize": cmd_homogenize,
    "fibers": cmd_fibers,
    "dim": cmd_dim,
    "trace": cmd_trace,
    "star": cmd_star,
    "is-splitting": cmd_is_splitting,
    "fedder": cmd_fedder,
    "compatible": cmd_compatible,
    "fsplit": cmd_fsplit,
    "charp-cert": cmd_charp_cert,
    "symb-cert": cmd_symb_cert,
    "verify-cert": cmd_verify_cert,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="frobsplit",
        description="Groebner bases over prime fields and Frobenius-splitting "
        "certificates for squarefree initial ideals.",
    )
    parser.add_argument("--version", action="version", version=f"frobsplit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, problem=True):
        if problem:
            sp.add_argument("problem", help="problem file")
            sp.add_argument("--order", help="override the order (lex, grevlex, weight(...; tie=...))")
        sp.add_argument("--json", action="store_true", help="emit a JSON envelope")
        sp.add_argument(
            "--budget-pairs",
            type=int,
            default=None,
            help=f"Buchberger pair budget (default {DEFAULT_MAX_PAIRS}, or ${BUDGET_ENV_VAR})",
        )

    def ideal_arg(sp):
        sp.add_argument("--ideal", default=None, help="ideal name (default: first in file)")

    def cert_args(sp):
        sp.add_argument("--out", default=None, help="write the certificate JSON to this file")
        sp.add_argument("--verify", action="store_true", help="replay the certificate before reporting")

    sp = sub.add_parser("gb", help="reduced Groebner basis")
    common(sp); ideal_arg(sp)
    sp = sub.add_parser("nf", help="normal form of a polynomial")
    common(sp); ideal_arg(sp)
    sp.add_argument("--poly", required=True)
    sp = sub.add_parser("initial", help="initial ideal (minimal monomial generators)")
    common(sp); ideal_arg(sp)
    sp = sub.add_parser("member", help="ideal membership")
    common(sp); ideal_arg(sp)
    sp.add_argument("--poly", required=True)
    sp = sub.add_parser("intersect", help="intersection of two ideals")
    common(sp)
    sp.add_argument("--ideals", default=None, help="two comma-separated ideal names")
    sp = sub.add_parser("colon", help="colon by a polynomial or an ideal")
    common(sp); ideal_arg(sp)
    sp.add_argument("--by", default=None, help="colon by this polynomial")
    sp.add_argument("--by-ideal", default=None, help="colon by this ideal")
    sp = sub.add_parser("saturate", help="saturation by a polynomial")
    common(sp); ideal_arg(sp)
    sp.add_argument("--by", required=True)
    sp = sub.add_parser("power", help="ordinary ideal power")
    common(sp); ideal_arg(sp)
    sp.add_argument("-m", type=int, required=True)
    sp = sub.add_parser("bracket-power", help="Frobenius bracket power I^[p^e]")
    common(sp); ideal_arg(sp)
    sp.add_argument("-e", type=int, default=1)
    sp = sub.add_parser("symbolic", help="symbolic power of a prime (witness-relative)")
    common(sp); ideal_arg(sp)
    sp.add_argument("-m", type=int, required=True)
    sp.add_argument("--witness", default=None)
    sp = sub.add_parser("homogenize", help="weight homogenization")
    common(sp); ideal_arg(sp)
    sp.add_argument("--weight", default=None, help="comma-separated weights")
    sp = sub.add_parser("fibers", help="deformation fiber certificate")
    common(sp); ideal_arg(sp); cert_args(sp)
    sp.add_argument("--weight", default=None, help="comma-separated weights")
    sp = sub.add_parser("dim", help="dimension/height via the initial ideal")
    common(sp); ideal_arg(sp)
    sp = sub.add_parser("trace", help="trace map of a polynomial")
    common(sp)
    sp.add_argument("--poly", required=True)
    sp = sub.add_parser("star", help="apply carrier * trace to a polynomial")
    common(sp)
    sp.add_argument("--poly", required=True, help="carrier polynomial")
    sp.add_argument("--on", required=True, help="argument polynomial")
    sp = sub.add_parser("is-splitting", help="check the two splitting conditions")
    common(sp)
    sp.add_argument("--poly", required=True)
    sp = sub.add_parser("fedder", help="membership in the Fedder colon I^[p] : I")
    common(sp); ideal_arg(sp)
    sp.add_argument("--poly", required=True)
    sp = sub.add_parser("compatible", help="direct compatibility check by coset enumeration")
    common(sp); ideal_arg(sp)
    sp.add_argument("--poly", required=True)
    sp = sub.add_parser("fsplit", help="graded Fedder test for F-splitness of S/I")
    common(sp); ideal_arg(sp); cert_args(sp)
    sp = sub.add_parser("charp-cert", help="squarefree-initial-ideal certificate via the Fedder colon")
    common(sp); ideal_arg(sp); cert_args(sp)
    sp = sub.add_parser("symb-cert", help="squarefree-initial-ideal certificate via symbolic powers")
    common(sp); cert_args(sp)
    sp.add_argument("--ideals", default=None, help="comma-separated prime names (default: all)")
    sp.add_argument("--witness", default=None, help="witness override (single-prime runs)")
    sp = sub.add_parser("verify-cert", help="replay a certificate's verification log")
    sp.add_argument("certificate", help="certificate JSON file")
    common(sp, problem=False)

    return parser


def _emit(args, command: str, outcome: Outcome) -> int:
    if args.json:
        envelope = {
            "command": command,
            "ok": outcome.exit_code == 0,
            "exit_code": outcome.exit_code,
            "result": outcome.result,
        }
        sys.stdout.write(json.dumps(envelope, indent=2) + "\n")
    else:
        sys.stdout.write(outcome.human + "\n")
    return outcome.exit_code


def _emit_error(args, command: str, exc: Exception, code: int) -> int:
    if getattr(args, "json", False):
        envelope = {
            "command": command,
            "ok": False,
            "exit_code": code,
            "error": {"type": type(exc).__name__, "message": str(exc)},
        }
        sys.stdout.write(json.dumps(envelope, indent=2) + "\n")
    else:
        sys.stderr.write(f"error: {exc}\n")
    return code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = args.command
    handler = _HANDLERS[command]
    try:
        outcome = handler(args)
    except ResourceLimitError as exc:
        return _emit_error(args, command, exc, 3)
    except (FieldPolyError, criteria.InconsistentInputError, ValueError) as exc:
        return _emit_error(args, command, exc, 2)
    return _emit(args, command, outcome)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
