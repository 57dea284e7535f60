"""Certificate pipelines for squarefree initial ideals.

Three producers and a replayer:

* :func:`charp_certificate` looks for a reduced-basis element of the Fedder
  colon ``I^[p] : I`` whose leading monomial divides the top monomial
  ``x_1^(p-1)...x_n^(p-1)``; such an element certifies that the initial ideal
  of I is squarefree.
* :func:`symb_certificate` takes a radical ideal presented as primes with
  witnesses, forms the h-th symbolic power (h the maximal height, read off
  initial-ideal dimensions), and looks for a squarefree leading monomial in
  its reduced basis; success certifies that the initial ideal of the
  intersection is squarefree.
* :func:`deformation_fibers` certifies the two fibers of the weight
  homogenization: the special fiber is the weight-initial ideal, the general
  fiber is I itself.
* :func:`fsplit_certificate` records the graded Fedder test verdict.

A certificate is a JSON-ready record: ring, order, named ideals in canonical
text, a witness, and an ordered verification log of typed steps.  Replaying
the log recomputes every step from the embedded inputs, so no trust in the
producer is required.  Both sufficient-condition pipelines always re-check
their conclusion directly; a hit with a failing conclusion aborts (for the
colon pipeline that is an internal error, for the symbolic pipeline it means
the caller's primality assertion was wrong).
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass

from ._version import __version__
from .field_poly import (
    FieldPolyError,
    Monomial,
    Polynomial,
    RingContext,
    order_for_weight_refinement,
    parse_order,
    validate_weights,
)
from .groebner import (
    Budget,
    IdealPresentation,
    MonomialIdeal,
    ideals_equal,
    member,
    reduced_gb,
)
from .ideal_ops import (
    bracket_of_variables,
    dehomogenize_ideal,
    fiber_at_zero,
    homogenize_w,
    initial_forms_ideal,
    intersect,
    is_weight_homogeneous,
    monomial_dimension,
    symbolic_power_prime,
)
from .frobenius import fedder_colon, fsplit_graded_test, top_monomial

FIELD_NOTE = (
    "computed over the prime field; reduced Groebner bases do not change "
    "under field extension, so the conclusion holds over any field of this "
    "characteristic"
)


class SoundnessError(RuntimeError):
    """A sufficient condition held but its guaranteed conclusion failed."""


class InconsistentInputError(FieldPolyError):
    """A caller assertion (primality of an input ideal) was contradicted."""


@dataclass(frozen=True)
class NotFound:
    """The sufficient condition did not hold; not a negative verdict."""

    reason: str
    details: dict

    def __bool__(self):
        return False


class Certificate:
    """A re-verifiable record of one criterion application."""

    def __init__(self, data: dict):
        self.data = data

    @property
    def kind(self) -> str:
        return self.data["kind"]

    @property
    def conclusion(self) -> dict:
        return self.data["conclusion"]

    def to_json(self) -> str:
        return json.dumps(self.data, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls(json.loads(text))

    def __eq__(self, other):
        return isinstance(other, Certificate) and self.data == other.data

    def __bool__(self):
        return True


# -- construction helpers -------------------------------------------------------


def _ring_dict(ring: RingContext) -> dict:
    return {"p": ring.p, "vars": list(ring.names)}


def _ideal_entry(I: IdealPresentation, order, where: str = "base") -> dict:
    return {"ring": where, "generators": [g.text(order) for g in I.generators]}


def _digest(order_text: str, entry: dict) -> str:
    blob = json.dumps({"order": order_text, "ideal": entry}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def _step(op: str, args: dict, expect: dict) -> dict:
    return {"op": op, "args": args, "expect": expect, "ok": True}


def _base_data(kind: str, ring: RingContext, order) -> dict:
    return {
        "kind": kind,
        "library_version": __version__,
        "ring": _ring_dict(ring),
        "order": order.text(),
        "ideals": {},
        "digests": {},
        "witness": {},
        "steps": [],
        "conclusion": {},
    }


def _add_ideal(data: dict, name: str, I: IdealPresentation, order, where: str = "base"):
    entry = _ideal_entry(I, order, where)
    data["ideals"][name] = entry
    data["digests"][name] = _digest(data["order"], entry)


# -- producers -------------------------------------------------------------------


def charp_certificate(
    I: IdealPresentation, order, budget: Budget | None = None
) -> Certificate | NotFound:
    """Squarefree-initial-ideal certificate through the Fedder colon."""
    ring = I.ring
    if I.is_zero:
        raise FieldPolyError("the zero ideal has no Fedder colon")
    top = top_monomial(ring)
    C = fedder_colon(I, order, budget)
    gbC = reduced_gb(C, order, budget)
    in_c = [g.leading_monomial(order) for g in gbC.elements]
    hit = None
    for g in gbC.elements:
        if g.leading_monomial(order).divides(top):
            hit = g
            break
    if hit is None:
        return NotFound(
            "no minimal generator of the initial ideal of I^[p] : I divides "
            "the top monomial",
            {
                "initial_generators": [m.text() for m in in_c],
                "target": top.text(),
            },
        )
    gbI = reduced_gb(I, order, budget)
    leads = [g.leading_monomial(order) for g in gbI.elements]
    if not all(m.is_squarefree() for m in leads):
        raise SoundnessError(
            "Fedder-colon condition held but the initial ideal of I is not "
            "squarefree; this contradicts the criterion and indicates a bug"
        )

    data = _base_data("CharP", ring, order)
    _add_ideal(data, "I", I, order)
    _add_ideal(data, "C", IdealPresentation(ring, gbC.elements), order)
    lm = hit.leading_monomial(order)
    data["witness"] = {
        "poly": hit.text(order),
        "leading_monomial": lm.text(),
        "target": top.text(),
    }
    data["steps"] = [
        _step("bracket_colon", {"ideal": "I"}, {"ideal_equal": "C"}),
        _step(
            "initial_generators",
            {"ideal": "C"},
            {"monomials": [m.text() for m in in_c]},
        ),
        _step("membership", {"poly": hit.text(order), "ideal": "C"}, {"member": True}),
        _step(
            "leading_monomial",
            {"poly": hit.text(order)},
            {"monomial": lm.text()},
        ),
        _step(
            "divides",
            {"divisor": lm.text(), "multiple": top.text()},
            {"divides": True},
        ),
        _step(
            "squarefree_initial",
            {"ideal": "I"},
            {"monomials": [m.text() for m in leads], "all_squarefree": True},
        ),
    ]
    data["conclusion"] = {
        "claim": "the initial ideal of I is generated by squarefree monomials",
        "initial_generators": [m.text() for m in leads],
        "field_note": FIELD_NOTE,
    }
    return Certificate(data)


def symb_certificate(
    primes, order, budget: Budget | None = None
) -> Certificate | NotFound:
    """Squarefree-initial-ideal certificate through symbolic powers.

    ``primes`` is a sequence of (prime presentation, witness) pairs; the
    caller asserts primality, witnesses are verified to avoid their primes.
    """
    primes = list(primes)
    if not primes:
        raise FieldPolyError("at least one prime is required")
    ring = primes[0][0].ring
    for P, _ in primes:
        if P.ring != ring:
            raise FieldPolyError("primes from different rings")
        if P.is_zero:
            raise FieldPolyError("the zero ideal is not an admissible prime input")

    names = [f"P{i + 1}" for i in range(len(primes))]
    heights = []
    per_prime_steps = []
    for name, (P, g) in zip(names, primes):
        if member(g, P, order, budget):
            raise InconsistentInputError(
                f"witness for {name} lies inside the prime it must avoid"
            )
        in_p = MonomialIdeal(ring, tuple(reduced_gb(P, order, budget).leading_monomials()))
        dim = monomial_dimension(in_p)
        h_i = ring.n - dim
        heights.append(h_i)
        per_prime_steps.append((name, P, g, in_p, dim, h_i))
    h = max(heights)

    symb_names = []
    symbolic_powers = []
    for name, P, g, in_p, dim, h_i in per_prime_steps:
        Q = symbolic_power_prime(P, h, g, order, budget)
        symb_names.append(f"{name}_symb")
        symbolic_powers.append(Q)

    Ih = symbolic_powers[0]
    for Q in symbolic_powers[1:]:
        Ih = intersect(Ih, Q, order, budget)

    gb_ih = reduced_gb(Ih, order, budget)
    hit = None
    for f in gb_ih.elements:
        if f.leading_monomial(order).is_squarefree():
            hit = f
            break
    if hit is None:
        return NotFound(
            "no reduced-basis element of the symbolic power has a squarefree "
            "leading monomial",
            {
                "height": h,
                "leading_monomials": [
                    m.text() for m in gb_ih.leading_monomials()
                ],
            },
        )

    Irad = primes[0][0]
    for P, _ in primes[1:]:
        Irad = intersect(Irad, P, order, budget)
    gb_rad = reduced_gb(Irad, order, budget)
    leads = [g.leading_monomial(order) for g in gb_rad.elements]
    if not all(m.is_squarefree() for m in leads):
        raise InconsistentInputError(
            "the symbolic-power condition held but the initial ideal of the "
            "intersection is not squarefree; some input ideal is not prime"
        )

    data = _base_data("Symb", ring, order)
    steps = []
    for name, P, g, in_p, dim, h_i in per_prime_steps:
        _add_ideal(data, name, P, order)
        steps.append(
            _step(
                "membership",
                {"poly": g.text(order), "ideal": name},
                {"member": False},
            )
        )
        steps.append(
            _step(
                "initial_generators",
                {"ideal": name},
                {"monomials": [m.text() for m in in_p.generators]},
            )
        )
        steps.append(
            _step(
                "monomial_dimension",
                {"ideal": name},
                {"dimension": dim, "height": h_i},
            )
        )
    steps.append(
        _step("note", {"text": f"h = max of the heights = {h}"}, {})
    )
    for sname, (name, P, g, in_p, dim, h_i), Q in zip(
        symb_names, per_prime_steps, symbolic_powers
    ):
        _add_ideal(data, sname, IdealPresentation(ring, reduced_gb(Q, order, budget).elements), order)
        steps.append(
            _step(
                "symbolic_power",
                {"ideal": name, "m": h, "witness": g.text(order)},
                {"ideal_equal": sname},
            )
        )
    _add_ideal(data, "I_symb", IdealPresentation(ring, gb_ih.elements), order)
    steps.append(
        _step("intersection", {"ideals": symb_names}, {"ideal_equal": "I_symb"})
    )
    steps.append(
        _step(
            "note",
            {
                "text": "a monomial ideal contains a squarefree monomial iff "
                "one of its minimal generators is squarefree"
            },
            {},
        )
    )
    lm = hit.leading_monomial(order)
    steps.append(
        _step("membership", {"poly": hit.text(order), "ideal": "I_symb"}, {"member": True})
    )
    steps.append(
        _step("leading_monomial", {"poly": hit.text(order)}, {"monomial": lm.text()})
    )
    steps.append(
        _step("squarefree_monomial", {"monomial": lm.text()}, {"squarefree": True})
    )
    _add_ideal(data, "I", IdealPresentation(ring, gb_rad.elements), order)
    steps.append(_step("intersection", {"ideals": names}, {"ideal_equal": "I"}))
    steps.append(
        _step(
            "squarefree_initial",
            {"ideal": "I"},
            {"monomials": [m.text() for m in leads], "all_squarefree": True},
        )
    )
    data["steps"] = steps
    data["witness"] = {
        "poly": hit.text(order),
        "leading_monomial": lm.text(),
        "height": h,
        "prime_witnesses": {
            name: g.text(order) for name, (P, g) in zip(names, primes)
        },
    }
    data["conclusion"] = {
        "claim": "the initial ideal of the intersection of the given primes "
        "is generated by squarefree monomials",
        "initial_generators": [m.text() for m in leads],
        "height": h,
        "field_note": FIELD_NOTE,
    }
    return Certificate(data)


def deformation_fibers(
    I: IdealPresentation, weights, order, budget: Budget | None = None
) -> Certificate:
    """Certificate that the weight homogenization has the two expected fibers."""
    ring = I.ring
    weights = validate_weights(ring, weights)
    worder = order_for_weight_refinement(weights, order)
    gb_w = reduced_gb(I, worder, budget)
    H = homogenize_w(I, weights, order, budget)
    in_w = initial_forms_ideal(I, weights, order, budget)
    fiber0 = fiber_at_zero(H)
    ok_zero = ideals_equal(fiber0, in_w, order, budget)
    dehom = dehomogenize_ideal(H)
    ok_one = ideals_equal(dehom, I, order, budget)
    ok_hom = all(is_weight_homogeneous(F, weights) for F in H.generators)
    if not (ok_zero and ok_one and ok_hom):
        raise SoundnessError(
            "homogenization fiber checks failed; this contradicts the "
            "construction and indicates a bug"
        )

    data = _base_data("Deformation", ring, order)
    data["extended_ring"] = {"vars": list(H.ring.names)}
    data["weights"] = list(weights)
    _add_ideal(data, "I", I, order)
    _add_ideal(data, "W", IdealPresentation(ring, gb_w.elements), order)
    _add_ideal(data, "InW", in_w, order)
    _add_ideal(data, "H", H, order, where="extended")
    data["steps"] = [
        _step(
            "weight_gb",
            {"ideal": "I", "weights": list(weights)},
            {"ideal_equal": "W"},
        ),
        _step(
            "initial_forms",
            {"ideal": "I", "weights": list(weights)},
            {"ideal_equal": "InW"},
        ),
        _step(
            "homogenize",
            {"ideal": "I", "weights": list(weights)},
            {"ideal_equal": "H"},
        ),
        _step("fiber_zero", {"ideal": "H"}, {"ideal_equal": "InW"}),
        _step("dehomogenize", {"ideal": "H"}, {"ideal_equal": "I"}),
        _step(
            "w_homogeneous",
            {"ideal": "H", "weights": list(weights)},
            {"homogeneous": True},
        ),
    ]
    data["witness"] = {"weights": list(weights)}
    data["conclusion"] = {
        "claim": "the homogenized ideal defines a one-parameter family whose "
        "special fiber is the weight-initial ideal and whose general fiber "
        "is I",
        "special_fiber": [g.text(order) for g in reduced_gb(in_w, order, budget).elements],
    }
    return Certificate(data)


def fsplit_certificate(
    I: IdealPresentation, order, budget: Budget | None = None
) -> Certificate:
    """Certificate for the graded Fedder test (either verdict)."""
    ring = I.ring
    outcome = fsplit_graded_test(I, order, budget)
    data = _base_data("FSplit", ring, order)
    _add_ideal(data, "I", I, order)
    C = outcome.colon
    _add_ideal(
        data, "C", IdealPresentation(ring, reduced_gb(C, order, budget).elements), order
    )
    steps = [_step("bracket_colon", {"ideal": "I"}, {"ideal_equal": "C"})]
    if outcome.split:
        steps.append(
            _step(
                "membership",
                {"poly": outcome.witness.text(order), "ideal": "C"},
                {"member": True},
            )
        )
        steps.append(
            _step(
                "outside_variable_bracket",
                {"poly": outcome.witness.text(order)},
                {"outside": True},
            )
        )
        data["witness"] = {"poly": outcome.witness.text(order)}
    else:
        steps.append(
            _step(
                "contained_in_variable_bracket",
                {"ideal": "C"},
                {"contained": True},
            )
        )
        data["witness"] = {}
    data["steps"] = steps
    data["conclusion"] = {
        "f_split": outcome.split,
        "claim": (
            "the quotient by I is F-split"
            if outcome.split
            else "the quotient by I is not F-split: the Fedder colon lies "
            "inside the bracket of the variables"
        ),
    }
    return Certificate(data)


# -- replay -----------------------------------------------------------------------


@dataclass
class StepReplay:
    index: int
    op: str
    recorded_ok: bool
    recomputed_ok: bool
    detail: str = ""

    @property
    def consistent(self) -> bool:
        return self.recorded_ok == self.recomputed_ok


@dataclass
class VerificationReport:
    ok: bool
    steps: list

    def __bool__(self):
        return self.ok


class _ReplayContext:
    def __init__(self, data: dict, budget: Budget | None):
        self.data = data
        self.budget = budget
        self.ring = RingContext(data["ring"]["p"], tuple(data["ring"]["vars"]))
        self.order = parse_order(data["order"])
        ext = data.get("extended_ring")
        if ext is not None:
            names = tuple(ext["vars"])
            if names[:-1] != self.ring.names:
                raise FieldPolyError("extended ring does not extend the base ring")
            self.ext_ring = self.ring.extend(names[-1])
        else:
            self.ext_ring = None
        self.ideals: dict[str, IdealPresentation] = {}
        for name, entry in data["ideals"].items():
            ring = self.ext_ring if entry["ring"] == "extended" else self.ring
            gens = tuple(ring.parse(text) for text in entry["generators"])
            self.ideals[name] = IdealPresentation(ring, gens)
        self.weights = tuple(data["weights"]) if "weights" in data else None

    def ideal(self, name: str) -> IdealPresentation:
        try:
            return self.ideals[name]
        except KeyError:
            raise FieldPolyError(f"certificate references unknown ideal {name!r}") from None

    def poly(self, text: str) -> Polynomial:
        return self.ring.parse(text)

    def monomial(self, text: str) -> Monomial:
        f = self.ring.parse(text)
        terms = f.terms_dict()
        if len(terms) != 1 or list(terms.values()) != [1]:
            raise FieldPolyError(f"{text!r} is not a monomial")
        return Monomial(self.ring, next(iter(terms)))

    def equal(self, A: IdealPresentation, name: str) -> bool:
        return ideals_equal(A, self.ideal(name), self.order, self.budget)


def _replay_step(ctx: _ReplayContext, step: dict) -> tuple[bool, str]:
    op = step["op"]
    args = step["args"]
    expect = step["expect"]
    order = ctx.order
    budget = ctx.budget
    if op == "note":
        return True, ""
    if op == "bracket_colon":
        C = fedder_colon(ctx.ideal(args["ideal"]), order, budget)
        return ctx.equal(C, expect["ideal_equal"]), "recomputed I^[p] : I"
    if op == "initial_generators":
        gb = reduced_gb(ctx.ideal(args["ideal"]), order, budget)
        got = [m.text() for m in gb.leading_monomials()]
        return got == expect["monomials"], f"initial generators {got}"
    if op == "membership":
        got = member(ctx.poly(args["poly"]), ctx.ideal(args["ideal"]), order, budget)
        return got == expect["member"], f"membership {got}"
    if op == "leading_monomial":
        got = ctx.poly(args["poly"]).leading_monomial(order).text()
        return got == expect["monomial"], f"leading monomial {got}"
    if op == "divides":
        got = ctx.monomial(args["divisor"]).divides(ctx.monomial(args["multiple"]))
        return got == expect["divides"], f"divides {got}"
    if op == "squarefree_monomial":
        got = ctx.monomial(args["monomial"]).is_squarefree()
        return got == expect["squarefree"], f"squarefree {got}"
    if op == "squarefree_initial":
        gb = reduced_gb(ctx.ideal(args["ideal"]), order, budget)
        monos = [m.text() for m in gb.leading_monomials()]
        ok = monos == expect["monomials"] and all(
            m.is_squarefree() for m in gb.leading_monomials()
        ) == expect["all_squarefree"]
        return ok, f"initial generators {monos}"
    if op == "monomial_dimension":
        gb = reduced_gb(ctx.ideal(args["ideal"]), order, budget)
        in_p = MonomialIdeal(ctx.ring, tuple(gb.leading_monomials()))
        dim = monomial_dimension(in_p)
        ok = dim == expect["dimension"] and ctx.ring.n - dim == expect["height"]
        return ok, f"dimension {dim}"
    if op == "symbolic_power":
        Q = symbolic_power_prime(
            ctx.ideal(args["ideal"]), args["m"], ctx.poly(args["witness"]), order, budget
        )
        return ctx.equal(Q, expect["ideal_equal"]), "recomputed symbolic power"
    if op == "intersection":
        acc = None
        for name in args["ideals"]:
            nxt = ctx.ideal(name)
            acc = nxt if acc is None else intersect(acc, nxt, order, budget)
        return ctx.equal(acc, expect["ideal_equal"]), "recomputed intersection"
    if op == "weight_gb":
        worder = order_for_weight_refinement(tuple(args["weights"]), order)
        gb = reduced_gb(ctx.ideal(args["ideal"]), worder, budget)
        W = IdealPresentation(ctx.ring, gb.elements)
        return ctx.equal(W, expect["ideal_equal"]), "recomputed weight basis"
    if op == "initial_forms":
        got = initial_forms_ideal(ctx.ideal(args["ideal"]), tuple(args["weights"]), order, budget)
        return ctx.equal(got, expect["ideal_equal"]), "recomputed initial forms"
    if op == "homogenize":
        H = homogenize_w(ctx.ideal(args["ideal"]), tuple(args["weights"]), order, budget)
        target = ctx.ideal(expect["ideal_equal"])
        ok = ideals_equal(H, target, order, budget) if H.ring == target.ring else False
        return ok, "recomputed homogenization"
    if op == "fiber_zero":
        got = fiber_at_zero(ctx.ideal(args["ideal"]))
        return ctx.equal(got, expect["ideal_equal"]), "recomputed special fiber"
    if op == "dehomogenize":
        got = dehomogenize_ideal(ctx.ideal(args["ideal"]))
        return ctx.equal(got, expect["ideal_equal"]), "recomputed general fiber"
    if op == "w_homogeneous":
        got = all(
            is_weight_homogeneous(F, tuple(args["weights"]))
            for F in ctx.ideal(args["ideal"]).generators
        )
        return got == expect["homogeneous"], f"homogeneous {got}"
    if op == "outside_variable_bracket":
        mbr = bracket_of_variables(ctx.ring)
        got = not mbr.contains_polynomial(ctx.poly(args["poly"]))
        return got == expect["outside"], f"outside {got}"
    if op == "contained_in_variable_bracket":
        mbr = bracket_of_variables(ctx.ring)
        got = all(
            mbr.contains_polynomial(g) for g in ctx.ideal(args["ideal"]).generators
        )
        return got == expect["contained"], f"contained {got}"
    raise FieldPolyError(f"unknown certificate step {op!r}")


def replay(cert: Certificate | dict, budget: Budget | None = None) -> VerificationReport:
    """Re-execute the verification log; report recomputed vs recorded results."""
    data = cert.data if isinstance(cert, Certificate) else cert
    ctx = _ReplayContext(data, budget)
    steps = []
    for i, step in enumerate(data["steps"]):
        ok, detail = _replay_step(ctx, step)
        steps.append(StepReplay(i, step["op"], bool(step["ok"]), ok, detail))
    all_ok = all(s.consistent and s.recomputed_ok for s in steps)
    return VerificationReport(all_ok, steps)


def verify_certificate(cert: Certificate | dict, budget: Budget | None = None) -> bool:
    return replay(cert, budget).ok
