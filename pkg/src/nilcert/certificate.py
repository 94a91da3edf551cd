"""Certificate pipeline for the curve family indexed by ``b0``.

For each ``b0 >= 1`` the affine chart of the curve is the monomial curve
``x = t^3, y = t^(3b0+5), z = t^(3b0+4)``, cut out by the maximal minors of
the 3x2 matrix

    [ z         x^(b0+1) ]
    [ y         z        ]
    [ x^(b0+2)  y        ]

The steps S1..S7 check, by exact computation, that this matrix presents the
chart, that its rows give a chart of the projectivized dualizing module in
which ``x`` is nilpotent of order exactly ``b0 + 1`` after inverting
``x + v^3``, and that the singularity has delta invariant ``2 b0 + 2``.

The witness searches at the bottom make the specialization argument for
nilpotent functions on ``V x A^d`` executable.
"""

from __future__ import annotations

import itertools
import logging
import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .fields import DEFAULT_PRIME, PrimeField, field_from_descriptor
from .groebner import (
    Ideal,
    eliminate,
    hilbert_function,
    ideal_equal,
    ideal_membership,
    nilpotency_order,
    normal_form,
    ring_map_kernel,
    saturate,
)
from .modsyz import (
    ModulePresentation,
    PolyMatrix,
    column_module,
    compose_is_zero,
    maximal_minors,
    module_spans_equal,
    presentation_chart,
    syzygies,
)
from .polyring import Polynomial, PolyRing
from .semigroup import curve_semigroup, genus_delta

log = logging.getLogger(__name__)

STEP_IDS = ("S1", "S2", "S3", "S4", "S5", "S6", "S7")


@dataclass(frozen=True)
class CurveParameters:
    b0: int
    field: object = field(default_factory=lambda: PrimeField(DEFAULT_PRIME))

    def __post_init__(self):
        if not isinstance(self.b0, int) or self.b0 < 1:
            raise ValueError(f"b0 must be an integer >= 1, got {self.b0!r}")
        if isinstance(self.field, str):
            object.__setattr__(self, "field", field_from_descriptor(self.field))
        p = self.field.characteristic
        if p and p <= 3 * self.b0 + 5:
            raise ValueError(f"prime {p} must exceed 3*b0+5 = {3 * self.b0 + 5}")

    @property
    def exponents(self) -> dict[str, int]:
        """t-exponents of x, y, z on the affine chart; also the grading weights."""
        return {"x": 3, "y": 3 * self.b0 + 5, "z": 3 * self.b0 + 4}

    @property
    def weights(self) -> tuple[int, int, int]:
        e = self.exponents
        return (e["x"], e["y"], e["z"])

    @property
    def ring(self) -> PolyRing:
        return PolyRing("x y z", self.field)

    @property
    def parameter_ring(self) -> PolyRing:
        return PolyRing("t", self.field)

    def images(self) -> dict[str, Polynomial]:
        t = self.parameter_ring.var("t")
        return {name: t**k for name, k in self.exponents.items()}

    @property
    def field_name(self) -> str:
        return self.field.descriptor()


def build_matrix_A(params: CurveParameters) -> PolyMatrix:
    b = params.b0
    R = params.ring
    x, y, z = R.gens()
    return PolyMatrix(R, ((z, x ** (b + 1)), (y, z), (x ** (b + 2), y)))


def sabotaged_matrix(params: CurveParameters) -> PolyMatrix:
    """Negative control: the x^(b0+2) entry lowered to x^(b0+1)."""
    x = params.ring.var("x")
    return build_matrix_A(params).replace(2, 0, x ** (params.b0 + 1))


def sign_flipped_matrix(params: CurveParameters) -> PolyMatrix:
    """Negative control: the top-left entry negated."""
    A = build_matrix_A(params)
    return A.replace(0, 0, -A[0, 0])


def reduced_control_matrix(params: CurveParameters) -> PolyMatrix:
    """Negative control whose chart is reduced: rows (z, x), (y, z), (x^2, y)."""
    R = params.ring
    x, y, z = R.gens()
    return PolyMatrix(R, ((z, x), (y, z), (x**2, y)))


def minor_ideal(A: PolyMatrix) -> Ideal:
    return Ideal(A.ring, maximal_minors(A))


def hilbert_burch_row(A: PolyMatrix) -> PolyMatrix:
    m1, m2, m3 = maximal_minors(A)
    return PolyMatrix(A.ring, ((m1, -m2, m3),))


def default_hilbert_bound(params: CurveParameters) -> int:
    return curve_semigroup(params.b0).frobenius_number + 3 * (3 * params.b0 + 5)


# --- report types ------------------------------------------------------------


@dataclass
class StepResult:
    id: str
    statement: str
    passed: bool
    witness: dict
    millis: float = 0.0

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "statement": self.statement,
            "pass": self.passed,
            "witness": self.witness,
            "millis": self.millis,
        }

    @classmethod
    def from_dict(cls, d: dict) -> StepResult:
        return cls(d["id"], d["statement"], d["pass"], d["witness"], d["millis"])


@dataclass
class CertificateReport:
    b0: int
    field: str
    steps: list[StepResult]

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.steps)

    def step(self, step_id: str) -> StepResult:
        for s in self.steps:
            if s.id == step_id:
                return s
        raise KeyError(step_id)

    def to_dict(self) -> dict:
        return {
            "b0": self.b0,
            "field": self.field,
            "steps": [s.to_dict() for s in self.steps],
            "pass": self.passed,
        }

    @classmethod
    def from_dict(cls, d: dict) -> CertificateReport:
        return cls(d["b0"], d["field"], [StepResult.from_dict(s) for s in d["steps"]])

    def without_timing(self) -> dict:
        d = self.to_dict()
        for s in d["steps"]:
            s.pop("millis")
        return d

    def format_text(self, verbose: bool = False) -> str:
        lines = [f"certificate b0={self.b0} field={self.field}"]
        for s in self.steps:
            mark = "PASS" if s.passed else "FAIL"
            lines.append(f"{s.id} {mark}  {s.statement}  ({s.millis:.0f} ms)")
            if verbose or not s.passed:
                for k, v in s.witness.items():
                    lines.append(f"    {k}: {v}")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


@dataclass(frozen=True)
class NilpotencyWitness:
    chart_ideal: Ideal
    f: Polynomial
    g: Polynomial
    order: int | None
    k0: int

    def to_dict(self) -> dict:
        return {
            "chart_ideal": [str(h) for h in self.chart_ideal.generators],
            "f": str(self.f),
            "g": str(self.g),
            "order": self.order,
            "k0": self.k0,
        }


# --- steps -------------------------------------------------------------------


def step_minors_vanish(params: CurveParameters, matrix: PolyMatrix | None = None) -> StepResult:
    A = matrix or build_matrix_A(params)
    images = params.images()
    minors = maximal_minors(A)
    values = [m.substitute(images, params.parameter_ring) for m in minors]
    return StepResult(
        "S1",
        "maximal minors of A vanish under x->t^3, y->t^(3b0+5), z->t^(3b0+4)",
        all(v.is_zero() for v in values),
        {"minors": [str(m) for m in minors], "images": [str(v) for v in values]},
    )


def step_kernel_equals_minors(params: CurveParameters, matrix: PolyMatrix | None = None) -> StepResult:
    A = matrix or build_matrix_A(params)
    kernel = ring_map_kernel(params.ring, params.images(), params.parameter_ring)
    minors = minor_ideal(A)
    return StepResult(
        "S2",
        "kernel of the parameterization equals the ideal of maximal minors",
        ideal_equal(kernel, minors),
        {
            "kernel_basis": [str(g) for g in kernel.groebner_basis],
            "minor_basis": [str(g) for g in minors.groebner_basis],
        },
    )


def step_hilbert_match(
    params: CurveParameters, bound: int | None = None, matrix: PolyMatrix | None = None
) -> StepResult:
    A = matrix or build_matrix_A(params)
    if bound is None:
        bound = default_hilbert_bound(params)
    weights = params.weights
    I = minor_ideal(A)
    S = curve_semigroup(params.b0)
    homogeneous = all(g.weighted_degree(weights) is not None for g in I.groebner_basis)
    mismatches = []
    if homogeneous:
        for n in range(bound + 1):
            lhs = hilbert_function(I, weights, n)
            rhs = 1 if S.contains(n) else 0
            if lhs != rhs:
                mismatches.append([n, lhs, rhs])
    return StepResult(
        "S3",
        f"graded pieces of k[x,y,z]/(minors) and k[t^3,t^(3b0+4),t^(3b0+5)] agree, verified up to degree {bound}",
        homogeneous and not mismatches,
        {"bound": bound, "weights": list(weights), "homogeneous": homogeneous, "mismatches": mismatches},
    )


def step_resolution(params: CurveParameters, matrix: PolyMatrix | None = None, B: PolyMatrix | None = None) -> StepResult:
    A = matrix or build_matrix_A(params)
    B = B or hilbert_burch_row(A)
    composes = compose_is_zero(B, A)
    spans = False
    nsyz = None
    if composes:
        syz = syzygies(list(B.rows[0]))
        nsyz = len(syz.generators)
        spans = module_spans_equal(syz, column_module(A))
    return StepResult(
        "S4",
        "0 -> R^2 -A-> R^3 -B-> R is a complex and the syzygies of B are the columns of A",
        composes and spans,
        {"B": [str(e) for e in B.rows[0]], "BA_zero": composes, "syzygy_generators": nsyz, "syzygies_equal_columns": spans},
    )


def chart_eliminant(params: CurveParameters, matrix: PolyMatrix | None = None) -> Ideal:
    """The chart ring k[x,y,z,v]/(minors, row relations) with y, z eliminated."""
    A = matrix or build_matrix_A(params)
    chart = presentation_chart(ModulePresentation(2, A), 1, "v")
    big = chart.ring
    full = Ideal(big, list(chart.generators) + [m.change_ring(big) for m in maximal_minors(A)])
    return eliminate(full, ["x", "v"])


def expected_eliminant(params: CurveParameters, ring: PolyRing) -> Polynomial:
    x, v = ring.var("x"), ring.var("v")
    return x ** (params.b0 + 1) * (x + v**3)


def step_chart_ideal(params: CurveParameters, matrix: PolyMatrix | None = None) -> StepResult:
    J = chart_eliminant(params, matrix)
    target = expected_eliminant(params, J.ring)
    gb = J.groebner_basis.elements
    ok = len(gb) == 1 and gb[0] == target.monic()
    return StepResult(
        "S5",
        "chart O[v]/(z+v*x^(b0+1), y+v*z, x^(b0+2)+v*y) equals k[x,v]/(x^(b0+1)*(x+v^3))",
        ok,
        {"eliminant": [str(g) for g in gb], "expected": str(target)},
    )


def nilpotency_witness(params: CurveParameters, matrix: PolyMatrix | None = None) -> NilpotencyWitness:
    J = chart_eliminant(params, matrix)
    R = J.ring
    x, v = R.var("x"), R.var("v")
    g = x + v**3
    k0 = saturate(J, g).k0
    order = nilpotency_order(x, J, g, bound=params.b0 + 2)
    return NilpotencyWitness(J, x, g, order, k0)


def step_nilpotency(
    params: CurveParameters, matrix: PolyMatrix | None = None, box: int = 3
) -> tuple[StepResult, NilpotencyWitness]:
    w = nilpotency_witness(params, matrix)
    data = w.to_dict()
    descended = None
    if w.order == params.b0 + 1:
        # re-check f^b0 != 0 on the localized chart through the descent search (d = 0)
        d = descend_witness(w.f, w.g, params.b0, (), w.chart_ideal, box=box, k0=w.k0)
        descended = d.verified
    data["descent_verified"] = descended
    result = StepResult(
        "S6",
        "x^(b0+1) = 0 and x^b0 != 0 on the chart with x+v^3 inverted",
        w.order == params.b0 + 1 and bool(descended),
        data,
    )
    return result, w


def step_genus(params: CurveParameters) -> StepResult:
    delta = genus_delta(params.b0)
    expected = 2 * params.b0 + 2
    return StepResult(
        "S7",
        "delta invariant (gap count of <3, 3b0+4, 3b0+5>) equals 2*b0+2",
        delta == expected,
        {"gaps": list(curve_semigroup(params.b0).gaps), "delta": delta, "expected": expected},
    )


def run_certificate(
    params: CurveParameters,
    steps: Sequence[str] | None = None,
    hilbert_bound: int | None = None,
    box: int = 3,
    matrix: PolyMatrix | None = None,
) -> CertificateReport:
    """Run the selected steps in order; failures are recorded, never raised."""
    selected = list(STEP_IDS) if steps is None else [s.upper() for s in steps]
    unknown = [s for s in selected if s not in STEP_IDS]
    if unknown:
        raise ValueError(f"unknown steps: {unknown}")
    runners: dict[str, Callable[[], StepResult]] = {
        "S1": lambda: step_minors_vanish(params, matrix),
        "S2": lambda: step_kernel_equals_minors(params, matrix),
        "S3": lambda: step_hilbert_match(params, hilbert_bound, matrix),
        "S4": lambda: step_resolution(params, matrix),
        "S5": lambda: step_chart_ideal(params, matrix),
        "S6": lambda: step_nilpotency(params, matrix, box)[0],
        "S7": lambda: step_genus(params),
    }
    results = []
    for sid in STEP_IDS:
        if sid not in selected:
            continue
        start = time.perf_counter()
        res = runners[sid]()
        res.millis = round((time.perf_counter() - start) * 1000, 3)
        log.info("%s %s in %.1f ms", sid, "pass" if res.passed else "FAIL", res.millis)
        results.append(res)
    return CertificateReport(params.b0, params.field_name, results)


# --- witness searches ----------------------------------------------------------


class WitnessSearchError(RuntimeError):
    def __init__(self, box: int, message: str = "no witness found"):
        super().__init__(f"{message} within box radius {box}")
        self.box = box


@dataclass(frozen=True)
class WitnessPoint:
    values: tuple
    radius: int


@dataclass(frozen=True)
class DescentWitness:
    point: WitnessPoint
    k0: int
    verified: bool
    vanishes_after: bool


def evaluate(f: Polynomial, point: dict[str, object]) -> Polynomial:
    """Specialize the named variables of ``f`` to field constants."""
    ring = f.ring
    fld = ring.field
    idx = [(ring.index(n), fld(c)) for n, c in point.items()]
    out: dict = {}
    for e, c in f.as_dict().items():
        e = list(e)
        for i, r in idx:
            if e[i]:
                c = c * fld(r) ** e[i]
                e[i] = 0
        e = tuple(e)
        out[e] = fld.normalize(out.get(e, 0) + c)
    return ring.from_dict(out)


def _candidates(d: int, box: int):
    """Tuples in [-box, box]^d by increasing max-norm, lexicographic in 0, 1, -1, 2, -2, ..."""
    order = [0]
    for k in range(1, box + 1):
        order += [k, -k]
    for radius in range(box + 1):
        vals = order[: 2 * radius + 1]
        for tup in itertools.product(vals, repeat=d):
            if max((abs(a) for a in tup), default=0) == radius:
                yield radius, tup


def _reduce_mod(h: Polynomial, ideal: Ideal | None) -> Polynomial:
    return h if ideal is None else normal_form(h, ideal)


def find_nonvanishing_point(
    f: Polynomial, params: Sequence[str], ideal: Ideal | None = None, box: int = 3
) -> WitnessPoint:
    """Constants r with f(r) != 0 in R = ring/ideal, where ``params`` are the t-variables.

    ``ideal`` must not involve the parameter variables; ``None`` means R = k.
    """
    params = tuple(params)
    if not _reduce_mod(f, ideal):
        raise ValueError("f is zero in R[t]; there is nothing to find")
    for radius, tup in _candidates(len(params), box):
        value = evaluate(f, dict(zip(params, tup)))
        if _reduce_mod(value, ideal):
            return WitnessPoint(tup, radius)
    raise WitnessSearchError(box)


def descend_witness(
    f: Polynomial,
    g: Polynomial,
    b0: int,
    params: Sequence[str],
    ideal: Ideal | None = None,
    box: int = 3,
    k0: int | None = None,
) -> DescentWitness:
    """Specialize the t-variables so that f^b0 stays nonzero after inverting g.

    Searches for constants r with g(r)^k0 * f(r)^b0 != 0 in R and then checks
    directly that f(r)^b0 is not in (I : g(r)^oo).  ``k0`` defaults to the
    saturation exponent of I with respect to g, which makes g^k0 * f^b0 != 0
    equivalent to f^b0 != 0 in R[t][1/g].
    """
    params = tuple(params)
    ring = f.ring
    I = ideal if ideal is not None else Ideal(ring)
    if f.is_zero() or ideal_membership(f, I):
        raise ValueError("precondition violated: f is zero")
    sat = saturate(I, g)
    if ideal_membership(f**b0, sat.ideal):
        raise ValueError("precondition violated: f^b0 vanishes after inverting g")
    if k0 is None:
        k0 = sat.k0
    h = g**k0 * f**b0
    for radius, tup in _candidates(len(params), box):
        pt = dict(zip(params, tup))
        if not normal_form(evaluate(h, pt), I):
            continue
        fr, gr = evaluate(f, pt), evaluate(g, pt)
        if gr.is_zero():
            continue
        local = saturate(I, gr).ideal
        if ideal_membership(fr**b0, local):
            log.debug("candidate %s passed the k0 test but f^b0 dies after localizing", tup)
            continue
        return DescentWitness(
            WitnessPoint(tup, radius), k0, True, ideal_membership(fr ** (b0 + 1), local)
        )
    raise WitnessSearchError(box)


__all__ = [
    "CurveParameters",
    "CertificateReport",
    "StepResult",
    "NilpotencyWitness",
    "WitnessPoint",
    "DescentWitness",
    "WitnessSearchError",
    "build_matrix_A",
    "sabotaged_matrix",
    "sign_flipped_matrix",
    "reduced_control_matrix",
    "minor_ideal",
    "hilbert_burch_row",
    "default_hilbert_bound",
    "chart_eliminant",
    "step_minors_vanish",
    "step_kernel_equals_minors",
    "step_hilbert_match",
    "step_resolution",
    "step_chart_ideal",
    "step_nilpotency",
    "step_genus",
    "run_certificate",
    "find_nonvanishing_point",
    "descend_witness",
    "evaluate",
]
