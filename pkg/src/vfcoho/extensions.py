"""Extensions of the gauge-plus-fields algebra by 1-forms modulo exact.

Elements are triples (gauge part, central part, field part).  The bracket
is

    [(g, c, X), (g', c', X')] =
        ( [g, g'] + X.g' - X'.g,
          pairing(g, g') + X.[c'] - X'.[c] + tau(X, X'),
          [X, X'] )

where pairing(f x_a, f' x_b) = B(x_a, x_b) [f' df] for an invariant
symmetric bilinear form B on the finite algebra, the central values are
classes of 1-forms modulo exact forms, and tau is a field-field twist
(zero for the semidirect product).  `jacobi_check` verifies the cyclic
identity exactly on sampled triples; with a twist that is not a cocycle
it fails with a concrete witness.

The one-dimensional case carries the classical Virasoro twist
tau(t^a E, t^b E) = delta_{a+b,0} a^3 [kappa_1]; a coboundary shift by
c * (mode-0 coefficient) moves the polynomial to a^3 + 2ca without
affecting any cocycle property.
"""

from __future__ import annotations

import random
import time
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .cohomology import Cochain, FiniteLieAlgebra, GaugeContext, GaugeElement
from .fields import VectorField
from .forms import FormClass, PForm, ext_d, lie_derive, reduce_mod_exact
from .reports import CheckReport
from .rings import MismatchError, RingElement, as_scalar
from .sampling import (box_modes, derive_seed, index_tuples, random_field,
                       random_ring, random_scalar)


class InvariantForm:
    """Symmetric bilinear form B on a finite algebra with
    B([x,y],z) + B(y,[x,z]) = 0, validated exactly on basis triples."""

    def __init__(self, lie: FiniteLieAlgebra, matrix: Sequence[Sequence]):
        dim = lie.dim
        m = tuple(tuple(as_scalar(v) for v in row) for row in matrix)
        if len(m) != dim or any(len(row) != dim for row in m):
            raise MismatchError("invariant form must be dim x dim")
        for a in range(dim):
            for b in range(dim):
                if m[a][b] != m[b][a]:
                    raise MismatchError(f"form not symmetric at ({a},{b})")
        for a in range(dim):
            for b in range(dim):
                for c in range(dim):
                    left = sum(lie.c[a][b][k] * m[k][c] for k in range(dim))
                    right = sum(lie.c[a][c][k] * m[b][k] for k in range(dim))
                    if left + right:
                        raise MismatchError(
                            f"form not invariant on basis triple ({a},{b},{c})")
        self.lie = lie
        self.matrix = m

    def pair(self, x: Sequence, y: Sequence):
        total = 0
        for a, xa in enumerate(x):
            if not xa:
                continue
            for b, yb in enumerate(y):
                if yb and self.matrix[a][b]:
                    total += xa * yb * self.matrix[a][b]
        return total


def killing_form(lie: FiniteLieAlgebra) -> InvariantForm:
    """B(x, y) = trace(ad x . ad y) from the structure constants."""
    dim = lie.dim
    matrix = [[0] * dim for _ in range(dim)]
    for a in range(dim):
        for b in range(dim):
            total = 0
            for k in range(dim):
                # (ad a . ad b) e_k = [a, [b, e_k]]
                inner = lie.c[b][k]
                for m, coeff in enumerate(inner):
                    if coeff:
                        total += coeff * lie.c[a][m][k]
            matrix[a][b] = total
    return InvariantForm(lie, matrix)


def trace_form(lie: FiniteLieAlgebra, rep: Sequence) -> InvariantForm:
    """B(x, y) = trace(rho(x) rho(y)); the natural choice for gl_1."""
    size = len(rep[0])
    dim = lie.dim
    matrix = [[sum(sum(rep[a][i][j] * rep[b][j][i] for j in range(size))
                   for i in range(size)) for b in range(dim)] for a in range(dim)]
    return InvariantForm(lie, matrix)


class ExtensionSetup:
    """The ambient data: gauge context, invariant form, twist cochain."""

    def __init__(self, ctx: GaugeContext, form: InvariantForm,
                 tau: Cochain | None = None):
        if form.lie is not ctx.lie:
            raise MismatchError("invariant form is for a different algebra")
        if tau is not None and tau.degree != 2:
            raise MismatchError("the twist must be a 2-cochain")
        self.ctx = ctx
        self.form = form
        self.tau = tau

    def zero_central(self) -> FormClass:
        return FormClass.zero(self.ctx.n, self.ctx.model, 1)

    def pairing(self, g1: GaugeElement, g2: GaugeElement) -> FormClass:
        """Central term of a gauge-gauge bracket: B(x_a, x_b) [f' df]."""
        total = PForm.zero(self.ctx.n, self.ctx.model, 1)
        for a, fa in enumerate(g1.coeffs):
            if fa.is_zero():
                continue
            dfa = None
            for b, fb in enumerate(g2.coeffs):
                coeff = self.form.matrix[a][b]
                if not coeff or fb.is_zero():
                    continue
                if dfa is None:
                    dfa = ext_d(PForm.from_ring(fa))
                total = total + dfa.mul_ring(fb).scale(coeff)
        return reduce_mod_exact(total)


class ExtensionElement:
    __slots__ = ("setup", "gauge", "central", "field")

    def __init__(self, setup: ExtensionSetup, gauge: GaugeElement,
                 central: FormClass, field: VectorField):
        if central.degree != 1:
            raise MismatchError("central part must be a 1-form class")
        self.setup = setup
        self.gauge = gauge
        self.central = central
        self.field = field

    @classmethod
    def make(cls, setup: ExtensionSetup, gauge: GaugeElement | None = None,
             central: FormClass | None = None,
             field: VectorField | None = None) -> "ExtensionElement":
        ctx = setup.ctx
        return cls(setup,
                   gauge if gauge is not None else ctx.zero(),
                   central if central is not None else setup.zero_central(),
                   field if field is not None else VectorField.zero(ctx.n, ctx.model))

    def __add__(self, other: "ExtensionElement") -> "ExtensionElement":
        return ExtensionElement(self.setup, self.gauge + other.gauge,
                                self.central + other.central, self.field + other.field)

    def __sub__(self, other: "ExtensionElement") -> "ExtensionElement":
        return ExtensionElement(self.setup, self.gauge - other.gauge,
                                self.central - other.central, self.field - other.field)

    def is_zero(self) -> bool:
        return self.gauge.is_zero() and self.central.is_zero() and self.field.is_zero()

    def text(self) -> str:
        return (f"gauge: {self.gauge.text()}; central: {self.central.text()}; "
                f"field: {self.field.text()}")


def extension_bracket(a: ExtensionElement, b: ExtensionElement) -> ExtensionElement:
    setup = a.setup
    ctx = setup.ctx
    gauge = (ctx.bracket(a.gauge, b.gauge) + ctx.outer(a.field, b.gauge)
             - ctx.outer(b.field, a.gauge))
    central = (setup.pairing(a.gauge, b.gauge)
               + reduce_mod_exact(lie_derive(a.field, b.central.rep))
               - reduce_mod_exact(lie_derive(b.field, a.central.rep)))
    if setup.tau is not None:
        central = central + setup.tau.evaluate(a.field, b.field)
    field = a.field.bracket(b.field)
    return ExtensionElement(setup, gauge, central, field)


def jacobi_residual(a: ExtensionElement, b: ExtensionElement,
                    c: ExtensionElement) -> ExtensionElement:
    return (extension_bracket(extension_bracket(a, b), c)
            + extension_bracket(extension_bracket(b, c), a)
            + extension_bracket(extension_bracket(c, a), b))


def _basis_extension_elements(setup: ExtensionSetup, radius: int) -> list[ExtensionElement]:
    ctx = setup.ctx
    out = []
    modes = box_modes(ctx.n, radius)
    for m in modes:
        for a in range(ctx.lie.dim):
            out.append(ExtensionElement.make(setup, gauge=ctx.basis_element(m, a)))
    for m in modes:
        for i in range(1, ctx.n + 1):
            central = reduce_mod_exact(PForm.monomial(ctx.n, ctx.model, m, (i,)))
            if not central.is_zero():
                out.append(ExtensionElement.make(setup, central=central))
    for m in modes:
        for j in range(1, ctx.n + 1):
            out.append(ExtensionElement.make(
                setup, field=VectorField.basis(ctx.n, ctx.model, m, j)))
    return out


def _random_extension_element(setup: ExtensionSetup, rng: random.Random,
                              radius: int) -> ExtensionElement:
    ctx = setup.ctx
    central = reduce_mod_exact(
        PForm.from_ring(random_ring(rng, ctx.model, ctx.n, radius, terms=1)).wedge(
            PForm.kappa(ctx.n, ctx.model, rng.randrange(1, ctx.n + 1))))
    return ExtensionElement.make(
        setup,
        gauge=ctx.random_element(rng, radius),
        central=central.scale(random_scalar(rng)),
        field=random_field(rng, ctx.model, ctx.n, radius))


def jacobi_check(setup: ExtensionSetup, radius: int = 1, samples: int = 200,
                 seed: int = 7, max_tuples: int = 4000,
                 name: str = "jacobi") -> CheckReport:
    """Cyclic Jacobi identity on basis triples plus seeded random triples."""
    start = time.perf_counter()
    rng = random.Random(derive_seed(seed, name))
    elements = _basis_extension_elements(setup, radius)
    params = {"radius": radius, "samples": samples, "seed": seed,
              "max_tuples": max_tuples, "basis_size": len(elements),
              "twist": setup.tau.name if setup.tau else "none"}
    count = 0

    def fail(triple, residual) -> CheckReport:
        return CheckReport(
            name=name, params=params, status="fail", tuples=count,
            witness={"args": [e.text() for e in triple], "residual": residual.text()},
            wall_ms=(time.perf_counter() - start) * 1000.0)

    tuples_iter, _total, exhaustive = index_tuples(len(elements), 3, max_tuples, rng)
    params["exhaustive"] = exhaustive
    for idx in tuples_iter:
        triple = tuple(elements[i] for i in idx)
        count += 1
        residual = jacobi_residual(*triple)
        if not residual.is_zero():
            return fail(triple, residual)
    for _ in range(samples):
        triple = tuple(_random_extension_element(setup, rng, radius) for _ in range(3))
        count += 1
        residual = jacobi_residual(*triple)
        if not residual.is_zero():
            return fail(triple, residual)
    return CheckReport(name=name, params=params, status="pass", tuples=count,
                       wall_ms=(time.perf_counter() - start) * 1000.0)


def antisymmetry_check(setup: ExtensionSetup, radius: int = 1, samples: int = 100,
                       seed: int = 7, max_tuples: int = 4000,
                       name: str = "antisymmetry") -> CheckReport:
    """[a,b] + [b,a] = 0 and [a,a] = 0 on basis pairs plus random pairs."""
    start = time.perf_counter()
    rng = random.Random(derive_seed(seed, name))
    elements = _basis_extension_elements(setup, radius)
    params = {"radius": radius, "samples": samples, "seed": seed,
              "twist": setup.tau.name if setup.tau else "none"}
    count = 0
    tuples_iter, _total, exhaustive = index_tuples(len(elements), 2, max_tuples, rng)
    params["exhaustive"] = exhaustive

    def bad(a, b) -> ExtensionElement | None:
        r = extension_bracket(a, b) + extension_bracket(b, a)
        if not r.is_zero():
            return r
        r = extension_bracket(a, a)
        if not r.is_zero():
            return r
        return None

    for idx in tuples_iter:
        a, b = (elements[i] for i in idx)
        count += 1
        r = bad(a, b)
        if r is not None:
            return CheckReport(name=name, params=params, status="fail", tuples=count,
                               witness={"a": a.text(), "b": b.text(),
                                        "residual": r.text()},
                               wall_ms=(time.perf_counter() - start) * 1000.0)
    for _ in range(samples):
        a = _random_extension_element(setup, rng, radius)
        b = _random_extension_element(setup, rng, radius)
        count += 1
        r = bad(a, b)
        if r is not None:
            return CheckReport(name=name, params=params, status="fail", tuples=count,
                               witness={"a": a.text(), "b": b.text(),
                                        "residual": r.text()},
                               wall_ms=(time.perf_counter() - start) * 1000.0)
    return CheckReport(name=name, params=params, status="pass", tuples=count,
                       wall_ms=(time.perf_counter() - start) * 1000.0)


# -- twists -------------------------------------------------------------------


def virasoro_twist(shift: int | Fraction = 0) -> Cochain:
    """tau(X, Y) on the circle: sum over modes of x_a y_{-a} (a^3 + 2*shift*a)
    times [kappa_1].  shift=0 is the cubic normalization; a nonzero shift
    is the coboundary of c * (mode-0 coefficient)."""
    n, model = 1, "torus"
    shift = as_scalar(shift)

    def ev(x: VectorField, y: VectorField):
        f, g = x.coeffs[0], y.coeffs[0]
        total = 0
        for (a,), xa in f.terms.items():
            yb = g.terms.get((-a,))
            if yb:
                total += xa * yb * (a ** 3 + 2 * shift * a)
        if not total:
            return FormClass.zero(n, model, 1)
        return FormClass(PForm.kappa(n, model, 1).scale(total))

    label = "virasoro" if not shift else f"virasoro+{shift}*coboundary"
    return Cochain(label, 2, ev, "fields", "class", n, model, value_degree=1,
                   spec={"shift": str(Fraction(shift))})


def planted_noncocycle_twist(n: int, model: str) -> Cochain:
    """Deliberately broken twist kappa_1(X) kappa_2(Y) [kappa_1]; it is not
    even antisymmetric, and the Jacobi check fails with a witness."""
    if n < 2:
        raise MismatchError("the planted twist needs n >= 2")

    def ev(x: VectorField, y: VectorField):
        product = x.coeffs[0] * y.coeffs[1]
        return reduce_mod_exact(PForm.from_ring(product).wedge(
            PForm.kappa(n, model, 1)))

    return Cochain("planted_noncocycle", 2, ev, "fields", "class", n, model,
                   value_degree=1)


def field_twist(cochain: Cochain) -> Cochain:
    """Adapt any field-domain 2-cochain with 1-form-class values as a twist."""
    if cochain.degree != 2 or cochain.values != "class" or cochain.value_degree != 1:
        raise MismatchError("a twist must be a 2-cochain valued in 1-form classes")
    return cochain


# -- structure constant export -------------------------------------------------


def export_truncation(setup: ExtensionSetup, radius: int) -> dict:
    """Exact structure constants between basis elements with modes in the
    box; products are expanded in the box of doubled radius."""
    ctx = setup.ctx
    small = _basis_extension_elements(setup, radius)
    big = _basis_extension_elements(setup, 2 * radius)
    labels = [_element_label(e, i) for i, e in enumerate(big)]

    def decompose(e: ExtensionElement) -> list[tuple[str, str]] | None:
        out = []
        remaining = e
        for i, basis in enumerate(big):
            coeff = _leading_match(remaining, basis)
            if coeff:
                remaining = remaining - _scale_element(basis, coeff)
                out.append((labels[i], str(Fraction(coeff))))
        if not remaining.is_zero():
            return None
        return out

    table = {}
    for i, j in combinations(range(len(small)), 2):
        bracket = extension_bracket(small[i], small[j])
        if bracket.is_zero():
            continue
        expansion = decompose(bracket)
        key = f"[{_element_label(small[i], i)}, {_element_label(small[j], j)}]"
        table[key] = expansion if expansion is not None else "outside box"
    return {"radius": radius, "dim": ctx.n, "model": ctx.model,
            "algebra": list(ctx.lie.names), "brackets": table}


def _scale_element(e: ExtensionElement, c) -> ExtensionElement:
    return ExtensionElement(e.setup, e.gauge.scale(c), e.central.scale(c),
                            e.field.scale(c))


def _leading_match(e: ExtensionElement, basis: ExtensionElement):
    """Coefficient of `basis` (a single-monomial element) inside `e`."""
    for a, f in enumerate(basis.gauge.coeffs):
        for mode, c in f.terms.items():
            got = e.gauge.coeffs[a].terms.get(mode, 0)
            return Fraction(got, 1) / c if got else 0
    for key, c in basis.central.rep.terms.items():
        got = e.central.rep.terms.get(key, 0)
        return Fraction(got, 1) / c if got else 0
    for j, f in enumerate(basis.field.coeffs):
        for mode, c in f.terms.items():
            got = e.field.coeffs[j].terms.get(mode, 0)
            return Fraction(got, 1) / c if got else 0
    return 0


def _element_label(e: ExtensionElement, index: int) -> str:
    if not e.gauge.is_zero():
        return f"g:{e.gauge.text()}"
    if not e.central.is_zero():
        return f"c:{e.central.text()}"
    return f"v:{e.field.text()}"
