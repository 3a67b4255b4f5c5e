"""Differential forms with exact coefficients in a global frame.

A p-form is stored as a sparse sum of terms  coeff * t^m kappa_I  where
kappa_1, ..., kappa_N is the frame coframe (kappa_i = dt_i/t_i on the
torus, dx_i in the affine model) and I is a strictly increasing index
tuple.  The coframe is closed in both models, which keeps the exterior
differential a purely combinatorial operation on terms.

The quotient of p-forms modulo exact ones has a canonical representative
computed by `reduce_mod_exact`:

* torus: for each Fourier mode m != 0 the operator alpha |-> mu_m ^ alpha
  (mu_m = sum_j m_j kappa_j) is exact, and the terms free of the pivot
  coframe index (the first j with m_j != 0) are a complete set of
  representatives.  Mode 0 is untouched.
* affine: the differential preserves total weight (polynomial degree plus
  form degree), so each weight component is reduced against an echelon
  basis of the image of d.

`FormClass` wraps a reduced representative; equality of classes is
equality of representatives.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Mapping, Sequence

from .linalg import echelon_rank, in_span, reduce_against, rref
from .rings import AFFINE, MODELS, TORUS, MismatchError, Mode, RingElement, as_scalar, scalar_text

Subset = tuple[int, ...]
Key = tuple[Mode, Subset]


def _check_subset(n: int, subset: Subset) -> Subset:
    subset = tuple(subset)
    if any(not 1 <= i <= n for i in subset):
        raise MismatchError(f"coframe index out of range in {subset}")
    if any(a >= b for a, b in zip(subset, subset[1:])):
        raise MismatchError(f"coframe indices must be strictly increasing, got {subset}")
    return subset


def _insert_sign(j: int, subset: Subset) -> tuple[int, Subset] | None:
    """Sign and result of kappa_j ^ kappa_subset, or None if j in subset."""
    if j in subset:
        return None
    before = sum(1 for i in subset if i < j)
    merged = tuple(sorted(subset + (j,)))
    return (-1) ** before, merged


def _merge_sign(left: Subset, right: Subset) -> tuple[int, Subset] | None:
    if set(left) & set(right):
        return None
    inversions = sum(1 for a in left for b in right if a > b)
    return (-1) ** inversions, tuple(sorted(left + right))


class PForm:
    """Sparse exact p-form in the frame coframe."""

    __slots__ = ("n", "model", "degree", "terms")

    def __init__(self, n: int, model: str, degree: int,
                 terms: Mapping[Key, int | Fraction] | None = None):
        if model not in MODELS:
            raise MismatchError(f"unknown model {model!r}")
        if not 0 <= degree <= n + 1:
            raise MismatchError(f"form degree {degree} out of range for dimension {n}")
        clean: dict[Key, int | Fraction] = {}
        for (mode, subset), coeff in (terms or {}).items():
            c = as_scalar(coeff)
            if not c:
                continue
            subset = _check_subset(n, subset)
            if len(subset) != degree:
                raise MismatchError(f"term {subset} does not have degree {degree}")
            mode = tuple(mode)
            if len(mode) != n:
                raise MismatchError(f"mode {mode} has wrong length")
            if model == AFFINE and any(e < 0 for e in mode):
                raise MismatchError(f"affine exponents must be nonnegative, got {mode}")
            clean[(mode, subset)] = c
        if degree == n + 1 and clean:
            raise MismatchError("forms of degree n+1 must be zero")
        self.n = n
        self.model = model
        self.degree = degree
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int, model: str, degree: int) -> "PForm":
        return cls(n, model, degree)

    @classmethod
    def monomial(cls, n: int, model: str, mode: Iterable[int], subset: Iterable[int],
                 coeff=1) -> "PForm":
        return cls(n, model, len(tuple(subset)), {(tuple(mode), tuple(subset)): coeff})

    @classmethod
    def kappa(cls, n: int, model: str, i: int) -> "PForm":
        """The i-th coframe 1-form."""
        return cls.monomial(n, model, (0,) * n, (i,))

    @classmethod
    def from_ring(cls, f: RingElement) -> "PForm":
        return cls(f.n, f.model, 0, {(m, ()): c for m, c in f.terms.items()})

    def as_ring(self) -> RingElement:
        if self.degree != 0:
            raise MismatchError("only 0-forms convert to ring elements")
        return RingElement(self.n, self.model, {m: c for (m, _), c in self.terms.items()})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PForm):
            return NotImplemented
        return (self.n, self.model, self.degree, self.terms) == \
            (other.n, other.model, other.degree, other.terms)

    __hash__ = None

    def _compatible(self, other: "PForm") -> None:
        if self.n != other.n or self.model != other.model:
            raise MismatchError("mixed models or dimensions")

    def __add__(self, other: "PForm") -> "PForm":
        if not isinstance(other, PForm):
            return NotImplemented
        self._compatible(other)
        if self.degree != other.degree:
            if self.is_zero():
                return other
            if other.is_zero():
                return self
            raise MismatchError(f"cannot add degrees {self.degree} and {other.degree}")
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return PForm(self.n, self.model, self.degree, out)

    def __neg__(self) -> "PForm":
        return PForm(self.n, self.model, self.degree,
                     {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "PForm") -> "PForm":
        if not isinstance(other, PForm):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "PForm":
        c = as_scalar(c)
        if not c:
            return PForm.zero(self.n, self.model, self.degree)
        return PForm(self.n, self.model, self.degree,
                     {k: c * v for k, v in self.terms.items()})

    def mul_ring(self, f: RingElement) -> "PForm":
        """Multiply by a function (degree unchanged)."""
        if self.n != f.n or self.model != f.model:
            raise MismatchError("mixed models or dimensions")
        out: dict[Key, int | Fraction] = {}
        for (mode, subset), c in self.terms.items():
            for fmode, fc in f.terms.items():
                key = (tuple(a + b for a, b in zip(mode, fmode)), subset)
                s = out.get(key, 0) + c * fc
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return PForm(self.n, self.model, self.degree, out)

    def wedge(self, other: "PForm") -> "PForm":
        self._compatible(other)
        deg = self.degree + other.degree
        if deg > self.n:
            return PForm.zero(self.n, self.model, min(deg, self.n + 1))
        out: dict[Key, int | Fraction] = {}
        for (m1, s1), c1 in self.terms.items():
            for (m2, s2), c2 in other.terms.items():
                merged = _merge_sign(s1, s2)
                if merged is None:
                    continue
                sign, subset = merged
                key = (tuple(a + b for a, b in zip(m1, m2)), subset)
                s = out.get(key, 0) + sign * c1 * c2
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return PForm(self.n, self.model, deg, out)

    # -- serialization -------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Key, int | Fraction]]:
        return sorted(self.terms.items())

    def text(self) -> str:
        if not self.terms:
            return "0"
        var = "t" if self.model == TORUS else "x"
        parts = []
        for (mode, subset), c in self.sorted_terms():
            mono = f"{var}^({','.join(str(e) for e in mode)})"
            kap = "^".join(f"k{i}" for i in subset)
            body = mono if not subset else f"{mono} {kap}"
            if c == 1:
                parts.append(body)
            else:
                parts.append(f"{scalar_text(c)} * {body}")
        return " + ".join(parts)

    def to_json(self) -> list:
        return [[list(mode), list(subset), scalar_text(c)]
                for (mode, subset), c in self.sorted_terms()]


def wedge(a: PForm, b: PForm) -> PForm:
    return a.wedge(b)


def ext_d(w: PForm) -> PForm:
    """Exterior differential.  The coframe is closed, so
    d(f kappa_I) = sum_j (E_j f) kappa_j ^ kappa_I."""
    out: dict[Key, int | Fraction] = {}
    torus = w.model == TORUS
    for (mode, subset), c in w.terms.items():
        for j in range(1, w.n + 1):
            e = mode[j - 1]
            if e == 0 or j in subset:
                continue
            ins = _insert_sign(j, subset)
            sign, merged = ins
            target = mode if torus else mode[: j - 1] + (e - 1,) + mode[j:]
            key = (target, merged)
            s = out.get(key, 0) + sign * e * c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return PForm(w.n, w.model, w.degree + 1, out)


def contract(field, w: PForm) -> PForm:
    """Interior product i_X for a vector field X = sum f_i E_i.

    i_X(f kappa_I) = f * sum_k (-1)^(k-1) X_{i_k} kappa_{I minus i_k}.
    """
    if w.degree == 0:
        raise MismatchError("cannot contract a 0-form")
    coeffs: Sequence[RingElement] = field.coeffs
    partial: dict[Key, int | Fraction] = {}
    for (mode, subset), c in w.terms.items():
        for pos, idx in enumerate(subset):
            f = coeffs[idx - 1]
            if f.is_zero():
                continue
            sign = (-1) ** pos
            rest = subset[:pos] + subset[pos + 1:]
            for fmode, fc in f.terms.items():
                key = (tuple(a + b for a, b in zip(mode, fmode)), rest)
                s = partial.get(key, 0) + sign * c * fc
                if s:
                    partial[key] = s
                else:
                    partial.pop(key, None)
    return PForm(w.n, w.model, w.degree - 1, partial)


def lie_derive(field, w: PForm) -> PForm:
    """Lie derivative via the Cartan formula L_X = i_X d + d i_X."""
    if w.degree == 0:
        total = RingElement.zero(w.n, w.model)
        f = w.as_ring()
        for i, coeff in enumerate(field.coeffs, start=1):
            total = total + coeff * f.derive(i)
        return PForm.from_ring(total)
    first = contract(field, ext_d(w)) if w.degree < w.n else PForm.zero(w.n, w.model, w.degree)
    return first + ext_d(contract(field, w))


# -- quotient modulo exact forms ------------------------------------------


def _reduce_torus(w: PForm) -> PForm:
    out: dict[Key, int | Fraction] = {}

    def put(key: Key, value) -> None:
        s = out.get(key, 0) + value
        if s:
            out[key] = s
        else:
            out.pop(key, None)

    for (mode, subset), c in w.terms.items():
        if not any(mode):
            put((mode, subset), c)
            continue
        pivot = next(j for j, e in enumerate(mode, start=1) if e)
        if pivot not in subset:
            put((mode, subset), c)
            continue
        # kappa_I = sign * kappa_pivot ^ alpha; replace kappa_pivot by
        # -(mu_m - m_pivot kappa_pivot)/m_pivot, which differs by an exact form.
        pos = subset.index(pivot)
        sign = (-1) ** pos
        alpha = subset[:pos] + subset[pos + 1:]
        mp = mode[pivot - 1]
        for j, e in enumerate(mode, start=1):
            if j == pivot or e == 0:
                continue
            ins = _insert_sign(j, alpha)
            if ins is None:
                continue
            jsign, merged = ins
            put((mode, merged), -sign * jsign * Fraction(e, mp) * c)
    return PForm(w.n, w.model, w.degree, out)


def _affine_weight(key: Key) -> int:
    mode, subset = key
    return sum(mode) + len(subset)


def _affine_component_basis(n: int, degree: int, weight: int) -> list[Key]:
    poly = weight - degree
    if poly < 0 or not 0 <= degree <= n:
        return []
    keys: list[Key] = []
    for subset in combinations(range(1, n + 1), degree):
        for mode in _monomials_of_degree(n, poly):
            keys.append((mode, subset))
    keys.sort()
    return keys


def _monomials_of_degree(n: int, total: int) -> list[Mode]:
    if n == 1:
        return [(total,)]
    out = []
    for first in range(total + 1):
        for rest in _monomials_of_degree(n - 1, total - first):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def _affine_exact_rref(n: int, degree: int, weight: int):
    """Echelon basis of the image of d inside the (degree, weight) component."""
    target = _affine_component_basis(n, degree, weight)
    if not target:
        return (), (), ()
    index = {key: i for i, key in enumerate(target)}
    rows = []
    for mode, subset in _affine_component_basis(n, degree - 1, weight):
        image = ext_d(PForm.monomial(n, AFFINE, mode, subset))
        if image.is_zero():
            continue
        row = [0] * len(target)
        for key, c in image.terms.items():
            row[index[key]] = c
        rows.append(row)
    reduced, pivots = rref(rows)
    frozen = tuple(tuple(r) for r in reduced)
    return frozen, tuple(pivots), tuple(target)


def _reduce_affine(w: PForm) -> PForm:
    if w.degree == 0:
        return w
    by_weight: dict[int, dict[Key, int | Fraction]] = {}
    for key, c in w.terms.items():
        by_weight.setdefault(_affine_weight(key), {})[key] = c
    out: dict[Key, int | Fraction] = {}
    for weight, component in sorted(by_weight.items()):
        rows, pivots, basis = _affine_exact_rref(w.n, w.degree, weight)
        vec = [component.get(key, 0) for key in basis]
        vec = reduce_against(vec, [list(r) for r in rows], list(pivots))
        for key, c in zip(basis, vec):
            if c:
                out[key] = c
    return PForm(w.n, w.model, w.degree, out)


def reduce_mod_exact(w: PForm) -> "FormClass":
    """Canonical representative of [w] in p-forms modulo exact forms."""
    reduced = _reduce_torus(w) if w.model == TORUS else _reduce_affine(w)
    return FormClass(reduced)


class FormClass:
    """A class in the quotient of p-forms by exact forms, stored reduced.

    The constructor trusts its input to be reduced; use `reduce_mod_exact`
    to build classes from arbitrary forms.  Linear operations preserve
    reducedness (the reduction is linear and idempotent), so arithmetic
    works directly on representatives.
    """

    __slots__ = ("rep",)

    def __init__(self, rep: PForm):
        self.rep = rep

    @classmethod
    def zero(cls, n: int, model: str, degree: int) -> "FormClass":
        return cls(PForm.zero(n, model, degree))

    @property
    def degree(self) -> int:
        return self.rep.degree

    def is_zero(self) -> bool:
        return self.rep.is_zero()

    def __bool__(self) -> bool:
        return bool(self.rep)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormClass):
            return NotImplemented
        return self.rep == other.rep

    __hash__ = None

    def __add__(self, other: "FormClass") -> "FormClass":
        if not isinstance(other, FormClass):
            return NotImplemented
        return FormClass(self.rep + other.rep)

    def __sub__(self, other: "FormClass") -> "FormClass":
        if not isinstance(other, FormClass):
            return NotImplemented
        return FormClass(self.rep - other.rep)

    def __neg__(self) -> "FormClass":
        return FormClass(-self.rep)

    def scale(self, c) -> "FormClass":
        return FormClass(self.rep.scale(c))

    def wedge_closed(self, closed: PForm) -> "FormClass":
        """Wedge with a closed form (well defined on classes)."""
        if not ext_d(closed).is_zero():
            raise MismatchError("wedge on classes requires a closed form")
        return reduce_mod_exact(self.rep.wedge(closed))

    def text(self) -> str:
        return f"[{self.rep.text()}]"

    def to_json(self) -> list:
        return self.rep.to_json()


def is_exact(w: PForm, max_weight_slack: int = 0) -> bool:
    """Membership in the image of d, decided per graded component.

    Used as an independent cross-check on `reduce_mod_exact`: a form
    reduces to zero exactly when it is a sum of differentials.
    """
    if w.is_zero():
        return True
    if w.degree == 0:
        return False
    if w.model == AFFINE:
        by_weight: dict[int, dict[Key, int | Fraction]] = {}
        for key, c in w.terms.items():
            by_weight.setdefault(_affine_weight(key), {})[key] = c
        for weight, component in by_weight.items():
            basis = _affine_component_basis(w.n, w.degree, weight)
            index = {key: i for i, key in enumerate(basis)}
            vec = [component.get(key, 0) for key in basis]
            rows = []
            for mode, subset in _affine_component_basis(w.n, w.degree - 1, weight):
                image = ext_d(PForm.monomial(w.n, AFFINE, mode, subset))
                row = [0] * len(basis)
                for key, c in image.terms.items():
                    row[index[key]] = c
                rows.append(row)
            if in_span(vec, rows) is None:
                return False
        return True
    # torus: group by mode; mode 0 is exact only when zero
    by_mode: dict[Mode, dict[Subset, int | Fraction]] = {}
    for (mode, subset), c in w.terms.items():
        by_mode.setdefault(mode, {})[subset] = c
    for mode, component in by_mode.items():
        if not any(mode):
            return False
        subsets = list(combinations(range(1, w.n + 1), w.degree))
        index = {s: i for i, s in enumerate(subsets)}
        vec = [component.get(s, 0) for s in subsets]
        rows = []
        for source in combinations(range(1, w.n + 1), w.degree - 1):
            row = [0] * len(subsets)
            for j, e in enumerate(mode, start=1):
                if e == 0:
                    continue
                ins = _insert_sign(j, source)
                if ins is None:
                    continue
                sign, merged = ins
                row[index[merged]] += sign * e
            rows.append(row)
        if in_span(vec, rows) is None:
            return False
    return True


def de_rham_dims(model: str, n: int, radius: int = 2, max_weight: int = 4) -> list[int]:
    """Cohomology dimensions of the d-complex, degree 0..n.

    Torus: binomial(n, p), verified by exactness of every nonzero-mode
    component inside the sample box.  Affine: (1, 0, ..., 0), verified by
    rank counting on weight components up to `max_weight`.
    """
    if model == TORUS:
        modes = [m for m in _box_modes(n, radius) if any(m)]
        for mode in modes:
            ranks = []
            for p in range(n + 1):
                subsets = list(combinations(range(1, n + 1), p))
                targets = list(combinations(range(1, n + 1), p + 1))
                tindex = {s: i for i, s in enumerate(targets)}
                rows = []
                for source in subsets:
                    row = [0] * len(targets)
                    for j, e in enumerate(mode, start=1):
                        if e == 0:
                            continue
                        ins = _insert_sign(j, source)
                        if ins is None:
                            continue
                        sign, merged = ins
                        row[tindex[merged]] += sign * e
                    rows.append(row)
                ranks.append(echelon_rank(rows) if targets else 0)
            for p in range(n + 1):
                dim = comb(n, p)
                below = ranks[p - 1] if p else 0
                if dim - ranks[p] - below != 0:
                    raise AssertionError(f"mode {mode} component not exact at degree {p}")
        return [comb(n, p) for p in range(n + 1)]
    if model == AFFINE:
        dims = []
        for p in range(n + 1):
            total = 0
            for weight in range(max_weight + 1):
                basis = _affine_component_basis(n, p, weight)
                if not basis:
                    continue
                rows_img, pivots_img, _ = _affine_exact_rref(n, p, weight)
                index = {key: i for i, key in enumerate(basis)}
                ker_rows = []
                for mode, subset in basis:
                    image = ext_d(PForm.monomial(n, AFFINE, mode, subset))
                    target = _affine_component_basis(n, p + 1, weight)
                    tindex = {key: i for i, key in enumerate(target)}
                    row = [0] * len(target)
                    for key, c in image.terms.items():
                        row[tindex[key]] = c
                    ker_rows.append(row)
                rank_d = echelon_rank(ker_rows)
                total += len(basis) - rank_d - len(pivots_img)
            dims.append(total)
        expected = [1] + [0] * n
        if dims != expected:
            raise AssertionError(f"affine complex not acyclic in sampled weights: {dims}")
        return expected
    raise MismatchError(f"unknown model {model!r}")


def _box_modes(n: int, radius: int) -> list[Mode]:
    if n == 0:
        return [()]
    out = []
    for e in range(-radius, radius + 1):
        for rest in _box_modes(n - 1, radius):
            out.append((e,) + rest)
    return out
