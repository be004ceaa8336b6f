"""The two faces of a rational normal curve and the secancy calculus.

A `ParamRnc` is a degree-n parametrization of P^1 into P^n whose
coefficient matrix is invertible (equivalently, the image is a rational
normal curve).  A `DetRnc` is a 2 x n matrix of linear forms whose rank-one
locus is the curve.  Conversions go both ways:

* param -> det transports the Hankel matrix of the normal-form curve
  (u^n, s u^(n-1), ..., s^n) through the inverse coefficient matrix, so on
  the curve the column j evaluates to a multiple of (u, s); that is what
  lets `param_of_point` read a parameter off any nonzero column.
* det -> param solves the n x (n+1) linear system expressing row
  proportionality at the parameter (s : u); the solution is the vector of
  signed maximal minors, recovered exactly by interpolation at n+1 nodes.

Intersections with codimension-two spaces are never split into points: the
scheme is carried as the monic gcd of the two restricted pencil generators,
which keeps all data rational even when the intersection points are not.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .binforms import BinaryForm, binary_gcd, is_squarefree
from .errors import (
    DimensionMismatch,
    NotGenericMatrix,
    RepeatedParameter,
    ZeroParameter,
)
from .linalg import Matrix, canonical_rowspace, int_det, joint_integerize, nullspace
from .projective import (
    LinForm,
    Pencil,
    ProjPoint,
    ProjTransform,
    pencil_from_points,
    register_transform,
)
from .quadrics import monomial_index, monomials
from .scalars import QQ, integerize


def parameter(s, u) -> ProjPoint:
    """A point of the parameter line P^1, canonicalized."""
    return ProjPoint([s, u])


class ParamRnc:
    """A rational normal curve given by n+1 degree-n binary forms.

    Forms are stored jointly rescaled to a primitive integer coefficient
    vector with positive leading entry; a common rescaling does not change
    the map.
    """

    __slots__ = ("n", "forms", "_det", "_quadspace")

    def __init__(self, forms: Sequence[BinaryForm]):
        n = len(forms) - 1
        if n < 1:
            raise ValueError("need at least two coordinate forms")
        if any(f.degree != n for f in forms):
            raise DimensionMismatch("coordinate forms must all have degree n")
        flat = [c for f in forms for c in f.coeffs]
        ints = integerize(flat)
        lead = next((x for x in ints if x), 0)
        if lead < 0:
            ints = [-x for x in ints]
        self.forms = tuple(
            BinaryForm(n, ints[i * (n + 1): (i + 1) * (n + 1)]) for i in range(n + 1)
        )
        self.n = n
        coeff_matrix = Matrix([f.coeffs for f in self.forms])
        if coeff_matrix.det() == 0:
            raise NotGenericMatrix(
                "coefficient matrix is singular: not a linearly normal degree-n map",
                stage="param_rnc",
            )
        self._det = None
        self._quadspace = None

    def coefficient_matrix(self) -> Matrix:
        return Matrix([f.coeffs for f in self.forms])

    def __eq__(self, other):
        return isinstance(other, ParamRnc) and self.forms == other.forms

    def __hash__(self):
        return hash(self.forms)

    def __repr__(self):
        return f"ParamRnc(n={self.n})"


class DetRnc:
    """A 2 x n matrix of linear forms; the curve is its rank-one locus.

    Validation is lazy: `det_to_param` certifies genericity (coprime
    maximal minors, invertible coefficient matrix) and caches the result.
    """

    __slots__ = ("n", "m", "_param")

    def __init__(self, rows: Sequence[Sequence[LinForm]]):
        if len(rows) != 2:
            raise DimensionMismatch("a determinantal curve needs exactly 2 rows")
        top, bottom = list(rows[0]), list(rows[1])
        if len(top) != len(bottom) or not top:
            raise DimensionMismatch("rows must have equal positive length")
        n = len(top)
        if any(f.n != n for f in top + bottom):
            raise DimensionMismatch("a 2 x n matrix needs forms on P^n")
        self.n = n
        self.m = (tuple(top), tuple(bottom))
        self._param = None

    def __eq__(self, other):
        return isinstance(other, DetRnc) and self.m == other.m

    def __hash__(self):
        return hash(self.m)

    def __repr__(self):
        return f"DetRnc(n={self.n})"


@dataclass(frozen=True)
class SecancyResult:
    """Intersection scheme of a curve and a codimension-two space."""

    degree: int
    d_form: BinaryForm
    smooth: bool
    is_n_minus_1_secant: bool


@dataclass(frozen=True)
class PointCheck:
    point: ProjPoint
    on_curve: bool
    param: ProjPoint | None


@dataclass(frozen=True)
class SpaceCheck:
    pencil: Pencil
    secancy: SecancyResult


@dataclass(frozen=True)
class VerificationReport:
    points: tuple[PointCheck, ...]
    spaces: tuple[SpaceCheck, ...]
    passed: bool


def moment_curve(n: int) -> ParamRnc:
    """(u^n, s u^(n-1), ..., s^n): the rank-one locus of the Hankel matrix."""
    return ParamRnc(
        [BinaryForm(n, [int(k == i) for k in range(n + 1)]) for i in range(n + 1)]
    )


def point_at(curve: ParamRnc, s, u) -> ProjPoint:
    s, u = QQ(s), QQ(u)
    if not s and not u:
        raise ZeroParameter("(0, 0) is not a parameter")
    n = curve.n
    spow = [QQ(1)]
    upow = [QQ(1)]
    for _ in range(n):
        spow.append(spow[-1] * s)
        upow.append(upow[-1] * u)
    coords = []
    for f in curve.forms:
        total = QQ(0)
        for k, c in enumerate(f.coeffs):
            if c:
                total += c * spow[k] * upow[n - k]
        coords.append(total)
    return ProjPoint(coords)


def point_at_param(curve: ParamRnc, t: ProjPoint) -> ProjPoint:
    return point_at(curve, t.coords[0], t.coords[1])


def param_to_det(curve: ParamRnc) -> DetRnc:
    """The transported Hankel matrix; columns scaled to primitive integers
    (a per-column scale keeps the (u, s) column ratio intact)."""
    if curve._det is not None:
        return curve._det
    n = curve.n
    back = curve.coefficient_matrix().inverse()
    top, bottom = [], []
    for j in range(n):
        stacked = list(back.entries[j]) + list(back.entries[j + 1])
        ints = integerize(stacked)
        top.append(LinForm(ints[: n + 1]))
        bottom.append(LinForm(ints[n + 1:]))
    det = DetRnc([top, bottom])
    curve._det = det
    return det


_VANDERMONDE_INV: dict[int, Matrix] = {}


def _vandermonde_inverse(n: int) -> Matrix:
    inv = _VANDERMONDE_INV.get(n)
    if inv is None:
        v = Matrix([[QQ(t) ** k for k in range(n + 1)] for t in range(n + 1)])
        inv = v.inverse()
        _VANDERMONDE_INV[n] = inv
    return inv


def det_to_param(det: DetRnc) -> ParamRnc:
    """Parametrize the rank-one locus by signed maximal minors.

    A point with parameter (s : u) satisfies s*M1j - u*M2j = 0 for every
    column j; the k-th coordinate of the solution of that n x (n+1) system
    is (-1)^k times the k-th maximal minor, a binary form of degree n read
    off by interpolation at s/u = 0..n.
    """
    if det._param is not None:
        return det._param
    n = det.n
    top, bottom = det.m
    # one joint integer scale per column keeps all minors consistently scaled
    columns = [
        joint_integerize([top[j].coeffs, bottom[j].coeffs]) for j in range(n)
    ]
    values = [[0] * (n + 1) for _ in range(n + 1)]  # values[k][sample]
    for r in range(n + 1):
        rows = [[r * a - b for a, b in zip(*columns[j])] for j in range(n)]
        for k in range(n + 1):
            v = int_det([row[:k] + row[k + 1:] for row in rows])
            values[k][r] = -v if k % 2 else v
    vinv = _vandermonde_inverse(n)
    forms = [BinaryForm(n, vinv.apply(values[k])) for k in range(n + 1)]
    nonzero = [f for f in forms if not f.is_zero]
    if not nonzero:
        raise NotGenericMatrix(
            "all maximal minors vanish identically", stage="det_to_param"
        )
    common = nonzero[0]
    for f in nonzero[1:]:
        if common.degree == 0:
            break
        common = binary_gcd(common, f)
    if len(nonzero) < n + 1 or common.degree > 0:
        raise NotGenericMatrix(
            "maximal minors share a common factor: rank-one locus is not a rnc",
            stage="det_to_param", witness=common if common.degree else None,
        )
    try:
        param = ParamRnc(forms)
    except NotGenericMatrix as exc:
        raise NotGenericMatrix(
            "minor parametrization is degenerate", stage="det_to_param"
        ) from exc
    det._param = param
    return param


def param_of_point(curve: ParamRnc, point: ProjPoint) -> ProjPoint | None:
    """The unique parameter mapping to the point, or None off the curve.

    Membership is equivalent to rank one of the transported Hankel matrix
    at the point (its rank-one locus is exactly the curve), and then any
    nonzero column is proportional to (u, s)."""
    if point.n != curve.n:
        raise DimensionMismatch("point and curve dimensions differ")
    det = param_to_det(curve)
    top, bottom = det.m
    cols = [(f.at(point), g.at(point)) for f, g in zip(top, bottom)]
    first = next(((a, b) for a, b in cols if a or b), None)
    if first is None:
        return None
    a, b = first
    for x, y in cols:
        if a * y != b * x:
            return None
    return parameter(b, a)


def restrict(curve: ParamRnc, form: LinForm) -> BinaryForm:
    """The hyperplane pulled back to the parameter line (degree n)."""
    if form.n != curve.n:
        raise DimensionMismatch("form and curve dimensions differ")
    n = curve.n
    out = [QQ(0)] * (n + 1)
    for a, f in zip(form.coeffs, curve.forms):
        if a:
            for k, c in enumerate(f.coeffs):
                if c:
                    out[k] += a * c
    return BinaryForm(n, out)


def secancy(curve: ParamRnc, pencil: Pencil) -> SecancyResult:
    """Scheme degree and smoothness of the intersection with the space."""
    if pencil.n != curve.n:
        raise DimensionMismatch("pencil and curve dimensions differ")
    f, g = pencil.canonical_forms()
    d_form = binary_gcd(restrict(curve, f), restrict(curve, g))
    smooth = is_squarefree(d_form)
    degree = d_form.degree
    return SecancyResult(
        degree=degree,
        d_form=d_form,
        smooth=smooth,
        is_n_minus_1_secant=(degree == curve.n - 1 and smooth),
    )


def generalized_column_for(det: DetRnc, pencil: Pencil) -> list[QQ] | None:
    """Coefficients expressing the pencil as a generalized column, or None.

    lambda must combine the matrix columns into two forms spanning exactly
    the pencil; membership of both combinations is linear in lambda, the
    spanning condition is checked on each kernel candidate.
    """
    if pencil.n != det.n:
        raise DimensionMismatch("pencil and matrix dimensions differ")
    n = det.n
    conditions = pencil.span_conditions()
    rows = []
    for w in conditions:
        for matrix_row in det.m:
            rows.append(
                [
                    sum((wi * ci for wi, ci in zip(w, matrix_row[j].coeffs)), QQ(0))
                    for j in range(n)
                ]
            )
    kernel = nullspace(rows)
    if not kernel:
        return None
    candidates = list(kernel)
    for i in range(len(kernel)):
        for j in range(i + 1, len(kernel)):
            candidates.append([a + b for a, b in zip(kernel[i], kernel[j])])
            candidates.append([a - b for a, b in zip(kernel[i], kernel[j])])
            candidates.append([a + 2 * b for a, b in zip(kernel[i], kernel[j])])
    if len(kernel) > 2:
        candidates.append([sum(col, QQ(0)) for col in zip(*kernel)])
    top, bottom = det.m
    for lam in candidates:
        combo_top = [
            sum((lam[j] * top[j].coeffs[i] for j in range(n)), QQ(0))
            for i in range(n + 1)
        ]
        combo_bottom = [
            sum((lam[j] * bottom[j].coeffs[i] for j in range(n)), QQ(0))
            for i in range(n + 1)
        ]
        if not any(combo_top) or not any(combo_bottom):
            continue
        if canonical_rowspace([combo_top, combo_bottom]) == pencil.canonical:
            return lam
    return None


def chord_space(curve: ParamRnc, params: Sequence) -> Pencil:
    """The span of n-1 distinct curve points given by their parameters."""
    pts = []
    seen = set()
    for p in params:
        t = p if isinstance(p, ProjPoint) else parameter(*p)
        if t in seen:
            raise RepeatedParameter(f"parameter {t} repeated")
        seen.add(t)
        pts.append(point_at_param(curve, t))
    return pencil_from_points(pts)


def quadric_space(curve) -> tuple:
    """Canonical basis (RREF rows) of the quadrics vanishing on the curve.

    Parametrized curves impose 2n+1 coefficient conditions on the monomial
    vector; determinantal curves contribute their 2 x 2 minors, which span
    the same C(n, 2)-dimensional space.  Comparing the canonical bases
    decides equality of curves, since a rnc is cut out by its quadrics.
    """
    if isinstance(curve, ParamRnc):
        if curve._quadspace is not None:
            return curve._quadspace
        n = curve.n
        monos = monomials(n, 2)
        # coefficient vectors are integral after normalization
        int_forms = [[int(c) for c in f.coeffs] for f in curve.forms]
        products = []
        for e in monos:
            i = next(k for k, v in enumerate(e) if v)
            j = i if e[i] == 2 else next(k for k in range(i + 1, n + 1) if e[k])
            a, b = int_forms[i], int_forms[j]
            conv = [0] * (2 * n + 1)
            for ka, ca in enumerate(a):
                if ca:
                    for kb, cb in enumerate(b):
                        if cb:
                            conv[ka + kb] += ca * cb
            products.append(conv)
        rows = [[prod[a] for prod in products] for a in range(2 * n + 1)]
        space = canonical_rowspace(nullspace(rows))
        curve._quadspace = space
        return space
    if isinstance(curve, DetRnc):
        n = curve.n
        idx = monomial_index(monomials(n, 2))
        top, bottom = curve.m
        columns = [
            joint_integerize([top[j].coeffs, bottom[j].coeffs]) for j in range(n)
        ]
        vectors = []
        for j in range(n):
            for k in range(j + 1, n):
                minor = [0] * len(idx)
                for (fa, fb) in ((0, 1), (1, 0)):
                    sign = 1 if fa == 0 else -1
                    left, right = columns[j][fa], columns[k][fb]
                    for i1 in range(n + 1):
                        ci = left[i1]
                        if not ci:
                            continue
                        for i2 in range(n + 1):
                            cj = right[i2]
                            if cj:
                                key = tuple(
                                    (1 if t == i1 else 0) + (1 if t == i2 else 0)
                                    for t in range(n + 1)
                                )
                                minor[idx[key]] += sign * ci * cj
                vectors.append(minor)
        return canonical_rowspace(vectors)
    raise TypeError(f"not a curve: {type(curve).__name__}")


def curve_equals(a, b) -> bool:
    """Exact image equality via the canonical quadric spaces."""
    n_a = a.n if isinstance(a, (ParamRnc, DetRnc)) else None
    n_b = b.n if isinstance(b, (ParamRnc, DetRnc)) else None
    if n_a is None or n_b is None:
        raise TypeError("curve_equals compares curves")
    if n_a != n_b:
        raise DimensionMismatch("curves live in different spaces")
    return quadric_space(a) == quadric_space(b)


def reparametrize(curve: ParamRnc, a, b, c, d) -> ParamRnc:
    """Precompose the parametrization with an invertible Moebius map."""
    if QQ(a) * QQ(d) - QQ(b) * QQ(c) == 0:
        raise ValueError("Moebius substitution must be invertible")
    return ParamRnc([f.substitute(a, b, c, d) for f in curve.forms])


def verify_datum(curve: ParamRnc, datum) -> VerificationReport:
    """Check every incidence condition of a datum exactly.

    Points must lie on the curve; each codimension-two space must cut a
    degree n-1 smooth (squarefree) scheme.  The report keeps each point's
    parameter and each space's gcd form for downstream consumers.
    """
    if datum.n != curve.n:
        raise DimensionMismatch("datum and curve dimensions differ")
    point_checks = []
    for p in datum.points:
        t = param_of_point(curve, p)
        point_checks.append(PointCheck(point=p, on_curve=t is not None, param=t))
    space_checks = [
        SpaceCheck(pencil=lam, secancy=secancy(curve, lam)) for lam in datum.spaces
    ]
    passed = all(pc.on_curve for pc in point_checks) and all(
        sc.secancy.is_n_minus_1_secant for sc in space_checks
    )
    return VerificationReport(
        points=tuple(point_checks), spaces=tuple(space_checks), passed=passed
    )


@register_transform(ParamRnc)
def _transform_param_rnc(t: ProjTransform, curve: ParamRnc) -> ParamRnc:
    if t.n != curve.n:
        raise DimensionMismatch("transform and curve dimensions differ")
    n = curve.n
    new_forms = []
    for i in range(n + 1):
        acc = BinaryForm.zero(n)
        for j in range(n + 1):
            coeff = t.matrix.entries[i][j]
            if coeff:
                acc = acc + coeff * curve.forms[j]
        new_forms.append(acc)
    return ParamRnc(new_forms)


@register_transform(DetRnc)
def _transform_det_rnc(t: ProjTransform, det: DetRnc) -> DetRnc:
    from .projective import transform

    return DetRnc([[transform(t, f) for f in row] for row in det.m])
