"""Monomial bases and linear conditions on degree-d hypersurfaces.

Monomials of a fixed degree are always listed in descending graded reverse
lexicographic order; every coefficient vector in the package refers to that
ordering.  Containment and double-vanishing conditions along a
codimension-two space are generated in adapted coordinates (the space moved
to {y0 = y1 = 0}) and pulled back through the substitution, which keeps the
row generation purely combinatorial.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb

from .linalg import Matrix, ff_rank
from .projective import LinForm, Pencil, ProjPoint
from .scalars import QQ

Expt = tuple  # exponent tuple, length n+1


def _grevlex_key(e: Expt):
    return tuple(-x for x in reversed(e))


def monomials(n: int, d: int) -> list[Expt]:
    """All degree-d exponent tuples on n+1 variables, grevlex descending."""
    out = []
    for combo in combinations_with_replacement(range(n + 1), d):
        e = [0] * (n + 1)
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    out.sort(key=_grevlex_key, reverse=True)
    return out


def monomial_count(n: int, d: int) -> int:
    return comb(n + d, d)


def monomial_index(monos: list[Expt]) -> dict[Expt, int]:
    return {m: i for i, m in enumerate(monos)}


def evaluate_monomial(e: Expt, coords) -> QQ:
    val = QQ(1)
    for x, k in zip(coords, e):
        for _ in range(k):
            val *= x
    return val


def evaluate_poly(coeffs, monos: list[Expt], point: ProjPoint) -> QQ:
    total = QQ(0)
    for c, m in zip(coeffs, monos):
        if c:
            total += c * evaluate_monomial(m, point.coords)
    return total


def point_value_row(point: ProjPoint, monos: list[Expt]) -> list[QQ]:
    return [evaluate_monomial(m, point.coords) for m in monos]


def point_derivative_rows(point: ProjPoint, monos: list[Expt]) -> list[list[QQ]]:
    """One row per variable: the gradient of the monomial basis at the point.

    The value row is omitted by callers that need double points: it is a
    combination of these by the Euler relation d*F = sum x_i dF/dx_i.
    """
    nvars = point.n + 1
    degree = sum(monos[0]) if monos else 0
    pows = [[QQ(1)] for _ in range(nvars)]
    for j in range(nvars):
        for _ in range(degree):
            pows[j].append(pows[j][-1] * point.coords[j])
    rows = []
    for i in range(nvars):
        row = []
        for m in monos:
            if not m[i]:
                row.append(QQ(0))
                continue
            val = QQ(m[i])
            for j in range(nvars):
                val *= pows[j][m[j] - (1 if j == i else 0)]
            row.append(val)
        rows.append(row)
    return rows


def adapted_matrix(pencil: Pencil) -> Matrix:
    """Invertible matrix R whose first two rows are the pencil's canonical
    forms; y = R x moves the space to {y0 = y1 = 0}.  The completion by
    standard basis vectors is greedy, hence deterministic."""
    n = pencil.n
    rows = [list(r) for r in pencil.canonical]
    for j in range(n + 1):
        candidate = [QQ(int(k == j)) for k in range(n + 1)]
        if ff_rank(rows + [candidate]) > len(rows):
            rows.append(candidate)
        if len(rows) == n + 1:
            break
    return Matrix(rows)


def _mul_linear(poly: dict, lin, nvars: int) -> dict:
    out: dict = {}
    for mono, c in poly.items():
        for b in range(nvars):
            coeff = lin[b]
            if coeff:
                key = mono[:b] + (mono[b] + 1,) + mono[b + 1:]
                out[key] = out.get(key, QQ(0)) + c * coeff
    return out


def _expand_monomial(e: Expt, subst_rows, nvars: int) -> dict:
    """Expansion of the monomial after substituting x_a = sum subst_rows[a][b] y_b."""
    poly = {(0,) * nvars: QQ(1)}
    for a, k in enumerate(e):
        for _ in range(k):
            poly = _mul_linear(poly, subst_rows[a], nvars)
    return poly


def space_condition_rows(pencil: Pencil, d: int, order: int) -> list[list[QQ]]:
    """Rows forcing a degree-d form to vanish on the pencil's space to the
    given order (1 = containment, 2 = double space).

    In adapted coordinates the condition is that every coefficient on a
    monomial with y0-y1 degree < order vanishes; rows are those adapted
    coefficients expressed on the ambient monomial basis.
    """
    return [list(r) for r in _space_rows_cached(pencil.canonical, d, order)]


@lru_cache(maxsize=4096)
def _space_rows_cached(stack: tuple, d: int, order: int) -> tuple:
    f, g = stack
    pencil = Pencil(LinForm(f), LinForm(g))
    n = pencil.n
    nvars = n + 1
    monos = monomials(n, d)
    back = adapted_matrix(pencil).inverse()
    subst = [list(back.entries[a]) for a in range(nvars)]
    targets = [m for m in monos if m[0] + m[1] < order]
    target_pos = {m: i for i, m in enumerate(targets)}
    rows = [[QQ(0)] * len(monos) for _ in targets]
    for col, e in enumerate(monos):
        for mono, coeff in _expand_monomial(e, subst, nvars).items():
            i = target_pos.get(mono)
            if i is not None:
                rows[i][col] = coeff
    return tuple(tuple(r) for r in rows)


def containment_rows(pencil: Pencil, d: int) -> list[list[QQ]]:
    return space_condition_rows(pencil, d, order=1)


def double_space_rows(pencil: Pencil, d: int) -> list[list[QQ]]:
    return space_condition_rows(pencil, d, order=2)


def linform_product_vector(a: LinForm, b: LinForm, index: dict[Expt, int]) -> list[QQ]:
    """Coefficient vector of the quadric a*b on the degree-2 monomial basis."""
    nvars = a.n + 1
    out = [QQ(0)] * len(index)
    for i in range(nvars):
        ai = a.coeffs[i]
        if not ai:
            continue
        for j in range(nvars):
            bj = b.coeffs[j]
            if not bj:
                continue
            key = tuple(
                (1 if k == i else 0) + (1 if k == j else 0) for k in range(nvars)
            )
            out[index[key]] += ai * bj
    return out
