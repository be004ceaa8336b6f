"""Non-existence certificates for configurations with p >= 4 points and
l >= 2 codimension-two spaces.

A quadric through both spaces and three of the points always exists by a
condition count; if it misses the fourth point, no curve can satisfy the
datum: a curve through four of the points and secant to both spaces would
meet the quadric in degree at least 3 + 2(n-1-t) + 2t = 2n+1 > 2n (t being
the degree of the scheme cut on the intersection of the two spaces, along
which the quadric is singular), forcing the curve inside the quadric and
contradicting the missed point.

The certificate stores what a machine can re-check exactly: the quadric,
its containments, the nonzero value at the excluded point and the integer
ledger; the final Bezout inference is arithmetic on that ledger.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadShape, NotGeneric, ObstructionFails
from .linalg import nullspace
from .projective import Pencil, ProjPoint
from .quadrics import (
    containment_rows,
    evaluate_poly,
    monomials,
    point_value_row,
)
from .scalars import QQ


@dataclass(frozen=True)
class DegreeLedger:
    """Integer bookkeeping of the Bezout contradiction: any curve
    satisfying the datum meets the quadric in degree at least
    `intersection_lower_bound`, but a curve not inside a quadric meets it
    in degree at most `bezout_bound`."""

    n: int
    intersection_lower_bound: int
    bezout_bound: int

    @property
    def contradiction(self) -> bool:
        return self.intersection_lower_bound > self.bezout_bound


@dataclass(frozen=True)
class ObstructionCertificate:
    n: int
    quadric: tuple  # coefficients on the degree-2 monomial basis
    spaces: tuple  # the two pencils the quadric contains
    points: tuple  # the three interpolated points
    excluded_point: ProjPoint
    excluded_value: QQ
    ledger: DegreeLedger

    def contains_flags(self) -> dict:
        """Exact re-verification of every checkable claim."""
        monos = monomials(self.n, 2)
        flags = {}
        for k, pencil in enumerate(self.spaces):
            rows = containment_rows(pencil, 2)
            flags[f"space_{k}"] = all(
                sum((r * q for r, q in zip(row, self.quadric)), QQ(0)) == 0
                for row in rows
            )
        for k, point in enumerate(self.points):
            flags[f"point_{k}"] = evaluate_poly(self.quadric, monos, point) == 0
        return flags

    def verify(self) -> bool:
        return (
            all(self.contains_flags().values())
            and evaluate_poly(self.quadric, monomials(self.n, 2), self.excluded_point)
            == self.excluded_value
            and self.excluded_value != 0
            and self.ledger.contradiction
        )


def obstruction_quadric(
    l1: Pencil, l2: Pencil, p1: ProjPoint, p2: ProjPoint, p3: ProjPoint
) -> list[QQ]:
    """The quadric through both spaces and the three points.

    The conditions kernel always has dimension >= 1 by the count
    C(n+2,2) - [2 C(n,2) - C(n-2,2)] - 3 = 1; generic data give exactly 1,
    anything else is flagged NotGeneric.  The result is normalized so its
    first nonzero coefficient (grevlex order) is 1."""
    n = l1.n
    if n < 3:
        raise BadShape("obstruction quadrics need n >= 3")
    monos = monomials(n, 2)
    rows = containment_rows(l1, 2) + containment_rows(l2, 2)
    for p in (p1, p2, p3):
        rows.append(point_value_row(p, monos))
    kernel = nullspace(rows)
    if len(kernel) != 1:
        raise NotGeneric(
            f"conditions cut a {len(kernel)}-dimensional quadric system, expected 1",
            stage="obstruction:conditions_rank",
            witness=len(kernel),
        )
    quad = kernel[0]
    lead = next(c for c in quad if c)
    return [c / lead for c in quad]


def nonexistence_certificate(datum) -> ObstructionCertificate:
    """Certify that no curve satisfies a generic p >= 4, l >= 2 datum.

    Uses the first two spaces and the first four points; if the quadric
    vanishes at the fourth point the datum is special and ObstructionFails
    reports it (without concluding existence)."""
    n, p, l = datum.n, datum.p, datum.l
    if p < 4 or l < 2 or p + l != n + 3:
        raise BadShape(
            f"obstruction applies to p >= 4, l >= 2, p + l = n + 3; got ({p}, {l})"
        )
    l1, l2 = datum.spaces[0], datum.spaces[1]
    p1, p2, p3, p4 = datum.points[:4]
    quad = obstruction_quadric(l1, l2, p1, p2, p3)
    value = evaluate_poly(quad, monomials(n, 2), p4)
    if value == 0:
        raise ObstructionFails(
            "quadric vanishes at the fourth point: datum is special",
            stage="obstruction:excluded_point",
            witness=p4,
        )
    ledger = DegreeLedger(
        n=n, intersection_lower_bound=2 * n + 1, bezout_bound=2 * n
    )
    cert = ObstructionCertificate(
        n=n,
        quadric=tuple(quad),
        spaces=(l1, l2),
        points=(p1, p2, p3),
        excluded_point=p4,
        excluded_value=value,
        ledger=ledger,
    )
    if not cert.verify():
        raise NotGeneric(
            "certificate failed its own re-verification",
            stage="obstruction:selfcheck",
        )
    return cert
