"""Projective equivalence of ordered configurations via the interpolating
curve.

A datum with p >= 3 points determines a unique curve; reading the points
as parameters and the spaces as degree-(n-1) forms on the parameter line
reduces equivalence in P^n to equivalence of the resulting configurations
on P^1.  Normalizing the first three point parameters to (0:1), (1:1),
(1:0) by the unique Moebius map kills the reparametrization freedom, so
two configurations are equivalent iff their normalized signatures are
componentwise equal.
"""

from __future__ import annotations

from dataclasses import dataclass

from .binforms import BinaryForm
from .construct import Datum, ExistenceCertificate, construct
from .curves import ParamRnc, VerificationReport, verify_datum
from .errors import DimensionMismatch, NotGeneric, UnsupportedCaseError
from .projective import ProjPoint, frame_map, transform


@dataclass(frozen=True)
class Signature:
    """Moebius-normalized parameter data of a configuration on its curve."""

    n: int
    p: int
    l: int
    point_params: tuple[ProjPoint, ...]
    space_forms: tuple[BinaryForm, ...]

    ANCHORS = (ProjPoint([0, 1]), ProjPoint([1, 1]), ProjPoint([1, 0]))


def _signature_from_report(datum: Datum, report: VerificationReport) -> Signature:
    params = [pc.param for pc in report.points]
    d_forms = [sc.secancy.d_form for sc in report.spaces]
    t1, t2, t3 = params[0], params[1], params[2]
    try:
        # frame_map on P^1 sends its three inputs to (1:0), (0:1), (1:1)
        moebius = frame_map([t3, t1, t2])
    except NotGeneric as exc:
        raise NotGeneric(
            "anchor parameters are not distinct",
            stage="signature:anchor",
            witness=(t1, t2, t3),
        ) from exc
    normalized_params = tuple(transform(moebius, t) for t in params)
    assert normalized_params[:3] == Signature.ANCHORS
    inv = moebius.inverse_matrix()
    normalized_forms = tuple(
        d.substitute(
            inv.entries[0][0], inv.entries[0][1], inv.entries[1][0], inv.entries[1][1]
        ).monic()
        for d in d_forms
    )
    return Signature(
        n=datum.n,
        p=datum.p,
        l=datum.l,
        point_params=normalized_params,
        space_forms=normalized_forms,
    )


def signature_from_curve(curve: ParamRnc, datum: Datum) -> Signature:
    """Signature read off a given satisfying curve (any parametrization of
    the same curve yields the identical signature)."""
    if datum.p < 3:
        raise UnsupportedCaseError(
            "signatures need at least three points to anchor the parameter line"
        )
    report = verify_datum(curve, datum)
    if not report.passed:
        raise NotGeneric(
            "curve does not satisfy the datum", stage="signature:verify", witness=report
        )
    return _signature_from_report(datum, report)


def signature(datum: Datum) -> Signature:
    """Construct the unique interpolating curve and normalize the datum on
    it.  Defined for the existence shapes with p >= 3."""
    if datum.p < 3:
        raise UnsupportedCaseError(
            "signatures need at least three points to anchor the parameter line"
        )
    result = construct(datum)
    if not isinstance(result, ExistenceCertificate):
        raise UnsupportedCaseError(
            f"shape (p, l) = ({datum.p}, {datum.l}) admits no interpolating curve"
        )
    return _signature_from_report(datum, result.report)


def are_equivalent(a: Datum, b: Datum) -> bool:
    """Ordered projective equivalence of two configurations."""
    if (a.n, a.p, a.l) != (b.n, b.p, b.l):
        raise DimensionMismatch("configurations have different shapes")
    return signature(a) == signature(b)
