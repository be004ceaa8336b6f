"""Acceptance suite: one test per criterion, one PASS/FAIL line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines and
timings as they complete.  Every assertion is exact (tolerance zero).
"""

import json
import time
from contextlib import contextmanager
from fractions import Fraction as QQ

from rncgeo.construct import (
    Datum,
    construct,
    construct_through_points,
    construct_through_points_cremona,
    expected_count,
)
from rncgeo.curves import (
    chord_space,
    curve_equals,
    param_to_det,
    generalized_column_for,
    point_at_param,
    secancy,
)
from rncgeo.equivalence import signature, signature_from_curve
from rncgeo.errors import NotGeneric
from rncgeo.generate import (
    distinct_parameters,
    forward_datum,
    random_datum,
    random_pencil,
    random_point,
    random_rnc,
    random_transform,
    rng_from_seed,
)
from rncgeo.obstruct import nonexistence_certificate, obstruction_quadric
from rncgeo.postulation import (
    double_point_report,
    hilbert_function,
    quartic_shape_spec,
)
from rncgeo.projective import LinForm, Pencil, ProjPoint, apply_transform
from rncgeo.quadrics import monomial_index, monomials
from rncgeo.curves import reparametrize
from rncgeo.serialize import obstruction_in, obstruction_out


@contextmanager
def criterion(number: int, label: str):
    started = time.time()
    try:
        yield
    except BaseException:
        print(f"[acceptance] criterion {number} FAIL ({time.time() - started:.1f}s): {label}")
        raise
    print(f"[acceptance] criterion {number} PASS ({time.time() - started:.1f}s): {label}")


def test_criterion_1_castelnuovo():
    with criterion(1, "unique curve through n+3 generic points; two routes agree"):
        for n in range(3, 7):
            for seed in range(95):
                rng = rng_from_seed((1, n, seed))
                datum, generator = forward_datum(n, n + 3, 0, rng)
                cert = construct_through_points(datum.points)
                assert cert.report.passed
                assert curve_equals(cert.curve, generator)
                via_cremona = construct_through_points_cremona(datum.points)
                assert via_cremona.report.passed
                assert curve_equals(cert.curve, via_cremona.curve)
            # a few raw coordinate draws, independent of the curve sampler
            built = 0
            attempt = 0
            while built < 5:
                rng = rng_from_seed((1, n, 1000 + attempt))
                attempt += 1
                points = []
                while len(points) < n + 3:
                    candidate = random_point(n, rng)
                    if candidate not in points:
                        points.append(candidate)
                try:
                    cert = construct_through_points(points)
                except NotGeneric:
                    continue
                assert cert.report.passed
                assert curve_equals(
                    cert.curve, construct_through_points_cremona(points).curve
                )
                built += 1


def test_criterion_2_uniqueness_by_reconstruction():
    with criterion(2, "each existence case reconstructs its generator (100 seeds)"):
        shapes = {
            "one_space": lambda n: (n + 2, 1),
            "three_points": lambda n: (3, n),
            "two_points": lambda n: (2, n + 1),
            "one_point": lambda n: (1, n + 2),
        }
        for n in range(3, 7):
            for name, shape in shapes.items():
                p, l = shape(n)
                for seed in range(100):
                    rng = rng_from_seed((2, n, name, seed))
                    datum, generator = forward_datum(n, p, l, rng)
                    cert = construct(datum)
                    assert cert.report.passed, (n, name, seed)
                    assert curve_equals(cert.curve, generator), (n, name, seed)


def test_criterion_3_nonexistence():
    with criterion(3, "obstruction certificates: concrete instance and seeded data"):
        # the concrete P^3 instance
        l1 = Pencil(LinForm([1, 0, 0, 0]), LinForm([0, 1, 0, 0]))
        l2 = Pencil(LinForm([0, 0, 1, 0]), LinForm([0, 0, 0, 1]))
        points = (
            ProjPoint([1, 1, 1, 1]),
            ProjPoint([1, 2, 4, 8]),
            ProjPoint([1, 3, 9, 27]),
            ProjPoint([1, 1, 2, 3]),
        )
        quad = obstruction_quadric(l1, l2, *points[:3])
        idx = monomial_index(monomials(3, 2))
        expected = [QQ(0)] * len(idx)
        expected[idx[(0, 1, 1, 0)]] = QQ(1)   # x1 x2
        expected[idx[(1, 0, 0, 1)]] = QQ(-1)  # -x0 x3
        assert quad == expected
        cert = nonexistence_certificate(Datum(n=3, spaces=(l1, l2), points=points))
        assert cert.excluded_value == QQ(-1)
        assert cert.ledger.intersection_lower_bound == 7 > 6 == cert.ledger.bezout_bound

        # seeded generic data for every shape with p >= 4, l >= 2, n = 3..5
        shapes = [(3, 4, 2), (4, 4, 3), (4, 5, 2), (5, 4, 4), (5, 5, 3), (5, 6, 2)]
        for n, p, l in shapes:
            for seed in range(100):
                rng = rng_from_seed((3, n, p, l, seed))
                datum, _ = random_datum(n, p, l, rng)
                cert = nonexistence_certificate(datum)
                assert cert.ledger.intersection_lower_bound == 2 * n + 1
                assert cert.ledger.bezout_bound == 2 * n
                assert cert.ledger.contradiction  # exact integers: 2n+1 > 2n
                back = obstruction_in(json.loads(json.dumps(obstruction_out(cert))))
                assert back.verify()


def test_criterion_4_postulation_numbers():
    with criterion(4, "exact Hilbert functions: defect values and controls"):
        # seven double points in P^4 against cubics
        r = double_point_report(4, 7, 3, rng_from_seed((4, "seven")))
        assert r.conditions_sum == 35 and r.expected == 35
        assert r.actual_hf == 34

        # the quartic double-space shape
        r3 = hilbert_function(quartic_shape_spec(3, seed=(4, "shape3")))
        assert r3.h_formula_value == 33
        assert r3.actual_hf <= 32
        r4 = hilbert_function(quartic_shape_spec(4, seed=(4, "shape4")))
        assert r4.h_formula_value == 65
        assert r4.actual_hf <= 64

        # classical quartic exceptions
        for (n, p, d), (expected, actual) in {
            (2, 5, 4): (15, 14),
            (3, 9, 4): (35, 34),
            (4, 14, 4): (70, 69),
        }.items():
            rep = double_point_report(n, p, d, rng_from_seed((4, n, p, d)))
            assert rep.expected == expected
            assert rep.actual_hf == actual

        # non-exceptional control: deficit zero
        control = double_point_report(2, 5, 3, rng_from_seed((4, "control")))
        assert control.expected == 10 and control.actual_hf == 10
        assert control.deficit == 0


def test_criterion_5_generalized_column_equivalence():
    with criterion(5, "generalized column exists iff intersection degree is n-1"):
        for n in range(3, 7):
            for seed in range(10):
                rng = rng_from_seed((5, n, seed))
                curve = random_rnc(n, rng)
                det = param_to_det(curve)
                for _ in range(10):  # 100 chords per n in total
                    params = distinct_parameters(n - 1, rng)
                    chord = chord_space(curve, params)
                    degree = secancy(curve, chord).degree
                    lam = generalized_column_for(det, chord)
                    assert degree == n - 1
                    assert lam is not None
                for _ in range(10):  # 100 random pencils per n in total
                    pencil = random_pencil(n, rng)
                    degree = secancy(curve, pencil).degree
                    lam = generalized_column_for(det, pencil)
                    assert (lam is not None) == (degree == n - 1)


def test_criterion_6_equivalence():
    with criterion(6, "signatures decide ordered projective equivalence"):
        shapes = [(3, 6, 0), (3, 3, 3)]
        for n, p, l in shapes:
            for seed in range(100):  # 100 transform pairs per shape
                rng = rng_from_seed((6, "pgl", n, p, l, seed))
                datum, _ = forward_datum(n, p, l, rng)
                moved = apply_transform(random_transform(n, rng), datum)
                assert signature(datum) == signature(moved)
            for seed in range(100):  # 100 perturbed pairs per shape
                rng = rng_from_seed((6, "perturb", n, p, l, seed))
                curve = random_rnc(n, rng)
                params = distinct_parameters(p + l * (n - 1) + 1, rng)
                used, fresh = params[:-1], params[-1]
                points = [point_at_param(curve, t) for t in used[:p]]
                spaces = [
                    chord_space(curve, used[p + k * (n - 1): p + (k + 1) * (n - 1)])
                    for k in range(l)
                ]
                a = Datum(n=n, spaces=spaces, points=points)
                # move the last point to a fresh parameter on the same curve
                perturbed_points = points[:-1] + [point_at_param(curve, fresh)]
                b = Datum(n=n, spaces=spaces, points=perturbed_points)
                assert signature(a) != signature(b)
        for seed in range(20):  # reparametrization invariance
            rng = rng_from_seed((6, "repar", seed))
            datum, _ = forward_datum(3, 3, 3, rng)
            curve = construct(datum).curve
            base = signature_from_curve(curve, datum)
            a, b, c, d = 2, 1, 1, 1
            while QQ(a) * d - QQ(b) * c == 0:
                a, b, c, d = (rng.randint(-5, 5) for _ in range(4))
            again = signature_from_curve(reparametrize(curve, a, b, c, d), datum)
            assert again == base
            assert base == signature(datum)


def test_criterion_7_classification_table():
    with criterion(7, "full classification of finite-count shapes"):
        for n in range(3, 9):
            for p in range(0, n + 4):
                l = n + 3 - p
                analysis = expected_count(n, p, l)
                assert analysis.verdict == "finite_expected"
                assert analysis.dim_h == (n - 1) * (n + 3)
                assert analysis.conditions == (p + l) * (n - 1)
                if p in (n + 3, n + 2, 3, 2, 1):
                    assert analysis.classification == "exists_unique"
                    assert analysis.curve_count == 1
                elif p >= 4:
                    assert analysis.classification == "not_exists"
                    assert analysis.curve_count == 0
                elif n == 3:  # (p, l) = (0, 6)
                    assert analysis.classification == "exists_nonunique"
                    assert analysis.curve_count == 6
                else:
                    assert analysis.classification == "open"
                    assert analysis.curve_count is None
