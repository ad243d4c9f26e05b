import itertools

import pytest

import oracles
from quivercurves.elliptic import (
    INFINITY,
    ECPoint,
    WeierstrassCurve,
    curve_from_rep,
    discriminant_ok,
    ec_add,
    ec_mul,
    ec_neg,
    ec_point,
    ec_points,
    ec_to_grass,
    gr_add,
    gr_identity,
    gr_neg,
    grass_group_elements,
    grass_to_ec,
    group_order,
    hasse_ok,
    to_poly,
    weierstrass_poly,
    weierstrass_rep,
)
from quivercurves.errors import (
    InvariantViolation,
    OffCurveError,
    SingularCurveError,
    UnsupportedCharacteristicError,
)
from quivercurves.field import FieldSpec
from quivercurves.poly import eval_poly, parse_poly, singular_points
from quivercurves.projective import point
from quivercurves.quiver import build_representation, enumerate_grassmannian
from quivercurves.veronese import linearize


def smooth_curves(p, count):
    F = FieldSpec.prime(p)
    out = []
    for a, b in itertools.product(range(p), repeat=2):
        if (4 * a**3 + 27 * b**2) % p:
            out.append(WeierstrassCurve(F, a, b))
        if len(out) == count:
            break
    return out


def test_discriminant_examples(F5, QQ):
    assert not discriminant_ok(F5(0), F5(0))
    assert discriminant_ok(F5(1), F5(1))
    assert not discriminant_ok(QQ(-3), QQ(2))
    with pytest.raises(UnsupportedCharacteristicError):
        discriminant_ok(FieldSpec.prime(3)(1), FieldSpec.prime(3)(1))
    with pytest.raises(UnsupportedCharacteristicError):
        WeierstrassCurve(FieldSpec.prime(2), 1, 1)
    with pytest.raises(SingularCurveError):
        WeierstrassCurve(QQ, -3, 2)


def test_to_poly(F5):
    curve = WeierstrassCurve(F5, 1, 1)
    P = to_poly(curve)
    assert {m: c.value for m, c in P.coeffs.items()} == {(0, 2, 1): 1, (3, 0, 0): 4, (1, 0, 2): 4, (0, 0, 3): 4}
    assert P == parse_poly("y^2*z - x^3 - x*z^2 - z^3", F5)
    f = linearize(P)
    assert {i for i, c in enumerate(f) if not c.is_zero()} == {0, 5, 7, 9}
    assert eval_poly(P, point(F5, 0, 1, 0)).is_zero()


def test_group_order_examples(F5):
    curve = WeierstrassCurve(F5, 1, 1)
    assert len(oracles.affine_ec_points(1, 1, 5)) == 8
    assert group_order(curve) == 9
    assert len(ec_points(curve)) == 9


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_hasse(p):
    for curve in smooth_curves(p, 50):
        n = group_order(curve)
        assert hasse_ok(n, p)
        assert n == 1 + len(oracles.affine_ec_points(curve.a.value, curve.b.value, p))


def test_add_identity_and_inverse(F5):
    curve = WeierstrassCurve(F5, 1, 1)
    for P in ec_points(curve):
        assert ec_add(curve, P, INFINITY) == P
        assert ec_add(curve, INFINITY, P) == P
        assert ec_add(curve, P, ec_neg(curve, P)) == INFINITY


def test_off_curve_rejected(F5):
    curve = WeierstrassCurve(F5, 1, 1)
    with pytest.raises(OffCurveError):
        ec_add(curve, ECPoint(F5(1), F5(1)), INFINITY)
    with pytest.raises(OffCurveError):
        ec_point(curve, 1, 1)


def _to_tuple(P):
    return None if P.is_infinity else (P.x.value, P.y.value)


@pytest.mark.parametrize("p,a,b", [(5, 1, 1), (7, 3, 2), (11, 1, 6), (13, 2, 5)])
def test_addition_table_matches_intersection_oracle(p, a, b):
    curve = WeierstrassCurve(FieldSpec.prime(p), a, b)
    pts = ec_points(curve)
    for P, Q in itertools.product(pts, repeat=2):
        assert _to_tuple(ec_add(curve, P, Q)) == oracles.ec_add_by_intersection(a, b, p, _to_tuple(P), _to_tuple(Q))


def test_scalar_multiple_order(F5):
    curve = WeierstrassCurve(F5, 1, 1)
    for P in ec_points(curve):
        assert ec_mul(curve, 9, P) == INFINITY
        assert ec_mul(curve, -1, P) == ec_neg(curve, P)


def test_order_matches_grassmannian_f5():
    # scans all 2 441 406 points of P^9(F_5)
    curve = WeierstrassCurve(FieldSpec.prime(5), 1, 1)
    grass = enumerate_grassmannian(build_representation(to_poly(curve)))
    assert len(grass) == group_order(curve) == 9
    assert set(grass) == set(grass_group_elements(weierstrass_rep(curve)))


def test_gr_identity(F5):
    rep = weierstrass_rep(WeierstrassCurve(F5, 1, 1))
    e = gr_identity(rep)
    assert e.line2.to_text() == "[0:0:0:0:0:0:1:0:0:0]"
    for u in grass_group_elements(rep):
        assert gr_add(rep, u, e) == u


def test_transported_table_f5(F5):
    curve = WeierstrassCurve(F5, 1, 1)
    rep = weierstrass_rep(curve)
    pts = ec_points(curve)
    for P, Q in itertools.product(pts, repeat=2):
        assert gr_add(rep, ec_to_grass(rep, P), ec_to_grass(rep, Q)) == ec_to_grass(rep, ec_add(curve, P, Q))


@pytest.mark.parametrize("p", [5, 7, 11])
def test_group_axioms_on_grassmannian(p):
    for curve in smooth_curves(p, 3):
        rep = weierstrass_rep(curve)
        G = grass_group_elements(rep)
        Gset = set(G)
        e = gr_identity(rep)
        table = {(u, v): gr_add(rep, u, v) for u in G for v in G}
        assert set(table.values()) <= Gset
        for u, v in itertools.product(G, repeat=2):
            assert table[u, v] == table[v, u]
        for u, v, w in itertools.product(G, repeat=3):
            assert table[table[u, v], w] == table[u, table[v, w]]
        for u in G:
            assert table[u, e] == u
            assert table[u, gr_neg(rep, u)] == e


@pytest.mark.parametrize("p", [5, 7])
def test_discriminant_iff_no_rational_singular_point(p):
    F = FieldSpec.prime(p)
    for a, b in itertools.product(F.elements(), repeat=2):
        P = weierstrass_poly(a, b)
        sing = singular_points(P)
        assert discriminant_ok(a, b) == (sing == [])
        assert sorted(tuple(c.value for c in q.coords) for q in sing) == sorted(
            oracles.singular({m: c.value for m, c in P.coeffs.items()}, p)
        )


def test_rational_group_law(QQ):
    curve = WeierstrassCurve(QQ, -2, 1)
    P = ec_point(curve, 0, 1)
    Q = ec_point(curve, 1, 0)
    R = ec_add(curve, P, Q)
    assert curve.contains(R)
    rep = weierstrass_rep(curve)
    u = gr_add(rep, ec_to_grass(rep, P), ec_to_grass(rep, Q))
    assert grass_to_ec(rep, u) == R
    D = ec_add(curve, P, P)
    assert D.x.to_text() == "1" and D.y.to_text() == "0"


def test_curve_from_rep(F5):
    rep = weierstrass_rep(WeierstrassCurve(F5, 2, 1))
    c = curve_from_rep(rep)
    assert (c.a.value, c.b.value) == (2, 1)
    with pytest.raises(InvariantViolation):
        curve_from_rep(build_representation(parse_poly("x^3 + y^3 + z^3", F5)))
    scaled = build_representation(parse_poly("2*y^2*z - 2*x^3 - 4*x*z^2 - 2*z^3", F5))
    c = curve_from_rep(scaled)
    assert (c.a.value, c.b.value) == (2, 1)
