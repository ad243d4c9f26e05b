"""Brute-force reference computations on plain integers mod p.

Nothing here imports the package: these are the independent side of every
cross-check.
"""

import itertools


def proj_points(n, p):
    """Canonical (first nonzero = 1) int tuples of P^n(F_p), any order."""
    out = []
    for v in itertools.product(range(p), repeat=n + 1):
        nz = [c for c in v if c]
        if nz and nz[0] == 1:
            out.append(v)
    return out


def canon(v, p):
    for c in v:
        if c % p:
            inv = pow(c, -1, p)
            return tuple(x * inv % p for x in v)
    raise ValueError("zero vector")


def monomials(d):
    # deliberately built differently: sort all triples by descending lex
    return sorted(
        ((a, b, c) for a in range(d + 1) for b in range(d + 1) for c in range(d + 1) if a + b + c == d),
        reverse=True,
    )


def evaluate(poly, pt, p):
    """``poly`` is a dict {(a, b, c): int}."""
    x, y, z = pt
    return sum(c * x**a * y**b * z**e for (a, b, e), c in poly.items()) % p


def curve_count(poly, p):
    return sum(1 for pt in proj_points(2, p) if evaluate(poly, pt, p) == 0)


def veronese(pt, d, p):
    x, y, z = pt
    return canon([x**a * y**b * z**c for a, b, c in monomials(d)], p)


def poly_mul(g, h, p):
    out = {}
    for m, a in g.items():
        for n, b in h.items():
            k = (m[0] + n[0], m[1] + n[1], m[2] + n[2])
            out[k] = (out.get(k, 0) + a * b) % p
    return {k: v for k, v in out.items() if v}


def all_forms(k, p):
    mons = monomials(k)
    for coeffs in itertools.product(range(p), repeat=len(mons)):
        if any(coeffs):
            yield {m: c for m, c in zip(mons, coeffs) if c}


def factor_pairs(poly, d, p):
    """Every (g, h) with g*h == poly, 1 <= deg g <= d//2, by exhausting both sides."""
    target = {k: v % p for k, v in poly.items() if v % p}
    found = []
    for k in range(1, d // 2 + 1):
        hs = list(all_forms(d - k, p))
        for g in all_forms(k, p):
            for h in hs:
                if poly_mul(g, h, p) == target:
                    found.append((g, h))
    return found


def singular(poly, p):
    def deriv(i):
        out = {}
        for m, c in poly.items():
            if m[i]:
                n = list(m)
                n[i] -= 1
                out[tuple(n)] = c * m[i]
        return out

    grads = [deriv(i) for i in range(3)]
    return [
        pt
        for pt in proj_points(2, p)
        if evaluate(poly, pt, p) == 0 and all(evaluate(g, pt, p) == 0 for g in grads)
    ]


def affine_ec_points(a, b, p):
    return [(x, y) for x in range(p) for y in range(p) if (y * y - x**3 - a * x - b) % p == 0]


def ec_add_by_intersection(a, b, p, P, Q):
    """Sum via the third intersection of the chord/tangent, found by search.

    Points are (x, y) tuples or None for infinity. The line through P, Q
    meets the curve in P, Q, R (with multiplicity); P + Q = -R.
    """
    if P is None:
        return Q
    if Q is None:
        return P
    pts = affine_ec_points(a, b, p)
    (x1, y1), (x2, y2) = P, Q
    if x1 == x2 and (y1 + y2) % p == 0:
        return None
    if P == Q:
        # tangent slope from implicit differentiation: 2y y' = 3x^2 + a
        lam = (3 * x1 * x1 + a) * pow(2 * y1, -1, p) % p
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
    nu = (y1 - lam * x1) % p
    # restricted to the line, the curve equation becomes the monic cubic
    # x^3 - lam^2 x^2 + (a - 2 lam nu) x + (b - nu^2); search for the x3 with
    # (x - x1)(x - x2)(x - x3) equal to it coefficient by coefficient
    target = (1, (-lam * lam) % p, (a - 2 * lam * nu) % p, (b - nu * nu) % p)
    hits = []
    for x3 in range(p):
        r = (x1, x2, x3)
        e1 = sum(r)
        e2 = r[0] * r[1] + r[0] * r[2] + r[1] * r[2]
        e3 = r[0] * r[1] * r[2]
        if (1, (-e1) % p, e2 % p, (-e3) % p) == target:
            hits.append(x3)
    assert len(hits) == 1
    x3 = hits[0]
    y3 = (lam * x3 + nu) % p
    assert (x3, y3) in pts
    return (x3, (-y3) % p)
