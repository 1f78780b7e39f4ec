"""Projective 2x2 matrices over k[t], the subgroups H_n, and the Moebius
action of PGL_2(F_q) on the projective line over an extension field.

A :class:`ProjMat` is a canonical representative of a class in PGL_2(k(t)):
its four polynomial entries have no common factor, and the first nonzero
coefficient met when scanning alpha, beta, gamma, delta (each from its top
degree down) is 1.  Two matrices describe the same projective element iff
their canonical forms are equal, so ProjMat values can be hashed directly.
"""

from __future__ import annotations

from collections import Counter
from typing import NamedTuple

from .algebra import (
    NEG_INF,
    AlgebraError,
    FieldCtx,
    Place,
    PolyRing,
    extension_field,
    nu_infty,
    nu_p,
    split_top_level,
)


class ProjMat(NamedTuple):
    alpha: tuple
    beta: tuple
    gamma: tuple
    delta: tuple


class RationalFunction(NamedTuple):
    num: tuple
    den: tuple = (1,)


INF = (1, 0)


def det(R: PolyRing, M) -> tuple:
    a, b, c, d = M
    return R.sub(R.mul(a, d), R.mul(b, c))


def _scan_lead(M) -> int:
    for entry in M:
        if entry:
            return entry[-1]
    raise AlgebraError("zero matrix")


def canonicalize(R: PolyRing, M, content_free: bool = False) -> ProjMat:
    """Canonical representative of the projective class of a raw 2x2 matrix.

    ``content_free=True`` skips the gcd step when the caller knows the
    entries are already coprime.
    """
    if not any(M):
        raise AlgebraError("zero matrix")
    if not det(R, M):
        raise AlgebraError("singular matrix")
    a, b, c, d = M
    if not content_free:
        g = R.gcd(R.gcd(a, b), R.gcd(c, d))
        if len(g) > 1:
            a, b, c, d = (R.divmod(x, g)[0] for x in (a, b, c, d))
    lead = _scan_lead((a, b, c, d))
    if lead != 1:
        s = R.field.inv(lead)
        a, b, c, d = (R.scale(s, x) for x in (a, b, c, d))
    return ProjMat(a, b, c, d)


def mat_mul(R: PolyRing, A, B, content_free: bool = False) -> ProjMat:
    a1, b1, c1, d1 = A
    a2, b2, c2, d2 = B
    mul, add = R.mul, R.add
    raw = (
        add(mul(a1, a2), mul(b1, c2)),
        add(mul(a1, b2), mul(b1, d2)),
        add(mul(c1, a2), mul(d1, c2)),
        add(mul(c1, b2), mul(d1, d2)),
    )
    return canonicalize(R, raw, content_free=content_free)


def mat_inv(R: PolyRing, A) -> ProjMat:
    # adjugate; the determinant is a scalar in PGL
    a, b, c, d = A
    return canonicalize(R, (d, R.neg(b), R.neg(c), a))


def identity() -> ProjMat:
    return ProjMat((1,), (), (), (1,))


def format_mat(R: PolyRing, M) -> str:
    a, b, c, d = (R.format(x) for x in M)
    return f"[[{a},{b}],[{c},{d}]]"


def parse_mat(R: PolyRing, s: str) -> tuple:
    """Parse ``"[[a,b],[c,d]]"`` into a raw (not canonicalized) entry tuple."""
    s = s.replace(" ", "")
    if not (s.startswith("[") and s.endswith("]")):
        raise AlgebraError(f"malformed matrix {s!r}")
    rows = split_top_level(s[1:-1])
    if len(rows) != 2:
        raise AlgebraError(f"malformed matrix {s!r}")
    entries = []
    for row in rows:
        if not (row.startswith("[") and row.endswith("]")):
            raise AlgebraError(f"malformed matrix row {row!r}")
        cells = split_top_level(row[1:-1])
        if len(cells) != 2:
            raise AlgebraError(f"malformed matrix row {row!r}")
        entries.extend(R.parse(x) for x in cells)
    return tuple(entries)


# -- the subgroups H_n --------------------------------------------------------


def pgl2_constants(F: FieldCtx) -> list[ProjMat]:
    """Canonical representatives of PGL_2(F) as constant matrices."""
    out = []
    for a in F.elements():
        for b in F.elements():
            for c in F.elements():
                for d in F.elements():
                    if F.sub(F.mul(a, d), F.mul(b, c)) == 0:
                        continue
                    lead = next(x for x in (a, b, c, d) if x)
                    if lead == 1:
                        out.append(ProjMat(*((x,) if x else () for x in (a, b, c, d))))
    return out


def h_group(R: PolyRing, n: int) -> list[ProjMat]:
    """All elements of H_n: upper triangular (1, b; 0, c) with c in k*, deg b <= n.

    H_0 is all of PGL_2(k).
    """
    if n < 0:
        raise AlgebraError("H_n needs n >= 0")
    if n == 0:
        return pgl2_constants(R.field)
    return [ProjMat((1,), b, (), (c,)) for b in R.polys(n) for c in R.field.units()]


def h_generators(R: PolyRing, n: int) -> list[ProjMat]:
    """A generating set of H_n.

    diag(1, g) for a primitive g together with the translations (1, e t^i; 0, 1)
    for e in an additive basis of k; for n = 0 the involution (0, 1; 1, 0) is
    added, which with the Borel subgroup generates PGL_2(k).
    """
    F = R.field
    gens = [ProjMat((1,), (), (), (F.primitive_element,))] if F.order > 2 else []
    gens += [ProjMat((1,), R.monomial(e, i), (), (1,)) for i in range(n + 1) for e in F.additive_basis]
    if n == 0:
        gens.append(ProjMat((), (1,), (1,), ()))
    return gens


def h_order(q: int, n: int) -> int:
    return q * (q - 1) * (q + 1) if n == 0 else (q - 1) * q ** (n + 1)


# -- membership predicates ----------------------------------------------------


def upsilon_bounds(d: int, n: int, m: int) -> tuple[int, int, int, int]:
    """Floored degree bounds on (alpha, beta, gamma, delta) for Upsilon_{n,m}."""
    return ((d + n - m) // 2, (d + n + m) // 2, (d - n - m) // 2, (d - n + m) // 2)


def upsilon_member(place: Place, n: int, m: int, M) -> bool:
    """Does M map x_0 to a neighbour and y_m to y_n?"""
    d = place.d
    if (d + n + m) % 2:
        return False
    R = place.ring
    if any(R.deg(x) > b for x, b in zip(M, upsilon_bounds(d, n, m))):
        return False
    D = det(R, M)
    return len(D) == len(place.f) and R.scale(R.field.inv(D[-1]), D) == place.f


def bt_distance(place: Place, M) -> int:
    """Distance from x_0 to M(x_0) for a content-free polynomial matrix M."""
    return nu_p(place, det(place.ring, M))


def elementary_divisor_distance(place: Place, M) -> int:
    """Tree distance from x_0 to M(x_0) via the elementary divisors of M at p.

    For any polynomial matrix: nu_p(det) - 2 * min nu_p(entry).  Independent of
    any canonical form, and used to cross-check :func:`bt_distance`.
    """
    e1 = min(nu_p(place, x) for x in M if x)
    return nu_p(place, det(place.ring, M)) - 2 * e1


def _as_fraction(x) -> RationalFunction:
    return x if isinstance(x, RationalFunction) else RationalFunction(x)


def maps_ym_to_yn(R: PolyRing, n: int, m: int, M) -> bool:
    """Check the valuation conditions for M (entries in k(t)) to send y_m to y_n.

    Entries may be polynomials or :class:`RationalFunction` values.
    """
    a, b, c, d = (_as_fraction(x) for x in M)

    def v(x: RationalFunction):
        return nu_infty(x.num, x.den) if x.num else float("inf")

    if not (v(a) >= m - n and v(b) >= -n and v(c) >= m and v(d) >= 0):
        return False
    mul = R.mul
    num = R.sub(mul(mul(a.num, d.num), mul(b.den, c.den)), mul(mul(b.num, c.num), mul(a.den, d.den)))
    if not num:
        return False
    den = mul(mul(a.den, d.den), mul(b.den, c.den))
    return nu_infty(num, den) == m - n


# -- Moebius action on P^1 ------------------------------------------------------


def proj_points(F: FieldCtx) -> list[tuple[int, int]]:
    """Canonical points of P^1(F): (x, 1) for x in F, then (1, 0)."""
    return [(x, 1) for x in F.elements()] + [INF]


def moebius(F: FieldCtx, g, z: tuple[int, int]) -> tuple[int, int]:
    """Apply z -> (az+b)/(cz+d), g = (a, b, c, d) in F, to a canonical point."""
    a, b, c, d = g
    if z == INF:
        return INF if c == 0 else (F.div(a, c), 1)
    x = z[0]
    den = F.add(F.mul(c, x), d)
    if den == 0:
        return INF
    return (F.div(F.add(F.mul(a, x), b), den), 1)


def moebius_orbits(base: FieldCtx, d: int) -> list[list[tuple[int, int]]]:
    """Orbits of PGL_2(base) on P^1 of the degree-d extension of base."""
    E = extension_field(base, d)
    # base elements embed as the same ints
    group = [tuple(x[0] if x else 0 for x in g) for g in pgl2_constants(base)]
    seen: set = set()
    orbits = []
    for z in proj_points(E):
        if z in seen:
            continue
        orbit = {moebius(E, g, z) for g in group}
        seen |= orbit
        orbits.append(sorted(orbit, key=lambda p: (p[1] == 0, p[0])))
    return orbits


def moebius_orbit_census(base: FieldCtx, d: int) -> Counter:
    """Multiset of orbit lengths, as a Counter ``{length: number of orbits}``."""
    return Counter(len(o) for o in moebius_orbits(base, d))


def expected_census(q: int, d: int) -> Counter:
    """Orbit lengths predicted for even d: q+1, q^2-q, and free orbits."""
    if d % 2 or d < 2:
        raise ValueError("the census prediction covers even d only")
    out = Counter({q + 1: 1})
    out[q * q - q] += 1
    free = sum(q ** k for k in range(1, d - 2, 2))
    if free:
        out[q * (q - 1) * (q + 1)] += free
    return out


__all__ = [
    "INF",
    "NEG_INF",
    "ProjMat",
    "RationalFunction",
    "bt_distance",
    "canonicalize",
    "det",
    "elementary_divisor_distance",
    "expected_census",
    "format_mat",
    "h_generators",
    "h_group",
    "h_order",
    "identity",
    "maps_ym_to_yn",
    "mat_inv",
    "mat_mul",
    "moebius",
    "moebius_orbit_census",
    "moebius_orbits",
    "parse_mat",
    "pgl2_constants",
    "proj_points",
    "upsilon_bounds",
    "upsilon_member",
]
