"""Verification harness: brute-force double coset counts against the closed
forms, plus the orbit census, neighbour regularity and distance checks.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field

from .algebra import FieldCtx, Place, PolyRing, nu_p
from .figures import FIGURES, compare_figure
from .projective import (
    bt_distance,
    canonicalize,
    det,
    elementary_divisor_distance,
    expected_census,
    format_mat,
    h_order,
    mat_inv,
    moebius_orbit_census,
)
from .quotient import closed_form_multiplicity, loop_multiplicity
from .upsilon import (
    BudgetExceeded,
    double_coset_partition,
    enumerate_upsilon,
    free_class_size,
    left_coset_count,
    upsilon_size_formula,
)

DEFAULT_SEED = 20240601


def window_pairs(d: int, window: int) -> list[tuple[int, int]]:
    """Pairs n <= m with n + m <= window, plus chain pairs (n, n + d), n <= 2."""
    pairs = {(n, m) for n in range(window + 1) for m in range(n, window + 1 - n)}
    pairs |= {(n, n + d) for n in range(min(2, window - d) + 1)}
    return sorted(pairs)


class _Cache:
    def __init__(self, place: Place, budget):
        self.place, self.budget, self.sets = place, budget, {}

    def get(self, n, m):
        if (n, m) not in self.sets:
            self.sets[(n, m)] = enumerate_upsilon(self.place, n, m, self.budget)
        return self.sets[(n, m)]


@dataclass
class VerificationReport:
    params: dict
    pairs: list = field(default_factory=list)
    census: dict | None = None
    regularity: list = field(default_factory=list)
    f_independence: bool | None = None
    distance_lemma: dict | None = None
    notes: list = field(default_factory=list)
    errors: list = field(default_factory=list)
    timing: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        if self.errors:
            return False
        ok = all(p["match"] for p in self.pairs)
        ok &= all(r["match"] for r in self.regularity)
        if self.census is not None:
            ok &= self.census["match"]
        if self.distance_lemma is not None:
            ok &= self.distance_lemma["match"]
        if self.f_independence is not None:
            ok &= self.f_independence
        return bool(ok)

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "params": self.params,
            "pairs": self.pairs,
            "census": self.census,
            "regularity": self.regularity,
            "f_independence": self.f_independence,
            "distance_lemma": self.distance_lemma,
            "notes": self.notes,
            "errors": self.errors,
            "pass": self.passed,
        }
        if timing:
            out["timing"] = self.timing
        return out

    def to_json(self, timing: bool = False) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)


def _pair_record(cache: _Cache, n: int, m: int) -> dict:
    place = cache.place
    q, d = place.q, place.d
    U = cache.get(n, m)
    part = double_coset_partition(U) if len(U) else None
    count = len(part) if part else 0
    expected = closed_form_multiplicity(q, d, n, m)
    rec = {
        "n": n,
        "m": m,
        "oracle_count": count,
        "closed_form": expected,
        "upsilon_size_observed": len(U),
        "upsilon_size_formula": None,
        "size_match": None,
        "class_sizes_free": None,
        "symmetric_count": None,
    }
    ok = count == expected
    if n + m < d and (d - n - m) % 2 == 0:
        rec["upsilon_size_formula"] = upsilon_size_formula(q, d, n, m)
        rec["size_match"] = rec["upsilon_size_formula"] == len(U)
        ok &= rec["size_match"]
        if (n, m) != (0, 0) and part:
            size = free_class_size(q, n, m)
            rec["class_sizes_free"] = all(len(c) == size for c in part.classes())
            ok &= rec["class_sizes_free"]
    if n != m:
        V = cache.get(m, n)
        rec["symmetric_count"] = len(double_coset_partition(V)) if len(V) else 0
        ok &= rec["symmetric_count"] == count
    rec["match"] = bool(ok)
    if not ok and part:
        R = place.ring
        rec["classes"] = [[format_mat(R, U.elements[i]) for i in c] for c in part.classes()]
    return rec


def _census_record(place: Place, pair_records: list[dict]) -> dict:
    q, d = place.q, place.d
    observed = moebius_orbit_census(place.ring.field, d)
    expected = expected_census(q, d)
    orbits = sum(observed.values())
    # edges from X_0 to other vertices: the n + m = d bundle plus n = 0 bundles
    accounted = 1 + sum(q ** (2 * l - 2) for l in range(1, d // 2))
    loop_formula = loop_multiplicity(q, d)
    loop_oracle = next((p["oracle_count"] for p in pair_records if (p["n"], p["m"]) == (0, 0)), None)
    rec = {
        "orbit_lengths": sorted(observed.elements()),
        "expected_lengths": sorted(expected.elements()),
        "points": sum(k * v for k, v in observed.items()),
        "orbit_count": orbits,
        "loop_from_census": orbits - accounted,
        "loop_formula": loop_formula,
        "loop_oracle": loop_oracle,
    }
    rec["match"] = (
        observed == expected
        and rec["points"] == q ** d + 1
        and rec["loop_from_census"] == loop_formula
        and loop_oracle in (None, loop_formula)
    )
    return rec


def _regularity_record(cache: _Cache, n: int) -> dict:
    place = cache.place
    q, d = place.q, place.d
    per_m = {}
    for m in range(n + d + 1):
        if (d + n + m) % 2:
            continue
        U = cache.get(n, m)
        if len(U):
            per_m[m] = left_coset_count(U)
    total = sum(per_m.values())
    return {"n": n, "per_m": per_m, "neighbor_sum": total, "expected": q ** d + 1,
            "match": total == q ** d + 1}


def verify_distance_lemma(place: Place, samples: int = 200, seed: int = DEFAULT_SEED,
                          pool: list | None = None) -> dict:
    """Distance checks on random products of Upsilon elements.

    Every single element must be at distance 1 from x_0; for products of up
    to three elements or their inverses, the elementary-divisor distance of
    the raw product must equal nu_p(det) of its canonical form.
    """
    R = place.ring
    if pool is None:
        pool = list(enumerate_upsilon(place, 0, place.d % 2))
    rng = random.Random(seed)
    singles_ok = all(bt_distance(place, M) == 1 == elementary_divisor_distance(place, M) for M in pool)
    bad = []
    for _ in range(samples):
        k = rng.randint(1, 3)
        raw = (R.one, (), (), R.one)
        for _ in range(k):
            M = rng.choice(pool)
            if rng.random() < 0.5:
                M = mat_inv(R, M)
            a1, b1, c1, d1 = raw
            a2, b2, c2, d2 = M
            raw = (R.add(R.mul(a1, a2), R.mul(b1, c2)), R.add(R.mul(a1, b2), R.mul(b1, d2)),
                   R.add(R.mul(c1, a2), R.mul(d1, c2)), R.add(R.mul(c1, b2), R.mul(d1, d2)))
        C = canonicalize(R, raw)
        lhs = elementary_divisor_distance(place, raw)
        rhs = bt_distance(place, C)
        if lhs != rhs or rhs != nu_p(place, det(R, C)) or rhs > k:
            bad.append(format_mat(R, raw))
    return {"seed": seed, "samples": samples, "pool_size": len(pool), "singles_at_distance_1": singles_ok,
            "mismatches": bad, "match": singles_ok and not bad}


def verify_instance(q: int, d: int, place: Place | None = None, window: int | None = None,
                    budget: int | None = None, seed: int = DEFAULT_SEED, samples: int = 200,
                    regularity_n=(0, 1, 2), check_f_independence: bool = False) -> VerificationReport:
    """Run every oracle check for one (q, d, f) within a window (default d + 2)."""
    if place is None:
        place = Place.default(q, d)
    if place.q != q or place.d != d:
        raise ValueError("place does not match (q, d)")
    window = d + 2 if window is None else window
    report = VerificationReport(params={"q": q, "d": d, "f": str(place), "window": window, "seed": seed})
    cache = _Cache(place, budget)
    t0 = time.perf_counter()
    for n, m in window_pairs(d, window):
        try:
            report.pairs.append(_pair_record(cache, n, m))
        except BudgetExceeded as exc:
            report.errors.append({"n": exc.n, "m": exc.m, "error": str(exc)})
    report.timing["pairs"] = time.perf_counter() - t0

    if d % 2 == 0:
        t0 = time.perf_counter()
        report.census = _census_record(place, report.pairs)
        report.timing["census"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    for n in regularity_n:
        try:
            report.regularity.append(_regularity_record(cache, n))
        except BudgetExceeded as exc:
            report.errors.append({"n": exc.n, "m": exc.m, "error": str(exc)})
    report.timing["regularity"] = time.perf_counter() - t0

    t0 = time.perf_counter()
    pool = [M for (n, m), U in sorted(cache.sets.items()) for M in U.elements[:50]]
    if pool:
        report.distance_lemma = verify_distance_lemma(place, samples, seed, pool)
    report.timing["distance_lemma"] = time.perf_counter() - t0

    if check_f_independence:
        t0 = time.perf_counter()
        report.f_independence = verify_f_independence(q, d, window, budget)
        report.timing["f_independence"] = time.perf_counter() - t0

    if d in FIGURES:
        diffs = compare_figure(d, q)
        if diffs:
            report.notes.append({"figure": d, "agrees_with_theorem": False, "differences": diffs})
    return report


def oracle_counts(place: Place, window: int, budget: int | None = None) -> dict[tuple[int, int], int]:
    """Double coset counts over :func:`window_pairs` for one place."""
    out = {}
    for n, m in window_pairs(place.d, window):
        U = enumerate_upsilon(place, n, m, budget)
        out[(n, m)] = len(double_coset_partition(U)) if len(U) else 0
    return out


def verify_f_independence(q: int, d: int, window: int | None = None, budget: int | None = None) -> bool:
    """Do all monic irreducibles of degree d give the same oracle counts?"""
    window = d + 2 if window is None else window
    R = PolyRing(FieldCtx.gf(q))
    tables = [oracle_counts(Place(R, f), window, budget) for f in R.monic_irreducibles(d)]
    return all(t == tables[0] for t in tables)


__all__ = [
    "DEFAULT_SEED",
    "VerificationReport",
    "h_order",
    "oracle_counts",
    "verify_distance_lemma",
    "verify_f_independence",
    "verify_instance",
    "window_pairs",
]
