"""Exhaustive enumeration of Upsilon_{n,m} and exact coset counting.

Upsilon_{n,m} is the finite set of projective matrices over k[t] that move
the base vertex x_0 of the tree to a neighbour and send y_m to y_n.  Its
H_n-H_m double cosets are in bijection with the quotient edges between the
orbits X_n and X_m, so counting them by brute force checks every closed
form independently.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import product

from .algebra import Place, PolyRing
from .projective import (
    ProjMat,
    h_generators,
    h_group,
    h_order,
    mat_mul,
    upsilon_bounds,
)

DEFAULT_BUDGET = 2 ** 30


class BudgetExceeded(RuntimeError):
    def __init__(self, n, m, required, budget):
        self.n, self.m, self.required, self.budget = n, m, required, budget
        super().__init__(
            f"Upsilon_{{{n},{m}}} needs {required} candidate tuples, budget is {budget}"
        )


def default_budget() -> int:
    return int(os.environ.get("BTQ_BUDGET", DEFAULT_BUDGET))


def candidate_count(q: int, d: int, n: int, m: int) -> int:
    """Size of the raw (alpha, beta, gamma, delta) search space."""
    return q ** sum(max(b, -1) + 1 for b in upsilon_bounds(d, n, m))


def predicted_empty(d: int, n: int, m: int) -> bool:
    if (d + n + m) % 2:
        return True
    return n + m > d and abs(m - n) != d


@dataclass
class UpsilonSet:
    place: Place
    n: int
    m: int
    elements: list[ProjMat]
    index: dict[ProjMat, int] = field(repr=False)

    @property
    def l(self) -> int | None:
        """(d - n - m) / 2 when Upsilon lies in the n + m < d regime."""
        d = self.place.d
        if (d - self.n - self.m) % 2 or self.n + self.m >= d:
            return None
        return (d - self.n - self.m) // 2

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, M):
        return M in self.index


def _check_budget(place, n, m, budget):
    budget = default_budget() if budget is None else budget
    need = candidate_count(place.q, place.d, n, m)
    if need > budget:
        raise BudgetExceeded(n, m, need, budget)


def _det_is_scaled_f(R: PolyRing, D: tuple, f: tuple) -> bool:
    return len(D) == len(f) and R.scale(R.field.inv(D[-1]), D) == f


def enumerate_upsilon(place: Place, n: int, m: int, budget: int | None = None,
                      method: str = "solve") -> UpsilonSet:
    """All canonical elements of Upsilon_{n,m}.

    The outer loops run over (alpha, gamma).  ``method="solve"`` then scans
    delta and the scalar lambda and recovers beta by exact division from
    alpha*delta - lambda*f = beta*gamma; ``method="scan"`` tests every
    (beta, delta) pair of the bounded spaces directly.  Both visit canonical
    representatives only: alpha monic, or alpha = 0 and beta monic.
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    _check_budget(place, n, m, budget)
    R, F, f, d = place.ring, place.ring.field, place.f, place.d
    elements: list[ProjMat] = []
    if not predicted_empty(d, n, m) or method == "scan":
        ba, bb, bc, bd = upsilon_bounds(d, n, m)
        alphas = [()] + [a for k in range(ba + 1) for a in R.monic_polys(k)]
        gammas = R.polys(bc)
        betas = R.polys(bb)
        deltas = R.polys(bd)
        scan = method == "scan"
        if method not in ("solve", "scan"):
            raise ValueError(f"unknown method {method!r}")
        for alpha in alphas:
            for gamma in gammas:
                if not alpha and not gamma:
                    continue
                if scan:
                    found = _scan_pairs(R, f, alpha, gamma, betas, deltas)
                else:
                    found = _solve_pairs(R, f, alpha, gamma, bb, bd, betas, deltas)
                elements.extend(ProjMat(alpha, beta, gamma, delta) for beta, delta in found)
    index = {}
    for i, M in enumerate(elements):
        if M in index:
            raise AssertionError(f"duplicate canonical element {M}")
        index[M] = i
    return UpsilonSet(place, n, m, elements, index)


def _scan_pairs(R, f, alpha, gamma, betas, deltas):
    out = []
    for beta in betas:
        if not alpha and (not beta or beta[-1] != 1):
            continue
        bg = R.mul(beta, gamma)
        for delta in deltas:
            D = R.sub(R.mul(alpha, delta), bg)
            if D and _det_is_scaled_f(R, D, f):
                out.append((beta, delta))
    return out


def _solve_pairs(R, f, alpha, gamma, bb, bd, betas, deltas):
    F = R.field
    out = []
    lam_f = [R.scale(lam, f) for lam in F.units()]
    if not gamma:
        # alpha * delta = lambda * f, beta unconstrained
        for lf in lam_f:
            delta = R.exact_div(lf, alpha)
            if delta is not None and R.deg(delta) <= bd:
                out.extend((beta, delta) for beta in betas)
    else:
        _solve_beta(R, alpha, gamma, bb, deltas, lam_f, out)
    # same (beta, delta) order as the scan
    out.sort(key=lambda bd_: (R.index(bd_[0]), R.index(bd_[1])))
    return out


def _solve_beta(R, alpha, gamma, bb, deltas, lam_f, out):
    for delta in deltas:
        ad = R.mul(alpha, delta)
        for lf in lam_f:
            beta = R.exact_div(R.sub(ad, lf), gamma)
            if beta is None or R.deg(beta) > bb:
                continue
            if not alpha and (not beta or beta[-1] != 1):
                continue
            out.append((beta, delta))


def enumerate_upsilon_naive(place: Place, n: int, m: int, budget: int | None = None) -> set[ProjMat]:
    """Every 4-tuple in the bounded spaces, canonicalized into a set.

    Slow; for cross-checking :func:`enumerate_upsilon` on small instances.
    """
    from .projective import canonicalize

    _check_budget(place, n, m, budget)
    R, f = place.ring, place.f
    spaces = [R.polys(b) for b in upsilon_bounds(place.d, n, m)]
    out = set()
    for alpha, beta, gamma, delta in product(*spaces):
        D = R.sub(R.mul(alpha, delta), R.mul(beta, gamma))
        if D and _det_is_scaled_f(R, D, f):
            out.add(canonicalize(R, (alpha, beta, gamma, delta)))
    return out


def upsilon_size_formula(q: int, d: int, n: int, m: int) -> int:
    """|Upsilon_{n,m}| for n + m < d with matching parity.

    Counted as projective classes: q^(n+m) (q^(2l+1) + q^(2l)) (q-1)^2.
    """
    if n < 0 or m < 0 or n + m >= d or (d - n - m) % 2:
        raise ValueError(f"size formula needs n + m < d with d = n + m mod 2, got d={d}, n={n}, m={m}")
    l = (d - n - m) // 2
    return q ** (n + m) * (q ** (2 * l + 1) + q ** (2 * l)) * (q - 1) ** 2


# -- union-find partitions ----------------------------------------------------


class CosetPartition:
    """Union-find over the indices of an UpsilonSet."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.rank = [0] * size

    def find(self, x: int) -> int:
        parent = self.parent
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> None:
        x, y = self.find(x), self.find(y)
        if x == y:
            return
        if self.rank[x] < self.rank[y]:
            x, y = y, x
        elif self.rank[x] == self.rank[y]:
            self.rank[x] += 1
        self.parent[y] = x

    def classes(self) -> list[list[int]]:
        """Classes as sorted index lists, ordered by their least index."""
        groups: dict[int, list[int]] = {}
        for i in range(len(self.parent)):
            groups.setdefault(self.find(i), []).append(i)
        return sorted(groups.values(), key=lambda c: c[0])

    def representatives(self) -> list[int]:
        return [c[0] for c in self.classes()]

    def __len__(self):
        return sum(1 for i, p in enumerate(self.parent) if i == p)


def _acting_set(R: PolyRing, k: int, generators: bool) -> list[ProjMat]:
    return h_generators(R, k) if generators else h_group(R, k)


def _close(U: UpsilonSet, part: CosetPartition, left, right) -> None:
    R = U.place.ring
    index = U.index
    for i, M in enumerate(U.elements):
        for h in left:
            j = index.get(mat_mul(R, h, M, content_free=True))
            if j is None:
                raise AssertionError(f"Upsilon_{{{U.n},{U.m}}} not stable under H_{U.n}")
            part.union(i, j)
        for h in right:
            j = index.get(mat_mul(R, M, h, content_free=True))
            if j is None:
                raise AssertionError(f"Upsilon_{{{U.n},{U.m}}} not stable under H_{U.m}")
            part.union(i, j)


def left_coset_partition(U: UpsilonSet, generators: bool = True) -> CosetPartition:
    """Partition of U into left cosets M H_m."""
    part = CosetPartition(len(U))
    _close(U, part, [], _acting_set(U.place.ring, U.m, generators))
    return part


def double_coset_partition(U: UpsilonSet, generators: bool = True) -> CosetPartition:
    """Partition of U into double cosets H_n M H_m.

    Closing under left and right multiplications separately yields the same
    partition as the H_n x H_m action.  With ``generators=True`` only a
    generating set of each subgroup is applied, which gives the same orbits.
    """
    part = CosetPartition(len(U))
    R = U.place.ring
    _close(U, part, _acting_set(R, U.n, generators), _acting_set(R, U.m, generators))
    return part


def left_coset_count(U: UpsilonSet, generators: bool = True) -> int:
    return len(left_coset_partition(U, generators)) if len(U) else 0


def double_coset_count(U: UpsilonSet, generators: bool = True) -> int:
    return len(double_coset_partition(U, generators)) if len(U) else 0


def free_class_size(q: int, n: int, m: int) -> int:
    """|H_n| |H_m|, the double coset size when the action is free."""
    return h_order(q, n) * h_order(q, m)
