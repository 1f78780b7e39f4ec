"""Finite fields F_q, the polynomial ring F_q[t], and the valuations at a
finite place and at infinity.

Field elements are plain ints in ``range(q)``.  For a prime field the int is
the residue; for an extension of a base field of order ``b`` the int is the
coefficient vector ``c_0 + c_1 b + c_2 b^2 + ...`` of the residue polynomial
modulo the defining polynomial.  ``0`` and ``1`` are always zero and one, and
base-field elements embed as themselves.

Polynomials are tuples of field elements, lowest degree first, with no
trailing zeros (``()`` is the zero polynomial).  All ring operations live on
:class:`PolyRing` so the tuples stay cheap to hash and compare.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

NEG_INF = float("-inf")

# full add/mul tables are built up to this order; above it products are
# computed on demand
_TABLE_LIMIT = 1024


class AlgebraError(ValueError):
    pass


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``, or raise if q is not a prime power."""
    if q < 2:
        raise AlgebraError(f"{q} is not a prime power")
    p = next(k for k in range(2, q + 1) if q % k == 0)
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise AlgebraError(f"{q} is not a prime power")
    return p, e


class FieldCtx:
    """A finite field, either F_p or base[x]/(modulus) for a base FieldCtx.

    Use :meth:`gf` to get F_q for a prime power q and :func:`extension_field`
    for degree-d extensions of an existing field.
    """

    def __init__(self, p: int, base: FieldCtx | None = None, modulus: tuple | None = None):
        self.characteristic = p
        self.base = base
        self.modulus = modulus
        if base is None:
            if modulus is not None:
                raise AlgebraError("a prime field takes no modulus")
            if prime_power(p) != (p, 1):
                raise AlgebraError(f"{p} is not prime")
            self.degree = 1
            self.order = p
        else:
            if modulus is None or len(modulus) < 2 or modulus[-1] != 1:
                raise AlgebraError("modulus must be monic of degree >= 1")
            if not PolyRing(base).is_irreducible(modulus):
                raise AlgebraError("modulus is not irreducible over the base field")
            self.degree = len(modulus) - 1
            self.order = base.order ** self.degree
        self.extension_degree = self.degree * (base.extension_degree if base else 1)
        self.is_prime = base is None
        self._tables = self.order <= _TABLE_LIMIT
        if self._tables:
            self._build_tables()

    @classmethod
    def gf(cls, q: int) -> FieldCtx:
        """F_q with the lexicographically first monic irreducible as modulus."""
        p, e = prime_power(q)
        prime = cls(p)
        if e == 1:
            return prime
        return extension_field(prime, e)

    def __repr__(self):
        if self.is_prime:
            return f"FieldCtx(F_{self.order})"
        return f"FieldCtx(F_{self.order} = F_{self.base.order}[x]/{self.modulus})"

    def __eq__(self, other):
        return (isinstance(other, FieldCtx) and self.order == other.order
                and self.base == other.base and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.order, self.modulus))

    # -- vector representation -------------------------------------------

    def coeffs(self, x: int) -> tuple[int, ...]:
        """Coefficient vector of ``x`` over the base field (length ``degree``)."""
        if self.is_prime:
            return (x,)
        b = self.base.order
        out = []
        for _ in range(self.degree):
            x, r = divmod(x, b)
            out.append(r)
        return tuple(out)

    def from_coeffs(self, cs) -> int:
        if self.is_prime:
            (c,) = cs
            return c % self.order
        b = self.base.order
        x = 0
        for c in reversed(list(cs)):
            x = x * b + c
        return x

    # -- arithmetic ------------------------------------------------------

    def _slow_add(self, a, b):
        if self.is_prime:
            return (a + b) % self.order
        B = self.base
        return self.from_coeffs([B.add(x, y) for x, y in zip(self.coeffs(a), self.coeffs(b))])

    def _slow_mul(self, a, b):
        if self.is_prime:
            return a * b % self.order
        R = PolyRing(self.base)
        prod = R.mul(R.trim(self.coeffs(a)), R.trim(self.coeffs(b)))
        rem = R.divmod(prod, self.modulus)[1]
        return self.from_coeffs(rem + (0,) * (self.degree - len(rem)))

    def _build_tables(self):
        q = self.order
        self.add_t = [[self._slow_add(a, b) for b in range(q)] for a in range(q)]
        self.mul_t = [[self._slow_mul(a, b) for b in range(q)] for a in range(q)]
        self.neg_t = [row.index(0) for row in self.add_t]
        self.inv_t = [0] + [self.mul_t[a].index(1) for a in range(1, q)]

    def add(self, a: int, b: int) -> int:
        return self.add_t[a][b] if self._tables else self._slow_add(a, b)

    def mul(self, a: int, b: int) -> int:
        return self.mul_t[a][b] if self._tables else self._slow_mul(a, b)

    def neg(self, a: int) -> int:
        if self._tables:
            return self.neg_t[a]
        if self.is_prime:
            return -a % self.order
        return self.from_coeffs([self.base.neg(c) for c in self.coeffs(a)])

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self._tables:
            return self.inv_t[a]
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, k: int) -> int:
        out = 1
        while k:
            if k & 1:
                out = self.mul(out, a)
            a = self.mul(a, a)
            k >>= 1
        return out

    def elements(self) -> range:
        return range(self.order)

    def units(self) -> range:
        return range(1, self.order)

    @cached_property
    def primitive_element(self) -> int:
        """Smallest generator of the multiplicative group."""
        n = self.order - 1
        divisors = [k for k in range(1, n) if n % k == 0]
        for g in self.units():
            if all(self.pow(g, k) != 1 for k in divisors):
                return g
        raise AssertionError("no primitive element")  # pragma: no cover

    @cached_property
    def additive_basis(self) -> tuple[int, ...]:
        """A basis of the field as a vector space over its prime subfield."""
        if self.is_prime:
            return (1,)
        b = self.base.order
        return tuple(c * b ** i for i in range(self.degree) for c in self.base.additive_basis)

    def format(self, a: int) -> str:
        if self.is_prime:
            return str(a)
        return "[" + ",".join(self.base.format(c) for c in self.coeffs(a)) + "]"

    def parse(self, s: str) -> int:
        s = s.strip()
        if self.is_prime:
            if s.startswith("["):
                raise AlgebraError(f"prime field element expected, got {s!r}")
            return int(s) % self.order
        if not (s.startswith("[") and s.endswith("]")):
            # bare integer means an element of the prime subfield
            return self._embed_prime(int(s))
        parts = split_top_level(s[1:-1])
        if len(parts) != self.degree:
            raise AlgebraError(f"expected {self.degree} coefficients in {s!r}")
        return self.from_coeffs([self.base.parse(x) for x in parts])

    def _embed_prime(self, k: int) -> int:
        k %= self.characteristic
        out = 0
        for _ in range(k):
            out = self.add(out, 1)
        return out


def split_top_level(s: str, sep: str = ",") -> list[str]:
    """Split on ``sep`` outside of square brackets."""
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def extension_field(ctx: FieldCtx, d: int) -> FieldCtx:
    """The degree-d extension of ``ctx``, modulo its first monic irreducible."""
    if d < 1:
        raise AlgebraError("extension degree must be >= 1")
    if d == 1:
        return ctx
    f = PolyRing(ctx).monic_irreducibles(d)[0]
    return FieldCtx(ctx.characteristic, base=ctx, modulus=f)


_TERM = re.compile(r"^(?:(?P<c>\[[^\]]*\]|\d+)\*?)?(?P<t>t(?:\^(?P<e>\d+))?)?$")


class PolyRing:
    """The ring k[t] over a :class:`FieldCtx`, acting on coefficient tuples."""

    def __init__(self, field: FieldCtx):
        self.field = field

    def __repr__(self):
        return f"PolyRing({self.field!r})"

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.field == other.field

    def __hash__(self):
        return hash(self.field)

    @staticmethod
    def trim(a) -> tuple:
        a = list(a)
        while a and a[-1] == 0:
            a.pop()
        return tuple(a)

    @staticmethod
    def deg(a: tuple):
        """Degree; the zero polynomial has degree ``-inf``."""
        return len(a) - 1 if a else NEG_INF

    def const(self, c: int) -> tuple:
        return (c,) if c else ()

    def monomial(self, c: int, k: int) -> tuple:
        return (0,) * k + (c,) if c else ()

    @property
    def one(self) -> tuple:
        return (1,)

    @property
    def t(self) -> tuple:
        return (0, 1)

    # -- ring operations -------------------------------------------------

    def add(self, a: tuple, b: tuple) -> tuple:
        if len(a) < len(b):
            a, b = b, a
        F = self.field
        if F.is_prime:
            p = F.order
            out = [(x + y) % p for x, y in zip(a, b)]
        else:
            A = F.add
            out = [A(x, y) for x, y in zip(a, b)]
        out.extend(a[len(b):])
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    def neg(self, a: tuple) -> tuple:
        F = self.field
        if F.is_prime:
            p = F.order
            return tuple(-x % p for x in a)
        return tuple(F.neg(x) for x in a)

    def sub(self, a: tuple, b: tuple) -> tuple:
        return self.add(a, self.neg(b))

    def scale(self, c: int, a: tuple) -> tuple:
        if c == 0:
            return ()
        F = self.field
        if F.is_prime:
            p = F.order
            return tuple(c * x % p for x in a)
        return tuple(F.mul(c, x) for x in a)

    def mul(self, a: tuple, b: tuple) -> tuple:
        if not a or not b:
            return ()
        F = self.field
        out = [0] * (len(a) + len(b) - 1)
        if F.is_prime:
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        out[i + j] += x * y
            p = F.order
            out = [c % p for c in out]
            while out and out[-1] == 0:
                out.pop()
            return tuple(out)
        A, M = F.add, F.mul
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = A(out[i + j], M(x, y))
        while out and out[-1] == 0:
            out.pop()
        return tuple(out)

    def divmod(self, a: tuple, b: tuple) -> tuple[tuple, tuple]:
        if not b:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        if len(a) < len(b):
            return (), a
        r = list(a)
        db = len(b) - 1
        lead_inv = F.inv(b[-1])
        qt = [0] * (len(a) - db)
        for k in range(len(a) - 1, db - 1, -1):
            c = r[k]
            if c == 0:
                continue
            c = F.mul(c, lead_inv)
            qt[k - db] = c
            for j, y in enumerate(b):
                r[k - db + j] = F.sub(r[k - db + j], F.mul(c, y))
        return self.trim(qt), self.trim(r[:db])

    def mod(self, a: tuple, b: tuple) -> tuple:
        return self.divmod(a, b)[1]

    def exact_div(self, a: tuple, b: tuple) -> tuple | None:
        """``a / b`` if b divides a, else None."""
        qt, r = self.divmod(a, b)
        return None if r else qt

    def monic(self, a: tuple) -> tuple:
        return self.scale(self.field.inv(a[-1]), a) if a else ()

    def gcd(self, a: tuple, b: tuple) -> tuple:
        """Monic gcd; gcd(0, 0) = 0."""
        while b:
            a, b = b, self.mod(a, b)
        return self.monic(a)

    def pow(self, a: tuple, k: int) -> tuple:
        out = (1,)
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def lead(self, a: tuple) -> int:
        return a[-1] if a else 0

    # -- enumeration -----------------------------------------------------

    def index(self, a: tuple) -> int:
        """Position of a in the enumeration order of :meth:`polys`."""
        q = self.field.order
        out = 0
        for c in reversed(a):
            out = out * q + c
        return out

    def from_index(self, i: int) -> tuple:
        """The i-th polynomial: base-q digits of i, lowest degree first."""
        q = self.field.order
        out = []
        while i:
            i, r = divmod(i, q)
            out.append(r)
        return tuple(out)

    def polys(self, max_deg: int) -> list[tuple]:
        """All polynomials of degree <= max_deg, zero first."""
        if max_deg < 0:
            return [()]
        return [self.from_index(i) for i in range(self.field.order ** (max_deg + 1))]

    def monic_polys(self, k: int) -> list[tuple]:
        """Monic polynomials of degree exactly k, ordered from t^(k-1) down."""
        q = self.field.order
        out = []
        for i in range(q ** k):
            low = self.from_index(i)
            out.append(low + (0,) * (k - len(low)) + (1,))
        return out

    def is_irreducible(self, a: tuple) -> bool:
        if not a:
            raise AlgebraError("irreducibility of the zero polynomial")
        n = len(a) - 1
        if n < 1:
            return False
        for k in range(1, n // 2 + 1):
            for g in self.monic_polys(k):
                if not self.mod(a, g):
                    return False
        return True

    def monic_irreducibles(self, d: int) -> list[tuple]:
        if d < 1:
            raise AlgebraError("degree must be >= 1")
        return [g for g in self.monic_polys(d) if self.is_irreducible(g)]

    # -- text ------------------------------------------------------------

    def format(self, a: tuple) -> str:
        if not a:
            return "0"
        F = self.field
        terms = []
        for k in range(len(a) - 1, -1, -1):
            c = a[k]
            if c == 0:
                continue
            cs = F.format(c)
            if k == 0:
                terms.append(cs)
                continue
            mono = "t" if k == 1 else f"t^{k}"
            terms.append(mono if c == 1 else f"{cs}*{mono}")
        return "+".join(terms)

    def parse(self, s: str) -> tuple:
        """Parse ``"t^3+2*t+1"``; extension coefficients as ``"[a0,a1]*t"``."""
        s = s.replace(" ", "")
        if not s:
            raise AlgebraError("empty polynomial")
        F = self.field
        out: tuple = ()
        # split into signed terms outside of brackets
        terms, depth, cur, sign = [], 0, "", 1
        for ch in s:
            if ch == "[":
                depth += 1
            elif ch == "]":
                depth -= 1
            if ch in "+-" and depth == 0:
                if cur:
                    terms.append((sign, cur))
                elif ch == "+" or terms:
                    raise AlgebraError(f"malformed polynomial {s!r}")
                sign = 1 if ch == "+" else -1
                cur = ""
            else:
                cur += ch
        if not cur:
            raise AlgebraError(f"malformed polynomial {s!r}")
        terms.append((sign, cur))
        for sign, term in terms:
            m = _TERM.match(term)
            if not m or (m.group("c") is None and m.group("t") is None):
                raise AlgebraError(f"cannot parse term {term!r}")
            c = F.parse(m.group("c")) if m.group("c") is not None else 1
            if sign < 0:
                c = F.neg(c)
            k = 0 if m.group("t") is None else int(m.group("e") or 1)
            out = self.add(out, self.monomial(c, k))
        return out


@dataclass(frozen=True)
class Place:
    """A finite place of F_q(t), given by a monic irreducible polynomial f."""

    ring: PolyRing
    f: tuple

    def __post_init__(self):
        if not self.f or self.f[-1] != 1:
            raise AlgebraError("place polynomial must be monic")
        if not self.ring.is_irreducible(self.f):
            raise AlgebraError(f"{self.ring.format(self.f)} is not irreducible")

    @property
    def d(self) -> int:
        return len(self.f) - 1

    @property
    def q(self) -> int:
        return self.ring.field.order

    @classmethod
    def default(cls, q: int, d: int) -> Place:
        R = PolyRing(FieldCtx.gf(q))
        return cls(R, R.monic_irreducibles(d)[0])

    def __str__(self):
        return self.ring.format(self.f)


def nu_p(place: Place, a: tuple) -> int:
    """Multiplicity of the place polynomial f in a."""
    if not a:
        raise AlgebraError("valuation of zero is +infinity")
    R, k = place.ring, 0
    while True:
        qt, r = R.divmod(a, place.f)
        if r:
            return k
        a, k = qt, k + 1


def nu_infty(a: tuple, b: tuple = (1,)) -> int:
    """Valuation at infinity of the rational function a/b: deg b - deg a."""
    if not a or not b:
        raise AlgebraError("valuation at infinity needs nonzero numerator and denominator")
    return (len(b) - 1) - (len(a) - 1)
