"""Arithmetic in the ring of integers of k = Q(√p).

Elements are stored as (u + v√p)/2 with u ≡ v (mod 2). Places of k are the
two real embeddings, the ramified prime (√p), the two dyadic primes (for
p ≡ 1 mod 8) and primes above odd rational q. Local questions at a finite
place are answered by mapping √p to a q-adic (or 2-adic) square root lifted
far enough for the requested precision; no approximation is involved.

Dyadic labels: ``DYADIC_PLUS`` is (2, (1+√p)/2), reached by √p ↦ −s, and
``DYADIC_MINUS`` is (2, (1−√p)/2), reached by √p ↦ +s, where s is the 2-adic
square root of p with s ≡ 1 (mod 4).
"""

from dataclasses import dataclass
from enum import Enum
from math import gcd

from sympy import factorint

from ..core.errors import create_domain_error

# ============================================================================
# Elements of O_k
# ============================================================================


@dataclass(frozen=True)
class QuadInt:
    """The element (u + v√p)/2 of O_k."""

    p: int
    u: int
    v: int

    def __post_init__(self) -> None:
        if (self.u - self.v) % 2:
            raise create_domain_error(
                f"(u + v·sqrt p)/2 with u={self.u}, v={self.v} is not integral",
                remedy="u and v must have the same parity",
            )

    @classmethod
    def from_integers(cls, p: int, a: int, b: int) -> "QuadInt":
        """The element a + b√p."""
        return cls(p, 2 * a, 2 * b)

    @classmethod
    def rational(cls, p: int, n: int) -> "QuadInt":
        return cls(p, 2 * n, 0)

    @classmethod
    def sqrt_p(cls, p: int) -> "QuadInt":
        return cls(p, 0, 2)

    @property
    def norm(self) -> int:
        return (self.u * self.u - self.p * self.v * self.v) // 4

    @property
    def trace(self) -> int:
        return self.u

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0

    def conjugate(self) -> "QuadInt":
        return QuadInt(self.p, self.u, -self.v)

    def __neg__(self) -> "QuadInt":
        return QuadInt(self.p, -self.u, -self.v)

    def __mul__(self, other: "QuadInt") -> "QuadInt":
        if other.p != self.p:
            raise create_domain_error("cannot multiply elements of different fields")
        u = (self.u * other.u + self.p * self.v * other.v) // 2
        v = (self.u * other.v + self.v * other.u) // 2
        return QuadInt(self.p, u, v)

    def embedding_sign(self, plus: bool) -> int:
        """Sign of the real embedding √p ↦ +√p (plus) or √p ↦ −√p."""
        u, v = self.u, self.v if plus else -self.v
        if self.is_zero():
            return 0
        if u >= 0 and v >= 0:
            return 1
        if u <= 0 and v <= 0:
            return -1
        # opposite signs: the larger of u², p·v² wins
        return (1 if u > 0 else -1) if u * u > self.p * v * v else (1 if v > 0 else -1)


# ============================================================================
# Places of k
# ============================================================================


class PlaceKind(str, Enum):
    """Kinds of places of k = Q(√p)."""

    REAL_PLUS = "real_embedding_plus"
    REAL_MINUS = "real_embedding_minus"
    DYADIC_PLUS = "dyadic_plus"
    DYADIC_MINUS = "dyadic_minus"
    SQRT_P = "sqrt_p"
    ODD_PRIME = "odd_prime"


_KIND_ORDER = {kind: i for i, kind in enumerate(PlaceKind)}


@dataclass(frozen=True)
class PlaceK:
    """A place of k. Odd primes carry q and, when q splits, the root r of x² ≡ p."""

    kind: PlaceKind
    q: int | None = None
    r: int | None = None

    @classmethod
    def real_plus(cls) -> "PlaceK":
        return cls(PlaceKind.REAL_PLUS)

    @classmethod
    def real_minus(cls) -> "PlaceK":
        return cls(PlaceKind.REAL_MINUS)

    @classmethod
    def dyadic_plus(cls) -> "PlaceK":
        return cls(PlaceKind.DYADIC_PLUS, 2)

    @classmethod
    def dyadic_minus(cls) -> "PlaceK":
        return cls(PlaceKind.DYADIC_MINUS, 2)

    @classmethod
    def sqrt_p(cls) -> "PlaceK":
        return cls(PlaceKind.SQRT_P)

    @classmethod
    def odd_prime(cls, q: int, r: int | None = None) -> "PlaceK":
        """The prime (q, r − √p), or the inert prime (q) when r is None."""
        return cls(PlaceKind.ODD_PRIME, q, r)

    @property
    def is_real(self) -> bool:
        return self.kind in (PlaceKind.REAL_PLUS, PlaceKind.REAL_MINUS)

    @property
    def is_dyadic(self) -> bool:
        return self.kind in (PlaceKind.DYADIC_PLUS, PlaceKind.DYADIC_MINUS)

    def sort_key(self) -> tuple[int, int, int]:
        return (_KIND_ORDER[self.kind], self.q or 0, -1 if self.r is None else self.r)

    def __str__(self) -> str:
        match self.kind:
            case PlaceKind.REAL_PLUS:
                return "inf+"
            case PlaceKind.REAL_MINUS:
                return "inf-"
            case PlaceKind.DYADIC_PLUS:
                return "(2,(1+sqrt p)/2)"
            case PlaceKind.DYADIC_MINUS:
                return "(2,(1-sqrt p)/2)"
            case PlaceKind.SQRT_P:
                return "(sqrt p)"
            case _:
                if self.r is None:
                    return f"({self.q})"
                return f"({self.q},{self.r}-sqrt p)"


class SplitType(str, Enum):
    """Behaviour of a place of k in a quadratic extension k(√δ)."""

    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


# ============================================================================
# Residues and roots modulo p
# ============================================================================


def legendre(x: int, p: int) -> int:
    """Legendre symbol by Euler's criterion: +1, −1 or 0."""
    x %= p
    if x == 0:
        return 0
    return 1 if pow(x, (p - 1) // 2, p) == 1 else -1


def order_mod_p(x: int, p: int) -> int:
    """Exact multiplicative order of x modulo the prime p."""
    x %= p
    if x == 0:
        raise create_domain_error(f"0 has no multiplicative order mod {p}", p=p)
    order = p - 1
    for q in factorint(p - 1):
        while order % q == 0 and pow(x, order // q, p) == 1:
            order //= q
    return order


def sqrt_mod_p(x: int, p: int) -> int:
    """Tonelli–Shanks square root; returns the canonical root min(s, p − s)."""
    x %= p
    if x == 0:
        return 0
    if legendre(x, p) != 1:
        raise create_domain_error(f"{x} is not a square mod {p}", p=p)
    if p % 4 == 3:
        s = pow(x, (p + 1) // 4, p)
        return min(s, p - s)

    q, e = p - 1, 0
    while q % 2 == 0:
        q //= 2
        e += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1

    m, c, t, s = e, pow(z, q, p), pow(x, q, p), pow(x, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, s = t * c % p, s * b % p
    return min(s, p - s)


def is_fourth_power_mod_p(x: int, p: int) -> bool:
    """Whether x is a nonzero fourth power modulo the odd prime p."""
    x %= p
    if x == 0:
        return False
    return pow(x, (p - 1) // gcd(4, p - 1), p) == 1


# ============================================================================
# Local square roots of p
# ============================================================================


def sqrt_2adic(p: int, k: int) -> int:
    """The 2-adic square root s of p with s ≡ 1 (mod 4), modulo 2^k.

    Lifted by Hensel's lemma until s² ≡ p (mod 2^(k+2)).
    """
    if p % 8 != 1:
        raise create_domain_error(f"{p} is not 1 mod 8; no 2-adic sqrt", p=p)
    if k < 1:
        raise create_domain_error(f"2-adic precision must be positive, got {k}")
    s = 1
    for j in range(3, k + 2):
        # invariant: s² ≡ p mod 2^j
        if (s * s - p) % (1 << (j + 1)):
            s += 1 << (j - 1)
    return s % (1 << k)


def _sqrt_qadic(p: int, q: int, r: int, prec: int) -> int:
    """Lift the root r of x² ≡ p (mod q) to a root modulo q^prec (q odd)."""
    modulus = q
    root = r % q
    for _ in range(1, prec):
        modulus *= q
        # Newton step; 2·root is a unit since q is odd and q ∤ p
        root = (root - (root * root - p) * pow(2 * root, -1, modulus)) % modulus
    return root


def _val(n: int, q: int) -> int:
    if n == 0:
        raise create_domain_error("valuation of 0 is infinite")
    v = 0
    while n % q == 0:
        n //= q
        v += 1
    return v


# ============================================================================
# Residues and valuations at places
# ============================================================================


def residue_mod_sqrtp(x: QuadInt) -> int:
    """Image of x in O_k/(√p) = Z/p."""
    return x.u * (x.p + 1) // 2 % x.p


def local_residue_at_2(x: QuadInt, branch: PlaceK) -> int:
    """Residue of the 2-adic unit x modulo 4 at a dyadic place."""
    if not branch.is_dyadic:
        raise create_domain_error(f"{branch} is not a dyadic place")
    if x.norm % 2 == 0:
        raise create_domain_error(
            "element has even norm, so it is not a unit at 2", p=x.p
        )
    s = sqrt_2adic(x.p, 4)
    sign = 1 if branch.kind == PlaceKind.DYADIC_MINUS else -1
    return (x.u + sign * x.v * s) // 2 % 4


def _local_image(x: QuadInt, place: PlaceK, precision: int) -> tuple[int, int]:
    """(modulus, image of x in the completion modulo modulus) at a degree-one place.

    Only for dyadic places and split odd primes, where the completion is Z_q.
    """
    if place.is_dyadic:
        modulus = 1 << precision
        s = sqrt_2adic(x.p, precision + 1)
        sign = 1 if place.kind == PlaceKind.DYADIC_MINUS else -1
        return modulus, ((x.u + sign * x.v * s) // 2) % modulus
    assert place.q is not None and place.r is not None
    modulus = place.q**precision
    root = _sqrt_qadic(x.p, place.q, place.r, precision)
    return modulus, (x.u + x.v * root) * pow(2, -1, modulus) % modulus


def valuation_at(x: QuadInt, place: PlaceK) -> tuple[int, int]:
    """(valuation of x at place, residue-level data of the unit part).

    The second entry is:
      * (√p): the residue mod p of x / √p^v;
      * dyadic: the unit part of x modulo 8;
      * split odd prime: the unit part modulo q;
      * inert odd prime: the norm of the unit part modulo q.
    """
    if x.is_zero():
        raise create_domain_error("valuation of 0 is infinite", p=x.p)
    if place.is_real:
        raise create_domain_error("real places carry no valuation")
    p = x.p

    if place.kind == PlaceKind.SQRT_P:
        v, u, w = 0, x.u, x.v
        while u % p == 0:
            # (u + w√p)/2 = √p · (w + (u/p)√p)/2
            u, w = w, u // p
            v += 1
        return v, u * (p + 1) // 2 % p

    if place.kind == PlaceKind.ODD_PRIME and place.r is None:
        q = place.q
        assert q is not None
        v = min(_val(c, q) for c in (x.u, x.v) if c != 0)
        unit = QuadInt(p, x.u // q**v, x.v // q**v)
        return v, unit.norm % q

    q = 2 if place.is_dyadic else place.q
    assert q is not None
    bound = _val(x.norm, q)
    precision = bound + 4
    modulus, image = _local_image(x, place, precision)
    v = _val(image, q) if image else precision
    if v > bound:
        raise AssertionError(f"local valuation {v} exceeds the norm valuation {bound}")
    unit = image // q**v
    return v, unit % (8 if q == 2 else q)


# ============================================================================
# Ramification and splitting in k(√δ)
# ============================================================================


def _candidate_places(delta: QuadInt) -> list[PlaceK]:
    """All finite places where δ can have nonzero valuation, plus both dyadic places."""
    p = delta.p
    places = [PlaceK.dyadic_plus(), PlaceK.dyadic_minus()]
    n = abs(delta.norm)
    if n % p == 0:
        places.append(PlaceK.sqrt_p())
    for q in sorted(factorint(n)):
        if q in (2, p):
            continue
        if legendre(p, q) == 1:
            r = sqrt_mod_p(p, q)
            places.extend(PlaceK.odd_prime(q, root) for root in sorted({r, q - r}))
        else:
            places.append(PlaceK.odd_prime(q))
    return places


def _require_dyadic_split(p: int) -> None:
    if p % 8 != 1:
        raise create_domain_error(
            f"{p} is not 1 mod 8; dyadic places of Q(sqrt p) are only modelled then",
            p=p,
        )


def splitting_in_quadratic(place: PlaceK, delta: QuadInt) -> SplitType:
    """How place behaves in k(√δ)."""
    if delta.is_zero():
        raise create_domain_error("delta must be nonzero", p=delta.p)
    if place.is_real:
        positive = delta.embedding_sign(place.kind == PlaceKind.REAL_PLUS) > 0
        return SplitType.SPLIT if positive else SplitType.RAMIFIED
    if place.is_dyadic:
        _require_dyadic_split(delta.p)

    v, unit = valuation_at(delta, place)
    if v % 2:
        return SplitType.RAMIFIED

    if place.is_dyadic:
        if unit % 4 == 3:
            return SplitType.RAMIFIED
        return SplitType.SPLIT if unit % 8 == 1 else SplitType.INERT

    modulus = delta.p if place.kind == PlaceKind.SQRT_P else place.q
    assert modulus is not None
    return SplitType.SPLIT if legendre(unit, modulus) == 1 else SplitType.INERT


def quad_ramified_places(delta: QuadInt) -> list[PlaceK]:
    """Places of k ramified in k(√δ), in canonical order."""
    if delta.is_zero():
        raise create_domain_error("delta must be nonzero", p=delta.p)
    _require_dyadic_split(delta.p)
    places = [PlaceK.real_plus(), PlaceK.real_minus(), *_candidate_places(delta)]
    ramified = [
        place
        for place in places
        if splitting_in_quadratic(place, delta) == SplitType.RAMIFIED
    ]
    return sorted(ramified, key=PlaceK.sort_key)
