"""Maximal orders of quartic fields given by monic integer quartics.

Elements of the order are integer coordinate vectors over the basis
ω_0..ω_3, where ω_i = (1/d)·Σ_j basis[i][j]·θ^j and θ is a root of the
defining polynomial. Multiplication goes through a precomputed table of
structure constants.
"""

import logging
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import isqrt, prod

import numpy as np
from sympy import Matrix, Poly, ZZ, factorint, gcd, symbols
from sympy.polys.matrices import DomainMatrix
from sympy.polys.numberfields.basis import round_two

from ..core.errors import FieldContext, StructuralError, create_domain_error

logger = logging.getLogger(__name__)

x = symbols("x")

Coords = tuple[int, int, int, int]

# π > 314159/100000, so 4/π is bounded above by its reciprocal times 4
_PI_LOWER = Fraction(314159, 100000)


def as_poly(coeffs: Sequence[int], **options: object) -> Poly:
    """Poly from ascending coefficients c0..c4."""
    return Poly(list(reversed(coeffs)), x, **options)


def dedekind_is_maximal(poly: Sequence[int], q: int) -> bool:
    """Dedekind's criterion: is Z[θ] maximal at q?

    With f ≡ Π g_i^e_i (mod q), g = Π g_i and h = f / g (mod q), set
    F = (f − g·h)/q. Z[θ] is q-maximal iff gcd(F̄, ḡ, h̄) = 1 over F_q.
    """
    f = as_poly(poly, domain=ZZ)
    _, factors = as_poly(poly, modulus=q).factor_list()
    one = Poly(1, x, domain=ZZ)
    g = prod((Poly(gi.all_coeffs(), x, domain=ZZ) for gi, _ in factors), start=one)
    h = prod(
        (Poly(gi.all_coeffs(), x, domain=ZZ) ** (e - 1) for gi, e in factors),
        start=one,
    )
    F = f - g * h
    if any(c % q for c in F.all_coeffs()):
        raise StructuralError(f"f - g·h is not divisible by {q}")
    F = Poly([c // q for c in F.all_coeffs()], x, modulus=q)
    g_bar = Poly(g.all_coeffs(), x, modulus=q)
    h_bar = Poly(h.all_coeffs(), x, modulus=q)
    common = gcd(gcd(F, g_bar), h_bar)
    return common.degree() == 0


@dataclass(frozen=True)
class OrderBasis:
    """Maximal order of Q(θ), f(θ) = 0, with its discriminant and signature."""

    poly: tuple[int, ...]
    basis: tuple[tuple[int, ...], ...]
    denom: int
    disc: int
    signature: tuple[int, int]

    @property
    def degree(self) -> int:
        return len(self.poly) - 1

    @property
    def poly_disc(self) -> int:
        return int(as_poly(self.poly, domain=ZZ).discriminant())

    @property
    def index(self) -> int:
        """[O_K : Z[θ]]."""
        square = self.poly_disc // self.disc
        root = isqrt(square)
        if root * root != square:
            raise StructuralError(f"disc(f)/disc(K) = {square} is not a square")
        return root

    @property
    def context(self) -> FieldContext:
        return FieldContext(self.poly)

    # ------------------------------------------------------------------
    # Conversions
    # ------------------------------------------------------------------

    @cached_property
    def _to_coords(self) -> list[list[Fraction]]:
        """d·B⁻¹: maps power-basis coefficients to basis coordinates."""
        inverse = Matrix(self.basis).inv() * self.denom
        return [[Fraction(int(v.p), int(v.q)) for v in row] for row in inverse.tolist()]

    def from_power_basis(self, coeffs: Sequence[int | Fraction]) -> Coords:
        """Coordinates of Σ coeffs[j]·θ^j; the element must be integral.

        Only degrees below 4 are accepted: reduce modulo f first.
        """
        if len(coeffs) > 4:
            raise StructuralError(
                f"power-basis element {list(coeffs)} has degree above 3",
                context=self.context,
            )
        padded = [Fraction(c) for c in coeffs] + [Fraction(0)] * (4 - len(coeffs))
        result = []
        for col in range(4):
            value = sum(padded[j] * self._to_coords[j][col] for j in range(4))
            if value.denominator != 1:
                raise StructuralError(
                    f"element {list(coeffs)} is not in the maximal order",
                    context=self.context,
                )
            result.append(int(value))
        return (result[0], result[1], result[2], result[3])

    def to_power_basis(self, a: Sequence[int]) -> list[Fraction]:
        return [
            Fraction(sum(a[i] * self.basis[i][j] for i in range(4)), self.denom)
            for j in range(4)
        ]

    def one(self) -> Coords:
        return self.from_power_basis([1])

    def rational(self, n: int) -> Coords:
        c = self.one()
        return (n * c[0], n * c[1], n * c[2], n * c[3])

    def theta(self) -> Coords:
        return self.from_power_basis([0, 1])

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    @cached_property
    def mult_table(self) -> list[list[Coords]]:
        """table[i][j] = coordinates of ω_i·ω_j."""
        # f is monic, so remainders of integer polynomials stay integral
        f = as_poly(self.poly, domain=ZZ)
        rows = [as_poly(row, domain=ZZ) for row in self.basis]
        scale = self.denom * self.denom
        table = []
        for i in range(4):
            line = []
            for j in range(4):
                product = (rows[i] * rows[j]).rem(f)
                coeffs = [Fraction(int(c), scale) for c in reversed(product.all_coeffs())]
                line.append(self.from_power_basis(coeffs))
            table.append(line)
        return table

    def mul(self, a: Sequence[int], b: Sequence[int]) -> Coords:
        out = [0, 0, 0, 0]
        table = self.mult_table
        for i in range(4):
            if not a[i]:
                continue
            for j in range(4):
                if not b[j]:
                    continue
                c = a[i] * b[j]
                t = table[i][j]
                out[0] += c * t[0]
                out[1] += c * t[1]
                out[2] += c * t[2]
                out[3] += c * t[3]
        return (out[0], out[1], out[2], out[3])

    def mul_matrix(self, a: Sequence[int]) -> list[Coords]:
        """Rows: coordinates of a·ω_i."""
        unit = [(1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)]
        return [self.mul(a, e) for e in unit]

    def norm(self, a: Sequence[int]) -> int:
        """N(a) = det of multiplication by a."""
        return int(DomainMatrix.from_list(self.mul_matrix(a), ZZ).det())

    # ------------------------------------------------------------------
    # Embeddings
    # ------------------------------------------------------------------

    @cached_property
    def roots(self) -> np.ndarray:
        """The r1 real roots followed by one root from each complex pair."""
        found = np.roots(list(reversed(self.poly)))
        r1, _ = self.signature
        order = np.argsort(np.abs(found.imag))
        real = np.sort(found[order[:r1]].real).astype(complex)
        rest = [z for z in found[order[r1:]] if z.imag > 0]
        return np.concatenate([real, np.array(rest, dtype=complex)])

    def embedding_matrix(self, rows: Sequence[Sequence[int]]) -> np.ndarray:
        """σ_k(element_i) for elements given by coordinates: shape (len(rows), r1 + r2)."""
        power = np.array(
            [[float(c) for c in self.to_power_basis(r)] for r in rows], dtype=float
        )
        vandermonde = np.vander(self.roots, 4, increasing=True).T
        return power @ vandermonde


def _validate(poly: Sequence[int]) -> tuple[int, ...]:
    coeffs = tuple(int(c) for c in poly)
    if len(coeffs) != 5 or coeffs[4] != 1:
        raise create_domain_error(
            f"expected a monic quartic c0,c1,c2,c3,1, got {list(coeffs)}",
            remedy="pass five integer coefficients, constant term first",
        )
    if not as_poly(coeffs, domain=ZZ).is_irreducible:
        raise create_domain_error(
            f"polynomial {list(coeffs)} is reducible over Q",
            remedy="the field needs an irreducible defining polynomial",
        )
    return coeffs


def maximal_order(poly: Sequence[int]) -> OrderBasis:
    """Integral basis, discriminant and signature of Q[x]/(poly).

    The equation order is kept when Dedekind's criterion holds at every q
    with q² | disc(poly); otherwise the order is enlarged by sympy's
    round-two algorithm.
    """
    coeffs = _validate(poly)
    f = as_poly(coeffs, domain=ZZ)
    d_f = int(f.discriminant())
    r1 = int(f.count_roots())
    signature = (r1, (4 - r1) // 2)

    bad = [int(q) for q, e in factorint(abs(d_f)).items() if e >= 2]
    non_maximal = [q for q in bad if not dedekind_is_maximal(coeffs, q)]

    if not non_maximal:
        identity = tuple(tuple(int(i == j) for j in range(4)) for i in range(4))
        logger.debug("equation order of %s is maximal", list(coeffs))
        return OrderBasis(coeffs, identity, 1, d_f, signature)

    ZK, d_K = round_two(f)
    columns = ZK.matrix.to_Matrix().tolist()
    basis = tuple(tuple(int(columns[j][i]) for j in range(4)) for i in range(4))
    denom = int(ZK.denom)
    det = int(ZK.matrix.det())
    disc = d_f * det * det // denom**8
    if disc != int(d_K):
        raise StructuralError(
            f"discriminant {disc} from the basis disagrees with round two's {d_K}",
            context=FieldContext(coeffs),
        )
    logger.debug(
        "enlarged order of %s at %s: disc %d", list(coeffs), non_maximal, disc
    )
    return OrderBasis(coeffs, basis, denom, disc, signature)


def minkowski_bound(ob: OrderBasis) -> Fraction:
    """Rational upper bound for (4/π)^r2 · 4!/4⁴ · √|disc|."""
    _, r2 = ob.signature
    scale = 10**6
    sqrt_upper = Fraction(isqrt(abs(ob.disc) * scale * scale) + 1, scale)
    return (4 / _PI_LOWER) ** r2 * Fraction(24, 256) * sqrt_upper


# ============================================================================
# The families used by the verifier
# ============================================================================


def pure_quartic(p: int) -> tuple[int, ...]:
    """x⁴ − p."""
    return (-p, 0, 0, 0, 1)


def unit_field_poly(a: int) -> tuple[int, ...]:
    """x⁴ − 2a·x² − 1, whose roots are ±√ε and ±√ε' for ε = a + b√p."""
    return (-1, 0, -2 * a, 0, 1)


def cyclic_subfield_poly(p: int, b: int) -> tuple[int, ...]:
    """x⁴ − 2bp·x² + p, whose roots are ±√(ε√p) and their conjugates."""
    return (p, 0, -2 * b * p, 0, 1)
