"""Binary quadratic forms and class numbers of quadratic fields.

Definite discriminants (D < 0) count reduced positive definite forms.
Indefinite discriminants (D > 0) walk the cycles of reduced forms under the
reduction operator ρ: one cycle per narrow class. Wide classes pair the
cycle of f with the cycle of −f.

Real reduction uses the integer form of the usual inequalities with
s = ⌊√D⌋ (D is not a square, so √D never equals an integer):

    0 < b ≤ s,   s − b + 1 ≤ 2|a| ≤ s + b.
"""

import logging
from dataclasses import dataclass
from math import gcd, isqrt

from pydantic import BaseModel, Field
from sympy import divisors, factorint, isprime
from sympy.core.intfunc import igcdex

from ..core.errors import StructuralError, create_domain_error

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Form:
    """The form a·x² + b·xy + c·y²."""

    a: int
    b: int
    c: int

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def is_primitive(self) -> bool:
        return gcd(gcd(self.a, self.b), self.c) == 1

    def conjugate(self) -> "Form":
        """(a, −b, c): the image under the Galois involution."""
        return Form(self.a, -self.b, self.c)

    def negated(self) -> "Form":
        """(−a, b, −c)."""
        return Form(-self.a, self.b, -self.c)

    def is_reduced(self) -> bool:
        d = self.discriminant
        if d < 0:
            a, b, c = self.a, self.b, self.c
            if not (abs(b) <= a <= c):
                return False
            return b >= 0 if (abs(b) == a or a == c) else True
        s = isqrt(d)
        return 0 < self.b <= s and s - self.b + 1 <= 2 * abs(self.a) <= s + self.b

    def __str__(self) -> str:
        return f"({self.a}, {self.b}, {self.c})"


class ClassNumberResult(BaseModel):
    """Class numbers of the quadratic field of discriminant D.

    ``h`` is the narrow class number (the number of form cycles when D > 0),
    ``h_wide`` the ordinary one, and ``ambiguous_count`` the number of wide
    classes fixed by the Galois involution.
    """

    D: int
    h: int = Field(..., ge=1)
    h_wide: int = Field(..., ge=1)
    ambiguous_count: int = Field(..., ge=1)

    class Config:
        frozen = True


# ============================================================================
# Discriminants
# ============================================================================


def _is_squarefree(n: int) -> bool:
    return all(e == 1 for e in factorint(abs(n)).values())


def is_fundamental_discriminant(D: int) -> bool:
    """Whether D is the discriminant of a quadratic field."""
    if D in (0, 1):
        return False
    if D % 4 == 1:
        return _is_squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and _is_squarefree(m)
    return False


def _require_fundamental(D: int, max_abs: int | None) -> None:
    if not is_fundamental_discriminant(D):
        raise create_domain_error(
            f"{D} is not a fundamental discriminant",
            remedy="D must be squarefree and 1 mod 4, or 4m with m squarefree and 2, 3 mod 4",
        )
    if max_abs is not None and abs(D) > max_abs:
        raise create_domain_error(
            f"|D| = {abs(D)} exceeds the configured bound {max_abs}",
            remedy="raise arithmetic.form_discriminant_bound",
        )


# ============================================================================
# Reduction
# ============================================================================


def _reduce_definite(f: Form) -> Form:
    a, b, c = f.a, f.b, f.c
    if a <= 0:
        raise create_domain_error(f"{f} is not positive definite")
    while True:
        if not -a < b <= a:
            r = (a - b) // (2 * a)
            b, c = b + 2 * r * a, a * r * r + b * r + c
        if a > c:
            a, b, c = c, -b, a
            continue
        if a == c and b < 0:
            b = -b
        return Form(a, b, c)


def rho(f: Form) -> Form:
    """One step of the indefinite reduction operator.

    (a, b, c) ↦ (c, r, (r² − D)/(4c)) with r ≡ −b (mod 2|c|) normalized
    against c: into (−|c|, |c|] when |c| > √D, else into (√D − 2|c|, √D).
    """
    d = f.discriminant
    s = isqrt(d)
    m = abs(f.c)
    lo = -m + 1 if m > s else s - 2 * m + 1
    r = lo + (-f.b - lo) % (2 * m)
    return Form(f.c, r, (r * r - d) // (4 * f.c))


def reduce_form(f: Form) -> Form:
    """The reduced form reached from f by the standard reduction.

    Definite forms reduce to the unique reduced representative of their
    class; indefinite forms reduce to some form on the cycle of their class.
    """
    d = f.discriminant
    if d == 0 or (d > 0 and isqrt(d) ** 2 == d):
        raise create_domain_error(f"{f} has square discriminant {d}")
    if d < 0:
        return _reduce_definite(f)
    g = f
    while not g.is_reduced():
        g = rho(g)
    return g


def reduced_forms(D: int) -> list[Form]:
    """All primitive reduced forms of discriminant D (positive definite when D < 0)."""
    if D % 4 not in (0, 1):
        raise create_domain_error(f"{D} is not a discriminant")
    forms: list[Form] = []
    if D < 0:
        a = 1
        while 3 * a * a <= -D:
            for b in range(-a + 1, a + 1):
                if (b - D) % 2 or (b * b - D) % (4 * a):
                    continue
                c = (b * b - D) // (4 * a)
                f = Form(a, b, c)
                if c >= a and f.is_reduced() and f.is_primitive:
                    forms.append(f)
            a += 1
        return forms

    s = isqrt(D)
    for b in range(1, s + 1):
        if (b - D) % 2:
            continue
        n = (D - b * b) // 4
        for a in divisors(n):
            if not s - b + 1 <= 2 * a <= s + b:
                continue
            for sign in (1, -1):
                f = Form(sign * a, b, -sign * (n // a))
                if f.is_primitive:
                    forms.append(f)
    return forms


# ============================================================================
# Class numbers
# ============================================================================


def _cycles(D: int) -> tuple[list[list[Form]], dict[Form, int]]:
    """Partition the reduced indefinite forms into ρ-cycles."""
    cycles: list[list[Form]] = []
    index: dict[Form, int] = {}
    for f in reduced_forms(D):
        if f in index:
            continue
        cycle: list[Form] = []
        g = f
        while g not in index:
            index[g] = len(cycles)
            cycle.append(g)
            g = rho(g)
        if g != f:
            raise StructuralError(
                f"rho left the cycle of {f} at {g}",
                metadata={"D": str(D)},
            )
        cycles.append(cycle)
    return cycles, index


def class_number(D: int, max_abs: int | None = None) -> ClassNumberResult:
    """Class numbers and ambiguous class count for fundamental discriminant D."""
    _require_fundamental(D, max_abs)

    if D < 0:
        forms = reduced_forms(D)
        ambiguous = sum(1 for f in forms if _reduce_definite(f.conjugate()) == f)
        return ClassNumberResult(
            D=D, h=len(forms), h_wide=len(forms), ambiguous_count=ambiguous
        )

    cycles, index = _cycles(D)
    partner = [index[cycle[0].negated()] for cycle in cycles]
    wide = {min(i, partner[i]) for i in range(len(cycles))}

    ambiguous = 0
    for i in wide:
        target = index[reduce_form(cycles[i][0].conjugate())]
        if target in (i, partner[i]):
            ambiguous += 1

    logger.debug(
        "D=%d: %d reduced forms in %d cycles, %d wide classes",
        D,
        len(index),
        len(cycles),
        len(wide),
    )
    return ClassNumberResult(
        D=D, h=len(cycles), h_wide=len(wide), ambiguous_count=ambiguous
    )


def ambiguous_classes(D: int, max_abs: int | None = None) -> int:
    """Number of ideal classes fixed by conjugation (wide classes when D > 0)."""
    return class_number(D, max_abs).ambiguous_count


def is_h_odd(p: int, max_abs: int | None = None) -> bool:
    """Whether h(Q(√p)) is odd, for a prime p ≡ 1 (mod 4)."""
    if not isprime(p) or p % 4 != 1:
        raise create_domain_error(f"{p} is not a prime 1 mod 4", p=p)
    result = class_number(p, max_abs)
    if result.h != result.h_wide:
        logger.warning("narrow and wide class numbers differ for D=%d", p)
    return result.h % 2 == 1


# ============================================================================
# Composition (definite forms)
# ============================================================================


def principal_form(D: int) -> Form:
    k = D % 2
    return Form(1, k, (k - D) // 4)


def compose(f: Form, g: Form) -> Form:
    """Gaussian composition of primitive positive definite forms, reduced."""
    D = f.discriminant
    if g.discriminant != D:
        raise create_domain_error("cannot compose forms of different discriminants")
    if D >= 0:
        raise create_domain_error("composition is only provided for definite forms")

    if f.a > g.a:
        f, g = g, f
    a1, b1 = f.a, f.b
    a2, b2, c2 = g.a, g.b, g.c
    s = (b1 + b2) // 2
    n = b2 - s

    if a2 % a1 == 0:
        y1, d = 0, a1
    else:
        u, _, d = igcdex(a2, a1)
        y1 = u
    if s % d == 0:
        x2, y2, d1 = 0, -1, d
    else:
        x2, y2, d1 = igcdex(s, d)
        y2 = -y2

    v1, v2 = a1 // d1, a2 // d1
    r = (y1 * y2 * n - x2 * c2) % v1
    b3 = b2 + 2 * v2 * r
    a3 = v1 * v2
    if (b3 * b3 - D) % (4 * a3):
        raise StructuralError(f"composition of {f} and {g} is not integral")
    return _reduce_definite(Form(int(a3), int(b3), int((b3 * b3 - D) // (4 * a3))))


def two_torsion_count(D: int) -> int:
    """Number of classes of order ≤ 2, by composing each reduced form with itself."""
    if D >= 0:
        raise create_domain_error("two_torsion_count needs a negative discriminant")
    identity = principal_form(D)
    return sum(1 for f in reduced_forms(D) if compose(f, f) == identity)
