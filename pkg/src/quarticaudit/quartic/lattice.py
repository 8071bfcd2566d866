"""Small elements of ideals: LLL-reduced bases and shell enumeration.

Ideal bases are LLL-reduced against the Minkowski embedding (real places
as is, complex places as √2·re and √2·im). Coefficient vectors over the
reduced basis are then enumerated in shells of growing sup-norm, with the
float norm as a cheap prefilter before any exact arithmetic.
"""

import logging
from collections.abc import Iterator, Sequence
from functools import lru_cache

import numpy as np
from sympy import QQ, ZZ
from sympy.polys.matrices import DomainMatrix

from .hnf import Rows
from .ideals import Ideal, principal_ideal
from .order import Coords, OrderBasis

logger = logging.getLogger(__name__)

_EMBEDDING_SCALE = 2.0**40


def minkowski_vectors(rows: Sequence[Sequence[int]], ob: OrderBasis) -> np.ndarray:
    """Real Minkowski vectors of the given elements, shape (len(rows), 4)."""
    r1, _ = ob.signature
    emb = ob.embedding_matrix(rows)
    real = emb[:, :r1].real
    cplx = emb[:, r1:]
    return np.hstack([real, np.sqrt(2) * cplx.real, np.sqrt(2) * cplx.imag])


def lll_basis(rows: Rows, ob: OrderBasis) -> Rows:
    """An LLL-reduced Z-basis of the lattice spanned by ``rows``.

    Reduces [I | C·V] with V the Minkowski vectors; the identity block
    records the unimodular transform.
    """
    vectors = minkowski_vectors(rows, ob)
    scale = _EMBEDDING_SCALE / max(float(np.abs(vectors).max()), 1.0)
    augmented = [
        [int(i == j) for j in range(4)] + [int(round(v * scale)) for v in vectors[i]]
        for i in range(4)
    ]
    reduced = DomainMatrix.from_list(augmented, ZZ).lll(delta=QQ(99, 100))
    transform = [[int(c) for c in row[:4]] for row in reduced.to_Matrix().tolist()]
    basis = tuple(
        tuple(sum(t[i] * rows[i][k] for i in range(4)) for k in range(4))
        for t in transform
    )
    return basis


@lru_cache(maxsize=16)
def shell(lo: int, hi: int) -> np.ndarray:
    """Vectors c ∈ Z⁴ with lo < max|c_i| ≤ hi and first nonzero entry positive.

    Sorted by Euclidean length, so shorter combinations come first.
    """
    r = np.arange(-hi, hi + 1, dtype=np.int32)
    grid = np.stack(np.meshgrid(r, r, r, r, indexing="ij"), axis=-1).reshape(-1, 4)
    sup = np.abs(grid).max(axis=1)
    grid = grid[(sup > lo) & (sup <= hi)]
    first = np.argmax(grid != 0, axis=1)
    grid = grid[grid[np.arange(len(grid)), first] > 0]
    order = np.argsort((grid * grid).sum(axis=1), kind="stable")
    result = grid[order]
    result.setflags(write=False)
    return result


def float_norms(coeffs: np.ndarray, basis: Rows, ob: OrderBasis) -> np.ndarray:
    """Approximate norms of Σ c_i·basis_i for each row c of ``coeffs``."""
    r1, _ = ob.signature
    emb = ob.embedding_matrix(basis)
    values = coeffs.astype(float) @ emb
    real = np.prod(values[:, :r1].real, axis=1) if r1 else np.ones(len(coeffs))
    cplx = np.prod(np.abs(values[:, r1:]) ** 2, axis=1)
    return real * cplx


def combine(c: Sequence[int], basis: Rows) -> Coords:
    out = [sum(int(c[i]) * basis[i][k] for i in range(4)) for k in range(4)]
    return (out[0], out[1], out[2], out[3])


def small_elements(
    ideal: Ideal, ob: OrderBasis, radius: int
) -> Iterator[tuple[Coords, float]]:
    """Nonzero elements of the ideal with coefficients ≤ radius over a reduced basis.

    Yields (element, approximate norm), smallest |norm| first. Elements are
    taken up to sign.
    """
    basis = lll_basis(ideal.hnf, ob)
    coeffs = shell(0, radius)
    norms = float_norms(coeffs, basis, ob)
    for idx in np.argsort(np.abs(norms), kind="stable"):
        yield combine(coeffs[idx], basis), float(norms[idx])


def is_principal(
    ideal: Ideal, ob: OrderBasis, search_bound: int = 4, doublings: int = 2
) -> Coords | None:
    """A generator of the ideal, or None when the bounded search finds none.

    None is inconclusive: it never proves that the ideal is non-principal.
    A candidate α is accepted when |N(α)| = N(I) exactly and the HNF of (α)
    equals that of the ideal.
    """
    if ideal.is_unit:
        return ob.one()
    target = ideal.norm
    basis = lll_basis(ideal.hnf, ob)
    tolerance = 1e-6 * target + 0.5

    lo, hi = 0, search_bound
    for _ in range(doublings + 1):
        coeffs = shell(lo, hi)
        norms = np.abs(float_norms(coeffs, basis, ob))
        hits = np.nonzero(np.abs(norms - target) < tolerance)[0]
        for idx in hits:
            alpha = combine(coeffs[idx], basis)
            if abs(ob.norm(alpha)) != target:
                continue
            if principal_ideal(alpha, ob).hnf == ideal.hnf:
                logger.debug("ideal of norm %d generated by %s", target, alpha)
                return alpha
        lo, hi = hi, 2 * hi
    logger.debug("no generator found for ideal of norm %d within bound %d", target, lo)
    return None
