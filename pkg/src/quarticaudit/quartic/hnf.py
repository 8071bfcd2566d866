"""Integer lattices kept in Hermite normal form.

``HermiteLattice`` holds at most one row per pivot column: row i starts at
column i (upper triangular). Vectors are inserted one at a time and combined
with the existing pivot rows by extended Euclid steps, so the basis is
always echelon. ``rows()`` returns the canonical form: positive pivots and
entries above each pivot reduced into [0, pivot).

When a modulus m with m·Z^n ⊆ L is known (an ideal contains its norm; a
full-rank lattice contains its determinant), entries right of each pivot are
kept reduced mod m.
"""

from collections.abc import Iterable, Sequence

from sympy.core.intfunc import igcdex

Rows = tuple[tuple[int, ...], ...]


class HermiteLattice:
    """Incremental HNF of the Z-span of inserted vectors."""

    def __init__(self, dimension: int, modulus: int | None = None):
        self.dimension = dimension
        self.pivots: list[list[int] | None] = [None] * dimension
        self.modulus: int | None = None
        if modulus is not None:
            self.set_modulus(modulus)

    def set_modulus(self, modulus: int) -> None:
        """Declare m·Z^n ⊆ L and insert those vectors."""
        modulus = abs(modulus)
        if modulus == 0:
            raise ValueError("modulus must be nonzero")
        for i in range(self.dimension):
            row = [0] * self.dimension
            row[i] = modulus
            self.insert(row)
        self.modulus = modulus
        for i, pivot in enumerate(self.pivots):
            if pivot is not None:
                self._reduce_tail(pivot, i + 1)

    @property
    def rank(self) -> int:
        return sum(1 for row in self.pivots if row is not None)

    @property
    def is_full_rank(self) -> bool:
        return self.rank == self.dimension

    @property
    def determinant(self) -> int:
        """Index of L in Z^n; 0 when L is not of full rank."""
        if not self.is_full_rank:
            return 0
        det = 1
        for i, row in enumerate(self.pivots):
            assert row is not None
            det *= row[i]
        return det

    def _reduce_tail(self, row: list[int], start: int) -> None:
        if self.modulus is None:
            return
        for k in range(start, self.dimension):
            row[k] %= self.modulus

    def insert(self, vector: Sequence[int]) -> bool:
        """Add a vector; returns whether the lattice changed."""
        if len(vector) != self.dimension:
            raise ValueError(f"expected length {self.dimension}, got {len(vector)}")
        v = list(vector)
        if self.modulus is not None:
            self._reduce_tail(v, 0)
        changed = False
        for i in range(self.dimension):
            if v[i] == 0:
                continue
            pivot = self.pivots[i]
            if pivot is None:
                if v[i] < 0:
                    v = [-c for c in v]
                self.pivots[i] = v
                return True
            a, b = pivot[i], v[i]
            if b % a == 0:
                q = b // a
                v = [vc - q * pc for vc, pc in zip(v, pivot, strict=True)]
            else:
                s, t, g = igcdex(a, b)
                s, t, g = int(s), int(t), int(g)
                if g < 0:
                    s, t, g = -s, -t, -g
                new_pivot = [s * pc + t * vc for pc, vc in zip(pivot, v, strict=True)]
                ua, ub = a // g, b // g
                v = [ua * vc - ub * pc for vc, pc in zip(v, pivot, strict=True)]
                self._reduce_tail(new_pivot, i + 1)
                self.pivots[i] = new_pivot
                changed = True
            self._reduce_tail(v, i + 1)
        return changed

    def extend(self, vectors: Iterable[Sequence[int]]) -> bool:
        changed = False
        for v in vectors:
            changed = self.insert(v) or changed
        return changed

    def contains(self, vector: Sequence[int]) -> bool:
        """Membership by forward substitution."""
        v = list(vector)
        for i in range(self.dimension):
            if v[i] == 0:
                continue
            pivot = self.pivots[i]
            if pivot is None or v[i] % pivot[i]:
                return False
            q = v[i] // pivot[i]
            v = [vc - q * pc for vc, pc in zip(v, pivot, strict=True)]
        return True

    def rows(self) -> Rows:
        """Canonical HNF rows, one per pivot, in pivot order."""
        rows: dict[int, list[int]] = {}
        for i, pivot_row in enumerate(self.pivots):
            if pivot_row is not None:
                rows[i] = list(pivot_row)
        present = sorted(rows)
        for idx in range(len(present)):
            j = present[idx]
            pivot = rows[j]
            for i in present[:idx]:
                q = rows[i][j] // pivot[j]
                if q:
                    rows[i] = [a - q * b for a, b in zip(rows[i], pivot, strict=True)]
        return tuple(tuple(rows[i]) for i in present)


def hnf(vectors: Iterable[Sequence[int]], dimension: int, modulus: int | None = None) -> Rows:
    """Canonical HNF rows of the lattice spanned by vectors (and modulus·Z^n)."""
    lattice = HermiteLattice(dimension, modulus)
    lattice.extend(vectors)
    return lattice.rows()


def hnf_contains(rows: Rows, vector: Sequence[int]) -> bool:
    """Membership of vector in the full-rank lattice with HNF rows."""
    v = list(vector)
    for i, row in enumerate(rows):
        if v[i] % row[i]:
            return False
        q = v[i] // row[i]
        if q:
            v = [a - q * b for a, b in zip(v, row, strict=True)]
    return not any(v)
