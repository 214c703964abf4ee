"""Exact rational vectors and matrices.

Everything here is plain Gaussian elimination over `fractions.Fraction`;
no floating point exists anywhere in the package, so every result is
bit-reproducible.  Selections of vectors are always read in increasing
index order; the equality decider relies on that single convention for
sign consistency of wedge products.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class VectorFamily:
    """An ordered family of n vectors in an ambient space of dimension dim."""

    dim: int
    vectors: tuple[Vector, ...]

    def __post_init__(self):
        vecs = tuple(tuple(Fraction(x) for x in v) for v in self.vectors)
        for v in vecs:
            if len(v) != self.dim:
                raise ValueError(f"vector of length {len(v)} in dimension {self.dim}")
        object.__setattr__(self, "vectors", vecs)

    def __len__(self) -> int:
        return len(self.vectors)

    def select(self, indices: Iterable[int]) -> list[Vector]:
        """Vectors at the given 1-based indices, in increasing index order."""
        out = []
        for i in sorted(indices):
            if not 1 <= i <= len(self.vectors):
                raise IndexError(f"index {i} out of range 1..{len(self.vectors)}")
            out.append(self.vectors[i - 1])
        return out


def parse_rational(text: str) -> Fraction:
    return Fraction(text)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    """Exact rank by rational Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return 0
    n_rows, n_cols = len(m), len(m[0])
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, n_rows):
            if m[i][c] != 0:
                factor = m[i][c] / m[r][c]
                for j in range(c, n_cols):
                    m[i][j] -= factor * m[r][j]
        r += 1
        if r == n_rows:
            break
    return r


def determinant(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant of a square matrix."""
    m = [[Fraction(x) for x in row] for row in rows]
    size = len(m)
    for row in m:
        if len(row) != size:
            raise ValueError("determinant of a non-square matrix")
    det = Fraction(1)
    for c in range(size):
        pivot = next((i for i in range(c, size) if m[i][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        for i in range(c + 1, size):
            if m[i][c] != 0:
                factor = m[i][c] / m[c][c]
                for j in range(c, size):
                    m[i][j] -= factor * m[c][j]
    return det


def is_independent(family: VectorFamily, indices: Iterable[int]) -> bool:
    """Whether the selected vectors are linearly independent."""
    selected = family.select(indices)
    return rank(selected) == len(selected)


def _stack_rank(a: Sequence[Vector], b: Sequence[Vector]) -> int:
    return rank(list(a) + list(b))


def span_equal(
    fam_a: VectorFamily,
    idx_a: Iterable[int],
    fam_b: VectorFamily,
    idx_b: Iterable[int],
) -> bool:
    """Whether two independent selections span the same subspace."""
    sel_a = fam_a.select(idx_a)
    sel_b = fam_b.select(idx_b)
    if rank(sel_a) != len(sel_a) or rank(sel_b) != len(sel_b):
        raise ValueError("span comparison requires independent selections")
    if len(sel_a) != len(sel_b):
        return False
    return _stack_rank(sel_a, sel_b) == len(sel_a)


def coordinates_in_basis(basis: Sequence[Vector], targets: Sequence[Vector]) -> list[list[Fraction]]:
    """Express each target in the given basis of its span.

    Returns the coefficient matrix A with targets[j] = sum_i A[i][j] basis[i].
    Raises if some target lies outside the span.
    """
    k = len(basis)
    dim = len(basis[0]) if basis else 0
    # augmented system: columns are basis vectors, right-hand sides the targets
    aug = [
        [basis[i][row] for i in range(k)] + [t[row] for t in targets]
        for row in range(dim)
    ]
    n_rhs = len(targets)
    # forward elimination with partial (first nonzero) pivoting
    pivots = []
    r = 0
    for c in range(k):
        pivot = next((i for i in range(r, dim) if aug[i][c] != 0), None)
        if pivot is None:
            raise ValueError("basis is linearly dependent")
        aug[r], aug[pivot] = aug[pivot], aug[r]
        for i in range(dim):
            if i != r and aug[i][c] != 0:
                factor = aug[i][c] / aug[r][c]
                for j in range(c, k + n_rhs):
                    aug[i][j] -= factor * aug[r][j]
        pivots.append(c)
        r += 1
    for i in range(k, dim):
        if any(aug[i][k + j] != 0 for j in range(n_rhs)):
            raise ValueError("target outside the span of the basis")
    return [
        [aug[i][k + j] / aug[i][pivots[i]] for j in range(n_rhs)]
        for i in range(k)
    ]


def transition_scalar(
    fam_a: VectorFamily,
    idx_a: Iterable[int],
    fam_b: VectorFamily,
    idx_b: Iterable[int],
) -> Fraction:
    """The scalar c with wedge(fam_a at idx_a) = c * wedge(fam_b at idx_b).

    Both selections are read in increasing index order; they must be
    independent and span the same subspace.
    """
    sel_a = fam_a.select(idx_a)
    sel_b = fam_b.select(idx_b)
    if len(sel_a) != len(sel_b):
        raise ValueError("selections of different sizes")
    if not sel_a:
        return Fraction(1)
    if not span_equal(fam_a, idx_a, fam_b, idx_b):
        raise ValueError("selections span distinct subspaces")
    coords = coordinates_in_basis(sel_b, sel_a)
    return determinant(coords)
