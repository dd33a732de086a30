"""Reduced simplicial homology over Q or GF(p), by exact rank computation.

The chain complex includes the empty face as the unique (-1)-simplex, so
the degree-0 boundary matrix is the augmentation map and reduced homology
falls out of plain rank bookkeeping:

    dim H~_{s-1} = #(s-faces) - rank(d_s) - rank(d_{s+1})

Sign convention: the boundary of a face drops its j-th smallest vertex
with sign (-1)^j.  Conventions for degenerate complexes: the void complex
has no homology at all; the irrelevant complex {<empty>} has H~_{-1} = k.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .complexes import SimplicialComplex, bits, canonicalize_masks, faces_from_facets
from .errors import MalformedInput
from .fields import FieldSpec


# ---------------------------------------------------------------------------
# exact sparse elimination

def _axpy(dst: dict, factor, src: dict, p):
    """dst -= factor * src, in place, dropping zeros."""
    if p is None:
        for k, v in src.items():
            nv = dst.get(k, 0) - factor * v
            if nv:
                dst[k] = nv
            else:
                dst.pop(k, None)
    else:
        for k, v in src.items():
            nv = (dst.get(k, 0) - factor * v) % p
            if nv:
                dst[k] = nv
            else:
                dst.pop(k, None)


def reduce_columns(columns, field: FieldSpec, want_kernel: bool = False):
    """Column echelon reduction over the field.

    `columns` is a sequence of sparse columns (dict row -> int entry).
    Returns (rank, kernel) where kernel is None, or a combination
    dict {column index -> coefficient} for the first column (in the given
    order) that reduces to zero.
    """
    p = field.p
    pivots: dict[int, tuple[dict, dict | None]] = {}
    rank = 0
    for j, raw in enumerate(columns):
        if p is None:
            col = {r: Fraction(v) for r, v in raw.items() if v}
        else:
            col = {r: v % p for r, v in raw.items() if v % p}
        combo = {j: Fraction(1) if p is None else 1} if want_kernel else None
        while col:
            r = min(col)
            if r in pivots:
                pcol, pcombo = pivots[r]
                f = col[r]
                _axpy(col, f, pcol, p)
                if combo is not None:
                    _axpy(combo, f, pcombo, p)
            else:
                v = col[r]
                inv = (Fraction(1) / v) if p is None else pow(v, -1, p)
                if p is None:
                    col = {k: val * inv for k, val in col.items()}
                    if combo is not None:
                        combo = {k: val * inv for k, val in combo.items()}
                else:
                    col = {k: (val * inv) % p for k, val in col.items()}
                    if combo is not None:
                        combo = {k: (val * inv) % p for k, val in combo.items()}
                pivots[r] = (col, combo)
                rank += 1
                break
        else:
            if want_kernel:
                return rank, combo
    return rank, None


def matrix_rank(columns, field: FieldSpec) -> int:
    rank, _ = reduce_columns(columns, field)
    return rank


# ---------------------------------------------------------------------------
# boundary matrices

@dataclass(frozen=True)
class BoundaryMatrix:
    """Sparse boundary map from degree-`degree` faces to one degree down.

    Rows and columns are canonical face masks; entries are +-1 (reduced
    mod p when a prime field is attached).
    """

    degree: int
    rows: tuple[int, ...]
    cols: tuple[int, ...]
    entries: dict  # (row index, col index) -> coefficient

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.cols))

    def to_dense(self) -> list[list[int]]:
        m = [[0] * len(self.cols) for _ in self.rows]
        for (i, j), v in self.entries.items():
            m[i][j] = v
        return m

    def columns(self) -> list[dict]:
        out = [dict() for _ in self.cols]
        for (i, j), v in self.entries.items():
            out[j][i] = v
        return out


def _boundary_columns(faces_small: list[int], faces_big: list[int]) -> list[dict]:
    """Columns of the boundary map from faces_big (size s) to faces_small (size s-1)."""
    row_of = {m: i for i, m in enumerate(faces_small)}
    cols = []
    for m in faces_big:
        col = {}
        for j, v in enumerate(bits(m)):
            col[row_of[m & ~(1 << v)]] = -1 if j % 2 else 1
        cols.append(col)
    return cols


def boundary_matrices(cx: SimplicialComplex, field: FieldSpec | None = None) -> list[BoundaryMatrix]:
    """Boundary maps for degrees 0..dim (degree 0 is the augmentation)."""
    out = []
    faces = cx.faces_by_size
    for s in range(1, len(faces)):
        cols = _boundary_columns(faces[s - 1], faces[s])
        entries = {}
        for j, col in enumerate(cols):
            for i, v in col.items():
                if field is not None and field.p is not None:
                    v %= field.p
                entries[(i, j)] = v
        out.append(BoundaryMatrix(s - 1, tuple(faces[s - 1]), tuple(faces[s]), entries))
    return out


# ---------------------------------------------------------------------------
# reduced homology

@lru_cache(maxsize=None)
def betti_of_facets(facets: tuple[int, ...], field: FieldSpec) -> tuple[int, ...]:
    """Reduced homology dimensions, degrees -1..dim, for a facet antichain."""
    faces = faces_from_facets(facets)
    if not faces:
        return ()
    d = len(faces) - 1  # max cardinality
    counts = [len(level) for level in faces]
    ranks = [0] * (d + 2)
    for s in range(1, d + 1):
        cols = _boundary_columns(faces[s - 1], faces[s])
        ranks[s] = matrix_rank(cols, field)
        assert ranks[s] <= min(counts[s], counts[s - 1])
    dims = tuple(counts[s] - ranks[s] - ranks[s + 1] for s in range(d + 1))
    assert all(x >= 0 for x in dims)
    # Euler-Poincare bookkeeping: alternating sums must agree
    chi_faces = sum((-1) ** (s - 1) * counts[s] for s in range(d + 1))
    chi_homology = sum((-1) ** (s - 1) * dims[s] for s in range(d + 1))
    assert chi_faces == chi_homology
    return dims


@dataclass(frozen=True)
class BettiVector:
    """Reduced homology dimensions over `field`, indexed from degree -1."""

    field: FieldSpec
    dims: tuple[int, ...]

    def degree(self, k: int) -> int:
        """dim H~_k; zero outside the stored range."""
        i = k + 1
        if 0 <= i < len(self.dims):
            return self.dims[i]
        return 0

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(range(-1, len(self.dims) - 1))

    @property
    def is_zero(self) -> bool:
        return not any(self.dims)

    def top(self) -> int:
        """Dimension of the top-degree reduced homology group."""
        return self.dims[-1] if self.dims else 0


def reduced_homology(cx: SimplicialComplex, field: FieldSpec) -> BettiVector:
    return BettiVector(field, betti_of_facets(cx.facets, field))


def is_acyclic(cx: SimplicialComplex, field: FieldSpec) -> bool:
    return not any(betti_of_facets(cx.facets, field))


def link_betti(cx: SimplicialComplex, face_mask: int, field: FieldSpec) -> tuple[int, ...]:
    """Reduced homology of the link of a face, via shared global cache."""
    return betti_of_facets(cx.link_masks(face_mask), field)


def is_fold_acyclic(cx: SimplicialComplex, field: FieldSpec, fold: int) -> bool:
    """True when every face with fewer than `fold` vertices has an acyclic link.

    fold=1 is plain acyclicity (the empty face's link is the complex).
    """
    if fold < 1:
        raise MalformedInput("fold must be at least 1")
    if cx.is_void:
        return True
    top = min(fold - 1, cx.dim + 1)
    for size in range(0, top + 1):
        for sigma in cx.faces_by_size[size]:
            if any(betti_of_facets(cx.link_masks(sigma), field)):
                return False
    return True


# ---------------------------------------------------------------------------
# top-dimensional cycles

@dataclass(frozen=True)
class Cycle:
    """A nonzero cycle in top degree: coefficients on top-dimensional faces."""

    degree: int
    field: FieldSpec
    coefficients: tuple  # ((face labels, coefficient), ...) in canonical order

    @property
    def support(self) -> tuple:
        return tuple(face for face, _ in self.coefficients)


def top_cycle(cx: SimplicialComplex, field: FieldSpec):
    """A nonzero kernel element of the top boundary map, or None.

    Deterministic: faces are scanned in canonical order and the first
    column that closes a cycle is returned.
    """
    if cx.is_void or cx.dim < 0:
        return None
    faces = cx.faces_by_size
    d = cx.dim + 1
    cols = _boundary_columns(faces[d - 1], faces[d])
    _, kernel = reduce_columns(cols, field, want_kernel=True)
    if kernel is None:
        return None
    # safety: apply the boundary and confirm the combination really cancels
    residue: dict[int, object] = {}
    for j, coeff in kernel.items():
        _axpy(residue, -coeff if field.p is None else (-coeff) % field.p, cols[j], field.p)
    assert not residue
    items = sorted(kernel.items())
    coeffs = tuple((cx.face_labels(faces[d][j]), c) for j, c in items)
    return Cycle(d - 1, field, coeffs)
