"""Shared oracles and generators for the test suite.

The homology oracle is deliberately independent of the package's linear
algebra: boundary matrices are rebuilt from facet labels with plain
itertools, and ranks come from sympy's integer Smith normal form (rank
over Q = nonzero invariant factors; over GF(p) = factors not divisible
by p).  Depth is then re-derived from the local criterion on top of that
oracle, so the package's depth/CM verdicts are checked end to end against
an alien computation path.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form

from mincm import SimplicialComplex
from mincm.fields import FieldSpec


# ---------------------------------------------------------------------------
# independent homology oracle (sympy Smith normal form)

def _oracle_faces(facet_sets):
    """All faces (as frozensets, empty face included), grouped by size."""
    if not facet_sets:
        return []
    top = max(len(f) for f in facet_sets)
    levels = [set() for _ in range(top + 1)]
    levels[0].add(frozenset())
    for f in facet_sets:
        vs = sorted(f)
        for k in range(1, len(vs) + 1):
            for combo in itertools.combinations(vs, k):
                levels[k].add(frozenset(combo))
    return [sorted(level, key=sorted) for level in levels]


def _oracle_boundary(small, big):
    """Integer boundary matrix from size-s faces to size-(s-1) faces."""
    row_of = {f: i for i, f in enumerate(small)}
    m = sympy.zeros(len(small), len(big))
    for j, face in enumerate(big):
        for idx, v in enumerate(sorted(face)):
            m[row_of[face - {v}], j] = (-1) ** idx
    return m


def _snf_rank(matrix, p):
    """Rank over Q (p None) or GF(p), via the Smith normal form over Z."""
    if matrix.rows == 0 or matrix.cols == 0:
        return 0
    snf = smith_normal_form(matrix)
    rank = 0
    for i in range(min(snf.rows, snf.cols)):
        d = snf[i, i]
        if d == 0:
            continue
        if p is None or d % p != 0:
            rank += 1
    return rank


def oracle_betti_from_facets(facet_sets, field: FieldSpec):
    """Reduced homology dims, degree -1 upward, or () for no faces."""
    levels = _oracle_faces([set(f) for f in facet_sets])
    if not levels:
        return ()
    counts = [len(level) for level in levels]
    top = len(levels) - 1
    ranks = [0] * (top + 2)
    for s in range(1, top + 1):
        ranks[s] = _snf_rank(_oracle_boundary(levels[s - 1], levels[s]), field.p)
    return tuple(counts[s] - ranks[s] - ranks[s + 1] for s in range(top + 1))


def oracle_betti(cx: SimplicialComplex, field: FieldSpec):
    return oracle_betti_from_facets(cx.facet_labels(), field)


def _oracle_link_facets(facet_sets, sigma):
    """Facets of the link of sigma, as label sets (not minimized)."""
    out = []
    for f in facet_sets:
        if sigma <= f:
            out.append(f - sigma)
    # drop non-maximal ones so degenerate inputs stay honest
    keep = []
    for g in out:
        if not any(g < h for h in out):
            keep.append(g)
    return keep


def oracle_depth(cx: SimplicialComplex, field: FieldSpec) -> int:
    """Depth via the local criterion, with all homology from the oracle."""
    if cx.is_void:
        return 0
    facet_sets = [set(f) for f in cx.facet_labels()]
    d = cx.dim + 1
    best = d
    for level in _oracle_faces(facet_sets):
        for sigma in level:
            if len(sigma) >= best:
                continue
            dims = oracle_betti_from_facets(
                _oracle_link_facets(facet_sets, set(sigma)), field)
            for idx, h in enumerate(dims):
                if h:
                    best = min(best, len(sigma) + (idx - 1) + 1)
    return best


def oracle_is_cm(cx: SimplicialComplex, field: FieldSpec) -> bool:
    return cx.is_void or oracle_depth(cx, field) == cx.dim + 1


# ---------------------------------------------------------------------------
# seeded generators

def seeded_pure_complexes(count, seed, n=7, d=3, density=0.4,
                          skip_void=True):
    """Deterministic stream of pure complexes (facets are d-subsets)."""
    from mincm.catalog import random_complex
    out = []
    i = 0
    while len(out) < count:
        cx = random_complex(n, d, density, f"suite:{seed}:{i}")
        i += 1
        if i > 50 * count:
            raise AssertionError("generator failed to fill the quota")
        if skip_void and cx.is_void:
            continue
        out.append(cx)
    return out


def seeded_mixed_complexes(count, seed, n=7, max_size=4):
    """Deterministic stream of generally non-pure complexes."""
    out = []
    rng = random.Random(f"mixed:{seed}")
    while len(out) < count:
        facets = []
        for size in range(2, max_size + 1):
            for combo in itertools.combinations(range(1, n + 1), size):
                if rng.random() < 0.5 / size**2:
                    facets.append(combo)
        if not facets:
            continue
        out.append(SimplicialComplex.from_facets(facets))
    return out


@pytest.fixture(scope="session")
def rp2():
    from mincm.catalog import get
    return get("rp2_6")


@pytest.fixture(scope="session")
def dunce():
    from mincm.catalog import get
    return get("dunce_hat_8")


@pytest.fixture(scope="session")
def octa():
    from mincm.catalog import get
    return get("octahedron")


@pytest.fixture(scope="session")
def k62():
    from mincm.catalog import get
    return get("k_6_2")
