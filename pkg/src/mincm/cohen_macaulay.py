"""Depth, Cohen-Macaulayness, Serre conditions, and minimality certificates.

Depth is computed through the local criterion: depth is at least L exactly
when H~_{i-1}(link of T) vanishes for every face T and every i with
i + |T| < L.  Cohen-Macaulay means depth equals d (one more than the
dimension).  The void and irrelevant complexes are Cohen-Macaulay by
convention; the irrelevant complex gets there on its own since d = 0.

Minimality (no facet can be removed while staying CM) has a fast
sufficient criterion: if the complex is CM, links of all faces with fewer
than L vertices are acyclic, and every facet contains at most L-1 boundary
ridges, then every single-facet removal destroys CM-ness.  The criterion
also yields a per-facet h-vector certificate that the analyzer verifies.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .complexes import SimplicialComplex, canonicalize_masks, faces_from_facets, h_vector_from_f
from .errors import CertificateInapplicable, NotAFacet, NotPure
from .fields import FieldSpec
from .homology import betti_of_facets, is_fold_acyclic, top_cycle


def _parallel_map(fn, items, jobs):
    items = list(items)
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items))


# ---------------------------------------------------------------------------
# depth and Cohen-Macaulayness

@dataclass(frozen=True)
class CMReport:
    field: FieldSpec
    depth: int
    dimension: int
    is_cm: bool
    witness: tuple | None  # (face labels, homology degree) violating the local criterion


def depth_report(cx: SimplicialComplex, field: FieldSpec) -> CMReport:
    """Depth plus the lexicographically first witness if depth < d."""
    if cx.is_void:
        return CMReport(field, 0, cx.dim, True, None)
    d = cx.dim + 1
    best = d
    witness = None
    faces = cx.faces_by_size
    for size in range(0, d + 1):
        if size >= best:
            break
        for sigma in faces[size]:
            dims = betti_of_facets(cx.link_masks(sigma), field)
            for idx, h in enumerate(dims):
                if not h:
                    continue
                degree = idx - 1
                value = size + degree + 1
                if value < best or (value == best and witness is None):
                    best = value
                    witness = (cx.face_labels(sigma), degree)
    if best >= d:
        return CMReport(field, d, cx.dim, True, None)
    return CMReport(field, best, cx.dim, False, witness)


def depth(cx: SimplicialComplex, field: FieldSpec) -> int:
    return depth_report(cx, field).depth


def is_cm(cx: SimplicialComplex, field: FieldSpec) -> CMReport:
    return depth_report(cx, field)


def satisfies_serre(cx: SimplicialComplex, field: FieldSpec, level: int) -> bool:
    """Serre condition (S_level): level 1 is vacuous; CM is (S_d) and up."""
    if level <= 1:
        return True
    if cx.is_void:
        return True
    d = cx.dim + 1
    faces = cx.faces_by_size
    for size in range(0, d + 1):
        for sigma in faces[size]:
            dims = betti_of_facets(cx.link_masks(sigma), field)
            for idx, h in enumerate(dims):
                if not h:
                    continue
                i = idx  # homology degree idx-1 corresponds to i = degree+1
                if i < level and i + size < d:
                    return False
    return True


def depth_via_skeleta(cx: SimplicialComplex, field: FieldSpec) -> int:
    """Depth as the largest i whose (i-1)-skeleton is Cohen-Macaulay."""
    if cx.is_void:
        return 0
    best = 0
    for i in range(0, cx.dim + 2):
        skel = cx.skeleton(i - 1)
        if is_cm(skel, field).is_cm:
            best = i
    return best


# ---------------------------------------------------------------------------
# removal certificates (fast minimality criterion)

@dataclass(frozen=True)
class RemovalCertificate:
    """Witness that removing `facet` from a CM complex destroys CM-ness.

    With j boundary ridges inside the facet and fold = j + 1, the union
    sigma of the opposite vertices satisfies
    h_{d-j}(link of sigma in the complex minus the facet) = -1,
    which a CM complex of that dimension could never produce.
    """

    facet: tuple
    boundary_ridges_in_facet: int
    fold: int
    sigma: tuple
    h_index: int
    h_value: int


def certify_removal_non_cm(cx: SimplicialComplex, field: FieldSpec, facet) -> RemovalCertificate:
    """Certificate that cx minus facet is not CM; raises when hypotheses fail."""
    fmask = cx.face_mask(facet) if not isinstance(facet, int) else facet
    if fmask not in cx.facets:
        raise NotAFacet(f"{tuple(facet)} is not a facet")
    d = cx.dim + 1
    ridges_in = [r for r in cx.boundary_ridge_masks() if r & fmask == r]
    j = len(ridges_in)
    fold = j + 1
    report = depth_report(cx, field)
    if not report.is_cm:
        raise CertificateInapplicable("complex is not Cohen-Macaulay")
    if not is_fold_acyclic(cx, field, fold):
        raise CertificateInapplicable(
            f"links of faces with fewer than {fold} vertices are not all acyclic")
    sigma = 0
    for r in ridges_in:
        sigma |= fmask & ~r
    assert sigma.bit_count() == j
    remaining = tuple(f for f in cx.facets if f != fmask)
    link_after = canonicalize_masks(
        [f & ~sigma for f in remaining if f & sigma == sigma])[0]
    faces = faces_from_facets(link_after)
    fvec = tuple(len(level) for level in faces)
    hvec = h_vector_from_f(fvec, d - j)
    assert hvec[d - j] == -1, "certificate arithmetic failed"
    return RemovalCertificate(
        facet=cx.face_labels(fmask),
        boundary_ridges_in_facet=j,
        fold=fold,
        sigma=cx.face_labels(sigma),
        h_index=d - j,
        h_value=hvec[d - j],
    )


# ---------------------------------------------------------------------------
# minimality

@dataclass(frozen=True)
class FastPathCertificate:
    fold: int
    max_boundary_ridges_per_facet: int


@dataclass(frozen=True)
class MinimalityReport:
    field: FieldSpec
    is_cm: bool
    is_minimal: bool
    removable_facets: tuple  # facets whose removal stays CM
    fast_path: FastPathCertificate | None


def is_minimal_cm(cx: SimplicialComplex, field: FieldSpec,
                  use_fast_path: bool = True, jobs: int | None = None) -> MinimalityReport:
    """Minimal CM: Cohen-Macaulay, and no single facet removal stays CM."""
    report = depth_report(cx, field)
    if not report.is_cm:
        return MinimalityReport(field, False, False, (), None)
    if not cx.facets:
        return MinimalityReport(field, True, True, (), None)
    if use_fast_path:
        per_facet = cx.ridges_per_facet()
        jmax = max(per_facet.values())
        fold = jmax + 1
        if is_fold_acyclic(cx, field, fold):
            return MinimalityReport(field, True, True, (),
                                    FastPathCertificate(fold, jmax))

    def removal_ok(fmask):
        return depth_report(cx.remove_facet_mask(fmask), field).is_cm

    flags = _parallel_map(removal_ok, cx.facets, jobs)
    removable = tuple(cx.face_labels(f) for f, ok in zip(cx.facets, flags) if ok)
    return MinimalityReport(field, True, not removable, removable, None)


def is_strongly_cm(cx: SimplicialComplex, field: FieldSpec, jobs: int | None = None) -> bool:
    """CM and still CM after removing any one facet."""
    if not depth_report(cx, field).is_cm:
        return False
    mr = is_minimal_cm(cx, field, use_fast_path=False, jobs=jobs)
    return len(mr.removable_facets) == len(cx.facets)


# ---------------------------------------------------------------------------
# top-cycle facet removal

@dataclass(frozen=True)
class TopCycleRemoval:
    facet: tuple
    depth_before: int
    depth_after: int


def top_cycle_facet(cx: SimplicialComplex, field: FieldSpec):
    """When top homology is nonzero, remove a facet from a top cycle's support.

    The removal preserves depth, lowers the top face count by one, lowers
    top homology by one, and leaves all lower homology and face counts
    unchanged; all four conclusions are verified before returning.
    Returns None when top homology vanishes.
    """
    cyc = top_cycle(cx, field)
    if cyc is None:
        return None
    facet_labels = cyc.support[0]
    fmask = cx.face_mask(facet_labels)
    before_b = betti_of_facets(cx.facets, field)
    before_f = cx.f_vector
    depth_before = depth(cx, field)
    after = cx.remove_facet_mask(fmask)
    after_b = betti_of_facets(after.facets, field)
    after_f = after.f_vector
    depth_after = depth(after, field)
    assert depth_after == depth_before
    assert after.dim == cx.dim
    assert after_f[:-1] == before_f[:-1] and after_f[-1] == before_f[-1] - 1
    assert after_b[:-1] == before_b[:-1] and after_b[-1] == before_b[-1] - 1
    return TopCycleRemoval(facet_labels, depth_before, depth_after)


# ---------------------------------------------------------------------------
# free facets and ball checks

def free_facet(cx: SimplicialComplex):
    """First facet whose boundary contact is a proper, pure ridge-ball.

    A facet F is free when the boundary ridges inside it number between 1
    and d-1 and every maximal face of F lying in the boundary complex is a
    ridge.  Removing a free facet from a ball leaves a ball, so a ball
    with no free facet cannot be shellable.  Returns facet labels or None.
    """
    if not cx.is_pure:
        raise NotPure("free facets are defined for pure complexes")
    if cx.is_void or cx.dim < 0:
        return None
    d = cx.dim + 1
    br = cx.boundary_ridge_masks()
    for f in cx.facets:
        inside = [r for r in br if r & f == r]
        if not (1 <= len(inside) <= d - 1):
            continue
        contact = canonicalize_masks([f & r for r in br])[0]
        if all(c.bit_count() == d - 1 for c in contact):
            return cx.face_labels(f)
    return None


def is_strongly_nonshellable(cx: SimplicialComplex) -> bool:
    """Pure with more than one facet and no free facet.

    Intended for complexes asserted (or separately verified) to be balls;
    for a ball this obstructs every possible shelling order.
    """
    return cx.is_pure and len(cx.facets) > 1 and free_facet(cx) is None


@dataclass(frozen=True)
class BallReport:
    """Necessary conditions for being a ball; cannot certify ball-ness."""

    pure: bool
    acyclic: bool
    ridges_in_at_most_two_facets: bool
    dual_graph_connected: bool
    boundary_nonempty: bool
    boundary_is_homology_sphere: bool

    @property
    def ok(self) -> bool:
        return all((self.pure, self.acyclic, self.ridges_in_at_most_two_facets,
                    self.dual_graph_connected, self.boundary_nonempty,
                    self.boundary_is_homology_sphere))


def check_ball_necessary(cx: SimplicialComplex, field: FieldSpec) -> BallReport:
    pure = cx.is_pure
    acyclic = not any(betti_of_facets(cx.facets, field))
    ridge_ok = all(c <= 2 for c in cx._ridge_incidence.values())
    connected = cx.dual_graph_connected()
    boundary_nonempty = False
    sphere = False
    if pure and not cx.is_void and cx.dim >= 0:
        bmasks = cx.boundary_ridge_masks()
        boundary_nonempty = bool(bmasks)
        if boundary_nonempty:
            dims = betti_of_facets(canonicalize_masks(bmasks)[0], field)
            d = cx.dim + 1
            want = tuple(1 if i - 1 == d - 2 else 0 for i in range(len(dims)))
            sphere = dims == want
    return BallReport(pure, acyclic, ridge_ok, connected, boundary_nonempty, sphere)
