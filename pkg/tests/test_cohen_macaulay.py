"""Depth, CM verdicts, minimality certificates, and ball preconditions."""
import pytest

from mincm import (CertificateInapplicable, NotAFacet, NotPure,
                   SimplicialComplex, certify_removal_non_cm,
                   check_ball_necessary, depth, depth_report,
                   depth_via_skeleta, free_facet, is_cm, is_minimal_cm,
                   is_strongly_cm, is_strongly_nonshellable, satisfies_serre,
                   top_cycle_facet)
from mincm.catalog import get
from mincm.fields import GF, QQ
from mincm.homology import betti_of_facets

from conftest import (oracle_depth, oracle_is_cm, seeded_mixed_complexes,
                      seeded_pure_complexes)

BOWTIE = SimplicialComplex.from_facets([[1, 2, 3], [3, 4, 5]])
TWO_TRIANGLES = SimplicialComplex.from_facets([[1, 2, 3], [2, 3, 4]])


# ---------------------------------------------------------------------------
# depth against the oracle

def test_depth_matches_oracle_on_knowns(rp2, dunce, octa):
    cases = [
        (rp2, QQ), (rp2, GF(2)), (rp2, GF(3)),
        (dunce, QQ), (octa, GF(2)),
        (BOWTIE, QQ), (TWO_TRIANGLES, QQ),
        (get("simplex(4)"), QQ), (get("boundary_simplex(4)"), GF(5)),
    ]
    for cx, field in cases:
        assert depth(cx, field) == oracle_depth(cx, field), cx


def test_depth_matches_oracle_on_seeded_complexes():
    fields = (QQ, GF(2))
    for i, cx in enumerate(seeded_pure_complexes(8, seed=21, n=6, d=3)):
        f = fields[i % 2]
        assert depth(cx, f) == oracle_depth(cx, f)
    for i, cx in enumerate(seeded_mixed_complexes(4, seed=9, n=6)):
        f = fields[i % 2]
        assert depth(cx, f) == oracle_depth(cx, f)


def test_depth_equals_max_cm_skeleton_index(rp2, dunce):
    for cx, field in ((rp2, GF(2)), (rp2, QQ), (dunce, QQ),
                      (BOWTIE, QQ), (TWO_TRIANGLES, GF(3))):
        assert depth(cx, field) == depth_via_skeleta(cx, field)


# ---------------------------------------------------------------------------
# CM verdicts

def test_classical_verdicts(rp2, dunce, octa, k62):
    assert is_cm(get("simplex(4)"), QQ).is_cm
    assert is_cm(get("boundary_simplex(5)"), GF(7)).is_cm
    assert is_cm(octa, QQ).is_cm and is_cm(octa, GF(2)).is_cm
    assert is_cm(k62, QQ).is_cm
    assert is_cm(dunce, QQ).is_cm
    assert not is_cm(BOWTIE, QQ).is_cm  # pinch point
    assert is_cm(TWO_TRIANGLES, QQ).is_cm


def test_projective_plane_characteristic_two(rp2):
    rep = depth_report(rp2, GF(2))
    assert not rep.is_cm
    assert rep.depth == 2
    assert rep.witness == ((), 1)  # H~_1 of the whole complex
    assert betti_of_facets(rp2.facets, GF(2))[2] == 1
    assert depth_report(rp2, GF(3)).is_cm
    assert depth_report(rp2, QQ).is_cm


def test_witness_is_a_real_homology_violation():
    rep = depth_report(BOWTIE, QQ)
    assert not rep.is_cm
    face, deg = rep.witness
    lk = BOWTIE.link(face)
    dims = betti_of_facets(lk.facets, QQ)
    assert dims[deg + 1] != 0
    assert len(face) + deg + 1 == rep.depth


def test_degenerate_complexes_are_cm():
    assert is_cm(SimplicialComplex.void(), QQ).is_cm
    assert is_cm(SimplicialComplex.irrelevant(), QQ).is_cm


def test_disconnected_zero_dimensional_is_cm():
    pts = SimplicialComplex.from_facets([[1], [2], [3]])
    assert is_cm(pts, QQ).is_cm  # points are always CM
    graph = SimplicialComplex.from_facets([[1, 2], [3, 4]])
    assert not is_cm(graph, QQ).is_cm  # disconnected 1-dim is not


# ---------------------------------------------------------------------------
# Serre conditions

def test_cm_implies_all_serre_levels(octa, dunce):
    for cx in (octa, dunce, TWO_TRIANGLES):
        for level in range(1, cx.dim + 3):
            assert satisfies_serre(cx, QQ, level)


def test_serre_two_fails_on_pinch_point():
    assert satisfies_serre(BOWTIE, QQ, 1)  # vacuous
    assert not satisfies_serre(BOWTIE, QQ, 2)


def test_serre_two_implies_pure():
    for cx in seeded_mixed_complexes(6, seed=31, n=6):
        if satisfies_serre(cx, GF(2), 2):
            assert cx.is_pure


# ---------------------------------------------------------------------------
# minimality

def test_rp2_is_minimal_cm_where_cm(rp2):
    for field in (QQ, GF(3)):
        mr = is_minimal_cm(rp2, field)
        assert mr.is_cm and mr.is_minimal
        brute = is_minimal_cm(rp2, field, use_fast_path=False)
        assert brute.is_minimal and brute.removable_facets == ()
    assert not is_minimal_cm(rp2, GF(2)).is_cm


def test_dunce_hat_fast_path_fires(dunce):
    mr = is_minimal_cm(dunce, QQ)
    assert mr.is_cm and mr.is_minimal
    assert mr.fast_path is not None
    assert mr.fast_path.fold == 1  # no boundary ridges at all
    assert mr.fast_path.max_boundary_ridges_per_facet == 0
    brute = is_minimal_cm(dunce, QQ, use_fast_path=False)
    assert brute.is_minimal and brute.fast_path is None


def test_fast_and_brute_minimality_agree_on_seeded_cm_complexes():
    checked = 0
    for cx in seeded_pure_complexes(40, seed=13, n=6, d=3):
        if not is_cm(cx, GF(2)).is_cm:
            continue
        fast = is_minimal_cm(cx, GF(2))
        brute = is_minimal_cm(cx, GF(2), use_fast_path=False)
        assert fast.is_minimal == brute.is_minimal, cx.facet_labels()
        checked += 1
    assert checked >= 10


def test_minimal_cm_is_acyclic_over_same_field():
    for cx in seeded_pure_complexes(40, seed=17, n=6, d=3):
        mr = is_minimal_cm(cx, GF(2))
        if mr.is_cm and mr.is_minimal:
            assert not any(betti_of_facets(cx.facets, GF(2)))


def test_shellable_complexes_are_not_minimal(octa, k62):
    for cx in (octa, k62, get("boundary_simplex(4)"), get("simplex(3)")):
        mr = is_minimal_cm(cx, QQ)
        assert mr.is_cm and not mr.is_minimal


def test_strongly_cm(octa, k62, rp2, dunce):
    assert is_strongly_cm(octa, QQ)
    assert is_strongly_cm(k62, QQ)
    assert is_strongly_cm(get("boundary_simplex(4)"), GF(2))
    assert not is_strongly_cm(rp2, QQ)       # minimal: nothing removable
    assert not is_strongly_cm(dunce, QQ)
    assert not is_strongly_cm(rp2, GF(2))    # not even CM


# ---------------------------------------------------------------------------
# removal certificates

def test_removal_certificate_on_dunce_hat(dunce):
    for facet in dunce.facet_labels():
        cert = certify_removal_non_cm(dunce, QQ, facet)
        assert cert.fold == 1
        assert cert.boundary_ridges_in_facet == 0
        assert cert.sigma == ()
        assert cert.h_value == -1
        assert cert.h_index == dunce.dim + 1
        # the certificate is honest: removal really is non-CM
        assert not is_cm(dunce.remove_facet(facet), QQ).is_cm


def test_removal_certificate_on_projective_plane(rp2):
    cert = certify_removal_non_cm(rp2, QQ, (1, 2, 5))
    assert cert.facet == (1, 2, 5)
    assert cert.h_value == -1
    assert not is_cm(rp2.remove_facet((1, 2, 5)), QQ).is_cm


def test_certificate_refuses_non_cm_complex(rp2):
    with pytest.raises(CertificateInapplicable):
        certify_removal_non_cm(rp2, GF(2), (1, 2, 5))


def test_certificate_refuses_when_links_not_acyclic(octa):
    # the 2-sphere has top homology, so fold-1 acyclicity fails
    with pytest.raises(CertificateInapplicable):
        certify_removal_non_cm(octa, QQ, octa.facet_labels()[0])


def test_certificate_requires_a_facet(dunce):
    with pytest.raises(NotAFacet):
        certify_removal_non_cm(dunce, QQ, (1, 2))


# ---------------------------------------------------------------------------
# top-cycle facet removal

def test_top_cycle_removal_on_sphere(octa):
    res = top_cycle_facet(octa, QQ)
    assert res is not None
    assert res.facet in octa.facet_labels()
    assert res.depth_before == res.depth_after == 3
    after = octa.remove_facet(res.facet)
    assert betti_of_facets(after.facets, QQ) == (0, 0, 0, 0)
    assert after.f_vector[:-1] == octa.f_vector[:-1]
    assert after.f_vector[-1] == octa.f_vector[-1] - 1


def test_top_cycle_removal_characteristic_dependent(rp2):
    assert top_cycle_facet(rp2, QQ) is None
    res = top_cycle_facet(rp2, GF(2))
    assert res is not None


def test_top_cycle_removal_none_when_acyclic(dunce):
    assert top_cycle_facet(dunce, QQ) is None


def test_top_cycle_removal_preserves_low_skeleton(octa):
    res = top_cycle_facet(octa, QQ)
    after = octa.remove_facet(res.facet)
    d = octa.dim + 1
    assert octa.skeleton(d - 2) == after.skeleton(d - 2)


# ---------------------------------------------------------------------------
# free facets and strong non-shellability

def test_free_facet_of_glued_triangles():
    assert free_facet(TWO_TRIANGLES) == (1, 2, 3)


def test_single_simplex_has_no_free_facet():
    assert free_facet(get("simplex(3)")) is None
    assert not is_strongly_nonshellable(get("simplex(3)"))  # e > 1 required


def test_sphere_has_no_free_facet(octa):
    assert free_facet(octa) is None
    # spheres are excluded from strong non-shellability only by intent:
    # the predicate is for complexes separately known to be balls
    assert is_strongly_nonshellable(octa)


def test_free_facet_requires_purity():
    with pytest.raises(NotPure):
        free_facet(SimplicialComplex.from_facets([[1, 2, 3], [4, 5]]))


def test_free_facet_none_on_degenerate():
    assert free_facet(SimplicialComplex.void()) is None
    assert free_facet(SimplicialComplex.irrelevant()) is None


# ---------------------------------------------------------------------------
# ball preconditions

def test_single_tetrahedron_is_a_ball():
    rep = check_ball_necessary(get("simplex(4)"), QQ)
    assert rep.ok


def test_two_tetrahedra_sharing_a_triangle_are_a_ball():
    cx = SimplicialComplex.from_facets([[1, 2, 3, 4], [2, 3, 4, 5]])
    rep = check_ball_necessary(cx, QQ)
    assert rep.ok
    assert free_facet(cx) is not None  # plainly shellable, both facets free


def test_sphere_fails_ball_check_on_boundary(octa):
    rep = check_ball_necessary(octa, QQ)
    assert not rep.ok
    assert not rep.boundary_nonempty


def test_bowtie_fails_ball_check():
    rep = check_ball_necessary(BOWTIE, QQ)
    assert not rep.ok
    assert not rep.dual_graph_connected


def test_projective_plane_fails_ball_check(rp2):
    rep = check_ball_necessary(rp2, GF(2))
    assert not rep.ok
    assert not rep.acyclic
