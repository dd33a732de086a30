"""Shelling moves, shellability certificates, and minimal-CM reduction."""
import pytest

from mincm import (MalformedInput, NotAFacet, NotCohenMacaulay, NotPure,
                   ShellingCertificate, SimplicialComplex, is_shellable,
                   is_shelling_move, reduce_to_minimal, shelled_over)
from mincm.catalog import get
from mincm.fields import GF, QQ

from conftest import seeded_pure_complexes

BOWTIE = SimplicialComplex.from_facets([[1, 2, 3], [3, 4, 5]])
TWO_TRIANGLES = SimplicialComplex.from_facets([[1, 2, 3], [2, 3, 4]])


# ---------------------------------------------------------------------------
# single moves

def test_first_facet_into_void_is_a_move():
    single = SimplicialComplex.from_facets([[1, 2, 3]])
    assert is_shelling_move(single, [1, 2, 3])


def test_ridge_contact_is_a_move():
    assert is_shelling_move(TWO_TRIANGLES, [2, 3, 4])
    assert is_shelling_move(TWO_TRIANGLES, [1, 2, 3])


def test_vertex_contact_is_not_a_move():
    assert not is_shelling_move(BOWTIE, [1, 2, 3])
    assert not is_shelling_move(BOWTIE, [3, 4, 5])


def test_move_accepts_mask_input():
    mask = TWO_TRIANGLES.face_mask([2, 3, 4])
    assert is_shelling_move(TWO_TRIANGLES, mask)


def test_move_rejects_non_facet(octa):
    with pytest.raises(NotAFacet):
        is_shelling_move(octa, [1, 2])  # a face, but not a facet


def test_move_on_octahedron_facets(octa):
    # removing any facet of a simplicial sphere leaves a disc it re-enters
    for f in octa.facet_labels():
        assert is_shelling_move(octa, f)


# ---------------------------------------------------------------------------
# shellability

def test_void_complex_is_trivially_shellable():
    cert = is_shellable(SimplicialComplex.void())
    assert cert is not None and cert.moves == ()
    assert cert.is_valid()


def test_octahedron_is_shellable(octa):
    cert = is_shellable(octa)
    assert cert is not None
    assert len(cert.moves) == len(octa.facets)
    assert cert.base.is_void
    assert cert.replay() == octa


def test_skeleton_complex_is_shellable(k62):
    cert = is_shellable(k62)
    assert cert is not None
    assert len(cert.moves) == len(k62.facets)
    assert cert.replay() == k62


def test_disconnected_pure_complex_is_not_shellable():
    assert is_shellable(BOWTIE) is None


def test_projective_plane_is_not_shellable(rp2):
    # shellable complexes are CM over every field; this one fails in char 2
    assert is_shellable(rp2) is None


def test_shellable_requires_pure_input():
    mixed = SimplicialComplex.from_facets([[1, 2, 3], [4, 5]])
    with pytest.raises(NotPure):
        is_shellable(mixed)


def test_seeded_shellable_complexes_replay():
    for cx in seeded_pure_complexes(6, seed=5, n=6, d=3):
        cert = is_shellable(cx)
        if cert is not None:
            assert cert.replay() == cx
            assert cert.is_valid()


# ---------------------------------------------------------------------------
# shelled_over

def test_shelled_over_self_is_empty(octa):
    cert = shelled_over(octa, octa)
    assert cert is not None and cert.moves == ()
    assert cert.base == octa and cert.target == octa


def test_skeleton_is_shelled_over_projective_plane(rp2, k62):
    cert = shelled_over(k62, rp2)
    assert cert is not None
    assert len(cert.moves) == len(k62.facets) - len(rp2.facets) == 10
    assert cert.base == rp2
    assert cert.replay() == k62


def test_shelled_over_requires_gamma_facets(octa):
    gamma = SimplicialComplex.from_facets([[1, 2]], universe=octa.labels)
    with pytest.raises(NotAFacet):
        shelled_over(octa, gamma)  # [1,2] is a face of octa, not a facet


def test_shelled_over_rejects_foreign_vertices(octa):
    gamma = SimplicialComplex.from_facets([["x", "y", "z"]])
    with pytest.raises(NotAFacet):
        shelled_over(octa, gamma)


def test_shelled_over_unreachable_returns_none():
    gamma = SimplicialComplex.from_facets([[1, 2, 3]], universe=BOWTIE.labels)
    assert shelled_over(BOWTIE, gamma) is None


# ---------------------------------------------------------------------------
# certificates as documents

def test_certificate_document_round_trip(octa):
    cert = is_shellable(octa)
    doc = cert.to_doc()
    back = ShellingCertificate.from_doc(doc)
    assert back.is_valid()
    assert back.replay() == octa
    assert back.to_doc() == doc


def test_certificate_detects_truncated_moves(octa):
    doc = is_shellable(octa).to_doc()
    doc["moves"] = doc["moves"][:-1]
    assert not ShellingCertificate.from_doc(doc).is_valid()


def test_certificate_detects_junk_move(octa):
    doc = is_shellable(octa).to_doc()
    doc["moves"] = doc["moves"][:-1] + [["no", "such", "face"]]
    assert not ShellingCertificate.from_doc(doc).is_valid()


def test_certificate_missing_field():
    with pytest.raises(MalformedInput):
        ShellingCertificate.from_doc({"vertices": [1, 2, 3]})


def test_replay_rejects_absorbed_move():
    base = SimplicialComplex.from_facets([[1, 2, 3]])
    cert = ShellingCertificate(base, ((1, 2),), base)
    with pytest.raises(MalformedInput):
        cert.replay()
    assert not cert.is_valid()


def test_replay_rejects_non_move():
    base = SimplicialComplex.from_facets([[1, 2, 3]], universe=[1, 2, 3, 4, 5])
    cert = ShellingCertificate(base, ((3, 4, 5),), BOWTIE)
    with pytest.raises(MalformedInput):
        cert.replay()
    assert not cert.is_valid()


def test_replay_rejects_wrong_target(octa):
    base = SimplicialComplex.from_facets([[1, 2, 3]], universe=[1, 2, 3, 4])
    cert = ShellingCertificate(base, ((2, 3, 4),), octa)
    with pytest.raises(MalformedInput):
        cert.replay()
    assert not cert.is_valid()


# ---------------------------------------------------------------------------
# reduction to a minimal Cohen-Macaulay complex

def test_reduce_requires_cm_start(rp2):
    with pytest.raises(NotCohenMacaulay):
        reduce_to_minimal(rp2, GF(2))
    with pytest.raises(NotCohenMacaulay):
        reduce_to_minimal(BOWTIE, QQ)


def test_sphere_reduces_to_void(octa):
    minimal, cert = reduce_to_minimal(octa, QQ)
    assert minimal.is_void
    assert len(cert.moves) == len(octa.facets)
    assert cert.base.is_void
    assert cert.replay() == octa
    assert cert.is_valid()


def test_simplex_reduces_to_void():
    simplex = get("simplex(3)")
    minimal, cert = reduce_to_minimal(simplex, QQ)
    assert minimal.is_void
    assert len(cert.moves) == 1


def test_minimal_complex_reduces_to_itself(rp2):
    # the projective plane is minimal CM wherever it is CM at all
    minimal, cert = reduce_to_minimal(rp2, GF(3))
    assert minimal == rp2
    assert cert.moves == ()
    assert cert.replay() == rp2


def test_dunce_hat_is_already_minimal(dunce):
    minimal, cert = reduce_to_minimal(dunce, QQ)
    assert minimal == dunce
    assert cert.moves == ()


def test_reduce_jobs_value_invariance(octa):
    a = reduce_to_minimal(octa, QQ, jobs=None)
    b = reduce_to_minimal(octa, QQ, jobs=2)
    assert a[0] == b[0]
    assert a[1].moves == b[1].moves


def test_reduction_moves_replay_one_by_one(k62):
    minimal, cert = reduce_to_minimal(k62, GF(2))
    cur = cert.base
    for mv in cert.moves:
        cur = cur.with_facet(mv)
        assert is_shelling_move(cur, mv)
    assert cur == k62
