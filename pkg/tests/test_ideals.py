"""Squarefree ideals, dual ideals, Betti tables, and linearity tests.

The Betti oracle here is independent of the package's Hochster-formula
path: beta_{i,sigma}(I) is the reduced homology of the upper Koszul
complex at sigma, whose facets are the complements sigma - g of the
generators g contained in sigma, summed over all squarefree multidegrees
sigma of each size.  Homology ranks come from the sympy Smith-form oracle
in conftest.
"""
import itertools

import pytest

from mincm import (DegenerateIdeal, FaceNotInComplex, MalformedInput,
                   SimplicialComplex, SquarefreeIdeal, betti_table,
                   colon_is_degree_one, dual_ideal, has_linear_quotients,
                   has_linear_resolution, is_cm, is_shellable,
                   is_shelling_move, sr_complex)
from mincm.catalog import get
from mincm.fields import GF, QQ

from conftest import oracle_betti_from_facets, seeded_pure_complexes

BOWTIE = SimplicialComplex.from_facets([[1, 2, 3], [3, 4, 5]])
TWO_TRIANGLES = SimplicialComplex.from_facets([[1, 2, 3], [2, 3, 4]])


def koszul_betti_oracle(ideal, field):
    """Graded Betti numbers via upper Koszul complexes, as an {(i,j): v} dict."""
    gens = [set(g) for g in ideal.generator_supports()]
    cells = {}
    for j in range(1, ideal.n + 1):
        for sigma in itertools.combinations(ideal.labels, j):
            sset = set(sigma)
            facets = [tuple(sset - g) for g in gens if g <= sset]
            if not facets:
                continue
            dims = oracle_betti_from_facets(facets, field)
            for i, h in enumerate(dims):
                if h:
                    cells[(i, j)] = cells.get((i, j), 0) + h
    return cells


# ---------------------------------------------------------------------------
# construction and normal form

def test_generators_are_minimalized():
    ideal = SquarefreeIdeal.from_supports([[1, 2], [1, 2, 3], [2, 1]])
    assert ideal.generator_supports() == ((1, 2),)
    assert ideal.degrees == (2,)


def test_zero_and_unit_ideals():
    zero = SquarefreeIdeal.from_supports([], universe=[1, 2, 3])
    assert zero.is_zero and not zero.is_unit
    unit = SquarefreeIdeal.from_supports([[]], universe=[1, 2, 3])
    assert unit.is_unit and not unit.is_zero
    assert unit.degrees == (0,)
    # the empty support swallows every other generator
    swallowed = SquarefreeIdeal.from_supports([[], [1, 2]], universe=[1, 2])
    assert swallowed.generators == (0,)


def test_construction_errors():
    with pytest.raises(MalformedInput):
        SquarefreeIdeal.from_supports([[1, 1, 2]])  # repeated variable
    with pytest.raises(MalformedInput):
        SquarefreeIdeal.from_supports([[1, 9]], universe=[1, 2])
    with pytest.raises(MalformedInput):
        SquarefreeIdeal(2, [0b11], labels=("x",))  # labels not a bijection
    with pytest.raises(MalformedInput):
        SquarefreeIdeal(-1, [])
    with pytest.raises(MalformedInput):
        SquarefreeIdeal(1, [0b10])  # generator outside the universe


def test_support_mask_rejects_unknown_variable():
    ideal = SquarefreeIdeal.from_supports([[1, 2]])
    with pytest.raises(FaceNotInComplex):
        ideal.support_mask([1, 7])


def test_ideal_document_round_trip():
    ideal = SquarefreeIdeal.from_supports([[1, 3], [2, 3, 4]], universe=[1, 2, 3, 4, 5])
    doc = ideal.to_doc()
    assert doc == {"variables": [1, 2, 3, 4, 5],
                   "generators": [[1, 3], [2, 3, 4]]}
    assert SquarefreeIdeal.from_doc(doc) == ideal
    with pytest.raises(MalformedInput):
        SquarefreeIdeal.from_doc({"variables": [1, 2]})


def test_repr_is_informative():
    assert "x_1*x_2" in repr(SquarefreeIdeal.from_supports([[1, 2]]))
    assert repr(SquarefreeIdeal.from_supports([], universe=[1])) == "SquarefreeIdeal(0)"
    assert repr(SquarefreeIdeal.from_supports([[]], universe=[1])) == "SquarefreeIdeal(1)"


# ---------------------------------------------------------------------------
# dual ideal and Stanley-Reisner inversion

def test_dual_ideal_generators_complement_facets(rp2):
    ideal = dual_ideal(rp2)
    assert ideal.n == 6
    assert ideal.degrees == (3,) * len(rp2.facets)
    facet_sets = {frozenset(f) for f in rp2.facet_labels()}
    for sup in ideal.generator_supports():
        assert frozenset(set(rp2.labels) - set(sup)) in facet_sets


def test_dual_ideal_degenerate_ends():
    assert dual_ideal(SimplicialComplex.void()).is_zero
    assert dual_ideal(get("simplex(3)")).is_unit


def test_dual_ideal_universe_extension():
    ideal = dual_ideal(TWO_TRIANGLES, n=5)
    assert ideal.n == 5
    # complements now pick up the fresh fifth vertex
    assert ideal.degrees == (2, 2)
    assert all(5 in sup for sup in ideal.generator_supports())


def test_sr_complex_inverts_dual_ideal(rp2, octa):
    for cx in (rp2, octa, BOWTIE, TWO_TRIANGLES):
        assert sr_complex(dual_ideal(cx)) == cx.alexander_dual()
    for cx in seeded_pure_complexes(5, seed=31, n=6, d=3):
        assert sr_complex(dual_ideal(cx)) == cx.alexander_dual()


def test_sr_complex_of_degenerate_ideals():
    unit = SquarefreeIdeal.from_supports([[]], universe=[1, 2])
    assert sr_complex(unit).is_void
    zero = SquarefreeIdeal.from_supports([], universe=[1, 2])
    assert sr_complex(zero).facet_labels() == ((1, 2),)


def test_enumeration_limit_guard():
    wide = SquarefreeIdeal.from_supports([[i] for i in range(17)])
    with pytest.raises(MalformedInput):
        sr_complex(wide)
    with pytest.raises(MalformedInput):
        betti_table(wide, QQ)


# ---------------------------------------------------------------------------
# Betti tables against the Koszul oracle

def test_betti_table_small_known():
    # I = (xy, yz): 0 -> S(-3) -> S(-2)^2 -> I
    ideal = SquarefreeIdeal.from_supports([["x", "y"], ["y", "z"]])
    table = betti_table(ideal, QQ)
    assert table.as_dict() == {(0, 2): 2, (1, 3): 1}
    assert table.get(0, 2) == 2 and table.get(5, 5) == 0
    assert table.max_i == 1
    assert table.rows() == [(0, 2, 2), (1, 3, 1)]


def test_betti_table_matches_koszul_oracle(rp2):
    cases = [
        (dual_ideal(rp2), GF(2)),
        (dual_ideal(rp2), QQ),
        (dual_ideal(BOWTIE), QQ),
        (SquarefreeIdeal.from_supports([[1, 2], [2, 3], [3, 4], [1, 4]]), QQ),
    ]
    for ideal, field in cases:
        assert betti_table(ideal, field).as_dict() == \
            koszul_betti_oracle(ideal, field), ideal


def test_betti_table_matches_koszul_on_seeded_duals():
    fields = (QQ, GF(2), GF(3))
    for i, cx in enumerate(seeded_pure_complexes(6, seed=47, n=6, d=3)):
        ideal = dual_ideal(cx)
        field = fields[i % 3]
        assert betti_table(ideal, field).as_dict() == \
            koszul_betti_oracle(ideal, field)


def test_betti_table_field_dependence(rp2):
    ideal = dual_ideal(rp2)
    over_q = betti_table(ideal, QQ).as_dict()
    over_2 = betti_table(ideal, GF(2)).as_dict()
    assert over_q != over_2


def test_betti_table_rejects_degenerate():
    with pytest.raises(DegenerateIdeal):
        betti_table(SquarefreeIdeal.from_supports([], universe=[1]), QQ)
    with pytest.raises(DegenerateIdeal):
        betti_table(SquarefreeIdeal.from_supports([[]], universe=[1]), QQ)


# ---------------------------------------------------------------------------
# linear resolutions mirror Cohen-Macaulayness of the dual

def test_linear_resolution_matches_cm(rp2, dunce, octa):
    cases = [
        (rp2, GF(2)), (rp2, GF(3)), (rp2, QQ),
        (dunce, QQ), (octa, GF(2)), (BOWTIE, QQ), (TWO_TRIANGLES, QQ),
    ]
    for cx, field in cases:
        assert has_linear_resolution(dual_ideal(cx), field) == \
            is_cm(cx, field).is_cm, (cx, field)


def test_linear_resolution_rejects_mixed_degrees():
    ideal = SquarefreeIdeal.from_supports([[1, 2], [3, 4, 5]])
    assert not has_linear_resolution(ideal, QQ)


def test_linear_resolution_rejects_degenerate():
    with pytest.raises(DegenerateIdeal):
        has_linear_resolution(SquarefreeIdeal.from_supports([], universe=[1]), QQ)


# ---------------------------------------------------------------------------
# linear quotients mirror shellability of the dual

def _order_has_linear_colons(ideal, order):
    done = []
    idx = {sup: g for sup, g in zip(ideal.generator_supports(), ideal.generators)}
    for sup in order:
        g = idx[sup]
        quots = [h & ~g for h in done]
        # minimal supports of the colon must all be single variables
        minimal = [q for q in quots
                   if not any(r & q == r and r != q for r in quots)]
        assert all(q.bit_count() == 1 for q in minimal), sup
        done.append(g)


def test_linear_quotients_on_shellable_complexes(octa, k62):
    # quotient orders of the dual ideal track shellings of the complex itself
    for cx in (octa, k62, TWO_TRIANGLES):
        ideal = dual_ideal(cx)
        order = has_linear_quotients(ideal)
        assert order is not None
        assert sorted(order) == sorted(ideal.generator_supports())
        _order_has_linear_colons(ideal, order)


def test_no_linear_quotients_on_nonshellable_complexes(rp2):
    assert has_linear_quotients(dual_ideal(rp2)) is None
    assert has_linear_quotients(dual_ideal(BOWTIE)) is None


def test_linear_quotients_rejects_degenerate():
    with pytest.raises(DegenerateIdeal):
        has_linear_quotients(SquarefreeIdeal.from_supports([], universe=[1]))


def test_linear_quotients_agree_with_shellability_seeded():
    for cx in seeded_pure_complexes(8, seed=53, n=6, d=3):
        lq = has_linear_quotients(dual_ideal(cx))
        cert = is_shellable(cx)
        assert (lq is not None) == (cert is not None), cx


# ---------------------------------------------------------------------------
# colon degree tests mirror shelling moves

def test_colon_degree_one_matches_moves_on_knowns(octa, k62):
    for cx in (octa, k62, BOWTIE, TWO_TRIANGLES):
        for f in cx.facet_labels():
            rest = cx.remove_facet(f)
            assert colon_is_degree_one(dual_ideal(rest, n=cx.n), f) == \
                is_shelling_move(cx, f), (cx, f)


def test_colon_degree_one_matches_moves_seeded():
    for cx in seeded_pure_complexes(10, seed=61, n=6, d=3):
        for f in cx.facet_labels():
            rest = cx.remove_facet(f)
            assert colon_is_degree_one(dual_ideal(rest, n=cx.n), f) == \
                is_shelling_move(cx, f)


def test_colon_of_zero_ideal_passes():
    zero = SquarefreeIdeal.from_supports([], universe=[1, 2, 3])
    assert colon_is_degree_one(zero, [1, 2, 3])
