"""Shelling moves, shelled-over reachability, shellability, and reduction
to a minimal Cohen-Macaulay complex with a replayable certificate.

Adding a facet F to a complex G is a shelling move when the intersection
of the simplex on F with G is pure of dimension |F|-2; adding the first
facet to the void complex counts as a move by convention.  A complex is
shelled over a subcomplex G when some sequence of moves builds it from G,
and shellable exactly when it is shelled over the void complex.

A Cohen-Macaulay complex can always be reduced to a minimal one by
repeatedly deleting facets whose removal keeps it Cohen-Macaulay; each
such deletion reverses a shelling move, which the reducer asserts.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cohen_macaulay import _parallel_map, depth_report
from .complexes import SimplicialComplex, canonicalize_masks
from .errors import FaceNotInComplex, MalformedInput, NotAFacet, NotCohenMacaulay, NotPure
from .fields import FieldSpec


def _removal_is_move(fmask: int, other_masks) -> bool:
    """Is re-adding `fmask` to the complex on `other_masks` a shelling move?"""
    others = [g for g in other_masks if g != fmask]
    if not others:
        return True  # first facet into the void complex
    contact = canonicalize_masks([fmask & g for g in others])[0]
    want = fmask.bit_count() - 1
    return all(c.bit_count() == want for c in contact)


def is_shelling_move(cx: SimplicialComplex, facet) -> bool:
    """Whether cx arises from cx minus `facet` by a shelling move."""
    fmask = facet if isinstance(facet, int) else cx.face_mask(facet)
    if fmask not in cx.facets:
        raise NotAFacet(f"{tuple(facet) if not isinstance(facet, int) else facet} is not a facet")
    return _removal_is_move(fmask, cx.facets)


# ---------------------------------------------------------------------------
# certificates

@dataclass(frozen=True)
class ShellingCertificate:
    """A replayable sequence of shelling moves from `base` up to `target`.

    `moves` lists facets by their labels in the order they are added.
    """

    base: SimplicialComplex
    moves: tuple
    target: SimplicialComplex

    def replay(self) -> SimplicialComplex:
        """Apply the moves to the base, checking each one; returns target."""
        cur = self.base
        for mv in self.moves:
            nxt = cur.with_facet(mv)
            fmask = nxt.face_mask(mv)
            if fmask not in nxt.facets:
                raise MalformedInput(f"move {tuple(mv)} is absorbed, not a facet")
            if not is_shelling_move(nxt, fmask):
                raise MalformedInput(f"move {tuple(mv)} is not a shelling move")
            cur = nxt
        if cur != self.target:
            raise MalformedInput("certificate does not reproduce its target")
        return cur

    def is_valid(self) -> bool:
        try:
            self.replay()
        except (MalformedInput, NotAFacet, FaceNotInComplex):
            return False
        return True

    def to_doc(self) -> dict:
        return {
            "vertices": list(self.target.labels),
            "base": [list(f) for f in self.base.facet_labels()],
            "moves": [list(m) for m in self.moves],
            "target": [list(f) for f in self.target.facet_labels()],
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "ShellingCertificate":
        try:
            vertices = doc["vertices"]
            base = doc["base"]
            moves = doc["moves"]
            target = doc["target"]
        except (KeyError, TypeError) as exc:
            raise MalformedInput(f"certificate document missing field: {exc}") from None
        base_cx = SimplicialComplex.from_facets(base, universe=vertices)
        target_cx = SimplicialComplex.from_facets(target, universe=vertices)
        return cls(base_cx, tuple(tuple(m) for m in moves), target_cx)


# ---------------------------------------------------------------------------
# reachability search

def _subcomplex_positions(cx: SimplicialComplex, gamma: SimplicialComplex) -> set[int]:
    """Positions of gamma's facets inside cx.facets; error when not a subset."""
    keep = set()
    for gf in gamma.facets:
        labels = gamma.face_labels(gf)
        try:
            m = cx.face_mask(labels)
        except FaceNotInComplex:
            raise NotAFacet(f"{labels} is not a facet of the larger complex") from None
        if m not in cx.facets:
            raise NotAFacet(f"{labels} is not a facet of the larger complex")
        keep.add(cx.facets.index(m))
    return keep


def shelled_over(cx: SimplicialComplex, gamma: SimplicialComplex):
    """A certificate that cx is built from gamma by shelling moves, or None.

    Exhaustive backtracking over removal orders with memoized dead ends,
    trying facets in canonical order, so the found certificate is
    deterministic.  gamma's facets must all be facets of cx.
    """
    facets = cx.facets
    e = len(facets)
    keep = _subcomplex_positions(cx, gamma)
    base = SimplicialComplex(cx.n, tuple(facets[i] for i in sorted(keep)), cx.labels)
    target_present = 0
    for i in keep:
        target_present |= 1 << i
    full = (1 << e) - 1
    failed: set[int] = set()

    def dfs(present: int):
        if present == target_present:
            return []
        if present in failed:
            return None
        live = [facets[j] for j in range(e) if (present >> j) & 1]
        for i in range(e):
            if not (present >> i) & 1 or i in keep:
                continue
            if _removal_is_move(facets[i], live):
                tail = dfs(present & ~(1 << i))
                if tail is not None:
                    return [i, *tail]
        failed.add(present)
        return None

    removals = dfs(full)
    if removals is None:
        return None
    moves = tuple(cx.face_labels(facets[i]) for i in reversed(removals))
    cert = ShellingCertificate(base, moves, cx)
    cert.replay()
    return cert


def is_shellable(cx: SimplicialComplex):
    """A shelling certificate from the void complex, or None; pure input only."""
    if cx.is_void:
        return ShellingCertificate(cx, (), cx)
    if not cx.is_pure:
        raise NotPure("shellability is defined here for pure complexes")
    return shelled_over(cx, SimplicialComplex.void())


# ---------------------------------------------------------------------------
# reduction to a minimal Cohen-Macaulay complex

def reduce_to_minimal(cx: SimplicialComplex, field: FieldSpec,
                      jobs: int | None = None):
    """Greedy facet deletion from a CM complex down to a minimal CM complex.

    Repeatedly removes the canonically first facet whose removal stays CM;
    every removal is asserted to reverse a shelling move.  Returns
    (minimal complex, certificate); the certificate's moves rebuild the
    input from the reduced complex.
    """
    if not depth_report(cx, field).is_cm:
        raise NotCohenMacaulay("reduction starts from a Cohen-Macaulay complex")
    current = cx
    removed: list[tuple] = []
    while current.facets:
        flags = _parallel_map(
            lambda f: depth_report(current.remove_facet_mask(f), field).is_cm,
            current.facets, jobs)
        pick = next((f for f, ok in zip(current.facets, flags) if ok), None)
        if pick is None:
            break
        assert _removal_is_move(pick, current.facets), \
            "CM-preserving removal must reverse a shelling move"
        removed.append(current.face_labels(pick))
        current = current.remove_facet_mask(pick)
    cert = ShellingCertificate(current, tuple(reversed(removed)), cx)
    cert.replay()
    return current, cert
