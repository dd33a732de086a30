"""Immutable finite simplicial complexes given by facet antichains.

Vertices carry external labels (ints or strings) and are mapped to dense
ids 0..n-1 in sorted label order.  Faces are stored as integer bitmasks
over the ids, facet lists are kept as inclusion antichains in
lexicographic order on sorted vertex ids, so every derived object is
deterministic.  Two degenerate values are kept distinct throughout: the
void complex (no faces at all) and the irrelevant complex {<empty face>}.
"""
from __future__ import annotations

import itertools
from functools import cached_property
from math import comb

from .errors import FaceNotInComplex, MalformedInput, NotAFacet, NotPure


# ---------------------------------------------------------------------------
# bitmask helpers

def mask_of(ids) -> int:
    m = 0
    for i in ids:
        m |= 1 << i
    return m


def bits(mask: int) -> tuple[int, ...]:
    """Sorted vertex ids of a face mask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def submasks_of_size(mask: int, k: int):
    """All k-subsets of a face mask, as masks."""
    vs = bits(mask)
    for combo in itertools.combinations(vs, k):
        yield mask_of(combo)


def _label_key(label):
    # ints sort numerically before strings; mixed inputs stay deterministic
    if isinstance(label, bool) or not isinstance(label, int):
        return (1, str(label))
    return (0, label)


def canonicalize_masks(masks) -> tuple[tuple[int, ...], int]:
    """Dedupe, drop faces contained in other faces, sort canonically.

    Returns (antichain, number of dropped proper subsets).
    """
    masks = list(masks)
    unique = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    dropped = 0
    for m in unique:
        if any(m & f == m for f in kept):
            dropped += 1
        else:
            kept.append(m)
    kept.sort(key=bits)
    return tuple(kept), dropped + (len(masks) - len(set(masks)))


class SimplicialComplex:
    """A finite simplicial complex over a fixed vertex universe.

    The universe may be larger than the union of the facets; the extra
    vertices matter only for Alexander duality, which is taken relative
    to the universe.  Instances are immutable and hashable.
    """

    def __init__(self, n: int, facet_masks, labels=None, absorbed: int = 0):
        if n < 0:
            raise MalformedInput("universe size must be non-negative")
        facets, extra = canonicalize_masks(facet_masks)
        full = (1 << n) - 1
        for m in facets:
            if m & ~full:
                raise MalformedInput("facet vertex id outside universe")
        if labels is None:
            labels = tuple(range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n or len(set(labels)) != n:
                raise MalformedInput("labels must be a bijection with the universe")
        self.n = n
        self.facets = facets
        self.labels = labels
        self.absorbed_facets = absorbed + extra
        self._id_of = {lab: i for i, lab in enumerate(labels)}

    # -- construction -------------------------------------------------------

    @classmethod
    def from_facets(cls, facet_iter, universe=None) -> "SimplicialComplex":
        """Build a complex from facets given as collections of labels.

        A facet written as a list may not repeat a label.  Facets that are
        subsets of other facets are absorbed; the count of dropped ones is
        kept on the instance.  `universe` optionally fixes extra labels so
        the vertex set can exceed the facet support.
        """
        raw = []
        seen_labels = set()
        for face in facet_iter:
            face = list(face)
            if len(set(face)) != len(face):
                raise MalformedInput(f"facet {face!r} repeats a label")
            raw.append(face)
            seen_labels.update(face)
        if universe is not None:
            universe = set(universe)
            if not seen_labels <= universe:
                raise MalformedInput("facet label outside the given universe")
            seen_labels = universe
        labels = tuple(sorted(seen_labels, key=_label_key))
        idx = {lab: i for i, lab in enumerate(labels)}
        masks = [mask_of(idx[lab] for lab in face) for face in raw]
        return cls(len(labels), masks, labels)

    @classmethod
    def void(cls) -> "SimplicialComplex":
        return cls(0, ())

    @classmethod
    def irrelevant(cls) -> "SimplicialComplex":
        return cls(0, (0,))

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return (self.n, self.facets, self.labels) == (other.n, other.facets, other.labels)

    def __hash__(self):
        return hash((self.n, self.facets, self.labels))

    def __repr__(self):
        if self.is_void:
            return "SimplicialComplex(void)"
        if self.is_irrelevant:
            return "SimplicialComplex({<empty>})"
        shown = ", ".join("{" + ",".join(map(str, f)) + "}" for f in self.facet_labels())
        return f"SimplicialComplex({shown})"

    # -- basic structure ----------------------------------------------------

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == (0,)

    @cached_property
    def dim(self) -> int:
        """Dimension; -1 for the irrelevant complex, -2 for the void one."""
        if self.is_void:
            return -2
        return max(m.bit_count() for m in self.facets) - 1

    @cached_property
    def support_mask(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    @cached_property
    def vertices(self) -> tuple[int, ...]:
        """Ids of vertices that actually appear in a face."""
        return bits(self.support_mask)

    @cached_property
    def is_pure(self) -> bool:
        if self.is_void:
            return True
        d = self.dim + 1
        return all(m.bit_count() == d for m in self.facets)

    @cached_property
    def faces_by_size(self) -> list[list[int]]:
        """faces_by_size[k] = canonical list of k-vertex face masks (k=0 is the empty face)."""
        return faces_from_facets(self.facets)

    def all_faces(self):
        for level in self.faces_by_size:
            yield from level

    @cached_property
    def f_vector(self) -> tuple[int, ...]:
        """(f_-1, f_0, ..., f_{dim}); empty tuple for the void complex."""
        return tuple(len(level) for level in self.faces_by_size)

    @cached_property
    def h_vector(self) -> tuple[int, ...]:
        if self.is_void:
            raise MalformedInput("h-vector of the void complex is undefined")
        return h_vector_from_f(self.f_vector, self.dim + 1)

    @cached_property
    def euler_reduced(self) -> int:
        """Reduced Euler characteristic: alternating face-count sum minus 1."""
        if self.is_void:
            return 0
        chi = 0
        for k, level in enumerate(self.faces_by_size):
            if k == 0:
                continue
            chi += (-1) ** (k - 1) * len(level)
        return chi - 1

    # -- label plumbing -----------------------------------------------------

    def label_of(self, vid: int):
        return self.labels[vid]

    def id_of(self, label) -> int:
        try:
            return self._id_of[label]
        except KeyError:
            raise FaceNotInComplex(f"label {label!r} is not a vertex") from None

    def face_mask(self, face) -> int:
        return mask_of(self.id_of(lab) for lab in face)

    def face_labels(self, mask: int) -> tuple:
        return tuple(self.labels[i] for i in bits(mask))

    def facet_labels(self) -> tuple[tuple, ...]:
        return tuple(self.face_labels(f) for f in self.facets)

    # -- membership ---------------------------------------------------------

    def has_face_mask(self, mask: int) -> bool:
        return any(mask & f == mask for f in self.facets)

    def has_face(self, face) -> bool:
        try:
            m = self.face_mask(face)
        except FaceNotInComplex:
            return False
        return self.has_face_mask(m)

    # -- derived complexes ----------------------------------------------------

    def _same_universe(self, facet_masks) -> "SimplicialComplex":
        return SimplicialComplex(self.n, facet_masks, self.labels)

    def link_masks(self, face_mask: int) -> tuple[int, ...]:
        """Facet masks of the link, over this complex's ids (no reindexing)."""
        if not self.has_face_mask(face_mask):
            raise FaceNotInComplex(f"{self.face_labels(face_mask)} is not a face")
        out = [f & ~face_mask for f in self.facets if f & face_mask == face_mask]
        return canonicalize_masks(out)[0]

    def link(self, face) -> "SimplicialComplex":
        """Link of a face, reindexed over its own vertex support."""
        lk = self.link_masks(self.face_mask(face))
        return _reindexed(lk, self.labels)

    def remove_facet(self, face) -> "SimplicialComplex":
        """Drop one facet; faces of it contained in other facets persist."""
        m = self.face_mask(face) if not isinstance(face, int) else face
        return self.remove_facet_mask(m)

    def remove_facet_mask(self, m: int) -> "SimplicialComplex":
        if m not in self.facets:
            raise NotAFacet(f"{bits(m)} is not a facet")
        rest = tuple(f for f in self.facets if f != m)
        return self._same_universe(rest)

    def with_facet(self, face) -> "SimplicialComplex":
        """Add a facet whose labels already belong to the universe."""
        m = self.face_mask(face) if not isinstance(face, int) else face
        return self._same_universe(self.facets + (m,))

    def skeleton(self, i: int) -> "SimplicialComplex":
        """i-skeleton: all faces of dimension at most i (-1 <= i <= dim)."""
        if self.is_void:
            raise MalformedInput("skeleton of the void complex")
        if not (-1 <= i <= self.dim):
            raise MalformedInput(f"skeleton index {i} out of range [-1, {self.dim}]")
        keep = [m for m in self.facets if m.bit_count() <= i + 1]
        keep.extend(self.faces_by_size[i + 1] if i + 1 < len(self.faces_by_size) else [])
        return self._same_universe(keep)

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        """Simplicial join; the two vertex sets are made disjoint."""
        if self.is_void or other.is_void:
            return SimplicialComplex.void()
        shift = self.n
        facets = [a | (b << shift) for a in self.facets for b in other.facets]
        mine = set(self.labels)
        theirs = set(other.labels)
        if mine & theirs:
            labels = None
        else:
            labels = self.labels + other.labels
        return SimplicialComplex(self.n + other.n, facets, labels)

    # -- Alexander duality ----------------------------------------------------

    def minimal_nonfaces(self) -> tuple[int, ...]:
        """Minimal subsets of the universe that are not faces, as masks."""
        if self.is_void:
            return (0,)
        face_sets = [set(level) for level in self.faces_by_size]
        d = len(face_sets) - 1
        found = []
        seen = set()
        for k in range(0, d + 1):
            for sigma in face_sets[k]:
                for v in range(self.n):
                    b = 1 << v
                    if sigma & b:
                        continue
                    cand = sigma | b
                    if cand in seen:
                        continue
                    seen.add(cand)
                    if k + 1 <= d and cand in face_sets[k + 1]:
                        continue
                    if all(
                        (cand & ~(1 << u)) in face_sets[k]
                        for u in bits(cand)
                    ):
                        found.append(cand)
        return tuple(sorted(found, key=bits))

    def alexander_dual(self, n: int | None = None) -> "SimplicialComplex":
        """Dual over a universe of size n: faces are complements of non-faces."""
        cx = self.on_universe(n)
        full = (1 << cx.n) - 1
        duals = [full & ~m for m in cx.minimal_nonfaces()]
        return SimplicialComplex(cx.n, duals, cx.labels)

    def on_universe(self, n: int | None) -> "SimplicialComplex":
        """The same complex over a universe extended to n vertices.

        Fresh integer labels (or "v0", "v1", ... for mixed labels) are
        appended and the vertex order re-canonicalized.  None keeps the
        current universe.
        """
        if n is None:
            return self
        if n < self.n:
            raise MalformedInput("universe cannot shrink below existing vertices")
        if n == self.n:
            return self
        labels = list(self.labels)
        if all(isinstance(l, int) for l in labels):
            nxt = max(labels, default=0) + 1
            while len(labels) < n:
                labels.append(nxt)
                nxt += 1
        else:
            k = 0
            have = set(labels)
            while len(labels) < n:
                cand = f"v{k}"
                if cand not in have:
                    labels.append(cand)
                    have.add(cand)
                k += 1
        order = sorted(range(n), key=lambda i: _label_key(labels[i]))
        perm = {old: new for new, old in enumerate(order)}
        remap = lambda m: mask_of(perm[i] for i in bits(m))
        return SimplicialComplex(n, [remap(f) for f in self.facets],
                                 tuple(labels[i] for i in order))

    # -- ridges and boundary ---------------------------------------------------

    @cached_property
    def _ridge_incidence(self) -> dict[int, int]:
        """ridge mask -> number of facets containing it (ridges are (dim-1)-faces)."""
        if self.is_void or self.dim < 0:
            return {}
        d = self.dim + 1
        counts: dict[int, int] = {}
        for r in self.faces_by_size[d - 1]:
            counts[r] = sum(1 for f in self.facets if r & f == r)
        return counts

    def boundary_ridge_masks(self) -> tuple[int, ...]:
        return tuple(sorted((r for r, c in self._ridge_incidence.items() if c == 1), key=bits))

    def boundary_ridges(self) -> tuple[tuple, ...]:
        return tuple(self.face_labels(r) for r in self.boundary_ridge_masks())

    def has_no_boundary_ridges(self) -> bool:
        return not self.boundary_ridge_masks()

    def ridges_per_facet(self) -> dict[tuple, int]:
        """facet labels -> number of boundary ridges it contains."""
        br = self.boundary_ridge_masks()
        out = {}
        for f in self.facets:
            out[self.face_labels(f)] = sum(1 for r in br if r & f == r)
        return out

    def boundary_complex(self) -> "SimplicialComplex":
        """Complex generated by the boundary ridges; requires purity."""
        if not self.is_pure:
            raise NotPure("boundary complex needs a pure complex")
        return self._same_universe(self.boundary_ridge_masks())

    def dual_graph(self) -> dict[int, tuple[int, ...]]:
        """Facet adjacency through shared ridges, indexed by facet position."""
        e = len(self.facets)
        d = self.dim + 1
        adj: dict[int, set[int]] = {i: set() for i in range(e)}
        for i in range(e):
            for j in range(i + 1, e):
                inter = self.facets[i] & self.facets[j]
                if inter.bit_count() == d - 1:
                    adj[i].add(j)
                    adj[j].add(i)
        return {i: tuple(sorted(s)) for i, s in adj.items()}

    def dual_graph_connected(self) -> bool:
        e = len(self.facets)
        if e <= 1:
            return True
        adj = self.dual_graph()
        seen = {0}
        stack = [0]
        while stack:
            for nb in adj[stack.pop()]:
                if nb not in seen:
                    seen.add(nb)
                    stack.append(nb)
        return len(seen) == e

    def is_pseudomanifold(self) -> bool:
        """Pure, connected dual graph, and every ridge in exactly two facets."""
        if self.is_void or self.dim < 0:
            return False
        return (
            self.is_pure
            and self.dual_graph_connected()
            and all(c == 2 for c in self._ridge_incidence.values())
        )


def faces_from_facets(facet_masks) -> list[list[int]]:
    """All faces of the complex generated by the masks, grouped by cardinality."""
    if not facet_masks:
        return []
    d = max(m.bit_count() for m in facet_masks)
    per_size: list[set[int]] = [set() for _ in range(d + 1)]
    per_size[0].add(0)
    for f in facet_masks:
        vs = bits(f)
        for k in range(1, len(vs) + 1):
            for combo in itertools.combinations(vs, k):
                per_size[k].add(mask_of(combo))
    return [sorted(s, key=bits) for s in per_size]


def _reindexed(facet_masks, labels) -> SimplicialComplex:
    """Rebuild a complex over exactly the vertices appearing in the masks."""
    support = 0
    for m in facet_masks:
        support |= m
    vs = bits(support)
    pos = {v: i for i, v in enumerate(vs)}
    remapped = [mask_of(pos[b] for b in bits(m)) for m in facet_masks]
    return SimplicialComplex(len(vs), remapped, tuple(labels[v] for v in vs))


def h_vector_from_f(f_vector, d: int) -> tuple[int, ...]:
    """(h_0, ..., h_d) from (f_-1, ..., f_{d-1}) via the binomial transform."""
    def f(k):  # f_{k-1}
        return f_vector[k] if 0 <= k < len(f_vector) else 0

    out = []
    for i in range(d + 1):
        out.append(sum(comb(d - k, i - k) * (-1) ** (i - k) * f(k) for k in range(i + 1)))
    return tuple(out)


def glue(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Union of two complexes identified along shared vertex labels."""
    labels = tuple(sorted(set(a.labels) | set(b.labels), key=_label_key))
    idx = {lab: i for i, lab in enumerate(labels)}
    out = []
    for cx in (a, b):
        for f in cx.facets:
            out.append(mask_of(idx[cx.labels[v]] for v in bits(f)))
    return SimplicialComplex(len(labels), out, labels)


def intersect(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    """Faces present in both complexes, identified by vertex labels."""
    common = sorted(set(a.labels) & set(b.labels), key=_label_key)
    idx = {lab: i for i, lab in enumerate(common)}
    if a.is_void or b.is_void:
        return SimplicialComplex.void()
    pieces = []
    for fa in a.facets:
        for fb in b.facets:
            inter_labels = set(a.face_labels(fa)) & set(b.face_labels(fb))
            pieces.append(mask_of(idx[lab] for lab in inter_labels))
    return SimplicialComplex(len(common), pieces, tuple(common))
