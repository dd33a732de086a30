"""Squarefree monomial ideals and the Alexander-dual dictionary.

The dual ideal of a complex on universe [n] is generated by the
complements of its facets (one squarefree monomial per facet).  Graded
Betti numbers come from Hochster's formula: for a squarefree ideal I with
Stanley-Reisner complex G,

    beta_{i,j}(I) = sum over j-subsets W of dim H~_{|W|-i-2}(G restricted to W).

Linear resolutions and linear quotients are decided from that table and
from colon-ideal degree tests; together they mirror Cohen-Macaulayness
and shellability of the dual complex (Eagon-Reiner and its refinements).
"""
from __future__ import annotations

from dataclasses import dataclass

from .cohen_macaulay import _parallel_map
from .complexes import SimplicialComplex, _label_key, bits, canonicalize_masks, mask_of
from .errors import DegenerateIdeal, FaceNotInComplex, MalformedInput
from .fields import FieldSpec
from .homology import betti_of_facets

_ENUM_LIMIT = 16  # subset enumeration is 2^n; keep desk-scale


def _minimalize_masks(masks) -> tuple[int, ...]:
    """Dedupe and drop supersets, keeping the minimal supports, sorted."""
    masks = sorted(set(masks), key=lambda m: (m.bit_count(), bits(m)))
    kept: list[int] = []
    for m in masks:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=bits))


@dataclass(frozen=True)
class SquarefreeIdeal:
    """A squarefree monomial ideal given by the supports of its generators.

    Generators are stored as the minimal antichain of supports over a
    fixed variable universe; the zero ideal has no generators and the
    unit ideal has the single empty support.
    """

    n: int
    generators: tuple[int, ...]
    labels: tuple

    def __init__(self, n: int, generator_masks, labels=None):
        if n < 0:
            raise MalformedInput("variable count must be non-negative")
        gens = _minimalize_masks(generator_masks)
        full = (1 << n) - 1
        for g in gens:
            if g & ~full:
                raise MalformedInput("generator variable outside the universe")
        if labels is None:
            labels = tuple(range(n))
        else:
            labels = tuple(labels)
            if len(labels) != n or len(set(labels)) != n:
                raise MalformedInput("labels must be a bijection with the universe")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "labels", labels)

    @classmethod
    def from_supports(cls, supports, universe=None) -> "SquarefreeIdeal":
        seen = set()
        raw = []
        for s in supports:
            s = list(s)
            if len(set(s)) != len(s):
                raise MalformedInput(f"generator support {s!r} repeats a variable")
            raw.append(s)
            seen.update(s)
        if universe is not None:
            universe = set(universe)
            if not seen <= universe:
                raise MalformedInput("generator variable outside the given universe")
            seen = universe
        labels = tuple(sorted(seen, key=_label_key))
        idx = {lab: i for i, lab in enumerate(labels)}
        masks = [mask_of(idx[v] for v in s) for s in raw]
        return cls(len(labels), masks, labels)

    # -- structure ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return bool(self.generators) and self.generators[0] == 0

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(g.bit_count() for g in self.generators)

    def generator_supports(self) -> tuple[tuple, ...]:
        return tuple(tuple(self.labels[i] for i in bits(g)) for g in self.generators)

    def support_mask(self, variables) -> int:
        idx = {lab: i for i, lab in enumerate(self.labels)}
        try:
            return mask_of(idx[v] for v in variables)
        except KeyError as exc:
            raise FaceNotInComplex(f"label {exc.args[0]!r} is not a variable") from None

    def __repr__(self):
        if self.is_zero:
            return "SquarefreeIdeal(0)"
        if self.is_unit:
            return "SquarefreeIdeal(1)"
        mons = ", ".join("*".join(f"x_{v}" for v in s) for s in self.generator_supports())
        return f"SquarefreeIdeal({mons})"

    def to_doc(self) -> dict:
        return {
            "variables": list(self.labels),
            "generators": [list(s) for s in self.generator_supports()],
        }

    @classmethod
    def from_doc(cls, doc: dict) -> "SquarefreeIdeal":
        try:
            return cls.from_supports(doc["generators"], universe=doc["variables"])
        except (KeyError, TypeError) as exc:
            raise MalformedInput(f"ideal document missing field: {exc}") from None


def dual_ideal(cx: SimplicialComplex, n: int | None = None) -> SquarefreeIdeal:
    """Stanley-Reisner ideal of the Alexander dual: one generator per facet.

    Each facet F contributes the monomial on [n] - F.  The void complex
    gives the zero ideal and the full simplex gives the (degenerate) unit
    ideal.  n may extend the universe; it must not shrink it.
    """
    amb = cx.on_universe(n)
    full = (1 << amb.n) - 1
    return SquarefreeIdeal(amb.n, [full & ~f for f in amb.facets], amb.labels)


# ---------------------------------------------------------------------------
# Stanley-Reisner complex of an ideal

def sr_complex_facets(ideal: SquarefreeIdeal) -> tuple[int, ...]:
    """Facet masks of the complex whose minimal non-faces are the generators."""
    n = ideal.n
    if n > _ENUM_LIMIT:
        raise MalformedInput(f"subset enumeration limited to {_ENUM_LIMIT} variables")
    if ideal.is_unit:
        return ()
    gens = ideal.generators
    if not gens:
        return ((1 << n) - 1,)

    def is_face(s: int) -> bool:
        return not any(g & s == g for g in gens)

    facets = []
    for s in range(1 << n):
        if not is_face(s):
            continue
        if any(is_face(s | (1 << v)) for v in range(n) if not (s >> v) & 1):
            continue
        facets.append(s)
    return tuple(sorted(facets, key=bits))


def sr_complex(ideal: SquarefreeIdeal) -> SimplicialComplex:
    return SimplicialComplex(ideal.n, sr_complex_facets(ideal), ideal.labels)


# ---------------------------------------------------------------------------
# graded Betti numbers (Hochster's formula)

@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers beta_{i,j} of an ideal, finitely supported."""

    field: FieldSpec
    cells: tuple  # ((i, j, value), ...) sorted, values > 0

    def get(self, i: int, j: int) -> int:
        for a, b, v in self.cells:
            if (a, b) == (i, j):
                return v
        return 0

    def as_dict(self) -> dict:
        return {(i, j): v for i, j, v in self.cells}

    @property
    def max_i(self) -> int:
        return max((i for i, _, _ in self.cells), default=-1)

    def rows(self):
        """(i, j, value) triples in (i, j) order."""
        return list(self.cells)


def betti_table(ideal: SquarefreeIdeal, field: FieldSpec,
                jobs: int | None = None) -> BettiTable:
    """Hochster sums over all vertex subsets of the Stanley-Reisner complex."""
    if ideal.is_zero or ideal.is_unit:
        raise DegenerateIdeal("Betti table needs a non-zero, proper ideal")
    n = ideal.n
    if n > _ENUM_LIMIT:
        raise MalformedInput(f"subset enumeration limited to {_ENUM_LIMIT} variables")
    global_facets = sr_complex_facets(ideal)

    def contributions(w: int):
        induced = canonicalize_masks(f & w for f in global_facets)[0]
        dims = betti_of_facets(induced, field)
        out = []
        size = w.bit_count()
        for idx, h in enumerate(dims):
            if not h:
                continue
            deg = idx - 1
            i = size - deg - 2
            if i >= 0:
                out.append((i, size, h))
        return out

    cells: dict[tuple[int, int], int] = {}
    for batch in _parallel_map(contributions, range(1 << n), jobs):
        for i, j, h in batch:
            cells[(i, j)] = cells.get((i, j), 0) + h
    triples = tuple(sorted((i, j, v) for (i, j), v in cells.items() if v))
    return BettiTable(field, triples)


def has_linear_resolution(ideal: SquarefreeIdeal, field: FieldSpec,
                          jobs: int | None = None) -> bool:
    """All Betti numbers on the single diagonal j = i + degree."""
    if ideal.is_zero or ideal.is_unit:
        raise DegenerateIdeal("linearity is undefined for the zero and unit ideals")
    degs = set(ideal.degrees)
    if len(degs) > 1:
        return False
    c = degs.pop()
    table = betti_table(ideal, field, jobs)
    return all(j == i + c for i, j, _ in table.cells)


# ---------------------------------------------------------------------------
# linear quotients and colon degree tests

def _colon_supports(chosen, g: int) -> tuple[int, ...]:
    """Minimal supports of (chosen) : monomial(g)."""
    return _minimalize_masks(h & ~g for h in chosen)


def has_linear_quotients(ideal: SquarefreeIdeal):
    """A generator order with variable-generated colons, or None.

    Backtracking in lexicographic generator order with memoized dead
    ends; the first generator is always admissible.
    """
    if ideal.is_zero or ideal.is_unit:
        raise DegenerateIdeal("linear quotients need a non-zero, proper ideal")
    gens = ideal.generators
    e = len(gens)
    failed: set[int] = set()

    def dfs(chosen_mask: int, chosen: list[int]):
        if len(chosen) == e:
            return []
        if chosen_mask in failed:
            return None
        for i in range(e):
            if (chosen_mask >> i) & 1:
                continue
            quot = _colon_supports(chosen, gens[i])
            if all(q.bit_count() == 1 for q in quot):
                chosen.append(gens[i])
                tail = dfs(chosen_mask | (1 << i), chosen)
                if tail is not None:
                    return [i, *tail]
                chosen.pop()
        failed.add(chosen_mask)
        return None

    order = dfs(0, [])
    if order is None:
        return None
    sup = ideal.generator_supports()
    return tuple(sup[i] for i in order)


def colon_is_degree_one(ideal: SquarefreeIdeal, face) -> bool:
    """Whether (I : monomial on the complement of `face`) is variable-generated.

    With I the dual ideal of a complex and `face` a candidate facet F,
    the colon's minimal supports are the differences F - G over facets G,
    so this decides the shelling-move condition on the dual side.  The
    zero ideal passes vacuously (the first shelling move).
    """
    fmask = ideal.support_mask(face)
    complement = ((1 << ideal.n) - 1) & ~fmask
    quot = _colon_supports(ideal.generators, complement)
    return all(q.bit_count() == 1 for q in quot)
