"""Built-in complexes and seeded random generators.

Concrete entries (``rp2_6``, ``dunce_hat_8``, ``rudin_ball``, ``ziegler_ball``,
``octahedron``, ``k_6_2``) either ship as checksummed plain-text facet files
under ``mincm/data/`` or are built in code.  Parameterized names —
``simplex(n)``, ``boundary_simplex(n)``, ``skeleton(n,i)`` — are constructed
on demand; ``k_6_2`` is a convenience alias for ``skeleton(6,2)``, the
complete two-skeleton of the simplex on six vertices.

Reserved names (``bing_house``, ``pastry``, ``nonpartitionable_c3``,
``balanced_nonpartitionable_c3``, ``omega_3``) are classical complexes whose
facet lists are not shipped; requesting one raises :class:`DataNotBundled`
unless a facet file for it is supplied via the ``MINCM_DATA_DIR`` ingestion
path.  Setting ``MINCM_DATA_DIR`` to a directory containing ``<name>.txt``
files overrides any bundled data (user-supplied files are parsed but not
checksummed).

Every entry's expected-property block is recomputed from scratch by the test
suite; the loader refuses bundled files whose checksum does not match the
pin, so silent data corruption cannot masquerade as a mathematical fact.
"""
from __future__ import annotations

import hashlib
import itertools
import os
import random
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Mapping, Optional

from .complexes import SimplicialComplex
from .errors import DataNotBundled, MalformedInput, UnknownCatalogName
from .serialize import parse_text

DATA_DIR_ENV = "MINCM_DATA_DIR"

# sha256 pins for the bundled facet files; the loader refuses mismatches.
_PINS = {
    "rp2_6": "6e71f1334b4fc92162657d7df8390f91f92d0135fdba9a9c2cbdd9bbf9ce6d0f",
    "dunce_hat_8": "160f392c0664e7a43021cdb42855e12ab4b3dc0aa23f3357b4f1d7c1f680f6b3",
    "rudin_ball": None,  # pinned when the data file is generated
    "ziegler_ball": None,
}


def _simplex(n: int) -> SimplicialComplex:
    if n < 0:
        raise MalformedInput(f"simplex({n}): vertex count must be >= 0")
    return SimplicialComplex.from_facets([range(1, n + 1)])


def _boundary_simplex(n: int) -> SimplicialComplex:
    if n < 0:
        raise MalformedInput(f"boundary_simplex({n}): vertex count must be >= 0")
    if n == 0:
        return SimplicialComplex.void()
    return SimplicialComplex.from_facets(
        itertools.combinations(range(1, n + 1), n - 1), universe=range(1, n + 1))


def _skeleton(n: int, i: int) -> SimplicialComplex:
    if n < 0 or i < -1 or i > n - 1:
        raise MalformedInput(f"skeleton({n},{i}): need 0 <= n and -1 <= i <= n-1")
    return SimplicialComplex.from_facets(
        itertools.combinations(range(1, n + 1), i + 1), universe=range(1, n + 1))


def _octahedron() -> SimplicialComplex:
    pairs = ((1, 2), (3, 4), (5, 6))
    return SimplicialComplex.from_facets(itertools.product(*pairs))


@dataclass(frozen=True)
class CatalogEntry:
    """A named complex: its provenance note and expected-property block.

    ``expected`` maps invariant names to values the test suite recomputes
    from scratch; per-field flags live under ``expected["fields"]`` keyed by
    field token (``"q"``, ``"gf2"``, ...).  ``bundled`` is False for
    reserved names whose data is not shipped.
    """

    name: str
    summary: str
    expected: Mapping = field(default_factory=dict)
    filename: Optional[str] = None
    sha256: Optional[str] = None
    builder: Optional[Callable[[], SimplicialComplex]] = None
    bundled: bool = True

    def load(self) -> SimplicialComplex:
        override = _data_dir_override()
        if override is not None:
            path = override / f"{self.name}.txt"
            if path.is_file():
                return parse_text(path.read_text())
        if not self.bundled:
            raise DataNotBundled(
                f"{self.name}: data not bundled; supply a facet file named "
                f"{self.name}.txt in ${DATA_DIR_ENV} or load it explicitly")
        if self.builder is not None:
            return self.builder()
        if self.sha256 is None:
            raise MalformedInput(
                f"{self.name}: bundled data file has no pinned checksum")
        try:
            blob = (resources.files("mincm") / "data" / self.filename).read_bytes()
        except OSError as exc:
            raise MalformedInput(
                f"{self.name}: bundled data file {self.filename} unreadable "
                f"({exc}); the installation is incomplete") from exc
        digest = hashlib.sha256(blob).hexdigest()
        if digest != self.sha256:
            raise MalformedInput(
                f"{self.name}: data file checksum mismatch "
                f"(expected {self.sha256}, got {digest})")
        return parse_text(blob.decode("utf-8"))


def _data_dir_override() -> Optional[Path]:
    d = os.environ.get(DATA_DIR_ENV)
    return Path(d) if d else None


_CONCRETE = (
    CatalogEntry(
        name="rp2_6",
        summary=("Six-vertex triangulation of the real projective plane "
                 "(antipodal icosahedron quotient)"),
        expected={
            "counts": (6, 10),
            "fields": {
                "q": {"cm": True, "minimal": True},
                "gf2": {"cm": False, "depth": 2},
                "gf3": {"cm": True, "minimal": True},
            },
        },
        filename="rp2_6.txt",
        sha256=_PINS["rp2_6"],
    ),
    CatalogEntry(
        name="dunce_hat_8",
        summary=("Eight-vertex dunce hat: contractible but not collapsible, "
                 "no boundary ridges"),
        expected={
            "counts": (8, 17),
            "acyclic": True,
            "boundary_ridges": 0,
            "fields": {
                "q": {"cm": True, "minimal": True},
                "gf2": {"cm": True, "minimal": True},
                "gf3": {"cm": True, "minimal": True},
            },
        },
        filename="dunce_hat_8.txt",
        sha256=_PINS["dunce_hat_8"],
    ),
    CatalogEntry(
        name="rudin_ball",
        summary=("Strongly non-shellable triangulated 3-ball with 14 "
                 "vertices and 41 facets"),
        expected={
            "counts": (14, 41),
            "ball_necessary": True,
            "free_facet": None,
            "fields": {"q": {"cm": True, "minimal": True}},
        },
        filename="rudin_ball.txt",
        sha256=_PINS["rudin_ball"],
    ),
    CatalogEntry(
        name="ziegler_ball",
        summary=("Strongly non-shellable triangulated 3-ball with 10 "
                 "vertices and 21 facets"),
        expected={
            "counts": (10, 21),
            "ball_necessary": True,
            "free_facet": None,
            "fields": {"q": {"cm": True, "minimal": True}},
        },
        filename="ziegler_ball.txt",
        sha256=_PINS["ziegler_ball"],
    ),
    CatalogEntry(
        name="octahedron",
        summary="Boundary of the octahedron: the 2-sphere as a triple join",
        expected={
            "counts": (6, 8),
            "fields": {
                "q": {"cm": True, "minimal": False},
                "gf2": {"cm": True, "minimal": False},
            },
        },
        builder=_octahedron,
    ),
    CatalogEntry(
        name="k_6_2",
        summary="Complete two-skeleton of the simplex on six vertices",
        expected={
            "counts": (6, 20),
            "fields": {
                "q": {"cm": True, "minimal": False},
                "gf2": {"cm": True, "minimal": False},
            },
        },
        builder=lambda: _skeleton(6, 2),
    ),
)

_RESERVED = (
    CatalogEntry(
        name="bing_house",
        summary="Bing's house with two rooms (contractible, not collapsible)",
        bundled=False),
    CatalogEntry(
        name="pastry",
        summary="The pastry: a contractible complex with no free faces",
        bundled=False),
    CatalogEntry(
        name="nonpartitionable_c3",
        summary="Non-partitionable Cohen-Macaulay complex C3",
        bundled=False),
    CatalogEntry(
        name="balanced_nonpartitionable_c3",
        summary="Balanced non-partitionable Cohen-Macaulay complex C3",
        bundled=False),
    CatalogEntry(
        name="omega_3",
        summary=("Two-fold acyclic complex with no decomposition into rank-2 "
                 "boolean intervals"),
        bundled=False),
)

_BY_NAME = {e.name: e for e in _CONCRETE + _RESERVED}

_PARAM = re.compile(
    r"""(?P<fn>simplex|boundary_simplex|skeleton)
        \( \s* (?P<a>-?\d+) \s* (?: , \s* (?P<b>-?\d+) \s*)? \) \Z""",
    re.VERBOSE,
)


def entries() -> tuple[CatalogEntry, ...]:
    """All named entries, concrete first, reserved (not bundled) last."""
    return _CONCRETE + _RESERVED


def entry(name: str) -> CatalogEntry:
    e = _BY_NAME.get(name)
    if e is None:
        raise UnknownCatalogName(
            f"unknown catalog name {name!r}; known names: "
            + ", ".join(sorted(_BY_NAME))
            + "; parameterized: simplex(n), boundary_simplex(n), skeleton(n,i)")
    return e


def get(name: str) -> SimplicialComplex:
    """The canonical complex for a catalog name.

    Accepts the concrete names, the reserved names (which raise
    :class:`DataNotBundled` unless ingested), and the parameterized forms
    ``simplex(n)``, ``boundary_simplex(n)``, ``skeleton(n,i)``.
    """
    m = _PARAM.match(name.strip())
    if m:
        fn, a, b = m.group("fn"), int(m.group("a")), m.group("b")
        if fn == "skeleton":
            if b is None:
                raise MalformedInput("skeleton(n,i) takes two arguments")
            return _skeleton(a, int(b))
        if b is not None:
            raise MalformedInput(f"{fn}(n) takes one argument")
        return _simplex(a) if fn == "simplex" else _boundary_simplex(a)
    return entry(name.strip()).load()


# ---------------------------------------------------------------------------
# seeded random generators

def random_complex(n: int, d: int, density: float, seed) -> SimplicialComplex:
    """A random complex whose facets are d-subsets of {1..n}.

    Each of the C(n, d) subsets is kept independently with probability
    ``density`` under a private RNG seeded with ``seed``; the result is
    deterministic for fixed arguments.  An empty draw yields the void
    complex.
    """
    if d < 0 or d > n:
        raise MalformedInput(f"random_complex: need 0 <= d <= n, got d={d} n={n}")
    rng = random.Random(seed)
    facets = [c for c in itertools.combinations(range(1, n + 1), d)
              if rng.random() < density]
    if not facets:
        return SimplicialComplex.void()
    return SimplicialComplex.from_facets(facets)


def random_with(predicate, budget: int, seed, *, n: int = 7, d: int = 3,
                density: float = 0.4) -> Optional[SimplicialComplex]:
    """Rejection-sample random complexes until ``predicate`` accepts one.

    Draws at most ``budget`` complexes (deterministically derived from
    ``seed``); returns None when the budget is exhausted.
    """
    for i in range(budget):
        cx = random_complex(n, d, density, f"mincm.random_with:{seed}:{i}")
        if predicate(cx):
            return cx
    return None
