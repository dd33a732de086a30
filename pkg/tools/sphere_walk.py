"""Random walk over triangulated 3-spheres hunting complement balls.

A triangulated 3-ball on 10 vertices with 21 facets, all vertices on the
boundary and f = (1, 10, 38, 50, 21), is exactly the complement of a
7-tet stacked tree inside a 28-tet 3-sphere on the same vertices: the
interface is a 16-triangle sphere through all 10 vertices, and counting
faces forces the removed ball to have no interior edges or vertices,
which pins it to a tree of single-triangle gluings with a fresh apex at
every step.  Complements of balls in a PL 3-sphere are balls, and
bistellar 2-3/3-2 flips preserve being a 3-sphere, so every candidate
this walk emits is a genuine simplicial ball by construction.

The walk starts from the suspended octahedron refined by two 1-4 splits
(10 vertices, 22 tets), drifts around the target facet count with random
flips, and at the target count tries many random tree extractions; each
complement is screened for free facets before the expensive
Cohen-Macaulay and minimality checks run.

The same machine scales to the 14-vertex, 41-facet case: there the
sphere has 52 tets and the removed tree has 11.
"""
from __future__ import annotations

import argparse
import itertools
import random
import sys
import time

sys.path.insert(0, ".")
sys.path.insert(0, "tools")


def suspended_octahedron():
    """16-tet 3-sphere: octahedron facets joined to two suspension apexes."""
    facets = [(a, b, c) for a in (0, 1) for b in (2, 3) for c in (4, 5)]
    tets = set()
    for f in facets:
        tets.add(frozenset(f) | {6})
        tets.add(frozenset(f) | {7})
    return tets


def one_four(tets, tet, v):
    """Subdivide `tet` with the new vertex v."""
    tets.remove(tet)
    for tri in itertools.combinations(sorted(tet), 3):
        tets.add(frozenset(tri) | {v})


def start_sphere(rng):
    tets = suspended_octahedron()
    one_four(tets, rng.choice(sorted(tets, key=sorted)), 8)
    one_four(tets, rng.choice(sorted(tets, key=sorted)), 9)
    return tets


def tri_map(tets):
    m = {}
    for t in tets:
        for tri in itertools.combinations(sorted(t), 3):
            m.setdefault(frozenset(tri), []).append(t)
    return m


def edge_map(tets):
    m = {}
    for t in tets:
        for e in itertools.combinations(sorted(t), 2):
            m.setdefault(frozenset(e), set()).add(t)
    return m


def check_sphere(tets, n_vertices):
    """Cheap manifold sanity: triangle degrees, edge links, Euler count."""
    tm = tri_map(tets)
    assert all(len(v) == 2 for v in tm.values()), "triangle not in 2 tets"
    em = edge_map(tets)
    for e, ts in em.items():
        # link of the edge must be a single cycle through its apexes
        apexes = {}
        for t in ts:
            a, b = sorted(t - e)
            apexes.setdefault(a, set()).add(b)
            apexes.setdefault(b, set()).add(a)
        assert all(len(nb) == 2 for nb in apexes.values()), "edge link not a cycle"
        seen = {min(apexes)}
        cur, prev = min(apexes), None
        while True:
            nxts = [x for x in apexes[cur] if x != prev]
            if not nxts:
                break
            prev, cur = cur, nxts[0]
            if cur in seen:
                break
            seen.add(cur)
        assert len(seen) == len(apexes), "edge link disconnected"
    verts = set().union(*tets)
    assert len(verts) == n_vertices, "lost a vertex"
    f0, f1, f2, f3 = len(verts), len(em), len(tm), len(tets)
    assert f0 - f1 + f2 - f3 == 0, "Euler characteristic broke"


def flip_23(tets, tm, em, tri, rng):
    """Replace the two tets over `tri` by three around the new edge."""
    t1, t2 = tm[tri]
    (d,) = t1 - tri
    (e,) = t2 - tri
    if frozenset((d, e)) in em:
        return False
    tets.remove(t1)
    tets.remove(t2)
    for pair in itertools.combinations(sorted(tri), 2):
        tets.add(frozenset(pair) | {d, e})
    return True


def flip_32(tets, tm, em, edge):
    """Replace the three tets around `edge` by two over its apex triangle."""
    ts = em[edge]
    if len(ts) != 3:
        return False
    apex = set()
    for t in ts:
        apex |= t - edge
    if len(apex) != 3:
        return False
    tri = frozenset(apex)
    if tri in tm:
        return False
    for t in ts:
        tets.remove(t)
    d, e = sorted(edge)
    tets.add(tri | {d})
    tets.add(tri | {e})
    return True


def random_flip(tets, target, rng):
    """One random valid flip, drifting the facet count toward `target`."""
    tm = tri_map(tets)
    em = edge_map(tets)
    n = len(tets)
    grow = rng.random() < (0.75 if n < target else 0.25)
    if grow:
        tris = sorted(tm, key=sorted)
        rng.shuffle(tris)
        for tri in tris:
            if flip_23(tets, tm, em, tri, rng):
                return True
    edges = sorted((e for e, ts in em.items() if len(ts) == 3), key=sorted)
    rng.shuffle(edges)
    for edge in edges:
        if flip_32(tets, tm, em, edge):
            return True
    # fall back to the other direction rather than stall
    tris = sorted(tm, key=sorted)
    rng.shuffle(tris)
    for tri in tris:
        if flip_23(tets, tm, em, tri, rng):
            return True
    return False


def grow_tree(tets, tm, size, rng):
    """A stacked tree of `size` tets glued along single triangles, apexes new.

    Returns the tree as a set of tets, or None when the growth jams.
    """
    order = sorted(tets, key=sorted)
    start = order[rng.randrange(len(order))]
    tree = {start}
    verts = set(start)
    while len(tree) < size:
        cands = []
        for t in tree:
            for tri in itertools.combinations(sorted(t), 3):
                a, b = tm[frozenset(tri)]
                nxt = b if a == t else a
                if nxt in tree:
                    continue
                (apex,) = nxt - frozenset(tri)
                if apex in verts:
                    continue
                cands.append(nxt)
        if not cands:
            return None
        cands.sort(key=sorted)
        pick = cands[rng.randrange(len(cands))]
        tree.add(pick)
        verts |= pick
    return tree


def complement_qualify(tets, tree, n_vertices, target):
    """Screen the complement ball; returns (cx, report) on full success."""
    from mincm.cohen_macaulay import free_facet
    from mincm.complexes import SimplicialComplex

    rest = [sorted(v + 1 for v in t) for t in tets - tree]
    cx = SimplicialComplex.from_facets(rest)
    if cx.n != n_vertices:
        return None, False
    if free_facet(cx) is not None:
        return None, False
    from find_ball_fillings import qualify
    rep = qualify(cx, target)
    if rep:
        return cx, rep
    return None, True  # survived the free-facet screen at least


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--vertices", type=int, default=10)
    ap.add_argument("--ball-facets", type=int, default=21)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--rounds", type=int, default=2000)
    ap.add_argument("--flips-per-round", type=int, default=12)
    ap.add_argument("--trees-per-round", type=int, default=60)
    ap.add_argument("--out", default=None)
    ap.add_argument("--check-every", type=int, default=200)
    args = ap.parse_args()

    n_vertices = args.vertices
    target = args.ball_facets
    # boundary sphere through all vertices has 2n-4 triangles; the removed
    # tree needs n-4 fresh apexes beyond its first tet, hence n-7+4... the
    # tree size and sphere size follow from the face counts:
    tree_size = n_vertices - 3
    sphere_size = target + tree_size

    rng = random.Random(f"sphere-walk-{args.seed}")
    tets = start_sphere(rng)
    if n_vertices != 10:
        nxt = 10
        while nxt < n_vertices:
            one_four(tets, rng.choice(sorted(tets, key=sorted)), nxt)
            nxt += 1
    check_sphere(tets, n_vertices)

    t0 = time.time()
    screened = tried = 0
    for rnd in range(args.rounds):
        for _ in range(args.flips_per_round):
            random_flip(tets, sphere_size, rng)
        if args.check_every and rnd % args.check_every == 0:
            check_sphere(tets, n_vertices)
        if len(tets) != sphere_size:
            continue
        tm = tri_map(tets)
        for _ in range(args.trees_per_round):
            tree = grow_tree(tets, tm, tree_size, rng)
            if tree is None:
                continue
            if len(set().union(*tree)) != n_vertices:
                continue
            tried += 1
            cx, rep = complement_qualify(tets, tree, n_vertices, target)
            if rep is True:
                screened += 1
            if cx is not None:
                print(f"HIT after {tried} trees / {rnd} rounds "
                      f"[{time.time()-t0:.0f}s]", flush=True)
                print("  properties:", rep, flush=True)
                print("  facets:", cx.facet_labels(), flush=True)
                if args.out:
                    with open(args.out, "w") as fh:
                        fh.write(f"# sphere walk seed {args.seed}, "
                                 f"round {rnd}\n")
                        fh.write(f"# sphere: {sorted(sorted(t) for t in tets)}\n")
                        fh.write(f"# tree: {sorted(sorted(t) for t in tree)}\n")
                        for f in cx.facet_labels():
                            fh.write(" ".join(str(v) for v in f) + "\n")
                    print(f"  wrote {args.out}", flush=True)
                return 0
        if rnd and rnd % 100 == 0:
            print(f"round {rnd}: {tried} trees tried, {screened} passed "
                  f"free-facet screen [{time.time()-t0:.0f}s]", flush=True)
    print(f"no hit: {tried} trees, {screened} screened "
          f"[{time.time()-t0:.0f}s]", flush=True)
    return 1


if __name__ == "__main__":
    sys.exit(main())
