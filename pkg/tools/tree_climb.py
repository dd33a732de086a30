"""Hill-climbing tree extraction over a flip walk of 3-spheres.

Complement balls of stacked trees (see sphere_walk) have a crisp local
description of their free facets: a complement tet is free exactly when
it shares two triangles with the tree and its opposite edge is not a
tree edge, or shares three.  That count is a few dict lookups per tet,
so trees can be optimized by leaf moves against the exact objective
instead of sampled blindly.  Zero-objective trees get the full library
screen (free facets recomputed independently, then the ball/CM/minimal
battery).
"""
from __future__ import annotations

import argparse
import itertools
import random
import sys
import time

sys.path.insert(0, ".")
sys.path.insert(0, "tools")

from sphere_walk import (check_sphere, one_four, random_flip, start_sphere,
                         tri_map)


def tree_is_valid(tree):
    """Stacked tree over all 10 (or n) vertices: counts pin the shape."""
    verts = set().union(*tree)
    edges = set()
    tris = set()
    dual = 0
    tl = sorted(tree, key=sorted)
    for i, t in enumerate(tl):
        st = sorted(t)
        edges.update(frozenset(e) for e in itertools.combinations(st, 2))
        tris.update(frozenset(x) for x in itertools.combinations(st, 3))
        for u in tl[i + 1:]:
            if len(t & u) == 3:
                dual += 1
    k = len(tree)
    return (len(verts) == k + 3 and dual == k - 1
            and len(edges) == 6 + 3 * (k - 1)
            and len(tris) == 4 * k - 2 * (k - 1))


def tree_edge_set(tree):
    out = set()
    for t in tree:
        out.update(frozenset(e) for e in itertools.combinations(sorted(t), 2))
    return out


def free_tets_of_complement(tets, tree, tm):
    """Complement tets that are free facets, by the two-triangle rule."""
    tredges = tree_edge_set(tree)
    contact = {}
    for t in tree:
        for tri in itertools.combinations(sorted(t), 3):
            a, b = tm[frozenset(tri)]
            nb = b if a == t else a
            if nb in tree:
                continue
            contact.setdefault(nb, []).append(frozenset(tri))
    frees = []
    for nb, tris in contact.items():
        if len(tris) == 3:
            frees.append(nb)
        elif len(tris) == 2:
            opp = nb - (tris[0] & tris[1])
            if frozenset(opp) not in tredges:
                frees.append(nb)
        elif len(tris) == 4:
            frees.append(nb)  # would disconnect the complement; never good
    return frees


def neighbors_outside(tree, tm):
    """(tree tet, triangle, outside neighbor) adjacencies."""
    out = []
    for t in tree:
        for tri in itertools.combinations(sorted(t), 3):
            a, b = tm[frozenset(tri)]
            nb = b if a == t else a
            if nb not in tree:
                out.append((t, frozenset(tri), nb))
    return out


def dual_leaves(tree):
    leaves = []
    for t in tree:
        deg = sum(1 for u in tree if u != t and len(t & u) == 3)
        if deg == 1:
            leaves.append(t)
    return leaves


def random_tree(tets, tm, size, rng):
    order = sorted(tets, key=sorted)
    for _ in range(40):
        start = order[rng.randrange(len(order))]
        tree = {start}
        verts = set(start)
        ok = True
        while len(tree) < size:
            cands = []
            for t, tri, nb in neighbors_outside(tree, tm):
                (apex,) = nb - tri
                if apex not in verts:
                    cands.append(nb)
            if not cands:
                ok = False
                break
            cands.sort(key=sorted)
            pick = cands[rng.randrange(len(cands))]
            tree.add(pick)
            verts |= pick
        if ok and tree_is_valid(tree):
            return tree
    return None


def climb(tets, tm, tree, rng, sideways=40):
    """Leaf moves minimizing the free count; returns (tree, score)."""
    score = len(free_tets_of_complement(tets, tree, tm))
    stuck = 0
    while score > 0 and stuck < sideways:
        moved = False
        leaves = dual_leaves(tree)
        rng.shuffle(leaves)
        for leaf in leaves:
            rest = tree - {leaf}
            adds = set()
            for t, tri, nb in neighbors_outside(rest, tm):
                if nb != leaf and tree_is_valid(rest | {nb}):
                    adds.add(nb)
            adds = sorted(adds, key=sorted)
            rng.shuffle(adds)
            for nb in adds:
                cand = rest | {nb}
                s = len(free_tets_of_complement(tets, cand, tm))
                if s < score or (s == score and rng.random() < 0.4):
                    stuck = stuck + 1 if s == score else 0
                    tree, score = cand, s
                    moved = True
                    break
            if moved:
                break
        if not moved:
            break
    return tree, score


def verify_and_qualify(tets, tree, n_vertices, target):
    from mincm.cohen_macaulay import free_facet
    from mincm.complexes import SimplicialComplex
    from find_ball_fillings import qualify

    rest = [sorted(v + 1 for v in t) for t in tets - tree]
    cx = SimplicialComplex.from_facets(rest)
    assert cx.n == n_vertices
    assert free_facet(cx) is None, "fast rule disagreed with the library"
    return cx, qualify(cx, target)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--vertices", type=int, default=10)
    ap.add_argument("--ball-facets", type=int, default=21)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--rounds", type=int, default=100000)
    ap.add_argument("--flips-per-round", type=int, default=10)
    ap.add_argument("--climbs-per-round", type=int, default=12)
    ap.add_argument("--out", default=None)
    args = ap.parse_args()

    n_vertices = args.vertices
    target = args.ball_facets
    tree_size = n_vertices - 3
    sphere_size = target + tree_size

    rng = random.Random(f"tree-climb-{args.seed}")
    tets = start_sphere(rng)
    nxt = 10
    while nxt < n_vertices:
        one_four(tets, rng.choice(sorted(tets, key=sorted)), nxt)
        nxt += 1
    check_sphere(tets, n_vertices)

    t0 = time.time()
    climbed = 0
    zero = 0
    best = 99
    for rnd in range(args.rounds):
        for _ in range(args.flips_per_round):
            random_flip(tets, sphere_size, rng)
        if len(tets) != sphere_size:
            continue
        if rnd % 500 == 0:
            check_sphere(tets, n_vertices)
        tm = tri_map(tets)
        for _ in range(args.climbs_per_round):
            tree = random_tree(tets, tm, tree_size, rng)
            if tree is None:
                continue
            tree, score = climb(tets, tm, tree, rng)
            climbed += 1
            best = min(best, score)
            if score == 0:
                zero += 1
                cx, rep = verify_and_qualify(tets, tree, n_vertices, target)
                if rep:
                    print(f"HIT at round {rnd} after {climbed} climbs "
                          f"[{time.time()-t0:.0f}s]", flush=True)
                    print("  properties:", rep, flush=True)
                    print("  facets:", cx.facet_labels(), flush=True)
                    if args.out:
                        with open(args.out, "w") as fh:
                            fh.write(f"# tree climb seed {args.seed}, "
                                     f"round {rnd}\n")
                            fh.write("# sphere: "
                                     f"{sorted(sorted(t) for t in tets)}\n")
                            fh.write("# tree: "
                                     f"{sorted(sorted(t) for t in tree)}\n")
                            for f in cx.facet_labels():
                                fh.write(" ".join(str(v) for v in f) + "\n")
                        print(f"  wrote {args.out}", flush=True)
                    return 0
        if rnd and rnd % 50 == 0:
            print(f"round {rnd}: {climbed} climbs, best score {best}, "
                  f"{zero} zero-free complements "
                  f"[{time.time()-t0:.0f}s]", flush=True)
    print(f"no qualifying ball: {climbed} climbs, best {best}, {zero} "
          f"zero-free [{time.time()-t0:.0f}s]", flush=True)
    return 1


if __name__ == "__main__":
    sys.exit(main())
