#!/usr/bin/env python3
"""Sweep hull-point configurations for fat non-shellable ball fillings.

Places 4 corners plus 6 extra points on the hull boundary: in face
interiors, on hull edges, or both.  For each configuration the tool
enumerates empty tetrahedra, discards tets that cut through a hull-edge
subsegment without containing it (each consecutive pair of points along a
hull edge is an edge of every face-to-face filling), discards tets that
would be free facets in *any* filling containing them (see
is_always_free), and runs the advancing-front search for fillings with the
target facet count.  A completed filling therefore has no free facet by
construction.  Qualifying fillings (ball necessary conditions,
Cohen-Macaulay and brute-force minimal over Q) are written out.

Usage:
    python3 tools/sweep_balls.py --target 21 --out /tmp/hit.txt
    python3 tools/sweep_balls.py --target 21 --family edge --count 400
"""
from __future__ import annotations

import argparse
import itertools
import sys
import time
from fractions import Fraction as Fr
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from find_ball_fillings import (CORNERS, FACES, Tet, admissible_tets,
                                LazyCompat, complex_of, det3,
                                find_fillings, hull_memberships, orient,
                                qualify, sub, vol6)

# ---------------------------------------------------------------------------
# configurations: weights per face, applied to the corners in FACES order

PAIR_MOTIFS = {
    "corner01": ((4, 1, 1), (1, 4, 1)),
    "corner02": ((4, 1, 1), (1, 1, 4)),
    "corner12": ((1, 4, 1), (1, 1, 4)),
    "skew_a": ((4, 2, 1), (1, 2, 4)),
    "skew_b": ((2, 4, 1), (1, 4, 2)),
    "skew_c": ((4, 1, 2), (2, 1, 4)),
    "spiral_a": ((1, 4, 2), (2, 1, 4)),
    "spiral_b": ((2, 4, 1), (4, 1, 2)),
    "tight": ((6, 1, 1), (1, 6, 1)),
    "asym": ((9, 3, 1), (1, 3, 9)),
}

SINGLE_MOTIFS = {
    "center": (1, 1, 1),
    "c0": (4, 1, 1),
    "c1": (1, 4, 1),
    "c2": (1, 1, 4),
    "s0": (1, 2, 4),
    "s1": (4, 1, 2),
    "s2": (2, 4, 1),
    "r0": (1, 4, 2),
    "r1": (2, 1, 4),
    "r2": (4, 2, 1),
}

TRIPLE_MOTIFS = {
    "corners": ((4, 1, 1), (1, 4, 1), (1, 1, 4)),
    "spiral": ((1, 2, 4), (4, 1, 2), (2, 4, 1)),
    "spiral_r": ((4, 2, 1), (1, 4, 2), (2, 1, 4)),
    "mixed": ((6, 1, 1), (1, 3, 2), (1, 2, 3)),
}

SPIRAL_BASES = (
    (4, 2, 1), (3, 2, 1), (5, 2, 1), (6, 2, 1), (7, 2, 1), (8, 2, 1),
    (5, 3, 1), (6, 3, 1), (7, 3, 1), (8, 3, 1), (5, 4, 1), (7, 4, 1),
    (9, 4, 1), (4, 3, 2), (5, 3, 2), (7, 5, 2),
)


def _rot(w):
    return (w[2], w[0], w[1])


def configs_spiral(bases):
    """Rotational pairs of a base weight on the double faces.

    The two points on each double face are two distinct cyclic rotations of
    the base triple (choice named 01/02/12); the single faces carry one
    rotation (0, 1, or 2) of the same base.
    """
    pair_choices = {"01": (0, 1), "02": (0, 2), "12": (1, 2)}
    for w in bases:
        rots = (w, _rot(w), _rot(_rot(w)))
        for pname, (i, j) in pair_choices.items():
            pair = (rots[i], rots[j])
            for k in range(3):
                name = f"spiral/{'-'.join(map(str, w))}/{pname}/r{k}"
                yield name, (pair, pair, (rots[k],), (rots[k],))


def face_point(face, weights):
    i, j, k = face
    s = Fr(sum(weights))
    return tuple((weights[0] * CORNERS[i][c] + weights[1] * CORNERS[j][c]
                  + weights[2] * CORNERS[k][c]) / s for c in range(3))


def faces_config(per_face_weights):
    """Corners 0-3, then the face points of FACES[0], FACES[1], ... in order."""
    pts = list(CORNERS)
    for f, plist in enumerate(per_face_weights):
        for w in plist:
            pts.append(face_point(FACES[f], w))
    return scale_to_integers(pts)


def scale_to_integers(pts):
    """Clear denominators; integer coordinates make the exact predicates fast."""
    from math import lcm
    denom = lcm(*(f.denominator for p in pts for f in p))
    return [tuple(int(f * denom) for f in p) for p in pts]


def configs_2211(pair_names, single_names):
    for pn in pair_names:
        for sn in single_names:
            name = f"2211/{pn}/{sn}"
            yield name, (PAIR_MOTIFS[pn], PAIR_MOTIFS[pn],
                         (SINGLE_MOTIFS[sn],), (SINGLE_MOTIFS[sn],))


def configs_3111(triple_names, single_names):
    for tn in triple_names:
        for sn in single_names:
            name = f"3111/{tn}/{sn}"
            yield name, (TRIPLE_MOTIFS[tn],
                         (SINGLE_MOTIFS[sn],), (SINGLE_MOTIFS[sn],),
                         (SINGLE_MOTIFS[sn],))


# ---------------------------------------------------------------------------
# hull-edge respecting filter

HULL_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))


def edge_point(edge, t):
    i, j = HULL_EDGES[edge]
    return tuple(CORNERS[i][c] + t * (CORNERS[j][c] - CORNERS[i][c])
                 for c in range(3))


def edges_config(edge_pts, per_face_weights):
    """Corners 0-3, then edge points, then face points, in listed order."""
    pts = list(CORNERS)
    for e, t in edge_pts:
        pts.append(edge_point(e, t))
    for f, plist in enumerate(per_face_weights):
        for w in plist:
            pts.append(face_point(FACES[f], w))
    return scale_to_integers(pts)


def edge_chains(points, mem):
    """Per hull edge, the chain of point indices along it, endpoint-sorted."""
    chains = []
    for i, j in HULL_EDGES:
        adj = frozenset(f for f, face in enumerate(FACES)
                        if i in face and j in face)
        mids = [v for v in range(4, len(points)) if mem[v] == adj]
        d = sub(points[j], points[i])
        axis = max(range(3), key=lambda c: abs(d[c]))
        mids.sort(key=lambda v: Fr(points[v][axis] - points[i][axis], d[axis]))
        chains.append([i] + mids + [j])
    return chains


def hull_edge_segments(chains):
    return [(ch[k], ch[k + 1]) for ch in chains for k in range(len(ch) - 1)]


def hull_data_convex(points):
    """(membership, hull volume x6, hull edges) for convex-position configs.

    The hull must be simplicial with every point a vertex; returns None
    otherwise (some point interior, on a facet or edge, or a coplanar hull
    quadruple).  Membership maps each point to its set of hull facets, so
    the same downstream logic works as for the big-tetrahedron families:
    a triangle is boundary exactly when its vertices share a hull facet
    (they are then that facet), and two points span a boundary segment
    exactly when they share one.
    """
    n = len(points)
    facets = []
    for tri in itertools.combinations(range(n), 3):
        a, b, c = tri
        pos = neg = zero = 0
        for v in range(n):
            if v in tri:
                continue
            s = orient(points[a], points[b], points[c], points[v])
            if s > 0:
                pos += 1
            elif s < 0:
                neg += 1
            else:
                zero += 1
        if pos and neg:
            continue
        if zero:
            return None  # supporting plane with 4+ points: not simplicial
        facets.append(tri)
    if len(facets) != 2 * n - 4:
        return None
    if len({v for f in facets for v in f}) != n:
        return None
    mem = [frozenset(fi for fi, f in enumerate(facets) if v in f)
           for v in range(n)]
    g = tuple(Fr(sum(p[c] for p in points), n) for c in range(3))
    vol = sum(abs(vol6(points[a], points[b], points[c], g))
              for a, b, c in facets)
    edges = sorted({tuple(sorted(e)) for f in facets
                    for e in itertools.combinations(f, 2)})
    return mem, vol, edges


def _interval_in_tet(p, q, tet):
    """Parameter interval of segment pq inside the closed tet, or None."""
    lo, hi = Fr(0), Fr(1)
    for a, b, c in tet.faces:
        u, v = sub(b, a), sub(c, a)
        dp = det3(u, v, sub(p, a))
        dq = det3(u, v, sub(q, a))
        if dp == dq:
            if dp < 0:
                return None
            continue
        troot = Fr(dp, dp - dq)
        if dq > dp:
            lo = max(lo, troot)
        else:
            hi = min(hi, troot)
        if lo > hi:
            return None
    return lo, hi


def respects_hull_edges(tet, points, segments):
    """Reject tets meeting the open part of a forced hull-edge subsegment."""
    idx = set(tet.idx)
    for a, b in segments:
        if {a, b} <= idx:
            continue
        iv = _interval_in_tet(points[a], points[b], tet)
        if iv is None:
            continue
        lo, hi = iv
        if lo < hi or (lo == hi and 0 < lo < 1):
            return False
    return True


# ---------------------------------------------------------------------------
# interior-segment conflict analysis

def _solve2(rows):
    """Solve an overdetermined 3x2 rational system; None if inconsistent."""
    rows = [r[:] for r in rows]
    piv = []
    r = 0
    for col in range(2):
        k = next((i for i in range(r, 3) if rows[i][col] != 0), None)
        if k is None:
            continue
        rows[r], rows[k] = rows[k], rows[r]
        pr = rows[r]
        for i in range(3):
            if i != r and rows[i][col] != 0:
                f = Fr(rows[i][col], pr[col]) if isinstance(pr[col], int) \
                    else rows[i][col] / pr[col]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        piv.append((r, col))
        r += 1
    for i in range(r, 3):
        if rows[i][2] != 0:
            return None
    sol = [None, None]
    for rr, col in piv:
        sol[col] = Fr(rows[rr][2], rows[rr][col]) if isinstance(rows[rr][col], int) \
            else rows[rr][2] / rows[rr][col]
    return sol


def segments_conflict(p, q, r, s):
    """True iff segments pq and rs meet outside a shared endpoint."""
    d1, d2, rhs = sub(q, p), sub(s, r), sub(r, p)
    cross = (d1[1] * d2[2] - d1[2] * d2[1], d1[2] * d2[0] - d1[0] * d2[2],
             d1[0] * d2[1] - d1[1] * d2[0])
    if any(cross):
        # lines are not parallel: unique candidate intersection
        sol = _solve2([[d1[c], -d2[c], rhs[c]] for c in range(3)])
        if sol is None or sol[0] is None or sol[1] is None:
            return False
        a, b = sol
        if a < 0 or a > 1 or b < 0 or b > 1:
            return False
        if (a == 0 or a == 1) and (b == 0 or b == 1):
            return False  # they meet exactly at a shared endpoint
        return True
    # parallel: conflict only when collinear with interval overlap
    c2 = (d1[1] * rhs[2] - d1[2] * rhs[1], d1[2] * rhs[0] - d1[0] * rhs[2],
          d1[0] * rhs[1] - d1[1] * rhs[0])
    if any(c2):
        return False
    axis = next(c for c in range(3) if d1[c] != 0)
    t_r = Fr(rhs[axis], d1[axis])
    t_s = Fr(s[axis] - p[axis], d1[axis])
    lo, hi = min(t_r, t_s), max(t_r, t_s)
    return lo < 1 and hi > 0 and not (lo == hi and (lo == 0 or lo == 1))


def interior_segments(points, mem):
    return [(a, b) for a, b in itertools.combinations(range(len(points)), 2)
            if not (mem[a] & mem[b])]


def max_noncrossing(points, segs):
    """Max pairwise-nonconflicting subset size, by branch and bound."""
    n = len(segs)
    ok = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            a, b = segs[i], segs[j]
            if not segments_conflict(points[a[0]], points[a[1]],
                                     points[b[0]], points[b[1]]):
                ok[i] |= 1 << j
                ok[j] |= 1 << i
    best = 0

    def bb(cand, size):
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if cand == 0:
            best = max(best, size)
            return
        v = (cand & -cand).bit_length() - 1
        bb(cand & ok[v] & ~((1 << (v + 1)) - 1), size + 1)
        bb(cand & ~(1 << v), size)

    bb((1 << n) - 1, 0)
    return best


# ---------------------------------------------------------------------------
# driver

def free_facets_of(cx):
    """All free facets (mirrors the library predicate, listing every one)."""
    from mincm.complexes import canonicalize_masks
    d = cx.dim + 1
    br = cx.boundary_ridge_masks()
    out = []
    for f in cx.facets:
        inside = [r for r in br if r & f == r]
        if not (1 <= len(inside) <= d - 1):
            continue
        contact = canonicalize_masks([f & r for r in br])[0]
        if all(c.bit_count() == d - 1 for c in contact):
            out.append(cx.face_labels(f))
    return out


def is_always_free(tet, mem):
    """Tets that are free facets in every filling containing them.

    For configurations with every point on the hull boundary, a triangle of
    a tet lies in the filling's boundary sphere exactly when its three
    vertices share a hull plane (such a triangle can never be shared by two
    tets).  Let k count the in-plane triangles of the tet.  The tet is free
    exactly when its contact with the boundary complex is a pure, proper
    union of triangles, which reduces to:

    * k == 0: contact is the whole boundary of the tet, not proper; never
      free.
    * k == 1: the fourth vertex lies on the hull outside the one in-plane
      triangle, contributing a maximal contact face of dimension too low;
      never free.
    * k == 2: the two in-plane triangles hinge on a hull-edge subsegment;
      free iff the two apexes share no hull plane (then the opposite edge
      is interior and the contact is exactly the two triangles).  When the
      apexes do share a plane the opposite edge lies on a hull face and the
      contact is impure; never free.
    * k == 3: corner cut (possible only with edge points); the fourth
      triangle's edges all lie inside the in-plane ones; always free.
    """
    tris = [tri for tri in itertools.combinations(tet.idx, 3)
            if frozenset.intersection(*(mem[v] for v in tri))]
    k = len(tris)
    if k <= 1:
        return False
    if k >= 3:
        return True
    t1, t2 = map(set, tris)
    shared = t1 & t2
    (p,) = t1 - shared
    (q,) = t2 - shared
    return not (mem[p] & mem[q])


def run_config(name, points, target, node_budget, out_path, convex=False):
    if len(set(points)) != len(points):
        print(f"{name}: degenerate (coincident points)", flush=True)
        return None
    hull_vol = None
    if convex:
        hd = hull_data_convex(points)
        if hd is None:
            print(f"{name}: not simplicial convex position", flush=True)
            return None
        mem, hull_vol, segments = hd
    else:
        mem = hull_memberships(points)
        if any(not m for m in mem):
            print(f"{name}: has an interior point, unsupported", flush=True)
            return None
        chains = edge_chains(points, mem)
        segments = hull_edge_segments(chains)
    segs = interior_segments(points, mem)
    # a filling with F tets on 10 boundary vertices has F - 7 interior edges,
    # which must be pairwise non-crossing straight segments
    need = target - 7
    if len(segs) < need:
        print(f"{name}: only {len(segs)} interior segments, need {need}",
              flush=True)
        return None
    mis = max_noncrossing(points, segs)
    if mis < need:
        print(f"{name}: max non-crossing interior set {mis} < {need}, dead",
              flush=True)
        return None
    tets = admissible_tets(points)
    kept = [t for t in tets if respects_hull_edges(t, points, segments)]
    n_free = len(kept)
    kept = [t for t in kept if not is_always_free(t, mem)]
    n_free -= len(kept)
    t0 = time.time()
    compat = LazyCompat(kept, points)
    stats = {}
    hit = None
    n_fill = 0
    best_free = None
    for filling in find_fillings(points, kept, target=target,
                                 node_budget=node_budget, max_fillings=400,
                                 seed=tuple(segments[0]), stats=stats,
                                 compat=compat, membership=mem,
                                 hull_vol=hull_vol):
        n_fill += 1
        cx = complex_of(filling)
        frees = free_facets_of(cx)
        if best_free is None or len(frees) < best_free:
            best_free = len(frees)
        if frees:
            continue
        rep = qualify(cx, target)
        if rep:
            hit = (cx, rep)
            break
    dt = time.time() - t0
    print(f"{name}: {len(tets)} tets ({len(kept)} kept, {n_free} always-free), "
          f"maxIS {mis}/{len(segs)}, depth<={stats.get('max_depth', 0)}, "
          f"{stats.get('completions', 0)} tilings/{n_fill} validated, "
          f"min free facets {best_free}, "
          f"{stats.get('nodes', 0)} nodes"
          f"{' (exhausted)' if stats.get('exhausted') else ''}, "
          f"{'HIT' if hit else 'no hit'} "
          f"[{dt:.1f}s, {compat.rows_built}/{len(kept)} compat rows]",
          flush=True)
    if hit:
        cx, rep = hit
        print("  properties:", rep, flush=True)
        print("  facets:", cx.facet_labels(), flush=True)
        if out_path:
            with open(out_path, "w") as fh:
                fh.write(f"# configuration: {name}\n")
                fh.write(f"# points: {points}\n")
                for f in cx.facet_labels():
                    fh.write(" ".join(str(v) for v in f) + "\n")
            print(f"  wrote {out_path}", flush=True)
    return hit


def _random_weight(rng):
    """Interior barycentric weight triple with small integer entries."""
    total = rng.randint(5, 13)
    a = rng.randint(1, total - 2)
    b = rng.randint(1, total - 1 - a)
    return (a, b, total - a - b)


def configs_random(count, seed, dists):
    import random
    rng = random.Random(f"ball-search-{seed}")
    for i in range(count):
        dist = dists[rng.randrange(len(dists))]
        pfw = tuple(tuple(_random_weight(rng) for _ in range(k))
                    for k in dist)
        tag = "".join(str(k) for k in dist)
        yield f"random/{seed}/{i}/{tag}", faces_config(pfw)


def configs_random_edge(count, seed):
    """Random configurations mixing hull-edge points with face points."""
    import random
    rng = random.Random(f"ball-search-edge-{seed}")
    for i in range(count):
        n_edge = rng.choice((1, 1, 2, 2, 2, 2, 3, 3))
        edges = sorted(rng.sample(range(6), n_edge))
        edge_pts = []
        for e in edges:
            den = rng.randint(3, 9)
            edge_pts.append((e, Fr(rng.randint(1, den - 1), den)))
        faces = [0, 0, 0, 0]
        for _ in range(6 - n_edge):
            faces[rng.randrange(4)] += 1
        pfw = tuple(tuple(_random_weight(rng) for _ in range(k))
                    for k in faces)
        tag = (f"e{''.join(str(e) for e in edges)}"
               f"f{''.join(str(k) for k in faces)}")
        yield f"edge/{seed}/{i}/{tag}", edges_config(tuple(edge_pts), pfw)


def configs_opposite(count, seed):
    """Edge points on one opposite edge pair plus one point per face.

    Interior-capable pairs: the two edge points with each other, each face
    point with its opposite corner and with the other face points, and each
    edge point with the two face points whose faces miss its edge — 15 in
    all, against the 14 interior edges a 21-tet filling needs.  Every hull
    edge or segment also keeps fan middles off its two planes, so no roof
    tet is forced.
    """
    import random
    rng = random.Random(f"ball-search-opposite-{seed}")
    for i in range(count):
        pts = []
        for e in (0, 5):  # edges (0,1) and (2,3)
            den = rng.randint(3, 9)
            pts.append((e, Fr(rng.randint(1, den - 1), den)))
        pfw = tuple((_random_weight(rng),) for _ in range(4))
        t_tag = "_".join(f"{t.numerator}d{t.denominator}" for _, t in pts)
        yield f"opp/{seed}/{i}/t{t_tag}", edges_config(tuple(pts), pfw)


def configs_e1f5(count, seed):
    """One edge point plus five face points weighted toward its two fans.

    The edge point on (0,1) leaves both its segments needing multi-tet
    fans, whose middles live on faces 0 and 1; those faces get two points
    each (shape 2-2-1-0) or three and two (3-2-0-0).
    """
    import random
    rng = random.Random(f"ball-search-e1f5-{seed}")
    for i in range(count):
        den = rng.randint(3, 9)
        t = Fr(rng.randint(1, den - 1), den)
        shape = rng.choice(((2, 2, 1, 0), (2, 2, 0, 1), (3, 2, 0, 0),
                            (2, 3, 0, 0), (2, 2, 1, 0), (2, 2, 0, 1)))
        pfw = tuple(tuple(_random_weight(rng) for _ in range(k))
                    for k in shape)
        tag = "".join(str(k) for k in shape)
        yield (f"e1f5/{seed}/{i}/t{t.numerator}d{t.denominator}f{tag}",
               edges_config(((0, t),), pfw))


def configs_random_convex(count, seed, radius=30):
    """Random integer points in convex position (rejection sampled shell)."""
    import random
    rng = random.Random(f"ball-search-convex-{seed}")
    lo2, hi2 = (radius * 2 // 3) ** 2, radius ** 2
    made = 0
    while made < count:
        pts = []
        guard = 0
        while len(pts) < 10 and guard < 4000:
            guard += 1
            p = tuple(rng.randint(-radius, radius) for _ in range(3))
            if lo2 <= sum(c * c for c in p) <= hi2 and p not in pts:
                pts.append(p)
        if len(pts) < 10:
            continue
        made += 1
        yield f"convex/{seed}/{made}", pts


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--target", type=int, default=21)
    ap.add_argument("--family", choices=["2211", "3111", "both", "spiral",
                                         "random", "edge", "convex",
                                         "opposite", "e1f5"],
                    default="both")
    ap.add_argument("--node-budget", type=int, default=80_000)
    ap.add_argument("--out", default=None)
    ap.add_argument("--pairs", default=None, help="comma list of pair motifs")
    ap.add_argument("--singles", default=None, help="comma list of single motifs")
    ap.add_argument("--count", type=int, default=200, help="random family size")
    ap.add_argument("--seed", type=int, default=1, help="random family seed")
    args = ap.parse_args()

    pairs = args.pairs.split(",") if args.pairs else list(PAIR_MOTIFS)
    singles = args.singles.split(",") if args.singles else list(SINGLE_MOTIFS)

    jobs = []
    if args.family in ("2211", "both"):
        jobs.extend((n, faces_config(w)) for n, w in configs_2211(pairs, singles))
    if args.family in ("3111", "both"):
        jobs.extend((n, faces_config(w))
                    for n, w in configs_3111(list(TRIPLE_MOTIFS), singles))
    if args.family == "spiral":
        jobs.extend((n, faces_config(w)) for n, w in configs_spiral(SPIRAL_BASES))
    if args.family == "random":
        jobs.extend(configs_random(args.count, args.seed,
                                   ((2, 2, 1, 1), (3, 1, 1, 1), (2, 2, 2, 0),
                                    (3, 2, 1, 0), (4, 1, 1, 0))))
    if args.family == "edge":
        jobs.extend(configs_random_edge(args.count, args.seed))
    if args.family == "opposite":
        jobs.extend(configs_opposite(args.count, args.seed))
    if args.family == "e1f5":
        jobs.extend(configs_e1f5(args.count, args.seed))
    if args.family == "convex":
        jobs.extend(configs_random_convex(args.count, args.seed))

    print(f"{len(jobs)} configurations, target {args.target}", flush=True)
    for name, points in jobs:
        hit = run_config(name, points, args.target, args.node_budget,
                         args.out, convex=args.family == "convex")
        if hit:
            return 0
    return 1


if __name__ == "__main__":
    sys.exit(main())
