#!/usr/bin/env python3
"""Exact-rational search for triangulated balls over subdivided tetrahedra.

The tool places rational points on a reference tetrahedron (corners, one
point per edge pushed toward a pattern-chosen endpoint, optionally one
point per face), enumerates the empty tetrahedra of the configuration,
and runs an advancing-front search for fillings: sets of empty tetrahedra
that tile the big tetrahedron face-to-face.  Every complete filling is
re-validated from scratch (pairwise exact intersection tests plus a total
volume identity), so accepted outputs are guaranteed straight-line
triangulations of a convex 3-ball.

Qualifying fillings (facet count, Cohen-Macaulayness, absence of free
facets, brute-force minimality) are printed and optionally written as
plain-text facet files for the catalog.

Usage examples:
    python3 tools/find_ball_fillings.py --style edge6 --t 1/4 --target 21 --scan
    python3 tools/find_ball_fillings.py --style edge6face4 --t 1/4 --target 41 --pattern 21
"""
from __future__ import annotations

import argparse
import itertools
import sys
import time
from fractions import Fraction as Fr

# ---------------------------------------------------------------------------
# exact linear algebra / predicates

def sub(a, b):
    return (a[0] - b[0], a[1] - b[1], a[2] - b[2])


def det3(u, v, w):
    return (u[0] * (v[1] * w[2] - v[2] * w[1])
            - u[1] * (v[0] * w[2] - v[2] * w[0])
            + u[2] * (v[0] * w[1] - v[1] * w[0]))


def orient(a, b, c, d):
    """Sign of the determinant |b-a, c-a, d-a|."""
    v = det3(sub(b, a), sub(c, a), sub(d, a))
    return (v > 0) - (v < 0)


def vol6(a, b, c, d):
    return abs(det3(sub(b, a), sub(c, a), sub(d, a)))


def affine_dim(points):
    """Affine dimension of a point set, exactly."""
    if not points:
        return -1
    base = points[0]
    rows = [[Fr(x) for x in sub(p, base)] for p in points[1:]]
    rank = 0
    cols = 3
    for col in range(cols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pr = rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                f = rows[i][col] / pr[col]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        rank += 1
        if rank == 3:
            break
    return rank


def in_simplex(p, verts):
    """Exact membership of p in the closed simplex spanned by verts."""
    if not verts:
        return False
    k = len(verts)
    # solve sum l_i * [v_i;1] = [p;1] with l_i >= 0
    rows = [[Fr(verts[j][c]) for j in range(k)] + [Fr(p[c])] for c in range(3)]
    rows.append([Fr(1)] * k + [Fr(1)])
    pivots = []
    r = 0
    for col in range(k):
        piv = next((i for i in range(r, 4) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pr = rows[r]
        for i in range(4):
            if i != r and rows[i][col] != 0:
                f = rows[i][col] / pr[col]
                rows[i] = [a - f * b for a, b in zip(rows[i], pr)]
        pivots.append((r, col))
        r += 1
    # inconsistent rows => p outside the affine hull
    for i in range(r, 4):
        if rows[i][k] != 0:
            return False
    lam = [Fr(0)] * k
    for rr, col in pivots:
        lam[col] = rows[rr][k] / rows[rr][col]
    # non-pivot columns take lambda 0; verify the solution and positivity
    if any(l < 0 for l in lam):
        return False
    for c in range(3):
        if sum(lam[j] * verts[j][c] for j in range(k)) != p[c]:
            return False
    return sum(lam) == 1


class Tet:
    __slots__ = ("idx", "pts", "tris", "faces")

    def __init__(self, idx, points):
        self.idx = tuple(sorted(idx))
        self.pts = tuple(points[v] for v in self.idx)
        self.tris = tuple(frozenset(self.idx) - {v} for v in self.idx)
        self.faces = None  # inward face planes, built lazily

    def build_faces(self, points):
        # each face as (a, b, c, opposite) with orient(a,b,c,opposite) > 0
        out = []
        for tri in itertools.combinations(self.idx, 3):
            (opp,) = set(self.idx) - set(tri)
            a, b, c = (points[t] for t in tri)
            d = points[opp]
            if orient(a, b, c, d) < 0:
                a, b = b, a
            out.append((a, b, c))
        self.faces = out


def inside_closed(tet, p):
    return all(orient(a, b, c, p) >= 0 for a, b, c in tet.faces)


def strictly_inside(tet, p):
    return all(orient(a, b, c, p) > 0 for a, b, c in tet.faces)


def seg_plane_point(p, q, a, b, c):
    """Intersection of segment pq with plane(a,b,c), or None."""
    u, v = sub(b, a), sub(c, a)
    nrm = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])
    dp = sum(nrm[i] * (p[i] - a[i]) for i in range(3))
    dq = sum(nrm[i] * (q[i] - a[i]) for i in range(3))
    if dp == dq:
        return None
    t = Fr(dp) / Fr(dp - dq)
    if t < 0 or t > 1:
        return None
    return tuple(p[i] + t * (q[i] - p[i]) for i in range(3))


def _seg_plane_proj(p, q, a, b, c):
    """Segment-plane intersection as (numerator triple, positive denominator).

    Integer inputs stay integer: the point is num/den, kept projective so
    downstream sign tests avoid rational arithmetic.
    """
    u, v = sub(b, a), sub(c, a)
    nrm = (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
           u[0] * v[1] - u[1] * v[0])
    dp = sum(nrm[i] * (p[i] - a[i]) for i in range(3))
    dq = sum(nrm[i] * (q[i] - a[i]) for i in range(3))
    if dp == dq:
        return None
    w = dp - dq
    if w > 0:
        if dp < 0 or dp > w:
            return None
    else:
        if dp > 0 or dp < w:
            return None
    num = tuple(p[i] * w + dp * (q[i] - p[i]) for i in range(3))
    if w < 0:
        return tuple(-x for x in num), -w
    return num, w


def _inside_proj(tet, num, den):
    """inside_closed for the projective point num/den with den > 0."""
    for a, b, c in tet.faces:
        z = tuple(num[i] - den * a[i] for i in range(3))
        if det3(sub(b, a), sub(c, a), z) < 0:
            return False
    return True


def intersection_vertices(A, B):
    """Vertices of the convex polytope A ∩ B (possibly lower-dimensional)."""
    cands = []
    for p in A.pts:
        if inside_closed(B, p):
            cands.append(p)
    for p in B.pts:
        if inside_closed(A, p):
            cands.append(p)
    seen = set()
    for X, Y in ((A, B), (B, A)):
        for p, q in itertools.combinations(X.pts, 2):
            for a, b, c in Y.faces:
                z = _seg_plane_proj(p, q, a, b, c)
                if z is None or z in seen:
                    continue
                seen.add(z)
                num, den = z
                if _inside_proj(A, num, den) and _inside_proj(B, num, den):
                    cands.append(tuple(Fr(num[i], den) for i in range(3)))
    uniq = []
    dedup = set()
    for p in cands:
        if p not in dedup:
            dedup.add(p)
            uniq.append(p)
    return uniq


def pair_compatible(A, B, points):
    """True iff closed A ∩ closed B is a common (possibly empty) face."""
    shared_idx = set(A.idx) & set(B.idx)
    if len(shared_idx) == 4:
        return False  # the same tet twice
    if len(shared_idx) == 3:
        # sharing a triangle: compatible iff strictly opposite sides of it
        a, b, c = (points[v] for v in shared_idx)
        (oa,) = set(A.idx) - shared_idx
        (ob,) = set(B.idx) - shared_idx
        return (orient(a, b, c, points[oa]) > 0) != \
               (orient(a, b, c, points[ob]) > 0)
    if any(max(min(p[c] for p in A.pts), min(p[c] for p in B.pts)) >
           min(max(p[c] for p in A.pts), max(p[c] for p in B.pts))
           for c in range(3)):
        return True  # separated bounding boxes: empty intersection
    shared = [points[v] for v in shared_idx]
    cand = intersection_vertices(A, B)
    if affine_dim(cand) == 3:
        return False
    if not shared:
        return not cand
    return all(in_simplex(p, shared) for p in cand)


def compatibility_masks(tets, points):
    """For each tet, the bitmask of tets it can share a filling with."""
    n = len(tets)
    masks = [0] * n
    for i in range(n):
        masks[i] |= 1 << i
        for j in range(i + 1, n):
            if pair_compatible(tets[i], tets[j], points):
                masks[i] |= 1 << j
                masks[j] |= 1 << i
    return masks


class LazyCompat:
    """Compatibility masks computed one row at a time, on first use.

    Searches that die early only ever ask for a handful of rows, so paying
    for the full quadratic table up front is wasted work.  Rows are cached;
    ``rows_built`` reports how many were actually materialised.
    """

    def __init__(self, tets, points):
        self.tets = tets
        self.points = points
        self._rows = {}

    def __getitem__(self, i):
        row = self._rows.get(i)
        if row is None:
            t = self.tets[i]
            row = 0
            for j, u in enumerate(self.tets):
                if j == i or pair_compatible(t, u, self.points):
                    row |= 1 << j
            self._rows[i] = row
        return row

    @property
    def rows_built(self):
        return len(self._rows)


# ---------------------------------------------------------------------------
# configurations

CORNERS = ((Fr(0), Fr(0), Fr(0)), (Fr(24), Fr(0), Fr(0)),
           (Fr(0), Fr(24), Fr(0)), (Fr(0), Fr(0), Fr(24)))
EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
FACES = ((1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2))


def lerp(a, b, t):
    return tuple(a[i] + t * (b[i] - a[i]) for i in range(3))


def build_config(style, pattern, t, facebary):
    """Points of the configuration; corners first, then edge, then face points."""
    pts = list(CORNERS)
    for k, (i, j) in enumerate(EDGES):
        a, b = CORNERS[i], CORNERS[j]
        if (pattern >> k) & 1:
            a, b = b, a
        pts.append(lerp(a, b, t))
    if style == "edge6face4":
        w = facebary
        for rot, (i, j, k) in enumerate(FACES):
            ws = w[rot % len(w)] if isinstance(w[0], tuple) else w
            p = tuple(ws[0] * CORNERS[i][c] + ws[1] * CORNERS[j][c] + ws[2] * CORNERS[k][c]
                      for c in range(3))
            pts.append(p)
    return pts


def hull_memberships(points):
    """For each point, the set of big-tetrahedron facet planes containing it."""
    out = []
    for p in points:
        planes = set()
        for f, (i, j, k) in enumerate(FACES):
            if orient(points[i], points[j], points[k], p) == 0:
                planes.add(f)
        out.append(frozenset(planes))
    return out


def admissible_tets(points):
    n = len(points)
    tets = []
    for combo in itertools.combinations(range(n), 4):
        pts = tuple(points[c] for c in combo)
        if orient(*pts) == 0:
            continue
        t = Tet(combo, points)
        t.build_faces(points)
        ok = True
        for v in range(n):
            if v in combo:
                continue
            if inside_closed(t, points[v]):
                ok = False
                break
        if ok:
            tets.append(t)
    tets.sort(key=lambda t: t.idx)
    return tets


# ---------------------------------------------------------------------------
# advancing-front filling search

def find_fillings(points, tets, target=None, node_budget=2_000_000,
                  max_fillings=64, progress=False, seed=(0, 4), stats=None,
                  compat=None, membership=None, hull_vol=None):
    """Enumerate face-to-face fillings of the convex hull of the points.

    Yields lists of Tet.  The search is exhaustive up to the node budget;
    every yielded filling has passed full pairwise validation.

    ``seed`` is a set of point indices whose spanned simplex is known to be
    a face of every valid filling (e.g. a hull edge with no configuration
    point in its relative interior); the search roots at tets containing
    it, deduplicating by forbidding earlier seed tets in later branches.
    ``stats``, if given, is filled with search counters.  ``compat``, if
    given, is the output of :func:`compatibility_masks`: the search then
    only extends pairwise-compatible partial fillings, so every completed
    tiling is face-to-face by construction.  ``membership`` maps each point
    to the set of hull facet planes containing it (default: the four big
    tetrahedron planes) and ``hull_vol`` is six times the hull volume
    (default: the big tetrahedron on points 0-3); pass both for
    configurations whose hull is not the big tetrahedron.
    """
    if membership is None:
        membership = hull_memberships(points)
    if hull_vol is None:
        hull_vol = vol6(points[0], points[1], points[2], points[3])
    vols = [vol6(*t.pts) for t in tets]
    min_vol = min(vols) if vols else 0
    max_vol = max(vols) if vols else 0
    by_tri = {}
    for ti, t in enumerate(tets):
        for tri in t.tris:
            by_tri.setdefault(tri, []).append(ti)
    for lst in by_tri.values():
        lst.sort(key=lambda ti: vols[ti])

    def tri_boundary(tri):
        return bool(frozenset.intersection(*(membership[v] for v in tri)))

    boundary_cache = {tri: tri_boundary(tri) for tri in by_tri}

    def side_of(t, tri):
        (opp,) = set(t.idx) - set(tri)
        vs = sorted(tri)
        return orient(points[vs[0]], points[vs[1]], points[vs[2]], points[opp])

    seed_set = set(seed)
    seed_tets = [ti for ti, t in enumerate(tets) if seed_set <= set(t.idx)]

    found = 0
    nodes = 0
    max_depth = 0
    completions = [0]

    def validate(chosen):
        total = sum(vol6(*tets[ti].pts) for ti in chosen)
        if total != hull_vol:
            return False
        return all(pair_compatible(tets[x], tets[y], points)
                   for x, y in itertools.combinations(chosen, 2))

    def dfs(chosen, usage, front, volsum, forbidden, allowed):
        nonlocal nodes, found, max_depth
        if found >= max_fillings or nodes >= node_budget:
            return
        nodes += 1
        if len(chosen) > max_depth:
            max_depth = len(chosen)
        if progress and nodes % 100000 == 0:
            print(f"    ... {nodes} nodes, {found} fillings", file=sys.stderr)
        if not front:
            if volsum == hull_vol and (target is None or len(chosen) == target):
                completions[0] += 1
                if validate(chosen):
                    found += 1
                    yield [tets[ti] for ti in chosen]
            return
        if target is not None:
            k = target - len(chosen)
            rem = hull_vol - volsum
            if k <= 0 or rem < k * min_vol or rem > k * max_vol:
                return
            if allowed is not None and allowed.bit_count() < target:
                return
        tri = min(front, key=lambda k: tuple(sorted(k)))
        need_side = front[tri]
        for ti in by_tri.get(tri, ()):
            if ti in forbidden or ti in chosen:
                continue
            if allowed is not None and not (allowed >> ti) & 1:
                continue
            t = tets[ti]
            if side_of(t, tri) != need_side:
                continue
            new_vol = volsum + vol6(*t.pts)
            if new_vol > hull_vol:
                continue
            ok = True
            new_front = dict(front)
            del new_front[tri]
            for tr in t.tris:
                if tr == tri:
                    continue
                cnt = usage.get(tr, 0)
                if boundary_cache[tr]:
                    if cnt:
                        ok = False
                        break
                elif cnt == 0:
                    new_front[tr] = -side_of(t, tr)
                elif cnt == 1:
                    if tr not in front or front[tr] != side_of(t, tr):
                        ok = False
                        break
                    del new_front[tr]
                else:
                    ok = False
                    break
            if not ok:
                continue
            new_usage = dict(usage)
            for tr in t.tris:
                new_usage[tr] = new_usage.get(tr, 0) + 1
            new_allowed = allowed if compat is None else allowed & compat[ti]
            yield from dfs(chosen + [ti], new_usage, new_front, new_vol,
                           forbidden, new_allowed)
            if found >= max_fillings or nodes >= node_budget:
                return

    all_mask = (1 << len(tets)) - 1
    for si, ti in enumerate(seed_tets):
        t = tets[ti]
        front = {}
        usage = {tr: 1 for tr in t.tris}
        for tr in t.tris:
            if not boundary_cache[tr]:
                front[tr] = -side_of(t, tr)
        forbidden = frozenset(seed_tets[:si])
        allowed = all_mask if compat is None else compat[ti]
        yield from dfs([ti], usage, front, vol6(*t.pts), forbidden, allowed)
        if found >= max_fillings or nodes >= node_budget:
            break
    if stats is not None:
        stats["nodes"] = nodes
        stats["found"] = found
        stats["max_depth"] = max_depth
        stats["seeds"] = len(seed_tets)
        stats["completions"] = completions[0]
        stats["exhausted"] = nodes < node_budget and found < max_fillings
    if progress:
        print(f"    search done: {nodes} nodes, {found} fillings", file=sys.stderr)


# ---------------------------------------------------------------------------
# property filtering

def complex_of(filling):
    from mincm.complexes import SimplicialComplex
    return SimplicialComplex.from_facets([[v + 1 for v in t.idx] for t in filling])


def qualify(cx, target):
    """Cheapest checks first: nearly all fillings die on the free-facet test."""
    from mincm.fields import QQ
    from mincm.cohen_macaulay import (check_ball_necessary, free_facet,
                                      is_minimal_cm)
    if len(cx.facets) != target:
        return None
    if free_facet(cx) is not None:
        return None
    if not check_ball_necessary(cx, QQ).ok:
        return None
    mr = is_minimal_cm(cx, QQ, use_fast_path=False)
    if not (mr.is_cm and mr.is_minimal):
        return None
    return {"free_facet": None, "ball_necessary": True,
            "cm": mr.is_cm, "minimal": mr.is_minimal}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--style", choices=["edge6", "edge6face4"], default="edge6")
    ap.add_argument("--t", default="1/4")
    ap.add_argument("--pattern", type=int, default=None,
                    help="edge-direction bits 0..63; default scans all")
    ap.add_argument("--facebary", default="1/2,1/4,1/4")
    ap.add_argument("--target", type=int, required=True)
    ap.add_argument("--node-budget", type=int, default=2_000_000)
    ap.add_argument("--max-fillings", type=int, default=64)
    ap.add_argument("--out", default=None, help="write the first qualifying facet list here")
    ap.add_argument("--progress", action="store_true")
    args = ap.parse_args()

    t = Fr(args.t)
    fb = tuple(Fr(x) for x in args.facebary.split(","))
    patterns = [args.pattern] if args.pattern is not None else list(range(64))

    for pat in patterns:
        points = build_config(args.style, pat, t, fb)
        if len(set(points)) != len(points):
            continue
        tets = admissible_tets(points)
        t0 = time.time()
        n_fill = 0
        hit = None
        for filling in find_fillings(points, tets, target=args.target,
                                     node_budget=args.node_budget,
                                     max_fillings=args.max_fillings,
                                     progress=args.progress):
            n_fill += 1
            cx = complex_of(filling)
            rep = qualify(cx, args.target)
            if rep:
                hit = (filling, cx, rep)
                break
        dt = time.time() - t0
        print(f"pattern {pat:2d}: {len(tets):4d} admissible tets, "
              f"{n_fill} size-{args.target} fillings, "
              f"{'HIT' if hit else 'no hit'} [{dt:.1f}s]", flush=True)
        if hit:
            filling, cx, rep = hit
            print("  properties:", rep)
            print("  facets:", cx.facet_labels())
            if args.out:
                with open(args.out, "w") as fh:
                    for f in cx.facet_labels():
                        fh.write(" ".join(str(v) for v in f) + "\n")
                print(f"  wrote {args.out}")
            return 0
    return 1


if __name__ == "__main__":
    sys.exit(main())
