"""Disk-covering primitives shared by the planar pipelines.

Contents: candidate center generation (input points, pair midpoints,
circumcenters), greedy set cover with an optional local-search polish,
disk graphs and greedy dominating sets, the frozen five-disk covering
template with a rigorous verifier, the annulus zones used by the planar
point-model pipeline, and a grouped max-coverage greedy.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Sequence

import numpy as np

from geoburn.core import TOL, Point, distance

# Five disks of this radius, centered at the template coordinates below,
# cover the closed unit disk.  The coordinates come from an offline
# numerical search (tools/five_cover_search.py); their exact covering
# radius is 0.60938322, below the 0.6094 budget the planar anywhere
# pipeline allots to them.
FIVE_COVER_RADIUS = 0.6094
FIVE_COVER_CENTERS = (
    (0.5809713457599188, -0.002224606090509505),
    (0.2514594393428493, -0.7519340712740225),
    (0.2571714386749738, 0.7498724777654208),
    (-0.5149917674686677, -0.3657246236741287),
    (-0.5134057148230263, 0.37006979368477844),
)

# Late fires in the planar point-model pipeline handle an annulus split
# into 13 equal sectors; each such fire has final radius at least 13/27
# of the guess, and a zone's diameter 2*sin(pi/13) stays safely below.
ZONE_COUNT = 13
ANNULUS_INNER_FRACTION = 26.0 / 27.0
LATE_REACH_FRACTION = 13.0 / 27.0


def circumcenter(a: Point, b: Point, c: Point) -> Point | None:
    """Circumcenter of a triangle, or None when (near-)collinear."""
    abx, aby = b.x - a.x, b.y - a.y
    acx, acy = c.x - a.x, c.y - a.y
    det = 2.0 * (abx * acy - aby * acx)
    if abs(det) < 1e-12:
        return None
    ab2 = abx * abx + aby * aby
    ac2 = acx * acx + acy * acy
    return Point(a.x + (acy * ab2 - aby * ac2) / det,
                 a.y + (abx * ac2 - acx * ab2) / det)


def candidate_centers(points: Sequence[Point], *, midpoints: bool = True,
                      circumcenters: bool = True,
                      dedup_tol: float = TOL) -> list[Point]:
    """Centers sufficient for minimum covers by equal disks.

    Any disk covering a subset Q can be recentered at the center of the
    smallest enclosing circle of Q without uncovering anything, and that
    center is an input point, a pair midpoint, or a circumcenter of a
    non-collinear triple.  Order: points, then midpoints, then
    circumcenters; near-duplicates collapse to the first seen.
    """
    out: list[Point] = []
    buckets: dict[tuple[int, int], list[int]] = {}

    def push(p: Point) -> None:
        kx, ky = round(p.x / dedup_tol), round(p.y / dedup_tol)
        for nx in (kx - 1, kx, kx + 1):
            for ny in (ky - 1, ky, ky + 1):
                for i in buckets.get((nx, ny), ()):
                    if distance(out[i], p) <= dedup_tol:
                        return
        buckets.setdefault((kx, ky), []).append(len(out))
        out.append(p)

    for p in points:
        push(p)
    if midpoints:
        for a, b in itertools.combinations(points, 2):
            push(Point((a.x + b.x) / 2.0, (a.y + b.y) / 2.0))
    if circumcenters:
        for a, b, c in itertools.combinations(points, 3):
            cc = circumcenter(a, b, c)
            if cc is not None:
                push(cc)
    return out


def coverage_mask(center: Point, radius: float, points: Sequence[Point]) -> int:
    """Bitmask of point indices within ``radius`` (+TOL) of ``center``."""
    mask = 0
    for i, p in enumerate(points):
        if distance(center, p) <= radius + TOL:
            mask |= 1 << i
    return mask


def coverage_masks(centers: Sequence[Point], radius: float,
                   points: Sequence[Point]) -> list[int]:
    """coverage_mask for many centers at once, vectorized when it pays off."""
    if len(centers) * len(points) < 20_000:
        return [coverage_mask(c, radius, points) for c in centers]
    C = np.array([(c.x, c.y) for c in centers])
    P = np.array([(p.x, p.y) for p in points])
    d2 = ((C[:, None, 0] - P[None, :, 0]) ** 2
          + (C[:, None, 1] - P[None, :, 1]) ** 2)
    hit = d2 <= (radius + TOL) ** 2
    packed = np.packbits(hit, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def disk_cover_greedy(points: Sequence[Point], radius: float,
                      candidates: Sequence[Point] | None = None) -> list[Point]:
    """Greedy cover of ``points`` by equal disks at candidate centers.

    Picks the candidate covering the most uncovered points each round
    (ties to the earlier candidate).  Raises ValueError if the candidates
    cannot cover some point.
    """
    if candidates is None:
        n = len(points)
        candidates = candidate_centers(points, midpoints=n <= 150,
                                       circumcenters=n <= 40)
    masks = coverage_masks(candidates, radius, points)
    full = (1 << len(points)) - 1
    covered = 0
    chosen: list[Point] = []
    while covered != full:
        best_gain, best_i = 0, -1
        for i, m in enumerate(masks):
            gain = (m & ~covered).bit_count()
            if gain > best_gain:
                best_gain, best_i = gain, i
        if best_i < 0:
            raise ValueError("candidate centers cannot cover every point")
        covered |= masks[best_i]
        chosen.append(candidates[best_i])
    return chosen


def disk_cover_local_search(points: Sequence[Point], radius: float,
                            chosen: Sequence[Point],
                            candidates: Sequence[Point],
                            swap_budget: int) -> list[Point]:
    """Shrink a cover by replacing j chosen disks with j-1 candidates.

    Tries swap sizes j = 2..swap_budget until no swap applies.  Effort is
    capped: oversized inputs are returned unchanged.
    """
    if swap_budget < 2 or len(chosen) > 48 or len(candidates) > 4000:
        return list(chosen)
    cand_masks = coverage_masks(candidates, radius, points)
    full = (1 << len(points)) - 1
    current = list(chosen)
    improved = True
    while improved:
        improved = False
        masks = [coverage_mask(c, radius, points) for c in current]
        for j in range(2, min(swap_budget, len(current)) + 1):
            for drop in itertools.combinations(range(len(current)), j):
                base = 0
                for i, m in enumerate(masks):
                    if i not in drop:
                        base |= m
                need = full & ~base
                if need == 0:
                    current = [c for i, c in enumerate(current) if i not in drop]
                    improved = True
                    break
                repl = _cover_hole(need, cand_masks, j - 1)
                if repl is not None:
                    current = [c for i, c in enumerate(current) if i not in drop]
                    current.extend(candidates[i] for i in repl)
                    improved = True
                    break
            if improved:
                break
    return current


def _cover_hole(need: int, cand_masks: list[int], size: int) -> tuple[int, ...] | None:
    # small exact search: cover `need` with at most `size` candidate masks
    if size == 0:
        return None
    useful = [i for i, m in enumerate(cand_masks) if m & need]
    if size == 1:
        for i in useful:
            if need & ~cand_masks[i] == 0:
                return (i,)
        return None
    for combo in itertools.combinations(useful, size):
        got = 0
        for i in combo:
            got |= cand_masks[i]
        if need & ~got == 0:
            return combo
    return None


def disk_cover_approx(points: Sequence[Point], radius: float,
                      epsilon: float = 1.0,
                      candidates: Sequence[Point] | None = None) -> list[Point]:
    """Greedy cover polished by local search; swap budget min(ceil(1/eps^2), 3)."""
    if candidates is None:
        n = len(points)
        candidates = candidate_centers(points, midpoints=n <= 150,
                                       circumcenters=n <= 40)
    chosen = disk_cover_greedy(points, radius, candidates)
    budget = min(math.ceil(1.0 / (epsilon * epsilon)), 3) if epsilon > 0 else 3
    return disk_cover_local_search(points, radius, chosen, candidates, budget)


def disk_graph(points: Sequence[Point], radii: Sequence[float]) -> list[set[int]]:
    """Intersection graph of disks: edge iff centers within r_i + r_j (+TOL)."""
    n = len(points)
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if distance(points[i], points[j]) <= radii[i] + radii[j] + TOL:
                nbrs[i].add(j)
                nbrs[j].add(i)
    return nbrs


def dominating_set_greedy(neighbors: Sequence[set[int]]) -> list[int]:
    """Greedy dominating set: max newly-dominated closed neighborhood first."""
    n = len(neighbors)
    undominated = set(range(n))
    picked: list[int] = []
    while undominated:
        best_gain, best_v = -1, -1
        for v in range(n):
            gain = len(undominated & (neighbors[v] | {v}))
            if gain > best_gain:
                best_gain, best_v = gain, v
        picked.append(best_v)
        undominated -= neighbors[best_v] | {best_v}
    return picked


def zone_of(p: Point, center: Point, delta: float) -> int | None:
    """Sector index 0..12 if ``p`` lies in the late annulus around ``center``.

    The annulus spans distances [26/27, 1] * delta; sector k covers bearing
    angles [2 pi k / 13, 2 pi (k+1) / 13).  None when outside.
    """
    d = distance(p, center)
    if d > delta + TOL or d < ANNULUS_INNER_FRACTION * delta - TOL:
        return None
    ang = math.atan2(p.y - center.y, p.x - center.x) % (2.0 * math.pi)
    return min(int(ang / (2.0 * math.pi / ZONE_COUNT)), ZONE_COUNT - 1)


def zone_diameter_fraction() -> float:
    """Zone diameter as a fraction of the guess: 2 sin(pi/13) < 13/27."""
    return 2.0 * math.sin(math.pi / ZONE_COUNT)


def scaled_template(center: Point, delta: float) -> list[Point]:
    """The five template centers scaled by ``delta`` and moved to ``center``."""
    assert _template_verified(), "frozen five-disk template failed verification"
    return [Point(center.x + delta * tx, center.y + delta * ty)
            for tx, ty in FIVE_COVER_CENTERS]


@lru_cache(maxsize=1)
def _template_verified() -> bool:
    return verify_template(FIVE_COVER_CENTERS, FIVE_COVER_RADIUS, resolution=0.05)


def _cells_certified(r1, r2, t1, t2, centers, radius):
    # exact max distance from a center to a polar cell: squared distance is
    # convex in the radial coordinate (max at r1 or r2) and maximal at the
    # cell angle farthest from the center's bearing (an endpoint, or the
    # antipodal bearing when the cell's angle range contains it)
    two_pi = 2.0 * math.pi
    r2sq = radius * radius
    ok = np.zeros(r1.shape, dtype=bool)
    for cx, cy in centers:
        m = math.hypot(cx, cy)
        phi = math.atan2(cy, cx)
        rem = ~ok
        if not rem.any():
            break
        a = np.mod(t1[rem] - phi, two_pi)
        w = t2[rem] - t1[rem]
        cmin = np.minimum(np.cos(a), np.cos(a + w))
        has_pi = ((a <= math.pi) & (a + w >= math.pi)) | (a + w >= 3.0 * math.pi)
        cmin = np.where(has_pi, -1.0, cmin)
        lo, hi = r1[rem], r2[rem]
        d2 = np.maximum(lo * lo + m * m - 2.0 * m * lo * cmin,
                        hi * hi + m * m - 2.0 * m * hi * cmin)
        sub = np.zeros(r1.shape, dtype=bool)
        sub[rem] = d2 <= r2sq
        ok |= sub
    return ok


def _corner_uncovered(r1, r2, t1, t2, centers, radius) -> bool:
    # a sampled cell corner farther than `radius` from every center refutes
    for rr, tt in ((r1, t1), (r1, t2), (r2, t1), (r2, t2)):
        x, y = rr * np.cos(tt), rr * np.sin(tt)
        g2 = None
        for cx, cy in centers:
            d2 = (x - cx) ** 2 + (y - cy) ** 2
            g2 = d2 if g2 is None else np.minimum(g2, d2)
        if (g2 > radius * radius).any():
            return True
    return False


def verify_template(centers: Sequence[tuple[float, float]], radius: float,
                    resolution: float = 1e-2) -> bool:
    """Rigorously decide whether the disks cover the closed unit disk.

    Seeds a polar grid with spacing ``resolution`` and certifies each cell
    against a single center via the exact maximum cell distance; failing
    cells are split four ways until all certify.  True is returned only
    with every cell certified, so a positive answer is sound up to float
    rounding.  False means a corner witness escaped every disk or the
    subdivision budget ran out before certifying.
    """
    if not centers:
        return False
    two_pi = 2.0 * math.pi
    n_r = max(2, math.ceil(1.0 / resolution))
    n_t = max(4, math.ceil(two_pi / resolution))
    redges = np.linspace(0.0, 1.0, n_r + 1)
    tedges = np.linspace(0.0, two_pi, n_t + 1)

    live: list[tuple] = []
    rows_per_chunk = max(1, 200_000 // n_t)
    for lo in range(0, n_r, rows_per_chunk):
        hi = min(n_r, lo + rows_per_chunk)
        R1, T1 = np.meshgrid(redges[lo:hi], tedges[:-1], indexing="ij")
        R2, T2 = np.meshgrid(redges[lo + 1:hi + 1], tedges[1:], indexing="ij")
        r1, r2 = R1.ravel(), R2.ravel()
        t1, t2 = T1.ravel(), T2.ravel()
        ok = _cells_certified(r1, r2, t1, t2, centers, radius)
        if not ok.all():
            keep = ~ok
            live.append((r1[keep], r2[keep], t1[keep], t2[keep]))

    if not live:
        return True
    r1 = np.concatenate([c[0] for c in live])
    r2 = np.concatenate([c[1] for c in live])
    t1 = np.concatenate([c[2] for c in live])
    t2 = np.concatenate([c[3] for c in live])

    for _ in range(40):
        if _corner_uncovered(r1, r2, t1, t2, centers, radius):
            return False
        if r1.size > 20_000_000:
            return False
        rm, tm = (r1 + r2) / 2.0, (t1 + t2) / 2.0
        r1 = np.concatenate([r1, rm, r1, rm])
        r2 = np.concatenate([rm, r2, rm, r2])
        t1 = np.concatenate([t1, t1, tm, tm])
        t2 = np.concatenate([tm, tm, t2, t2])
        ok = _cells_certified(r1, r2, t1, t2, centers, radius)
        if ok.all():
            return True
        keep = ~ok
        r1, r2, t1, t2 = r1[keep], r2[keep], t1[keep], t2[keep]
    return False


def sample_covering_radius(centers: Sequence[tuple[float, float]],
                           n_radial: int = 80, n_angular: int = 320) -> float:
    """Sampled covering radius: max over a polar grid of the min distance."""
    rr = np.linspace(0.0, 1.0, n_radial + 1)
    tt = np.linspace(0.0, 2.0 * math.pi, n_angular, endpoint=False)
    R, T = np.meshgrid(rr, tt, indexing="ij")
    x, y = R * np.cos(T), R * np.sin(T)
    g2 = None
    for cx, cy in centers:
        d2 = (x - cx) ** 2 + (y - cy) ** 2
        g2 = d2 if g2 is None else np.minimum(g2, d2)
    return float(np.sqrt(g2.max()))


def max_coverage_groups(groups: Sequence[Sequence[frozenset[int]]],
                        labels: Sequence[Sequence[object]] | None = None
                        ) -> list[tuple[int, int]]:
    """Greedy max coverage picking at most one set per group.

    Each round selects the (group, set) pair with the largest number of
    newly covered elements, preferring lower group index then lower set
    index on ties, skipping groups already used and, when ``labels`` is
    given, sets whose label was already used.  Stops when no positive gain
    remains.  Returns the picked (group, set) index pairs in pick order.
    """
    used_groups: set[int] = set()
    used_labels: set[object] = set()
    covered: set[int] = set()
    picks: list[tuple[int, int]] = []
    while True:
        best_gain, best = 0, None
        for gi, sets in enumerate(groups):
            if gi in used_groups:
                continue
            for si, s in enumerate(sets):
                if labels is not None and labels[gi][si] in used_labels:
                    continue
                gain = len(s - covered)
                if gain > best_gain:
                    best_gain, best = gain, (gi, si)
        if best is None:
            return picks
        gi, si = best
        used_groups.add(gi)
        if labels is not None:
            used_labels.add(labels[gi][si])
        covered |= groups[gi][si]
        picks.append(best)
