"""Brute-force search for disjoint simple closed curves on a planar map.

A closed curve transverse to the map is recorded by normal data: a
weight per edge (number of crossings) and, inside each face, a chord
matching between the crossing points on its boundary.  The search walks
the curve crossing by crossing: pick the edge crossed next, pick the
gap between existing crossing points to thread through, and keep every
partial family of chords non-crossing inside each face.  Anchoring the
start at the first point of the smallest crossed edge, with a fixed
starting side, makes each configuration appear exactly once; a
configuration is discarded when some chord cuts off an empty bigon with
its edge, since pushing the curve across that bigon yields a smaller
configuration that the search also finds.

Words are read off in x, y, z only; crossings of b and of the shadow
arcs are silent.  A crossing is positive when the curve arrives from
the front square side of the arc, matching the sign convention of the
curve words built in planar.py.

A curve is essential when each of its two sides carries total puncture
weight at least 2: this rules out curves bounding unpunctured disks and
curves encircling a single weight-1 puncture, and keeps everything
parallel to a genuine boundary component or fatter.
"""

from __future__ import annotations

import bisect
import sys
from dataclasses import dataclass

from .planar import build_planar_map, build_surgered_map
from .slopes import classify
from .surface import beta_word
from .words import is_trivial, letter

DEFAULT_BOUND = 8
DEFAULT_NODE_BUDGET = 4_000_000


class BoundTooLargeError(RuntimeError):
    """Raised when the curve search exhausts its node budget."""


@dataclass(frozen=True)
class NormalCurve:
    """Weights per edge plus the chord matching inside each face.

    Chord endpoints are (edge, rank) pairs, rank counted along the
    even dart of the edge; the matching tuple lists (face, chords).
    """
    weights: tuple
    chords: tuple


@dataclass(frozen=True)
class CurveVerdict:
    curve: NormalCurve
    word: tuple
    essential: bool
    trivial_word: bool


class _Pt:
    __slots__ = ("edge",)

    def __init__(self, edge):
        self.edge = edge


def _between(a, b, x):
    # strictly inside the cyclic interval (a, b)
    if a < b:
        return a < x < b
    return x > a or x < b


def enumerate_disjoint_curves(pmap, bound, max_nodes=DEFAULT_NODE_BUDGET):
    """All embedded closed curves with every edge weight at most bound.

    Curves stay clear of the map's curve edges and of all vertices, so
    in particular of every puncture.  Output is deterministic: sorted
    by weight vector, ties broken by the chord matching.  Exceeding the
    node budget raises BoundTooLargeError; the enumeration never
    truncates silently.
    """
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    n_edges = len(pmap.edges)
    walk_pos = {}
    for cyc in pmap.faces:
        for i, d in enumerate(cyc):
            walk_pos[d] = i
    pts = [[] for _ in range(n_edges)]
    chords = [[] for _ in pmap.faces]
    results = {}
    budget = [max_nodes]

    def key(pt, dart):
        idx = pts[dart >> 1].index(pt)
        return (walk_pos[dart], idx if dart & 1 == 0 else -idx)

    def chord_ok(face, a, b):
        ka, kb = key(*a), key(*b)
        for (c, d) in chords[face]:
            kc, kd = key(*c), key(*d)
            if _between(ka, kb, kc) != _between(ka, kb, kd):
                return False
        return True

    old_limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old_limit, 4 * n_edges * max(bound, 1) + 100))
    try:
        for e0 in range(n_edges):
            if not pmap.edges[e0].crossable or bound == 0:
                continue
            x0 = _Pt(e0)
            pts[e0].append(x0)
            d_start = 2 * e0
            d_close = 2 * e0 + 1
            f_close = pmap.face_of_dart[d_close]
            traj = [(x0, d_close)]

            def rec(anchor, face):
                # a chord with both ends on one side of one edge always
                # nests an empty bigon in the finished picture, so moves
                # never return to the anchor's own dart
                if face == f_close and len(traj) >= 2 and anchor[1] != d_close:
                    closing = (anchor, (x0, d_close))
                    if chord_ok(face, *closing):
                        chords[face].append(closing)
                        verdict = _close_up(pmap, pts, chords, traj)
                        if verdict is not None:
                            results.setdefault(
                                (verdict.curve.weights, verdict.curve.chords),
                                verdict)
                        chords[face].pop()
                for d in pmap.faces[face]:
                    e = d >> 1
                    if not pmap.edges[e].crossable or e < e0 or d == anchor[1]:
                        continue
                    if len(pts[e]) >= bound:
                        continue
                    for gap in range(1 if e == e0 else 0, len(pts[e]) + 1):
                        budget[0] -= 1
                        if budget[0] < 0:
                            raise BoundTooLargeError(
                                "bound too large: curve search exceeded "
                                "%d nodes" % max_nodes)
                        npt = _Pt(e)
                        pts[e].insert(gap, npt)
                        move = (anchor, (npt, d))
                        if chord_ok(face, *move):
                            chords[face].append(move)
                            traj.append((npt, d ^ 1))
                            rec((npt, d ^ 1), pmap.face_of_dart[d ^ 1])
                            traj.pop()
                            chords[face].pop()
                        pts[e].remove(npt)

            rec((x0, d_start), pmap.face_of_dart[d_start])
            pts[e0].pop()
    finally:
        sys.setrecursionlimit(old_limit)
    return tuple(results[k] for k in sorted(results))


def _close_up(pmap, pts, chords, traj):
    """Verdict for a completed configuration, or None when reducible."""
    for fc in chords:
        for (pa, da), (pb, db) in fc:
            if da == db and abs(pts[da >> 1].index(pa) - pts[db >> 1].index(pb)) == 1:
                return None
    weights = tuple(len(lst) for lst in pts)
    code = []
    for f, fc in enumerate(chords):
        if not fc:
            continue
        named = []
        for (pa, da), (pb, db) in fc:
            ea, eb = da >> 1, db >> 1
            named.append(tuple(sorted(((ea, pts[ea].index(pa)),
                                       (eb, pts[eb].index(pb))))))
        code.append((f, tuple(sorted(named))))
    curve = NormalCurve(weights, tuple(code))

    word = []
    for pt, from_dart in traj:
        edge = pmap.edges[from_dart >> 1]
        if edge.lettered:
            word.append(letter(edge.arc, 1 if from_dart == edge.front_dart else -1))
    word = tuple(word)

    return CurveVerdict(curve, word, _essential(pmap, pts), is_trivial(word))


def _essential(pmap, pts):
    """Both complementary sides must carry puncture weight at least 2.

    The face boundaries are cut by the crossing points into atoms; a
    parity union-find glues atoms across each crossing point with a
    side flip and across each uncrossed edge segment without one, then
    the puncture weights of the two color classes are compared.
    """
    atom_of_seg = {}
    corner_atom = {}
    n_atoms = 0
    flip_pairs = []
    for cyc in pmap.faces:
        # boundary walk: each dart preceded by its tail corner, then its
        # crossing points in dart direction
        slots = []
        for d in cyc:
            slots.append(("corner", pmap.tail(d), d))
            lst = pts[d >> 1]
            for pt in (lst if d & 1 == 0 else reversed(lst)):
                slots.append(("point", pt, d))
        point_idx = [i for i, s in enumerate(slots) if s[0] == "point"]
        m = len(point_idx)
        base = n_atoms
        if m == 0:
            n_atoms += 1
            for _, v, d in slots:
                corner_atom.setdefault(v, []).append(base)
                atom_of_seg[(d, 0)] = base
            continue

        def run_of(j):
            t = bisect.bisect_right(point_idx, j) - 1
            return t % m

        seg_counter = {}
        for j, (kind, obj, d) in enumerate(slots):
            if kind == "corner":
                corner_atom.setdefault(obj, []).append(base + run_of(j))
                atom_of_seg[(d, 0)] = base + run_of(j)
            else:
                k = seg_counter.get(d, 0) + 1
                seg_counter[d] = k
                atom_of_seg[(d, k)] = base + run_of(j)
        for t in range(m):
            flip_pairs.append((base + (t - 1) % m, base + t))
        n_atoms += m

    parent = list(range(n_atoms))
    parity = [0] * n_atoms

    def find(a):
        if parent[a] == a:
            return a, 0
        root, par = find(parent[a])
        parent[a] = root
        parity[a] ^= par
        return root, parity[a]

    def union(a, b, rel):
        ra, pa = find(a)
        rb, pb = find(b)
        if ra == rb:
            assert (pa ^ pb) == rel, "one-sided curve on the sphere"
            return
        parent[ra] = rb
        parity[ra] = pa ^ pb ^ rel

    for a, b in flip_pairs:
        union(a, b, 1)
    for e in range(len(pmap.edges)):
        m = len(pts[e])
        for k in range(m + 1):
            union(atom_of_seg[(2 * e, k)], atom_of_seg[(2 * e + 1, m - k)], 0)

    root0 = find(0)[0]
    side_weight = {0: 0, 1: 0}
    for v, atoms in corner_atom.items():
        roots = {find(a) for a in atoms}
        assert len(roots) == 1, "vertex touches both sides"
        root, par = roots.pop()
        assert root == root0, "complement not connected"
        side_weight[par] += pmap.vertices[v].weight
    return min(side_weight.values()) >= 2


def exists_trivial_partner(slope, bound=DEFAULT_BOUND, max_nodes=DEFAULT_NODE_BUDGET):
    """First essential curve with freely trivial x,y,z word, or None.

    General slopes are searched on the standard map (disjoint from the
    doubled arc and the fat corners); the infinite and 1/even slopes on
    the surgered map (disjoint from the band sum boundary).  A None is
    a bounded statement only: no such curve with edge weights <= bound.
    """
    cls = classify(slope)
    if cls.kind in ("GreaterThanOne", "BetweenHalfAndOne"):
        raise ValueError("partner search applies to General, ReciprocalEven "
                         "and Infinity slopes only, got %s" % cls.describe())
    if cls.kind == "General":
        pmap = build_planar_map(slope)
    else:
        pmap = build_surgered_map(slope)
    for verdict in enumerate_disjoint_curves(pmap, bound, max_nodes):
        if verdict.trivial_word and verdict.essential:
            return verdict
    return None


def surgered_disk_boundary(slope):
    """Crossing data of the band sum boundary on the surgered map."""
    cls = classify(slope)
    if cls.kind not in ("Infinity", "ReciprocalEven"):
        raise ValueError("surgered boundary exists for the infinite and "
                         "1/even slopes only, got %s" % cls.describe())
    return build_surgered_map(slope).crossings


def region_cancellation_analysis(pmap):
    """Depths of the rung ladder from both ends plus the pinch window.

    interior_depth counts z rungs crossed walking from the cap pentagon
    before the first x or y rung blocks the walk; complementary_depth
    does the same from the end triangle; crossing_si_cancels reports
    whether the letters around the pinch segment admit a free
    cancellation.  All three are checked against the crossing word.
    """
    if pmap.variant != "standard":
        raise ValueError("cancellation analysis needs the standard map "
                         "of a General slope")
    interior = _rung_walk(pmap, pmap.face_c0)
    complementary = _rung_walk(pmap, pmap.face_cp)

    w = beta_word(pmap.slope)
    assert interior == _z_count(w), (interior, _z_count(w))
    assert complementary == _z_count(tuple(reversed(w))), complementary

    window = pmap.si_window
    cancels = any(a[0] == b[0] and a[1] == -b[1]
                  for a, b in zip(window, window[1:]))
    return {
        "interior_depth": interior,
        "crossing_si_cancels": cancels,
        "complementary_depth": complementary,
    }


def _z_count(w):
    n = 0
    for g, _ in w:
        if g == "z":
            n += 1
        elif g in ("x", "y"):
            return n
    return n


def _rung_walk(pmap, start_face):
    rung_set = set(pmap.rung_edges)
    face = start_face
    crossed = set()
    z_seen = 0
    while True:
        doors = [e for e in pmap.face_edge_set(face)
                 if e in rung_set and e not in crossed]
        assert len(doors) == 1, doors
        e = doors[0]
        arc = pmap.edges[e].arc
        if arc in ("x", "y"):
            return z_seen
        if arc == "z":
            z_seen += 1
        crossed.add(e)
        face = pmap.other_face(face, e)
