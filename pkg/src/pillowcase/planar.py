"""Half-edge maps of the marked sphere cut along arcs and curves.

Maps are built from exact rational data.  Every crossing of the
traveling curve with the marked arc system is located upstairs in the
plane, folded down, and turned into a 4-valent vertex; marked points
become weighted vertices; rotations (counterclockwise dart orders
around each vertex) come from exact direction vectors; faces are traced
from the rotations, and Euler characteristic 2 is asserted.  No floats
appear anywhere.

Two variants exist.

Standard (build_planar_map, General slopes only).  The four corners
stay collapsed as punctures of weight 2, 2, 1, 1 and the curve is the
doubled slope arc: both of its ends enter the upper-left corner, its
cap sweeps around the lower-left corner, and in between it runs along
the two sides of the slope arc.  The build also locates

  * the rungs, the arc segments pinched between the two parallel
    strands, one per crossing of the underlying arc;
  * the cap faces, a triangle pocket behind the lower-left corner and
    a pentagon in front of it, plus the end triangle at the upper-left
    corner;
  * the pinch segment s_i under the crossing that closes the predicted
    word prefix, and the disk region R_i of the complement of
    (curve + s_i) that contains the lower-left corner.

Surgered (build_surgered_map, the infinite slope and slopes 1/q).
Each left corner opens into its two constituent punctures joined by a
short word-silent shadow arc, and the curve is the closed band sum:
both strands, the cap around the lower pair, and a return arc around
the upper pair that crosses the x and z ends once each.  All six
punctures carry weight 1, and the curve is asserted to separate the
four left punctures from the two right ones.

Sign convention matches surface.py: a crossing is positive when the
unit cell just before it (upstairs) has even corner sum.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import floor

from .slopes import classify
from .surface import ALPHA_LOOP, CORNER_WEIGHT, alpha_word, beta_crossings, beta_word, fold
from .words import expected_prefix, format_word, invert_word, letter

LETTER_ARCS = ("x", "y", "z")

# front square side of each marked arc, relative to its forward dart
# (forward = increasing position): the front square lies to the right
# of x and z and to the left of y and b
_FRONT_ON_LEFT = {"x": False, "z": False, "y": True, "b": True}


def _neg(v):
    return (-v[0], -v[1])


def _cross(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _window(v):
    """Fold a germ direction at an order-2 cone point into the upper half plane."""
    x, y = v
    if y < 0 or (y == 0 and x < 0):
        return (-x, -y)
    return (x, y)


def _halfplane(v):
    return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1


def _ccw_order(germs, cone):
    """Sort (vector, dart) germs counterclockwise from the positive x axis.

    At a cone vertex the germ directions are only defined up to sign and
    the downstairs cyclic order equals the angular order of the upper
    half plane representatives.
    """
    if cone:
        germs = [(_window(v), d) for v, d in germs]

    def cmp(a, b):
        va, vb = a[0], b[0]
        ha, hb = _halfplane(va), _halfplane(vb)
        if ha != hb:
            return -1 if ha < hb else 1
        c = _cross(va, vb)
        assert c != 0, "parallel germ directions at one vertex"
        return -1 if c > 0 else 1

    return [d for _, d in sorted(germs, key=functools.cmp_to_key(cmp))]


@dataclass(frozen=True)
class MapVertex:
    name: str
    weight: int
    kind: str  # cone | flat | crossing


@dataclass(frozen=True)
class MapEdge:
    index: int
    arc: str  # x, y, z, b, shadow_ul, shadow_ll, curve
    tail: int
    head: int
    crossable: bool
    lettered: bool
    front_dart: int | None  # dart whose left side is the front square


@dataclass(frozen=True)
class CurveCrossing:
    order: int
    arc: str
    letter: tuple
    sign: int
    position: Fraction
    role: str  # strand_r | cap_y | cap_z | strand_l | around_x | around_z
    beta_index: int | None
    vertex: int


class _Event:
    """One crossing of the curve with an arc, in its own upstairs chart."""

    __slots__ = ("arc", "point", "cdir", "arc_fwd", "position", "sign",
                 "letter", "role", "beta_index", "vertex")

    def __init__(self, arc, point, cdir, role, beta_index=None):
        x, y = point
        dx, dy = cdir
        if arc in ("z", "b"):
            assert x.denominator == 1, (arc, point)
            i = int(x)
            assert dx != 0, "crossing must be transverse"
            cell_x = i - 1 if dx > 0 else i
            parity = (cell_x + floor(y)) & 1
            self.position = fold(y)
            self.arc_fwd = (Fraction(0), Fraction(1)) if y % 2 < 1 else (Fraction(0), Fraction(-1))
        else:
            assert y.denominator == 1, (arc, point)
            j = int(y)
            assert dy != 0, "crossing must be transverse"
            cell_y = j - 1 if dy > 0 else j
            parity = (floor(x) + cell_y) & 1
            self.position = fold(x)
            self.arc_fwd = (Fraction(1), Fraction(0)) if x % 2 < 1 else (Fraction(-1), Fraction(0))
        self.arc = arc
        self.point = point
        self.cdir = cdir
        self.sign = 1 if parity == 0 else -1
        self.letter = letter(arc, self.sign)
        self.role = role
        self.beta_index = beta_index
        self.vertex = None


class PlanarMap:
    """Immutable half-edge map with puncture weights and curve markers.

    Darts are integers; edge e owns darts 2e (tail to head) and 2e+1.
    rotations[v] lists the darts leaving v counterclockwise; faces are
    the orbits of the left-hand face permutation, so face_of_dart[d] is
    the face on the left of d.
    """

    def __init__(self, slope, variant, vertices, edges, rotations, vertex_by_name):
        self.slope = slope
        self.variant = variant
        self.vertices = vertices
        self.edges = edges
        self.rotations = rotations
        self.vertex_by_name = vertex_by_name
        self._rot_pos = {}
        for v, rot in enumerate(rotations):
            for idx, d in enumerate(rot):
                self._rot_pos[d] = (v, idx)
        self.faces, self.face_of_dart = self._trace_faces()
        # filled in by the builders
        self.crossings = ()
        self.curve_edges = ()
        self.curve_word = ()
        self.arc_edges = {}
        self.rung_edges = ()
        self.face_c0 = None
        self.face_pocket = None
        self.face_cp = None
        self.s_edge = None
        self.si_window = ()
        self.prefix_length = None
        self.region_label = None
        self.region_faces = None
        self.classification = classify(slope)

    # dart helpers
    @staticmethod
    def twin(d):
        return d ^ 1

    def tail(self, d):
        e = self.edges[d >> 1]
        return e.tail if d & 1 == 0 else e.head

    def head(self, d):
        return self.tail(d ^ 1)

    def _trace_faces(self):
        nd = 2 * len(self.edges)
        face_of = [None] * nd
        faces = []
        for d0 in range(nd):
            if face_of[d0] is not None:
                continue
            cyc = []
            d = d0
            while face_of[d] is None:
                face_of[d] = len(faces)
                cyc.append(d)
                v, idx = self._rot_pos[d ^ 1]
                rot = self.rotations[v]
                d = rot[(idx - 1) % len(rot)]
            assert d == d0, "face walk did not close"
            faces.append(tuple(cyc))
        return tuple(faces), tuple(face_of)

    def euler_characteristic(self):
        return len(self.vertices) - len(self.edges) + len(self.faces)

    def total_weight(self):
        return sum(v.weight for v in self.vertices)

    def face_edge_set(self, f):
        return {d >> 1 for d in self.faces[f]}

    def other_face(self, f, e):
        f0 = self.face_of_dart[2 * e]
        f1 = self.face_of_dart[2 * e + 1]
        assert f in (f0, f1)
        return f1 if f == f0 else f0

    def faces_at_vertex(self, v):
        return {self.face_of_dart[d] for d in self.rotations[v]}


def _face_components(pmap, walls):
    """Union faces across every edge not in walls; return the face partition."""
    parent = list(range(len(pmap.faces)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for e in range(len(pmap.edges)):
        if e in walls:
            continue
        ra, rb = find(pmap.face_of_dart[2 * e]), find(pmap.face_of_dart[2 * e + 1])
        if ra != rb:
            parent[ra] = rb
    comps = {}
    for f in range(len(pmap.faces)):
        comps.setdefault(find(f), set()).add(f)
    return list(comps.values())


def _component_chi(pmap, comp, walls):
    """Euler characteristic of a union of faces glued across non-wall edges."""
    interior_edges = [
        e for e in range(len(pmap.edges))
        if e not in walls
        and pmap.face_of_dart[2 * e] in comp
        and pmap.face_of_dart[2 * e + 1] in comp
    ]
    interior_vertices = [
        v for v in range(len(pmap.vertices))
        if pmap.faces_at_vertex(v) <= comp
        and all((d >> 1) in set(interior_edges) for d in pmap.rotations[v])
    ]
    return len(interior_vertices) - len(interior_edges) + len(comp)


def _assemble(slope, variant, vertex_spec, arc_spec, events, ends, expected_word):
    """Shared map assembly.

    vertex_spec: (name, weight, kind) triples.  arc_spec: (arc, tail
    name, head name, tail ray, head ray, lo, hi) with positions of all
    events on the arc required to lie strictly inside (lo, hi).  events
    are in traversal order along the curve; ends is None for a closed
    curve or (corner name, start ray, end ray) for an open one.
    """
    names = [s[0] for s in vertex_spec]
    vertex_by_name = {n: i for i, n in enumerate(names)}
    vertices = [MapVertex(n, w, k) for n, w, k in vertex_spec]
    for order, ev in enumerate(events):
        ev.vertex = len(vertices)
        vertices.append(MapVertex("c%d" % order, 0, "crossing"))

    edges = []
    germs_at = [[] for _ in vertices]
    edge_by_pair = {}
    arc_edges = {}

    def new_edge(arc, tail, head, tail_ray, head_ray, crossable):
        e = len(edges)
        front = None
        if arc in ("x", "y", "z", "b"):
            front = 2 * e if _FRONT_ON_LEFT[arc] else 2 * e + 1
        edges.append(MapEdge(e, arc, tail, head, crossable, arc in LETTER_ARCS, front))
        germs_at[tail].append((tail_ray, 2 * e))
        germs_at[head].append((head_ray, 2 * e + 1))
        edge_by_pair.setdefault(frozenset((tail, head)), []).append(e)
        return e

    for arc, tname, hname, tray, hray, lo, hi in arc_spec:
        evs = sorted((ev for ev in events if ev.arc == arc), key=lambda ev: ev.position)
        for a, b in zip(evs, evs[1:]):
            assert a.position < b.position, "coincident crossings on arc " + arc
        for ev in evs:
            assert lo < ev.position < hi, (arc, ev.position)
        chain = [(vertex_by_name[tname], tray)]
        chain += [(ev.vertex, None) for ev in evs]
        chain.append((vertex_by_name[hname], hray))
        ids = []
        for i in range(len(chain) - 1):
            u, uray = chain[i]
            v, vray = chain[i + 1]
            uev = evs[i - 1] if i > 0 else None
            vev = evs[i] if i < len(evs) else None
            tail_ray = uray if uev is None else uev.arc_fwd
            head_ray = vray if vev is None else _neg(vev.arc_fwd)
            ids.append(new_edge(arc, u, v, tail_ray, head_ray, True))
        arc_edges[arc] = tuple(ids)

    curve_ids = []
    if ends is None:
        ring = list(zip(events, events[1:] + events[:1]))
        for a, b in ring:
            curve_ids.append(new_edge("curve", a.vertex, b.vertex,
                                      a.cdir, _neg(b.cdir), False))
    else:
        corner, start_ray, end_ray = ends
        c = vertex_by_name[corner]
        curve_ids.append(new_edge("curve", c, events[0].vertex,
                                  start_ray, _neg(events[0].cdir), False))
        for a, b in zip(events, events[1:]):
            curve_ids.append(new_edge("curve", a.vertex, b.vertex,
                                      a.cdir, _neg(b.cdir), False))
        curve_ids.append(new_edge("curve", events[-1].vertex, c,
                                  events[-1].cdir, end_ray, False))

    rotations = []
    for v, germs in enumerate(germs_at):
        assert germs, "isolated vertex " + vertices[v].name
        rotations.append(tuple(_ccw_order(germs, vertices[v].kind == "cone")))

    pmap = PlanarMap(slope, variant, tuple(vertices), tuple(edges),
                     tuple(rotations), vertex_by_name)
    assert pmap.euler_characteristic() == 2, pmap.euler_characteristic()
    assert pmap.total_weight() == 6

    pmap.arc_edges = arc_edges
    pmap.curve_edges = tuple(curve_ids)
    word = tuple(ev.letter for ev in events)
    assert word == tuple(expected_word), (
        "curve word mismatch: built %s, predicted %s"
        % (format_word(word), format_word(tuple(expected_word))))
    pmap.curve_word = word
    pmap.crossings = tuple(
        CurveCrossing(i, ev.arc, ev.letter, ev.sign, ev.position,
                      ev.role, ev.beta_index, ev.vertex)
        for i, ev in enumerate(events))
    pmap._edge_by_pair = edge_by_pair
    return pmap


def _strand_events(slope, eps, reverse):
    """Crossing events along one side of the slope arc.

    The side at transverse offset c crosses the same lattice lines as
    the arc itself, shifted along the line by c*(p*p+q*q) over the
    relevant coordinate; offsets never reach the next cell, so letters,
    cells, and signs match the arc crossing (same cell, same heading)
    or its inverse (opposite heading).
    """
    p, q = slope.p, slope.q
    shift = eps * (p * p + q * q)
    items = []
    for n, bc in enumerate(beta_crossings(slope), 1):
        if bc.axis == "v":
            i = bc.index
            pt = (Fraction(i), Fraction(i * p, q) + shift / q)
        else:
            j = bc.index
            pt = (Fraction(j * q, p) - shift / p, Fraction(j))
        items.append((n, bc, pt))
    if reverse:
        items.reverse()
        cdir = (Fraction(-q), Fraction(-p))
        role = "strand_r"
    else:
        cdir = (Fraction(q), Fraction(p))
        role = "strand_l"
    return [_Event(bc.letter[0], pt, cdir, role, beta_index=n)
            for n, bc, pt in items]


def _cap_events(slope):
    p, q = slope.p, slope.q
    eps = Fraction(1, 64 * p * q * (p * p + q * q))
    x_a = eps * q * q / p + eps * p / 2
    ev_y = _Event("y", (x_a, Fraction(0)), (Fraction(0), Fraction(-1)), "cap_y")
    ev_z = _Event("z", (Fraction(0), -2 * eps * q), (Fraction(-1), Fraction(0)), "cap_z")
    return [ev_y, ev_z]


def _segment_crossing(p0, p1, axis, value):
    """Exact crossing point of segment p0->p1 with the line axis=value."""
    (x0, y0), (x1, y1) = p0, p1
    if axis == "h":
        assert (y0 - value) * (y1 - value) < 0, "segment misses the line"
        t = (value - y0) / (y1 - y0)
        return (x0 + t * (x1 - x0), Fraction(value))
    assert (x0 - value) * (x1 - value) < 0, "segment misses the line"
    t = (value - x0) / (x1 - x0)
    return (Fraction(value), y0 + t * (y1 - y0))


def build_planar_map(slope):
    """Exact map of the sphere cut along the arc system and the doubled arc.

    Defined for General slopes only: the doubled arc needs the strand
    offsets, the corner cap, and the prefix data, all of which are tied
    to that class.
    """
    cls = classify(slope)
    if cls.kind != "General":
        raise ValueError("planar map is built for General slopes only, got %s"
                         % cls.describe())
    p, q = slope.p, slope.q
    eps = Fraction(1, 64 * p * q * (p * p + q * q))
    eps_r = eps / 2

    events = (_strand_events(slope, -eps_r, reverse=True)
              + _cap_events(slope)
              + _strand_events(slope, eps, reverse=False))
    w = beta_word(slope)
    expected = invert_word(w) + ALPHA_LOOP + w

    # ends of the doubled arc at the upper-left corner, in the chart at (q, p)
    t_hi = 1 - Fraction(1, 2 * q)
    g_r = (-Fraction(1, 2) + eps_r * p, -Fraction(p, 2 * q) - eps_r * q)
    g_l = (-Fraction(1, 2) - eps * p, -Fraction(p, 2 * q) + eps * q)
    assert _cross(g_l, g_r) != 0 and t_hi > 0

    corner = Fraction(0)
    one = Fraction(1)
    vertex_spec = [("LL", CORNER_WEIGHT["LL"], "cone"),
                   ("UL", CORNER_WEIGHT["UL"], "cone"),
                   ("LR", CORNER_WEIGHT["LR"], "cone"),
                   ("UR", CORNER_WEIGHT["UR"], "cone")]
    east = (Fraction(1), Fraction(0))
    west = (Fraction(-1), Fraction(0))
    north = (Fraction(0), Fraction(1))
    south = (Fraction(0), Fraction(-1))
    arc_spec = [("z", "LL", "UL", north, south, corner, one),
                ("b", "LR", "UR", north, south, corner, one),
                ("y", "LL", "LR", east, west, corner, one),
                ("x", "UL", "UR", east, west, corner, one)]

    pmap = _assemble(slope, "standard", vertex_spec, arc_spec, events,
                     ("UL", g_r, g_l), expected)
    _standard_extras(pmap, slope, w, events)
    return pmap


def _standard_extras(pmap, slope, w, events):
    n_beta = len(w)
    by_index = {}
    for ev in events:
        if ev.beta_index is not None:
            by_index.setdefault(ev.beta_index, []).append(ev)

    rungs = []
    for n in range(1, n_beta + 1):
        pair = by_index[n]
        assert len(pair) == 2
        key = frozenset((pair[0].vertex, pair[1].vertex))
        found = pmap._edge_by_pair.get(key, [])
        assert len(found) == 1, "strand crossings %d are not adjacent on the arc" % n
        e = found[0]
        assert pmap.edges[e].arc == w[n - 1][0]
        rungs.append(e)
    pmap.rung_edges = tuple(rungs)

    # cap faces and the end triangle; these pin the global orientation
    y0 = pmap.arc_edges["y"][0]
    z0 = pmap.arc_edges["z"][0]
    assert pmap.tail(2 * y0) == pmap.vertex_by_name["LL"]
    assert pmap.tail(2 * z0) == pmap.vertex_by_name["LL"]
    cap_y_order = n_beta
    e_r = pmap.curve_edges[cap_y_order]
    e_mid = pmap.curve_edges[cap_y_order + 1]
    e_l = pmap.curve_edges[cap_y_order + 2]
    face_c0 = pmap.face_of_dart[2 * y0]
    face_pocket = pmap.face_of_dart[2 * z0]
    assert pmap.face_edge_set(face_c0) == {y0, z0, e_r, e_l, rungs[0]}, \
        "cap pentagon mismatch (orientation?)"
    assert pmap.face_edge_set(face_pocket) == {y0, z0, e_mid}
    pmap.face_c0 = face_c0
    pmap.face_pocket = face_pocket

    stub_r = pmap.curve_edges[0]
    stub_l = pmap.curve_edges[-1]
    ul = pmap.vertex_by_name["UL"]
    assert pmap.tail(2 * stub_r) == ul and pmap.head(2 * stub_l) == ul
    face_cp = pmap.face_of_dart[2 * stub_l + 1]
    assert pmap.face_edge_set(face_cp) == {stub_r, stub_l, rungs[-1]}, \
        "end triangle mismatch"
    pmap.face_cp = face_cp
    rot = pmap.rotations[ul]
    x_dart = 2 * pmap.arc_edges["x"][0]
    z_dart = 2 * pmap.arc_edges["z"][-1] + 1
    i = rot.index(x_dart)
    cyc = rot[i:] + rot[:i]
    assert cyc == (x_dart, 2 * stub_l + 1, 2 * stub_r, z_dart), cyc

    # pinch segment under the crossing closing the predicted prefix,
    # and the disk region of the complement containing the lower-left corner
    cls = pmap.classification
    prefix = expected_prefix(cls.subcase, cls.k)
    lth = len(prefix)
    assert lth <= n_beta
    pmap.prefix_length = lth
    pmap.s_edge = rungs[lth - 1]
    assert pmap.edges[pmap.s_edge].arc == prefix[-1][0] == w[lth - 1][0]

    window = []
    for j in range(lth - 2, -1, -1):
        if w[j][0] != "b":
            window.append(w[j])
            break
    if w[lth - 1][0] != "b":
        window.append(w[lth - 1])
    for j in range(lth, n_beta):
        if w[j][0] != "b":
            window.append(w[j])
            break
    pmap.si_window = tuple(window)

    walls = set(pmap.curve_edges) | {pmap.s_edge}
    comps = _face_components(pmap, walls)
    assert len(comps) == 3, "curve plus pinch segment should cut three regions"
    region = next(c for c in comps if face_c0 in c)
    assert face_pocket in region
    assert _component_chi(pmap, region, walls) == 1, "marked region is not a disk"
    pmap.region_faces = frozenset(region)
    pmap.region_label = "R%d" % cls.subcase


def build_surgered_map(slope):
    """Map of the surgered configuration for the infinite and 1/q slopes.

    The left corners are opened into puncture pairs joined by shadow
    arcs and the curve is the closed band sum of the upper corner circle
    with a parallel copy of the doubled arc.
    """
    cls = classify(slope)
    if cls.kind not in ("Infinity", "ReciprocalEven"):
        raise ValueError("surgered configuration exists for the infinite and "
                         "1/even slopes only, got %s" % cls.describe())
    if cls.kind == "Infinity":
        return _surgered_infinity(slope)
    return _surgered_reciprocal(slope)


def _surgered_vertex_arc_spec(delta):
    """Six weight-1 punctures and the arc system with shadow arcs."""
    east = (Fraction(1), Fraction(0))
    west = (Fraction(-1), Fraction(0))
    north = (Fraction(0), Fraction(1))
    south = (Fraction(0), Fraction(-1))
    one = Fraction(1)
    zero = Fraction(0)
    vertex_spec = [("P1", 1, "flat"), ("P2", 1, "flat"),
                   ("P'1", 1, "flat"), ("P'2", 1, "flat"),
                   ("UR", 1, "cone"), ("LR", 1, "cone")]
    arc_spec = [
        ("z", "P'1", "P2", north, south, delta, 1 - delta),
        ("b", "LR", "UR", north, south, zero, one),
        ("y", "P'2", "LR", east, west, delta, one),
        ("x", "P1", "UR", east, west, delta, one),
        ("shadow_ul", "P1", "P2",
         (Fraction(-1), Fraction(-1)), (Fraction(1), Fraction(1)), zero, one),
        ("shadow_ll", "P'1", "P'2",
         (Fraction(1), Fraction(-1)), (Fraction(-1), Fraction(1)), zero, one),
    ]
    return vertex_spec, arc_spec


def _surgered_infinity(slope):
    # the underlying arc runs along z, so the band sum degenerates to a
    # circle around the z neighborhood: one x crossing, one y crossing
    delta = Fraction(1, 64)
    up = (Fraction(0), Fraction(1))
    ev_y = _Event("y", (Fraction(1, 4), Fraction(0)), up, "around_y")
    ev_x = _Event("x", (Fraction(1, 4), Fraction(1)), up, "around_x")
    expected = (letter("y", -1), letter("x", 1))
    vertex_spec, arc_spec = _surgered_vertex_arc_spec(delta)
    pmap = _assemble(slope, "surgered", vertex_spec, arc_spec,
                     [ev_y, ev_x], None, expected)
    _surgered_extras(pmap)
    return pmap


def _surgered_reciprocal(slope):
    p, q = slope.p, slope.q
    eps = Fraction(1, 64 * p * q * (p * p + q * q))
    eps_r = eps / 2
    delta = eps / (8 * q)

    events = (_strand_events(slope, -eps_r, reverse=True)
              + _cap_events(slope)
              + _strand_events(slope, eps, reverse=False))

    # return arc around the opened upper pair: from the top of the left
    # strand, around the corner lift (q, p), to the rotated image of the
    # top of the right strand; crosses the x end then the z end
    t_hi = 1 - Fraction(1, 2 * q)
    l_hi = (t_hi * q - eps * p, t_hi * p + eps * q)
    r_hi = (t_hi * q + eps_r * p, t_hi * p - eps_r * q)
    m1 = (q - Fraction(1, 8), p + Fraction(1, 8))
    s_r = (2 * q - r_hi[0], 2 * p - r_hi[1])
    px = _segment_crossing(l_hi, m1, "h", p)
    pz = _segment_crossing(m1, s_r, "v", q)
    ev_x = _Event("x", px, (m1[0] - l_hi[0], m1[1] - l_hi[1]), "around_x")
    ev_z = _Event("z", pz, (s_r[0] - m1[0], s_r[1] - m1[1]), "around_z")
    events = events + [ev_x, ev_z]

    w = beta_word(slope)
    expected = (invert_word(w) + ALPHA_LOOP + w
                + (letter("x", -1), letter("z", 1)))

    vertex_spec, arc_spec = _surgered_vertex_arc_spec(delta)
    pmap = _assemble(slope, "surgered", vertex_spec, arc_spec, events,
                     None, expected)
    _surgered_extras(pmap)
    return pmap


def _surgered_extras(pmap):
    comps = _face_components(pmap, set(pmap.curve_edges))
    assert len(comps) == 2, "band sum boundary should cut two regions"
    sides = {}
    for name in ("P1", "P2", "P'1", "P'2", "UR", "LR"):
        v = pmap.vertex_by_name[name]
        touched = {next(i for i, c in enumerate(comps) if f in c)
                   for f in pmap.faces_at_vertex(v)}
        assert len(touched) == 1, "curve touches puncture " + name
        sides[name] = touched.pop()
    left = {sides[n] for n in ("P1", "P2", "P'1", "P'2")}
    right = {sides[n] for n in ("UR", "LR")}
    assert len(left) == 1 and len(right) == 1 and left != right, \
        "band sum boundary should enclose the four left punctures"
    pmap.curve_sides = (frozenset(n for n, s in sides.items() if s in left),
                        frozenset(n for n, s in sides.items() if s in right))
