"""The marked sphere and crossing words of straight arcs on it.

Model.  The sphere is the rectangle [0,1] x [0,2] with the gluings
(0,v)~(0,2-v), (1,v)~(1,2-v), (u,0)~(u,2).  Equivalently it is the
quotient of the plane by the group generated by the two translations
(X+2, Y) and (X, Y+2) and the half turn (-X, -Y); the quotient map is
the fold: reduce mod 2, then reflect (u,v) -> (2-u, 2-v) when u > 1.
The square v < 1 is called the front, v > 1 the back.

Four marked arcs live on the fold lines:

    z = {0} x [0,1]   left edge,   lower-left corner to upper-left
    b = {1} x [0,1]   right edge,  lower-right to upper-right
    y = [0,1] x {0}   bottom edge, lower-left to lower-right
    x = [0,1] x {1}   middle line, upper-left to upper-right

The four corners are marked points.  The two left corners stand for
shrunk disk neighborhoods of knot strands and carry weight 2 each; the
right corners carry weight 1 each.  A simple closed curve is essential
exactly when the weight on each of its sides is at least 2.

The arc of slope p/q runs from the lower-left corner to the upper-left
corner; upstairs it is the straight segment (0,0) -> (q,p).  Its
crossing word records one signed letter per crossing with the arc
system, ordered along the arc.  Sign convention: every arc is
transversely oriented from the front square to the back square, and a
crossing is positive when the moving arc agrees with that orientation,
i.e. when the unit cell just before the crossing has even corner-sum
floor(X) + floor(Y).  Consecutive crossings flip the cell parity, so
signs strictly alternate starting with +1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .words import invert_word, letter

# corner weights for the essential-curve test (total 6)
CORNER_WEIGHT = {"LL": 2, "UL": 2, "LR": 1, "UR": 1}

# endpoints of each marked arc, as corner names
ARC_ENDPOINTS = {
    "z": ("LL", "UL"),
    "b": ("LR", "UR"),
    "y": ("LL", "LR"),
    "x": ("UL", "UR"),
}

_B_POS = letter("b", 1)
_B_NEG = letter("b", -1)
_Z_POS = letter("z", 1)
_Z_NEG = letter("z", -1)
_X_POS = letter("x", 1)
_X_NEG = letter("x", -1)
_Y_POS = letter("y", 1)
_Y_NEG = letter("y", -1)

# the two letters swept when the doubled arc closes up around the
# lower-left corner: it crosses the y end first, then the z end, with
# signs read off the front/back cell rule
ALPHA_LOOP = (_Y_POS, _Z_NEG)


def fold(t):
    """Fold a coordinate onto [0,1]: reduce mod 2, reflect if above 1."""
    v = t % 2
    return v if v <= 1 else 2 - v


class Crossing(NamedTuple):
    """One crossing of the slope arc with the marked arc system.

    axis is "v" for a vertical lattice line X=index (arcs b, z) and "h"
    for a horizontal line Y=index (arcs x, y).  position is the folded
    coordinate of the crossing along the crossed arc, in [0,1]; param
    orders crossings along the moving arc (it equals index*p resp.
    index*q, a common integer clock).
    """

    letter: tuple
    axis: str
    index: int
    position: Fraction
    param: int


def beta_word(slope):
    """Crossing word of the slope arc.

    The merge runs the vertical clock i*p against the horizontal clock
    j*q in exact integers; gcd(p,q)=1 rules out ties.  Vertical line i
    gives b (i odd) or z (i even); horizontal line j gives x (j odd) or
    y (j even).  Signs alternate +,-,+,... along the arc.  The infinite
    slope returns the single-letter word z by convention: that arc runs
    along z itself and has no transverse crossings.
    """
    if slope.q == 0:
        return (_Z_POS,)
    p, q = slope.p, slope.q
    vert = (None, _B_POS, _Z_POS, _B_NEG, _Z_NEG)
    hori = (None, _X_POS, _Y_POS, _X_NEG, _Y_NEG)
    out = []
    append = out.append
    i, j = 1, 1
    vi = p
    hj = q
    big = p * q  # sentinel beyond every real clock value
    vstop = q - 1
    hstop = p - 1
    parity = 0  # 0 -> positive sign
    while i <= vstop or j <= hstop:
        if vi < hj:
            append(vert[2 - (i & 1) + 2 * parity])
            i += 1
            vi = i * p if i <= vstop else big
        else:
            append(hori[2 - (j & 1) + 2 * parity])
            j += 1
            hj = j * q if j <= hstop else big
        parity ^= 1
    return tuple(out)


def beta_crossings(slope):
    """Crossings of the slope arc with exact folded positions.

    Same order and letters as beta_word; requires a finite slope (the
    infinite arc has no transverse crossing data).
    """
    if slope.q == 0:
        raise ValueError("the infinite slope arc lies on z; no crossing data")
    p, q = slope.p, slope.q
    word = beta_word(slope)
    out = []
    i, j = 1, 1
    for lt in word:
        if lt[0] in ("b", "z"):
            out.append(Crossing(lt, "v", i, fold(Fraction(i * p, q)), i * p))
            i += 1
        else:
            out.append(Crossing(lt, "h", j, fold(Fraction(j * q, p)), j * q))
            j += 1
    return tuple(out)


def alpha_word(slope):
    """Crossing word of the doubled arc.

    The doubled arc is the frontier of a thin neighborhood of the slope
    arc together with the lower-left corner disk.  Both of its ends lie
    on the upper-left corner disk: it runs back along one side of the
    arc (reversed word, flipped signs), sweeps around the lower-left
    corner crossing the y end then the z end, and returns along the
    other side (the word itself).  Rejects the infinite slope, where
    the neighborhood degenerates onto z.
    """
    if slope.q == 0:
        raise ValueError("the doubled arc degenerates for the infinite slope")
    w = beta_word(slope)
    return invert_word(w) + ALPHA_LOOP + w


def obstruction_present(word):
    """Whether all three adjacencies {x,y}, {y,z}, {z,x} occur.

    The b letters and all signs are dropped; the remaining sequence is
    read cyclically (the words fed to this test come from closed-up
    curves, so the last letter is adjacent to the first).  True iff
    each unordered pair of distinct generators from {x,y,z} appears in
    adjacent positions.
    """
    seq = [g for g, _ in word if g != "b"]
    n = len(seq)
    if n < 2:
        return False
    need = {frozenset(("x", "y")), frozenset(("y", "z")), frozenset(("z", "x"))}
    for idx in range(n):
        a, b = seq[idx], seq[(idx + 1) % n]
        if a != b:
            need.discard(frozenset((a, b)))
            if not need:
                return True
    return False
