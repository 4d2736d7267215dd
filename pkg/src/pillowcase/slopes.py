"""Slopes of simple arcs on the square pillowcase and their classification.

A slope is a reduced fraction p/q with p odd and q even (the parity that
makes the straight arc run corner to corner between the two distinguished
vertices), or the infinite slope 1/0.  The classification splits finite
slopes into the ranges that the downstream word analysis treats
differently:

    GreaterThanOne      p/q > 1
    BetweenHalfAndOne   1/2 < p/q < 1
    ReciprocalEven      p = 1, q = 2k
    General             p > 1 and p/q < 1/2

General slopes carry three more invariants (case, subcase, k) read off
from how many whole double-steps of the vertical edges fit before the
first horizontal crossing; those drive the predicted word prefix.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class Slope:
    """A reduced slope p/q; q == 0 encodes the infinite slope."""

    p: int
    q: int

    @property
    def is_infinite(self):
        return self.q == 0

    def __str__(self):
        return "inf" if self.q == 0 else "%d/%d" % (self.p, self.q)


INFINITY = Slope(1, 0)


@dataclass(frozen=True)
class SlopeClass:
    """Classification result; case/subcase/k are None unless meaningful."""

    kind: str
    case: str = None
    subcase: int = None
    k: int = None

    def describe(self):
        if self.kind == "General":
            return "General case=%s subcase=%d k=%d" % (self.case, self.subcase, self.k)
        if self.kind == "ReciprocalEven":
            return "ReciprocalEven k=%d" % self.k
        return self.kind


def make_slope(p, q):
    """Validate and build a slope, naming the violated constraint on error."""
    if not isinstance(p, int) or not isinstance(q, int):
        raise ValueError("slope components must be integers, got (%r, %r)" % (p, q))
    if q < 0:
        raise ValueError("denominator must be nonnegative, got q=%d" % q)
    if q == 0:
        if p != 1:
            raise ValueError("the infinite slope is written 1/0, got %d/0" % p)
        return INFINITY
    if p <= 0:
        raise ValueError("numerator must be positive, got p=%d" % p)
    if gcd(p, q) != 1:
        raise ValueError("slope %d/%d is not in lowest terms" % (p, q))
    if p % 2 == 0:
        raise ValueError("numerator must be odd, got p=%d" % p)
    if q % 2 == 1:
        raise ValueError("denominator must be even, got q=%d" % q)
    return Slope(p, q)


def parse_slope(text):
    """Parse 'p/q' or 'inf'."""
    text = text.strip()
    if text == "inf":
        return INFINITY
    parts = text.split("/")
    if len(parts) != 2:
        raise ValueError("slope must look like 'p/q' or 'inf', got %r" % text)
    try:
        p, q = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError("slope components must be integers, got %r" % text)
    return make_slope(p, q)


def format_slope(slope):
    return str(slope)


def classify(slope):
    """Classify a slope; total over every valid slope.

    For General slopes let m = q // p.  When m = 2k is even the slope
    sits in (1/(2k+1), 1/2k) and the case is "a"; when m = 2k+1 is odd it
    sits in (1/(2k+2), 1/(2k+1)) and the case is "b".  The subcase
    refines by quarters: with n = (2q) // p, subcase = n - 4k + 1, which
    lands in {1, 2} exactly for case "a" and {3, 4} for case "b".  The
    boundary divisions never occur because p > 1 and gcd(p, q) = 1 keep
    q/p and 2q/p away from integers.
    """
    if slope.q == 0:
        return SlopeClass("Infinity")
    p, q = slope.p, slope.q
    if p > q:
        return SlopeClass("GreaterThanOne")
    if 2 * p > q:
        return SlopeClass("BetweenHalfAndOne")
    if p == 1:
        return SlopeClass("ReciprocalEven", k=q // 2)
    m = q // p
    if m % 2 == 0:
        case, k = "a", m // 2
    else:
        case, k = "b", (m - 1) // 2
    n = (2 * q) // p
    subcase = n - 4 * k + 1
    if case == "a":
        assert subcase in (1, 2), (slope, case, subcase)
    else:
        assert subcase in (3, 4), (slope, case, subcase)
    return SlopeClass("General", case=case, subcase=subcase, k=k)


def admissible_slopes(q_max):
    """Every valid slope with denominator at most q_max, infinity first.

    Finite slopes are emitted in increasing (q, p) order; p runs over the
    odd residues coprime to q below the 2q cutoff, after which the arcs
    repeat earlier pictures.  q_max must be even since odd denominators
    admit no valid slope.
    """
    if not isinstance(q_max, int) or q_max < 2 or q_max % 2 == 1:
        raise ValueError("q_max must be an even integer >= 2, got %r" % (q_max,))
    out = [INFINITY]
    for q in range(2, q_max + 1, 2):
        for p in range(1, 2 * q, 2):
            if gcd(p, q) == 1:
                out.append(Slope(p, q))
    return out
