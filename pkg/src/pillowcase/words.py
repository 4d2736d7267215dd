"""Signed words over the free group on the four generators x, y, z, b.

A letter is a pair ``(generator, sign)`` with generator one of ``"x"``,
``"y"``, ``"z"``, ``"b"`` and sign ``+1`` or ``-1``.  A word is a tuple of
letters; the empty tuple is the empty word.

Text syntax: a letter is written as its generator character, followed by
an apostrophe when inverted, so ``"bz'xb'zb'y"`` reads b z^-1 x b^-1 z
b^-1 y.  The apostrophe was chosen over a caret or unicode superscript to
keep words grep-able and shell-safe in reports and golden files.
"""

from __future__ import annotations

GENERATORS = ("x", "y", "z", "b")

# Letters are interned: every letter returned by this module is one of
# these eight tuples, so building multi-million-letter words only appends
# references instead of allocating.
_INTERNED = {(g, s): (g, s) for g in GENERATORS for s in (1, -1)}

# inverse letter lookup
_FLIP = {(g, s): _INTERNED[(g, -s)] for (g, s) in _INTERNED}

_MAX_PREFIX_K = 10 ** 6


def letter(generator, sign):
    """Return the interned letter, validating generator and sign."""
    try:
        return _INTERNED[(generator, sign)]
    except KeyError:
        raise ValueError(
            "letter must be one of x, y, z, b with sign +1 or -1, got %r"
            % ((generator, sign),)
        )


def parse_word(text):
    """Parse the apostrophe syntax into a word.

    >>> parse_word("bz'x")
    (('b', 1), ('z', -1), ('x', 1))
    """
    out = []
    i = 0
    n = len(text)
    while i < n:
        g = text[i]
        if g not in GENERATORS:
            raise ValueError("unknown generator %r at position %d in %r" % (g, i, text))
        i += 1
        if i < n and text[i] == "'":
            out.append(_INTERNED[(g, -1)])
            i += 1
        else:
            out.append(_INTERNED[(g, 1)])
    return tuple(out)


def format_word(word):
    """Inverse of parse_word; the empty word formats as ''."""
    return "".join(g if s > 0 else g + "'" for (g, s) in word)


def invert_word(word):
    """Reverse the word and flip every sign."""
    return tuple(_FLIP[l] for l in reversed(word))


def free_reduce(word):
    """Delete adjacent inverse pairs until none remain.

    The result is the unique reduced representative of the word in the
    free group.  A single left-to-right stack pass suffices: a newly
    exposed pair is always caught because the stack top is re-examined
    after every deletion.
    """
    stack = []
    push = stack.append
    pop = stack.pop
    for l in word:
        if stack and stack[-1][0] == l[0] and stack[-1][1] != l[1]:
            pop()
        else:
            push(l)
    return tuple(stack)


def is_trivial(word):
    """True iff the word reduces to the empty word."""
    return not free_reduce(word)


def has_prefix(candidate, prefix):
    """True iff prefix equals the initial segment of candidate."""
    prefix = tuple(prefix)
    return tuple(candidate[: len(prefix)]) == prefix


def expected_prefix(subcase, k):
    """The predicted leading word of a classified arc word.

    Subcases 1..4 give, with h = (b z')^k and t = (b' z)^k:

        1:  h x t y' b
        2:  h x t b' y
        3:  h b x' z t y' b
        4:  h b x' z t b' y

    Lengths are 4k+3 for subcases 1 and 2, 4k+5 for 3 and 4.  Outputs are
    already freely reduced.
    """
    if subcase not in (1, 2, 3, 4):
        raise ValueError("subcase must be in 1..4, got %r" % (subcase,))
    if not isinstance(k, int) or k < 1:
        raise ValueError("k must be a positive integer, got %r" % (k,))
    if k > _MAX_PREFIX_K:
        raise ValueError("k exceeds the defensive cap %d" % _MAX_PREFIX_K)
    b, bi = _INTERNED[("b", 1)], _INTERNED[("b", -1)]
    z, zi = _INTERNED[("z", 1)], _INTERNED[("z", -1)]
    x, xi = _INTERNED[("x", 1)], _INTERNED[("x", -1)]
    y, yi = _INTERNED[("y", 1)], _INTERNED[("y", -1)]
    head = [b, zi] * k
    mid = [bi, z] * k
    out = list(head)
    if subcase in (1, 2):
        out.append(x)
    else:
        out.extend((b, xi, z))
    out.extend(mid)
    if subcase in (1, 3):
        out.extend((yi, b))
    else:
        out.extend((bi, y))
    return tuple(out)


def _runs(word):
    """Maximal runs of one repeated letter, as (letter, start, length)."""
    runs = []
    i = 0
    n = len(word)
    while i < n:
        j = i + 1
        while j < n and word[j] == word[i]:
            j += 1
        runs.append((word[i], i, j - i))
        i = j
    return runs


def nesting_profile(word):
    """Locate the nested cancellation sites of a word.

    A site is a contiguous block g..g g'..g' (d copies of a letter
    followed immediately by d copies of its inverse) which cancels inward
    to nothing; it is reported as ``(generator, depth, start)`` where
    start indexes the first letter that takes part in the cancellation.
    When the two runs have unequal lengths only the inner min(a, b) pairs
    cancel, so the site starts where the surviving outer letters stop.

    The scan is greedy left to right over run boundaries and consumes
    both runs of a reported site, so overlapping candidates are reported
    as separate non-overlapping sites.  Cancellations that only appear
    after other deletions (interleaved generators) are not sites; they
    are cascades, and the profile deliberately reports only what is
    visible in the written word.  The profile is empty iff the word is
    freely reduced.
    """
    runs = _runs(word)
    sites = []
    i = 0
    while i + 1 < len(runs):
        (l1, s1, n1), (l2, s2, n2) = runs[i], runs[i + 1]
        if l1[0] == l2[0] and l1[1] != l2[1]:
            depth = min(n1, n2)
            sites.append((l1[0], depth, s2 - depth))
            i += 2
        else:
            i += 1
    return sites
