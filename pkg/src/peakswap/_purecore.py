"""Pure-Python enumeration kernels (fallback for the compiled extension).

Everything here works on raw integers: `closed` is the per-node closed
neighborhood bitmask, `blue` the blue-node bitmask, and the peak is the
pair (lp, lq) meaning lp/lq. Scores are compared by cross-multiplication,
so there is no floating point anywhere.

The compiled twin in _fastcore.pyx implements exactly the same contract;
tests assert agreement between the two.
"""

from __future__ import annotations

BACKEND_NAME = "pure"


def _score(x: int, y: int, lp: int, lq: int) -> tuple[int, int]:
    # Fraction folded onto the rising side of the peak, as num/den.
    if x * lq <= y * lp:
        return x, y
    return lp * (y - x), (lq - lp) * y


def _score_less(x1, y1, x2, y2, lp, lq) -> bool:
    n1, d1 = _score(x1, y1, lp, lq)
    n2, d2 = _score(x2, y2, lp, lq)
    return n1 * d2 < n2 * d1


def swap_profitable(closed, deg, n, blue, u, v, lp, lq) -> bool:
    """True iff exchanging the (differently colored) nodes u, v strictly
    improves the peak score of both moved agents."""
    ubit, vbit = 1 << u, 1 << v
    if bool(blue & ubit) == bool(blue & vbit):
        return False
    if not blue & ubit:
        u, v = v, u
        ubit, vbit = vbit, ubit
    full = (1 << n) - 1
    newblue = blue ^ ubit ^ vbit
    # Blue agent moving from u to v.
    xo = (closed[u] & blue).bit_count()
    xn = (closed[v] & newblue).bit_count()
    if not _score_less(xo, deg[u] + 1, xn, deg[v] + 1, lp, lq):
        return False
    # Red agent moving from v to u.
    red, newred = full ^ blue, full ^ newblue
    xo = (closed[v] & red).bit_count()
    xn = (closed[u] & newred).bit_count()
    return _score_less(xo, deg[v] + 1, xn, deg[u] + 1, lp, lq)


def find_counterexample(closed, deg, n, blue, lp, lq):
    """First profitable swap in lexicographic (u,v) order, or (-1,-1)."""
    for u in range(n):
        for v in range(u + 1, n):
            if bool(blue >> u & 1) != bool(blue >> v & 1):
                if swap_profitable(closed, deg, n, blue, u, v, lp, lq):
                    return u, v
    return -1, -1


def _doi(closed, n, blue) -> int:
    full = (1 << n) - 1
    red = full ^ blue
    seg = 0
    for v in range(n):
        c = closed[v]
        same = c & blue if blue >> v & 1 else c & red
        if same == c:
            seg += 1
    return n - seg


def _seg_colors(closed, n, blue) -> tuple[int, int]:
    full = (1 << n) - 1
    red = full ^ blue
    seg_blue = seg_red = 0
    for v in range(n):
        c = closed[v]
        if blue >> v & 1:
            if c & blue == c:
                seg_blue += 1
        elif c & red == c:
            seg_red += 1
    return seg_blue, seg_red


def _phi(edges_u, edges_v, blue) -> int:
    count = 0
    for u, v in zip(edges_u, edges_v):
        if (blue >> u & 1) == (blue >> v & 1):
            count += 1
    return count


def _subsets(n: int, b: int):
    # Gosper's hack: all b-subsets of n bits in increasing (colex) order.
    mask = (1 << b) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        c = mask & -mask
        r = mask + c
        mask = (((r ^ mask) >> 2) // c) | r


def sweep(closed, deg, edges_u, edges_v, n, b, lp, lq):
    """Full sweep over all C(n,b) blue placements.

    Returns (profiles, se_count, min_se_doi, min_se_mask, max_se_doi,
    max_se_mask, opt_doi, opt_mask, min_phi, min_phi_mask,
    se_both_colors_segregated). Mask fields are -1 when no SE exists;
    ties keep the first profile in colex order.
    """
    profiles = 0
    se_count = 0
    min_se_doi = max_se_doi = -1
    min_se_mask = max_se_mask = -1
    opt_doi = -1
    opt_mask = -1
    min_phi = -1
    min_phi_mask = -1
    both_seg = 0
    for blue in _subsets(n, b):
        profiles += 1
        d = _doi(closed, n, blue)
        if d > opt_doi:
            opt_doi, opt_mask = d, blue
        phi = _phi(edges_u, edges_v, blue)
        if min_phi < 0 or phi < min_phi:
            min_phi, min_phi_mask = phi, blue
        u, _ = find_counterexample(closed, deg, n, blue, lp, lq)
        if u < 0:
            se_count += 1
            if min_se_doi < 0 or d < min_se_doi:
                min_se_doi, min_se_mask = d, blue
            if d > max_se_doi:
                max_se_doi, max_se_mask = d, blue
            sb, sr = _seg_colors(closed, n, blue)
            if sb > 0 and sr > 0:
                both_seg += 1
    return (profiles, se_count, min_se_doi, min_se_mask, max_se_doi,
            max_se_mask, opt_doi, opt_mask, min_phi, min_phi_mask, both_seg)


def max_doi(closed, edges_u, edges_v, n, b, cap):
    """Exhaustive DoI maximum with early exit once `cap` is reached.

    Returns (best, mask, profiles_checked).
    """
    best = -1
    best_mask = -1
    profiles = 0
    for blue in _subsets(n, b):
        profiles += 1
        d = _doi(closed, n, blue)
        if d > best:
            best, best_mask = d, blue
            if best >= cap:
                break
    return best, best_mask, profiles
