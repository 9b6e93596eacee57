"""Pure-Python versions of the integer kernels in ``_speedups.pyx``.

Both modules expose the same functions with the same results; ``kernels``
picks one at import time.
"""


def linear_member(base, periods, target):
    """Is ``target - base`` a nonnegative integer combination of ``periods``?

    Periods must be nonzero. Depth-first search over the periods, bounding
    each coefficient by the largest multiple that still fits under the
    remainder and pruning when a remaining coordinate can no longer be hit.
    """
    rest = tuple(t - b for t, b in zip(target, base))
    if any(r < 0 for r in rest):
        return False
    k = len(periods)
    d = len(rest)
    # support[i]: coordinates some period i..k-1 can still change
    support = [frozenset()] * (k + 1)
    for i in range(k - 1, -1, -1):
        support[i] = support[i + 1] | {j for j in range(d) if periods[i][j]}
    failed = set()

    def search(i, rem):
        if i == k:
            return not any(rem)
        if any(rem[j] for j in range(d) if j not in support[i]):
            return False
        if (i, rem) in failed:
            return False
        p = periods[i]
        bound = min(rem[j] // p[j] for j in range(d) if p[j])
        for x in range(bound, -1, -1):
            nxt = tuple(r - x * v for r, v in zip(rem, p))
            if search(i + 1, nxt):
                return True
        failed.add((i, rem))
        return False

    return search(0, rest)


def closure_covers(available, roots, intros):
    """Adjoinability fixpoint over nonterminal bitmasks.

    ``available`` is the bitmask of nonterminals of the tree; ``roots[i]`` is
    the bit of member i's root and ``intros[i]`` the mask of nonterminals it
    introduces. True iff every member becomes usable.
    """
    n = len(roots)
    used = [False] * n
    remaining = n
    changed = True
    while changed and remaining:
        changed = False
        for i in range(n):
            if not used[i] and available & roots[i]:
                used[i] = True
                remaining -= 1
                available |= intros[i]
                changed = True
    return remaining == 0
