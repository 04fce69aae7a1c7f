"""Pure-Python reduction and rank kernels.

Both functions mirror the compiled versions in ``_ckernel.pyx``.  Exponent
vectors arrive already permuted into order-priority coordinates, so native
tuple comparison is the lexicographic monomial order.
"""


def top_reduce(terms, gens, full, bound):
    """Reduce ``terms`` by ``gens``; see :func:`grassgb.kernel.top_reduce`."""
    if not terms:
        return [], []
    lms = [g[0] for g in gens]
    tails = [g[1:] for g in gens]
    colmax = [[max(col) for col in zip(*g)] for g in gens]
    cur = list(terms)
    start = 0
    rem = []
    steps = []
    while start < len(cur):
        lead = cur[start]
        for j, lm in enumerate(lms):
            if all(a <= b for a, b in zip(lm, lead)):
                break
        else:
            if not full:
                break
            rem.append(lead)
            start += 1
            continue
        m = tuple(b - a for a, b in zip(lm, lead))
        if any(x + y >= bound for x, y in zip(m, colmax[j])):
            for t in tails[j]:
                if any(x + y >= bound for x, y in zip(m, t)):
                    raise OverflowError(f"exponent bound {bound} reached during reduction")
        prod = {tuple(x + y for x, y in zip(m, t)) for t in tails[j]}
        live = set(cur[start + 1:])
        live ^= prod
        cur = sorted(live, reverse=True)
        start = 0
        steps.append((m, j))
    rem.extend(cur[start:])
    return rem, steps


def gf2_rank(rows):
    """Rank over GF(2) of rows given as integer bitmasks."""
    pivots = {}
    for r in rows:
        while r:
            h = r.bit_length() - 1
            p = pivots.get(h)
            if p is None:
                pivots[h] = r
                break
            r ^= p
    return len(pivots)
