"""Independent reference computations used by the tests."""

import itertools
from math import gcd


def det(m):
    """Integer determinant by fraction-free (Bareiss) elimination."""
    m = [list(row) for row in m]
    n = len(m)
    sign, prev = 1, 1
    for c in range(n - 1):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            sign = -sign
        for r in range(c + 1, n):
            for j in range(c + 1, n):
                m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) // prev
        prev = m[c][c]
    return sign * m[n - 1][n - 1] if n else 1


def determinantal_invariants(rows, ncols):
    """(rank, torsion) of Z^ncols / rowspan from gcds of k x k minors."""
    def normalized(r):
        lead = next(x for x in r if x)
        return tuple(x if lead > 0 else -x for x in r)

    rows = sorted({normalized(r) for r in rows if any(r)})
    divisors = [1]
    for k in range(1, min(len(rows), ncols) + 1):
        g = 0
        for rs in itertools.combinations(range(len(rows)), k):
            for cs in itertools.combinations(range(ncols), k):
                g = gcd(g, det([[rows[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        divisors.append(g)
    factors = [divisors[i] // divisors[i - 1] for i in range(1, len(divisors))]
    return ncols - len(factors), tuple(f for f in factors if f > 1)
