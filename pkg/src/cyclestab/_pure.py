"""Pure-Python search kernels.

These are the reference implementations of the hot loops; the compiled
extension in ``_core.pyx`` mirrors them operation for operation, so both
backends return identical results (including witnesses, which depend on
search order: anchors ascending, neighbors ascending).

Longest-cycle / fixed-length searches run a DFS over simple paths anchored
at the minimum vertex of the cycle being sought, with two prunes: a
bitset reachability bound on the achievable cycle length, and a
best-so-far (resp. target-length) cutoff.
"""

from __future__ import annotations

from time import monotonic

from .errors import SearchTimeout

_DEADLINE_STRIDE = 2048


def _check_deadline(nodes: int, deadline) -> None:
    if deadline is not None and nodes % _DEADLINE_STRIDE == 0 and monotonic() > deadline:
        raise SearchTimeout("exact cycle search exceeded its deadline")


def _reach_from(adj, cand: int, free: int) -> int:
    """Vertices of ``free`` reachable from the candidate frontier."""
    reach = 0
    frontier = cand
    while frontier:
        reach |= frontier
        nxt = 0
        f = frontier
        while f:
            v = (f & -f).bit_length() - 1
            f &= f - 1
            nxt |= adj[v]
        frontier = nxt & free & ~reach
    return reach


def find_longest_cycle(adj, n: int, deadline=None):
    """Exact longest cycle length and one witness path, or (0, None)."""
    if n < 3:
        return 0, None
    best_len = 0
    best_path = None
    allowed = (1 << n) - 1
    path = []
    nodes = 0

    def dfs(u: int, visited: int, a: int, abit: int) -> None:
        nonlocal best_len, best_path, nodes
        nodes += 1
        _check_deadline(nodes, deadline)
        depth = len(path)
        if depth >= 3 and (adj[u] >> a) & 1 and depth > best_len:
            best_len = depth
            best_path = path.copy()
        free = allowed & ~visited
        cand = adj[u] & free
        if not cand:
            return
        reach = _reach_from(adj, cand, free)
        if depth + reach.bit_count() <= best_len:
            return
        if not (adj[a] & reach):
            return
        m = cand
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            path.append(v)
            dfs(v, visited | (1 << v), a, abit)
            path.pop()

    for a in range(n):
        if allowed.bit_count() <= best_len:
            break
        abit = 1 << a
        path.clear()
        path.append(a)
        dfs(a, abit, a, abit)
        allowed &= ~abit
    return best_len, best_path


def find_cycle_of_length(adj, n: int, t: int, deadline=None):
    """First cycle with exactly ``t`` vertices in search order, or None."""
    if t < 3 or t > n:
        return None
    allowed = (1 << n) - 1
    path = []
    nodes = 0

    def dfs(u: int, visited: int, a: int) -> bool:
        nonlocal nodes
        nodes += 1
        _check_deadline(nodes, deadline)
        depth = len(path)
        if depth == t:
            return bool((adj[u] >> a) & 1)
        free = allowed & ~visited
        cand = adj[u] & free
        if not cand:
            return False
        reach = _reach_from(adj, cand, free)
        if depth + reach.bit_count() < t:
            return False
        if not (adj[a] & reach):
            return False
        m = cand
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            path.append(v)
            if dfs(v, visited | (1 << v), a):
                return True
            path.pop()
        return False

    for a in range(n):
        if allowed.bit_count() < t:
            break
        path.clear()
        path.append(a)
        if dfs(a, 1 << a, a):
            return path.copy()
        allowed &= ~(1 << a)
    return None


def sweep_filter_range(cycle_masks, m: int, start: int, stop: int, fix_first: bool):
    """Filter a counter range of edge 2-colorings of a fixed host.

    Counter ``c`` maps to the red edge mask ``(c << 1) | 1`` when the first
    edge is pinned red (symmetry halving), else to ``c`` itself.  A coloring
    is monochromatic when one of ``cycle_masks`` (cycle edge sets) is a
    subset of either color.  Returns (mono count, red masks with no
    monochromatic cycle, in counter order).  The denser color is scanned
    first; the verdict does not depend on scan order.
    """
    full = (1 << m) - 1
    mono = 0
    monofree = []
    for c in range(start, stop):
        red = ((c << 1) | 1) if fix_first else c
        blue = red ^ full
        if 2 * red.bit_count() >= m:
            first, second = red, blue
        else:
            first, second = blue, red
        found = False
        for mask in cycle_masks:
            if not (mask & ~first):
                found = True
                break
        if not found:
            for mask in cycle_masks:
                if not (mask & ~second):
                    found = True
                    break
        if found:
            mono += 1
        else:
            monofree.append(red)
    return mono, monofree
