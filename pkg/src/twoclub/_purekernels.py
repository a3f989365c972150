"""Pure-Python bitset kernels (fallback for the compiled ``_speedups``).

All functions take a prepared adjacency handle (here simply the tuple of
neighbor bitsets) and an ``alive`` bitset selecting the induced subgraph.
"""

BACKEND = "python"


def prepare(masks):
    return tuple(masks)


def _popcount(x):
    return bin(x).count("1")


def ball_mask(adj, alive, v, t):
    if not alive >> v & 1:
        return 0
    seen = 1 << v
    frontier = seen
    for _ in range(t):
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        nxt &= alive & ~seen
        if not nxt:
            break
        seen |= nxt
        frontier = nxt
    return seen


def is_s_club(adj, alive, s):
    rest = alive
    while rest:
        low = rest & -rest
        rest ^= low
        u = low.bit_length() - 1
        # pairs (u, w) with w < u were already checked from w's side
        if rest & ~ball_mask(adj, alive, u, s):
            return False
    return True


def far_pair(adj, alive, s):
    """Pair at distance > s in ``adj[alive]`` maximizing combined degree.

    Ties go to the lexicographically smallest pair. ``None`` if the induced
    subgraph already has diameter <= s.
    """
    best = None
    best_score = -1
    rest = alive
    while rest:
        low = rest & -rest
        rest ^= low
        u = low.bit_length() - 1
        far = rest & ~ball_mask(adj, alive, u, s)
        if not far:
            continue
        du = _popcount(adj[u] & alive)
        while far:
            lo = far & -far
            far ^= lo
            v = lo.bit_length() - 1
            score = du + _popcount(adj[v] & alive)
            if score > best_score:
                best_score = score
                best = (u, v)
    return best


def dual_branch(adj, alive, s, best_size, best_mask):
    """Exhaustive two-way deletion branching; returns (size, mask, nodes)."""
    state = [best_size, best_mask, 0]

    def rec(cur, size):
        state[2] += 1
        pair = far_pair(adj, cur, s)
        if pair is None:
            if size > state[0]:
                state[0] = size
                state[1] = cur
            return
        for w in pair:
            if size - 1 <= state[0]:
                return
            rec(cur & ~(1 << w), size - 1)

    rec(alive, _popcount(alive))
    return state[0], state[1], state[2]


def clean(adj, alive, pinned):
    """Drop vertices farther than 2 from any pinned vertex, to a fixpoint.

    Returns the new alive set, or -1 when a pinned vertex would be dropped.
    """
    if pinned & ~alive:
        return -1
    while True:
        cur = alive
        p = pinned
        while p:
            low = p & -p
            p ^= low
            cur &= ball_mask(adj, cur, low.bit_length() - 1, 2)
            if pinned & ~cur:
                return -1
        if cur == alive:
            return cur
        alive = cur


def dual_levels(adj, alive, s, best_size, best_mask):
    """Same branching tree as :func:`dual_branch`, explored level by level.

    Every node of one level has the same size, so the first level holding a
    feasible set settles the optimum; identical sets are merged per level.
    Returns (size, mask, nodes).
    """
    nodes = 0
    level = {alive}
    size = _popcount(alive)
    while level and size > best_size:
        nxt = set()
        found = None
        for cur in sorted(level):
            nodes += 1
            pair = far_pair(adj, cur, s)
            if pair is None:
                found = cur
                break
            nxt.add(cur & ~(1 << pair[0]))
            nxt.add(cur & ~(1 << pair[1]))
        if found is not None:
            return size, found, nodes
        level = nxt
        size -= 1
    return best_size, best_mask, nodes
