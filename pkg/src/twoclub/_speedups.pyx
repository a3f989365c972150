# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitset kernels; same API as ``twoclub._purekernels``.

Bitsets are stored as little-endian arrays of 64-bit words, so graphs of
any size are supported.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, realloc, free, qsort
from libc.string cimport memcpy, memset

BACKEND = "cython"


cdef extern from *:
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil


cdef class BitAdj:
    cdef int n
    cdef int W
    cdef uint64_t* adj
    cdef uint64_t* scratch  # 4 bitsets: seen, frontier, next, tmp

    def __cinit__(self, masks):
        self.n = len(masks)
        self.W = (self.n + 63) // 64 if self.n else 1
        self.adj = <uint64_t*> malloc(max(self.n, 1) * self.W * sizeof(uint64_t))
        self.scratch = <uint64_t*> malloc(4 * self.W * sizeof(uint64_t))
        if self.adj == NULL or self.scratch == NULL:
            raise MemoryError()
        cdef int i
        for i in range(self.n):
            _load(masks[i], self.adj + i * self.W, self.W)

    def __dealloc__(self):
        free(self.adj)
        free(self.scratch)


cdef void _load(object value, uint64_t* out, int W):
    cdef bytes raw = int(value).to_bytes(W * 8, "little")
    memcpy(out, <const char*> raw, W * 8)


cdef object _store(const uint64_t* words, int W):
    return int.from_bytes((<const char*> words)[:W * 8], "little")


cdef inline int _count(const uint64_t* a, int W) noexcept nogil:
    cdef int i, c = 0
    for i in range(W):
        c += popcount64(a[i])
    return c


cdef inline int _count_and(const uint64_t* a, const uint64_t* b, int W) noexcept nogil:
    cdef int i, c = 0
    for i in range(W):
        c += popcount64(a[i] & b[i])
    return c


cdef void _ball(BitAdj g, const uint64_t* alive, int v, int t, uint64_t* seen) noexcept nogil:
    """Closed ball of radius t around v inside alive, written into seen."""
    cdef int W = g.W, i, j, step, u
    cdef uint64_t* frontier = g.scratch + W
    cdef uint64_t* nxt = g.scratch + 2 * W
    cdef uint64_t word, any_new
    cdef const uint64_t* row
    memset(seen, 0, W * sizeof(uint64_t))
    if not (alive[v >> 6] >> (v & 63)) & 1:
        return
    seen[v >> 6] = (<uint64_t> 1) << (v & 63)
    memcpy(frontier, seen, W * sizeof(uint64_t))
    for step in range(t):
        memset(nxt, 0, W * sizeof(uint64_t))
        for i in range(W):
            word = frontier[i]
            while word:
                u = (i << 6) + ctz64(word)
                word &= word - 1
                row = g.adj + u * W
                for j in range(W):
                    nxt[j] |= row[j]
        any_new = 0
        for i in range(W):
            nxt[i] &= alive[i] & ~seen[i]
            any_new |= nxt[i]
        if not any_new:
            break
        for i in range(W):
            seen[i] |= nxt[i]
        memcpy(frontier, nxt, W * sizeof(uint64_t))


cdef bint _far_pair(BitAdj g, const uint64_t* alive, int s, int* pu, int* pv) noexcept nogil:
    cdef int W = g.W, i, k, u, v, du, score, best = -1
    cdef uint64_t* seen = g.scratch + 3 * W
    cdef uint64_t word, far
    for i in range(W):
        word = alive[i]
        while word:
            u = (i << 6) + ctz64(word)
            word &= word - 1
            _ball(g, alive, u, s, seen)
            du = -1
            # only partners with larger id: bits above u
            for k in range(i, W):
                far = alive[k] & ~seen[k]
                if k == i:
                    far &= word
                while far:
                    v = (k << 6) + ctz64(far)
                    far &= far - 1
                    if du < 0:
                        du = _count_and(g.adj + u * W, alive, W)
                    score = du + _count_and(g.adj + v * W, alive, W)
                    if score > best:
                        best = score
                        pu[0] = u
                        pv[0] = v
    return best >= 0


cdef bint _is_s_club(BitAdj g, const uint64_t* alive, int s) noexcept nogil:
    cdef int W = g.W, i, k, u
    cdef uint64_t* seen = g.scratch + 3 * W
    cdef uint64_t word, far
    for i in range(W):
        word = alive[i]
        while word:
            u = (i << 6) + ctz64(word)
            word &= word - 1
            _ball(g, alive, u, s, seen)
            for k in range(i, W):
                far = alive[k] & ~seen[k]
                if k == i:
                    far &= word
                if far:
                    return False
    return True


cdef struct Search:
    int s
    int best_size
    long long nodes
    uint64_t* best


cdef void _branch(BitAdj g, Search* st, uint64_t* cur, int size) noexcept nogil:
    cdef int W = g.W, u = 0, v = 0, w, r
    cdef uint64_t* child = cur + W
    st.nodes += 1
    if not _far_pair(g, cur, st.s, &u, &v):
        if size > st.best_size:
            st.best_size = size
            memcpy(st.best, cur, W * sizeof(uint64_t))
        return
    for r in range(2):
        if size - 1 <= st.best_size:
            return
        w = u if r == 0 else v
        memcpy(child, cur, W * sizeof(uint64_t))
        child[w >> 6] &= ~((<uint64_t> 1) << (w & 63))
        _branch(g, st, child, size - 1)


def prepare(masks):
    return BitAdj(masks)


def ball_mask(BitAdj g, alive, int v, int t):
    cdef int W = g.W
    cdef uint64_t* buf = <uint64_t*> malloc(2 * W * sizeof(uint64_t))
    try:
        _load(alive, buf, W)
        _ball(g, buf, v, t, buf + W)
        return _store(buf + W, W)
    finally:
        free(buf)


def is_s_club(BitAdj g, alive, int s):
    cdef int W = g.W
    cdef uint64_t* buf = <uint64_t*> malloc(W * sizeof(uint64_t))
    try:
        _load(alive, buf, W)
        return bool(_is_s_club(g, buf, s))
    finally:
        free(buf)


def far_pair(BitAdj g, alive, int s):
    cdef int W = g.W, u = 0, v = 0
    cdef uint64_t* buf = <uint64_t*> malloc(W * sizeof(uint64_t))
    try:
        _load(alive, buf, W)
        if _far_pair(g, buf, s, &u, &v):
            return (u, v)
        return None
    finally:
        free(buf)


def dual_branch(BitAdj g, alive, int s, int best_size, best_mask):
    cdef int W = g.W
    cdef Search st
    # one bitset per recursion level; depth never exceeds n
    cdef uint64_t* stack = <uint64_t*> malloc((g.n + 2) * W * sizeof(uint64_t))
    st.best = <uint64_t*> malloc(W * sizeof(uint64_t))
    try:
        st.s = s
        st.best_size = best_size
        st.nodes = 0
        _load(best_mask, st.best, W)
        _load(alive, stack, W)
        with nogil:
            _branch(g, &st, stack, _count(stack, W))
        return st.best_size, _store(st.best, W), st.nodes
    finally:
        free(stack)
        free(st.best)


def clean(BitAdj g, alive, pinned):
    cdef int W = g.W, i, k, p
    cdef uint64_t* cur = <uint64_t*> malloc(3 * W * sizeof(uint64_t))
    cdef uint64_t* pin = cur + W
    cdef uint64_t* reach = cur + 2 * W
    cdef uint64_t word, changed, bad
    try:
        _load(alive, cur, W)
        _load(pinned, pin, W)
        for i in range(W):
            if pin[i] & ~cur[i]:
                return -1
        with nogil:
            changed = 1
            bad = 0
            while changed and not bad:
                changed = 0
                for i in range(W):
                    word = pin[i]
                    while word and not bad:
                        p = (i << 6) + ctz64(word)
                        word &= word - 1
                        _ball(g, cur, p, 2, reach)
                        for k in range(W):
                            changed |= cur[k] & ~reach[k]
                            cur[k] &= reach[k]
                            bad |= pin[k] & ~cur[k]
        if bad:
            return -1
        return _store(cur, W)
    finally:
        free(cur)


cdef int _cmp_words = 1


cdef int _cmp_sets(const void* a, const void* b) noexcept nogil:
    # integer order of the bitsets: most significant word first
    cdef const uint64_t* x = <const uint64_t*> a
    cdef const uint64_t* y = <const uint64_t*> b
    cdef int i
    for i in range(_cmp_words - 1, -1, -1):
        if x[i] < y[i]:
            return -1
        if x[i] > y[i]:
            return 1
    return 0


def dual_levels(BitAdj g, alive, int s, int best_size, best_mask):
    global _cmp_words
    cdef int W = g.W, size, u = 0, v = 0, w, r
    cdef Py_ssize_t count = 1, nxt_count, i, k, cap = 1, nxt_cap
    cdef long long nodes = 0
    cdef uint64_t* level = <uint64_t*> malloc(W * sizeof(uint64_t))
    cdef uint64_t* nxt = NULL
    cdef uint64_t* cur
    cdef uint64_t* child
    cdef uint64_t* grown
    cdef bint found = False
    try:
        _load(alive, level, W)
        size = _count(level, W)
        _cmp_words = W
        while count > 0 and size > best_size:
            nxt_cap = 2 * count
            nxt = <uint64_t*> malloc(nxt_cap * W * sizeof(uint64_t))
            if nxt == NULL:
                raise MemoryError()
            nxt_count = 0
            for i in range(count):
                cur = level + i * W
                nodes += 1
                if not _far_pair(g, cur, s, &u, &v):
                    found = True
                    result = _store(cur, W)
                    break
                for r in range(2):
                    w = u if r == 0 else v
                    child = nxt + nxt_count * W
                    memcpy(child, cur, W * sizeof(uint64_t))
                    child[w >> 6] &= ~((<uint64_t> 1) << (w & 63))
                    nxt_count += 1
            if found:
                return size, result, nodes
            free(level)
            level = nxt
            nxt = NULL
            # sort and drop duplicates
            qsort(level, nxt_count, W * sizeof(uint64_t), _cmp_sets)
            k = 0
            for i in range(nxt_count):
                if k == 0 or _cmp_sets(level + (k - 1) * W, level + i * W) != 0:
                    if k != i:
                        memcpy(level + k * W, level + i * W, W * sizeof(uint64_t))
                    k += 1
            count = k
            size -= 1
        return best_size, best_mask, nodes
    finally:
        free(level)
        free(nxt)
