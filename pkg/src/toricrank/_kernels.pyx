# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled compute kernels.

Same contract as `toricrank._kernels_py` (circuit scan, fiber
enumeration, fraction-free rank).  All inputs are two-hot 0/1 incidence
data: every determinant that can appear is a minor of a matrix whose
columns have norm sqrt(2), so its magnitude is at most 2^(k/2) with
k <= 62, and signed 64-bit arithmetic is exact throughout.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

BACKEND_NAME = "compiled"
MAX_SCAN_EDGES = 62

ctypedef long long i64
ctypedef unsigned long long u64


cdef i64 _gcd(i64 a, i64 b) noexcept:
    if a < 0:
        a = -a
    if b < 0:
        b = -b
    while b:
        a, b = b, a % b
    return a


cdef int _bareiss_rank_buf(i64* m, int nrows, int ncols) noexcept:
    cdef int rank = 0, col, r, c, piv
    cdef i64 p, f, prev = 1
    cdef i64* tmp = <i64*> malloc(ncols * sizeof(i64))
    for col in range(ncols):
        piv = -1
        for r in range(rank, nrows):
            if m[r * ncols + col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != rank:
            memcpy(tmp, m + piv * ncols, ncols * sizeof(i64))
            memcpy(m + piv * ncols, m + rank * ncols, ncols * sizeof(i64))
            memcpy(m + rank * ncols, tmp, ncols * sizeof(i64))
        p = m[rank * ncols + col]
        for r in range(rank + 1, nrows):
            f = m[r * ncols + col]
            # Every row must be rescaled each step or later exact divisions
            # by the previous pivot break.
            for c in range(col + 1, ncols):
                m[r * ncols + c] = (m[r * ncols + c] * p - f * m[rank * ncols + c]) // prev
            m[r * ncols + col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    free(tmp)
    return rank


def bareiss_rank(rows):
    """Rank over Q of a small 0/1 matrix by fraction-free elimination."""
    cdef int nrows = len(rows)
    if nrows == 0:
        return 0
    cdef int ncols = len(rows[0])
    if ncols == 0:
        return 0
    cdef i64* buf = <i64*> malloc(nrows * ncols * sizeof(i64))
    cdef int i, j
    cdef object row
    cdef long v
    try:
        for i in range(nrows):
            row = rows[i]
            if len(row) != ncols:
                raise ValueError("ragged matrix")
            for j in range(ncols):
                v = row[j]
                if v < -1 or v > 1:
                    raise ValueError("compiled rank kernel expects 0/1 entries")
                buf[i * ncols + j] = v
        return _bareiss_rank_buf(buf, nrows, ncols)
    finally:
        free(buf)


cdef i64 _det_buf(i64* a, int size) noexcept:
    cdef int k, i, j, piv
    cdef i64 sign = 1, prev = 1
    cdef i64* tmp = <i64*> malloc(size * sizeof(i64))
    if size == 0:
        free(tmp)
        return 1
    for k in range(size - 1):
        if a[k * size + k] == 0:
            piv = -1
            for i in range(k + 1, size):
                if a[i * size + k] != 0:
                    piv = i
                    break
            if piv < 0:
                free(tmp)
                return 0
            memcpy(tmp, a + piv * size, size * sizeof(i64))
            memcpy(a + piv * size, a + k * size, size * sizeof(i64))
            memcpy(a + k * size, tmp, size * sizeof(i64))
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i * size + j] = (a[i * size + j] * a[k * size + k]
                                   - a[i * size + k] * a[k * size + j]) // prev
            a[i * size + k] = 0
        prev = a[k * size + k]
    cdef i64 out = sign * a[(size - 1) * size + (size - 1)]
    free(tmp)
    return out


cdef struct ScanState:
    int n
    int m
    int* eu
    int* ev
    # per-level union-find copies: parent, parity, nonbip
    int* parent
    int* parity
    int* nonbip
    int* sel          # selected edge indices along the DFS path
    u64* masks        # masks of found circuits
    int n_circuits
    int cap_circuits
    signed char* vecs  # n_circuits rows of length m
    int** by_edge      # per edge: indices into masks
    int* by_edge_len
    int* by_edge_cap


cdef int _grow_circuits(ScanState* st) except -1:
    cdef int newcap = st.cap_circuits * 2
    cdef u64* nm = <u64*> malloc(newcap * sizeof(u64))
    cdef signed char* nv = <signed char*> malloc(newcap * st.m * sizeof(signed char))
    memcpy(nm, st.masks, st.n_circuits * sizeof(u64))
    memcpy(nv, st.vecs, st.n_circuits * st.m * sizeof(signed char))
    free(st.masks)
    free(st.vecs)
    st.masks = nm
    st.vecs = nv
    st.cap_circuits = newcap
    return 0


cdef int _register_edge(ScanState* st, int j, int idx) except -1:
    cdef int* arr
    if st.by_edge_len[j] == st.by_edge_cap[j]:
        st.by_edge_cap[j] *= 2
        arr = <int*> malloc(st.by_edge_cap[j] * sizeof(int))
        memcpy(arr, st.by_edge[j], st.by_edge_len[j] * sizeof(int))
        free(st.by_edge[j])
        st.by_edge[j] = arr
    st.by_edge[j][st.by_edge_len[j]] = idx
    st.by_edge_len[j] += 1
    return 0


cdef int _extract_circuit(ScanState* st, int* sel, int ns, int j) except -1:
    """Kernel vector of the unique circuit inside sel + [j]; sel independent."""
    cdef int s = ns, n = st.n, m = st.m
    cdef int i, r, c, v, kept, ok
    # choose s independent vertex rows greedily (rank recomputed per row)
    cdef i64* work = <i64*> malloc((s + 1) * s * sizeof(i64))
    cdef i64* probe = <i64*> malloc((s + 1) * s * sizeof(i64))
    cdef int* rows = <int*> malloc(s * sizeof(int))
    kept = 0
    for v in range(n):
        for c in range(s):
            work[kept * s + c] = 1 if (st.eu[sel[c]] == v or st.ev[sel[c]] == v) else 0
        memcpy(probe, work, (kept + 1) * s * sizeof(i64))
        if _bareiss_rank_buf(probe, kept + 1, s) == kept + 1:
            rows[kept] = v
            kept += 1
            if kept == s:
                break
    # Cramer minors over the kept rows
    cdef i64* base = <i64*> malloc(s * s * sizeof(i64))
    cdef i64* mod = <i64*> malloc(s * s * sizeof(i64))
    cdef i64* rhs = <i64*> malloc(s * sizeof(i64))
    for r in range(s):
        v = rows[r]
        for c in range(s):
            base[r * s + c] = 1 if (st.eu[sel[c]] == v or st.ev[sel[c]] == v) else 0
        rhs[r] = 1 if (st.eu[j] == v or st.ev[j] == v) else 0
    memcpy(mod, base, s * s * sizeof(i64))
    cdef i64 d = _det_buf(mod, s)
    cdef i64* full = <i64*> malloc(m * sizeof(i64))
    for c in range(m):
        full[c] = 0
    for i in range(s):
        memcpy(mod, base, s * s * sizeof(i64))
        for r in range(s):
            mod[r * s + i] = rhs[r]
        full[sel[i]] = _det_buf(mod, s)
    full[j] = -d
    cdef i64 g = 0
    for c in range(m):
        if full[c] != 0:
            g = _gcd(g, full[c])
    if g > 1:
        for c in range(m):
            full[c] = full[c] // g
    for c in range(m):
        if full[c] != 0:
            if full[c] < 0:
                for r in range(m):
                    full[r] = -full[r]
            break
    cdef u64 cmask = 0
    for c in range(m):
        if full[c] != 0:
            cmask |= (<u64> 1) << c
    ok = 1
    for i in range(st.n_circuits):
        if st.masks[i] == cmask:
            ok = 0
            break
    if ok:
        if st.n_circuits == st.cap_circuits:
            _grow_circuits(st)
        st.masks[st.n_circuits] = cmask
        for c in range(m):
            st.vecs[st.n_circuits * m + c] = <signed char> full[c]
        for c in range(m):
            if full[c] != 0:
                _register_edge(st, c, st.n_circuits)
        st.n_circuits += 1
    free(work)
    free(probe)
    free(rows)
    free(base)
    free(mod)
    free(rhs)
    free(full)
    return 0


cdef int _scan(ScanState* st, u64 mask, int depth, int last) except -1:
    cdef int n = st.n, m = st.m
    cdef int* parent = st.parent + depth * n
    cdef int* parity = st.parity + depth * n
    cdef int* nonbip = st.nonbip + depth * n
    cdef int* nparent = st.parent + (depth + 1) * n
    cdef int* nparity = st.parity + (depth + 1) * n
    cdef int* nnonbip = st.nonbip + (depth + 1) * n
    cdef int j, u, v, ru, rv, pu, pv, k, hit
    cdef u64 child, cm
    for j in range(last + 1, m):
        u = st.eu[j]
        v = st.ev[j]
        ru = u
        pu = 0
        while parent[ru] != ru:
            pu ^= parity[ru]
            ru = parent[ru]
        rv = v
        pv = 0
        while parent[rv] != rv:
            pv ^= parity[rv]
            rv = parent[rv]
        if ru != rv and not (nonbip[ru] and nonbip[rv]):
            # Bridging two components is a tree edge unless both already
            # carry an odd cycle (then the bridge completes a circuit).
            memcpy(nparent, parent, n * sizeof(int))
            memcpy(nparity, parity, n * sizeof(int))
            memcpy(nnonbip, nonbip, n * sizeof(int))
            nparent[ru] = rv
            nparity[ru] = pu ^ pv ^ 1
            if nnonbip[ru]:
                nnonbip[rv] = 1
            st.sel[depth] = j
            _scan(st, mask | ((<u64> 1) << j), depth + 1, j)
        elif ru == rv and (not nonbip[ru]) and pu == pv:
            memcpy(nparent, parent, n * sizeof(int))
            memcpy(nparity, parity, n * sizeof(int))
            memcpy(nnonbip, nonbip, n * sizeof(int))
            nnonbip[ru] = 1
            st.sel[depth] = j
            _scan(st, mask | ((<u64> 1) << j), depth + 1, j)
        else:
            child = mask | ((<u64> 1) << j)
            hit = 0
            for k in range(st.by_edge_len[j]):
                cm = st.masks[st.by_edge[j][k]]
                if (cm & child) == cm:
                    hit = 1
                    break
            if not hit:
                _extract_circuit(st, st.sel, depth, j)
    return 0


def circuit_scan(n, endpoints):
    """All circuit vectors of two-hot columns given as 0-based endpoint pairs.

    Identical output to the pure kernel: full-length coprime vectors,
    positive at the smallest support index, sorted by support.
    """
    cdef int cn = n
    cdef int m = len(endpoints)
    if m > MAX_SCAN_EDGES:
        raise ValueError(f"circuit scan supports at most {MAX_SCAN_EDGES} edges")
    if m == 0:
        return []
    cdef ScanState st
    st.n = cn
    st.m = m
    st.eu = <int*> malloc(m * sizeof(int))
    st.ev = <int*> malloc(m * sizeof(int))
    cdef int i, v
    cdef int levels = cn + 2
    st.parent = <int*> malloc(levels * cn * sizeof(int))
    st.parity = <int*> malloc(levels * cn * sizeof(int))
    st.nonbip = <int*> malloc(levels * cn * sizeof(int))
    st.sel = <int*> malloc((cn + 2) * sizeof(int))
    for v in range(cn):
        st.parent[v] = v
        st.parity[v] = 0
        st.nonbip[v] = 0
    st.cap_circuits = 64
    st.n_circuits = 0
    st.masks = <u64*> malloc(st.cap_circuits * sizeof(u64))
    st.vecs = <signed char*> malloc(st.cap_circuits * m * sizeof(signed char))
    st.by_edge = <int**> malloc(m * sizeof(int*))
    st.by_edge_len = <int*> malloc(m * sizeof(int))
    st.by_edge_cap = <int*> malloc(m * sizeof(int))
    for i in range(m):
        st.by_edge_cap[i] = 8
        st.by_edge_len[i] = 0
        st.by_edge[i] = <int*> malloc(8 * sizeof(int))
    try:
        for i in range(m):
            st.eu[i] = endpoints[i][0]
            st.ev[i] = endpoints[i][1]
        _scan(&st, 0, 0, -1)
        out = []
        for i in range(st.n_circuits):
            out.append(tuple(st.vecs[i * m + v] for v in range(m)))
        out.sort(key=_support_key)
        return out
    finally:
        free(st.eu)
        free(st.ev)
        free(st.parent)
        free(st.parity)
        free(st.nonbip)
        free(st.sel)
        free(st.masks)
        free(st.vecs)
        for i in range(m):
            free(st.by_edge[i])
        free(st.by_edge)
        free(st.by_edge_len)
        free(st.by_edge_cap)


def _support_key(vec):
    return tuple(i for i, x in enumerate(vec) if x)


def fiber_solve(endpoints, b):
    """All nonnegative exponent vectors with incidence image b, lex order."""
    cdef int n = len(b)
    cdef int m = len(endpoints)
    cdef int i, v
    cdef long long total = 0
    for i in range(n):
        total += b[i]
    if total % 2 != 0:
        return []
    out = []
    if m == 0:
        if total == 0:
            out.append(())
        return out
    cdef i64* resid = <i64*> malloc(n * sizeof(i64))
    cdef i64* expo = <i64*> malloc(m * sizeof(i64))
    cdef int* eu = <int*> malloc(m * sizeof(int))
    cdef int* ev = <int*> malloc(m * sizeof(int))
    cdef int* last_edge = <int*> malloc(n * sizeof(int))
    # finishing vertices per edge, compressed
    cdef int* fin_start = <int*> malloc((m + 1) * sizeof(int))
    cdef int* fin_vertex = <int*> malloc(n * sizeof(int))
    try:
        for i in range(n):
            resid[i] = b[i]
            last_edge[i] = -1
        for i in range(m):
            eu[i] = endpoints[i][0]
            ev[i] = endpoints[i][1]
            expo[i] = 0
            last_edge[eu[i]] = i
            last_edge[ev[i]] = i
        for v in range(n):
            if resid[v] > 0 and last_edge[v] < 0:
                return []
        pos = 0
        for i in range(m):
            fin_start[i] = pos
            for v in range(n):
                if last_edge[v] == i:
                    fin_vertex[pos] = v
                    pos += 1
        fin_start[m] = pos
        _fiber_walk(0, m, eu, ev, resid, expo, fin_start, fin_vertex, out)
        return out
    finally:
        free(resid)
        free(expo)
        free(eu)
        free(ev)
        free(last_edge)
        free(fin_start)
        free(fin_vertex)


cdef int _fiber_walk(int j, int m, int* eu, int* ev, i64* resid, i64* expo,
                     int* fin_start, int* fin_vertex, list out) except -1:
    cdef int u, v, k, ok
    cdef i64 t, top
    if j == m:
        out.append(tuple(expo[k] for k in range(m)))
        return 0
    u = eu[j]
    v = ev[j]
    top = resid[u] if resid[u] < resid[v] else resid[v]
    for t in range(top + 1):
        expo[j] = t
        resid[u] -= t
        resid[v] -= t
        ok = 1
        for k in range(fin_start[j], fin_start[j + 1]):
            if resid[fin_vertex[k]] != 0:
                ok = 0
                break
        if ok:
            _fiber_walk(j + 1, m, eu, ev, resid, expo, fin_start, fin_vertex, out)
        resid[u] += t
        resid[v] += t
    expo[j] = 0
    return 0
