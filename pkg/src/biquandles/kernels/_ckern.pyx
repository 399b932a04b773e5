# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; a function-for-function port of ``pure.py``.

Both backends must produce identical outputs (results, order, and effort
counters); the pure module is the readable reference.
"""

from cpython.mem cimport PyMem_Free, PyMem_Malloc

BACKEND = "c"

CLAUSE_IDS = (
    "1.i", "1.ii", "1.iii", "1.iv",
    "2.i", "2.ii", "2.iii", "2.iv", "2.v", "2.vi",
    "3.i", "3.ii", "3.iii", "3.iv", "3.v", "3.vi",
    "4.i", "4.ii", "4.iii", "4.iv",
)

OP_UP, OP_DOWN, OP_UPBAR, OP_DOWNBAR = 1, 2, 4, 8
ALL_OPS = OP_UP | OP_DOWN | OP_UPBAR | OP_DOWNBAR


cdef int* _copy_table(seq, Py_ssize_t size) except NULL:
    cdef int* buf = <int*> PyMem_Malloc(size * sizeof(int))
    cdef Py_ssize_t i
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(size):
            buf[i] = seq[i]
    except Exception:
        PyMem_Free(buf)
        raise
    return buf


def axiom_scan(int n, up_t, down_t, upbar_t, downbar_t, first_only=False):
    """See ``pure.axiom_scan``."""
    cdef bint stop = bool(first_only)
    cdef int* up = _copy_table(up_t, n * n)
    cdef int* down = NULL
    cdef int* upbar = NULL
    cdef int* downbar = NULL
    cdef int a, b, c, x, u, d, ub, db
    cdef int c1, c2, c3, jc, p1, p2, p3
    cdef int ab_up, ba_down, ab_upbar, ba_downbar
    cdef int cb_down, bc_up, cb_downbar, bc_upbar, t1, t2
    out = []
    try:
        down = _copy_table(down_t, n * n)
        upbar = _copy_table(upbar_t, n * n)
        downbar = _copy_table(downbar_t, n * n)

        for a in range(n):
            for b in range(n):
                u = up[a * n + b]
                d = down[b * n + a]
                ub = upbar[a * n + b]
                db = downbar[b * n + a]
                if upbar[u * n + d] != a:
                    out.append((0, (a, b)))
                    if stop:
                        return out
                if downbar[d * n + u] != b:
                    out.append((1, (a, b)))
                    if stop:
                        return out
                if up[ub * n + db] != a:
                    out.append((2, (a, b)))
                    if stop:
                        return out
                if down[db * n + ub] != b:
                    out.append((3, (a, b)))
                    if stop:
                        return out

                c1 = c2 = c3 = jc = 0
                for x in range(n):
                    p1 = x == up[a * n + downbar[b * n + x]]
                    p2 = a == upbar[x * n + b]
                    p3 = b == down[downbar[b * n + x] * n + a]
                    c1 += p1
                    c2 += p2
                    c3 += p3
                    jc += p1 and p2 and p3
                if jc != 1:
                    if c1 == 1 and c2 == 1 and c3 == 1:
                        out.append((4, (a, b)))
                        if stop:
                            return out
                    else:
                        if c1 != 1:
                            out.append((4, (a, b)))
                            if stop:
                                return out
                        if c2 != 1:
                            out.append((5, (a, b)))
                            if stop:
                                return out
                        if c3 != 1:
                            out.append((6, (a, b)))
                            if stop:
                                return out

                c1 = c2 = c3 = jc = 0
                for x in range(n):
                    p1 = x == upbar[a * n + down[b * n + x]]
                    p2 = a == up[x * n + b]
                    p3 = b == downbar[down[b * n + x] * n + a]
                    c1 += p1
                    c2 += p2
                    c3 += p3
                    jc += p1 and p2 and p3
                if jc != 1:
                    if c1 == 1 and c2 == 1 and c3 == 1:
                        out.append((7, (a, b)))
                        if stop:
                            return out
                    else:
                        if c1 != 1:
                            out.append((7, (a, b)))
                            if stop:
                                return out
                        if c2 != 1:
                            out.append((8, (a, b)))
                            if stop:
                                return out
                        if c3 != 1:
                            out.append((9, (a, b)))
                            if stop:
                                return out

        for a in range(n):
            for b in range(n):
                ab_up = up[a * n + b]
                ba_down = down[b * n + a]
                ab_upbar = upbar[a * n + b]
                ba_downbar = downbar[b * n + a]
                for c in range(n):
                    cb_down = down[c * n + b]
                    bc_up = up[b * n + c]
                    if up[ab_up * n + c] != \
                            up[up[a * n + cb_down] * n + bc_up]:
                        out.append((10, (a, b, c)))
                        if stop:
                            return out
                    if down[down[c * n + b] * n + a] != \
                            down[down[c * n + ab_up] * n + ba_down]:
                        out.append((11, (a, b, c)))
                        if stop:
                            return out
                    if up[ba_down * n + down[c * n + ab_up]] != \
                            down[bc_up * n + up[a * n + cb_down]]:
                        out.append((12, (a, b, c)))
                        if stop:
                            return out
                    cb_downbar = downbar[c * n + b]
                    bc_upbar = upbar[b * n + c]
                    if upbar[ab_upbar * n + c] != \
                            upbar[upbar[a * n + cb_downbar] * n + bc_upbar]:
                        out.append((13, (a, b, c)))
                        if stop:
                            return out
                    if downbar[downbar[c * n + b] * n + a] != \
                            downbar[downbar[c * n + ab_upbar] * n
                                    + ba_downbar]:
                        out.append((14, (a, b, c)))
                        if stop:
                            return out
                    if upbar[ba_downbar * n + downbar[c * n + ab_upbar]] != \
                            downbar[bc_upbar * n
                                    + upbar[a * n + cb_downbar]]:
                        out.append((15, (a, b, c)))
                        if stop:
                            return out

        for a in range(n):
            c1 = c2 = jc = 0
            for x in range(n):
                p1 = x == down[a * n + x]
                p2 = a == up[x * n + a]
                c1 += p1
                c2 += p2
                jc += p1 and p2
            if jc != 1:
                if c1 == 1 and c2 == 1:
                    out.append((16, (a,)))
                    if stop:
                        return out
                else:
                    if c1 != 1:
                        out.append((16, (a,)))
                        if stop:
                            return out
                    if c2 != 1:
                        out.append((17, (a,)))
                        if stop:
                            return out

            c1 = c2 = jc = 0
            for x in range(n):
                p1 = x == upbar[a * n + x]
                p2 = a == downbar[x * n + a]
                c1 += p1
                c2 += p2
                jc += p1 and p2
            if jc != 1:
                if c1 == 1 and c2 == 1:
                    out.append((18, (a,)))
                    if stop:
                        return out
                else:
                    if c1 != 1:
                        out.append((18, (a,)))
                        if stop:
                            return out
                    if c2 != 1:
                        out.append((19, (a,)))
                        if stop:
                            return out
        return out
    finally:
        PyMem_Free(up)
        PyMem_Free(down)
        PyMem_Free(upbar)
        PyMem_Free(downbar)


def yang_baxter(int n, up_t, down_t):
    """See ``pure.yang_baxter``."""
    cdef int* up = _copy_table(up_t, n * n)
    cdef int* down = NULL
    cdef char* seen = NULL
    cdef int a, b, c, key, p, q, r1, s1, t1, u1
    cdef int r2, s2, t2, u2, v2, w2
    try:
        down = _copy_table(down_t, n * n)
        seen = <char*> PyMem_Malloc(n * n * sizeof(char))
        if seen == NULL:
            raise MemoryError()
        for a in range(n * n):
            seen[a] = 0
        for a in range(n):
            for b in range(n):
                key = down[b * n + a] * n + up[a * n + b]
                if seen[key]:
                    return False
                seen[key] = 1
        for a in range(n):
            for b in range(n):
                p = down[b * n + a]
                q = up[a * n + b]
                for c in range(n):
                    r1 = down[c * n + q]
                    s1 = up[q * n + c]
                    t1 = down[r1 * n + p]
                    u1 = up[p * n + r1]
                    r2 = down[c * n + b]
                    s2 = up[b * n + c]
                    t2 = down[r2 * n + a]
                    u2 = up[a * n + r2]
                    v2 = down[s2 * n + u2]
                    w2 = up[u2 * n + s2]
                    if t1 != t2 or u1 != v2 or s1 != w2:
                        return False
        return True
    finally:
        PyMem_Free(up)
        PyMem_Free(down)
        PyMem_Free(seen)


cdef struct SearchState:
    int n_src
    int n_dst
    int n_ops
    bint bij
    bint use_prof
    bint find_all
    int limit
    int* f
    int* finv
    int* assigned
    int n_assigned
    int* queue          # pairs, capacity in queue_cap
    int queue_cap
    char* prof_ok       # n_src * n_dst
    int** s_ops
    int** d_ops
    long candidates
    long work
    long prune_profile
    long prune_used
    long prune_conflict


cdef int _propagate(SearchState* st, int n_queued, int* out_trail,
                    int* trail_len) nogil:
    """Apply queued pairs plus consequences.  Returns 0 ok, 1 profile,
    2 used, 3 conflict; on failure the trail is already undone."""
    cdef int qi = 0
    cdef int qn = n_queued
    cdef int i, j, idx, i2, j2, op, r, req
    cdef int tl = 0
    cdef int n_src = st.n_src
    cdef int n_dst = st.n_dst
    while qi < qn:
        i = st.queue[2 * qi]
        j = st.queue[2 * qi + 1]
        qi += 1
        if st.f[i] != -1:
            if st.f[i] != j:
                _undo_trail(st, out_trail, tl)
                trail_len[0] = 0
                return 3
            continue
        if st.use_prof and not st.prof_ok[i * n_dst + j]:
            _undo_trail(st, out_trail, tl)
            trail_len[0] = 0
            return 1
        if st.bij and st.finv[j] != -1:
            _undo_trail(st, out_trail, tl)
            trail_len[0] = 0
            return 2
        st.f[i] = j
        if st.bij:
            st.finv[j] = i
        st.assigned[st.n_assigned] = i
        st.n_assigned += 1
        out_trail[tl] = i
        tl += 1
        for idx in range(st.n_assigned):
            i2 = st.assigned[idx]
            j2 = st.f[i2]
            for op in range(st.n_ops):
                st.work += 2
                r = st.s_ops[op][i * n_src + i2]
                req = st.d_ops[op][j * n_dst + j2]
                if st.f[r] == -1:
                    st.queue[2 * qn] = r
                    st.queue[2 * qn + 1] = req
                    qn += 1
                elif st.f[r] != req:
                    _undo_trail(st, out_trail, tl)
                    trail_len[0] = 0
                    return 3
                if i2 != i:
                    r = st.s_ops[op][i2 * n_src + i]
                    req = st.d_ops[op][j2 * n_dst + j]
                    if st.f[r] == -1:
                        st.queue[2 * qn] = r
                        st.queue[2 * qn + 1] = req
                        qn += 1
                    elif st.f[r] != req:
                        _undo_trail(st, out_trail, tl)
                        trail_len[0] = 0
                        return 3
    trail_len[0] = tl
    return 0


cdef void _undo_trail(SearchState* st, int* trail, int tl) nogil:
    cdef int k, i
    for k in range(tl - 1, -1, -1):
        i = trail[k]
        if st.bij:
            st.finv[st.f[i]] = -1
        st.f[i] = -1
        st.n_assigned -= 1


cdef int _pick_var(SearchState* st) nogil:
    cdef int best = -1
    cdef int best_count = st.n_dst + 1
    cdef int i, j, cnt
    for i in range(st.n_src):
        if st.f[i] != -1:
            continue
        if not st.bij:
            return i
        cnt = 0
        for j in range(st.n_dst):
            if st.finv[j] != -1:
                continue
            if st.use_prof and not st.prof_ok[i * st.n_dst + j]:
                continue
            cnt += 1
        if cnt < best_count:
            best = i
            best_count = cnt
    return best


cdef bint _dfs(SearchState* st, list results, int* trail_buf, int depth):
    cdef int i = _pick_var(st)
    cdef int j, rc
    cdef int tl = 0
    cdef int* trail = trail_buf + depth * st.n_src
    if i == -1:
        results.append(tuple([st.f[k] for k in range(st.n_src)]))
        return (not st.find_all) or (st.limit > 0
                                     and len(results) >= st.limit)
    for j in range(st.n_dst):
        st.candidates += 1
        st.queue[0] = i
        st.queue[1] = j
        rc = _propagate(st, 1, trail, &tl)
        if rc != 0:
            if rc == 1:
                st.prune_profile += 1
            elif rc == 2:
                st.prune_used += 1
            else:
                st.prune_conflict += 1
            continue
        if _dfs(st, results, trail_buf, depth + 1):
            _undo_trail(st, trail, tl)
            return True
        _undo_trail(st, trail, tl)
    return False


def search_maps(int n_src, src, int n_dst, dst, ops_mask=ALL_OPS,
                require_bijection=True, fixed=(), use_profiles=True,
                find_all=False, limit=0):
    """See ``pure.search_maps``."""
    cdef SearchState st
    cdef int bit_idx, i, j, a, b, rowfix, colfix
    cdef int n_fixed, rc, tl
    cdef int* trail_buf = NULL
    cdef int* diagfix = NULL
    cdef list results = []
    cdef int mask = ops_mask

    st.n_src = n_src
    st.n_dst = n_dst
    st.bij = bool(require_bijection)
    st.use_prof = bool(use_profiles) and st.bij
    st.find_all = bool(find_all)
    st.limit = limit
    st.candidates = 0
    st.work = 0
    st.prune_profile = 0
    st.prune_used = 0
    st.prune_conflict = 0
    st.n_assigned = 0
    st.f = NULL
    st.finv = NULL
    st.assigned = NULL
    st.queue = NULL
    st.prof_ok = NULL
    st.s_ops = NULL
    st.d_ops = NULL

    stats = {"candidates": 0, "work": 0,
             "prunes": {"profile": 0, "used": 0, "conflict": 0}}
    if st.bij and n_src != n_dst:
        return results, stats

    cdef int n_ops = 0
    src_tabs = []
    dst_tabs = []
    bits = (OP_UP, OP_DOWN, OP_UPBAR, OP_DOWNBAR)
    for bit_idx in range(4):
        if mask & bits[bit_idx]:
            src_tabs.append(src[bit_idx])
            dst_tabs.append(dst[bit_idx])
            n_ops += 1
    st.n_ops = n_ops

    try:
        st.f = <int*> PyMem_Malloc(max(n_src, 1) * sizeof(int))
        st.finv = <int*> PyMem_Malloc(max(n_dst, 1) * sizeof(int))
        st.assigned = <int*> PyMem_Malloc(max(n_src, 1) * sizeof(int))
        st.queue = <int*> PyMem_Malloc(
            (16 * n_src * n_src * n_ops + 4 * n_src + 16) * sizeof(int))
        st.s_ops = <int**> PyMem_Malloc(max(n_ops, 1) * sizeof(void*))
        st.d_ops = <int**> PyMem_Malloc(max(n_ops, 1) * sizeof(void*))
        # null the table slots before any possible raise: the cleanup
        # below frees whatever these arrays point at
        if st.s_ops != NULL:
            for i in range(n_ops):
                st.s_ops[i] = NULL
        if st.d_ops != NULL:
            for i in range(n_ops):
                st.d_ops[i] = NULL
        if (st.f == NULL or st.finv == NULL or st.assigned == NULL
                or st.queue == NULL or st.s_ops == NULL or st.d_ops == NULL):
            raise MemoryError()
        for i in range(n_ops):
            st.s_ops[i] = _copy_table(src_tabs[i], n_src * n_src)
            st.d_ops[i] = _copy_table(dst_tabs[i], n_dst * n_dst)
        for i in range(n_src):
            st.f[i] = -1
        for j in range(n_dst):
            st.finv[j] = -1

        if st.use_prof:
            # per-element fingerprints: (rowfix, colfix, diag) per op
            st.prof_ok = <char*> PyMem_Malloc(
                max(n_src * n_dst, 1) * sizeof(char))
            if st.prof_ok == NULL:
                raise MemoryError()
            ps = _profiles_c(&st, n_src, True)
            pd = _profiles_c(&st, n_dst, False)
            for i in range(n_src):
                for j in range(n_dst):
                    st.prof_ok[i * n_dst + j] = ps[i] == pd[j]

        trail_buf = <int*> PyMem_Malloc(
            max(n_src * (n_src + 1), 1) * sizeof(int))
        if trail_buf == NULL:
            raise MemoryError()

        n_fixed = len(fixed)
        for i in range(n_fixed):
            st.queue[2 * i] = fixed[i][0]
            st.queue[2 * i + 1] = fixed[i][1]
        tl = 0
        rc = _propagate(&st, n_fixed, trail_buf, &tl)
        if rc != 0:
            if rc == 1:
                st.prune_profile += 1
            elif rc == 2:
                st.prune_used += 1
            else:
                st.prune_conflict += 1
        else:
            _dfs(&st, results, trail_buf + n_src, 0)

        stats["candidates"] = st.candidates
        stats["work"] = st.work
        stats["prunes"]["profile"] = st.prune_profile
        stats["prunes"]["used"] = st.prune_used
        stats["prunes"]["conflict"] = st.prune_conflict
        return results, stats
    finally:
        PyMem_Free(st.f)
        PyMem_Free(st.finv)
        PyMem_Free(st.assigned)
        PyMem_Free(st.queue)
        PyMem_Free(st.prof_ok)
        PyMem_Free(trail_buf)
        if st.s_ops != NULL:
            for i in range(n_ops):
                PyMem_Free(st.s_ops[i])
        if st.d_ops != NULL:
            for i in range(n_ops):
                PyMem_Free(st.d_ops[i])
        PyMem_Free(st.s_ops)
        PyMem_Free(st.d_ops)


cdef list _profiles_c(SearchState* st, int n, bint is_src):
    cdef int a, b, op, rowfix, colfix
    cdef int** tabs = st.s_ops if is_src else st.d_ops
    profs = []
    for a in range(n):
        prof = []
        for op in range(st.n_ops):
            rowfix = 0
            colfix = 0
            for b in range(n):
                if tabs[op][a * n + b] == a:
                    rowfix += 1
                if tabs[op][b * n + a] == b:
                    colfix += 1
            prof.append((rowfix, colfix, tabs[op][a * n + a] == a))
        profs.append(tuple(prof))
    return profs


def diagram_count(int n_arcs, crossings, int n, up_t, down_t, upbar_t,
                  downbar_t, keep=False):
    """See ``pure.diagram_count``."""
    if n_arcs > 4096:  # fixed per-frame trail buffer in _diagram_dfs
        raise ValueError("diagram kernels support at most 4096 semi-arcs")
    cdef int* up = _copy_table(up_t, n * n)
    cdef int* down = NULL
    cdef int* upbar = NULL
    cdef int* downbar = NULL
    cdef int* cross = NULL
    cdef int* a = NULL
    cdef int n_cross = len(crossings)
    cdef int i, j
    cdef bint keep_flag = bool(keep)
    cdef long count = 0
    sols = [] if keep_flag else None
    try:
        down = _copy_table(down_t, n * n)
        upbar = _copy_table(upbar_t, n * n)
        downbar = _copy_table(downbar_t, n * n)
        cross = <int*> PyMem_Malloc(max(5 * n_cross, 1) * sizeof(int))
        a = <int*> PyMem_Malloc(max(n_arcs, 1) * sizeof(int))
        if cross == NULL or a == NULL:
            raise MemoryError()
        for i in range(n_cross):
            for j in range(5):
                cross[5 * i + j] = crossings[i][j]
        for i in range(n_arcs):
            a[i] = -1
        count = _diagram_dfs(n_arcs, n_cross, cross, n, up, down, upbar,
                             downbar, a, sols)
        return count, sols
    finally:
        PyMem_Free(up)
        PyMem_Free(down)
        PyMem_Free(upbar)
        PyMem_Free(downbar)
        PyMem_Free(cross)
        PyMem_Free(a)


cdef long _diagram_dfs(int n_arcs, int n_cross, int* cross, int n, int* up,
                       int* down, int* upbar, int* downbar, int* a,
                       sols):
    cdef int trail[4096]
    cdef int tl = 0
    cdef bint changed = True
    cdef bint ok = True
    cdef int ci, sg, ui, oi, uo, oo, ru, ro, i, v, k
    cdef long count = 0
    while changed:
        changed = False
        for ci in range(n_cross):
            sg = cross[5 * ci]
            ui = cross[5 * ci + 1]
            oi = cross[5 * ci + 2]
            uo = cross[5 * ci + 3]
            oo = cross[5 * ci + 4]
            if a[ui] < 0 or a[oi] < 0:
                continue
            if sg > 0:
                ru = up[a[ui] * n + a[oi]]
                ro = down[a[oi] * n + a[ui]]
            else:
                ru = upbar[a[ui] * n + a[oi]]
                ro = downbar[a[oi] * n + a[ui]]
            if a[uo] < 0:
                a[uo] = ru
                trail[tl] = uo
                tl += 1
                changed = True
            elif a[uo] != ru:
                ok = False
                changed = False
                break
            if a[oo] < 0:
                a[oo] = ro
                trail[tl] = oo
                tl += 1
                changed = True
            elif a[oo] != ro:
                ok = False
                changed = False
                break
        if not ok:
            break
    if ok:
        i = -1
        for k in range(n_arcs):
            if a[k] < 0:
                i = k
                break
        if i < 0:
            count += 1
            if sols is not None:
                sols.append(tuple([a[k] for k in range(n_arcs)]))
        else:
            for v in range(n):
                a[i] = v
                count += _diagram_dfs(n_arcs, n_cross, cross, n, up, down,
                                      upbar, downbar, a, sols)
            a[i] = -1
    for k in range(tl - 1, -1, -1):
        a[trail[k]] = -1
    return count
