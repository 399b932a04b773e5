"""Pure-Python reference kernels for the hot loops.

All kernels work on 0-based flattened operation tables (``t[i*n + j]`` is the
result of element ``i`` operated by element ``j``).  The public library wraps
these with the 1-based table objects; the compiled extension module mirrors
this module function-for-function.

Clause codes index ``CLAUSE_IDS`` below.  Axioms 2 and 4 quantify one unknown
jointly over a group of clauses ("there are unique x, y such that ..."), so a
group passes iff exactly one element satisfies all member clauses at once.
A failing group is blamed on each member clause that individually lacks a
unique solution, or on the group's first clause when the members solve
uniquely but disagree.
"""

BACKEND = "pure"

CLAUSE_IDS = (
    "1.i", "1.ii", "1.iii", "1.iv",
    "2.i", "2.ii", "2.iii", "2.iv", "2.v", "2.vi",
    "3.i", "3.ii", "3.iii", "3.iv", "3.v", "3.vi",
    "4.i", "4.ii", "4.iii", "4.iv",
)

OP_UP, OP_DOWN, OP_UPBAR, OP_DOWNBAR = 1, 2, 4, 8
ALL_OPS = OP_UP | OP_DOWN | OP_UPBAR | OP_DOWNBAR


def axiom_scan(n, up, down, upbar, downbar, first_only=False):
    """Scan all biquandle axiom clauses; return [(clause_code, witness)].

    Witnesses are 0-based tuples: (a, b) for axioms 1-2, (a, b, c) for
    axiom 3, (a,) for axiom 4.  With ``first_only`` the scan stops at the
    first violation (used by enumeration; reports stay exhaustive otherwise).
    """
    out = []

    def emit(code, wit):
        out.append((code, wit))
        return first_only

    def group(head, wit, *sols):
        """Joint existence-and-uniqueness check for one clause group."""
        joint = sols[0]
        for s in sols[1:]:
            joint = [x for x in joint if x in s]
        if len(joint) == 1:
            return False
        blamed = [head + off for off, s in enumerate(sols) if len(s) != 1]
        for code in blamed or [head]:
            if emit(code, wit):
                return True
        return False

    for a in range(n):
        ra_up = up[a * n:a * n + n]
        ra_upbar = upbar[a * n:a * n + n]
        for b in range(n):
            u = up[a * n + b]
            d = down[b * n + a]
            ub = upbar[a * n + b]
            db = downbar[b * n + a]
            # axiom 1: the barred pair inverts the unbarred pair and back
            if upbar[u * n + d] != a and emit(0, (a, b)):
                return out
            if downbar[d * n + u] != b and emit(1, (a, b)):
                return out
            if up[ub * n + db] != a and emit(2, (a, b)):
                return out
            if down[db * n + ub] != b and emit(3, (a, b)):
                return out

            # axiom 2, x-group (codes 4..6) and y-group (codes 7..9)
            s1 = [x for x in range(n) if x == ra_up[downbar[b * n + x]]]
            s2 = [x for x in range(n) if a == upbar[x * n + b]]
            s3 = [x for x in range(n) if b == down[downbar[b * n + x] * n + a]]
            if group(4, (a, b), s1, s2, s3) and first_only:
                return out

            s1 = [y for y in range(n) if y == ra_upbar[down[b * n + y]]]
            s2 = [y for y in range(n) if a == up[y * n + b]]
            s3 = [y for y in range(n) if b == downbar[down[b * n + y] * n + a]]
            if group(7, (a, b), s1, s2, s3) and first_only:
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
                if up[ab_up * n + c] != up[up[a * n + cb_down] * n + bc_up]:
                    if emit(10, (a, b, c)):
                        return out
                if down[down[c * n + b] * n + a] != \
                        down[down[c * n + ab_up] * n + ba_down]:
                    if emit(11, (a, b, c)):
                        return out
                if up[ba_down * n + down[c * n + ab_up]] != \
                        down[bc_up * n + up[a * n + cb_down]]:
                    if emit(12, (a, b, c)):
                        return out
                cb_downbar = downbar[c * n + b]
                bc_upbar = upbar[b * n + c]
                if upbar[ab_upbar * n + c] != \
                        upbar[upbar[a * n + cb_downbar] * n + bc_upbar]:
                    if emit(13, (a, b, c)):
                        return out
                if downbar[downbar[c * n + b] * n + a] != \
                        downbar[downbar[c * n + ab_upbar] * n + ba_downbar]:
                    if emit(14, (a, b, c)):
                        return out
                if upbar[ba_downbar * n + downbar[c * n + ab_upbar]] != \
                        downbar[bc_upbar * n + upbar[a * n + cb_downbar]]:
                    if emit(15, (a, b, c)):
                        return out

    for a in range(n):
        # axiom 4, x-group (codes 16..17), y-group (18..19)
        s1 = [x for x in range(n) if x == down[a * n + x]]
        s2 = [x for x in range(n) if a == up[x * n + a]]
        if group(16, (a,), s1, s2) and first_only:
            return out

        s1 = [y for y in range(n) if y == upbar[a * n + y]]
        s2 = [y for y in range(n) if a == downbar[y * n + a]]
        if group(18, (a,), s1, s2) and first_only:
            return out

    return out


def yang_baxter(n, up, down):
    """True iff S(a,b) = (b_a, a^b) is a bijection satisfying the YBE."""
    seen = bytearray(n * n)
    for a in range(n):
        for b in range(n):
            key = down[b * n + a] * n + up[a * n + b]
            if seen[key]:
                return False
            seen[key] = 1

    for a in range(n):
        for b in range(n):
            p, q = down[b * n + a], up[a * n + b]
            for c in range(n):
                # (S x I)(I x S)(S x I)
                r1, s1 = down[c * n + q], up[q * n + c]
                t1, u1 = down[r1 * n + p], up[p * n + r1]
                lhs = (t1, u1, s1)
                # (I x S)(S x I)(I x S)
                r2, s2 = down[c * n + b], up[b * n + c]
                t2, u2 = down[r2 * n + a], up[a * n + r2]
                v2, w2 = down[s2 * n + u2], up[u2 * n + s2]
                rhs = (t2, v2, w2)
                if lhs != rhs:
                    return False
    return True


def _profiles(n, tables, mask):
    """Per-element fingerprints preserved by bijective op-preserving maps."""
    profs = []
    for a in range(n):
        prof = []
        for bit, t in zip((OP_UP, OP_DOWN, OP_UPBAR, OP_DOWNBAR), tables):
            if not mask & bit:
                continue
            rowfix = sum(1 for b in range(n) if t[a * n + b] == a)
            colfix = sum(1 for b in range(n) if t[b * n + a] == b)
            prof.append((rowfix, colfix, t[a * n + a] == a))
        profs.append(tuple(prof))
    return profs


def search_maps(n_src, src, n_dst, dst, ops_mask=ALL_OPS,
                require_bijection=True, fixed=(), use_profiles=True,
                find_all=False, limit=0):
    """Backtracking search for operation-preserving maps src -> dst.

    ``src``/``dst`` are 4-tuples of flat tables (up, down, upbar, downbar);
    ``ops_mask`` selects which operations must be preserved.  ``fixed``
    pre-assigns (i, j) pairs.  Assigning f(i) propagates every consequence
    f(t(i, i2)) = t'(f(i), f(i2)) over already-assigned i2 before the next
    branch, so branching happens only at genuinely free elements.

    Returns (maps, stats) where maps is a list of length-n_src tuples in
    deterministic search order and stats counts candidates, prunes by
    reason, and constraint evaluations ("work").
    """
    ops = [(s, d) for bit, s, d in zip(
        (OP_UP, OP_DOWN, OP_UPBAR, OP_DOWNBAR), src, dst) if ops_mask & bit]
    stats = {"candidates": 0, "work": 0,
             "prunes": {"profile": 0, "used": 0, "conflict": 0}}
    results = []
    if require_bijection and n_src != n_dst:
        return results, stats

    profs_ok = None
    if use_profiles and require_bijection:
        ps = _profiles(n_src, src, ops_mask)
        pd = _profiles(n_dst, dst, ops_mask)
        profs_ok = [[ps[i] == pd[j] for j in range(n_dst)]
                    for i in range(n_src)]

    f = [-1] * n_src
    finv = [-1] * n_dst
    assigned = []

    def propagate(queue):
        """Apply queued assignments plus consequences; None on conflict."""
        trail = []
        qi = 0
        while qi < len(queue):
            i, j = queue[qi]
            qi += 1
            if f[i] != -1:
                if f[i] != j:
                    _undo(trail)
                    return None, "conflict"
                continue
            if profs_ok is not None and not profs_ok[i][j]:
                _undo(trail)
                return None, "profile"
            if require_bijection and finv[j] != -1:
                _undo(trail)
                return None, "used"
            f[i] = j
            if require_bijection:
                finv[j] = i
            assigned.append(i)
            trail.append(i)
            for i2 in assigned:
                j2 = f[i2]
                for ts, td in ops:
                    stats["work"] += 2
                    r = ts[i * n_src + i2]
                    req = td[j * n_dst + j2]
                    if f[r] == -1:
                        queue.append((r, req))
                    elif f[r] != req:
                        _undo(trail)
                        return None, "conflict"
                    if i2 != i:
                        r = ts[i2 * n_src + i]
                        req = td[j2 * n_dst + j]
                        if f[r] == -1:
                            queue.append((r, req))
                        elif f[r] != req:
                            _undo(trail)
                            return None, "conflict"
        return trail, None

    def _undo(trail):
        for i in reversed(trail):
            if require_bijection:
                finv[f[i]] = -1
            f[i] = -1
            assigned.pop()

    def pick_var():
        # first-fail: fewest images passing the cheap profile/used filters
        best, best_count = -1, n_dst + 1
        for i in range(n_src):
            if f[i] != -1:
                continue
            if not require_bijection:
                return i
            cnt = 0
            for j in range(n_dst):
                if finv[j] != -1:
                    continue
                if profs_ok is not None and not profs_ok[i][j]:
                    continue
                cnt += 1
            if cnt < best_count:
                best, best_count = i, cnt
        return best

    def dfs():
        i = pick_var()
        if i == -1:
            results.append(tuple(f))
            return (not find_all) or (limit > 0 and len(results) >= limit)
        for j in range(n_dst):
            stats["candidates"] += 1
            trail, reason = propagate([(i, j)])
            if trail is None:
                stats["prunes"][reason] += 1
                continue
            done = dfs()
            _undo(trail)
            if done:
                return True
        return False

    trail, reason = propagate(list(fixed))
    if trail is None:
        stats["prunes"][reason] += 1
        return results, stats
    dfs()
    return results, stats


def diagram_count(n_arcs, crossings, n, up, down, upbar, downbar, keep=False):
    """Count semi-arc labelings consistent at every crossing.

    ``crossings`` holds (sign, under_in, over_in, under_out, over_out) with
    0-based arc ids.  Outputs of a crossing are forced by its inputs, so the
    search assigns arcs in id order and propagates to a fixpoint between
    branches.  Returns (count, assignments-or-None); assignments are 0-based.
    """
    if n_arcs > 4096:
        raise ValueError("diagram kernels support at most 4096 semi-arcs")
    a = [-1] * n_arcs
    sols = [] if keep else None
    count = 0

    def propagate(trail):
        changed = True
        while changed:
            changed = False
            for sg, ui, oi, uo, oo in crossings:
                if a[ui] < 0 or a[oi] < 0:
                    continue
                if sg > 0:
                    ru = up[a[ui] * n + a[oi]]
                    ro = down[a[oi] * n + a[ui]]
                else:
                    ru = upbar[a[ui] * n + a[oi]]
                    ro = downbar[a[oi] * n + a[ui]]
                for arc, val in ((uo, ru), (oo, ro)):
                    if a[arc] < 0:
                        a[arc] = val
                        trail.append(arc)
                        changed = True
                    elif a[arc] != val:
                        return False
        return True

    def dfs():
        nonlocal count
        trail = []
        if propagate(trail):
            try:
                i = a.index(-1)
            except ValueError:
                count += 1
                if keep:
                    sols.append(tuple(a))
                i = -1
            if i >= 0:
                for v in range(n):
                    a[i] = v
                    dfs()
                a[i] = -1
        for arc in trail:
            a[arc] = -1

    dfs()
    return count, sols
