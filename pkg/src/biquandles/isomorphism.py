"""Deciding biquandle isomorphism.

Two independent routes: a backtracking search over element bijections that
works for any pair of finite biquandles, and a structural search for module
biquandles that looks for an intertwining isomorphism of the (1-st)
submodules plus a compatible map of coset representatives.  The two must
agree; the test suite sweeps them against each other.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from . import kernels
from .alexander import make_alexander, normalize_iso
from .axioms import satisfies_axioms, verify_biquandle
from .errors import WitnessError
from .modules import (Elem, FiniteModule, ModuleIso,
                      module_isomorphisms, one_minus_st_submodule,
                      transversal)
from .tables import KINDS, BiquandleTable, is_homomorphism, normalize_map

_OP_BITS = dict(zip(KINDS, (kernels.OP_UP, kernels.OP_DOWN,
                            kernels.OP_UPBAR, kernels.OP_DOWNBAR)))


@dataclass(frozen=True)
class SearchStats:
    """Search effort counters; prune counts are keyed by reason."""

    candidates: int = 0
    prunes: dict = field(default_factory=dict)
    work: int = 0

    def total_prunes(self) -> int:
        return sum(self.prunes.values())


def _require_biquandle(table: BiquandleTable, which: str):
    report = verify_biquandle(table)
    if not report.passed:
        cid, wit = report.violations[0]
        raise ValueError(
            f"{which} table is not a biquandle (first violation: "
            f"axiom {cid} at {wit})")


def fixed_point_profile(table: BiquandleTable) -> tuple[tuple, ...]:
    """Per-element fingerprint preserved by isomorphisms.

    For each element and each operation: how many right operands fix it,
    how many left operands are fixed by it, and whether it fixes itself.
    Isomorphic tables have equal sorted profiles.
    """
    n = table.n
    out = []
    for a in range(1, n + 1):
        prof = []
        for kind in KINDS:
            blk = getattr(table, kind)
            rowfix = sum(1 for b in range(n) if blk[a - 1][b] == a)
            colfix = sum(1 for b in range(n) if blk[b][a - 1] == b + 1)
            prof.append((rowfix, colfix, blk[a - 1][a - 1] == a))
        out.append(tuple(prof))
    return tuple(out)


def profiles_compatible(src: BiquandleTable, dst: BiquandleTable) -> bool:
    """Necessary condition for isomorphism: equal sorted profiles."""
    return sorted(fixed_point_profile(src)) == sorted(fixed_point_profile(dst))


def _stats(raw) -> SearchStats:
    return SearchStats(candidates=raw["candidates"],
                       prunes=dict(raw["prunes"]), work=raw["work"])


def brute_force_iso(src: BiquandleTable, dst: BiquandleTable
                    ) -> tuple[Optional[tuple[int, ...]], SearchStats]:
    """First isomorphism found by backtracking search, or None.

    Both inputs must pass the axiom check.  The search assigns the most
    constrained element next, filters candidate images by fixed-point
    profile, and propagates forced images through all four operation
    tables, so the returned witness is deterministic.
    """
    _require_biquandle(src, "source")
    _require_biquandle(dst, "target")
    maps, raw = kernels.search_maps(
        src.n, src.flats(), dst.n, dst.flats(),
        find_all=False, limit=1)
    found = tuple(v + 1 for v in maps[0]) if maps else None
    return found, _stats(raw)


def all_isomorphisms(src: BiquandleTable, dst: BiquandleTable
                     ) -> list[tuple[int, ...]]:
    """Every isomorphism, sorted canonically by image tuple."""
    _require_biquandle(src, "source")
    _require_biquandle(dst, "target")
    maps, _ = kernels.search_maps(
        src.n, src.flats(), dst.n, dst.flats(), find_all=True)
    return sorted(tuple(v + 1 for v in m) for m in maps)


def enumerate_homomorphisms(src: BiquandleTable, dst: BiquandleTable,
                            ops: tuple[str, ...] = KINDS,
                            fix: dict[int, int] | None = None,
                            require_bijection: bool = False
                            ) -> list[tuple[int, ...]]:
    """All maps preserving the selected operations (1-based images).

    ``fix`` pre-assigns images.  With the default arguments this enumerates
    every biquandle homomorphism; restricting ``ops`` to ("up", "down")
    yields the maps satisfying only the unbarred equations.
    """
    mask = 0
    for kind in ops:
        mask |= _OP_BITS[kind]
    fixed = tuple((i - 1, j - 1) for i, j in (fix or {}).items())
    maps, _ = kernels.search_maps(
        src.n, src.flats(), dst.n, dst.flats(), ops_mask=mask,
        require_bijection=require_bijection, fixed=fixed,
        use_profiles=require_bijection, find_all=True)
    return sorted(tuple(v + 1 for v in m) for m in maps)


@dataclass(frozen=True)
class IsoWitness:
    """Structural certificate for an isomorphism of module biquandles.

    ``submodule_map`` is the intertwining isomorphism h on the (1-st)
    submodules, ``rep_map`` sends each canonical coset representative to its
    image, and ``perm`` is the assembled bijection on 1-based table indices
    (f(rep + w) = rep_map(rep) + h(w)).
    """

    source: FiniteModule
    target: FiniteModule
    submodule_map: ModuleIso
    rep_map: tuple[tuple[Elem, Elem], ...]
    perm: tuple[int, ...]


def assemble_witness_map(src: FiniteModule, dst: FiniteModule,
                         submodule_map: ModuleIso,
                         rep_map: dict[Elem, Elem]) -> tuple[int, ...]:
    """Build the full index bijection from (h, rep-map) witness data."""
    sub = one_minus_st_submodule(src)
    trans = transversal(src, sub)
    perm = []
    for x in src.elements:
        rep = trans.rep_of(x)
        w = src.sub(x, rep)
        y = dst.add(rep_map[rep], submodule_map(w))
        perm.append(dst.index[y])
    return tuple(perm)


def structural_iso(src: FiniteModule, dst: FiniteModule
                   ) -> tuple[Optional[IsoWitness], SearchStats]:
    """Decide isomorphism of two module biquandles structurally.

    Searches for an intertwining submodule isomorphism h and a zero-fixing
    assignment of coset representatives k with (1-st)k(a) = h((1-st)a),
    one coset per image, and s'k(a) = k(b) + h(w) whenever sa = b + w with
    b a representative and w in the submodule.  Any candidate passing those
    constraints is assembled into a full map and verified outright, so a
    returned witness is always a genuine isomorphism.
    """
    prunes = {"size": 0, "fiber": 0, "coset": 0, "closure": 0, "verify": 0}
    candidates = 0
    work = 0

    def done(witness):
        return witness, SearchStats(candidates=candidates,
                                    prunes=prunes, work=work)

    if src.size != dst.size:
        prunes["size"] += 1
        return done(None)

    sub_s = one_minus_st_submodule(src)
    sub_d = one_minus_st_submodule(dst)
    if len(sub_s) != len(sub_d):
        prunes["size"] += 1
        return done(None)

    trans_s = transversal(src, sub_s)
    trans_d = transversal(dst, sub_d)
    reps = trans_s.reps  # zero first by construction

    # decomposition s*rep = base + w with base a representative, w in sub
    s_dec = {}
    for rep in reps:
        srep = src.act_s(rep)
        base = trans_s.rep_of(srep)
        s_dec[rep] = (base, src.sub(srep, base))
    incoming = {rep: [r for r in reps if s_dec[r][0] == rep] for rep in reps}

    one_minus_st_d = dst.one_minus_st
    fibers_by_val: dict[Elem, tuple[Elem, ...]] = {}
    for y in dst.elements:
        fibers_by_val.setdefault(dst.act(one_minus_st_d, y), ())
    for y in dst.elements:
        val = dst.act(one_minus_st_d, y)
        fibers_by_val[val] = fibers_by_val[val] + (y,)

    table_s = make_alexander(src)
    table_d = make_alexander(dst)

    for h in module_isomorphisms(sub_s, sub_d):
        k_map: dict[Elem, Elem] = {src.zero: dst.zero}
        used_cosets = {trans_d.rep_of(dst.zero)}

        def closure_ok(rep) -> bool:
            nonlocal work
            edges = [(rep, *s_dec[rep])]
            edges += [(r, *s_dec[r]) for r in incoming[rep] if r != rep]
            for start, base, w in edges:
                if start not in k_map or base not in k_map:
                    continue
                work += 1
                if dst.act_s(k_map[start]) != dst.add(k_map[base], h(w)):
                    return False
            return True

        def assign(i) -> bool:
            nonlocal candidates
            if i == len(reps):
                return True
            rep = reps[i]
            target = h(src.act(src.one_minus_st, rep))
            fiber = fibers_by_val.get(target, ())
            if not fiber:
                prunes["fiber"] += 1
                return False
            for y in fiber:
                candidates += 1
                coset = trans_d.rep_of(y)
                if coset in used_cosets:
                    prunes["coset"] += 1
                    continue
                k_map[rep] = y
                used_cosets.add(coset)
                if closure_ok(rep):
                    if assign(i + 1):
                        return True
                else:
                    prunes["closure"] += 1
                del k_map[rep]
                used_cosets.remove(coset)
            return False

        if not closure_ok(src.zero):
            prunes["closure"] += 1
            continue
        if assign(1):
            perm = assemble_witness_map(src, dst, h, k_map)
            if sorted(perm) == list(range(1, dst.size + 1)) and \
                    is_homomorphism(table_s, table_d, perm):
                witness = IsoWitness(
                    source=src, target=dst, submodule_map=h,
                    rep_map=tuple(sorted(k_map.items())), perm=perm)
                return done(witness)
            prunes["verify"] += 1
    return done(None)


def extract_witness(src: FiniteModule, dst: FiniteModule, f) -> IsoWitness:
    """Recover the structural certificate from a full isomorphism.

    Normalizes f to fix zero, restricts it to the (1-st) submodule and to
    the canonical representatives, and asserts every structural condition;
    a failure raises ``WitnessError`` and indicates a bug, since the
    conditions hold for any genuine isomorphism.
    """
    perm = normalize_iso(src, dst, normalize_map(
        f, src.size, dst.size))

    def image(x: Elem) -> Elem:
        return dst.elements[perm[src.index[x] - 1] - 1]

    sub_s = one_minus_st_submodule(src)
    sub_d = one_minus_st_submodule(dst)
    h_pairs = tuple((w, image(w)) for w in sub_s.elements)
    h_map = dict(h_pairs)
    if sorted(h_map.values()) != list(sub_d.elements):
        raise WitnessError("restriction to (1-st) submodule is not onto")
    for x in sub_s.elements:
        if h_map[src.act_s(x)] != dst.act_s(h_map[x]) or \
                h_map[src.act_t(x)] != dst.act_t(h_map[x]):
            raise WitnessError("submodule restriction fails intertwining")
        for y in sub_s.elements:
            if h_map[src.add(x, y)] != dst.add(h_map[x], h_map[y]):
                raise WitnessError("submodule restriction is not additive")

    trans_s = transversal(src, sub_s)
    trans_d = transversal(dst, sub_d)
    reps = trans_s.reps
    k_pairs = tuple((rep, image(rep)) for rep in reps)
    k_map = dict(k_pairs)
    if k_map[src.zero] != dst.zero:
        raise WitnessError("normalized isomorphism does not fix zero")
    if len({trans_d.rep_of(v) for v in k_map.values()}) != len(reps):
        raise WitnessError("representative images are not a transversal")

    one_minus_st_s = src.one_minus_st
    one_minus_st_d = dst.one_minus_st
    for rep in reps:
        if dst.act(one_minus_st_d, k_map[rep]) != \
                h_map[src.act(one_minus_st_s, rep)]:
            raise WitnessError("(1-st)-compatibility fails on a rep")

    orbit = set(trans_s.orbit)
    for rep in reps:
        for w in sub_s.elements:
            x = src.add(src.act_s(rep), w)
            if x not in orbit:
                continue
            if image(x) != dst.add(dst.act_s(image(rep)), h_map[w]):
                raise WitnessError("orbit compatibility fails")

    return IsoWitness(source=src, target=dst,
                      submodule_map=ModuleIso(h_pairs),
                      rep_map=k_pairs, perm=perm)


def witness_to_dict(witness: IsoWitness) -> dict:
    """JSON-ready form: h as value pairs, rep map as pairs, f one-line."""
    return {
        "submodule_map": [[list(x), list(y)]
                          for x, y in witness.submodule_map.pairs],
        "rep_map": [[list(x), list(y)] for x, y in witness.rep_map],
        "permutation": list(witness.perm),
    }


def format_witness(witness: IsoWitness) -> str:
    def side(pairs):
        return ", ".join(
            f"{_fmt(x)}->{_fmt(y)}" for x, y in pairs)

    def _fmt(e):
        return str(e[0]) if len(e) == 1 else "(" + ",".join(map(str, e)) + ")"

    return "\n".join([
        "submodule map: " + side(witness.submodule_map.pairs),
        "rep map: " + side(witness.rep_map),
        "permutation: " + " ".join(map(str, witness.perm)),
    ])


@dataclass(frozen=True)
class EnumerationResult:
    """All biquandles of one order plus their isomorphism classes."""

    order: int
    tables: tuple[BiquandleTable, ...]
    classes: tuple[tuple[int, ...], ...]


def _enumeration_guard(n: int, allow_order_4: bool):
    if n < 1:
        raise ValueError("order must be >= 1")
    if n > 4 or (n == 4 and not allow_order_4):
        raise ValueError(
            "enumeration is budgeted for order <= 3 "
            "(pass allow_order_4=True for order 4)")


def enumerate_biquandles(n: int, allow_order_4: bool = False
                         ) -> EnumerationResult:
    """All biquandle tables of order n, plus isomorphism classes.

    Builds the unbarred blocks column by column (each column must be a
    permutation), pruning on injectivity of the pair map S(a,b)=(b_a, a^b)
    and on every fully-determined unbarred triple clause.  The barred
    blocks of a completed candidate are forced by inverting S; survivors of
    the full axiom scan are collected in lexicographic order.
    """
    _enumeration_guard(n, allow_order_4)
    perms = list(itertools.permutations(range(n)))
    up_cols = [None] * n    # up_cols[j][a]   = a^j
    down_cols = [None] * n  # down_cols[j][a] = a_j
    seen = set()            # occupied S outputs
    found = []

    def lookup(cols, i, j):
        col = cols[j]
        return None if col is None else col[i]

    def triples_ok() -> bool:
        # check unbarred triple clauses whose entries are all available
        for a in range(n):
            for b in range(n):
                ab_up = lookup(up_cols, a, b)
                ba_down = lookup(down_cols, b, a)
                for c in range(n):
                    cb_down = lookup(down_cols, c, b)
                    bc_up = lookup(up_cols, b, c)
                    if ab_up is not None and cb_down is not None \
                            and bc_up is not None:
                        l = lookup(up_cols, ab_up, c)
                        x = lookup(up_cols, a, cb_down)
                        r = None if x is None else lookup(up_cols, x, bc_up)
                        if l is not None and r is not None and l != r:
                            return False
                    if cb_down is not None and ab_up is not None \
                            and ba_down is not None:
                        l = lookup(down_cols, cb_down, a)
                        x = lookup(down_cols, c, ab_up)
                        r = None if x is None else lookup(down_cols, x,
                                                          ba_down)
                        if l is not None and r is not None and l != r:
                            return False
                    if ba_down is not None and ab_up is not None \
                            and cb_down is not None and bc_up is not None:
                        x = lookup(down_cols, c, ab_up)
                        l = None if x is None else lookup(up_cols, ba_down, x)
                        y = lookup(up_cols, a, cb_down)
                        r = None if y is None else lookup(down_cols, bc_up, y)
                        if l is not None and r is not None and l != r:
                            return False
        return True

    def place_pairs(pairs) -> list:
        added = []
        for a, b in pairs:
            key = (down_cols[a][b], up_cols[b][a])
            if key in seen:
                for k in added:
                    seen.remove(k)
                return None
            seen.add(key)
            added.append(key)
        return added

    def finish():
        up = tuple(tuple(up_cols[j][i] + 1 for j in range(n))
                   for i in range(n))
        down = tuple(tuple(down_cols[j][i] + 1 for j in range(n))
                     for i in range(n))
        inverse = {}
        for a in range(n):
            for b in range(n):
                inverse[(down[b][a], up[a][b])] = (a + 1, b + 1)
        upbar = [[0] * n for _ in range(n)]
        downbar = [[0] * n for _ in range(n)]
        for (c, x), (a, b) in inverse.items():
            upbar[x - 1][c - 1] = a
            downbar[c - 1][x - 1] = b
        table = BiquandleTable(
            n, up, down, tuple(tuple(r) for r in upbar),
            tuple(tuple(r) for r in downbar))
        if satisfies_axioms(table):
            found.append(table)

    def extend(slot: int):
        # slots alternate up column j, down column j
        if slot == 2 * n:
            finish()
            return
        j, is_down = divmod(slot, 2)
        cols = down_cols if is_down else up_cols
        if is_down:
            # S(a,b) needs down col a and up col b; placing down col j
            # completes pairs (j, b) for placed up columns b <= j
            new_pairs = [(j, b) for b in range(j + 1)]
        else:
            new_pairs = [(a, j) for a in range(j)]
        for perm in perms:
            cols[j] = perm
            added = place_pairs(new_pairs)
            if added is not None:
                if triples_ok():
                    extend(slot + 1)
                for key in added:
                    seen.remove(key)
            cols[j] = None

    extend(0)
    found.sort(key=lambda t: (t.up, t.down, t.upbar, t.downbar))

    classes: list[list[int]] = []
    for idx, table in enumerate(found):
        for cls in classes:
            witness, _ = brute_force_iso(found[cls[0]], table)
            if witness is not None:
                cls.append(idx)
                break
        else:
            classes.append([idx])

    return EnumerationResult(
        order=n, tables=tuple(found),
        classes=tuple(tuple(cls) for cls in classes))
