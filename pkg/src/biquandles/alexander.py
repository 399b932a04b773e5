"""Biquandle constructors on finite modules.

Two families: the Laurent-module biquandle x^y = tx + (1-st)y, x_y = sx
(with the barred operations given by the inverse parameters), and the
affine switch construction x^y = Cx + Dy + c, x_y = Ay + Bx + c with C, D
derived from invertible A, B.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .axioms import AxiomReport, verify_biquandle
from .errors import SwitchError, WitnessError
from .modules import (Elem, FiniteModule, Mat, _mat_inv, _mat_mul, _mat_vec,
                      kernel_one_minus_s, translation_map)
from .tables import BiquandleTable, is_homomorphism


def _identity(k: int) -> Mat:
    return tuple(tuple(1 if i == j else 0 for j in range(k))
                 for i in range(k))


def _mat_sub(a: Mat, b: Mat, m: int) -> Mat:
    return tuple(tuple((x - y) % m for x, y in zip(ra, rb))
                 for ra, rb in zip(a, b))


def _resolve_order(module_elements, element_order, m, k):
    if element_order is None:
        return tuple(module_elements)
    order = tuple(tuple(int(c) % m for c in e) for e in element_order)
    if sorted(order) != sorted(module_elements):
        raise ValueError("element_order must enumerate every element once")
    return order


def make_alexander(module: FiniteModule,
                   element_order: tuple[Elem, ...] | None = None
                   ) -> BiquandleTable:
    """Operation table of the module biquandle x^y = tx + (1-st)y, x_y = sx.

    Indices follow the module's canonical element order unless
    ``element_order`` supplies another enumeration (printed matrices in the
    literature commonly put the zero element last).
    """
    m, k = module.m, module.k
    order = _resolve_order(module.elements, element_order, m, k)
    index = {e: i for i, e in enumerate(order, start=1)}

    tmat, smat = module.t_matrix, module.s_matrix
    tinv, sinv = module.t_inverse, module.s_inverse
    coef = module.one_minus_st
    coef_bar = _mat_sub(_identity(k), _mat_mul(sinv, tinv, m), m)

    up, down, upbar, downbar = [], [], [], []
    for x in order:
        tx = _mat_vec(tmat, x, m)
        tix = _mat_vec(tinv, x, m)
        down_row = index[_mat_vec(smat, x, m)]
        downbar_row = index[_mat_vec(sinv, x, m)]
        up.append(tuple(
            index[module.add(tx, _mat_vec(coef, y, m))] for y in order))
        upbar.append(tuple(
            index[module.add(tix, _mat_vec(coef_bar, y, m))] for y in order))
        down.append((down_row,) * len(order))
        downbar.append((downbar_row,) * len(order))

    return BiquandleTable(len(order), tuple(up), tuple(down), tuple(upbar),
                          tuple(downbar))


@dataclass(frozen=True)
class SwitchReport:
    """Constructed switch table plus the two verdicts about it."""

    table: BiquandleTable
    switch_condition_holds: bool
    axioms: AxiomReport


def make_switch_biquandle(m: int, k: int, a_matrix, b_matrix, shift=None,
                          element_order: tuple[Elem, ...] | None = None
                          ) -> SwitchReport:
    """Affine switch table from invertible A, B and a constant shift.

    Uses C = A^-1 B^-1 A (I - A) and D = I - A^-1 B^-1 A B for
    x^y = Cx + Dy + shift and x_y = Ay + Bx + shift.  The barred operations
    are read off the inverse of the pair map S(a, b) = (b_a, a^b); a
    non-bijective S raises ``SwitchError``.  The report carries whether the
    commutator condition [B, (A-I)(A,B)] = 0 holds and the axiom verdict,
    since neither is guaranteed for arbitrary inputs.
    """
    if m < 2 or k < 1:
        raise SwitchError("need modulus >= 2 and rank >= 1")
    amat = tuple(tuple(int(e) % m for e in row) for row in a_matrix)
    bmat = tuple(tuple(int(e) % m for e in row) for row in b_matrix)
    if len(amat) != k or len(bmat) != k or any(
            len(r) != k for r in amat + bmat):
        raise SwitchError(f"A and B must be {k}x{k} matrices")
    try:
        ainv = _mat_inv(amat, m, "A")
        binv = _mat_inv(bmat, m, "B")
    except Exception as exc:
        raise SwitchError(str(exc)) from None

    ident = _identity(k)
    aibi = _mat_mul(ainv, binv, m)
    cmat = _mat_mul(_mat_mul(aibi, amat, m), _mat_sub(ident, amat, m), m)
    dmat = _mat_sub(ident, _mat_mul(_mat_mul(aibi, amat, m), bmat, m), m)

    elements = tuple(itertools.product(range(m), repeat=k))
    order = _resolve_order(elements, element_order, m, k)
    index = {e: i for i, e in enumerate(order, start=1)}
    n = len(order)
    c = (0,) * k if shift is None else tuple(int(v) % m for v in shift)

    def add(x, y):
        return tuple((p + q) % m for p, q in zip(x, y))

    up = tuple(
        tuple(index[add(add(_mat_vec(cmat, x, m), _mat_vec(dmat, y, m)), c)]
              for y in order) for x in order)
    down = tuple(
        tuple(index[add(add(_mat_vec(amat, y, m), _mat_vec(bmat, x, m)), c)]
              for y in order) for x in order)

    # invert the pair map to obtain the barred blocks
    inverse = {}
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            key = (down[b - 1][a - 1], up[a - 1][b - 1])
            if key in inverse:
                raise SwitchError("switch pair map is not invertible")
            inverse[key] = (a, b)

    upbar = [[0] * n for _ in range(n)]
    downbar = [[0] * n for _ in range(n)]
    for (cc, xx), (a, b) in inverse.items():
        upbar[xx - 1][cc - 1] = a
        downbar[cc - 1][xx - 1] = b

    table = BiquandleTable(
        n, up, down,
        tuple(tuple(r) for r in upbar), tuple(tuple(r) for r in downbar))

    group_comm = _mat_mul(aibi, _mat_mul(amat, bmat, m), m)  # (A,B)
    term = _mat_mul(_mat_sub(amat, ident, m), group_comm, m)
    holds = _mat_mul(bmat, term, m) == _mat_mul(term, bmat, m)

    return SwitchReport(table, holds, verify_biquandle(table))


def normalize_iso(src: FiniteModule, dst: FiniteModule, f) -> tuple[int, ...]:
    """Compose a biquandle isomorphism with a translation so it fixes zero.

    ``f`` maps canonical table indices of ``src`` to those of ``dst`` and
    must be an isomorphism of the two module biquandles; the translation by
    -f(0) is itself an automorphism because f(0) lies in Ker(1 - s).
    """
    ta, tb = make_alexander(src), make_alexander(dst)
    images = tuple(f)
    if sorted(images) != list(range(1, tb.n + 1)) or \
            not is_homomorphism(ta, tb, images):
        raise WitnessError("map is not a biquandle isomorphism")
    f_zero = dst.elements[images[src.index[src.zero] - 1] - 1]
    if f_zero == dst.zero:
        return images
    if f_zero not in kernel_one_minus_s(dst):
        raise WitnessError("isomorphism image of zero escapes Ker(1-s)")
    shift = translation_map(dst, dst.neg(f_zero))
    return tuple(shift[i - 1] for i in images)
