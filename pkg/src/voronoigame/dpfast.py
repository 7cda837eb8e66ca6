"""Array engine: the same solve as :mod:`.dpsweep`, batched per voter window.

Every cell of size n has its value inside the window (v_n, v_{n+1}], and
every transition writes into a strictly later window, so the priority
queue of the reference engine can be replaced by one pass over windows:
settle window n, gather its finite cells, sort them by (value, k, l,
gamma, flag), and fire groups sharing a position against spans computed
once per position.  That order is exactly the heap order, so the dense
tables produced here decode to the reference table bit for bit, back
references included.

Everything hot lives in a single numba kernel over int64 arrays.  Voter
coordinates are scaled to integers up front (boundary vertices then stay
integral), and cell values are mapped back to rationals on lookup.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np
from numba import njit

from .amap import SegmentKind, build_a_map
from .coords import POS_INF
from .delta import delta_triples
from .dptable import BackRef, Cell, SubproblemKey
from .errors import InternalError, InvalidInstance, RequiresDistinctVoters
from .instance import VoterSet

UNSET = -(1 << 62)  # cell never written
TOP = 1 << 62  # stands for +inf positions

_ERR_DEAD_LEVEL = 1
_ERR_CROSSING_ORDER = 2
_ERR_OUT_OF_WINDOW = 3
_ERR_GAMMA_RANGE = 4


def _sign_slot(a: int, b: int, flag: int) -> int:
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    return ((sa + 1) * 3 + (sb + 1)) * 2 + flag


def _move_tables() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Flatten the follower transition table, indexed by sign case and flag."""
    rep = {-1: 1, 0: 2, 1: 3}  # representative gains around tau = 2
    buckets: dict[int, list[tuple[int, int]]] = {}
    for sa in (-1, 0, 1):
        for sb in (-1, 0, 1):
            if sb > sa:
                continue
            for move in delta_triples(2, rep[sa], rep[sb]):
                slot = _sign_slot(sa, sb, move.flag_in)
                buckets.setdefault(slot, []).append((move.points, move.flag_out))
    ptr = np.zeros(19, dtype=np.int64)
    flat: list[tuple[int, int]] = []
    for slot in range(18):
        flat.extend(buckets.get(slot, ()))
        ptr[slot + 1] = len(flat)
    mv_j = np.array([m[0] for m in flat], dtype=np.int64)
    mv_out = np.array([m[1] for m in flat], dtype=np.int64)
    return ptr, mv_j, mv_out


_MV_PTR, _MV_J, _MV_OUT = _move_tables()


def _scaled_ints(V: VoterSet) -> tuple[tuple[int, ...], int]:
    if not V.strictly_increasing:
        raise RequiresDistinctVoters("array engine needs pairwise distinct voters")
    den = math.lcm(*(c.denominator for c in V.coords)) if V.coords else 1
    return tuple(int(c * den) for c in V.coords), den


@lru_cache(maxsize=8)
def _boundary_arrays(coords: tuple[int, ...]):
    """Non-vertical boundary segments per level, flattened CSR-style.

    A segment is (x2, diag, p) with crossing height p for horizontals and
    x0 + p for diagonals; the cursor drops a segment once x0 passes x2.
    Vertical pieces carry no crossing and are omitted, so a level whose
    cursor runs off the end is dead.
    """
    amap = build_a_map(VoterSet.from_values(coords))
    ptr = [0]
    xs: list[int] = []
    dg: list[int] = []
    pp: list[int] = []
    for chain in amap.polylines:
        for seg in chain.segments:
            if seg.kind is SegmentKind.VERTICAL:
                continue
            xs.append(int(seg.x2))
            if seg.kind is SegmentKind.DIAGONAL:
                dg.append(1)
                pp.append(int(seg.y2 - seg.x2))
            else:
                dg.append(0)
                pp.append(int(seg.y2))
        ptr.append(len(xs))
    return (
        np.array(ptr, dtype=np.int64),
        np.array(xs, dtype=np.int64),
        np.array(dg, dtype=np.int64),
        np.array(pp, dtype=np.int64),
    )


@njit(cache=True)
def _kernel(v, k_star, l_star, tau, lvl_ptr, seg_x2, seg_diag, seg_p,
            mv_ptr, mv_j, mv_out, value, back, err):  # pragma: no cover
    n_star = v.shape[0]
    Dk = k_star + 1
    Dl = l_star + 1
    Dg = n_star + 1
    Dn = n_star + 1

    # elementary cells: k = 0, at most one follower point spent
    for n in range(n_star + 1):
        val = v[n] if n < n_star else TOP
        for g in range(n + 1):
            if tau > n:
                value[(((n * Dk) * Dl) * Dg + g) * 2 + 0] = val
            elif tau == n:
                value[(((n * Dk) * Dl) * Dg + g) * 2 + 1] = val
        if l_star >= 1 and 1 <= tau <= n:
            value[(((n * Dk) * Dl + 1) * Dg) * 2 + 0] = val

    slice_cap = Dk * Dl * Dg * 2
    ent_val = np.empty(slice_cap, dtype=np.int64)
    ent_key = np.empty(slice_cap, dtype=np.int64)
    sufmax = np.empty((Dk * Dl * 2, Dg), dtype=np.int64)
    cross = np.empty(n_star + 1, dtype=np.int64)
    span_n = np.empty(2 * n_star + 2, dtype=np.int64)
    span_a = np.empty(2 * n_star + 2, dtype=np.int64)
    span_b = np.empty(2 * n_star + 2, dtype=np.int64)
    span_y = np.empty(2 * n_star + 2, dtype=np.int64)
    cur = lvl_ptr[:-1].copy()  # per-level cursor into the segment arrays

    for m in range(n_star):
        # gather finite cells of size m; key packs (k, l, gamma, flag)
        cnt = 0
        base_m = m * Dk
        for k in range(Dk):
            for l in range(Dl):
                row = ((base_m + k) * Dl + l) * Dg
                for g in range(Dg):
                    for d in range(2):
                        val = value[(row + g) * 2 + d]
                        if UNSET < val < TOP:
                            ent_val[cnt] = val
                            ent_key[cnt] = ((k * Dl + l) * Dg + g) * 2 + d
                            cnt += 1
        if cnt == 0:
            continue

        # exclusive suffix max over gamma per (k, l, flag): the dominance bar
        for s in range(Dk * Dl * 2):
            for g in range(Dg):
                sufmax[s, g] = UNSET
        for t in range(cnt):
            key2 = ent_key[t]
            d = key2 & 1
            g = (key2 >> 1) % Dg
            kl = (key2 >> 1) // Dg
            sufmax[kl * 2 + d, g] = ent_val[t]
        for s in range(Dk * Dl * 2):
            run = UNSET
            for g in range(Dg - 1, -1, -1):
                tmp = sufmax[s, g]
                sufmax[s, g] = run
                if tmp > run:
                    run = tmp

        order = np.argsort(ent_val[:cnt])
        i = 0
        while i < cnt:  # settle key order inside equal-value runs
            j = i + 1
            while j < cnt and ent_val[order[j]] == ent_val[order[i]]:
                j += 1
            for p in range(i + 1, j):
                o = order[p]
                kk = ent_key[o]
                q = p - 1
                while q >= i and ent_key[order[q]] > kk:
                    order[q + 1] = order[q]
                    q -= 1
                order[q + 1] = o
            i = j

        i = 0
        while i < cnt:
            x0 = ent_val[order[i]]
            j = i + 1
            while j < cnt and ent_val[order[j]] == x0:
                j += 1

            if x0 > v[m] or (m > 0 and x0 <= v[m - 1]):
                err[0] = _ERR_OUT_OF_WINDOW
                err[1] = m
                err[2] = x0
                return
            n0 = m + 1 if x0 == v[m] else m
            c = n_star - n0
            for t in range(c):
                idx = cur[t]
                end = lvl_ptr[t + 1]
                while idx < end and seg_x2[idx] <= x0:
                    idx += 1
                cur[t] = idx
                if idx == end:
                    err[0] = _ERR_DEAD_LEVEL
                    err[1] = t + 1
                    err[2] = x0
                    return
                cross[t] = seg_p[idx] + x0 if seg_diag[idx] else seg_p[idx]
                if t > 0 and cross[t] < cross[t - 1]:
                    err[0] = _ERR_CROSSING_ORDER
                    err[1] = t + 1
                    err[2] = x0
                    return

            # merge boundary crossings with the voters right of x0
            sp = 0
            ia = 0
            ib = n0
            pop = 0
            across = 0
            while ia < c or ib < n_star:
                if ia < c and (ib >= n_star or cross[ia] <= v[ib]):
                    y = cross[ia]
                else:
                    y = v[ib]
                span_n[sp] = n0 + pop
                span_a[sp] = across
                span_b[sp] = pop - across
                span_y[sp] = y
                sp += 1
                while ia < c and cross[ia] == y:
                    across += 1
                    ia += 1
                while ib < n_star and v[ib] == y:
                    pop += 1
                    ib += 1
            span_n[sp] = n_star
            span_a[sp] = c
            span_b[sp] = 0
            span_y[sp] = TOP
            sp += 1
            s0 = 0
            while s0 < sp and span_n[s0] <= m:
                s0 += 1

            for t in range(i, j):
                key2 = ent_key[order[t]]
                d = key2 & 1
                rest = key2 >> 1
                g = rest % Dg
                rest //= Dg
                l = rest % Dl
                k = rest // Dl
                if k == k_star:
                    continue
                if l_star - l > 2 * (k_star - k):
                    continue
                if tau * (l_star - l) > n_star - m:
                    continue
                if x0 <= sufmax[(k * Dl + l) * 2 + d, g]:
                    continue
                bk_base = k + 1
                for s in range(s0, sp):
                    nt = span_n[s]
                    a = span_a[s]
                    b = span_b[s]
                    y = span_y[s]
                    sa = 2 if a > tau else (1 if a == tau else 0)
                    sb = 2 if b > tau else (1 if b == tau else 0)
                    slot = (sa * 3 + sb) * 2 + d
                    gt_base = g + nt - m
                    row = ((nt * Dk + bk_base) * Dl) * Dg
                    for mi in range(mv_ptr[slot], mv_ptr[slot + 1]):
                        jj = mv_j[mi]
                        lt = l + jj
                        if lt > l_star:
                            continue
                        cap = 0 if jj == 0 else (a if jj == 1 else a + b)
                        gt = gt_base - cap
                        if gt < 0 or gt > n_star:
                            err[0] = _ERR_GAMMA_RANGE
                            err[1] = m
                            err[2] = gt
                            return
                        ti = (row + lt * Dg + gt) * 2 + mv_out[mi]
                        if y > value[ti]:
                            value[ti] = y
                            back[ti] = (((m * Dn + a) * Dn + b) * 3 + jj) * 2 + d
            i = j


class DenseTable:
    """Read-only view of the kernel arrays with the SubproblemTable lookup."""

    def __init__(self, value: np.ndarray, back: np.ndarray,
                 n_star: int, k_star: int, l_star: int, den: int):
        self._value = value
        self._back = back
        self.n_star = n_star
        self.k_star = k_star
        self.l_star = l_star
        self._den = den
        self._dims = (n_star + 1, k_star + 1, l_star + 1, n_star + 1, 2)

    def _flat(self, key: SubproblemKey) -> Optional[int]:
        n, k, l, g, d = key
        Dn, Dk, Dl, Dg, _ = self._dims
        if not (0 <= n < Dn and 0 <= k < Dk and 0 <= l < Dl and 0 <= g < Dg and d in (0, 1)):
            return None
        return (((n * Dk + k) * Dl + l) * Dg + g) * 2 + d

    def get(self, key: SubproblemKey) -> Optional[Cell]:
        flat = self._flat(key)
        if flat is None:
            return None
        raw = int(self._value[flat])
        if raw == UNSET:
            return None
        value = POS_INF if raw == TOP else Fraction(raw, self._den)
        code = int(self._back[flat])
        if code < 0:
            return Cell(value, None)
        Dn = self.n_star + 1
        d = code & 1
        code >>= 1
        j = code % 3
        code //= 3
        b = code % Dn
        code //= Dn
        return Cell(value, BackRef(code // Dn, code % Dn, b, j, d))

    def keys(self) -> Iterator[SubproblemKey]:
        Dn, Dk, Dl, Dg, _ = self._dims
        for flat in np.flatnonzero(self._value != UNSET):
            flat = int(flat)
            d = flat & 1
            rest = flat >> 1
            g = rest % Dg
            rest //= Dg
            l = rest % Dl
            rest //= Dl
            yield SubproblemKey(rest // Dk, rest % Dk, l, g, d)

    def __len__(self) -> int:
        return int(np.count_nonzero(self._value != UNSET))


def compute_solutions_fast(V: VoterSet, k_star: int, l_star: int, tau: int) -> DenseTable:
    """Drop-in replacement for the reference ``compute_solutions``."""
    if k_star < 1 or l_star < 1 or tau < 1:
        raise InvalidInstance("budgets and threshold must be positive")
    coords, den = _scaled_ints(V)
    n_star = len(coords)
    lvl_ptr, seg_x2, seg_diag, seg_p = _boundary_arrays(coords)
    size = (n_star + 1) * (k_star + 1) * (l_star + 1) * (n_star + 1) * 2
    value = np.full(size, UNSET, dtype=np.int64)
    back = np.full(size, -1, dtype=np.int64)
    err = np.zeros(3, dtype=np.int64)
    _kernel(np.array(coords, dtype=np.int64), k_star, l_star, tau,
            lvl_ptr, seg_x2, seg_diag, seg_p,
            _MV_PTR, _MV_J, _MV_OUT, value, back, err)
    if err[0]:
        raise InternalError(f"kernel fault {int(err[0])} at ({int(err[1])}, {int(err[2])})")
    return DenseTable(value, back, n_star, k_star, l_star, den)


def warm_up() -> None:
    """Compile the kernel on a toy instance (cached across processes)."""
    compute_solutions_fast(VoterSet.from_values([0, 2, 5]), 1, 1, 1)
