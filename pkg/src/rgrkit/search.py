"""Exhaustive, certifying searches for rulers and their group analogues.

Three searches share the same skeleton: depth-first backtracking over a
canonical space, difference bookkeeping in integer bitmasks, and a node
budget measured in placement attempts (never wall clock, so runs are
reproducible).  Every witness is re-checked by the public verifiers
before it is returned; a nonexistence verdict is only issued when the
canonical space was covered completely.

Canonical forms:

* optimal ruler search fixes the first mark at 0, pins the last mark to
  the target length, and keeps only one of each mirror pair (first gap
  at most last gap), which preserves the lexicographically least
  witness;
* modular search fixes the mark of residue class 0 at 0 (translation by
  a multiple of k preserves everything) and picks one representative
  per residue class in increasing class order;
* group search fixes the representative of the identity coset to the
  identity (left translation maps group rulers to group rulers).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BudgetExceeded, ModulusNotDivisible, OutOfRange
from .groups import FiniteGroup, GroupRuler, Subgroup, is_ggr, left_cosets
from .rulers import (
    ModularRuler,
    Ruler,
    counting_bound,
    is_golomb,
    is_resolvable,
    is_rmgr,
)

FOUND = "found"
NONEXISTENT = "exhausted-nonexistent"
BUDGET_EXCEEDED = "budget-exceeded"


@dataclass(frozen=True)
class SearchOutcome:
    status: str
    witness: object | None
    nodes_explored: int
    node_budget: int | None = None

    def to_dict(self) -> dict:
        data = {
            "status": self.status,
            "nodes_explored": self.nodes_explored,
            "node_budget": self.node_budget,
        }
        if self.witness is not None:
            if isinstance(self.witness, GroupRuler):
                data["witness"] = {
                    "group": self.witness.group.structure,
                    "marks": self.witness.labels(),
                }
            else:
                data["witness"] = self.witness.to_dict()
        return data


class _BudgetHit(Exception):
    pass


class _Counter:
    __slots__ = ("nodes", "budget")

    def __init__(self, budget):
        self.nodes = 0
        self.budget = budget

    def tick(self, n: int = 1):
        self.nodes += n
        if self.budget is not None and self.nodes > self.budget:
            raise _BudgetHit


def _range_mask(lo: int, hi: int) -> int:
    if hi < lo:
        return 0
    return ((1 << (hi + 1)) - 1) ^ ((1 << lo) - 1)


def _exact_length_rgr(k: int, length: int, resolvable: bool,
                      counter: _Counter) -> tuple[int, ...] | None:
    """Lexicographically least ruler with marks 0 .. length exactly, all
    differences distinct, and (optionally) all residues mod k distinct."""
    if resolvable and length % k == 0:
        return None  # 0 and length would share a residue class
    if k == 2:
        ok = not resolvable or length % 2 == 1
        return (0, length) if ok else None

    if resolvable:
        res_pos = [0] * k
        for pos in range(1, length):
            res_pos[pos % k] |= 1 << pos
        res_free = (1 << k) - 1
        res_free &= ~(1 << 0)
        res_free &= ~(1 << (length % k))
    else:
        res_pos = None
        res_free = 0
    all_positions = _range_mask(1, length - 1)

    used = 1 << length            # difference between the end marks
    mirror = 1                    # bit m set iff difference length-m is used
    mids = 1 << (length // 2) if length % 2 == 0 else 0
    xs = [0]
    intermediates = k - 2
    # remaining_gap_need[t] = minimal span for the gaps still ahead after
    # placing intermediate #t (distinct positive gaps sum to a triangle)
    tri = [g * (g + 1) // 2 for g in range(k)]

    def place(t: int, used: int, mirror: int, mids: int, res_free: int):
        hi = length - tri[k - 1 - t]
        if t == intermediates:
            hi = min(hi, length - xs[1]) if intermediates > 1 else min(hi, length // 2)
        bad = mirror | mids
        for x in xs:
            bad |= used << x
        allowed = _range_mask(xs[-1] + 1, hi) & ~bad & all_positions
        if resolvable:
            pos_ok = 0
            free = res_free
            while free:
                low = free & -free
                pos_ok |= res_pos[low.bit_length() - 1]
                free ^= low
            allowed &= pos_ok
        counter.tick(allowed.bit_count())
        while allowed:
            low = allowed & -allowed
            m = low.bit_length() - 1
            allowed ^= low
            new_used = used | (1 << (length - m))
            new_mirror = mirror | (1 << m)
            new_mids = mids
            ok = True
            for x in xs:
                d = m - x
                if new_used & (1 << d):
                    ok = False
                    break
                new_used |= 1 << d
                new_mirror |= 1 << (length - d)
                if (length + x) % 2 == 0:
                    new_mids |= 1 << ((length + x) // 2)
            if not ok:
                continue
            if (length + m) % 2 == 0:
                new_mids |= 1 << ((length + m) // 2)
            xs.append(m)
            if t == intermediates:
                return tuple(xs) + (length,)
            found = place(
                t + 1,
                new_used,
                new_mirror,
                new_mids,
                res_free & ~(1 << (m % k)) if resolvable else 0,
            )
            if found:
                return found
            xs.pop()
        return None

    return place(1, used, mirror, mids, res_free)


def optimal_rgr(k: int, budget: int | None = None,
                resolvable: bool = True) -> tuple[int, Ruler]:
    """Minimal length of a (resolvable) Golomb ruler of order k, with the
    lexicographically least witness of that length.

    Lengths are tried in increasing order starting from the counting
    bound, so the first hit is optimal.  With a node budget the search
    raises BudgetExceeded carrying the best lower bound established.
    """
    if k < 2:
        raise OutOfRange(f"order must be at least 2, got {k}")
    counter = _Counter(budget)
    start = counting_bound(k) if resolvable else k * (k - 1) // 2
    length = start
    while True:
        try:
            marks = _exact_length_rgr(k, length, resolvable, counter)
        except _BudgetHit:
            raise BudgetExceeded(
                f"budget {budget} exhausted; optimal length is at least {length}",
                lower_bound=length,
                nodes_explored=counter.nodes,
            ) from None
        if marks is not None:
            witness = Ruler(marks)
            assert is_golomb(witness)
            assert not resolvable or is_resolvable(witness)
            return length, witness
        length += 1


def _rotate(mask: int, shift: int, v: int, vmask: int) -> int:
    return ((mask << shift) | (mask >> (v - shift))) & vmask if shift else mask


def find_rmgr(v: int, k: int, budget: int | None = None) -> SearchOutcome:
    """Find a (v,k)-resolvable modular Golomb ruler or certify that none
    exists, exhausting the canonical space (0 fixed as the representative
    of residue class 0, one representative per class, classes in order)."""
    if v % k != 0:
        raise ModulusNotDivisible(f"modulus {v} is not a multiple of {k}")
    counter = _Counter(budget)
    if k == 1:
        return SearchOutcome(FOUND, ModularRuler((0,), v), 0, budget)
    w = v // k
    vmask = (1 << v) - 1
    class_masks = [
        sum(1 << (c + k * j) for j in range(w)) for c in range(k)
    ]
    marks = [0]
    half = 1 << (v // 2) if v % 2 == 0 else 0

    def place(c: int, used: int, mids: int):
        bad = mids
        for x in marks:
            bad |= _rotate(used, x, v, vmask)
        allowed = class_masks[c] & ~bad
        counter.tick(allowed.bit_count())
        while allowed:
            low = allowed & -allowed
            m = low.bit_length() - 1
            allowed ^= low
            new_used = used
            new_mids = mids
            ok = True
            for x in marks:
                d = (m - x) % v
                e = v - d
                bits = (1 << d) | (1 << e)
                if d == e or new_used & bits:
                    ok = False
                    break
                new_used |= bits
                s = x + m
                if v % 2 == 1:
                    new_mids |= 1 << (s * ((v + 1) // 2) % v)
                elif s % 2 == 0:
                    new_mids |= (1 << (s // 2 % v)) | (1 << ((s // 2 + v // 2) % v))
            if not ok:
                continue
            if half:
                new_mids |= _rotate(half, m, v, vmask)
            marks.append(m)
            if c == k - 1:
                return list(marks)
            found = place(c + 1, new_used, new_mids)
            if found:
                return found
            marks.pop()
        return None

    mids0 = _rotate(half, 0, v, vmask) if half else 0
    if v % 2 == 1:
        mids0 = 0
    try:
        found = place(1, 0, mids0)
    except _BudgetHit:
        return SearchOutcome(BUDGET_EXCEEDED, None, counter.nodes, budget)
    if found is None:
        return SearchOutcome(NONEXISTENT, None, counter.nodes, budget)
    witness = ModularRuler(found, v)
    assert is_rmgr(witness)
    return SearchOutcome(FOUND, witness, counter.nodes, budget)


def find_ggr(group: FiniteGroup, subgroup: Subgroup,
             budget: int | None = None) -> SearchOutcome:
    """Find a group Golomb ruler over the given subgroup's left cosets or
    certify nonexistence; the identity coset is represented by the
    identity element."""
    k = subgroup.index
    cosets = left_cosets(subgroup)
    counter = _Counter(budget)
    if k == 1:
        witness = GroupRuler(group, subgroup, (group.identity,))
        return SearchOutcome(FOUND, witness, 0, budget)
    n = group.order
    if n <= 1024:
        inv_t = [group.inv(a) for a in range(n)]
        op_rows = [[group.op(a, b) for b in range(n)] for a in range(n)]

        def diff(a, b):
            return op_rows[a][inv_t[b]]
    else:
        def diff(a, b):
            return group.op(a, group.inv(b))

    marks = [group.identity]

    def place(ci: int, used: int):
        counter.tick(len(cosets[ci]))
        for m in cosets[ci]:
            new_used = used
            ok = True
            for x in marks:
                d1 = diff(m, x)
                d2 = diff(x, m)
                bits = (1 << d1) | (1 << d2)
                if d1 == d2 or new_used & bits:
                    ok = False
                    break
                new_used |= bits
            if not ok:
                continue
            marks.append(m)
            if ci == k - 1:
                return list(marks)
            found = place(ci + 1, used=new_used)
            if found:
                return found
            marks.pop()
        return None

    try:
        found = place(1, 0)
    except _BudgetHit:
        return SearchOutcome(BUDGET_EXCEEDED, None, counter.nodes, budget)
    if found is None:
        return SearchOutcome(NONEXISTENT, None, counter.nodes, budget)
    witness = GroupRuler(group, subgroup, found)
    assert is_ggr(witness)
    return SearchOutcome(FOUND, witness, counter.nodes, budget)


def naive_rmgr_exists(v: int, k: int) -> bool:
    """No-pruning oracle: scan every k-subset of Z_v for an RMGR.

    Only for small v (used to cross-check the canonical search).
    """
    if v % k != 0:
        raise ModulusNotDivisible(f"modulus {v} is not a multiple of {k}")
    residues = range(k)
    for subset in itertools.combinations(range(v), k):
        if {x % k for x in subset} != set(residues):
            continue
        seen = set()
        ok = True
        for i in range(k):
            for j in range(k):
                if i == j:
                    continue
                d = (subset[i] - subset[j]) % v
                if d in seen:
                    ok = False
                    break
                seen.add(d)
            if not ok:
                break
        if ok:
            return True
    return False
