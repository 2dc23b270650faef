"""Finite groups, subgroups and cosets for group Golomb rulers.

Supported structures: cyclic groups Z(n), direct products of cyclic
groups, and the alternating group A4.  Elements are encoded as integers
0..|G|-1 (mixed-radix digits for products, lexicographic rank of the
image tuple for permutations); the identity always encodes to 0.

Permutation products compose left to right: op(a, b) applies a first,
then b.  "Differences" are op(x, inv(y)), taken over all ordered pairs of
distinct elements.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import cached_property

from .errors import SizeMismatch, UnsupportedGroup


class FiniteGroup:
    def __init__(self, structure: str, order: int, op, inv, label):
        self.structure = structure
        self.order = order
        self.op = op
        self.inv = inv
        self._label = label
        self.identity = 0

    def __repr__(self):
        return f"FiniteGroup({self.structure}, order={self.order})"

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.structure == other.structure

    def __hash__(self):
        return hash(self.structure)

    @property
    def elements(self) -> range:
        return range(self.order)

    def label(self, e: int) -> str:
        return self._label(e)

    def element(self, spec) -> int:
        """Encode an element given as an int, a coordinate tuple, or (for
        permutation groups) a cycle string like "(12)(34)" or "id"."""
        if isinstance(spec, int):
            if not 0 <= spec < self.order:
                raise ValueError(f"element id {spec} out of range for {self.structure}")
            return spec
        return self._element(spec)

    def _element(self, spec) -> int:
        raise NotImplementedError

    def subgroup(self, generators) -> "Subgroup":
        """Subgroup generated by the given elements (specs accepted)."""
        gens = [self.element(g) for g in generators]
        members = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    b = self.op(a, g)
                    if b not in members:
                        members.add(b)
                        nxt.append(b)
            frontier = nxt
        return Subgroup(self, frozenset(members))


class _CyclicGroup(FiniteGroup):
    def __init__(self, n: int):
        super().__init__(
            f"Z({n})",
            n,
            lambda a, b: (a + b) % n,
            lambda a: (-a) % n,
            str,
        )

    def element(self, spec) -> int:
        if isinstance(spec, str):
            spec = int(spec)
        if isinstance(spec, tuple) and len(spec) == 1:
            spec = spec[0]
        return int(spec) % self.order


class _ProductGroup(FiniteGroup):
    """Direct product of cyclic groups, elements encoded in mixed radix."""

    def __init__(self, moduli):
        moduli = tuple(int(m) for m in moduli)
        if any(m < 2 for m in moduli):
            raise UnsupportedGroup(f"product moduli must be >= 2, got {moduli}")
        self.moduli = moduli
        order = 1
        for m in moduli:
            order *= m

        def decode(e: int) -> tuple[int, ...]:
            out = []
            for m in reversed(moduli):
                out.append(e % m)
                e //= m
            return tuple(reversed(out))

        def encode(coords) -> int:
            e = 0
            for c, m in zip(coords, moduli):
                e = e * m + (c % m)
            return e

        self.decode = decode
        self.encode = encode
        super().__init__(
            "x".join(f"Z({m})" for m in moduli),
            order,
            lambda a, b: encode(x + y for x, y in zip(decode(a), decode(b))),
            lambda a: encode(-x for x in decode(a)),
            lambda e: "(" + ",".join(map(str, decode(e))) + ")",
        )

    def _element(self, spec) -> int:
        if isinstance(spec, str):
            coords = tuple(int(t) for t in re.findall(r"-?\d+", spec))
        else:
            coords = tuple(spec)
        if len(coords) != len(self.moduli):
            raise ValueError(f"{spec!r} has wrong arity for {self.structure}")
        return self.encode(coords)


class _PermutationGroup(FiniteGroup):
    """A group of permutations of {0..degree-1}, elements ranked by their
    image tuples in lexicographic order (identity first)."""

    def __init__(self, structure: str, degree: int, perms):
        self.degree = degree
        self.perms = tuple(sorted(perms))
        if self.perms[0] != tuple(range(degree)):
            raise UnsupportedGroup("permutation set lacks the identity")
        self._index = {p: i for i, p in enumerate(self.perms)}

        def op(a: int, b: int) -> int:
            pa, pb = self.perms[a], self.perms[b]
            return self._index[tuple(pb[pa[i]] for i in range(degree))]

        def inv(a: int) -> int:
            pa = self.perms[a]
            out = [0] * degree
            for i, j in enumerate(pa):
                out[j] = i
            return self._index[tuple(out)]

        super().__init__(structure, len(self.perms), op, inv, self._cycle_label)

    def _cycle_label(self, e: int) -> str:
        perm = self.perms[e]
        seen = [False] * self.degree
        cycles = []
        for start in range(self.degree):
            if seen[start] or perm[start] == start:
                seen[start] = True
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i + 1)  # 1-based, as in standard cycle notation
                i = perm[i]
            cycles.append("(" + "".join(map(str, cyc)) + ")")
        return "".join(cycles) if cycles else "id"

    def _element(self, spec) -> int:
        if isinstance(spec, tuple):
            return self._index[spec]
        text = str(spec).strip()
        if text in ("id", "()", "e"):
            return self.identity
        images = list(range(self.degree))
        for cyc in re.findall(r"\(([0-9 ,]+)\)", text):
            if "," in cyc or " " in cyc:
                tokens = re.findall(r"\d+", cyc)
            else:
                tokens = list(cyc)  # digit-per-point, e.g. "(12)(34)"
            pts = [int(t) - 1 for t in tokens]
            if len(pts) != len(set(pts)) or any(
                not 0 <= p < self.degree for p in pts
            ):
                raise ValueError(f"bad cycle {cyc!r} for degree {self.degree}")
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        perm = tuple(images)
        if perm not in self._index:
            raise ValueError(f"{text!r} is not an element of {self.structure}")
        return self._index[perm]


def make_cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise UnsupportedGroup(f"cyclic order must be >= 1, got {n}")
    return _CyclicGroup(n)


def make_product(moduli) -> FiniteGroup:
    return _ProductGroup(moduli)


def make_alternating(degree: int) -> FiniteGroup:
    if degree != 4:
        raise UnsupportedGroup("only the alternating group A4 is supported")
    evens = [
        p
        for p in itertools.permutations(range(4))
        if _parity(p) == 0
    ]
    return _PermutationGroup("A4", 4, evens)


def _parity(perm) -> int:
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return inversions % 2


_GROUP_RE = re.compile(r"^Z\((\d+)\)$")


def parse_group(text: str) -> FiniteGroup:
    """Parse group literals: "Z(12)", "Z(8)xZ(10)", "A4"."""
    text = text.strip()
    if text == "A4":
        return make_alternating(4)
    parts = text.split("x")
    moduli = []
    for part in parts:
        m = _GROUP_RE.match(part.strip())
        if not m:
            raise UnsupportedGroup(f"cannot parse group literal {text!r}")
        moduli.append(int(m.group(1)))
    if len(moduli) == 1:
        return make_cyclic(moduli[0])
    return make_product(moduli)


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    members: frozenset[int]

    def __post_init__(self):
        g = self.parent
        if g.identity not in self.members:
            raise ValueError("subgroup must contain the identity")
        for a in self.members:
            if g.inv(a) not in self.members:
                raise ValueError(f"subgroup not closed under inverse at {g.label(a)}")
            for b in self.members:
                if g.op(a, b) not in self.members:
                    raise ValueError(
                        f"subgroup not closed under product at "
                        f"{g.label(a)}*{g.label(b)}"
                    )
        if g.order % len(self.members) != 0:
            raise ValueError("subgroup size does not divide the group order")

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // len(self.members)

    @cached_property
    def sorted_members(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


def left_cosets(h: Subgroup) -> list[list[int]]:
    """Partition of the parent group into left cosets x*H, ordered and keyed
    by their smallest element."""
    g = h.parent
    assigned = [False] * g.order
    cosets = []
    for e in g.elements:
        if assigned[e]:
            continue
        coset = sorted(g.op(e, m) for m in h.members)
        for x in coset:
            assigned[x] = True
        cosets.append(coset)
    return cosets


def coset_leader(group: FiniteGroup, h: Subgroup, x: int) -> int:
    """Smallest element of the left coset x*H."""
    return min(group.op(x, m) for m in h.members)


@dataclass(frozen=True)
class GroupRuler:
    """A candidate group Golomb ruler: marks inside a group, measured
    against a subgroup whose left cosets they should traverse."""

    group: FiniteGroup
    subgroup: Subgroup
    marks: tuple[int, ...]

    def __init__(self, group, subgroup, marks):
        if subgroup.parent != group:
            raise ValueError("subgroup belongs to a different group")
        ms = tuple(sorted(group.element(m) for m in marks))
        if len(set(ms)) != len(ms):
            raise ValueError("duplicate marks")
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "subgroup", subgroup)
        object.__setattr__(self, "marks", ms)

    @property
    def order(self) -> int:
        return len(self.marks)

    def labels(self) -> list[str]:
        return [self.group.label(m) for m in self.marks]


def difference_list(group: FiniteGroup, marks) -> list[int]:
    """All ordered differences op(x, inv(y)) for distinct marks x, y."""
    marks = list(marks)
    return [
        group.op(x, group.inv(y))
        for x in marks
        for y in marks
        if x != y
    ]


def is_ggr(x: GroupRuler) -> bool:
    """True iff the marks have pairwise distinct differences and hit every
    left coset of the subgroup exactly once."""
    g, h = x.group, x.subgroup
    k = h.index
    if x.order != k:
        raise SizeMismatch(
            f"need |G|/|H| = {k} marks, got {x.order}"
        )
    seen = bytearray(g.order)
    for d in difference_list(g, x.marks):
        if seen[d]:
            return False
        seen[d] = 1
    leaders = {coset_leader(g, h, m) for m in x.marks}
    return len(leaders) == k
