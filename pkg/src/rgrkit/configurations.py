"""Symmetric configurations, resolutions, and their constructions.

A (v,b,r,k)-configuration is a set system on v points with b blocks of
size k, every point on r blocks, and no point pair in more than one
block.  It is symmetric when v = b (then r = k), and resolvable when the
blocks split into r parallel classes, each partitioning the points.

Constructions here:

* cyclic development of a resolvable modular Golomb ruler,
* development of a group Golomb ruler through its group,
* simultaneous development of several base blocks (packing checked),
* the slope/intercept construction over GF(w) that realizes the
  k-1-MOLS existence result,
* completion of a resolvable (k^2, k)-configuration to an affine plane
  via non-collinearity classes,
* host assignment (a system of distinct representatives for the blocks),
  which upgrades a resolvable symmetric configuration to a progressive
  dinner party schedule.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, field

from .errors import (
    KTooLarge,
    MatchingIncomplete,
    Nonextendable,
    NotGgr,
    NotRmgr,
    PairCovered,
    WrongParameters,
)
from .fields import make_field
from .groups import FiniteGroup, GroupRuler, Subgroup, is_ggr
from .rulers import ModularRuler, is_rmgr


@dataclass(frozen=True)
class Configuration:
    """Points 0..v-1 and a list of k-subsets; optional display labels."""

    v: int
    k: int
    blocks: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def __init__(self, v, k, blocks, labels=None):
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "k", k)
        object.__setattr__(
            self, "blocks", tuple(tuple(sorted(b)) for b in blocks)
        )
        object.__setattr__(
            self, "labels", tuple(labels) if labels is not None else None
        )

    @property
    def b(self) -> int:
        return len(self.blocks)

    @property
    def r(self) -> int:
        return self.b * self.k // self.v

    def label(self, p: int) -> str:
        return self.labels[p] if self.labels else str(p)

    def to_dict(self, resolution: "Resolution | None" = None) -> dict:
        data = {
            "v": self.v,
            "k": self.k,
            "blocks": [list(b) for b in self.blocks],
        }
        if resolution is not None:
            data["classes"] = [list(c) for c in resolution.classes]
        return data

    @classmethod
    def from_dict(cls, data: dict) -> "tuple[Configuration, Resolution | None]":
        config = cls(data["v"], data["k"], data["blocks"])
        res = Resolution(data["classes"]) if "classes" in data else None
        return config, res


@dataclass(frozen=True)
class Resolution:
    """Partition of the block list (by index) into parallel classes."""

    classes: tuple[tuple[int, ...], ...]

    def __init__(self, classes):
        object.__setattr__(
            self, "classes", tuple(tuple(sorted(c)) for c in classes)
        )

    @property
    def r(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class HostAssignment:
    """hosts[i] is the point hosting block i; hosts form a bijection."""

    hosts: tuple[int, ...]


@dataclass
class VerificationReport:
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self):
        if self.ok:
            return "ok"
        return "; ".join(self.violations)


def develop_rmgr(m: ModularRuler) -> tuple[Configuration, Resolution]:
    """Cyclic resolvable configuration from a (v,k)-RMGR: blocks are all v
    translates of the marks; class i collects the translates by i mod k."""
    if not is_rmgr(m):
        raise NotRmgr(f"{list(m.marks)} is not a ({m.modulus},{m.order})-RMGR")
    v, k = m.modulus, m.order
    w = v // k
    blocks = [
        tuple(sorted((x + t) % v for x in m.marks)) for t in range(v)
    ]
    classes = [[i + k * j for j in range(w)] for i in range(k)]
    return Configuration(v, k, blocks), Resolution(classes)


def develop_ggr(x: GroupRuler) -> tuple[Configuration, Resolution]:
    """Resolvable configuration from a (G,H)-group Golomb ruler: blocks are
    the right translates X*g, and the parallel classes are indexed by the
    right cosets of H (the orbit of {X*h : h in H} under translation)."""
    if not is_ggr(x):
        raise NotGgr("marks are not a group Golomb ruler for this subgroup")
    g = x.group
    blocks = [
        tuple(sorted(g.op(mark, t) for mark in x.marks)) for t in g.elements
    ]
    assigned = [False] * g.order
    classes = []
    for e in g.elements:
        if assigned[e]:
            continue
        coset = sorted(g.op(m, e) for m in x.subgroup.members)
        for t in coset:
            assigned[t] = True
        classes.append(coset)
    labels = [g.label(e) for e in g.elements]
    return Configuration(g.order, x.order, blocks, labels), Resolution(classes)


def develop_multi(base_blocks, modulus: int) -> tuple[Configuration, Resolution]:
    """Develop several base blocks through Z_v at once.

    Each base must pick one point from every residue class mod k, and no
    difference may repeat across the bases' developed blocks (otherwise
    some point pair would be covered twice: PairCovered).
    """
    bases = [tuple(sorted(b_ % modulus for b_ in b)) for b in base_blocks]
    if not bases:
        raise ValueError("need at least one base block")
    k = len(bases[0])
    if any(len(set(b)) != k for b in bases):
        raise ValueError("base blocks must have equal size and distinct points")
    if modulus % k != 0:
        raise ValueError(f"modulus {modulus} not divisible by block size {k}")
    for b in bases:
        if len({x % k for x in b}) != k:
            raise ValueError(f"base block {list(b)} is not a transversal mod {k}")
    seen = bytearray(modulus)
    for b in bases:
        for i in range(k):
            for j in range(i + 1, k):
                d = (b[j] - b[i]) % modulus
                e = modulus - d
                if d == e or seen[d] or seen[e]:
                    raise PairCovered(
                        f"difference {min(d, e)} repeats; pair covered twice"
                    )
                seen[d] = seen[e] = 1
    w = modulus // k
    blocks = []
    classes = []
    for bi, base in enumerate(bases):
        offset = bi * modulus
        blocks.extend(
            tuple(sorted((x + t) % modulus for x in base)) for t in range(modulus)
        )
        classes.extend(
            [offset + c + k * j for j in range(w)] for c in range(k)
        )
    return Configuration(modulus, k, blocks), Resolution(classes)


def from_mols(k: int, w: int) -> tuple[Configuration, Resolution]:
    """Resolvable (k*w, k)-configuration over GF(w), k <= w.

    Points are (row, field element) pairs; the block with slope c and
    intercept a holds (i, a + c*m_i) for k fixed distinct multipliers m_i.
    Two blocks sharing two points would force equal slope and intercept,
    so the pair condition holds; fixing the slope gives a parallel class.
    """
    field_ = make_field(w)  # raises NotPrimePower for bad w
    if k > w:
        raise KTooLarge(f"need k <= w for the MOLS construction, got k={k} > w={w}")
    if k < 2:
        raise WrongParameters(f"block size must be at least 2, got {k}")
    multipliers = list(range(k))
    blocks = []
    classes = []
    for c in range(k):
        start = len(blocks)
        for a in field_.elements:
            blocks.append(
                tuple(
                    i * w + field_.add(a, field_.mul(c, multipliers[i]))
                    for i in range(k)
                )
            )
        classes.append(range(start, start + w))
    labels = [f"({i},{e})" for i in range(k) for e in field_.elements]
    return Configuration(k * w, k, blocks, labels), Resolution(classes)


def verify_configuration(c: Configuration) -> VerificationReport:
    """Check the configuration axioms; the report lists every violation."""
    report = VerificationReport()
    v, k, blocks = c.v, c.k, c.blocks
    b = len(blocks)
    if b * k % v != 0:
        report.violations.append(f"bk = {b * k} is not a multiple of v = {v}")
        return report
    r = b * k // v
    replication = [0] * v
    pair_seen: set[tuple[int, int]] = set()
    for idx, block in enumerate(blocks):
        if len(block) != k or len(set(block)) != k:
            report.violations.append(f"block {idx} is not a {k}-subset: {block}")
            continue
        if not all(0 <= p < v for p in block):
            report.violations.append(f"block {idx} has out-of-range points")
            continue
        for i, p in enumerate(block):
            replication[p] += 1
            for q in block[i + 1:]:
                pair = (p, q)
                if pair in pair_seen:
                    report.violations.append(
                        f"pair {pair} covered more than once (block {idx})"
                    )
                pair_seen.add(pair)
    for p, count in enumerate(replication):
        if count != r:
            report.violations.append(
                f"point {p} lies on {count} blocks, expected r = {r}"
            )
    return report


def verify_resolution(c: Configuration, res: Resolution) -> VerificationReport:
    """Check that the classes partition the blocks and each class
    partitions the points."""
    report = VerificationReport()
    used = [0] * len(c.blocks)
    for ci, cls in enumerate(res.classes):
        covered = [0] * c.v
        for idx in cls:
            if not 0 <= idx < len(c.blocks):
                report.violations.append(f"class {ci} has bad block index {idx}")
                continue
            used[idx] += 1
            for p in c.blocks[idx]:
                covered[p] += 1
        missed = sum(1 for n in covered if n != 1)
        if missed:
            report.violations.append(
                f"class {ci} does not partition the points "
                f"({missed} points not covered exactly once)"
            )
    for idx, n in enumerate(used):
        if n != 1:
            report.violations.append(f"block {idx} appears in {n} classes")
    if len(res.classes) != c.r:
        report.violations.append(
            f"{len(res.classes)} classes, expected r = {c.r}"
        )
    return report


def complete_to_affine(
    c: Configuration, res: Resolution
) -> tuple[Configuration, Resolution]:
    """Extend a resolvable (k^2, k)-configuration to an affine plane of
    order k by adding the non-collinearity classes as a new parallel class.

    Raises Nonextendable if non-collinearity fails to be an equivalence
    with classes of size k, which signals invalid input (for genuine
    resolvable (k^2, k)-configurations it always succeeds).
    """
    k = c.k
    if c.v != k * k:
        raise WrongParameters(f"affine completion needs v = k^2, got v={c.v}, k={k}")
    if len(res.classes) != k or c.b != c.v:
        raise WrongParameters(
            f"need a symmetric configuration with k = {k} parallel classes"
        )
    collinear: list[set[int]] = [set() for _ in range(c.v)]
    for block in c.blocks:
        for i, p in enumerate(block):
            for q in block[i + 1:]:
                collinear[p].add(q)
                collinear[q].add(p)
    class_of: dict[int, frozenset[int]] = {}
    new_blocks: list[frozenset[int]] = []
    for p in range(c.v):
        if p in class_of:
            continue
        cls = frozenset(
            q for q in range(c.v) if q == p or q not in collinear[p]
        )
        if len(cls) != k:
            raise Nonextendable(
                f"non-collinearity class of point {p} has size {len(cls)}, not {k}"
            )
        for q in cls:
            if q in class_of or (q != p and cls != frozenset(
                x for x in range(c.v) if x == q or x not in collinear[q]
            )):
                raise Nonextendable("non-collinearity is not an equivalence relation")
            class_of[q] = cls
        new_blocks.append(cls)
    full_blocks = list(c.blocks) + [tuple(sorted(b)) for b in new_blocks]
    new_class = list(range(c.b, c.b + len(new_blocks)))
    plane = Configuration(c.v, k, full_blocks, c.labels)
    return plane, Resolution(list(res.classes) + [new_class])


def assign_hosts(c: Configuration, res: Resolution) -> HostAssignment:
    """Pick a host point inside every block, no point hosting twice.

    Augmenting-path bipartite matching between blocks and their points; a
    resolvable symmetric configuration always admits a perfect matching,
    so MatchingIncomplete indicates corrupt input.
    """
    if c.b != c.v:
        raise WrongParameters(f"host assignment needs b = v, got b={c.b}, v={c.v}")
    host_of_point = [-1] * c.v
    blocks = c.blocks

    def try_assign(idx: int, visited: bytearray) -> bool:
        for p in blocks[idx]:
            if not visited[p]:
                visited[p] = 1
                if host_of_point[p] < 0 or try_assign(host_of_point[p], visited):
                    host_of_point[p] = idx
                    return True
        return False

    limit = sys.getrecursionlimit()
    if limit < 4 * c.v + 100:
        sys.setrecursionlimit(4 * c.v + 100)
    try:
        for idx in range(c.b):
            if not try_assign(idx, bytearray(c.v)):
                raise MatchingIncomplete(
                    f"no host available for block {idx}: {c.blocks[idx]}"
                )
    finally:
        sys.setrecursionlimit(limit)
    hosts = [-1] * c.b
    for p, idx in enumerate(host_of_point):
        if idx >= 0:
            hosts[idx] = p
    return HostAssignment(tuple(hosts))


def dinner_party_schedule(
    c: Configuration, res: Resolution, hosts: HostAssignment
) -> str:
    """Render a resolvable symmetric configuration with hosts as a
    progressive dinner party: one course per parallel class, one house per
    block, the hosting couple starred."""
    lines = []
    for ci, cls in enumerate(res.classes):
        lines.append(f"course {ci + 1}:")
        for idx in cls:
            host = hosts.hosts[idx]
            guests = " ".join(
                c.label(p) + ("*" if p == host else "") for p in c.blocks[idx]
            )
            lines.append(f"  house {c.label(host)}: {guests}")
    return "\n".join(lines)
