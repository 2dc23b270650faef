"""Golomb rulers, modular Golomb rulers, and their resolvable variants.

A Golomb ruler is a set of integer marks whose pairwise differences are
all distinct.  A ruler of order k is *resolvable* when its marks cover
every residue class mod k; such rulers generate resolvable symmetric
configurations by cyclic development (see the configurations module).

Rulers are canonicalized on construction: marks are sorted and shifted so
the smallest is 0 (any translate of a Golomb ruler is again a Golomb
ruler, so nothing is lost).  Modular rulers keep their marks reduced into
``[0, modulus)`` instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import ModulusNotDivisible

#: Tolerance used when deciding whether the sqrt-based length bound lands
#: exactly on an integer.
SQRT_TOL = 1e-9


@dataclass(frozen=True, order=True)
class Ruler:
    """A sorted set of distinct integer marks, normalized to start at 0."""

    marks: tuple[int, ...]

    def __init__(self, marks):
        ms = sorted(marks)
        if not ms:
            raise ValueError("a ruler needs at least one mark")
        if any(b == a for a, b in zip(ms, ms[1:])):
            raise ValueError(f"duplicate marks in {ms}")
        base = ms[0]
        object.__setattr__(self, "marks", tuple(m - base for m in ms))

    @property
    def order(self) -> int:
        return len(self.marks)

    @property
    def length(self) -> int:
        return self.marks[-1]

    def differences(self) -> list[int]:
        """The k(k-1)/2 positive differences, unsorted."""
        ms = self.marks
        return [ms[j] - ms[i] for i in range(len(ms)) for j in range(i + 1, len(ms))]

    def to_dict(self) -> dict:
        return {"marks": list(self.marks)}

    @classmethod
    def from_dict(cls, data: dict) -> "Ruler":
        return cls(data["marks"])


@dataclass(frozen=True)
class ModularRuler:
    """Marks interpreted in Z_v; differences are taken mod the modulus."""

    marks: tuple[int, ...]
    modulus: int

    def __init__(self, marks, modulus: int):
        if modulus < 1:
            raise ValueError(f"modulus must be positive, got {modulus}")
        reduced = sorted(m % modulus for m in marks)
        if any(b == a for a, b in zip(reduced, reduced[1:])):
            raise ValueError(f"marks collide mod {modulus}: {sorted(marks)}")
        object.__setattr__(self, "marks", tuple(reduced))
        object.__setattr__(self, "modulus", modulus)

    @property
    def order(self) -> int:
        return len(self.marks)

    @property
    def ruler(self) -> Ruler:
        return Ruler(self.marks)

    def to_dict(self) -> dict:
        return {"marks": list(self.marks), "modulus": self.modulus}

    @classmethod
    def from_dict(cls, data: dict) -> "ModularRuler":
        return cls(data["marks"], data["modulus"])


@dataclass(frozen=True)
class BoundReport:
    """Lower bounds on the length of a resolvable Golomb ruler of order k.

    ``effective_bound`` is the least length not excluded by either bound
    (the sqrt-based bound is strict, so it is bumped past integers).
    """

    k: int
    counting_bound: int
    golomb_bound: float
    effective_bound: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(
            self,
            "effective_bound",
            max(self.counting_bound, _min_length_above(self.golomb_bound)),
        )


def is_golomb(r: Ruler) -> bool:
    """True iff all positive differences between marks are distinct."""
    ms = r.marks
    k = len(ms)
    if k < 3:
        return True
    seen = bytearray(ms[-1] + 1)
    for i in range(k):
        xi = ms[i]
        for j in range(i + 1, k):
            d = ms[j] - xi
            if seen[d]:
                return False
            seen[d] = 1
    return True


def is_resolvable(r: Ruler) -> bool:
    """True iff the marks cover all k residue classes mod k.

    Independent of the Golomb property; combine with is_golomb to test
    for a resolvable Golomb ruler.
    """
    k = r.order
    return len({m % k for m in r.marks}) == k


def is_mgr(m: ModularRuler) -> bool:
    """True iff all k(k-1) directed differences are distinct mod v."""
    ms = m.marks
    v = m.modulus
    k = len(ms)
    if k * (k - 1) > v - 1:
        return False
    seen = bytearray(v)
    for i in range(k):
        xi = ms[i]
        for j in range(i + 1, k):
            d = (ms[j] - xi) % v
            e = v - d
            if d == e or seen[d] or seen[e]:
                return False
            seen[d] = seen[e] = 1
    return True


def is_rmgr(m: ModularRuler) -> bool:
    """True iff m is a modular Golomb ruler covering all residues mod k."""
    k = m.order
    if m.modulus % k != 0:
        raise ModulusNotDivisible(
            f"modulus {m.modulus} is not a multiple of the order {k}"
        )
    if len({x % k for x in m.marks}) != k:
        return False
    return is_mgr(m)


def counting_bound(k: int) -> int:
    """Least length allowed by counting differences against the non-multiples
    of k: k^2/2 - 1 for even k, (k^2 - 1)/2 for odd k."""
    if k < 2:
        raise ValueError(f"order must be at least 2, got {k}")
    if k % 2 == 0:
        return k * k // 2 - 1
    return (k * k - 1) // 2


def counting_inequality_holds(k: int, length: int) -> bool:
    """The raw inequality behind counting_bound: the C(k,2) differences of a
    resolvable ruler avoid multiples of k, so they must fit in the rest of
    {1..L}."""
    return length - length // k >= k * (k - 1) // 2


def golomb_lower_bound(k: int) -> float:
    """Strict lower bound k^2 - 2k*sqrt(k) + sqrt(k) - 2 on the length of any
    Golomb ruler of order k (resolvable or not).

    Exact integer arithmetic when k is a perfect square; otherwise floating
    point with SQRT_TOL accuracy.
    """
    if k < 2:
        raise ValueError(f"order must be at least 2, got {k}")
    s = math.isqrt(k)
    if s * s == k:
        return float(k * k - 2 * k * s + s - 2)
    rk = math.sqrt(k)
    return k * k - 2 * k * rk + rk - 2


def _min_length_above(bound: float) -> int:
    """Least integer strictly greater than a (possibly exact) real bound."""
    nearest = round(bound)
    if abs(bound - nearest) <= SQRT_TOL:
        return nearest + 1
    return math.ceil(bound)


def bound_report(k: int) -> BoundReport:
    return BoundReport(k, counting_bound(k), golomb_lower_bound(k))
