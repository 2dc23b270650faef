"""Explicit constructions of resolvable Golomb rulers.

Three families are implemented:

* Ruzsa's Sidon-set construction from a primitive root mod a prime p,
  tightened by rotating the sorted marks at the largest cyclic gap; gives
  order p-1 and length at most p^2 - 2p.
* Golomb rulers from Costas permutations (order n, length below 2n^2);
  the exponential Welch family supplies Costas permutations of order p-1.
* A cubic closed form x_i = C(i,2)*k - i that works for every order
  k >= 4 with length exactly (k+1)(k-2)^2/2.

Plus the doubling embedding that turns a resolvable Golomb ruler into a
modular one whenever the modulus is at least twice the length plus one.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import numbertheory as nt
from .errors import (
    ConstructionFailed,
    ModulusTooSmall,
    NotPrime,
    OrderTooSmall,
)
from .rulers import ModularRuler, Ruler, is_golomb, is_resolvable, is_rmgr


@dataclass(frozen=True)
class RuzsaParams:
    """A prime together with a primitive root mod that prime."""

    p: int
    g: int

    def __post_init__(self):
        if not nt.is_prime(self.p):
            raise NotPrime(f"{self.p} is not prime")
        nt.require_primitive_root(self.g, self.p)


@dataclass(frozen=True)
class CostasPermutation:
    """A permutation f of {1..n} whose difference vectors are all distinct:
    f(i+k) - f(i) = f(j+k) - f(j) forces i = j (for k != 0)."""

    image: tuple[int, ...]

    def __init__(self, image):
        image = tuple(image)
        n = len(image)
        if sorted(image) != list(range(1, n + 1)):
            raise ValueError(f"{image} is not a permutation of 1..{n}")
        for k in range(1, n):
            seen = set()
            for i in range(n - k):
                d = image[i + k] - image[i]
                if d in seen:
                    raise ValueError(
                        f"not a Costas permutation: row {k} repeats difference {d}"
                    )
                seen.add(d)
        object.__setattr__(self, "image", image)

    @property
    def order(self) -> int:
        return len(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i - 1]


def ruzsa_rgr(params: RuzsaParams) -> Ruler:
    """Ruzsa's resolvable Golomb ruler of order p-1 and length <= p^2 - 2p.

    Solves a_i = i mod (p-1), a_i = g^i mod p for i = 1..p-1 (a modular
    Golomb ruler in Z_{p(p-1)} covering all residues mod p-1), then rotates
    the sorted marks so the largest cyclic gap wraps around, which shortens
    the ruler by that gap.  Ties between maximal gaps break toward the
    smallest left endpoint.
    """
    p, g = params.p, params.g
    n = p * (p - 1)
    marks = sorted(
        nt.crt_pair(i % (p - 1), p - 1, pow(g, i, p), p) for i in range(1, p)
    )
    gaps = [(marks[i + 1] - marks[i], marks[i], marks[i + 1])
            for i in range(len(marks) - 1)]
    gaps.append(((marks[0] - marks[-1]) % n, marks[-1], marks[0]))
    best_gap = max(g_ for g_, _, _ in gaps)
    cut = min(right for g_, left, right in gaps if g_ == best_gap)
    ruler = Ruler((m - cut) % n for m in marks)
    if not (is_golomb(ruler) and is_resolvable(ruler)):
        raise ConstructionFailed(
            f"Ruzsa construction failed verification for p={p}, g={g}",
            marks=ruler.marks,
        )
    assert ruler.length <= p * p - 2 * p
    return ruler


def ruzsa_best(p: int) -> tuple[int, Ruler]:
    """Shortest Ruzsa ruler over all primitive roots mod p (ties: least g)."""
    if not nt.is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if p < 5:
        raise ValueError(f"need p >= 5, got {p}")
    best: tuple[int, int, Ruler] | None = None
    for g in nt.primitive_roots(p):
        ruler = ruzsa_rgr(RuzsaParams(p, g))
        if best is None or ruler.length < best[0]:
            best = (ruler.length, g, ruler)
    return best[1], best[2]


def welch_costas(p: int, g: int) -> CostasPermutation:
    """Exponential Welch Costas permutation of order p-1: i -> g^i mod p."""
    if not nt.is_prime(p) or p < 3:
        raise NotPrime(f"need an odd prime, got {p}")
    nt.require_primitive_root(g, p)
    return CostasPermutation(pow(g, i, p) for i in range(1, p))


def costas_rgr(c: CostasPermutation, m: int | None = None) -> Ruler:
    """Golomb ruler {(i-1)*m + f(i)} from a Costas permutation f of order n.

    With the default spacing m = 2n the marks run through all residues mod
    n, so the result is resolvable with length at most (n-1)(2n+1).  A
    custom spacing m >= 2n - 2 still yields a Golomb ruler but resolvability
    is only guaranteed when n divides m.
    """
    n = c.order
    if m is None:
        m = 2 * n
    elif m < 2 * n - 2:
        raise ValueError(f"spacing {m} below the Golomb threshold {2 * n - 2}")
    return Ruler((i - 1) * m + c(i) for i in range(1, n + 1))


def cubic_marks(k: int) -> tuple[int, ...]:
    """Raw marks C(i,2)*k - i for i = 0..k-1, shifted to start at 0."""
    if k < 3:
        raise OrderTooSmall(f"need order at least 3, got {k}")
    xs = sorted(i * (i - 1) // 2 * k - i for i in range(k))
    base = xs[0]
    return tuple(x - base for x in xs)


def cubic_rgr(k: int) -> Ruler:
    """Resolvable Golomb ruler of any order k >= 4, length (k+1)(k-2)^2/2.

    The output is re-verified; at k = 3 the closed form degenerates to
    {0,1,2}, which repeats the difference 1, so ConstructionFailed is
    raised rather than returning a bad set.
    """
    ruler = Ruler(cubic_marks(k))
    expected_length = (k + 1) * (k - 2) * (k - 2) // 2
    problems = []
    if ruler.length != expected_length:
        problems.append(f"length {ruler.length} != {expected_length}")
    if not is_golomb(ruler):
        problems.append("differences are not distinct")
    if not is_resolvable(ruler):
        problems.append(f"marks do not cover all residues mod {k}")
    if problems:
        raise ConstructionFailed(
            f"cubic construction invalid at k={k}: " + "; ".join(problems),
            marks=ruler.marks,
        )
    return ruler


def embed_as_rmgr(r: Ruler, w: int) -> ModularRuler:
    """Read a resolvable Golomb ruler of order k as a (k*w, k)-modular one.

    Sound whenever k*w >= 2L + 1: differences then cannot collide mod k*w,
    and residue coverage mod k survives unchanged.
    """
    if not (is_golomb(r) and is_resolvable(r)):
        raise ValueError("input is not a resolvable Golomb ruler")
    k = r.order
    v = k * w
    if v < 2 * r.length + 1:
        raise ModulusTooSmall(
            f"modulus {v} < {2 * r.length + 1}; the doubling embedding needs "
            f"k*w >= 2L+1"
        )
    m = ModularRuler(r.marks, v)
    assert is_rmgr(m)
    return m
