"""Existence classification for resolvable symmetric configurations.

``classify(k, w)`` decides whether a resolvable (k*w, k)-configuration
exists for 3 <= k <= 13, reporting the deciding authority:

* ``necessity``            w < k rules the parameters out by counting;
* ``affine-nonexistence``  w = k reduces to an affine plane of order k,
                           and no planes of order 6 or 10 exist;
* ``MOLS``                 w a prime power with k <= w;
* ``RGR-corollary``        k*w at least twice the optimal resolvable
                           ruler length plus one;
* ``RMGR-example`` / ``GGR-example``  a stored search-found witness;
* ``open``                 none of the above (nine pairs up to k = 13).

Every ``exists`` record can be materialized into a verified
configuration; stored witnesses are re-verified when first loaded.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cache
from importlib import resources

from .configurations import Configuration, Resolution, develop_ggr, develop_rmgr, from_mols
from .constructions import cubic_rgr, embed_as_rmgr
from .errors import OutOfRange, RulerKitError
from .groups import GroupRuler, Subgroup, is_ggr, parse_group
from .numbertheory import prime_power
from .rulers import ModularRuler, Ruler, is_golomb, is_resolvable, is_rmgr

EXISTS = "exists"
NONEXISTENT = "nonexistent"
OPEN = "open"

#: orders of projective/affine planes proved not to exist (Euler's 36
#: officers for 6; the Lam-Thiel-Swiercz computer search for 10)
MISSING_PLANE_ORDERS = frozenset({6, 10})

K_RANGE = range(3, 14)


@dataclass(frozen=True)
class ExistenceRecord:
    k: int
    w: int
    status: str
    authority: str
    witness_ref: dict | None = None
    cyclic: bool | None = None

    @property
    def v(self) -> int:
        return self.k * self.w

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "w": self.w,
            "v": self.v,
            "status": self.status,
            "authority": self.authority,
            "cyclic": self.cyclic,
            "witness": self.witness_ref,
        }


class _Witnesses:
    def __init__(self, optimal_rulers, rmgrs, ggrs):
        self.optimal_rulers = optimal_rulers  # k -> Ruler
        self.rmgrs = rmgrs                    # (k, w) -> ModularRuler
        self.ggrs = ggrs                      # (k, w) -> GroupRuler


@cache
def _witnesses() -> _Witnesses:
    """Load and verify the stored witness data; never trust it blindly."""
    raw = json.loads(
        resources.files("rgrkit.data").joinpath("witnesses.json").read_text()
    )
    optimal = {}
    for k_str, entry in raw["optimal_resolvable_rulers"].items():
        k = int(k_str)
        ruler = Ruler(entry["marks"])
        if (
            ruler.order != k
            or ruler.length != entry["length"]
            or not is_golomb(ruler)
            or not is_resolvable(ruler)
        ):
            raise RulerKitError(f"stored optimal ruler for k={k} fails verification")
        optimal[k] = ruler
    rmgrs = {}
    for entry in raw["rmgr_examples"]:
        m = ModularRuler(entry["marks"], entry["modulus"])
        if not is_rmgr(m):
            raise RulerKitError(
                f"stored ({m.modulus},{m.order})-RMGR fails verification"
            )
        rmgrs[(m.order, m.modulus // m.order)] = m
    ggrs = {}
    for entry in raw["ggr_examples"]:
        group = parse_group(entry["group"])
        subgroup = group.subgroup(
            tuple(g) if isinstance(g, list) else g for g in entry["subgroup"]
        )
        marks = [
            tuple(m) if isinstance(m, list) else m for m in entry["marks"]
        ]
        ruler = GroupRuler(group, subgroup, marks)
        if not is_ggr(ruler):
            raise RulerKitError(
                f"stored GGR over {group.structure} fails verification"
            )
        k = subgroup.index
        ggrs[(k, subgroup.order)] = ruler
    return _Witnesses(optimal, rmgrs, ggrs)


def optimal_resolvable_length(k: int) -> int:
    """Known optimal resolvable Golomb ruler length, 3 <= k <= 13."""
    if k not in K_RANGE:
        raise OutOfRange(f"optimal lengths stored only for 3 <= k <= 13, got {k}")
    return _witnesses().optimal_rulers[k].length


def optimal_resolvable_ruler(k: int) -> Ruler:
    if k not in K_RANGE:
        raise OutOfRange(f"optimal rulers stored only for 3 <= k <= 13, got {k}")
    return _witnesses().optimal_rulers[k]


def threshold_w(k: int) -> int:
    """Least w covered by the doubling corollary: ceil((2L+1)/k) for the
    optimal resolvable ruler length L of order k."""
    length = optimal_resolvable_length(k)
    return -((2 * length + 1) // -k)


def classify(k: int, w: int) -> ExistenceRecord:
    """Existence status of a resolvable (k*w, k)-configuration."""
    if k not in K_RANGE:
        raise OutOfRange(f"classification covers 3 <= k <= 13, got k={k}")
    if w < 1:
        raise OutOfRange(f"need w >= 1, got {w}")
    if w < k:
        return ExistenceRecord(k, w, NONEXISTENT, "necessity")
    if w == k and k in MISSING_PLANE_ORDERS:
        return ExistenceRecord(k, w, NONEXISTENT, "affine-nonexistence")
    if prime_power(w) is not None and k <= w:
        return ExistenceRecord(
            k, w, EXISTS, "MOLS", {"kind": "mols", "k": k, "w": w}, cyclic=False
        )
    if k * w >= 2 * optimal_resolvable_length(k) + 1:
        return ExistenceRecord(
            k, w, EXISTS, "RGR-corollary",
            {"kind": "rgr-embed", "k": k, "w": w}, cyclic=True,
        )
    wit = _witnesses()
    if (k, w) in wit.rmgrs:
        return ExistenceRecord(
            k, w, EXISTS, "RMGR-example",
            {"kind": "rmgr", "k": k, "w": w}, cyclic=True,
        )
    if (k, w) in wit.ggrs:
        return ExistenceRecord(
            k, w, EXISTS, "GGR-example",
            {"kind": "ggr", "k": k, "w": w}, cyclic=False,
        )
    assert k > 5, f"(k={k}, w={w}) should be settled for k <= 5"
    return ExistenceRecord(k, w, OPEN, "open")


def materialize(record: ExistenceRecord) -> tuple[Configuration, Resolution]:
    """Build and return the configuration a positive record promises."""
    if record.status != EXISTS:
        raise RulerKitError(f"nothing to materialize: status is {record.status}")
    ref = record.witness_ref
    kind = ref["kind"]
    if kind == "mols":
        return from_mols(ref["k"], ref["w"])
    if kind == "rgr-embed":
        ruler = optimal_resolvable_ruler(ref["k"])
        return develop_rmgr(embed_as_rmgr(ruler, ref["w"]))
    if kind == "rmgr":
        return develop_rmgr(_witnesses().rmgrs[(ref["k"], ref["w"])])
    if kind == "ggr":
        return develop_ggr(_witnesses().ggrs[(ref["k"], ref["w"])])
    raise RulerKitError(f"unknown witness kind {kind!r}")


def open_cases(k_max: int) -> list[tuple[int, int]]:
    """All (k, w) pairs with undecided existence, for 3 <= k <= k_max."""
    if k_max > 13:
        raise OutOfRange(f"classification covers k <= 13, got k_max={k_max}")
    cases = []
    for k in range(3, k_max + 1):
        for w in range(k, threshold_w(k)):
            if classify(k, w).status == OPEN:
                cases.append((k, w))
    return cases


def general_existence(k: int, w: int) -> bool:
    """True when w >= k^2, where a cyclic resolvable (k*w, k)-configuration
    always exists (the cubic ruler has length below k^3 / 2)."""
    if k < 3:
        raise OutOfRange(f"need k >= 3, got {k}")
    return w >= k * k


def general_witness(k: int, w: int) -> tuple[Configuration, Resolution]:
    """Materialize the general-existence configuration for w >= k^2.

    Uses the cubic ruler for k >= 4; at k = 3 the cubic form is invalid,
    so the stored optimal RGR(3,5) stands in (2*5+1 <= 3*w holds for all
    w >= 9).
    """
    if not general_existence(k, w):
        raise OutOfRange(f"general existence needs w >= k^2 = {k * k}, got w={w}")
    ruler = cubic_rgr(k) if k >= 4 else optimal_resolvable_ruler(3)
    return develop_rmgr(embed_as_rmgr(ruler, w))


def table3_rows() -> list[dict]:
    """Doubling-corollary thresholds for 6 <= k <= 13."""
    return [
        {
            "k": k,
            "optimal_length": optimal_resolvable_length(k),
            "min_w": threshold_w(k),
        }
        for k in range(6, 14)
    ]


def table4_rows() -> list[ExistenceRecord]:
    """Existence records for every (k, w) below the doubling threshold,
    6 <= k <= 13 (everything above the threshold exists by the corollary)."""
    return [
        classify(k, w)
        for k in range(6, 14)
        for w in range(k, threshold_w(k))
    ]
