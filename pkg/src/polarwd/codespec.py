"""Code specifications: frozen sets, affine dynamic constraints, constructions.

A spec assigns each of the 2^m information positions either "unfrozen" or a
freeze constraint u_i = constant xor (xor of earlier bits).  Plain specs have
empty supports and constant zero; dynamic constraints cover CRC precoding,
convolutional precoding, and arbitrary binary linear codes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .monomials import Monomial, is_decreasing
from .transform import generator_matrix, index_to_monomial


@dataclass(frozen=True)
class FreezeConstraint:
    """u_target = constant xor (xor of u_j for j in support), all j < target."""

    target: int
    support: frozenset[int] = frozenset()
    constant: int = 0

    def __post_init__(self) -> None:
        if self.constant not in (0, 1):
            raise ValueError("constant must be 0 or 1")
        if any(j >= self.target or j < 0 for j in self.support):
            raise ValueError(
                f"constraint on u_{self.target} references a non-earlier index"
            )

    @property
    def is_plain(self) -> bool:
        return not self.support and self.constant == 0

    def value(self, u: Sequence[int]) -> int:
        v = self.constant
        for j in self.support:
            v ^= u[j]
        return v


@dataclass(frozen=True)
class Profile:
    """Red/blue split around the last frozen bit; gamma is the mixing factor."""

    s: Optional[int]
    red: tuple[int, ...]
    blue: tuple[int, ...]
    gamma: int


@dataclass(frozen=True)
class CodeSpec:
    """An immutable length-2^m code: per-index freeze status plus a label."""

    m: int
    statuses: tuple[Optional[FreezeConstraint], ...]
    label: str = ""

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValueError("m must be non-negative")
        n = 1 << self.m
        if len(self.statuses) != n:
            raise ValueError(f"expected {n} statuses, got {len(self.statuses)}")
        for i, st in enumerate(self.statuses):
            if st is not None and st.target != i:
                raise ValueError(f"constraint at index {i} targets {st.target}")

    @property
    def n(self) -> int:
        return 1 << self.m

    @property
    def k(self) -> int:
        return sum(1 for st in self.statuses if st is None)

    @property
    def unfrozen(self) -> tuple[int, ...]:
        return tuple(i for i, st in enumerate(self.statuses) if st is None)

    @property
    def frozen(self) -> tuple[int, ...]:
        return tuple(i for i, st in enumerate(self.statuses) if st is not None)

    @property
    def is_plain(self) -> bool:
        return all(st is None or st.is_plain for st in self.statuses)

    def unfrozen_monomials(self) -> list[Monomial]:
        return [index_to_monomial(i, self.m) for i in self.unfrozen]

    def is_decreasing_code(self) -> bool:
        ok, _ = is_decreasing(self.unfrozen_monomials())
        return ok

    def with_frozen(
        self, index: int, constant: int, support: Iterable[int] = ()
    ) -> "CodeSpec":
        """Copy of this spec with one additional index frozen."""

        if self.statuses[index] is not None:
            raise ValueError(f"index {index} is already frozen")
        statuses = list(self.statuses)
        statuses[index] = FreezeConstraint(index, frozenset(support), constant)
        return CodeSpec(self.m, tuple(statuses), self.label)


def from_frozen_set(m: int, frozen: Iterable[int], label: str = "") -> CodeSpec:
    """Plain spec freezing the given indices to zero."""

    n = 1 << m
    frozen_set = set(frozen)
    if any(i < 0 or i >= n for i in frozen_set):
        raise ValueError("frozen index out of range")
    statuses = tuple(
        FreezeConstraint(i) if i in frozen_set else None for i in range(n)
    )
    return CodeSpec(m, statuses, label)


def from_unfrozen_set(m: int, unfrozen: Iterable[int], label: str = "") -> CodeSpec:
    n = 1 << m
    unfrozen_set = set(unfrozen)
    if any(i < 0 or i >= n for i in unfrozen_set):
        raise ValueError("unfrozen index out of range")
    return from_frozen_set(m, set(range(n)) - unfrozen_set, label)


def profile(spec: CodeSpec) -> Profile:
    """Last frozen index, the unfrozen bits on each side of it, and gamma."""

    frozen = spec.frozen
    if not frozen:
        return Profile(None, (), tuple(spec.unfrozen), 0)
    s = frozen[-1]
    red = tuple(i for i in spec.unfrozen if i < s)
    blue = tuple(i for i in spec.unfrozen if i > s)
    return Profile(s, red, blue, len(red))


def from_rm(r: int, m: int) -> CodeSpec:
    """Reed-Muller code of order r: unfreeze rows whose monomial degree <= r."""

    if not 0 <= r <= m:
        raise ValueError(f"order {r} out of range for m={m}")
    unfrozen = [i for i in range(1 << m) if m - int(i).bit_count() <= r]
    return from_unfrozen_set(m, unfrozen, label=f"rm({r},{m})")


def bec_bhattacharyya(m: int, erasure: float) -> list[float]:
    """Per-bit-channel Bhattacharyya parameters over a BEC, by the exact recursion."""

    if not 0.0 < erasure < 1.0:
        raise ValueError("erasure probability must be in (0, 1)")
    zs = [erasure]
    for _ in range(m):
        nxt = []
        for z in zs:
            nxt.append(2.0 * z - z * z)
            nxt.append(z * z)
        zs = nxt
    return zs


def from_bhattacharyya_bec(m: int, k: int, erasure: float) -> CodeSpec:
    """Unfreeze the k most reliable bit channels of a BEC with the given erasure.

    Ties prefer the larger index.  The resulting unfrozen monomial set is
    validated to be decreasing, which makes float rounding harmless or loud.
    """

    n = 1 << m
    if not 0 <= k <= n:
        raise ValueError(f"dimension {k} out of range for n={n}")
    zs = bec_bhattacharyya(m, erasure)
    ranked = sorted(range(n), key=lambda i: (zs[i], -i))
    unfrozen = ranked[:k]
    spec = from_unfrozen_set(m, unfrozen, label=f"bec(m={m},k={k})")
    ok, witness = is_decreasing(spec.unfrozen_monomials())
    if not ok:
        raise ValueError(
            f"BEC construction produced a non-decreasing set; witness {witness}"
        )
    return spec


def from_generator_matrix(gen: Sequence[Sequence[int]]) -> CodeSpec:
    """Represent the row space of a full-rank k x n matrix as a dynamic spec.

    The information-domain generators are the rows of G times the transform
    (an involution, so codeword c maps back to u = c G_n).  Reduced so each
    row has a distinct lowest set index, the pivots become the unfrozen
    positions and every other column reads off a causal affine constraint.
    """

    g = np.array(gen, dtype=np.uint8) & 1
    if g.ndim != 2:
        raise ValueError("generator matrix must be two-dimensional")
    k, n = g.shape
    if n < 1 or n & (n - 1):
        raise ValueError(f"block length {n} is not a power of two")
    m = n.bit_length() - 1
    gn = generator_matrix(m)
    u_rows = (g @ gn) % 2
    rows = [int("".join(map(str, row[::-1])), 2) if row.any() else 0 for row in u_rows]

    pivots: list[int] = []
    reduced: list[int] = []
    for col in range(n):
        pivot_row = None
        for idx, row in enumerate(rows):
            if row >> col & 1:
                pivot_row = idx
                break
        if pivot_row is None:
            continue
        piv = rows.pop(pivot_row)
        reduced = [r ^ piv if r >> col & 1 else r for r in reduced]
        rows = [r ^ piv if r >> col & 1 else r for r in rows]
        reduced.append(piv)
        pivots.append(col)
    if rows and any(rows):
        raise AssertionError("leftover nonzero rows after full column sweep")
    if len(pivots) < k:
        raise ValueError(f"generator matrix has rank {len(pivots)}, expected {k}")

    pivot_set = set(pivots)
    statuses: list[Optional[FreezeConstraint]] = []
    for i in range(n):
        if i in pivot_set:
            statuses.append(None)
        else:
            support = frozenset(
                pivots[t] for t, row in enumerate(reduced) if row >> i & 1
            )
            statuses.append(FreezeConstraint(i, support, 0))
    return CodeSpec(m, tuple(statuses), label=f"generator({n},{k})")


def pac_spec(m: int, rate_profile: Iterable[int], conv_taps: Sequence[int]) -> CodeSpec:
    """Convolutionally precoded spec: u = v T with v zero outside the profile.

    T is the unit-diagonal upper-triangular Toeplitz matrix of the taps, so v
    is causally recoverable from u and each frozen position yields an affine
    constraint on earlier bits of u.
    """

    taps = [int(t) & 1 for t in conv_taps]
    if not taps or taps[0] != 1:
        raise ValueError("convolution taps must start with 1")
    n = 1 << m
    prof = set(rate_profile)
    if any(i < 0 or i >= n for i in prof):
        raise ValueError("rate profile index out of range")
    # rep[i] = bitmask over u-indices expressing v_i = u . rep[i]
    rep: list[int] = []
    statuses: list[Optional[FreezeConstraint]] = []
    for i in range(n):
        expr = 0
        for d in range(1, min(len(taps), i + 1)):
            if taps[d]:
                expr ^= rep[i - d]
        rep.append(expr ^ (1 << i))
        if i in prof:
            statuses.append(None)
        else:
            support = frozenset(j for j in range(i) if expr >> j & 1)
            statuses.append(FreezeConstraint(i, support, 0))
    return CodeSpec(m, tuple(statuses), label=f"pac(m={m})")


def dual_spec(spec: CodeSpec) -> CodeSpec:
    """Dual of a plain spec: complement the frozen set and reflect indices."""

    if not spec.is_plain:
        raise ValueError("duals are only defined for plain specs here")
    n = spec.n
    unfrozen = {n - 1 - i for i in spec.frozen}
    label = f"dual({spec.label})" if spec.label else ""
    return from_unfrozen_set(spec.m, unfrozen, label)


def spec_from_json(obj: dict) -> CodeSpec:
    """Build a spec from the JSON schema accepted by the CLI."""

    if not isinstance(obj, dict):
        raise ValueError("spec JSON must be an object")
    construction = obj.get("construction")
    if construction == "rm":
        return from_rm(int(obj["r"]), int(obj["m"]))
    if construction == "bec":
        return from_bhattacharyya_bec(int(obj["m"]), int(obj["k"]), float(obj["erasure"]))
    if construction == "pac":
        return pac_spec(int(obj["m"]), [int(i) for i in obj["profile"]], obj["taps"])
    if construction == "generator":
        return from_generator_matrix(obj["matrix"])
    if construction is not None:
        raise ValueError(f"unknown construction {construction!r}")

    m = int(obj["m"])
    n = 1 << m
    if "constraints" in obj:
        unfrozen = {int(i) for i in obj.get("unfrozen", [])}
        statuses: list[Optional[FreezeConstraint]] = [None] * n
        constrained = set()
        for c in obj["constraints"]:
            target = int(c["target"])
            statuses[target] = FreezeConstraint(
                target,
                frozenset(int(j) for j in c.get("support", [])),
                int(c.get("constant", 0)),
            )
            constrained.add(target)
        for i in range(n):
            if i not in unfrozen and i not in constrained:
                statuses[i] = FreezeConstraint(i)
        if unfrozen & constrained:
            raise ValueError("an index appears as both unfrozen and constrained")
        return CodeSpec(m, tuple(statuses))
    if "frozen" in obj:
        return from_frozen_set(m, [int(i) for i in obj["frozen"]])
    if "unfrozen" in obj:
        return from_unfrozen_set(m, [int(i) for i in obj["unfrozen"]])
    raise ValueError("spec JSON needs 'frozen', 'unfrozen', 'constraints', or 'construction'")


def spec_to_json(spec: CodeSpec) -> dict:
    """Serialize a spec in the same schema spec_from_json accepts."""

    if spec.is_plain:
        return {"m": spec.m, "frozen": [int(i) for i in spec.frozen]}
    return {
        "m": spec.m,
        "unfrozen": [int(i) for i in spec.unfrozen],
        "constraints": [
            {
                "target": st.target,
                "support": sorted(st.support),
                "constant": st.constant,
            }
            for st in spec.statuses
            if st is not None
        ],
    }
