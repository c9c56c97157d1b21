"""Squarefree monomials over GF(2), their partial orders, and mixing-factor extremals.

A monomial is a subset of the variables {x_0, ..., x_{m-1}}, stored as a
bitmask.  Row r of the polar transform matrix is the evaluation vector of the
monomial whose variable set is exactly the *zero* bits of r, so the row index
of a monomial is ``(2^m - 1) ^ mask``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np
from enum import Enum
from typing import Iterable, Optional, Sequence


class Order(Enum):
    """Outcome of comparing two monomials under the divisibility-style order."""

    EQUAL = "equal"
    F_PRECEDES_G = "f_precedes_g"
    G_PRECEDES_F = "g_precedes_f"
    INCOMPARABLE = "incomparable"


_TOKEN = re.compile(r"x(\d+)|\*|\s+")


@dataclass(frozen=True)
class Monomial:
    """A squarefree monomial in m variables; ``mask`` bit i set means x_i present."""

    mask: int
    m: int

    def __post_init__(self) -> None:
        if self.m < 0:
            raise ValueError("variable count must be non-negative")
        if self.mask < 0 or self.mask >> self.m:
            raise ValueError(f"mask {self.mask:#x} out of range for m={self.m}")

    @classmethod
    def from_vars(cls, variables: Iterable[int], m: int) -> "Monomial":
        mask = 0
        for v in variables:
            if not 0 <= v < m:
                raise ValueError(f"variable index {v} out of range for m={m}")
            mask |= 1 << v
        return cls(mask, m)

    @classmethod
    def one(cls, m: int) -> "Monomial":
        return cls(0, m)

    @classmethod
    def parse(cls, text: str, m: int) -> "Monomial":
        """Parse ``1``, ``x0``, ``x0*x3`` or ``x2x3`` (separator optional)."""

        s = text.strip()
        if s == "1":
            return cls.one(m)
        mask = 0
        pos = 0
        while pos < len(s):
            match = _TOKEN.match(s, pos)
            if match is None:
                raise ValueError(f"bad monomial {text!r}: unexpected character at position {pos}")
            if match.group(1) is not None:
                v = int(match.group(1))
                if v >= m:
                    raise ValueError(f"bad monomial {text!r}: variable x{v} out of range for m={m}")
                mask |= 1 << v
            pos = match.end()
        if mask == 0:
            raise ValueError(f"bad monomial {text!r}: no variables found")
        return cls(mask, m)

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    @property
    def vars(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.m) if self.mask >> i & 1)

    @property
    def row_index(self) -> int:
        """Index of this monomial's row in the 2^m x 2^m polar transform matrix."""

        return ((1 << self.m) - 1) ^ self.mask

    @classmethod
    def from_row_index(cls, index: int, m: int) -> "Monomial":
        if not 0 <= index < (1 << m):
            raise ValueError(f"row index {index} out of range for m={m}")
        return cls(((1 << m) - 1) ^ index, m)

    def __str__(self) -> str:
        if self.mask == 0:
            return "1"
        return "".join(f"x{i}" for i in self.vars)


def evaluate(f: Monomial, m: Optional[int] = None) -> list[int]:
    """Evaluation vector of ``f`` over all binary points, in the fixed row order.

    Position p carries the point b with b_i = 1 - (bit of p at weight 2^{m-1-i}),
    so f evaluates to 1 at p exactly when p has zeros at the mirrored positions
    of f's variables.  The result equals row ``f.row_index`` of the transform.
    """

    if m is None:
        m = f.m
    elif m != f.m:
        raise ValueError("ambient variable count mismatch")
    pmask = 0
    for i in f.vars:
        pmask |= 1 << (m - 1 - i)
    return [1 if (p & pmask) == 0 else 0 for p in range(1 << m)]


def compare(f: Monomial, g: Monomial) -> Order:
    """Decide the partial order between two monomials in O(degree) time.

    Equal degrees compare variable-by-variable; for unequal degrees the smaller
    monomial must fit under the top-aligned divisor of the larger one (taking
    the largest variables of the larger monomial is always the best choice).
    """

    if f.m != g.m:
        raise ValueError("monomials live in different ambient rings")
    if f.mask == g.mask:
        return Order.EQUAL
    fv, gv = f.vars, g.vars
    if len(fv) == len(gv):
        if all(a <= b for a, b in zip(fv, gv)):
            return Order.F_PRECEDES_G
        if all(b <= a for a, b in zip(fv, gv)):
            return Order.G_PRECEDES_F
        return Order.INCOMPARABLE
    if len(fv) < len(gv):
        shift = len(gv) - len(fv)
        if all(fv[k] <= gv[k + shift] for k in range(len(fv))):
            return Order.F_PRECEDES_G
        return Order.INCOMPARABLE
    shift = len(fv) - len(gv)
    if all(gv[k] <= fv[k + shift] for k in range(len(gv))):
        return Order.G_PRECEDES_F
    return Order.INCOMPARABLE


def precedes(f: Monomial, g: Monomial) -> bool:
    """True iff f is below-or-equal to g in the partial order."""

    return compare(f, g) in (Order.F_PRECEDES_G, Order.EQUAL)


def single_shift_le(f: Monomial, g: Monomial) -> bool:
    """True iff f is obtained from g by lowering one variable or deleting one.

    Either g = h*x_k and f = h*x_j with j < k, or f = h and g = h*x_k.
    """

    if f.m != g.m:
        raise ValueError("monomials live in different ambient rings")
    if f.mask == g.mask:
        return False
    diff = f.mask ^ g.mask
    if f.degree + 1 == g.degree:
        # pure deletion: f must be g minus one variable
        return (f.mask & g.mask) == f.mask and diff.bit_count() == 1
    if f.degree == g.degree and diff.bit_count() == 2:
        j = (diff & f.mask).bit_length() - 1
        k = (diff & g.mask).bit_length() - 1
        return (diff & f.mask).bit_count() == 1 and j < k
    return False


def chain_decompose(f: Monomial, g: Monomial) -> Optional[list[Monomial]]:
    """Witness chain f = f_0, f_1, ..., f_t = g with single-shift steps, or None.

    Returns [f] when f == g.  Construction: first raise f's variables one at a
    time to match the top-aligned divisor of g, then append g's remaining
    variables smallest-first.
    """

    order = compare(f, g)
    if order == Order.EQUAL:
        return [f]
    if order != Order.F_PRECEDES_G:
        return None
    m = f.m
    fv = list(f.vars)
    gv = list(g.vars)
    shift = len(gv) - len(fv)
    target = gv[shift:]
    chain = [f]
    current = fv[:]
    # raise variables from the largest position down; each step stays sorted
    for pos in range(len(fv) - 1, -1, -1):
        if current[pos] != target[pos]:
            current[pos] = target[pos]
            chain.append(Monomial.from_vars(current, m))
    # grow degree by adding the missing variables smallest-first
    for v in gv[:shift]:
        current.append(v)
        chain.append(Monomial.from_vars(current, m))
    return chain


def immediate_predecessors(g: Monomial) -> list[Monomial]:
    """All f with f single-shift below g: one deletion or one variable lowered."""

    preds = []
    for k in g.vars:
        preds.append(Monomial(g.mask ^ (1 << k), g.m))
        for j in range(k):
            if not g.mask >> j & 1:
                preds.append(Monomial(g.mask ^ (1 << k) | (1 << j), g.m))
    return preds


def is_decreasing(
    monomials: Iterable[Monomial],
) -> tuple[bool, Optional[tuple[Monomial, Monomial]]]:
    """Check downward closure under the partial order.

    Only immediate single-shift predecessors are scanned; that suffices because
    any strict relation decomposes into a chain of single shifts.  On failure
    returns a witness pair (missing predecessor, offending member).
    """

    members = list(monomials)
    present = {mono.mask for mono in members}
    for g in members:
        for f in immediate_predecessors(g):
            if f.mask not in present:
                return False, (f, g)
    return True, None


def _incomparable_above_counts(m: int) -> list[int]:
    """For each row index t, count rows above t incomparable with t.

    Uses the suffix-count encoding of the order: f precedes g iff for every
    threshold x the number of f-variables >= x is at most g's count.  That
    turns each comparison into a componentwise vector domination, done here
    with one vectorized pass per candidate tau.
    """

    n = 1 << m
    counts_matrix = np.zeros((n, m), dtype=np.int16)
    for i in range(n):
        mono = Monomial.from_row_index(i, m)
        for x in mono.vars:
            counts_matrix[i, : x + 1] += 1
    out = [0] * n
    for t in range(1, n):
        above = counts_matrix[:t]
        le = (above <= counts_matrix[t]).all(axis=1)
        ge = (above >= counts_matrix[t]).all(axis=1)
        out[t] = int((~(le | ge)).sum())
    return out


def max_mixing_factor(m: int) -> tuple[int, list[int]]:
    """Largest mixing factor over all decreasing monomial codes of length 2^m.

    For each candidate last-frozen row tau, the extremal code unfreezes every
    row above tau incomparable with tau plus everything below tau; its mixing
    factor is the incomparable-above count.  Returns the maximum and all
    argmax row indices.
    """

    if m < 1:
        raise ValueError("m must be at least 1")
    counts = _incomparable_above_counts(m)
    best = max(counts)
    return best, [t for t, c in enumerate(counts) if c == best]


def max_mixing_factor_rate_half(m: int) -> int:
    """Mixing-factor upper bound when the code rate is capped at 1/2.

    With tau the last frozen row there are n-1-t unfrozen rows below it, so at
    most n/2 - (n-1-t) = t+1-n/2 unfrozen rows may sit above; the bound is the
    minimum of that cap (clamped at zero) and the unrestricted count.
    """

    if m < 1:
        raise ValueError("m must be at least 1")
    n = 1 << m
    counts = _incomparable_above_counts(m)
    return max(min(c, max(0, t + 1 - n // 2)) for t, c in enumerate(counts))
