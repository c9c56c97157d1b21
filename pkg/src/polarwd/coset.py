"""Recursive weight enumerators of polar cosets.

A coset fixes the first i+1 information bits and lets the remaining n-1-i run
free.  Its enumerator pair (last bit 0, last bit 1) satisfies a two-way
recursion on half-length cosets whose prefixes are the even-xor-odd and odd
subsequences of the original prefix; the base case at n=1 is (1, X).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .wef import WeightEnumerator

WefPair = tuple[WeightEnumerator, WeightEnumerator]


@dataclass(frozen=True)
class PolarCosetSpec:
    """Identifies the coset with prefix u_0..u_{i-1} and fixed bit u_i."""

    n: int
    prefix: tuple[int, ...]
    last_bit: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.n & (self.n - 1):
            raise ValueError(f"block length {self.n} is not a power of two")
        if len(self.prefix) >= self.n:
            raise ValueError("prefix must be shorter than the block length")
        if self.last_bit not in (0, 1):
            raise ValueError("last bit must be 0 or 1")

    @property
    def size(self) -> int:
        return 1 << (self.n - 1 - len(self.prefix))


class CosetCache:
    """Bounded memo table for sub-coset enumerator pairs, keyed by (n, prefix).

    Insertion stops silently once the size cap is reached; entries are never
    mutated after insertion, so concurrent readers under the GIL are safe.
    """

    def __init__(self, max_entries: int = 1 << 20):
        self.max_entries = max_entries
        self._table: dict[tuple[int, tuple[int, ...]], WefPair] = {}

    def get(self, key: tuple[int, tuple[int, ...]]) -> Optional[WefPair]:
        return self._table.get(key)

    def put(self, key: tuple[int, tuple[int, ...]], value: WefPair) -> None:
        if len(self._table) < self.max_entries:
            self._table.setdefault(key, value)

    def __len__(self) -> int:
        return len(self._table)


def even_odd_transform(prefix: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(even xor odd, odd) subsequences, the prefix arguments of the recursion.

    For an odd-length prefix the even part is one longer; the trailing even
    element is never consumed here because the recursion strips the last bit
    before splitting.
    """

    even = prefix[0::2]
    odd = prefix[1::2]
    xored = tuple(e ^ o for e, o in zip(even, odd))
    return xored, tuple(odd)


def calc_a(
    n: int,
    prefix: Sequence[int],
    cache: Optional[CosetCache] = None,
) -> WefPair:
    """Enumerator pair of the two cosets extending ``prefix`` with 0 and with 1.

    Implements the coset recursion directly: even positions combine the two
    half-length pairs cross-wise, odd positions select products according to
    the stripped last prefix bit.  Each returned polynomial sums to
    2^{n-1-len(prefix)}.
    """

    if n < 1 or n & (n - 1):
        raise ValueError(f"block length {n} is not a power of two")
    p = tuple(int(b) & 1 for b in prefix)
    if len(p) >= n:
        raise ValueError("prefix must be shorter than the block length")
    return _calc(n, p, cache)


def _calc(n: int, prefix: tuple[int, ...], cache: Optional[CosetCache]) -> WefPair:
    if n == 1:
        return WeightEnumerator.one(), WeightEnumerator.x()
    key = (n, prefix)
    if cache is not None:
        hit = cache.get(key)
        if hit is not None:
            return hit
    if len(prefix) % 2 == 0:
        xored, odd = even_odd_transform(prefix)
        f0, f1 = _calc(n // 2, xored, cache)
        g0, g1 = _calc(n // 2, odd, cache)
        result = (f0 * g0 + f1 * g1, f0 * g1 + f1 * g0)
    else:
        last = prefix[-1]
        xored, odd = even_odd_transform(prefix[:-1])
        f0, f1 = _calc(n // 2, xored, cache)
        g0, g1 = _calc(n // 2, odd, cache)
        # at odd positions the pair is (f_{a^0} g_0, f_{a^1} g_1) where a is
        # the stripped last prefix bit
        if last == 0:
            result = (f0 * g0, f1 * g1)
        else:
            result = (f1 * g0, f0 * g1)
    if cache is not None:
        cache.put(key, result)
    return result
