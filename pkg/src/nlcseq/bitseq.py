"""Bit-packed binary sequences with rotation, periodicity and run helpers.

Symbol s_0 is stored in the most significant position of ``value`` so that
integer order on equal-length sequences is lexicographic order with 0 < 1,
and the text form reads index 0 leftmost.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache

MAX_LENGTH = 64


class BitSeqParseError(ValueError):
    pass


class EmptyInputError(BitSeqParseError):
    pass


class TooLongError(BitSeqParseError):
    pass


class ForeignCharacterError(BitSeqParseError):
    pass


@dataclass(frozen=True, order=True)
class BitSeq:
    n: int
    value: int

    def __post_init__(self):
        if not 1 <= self.n <= MAX_LENGTH:
            raise ValueError(f"length {self.n} outside [1, {MAX_LENGTH}]")
        if not 0 <= self.value < (1 << self.n):
            raise ValueError(f"value {self.value} does not fit in {self.n} bits")

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, i: int) -> int:
        # Strict: negative or out-of-range indices are bugs, not wraparound.
        if not isinstance(i, int) or not 0 <= i < self.n:
            raise IndexError(f"index {i!r} outside [0, {self.n})")
        return (self.value >> (self.n - 1 - i)) & 1

    def at(self, i: int) -> int:
        """Cyclic access: index reduced mod n."""
        return (self.value >> (self.n - 1 - (i % self.n))) & 1

    def __iter__(self):
        for i in range(self.n):
            yield (self.value >> (self.n - 1 - i)) & 1

    def __str__(self) -> str:
        return format(self.value, f"0{self.n}b")

    def __repr__(self) -> str:
        return f"BitSeq('{self}')"

    @property
    def bits(self) -> tuple[int, ...]:
        return tuple(self)

    @classmethod
    def from_bits(cls, text: str) -> "BitSeq":
        return from_bits(text)

    @classmethod
    def from_list(cls, symbols) -> "BitSeq":
        return from_bits("".join("1" if b else "0" for b in symbols))


def from_bits(text: str) -> BitSeq:
    if not text:
        raise EmptyInputError("empty bit string")
    if len(text) > MAX_LENGTH:
        raise TooLongError(f"bit string of length {len(text)} exceeds {MAX_LENGTH}")
    bad = set(text) - {"0", "1"}
    if bad:
        raise ForeignCharacterError(f"foreign character(s) {''.join(sorted(bad))!r} in bit string")
    return BitSeq(len(text), int(text, 2))


def _mask(n: int) -> int:
    return (1 << n) - 1


def rotl(value: int, n: int, k: int) -> int:
    """Left-rotate an n-bit packed value by k (L^k)."""
    k %= n
    if k == 0:
        return value
    return ((value << k) | (value >> (n - k))) & _mask(n)


def rotate_left(s: BitSeq, k: int) -> BitSeq:
    return BitSeq(s.n, rotl(s.value, s.n, k))


def rotate_right(s: BitSeq, k: int) -> BitSeq:
    return BitSeq(s.n, rotl(s.value, s.n, -k))


@lru_cache(maxsize=None)
def proper_divisors(n: int) -> tuple[int, ...]:
    return tuple(k for k in range(1, n) if n % k == 0)


def value_is_aperiodic(value: int, n: int) -> bool:
    for k in proper_divisors(n):
        if rotl(value, n, k) == value:
            return False
    return True


def is_aperiodic(s: BitSeq) -> bool:
    return value_is_aperiodic(s.value, s.n)


def least_period(s: BitSeq) -> int:
    for k in proper_divisors(s.n):
        if rotl(s.value, s.n, k) == s.value:
            return k
    return s.n


def canonical_value(value: int, n: int) -> int:
    return min(rotl(value, n, k) for k in range(n))


def canonical_rotation(s: BitSeq) -> tuple[BitSeq, int]:
    """Lexicographically least rotation of s and the smallest k with L^k(s) equal to it."""
    best, shift = s.value, 0
    for k in range(1, s.n):
        r = rotl(s.value, s.n, k)
        if r < best:
            best, shift = r, k
    return BitSeq(s.n, best), shift


def hamming_weight(s: BitSeq) -> int:
    return bin(s.value).count("1")


@dataclass(frozen=True)
class RunHistogram:
    zero_runs: dict[int, int] = field(default_factory=dict)
    one_runs: dict[int, int] = field(default_factory=dict)

    def mass(self) -> int:
        return sum(k * v for k, v in self.zero_runs.items()) + sum(
            k * v for k, v in self.one_runs.items()
        )


def cyclic_runs(s: BitSeq) -> RunHistogram:
    text = str(s)
    if "0" not in text or "1" not in text:
        raise ValueError("no runs defined for a constant sequence")
    # Start at a symbol change so no run straddles the seam.
    start = next(i for i in range(s.n) if text[i] != text[i - 1])
    text = text[start:] + text[:start]
    zeros, ones = Counter(), Counter()
    i = 0
    while i < s.n:
        j = i
        while j < s.n and text[j] == text[i]:
            j += 1
        (zeros if text[i] == "0" else ones)[j - i] += 1
        i = j
    return RunHistogram(dict(sorted(zeros.items())), dict(sorted(ones.items())))
