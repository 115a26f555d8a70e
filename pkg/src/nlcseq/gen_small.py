"""Structured generation of B(n, c), B0(n, c) and P(n, omega) for omega <= n/2."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .bitseq import BitSeq, canonical_value, rotl, value_is_aperiodic
from .counter import OpCounter
from .structure import BForm, add_of_text, decompose_text


@dataclass(frozen=True, order=True)
class ShiftClass:
    """A rotation class of n-periodic sequences, identified by its least rotation."""

    canonical: BitSeq
    omega: int
    witness: BitSeq = field(compare=False)
    form: BForm | None = field(default=None, compare=False)
    add: int | None = field(default=None, compare=False)

    def members(self) -> list[BitSeq]:
        n, v = self.canonical.n, self.canonical.value
        return [BitSeq(n, rotl(v, n, k)) for k in range(n)]


@dataclass
class Generation:
    """Output of one generation run: the S-set witnesses and their rotation classes."""

    n: int
    omega: int
    method: str
    witnesses: list[BitSeq]
    classes: list[ShiftClass]
    ops: int

    @property
    def sequence_count(self) -> int:
        # every class here is aperiodic, so each orbit has exactly n members
        return self.n * len(self.classes)


def ceil_log2(n: int) -> int:
    return (n - 1).bit_length()


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % p for p in range(2, math.isqrt(n) + 1))


def _check_bc(n: int, c: int) -> None:
    if not 1 <= c < n:
        raise ValueError(f"need 1 <= c < n, got n={n}, c={c}")


def gen_b_values(n: int, c: int, zero_add: bool = False, counter: OpCounter | None = None) -> set[int]:
    """Packed members of B(n, c) (or B0(n, c) with ``zero_add``), built spacing by spacing."""
    _check_bc(n, c)
    half = n // 2
    skip_aperiodic_test = c >= half or _is_prime(n)
    out = set()
    for d in range(1, min(n - c, half) + 1):
        tail = n - c - d
        for a in range(1 << d):
            if not value_is_aperiodic(a, d):
                continue
            pattern = format(a, f"0{d}b")
            head = (pattern * (c // d + 2))[: c + d - 1]
            head += "1" if pattern[(c + d - 1) % d] == "0" else "0"
            prefix = int(head, 2) << tail
            if zero_add:
                last = 1 - int(pattern[d - 1])
                if tail == 0:
                    candidates = [prefix] if prefix & 1 == last else []
                else:
                    candidates = (prefix | (x << 1) | last for x in range(1 << (tail - 1)))
            else:
                candidates = (prefix | x for x in range(1 << tail))
            for v in candidates:
                if counter is not None:
                    counter.add()
                if skip_aperiodic_test or value_is_aperiodic(v, n):
                    out.add(v)
    return out


def gen_B(n: int, c: int, counter: OpCounter | None = None) -> set[BitSeq]:
    return {BitSeq(n, v) for v in gen_b_values(n, c, counter=counter)}


def gen_B0(n: int, c: int, counter: OpCounter | None = None) -> set[BitSeq]:
    return {BitSeq(n, v) for v in gen_b_values(n, c, zero_add=True, counter=counter)}


def _check_small_range(n: int, omega: int) -> bool:
    """False when omega is too small for any period-n sequence; raises outside the module's range."""
    if not 1 <= omega <= n // 2:
        raise ValueError(f"omega={omega} outside [1, {n // 2}] for n={n}")
    return omega >= ceil_log2(n)


def s_small_values(n: int, omega: int, counter: OpCounter | None = None) -> set[int]:
    if not _check_small_range(n, omega):
        return set()
    b0 = gen_b_values(n, omega, zero_add=True, counter=counter)
    table = gen_b_values(n, omega + 1, counter=counter) if omega + 1 < n else set()
    out = set()
    for v in b0:
        # k = 0 is probed too: s may sit in B(n, omega) and B(n, omega+1) under different spacings
        for k in range(n):
            if counter is not None:
                counter.add()
            if rotl(v, n, k) in table:
                break
        else:
            out.add(v)
    return out


def gen_S_small(n: int, omega: int, counter: OpCounter | None = None) -> set[BitSeq]:
    return {BitSeq(n, v) for v in s_small_values(n, omega, counter)}


def _zero_add_form(text: str, c: int) -> BForm | None:
    for f in decompose_text(text):
        if f.c == c and add_of_text(text, f.d) == 0:
            return f
    return None


def classes_from_witnesses(n: int, omega: int, witnesses, form_of=None) -> list[ShiftClass]:
    """Group witness values into rotation classes, keeping the least witness per class."""
    best: dict[int, int] = {}
    for v in witnesses:
        key = canonical_value(v, n)
        if key not in best or v < best[key]:
            best[key] = v
    out = []
    for key in sorted(best):
        w = BitSeq(n, best[key])
        form, add = form_of(w) if form_of else (None, None)
        out.append(ShiftClass(BitSeq(n, key), omega, w, form, add))
    return out


def small_generation(n: int, omega: int) -> Generation:
    counter = OpCounter()
    s_set = s_small_values(n, omega, counter)

    def form_of(w):
        return _zero_add_form(str(w), omega), 0

    classes = classes_from_witnesses(n, omega, s_set, form_of)
    witnesses = [BitSeq(n, v) for v in sorted(s_set)]
    return Generation(n, omega, "small", witnesses, classes, counter.count)


def gen_P_small(n: int, omega: int) -> list[ShiftClass]:
    return small_generation(n, omega).classes
