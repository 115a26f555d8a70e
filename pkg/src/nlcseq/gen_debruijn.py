"""de Bruijn sequences as the omega = m, n = 2^m case of the small-omega generator."""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .bitseq import BitSeq, cyclic_runs
from .counter import OpCounter
from .gen_small import Generation, ShiftClass, classes_from_witnesses
from .structure import BForm, rotation_hits_values


@dataclass(frozen=True)
class RunSpec:
    """Cyclic run counts of an order-m de Bruijn sequence (same for both symbols)."""

    m: int
    runs: dict[int, int]

    @classmethod
    def of(cls, m: int) -> "RunSpec":
        if m < 2:
            raise ValueError(f"run counts need m >= 2, got {m}")
        runs = {i: 1 << (m - 2 - i) for i in range(1, m - 1)}
        runs[m] = 1
        return cls(m, runs)

    @property
    def length(self) -> int:
        return 2 * sum(k * v for k, v in self.runs.items())

    @property
    def weight(self) -> int:
        return self.length // 2

    def sorted_lengths(self) -> list[int]:
        return sorted(itertools.chain.from_iterable([k] * v for k, v in self.runs.items()))


def check_run_properties(s: BitSeq, m: int) -> bool:
    spec = RunSpec.of(m)
    if s.n != 1 << m:
        raise ValueError(f"length {s.n} is not 2^{m}")
    hist = cyclic_runs(s)
    return hist.zero_runs == spec.runs and hist.one_runs == spec.runs


def _check_m(m: int) -> None:
    if m < 3:
        raise ValueError(f"need m >= 3, got {m}")


def _scan_block(m: int, first: int | None) -> list[int]:
    """Run-filtered candidates; ``first`` pins the lowest middle position that holds a 1."""
    n = 1 << m
    mid = n - m - 2
    weight = (1 << (m - 1)) - 2
    # middle position p sits at s-index m+1+p
    bitval = [1 << (n - 1 - (m + 1 + p)) for p in range(mid)]
    base = (1 << (n - 1 - m)) | 1
    expected = RunSpec.of(m).sorted_lengths()
    fmt = f"0{n}b"
    if first is None:
        combos = itertools.combinations(bitval, weight)
    else:
        base |= bitval[first]
        combos = itertools.combinations(bitval[first + 1:], weight - 1)
    out = []
    for combo in combos:
        v = base + sum(combo)
        text = format(v, fmt)
        # text starts with 0 and ends with 1, so the linear runs are the cyclic runs
        ones = sorted(len(r) for r in text.split("0") if r)
        if ones != expected:
            continue
        zeros = sorted(len(r) for r in text.split("1") if r)
        if zeros == expected:
            out.append(v)
    return out


def b0_tilde_values(m: int, workers: int = 1) -> list[int]:
    _check_m(m)
    if workers <= 1:
        return sorted(_scan_block(m, None))
    mid = (1 << m) - m - 2
    weight = (1 << (m - 1)) - 2
    shards = range(mid - weight + 1)
    out = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_scan_block, itertools.repeat(m), shards):
            out.extend(part)
    return sorted(out)


def gen_B0_tilde(m: int, workers: int = 1) -> set[BitSeq]:
    n = 1 << m
    return {BitSeq(n, v) for v in b0_tilde_values(m, workers)}


def s_debruijn_values(m: int, workers: int = 1, counter: OpCounter | None = None) -> list[int]:
    n = 1 << m
    out = []
    for v in b0_tilde_values(m, workers):
        if counter is not None:
            counter.add()
        if not rotation_hits_values(v, n, m + 1):
            out.append(v)
    return out


def debruijn_generation(m: int, workers: int = 1) -> Generation:
    _check_m(m)
    n = 1 << m
    counter = OpCounter()
    witnesses = s_debruijn_values(m, workers, counter)
    form = BForm.of(m, 1)
    classes = classes_from_witnesses(n, m, witnesses, lambda w: (form, 0))
    return Generation(n, m, "debruijn", [BitSeq(n, v) for v in witnesses], classes, counter.count)


def gen_debruijn(m: int, workers: int = 1) -> list[ShiftClass]:
    return debruijn_generation(m, workers).classes


def is_debruijn(s: BitSeq, m: int) -> bool:
    """Span test: every cyclic m-window occurs exactly once."""
    if s.n != 1 << m:
        return False
    n, v = s.n, s.value
    doubled = (v << m) | (v >> (n - m))
    mask = (1 << m) - 1
    seen = {(doubled >> (n - i)) & mask for i in range(n)}
    return len(seen) == n


@dataclass(frozen=True)
class BTildeCount:
    m: int
    enumerated: int
    printed_formula: Fraction
    corrected_formula: Fraction

    @property
    def printed_agrees(self) -> bool:
        return self.printed_formula == self.enumerated

    @property
    def corrected_agrees(self) -> bool:
        return self.corrected_formula == self.enumerated


def multinomial(total: int, parts: list[int]) -> int:
    if sum(parts) != total:
        raise ValueError(f"parts {parts} do not sum to {total}")
    out = math.factorial(total)
    for p in parts:
        out //= math.factorial(p)
    return out


def count_B0_tilde(m: int, workers: int = 1) -> BTildeCount:
    """Enumerated size of the prefiltered set next to both closed-form scalings."""
    _check_m(m)
    parts = [1 << (m - 2 - i) for i in range(1, m - 1)] + [1]
    sq = multinomial(1 << (m - 2), parts) ** 2
    enumerated = len(b0_tilde_values(m, workers))
    return BTildeCount(
        m,
        enumerated,
        Fraction(sq, 1 << (2 * m - 2)),
        Fraction(sq, 1 << (m - 2)),
    )
