"""B(n, c, d) decompositions, added terms, equivalence sets and shift laws."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .bitseq import BitSeq, rotate_left, rotate_right, rotl, value_is_aperiodic
from .complexity import nlc_finite


@dataclass(frozen=True, order=True)
class BForm:
    c: int
    d: int
    q: int
    r: int

    @classmethod
    def of(cls, c: int, d: int) -> "BForm":
        q, r = divmod(c + d - 1, d)
        return cls(c, d, q, r)


def _first_mismatch(text: str, d: int) -> int | None:
    for i in range(len(text) - d):
        if text[i] != text[i + d]:
            return i
    return None


def decompose_text(text: str) -> list[BForm]:
    n = len(text)
    if not value_is_aperiodic(int(text, 2), n):
        return []
    forms = []
    for d in range(1, n // 2 + 1):
        if not value_is_aperiodic(int(text[:d], 2), d):
            continue
        i0 = _first_mismatch(text, d)
        if i0 is None:
            continue
        c = i0 + 1
        if c < n and d <= n - c:
            forms.append(BForm.of(c, d))
    return forms


def decompose(s: BitSeq) -> list[BForm]:
    """Every (c, d) with s in B(n, c, d), ordered by spacing."""
    return decompose_text(str(s))


def add_of_text(text: str, d: int) -> int:
    n = len(text)
    t = 0
    while t < n and text[n - 1 - t] == text[(d - 1 - t) % d]:
        t += 1
    return t


def add_count(s: BitSeq, form: BForm) -> int:
    """Number of trailing symbols that continue the spacing-d pattern into s_{d-1}."""
    if form not in decompose(s):
        raise ValueError(f"{s} is not in B({s.n}, {form.c}, {form.d})")
    return add_of_text(str(s), form.d)


def forms_with_c(s: BitSeq, c: int) -> list[BForm]:
    return [f for f in decompose(s) if f.c == c]


class EquivEntry(NamedTuple):
    shift: int
    form: BForm
    add: int
    seq: BitSeq


def equivalence_set(s: BitSeq, c: int) -> list[EquivEntry]:
    """Right rotations R^k(s) that stay in B(n, c), with their forms and added terms."""
    if not forms_with_c(s, c):
        raise ValueError(f"{s} is not in B({s.n}, {c})")
    out = []
    for k in range(s.n):
        r = rotate_right(s, k)
        text = str(r)
        for f in decompose_text(text):
            if f.c == c:
                out.append(EquivEntry(k, f, add_of_text(text, f.d), r))
    return out


def representative(s: BitSeq, c: int) -> tuple[BitSeq, int]:
    entries = equivalence_set(s, c)
    best = max(e.add for e in entries)
    chosen = min((e for e in entries if e.add == best), key=lambda e: e.shift)
    return chosen.seq, chosen.add


def _require_large_form(s: BitSeq, form: BForm) -> None:
    if form not in decompose(s):
        raise ValueError(f"{s} is not in B({s.n}, {form.c}, {form.d})")
    if form.c < s.n // 2:
        raise ValueError(f"c = {form.c} below floor(n/2) = {s.n // 2}")


@dataclass(frozen=True)
class ShiftLawReport:
    passed: bool
    checked: int
    counterexample: str | None = None


def check_shift_laws(s: BitSeq, form: BForm) -> ShiftLawReport:
    """Check the left-shift closure and the right-shift growth laws for one sequence."""
    _require_large_form(s, form)
    n, c, d = s.n, form.c, form.d
    half = n // 2
    t = add_count(s, form)
    checked = 0

    def fail(msg):
        return ShiftLawReport(False, checked, msg)

    for j in range(1, c):
        a = rotate_left(s, j)
        checked += 1
        if BForm.of(c - j, d) not in decompose(a):
            return fail(f"L^{j}({s}) = {a} not in B({n},{c - j},{d})")
        if c - j >= half and nlc_finite(a) != c - j:
            return fail(f"nlc(L^{j}({s})) = {nlc_finite(a)}, expected {c - j}")
    for k in range(1, min(t, n - c - d) + 1):
        a = rotate_right(s, k)
        checked += 1
        if BForm.of(c + k, d) not in decompose(a):
            return fail(f"R^{k}({s}) = {a} not in B({n},{c + k},{d})")
        if nlc_finite(a) != c + k:
            return fail(f"nlc(R^{k}({s})) = {nlc_finite(a)}, expected {c + k}")
    for k in range(t + 1, n - c - d + 1):
        a = rotate_right(s, k)
        checked += 1
        if nlc_finite(a) != c + t:
            return fail(f"nlc(R^{k}({s})) = {nlc_finite(a)}, expected {c + t}")
    return ShiftLawReport(True, checked)


@dataclass(frozen=True)
class RotatedMax:
    value: int
    case: str  # "tight" when t <= n-c-d, otherwise "lower-bound"
    bound_holds: bool
    equals_n_minus_d: bool | None


def is_representative(s: BitSeq, form: BForm) -> bool:
    entries = equivalence_set(s, form.c)
    return add_count(s, form) == max(e.add for e in entries)


def max_rotated_nlc(s: BitSeq, form: BForm, t: int | None = None) -> RotatedMax:
    _require_large_form(s, form)
    if t is None:
        t = add_count(s, form)
    elif t != add_count(s, form):
        raise ValueError(f"add-count {t} does not match {s}")
    if not is_representative(s, form):
        raise ValueError(f"{s} is not a representative of its equivalence set")
    n, c, d = s.n, form.c, form.d
    best = max(nlc_finite(rotate_right(s, k)) for k in range(n))
    if t <= n - c - d:
        return RotatedMax(best, "tight", best == c + t, None)
    return RotatedMax(best, "lower-bound", best >= n - d, best == n - d)


def in_B(s: BitSeq, c: int) -> bool:
    return any(f.c == c for f in decompose(s))



def rotation_hits_values(value: int, n: int, c: int) -> set[int]:
    """All k with L^k(s) in B(n, c), for the packed aperiodic sequence ``value``.

    Works spacing by spacing without materialising B(n, c): with x = s xor L^d(s),
    L^k(s) lies in B(n, c, d) iff x is 0 on k..k+c-2 and 1 at k+c-1 (cyclically)
    and the d-block at k is aperiodic.
    """
    mask = (1 << n) - 1
    hits = set()
    for d in range(1, min(n - c, n // 2) + 1):
        x = value ^ rotl(value, n, d)
        zeros = ~x & mask
        m = rotl(x, n, c - 1)
        for j in range(c - 1):
            m &= rotl(zeros, n, j)
            if not m:
                break
        while m:
            top = m.bit_length() - 1
            m ^= 1 << top
            k = n - 1 - top
            block = rotl(value, n, k) >> (n - d)
            if value_is_aperiodic(block, d):
                hits.add(k)
    return hits


def rotation_hits(s: BitSeq, c: int) -> set[int]:
    return rotation_hits_values(s.value, s.n, c)
