"""Representatives R(n, ceil(n/2)) and the classes P(n, omega) for omega >= n/2."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .bitseq import BitSeq, canonical_value, rotl, value_is_aperiodic
from .counter import OpCounter
from .gen_small import Generation, ShiftClass
from .structure import BForm, add_of_text, decompose


@dataclass(frozen=True)
class EquivCandidate:
    """A partner R^h(s) in B(n, c, d') found from the run of s_i = s_{i+d'}."""

    d_prime: int
    g: int
    r1: int
    r2: int
    c_prime: int
    h: int
    delta: int
    partner: BitSeq


class RepEntry(NamedTuple):
    seq: BitSeq
    form: BForm
    add: int


def _head(pattern: str, c: int, d: int) -> str:
    head = (pattern * (c // d + 2))[: c + d - 1]
    return head + ("1" if pattern[(c + d - 1) % d] == "0" else "0")


def _in_partner_window(n: int, c: int, d: int, dp: int, h: int) -> bool:
    return n - (c + d) + dp <= h < c + dp or n - (c + d) < h <= c + dp - d


def _run_bounds(text: str, dp: int, g: int) -> tuple[int, int]:
    """Stretch s_i = s_{i+d'} (indices mod n) down from g and up from n-d'."""
    n = len(text)
    r1 = g
    while r1 > g - n and text[(r1 - 1) % n] == text[(r1 - 1 + dp) % n]:
        r1 -= 1
    r2 = n - dp
    while r2 < r1 + n and text[r2 % n] == text[(r2 + dp) % n]:
        r2 += 1
    return r1, r2


def _candidate(text: str, c: int, d: int, dp: int, g: int) -> EquivCandidate | None:
    n = len(text)
    r1, r2 = _run_bounds(text, dp, g)
    c_prime = r2 - r1 + 1
    if c_prime < c:
        return None
    h = c + (n - r2 - 1)
    if not _in_partner_window(n, c, d, dp, h):
        raise AssertionError(f"h={h} outside the admissible window for {text}, d={d}, d'={dp}")
    v = rotl(int(text, 2), n, -h)
    return EquivCandidate(dp, g, r1, r2, c_prime, h, c_prime - c, BitSeq(n, v))


def equiv_candidates(s: BitSeq, form: BForm) -> list[EquivCandidate]:
    n, c, d = s.n, form.c, form.d
    if c != (n + 1) // 2 or form not in decompose(s):
        raise ValueError(f"{s} is not in B({n}, {(n + 1) // 2}, {d})")
    text = str(s)
    out = []
    for dp in range(1, n - c + 1):
        if d < n - c:
            window, g = text[c + d - dp:c + d], c + d - dp
        else:
            window, g = text[n - dp:], 2 * d - dp - 1
        if not value_is_aperiodic(int(window, 2), dp):
            continue
        if any(text[i] != text[i + dp] for i in range(max(g, 0), n - dp)):
            continue
        cand = _candidate(text, c, d, dp, g)
        if cand is not None:
            out.append(cand)
    return out


def _check_n(n: int) -> None:
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")


def gen_R(n: int, counter: OpCounter | None = None) -> list[RepEntry]:
    """One maximal-add representative per shift class of B(n, ceil(n/2))."""
    _check_n(n)
    c = (n + 1) // 2
    excluded: set[int] = set()  # U: concrete sequences known not to be representatives
    kept: list[tuple[int, int, int]] = []  # (value, d, add)

    def settle(v: int, text: str, d: int, cand: EquivCandidate) -> bool:
        """Record the loser of (s, R^h(s)); True when s itself loses."""
        t = add_of_text(text, d)
        w = cand.partner.value
        if w == v:
            return False
        if t < cand.delta or (t == cand.delta and v > w):
            return True
        excluded.add(w)
        return False

    for d in range(1, n - c + 1):
        tail_len = n - c - d
        for a in range(1 << d):
            if not value_is_aperiodic(a, d):
                continue
            head = _head(format(a, f"0{d}b"), c, d)
            if tail_len:
                banned: set[str] = set()  # V: tails that lose to a partner
                for dp in range(1, n - c + 1):
                    g = c + d - dp
                    if not value_is_aperiodic(int(head[g:], 2), dp):
                        continue
                    text = head
                    for i in range(c + d, n):
                        text += text[i - dp]
                    v = int(text, 2)
                    if counter is not None:
                        counter.add()
                    if v in excluded:
                        continue
                    cand = _candidate(text, c, d, dp, g)
                    if cand is not None and settle(v, text, d, cand):
                        banned.add(text[c + d:])
                for x in range(1 << tail_len):
                    tail = format(x, f"0{tail_len}b")
                    if counter is not None:
                        counter.add()
                    if tail not in banned:
                        text = head + tail
                        kept.append((int(text, 2), d, add_of_text(text, d)))
            else:
                v = int(head, 2)
                if counter is not None:
                    counter.add()
                if v in excluded:
                    continue
                kept.append((v, d, add_of_text(head, d)))
                for dp in range(1, n - c + 1):
                    g = 2 * d - dp - 1
                    if not value_is_aperiodic(int(head[n - dp:], 2), dp):
                        continue
                    if any(head[i] != head[i + dp] for i in range(max(g, 0), n - dp)):
                        continue
                    cand = _candidate(head, c, d, dp, g)
                    if cand is not None and settle(v, head, d, cand):
                        excluded.add(v)

    # Final pass: survivors sharing a class are equal-add ties (the d = n/2 boundary
    # keeps both halves); keep the least pattern.
    best: dict[int, tuple[int, int, int]] = {}
    for v, d, t in kept:
        if v in excluded:
            continue
        key = canonical_value(v, n)
        if key in best:
            if best[key][2] != t:
                raise AssertionError(f"unresolved pair in class {key:0{n}b}: adds {best[key][2]} and {t}")
            if v > best[key][0]:
                continue
        best[key] = (v, d, t)
    out = [RepEntry(BitSeq(n, v), BForm.of(c, d), t) for v, d, t in best.values()]
    return sorted(out)


def _check_large_range(n: int, omega: int) -> None:
    _check_n(n)
    if not (n + 1) // 2 <= omega <= n - 1:
        raise ValueError(f"omega={omega} outside [{(n + 1) // 2}, {n - 1}] for n={n}")


def classes_from_R(n: int, omega: int, reps: list[RepEntry]) -> list[ShiftClass]:
    t = omega - (n + 1) // 2
    out = [
        ShiftClass(BitSeq(n, canonical_value(e.seq.value, n)), omega, e.seq, e.form, e.add)
        for e in reps
        if e.add == t
    ]
    return sorted(out)


def large_generation(n: int, omega: int, reps: list[RepEntry] | None = None) -> Generation:
    _check_large_range(n, omega)
    counter = OpCounter()
    if reps is None:
        reps = gen_R(n, counter)
    classes = classes_from_R(n, omega, reps)
    return Generation(n, omega, "large", [k.witness for k in classes], classes, counter.count)


def gen_P_large(n: int, omega: int) -> list[ShiftClass]:
    return large_generation(n, omega).classes
