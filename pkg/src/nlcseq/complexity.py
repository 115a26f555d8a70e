"""Nonlinear (maximum-order) complexity of finite and periodic sequences."""

from __future__ import annotations

from dataclasses import dataclass

from .bitseq import BitSeq, is_aperiodic, least_period, rotate_left, rotate_right
from .counter import OpCounter


def nlc_text(text: str, counter: OpCounter | None = None) -> int:
    """Reference engine on a '0'/'1' string.

    A k-window with two different successors exists iff the prefix positions
    carry more distinct (k+1)-windows than k-windows. The property is closed
    under shrinking k, so the first k where it fails is the answer.
    """
    n = len(text)
    k = 0
    while k <= n - 2:
        m = n - k
        if counter is not None:
            counter.add(2 * m)
        short = {text[i:i + k] for i in range(m)}
        long_ = {text[i:i + k + 1] for i in range(m)}
        if len(long_) == len(short):
            return k
        k += 1
    return k


def nlc_finite(s: BitSeq) -> int:
    return nlc_text(str(s))


class _SuffixAutomaton:
    __slots__ = ("length", "link", "next")

    def __init__(self, text: str):
        self.length = [0]
        self.link = [-1]
        self.next: list[dict[str, int]] = [{}]
        last = 0
        for ch in text:
            cur = len(self.length)
            self.length.append(self.length[last] + 1)
            self.link.append(-1)
            self.next.append({})
            p = last
            while p != -1 and ch not in self.next[p]:
                self.next[p][ch] = cur
                p = self.link[p]
            if p == -1:
                self.link[cur] = 0
            else:
                q = self.next[p][ch]
                if self.length[p] + 1 == self.length[q]:
                    self.link[cur] = q
                else:
                    clone = len(self.length)
                    self.length.append(self.length[p] + 1)
                    self.link.append(self.link[q])
                    self.next.append(dict(self.next[q]))
                    while p != -1 and self.next[p].get(ch) == q:
                        self.next[p][ch] = clone
                        p = self.link[p]
                    self.link[q] = clone
                    self.link[cur] = clone
            last = cur


def nlc_text_fast(text: str) -> int:
    # Every substring in a state that branches on both symbols has two
    # different successors; the longest of them is the state's length.
    sam = _SuffixAutomaton(text)
    best = 0
    for length, nxt in zip(sam.length, sam.next):
        if len(nxt) == 2 and length + 1 > best:
            best = length + 1
    return best


def nlc_finite_fast(s: BitSeq) -> int:
    return nlc_text_fast(str(s))


def nlc_periodic(s: BitSeq, fast: bool = False) -> int:
    """Complexity of the infinite sequence s s s ..., computed on one doubling."""
    p = least_period(s)
    text = str(s)[:p]
    doubled = text + text
    return nlc_text_fast(doubled) if fast else nlc_text(doubled)


@dataclass(frozen=True, order=True)
class CompanionPair:
    start: int
    spacing: int
    order: int


def _window(text: str, i: int, k: int) -> str:
    n = len(text)
    return "".join(text[(i + j) % n] for j in range(k))


def find_companion_pairs(s: BitSeq) -> list[CompanionPair]:
    """All order-omega companion pairs of the periodic extension of s.

    Spacing is normalised to d <= n // 2 by swapping the two states when
    needed; at d == n/2 both orientations are valid and both are reported.
    """
    if not is_aperiodic(s):
        raise ValueError(f"{s} is a periodic repetition; companion pairs need an aperiodic period")
    n = s.n
    omega = nlc_periodic(s)
    text = str(s)
    windows = [_window(text, i, omega) for i in range(n)]
    pairs = []
    for i in range(n):
        for d in range(1, n // 2 + 1):
            a, b = windows[i], windows[(i + d) % n]
            if a[:-1] == b[:-1] and a[-1] != b[-1]:
                pairs.append(CompanionPair(i, d, omega))
    return sorted(pairs)


@dataclass(frozen=True)
class ShiftProfile:
    direction: str
    values: tuple[int, ...]
    # per rotation: tuple of (BForm, add) pairs, or None if the rotation is in no B(n, c, d)
    memberships: tuple


def shift_profile(s: BitSeq, direction: str = "left") -> ShiftProfile:
    from .structure import add_count, decompose

    if direction not in ("left", "right"):
        raise ValueError(f"direction must be 'left' or 'right', got {direction!r}")
    rot = rotate_left if direction == "left" else rotate_right
    values, members = [], []
    for k in range(s.n):
        r = rot(s, k)
        values.append(nlc_finite(r))
        forms = decompose(r)
        members.append(tuple((f, add_count(r, f)) for f in forms) or None)
    return ShiftProfile(direction, tuple(values), tuple(members))
