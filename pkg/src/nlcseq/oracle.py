"""Exhaustive ground truth over all n-periodic binary sequences, plus theorem checks."""

from __future__ import annotations

from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .bitseq import BitSeq, canonical_value, proper_divisors, rotl
from .complexity import nlc_finite, nlc_periodic, nlc_text
from .counter import OpCounter
from .gen_large import gen_P_large, gen_R
from .gen_small import ShiftClass, ceil_log2, gen_B, gen_P_small
from .structure import add_of_text, decompose_text, equivalence_set

MAX_ORACLE_N = 24
MAX_THEOREM_N = 16
MAX_GENERATION_N = 14


def lyndon_words(n: int):
    """Aperiodic necklaces of length n as packed ints, in increasing order (FKM)."""
    a = [0] * (n + 1)
    p = 1
    while True:
        if p == n:
            v = 0
            for i in range(1, n + 1):
                v = (v << 1) | a[i]
            yield v
        # next prenecklace
        t = n
        while t > 0 and a[t] == 1:
            t -= 1
        if t == 0:
            return
        a[t] = 1
        for i in range(t + 1, n + 1):
            a[i] = a[i - t]
        p = t


def _mobius(k: int) -> int:
    out, m, q = 1, k, 2
    while q * q <= m:
        if m % q == 0:
            m //= q
            if m % q == 0:
                return 0
            out = -out
        q += 1
    return -out if m > 1 else out


def lyndon_count(n: int) -> int:
    """Number of aperiodic binary necklaces of length n, by Moebius inversion."""
    divs = (*proper_divisors(n), n)
    return sum(_mobius(n // d) * (1 << d) for d in divs) // n


def _classify(n: int, values: list[int]) -> tuple[list[tuple[int, int]], int]:
    counter = OpCounter()
    out = []
    for v in values:
        text = format(v, f"0{n}b")
        out.append((v, nlc_text(text + text, counter)))
    return out, counter.count


@dataclass
class OracleCatalog:
    n: int
    classes: dict[int, list[ShiftClass]]
    ops: int

    @property
    def totals(self) -> dict[int, int]:
        # every catalogued class is aperiodic, hence has n rotations
        return {w: self.n * len(cs) for w, cs in self.classes.items()}

    def class_count(self) -> int:
        return sum(len(cs) for cs in self.classes.values())


def _check_guard(n: int, limit: int, what: str) -> None:
    if not 1 <= n <= limit:
        raise ValueError(f"{what} needs 1 <= n <= {limit}, got n={n}")


def build_catalog(n: int, workers: int = 1, limit: int = MAX_ORACLE_N) -> OracleCatalog:
    _check_guard(n, limit, "oracle")
    words = list(lyndon_words(n))
    if workers > 1 and len(words) > 1000:
        size = -(-len(words) // (4 * workers))
        chunks = [words[i:i + size] for i in range(0, len(words), size)]
        rows, ops = [], 0
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part, k in pool.map(_classify, [n] * len(chunks), chunks):
                rows.extend(part)
                ops += k
    else:
        rows, ops = _classify(n, words)
    grouped: dict[int, list[ShiftClass]] = defaultdict(list)
    for v, w in rows:
        s = BitSeq(n, v)
        grouped[w].append(ShiftClass(s, w, s))
    classes = {w: sorted(cs) for w, cs in sorted(grouped.items())}
    return OracleCatalog(n, classes, ops)


@lru_cache(maxsize=None)
def catalog(n: int) -> OracleCatalog:
    return build_catalog(n)


def oracle_P(n: int, omega: int) -> list[ShiftClass]:
    _check_guard(n, MAX_ORACLE_N, "oracle")
    return list(catalog(n).classes.get(omega, []))


def _canon_set(n: int, classes) -> set[int]:
    return {k.canonical.value for k in classes}


def verify_theorem1(n: int, c: int) -> bool:
    """Rotations of B(n, c) cover exactly the classes with complexity >= c."""
    _check_guard(n, MAX_THEOREM_N, "theorem check")
    if not (ceil_log2(n) <= c <= n // 2 + 1 and c < n):
        raise ValueError(f"c={c} outside [{ceil_log2(n)}, {min(n // 2 + 1, n - 1)}] for n={n}")
    cat = catalog(n)
    expected = {k.canonical.value for w, cs in cat.classes.items() if w >= c for k in cs}
    got = {canonical_value(s.value, n) for s in gen_B(n, c)}
    return got == expected


@dataclass
class Theorem2Report:
    n: int
    checked: int
    by_add: dict[int, int]
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def verify_theorem2(n: int) -> Theorem2Report:
    _check_guard(n, MAX_THEOREM_N, "theorem check")
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    c = (n + 1) // 2
    report = Theorem2Report(n, 0, {})
    by_add: Counter = Counter()

    def check(s: BitSeq, t: int) -> None:
        report.checked += 1
        got, want = nlc_periodic(s), nlc_finite(s) + t
        if got != want:
            report.violations.append(f"{s}: periodic {got}, finite+add {want}")

    for e in gen_R(n):
        by_add[e.add] += 1
        check(e.seq, e.add)
    seen = set()
    for s in sorted(gen_B(n, c)):
        key = canonical_value(s.value, n)
        if key in seen:
            continue
        seen.add(key)
        entries = equivalence_set(s, c)
        best = max(e.add for e in entries)
        for e in entries:
            if e.add == best:
                check(e.seq, e.add)
    report.by_add = dict(sorted(by_add.items()))
    return report


@dataclass(frozen=True)
class OpenProblemFinding:
    n: int
    c: int
    d: int
    add: int
    seq: str
    max_nlc: int


@dataclass
class OpenProblemScan:
    max_n: int
    scanned: int
    findings: list[OpenProblemFinding]
    # cases where even the n - d lower bound fails
    bound_failures: list[OpenProblemFinding]


def scan_open_problem(max_n: int, min_n: int = 4) -> OpenProblemScan:
    """Representatives with add > n-c-d whose largest rotated complexity is not n - d."""
    _check_guard(max_n, MAX_ORACLE_N, "open-problem scan")
    findings, failures, scanned = [], [], 0
    for n in range(min_n, max_n + 1):
        for c in range(n // 2, n):
            members = defaultdict(list)
            for s in gen_B(n, c):
                text = str(s)
                for f in decompose_text(text):
                    if f.c == c:
                        members[canonical_value(s.value, n)].append((text, f.d, add_of_text(text, f.d)))
            for key, rows in members.items():
                best = max(t for _, _, t in rows)
                cases = [r for r in rows if r[2] == best and r[2] > n - c - r[1]]
                if not cases:
                    continue
                top = max(nlc_text(format(rotl(key, n, k), f"0{n}b")) for k in range(n))
                for text, d, t in cases:
                    scanned += 1
                    row = OpenProblemFinding(n, c, d, t, text, top)
                    if top != n - d:
                        findings.append(row)
                    if top < n - d:
                        failures.append(row)
    return OpenProblemScan(max_n, scanned, findings, failures)


@dataclass(frozen=True)
class OmegaCheck:
    omega: int
    method: str
    generated: int
    expected: int
    passed: bool


@dataclass
class GenerationReport:
    n: int
    checks: list[OmegaCheck]

    @property
    def passed(self) -> bool:
        return all(k.passed for k in self.checks)


def verify_generation(n: int) -> GenerationReport:
    _check_guard(n, MAX_GENERATION_N, "generation check")
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    checks = []
    for omega in range(ceil_log2(n), n):
        truth = _canon_set(n, oracle_P(n, omega))
        runs = []
        if omega <= n // 2:
            runs.append(("small", gen_P_small(n, omega)))
        if omega >= (n + 1) // 2:
            runs.append(("large", gen_P_large(n, omega)))
        for method, classes in runs:
            got = _canon_set(n, classes)
            checks.append(OmegaCheck(omega, method, len(got), len(truth), got == truth and len(got) == len(classes)))
    return GenerationReport(n, checks)
