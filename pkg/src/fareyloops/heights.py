"""Height spectra under repeated prime scaling, and the batch inequality scans.

Everything is exact integer/rational arithmetic: floor(2*sqrt(n)) is
isqrt(4n), heights of quadratic irrationals come from the integral expansion
recurrence, and rationals carry infinite height under the oo-tail convention.
Lower bounds on the multiplicative approximation constant are deliberately
not reported: a finite scan cannot certify an infimum from below.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence, Union

from .contfrac import (
    CFExpansion,
    cf_from_rational,
    cf_value,
    convergent_pair,
    convergents,
    height,
    multiply_cf,
    semiconvergent,
    twin_of,
)
from .cutting import crossed_edges, fan_chain, loop_verdict_geometric
from .loops import NOTLOOP, is_infinite_loop, loop_example
from .rationals import Rational
from .sampling import random_finite_cf, random_periodic_cf, random_unit_rational
from .surds import QuadSurd


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def floor_2sqrt(n: int) -> int:
    """floor(2*sqrt(n)) without floating point."""
    return math.isqrt(4 * n)


def surd_height(s: QuadSurd) -> int:
    """Largest partial quotient (leading term excluded) of a quadratic irrational.

    Runs the integral expansion recurrence until the state repeats; the
    supremum is attained on the preperiod plus one period.
    """
    if not s.is_positive():
        raise ValueError("height requires a positive value")
    P, Q, D = s.P, s.Q, s.D
    seen: dict[tuple[int, int], int] = {}
    entries: list[int] = []
    while (P, Q) not in seen:
        seen[(P, Q)] = len(entries)
        a = QuadSurd(P, Q, D).floor()
        entries.append(a)
        P = a * Q - P
        Q = (D - P * P) // Q
    # a purely periodic orbit repeats its leading term at every later index
    if seen[(P, Q)] == 0:
        return max(entries)
    return max(entries[1:])


def _scaled_height(e: CFExpansion, n: int) -> Union[int, float]:
    """Height of n * value(e), staying in the value domain for surds."""
    if e.inf_tail:
        return math.inf
    if e.is_finite:
        return height(multiply_cf(e, n))
    return surd_height(cf_value(e).scaled(n))


@dataclass(frozen=True)
class HeightSpectrum:
    alpha: CFExpansion
    p: int
    entries: tuple[tuple[int, Union[int, float]], ...]

    def bound(self) -> Rational:
        """min over recorded levels of 1/B; an upper bound at any truncation."""
        largest = max(b for _, b in self.entries)
        if largest == math.inf:
            return Rational(0, 1)
        return Rational(1, largest)


def height_spectrum(e: CFExpansion, p: int, L: int) -> HeightSpectrum:
    """Exact heights B(p^l * alpha) for l = 0..L."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if L < 0:
        raise ValueError("L must be >= 0")
    entries: list[tuple[int, Union[int, float]]] = [(0, height(e))]
    if e.inf_tail:
        entries.extend((ell, math.inf) for ell in range(1, L + 1))
    elif e.is_finite:
        entries.extend((ell, height(multiply_cf(e, p**ell))) for ell in range(1, L + 1))
    else:
        s = cf_value(e)
        entries.extend((ell, surd_height(s.scaled(p**ell))) for ell in range(1, L + 1))
    return HeightSpectrum(e, p, tuple(entries))


def mp_upper_bound(e: CFExpansion, p: int, L: int) -> Rational:
    """min over l <= L of 1/B(p^l alpha): an upper bound for the p-adic
    approximation constant at any L, nonincreasing in L.

    Rational input returns exactly 0 (its own denominators already realise
    the infimum); the value is then a statement, not a scan bound.
    """
    if e.is_finite:
        return Rational(0, 1)
    return height_spectrum(e, p, L).bound()


def mp_partial_lower_min(e: CFExpansion, p: int, L: int) -> Rational:
    """min over l <= L of 1/(B(p^l alpha)+2).  NOT a bound: the true lower
    bound is an infimum over all l, which no finite scan can certify."""
    if e.is_finite:
        return Rational(0, 1)
    worst = max(b for _, b in height_spectrum(e, p, L).entries)
    return Rational(1, worst + 2)


# ---------------------------------------------------------------------------
# check records and reports


@dataclass(frozen=True)
class CheckRecord:
    check: str
    params: tuple[tuple[str, object], ...]
    applicable: bool
    passed: bool
    witness: str = "-"

    def line(self) -> str:
        kv = " ".join(f"{k}={v}" for k, v in self.params)
        flag = 1 if self.passed else 0
        if not self.applicable:
            return f"check={self.check} {kv} pass={flag} skipped=1 witness={self.witness}"
        return f"check={self.check} {kv} pass={flag} witness={self.witness}"


@dataclass
class ScanReport:
    check: str
    params: dict
    total: int = 0
    violations: int = 0
    skipped: int = 0
    first_violation: Optional[CheckRecord] = None
    elapsed: float = 0.0
    records: list = field(default_factory=list)

    def add(self, record: CheckRecord, keep: bool = False):
        self.total += 1
        if not record.applicable:
            self.skipped += 1
        elif not record.passed:
            self.violations += 1
            if self.first_violation is None:
                self.first_violation = record
        if keep:
            self.records.append(record)

    @property
    def passed(self) -> bool:
        return self.violations == 0

    def summary(self) -> str:
        kv = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return (
            f"check={self.check} {kv} cases={self.total} skipped={self.skipped} "
            f"violations={self.violations} pass={1 if self.passed else 0} "
            f"elapsed={self.elapsed:.2f}s"
        )


# ---------------------------------------------------------------------------
# individual checks


def check_noloop_bound(e: CFExpansion, n: int) -> CheckRecord:
    """For exact non-loops mod n: max{B(a), B(n*a)} >= floor(2*sqrt(n)) - 1."""
    params = (("n", n),)
    verdict = is_infinite_loop(e, n)
    if verdict.kind != NOTLOOP or e.is_finite:
        return CheckRecord("noloop", params, False, True, f"verdict={verdict.kind}")
    b_alpha = height(e)
    b_scaled = _scaled_height(e, n)
    threshold = floor_2sqrt(n) - 1
    ok = max(b_alpha, b_scaled) >= threshold
    witness = "-" if ok else f"B={b_alpha} Bn={b_scaled} thr={threshold} e={e}"
    return CheckRecord("noloop", params, True, ok, witness)


def check_infl(e: CFExpansion, p: int, m: int) -> CheckRecord:
    """For non-loops mod p^m: min{1/B(a), 1/B(p^m a)} <= 1/(floor(2*sqrt(p^m))-1)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    n = p**m
    params = (("p", p), ("m", m))
    verdict = is_infinite_loop(e, n)
    if verdict.kind != NOTLOOP or e.is_finite:
        return CheckRecord("infl", params, False, True, f"verdict={verdict.kind}")
    b_alpha = height(e)
    b_scaled = _scaled_height(e, n)
    threshold = floor_2sqrt(n) - 1
    if threshold <= 0:
        return CheckRecord("infl", params, True, True, "threshold<=0")
    ok = min(Fraction(1, b_alpha), Fraction(1, b_scaled)) <= Fraction(1, threshold)
    witness = "-" if ok else f"B={b_alpha} Bn={b_scaled} thr={threshold} e={e}"
    return CheckRecord("infl", params, True, ok, witness)


def check_pro2(e: CFExpansion, n: int, k: int) -> CheckRecord:
    """Convergent denominator q_k = n*q' (q' > 1) forces B(n*a) >= n*a_{k+1}
    and p_k/q' among the convergents of n*a."""
    params = (("n", n), ("k", k))
    if not e.is_finite:
        raise ValueError("this check runs on finite expansions")
    if k < 0 or k >= e.last_index:
        return CheckRecord("pro2", params, False, True, "k out of fan range")
    p_k, q_k = convergent_pair(e, k)
    if q_k % n != 0 or q_k // n <= 1:
        return CheckRecord("pro2", params, False, True, f"q_k={q_k} not planted")
    q_prime = q_k // n
    stripped = CFExpansion(e.a0, e.body, None, False)
    scaled = multiply_cf(stripped, n)
    b_scaled = height(scaled)
    bound = n * e.entry(k + 1)
    target = Rational(p_k, q_prime)
    pool = set(convergents(scaled)) | set(convergents(twin_of(scaled)))
    ok = b_scaled >= bound and target in pool
    witness = "-" if ok else f"B={b_scaled} bound={bound} target={target} e={e}"
    return CheckRecord("pro2", params, True, ok, witness)


def check_count_height(
    e: CFExpansion, p: int, m: int, L: int, extension_factor: int = 3
) -> CheckRecord:
    """Exploratory: if p^l*a stays a loop mod p^m for all l <= L, record whether
    B(a) <= p^m - 4; otherwise search l <= extension*L for the forced non-loop
    witness.  Every case is classified; 'unresolved' is the only failure."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not e.is_periodic:
        raise ValueError("this check runs on periodic expansions")
    n = p**m
    params = (("p", p), ("m", m), ("L", L))
    s = cf_value(e)
    for ell in range(L + 1):
        if not is_infinite_loop(s.scaled(p**ell), n).is_loop:
            return CheckRecord("count-height", params, False, True, f"refuted_at={ell}")
    b = height(e)
    if b <= n - 4:
        return CheckRecord("count-height", params, True, True, f"loop_through={L} B={b}")
    cap = max(extension_factor * L, L + 1)
    for ell in range(L + 1, cap + 1):
        if not is_infinite_loop(s.scaled(p**ell), n).is_loop:
            return CheckRecord("count-height", params, True, True, f"B={b} witness_at={ell}")
    return CheckRecord("count-height", params, True, False, f"unresolved B={b} e={e}")


def persistence_scan(
    e: CFExpansion, p: int, m_max: int, L: int
) -> list[tuple[int, Optional[int]]]:
    """For each m <= m_max, the smallest l <= L with p^l*a not a loop mod p^m.

    A complete witness list certifies, at scan scale, the vanishing of the
    p-adic approximation constant for this value.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    out: list[tuple[int, Optional[int]]] = []
    rational = e.is_finite
    value = cf_value(e)
    for m in range(1, m_max + 1):
        n = p**m
        found: Optional[int] = None
        for ell in range(L + 1):
            if rational:
                scaled_e = cf_from_rational(value.scaled(p**ell))[0]
                verdict = is_infinite_loop(scaled_e, n)
            else:
                verdict = is_infinite_loop(value.scaled(p**ell), n)
            if not verdict.is_loop:
                found = ell
                break
        out.append((m, found))
    return out


# ---------------------------------------------------------------------------
# batch scans (shared by the CLI and the acceptance suite)


def run_noloop_scan(
    n_values: Sequence[int], count: int, seed: int, keep_records: bool = False
) -> ScanReport:
    start = time.perf_counter()
    report = ScanReport("noloop", {"n": f"{min(n_values)}..{max(n_values)}", "count": count, "seed": seed})
    for n in n_values:
        rng = random.Random(f"{seed}:{n}")
        for _ in range(count):
            e = random_periodic_cf(rng)
            report.add(check_noloop_bound(e, n), keep_records)
    report.elapsed = time.perf_counter() - start
    return report


def run_infl_scan(
    pm_values: Sequence[tuple[int, int]], count: int, seed: int, keep_records: bool = False
) -> ScanReport:
    start = time.perf_counter()
    label = ",".join(f"{p}^{m}" for p, m in pm_values)
    report = ScanReport("infl", {"pm": label, "count": count, "seed": seed})
    for p, m in pm_values:
        rng = random.Random(f"{seed}:{p}:{m}")
        for _ in range(count):
            e = random_periodic_cf(rng)
            report.add(check_infl(e, p, m), keep_records)
    report.elapsed = time.perf_counter() - start
    return report


def plant_pro2_case(rng: random.Random, n: int) -> tuple[CFExpansion, int]:
    """Random finite expansion with a convergent denominator q_k = n*q', q' > 1.

    The divisibility is planted by solving for a_k against the running
    denominators, then at least two more partial quotients keep the planted
    fan interior.
    """
    while True:
        k = rng.randint(1, 3)
        prefix = [rng.randint(0, 3)] + [rng.randint(1, 6) for _ in range(k)]
        q_prev, q = 0, 1
        for a in prefix[1:]:
            q_prev, q = q, a * q + q_prev
        # after the prefix, q = q_k and q_prev = q_{k-1}; solve for the next
        # entry so that the following denominator is divisible by n
        if math.gcd(q, n) != 1:
            continue
        residue = (-q_prev * pow(q, -1, n)) % n
        a_next = residue if residue >= 1 else residue + n
        a_next += n * rng.randint(0, 2)
        while a_next * q + q_prev <= n:  # ensure q' = q_{k+1} / n > 1
            a_next += n
        entries = prefix + [a_next] + [rng.randint(1, 6) for _ in range(rng.randint(2, 4))]
        if entries[-1] == 1:
            entries[-1] += 1
        e = CFExpansion(entries[0], tuple(entries[1:]), None, False)
        return e, k + 1


def run_pro2_scan(
    n_values: Sequence[int], count: int, seed: int, keep_records: bool = False
) -> ScanReport:
    start = time.perf_counter()
    report = ScanReport("pro2", {"n": f"{min(n_values)}..{max(n_values)}", "count": count, "seed": seed})
    for n in n_values:
        rng = random.Random(f"{seed}:{n}")
        for _ in range(count):
            e, k = plant_pro2_case(rng, n)
            report.add(check_pro2(e, n, k), keep_records)
    report.elapsed = time.perf_counter() - start
    return report


def run_count_scan(
    pm_values: Sequence[tuple[int, int]],
    count: int,
    seed: int,
    L: int = 20,
    extension_factor: int = 3,
    keep_records: bool = False,
) -> ScanReport:
    start = time.perf_counter()
    label = ",".join(f"{p}^{m}" for p, m in pm_values)
    report = ScanReport("count-height", {"pm": label, "count": count, "seed": seed, "L": L})
    for p, m in pm_values:
        rng = random.Random(f"{seed}:{p}:{m}")
        population = [random_periodic_cf(rng, max_entry=4) for _ in range(count)]
        example = loop_example(p**m)
        if example.is_periodic:
            population[0] = example  # guarantee at least one loop at level 0
        for e in population:
            rec = check_count_height(e, p, m, L, extension_factor)
            # completeness criterion: nothing may stay unexplained
            report.add(rec, keep_records)
    report.elapsed = time.perf_counter() - start
    return report


def run_defs_equivalence_scan(
    q_max: int, n_lo: int, n_hi: int, keep_records: bool = False
) -> ScanReport:
    """Loop decisions by denominators versus by crossed edges, on all reduced
    rationals in (0, 1) with denominator <= q_max and all moduli in range."""
    start = time.perf_counter()
    report = ScanReport(
        "defs-equivalence", {"q_max": q_max, "n": f"{n_lo}..{n_hi}"}
    )
    for q in range(2, q_max + 1):
        for p in range(1, q):
            if math.gcd(p, q) != 1:
                continue
            e = cf_from_rational(Fraction(p, q))[0]
            for n in range(n_lo, n_hi + 1):
                v1 = is_infinite_loop(e, n)
                v2 = loop_verdict_geometric(e, n)
                ok = v1.kind == v2.kind
                rec = CheckRecord(
                    "defs-equivalence",
                    (("x", f"{p}/{q}"), ("n", n)),
                    True,
                    ok,
                    "-" if ok else f"{v1.kind}!={v2.kind}",
                )
                report.add(rec, keep_records and not ok)
    report.elapsed = time.perf_counter() - start
    return report


def _expansion_entries_from_edges(e: CFExpansion, depth: Optional[int] = None) -> list[int]:
    """Partial quotients read back off the fan structure of the crossed edges."""
    edges = crossed_edges(e, depth)
    return [size for _, size in fan_chain(edges)]


def run_thma_scan(
    num_rationals: int, num_periodic: int, seed: int, depth: int = 40, keep_records: bool = False
) -> ScanReport:
    """Fan structure of the crossed edges reproduces the partial quotients."""
    start = time.perf_counter()
    report = ScanReport(
        "thma", {"rationals": num_rationals, "periodic": num_periodic, "seed": seed}
    )
    rng = random.Random(seed)
    for _ in range(num_rationals):
        x = random_unit_rational(rng)
        e = cf_from_rational(x)[0]
        sizes = _expansion_entries_from_edges(e)
        expected = [e.entry(i) for i in range(1, e.last_index + 1)]
        got = sizes[:-1] + [sizes[-1] + 1] if sizes else []
        ok = got == expected
        report.add(
            CheckRecord("thma", (("x", str(x)),), True, ok, "-" if ok else f"{got}!={expected}"),
            keep_records and not ok,
        )
    for _ in range(num_periodic):
        e = random_periodic_cf(rng, a0_max=0)
        sizes = _expansion_entries_from_edges(e, depth)
        complete = sizes[:-1]  # last fan may be cut by the depth
        expected = [e.entry(i) for i in range(1, len(complete) + 1)]
        ok = complete == expected
        report.add(
            CheckRecord("thma", (("x", str(e)),), True, ok, "-" if ok else f"{complete}!={expected}"),
            keep_records and not ok,
        )
    report.elapsed = time.perf_counter() - start
    return report


def _semiconvergent_pool(e: CFExpansion, den_cap: int) -> set[Rational]:
    """All semi-convergent values of a rational's expansions with denominator
    at most den_cap, tails included."""
    pool: set[Rational] = set()
    for cand in (e, twin_of(e)):
        last = cand.last_index
        for k in range(last):
            for m in range(cand.entry(k + 1) + 1):
                pool.add(semiconvergent(cand, k, m))
        p_prev, q_prev = convergent_pair(cand, last - 1)
        p, q = convergent_pair(cand, last)
        m = 1
        while m * q + q_prev <= den_cap:
            pool.add(Rational(m * p + p_prev, m * q + q_prev))
            m += 1
    return pool


def run_dual_pushforward_scan(count: int, seed: int, n_max: int = 10, keep_records: bool = False) -> ScanReport:
    """Convergent/semi-convergent pairs with denominators splitting n push
    forward to semi-convergents of the scaled value, one of them a convergent."""
    start = time.perf_counter()
    report = ScanReport("dual-pushforward", {"count": count, "seed": seed, "n_max": n_max})
    rng = random.Random(seed)
    found = 0
    while found < count:
        e = random_finite_cf(rng, min_len=3, max_len=7, max_entry=8, a0_max=1)
        n = rng.randint(2, n_max)
        cases = []
        for k in range(e.last_index):
            _, q_k = convergent_pair(e, k)
            for m in range(e.entry(k + 1) + 1):
                sc = semiconvergent(e, k, m)
                if sc.den == 0:
                    continue  # the seed vertex q_{-1} = 0 is not a finite point
                for n1 in range(1, n + 1):
                    if n % n1 == 0 and q_k % n1 == 0 and sc.den % (n // n1) == 0:
                        cases.append((k, m, n1))
        if not cases:
            continue
        k, m, n1 = cases[rng.randrange(len(cases))]
        found += 1
        conv = Rational(*convergent_pair(e, k))
        semi = semiconvergent(e, k, m)
        img_a = conv.scaled(n)
        img_b = semi.scaled(n)
        scaled = multiply_cf(CFExpansion(e.a0, e.body, None, False), n)
        cap = max(img_a.den, img_b.den) + scaled.entry(0) + 2
        pool = _semiconvergent_pool(scaled, max(cap, 10))
        conv_pool = set(convergents(scaled)) | set(convergents(twin_of(scaled)))
        ok = img_a in pool and img_b in pool and (img_a in conv_pool or img_b in conv_pool)
        report.add(
            CheckRecord(
                "dual-pushforward",
                (("x", str(e)), ("n", n), ("k", k), ("m", m)),
                True,
                ok,
                "-" if ok else f"images {img_a},{img_b}",
            ),
            keep_records and not ok,
        )
    report.elapsed = time.perf_counter() - start
    return report
