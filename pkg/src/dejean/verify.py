"""Exhaustive check that no admissible factor of f(A_m^3) is a short stabilizing word.

For 27 <= n <= 29, any factor u of an f-image with u in Stab_n(k) and
|u| < k(n-1) must have |u| = r(n-1) with p+1 <= r < k <= 16.  Those lengths
span at most three consecutive f-blocks, so it suffices to test every factor
of that length in f(w) for every w in A_m^3 against k = r+1 (pointwise
stabilizers are nested, so failing at r+1 rules out every larger k).
"""
from __future__ import annotations

import itertools
import json
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

from . import _kernels
from .carpi import CarpiParams, apply_f, carpi_params
from .pansiot import find_condition_i_factor, is_k_stabilizing, is_k_stabilizing_perm, max_stabilized
from .perms import factor_image, phi, prefix_table

log = logging.getLogger(__name__)

TARGET_RANGE = (27, 29)
MAX_K = 16
MIN_LEMMA_N = 18


@dataclass(frozen=True)
class SearchSpace:
    n: int
    params: CarpiParams
    r_values: tuple[int, ...]
    note: str = ""

    def k_of_r(self, r: int) -> int:
        return r + 1


@dataclass
class RCount:
    r: int
    factor_length: int
    words_examined: int
    factors_checked: int


@dataclass
class Violation:
    triple: str
    start: int
    length: int
    k: int


@dataclass
class VerificationReport:
    n: int
    m: int
    p: int
    uniform_length: int
    per_r: list[RCount] = field(default_factory=list)
    violations: list[Violation] = field(default_factory=list)
    elapsed_seconds: float | None = None
    status: str = "PASS"

    def to_dict(self, timing: bool = True) -> dict:
        d = asdict(self)
        if not timing:
            d["elapsed_seconds"] = None
        return d

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2)

    def summary(self) -> str:
        lines = [f"n={self.n} m={self.m} p={self.p} uniform_length={self.uniform_length}"]
        for c in self.per_r:
            lines.append(
                f"  r={c.r} k={c.r + 1} factor_length={c.factor_length} "
                f"words={c.words_examined} factors={c.factors_checked}"
            )
        for v in self.violations:
            lines.append(f"  VIOLATION triple={v.triple} start={v.start} length={v.length} k={v.k}")
        tail = f"  status={self.status} violations={len(self.violations)}"
        if self.elapsed_seconds is not None:
            tail += f" elapsed={self.elapsed_seconds:.3f}s"
        lines.append(tail)
        return "\n".join(lines)


def _check_n(n: int, override: bool):
    lo, hi = TARGET_RANGE
    if override:
        if n < MIN_LEMMA_N:
            raise ValueError(f"n={n}: the length reduction needs n >= {MIN_LEMMA_N}")
    elif not lo <= n <= hi:
        raise ValueError(f"n={n} outside {lo}..{hi} (pass override to force)")


def admissible_search_space(n: int, override: bool = False) -> SearchSpace:
    _check_n(n, override)
    params = carpi_params(n)
    r_values = tuple(range(params.p + 1, MAX_K))
    note = ""
    if not r_values:
        note = f"p+1={params.p + 1} exceeds {MAX_K - 1}: no admissible factor lengths"
    return SearchSpace(n, params, r_values, note)


def _triples(m: int) -> list[tuple[int, ...]]:
    return list(itertools.product(range(1, m + 1), repeat=3))


def _check_triples(n: int, r_values, triples, dedup: bool = False):
    """Violations for a batch of triples, in input order."""
    params = carpi_params(n)
    found = []
    seen = {r: set() for r in r_values}
    for w in triples:
        bits = bytes(apply_f(w, params).bits)
        table = _kernels.inverse_prefix_table(bits, n)
        for r in r_values:
            length = r * (n - 1)
            count = len(bits) - length + 1
            k = r + 1
            if dedup:
                starts = []
                for s in range(count):
                    key = bits[s:s + length]
                    if key in seen[r]:
                        continue
                    seen[r].add(key)
                    if _kernels.agreement(table, n, s, s + length, k) == k:
                        starts.append(s)
            else:
                starts = _kernels.stabilizing_starts(table, n, length, k, count)
            for s in starts:
                top = _kernels.agreement(table, n, s, s + length, n)
                found.append(("".join(map(str, w)), s, length, top))
    return found


def verify_stabilizer_freeness(n: int, parallelism: int = 1, override: bool = False,
                               dedup: bool = False) -> VerificationReport:
    if parallelism < 1:
        raise ValueError("parallelism must be positive")
    t0 = time.perf_counter()
    space = admissible_search_space(n, override)
    params = space.params
    report = VerificationReport(n, params.m, params.p, params.uniform_length)
    if space.note:
        log.info("n=%d: %s", n, space.note)
    triples = _triples(params.m)
    total = 3 * params.uniform_length
    for r in space.r_values:
        length = r * (n - 1)
        report.per_r.append(RCount(r, length, len(triples), len(triples) * (total - length + 1)))

    if parallelism == 1 or dedup:
        raw = _check_triples(n, space.r_values, triples, dedup)
    else:
        # contiguous chunks, concatenated in submission order
        size = -(-len(triples) // parallelism)
        chunks = [triples[i:i + size] for i in range(0, len(triples), size)]
        with ProcessPoolExecutor(max_workers=parallelism) as pool:
            parts = pool.map(_check_triples, [n] * len(chunks),
                             [space.r_values] * len(chunks), chunks)
            raw = [v for part in parts for v in part]
    report.violations = [Violation(*v) for v in raw]
    report.status = "FAIL" if report.violations else "PASS"
    report.elapsed_seconds = time.perf_counter() - t0
    return report


def verify_range(n_lo: int, n_hi: int, parallelism: int = 1,
                 override: bool = False) -> list[VerificationReport]:
    if n_lo > n_hi:
        raise ValueError(f"empty range {n_lo}..{n_hi}")
    for n in (n_lo, n_hi):
        _check_n(n, override)
    return [verify_stabilizer_freeness(n, parallelism, override) for n in range(n_lo, n_hi + 1)]


def cross_check_sample(n: int, sample_size: int, seed: int = 0, override: bool = False) -> bool:
    """Compare the fast table path with from-scratch permutation products on random cells."""
    space = admissible_search_space(n, override)
    if sample_size <= 0 or not space.r_values:
        return True
    rng = random.Random(seed)
    params = space.params
    tables = {}
    ok = True
    for _ in range(sample_size):
        w = tuple(rng.randint(1, params.m) for _ in range(3))
        r = rng.choice(space.r_values)
        length = r * (n - 1)
        if w not in tables:
            bits = bytes(apply_f(w, params).bits)
            tables[w] = (bits, prefix_table(bits, n), _kernels.inverse_prefix_table(bits, n))
        bits, ptab, fast = tables[w]
        s = rng.randrange(len(bits) - length + 1)
        k = r + 1
        via_table = factor_image(ptab, s, s + length)
        scratch = phi(bits[s:s + length], n)
        top = _kernels.agreement(fast, n, s, s + length, n)
        verdicts = {
            is_k_stabilizing_perm(via_table, k),
            is_k_stabilizing(bits[s:s + length], n, k),
            top >= k,
        }
        if via_table != scratch or len(verdicts) != 1 or max_stabilized(scratch) != top:
            log.error("mismatch at n=%d triple=%s r=%d start=%d", n, w, r, s)
            ok = False
    return ok


def legacy_exhaustive(n: int, triple=(1, 1, 1), override: bool = False):
    """Unreduced search on one f(triple): all lengths < (n-1)^2 and all k <= n-1."""
    params = admissible_search_space(n, override).params
    return find_condition_i_factor(apply_f(triple, params), n)
