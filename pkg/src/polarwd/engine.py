"""Full-code weight distributions: direct coset enumeration, the automorphism-
reduced recursion for decreasing monomial codes, cost estimates, and automatic
strategy selection (including the dual/MacWilliams detour).

The direct route evaluates one coset per assignment of the red bits (2^gamma
of them).  The reduced route repeatedly freezes the first unfrozen row f: the
subsets where f is frozen to 1 and the single-shift-related red rows take all
values form one orbit of the lower-triangular affine group, so a single coset
enumerator stands for 2^{|S|} of them.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable, Optional

from .codespec import CodeSpec, Profile, dual_spec, profile
from .coset import CosetCache, calc_a
from .monomials import single_shift_le
from .transform import index_to_monomial
from .wef import WeightEnumerator, macwilliams

DEFAULT_BUDGET = 1 << 28

ProgressFn = Callable[[int, int], None]


class BudgetExceeded(RuntimeError):
    """The requested computation needs more coset evaluations than allowed."""


@dataclass
class EngineStats:
    """Mutable counters shared across one computation."""

    cosets_evaluated: int = 0


@dataclass(frozen=True)
class CostEstimate:
    """Predicted coset-evaluation counts for each admissible strategy."""

    direct_cosets: int
    lta_cosets: Optional[int] = None
    dual_direct_cosets: Optional[int] = None
    dual_lta_cosets: Optional[int] = None


@dataclass(frozen=True)
class Report:
    """What wef_auto actually did."""

    route: str
    n: int
    k: int
    predicted_cosets: int
    cosets_evaluated: int


def _lta_coset_count(spec: CodeSpec, prof: Profile) -> int:
    """Sum over red rows f of 2^{lambda_f}, without running the recursion.

    lambda_f counts the red rows below f in the matrix (larger index) that are
    not single-shift related to f; those stay free when f's orbit is evaluated.
    The trailing 1 is the single coset left once every red row is peeled.
    """

    if prof.s is None:
        return 0
    red = prof.red
    monos = {i: index_to_monomial(i, spec.m) for i in red}
    total = 1
    for pos, f_idx in enumerate(red):
        f_mono = monos[f_idx]
        lam = sum(
            1
            for g_idx in red[pos + 1 :]
            if not single_shift_le(monos[g_idx], f_mono)
        )
        total += 1 << lam
    return total


def estimate_cost(spec: CodeSpec) -> CostEstimate:
    """Coset counts for direct, reduced, and dual strategies, where defined."""

    prof = profile(spec)
    direct = 1 << prof.gamma
    lta = None
    if spec.is_plain and spec.is_decreasing_code():
        lta = _lta_coset_count(spec, prof)
    dual_direct = None
    dual_lta = None
    if spec.is_plain:
        dual = dual_spec(spec)
        dual_prof = profile(dual)
        dual_direct = 1 << dual_prof.gamma
        if dual.is_decreasing_code():
            dual_lta = _lta_coset_count(dual, dual_prof)
    return CostEstimate(direct, lta, dual_direct, dual_lta)


def _coset_prefix(spec: CodeSpec, prof: Profile, assignment: int) -> tuple[tuple[int, ...], int]:
    """Information prefix u_0..u_{s-1} and the constrained value of u_s.

    The red bits take the assignment's bits (first red bit is the most
    significant, so assignments run in lexicographic order); frozen bits
    resolve their constraints causally.
    """

    s = prof.s
    gamma = prof.gamma
    u: list[int] = []
    red_pos = 0
    for i in range(s + 1):
        st = spec.statuses[i]
        if st is None:
            u.append(assignment >> (gamma - 1 - red_pos) & 1)
            red_pos += 1
        else:
            u.append(st.value(u))
    return tuple(u[:s]), u[s]


def _direct_range(
    spec: CodeSpec,
    prof: Profile,
    start: int,
    stop: int,
    cache: Optional[CosetCache],
) -> WeightEnumerator:
    acc = WeightEnumerator.zero()
    for assignment in range(start, stop):
        prefix, last = _coset_prefix(spec, prof, assignment)
        pair = calc_a(spec.n, prefix, cache)
        acc = acc + pair[last]
    return acc


def wef_direct(
    spec: CodeSpec,
    *,
    cache: Optional[CosetCache] = None,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
    stats: Optional[EngineStats] = None,
    progress: Optional[ProgressFn] = None,
) -> WeightEnumerator:
    """Weight enumerator by summing one polar coset per red-bit assignment.

    Rate-1 codes have no frozen bit and fall outside the coset decomposition;
    they get the closed-form full-space enumerator.  The assignment space is
    split into contiguous ranges combined in order, so the result is identical
    for any thread count.
    """

    prof = profile(spec)
    if prof.s is None:
        return WeightEnumerator.binomial(spec.n)
    total = 1 << prof.gamma
    if total > budget:
        raise BudgetExceeded(f"direct route needs {total} cosets, budget is {budget}")
    if stats is None:
        stats = EngineStats()
    if cache is None:
        cache = CosetCache()

    if threads <= 1 or total == 1:
        chunks = [(0, total)]
    else:
        step = max(1, -(-total // (threads * 4)))
        chunks = [(a, min(a + step, total)) for a in range(0, total, step)]

    if len(chunks) == 1:
        result = _direct_range(spec, prof, 0, total, cache)
        stats.cosets_evaluated += total
        if progress is not None:
            progress(total, total)
        return result

    acc = WeightEnumerator.zero()
    done = 0
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [
            pool.submit(_direct_range, spec, prof, a, b, cache) for a, b in chunks
        ]
        # combine partial sums in submission order: bit-exact determinism
        for (a, b), fut in zip(chunks, futures):
            acc = acc + fut.result()
            done += b - a
            if progress is not None:
                progress(done, total)
    stats.cosets_evaluated += total
    return acc


def wef_lta(
    spec: CodeSpec,
    *,
    cache: Optional[CosetCache] = None,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
    stats: Optional[EngineStats] = None,
    progress: Optional[ProgressFn] = None,
) -> WeightEnumerator:
    """Reduced-complexity enumerator for plain decreasing monomial codes.

    At each level the first unfrozen row f is frozen to 0 (the recursive
    subcode), while the orbit with f frozen to 1 and the single-shift-related
    red rows frozen to 0 is evaluated once and counted 2^{|S|} times.
    """

    if not spec.is_plain:
        raise ValueError("the reduced route requires a plain spec")
    ok = spec.is_decreasing_code()
    if not ok:
        raise ValueError("the reduced route requires a decreasing unfrozen set")
    if stats is None:
        stats = EngineStats()
    if cache is None:
        cache = CosetCache()

    prof = profile(spec)
    if prof.s is not None:
        predicted = _lta_coset_count(spec, prof)
        if predicted > budget:
            raise BudgetExceeded(
                f"reduced route needs {predicted} cosets, budget is {budget}"
            )
    else:
        predicted = 0
    done_box = [0]

    def orbit_progress(done: int, total: int) -> None:
        if progress is not None:
            progress(done_box[0] + done, predicted)

    current = spec
    acc = WeightEnumerator.zero()
    multiplier = []
    # unrolled recursion: peel one red row per level, accumulate orbit terms
    while True:
        prof = profile(current)
        if prof.s is None:
            acc = acc + WeightEnumerator.binomial(current.n)
            break
        if prof.gamma == 0:
            # plain spec, everything before s frozen to 0, u_s = 0
            pair = calc_a(current.n, (0,) * prof.s, cache)
            acc = acc + pair[0]
            stats.cosets_evaluated += 1
            break
        f_idx = min(current.unfrozen)
        f_mono = index_to_monomial(f_idx, current.m)
        shift_set = [
            i
            for i in prof.red
            if i != f_idx and single_shift_le(index_to_monomial(i, current.m), f_mono)
        ]
        orbit = current.with_frozen(f_idx, 1)
        for i in shift_set:
            orbit = orbit.with_frozen(i, 0)
        c_wef = wef_direct(
            orbit,
            cache=cache,
            budget=budget,
            threads=threads,
            stats=stats,
            progress=orbit_progress,
        )
        orbit_prof = profile(orbit)
        done_box[0] += 1 << orbit_prof.gamma
        acc = acc + c_wef.scale(1 << len(shift_set))
        current = current.with_frozen(f_idx, 0)
    return acc


def wef_auto(
    spec: CodeSpec,
    strategy: str = "auto",
    allow_dual: bool = True,
    *,
    budget: int = DEFAULT_BUDGET,
    threads: int = 1,
    cache: Optional[CosetCache] = None,
    progress: Optional[ProgressFn] = None,
) -> tuple[WeightEnumerator, Report]:
    """Run the cheapest admissible route and report what was chosen.

    Candidate routes are direct, reduced, and (when the spec is plain and
    duals are allowed) the same two on the dual followed by the MacWilliams
    transform.  All routes produce the identical enumerator.
    """

    if strategy not in ("auto", "direct", "lta"):
        raise ValueError(f"unknown strategy {strategy!r}")
    cost = estimate_cost(spec)
    candidates: list[tuple[int, str]] = []
    if strategy in ("auto", "direct"):
        candidates.append((cost.direct_cosets, "direct"))
    if strategy in ("auto", "lta") and cost.lta_cosets is not None:
        candidates.append((cost.lta_cosets, "lta"))
    if strategy == "lta" and cost.lta_cosets is None:
        raise ValueError("the reduced route is not admissible for this spec")
    if allow_dual and strategy == "auto":
        if cost.dual_direct_cosets is not None:
            candidates.append((cost.dual_direct_cosets, "dual+direct"))
        if cost.dual_lta_cosets is not None:
            candidates.append((cost.dual_lta_cosets, "dual+lta"))
    admissible = [(c, r) for c, r in candidates if c <= budget]
    if not admissible:
        raise BudgetExceeded(
            f"no admissible route within budget {budget}; cheapest candidate "
            f"needs {min(c for c, _ in candidates)} cosets"
        )
    # ties prefer the simpler route (no dual detour, no MacWilliams step)
    preference = {"lta": 0, "direct": 1, "dual+lta": 2, "dual+direct": 3}
    predicted, route = min(admissible, key=lambda cr: (cr[0], preference[cr[1]]))

    stats = EngineStats()
    kwargs = dict(cache=cache, budget=budget, threads=threads, stats=stats, progress=progress)
    if route == "direct":
        wef = wef_direct(spec, **kwargs)
    elif route == "lta":
        wef = wef_lta(spec, **kwargs)
    else:
        dual = dual_spec(spec)
        if route == "dual+direct":
            dual_wef = wef_direct(dual, **kwargs)
        else:
            dual_wef = wef_lta(dual, **kwargs)
        wef = macwilliams(dual_wef, spec.n, dual.k)
    report = Report(
        route=route,
        n=spec.n,
        k=spec.k,
        predicted_cosets=predicted,
        cosets_evaluated=stats.cosets_evaluated,
    )
    return wef, report
