import random

import pytest

from polarwd import (
    BudgetExceeded,
    CosetCache,
    WeightEnumerator,
    brute_force_wef,
    estimate_cost,
    from_frozen_set,
    from_rm,
    from_unfrozen_set,
    wef_auto,
    wef_direct,
    wef_lta,
)
from polarwd.engine import EngineStats

from conftest import HAMMING16_WEF, POLAR128_UNFROZEN


class TestDirect:
    def test_rate_zero(self):
        spec = from_unfrozen_set(2, [])
        assert wef_direct(spec) == WeightEnumerator.one()

    def test_rate_one(self):
        spec = from_frozen_set(3, [])
        assert wef_direct(spec) == WeightEnumerator.binomial(8)

    def test_example_code(self, hamming16_spec):
        assert wef_direct(hamming16_spec) == HAMMING16_WEF

    def test_dynamic_spec(self):
        # u_3 carries a parity of two earlier frozen-to-zero bits plus offset 1
        spec = from_unfrozen_set(3, [3, 5, 6, 7]).with_frozen(3, 1, support=[1, 2])
        assert wef_direct(spec) == brute_force_wef(spec)

    def test_stats_count_matches_gamma(self, hamming16_spec):
        stats = EngineStats()
        wef_direct(hamming16_spec, stats=stats)
        assert stats.cosets_evaluated == 16

    def test_budget_refusal(self, hamming16_spec):
        with pytest.raises(BudgetExceeded):
            wef_direct(hamming16_spec, budget=15)

    @pytest.mark.parametrize("threads", [1, 2, 3, 8])
    def test_thread_count_never_changes_result(self, hamming16_spec, threads):
        assert wef_direct(hamming16_spec, threads=threads) == HAMMING16_WEF


class TestLta:
    def test_example_code(self, hamming16_spec):
        assert wef_lta(hamming16_spec) == HAMMING16_WEF

    def test_rm_1_3(self):
        assert wef_lta(from_rm(1, 3)) == WeightEnumerator(
            [1, 0, 0, 0, 14, 0, 0, 0, 1]
        )

    def test_rate_one(self):
        assert wef_lta(from_rm(3, 3)) == WeightEnumerator.binomial(8)

    def test_rate_zero(self):
        assert wef_lta(from_unfrozen_set(3, [])) == WeightEnumerator.one()

    def test_coset_count_matches_estimate(self, hamming16_spec):
        stats = EngineStats()
        wef_lta(hamming16_spec, stats=stats)
        assert stats.cosets_evaluated == 5
        assert estimate_cost(hamming16_spec).lta_cosets == 5

    def test_non_decreasing_rejected(self):
        spec = from_unfrozen_set(4, [3, 15])  # x2x3 without its predecessors
        with pytest.raises(ValueError):
            wef_lta(spec)

    def test_dynamic_rejected(self):
        spec = from_unfrozen_set(2, [1, 2, 3]).with_frozen(1, 0, support=[0])
        # index 1 was unfrozen; now dynamically frozen -> not plain
        with pytest.raises(ValueError):
            wef_lta(spec)

    @pytest.mark.parametrize("r,m", [(1, 3), (2, 4), (1, 4), (2, 5)])
    def test_matches_direct_on_reed_muller(self, r, m):
        spec = from_rm(r, m)
        assert wef_lta(spec) == wef_direct(spec)


class TestEstimateCost:
    def test_gamma_zero_direct_one(self):
        spec = from_unfrozen_set(3, [7])
        assert estimate_cost(spec).direct_cosets == 1

    def test_example_code(self, hamming16_spec):
        cost = estimate_cost(hamming16_spec)
        assert cost.direct_cosets == 16
        assert cost.lta_cosets == 5
        assert cost.dual_direct_cosets == 4
        assert cost.dual_lta_cosets == 3

    def test_polar128_spec(self, polar128_spec):
        cost = estimate_cost(polar128_spec)
        assert cost.direct_cosets == 1 << 37
        assert cost.lta_cosets == 60752896

    def test_rm_3_7(self):
        assert estimate_cost(from_rm(3, 7)).lta_cosets == 49761365064

    def test_non_decreasing_has_no_lta_route(self):
        assert estimate_cost(from_unfrozen_set(4, [3, 15])).lta_cosets is None


class TestAuto:
    def test_rm_1_4_value(self):
        wef, report = wef_auto(from_rm(1, 4))
        assert wef == WeightEnumerator([1] + [0] * 7 + [30] + [0] * 7 + [1])
        assert report.n == 16 and report.k == 5

    def test_dual_route_equals_direct(self, hamming16_spec):
        with_dual, r1 = wef_auto(hamming16_spec, allow_dual=True)
        direct_only, r2 = wef_auto(hamming16_spec, strategy="direct", allow_dual=False)
        assert with_dual == direct_only == HAMMING16_WEF
        assert r1.route.startswith("dual")
        assert r2.route == "direct"

    def test_full128_auto_picks_lta(self, polar128_spec):
        # decided from cost alone; nothing is evaluated here
        cost = estimate_cost(polar128_spec)
        candidates = {
            "direct": cost.direct_cosets,
            "lta": cost.lta_cosets,
            "dual+direct": cost.dual_direct_cosets,
            "dual+lta": cost.dual_lta_cosets,
        }
        assert min(candidates, key=lambda r: (candidates[r], r != "lta")) == "lta"

    def test_budget_refusal(self, hamming16_spec):
        with pytest.raises(BudgetExceeded):
            wef_auto(hamming16_spec, budget=2)

    def test_explicit_lta_on_non_decreasing_rejected(self):
        with pytest.raises(ValueError):
            wef_auto(from_unfrozen_set(4, [3, 15]), strategy="lta")

    def test_unknown_strategy_rejected(self, hamming16_spec):
        with pytest.raises(ValueError):
            wef_auto(hamming16_spec, strategy="fastest")

    def test_report_counts(self, hamming16_spec):
        _, report = wef_auto(hamming16_spec, strategy="lta")
        assert report.predicted_cosets == report.cosets_evaluated == 5


class TestRouteEquivalence:
    def test_random_decreasing_specs(self):
        rng = random.Random(2024)
        from polarwd import Monomial, from_unfrozen_set
        from polarwd.monomials import immediate_predecessors

        for _ in range(20):
            m = rng.choice([3, 4, 5])
            # grow a random downward-closed monomial set
            masks = {0}  # the constant monomial (row n-1) anchors every code here
            candidates = list(range(1 << m))
            rng.shuffle(candidates)
            for mask in candidates[: rng.randrange(1, min(1 << m, 18))]:
                closure = [Monomial(mask, m)]
                while closure:
                    f = closure.pop()
                    if f.mask in masks:
                        continue
                    masks.add(f.mask)
                    closure.extend(immediate_predecessors(f))
            unfrozen = [Monomial(mask, m).row_index for mask in masks]
            spec = from_unfrozen_set(m, unfrozen)
            if spec.k > 16:
                continue
            cache = CosetCache()
            direct = wef_direct(spec, cache=cache)
            assert wef_lta(spec, cache=cache) == direct
            assert brute_force_wef(spec) == direct
