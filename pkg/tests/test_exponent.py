import math
from fractions import Fraction

import pytest

import oracles
from pvlab import (
    BscParams,
    CSV_HEADER,
    EmptySeries,
    FamilySpec,
    TooManyCodewords,
    ValidationError,
    exponent_series,
    generate_family,
    neg_log_rate,
    pair_limiting_rate,
    rate_gap_series,
    series_to_csv,
    tie_report,
    zero_rate_exponent_reference,
)

F = Fraction
P14 = BscParams(F(1, 4))
P110 = BscParams(F(1, 10))
ANTIPODAL = FamilySpec("antipodal")


class TestFamilies:
    def test_antipodal(self):
        code = generate_family(ANTIPODAL, 3)
        assert code.words == (0, 7)

    def test_antipodal_m_fixed(self):
        assert FamilySpec("antipodal", m=2).m == 2
        with pytest.raises(ValidationError):
            FamilySpec("antipodal", m=3)

    def test_unknown_kind(self):
        with pytest.raises(ValidationError):
            FamilySpec("sparse")

    def test_random_needs_m(self):
        with pytest.raises(ValidationError):
            FamilySpec("random")

    def test_random_reproducible(self):
        spec = FamilySpec("random", m=4, seed=7)
        assert generate_family(spec, 6) == generate_family(spec, 6)

    def test_random_blocklengths_independent(self):
        # drawing n=8 first must not shift what n=4 produces
        spec = FamilySpec("random", m=3, seed=11)
        generate_family(spec, 8)
        again = generate_family(spec, 4)
        fresh = generate_family(FamilySpec("random", m=3, seed=11), 4)
        assert again == fresh

    def test_seed_matters(self):
        a = generate_family(FamilySpec("random", m=4, seed=1), 6)
        b = generate_family(FamilySpec("random", m=4, seed=2), 6)
        assert a != b

    def test_too_many_codewords(self):
        with pytest.raises(TooManyCodewords):
            generate_family(FamilySpec("random", m=8, seed=0), 2)

    def test_bad_blocklength(self):
        with pytest.raises(ValidationError):
            generate_family(ANTIPODAL, 0)


class TestSeries:
    def test_antipodal_matches_binomial_tail(self):
        series = exponent_series(ANTIPODAL, P14, list(range(2, 11)))
        for row in series.rows:
            assert row.a_n == oracles.antipodal_error(row.n, F(1, 4))

    def test_antipodal_tie_split(self):
        # two equiprobable words: ties contribute exactly half their mass
        series = exponent_series(ANTIPODAL, P14, [2, 4, 6, 8])
        for row in series.rows:
            assert row.a_n == row.b_n + row.delta_n / 2

    def test_delta_parity(self):
        series = exponent_series(ANTIPODAL, P110, list(range(2, 10)))
        for row in series.rows:
            if row.n % 2:
                assert row.delta_n == 0 and row.rate_delta == math.inf
            else:
                assert row.delta_n > 0 and math.isfinite(row.rate_delta)

    def test_rate_sandwich(self):
        series = exponent_series(FamilySpec("random", m=4, seed=3), P14, [4, 6, 8, 10])
        for row in series.rows:
            assert row.rate_b >= row.rate_a
            assert row.rate_a >= neg_log_rate(row.b_n + row.delta_n, row.n)

    def test_gap_is_rate_difference(self):
        series = exponent_series(FamilySpec("random", m=5, seed=9), P110, [5, 7, 9])
        for row in series.rows:
            assert row.gap == pytest.approx(row.rate_b - row.rate_a, abs=1e-12)
            assert row.rate_cap == pytest.approx(math.log(row.m) / row.n, abs=1e-15)

    def test_rows_sorted(self):
        series = exponent_series(ANTIPODAL, P14, [8, 2, 6, 4])
        assert [r.n for r in series.rows] == [2, 4, 6, 8]

    def test_empty_grid(self):
        with pytest.raises(EmptySeries):
            exponent_series(ANTIPODAL, P14, [])

    def test_repeat_grid(self):
        with pytest.raises(ValidationError):
            exponent_series(ANTIPODAL, P14, [4, 4])

    def test_family_label(self):
        series = exponent_series(FamilySpec("random", m=3, seed=2), P14, [4])
        assert series.family == "random(m=3, seed=2)"
        assert exponent_series(ANTIPODAL, P14, [2]).family == "antipodal"


class TestZeroRateReferences:
    def test_pinned_values(self):
        assert zero_rate_exponent_reference(P110) == pytest.approx(
            0.25541281188299525, abs=1e-12
        )
        assert zero_rate_exponent_reference(P14) == pytest.approx(
            0.0719205181129452, abs=1e-12
        )
        assert pair_limiting_rate(P14) == pytest.approx(0.1438410362258904, abs=1e-12)

    def test_factor_two(self):
        for p in (F(1, 10), F(1, 4), F(2, 5)):
            params = BscParams(p)
            assert pair_limiting_rate(params) == pytest.approx(
                2 * zero_rate_exponent_reference(params), abs=1e-15
            )

    def test_vanishes_near_half(self):
        assert zero_rate_exponent_reference(BscParams(F(49, 100))) < 1e-3

    def test_antipodal_rate_approaches_limit_from_above(self):
        limit = pair_limiting_rate(P14)
        series = exponent_series(ANTIPODAL, P14, [8, 12, 16, 20])
        rates = [r.rate_a for r in series.rows]
        assert all(r > limit for r in rates)
        assert rates == sorted(rates, reverse=True)


class TestGapSummary:
    def test_antipodal_satisfied(self):
        series = exponent_series(ANTIPODAL, P14, list(range(2, 17)))
        summary = rate_gap_series(series)
        assert summary.theorem1_satisfied
        assert summary.window_n_min == series.rows[len(series.rows) // 2].n

    def test_random_families_satisfied(self):
        for seed in (1, 2, 3):
            series = exponent_series(
                FamilySpec("random", m=8, seed=seed), P110, list(range(4, 13))
            )
            assert rate_gap_series(series).theorem1_satisfied

    def test_explicit_window(self):
        series = exponent_series(ANTIPODAL, P14, [2, 4, 6, 8])
        summary = rate_gap_series(series, window_n_min=6)
        assert summary.window_n_min == 6
        assert summary.max_rate_cap == pytest.approx(math.log(2) / 6, abs=1e-15)

    def test_window_past_grid(self):
        series = exponent_series(ANTIPODAL, P14, [2, 4])
        with pytest.raises(EmptySeries):
            rate_gap_series(series, window_n_min=10)

    def test_row_invariant(self):
        # certificate through the log: gap <= rate_cap + ln(2(1-p)/p)/n per row
        for spec, params in [
            (ANTIPODAL, P14),
            (FamilySpec("random", m=6, seed=4), P110),
        ]:
            series = exponent_series(spec, params, list(range(3, 12)))
            slack = math.log(2 * (1 - params.p) / params.p)
            for row in series.rows:
                assert row.gap <= row.rate_cap + slack / row.n + 1e-12


class TestCsv:
    def test_header(self):
        assert CSV_HEADER == "n,M,a_n,b_n,delta_n,rate_a,rate_b,rate_delta,gap,rate_cap"

    def test_antipodal_n2_row(self):
        series = exponent_series(ANTIPODAL, P14, [2])
        lines = series_to_csv(series).splitlines()
        assert lines[0] == CSV_HEADER
        cells = lines[1].split(",")
        assert cells[:5] == ["2", "2", "1/4", "1/16", "3/8"]

    def test_inf_sentinel_only_in_rate_delta(self):
        series = exponent_series(ANTIPODAL, P14, [3, 5])
        for line in series_to_csv(series).splitlines()[1:]:
            cells = line.split(",")
            assert cells[7] == "inf"
            for k in (5, 6, 8, 9):
                assert cells[k] != "inf"
                float(cells[k])

    def test_prob_cells_always_slashed(self):
        series = exponent_series(FamilySpec("random", m=3, seed=5), P14, [4, 5])
        for line in series_to_csv(series).splitlines()[1:]:
            for cell in line.split(",")[2:5]:
                num, den = cell.split("/")
                assert int(den) > 0
                Fraction(int(num), int(den))

    def test_round_trip_values(self):
        series = exponent_series(ANTIPODAL, P110, [2, 3, 4])
        lines = series_to_csv(series).splitlines()[1:]
        for line, row in zip(lines, series.rows):
            cells = line.split(",")
            assert Fraction(cells[2]) == row.a_n
            assert float(cells[5]) == pytest.approx(row.rate_a, rel=1e-11)
        assert series_to_csv(series).endswith("\n")

    def test_csv_matches_fresh_reports(self):
        series = exponent_series(FamilySpec("random", m=4, seed=8), P14, [6, 7])
        for row in series.rows:
            rep = tie_report(generate_family(FamilySpec("random", m=4, seed=8), row.n), P14)
            assert (rep.a_n, rep.b_n, rep.delta_n) == (row.a_n, row.b_n, row.delta_n)
