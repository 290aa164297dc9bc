"""Blocklength sweeps over code families, with exponent and gap diagnostics.

A family hands out one code per blocklength; the sweep runs the exact tie
decomposition at each n and converts the probabilities to rates
-(1/n) ln value only at the very end. The a_n/b_n ratio certificate is
checked in rational arithmetic before any logarithm exists.
"""

from __future__ import annotations

import hashlib
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .bsc import TieReport, tie_report
from .codes import BlockCode, BscParams
from .errors import EmptySeries, PvlabError, TooManyCodewords, ValidationError
from .rationals import format_rate

FAMILY_KINDS = ("antipodal", "random")


@dataclass(frozen=True)
class FamilySpec:
    """One code per blocklength: the all-zeros/all-ones pair, or seeded
    uniform distinct words of fixed count."""

    kind: str
    m: int | None = None
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise ValidationError(f"unknown family kind {self.kind!r}")
        if self.kind == "antipodal":
            if self.m not in (None, 2):
                raise ValidationError("antipodal family has exactly 2 words")
        else:
            if self.m is None or self.m < 2:
                raise ValidationError("random family needs a codeword count m >= 2")

    def describe(self) -> str:
        if self.kind == "antipodal":
            return "antipodal"
        return f"random(m={self.m}, seed={self.seed or 0})"


def _child_rng(seed: int, n: int) -> random.Random:
    # hash-derived child seed: draws at blocklength n never depend on which
    # other blocklengths were generated before
    digest = hashlib.sha256(f"pvlab-family:{seed}:{n}".encode()).digest()
    return random.Random(int.from_bytes(digest, "big"))


def generate_family(spec: FamilySpec, n: int) -> BlockCode:
    """Deterministic code for (spec, n)."""
    if n < 1:
        raise ValidationError(f"blocklength must be >= 1, got {n}")
    if spec.kind == "antipodal":
        return BlockCode(n, (0, (1 << n) - 1))
    m = spec.m
    assert m is not None
    if m > 1 << n:
        raise TooManyCodewords(m, n)
    rng = _child_rng(spec.seed or 0, n)
    words: list[int] = []
    seen: set[int] = set()
    while len(words) < m:
        w = rng.getrandbits(n)
        if w not in seen:
            seen.add(w)
            words.append(w)
    return BlockCode(n, tuple(words))


def neg_log_rate(value: Fraction, n: int) -> float:
    """-(1/n) ln(value) computed as (ln den - ln num)/n, big-int safe."""
    if value == 0:
        return math.inf
    return (math.log(value.denominator) - math.log(value.numerator)) / n


@dataclass(frozen=True)
class SeriesRow:
    n: int
    m: int
    a_n: Fraction
    b_n: Fraction
    delta_n: Fraction
    rate_a: float
    rate_b: float
    rate_delta: float
    gap: float
    rate_cap: float


@dataclass(frozen=True)
class ExponentSeries:
    family: str
    p: Fraction
    rows: tuple[SeriesRow, ...]


def _row_from_report(rep: TieReport) -> SeriesRow:
    ratio = rep.a_n / rep.b_n
    return SeriesRow(
        n=rep.n,
        m=rep.m,
        a_n=rep.a_n,
        b_n=rep.b_n,
        delta_n=rep.delta_n,
        rate_a=neg_log_rate(rep.a_n, rep.n),
        rate_b=neg_log_rate(rep.b_n, rep.n),
        rate_delta=neg_log_rate(rep.delta_n, rep.n),
        gap=(math.log(ratio.numerator) - math.log(ratio.denominator)) / rep.n,
        rate_cap=math.log(rep.m) / rep.n,
    )


def exponent_series(
    spec: FamilySpec,
    params: BscParams,
    n_grid: list[int],
    *,
    ceiling: int | None = None,
) -> ExponentSeries:
    """One exact row per blocklength, sorted by n.

    Before taking any logarithm, each row is certified in rational
    arithmetic: a_n / b_n <= 1 + (2(1-p)/p)(M - 1), the finite-n form of the
    tie-routing argument. b_n > 0 always holds here (the output equal to a
    rival codeword is strictly closer to it), so the ratio is well defined.
    """
    grid = sorted(n_grid)
    if not grid:
        raise EmptySeries()
    if len(set(grid)) != len(grid):
        raise ValidationError("blocklength grid has repeats")
    rows = []
    for n in grid:
        code = generate_family(spec, n)
        rep = tie_report(code, params, ceiling=ceiling)
        cert_rhs = 1 + (2 * params.q / params.p) * (rep.m - 1)
        if rep.b_n == 0 or rep.a_n > rep.b_n * cert_rhs:
            raise PvlabError(f"internal: ratio certificate failed at n={n}")
        rows.append(_row_from_report(rep))
    return ExponentSeries(family=spec.describe(), p=params.p, rows=tuple(rows))


def pair_limiting_rate(params: BscParams) -> float:
    """Limiting rate -(1/2) ln(4p(1-p)) of a single antipodal pair."""
    t = 4 * params.p * params.q
    return -(math.log(t.numerator) - math.log(t.denominator)) / 2


def zero_rate_exponent_reference(params: BscParams) -> float:
    """Zero-rate reference exponent, half the antipodal-pair limiting rate."""
    return pair_limiting_rate(params) / 2


@dataclass(frozen=True)
class GapSummary:
    max_gap: float
    max_rate_cap: float
    theorem1_satisfied: bool
    window_n_min: int


def rate_gap_series(series: ExponentSeries, *, window_n_min: int | None = None) -> GapSummary:
    """Gap-versus-cap summary over the large-n window.

    The window defaults to the largest-n half of the rows, damping small-n
    transients. theorem1_satisfied checks
    max gap <= max rate_cap + ln(2(1-p)/p) / window n_min,
    the per-row ratio certificate folded through the logarithm.
    """
    if not series.rows:
        raise EmptySeries()
    if window_n_min is None:
        window = series.rows[len(series.rows) // 2 :]
    else:
        window = tuple(r for r in series.rows if r.n >= window_n_min)
        if not window:
            raise EmptySeries()
    max_gap = max(r.gap for r in window)
    max_cap = max(r.rate_cap for r in window)
    n_min = min(r.n for r in window)
    t = 2 * (1 - series.p) / series.p
    allowance = (math.log(t.numerator) - math.log(t.denominator)) / n_min
    return GapSummary(
        max_gap=max_gap,
        max_rate_cap=max_cap,
        theorem1_satisfied=max_gap <= max_cap + allowance,
        window_n_min=n_min,
    )


CSV_HEADER = "n,M,a_n,b_n,delta_n,rate_a,rate_b,rate_delta,gap,rate_cap"


def _prob_cell(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def series_to_csv(series: ExponentSeries) -> str:
    """Exact num/den probability cells, 12-significant-digit rate cells;
    the inf sentinel may appear only in rate_delta (delta_n = 0 rows)."""
    lines = [CSV_HEADER]
    for r in series.rows:
        lines.append(
            ",".join(
                [
                    str(r.n),
                    str(r.m),
                    _prob_cell(r.a_n),
                    _prob_cell(r.b_n),
                    _prob_cell(r.delta_n),
                    format_rate(r.rate_a),
                    format_rate(r.rate_b),
                    format_rate(r.rate_delta),
                    format_rate(r.gap),
                    format_rate(r.rate_cap),
                ]
            )
        )
    return "\n".join(lines) + "\n"
