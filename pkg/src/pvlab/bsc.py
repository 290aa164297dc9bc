"""Exact tie analysis for block codes on the binary symmetric channel.

The channel flips each bit independently with probability p < 1/2, so the
joint mass of (codeword i, output y) is p^d (1-p)^(n-d) / M with d the
Hamming distance. Everything here reduces to integer counting over output
classes followed by exact rational accumulation; numpy does the counting,
fractions.Fraction does the probability.

Output classification, per transmitted codeword i: let d_i be the distance
to y and d* the best distance among the other codewords.

* win:    d_i < d*   (the optimal guesser is right with certainty)
* tie:    d_i = d*   (the optimal guesser must split the decision)
* no-tie loss: d_i > d*  (some rival is strictly closer)

delta_n averages the tie mass, b_n the no-tie loss mass, and a_n is the
minimum error probability; b_n <= a_n <= b_n + delta_n holds exactly since
ties contribute to the error only partially.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .codes import (
    BlockCode,
    BscParams,
    DEFAULT_JOINT_CEILING,
    DEFAULT_TIE_CEILING,
    hamming,
    resolve_ceiling,
)
from .errors import BlocklengthTooLarge, PvlabError, RangeError, ValidationError
from .joint import JointDistribution, ONE, ZERO


def weight_probabilities(n: int, params: BscParams) -> list[Fraction]:
    """w[k] = p^k (1-p)^(n-k) for k = 0..n, built with one ratio multiply per step."""
    w = [params.q ** n]
    ratio = params.p / params.q
    for _ in range(n):
        w.append(w[-1] * ratio)
    return w


def bsc_joint(code: BlockCode, params: BscParams, *, ceiling: int | None = None) -> JointDistribution:
    """Joint law of (uniform codeword, channel output) over all 2^n outputs."""
    limit = resolve_ceiling(ceiling, DEFAULT_JOINT_CEILING)
    if code.n > limit:
        raise BlocklengthTooLarge(code.n, limit)
    n, m = code.n, code.m
    per = [wk / m for wk in weight_probabilities(n, params)]
    y_labels = [format(y, f"0{n}b") for y in range(1 << n)]
    mass = {}
    for i, word in enumerate(code.words):
        for y in range(1 << n):
            mass[(i, y)] = per[hamming(word, y)]
    return JointDistribution(code.labels(), y_labels, mass)


def bec_joint(code: BlockCode, epsilon: Fraction, *, ceiling: int | None = None) -> JointDistribution:
    """Joint law over erasure-channel outputs in {0, 1, e}^n.

    Every codeword compatible with the unerased positions of y gets the same
    mass (1-eps)^(unerased) * eps^(erased) / M, so each output column is flat
    over its compatible set; tilting a flat column changes nothing, which
    makes these joints the canonical fixtures for exponent invariance.
    Outputs with no compatible codeword are unreachable and left out.
    """
    eps = Fraction(epsilon)
    if not 0 < eps < 1:
        raise ValidationError(f"erasure probability must satisfy 0 < eps < 1, got {eps}")
    limit = resolve_ceiling(ceiling, DEFAULT_JOINT_CEILING)
    n, m = code.n, code.m
    if 3 ** n > 2 ** limit:
        raise BlocklengthTooLarge(n, limit)
    per_erased = [(1 - eps) ** (n - k) * eps ** k / m for k in range(n + 1)]
    word_strs = code.labels()
    y_labels: list[str] = []
    mass: dict[tuple[int, int], Fraction] = {}
    for y_tuple in itertools.product("01e", repeat=n):
        compat = [
            i
            for i, ws in enumerate(word_strs)
            if all(c == "e" or c == ws[k] for k, c in enumerate(y_tuple))
        ]
        if not compat:
            continue
        yi = len(y_labels)
        y_labels.append("".join(y_tuple))
        value = per_erased[sum(1 for c in y_tuple if c == "e")]
        for i in compat:
            mass[(i, yi)] = value
    return JointDistribution(word_strs, y_labels, mass)


# --- exhaustive output classification --------------------------------------

if hasattr(np, "bitwise_count"):
    def _popcount(arr: np.ndarray) -> np.ndarray:
        return np.bitwise_count(arr)
else:  # numpy < 2.0
    _POP8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)

    def _popcount(arr: np.ndarray) -> np.ndarray:
        b = np.ascontiguousarray(arr).view(np.uint8)
        return _POP8[b].reshape(arr.shape + (8,)).sum(axis=-1, dtype=np.uint8)


def _distance_histograms(
    code: BlockCode, chunk_size: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Integer histograms over all 2^n outputs, chunked.

    Returns (tie, lose, mins): tie[i][k] counts outputs at distance k from
    word i whose best rival sits at the same distance, lose[i][k] those with
    a strictly closer rival, mins[k] counts outputs whose overall nearest
    codeword sits at distance k. Counts are exact ints; chunking cannot
    change them.
    """
    n, m = code.n, code.m
    words = np.array(code.words, dtype=np.uint64)
    tie = np.zeros((m, n + 1), dtype=np.int64)
    lose = np.zeros((m, n + 1), dtype=np.int64)
    mins = np.zeros(n + 1, dtype=np.int64)
    total = 1 << n
    for start in range(0, total, chunk_size):
        ys = np.arange(start, min(start + chunk_size, total), dtype=np.uint64)
        dist = np.empty((m, ys.size), dtype=np.uint8)
        for i in range(m):
            dist[i] = _popcount(ys ^ words[i])
        best = dist.min(axis=0)
        best_count = (dist == best[None, :]).sum(axis=0)
        second = np.partition(dist, 1, axis=0)[1]
        mins += np.bincount(best, minlength=n + 1)
        for i in range(m):
            di = dist[i]
            # rival best: overall second-smallest when word i alone holds the
            # minimum, the overall minimum otherwise
            rival = np.where((di == best) & (best_count == 1), second, best)
            tie[i] += np.bincount(di[di == rival], minlength=n + 1)
            lose[i] += np.bincount(di[di > rival], minlength=n + 1)
    return tie, lose, mins


@dataclass(frozen=True)
class TieReport:
    """Exact tie/no-tie decomposition of the minimum error probability.

    per_codeword[i] = (tie probability, no-tie loss probability) conditional
    on word i being sent. a_n is the minimum error probability, b_n the
    average no-tie loss, delta_n the average tie mass.
    """

    n: int
    m: int
    p: Fraction
    a_n: Fraction
    b_n: Fraction
    delta_n: Fraction
    per_codeword: tuple[tuple[Fraction, Fraction], ...]


def tie_report(
    code: BlockCode,
    params: BscParams,
    *,
    ceiling: int | None = None,
    chunk_size: int = 1 << 20,
) -> TieReport:
    """Classify every output against every codeword and accumulate exactly."""
    limit = resolve_ceiling(ceiling, DEFAULT_TIE_CEILING)
    if code.n > limit:
        raise BlocklengthTooLarge(code.n, limit)
    n, m = code.n, code.m
    tie_h, lose_h, mins_h = _distance_histograms(code, chunk_size)
    w = weight_probabilities(n, params)
    per: list[tuple[Fraction, Fraction]] = []
    for i in range(m):
        t = sum((c * w[k] for k, c in enumerate(tie_h[i].tolist()) if c), ZERO)
        l = sum((c * w[k] for k, c in enumerate(lose_h[i].tolist()) if c), ZERO)
        per.append((t, l))
    inv_m = Fraction(1, m)
    a_n = ONE - inv_m * sum((c * w[k] for k, c in enumerate(mins_h.tolist()) if c), ZERO)
    b_n = inv_m * sum(l for _, l in per)
    delta_n = inv_m * sum(t for t, _ in per)
    if not b_n <= a_n <= b_n + delta_n:
        raise PvlabError("internal: tie decomposition lost mass")
    return TieReport(n=n, m=m, p=params.p, a_n=a_n, b_n=b_n, delta_n=delta_n,
                     per_codeword=tuple(per))


# --- pairwise counting ------------------------------------------------------
#
# Fix two codewords at distance d. Relative to the transmitted one, an output
# is described by a = flips on the d differing positions and c = flips
# elsewhere; then d_i = a + c and d_j = (d - a) + c, so the comparison between
# d_i and d_j depends on a alone and the c positions always cancel.

def pair_tie_probability(d: int, params: BscParams) -> Fraction:
    """Probability that the output ties the pair: d_i = d_j, so 2a = d.

    Zero for odd d. For d = 2l the c-sum telescopes to 1 and the value
    C(2l, l) p^l (1-p)^l carries no dependence on the blocklength.
    """
    if d < 1:
        raise RangeError(f"pair distance must be >= 1, got {d}")
    if d % 2:
        return ZERO
    half = d // 2
    return comb(d, half) * params.p ** half * params.q ** half


def count_equidistant(n: int, l: int, m: int) -> int:
    """Outputs equidistant from a pair at distance 2l, at distance l + m from both.

    Choose l of the 2l differing positions to flip and m of the remaining
    n - 2l; requires 0 <= m <= n - 2l.
    """
    if l < 1 or 2 * l > n:
        raise RangeError(f"need 1 <= l and 2l <= n, got n={n}, l={l}")
    if not 0 <= m <= n - 2 * l:
        raise RangeError(f"m must lie in [0, {n - 2 * l}], got {m}")
    return comb(2 * l, l) * comb(n - 2 * l, m)


def count_dominated(n: int, d: int, m: int) -> int:
    """Outputs at distance ceil(d/2) + 1 + m from the sent word that lie
    strictly closer to a fixed rival at distance d.

    Strictly closer means a > d/2 flips among the differing positions; the
    remaining flips, d_i - a of them, land on the other n - d positions.
    Summing over every admissible a keeps the count exact for both parities.
    """
    if n < 1 or not 1 <= d <= n:
        raise RangeError(f"need 1 <= d <= n, got n={n}, d={d}")
    if not 0 <= m <= n - d:
        raise RangeError(f"m must lie in [0, {n - d}], got {m}")
    l = (d + 1) // 2
    d_i = l + 1 + m
    total = 0
    for a in range(d // 2 + 1, d + 1):
        c = d_i - a
        if 0 <= c <= n - d:
            total += comb(d, a) * comb(n - d, c)
    return total


def omega_exact_probability(n: int, d: int, params: BscParams) -> Fraction:
    """Exact probability that the output lies strictly closer to a rival at
    distance d than to the sent word.

    Equals sum over a > d/2 of C(d, a) p^a (1-p)^(d-a): conditioning on the
    flips outside the differing positions telescopes away, so the value does
    not depend on n. n is accepted to bound d.
    """
    if n < 1 or not 1 <= d <= n:
        raise RangeError(f"need 1 <= d <= n, got n={n}, d={d}")
    total = ZERO
    for a in range(d // 2 + 1, d + 1):
        total += comb(d, a) * params.p ** a * params.q ** (d - a)
    return total


def omega_lower_bound(d: int, params: BscParams) -> Fraction:
    """Single-stratum lower bound on the dominated-output probability.

    Keeps only the outputs that overshoot the halfway point by exactly one
    flip more than the minimum, l + 1 of the differing positions with
    l = ceil(d/2), and none elsewhere. At d = 1 that stratum is empty and
    the bound degenerates to 0.
    """
    if d < 1:
        raise RangeError(f"pair distance must be >= 1, got {d}")
    l = (d + 1) // 2
    if d % 2 == 0:
        return comb(2 * l, l + 1) * params.p ** (l + 1) * params.q ** (l - 1)
    k = comb(2 * l - 1, l + 1)
    if k == 0:
        return ZERO
    return k * params.p ** (l + 1) * params.q ** (l - 2)


@dataclass(frozen=True)
class PairwiseBound:
    """Tie probability and dominated-output probabilities for one pair distance."""

    n: int
    d: int
    p: Fraction
    b_prob: Fraction
    omega_exact: Fraction
    omega_lower: Fraction

    def ordering_holds(self) -> bool:
        return self.omega_lower <= self.omega_exact

    def ratio_holds(self) -> bool:
        """Dominated mass is at least p/(2(1-p)) times the tie mass."""
        p = self.p
        return self.omega_exact >= p / (2 * (1 - p)) * self.b_prob


def pairwise_bound(n: int, d: int, params: BscParams) -> PairwiseBound:
    return PairwiseBound(
        n=n,
        d=d,
        p=params.p,
        b_prob=pair_tie_probability(d, params),
        omega_exact=omega_exact_probability(n, d, params),
        omega_lower=omega_lower_bound(d, params),
    )


@dataclass(frozen=True)
class Theorem1Gap:
    """Comparison of the no-tie loss against its tie-mass lower bound."""

    lhs: Fraction
    rhs: Fraction
    holds: bool
    slack: Fraction


def theorem1_gap_check(
    code: BlockCode,
    params: BscParams,
    *,
    ceiling: int | None = None,
    report: TieReport | None = None,
) -> Theorem1Gap:
    """Check b_n >= p / (2(1-p)) * delta_n / (M - 1) in exact arithmetic.

    The right side routes each tie through the dominated region of one of
    the M - 1 rivals at the cost of one extra flip, probability ratio
    p/(1-p), halved because only the strictly-closer half of each tie class
    converts.
    """
    if report is None:
        report = tie_report(code, params, ceiling=ceiling)
    rhs = params.p / (2 * params.q) * report.delta_n / (report.m - 1)
    slack = report.b_n - rhs
    return Theorem1Gap(lhs=report.b_n, rhs=rhs, holds=slack >= 0, slack=slack)
