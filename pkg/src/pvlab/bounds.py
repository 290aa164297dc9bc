"""Exact lower bounds on the minimum error probability of guessing X from Y.

All bounds are computed on a JointDistribution in rational arithmetic. The
central objects:

* the minimum (maximum-a-posteriori) error probability itself,
* a tilted threshold bound: for an exponent theta and a level alpha,
  (1 - alpha) times the joint mass of atoms whose tilted conditional falls
  at or below alpha,
* its limiting form as the exponent grows, which is the mass of atoms whose
  hypothesis is strictly beaten inside its own column,
* a classic threshold bound obtained by sweeping a level gamma against the
  conditional of X given Y,
* the same threshold construction evaluated against the best auxiliary
  observation law, at its optimizing pair, where it is exactly tight.

A float evaluator for real-valued exponents is provided for plotting only;
every reported number elsewhere is a Fraction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import AlphaTooLarge, DegeneratePe1, NoStabilization, ValidationError
from .joint import JointDistribution, ONE, ZERO


def _check_alpha(alpha: Fraction) -> Fraction:
    a = Fraction(alpha)
    if not 0 <= a <= 1:
        raise ValidationError(f"alpha must lie in [0, 1], got {a}")
    return a


def _check_theta(theta: int) -> int:
    if not isinstance(theta, int) or theta < 1:
        raise ValidationError(f"tilt exponent must be an integer >= 1, got {theta!r}")
    return theta


def map_error_probability(joint: JointDistribution) -> Fraction:
    """Minimum achievable probability of guessing X wrong after seeing Y.

    Equals 1 minus the summed column maxima of the joint mass. Any rule that
    picks a maximizer of the conditional attains it, and the value does not
    depend on how ties between maximizers are broken.
    """
    correct = ZERO
    for _, entries in joint.columns():
        correct += max(v for _, v in entries)
    return ONE - correct


def map_equality_set(joint: JointDistribution) -> frozenset[tuple[str, str]]:
    """Label pairs (x, y) where x attains the column maximum of P(. , y).

    These are exactly the atoms an optimal guesser can answer correctly;
    columns with tied maxima contribute one pair per tied hypothesis.
    """
    out = set()
    for yi, entries in joint.columns():
        mx = max(v for _, v in entries)
        for xi, v in entries:
            if v == mx:
                out.add((joint.x_alphabet[xi], joint.y_alphabet[yi]))
    return frozenset(out)


def argmax_uniqueness(joint: JointDistribution) -> bool:
    """True when every positive-marginal column has a single maximizer."""
    for _, entries in joint.columns():
        mx = max(v for _, v in entries)
        if sum(1 for _, v in entries if v == mx) > 1:
            return False
    return True


def strictly_dominated_atoms(joint: JointDistribution) -> frozenset[tuple[int, int]]:
    """Index pairs (x, y) with positive mass strictly below their column maximum."""
    out = set()
    for yi, entries in joint.columns():
        mx = max(v for _, v in entries)
        for xi, v in entries:
            if v < mx:
                out.add((xi, yi))
    return frozenset(out)


def asymptotic_pv_bound(joint: JointDistribution) -> Fraction:
    """Joint mass of the strictly dominated atoms.

    This is the limit of the tilted threshold bound as the exponent grows:
    tilting pushes every non-maximal conditional mass to zero, so any
    positive level eventually captures precisely the dominated atoms while
    the level itself can be taken arbitrarily small. The value never exceeds
    the minimum error probability, with equality exactly when every column
    has a unique maximizer (ties leave error mass that no strict comparison
    can see).
    """
    total = ZERO
    for _, entries in joint.columns():
        mx = max(v for _, v in entries)
        total += sum(v for _, v in entries if v < mx)
    return total


def generalized_pv_bound(joint: JointDistribution, theta: int, alpha: Fraction) -> Fraction:
    """Tilted threshold lower bound on the minimum error probability.

    Value: (1 - alpha) times the joint mass of atoms (x, y) whose tilted
    conditional P(x|y)^theta / sum_u P(u|y)^theta is <= alpha. The
    comparison is carried out on joint masses, m^theta <= alpha * sum
    m_u^theta, so no division ever happens; the column normalizer cancels.

    Monotone facts: the value is a lower bound on the minimum error
    probability for every theta >= 1 and alpha in [0, 1], and theta = 1
    recovers the untilted threshold bound.
    """
    theta = _check_theta(theta)
    alpha = _check_alpha(alpha)
    if alpha == 1:
        return ZERO
    low = ZERO
    for _, entries in joint.columns():
        powers = [v ** theta for _, v in entries]
        bar = alpha * sum(powers)
        for (xi, v), pw in zip(entries, powers):
            if pw <= bar:
                low += v
    return (ONE - alpha) * low


def tilted_low_atoms(
    joint: JointDistribution, theta: int, alpha: Fraction
) -> frozenset[tuple[int, int]]:
    """Atoms whose tilted conditional is <= alpha, as index pairs."""
    theta = _check_theta(theta)
    alpha = _check_alpha(alpha)
    out = set()
    for yi, entries in joint.columns():
        powers = [v ** theta for _, v in entries]
        bar = alpha * sum(powers)
        for (xi, _), pw in zip(entries, powers):
            if pw <= bar:
                out.add((xi, yi))
    return frozenset(out)


class StabilizationResult(NamedTuple):
    theta0: int
    value: Fraction


def theta_stabilization(
    joint: JointDistribution,
    alpha: Fraction,
    *,
    probe_window: int = 8,
    theta_cap: int = 10_000,
) -> StabilizationResult:
    """First exponent at which the tilted low set equals the dominance set.

    Requires 0 < alpha < 1 / support size. Under that cap each column
    maximizer keeps tilted mass at least one over the column support size,
    hence above alpha, for every exponent; so the low set always sits inside
    the strictly dominated set and, once the dominated atoms' tilted mass
    has decayed below alpha, coincides with it. The set need not move toward
    the target monotonically, so a candidate exponent is accepted only after
    the set holds still through probe_window further steps. Returns that
    first exponent together with the (stable) bound mass, which equals the
    asymptotic bound value before the (1 - alpha) factor.

    alpha = 0 is rejected: positive atoms keep positive tilted mass at every
    finite exponent, so a zero level can never capture the dominated set.
    """
    alpha = _check_alpha(alpha)
    if alpha == 0:
        raise ValidationError(
            "alpha must be positive: a zero threshold never captures the dominated atoms"
        )
    c = joint.support_size
    if alpha * c >= 1:
        raise AlphaTooLarge(alpha, c)
    target = strictly_dominated_atoms(joint)
    a_num, a_den = alpha.numerator, alpha.denominator

    # Per column, clear denominators once: masses c_i / L with common L.
    # Tilted comparison then reads a_den * c_i^theta <= a_num * sum_j c_j^theta,
    # pure integer work with no gcd churn as theta advances.
    cols: list[tuple[list[tuple[int, int]], list[int], list[int]]] = []
    for yi, entries in joint.columns():
        lcm = 1
        for _, v in entries:
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
        keys = [(xi, yi) for xi, _ in entries]
        ints = [int(v * lcm) for _, v in entries]
        cols.append((keys, ints, [1] * len(ints)))

    run_start: int | None = None
    for theta in range(1, theta_cap + 1):
        current: set[tuple[int, int]] = set()
        for keys, ints, pows in cols:
            for i, base in enumerate(ints):
                pows[i] *= base
            total = sum(pows)
            bar = a_num * total
            for key, pw in zip(keys, pows):
                if a_den * pw <= bar:
                    current.add(key)
        if current == target:
            if run_start is None:
                run_start = theta
            if theta - run_start >= probe_window:
                value = sum(joint.mass[key] for key in target) if target else ZERO
                return StabilizationResult(run_start, value)
        else:
            run_start = None
    raise NoStabilization(theta_cap)


class VerduHanBound(NamedTuple):
    value: Fraction
    gamma_star: Fraction


def verdu_han_bound(joint: JointDistribution) -> VerduHanBound:
    """Best threshold bound sup_gamma { Pr[P(X|Y) <= gamma] - gamma }.

    The cumulative term is a nondecreasing step function jumping only at
    attained conditional values, while the -gamma term decays strictly
    between jumps; the supremum is therefore attained at gamma = 0 or at an
    attained value, and scanning that finite candidate set is exhaustive.
    Ties on the objective resolve to the smallest gamma.
    """
    pairs: list[tuple[Fraction, Fraction]] = []
    for yi, entries in joint.columns():
        p_y = joint.y_marginal[yi]
        for _, v in entries:
            pairs.append((v / p_y, v))
    candidates = sorted({val for val, _ in pairs} | {ZERO})
    best_value: Fraction | None = None
    best_gamma = ZERO
    for g in candidates:
        obj = sum(m for val, m in pairs if val <= g) - g
        if best_value is None or obj > best_value:
            best_value, best_gamma = obj, g
    assert best_value is not None
    return VerduHanBound(best_value, best_gamma)


class GeneralizedVhOptimum(NamedTuple):
    value: Fraction
    gamma_star: Fraction
    q_star: dict[int, Fraction]


def generalized_vh_at_optimum(joint: JointDistribution) -> GeneralizedVhOptimum:
    """Threshold bound against the optimizing auxiliary observation law.

    Take gamma* as the summed column maxima (one minus the minimum error
    probability) and Q*(y) proportional to the column maximum. Every support
    atom then satisfies P(x, y) / Q*(y) <= gamma*, because the left side is
    at most gamma* by construction, so the exceedance probability is 1 and
    the bound evaluates to 1 - gamma*: the minimum error probability itself,
    exactly. The function evaluates the event honestly rather than returning
    the identity, so tests can cross-check the tightness claim.
    """
    gamma = ZERO
    col_max: dict[int, Fraction] = {}
    for yi, entries in joint.columns():
        mx = max(v for _, v in entries)
        col_max[yi] = mx
        gamma += mx
    if gamma == 0:
        raise DegeneratePe1()
    q_star = {yi: mx / gamma for yi, mx in col_max.items()}
    exceed = ZERO
    for yi, entries in joint.columns():
        qy = q_star[yi]
        for _, v in entries:
            if v / qy <= gamma:
                exceed += v
    return GeneralizedVhOptimum(exceed - gamma, gamma, q_star)


@dataclass(frozen=True)
class BoundReport:
    """All bounds for one joint, side by side."""

    p_e: Fraction
    asymptotic_pv: Fraction
    vh_value: Fraction
    vh_gamma_star: Fraction
    gvh_value: Fraction
    gvh_gamma_star: Fraction
    gvh_q_star: dict[int, Fraction]


def bound_report(joint: JointDistribution) -> BoundReport:
    vh = verdu_han_bound(joint)
    gvh = generalized_vh_at_optimum(joint)
    return BoundReport(
        p_e=map_error_probability(joint),
        asymptotic_pv=asymptotic_pv_bound(joint),
        vh_value=vh.value,
        vh_gamma_star=vh.gamma_star,
        gvh_value=gvh.value,
        gvh_gamma_star=gvh.gamma_star,
        gvh_q_star=gvh.q_star,
    )


def generalized_pv_bound_real(
    joint: JointDistribution, theta: float, alpha: Fraction | float
) -> float:
    """Float evaluation of the tilted threshold bound at a real exponent.

    Log-domain, for smooth sweep curves only; agrees with the exact value at
    integer exponents to about 1e-12 away from threshold boundaries. Never
    feed its output back into exact reports.
    """
    if not theta >= 1:
        raise ValidationError(f"tilt exponent must be >= 1, got {theta!r}")
    af = float(alpha)
    if not 0.0 <= af <= 1.0:
        raise ValidationError(f"alpha must lie in [0, 1], got {alpha!r}")
    if af == 0.0 or af == 1.0:
        return 0.0
    log_alpha = math.log(af)
    low = 0.0
    for _, entries in joint.columns():
        logs = [math.log(v) for _, v in entries]
        mx = max(logs)
        lse = theta * mx + math.log(sum(math.exp(theta * (l - mx)) for l in logs))
        for (_, v), l in zip(entries, logs):
            if theta * l - lse <= log_alpha:
                low += float(v)
    return (1.0 - af) * low
